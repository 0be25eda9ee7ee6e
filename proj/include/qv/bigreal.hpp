#ifndef QV_BIGREAL_HPP
#define QV_BIGREAL_HPP

#include <mpfr.h>

#include <algorithm>
#include <string>
#include <utility>

#include "qv/errors.hpp"
#include "qv/rational.hpp"

namespace qv {

/// Arbitrary-precision binary float (MPFR, round-to-nearest). Precision is a
/// per-value property fixed at construction; binary operations produce a
/// result at the larger operand precision. There is no ambient global
/// precision state.
class BigReal {
    struct prec_tag {};
    BigReal(prec_tag, long bits) {
        if (bits < MPFR_PREC_MIN) bits = MPFR_PREC_MIN;
        mpfr_init2(v_, bits);
        mpfr_set_zero(v_, 1);
    }

public:
    static constexpr long kDefaultPrec = 192;

    BigReal() : BigReal(prec_tag{}, kDefaultPrec) {}
    /// Value constructor (default precision); precision-carrying zeros come
    /// from zero()/from_long()/from_rat().
    explicit BigReal(long value) : BigReal(prec_tag{}, kDefaultPrec) {
        mpfr_set_si(v_, value, MPFR_RNDN);
    }

    BigReal(const BigReal& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigReal(BigReal&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    BigReal& operator=(const BigReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigReal& operator=(BigReal&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigReal() { mpfr_clear(v_); }

    static BigReal zero(long prec) { return BigReal(prec_tag{}, prec); }
    static BigReal from_long(long n, long prec = kDefaultPrec) {
        BigReal r(prec_tag{}, prec);
        mpfr_set_si(r.v_, n, MPFR_RNDN);
        return r;
    }
    static BigReal from_rat(const ExactScalar& q, long prec = kDefaultPrec) {
        BigReal r(prec_tag{}, prec);
        mpfr_set_q(r.v_, q.raw().get_mpq_t(), MPFR_RNDN);
        return r;
    }
    static BigReal parse(const std::string& text, long prec = kDefaultPrec);

    long prec() const { return mpfr_get_prec(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_zero_p(v_) ? 0 : mpfr_sgn(v_); }
    bool is_integer_value() const { return mpfr_integer_p(v_) != 0; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    friend BigReal operator+(const BigReal& a, const BigReal& b) {
        BigReal r(prec_tag{}, std::max(a.prec(), b.prec()));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator-(const BigReal& a, const BigReal& b) {
        BigReal r(prec_tag{}, std::max(a.prec(), b.prec()));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator*(const BigReal& a, const BigReal& b) {
        BigReal r(prec_tag{}, std::max(a.prec(), b.prec()));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator/(const BigReal& a, const BigReal& b) {
        if (b.is_zero()) throw PoleError("BigReal: division by zero");
        BigReal r(prec_tag{}, std::max(a.prec(), b.prec()));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    BigReal operator-() const {
        BigReal r(prec_tag{}, prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigReal& operator+=(const BigReal& o) { *this = *this + o; return *this; }
    BigReal& operator-=(const BigReal& o) { *this = *this - o; return *this; }
    BigReal& operator*=(const BigReal& o) { *this = *this * o; return *this; }
    BigReal& operator/=(const BigReal& o) { *this = *this / o; return *this; }

    friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) != 0; }

    BigReal abs() const {
        BigReal r(prec_tag{}, prec());
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }

    BigReal pow_i(long e) const {
        if (e < 0 && is_zero()) throw PoleError("BigReal: negative power of zero");
        BigReal r(prec_tag{}, prec());
        mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
        return r;
    }

    /// base^expo; integer-valued exponents route to pow_i, otherwise the base
    /// must be positive (exp/log at 32 guard bits).
    static BigReal pow_real(const BigReal& base, const BigReal& expo);

    static BigReal exp(const BigReal& x) {
        BigReal r(prec_tag{}, x.prec());
        mpfr_exp(r.v_, x.v_, MPFR_RNDN);
        return r;
    }
    static BigReal log(const BigReal& x) {
        if (x.sign() <= 0) throw DomainError("BigReal: log of non-positive value");
        BigReal r(prec_tag{}, x.prec());
        mpfr_log(r.v_, x.v_, MPFR_RNDN);
        return r;
    }

    /// 2^e (e may be negative) — used by stopping rules and tolerances.
    static BigReal two_pow(long e, long prec = kDefaultPrec) {
        BigReal r(prec_tag{}, prec);
        mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
        return r;
    }

    /// 10^e as a tolerance value.
    static BigReal ten_pow(long e, long prec = kDefaultPrec) {
        BigReal r(prec_tag{}, prec);
        mpfr_ui_pow_ui(r.v_, 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
        if (e < 0) mpfr_si_div(r.v_, 1, r.v_, MPFR_RNDN);
        return r;
    }

    std::string to_string(size_t digits = 40) const;

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

private:
    mpfr_t v_;
};

} // namespace qv

#endif
