#ifndef QV_RATIONAL_HPP
#define QV_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <iosfwd>

#include "qv/errors.hpp"

namespace qv {

/// Arbitrary-precision rational scalar. Always canonical: reduced, positive
/// denominator. Every arithmetic operation is exact; division by zero throws
/// PoleError instead of propagating a GMP abort.
class ExactScalar {
public:
    ExactScalar() : v_(0) {}
    ExactScalar(long n) : v_(static_cast<signed long>(n)) {}
    ExactScalar(long num, long den) {
        if (den == 0) throw PoleError("ExactScalar: zero denominator");
        v_ = mpq_class(static_cast<signed long>(num), den > 0 ? static_cast<unsigned long>(den)
                                                              : static_cast<unsigned long>(-den));
        if (den < 0) v_ = -v_;
        v_.canonicalize();
    }
    explicit ExactScalar(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Accepts "p", "p/q" and plain decimal text ("0.25", "-3.5"); all parse
    /// to the exact rational value.
    static ExactScalar parse(const std::string& text);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    ExactScalar operator-() const { return ExactScalar(mpq_class(-v_)); }

    friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
        return ExactScalar(mpq_class(a.v_ + b.v_));
    }
    friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) {
        return ExactScalar(mpq_class(a.v_ - b.v_));
    }
    friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
        return ExactScalar(mpq_class(a.v_ * b.v_));
    }
    friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) {
        if (b.is_zero()) throw PoleError("ExactScalar: division by zero");
        return ExactScalar(mpq_class(a.v_ / b.v_));
    }

    ExactScalar& operator+=(const ExactScalar& o) { v_ += o.v_; return *this; }
    ExactScalar& operator-=(const ExactScalar& o) { v_ -= o.v_; return *this; }
    ExactScalar& operator*=(const ExactScalar& o) { v_ *= o.v_; return *this; }
    ExactScalar& operator/=(const ExactScalar& o) { *this = *this / o; return *this; }

    friend bool operator==(const ExactScalar& a, const ExactScalar& b) { return a.v_ == b.v_; }
    friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return a.v_ != b.v_; }
    friend bool operator<(const ExactScalar& a, const ExactScalar& b) { return a.v_ < b.v_; }
    friend bool operator<=(const ExactScalar& a, const ExactScalar& b) { return a.v_ <= b.v_; }
    friend bool operator>(const ExactScalar& a, const ExactScalar& b) { return a.v_ > b.v_; }
    friend bool operator>=(const ExactScalar& a, const ExactScalar& b) { return a.v_ >= b.v_; }

    ExactScalar abs() const { return ExactScalar(mpq_class(::abs(v_))); }

    /// Integer power; negative exponents require a nonzero base.
    ExactScalar pow_i(long e) const;

    ExactScalar inv() const {
        if (is_zero()) throw PoleError("ExactScalar: inverse of zero");
        return ExactScalar(mpq_class(1 / v_));
    }

    std::string to_string() const { return v_.get_str(); }
    std::string num_string() const { return v_.get_num().get_str(); }
    std::string den_string() const { return v_.get_den().get_str(); }
    double to_double() const { return v_.get_d(); }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const ExactScalar& v);

} // namespace qv

#endif
