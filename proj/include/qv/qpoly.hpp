#ifndef QV_QPOLY_HPP
#define QV_QPOLY_HPP

#include <optional>
#include <vector>

#include "qv/qcore.hpp"
#include "qv/rational.hpp"

namespace qv {

/// Dense polynomial in x with exact rational coefficients, at a fixed
/// rational base q. Canonical form: trailing zero coefficients trimmed;
/// the zero polynomial has an empty coefficient vector and no degree.
class QPoly {
public:
    explicit QPoly(ExactScalar q) : q_(std::move(q)) {}
    QPoly(ExactScalar q, std::vector<ExactScalar> coeffs)
        : q_(std::move(q)), c_(std::move(coeffs)) {
        trim();
    }

    static QPoly zero(const ExactScalar& q) { return QPoly(q); }
    static QPoly constant(const ExactScalar& q, const ExactScalar& c) {
        return QPoly(q, {c});
    }
    static QPoly monomial(const ExactScalar& q, long deg, const ExactScalar& c = ExactScalar(1)) {
        std::vector<ExactScalar> v(static_cast<size_t>(deg) + 1, ExactScalar(0));
        v.back() = c;
        return QPoly(q, std::move(v));
    }

    const ExactScalar& q() const { return q_; }
    bool is_zero() const { return c_.empty(); }
    std::optional<long> degree() const {
        if (c_.empty()) return std::nullopt;
        return static_cast<long>(c_.size()) - 1;
    }
    ExactScalar coeff(long k) const {
        if (k < 0 || static_cast<size_t>(k) >= c_.size()) return ExactScalar(0);
        return c_[static_cast<size_t>(k)];
    }
    const std::vector<ExactScalar>& coeffs() const { return c_; }

    ExactScalar constant_term() const { return coeff(0); }

    ExactScalar eval(const ExactScalar& x) const {
        ExactScalar r(0);
        for (size_t k = c_.size(); k-- > 0;) r = r * x + c_[k];
        return r;
    }

    QPoly operator-() const {
        std::vector<ExactScalar> v;
        v.reserve(c_.size());
        for (const auto& c : c_) v.push_back(-c);
        return QPoly(q_, std::move(v));
    }

    friend QPoly operator+(const QPoly& a, const QPoly& b) {
        std::vector<ExactScalar> v(std::max(a.c_.size(), b.c_.size()), ExactScalar(0));
        for (size_t k = 0; k < v.size(); ++k)
            v[k] = a.coeff(static_cast<long>(k)) + b.coeff(static_cast<long>(k));
        return QPoly(a.q_, std::move(v));
    }
    friend QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }
    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero()) return QPoly(a.q_);
        std::vector<ExactScalar> v(a.c_.size() + b.c_.size() - 1, ExactScalar(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                v[i + j] += a.c_[i] * b.c_[j];
        return QPoly(a.q_, std::move(v));
    }
    friend QPoly operator*(const ExactScalar& s, const QPoly& p) {
        std::vector<ExactScalar> v;
        v.reserve(p.c_.size());
        for (const auto& c : p.c_) v.push_back(s * c);
        return QPoly(p.q_, std::move(v));
    }

    friend bool operator==(const QPoly& a, const QPoly& b) {
        return a.q_ == b.q_ && a.c_ == b.c_;
    }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    ExactScalar q_;
    std::vector<ExactScalar> c_;
};

} // namespace qv

#endif
