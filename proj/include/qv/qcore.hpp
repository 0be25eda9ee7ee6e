#ifndef QV_QCORE_HPP
#define QV_QCORE_HPP

#include <span>
#include <vector>

#include "qv/bigreal.hpp"
#include "qv/errors.hpp"
#include "qv/rational.hpp"

namespace qv {

// ---- field bridge -----------------------------------------------------
// The exact kernels are written once over a scalar field F and instantiated
// for ExactScalar (verification) and BigReal (backend-agreement reruns).

template <class F>
F to_field(const ExactScalar& v, long prec);

template <>
inline ExactScalar to_field<ExactScalar>(const ExactScalar& v, long) { return v; }

template <>
inline BigReal to_field<BigReal>(const ExactScalar& v, long prec) {
    return BigReal::from_rat(v, prec);
}

template <class F>
F field_long(long n, long prec);

template <>
inline ExactScalar field_long<ExactScalar>(long n, long) { return ExactScalar(n); }

template <>
inline BigReal field_long<BigReal>(long n, long prec) { return BigReal::from_long(n, prec); }

inline ExactScalar pow_i(const ExactScalar& b, long e) { return b.pow_i(e); }
inline BigReal pow_i(const BigReal& b, long e) { return b.pow_i(e); }

// ---- integer helpers --------------------------------------------------

/// Ordinary binomial coefficient as an exact rational (no overflow concerns).
ExactScalar binomial_exact(long n, long k);

/// Exponent helper: C(i,2) = i(i-1)/2 with C(0,2) = C(1,2) = 0.
inline long tri2(long i) { return i * (i - 1) / 2; }

// ---- q-primitives ------------------------------------------------------

/// q-number [n] = (1 - q^n)/(1 - q); [0] = 0, [1] = 1.
template <class F>
F q_number(long n, const F& q) {
    if (n < 0) throw SchemaError("q_number: n must be >= 0");
    F unit = pow_i(q, 0);
    if (q == unit) throw PoleError("q_number: q = 1");
    return (unit - pow_i(q, n)) / (unit - q);
}

/// Finite q-Pochhammer (a;q)_n = prod_{i=1..n} (1 - a q^{i-1}); (a;q)_0 = 1.
template <class F>
F q_pochhammer(const F& a, const F& q, long n) {
    if (n < 0) throw SchemaError("q_pochhammer: n must be >= 0");
    F unit = pow_i(q, 0);
    F p = unit;
    F aq = a;
    for (long i = 0; i < n; ++i) {
        p = p * (unit - aq);
        aq = aq * q;
    }
    return p;
}

/// Gaussian binomial [n r] = [n][n-1]...[n-r+1] / ([r][r-1]...[1]).
/// 1 when r = 0; 0 when r > n. PoleError if a required q-number vanishes.
template <class F>
F gauss_binomial(long n, long r, const F& q) {
    if (n < 0 || r < 0) throw SchemaError("gauss_binomial: negative argument");
    F unit = pow_i(q, 0);
    if (r == 0) return unit;
    if (r > n) return unit - unit;
    F num = unit, den = unit;
    for (long j = 0; j < r; ++j) {
        num = num * q_number(n - j, q);
        F d = q_number(j + 1, q);
        if (d == unit - unit) throw PoleError("gauss_binomial: vanishing q-number");
        den = den * d;
    }
    return num / den;
}

/// Complete homogeneous symmetric function h_k(args) by the column
/// recurrence h_k(a_1..a_j) = h_k(a_1..a_{j-1}) + a_j h_{k-1}(a_1..a_j).
/// h_0 = 1. Negative k is a schema error (callers own the m = 0 collapse).
template <class F>
F complete_homogeneous(long k, std::span<const F> args) {
    if (k < 0) throw SchemaError("complete_homogeneous: negative order");
    long n = static_cast<long>(args.size());
    if (k == 0) {
        if (n > 0) return pow_i(args[0], 0);
        throw SchemaError("complete_homogeneous: empty argument list");
    }
    if (n == 0) throw SchemaError("complete_homogeneous: empty argument list");
    F unit = pow_i(args[0], 0);
    F zero = unit - unit;
    std::vector<F> prev(static_cast<size_t>(n) + 1, unit); // h_0 over prefixes
    for (long kk = 1; kk <= k; ++kk) {
        std::vector<F> cur(static_cast<size_t>(n) + 1, zero);
        for (long j = 1; j <= n; ++j)
            cur[j] = cur[j - 1] + args[j - 1] * prev[j];
        prev = std::move(cur);
    }
    return prev[static_cast<size_t>(n)];
}

template <class F>
F complete_homogeneous(long k, const std::vector<F>& args) {
    return complete_homogeneous<F>(k, std::span<const F>(args));
}

/// h_k over the kernel evaluated at every consecutive integer in [lo, hi].
template <class F, class Kern>
F h_range(long k, long lo, long hi, Kern&& kern) {
    if (lo > hi) throw SchemaError("h_range: lo > hi");
    std::vector<F> args;
    args.reserve(static_cast<size_t>(hi - lo + 1));
    for (long s = lo; s <= hi; ++s) args.push_back(kern(s));
    return complete_homogeneous<F>(k, args);
}

} // namespace qv

#endif
