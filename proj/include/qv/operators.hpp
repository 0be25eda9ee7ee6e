#ifndef QV_OPERATORS_HPP
#define QV_OPERATORS_HPP

#include <vector>

#include "qv/qpoly.hpp"

namespace qv {

/// Difference quotient (f(x) - f(xq)) / (x - xq); coefficient action
/// c_k x^k -> c_k [k] x^{k-1}, constants map to zero.
QPoly q_derivative(const QPoly& f);

/// Definite integral from 0 to x; coefficient action c_k x^k -> c_k x^{k+1}/[k+1].
QPoly jackson_integral(const QPoly& f);

/// m-fold x^k -> x^k / [k]^m. Input must vanish at 0 when m >= 1.
QPoly op_P(const QPoly& f, long m);

/// m-fold integral of (f(1) - f(t))/(1 - t), exact polynomial division.
QPoly op_T(const QPoly& f, long m);

/// e-fold substitution x -> xq: c_k x^k -> c_k q^{ek} x^k.
QPoly op_eta(const QPoly& f, long e);

struct ChainStep {
    enum Kind { Eta, P, T } kind;
    long power;
};

/// Written left-to-right as composed operators; applied right-to-left
/// (the last step in the sequence acts first).
using OperatorChain = std::vector<ChainStep>;

QPoly apply_chain(const OperatorChain& chain, QPoly f);

/// The polynomial 1 - (x;q)_n expanded in x. Zero polynomial for n = 0.
QPoly poly_one_minus_poch(long n, const ExactScalar& q);

} // namespace qv

#endif
