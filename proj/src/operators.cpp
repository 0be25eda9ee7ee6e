#include "qv/operators.hpp"

#include "qv/errors.hpp"

namespace qv {

QPoly q_derivative(const QPoly& f) {
    if (f.is_zero() || *f.degree() == 0) return QPoly::zero(f.q());
    long d = *f.degree();
    std::vector<ExactScalar> v(static_cast<size_t>(d), ExactScalar(0));
    for (long k = 1; k <= d; ++k)
        v[static_cast<size_t>(k - 1)] = f.coeff(k) * q_number(k, f.q());
    return QPoly(f.q(), std::move(v));
}

QPoly jackson_integral(const QPoly& f) {
    if (f.is_zero()) return QPoly::zero(f.q());
    long d = *f.degree();
    std::vector<ExactScalar> v(static_cast<size_t>(d) + 2, ExactScalar(0));
    for (long k = 0; k <= d; ++k) {
        ExactScalar qk = q_number(k + 1, f.q());
        if (qk.is_zero()) throw PoleError("jackson_integral: [k+1] vanishes at this q");
        v[static_cast<size_t>(k + 1)] = f.coeff(k) / qk;
    }
    return QPoly(f.q(), std::move(v));
}

QPoly op_P(const QPoly& f, long m) {
    if (m < 0) throw SchemaError("op_P: negative power");
    if (m == 0) return f;
    if (!f.constant_term().is_zero())
        throw SchemaError("op_P: operand has nonzero constant term");
    if (f.is_zero()) return f;
    long d = *f.degree();
    std::vector<ExactScalar> v(static_cast<size_t>(d) + 1, ExactScalar(0));
    for (long k = 1; k <= d; ++k) {
        ExactScalar qk = q_number(k, f.q());
        if (qk.is_zero()) throw PoleError("op_P: [k] vanishes at this q");
        v[static_cast<size_t>(k)] = f.coeff(k) / qk.pow_i(m);
    }
    return QPoly(f.q(), std::move(v));
}

QPoly op_T(const QPoly& f, long m) {
    if (m < 0) throw SchemaError("op_T: negative power");
    QPoly g = f;
    for (long step = 0; step < m; ++step) {
        // (g(1) - g(t))/(1 - t) = sum_k c_k (1 + t + ... + t^{k-1})
        if (g.is_zero()) return g;
        long d = *g.degree();
        std::vector<ExactScalar> integrand(d > 0 ? static_cast<size_t>(d) : 1, ExactScalar(0));
        for (long k = 1; k <= d; ++k)
            for (long j = 0; j < k; ++j)
                integrand[static_cast<size_t>(j)] += g.coeff(k);
        g = jackson_integral(QPoly(g.q(), std::move(integrand)));
    }
    return g;
}

QPoly op_eta(const QPoly& f, long e) {
    if (e < 0) throw SchemaError("op_eta: negative power");
    if (e == 0 || f.is_zero()) return f;
    long d = *f.degree();
    std::vector<ExactScalar> v(static_cast<size_t>(d) + 1, ExactScalar(0));
    for (long k = 0; k <= d; ++k)
        v[static_cast<size_t>(k)] = f.coeff(k) * f.q().pow_i(e * k);
    return QPoly(f.q(), std::move(v));
}

QPoly apply_chain(const OperatorChain& chain, QPoly f) {
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        switch (it->kind) {
            case ChainStep::Eta: f = op_eta(f, it->power); break;
            case ChainStep::P: f = op_P(f, it->power); break;
            case ChainStep::T: f = op_T(f, it->power); break;
        }
    }
    return f;
}

QPoly poly_one_minus_poch(long n, const ExactScalar& q) {
    if (n < 0) throw SchemaError("poly_one_minus_poch: n must be >= 0");
    // (x;q)_n as a polynomial, then 1 - that.
    QPoly poch = QPoly::constant(q, ExactScalar(1));
    for (long i = 0; i < n; ++i) {
        QPoly factor(q, {ExactScalar(1), -q.pow_i(i)}); // 1 - q^i x
        poch = poch * factor;
    }
    return QPoly::constant(q, ExactScalar(1)) - poch;
}

} // namespace qv
