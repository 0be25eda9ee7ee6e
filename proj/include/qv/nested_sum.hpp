#ifndef QV_NESTED_SUM_HPP
#define QV_NESTED_SUM_HPP

#include <unordered_map>
#include <vector>

#include "qv/errors.hpp"

namespace qv {

/// Exact sum over all weakly decreasing chains n >= i_1 >= ... >= i_k >= 1
/// (boundary convention i_0 = n) of
///     prod_j weight(j, i_j, i_{j-1}) * terminal(i_k).
/// Returns 0 when n <= 0. With memoize=true the per-level suffix sums are
/// cached on (level, previous index); valid because the weight signature is
/// exactly (j, i_j, i_{j-1}).
template <class F, class Weight, class Terminal>
F nested_qsum(long n, long k, Weight&& weight, Terminal&& terminal, bool memoize = false) {
    if (k < 1) throw SchemaError("nested_qsum: k must be >= 1");
    if (n <= 0) return F(0);

    std::vector<std::unordered_map<long, F>> memo;
    if (memoize) memo.resize(static_cast<size_t>(k) + 1);

    auto rec = [&](auto&& self, long j, long prev) -> F {
        if (j > k) return terminal(prev);
        if (memoize) {
            auto it = memo[static_cast<size_t>(j)].find(prev);
            if (it != memo[static_cast<size_t>(j)].end()) return it->second;
        }
        F acc(0);
        for (long ij = 1; ij <= prev; ++ij)
            acc += weight(j, ij, prev) * self(self, j + 1, ij);
        if (memoize) memo[static_cast<size_t>(j)].emplace(prev, acc);
        return acc;
    };
    return rec(rec, 1, n);
}

} // namespace qv

#endif
