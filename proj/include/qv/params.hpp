#ifndef QV_PARAMS_HPP
#define QV_PARAMS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qv/errors.hpp"
#include "qv/rational.hpp"

namespace qv {

/// Named assignment of the scalar symbols an identity may reference. All
/// values are exact rationals; the numeric backend converts at evaluation
/// precision. `a` is the real-valued order used by the numeric-only ids and
/// the non-integer probe.
struct ParamEnv {
    std::optional<ExactScalar> q, x, z, t, y, w, a;
    std::vector<ExactScalar> z_vec;

    const ExactScalar& require(const std::string& name) const;
    void set(const std::string& name, ExactScalar v);
};

/// One verifiable data point: shape integers plus a parameter environment.
/// Integer parameters are kept a named bag so each identity's schema can use
/// the letters the displays use (n, m, k, r, l, i).
struct IdentityInstance {
    std::string id;
    std::map<std::string, long> ints;
    std::vector<long> m_vec;
    std::vector<long> l_vec;
    ParamEnv env;
    std::optional<long> trunc_R; // partial-sum order for tail-bounded ids

    long get_int(const std::string& name) const {
        auto it = ints.find(name);
        if (it == ints.end())
            throw SchemaError(id + ": missing integer parameter '" + name + "'");
        return it->second;
    }
    std::optional<long> find_int(const std::string& name) const {
        auto it = ints.find(name);
        if (it == ints.end()) return std::nullopt;
        return it->second;
    }
};

/// Size caps for random instance generation.
struct Bounds {
    long n = 8;
    long k = 3;
    long m = 3;      // entries of m_vec / depth parameters
    long l = 3;      // entries of l_vec
    long coeff = 50; // |numerator|, denominator of drawn rationals
};

} // namespace qv

#endif
