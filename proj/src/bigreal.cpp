#include "qv/bigreal.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace qv {

BigReal BigReal::parse(const std::string& text, long prec) {
    BigReal r = BigReal::zero(prec);
    if (mpfr_set_str(r.raw(), text.c_str(), 10, MPFR_RNDN) != 0)
        throw SchemaError("BigReal: cannot parse real literal '" + text + "'");
    return r;
}

BigReal BigReal::pow_real(const BigReal& base, const BigReal& expo) {
    if (expo.is_integer_value()) return base.pow_i(expo.to_long());
    if (base.sign() <= 0)
        throw DomainError("BigReal: non-integer power of non-positive base");
    long p = std::max(base.prec(), expo.prec()) + 32;
    BigReal lb = BigReal::zero(p);
    mpfr_log(lb.raw(), base.raw(), MPFR_RNDN);
    BigReal e = BigReal::zero(p);
    mpfr_mul(e.raw(), lb.raw(), expo.raw(), MPFR_RNDN);
    BigReal r = BigReal::zero(std::max(base.prec(), expo.prec()));
    mpfr_exp(r.raw(), e.raw(), MPFR_RNDN);
    return r;
}

std::string BigReal::to_string(size_t digits) const {
    if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

} // namespace qv
