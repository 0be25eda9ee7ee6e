#include "qv/rational.hpp"

#include <cctype>
#include <ostream>

namespace qv {

ExactScalar ExactScalar::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw SchemaError("ExactScalar: empty literal");

    auto slash = s.find('/');
    auto dot = s.find('.');
    if (slash != std::string::npos && dot != std::string::npos)
        throw SchemaError("ExactScalar: literal mixes '/' and '.': " + text);

    try {
        if (dot != std::string::npos) {
            // decimal text: shift the point out, denominator = 10^frac_digits
            std::string digits = s.substr(0, dot) + s.substr(dot + 1);
            size_t frac = s.size() - dot - 1;
            if (frac == 0 || digits.empty()) throw SchemaError("bad decimal");
            mpz_class num(digits, 10);
            mpz_class den;
            mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
            mpq_class v(num, den);
            v.canonicalize();
            return ExactScalar(std::move(v));
        }
        mpq_class v(s, 10);
        if (v.get_den() == 0) throw PoleError("ExactScalar: zero denominator in " + text);
        v.canonicalize();
        return ExactScalar(std::move(v));
    } catch (const std::invalid_argument&) {
        throw SchemaError("ExactScalar: cannot parse rational literal '" + text + "'");
    }
}

ExactScalar ExactScalar::pow_i(long e) const {
    if (e == 0) return ExactScalar(1);
    if (is_zero()) {
        if (e < 0) throw PoleError("ExactScalar: negative power of zero");
        return ExactScalar(0);
    }
    unsigned long ue = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), ue);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), ue);
    mpq_class r = (e > 0) ? mpq_class(num, den) : mpq_class(den, num);
    r.canonicalize();
    return ExactScalar(std::move(r));
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& v) {
    return os << v.to_string();
}

} // namespace qv
