#include "lefzeta/rational.hpp"

#include "lefzeta/errors.hpp"

#include <cctype>

namespace lefzeta {

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    if (!is_integer_token(num))
        throw parse_error("malformed rational '" + text + "'");
    if (slash != std::string::npos) {
        const std::string den = text.substr(slash + 1);
        if (!is_integer_token(den) || den[0] == '-' || den[0] == '+')
            throw parse_error("malformed rational '" + text + "'");
        mpz_class d(den);
        if (d == 0)
            throw parse_error("zero denominator in rational '" + text + "'");
        Rational r(mpz_class(num), d);
        r.canonicalize();
        return r;
    }
    return Rational(mpz_class(num));
}

std::string rational_to_string(const Rational& value) {
    return value.get_str();
}

} // namespace lefzeta
