#pragma once

#include <gmpxx.h>

#include <string>

namespace lefzeta {

// Every coefficient in the library is an exact rational. GMP keeps them in
// lowest terms with a positive denominator, which is also the serialized form.
using Rational = mpq_class;

// Accepts "p", "-p", "p/q" with a nonzero q. Throws parse_error otherwise.
Rational parse_rational(const std::string& text);

// Canonical form: "p" when the denominator is 1, else "p/q".
std::string rational_to_string(const Rational& value);

} // namespace lefzeta
