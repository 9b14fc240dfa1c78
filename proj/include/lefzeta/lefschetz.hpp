#pragma once

#include "lefzeta/endomorphism.hpp"
#include "lefzeta/rational_function.hpp"

#include <vector>

namespace lefzeta {

// Alternating trace of the k-th iterate, k >= 1.
Rational lefschetz_number(const RingEndomorphism& f, long k = 1);

// L(f^1), ..., L(f^count), iterating by composition.
std::vector<Rational> lefschetz_sequence(const RingEndomorphism& f, int count);

// exp(sum_{k>=1} L(f^k) t^k / k) as a rational function: the product over
// degrees of det(I - t F_d), odd degrees in the numerator, even in the
// denominator, then reduced to lowest terms.
RationalFunction zeta_function(const RingEndomorphism& f);

// Every iterate has Lefschetz number zero exactly when the zeta function is
// identically 1; this tests the latter, which is finite and exact.
bool is_lppf(const RingEndomorphism& f);

// Consistency probe tying the two views together: t zeta'/zeta must equal
// sum_{k>=1} L(f^k) t^k as a power series through order n. Reports the first
// mismatching order.
ValidationResult zeta_series_check(const RingEndomorphism& f, int n);

} // namespace lefzeta
