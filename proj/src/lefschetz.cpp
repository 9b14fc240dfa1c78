#include "lefzeta/lefschetz.hpp"

namespace lefzeta {

Rational lefschetz_number(const RingEndomorphism& f, long k) {
    return alternating_trace(power(f, k));
}

std::vector<Rational> lefschetz_sequence(const RingEndomorphism& f, int count) {
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(count > 0 ? count : 0));
    RingEndomorphism iterate = f;
    for (int k = 1; k <= count; ++k) {
        out.push_back(alternating_trace(iterate));
        if (k < count)
            iterate = compose(iterate, f);
    }
    return out;
}

RationalFunction zeta_function(const RingEndomorphism& f) {
    Polynomial num = Polynomial::one();
    Polynomial den = Polynomial::one();
    for (int d = 0; d <= f.map.top_degree(); ++d) {
        Polynomial factor = f.block(d).det_identity_minus_t();
        if (d % 2 == 1)
            num *= factor;
        else
            den *= factor;
    }
    return RationalFunction(std::move(num), std::move(den));
}

bool is_lppf(const RingEndomorphism& f) {
    return zeta_function(f).is_one();
}

ValidationResult zeta_series_check(const RingEndomorphism& f, int n) {
    RationalFunction zeta = zeta_function(f);
    const Polynomial& num = zeta.numerator();
    const Polynomial& den = zeta.denominator();
    int order = n + 1;

    // t zeta'/zeta = t num'/num - t den'/den
    Polynomial t = Polynomial::monomial(1);
    Polynomial series = series_mul(t * num.derivative(), series_inverse(num, order), order) -
                        series_mul(t * den.derivative(), series_inverse(den, order), order);

    if (series.coeff(0) != 0)
        return ValidationResult::fail("zeta log-derivative has a nonzero constant term");
    std::vector<Rational> numbers = lefschetz_sequence(f, n);
    for (int k = 1; k <= n; ++k) {
        if (series.coeff(k) != numbers[k - 1])
            return ValidationResult::fail(
                "zeta log-derivative disagrees with the Lefschetz numbers at order " +
                std::to_string(k) + ": " + rational_to_string(series.coeff(k)) + " vs " +
                rational_to_string(numbers[k - 1]));
    }
    return ValidationResult::pass();
}

} // namespace lefzeta
