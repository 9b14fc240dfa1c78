#include "lefzeta/presentation.hpp"

#include "lefzeta/errors.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lefzeta {

namespace {

std::vector<int> mask_indices(std::uint64_t mask) {
    std::vector<int> idx;
    while (mask) {
        idx.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return idx;
}

// Monomials valid for this presentation: any (subset, even index) in tensor
// mode; single classes only in hybrid mode.
bool element_belongs(const RingPresentation& p, const BasisElement& e) {
    const int s = p.odd_count();
    const bool mask_ok = s == 64 || (e.odd_mask >> s) == 0;
    const bool even_ok = e.even_index <= static_cast<std::uint32_t>(p.even.size());
    if (!mask_ok || !even_ok)
        return false;
    if (p.hybrid())
        return e.odd_mask == 0 || (std::popcount(e.odd_mask) == 1 && e.even_index == 0);
    return true;
}

void require_membership(const RingPresentation& p, const AlgebraElement& a) {
    for (const auto& [e, c] : a.terms())
        if (!element_belongs(p, e))
            throw validation_error("element does not belong to the presentation '" + p.name + "'");
}

// e_i * e_j inside the even table, including unit factors.
std::vector<Rational> even_product_combo(const EvenAlgebraTable& table, int i, int j) {
    std::vector<Rational> combo(table.size() + 1, Rational(0));
    if (i == 0 && j == 0) {
        combo[0] = 1;
    } else if (i == 0) {
        combo[j] = 1;
    } else if (j == 0) {
        combo[i] = 1;
    } else {
        return table.product(i, j);
    }
    return combo;
}

void monomial_cup(const RingPresentation& p, const BasisElement& x, const BasisElement& y,
                  const Rational& coeff, AlgebraElement& out) {
    if (p.hybrid()) {
        const int odd_factors = std::popcount(x.odd_mask) + std::popcount(y.odd_mask);
        if (odd_factors >= 2)
            return; // products of odd classes vanish by the relation flag
        if (odd_factors == 0) {
            const auto combo = even_product_combo(p.even, static_cast<int>(x.even_index),
                                                  static_cast<int>(y.even_index));
            for (std::size_t k = 0; k < combo.size(); ++k)
                if (combo[k] != 0)
                    out.add_term(BasisElement{0, static_cast<std::uint32_t>(k)}, coeff * combo[k]);
            return;
        }
        // Exactly one odd factor; even classes commute with everything.
        const int g = std::countr_zero(x.odd_mask != 0 ? x.odd_mask : y.odd_mask);
        const int e = static_cast<int>(x.odd_mask != 0 ? y.even_index : x.even_index);
        if (e == 0) {
            out.add_term(BasisElement{std::uint64_t(1) << g, 0}, coeff);
            return;
        }
        const auto it = p.odd_even_products.find({g, e});
        if (it != p.odd_even_products.end())
            for (const auto& [term, c] : it->second.terms())
                out.add_term(term, coeff * c);
        return;
    }

    if (x.odd_mask & y.odd_mask)
        return; // repeated odd generator
    const int sign = koszul_sign(x.odd_mask, y.odd_mask);
    const auto combo = even_product_combo(p.even, static_cast<int>(x.even_index),
                                          static_cast<int>(y.even_index));
    const Rational scaled = coeff * sign;
    for (std::size_t k = 0; k < combo.size(); ++k)
        if (combo[k] != 0)
            out.add_term(BasisElement{x.odd_mask | y.odd_mask, static_cast<std::uint32_t>(k)},
                         scaled * combo[k]);
}

std::vector<BasisElement> positive_degree_classes(const RingPresentation& p) {
    std::vector<BasisElement> classes;
    for (int i = 0; i < p.odd_count(); ++i)
        classes.push_back(BasisElement{std::uint64_t(1) << i, 0});
    for (int j = 1; j <= p.even.size(); ++j)
        classes.push_back(BasisElement{0, static_cast<std::uint32_t>(j)});
    return classes;
}

} // namespace

void EvenAlgebraTable::init_products() {
    products.assign(basis.size(),
                    std::vector<std::vector<Rational>>(
                        basis.size(), std::vector<Rational>(basis.size() + 1, Rational(0))));
}

void EvenAlgebraTable::set_product(int i, int j, std::vector<Rational> combo) {
    if (i < 1 || j < 1 || i > size() || j > size())
        throw std::invalid_argument("even table index out of range");
    if (combo.size() != basis.size() + 1)
        throw std::invalid_argument("even product combo has the wrong length");
    products[i - 1][j - 1] = combo;
    products[j - 1][i - 1] = std::move(combo);
}

const std::vector<Rational>& EvenAlgebraTable::product(int i, int j) const {
    return products.at(i - 1).at(j - 1);
}

bool operator<(const BasisElement& a, const BasisElement& b) {
    std::uint64_t ma = a.odd_mask, mb = b.odd_mask;
    while (ma && mb) {
        const int ia = std::countr_zero(ma), ib = std::countr_zero(mb);
        if (ia != ib)
            return ia < ib;
        ma &= ma - 1;
        mb &= mb - 1;
    }
    if (ma != mb)
        return ma == 0; // shorter sequence is a prefix of the longer one
    return a.even_index < b.even_index;
}

AlgebraElement AlgebraElement::monomial(BasisElement e, Rational coeff) {
    AlgebraElement a;
    a.add_term(e, coeff);
    return a;
}

AlgebraElement& AlgebraElement::add_term(const BasisElement& e, const Rational& coeff) {
    if (coeff == 0)
        return *this;
    auto [it, inserted] = terms_.emplace(e, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
    return *this;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_)
        coeff *= c;
    return *this;
}

int koszul_sign(std::uint64_t s, std::uint64_t t) {
    if (s & t)
        throw std::invalid_argument("koszul_sign on overlapping subsets");
    int inversions = 0;
    std::uint64_t rest = s;
    while (rest) {
        const int i = std::countr_zero(rest);
        const std::uint64_t below = (i == 0) ? 0 : (t & ((std::uint64_t(1) << i) - 1));
        inversions += std::popcount(below);
        rest &= rest - 1;
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

int degree_of(const RingPresentation& p, const BasisElement& e) {
    int d = 0;
    for (int i : mask_indices(e.odd_mask))
        d += p.odd_generators.at(i).degree;
    if (e.even_index > 0)
        d += p.even.basis.at(e.even_index - 1).degree;
    return d;
}

std::string name_of(const RingPresentation& p, const BasisElement& e) {
    if (e.is_unit())
        return "1";
    std::string out;
    for (int i : mask_indices(e.odd_mask)) {
        if (!out.empty())
            out += "*";
        out += p.odd_generators.at(i).name;
    }
    if (e.even_index > 0) {
        if (!out.empty())
            out += "*";
        out += p.even.basis.at(e.even_index - 1).name;
    }
    return out;
}

std::string element_to_string(const RingPresentation& p, const AlgebraElement& a) {
    if (a.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : a.terms()) {
        if (!first)
            out << " + ";
        first = false;
        if (c != 1 || e.is_unit())
            out << rational_to_string(c) << (e.is_unit() ? "" : "*");
        if (!e.is_unit())
            out << name_of(p, e);
    }
    return out.str();
}

std::optional<int> homogeneous_degree(const RingPresentation& p, const AlgebraElement& a) {
    if (a.is_zero())
        return 0;
    std::optional<int> degree;
    for (const auto& [e, c] : a.terms()) {
        const int d = degree_of(p, e);
        if (degree && *degree != d)
            return std::nullopt;
        degree = d;
    }
    return degree;
}

ValidationResult validate_presentation(const RingPresentation& p) {
    if (p.odd_count() > 20)
        return ValidationResult::fail("too many odd generators (limit 20)");

    std::set<std::string> names{"1"};
    for (const auto& g : p.odd_generators) {
        if (g.name.empty())
            return ValidationResult::fail("odd generator with an empty name");
        if (!names.insert(g.name).second)
            return ValidationResult::fail("duplicate class name '" + g.name + "'");
        if (g.degree < 1)
            return ValidationResult::fail("odd generator '" + g.name + "' has degree " +
                                          std::to_string(g.degree) + " (must be positive)");
        if (g.degree % 2 == 0)
            return ValidationResult::fail("odd generator '" + g.name + "' has even degree " +
                                          std::to_string(g.degree));
    }
    for (const auto& g : p.even.basis) {
        if (g.name.empty())
            return ValidationResult::fail("even basis element with an empty name");
        if (!names.insert(g.name).second)
            return ValidationResult::fail("duplicate class name '" + g.name + "'");
        if (g.degree < 1)
            return ValidationResult::fail("even basis element '" + g.name + "' has degree " +
                                          std::to_string(g.degree) + " (must be positive)");
        if (g.degree % 2 != 0)
            return ValidationResult::fail("odd degree in even table: '" + g.name +
                                          "' has degree " + std::to_string(g.degree));
    }

    const int m = p.even.size();
    if (static_cast<int>(p.even.products.size()) != m)
        return ValidationResult::fail("even product table has the wrong number of rows");
    for (const auto& row : p.even.products) {
        if (static_cast<int>(row.size()) != m)
            return ValidationResult::fail("even product table has a ragged row");
        for (const auto& combo : row)
            if (static_cast<int>(combo.size()) != m + 1)
                return ValidationResult::fail("even product combo has the wrong length");
    }

    auto combo_name = [&p](int k) {
        return k == 0 ? std::string("1") : p.even.basis[k - 1].name;
    };
    for (int i = 1; i <= m; ++i)
        for (int j = i; j <= m; ++j) {
            if (p.even.product(i, j) != p.even.product(j, i))
                return ValidationResult::fail("even product table not symmetric at pair (" +
                                              p.even.basis[i - 1].name + ", " +
                                              p.even.basis[j - 1].name + ")");
            const int expected = p.even.basis[i - 1].degree + p.even.basis[j - 1].degree;
            const auto& combo = p.even.product(i, j);
            for (int k = 0; k <= m; ++k) {
                if (combo[k] == 0)
                    continue;
                const int dk = (k == 0) ? 0 : p.even.basis[k - 1].degree;
                if (dk != expected)
                    return ValidationResult::fail(
                        "even product (" + p.even.basis[i - 1].name + ", " +
                        p.even.basis[j - 1].name + ") violates degree additivity: term '" +
                        combo_name(k) + "' has degree " + std::to_string(dk) + ", expected " +
                        std::to_string(expected));
            }
        }

    if (!p.odd_even_products.empty() && !p.odd_products_vanish)
        return ValidationResult::fail(
            "odd-even product assignments require the odd_products_vanish relation flag");
    if (p.hybrid()) {
        for (const auto& [key, combo] : p.odd_even_products) {
            const auto [g, e] = key;
            if (g < 0 || g >= p.odd_count() || e < 1 || e > m)
                return ValidationResult::fail("odd-even product with an out-of-range index");
            const int expected = p.odd_generators[g].degree + p.even.basis[e - 1].degree;
            for (const auto& [term, c] : combo.terms()) {
                if (!element_belongs(p, term))
                    return ValidationResult::fail(
                        "odd-even product (" + p.odd_generators[g].name + ", " +
                        p.even.basis[e - 1].name + ") mentions a class outside the presentation");
                if (degree_of(p, term) != expected)
                    return ValidationResult::fail(
                        "odd-even product (" + p.odd_generators[g].name + ", " +
                        p.even.basis[e - 1].name + ") violates degree additivity: term '" +
                        name_of(p, term) + "' has degree " +
                        std::to_string(degree_of(p, term)) + ", expected " +
                        std::to_string(expected));
            }
        }
    }

    // Associativity. For tensor presentations the exterior part is free, so
    // checking the even table triples is enough; hybrid presentations get the
    // full check over their (few) positive-degree classes.
    std::vector<BasisElement> classes;
    if (p.hybrid()) {
        classes = positive_degree_classes(p);
    } else {
        for (int j = 1; j <= m; ++j)
            classes.push_back(BasisElement{0, static_cast<std::uint32_t>(j)});
    }
    for (const auto& a : classes)
        for (const auto& b : classes)
            for (const auto& c : classes) {
                const auto ea = AlgebraElement::monomial(a);
                const auto eb = AlgebraElement::monomial(b);
                const auto ec = AlgebraElement::monomial(c);
                if (cup(cup(ea, eb, p), ec, p) != cup(ea, cup(eb, ec, p), p))
                    return ValidationResult::fail("product table not associative at triple (" +
                                                  name_of(p, a) + ", " + name_of(p, b) + ", " +
                                                  name_of(p, c) + ")");
            }

    return ValidationResult::pass();
}

AlgebraElement cup(const AlgebraElement& a, const AlgebraElement& b, const RingPresentation& p) {
    require_membership(p, a);
    require_membership(p, b);
    AlgebraElement out;
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms())
            monomial_cup(p, ea, eb, ca * cb, out);
    return out;
}

std::vector<Rational> CohomologyBasis::coords(const AlgebraElement& a, int degree) const {
    std::vector<Rational> v(dim(degree), Rational(0));
    for (const auto& [e, c] : a.terms()) {
        const auto it = position.find(e);
        if (it == position.end() || it->second.first != degree)
            throw std::invalid_argument("element is not homogeneous of the requested degree");
        v[it->second.second] = c;
    }
    return v;
}

AlgebraElement CohomologyBasis::element(int degree, const std::vector<Rational>& coords) const {
    if (static_cast<int>(coords.size()) != dim(degree))
        throw std::invalid_argument("coordinate length mismatch");
    AlgebraElement a;
    for (int i = 0; i < dim(degree); ++i)
        a.add_term(by_degree[degree][i], coords[i]);
    return a;
}

CohomologyBasis build_basis(const RingPresentation& p) {
    std::vector<BasisElement> all;
    if (p.hybrid()) {
        for (int j = 0; j <= p.even.size(); ++j)
            all.push_back(BasisElement{0, static_cast<std::uint32_t>(j)});
        for (int i = 0; i < p.odd_count(); ++i)
            all.push_back(BasisElement{std::uint64_t(1) << i, 0});
    } else {
        const std::uint64_t subsets = std::uint64_t(1) << p.odd_count();
        for (std::uint64_t mask = 0; mask < subsets; ++mask)
            for (int j = 0; j <= p.even.size(); ++j)
                all.push_back(BasisElement{mask, static_cast<std::uint32_t>(j)});
    }

    CohomologyBasis basis;
    for (const auto& e : all)
        basis.top_degree = std::max(basis.top_degree, degree_of(p, e));
    basis.by_degree.assign(basis.top_degree + 1, {});
    for (const auto& e : all)
        basis.by_degree[degree_of(p, e)].push_back(e);
    for (auto& layer : basis.by_degree)
        std::sort(layer.begin(), layer.end());
    for (int d = 0; d <= basis.top_degree; ++d)
        for (int i = 0; i < static_cast<int>(basis.by_degree[d].size()); ++i)
            basis.position.emplace(basis.by_degree[d][i], std::make_pair(d, i));
    basis.total_dimension = static_cast<int>(all.size());
    return basis;
}

Polynomial poincare_polynomial(const RingPresentation& p) {
    const CohomologyBasis basis = build_basis(p);
    std::vector<Rational> coeffs(basis.top_degree + 1, Rational(0));
    for (int d = 0; d <= basis.top_degree; ++d)
        coeffs[d] = basis.dim(d);
    return Polynomial::from_coeffs(std::move(coeffs));
}

std::vector<int> betti_profile(const CohomologyBasis& basis) {
    std::vector<int> betti(basis.top_degree + 1, 0);
    for (int d = 0; d <= basis.top_degree; ++d)
        betti[d] = basis.dim(d);
    return betti;
}

ModelPtr make_model(RingPresentation p) {
    const ValidationResult check = validate_presentation(p);
    if (!check)
        throw validation_error(check.message);
    CohomologyBasis basis = build_basis(p);
    return std::make_shared<CohomologyModel>(CohomologyModel{std::move(p), std::move(basis)});
}

} // namespace lefzeta
