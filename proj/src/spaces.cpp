#include "lefzeta/spaces.hpp"

#include "lefzeta/errors.hpp"

#include <cstdint>
#include <set>
#include <stdexcept>
#include <utility>

namespace lefzeta {

RingPresentation sphere(int n) {
    if (n < 1)
        throw std::invalid_argument("sphere dimension must be >= 1");
    RingPresentation p;
    p.name = "sphere" + std::to_string(n);
    if (n % 2 == 1) {
        p.odd_generators.push_back({"x" + std::to_string(n), n});
    } else {
        p.even.basis.push_back({"y" + std::to_string(n), n});
        p.even.init_products(); // y^2 = 0
    }
    return p;
}

namespace {

// Product combo of classes i, j of one factor (0 = unit), as a dense vector.
std::vector<Rational> component_product(const EvenAlgebraTable& t, int i, int j) {
    if (i > 0 && j > 0)
        return t.product(i, j);
    std::vector<Rational> combo(static_cast<std::size_t>(t.size()) + 1, Rational(0));
    combo[i + j] = 1; // one of them is the unit
    return combo;
}

} // namespace

RingPresentation product(const RingPresentation& a, const RingPresentation& b) {
    if (a.odd_products_vanish || b.odd_products_vanish)
        throw validation_error("products of hybrid presentations are not supported");

    RingPresentation out;
    out.name = a.name + "x" + b.name;

    std::set<std::string> used{"1"};
    for (const auto& g : a.odd_generators)
        used.insert(g.name);
    for (const auto& g : a.even.basis)
        used.insert(g.name);
    auto dedup = [&used](std::string n) {
        while (used.count(n))
            n += "'";
        used.insert(n);
        return n;
    };

    out.odd_generators = a.odd_generators;
    for (const auto& g : b.odd_generators)
        out.odd_generators.push_back({dedup(g.name), g.degree});

    int m1 = a.even.size();
    int m2 = b.even.size();
    std::vector<std::string> right_names;
    for (const auto& g : b.even.basis)
        right_names.push_back(dedup(g.name));

    // Combined classes: left factor, right factor, then the mixed pairs.
    std::vector<std::pair<int, int>> pair_of{{0, 0}};
    for (int i = 1; i <= m1; ++i) {
        out.even.basis.push_back(a.even.basis[i - 1]);
        pair_of.emplace_back(i, 0);
    }
    for (int j = 1; j <= m2; ++j) {
        out.even.basis.push_back({right_names[j - 1], b.even.basis[j - 1].degree});
        pair_of.emplace_back(0, j);
    }
    for (int i = 1; i <= m1; ++i) {
        for (int j = 1; j <= m2; ++j) {
            out.even.basis.push_back(
                {dedup(a.even.basis[i - 1].name + "*" + right_names[j - 1]),
                 a.even.basis[i - 1].degree + b.even.basis[j - 1].degree});
            pair_of.emplace_back(i, j);
        }
    }

    int total = m1 + m2 + m1 * m2;
    auto combined_index = [&](int i, int j) -> int {
        if (j == 0)
            return i;
        if (i == 0)
            return m1 + j;
        return m1 + m2 + (i - 1) * m2 + j;
    };

    out.even.init_products();
    for (int p = 1; p <= total; ++p) {
        for (int q = p; q <= total; ++q) {
            auto [i1, j1] = pair_of[p];
            auto [i2, j2] = pair_of[q];
            auto left = component_product(a.even, i1, i2);
            auto right = component_product(b.even, j1, j2);
            std::vector<Rational> combo(static_cast<std::size_t>(total) + 1, Rational(0));
            for (int u = 0; u <= m1; ++u) {
                if (left[u] == 0)
                    continue;
                for (int v = 0; v <= m2; ++v) {
                    if (right[v] == 0)
                        continue;
                    combo[combined_index(u, v)] += left[u] * right[v];
                }
            }
            out.even.set_product(p, q, std::move(combo));
        }
    }
    return out;
}

RingPresentation odd_sphere_bundle(const RingPresentation& base, int fiber_dim,
                                   std::optional<int> base_dim) {
    if (base.odd_products_vanish)
        throw validation_error("hybrid bases are not supported");
    if (fiber_dim < 1 || fiber_dim % 2 == 0)
        throw validation_error("the fiber sphere must be odd-dimensional (got " +
                               std::to_string(fiber_dim) +
                               "); even-dimensional bundles need not split rationally");
    int dim = base_dim.value_or(poincare_polynomial(base).degree());
    if (fiber_dim < dim)
        throw validation_error("the rational splitting requires fiber dimension >= base "
                               "dimension: " +
                               std::to_string(fiber_dim) + " < " + std::to_string(dim));

    RingPresentation out = base;
    out.name = base.name + "_s" + std::to_string(fiber_dim);
    std::set<std::string> used{"1"};
    for (const auto& g : out.odd_generators)
        used.insert(g.name);
    for (const auto& g : out.even.basis)
        used.insert(g.name);
    std::string name = "x" + std::to_string(fiber_dim);
    while (used.count(name))
        name += "'";
    out.odd_generators.push_back({name, fiber_dim});
    return out;
}

std::vector<int> kodaira_thurston_betti() {
    return {1, 3, 4, 3, 1};
}

RingPresentation s5_bundle_fixture() {
    RingPresentation p;
    p.name = "s5_bundle";
    p.odd_generators = {{"a3", 3}, {"a3'", 3}, {"w11", 11}};
    p.even.basis = {{"b8", 8}, {"b8'", 8}};
    p.even.init_products(); // degree 16 is empty, so all table products are zero
    p.odd_products_vanish = true;

    AlgebraElement top = AlgebraElement::monomial(BasisElement{std::uint64_t(1) << 2, 0});
    p.odd_even_products[{0, 1}] = top; // a3  . b8  = w11
    p.odd_even_products[{1, 2}] = top; // a3' . b8' = w11
    return p;
}

const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> all = [] {
        std::vector<Fixture> v;
        auto named = [](RingPresentation p, std::string name, std::string desc) {
            p.name = name;
            return Fixture{std::move(name), std::move(desc), std::move(p), std::nullopt};
        };
        v.push_back(named(sphere(1), "sphere1", "circle: one odd generator of degree 1"));
        v.push_back(named(sphere(2), "sphere2", "even sphere: one square-zero class of degree 2"));
        v.push_back(named(sphere(3), "sphere3", "odd sphere: one odd generator of degree 3"));
        v.push_back(named(product(sphere(3), sphere(2)), "s3xs2",
                          "product of an odd and an even sphere"));
        v.push_back(named(product(sphere(3), sphere(3)), "s3xs3", "product of two odd spheres"));
        v.push_back(named(product(sphere(2), sphere(4)), "s2xs4", "product of two even spheres"));
        v.push_back(named(odd_sphere_bundle(product(sphere(3), sphere(3)), 7), "s7_bundle",
                          "7-sphere bundle over s3xs3; splits as one extra odd generator"));
        v.push_back(Fixture{"kodaira_thurston_betti",
                            "Betti profile of the Kodaira-Thurston manifold (recognizer-only)",
                            std::nullopt, kodaira_thurston_betti()});
        v.push_back(named(s5_bundle_fixture(), "s5_bundle",
                          "5-sphere bundle total space: degree-3 products vanish; the 3x8 "
                          "pairing is a chosen completion"));
        return v;
    }();
    return all;
}

const Fixture* find_fixture(const std::string& name) {
    for (const auto& f : fixtures()) {
        if (f.name == name)
            return &f;
    }
    return nullptr;
}

} // namespace lefzeta
