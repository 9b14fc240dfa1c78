#pragma once

#include "lefzeta/matrix.hpp"
#include "lefzeta/polynomial.hpp"
#include "lefzeta/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lefzeta {

// Finitely presented graded-commutative algebra over the rationals, given as
//
//   Lambda(x_1, ..., x_s)  (tensor)  E
//
// where the x_i are odd-degree exterior generators and E is an even-degree
// algebra described by an explicit structure-constant table over a named
// basis (the unit is implicit). Monomials (odd index subset, even basis
// index) form the canonical linear basis.
//
// A presentation may instead carry the `odd_products_vanish` relation flag.
// That switches it into a small "hybrid" quotient used by fixtures: the basis
// is {1} + {odd generators} + {even classes}, products of two odd generators
// are zero, and odd x even products come from an explicit sparse table.
// Hybrid presentations are honest graded-commutative algebras but not free
// tensors, and the shape recognizer treats them accordingly.

struct GeneratorSpec {
    std::string name;
    int degree = 0;
    bool operator==(const GeneratorSpec&) const = default;
};

// Structure constants for the even part. products[i-1][j-1] is the dense
// combination (index 0 = unit, k >= 1 = basis[k-1]) representing e_i * e_j.
struct EvenAlgebraTable {
    std::vector<GeneratorSpec> basis;
    std::vector<std::vector<std::vector<Rational>>> products;

    bool trivial() const { return basis.empty(); }
    int size() const { return static_cast<int>(basis.size()); }

    // Allocates an all-zero product table matching `basis`.
    void init_products();
    // 1-based indices; stores both orientations.
    void set_product(int i, int j, std::vector<Rational> combo);
    const std::vector<Rational>& product(int i, int j) const;

    bool operator==(const EvenAlgebraTable&) const = default;
};

// One monomial of the canonical basis: a set of odd generator indices (bit i
// set = generator i present, factors in increasing index order) and an even
// basis index (0 = unit).
struct BasisElement {
    std::uint64_t odd_mask = 0;
    std::uint32_t even_index = 0;

    bool is_unit() const { return odd_mask == 0 && even_index == 0; }
    bool operator==(const BasisElement&) const = default;
};

// Canonical order: lexicographic on the increasing odd index sequences
// (a proper prefix sorts first), then the even index.
bool operator<(const BasisElement& a, const BasisElement& b);

// Finite rational linear combination of basis monomials.
class AlgebraElement {
public:
    static AlgebraElement zero() { return {}; }
    static AlgebraElement unit() { return monomial(BasisElement{}); }
    static AlgebraElement monomial(BasisElement e, Rational coeff = Rational(1));

    const std::map<BasisElement, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    AlgebraElement& add_term(const BasisElement& e, const Rational& coeff);
    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    AlgebraElement& operator*=(const Rational& c);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(AlgebraElement a, const Rational& c) { return a *= c; }
    friend AlgebraElement operator*(const Rational& c, AlgebraElement a) { return a *= c; }
    bool operator==(const AlgebraElement&) const = default;

private:
    std::map<BasisElement, Rational> terms_;
};

struct RingPresentation {
    std::string name;
    std::vector<GeneratorSpec> odd_generators;
    EvenAlgebraTable even;

    // Hybrid quotient mode (see the header comment).
    bool odd_products_vanish = false;
    // (odd generator index, even basis index >= 1) -> product; missing = 0.
    std::map<std::pair<int, int>, AlgebraElement> odd_even_products;

    bool hybrid() const { return odd_products_vanish && !odd_generators.empty(); }
    int odd_count() const { return static_cast<int>(odd_generators.size()); }

    bool operator==(const RingPresentation&) const = default;
};

struct ValidationResult {
    bool ok = true;
    std::string message;
    explicit operator bool() const { return ok; }

    static ValidationResult pass() { return {}; }
    static ValidationResult fail(std::string msg) { return {false, std::move(msg)}; }
};

// Sign picked up when the odd factors of s move past those of t to merge the
// two increasing sequences: (-1)^|{(i,j) in s x t : i > j}|. Throws
// std::invalid_argument when the subsets overlap.
int koszul_sign(std::uint64_t s, std::uint64_t t);

int degree_of(const RingPresentation& p, const BasisElement& e);
std::string name_of(const RingPresentation& p, const BasisElement& e);
std::string element_to_string(const RingPresentation& p, const AlgebraElement& a);

// Degree if every term agrees (the zero element reports degree 0);
// std::nullopt for inhomogeneous elements.
std::optional<int> homogeneous_degree(const RingPresentation& p, const AlgebraElement& a);

// Checks: name uniqueness, degree parity and positivity, symmetric and
// degree-additive product tables, associativity, and the hybrid-mode rules.
// Reports the first violated axiom with the witnessing classes.
ValidationResult validate_presentation(const RingPresentation& p);

// Graded-commutative product, bilinear over the canonical basis. Requires a
// validated presentation; elements over a different presentation are
// rejected when their indices fall outside this one.
AlgebraElement cup(const AlgebraElement& a, const AlgebraElement& b, const RingPresentation& p);

struct CohomologyBasis {
    std::vector<std::vector<BasisElement>> by_degree;
    std::map<BasisElement, std::pair<int, int>> position; // element -> (degree, index)
    int top_degree = 0;
    int total_dimension = 0;

    int dim(int degree) const {
        if (degree < 0 || degree > top_degree)
            return 0;
        return static_cast<int>(by_degree[degree].size());
    }
    std::vector<Rational> coords(const AlgebraElement& a, int degree) const;
    AlgebraElement element(int degree, const std::vector<Rational>& coords) const;
};

// Canonical basis in the fixed deterministic order. Requires a validated
// presentation.
CohomologyBasis build_basis(const RingPresentation& p);

Polynomial poincare_polynomial(const RingPresentation& p);
std::vector<int> betti_profile(const CohomologyBasis& basis);

// A validated presentation bundled with its canonical basis; almost every
// higher-level operation works on one of these.
struct CohomologyModel {
    RingPresentation presentation;
    CohomologyBasis basis;
};
using ModelPtr = std::shared_ptr<const CohomologyModel>;

// Validates and indexes a presentation; throws validation_error on failure.
ModelPtr make_model(RingPresentation p);

} // namespace lefzeta
