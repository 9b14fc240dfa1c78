#pragma once

#include "lefzeta/endomorphism.hpp"
#include "lefzeta/matrix.hpp"
#include "lefzeta/polynomial.hpp"
#include "lefzeta/presentation.hpp"

#include <string>
#include <vector>

namespace lefzeta {

// Span of products of two positive-degree classes, degree by degree
// (index = degree; degrees 0 and 1 are always empty).
std::vector<Echelon> decomposable_subspace(const ModelPtr& model);

// Which end of the canonical basis order supplies quotient representatives.
// Every choice induces the same characteristic polynomials downstream; having
// two lets tests confirm that.
enum class RepresentativeOrder { canonical, reversed };

// The quotient of the positive-degree part by the decomposables, with a
// chosen set of monomial representatives, the projection onto them, and the
// inclusion back. projection[d] * inclusion[d] = I on the quotient.
struct QuotientBasis {
    ModelPtr model;
    std::vector<std::vector<BasisElement>> reps_by_degree; // index = degree
    std::vector<QMatrix> projection;                       // quotient dim x full dim
    std::vector<QMatrix> inclusion;                        // full dim x quotient dim
    std::vector<int> dims;                                 // quotient dimension per degree
    int top_degree = 0;

    int total_dimension() const;
    std::vector<int> degrees_with_dim() const; // ascending, dim > 0 only
};

QuotientBasis quotient_basis(const ModelPtr& model,
                             RepresentativeOrder order = RepresentativeOrder::canonical);

// Matrices a ring endomorphism induces on the indecomposable quotient. A ring
// map sends decomposables to decomposables, so this is well defined and
// independent of the representative choice up to conjugation.
struct InducedMap {
    std::vector<QMatrix> by_degree; // index = degree; 0 x 0 where the quotient vanishes
    std::vector<int> odd_degrees;   // ascending degrees with nonzero quotient
    std::vector<int> even_degrees;
    QMatrix odd_block;  // direct sum of the odd-degree blocks, ascending
    QMatrix even_block; // direct sum of the even-degree blocks, ascending
};

InducedMap induced_map(const RingEndomorphism& f, const QuotientBasis& q);

// m-th cyclotomic polynomial (integer coefficients, monic), m >= 1.
Polynomial cyclotomic(int m);

// All orders m such that a primitive m-th root of unity is a root of p,
// ascending. Complete search: a degree-n polynomial can only vanish on a
// primitive m-th root when phi(m) <= n, and phi(m) >= sqrt(m/2) bounds
// such m by 2 n^2. Throws std::invalid_argument on the zero polynomial.
std::vector<int> root_of_unity_orders(const Polynomial& p);

// Eigenvalue facts about the induced odd/even blocks that the periodic-point
// criteria consume.
struct EigenSummary {
    Polynomial odd_char_poly;  // det(tI - odd_block)
    Polynomial even_char_poly; // det(tI - even_block)
    bool has_eigenvalue_one_odd = false;
    bool has_eigenvalue_minus_one_odd = false;
    bool has_eigenvalue_minus_one_even = false;
    std::vector<int> root_of_unity_orders_odd;
};

EigenSummary eigen_summary(const InducedMap& m);

// Shape probe for the even part on its own: is it freely spanned by
// square-zero generators (at most one indecomposable per degree, each
// representative squaring to zero, products of distinct generators a basis)?
// When it is, generator_indices lists the 1-based even basis indices of the
// representatives, ascending by degree; when it is not, reason says why.
struct EvenPartInfo {
    bool extended_shaped = false;
    std::vector<int> generator_indices;
    std::string reason;
};

EvenPartInfo extended_even_part_info(const ModelPtr& model);

} // namespace lefzeta
