#pragma once

#include "lefzeta/presentation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lefzeta {

// Odd n -> one exterior generator x_n; even n -> one even class y_n with
// y_n^2 = 0.
RingPresentation sphere(int n);

// Tensor product of two presentations: odd generators concatenated, even
// tables tensored class-by-class. Colliding names from the right factor pick
// up a prime ('); the Poincare polynomial multiplies. Hybrid inputs are not
// supported.
RingPresentation product(const RingPresentation& a, const RingPresentation& b);

// A fiber sphere of odd dimension >= the base's top degree splits rationally:
// the result is the base with one extra odd generator of that degree. The
// base dimension defaults to the top nonzero cohomological degree and can be
// overridden when the intended manifold dimension differs. Even fiber
// dimensions, and fibers below the base dimension, are rejected
// (validation_error) — the splitting can genuinely fail there.
RingPresentation odd_sphere_bundle(const RingPresentation& base, int fiber_dim,
                                   std::optional<int> base_dim = std::nullopt);

// (1, 3, 4, 3, 1): a profile whose total dimension 12 rules out any free
// exterior algebra on odd generators.
std::vector<int> kodaira_thurston_betti();

// An 11-dimensional total space of a 5-sphere bundle where all products of
// degree-3 classes vanish, so the degree-8 classes are indecomposable and the
// ring cannot be a free exterior algebra. Degree 3 x degree 8 products are
// completed to the duality pairing a_i . b_j = delta_ij . top — one
// consistent choice among several; only the degree-3 vanishing is forced.
RingPresentation s5_bundle_fixture();

struct Fixture {
    std::string name;
    std::string description;
    std::optional<RingPresentation> presentation; // exactly one of these two is set
    std::optional<std::vector<int>> betti;
};

// Deterministic registry backing the CLI's `fixtures` command.
const std::vector<Fixture>& fixtures();
const Fixture* find_fixture(const std::string& name);

} // namespace lefzeta
