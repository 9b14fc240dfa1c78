#pragma once

#include "lefzeta/matrix.hpp"
#include "lefzeta/presentation.hpp"

#include <map>
#include <string>
#include <vector>

namespace lefzeta {

// Degree-preserving linear self-map of a model, one exact matrix per degree
// (columns = images of the canonical basis). The degree-0 block is pinned to
// [1]: everything in sight fixes the unit class.
class GradedLinearMap {
public:
    GradedLinearMap(ModelPtr model, std::vector<QMatrix> blocks);
    static GradedLinearMap identity(ModelPtr model);

    const ModelPtr& model() const { return model_; }
    const std::vector<QMatrix>& blocks() const { return blocks_; }
    const QMatrix& block(int degree) const;
    int top_degree() const { return static_cast<int>(blocks_.size()) - 1; }

    AlgebraElement apply(const AlgebraElement& a) const;
    bool same_model(const GradedLinearMap& o) const;
    bool operator==(const GradedLinearMap& o) const;

private:
    ModelPtr model_;
    std::vector<QMatrix> blocks_;
};

// A GradedLinearMap that has passed the multiplicativity check; construct via
// from_generator_images or as_endomorphism.
struct RingEndomorphism {
    GradedLinearMap map;

    const ModelPtr& model() const { return map.model(); }
    const QMatrix& block(int degree) const { return map.block(degree); }
};

// Builds the multiplicative extension of generator images, keyed by class
// name. Required images: every odd generator; every even basis element except
// that products may be omitted when the even part is extended-shaped (at most
// one indecomposable per degree, generators squaring to zero), in which case
// they are derived from the generator images. Hybrid presentations need an
// image for every class. Throws validation_error on missing images, degree
// mismatches, and relation violations.
RingEndomorphism from_generator_images(const ModelPtr& model,
                                       const std::map<std::string, AlgebraElement>& images);

RingEndomorphism identity_endomorphism(ModelPtr model);

// F(a . b) = F(a) . F(b) over all basis pairs, and F(1) = 1. Reports the
// first failing pair by name.
ValidationResult validate_multiplicative(const GradedLinearMap& f);

// Checked promotion; throws validation_error when not multiplicative.
RingEndomorphism as_endomorphism(GradedLinearMap f);

// compose(f, g) = f after g.
GradedLinearMap compose(const GradedLinearMap& f, const GradedLinearMap& g);
RingEndomorphism compose(const RingEndomorphism& f, const RingEndomorphism& g);

// k-fold composition, k >= 1, by binary powering.
GradedLinearMap power(const GradedLinearMap& f, long k);
RingEndomorphism power(const RingEndomorphism& f, long k);

Rational trace_degree(const GradedLinearMap& f, int degree);
// Sum of all per-degree traces, no signs.
Rational unsigned_trace(const GradedLinearMap& f);
// Lefschetz number: sum of (-1)^degree * trace.
Rational alternating_trace(const GradedLinearMap& f);

inline Rational trace_degree(const RingEndomorphism& f, int d) { return trace_degree(f.map, d); }
inline Rational unsigned_trace(const RingEndomorphism& f) { return unsigned_trace(f.map); }
inline Rational alternating_trace(const RingEndomorphism& f) { return alternating_trace(f.map); }

// Traces of the two projected factor maps of a tensor presentation: the odd
// factor lives on the odd-only monomials (even part = unit), the even factor
// on the even-only ones. Unsigned traces multiply to unsigned_trace(F); the
// signed variants multiply to alternating_trace(F). Even degrees carry sign
// +1, so the signed even trace equals the unsigned one. Rejects hybrid
// presentations.
struct TensorTraceSplit {
    Rational odd_trace;
    Rational even_trace;
    Rational odd_trace_signed;
    Rational even_trace_signed;
};
TensorTraceSplit tensor_trace_decomposition(const RingEndomorphism& f);

} // namespace lefzeta
