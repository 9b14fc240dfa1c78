#pragma once

#include "lefzeta/indecomposables.hpp"
#include "lefzeta/lefschetz.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lefzeta {

enum class ShapeKind {
    EvenOnly,                 // no odd generators
    RationalExterior,         // free exterior algebra on odd generators
    ExtendedRationalExterior, // exterior part tensor square-zero even generators
    GeneralTensor,            // any other tensor presentation
    Unrecognized              // hybrid quotients
};

// Stable kebab-case name, e.g. "rational-exterior".
std::string shape_name(ShapeKind kind);

struct ShapeInfo {
    ShapeKind kind = ShapeKind::Unrecognized;
    std::string detail; // witness: what the shape provides / which axiom failed
};

// Priority: hybrid quotient -> Unrecognized; no odd generators -> EvenOnly;
// trivial even table -> RationalExterior; square-zero even generators whose
// full product spans the top degree -> ExtendedRationalExterior; otherwise
// GeneralTensor.
ShapeInfo recognize_shape(const ModelPtr& model);

// Branch preconditions, reusable for forced --mode requests. Note the
// inclusions: every exterior presentation satisfies the extended conditions
// (empty even part), and every non-hybrid presentation is a general tensor.
bool satisfies_even_only(const ModelPtr& model);
bool satisfies_exterior_conditions(const ModelPtr& model);
bool satisfies_extended_conditions(const ModelPtr& model);
bool satisfies_general_tensor(const ModelPtr& model);

// Could `betti` be the profile of a free exterior algebra on odd-degree
// generators? Fast necessary check first (total dimension a power of two),
// then factors (1 + t^d) are peeled off the generating polynomial; the
// lowest-degree factor is forced at every step, so the greedy walk is an
// exhaustive search.
struct BettiExteriorCheck {
    bool compatible = false;
    std::vector<int> degrees; // odd generator degrees, ascending, when compatible
    std::string reason;       // first obstruction otherwise
};
BettiExteriorCheck betti_compatible_with_exterior(const std::vector<int>& betti);

// L(f^k) = det(I - M^k) over the odd indecomposables, the symmetric-function
// form of prod(1 - lambda_i^k); no eigenvalues are ever computed. The checked
// form requires a trivial even table (shape_error otherwise).
Rational lefschetz_via_duan(const RingEndomorphism& f, long k);
Rational lefschetz_via_duan(const QMatrix& odd_block, long k);

// L(f^n) = det(I - O^n) * det(I + E^n) over the odd/even indecomposables.
// The checked form requires satisfies_extended_conditions (shape_error
// otherwise); with an empty even part it reduces to the determinant formula
// above.
Rational lefschetz_via_extended(const RingEndomorphism& f, long n);
Rational lefschetz_via_extended(const QMatrix& odd_block, const QMatrix& even_block, long n);

// Smallest k <= D (total dimension) with L(f^k) != 0, for presentations with
// no odd generators. Such k always exists: every trace is a power sum of one
// nonempty eigenvalue multiset containing the unit's 1, and power sums of a
// multiset of size D cannot all vanish through D unless every eigenvalue is
// zero. Nonexistence is an internal failure (std::logic_error).
struct NonvanishingWitness {
    long k = 0;
    Rational value;
};
NonvanishingWitness even_only_nonvanishing(const RingEndomorphism& f);

// Which vanishing mechanism holds over an extended shape: LambdaOne = the odd
// block has eigenvalue 1 (kills det(I - O^n) for every n); MinusOnePair =
// odd and even blocks both have eigenvalue -1 (the odd one kills even
// iterates, the even one kills odd iterates). Anything else is NotLppf.
enum class LppfClassification { NotLppf, LambdaOne, MinusOnePair };

std::string lppf_classification_name(LppfClassification c);

LppfClassification classify_lppf_extended(const RingEndomorphism& f);
LppfClassification classify_lppf_extended(const EigenSummary& eigen);

// A nonzero Lefschetz number forces a periodic point; nothing here ever
// claims the converse, so the answer is Yes or Unknown, never "No".
enum class Answer { Yes, Unknown };

struct Verdict {
    Answer has_periodic_point = Answer::Unknown;
    std::string criterion;             // stable tag of the rule that settled it
    std::string explanation;           // sentence with the witnessing numbers
    std::optional<long> witness_power; // smallest k <= D with L(f^k) != 0
};

// Decides the periodic-point question along the recognized shape's branch
// (or a forced one; shape_error when the presentation does not satisfy that
// branch's hypotheses). Every Yes is cross-checked against a nonzero
// Lefschetz number within the certificate horizon D; a branch that stays
// silent falls back to scanning L(f^k) for k <= D directly.
Verdict periodic_point_verdict(const RingEndomorphism& f);
Verdict periodic_point_verdict(const RingEndomorphism& f, ShapeKind branch);

} // namespace lefzeta
