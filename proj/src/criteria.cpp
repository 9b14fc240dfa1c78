#include "lefzeta/criteria.hpp"

#include "lefzeta/errors.hpp"

#include <cstdint>
#include <stdexcept>

namespace lefzeta {

namespace {

std::string join_ints(const std::vector<int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            out += ", ";
        out += std::to_string(xs[i]);
    }
    return out;
}

std::optional<NonvanishingWitness> first_nonzero_lefschetz(const RingEndomorphism& f,
                                                           long horizon) {
    RingEndomorphism iterate = f;
    for (long k = 1; k <= horizon; ++k) {
        Rational value = alternating_trace(iterate);
        if (value != 0)
            return NonvanishingWitness{k, value};
        if (k < horizon)
            iterate = compose(iterate, f);
    }
    return std::nullopt;
}

} // namespace

std::string shape_name(ShapeKind kind) {
    switch (kind) {
    case ShapeKind::EvenOnly:
        return "even-only";
    case ShapeKind::RationalExterior:
        return "rational-exterior";
    case ShapeKind::ExtendedRationalExterior:
        return "extended-rational-exterior";
    case ShapeKind::GeneralTensor:
        return "general-tensor";
    case ShapeKind::Unrecognized:
        return "unrecognized";
    }
    return "unrecognized";
}

bool satisfies_even_only(const ModelPtr& model) {
    return model->presentation.odd_generators.empty();
}

bool satisfies_exterior_conditions(const ModelPtr& model) {
    return !model->presentation.hybrid() && model->presentation.even.trivial();
}

bool satisfies_extended_conditions(const ModelPtr& model) {
    const auto& p = model->presentation;
    if (p.hybrid())
        return false;
    EvenPartInfo info = extended_even_part_info(model);
    if (!info.extended_shaped)
        return false;
    // The product of all generators, odd then even, must be nonzero and span
    // the (then one-dimensional) top degree.
    std::uint64_t all =
        p.odd_count() == 0 ? 0 : ((std::uint64_t(1) << p.odd_count()) - 1);
    AlgebraElement prod = AlgebraElement::monomial(BasisElement{all, 0});
    for (int g : info.generator_indices)
        prod = cup(prod, AlgebraElement::monomial(BasisElement{0, std::uint32_t(g)}), p);
    if (prod.is_zero())
        return false;
    auto deg = homogeneous_degree(p, prod);
    return deg.has_value() && *deg == model->basis.top_degree && model->basis.dim(*deg) == 1;
}

bool satisfies_general_tensor(const ModelPtr& model) {
    return !model->presentation.hybrid();
}

ShapeInfo recognize_shape(const ModelPtr& model) {
    const auto& p = model->presentation;
    if (p.hybrid()) {
        QuotientBasis q = quotient_basis(model);
        for (int d : q.degrees_with_dim()) {
            if (d % 2 == 0)
                return {ShapeKind::Unrecognized,
                        "not rational exterior: even indecomposable in degree " +
                            std::to_string(d)};
        }
        return {ShapeKind::Unrecognized,
                "not rational exterior: products of odd classes vanish by an explicit relation"};
    }
    if (p.odd_generators.empty())
        return {ShapeKind::EvenOnly, "all cohomology in even degrees"};
    if (p.even.trivial()) {
        int n = p.odd_count();
        return {ShapeKind::RationalExterior,
                "free exterior algebra on " + std::to_string(n) + " odd generator" +
                    (n == 1 ? "" : "s")};
    }
    EvenPartInfo info = extended_even_part_info(model);
    if (satisfies_extended_conditions(model)) {
        std::vector<int> degrees;
        for (int g : info.generator_indices)
            degrees.push_back(p.even.basis[g - 1].degree);
        return {ShapeKind::ExtendedRationalExterior,
                "square-zero even generators in degrees " + join_ints(degrees)};
    }
    return {ShapeKind::GeneralTensor,
            info.extended_shaped ? "the product of all generators does not span the top degree"
                                 : info.reason};
}

BettiExteriorCheck betti_compatible_with_exterior(const std::vector<int>& betti) {
    BettiExteriorCheck out;
    if (betti.empty() || betti[0] != 1) {
        out.reason = "profile must start with 1";
        return out;
    }
    long total = 0;
    for (int b : betti) {
        if (b < 0) {
            out.reason = "negative entry in the profile";
            return out;
        }
        total += b;
    }
    if ((total & (total - 1)) != 0) {
        out.reason = "total dimension " + std::to_string(total) + " is not a power of 2";
        return out;
    }

    std::vector<Rational> coeffs;
    coeffs.reserve(betti.size());
    for (int b : betti)
        coeffs.emplace_back(b);
    Polynomial poly = Polynomial::from_coeffs(std::move(coeffs));

    // Each factor (1 + t^d) is forced by the lowest remaining term.
    while (!poly.is_one()) {
        int d = 0;
        for (int i = 1; i <= poly.degree(); ++i) {
            if (poly.coeff(i) != 0) {
                d = i;
                break;
            }
        }
        if (d == 0) {
            out.reason = "profile polynomial is not a product of factors (1 + t^d)";
            return out;
        }
        if (poly.coeff(d) < 0) {
            out.reason = "peeling the forced factors leaves a negative coefficient at t^" +
                         std::to_string(d);
            return out;
        }
        if (d % 2 == 0) {
            out.reason = "a generator of even degree " + std::to_string(d) + " would be required";
            return out;
        }
        auto [quotient, remainder] =
            Polynomial::divmod(poly, Polynomial::monomial(d) + Polynomial::one());
        if (!remainder.is_zero()) {
            out.reason = "division by (1 + t^" + std::to_string(d) + ") leaves a remainder";
            return out;
        }
        out.degrees.push_back(d);
        poly = quotient;
    }
    out.compatible = true;
    return out;
}

Rational lefschetz_via_duan(const QMatrix& odd_block, long k) {
    if (k < 1)
        throw std::invalid_argument("iterate must be >= 1");
    QMatrix pk = odd_block.pow(k);
    return (QMatrix::identity(pk.rows()) - pk).det();
}

Rational lefschetz_via_duan(const RingEndomorphism& f, long k) {
    if (!satisfies_exterior_conditions(f.model()))
        throw shape_error(
            "the odd-indecomposable determinant formula requires a free exterior presentation");
    return lefschetz_via_duan(induced_map(f, quotient_basis(f.model())).odd_block, k);
}

Rational lefschetz_via_extended(const QMatrix& odd_block, const QMatrix& even_block, long n) {
    if (n < 1)
        throw std::invalid_argument("iterate must be >= 1");
    QMatrix on = odd_block.pow(n);
    QMatrix en = even_block.pow(n);
    return (QMatrix::identity(on.rows()) - on).det() *
           (QMatrix::identity(en.rows()) + en).det();
}

Rational lefschetz_via_extended(const RingEndomorphism& f, long n) {
    if (!satisfies_extended_conditions(f.model()))
        throw shape_error(
            "the product formula requires square-zero even generators spanning the top degree");
    InducedMap im = induced_map(f, quotient_basis(f.model()));
    return lefschetz_via_extended(im.odd_block, im.even_block, n);
}

NonvanishingWitness even_only_nonvanishing(const RingEndomorphism& f) {
    if (!satisfies_even_only(f.model()))
        throw shape_error(
            "the nonvanishing argument requires a presentation with no odd generators");
    auto w = first_nonzero_lefschetz(f, f.model()->basis.total_dimension);
    if (!w)
        throw std::logic_error("no nonzero Lefschetz number within the certificate horizon; "
                               "the even-cohomology argument guarantees one");
    return *w;
}

std::string lppf_classification_name(LppfClassification c) {
    switch (c) {
    case LppfClassification::NotLppf:
        return "not-lppf";
    case LppfClassification::LambdaOne:
        return "lambda-one";
    case LppfClassification::MinusOnePair:
        return "minus-one-pair";
    }
    return "not-lppf";
}

LppfClassification classify_lppf_extended(const EigenSummary& eigen) {
    if (eigen.has_eigenvalue_one_odd)
        return LppfClassification::LambdaOne;
    if (eigen.has_eigenvalue_minus_one_odd && eigen.has_eigenvalue_minus_one_even)
        return LppfClassification::MinusOnePair;
    return LppfClassification::NotLppf;
}

LppfClassification classify_lppf_extended(const RingEndomorphism& f) {
    if (!satisfies_extended_conditions(f.model()))
        throw shape_error(
            "the vanishing classification requires square-zero even generators spanning "
            "the top degree");
    return classify_lppf_extended(eigen_summary(induced_map(f, quotient_basis(f.model()))));
}

Verdict periodic_point_verdict(const RingEndomorphism& f) {
    return periodic_point_verdict(f, recognize_shape(f.model()).kind);
}

Verdict periodic_point_verdict(const RingEndomorphism& f, ShapeKind branch) {
    const ModelPtr& model = f.model();
    long horizon = model->basis.total_dimension;

    Verdict v;
    switch (branch) {
    case ShapeKind::EvenOnly: {
        if (!satisfies_even_only(model))
            throw shape_error(
                "the even-cohomology criterion requires a presentation with no odd generators");
        NonvanishingWitness w = even_only_nonvanishing(f);
        v.has_periodic_point = Answer::Yes;
        v.criterion = "even-cohomology-nonvanishing";
        v.witness_power = w.k;
        v.explanation =
            "all cohomology sits in even degrees, so the Lefschetz numbers cannot all vanish; "
            "L(f^" +
            std::to_string(w.k) + ") = " + rational_to_string(w.value);
        return v;
    }
    case ShapeKind::RationalExterior: {
        if (!satisfies_exterior_conditions(model))
            throw shape_error(
                "the exterior eigenvalue criterion requires a free exterior presentation");
        EigenSummary eigen = eigen_summary(induced_map(f, quotient_basis(model)));
        v.criterion = "exterior-eigenvalue-criterion";
        if (!eigen.has_eigenvalue_one_odd) {
            v.has_periodic_point = Answer::Yes;
            v.explanation = "the induced map on odd indecomposables has no eigenvalue 1 "
                            "(characteristic polynomial at 1 equals " +
                            rational_to_string(eigen.odd_char_poly(Rational(1))) +
                            "), so some Lefschetz number is nonzero";
        } else {
            v.explanation = "eigenvalue 1 on the odd indecomposables makes every Lefschetz "
                            "number vanish (Lefschetz periodic point free); the theory is silent";
        }
        break;
    }
    case ShapeKind::ExtendedRationalExterior: {
        if (!satisfies_extended_conditions(model))
            throw shape_error("the extended product formula requires square-zero even "
                              "generators spanning the top degree");
        LppfClassification c =
            classify_lppf_extended(eigen_summary(induced_map(f, quotient_basis(model))));
        v.criterion = "extended-product-formula";
        if (c == LppfClassification::NotLppf) {
            v.has_periodic_point = Answer::Yes;
            v.explanation = "no eigenvalue 1 on the odd block and no simultaneous -1 pair, so "
                            "det(I - O^n) det(I + E^n) cannot vanish for every n";
        } else if (c == LppfClassification::LambdaOne) {
            v.explanation = "eigenvalue 1 on the odd block makes det(I - O^n) vanish for "
                            "every n (Lefschetz periodic point free)";
        } else {
            v.explanation = "eigenvalue -1 on the odd block kills the even iterates and "
                            "eigenvalue -1 on the even block kills the odd ones (Lefschetz "
                            "periodic point free)";
        }
        break;
    }
    case ShapeKind::GeneralTensor: {
        if (!satisfies_general_tensor(model))
            throw shape_error("the root-of-unity criterion requires a tensor presentation");
        EigenSummary eigen = eigen_summary(induced_map(f, quotient_basis(model)));
        v.criterion = "odd-root-of-unity-criterion";
        if (eigen.root_of_unity_orders_odd.empty()) {
            v.has_periodic_point = Answer::Yes;
            v.explanation = "no root of unity among the eigenvalues of the odd indecomposable "
                            "block, so the Lefschetz numbers cannot all vanish";
        } else {
            v.explanation = "the odd characteristic polynomial vanishes on primitive roots of "
                            "unity (orders " +
                            join_ints(eigen.root_of_unity_orders_odd) +
                            "); the criterion is silent";
        }
        break;
    }
    case ShapeKind::Unrecognized:
        v.criterion = "nonzero-lefschetz-number";
        v.explanation = "no recognized shape; only the direct Lefschetz scan applies";
        break;
    }

    if (v.has_periodic_point == Answer::Yes) {
        auto w = first_nonzero_lefschetz(f, horizon);
        if (!w)
            throw std::logic_error("internal inconsistency: the criterion promised a nonzero "
                                   "Lefschetz number but none appears up to the horizon");
        v.witness_power = w->k;
        v.explanation += "; L(f^" + std::to_string(w->k) + ") = " + rational_to_string(w->value);
        return v;
    }

    // The branch stayed silent; a nonzero Lefschetz number still settles it.
    if (auto w = first_nonzero_lefschetz(f, horizon)) {
        Verdict direct;
        direct.has_periodic_point = Answer::Yes;
        direct.criterion = "nonzero-lefschetz-number";
        direct.witness_power = w->k;
        direct.explanation = "L(f^" + std::to_string(w->k) + ") = " +
                             rational_to_string(w->value) +
                             " is nonzero, which forces a periodic point of period " +
                             std::to_string(w->k);
        return direct;
    }
    v.explanation += "; no nonzero Lefschetz number up to the horizon " + std::to_string(horizon);
    return v;
}

} // namespace lefzeta
