#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lefzeta/criteria.hpp"
#include "lefzeta/errors.hpp"
#include "lefzeta/spaces.hpp"
#include "support/random_models.hpp"

using namespace lefzeta;
using lefzeta::testing::Rng;

namespace {

ModelPtr fixture_model(const char* name) {
    return make_model(*find_fixture(name)->presentation);
}

AlgebraElement mono(std::uint64_t mask, std::uint32_t even = 0, Rational c = Rational(1)) {
    return AlgebraElement::monomial(BasisElement{mask, even}, c);
}

ModelPtr truncated_tensor_model() {
    // Lambda(x3) tensor q[c]/(c^3): a tensor shape that is not extended
    RingPresentation p =
        product(sphere(3), lefzeta::testing::truncated_polynomial_presentation(2, 3));
    p.name = "s3_x_truncated";
    return make_model(p);
}

} // namespace

TEST_CASE("shape recognition across the fixtures") {
    CHECK(recognize_shape(fixture_model("sphere1")).kind == ShapeKind::RationalExterior);
    CHECK(recognize_shape(fixture_model("sphere3")).kind == ShapeKind::RationalExterior);
    CHECK(recognize_shape(fixture_model("s3xs3")).kind == ShapeKind::RationalExterior);
    CHECK(recognize_shape(fixture_model("s7_bundle")).kind == ShapeKind::RationalExterior);
    CHECK(recognize_shape(fixture_model("sphere2")).kind == ShapeKind::EvenOnly);
    CHECK(recognize_shape(fixture_model("s2xs4")).kind == ShapeKind::EvenOnly);
    CHECK(recognize_shape(fixture_model("s3xs2")).kind == ShapeKind::ExtendedRationalExterior);

    auto s5 = recognize_shape(fixture_model("s5_bundle"));
    CHECK(s5.kind == ShapeKind::Unrecognized);
    CHECK(s5.detail.find("even indecomposable in degree 8") != std::string::npos);

    auto general = recognize_shape(truncated_tensor_model());
    CHECK(general.kind == ShapeKind::GeneralTensor);
    CHECK(!general.detail.empty());

    CHECK(shape_name(ShapeKind::ExtendedRationalExterior) == "extended-rational-exterior");
    CHECK(shape_name(ShapeKind::Unrecognized) == "unrecognized");
}

TEST_CASE("branch predicates nest as documented") {
    auto exterior = fixture_model("s3xs3");
    CHECK(satisfies_exterior_conditions(exterior));
    CHECK(satisfies_extended_conditions(exterior));
    CHECK(satisfies_general_tensor(exterior));
    CHECK(!satisfies_even_only(exterior));

    auto extended = fixture_model("s3xs2");
    CHECK(!satisfies_exterior_conditions(extended));
    CHECK(satisfies_extended_conditions(extended));
    CHECK(satisfies_general_tensor(extended));

    auto tensor = truncated_tensor_model();
    CHECK(!satisfies_extended_conditions(tensor));
    CHECK(satisfies_general_tensor(tensor));

    auto hybrid = fixture_model("s5_bundle");
    CHECK(!satisfies_general_tensor(hybrid));
    CHECK(!satisfies_extended_conditions(hybrid));
}

TEST_CASE("betti profiles compatible with exterior algebras") {
    auto torus = betti_compatible_with_exterior({1, 2, 1});
    CHECK(torus.compatible);
    CHECK(torus.degrees == std::vector<int>{1, 1});

    auto s3s3 = betti_compatible_with_exterior({1, 0, 0, 2, 0, 0, 1});
    CHECK(s3s3.compatible);
    CHECK(s3s3.degrees == std::vector<int>{3, 3});

    auto sphere = betti_compatible_with_exterior({1, 0, 0, 0, 0, 1});
    CHECK(sphere.compatible);
    CHECK(sphere.degrees == std::vector<int>{5});
}

TEST_CASE("betti rejections name the first obstruction") {
    auto kodaira = betti_compatible_with_exterior(kodaira_thurston_betti());
    CHECK(!kodaira.compatible);
    CHECK(kodaira.reason == "total dimension 12 is not a power of 2");

    auto wrong_start = betti_compatible_with_exterior({2, 2});
    CHECK(!wrong_start.compatible);
    CHECK(wrong_start.reason.find("start with 1") != std::string::npos);

    auto negative = betti_compatible_with_exterior({1, -1, 1, 1});
    CHECK(!negative.compatible);
    CHECK(negative.reason.find("negative") != std::string::npos);

    // profile of S3 x S2: power of two, but needs an even-degree generator
    auto even_needed = betti_compatible_with_exterior({1, 0, 1, 1, 0, 1});
    CHECK(!even_needed.compatible);
    CHECK(even_needed.reason.find("even degree") != std::string::npos);

    // power of two but the forced factor does not divide
    auto remainder = betti_compatible_with_exterior({1, 1, 1, 0, 1});
    CHECK(!remainder.compatible);
    CHECK(remainder.reason.find("remainder") != std::string::npos);

    CHECK(!betti_compatible_with_exterior({}).compatible);
}

TEST_CASE("determinant form of the exterior Lefschetz numbers") {
    Rng rng(81);
    for (int trial = 0; trial < 80; ++trial) {
        ModelPtr model;
        auto f = lefzeta::testing::random_exterior_endo(rng, model);
        for (long k = 1; k <= 4; ++k) {
            CHECK(lefschetz_via_duan(f, k) == alternating_trace(power(f, k)));
        }
    }
    CHECK_THROWS_AS(lefschetz_via_duan(identity_endomorphism(fixture_model("s3xs2")), 1),
                    shape_error);
}

TEST_CASE("product form over extended shapes") {
    Rng rng(82);
    for (int trial = 0; trial < 80; ++trial) {
        ModelPtr model;
        auto f = lefzeta::testing::random_extended_endo(rng, model);
        for (long n = 1; n <= 4; ++n) {
            CHECK(lefschetz_via_extended(f, n) == alternating_trace(power(f, n)));
        }
    }
    CHECK_THROWS_AS(lefschetz_via_extended(identity_endomorphism(truncated_tensor_model()), 1),
                    shape_error);
}

TEST_CASE("even-only maps cannot vanish forever") {
    auto model = fixture_model("sphere2");
    auto flip = from_generator_images(model, {{"y2", mono(0, 1, Rational(-1))}});
    auto witness = even_only_nonvanishing(flip);
    CHECK(witness.k == 2);
    CHECK(witness.value == Rational(2));

    Rng rng(83);
    for (int trial = 0; trial < 60; ++trial) {
        ModelPtr m;
        auto f = lefzeta::testing::random_even_endo(rng, m);
        auto w = even_only_nonvanishing(f);
        CHECK(w.k >= 1);
        CHECK(w.k <= m->basis.total_dimension);
        CHECK(w.value != 0);
        CHECK(lefschetz_number(f, w.k) == w.value);
        for (long j = 1; j < w.k; ++j) CHECK(lefschetz_number(f, j) == 0);
    }

    CHECK_THROWS_AS(even_only_nonvanishing(identity_endomorphism(fixture_model("sphere3"))),
                    shape_error);
}

TEST_CASE("classification of vanishing mechanisms") {
    auto s3 = fixture_model("sphere3");
    CHECK(classify_lppf_extended(identity_endomorphism(s3)) == LppfClassification::LambdaOne);
    auto doubling = from_generator_images(s3, {{"x3", mono(1, 0, Rational(2))}});
    CHECK(classify_lppf_extended(doubling) == LppfClassification::NotLppf);

    auto s3xs2 = fixture_model("s3xs2");
    auto sign = from_generator_images(
        s3xs2, {{"x3", mono(1, 0, Rational(-1))}, {"y2", mono(0, 1, Rational(-1))}});
    CHECK(classify_lppf_extended(sign) == LppfClassification::MinusOnePair);
    CHECK(is_lppf(sign));

    // odd block alone at -1 is not enough: the even iterates survive
    auto half_sign = from_generator_images(
        s3xs2, {{"x3", mono(1, 0, Rational(-1))}, {"y2", mono(0, 1, Rational(2))}});
    CHECK(classify_lppf_extended(half_sign) == LppfClassification::NotLppf);
    CHECK(!is_lppf(half_sign));

    CHECK(lppf_classification_name(LppfClassification::MinusOnePair) == "minus-one-pair");

    CHECK_THROWS_AS(classify_lppf_extended(identity_endomorphism(truncated_tensor_model())),
                    shape_error);
}

TEST_CASE("classification agrees with the zeta function on random extended maps") {
    Rng rng(84);
    for (int trial = 0; trial < 80; ++trial) {
        ModelPtr model;
        auto f = lefzeta::testing::random_extended_endo(rng, model);
        bool silent = classify_lppf_extended(f) != LppfClassification::NotLppf;
        CHECK(silent == is_lppf(f));
    }
}

TEST_CASE("verdicts by branch") {
    // exterior, eigenvalue 1 absent: yes with a witness power
    auto s3 = fixture_model("sphere3");
    auto doubling = from_generator_images(s3, {{"x3", mono(1, 0, Rational(2))}});
    auto v = periodic_point_verdict(doubling);
    CHECK(v.has_periodic_point == Answer::Yes);
    CHECK(v.criterion == "exterior-eigenvalue-criterion");
    CHECK(v.witness_power == 1);
    CHECK(v.explanation.find("L(f^1) = -1") != std::string::npos);

    // exterior, eigenvalue 1 present: unknown
    auto v_id = periodic_point_verdict(identity_endomorphism(s3));
    CHECK(v_id.has_periodic_point == Answer::Unknown);
    CHECK(v_id.criterion == "exterior-eigenvalue-criterion");
    CHECK(!v_id.witness_power.has_value());

    // even-only: always yes
    auto s2 = fixture_model("sphere2");
    auto flip = from_generator_images(s2, {{"y2", mono(0, 1, Rational(-1))}});
    auto v_even = periodic_point_verdict(flip);
    CHECK(v_even.has_periodic_point == Answer::Yes);
    CHECK(v_even.criterion == "even-cohomology-nonvanishing");
    CHECK(v_even.witness_power == 2);

    // extended, not lppf: yes through the product formula
    auto s3xs2 = fixture_model("s3xs2");
    auto stretch = from_generator_images(
        s3xs2, {{"x3", mono(1, 0, Rational(2))}, {"y2", mono(0, 1, Rational(3))}});
    auto v_ext = periodic_point_verdict(stretch);
    CHECK(v_ext.has_periodic_point == Answer::Yes);
    CHECK(v_ext.criterion == "extended-product-formula");

    // extended, minus-one pair: unknown and genuinely lppf
    auto sign = from_generator_images(
        s3xs2, {{"x3", mono(1, 0, Rational(-1))}, {"y2", mono(0, 1, Rational(-1))}});
    auto v_sign = periodic_point_verdict(sign);
    CHECK(v_sign.has_periodic_point == Answer::Unknown);
    CHECK(v_sign.criterion == "extended-product-formula");
}

TEST_CASE("general tensor branch uses the root-of-unity test") {
    auto model = truncated_tensor_model();
    // no odd root of unity: x3 -> 2 x3
    auto stretch = from_generator_images(model, {{"x3", mono(1, 0, Rational(2))},
                                                 {"c1", mono(0, 1)},
                                                 {"c2", mono(0, 2)}});
    auto v = periodic_point_verdict(stretch);
    CHECK(v.has_periodic_point == Answer::Yes);
    CHECK(v.criterion == "odd-root-of-unity-criterion");

    // odd eigenvalue -1 is a root of unity, so the branch itself is silent,
    // but the direct Lefschetz scan still finds a nonzero number
    auto half = from_generator_images(model, {{"x3", mono(1, 0, Rational(-1))},
                                              {"c1", mono(0, 1)},
                                              {"c2", mono(0, 2)}});
    auto v_half = periodic_point_verdict(half);
    CHECK(v_half.has_periodic_point == Answer::Yes);
    CHECK(v_half.criterion == "nonzero-lefschetz-number");
    CHECK(v_half.witness_power == 1);
}

TEST_CASE("unrecognized shapes fall back to the direct scan") {
    auto model = fixture_model("s5_bundle");
    std::map<std::string, AlgebraElement> images = {
        {"a3", mono(0b001, 0, Rational(2))}, {"a3'", mono(0b010)},
        {"b8", mono(0, 1)},                  {"b8'", mono(0, 2, Rational(2))},
        {"w11", mono(0b100, 0, Rational(2))}};
    auto f = from_generator_images(model, images);
    auto v = periodic_point_verdict(f);
    CHECK(v.has_periodic_point == Answer::Yes);
    CHECK(v.criterion == "nonzero-lefschetz-number");

    auto v_id = periodic_point_verdict(identity_endomorphism(model));
    CHECK(v_id.has_periodic_point == Answer::Unknown);
    CHECK(v_id.explanation.find("no nonzero Lefschetz number") != std::string::npos);
}

TEST_CASE("forced branches check their preconditions") {
    auto s3 = fixture_model("sphere3");
    auto doubling = from_generator_images(s3, {{"x3", mono(1, 0, Rational(2))}});
    CHECK_THROWS_AS(periodic_point_verdict(doubling, ShapeKind::EvenOnly), shape_error);

    auto forced = periodic_point_verdict(doubling, ShapeKind::GeneralTensor);
    CHECK(forced.has_periodic_point == Answer::Yes);
    CHECK(forced.criterion == "odd-root-of-unity-criterion");

    auto tensor = truncated_tensor_model();
    auto id = identity_endomorphism(tensor);
    CHECK_THROWS_AS(periodic_point_verdict(id, ShapeKind::RationalExterior), shape_error);
    CHECK_THROWS_AS(periodic_point_verdict(id, ShapeKind::ExtendedRationalExterior), shape_error);
}

TEST_CASE("every yes has a certified witness") {
    Rng rng(85);
    for (int trial = 0; trial < 80; ++trial) {
        ModelPtr model;
        auto f = lefzeta::testing::random_tensor_endo(rng, model);
        auto v = periodic_point_verdict(f);
        if (v.has_periodic_point == Answer::Yes) {
            REQUIRE(v.witness_power.has_value());
            CHECK(*v.witness_power <= model->basis.total_dimension);
            CHECK(lefschetz_number(f, *v.witness_power) != 0);
        } else {
            CHECK(is_lppf(f));
        }
    }
}
