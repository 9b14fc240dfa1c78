#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lefzeta/errors.hpp"
#include "lefzeta/report.hpp"
#include "lefzeta/spaces.hpp"
#include "support/random_models.hpp"

#include "json.hpp"

using namespace lefzeta;
using lefzeta::testing::Rng;

namespace {

AlgebraElement mono(std::uint64_t mask, std::uint32_t even = 0, Rational c = Rational(1)) {
    return AlgebraElement::monomial(BasisElement{mask, even}, c);
}

RingEndomorphism sphere3_doubling() {
    auto model = make_model(*find_fixture("sphere3")->presentation);
    return from_generator_images(model, {{"x3", mono(1, 0, Rational(2))}});
}

} // namespace

TEST_CASE("analysis of the doubling map") {
    auto report = analyze(sphere3_doubling());
    CHECK(report.space == "sphere3");
    CHECK(report.shape.kind == ShapeKind::RationalExterior);
    CHECK(report.betti == std::vector<int>{1, 0, 0, 1});
    CHECK(report.total_dimension == 2);
    CHECK(report.horizon == 10);
    REQUIRE(report.lefschetz.size() == 10);
    CHECK(report.lefschetz[0] == Rational(-1));
    CHECK(report.lefschetz[1] == Rational(-3));
    CHECK(report.lefschetz[2] == Rational(-7));
    CHECK(report.zeta.to_string() == "(1 - 2t) / (1 - t)");
    CHECK(!report.lppf);
    REQUIRE(report.classification.has_value()); // exterior shapes carry the label
    CHECK(*report.classification == LppfClassification::NotLppf);
    CHECK(report.eigen.odd_char_poly ==
          Polynomial::monomial(1) - Polynomial::one() * Rational(2));
    CHECK(report.verdict.has_periodic_point == Answer::Yes);
    CHECK(report.verdict.witness_power == 1);
}

TEST_CASE("text rendering carries the golden lines") {
    auto text = render_text(analyze(sphere3_doubling()));
    CHECK(text.find("space: sphere3") != std::string::npos);
    CHECK(text.find("lefschetz numbers (k = 1..10): -1 -3 -7 ") != std::string::npos);
    CHECK(text.find("zeta function: (1 - 2t) / (1 - t)") != std::string::npos);
    CHECK(text.find("verdict: yes [exterior-eigenvalue-criterion]") != std::string::npos);
    CHECK(text.find("periodic-point free: no") != std::string::npos);
}

TEST_CASE("json rendering is valid and typed") {
    auto j = nlohmann::json::parse(render_json(analyze(sphere3_doubling())));
    CHECK(j["space"] == "sphere3");
    CHECK(j["shape"]["kind"] == "rational-exterior");
    CHECK(j["lefschetz_numbers"][0] == "-1");
    CHECK(j["zeta"]["numerator"] == "1 - 2t");
    CHECK(j["zeta"]["denominator"] == "1 - t");
    CHECK(j["periodic_point_free"] == false);
    CHECK(j["certificate"].is_null());
    CHECK(j["verdict"]["has_periodic_point"] == "yes");
    CHECK(j["verdict"]["witness_power"] == 1);
    CHECK(j["eigen"]["odd_has_eigenvalue_one"] == false);
}

TEST_CASE("lppf report carries the finite certificate note") {
    auto model = make_model(*find_fixture("s3xs2")->presentation);
    auto sign = from_generator_images(
        model, {{"x3", mono(1, 0, Rational(-1))}, {"y2", mono(0, 1, Rational(-1))}});
    auto report = analyze(sign);
    CHECK(report.lppf);
    REQUIRE(report.classification.has_value());
    CHECK(*report.classification == LppfClassification::MinusOnePair);
    auto text = render_text(report);
    CHECK(text.find("periodic-point free: yes") != std::string::npos);
    CHECK(text.find("k <= 4") != std::string::npos);
    CHECK(text.find("vanishing mechanism: minus-one-pair") != std::string::npos);
    auto j = nlohmann::json::parse(render_json(report));
    CHECK(j["certificate"].is_string());
    CHECK(j["vanishing_mechanism"] == "minus-one-pair");
    CHECK(j["verdict"]["has_periodic_point"] == "unknown");
}

TEST_CASE("horizon and forced mode options") {
    AnalysisOptions options;
    options.max_power = 3;
    auto report = analyze(sphere3_doubling(), options);
    CHECK(report.horizon == 3);
    CHECK(report.lefschetz.size() == 3);

    options.max_power = -1;
    CHECK_THROWS_AS(analyze(sphere3_doubling(), options), std::invalid_argument);

    AnalysisOptions forced;
    forced.forced_mode = ShapeKind::GeneralTensor;
    auto general = analyze(sphere3_doubling(), forced);
    CHECK(general.verdict.criterion == "odd-root-of-unity-criterion");
    CHECK(general.verdict.has_periodic_point == Answer::Yes);

    forced.forced_mode = ShapeKind::EvenOnly;
    CHECK_THROWS_AS(analyze(sphere3_doubling(), forced), shape_error);
}

TEST_CASE("classification only appears on extended shapes") {
    RingPresentation p =
        product(sphere(3), lefzeta::testing::truncated_polynomial_presentation(2, 3));
    p.name = "tensor";
    auto model = make_model(p);
    auto f = from_generator_images(model, {{"x3", mono(1, 0, Rational(2))},
                                           {"c1", mono(0, 1)},
                                           {"c2", mono(0, 2)}});
    auto report = analyze(f);
    CHECK(report.shape.kind == ShapeKind::GeneralTensor);
    CHECK(!report.classification.has_value());
    auto j = nlohmann::json::parse(render_json(report));
    CHECK(j["vanishing_mechanism"].is_null());
}

TEST_CASE("recognize reports") {
    SpaceFile presentation_file;
    presentation_file.name = "s5_bundle";
    presentation_file.presentation = s5_bundle_fixture();
    auto r = recognize_space(presentation_file);
    REQUIRE(r.shape.has_value());
    CHECK(r.shape->kind == ShapeKind::Unrecognized);
    auto text = render_text(r);
    CHECK(text.find("betti: 1 0 0 2 0 0 0 0 2 0 0 1") != std::string::npos);
    CHECK(text.find("even indecomposable in degree 8") != std::string::npos);

    SpaceFile betti_file;
    betti_file.name = "kodaira_thurston_betti";
    betti_file.betti_only = kodaira_thurston_betti();
    auto b = recognize_space(betti_file);
    CHECK(!b.shape.has_value());
    REQUIRE(b.betti_check.has_value());
    CHECK(!b.betti_check->compatible);
    auto btext = render_text(b);
    CHECK(btext.find("not rational exterior: total dimension 12 is not a power of 2") !=
          std::string::npos);
    auto bj = nlohmann::json::parse(render_json(b));
    CHECK(bj["exterior_profile_check"]["compatible"] == false);

    SpaceFile good;
    good.name = "t2";
    good.betti_only = std::vector<int>{1, 2, 1};
    auto g = recognize_space(good);
    auto gtext = render_text(g);
    CHECK(gtext.find("exterior-compatible profile: yes (odd generator degrees 1, 1)") !=
          std::string::npos);
    auto gj = nlohmann::json::parse(render_json(g));
    CHECK(gj["exterior_profile_check"]["odd_generator_degrees"] == nlohmann::json({1, 1}));
}

TEST_CASE("reports are internally consistent on random maps") {
    Rng rng(95);
    for (int trial = 0; trial < 40; ++trial) {
        ModelPtr model;
        auto f = lefzeta::testing::random_tensor_endo(rng, model);
        auto report = analyze(f);
        CHECK(report.lppf == report.zeta.is_one());
        CHECK(report.total_dimension == model->basis.total_dimension);
        if (report.verdict.has_periodic_point == Answer::Yes) {
            CHECK(!report.lppf);
        }
        // rendering never throws and both formats agree on the verdict
        auto j = nlohmann::json::parse(render_json(report));
        std::string answer = report.verdict.has_periodic_point == Answer::Yes ? "yes" : "unknown";
        CHECK(j["verdict"]["has_periodic_point"] == answer);
    }
}
