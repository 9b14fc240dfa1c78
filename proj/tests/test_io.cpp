#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lefzeta/errors.hpp"
#include "lefzeta/space_io.hpp"
#include "lefzeta/spaces.hpp"

using namespace lefzeta;

TEST_CASE("space files round-trip byte for byte") {
    for (const auto& fx : fixtures()) {
        if (!fx.presentation) continue;
        CAPTURE(fx.name);
        std::string text = space_file_text(*fx.presentation);
        SpaceFile parsed = parse_space_text(text);
        REQUIRE(parsed.presentation.has_value());
        CHECK(*parsed.presentation == *fx.presentation);
        CHECK(parsed.name == fx.name);
        CHECK(space_file_text(*parsed.presentation) == text);
    }
}

TEST_CASE("betti files round-trip") {
    std::string text = betti_file_text("kodaira_thurston_betti", kodaira_thurston_betti());
    SpaceFile parsed = parse_space_text(text);
    CHECK(parsed.name == "kodaira_thurston_betti");
    REQUIRE(parsed.betti_only.has_value());
    CHECK(*parsed.betti_only == kodaira_thurston_betti());
    CHECK(!parsed.presentation.has_value());
    CHECK(betti_file_text(parsed.name, *parsed.betti_only) == text);
}

TEST_CASE("space parsing accepts the documented schema") {
    auto file = parse_space_text(R"({
        "name": "demo",
        "odd_generators": [{"name": "x", "degree": 3}],
        "even_basis": [{"name": "u", "degree": 2}, {"name": "v", "degree": 4}],
        "even_products": [
            {"left": "u", "right": "u", "result": [{"basis": "v", "coeff": "2/1"}]}
        ]
    })");
    REQUIRE(file.presentation.has_value());
    const auto& p = *file.presentation;
    CHECK(p.odd_generators.size() == 1);
    CHECK(p.even.size() == 2);
    CHECK(p.even.product(1, 1)[2] == Rational(2));
    CHECK(validate_presentation(p));
}

TEST_CASE("space parsing rejections") {
    // malformed json
    CHECK_THROWS_AS(parse_space_text("{"), parse_error);
    // wrong top-level type and missing name
    CHECK_THROWS_AS(parse_space_text("[]"), parse_error);
    CHECK_THROWS_AS(parse_space_text(R"({"name": 3})"), parse_error);
    // unknown keys anywhere
    CHECK_THROWS_AS(parse_space_text(R"({"name": "s", "extra": 1})"), parse_error);
    CHECK_THROWS_AS(parse_space_text(R"({"name": "s", "odd_generators": [{"name": "x", "degree": 3, "parity": 1}]})"),
                    parse_error);
    // betti_only excludes ring data
    CHECK_THROWS_AS(parse_space_text(R"({"name": "s", "betti_only": [1], "odd_generators": []})"),
                    parse_error);
    CHECK_THROWS_AS(parse_space_text(R"({"name": "s", "betti_only": [1, -2]})"), parse_error);
    // generator entries must be well formed
    CHECK_THROWS_AS(parse_space_text(R"({"name": "s", "odd_generators": [{"name": "x"}]})"),
                    parse_error);
    CHECK_THROWS_AS(parse_space_text(R"({"name": "s", "odd_generators": [{"name": "x", "degree": "3"}]})"),
                    parse_error);
}

TEST_CASE("product entry rejections") {
    auto wrap = [](const std::string& products) {
        return std::string(R"({"name": "s",
            "odd_generators": [{"name": "x", "degree": 3}],
            "even_basis": [{"name": "u", "degree": 2}, {"name": "v", "degree": 4}],)") +
               "\"even_products\": " + products + "}";
    };
    // unknown class name
    CHECK_THROWS_AS(parse_space_text(wrap(R"([{"left": "w", "right": "u", "result": []}])")),
                    parse_error);
    // unit factor
    CHECK_THROWS_AS(parse_space_text(wrap(R"([{"left": "1", "right": "u", "result": []}])")),
                    parse_error);
    // odd times odd is fixed by the relations
    CHECK_THROWS_AS(parse_space_text(wrap(R"([{"left": "x", "right": "x", "result": []}])")),
                    parse_error);
    // odd times even needs the vanishing flag
    CHECK_THROWS_AS(
        parse_space_text(wrap(R"([{"left": "x", "right": "u", "result": [{"basis": "v", "coeff": "1"}]}])")),
        parse_error);
    // duplicate pairs, also across the symmetric order
    CHECK_THROWS_AS(parse_space_text(wrap(
                    R"([{"left": "u", "right": "v", "result": []},
                        {"left": "v", "right": "u", "result": []}])")),
                    parse_error);
    // duplicate basis term inside one result
    CHECK_THROWS_AS(parse_space_text(wrap(
                    R"([{"left": "u", "right": "u", "result": [{"basis": "v", "coeff": "1"}, {"basis": "v", "coeff": "2"}]}])")),
                    parse_error);
    // malformed coefficient
    CHECK_THROWS_AS(parse_space_text(wrap(
                    R"([{"left": "u", "right": "u", "result": [{"basis": "v", "coeff": "q"}]}])")),
                    parse_error);
    // odd generator appearing in an even product result
    CHECK_THROWS_AS(parse_space_text(wrap(
                    R"([{"left": "u", "right": "u", "result": [{"basis": "x", "coeff": "1"}]}])")),
                    parse_error);
}

TEST_CASE("hybrid product entries build the pairing") {
    auto file = parse_space_text(space_file_text(s5_bundle_fixture()));
    REQUIRE(file.presentation.has_value());
    CHECK(file.presentation->hybrid());
    CHECK(file.presentation->odd_even_products.size() == 2);
    auto first = file.presentation->odd_even_products.at({0, 1});
    CHECK(first == AlgebraElement::monomial(BasisElement{0b100, 0}));
}

TEST_CASE("map files over an exterior model") {
    auto model = make_model(*find_fixture("s3xs3")->presentation);
    auto images = parse_map_text(R"({"images": {
        "x3": [{"monomial": ["x3"], "coeff": "2"}, {"monomial": ["x3'"], "coeff": "-1/2"}],
        "x3'": []
    }})", model);
    CHECK(images.at("x3") ==
          AlgebraElement::monomial(BasisElement{0b01, 0}, Rational(2)) +
              AlgebraElement::monomial(BasisElement{0b10, 0}, Rational(-1, 2)));
    CHECK(images.at("x3'").is_zero());
}

TEST_CASE("map files pick up the reordering sign") {
    auto model = make_model(*find_fixture("s3xs3")->presentation);
    auto listed = parse_map_text(
        R"({"images": {"x3": [{"monomial": ["x3'", "x3"], "coeff": "1"}]}})", model);
    auto canonical = parse_map_text(
        R"({"images": {"x3": [{"monomial": ["x3", "x3'"], "coeff": "-1"}]}})", model);
    CHECK(listed.at("x3") == canonical.at("x3"));
}

TEST_CASE("map files separate structure errors from name errors") {
    auto model = make_model(*find_fixture("s3xs2")->presentation);
    // structure: parse errors
    CHECK_THROWS_AS(parse_map_text("{", model), parse_error);
    CHECK_THROWS_AS(parse_map_text(R"({"imagez": {}})", model), parse_error);
    CHECK_THROWS_AS(parse_map_text(R"({"images": 3})", model), parse_error);
    CHECK_THROWS_AS(parse_map_text(R"({"images": {"x3": [{"coeff": "1", "extra": 2}]}})", model),
                    parse_error);
    CHECK_THROWS_AS(parse_map_text(R"({"images": {"x3": [{"monomial": ["x3"]}]}})", model),
                    parse_error); // no coeff
    CHECK_THROWS_AS(
        parse_map_text(R"({"images": {"x3": [{"monomial": ["x3", "x3"], "coeff": "1"}]}})", model),
        parse_error); // repeated factor
    // names: validation errors
    CHECK_THROWS_AS(parse_map_text(R"({"images": {"x3": [{"monomial": ["y2"], "coeff": "1"}]}})",
                                   model),
                    validation_error); // y2 is even
    CHECK_THROWS_AS(parse_map_text(R"({"images": {"x3": [{"even": "x3", "coeff": "1"}]}})", model),
                    validation_error);
    CHECK_THROWS_AS(parse_map_text(R"({"images": {"x3": [{"even": "zz", "coeff": "1"}]}})", model),
                    validation_error);
}

TEST_CASE("map monomials must exist in the model") {
    // in the hybrid fixture, odd generators never multiply even classes freely
    auto model = make_model(*find_fixture("s5_bundle")->presentation);
    CHECK_THROWS_AS(parse_map_text(
                        R"({"images": {"w11": [{"monomial": ["a3"], "even": "b8", "coeff": "1"}]}})",
                        model),
                    validation_error);
    // mixed monomials are fine where the tensor structure provides them
    auto tensor = make_model(*find_fixture("s3xs2")->presentation);
    auto images = parse_map_text(
        R"({"images": {"x3": [{"monomial": ["x3"], "coeff": "1"}],
                       "y2": [{"even": "y2", "coeff": "5"}]}})", tensor);
    CHECK(images.at("y2") == AlgebraElement::monomial(BasisElement{0, 1}, Rational(5)));
}

TEST_CASE("cannot open missing files") {
    CHECK_THROWS_AS(parse_space_file("/nonexistent/space.json"), parse_error);
    auto model = make_model(*find_fixture("sphere3")->presentation);
    CHECK_THROWS_AS(parse_map_file("/nonexistent/map.json", model), parse_error);
}
