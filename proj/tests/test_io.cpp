#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reeskit/json_io.hpp"
#include "support.hpp"

using namespace reeskit;
using testsupport::Rng;

TEST_CASE("rational json forms") {
    CHECK(rational_to_json(Rational(3)) == Json("3"));
    CHECK(rational_to_json(Rational(3, 2)) == Json("3/2"));
    CHECK(json_to_rational(Json("7/2")) == Rational(7, 2));
    CHECK(json_to_rational(Json(5)) == Rational(5));
    CHECK_THROWS_AS(json_to_rational(Json(1.5)), std::invalid_argument);
}

TEST_CASE("monomial input schema") {
    Json j = Json::parse(R"({
        "semigroup": {"rank": 2, "generators": [[2, 1], [1, 3]]},
        "ideal": {"exponents": [[4, 2], [3, 4]]}
    })");
    REQUIRE(is_monomial_input(j));
    MonomialIdeal I = monomial_ideal_from_json(j);
    CHECK(I.semigroup().rank() == 2);
    CHECK(I.exponents().size() == 2);

    Json shortcut = Json::parse(R"({
        "semigroup": "orthant", "rank": 2,
        "ideal": {"exponents": [[1, 3], [3, 1]]}
    })");
    MonomialIdeal P = monomial_ideal_from_json(shortcut);
    CHECK(P.semigroup().is_standard_orthant());

    Json bad = Json::parse(R"({"semigroup": "torus", "rank": 2, "ideal": {"exponents": [[1]]}})");
    CHECK_THROWS_AS(monomial_ideal_from_json(bad), std::invalid_argument);
    CHECK_THROWS_AS(monomial_ideal_from_json(Json::object()), std::invalid_argument);
}

TEST_CASE("diagram input schema") {
    Json j = Json::parse(R"({
        "family": {"kind": "generic", "m": 2, "n": 3},
        "lambda": [[2], [1, 1, 1]]
    })");
    CHECK_FALSE(is_monomial_input(j));
    DiagramIdeal D = diagram_ideal_from_json(j);
    CHECK(D.family().kind == FamilyKind::Generic);
    CHECK(D.lambda().size() == 2);

    Json bad = Json::parse(R"({"family": {"kind": "toeplitz", "n": 3}, "lambda": [[1]]})");
    CHECK_THROWS_AS(diagram_ideal_from_json(bad), std::invalid_argument);
}

TEST_CASE("hyperplane and polyhedron round trips") {
    Rng rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        auto P = testsupport::random_positive_polyhedron(rng, 3, 4, 9);
        auto Q = polyhedron_from_json(polyhedron_to_json(P));
        CHECK(P.generators() == Q.generators());
        auto facets = facet_enumeration(P);
        for (const Hyperplane& f : facets)
            CHECK(hyperplane_from_json(hyperplane_to_json(f)) == f);
    }
}

TEST_CASE("package serialization carries the full description") {
    AffineSemigroup S(2, {{Int(2), Int(1)}, {Int(1), Int(3)}});
    MonomialIdeal I(S, {{Int(4), Int(2)}, {Int(3), Int(4)}});
    Json j = package_to_json(rees_package_monomial(I));
    CHECK(j["ambient_dim"] == 2);
    CHECK(j["value_map"]["kind"] == "monomial");
    CHECK(j["facets"].size() == 2);
    CHECK(j["denominator_bound"] == 10);
    CHECK(j["facet_values"] == Json::array({5, 10}));

    DiagramIdeal H(MatrixFamily::hankel(5), {Diagram({2})});
    Json hj = package_to_json(rees_package_diagrams(H));
    CHECK(hj["value_map"]["kind"] == "diagram");
    CHECK(hj["value_map"]["rees_valuations_subset_only"] == true);
}

TEST_CASE("summation report serialization") {
    MonomialIdeal I(AffineSemigroup::orthant(1), {{Int(2)}});
    MonomialIdeal J(AffineSemigroup::orthant(1), {{Int(3)}});
    Json j = summation_report_to_json(check_summation_monomial(I, J, Rational(1)));
    CHECK(j["verdict"] == "EQUAL");
    CHECK(j["alpha_terms"].is_array());
    CHECK(j["lhs_generators"].is_array());
    CHECK_FALSE(j.contains("witness"));
}

TEST_CASE("large integers survive serialization") {
    Int big("123456789012345678901234567890");
    CHECK(json_to_int(int_to_json(big)) == big);
    CHECK(int_to_json(Int(7)).is_number_integer());
}
