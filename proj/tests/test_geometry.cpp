#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reeskit/oracle.hpp"
#include "support.hpp"

using namespace reeskit;
using testsupport::Rng;

namespace {

RatVec rv(std::initializer_list<long> xs) {
    RatVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

IntVec iv(std::initializer_list<long> xs) {
    IntVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

PositivePolyhedron poly(int dim, std::vector<RatVec> gens) {
    return PositivePolyhedron(dim, std::move(gens));
}

}  // namespace

TEST_CASE("rationals parse and render canonically") {
    CHECK(rational_to_string(parse_rational("3/1")) == "3");
    CHECK(rational_to_string(parse_rational("-6/4")) == "-3/2");
    CHECK(parse_rational("7/2") == Rational(7, 2));
    CHECK(rat_ceil(Rational(7, 2)) == 4);
    CHECK(rat_floor(Rational(-7, 2)) == -4);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("hyperplane normalization and validation") {
    Hyperplane h(iv({2, 4}), Int(8));
    CHECK(h.normal == iv({1, 2}));
    CHECK(h.offset == 4);
    CHECK_THROWS_AS(Hyperplane(iv({0, 0}), Int(1)), std::invalid_argument);
    CHECK_THROWS_AS(Hyperplane(iv({1, 1}), Int(0)), std::invalid_argument);
}

TEST_CASE("facet enumeration on known polyhedra") {
    // conv{(2,1),(3,0)} + orthant
    auto det = poly(2, {rv({2, 1}), rv({3, 0})});
    auto f1 = facet_enumeration(det);
    REQUIRE(f1.size() == 2);
    CHECK(f1[0] == Hyperplane(iv({1, 0}), Int(2)));
    CHECK(f1[1] == Hyperplane(iv({1, 1}), Int(3)));

    // conv{(0,10),(5,5)} + orthant
    auto mon = poly(2, {rv({0, 10}), rv({5, 5})});
    auto f2 = facet_enumeration(mon);
    REQUIRE(f2.size() == 2);
    CHECK(f2[0] == Hyperplane(iv({0, 1}), Int(5)));
    CHECK(f2[1] == Hyperplane(iv({1, 1}), Int(10)));

    // shifted orthant corner
    auto corner = poly(3, {rv({1, 1, 1})});
    auto f3 = facet_enumeration(corner);
    REQUIRE(f3.size() == 3);
    CHECK(f3[0] == Hyperplane(iv({0, 0, 1}), Int(1)));
    CHECK(f3[1] == Hyperplane(iv({0, 1, 0}), Int(1)));
    CHECK(f3[2] == Hyperplane(iv({1, 0, 0}), Int(1)));
}

TEST_CASE("a generator at the origin makes the whole orthant") {
    auto P = poly(2, {rv({0, 0}), rv({1, 2})});
    CHECK(P.is_whole_orthant());
    CHECK(facet_enumeration(P).empty());
    CHECK(polyhedron_membership(P, Rational(5), rv({0, 0})));
}

TEST_CASE("generator sets are minimized to the vertex set") {
    auto P = poly(2, {rv({2, 1}), rv({3, 0}), rv({4, 4}), rv({2, 1})});
    CHECK(P.generators().size() == 2);
}

TEST_CASE("membership by exact feasibility") {
    auto mon = poly(2, {rv({0, 10}), rv({5, 5})});
    CHECK(polyhedron_membership(mon, Rational(3, 2), rv({0, 15})));
    CHECK(polyhedron_membership(mon, Rational(0), rv({0, 0})));
    CHECK(polyhedron_membership(mon, Rational(0), rv({7, 1})));
    auto det = poly(2, {rv({2, 1}), rv({3, 0})});
    CHECK_FALSE(polyhedron_membership(det, Rational(1), rv({1, 0})));
    CHECK_THROWS_AS(polyhedron_membership(det, Rational(1), rv({1, 0, 0})),
                    std::invalid_argument);
    CHECK_THROWS_AS(polyhedron_membership(det, Rational(-1), rv({1, 0})),
                    std::invalid_argument);
}

TEST_CASE("star products match the joined facets") {
    Hyperplane x4(iv({1}), Int(4));
    Hyperplane sum3(iv({1, 1}), Int(3));
    Hyperplane x2(iv({1}), Int(2));

    CHECK(star(x4, sum3) == Hyperplane(iv({3, 4, 4}), Int(12)));
    CHECK(star(x4, x2) == Hyperplane(iv({1, 2}), Int(4)));
    CHECK(star(Hyperplane(iv({1}), Int(1)), Hyperplane(iv({1}), Int(1))) ==
          Hyperplane(iv({1, 1}), Int(1)));
}

TEST_CASE("conv_join reproduces the star-product facets") {
    auto left = poly(1, {rv({4})});
    auto right = poly(2, {rv({2, 1}), rv({3, 0})});
    auto joined = conv_join(left, right);
    CHECK(joined.generators().size() == 3);
    auto facets = facet_enumeration(joined);
    REQUIRE(facets.size() == 2);
    CHECK(facets[0] == Hyperplane(iv({1, 2, 0}), Int(4)));
    CHECK(facets[1] == Hyperplane(iv({3, 4, 4}), Int(12)));

    auto unit = poly(1, {rv({1})});
    auto simplex = conv_join(unit, unit);
    auto sf = facet_enumeration(simplex);
    REQUIRE(sf.size() == 1);
    CHECK(sf[0] == Hyperplane(iv({1, 1}), Int(1)));

    // two known facet lists give all four pairwise stars
    auto mon = poly(2, {rv({0, 10}), rv({5, 5})});
    auto four = facet_enumeration(conv_join(mon, right));
    CHECK(four.size() == 4);
    std::vector<Hyperplane> expected;
    for (const auto& a : facet_enumeration(mon))
        for (const auto& b : facet_enumeration(right)) expected.push_back(star(a, b));
    std::sort(expected.begin(), expected.end());
    CHECK(four == expected);
}

TEST_CASE("bounded lattice enumeration") {
    auto det = poly(2, {rv({2, 1}), rv({3, 0})});
    auto pts = scale_and_ceil_lattice(det, Rational(1), iv({3, 1}));
    REQUIRE(pts.size() == 3);
    CHECK(pts[0] == iv({2, 1}));
    CHECK(pts[1] == iv({3, 0}));
    CHECK(pts[2] == iv({3, 1}));

    auto all = scale_and_ceil_lattice(det, Rational(0), iv({1, 1}));
    CHECK(all.size() == 4);

    auto half = scale_and_ceil_lattice(poly(1, {rv({4})}), Rational(1, 2), iv({2}));
    REQUIRE(half.size() == 1);
    CHECK(half[0] == iv({2}));

    CHECK_THROWS_AS(scale_and_ceil_lattice(det, Rational(1), iv({1000, 1000}), 1000),
                    cap_exceeded_error);
}

TEST_CASE("V- and H-representations agree on random instances") {
    Rng rng(20240811);
    const Rational ws[] = {Rational(0), Rational(1, 3), Rational(1), Rational(7, 2)};
    int checked = 0;
    while (checked < 200) {
        auto P = testsupport::random_positive_polyhedron(rng);
        auto facets = facet_enumeration(P);
        for (int i = 0; i < 5 && checked < 200; ++i, ++checked) {
            auto p = testsupport::random_point(rng, P.dim());
            const Rational& w = ws[static_cast<std::size_t>(rng.pick(0, 3))];
            CHECK(polyhedron_membership(P, w, p) == facet_membership(facets, w, p));
        }
    }
}

TEST_CASE("homogeneity: point in wP iff t*point in (tw)P") {
    Rng rng(77001);
    for (int i = 0; i < 60; ++i) {
        auto P = testsupport::random_positive_polyhedron(rng, 3, 4, 8);
        auto p = testsupport::random_point(rng, P.dim(), 12);
        Rational w(rng.pick(0, 6), rng.pick(1, 3));
        Rational t(rng.pick(1, 5), rng.pick(1, 2));
        RatVec scaled(p.size());
        for (std::size_t j = 0; j < p.size(); ++j) scaled[j] = t * p[j];
        CHECK(polyhedron_membership(P, w, p) == polyhedron_membership(P, t * w, scaled));
    }
}

TEST_CASE("every returned facet is irredundant over the lattice") {
    Rng rng(5150);
    for (int trial = 0; trial < 25; ++trial) {
        auto P = testsupport::random_positive_polyhedron(rng, 3, 4, 6);
        auto facets = facet_enumeration(P);
        for (std::size_t skip = 0; skip < facets.size(); ++skip) {
            // A witness satisfies every other facet but violates the skipped
            // one at some integer scale.
            bool found = false;
            for (long scale : {1, 2, 3, 4, 6, 12}) {
                Rational w(scale);
                Int bound = 0;
                for (const auto& f : facets) bound = std::max(bound, f.offset * scale);
                for (const RatVec& g : P.generators())
                    for (const Rational& v : g)
                        bound = std::max(bound, rat_ceil(v * w));
                IntVec box(static_cast<std::size_t>(P.dim()), bound);
                bool done = false;
                for_each_box_point(box, [&](const IntVec& pt) {
                    if (done) return;
                    RatVec q = to_rat_vec(pt);
                    if (dot(facets[skip].normal, q) >= w * Rational(facets[skip].offset))
                        return;
                    for (std::size_t j = 0; j < facets.size(); ++j) {
                        if (j == skip) continue;
                        if (dot(facets[j].normal, q) < w * Rational(facets[j].offset)) return;
                    }
                    done = true;
                });
                if (done) {
                    found = true;
                    break;
                }
            }
            CHECK(found);
        }
    }
}

TEST_CASE("star-join soundness on random pairs") {
    Rng rng(909090);
    for (int trial = 0; trial < 30; ++trial) {
        auto P1 = testsupport::random_positive_polyhedron(rng, 2, 4, 8);
        auto P2 = testsupport::random_positive_polyhedron(rng, 2, 4, 8);
        auto f1 = facet_enumeration(P1);
        auto f2 = facet_enumeration(P2);
        std::vector<Hyperplane> stars;
        for (const auto& a : f1)
            for (const auto& b : f2) stars.push_back(star(a, b));
        std::sort(stars.begin(), stars.end());
        stars.erase(std::unique(stars.begin(), stars.end()), stars.end());
        CHECK(facet_enumeration(conv_join(P1, P2)) == stars);
    }
}
