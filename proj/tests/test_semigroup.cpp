#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reeskit/oracle.hpp"
#include "support.hpp"

using namespace reeskit;
using testsupport::Rng;

namespace {

IntVec iv(std::initializer_list<long> xs) {
    IntVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

AffineSemigroup curve_semigroup() { return AffineSemigroup(2, {iv({2, 1}), iv({1, 3})}); }

MonomialIdeal curve_ideal() { return MonomialIdeal(curve_semigroup(), {iv({4, 2}), iv({3, 4})}); }

MonomialIdeal plane_cross_ideal() {
    return MonomialIdeal(AffineSemigroup::orthant(2), {iv({1, 3}), iv({3, 1})});
}

}  // namespace

TEST_CASE("cone facet valuations") {
    auto curve = curve_semigroup().cone_valuations();
    REQUIRE(curve.size() == 2);
    CHECK(curve[0].normal == iv({-1, 2}));
    CHECK(curve[1].normal == iv({3, -1}));

    auto orthant = AffineSemigroup::orthant(2).cone_valuations();
    REQUIRE(orthant.size() == 2);
    CHECK(orthant[0].normal == iv({0, 1}));
    CHECK(orthant[1].normal == iv({1, 0}));

    AffineSemigroup fan(2, {iv({1, 0}), iv({1, 1}), iv({1, 2})});
    auto vals = fan.cone_valuations();
    REQUIRE(vals.size() == 2);
    CHECK(vals[0].normal == iv({0, 1}));
    CHECK(vals[1].normal == iv({2, -1}));
}

TEST_CASE("degenerate cones are rejected") {
    CHECK_THROWS_WITH_AS(AffineSemigroup(2, {iv({1, 1})}),
                         "semigroup: cone not full-dimensional", std::invalid_argument);
    CHECK_THROWS_WITH_AS(AffineSemigroup(2, {iv({1, 0}), iv({-1, 0}), iv({0, 1})}),
                         "semigroup: cone not strongly convex", std::invalid_argument);
    CHECK_THROWS_AS(AffineSemigroup(2, {iv({0, 0}), iv({1, 0})}), std::invalid_argument);
}

TEST_CASE("semigroup membership by bounded search") {
    auto S = curve_semigroup();
    CHECK(membership_in_semigroup(S, iv({5, 5})));
    CHECK(membership_in_semigroup(S, iv({0, 0})));
    CHECK_FALSE(membership_in_semigroup(S, iv({1, 0})));
    CHECK_FALSE(membership_in_semigroup(S, iv({1, 1})));
    CHECK(membership_in_semigroup(S, iv({3, 4})));
    CHECK_THROWS_AS(membership_in_semigroup(S, iv({1, 0, 0})), std::invalid_argument);

    // negative generator coordinates are allowed for membership
    AffineSemigroup skew(2, {iv({1, 0}), iv({1, 1}), iv({1, -1})});
    CHECK(membership_in_semigroup(skew, iv({2, 0})));
    CHECK(membership_in_semigroup(skew, iv({1, -1})));
    CHECK_FALSE(membership_in_semigroup(skew, iv({0, 1})));
}

TEST_CASE("monomial ideals validate and minimize their exponents") {
    auto S = curve_semigroup();
    MonomialIdeal I(S, {iv({4, 2}), iv({3, 4}), iv({6, 3})});  // (6,3) = (4,2) + (2,1)
    CHECK(I.exponents().size() == 2);
    CHECK_THROWS_AS(MonomialIdeal(curve_semigroup(), {iv({1, 1})}), std::invalid_argument);
}

TEST_CASE("monomial package of the curve-semigroup ideal") {
    auto pkg = rees_package_monomial(curve_ideal());
    CHECK(pkg.ambient_dim == 2);
    REQUIRE(pkg.facets.size() == 2);
    CHECK(pkg.facets[0] == Hyperplane(iv({0, 1}), Int(5)));
    CHECK(pkg.facets[1] == Hyperplane(iv({1, 1}), Int(10)));
    CHECK(denominator_bound(pkg) == 10);
    // composite normals express the valuations on exponent vectors
    REQUIRE(pkg.monomial().composite_normals.size() == 2);
    CHECK(pkg.monomial().composite_normals[0] == iv({3, -1}));
    CHECK(pkg.monomial().composite_normals[1] == iv({2, 1}));
}

TEST_CASE("principal ideal package") {
    MonomialIdeal I(AffineSemigroup::orthant(1), {iv({1})});
    auto pkg = rees_package_monomial(I);
    REQUIRE(pkg.facets.size() == 1);
    CHECK(pkg.facets[0] == Hyperplane(iv({1}), Int(1)));
    CHECK(denominator_bound(pkg) == 1);
}

TEST_CASE("polynomial-ring package matches the facet oracle") {
    auto pkg = rees_package_monomial(plane_cross_ideal());
    REQUIRE(pkg.facets.size() == 3);
    CHECK(pkg.facets[0] == Hyperplane(iv({1, 1}), Int(4)));
    CHECK(pkg.facets[1] == Hyperplane(iv({1, 3}), Int(6)));
    CHECK(pkg.facets[2] == Hyperplane(iv({3, 1}), Int(6)));
    CHECK(oracle::facets_fourier_motzkin(pkg.polyhedron) == pkg.facets);
}

TEST_CASE("rational power membership") {
    auto pkg = rees_package_monomial(curve_ideal());
    CHECK(rational_power_membership(pkg, Rational(3, 2), iv({6, 3})));
    CHECK_FALSE(rational_power_membership(pkg, Rational(3, 2), iv({4, 2})));
    CHECK(rational_power_membership(pkg, Rational(0), iv({2, 1})));
    CHECK_FALSE(rational_power_membership(pkg, Rational(0), iv({1, 1})));  // not in S
    CHECK_THROWS_AS(rational_power_membership(pkg, Rational(-1), iv({2, 1})),
                    std::invalid_argument);
}

TEST_CASE("rational power generators") {
    auto pkg = rees_package_monomial(curve_ideal());
    auto gens = rational_power_generators(pkg, Rational(3, 2));
    REQUIRE(gens.size() == 2);
    CHECK(gens[0] == iv({5, 5}));
    CHECK(gens[1] == iv({6, 3}));

    auto unit = rational_power_generators(pkg, Rational(0));
    REQUIRE(unit.size() == 1);
    CHECK(is_zero(unit[0]));

    CHECK_THROWS_AS(rational_power_generators(pkg, Rational(1000000)), cap_exceeded_error);
}

TEST_CASE("integer powers agree with the closure oracle") {
    auto I = plane_cross_ideal();
    auto pkg = rees_package_monomial(I);
    for (int p : {1, 2, 3}) {
        auto gens = rational_power_generators(pkg, Rational(p));
        // every generator is in the closure and one step down is not
        for (const IntVec& g : gens) {
            CHECK(oracle::closure_membership_bruteforce(I, p, g) == oracle::Verdict::Member);
            for (std::size_t i = 0; i < g.size(); ++i) {
                if (g[i] == 0) continue;
                IntVec below = g;
                --below[i];
                CHECK(oracle::closure_membership_bruteforce(I, p, below) ==
                      oracle::Verdict::NonMember);
            }
        }
    }
}

TEST_CASE("denominator bound reduces rational powers to the grid") {
    Rng rng(311311);
    for (int trial = 0; trial < 40; ++trial) {
        auto I = testsupport::random_monomial_ideal(rng);
        auto pkg = rees_package_monomial(I);
        const Int e = denominator_bound(pkg);
        Rational w(rng.pick(0, 9), rng.pick(1, 7));
        Rational reduced(rat_ceil(w * Rational(e)), e);
        IntVec n(static_cast<std::size_t>(I.semigroup().rank()));
        for (auto& v : n) v = rng.pick(0, 8);
        CHECK(rational_power_membership(pkg, w, n) ==
              rational_power_membership(pkg, reduced, n));
    }
}

TEST_CASE("generator sets behave like semigroup ideals") {
    Rng rng(424242);
    for (int trial = 0; trial < 25; ++trial) {
        auto I = testsupport::random_monomial_ideal(rng);
        auto pkg = rees_package_monomial(I);
        Rational w(rng.pick(1, 5), rng.pick(1, 3));
        auto gens = rational_power_generators(pkg, w);
        for (const IntVec& g : gens) {
            CHECK(rational_power_membership(pkg, w, g));
            for (const IntVec& s : I.semigroup().generators())
                CHECK(rational_power_membership(pkg, w, vec_add(g, s)));
        }
    }
}

TEST_CASE("facet valuations are linear and attain the facet value") {
    Rng rng(606060);
    for (int trial = 0; trial < 25; ++trial) {
        auto I = testsupport::random_monomial_ideal(rng);
        auto pkg = rees_package_monomial(I);
        const auto& vm = pkg.monomial();
        for (std::size_t k = 0; k < pkg.facets.size(); ++k) {
            // linearity on the exponent lattice
            IntVec a(static_cast<std::size_t>(vm.semigroup.rank()), Int(0));
            IntVec b = a;
            for (int t = 0; t < 2; ++t) {
                const auto& gs = vm.semigroup.generators();
                a = vec_add(a, gs[static_cast<std::size_t>(rng.pick(
                                   0, static_cast<long>(gs.size()) - 1))]);
                b = vec_add(b, gs[static_cast<std::size_t>(rng.pick(
                                   0, static_cast<long>(gs.size()) - 1))]);
            }
            CHECK(dot(vm.composite_normals[k], vec_add(a, b)) ==
                  dot(vm.composite_normals[k], a) + dot(vm.composite_normals[k], b));
            // the facet value is the minimum over the ideal generators
            Int mn;
            bool first = true;
            for (const IntVec& g : vm.ideal_exponents) {
                Int v = dot(vm.composite_normals[k], g);
                if (first || v < mn) mn = v, first = false;
            }
            CHECK(mn == pkg.facet_values[k]);
        }
    }
}
