#pragma once

#include <cstdint>
#include <random>

#include "reeskit/package.hpp"

namespace testsupport {

using namespace reeskit;

// Deterministic corpus generator; mt19937_64 output is standardized, so the
// same seed gives the same instances everywhere.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    long pick(long lo, long hi) {
        return lo + static_cast<long>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    bool chance(long percent) { return pick(1, 100) <= percent; }
};

inline PositivePolyhedron random_positive_polyhedron(Rng& rng, int max_dim = 4,
                                                     int max_gens = 6, int max_coord = 12) {
    const int dim = static_cast<int>(rng.pick(1, max_dim));
    const int k = static_cast<int>(rng.pick(1, max_gens));
    std::vector<RatVec> gens;
    while (static_cast<int>(gens.size()) < k) {
        RatVec g(static_cast<std::size_t>(dim));
        bool zero = true;
        for (auto& v : g) {
            long den = rng.pick(1, 2);
            long num = rng.pick(0, max_coord * den);
            v = Rational(num, den);
            if (v != 0) zero = false;
        }
        if (!zero) gens.push_back(std::move(g));
    }
    return PositivePolyhedron(dim, std::move(gens));
}

inline AffineSemigroup random_semigroup(Rng& rng, int max_rank = 3, long orthant_percent = 70) {
    const int s = static_cast<int>(rng.pick(1, max_rank));
    if (rng.chance(orthant_percent)) return AffineSemigroup::orthant(s);
    for (;;) {
        const int k = static_cast<int>(rng.pick(s, s + 1));
        std::vector<IntVec> gens;
        for (int i = 0; i < k; ++i) {
            IntVec g(static_cast<std::size_t>(s));
            bool zero = true;
            for (auto& v : g) {
                v = rng.pick(0, 3);
                if (v != 0) zero = false;
            }
            if (zero) g[static_cast<std::size_t>(rng.pick(0, s - 1))] = 1;
            gens.push_back(std::move(g));
        }
        if (rank_of_int_rows(gens) != s) continue;
        return AffineSemigroup(s, std::move(gens));
    }
}

inline MonomialIdeal random_monomial_ideal(Rng& rng, int max_rank = 3, int max_gens = 4,
                                           long max_coord = 6, long orthant_percent = 70) {
    AffineSemigroup S = random_semigroup(rng, max_rank, orthant_percent);
    const int count = static_cast<int>(rng.pick(1, max_gens));
    std::vector<IntVec> exponents;
    while (static_cast<int>(exponents.size()) < count) {
        IntVec a(static_cast<std::size_t>(S.rank()), Int(0));
        const long terms = rng.pick(1, 3);
        for (long t = 0; t < terms; ++t) {
            const auto& g = S.generators()[static_cast<std::size_t>(
                rng.pick(0, static_cast<long>(S.generators().size()) - 1))];
            a = vec_add(a, g);
        }
        bool small = true, zero = is_zero(a);
        for (const Int& v : a)
            if (v > max_coord) small = false;
        if (small && !zero) exponents.push_back(std::move(a));
    }
    return MonomialIdeal(std::move(S), std::move(exponents));
}

inline DiagramIdeal random_diagram_ideal(Rng& rng) {
    MatrixFamily family = [&] {
        switch (rng.pick(0, 2)) {
            case 0: {
                int m = static_cast<int>(rng.pick(1, 3));
                return MatrixFamily::generic(m, static_cast<int>(rng.pick(m, 4)));
            }
            case 1: return MatrixFamily::symmetric(static_cast<int>(rng.pick(1, 3)));
            default: return MatrixFamily::pfaffian(static_cast<int>(rng.pick(2, 6)));
        }
    }();
    const int bound = family.gamma_dim();
    const int count = static_cast<int>(rng.pick(1, 3));
    std::vector<Diagram> lambda;
    for (int i = 0; i < count; ++i) {
        std::vector<int> parts;
        const long len = rng.pick(1, 3);
        for (long j = 0; j < len; ++j) parts.push_back(static_cast<int>(rng.pick(1, bound)));
        lambda.emplace_back(std::move(parts));
    }
    return DiagramIdeal(family, std::move(lambda));
}

inline ReesPackage random_package(Rng& rng) {
    if (rng.chance(60)) return rees_package_monomial(random_monomial_ideal(rng));
    return rees_package_diagrams(random_diagram_ideal(rng));
}

inline RatVec random_point(Rng& rng, int dim, long max_coord = 20) {
    RatVec p(static_cast<std::size_t>(dim));
    for (auto& v : p) {
        long den = rng.pick(1, 3);
        v = Rational(rng.pick(0, max_coord * den), den);
    }
    return p;
}

}  // namespace testsupport
