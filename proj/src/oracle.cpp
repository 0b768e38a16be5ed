#include "reeskit/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace reeskit {
namespace oracle {

namespace {

struct Row {
    IntVec a;  // coefficients over the live variables
    Int c;     // meaning <a, y> >= c

    bool operator<(const Row& other) const {
        if (a != other.a) return lex_less(a, other.a);
        return c < other.c;
    }
};

void reduce_row(Row& r) {
    Int g = int_gcd(gcd_of(r.a), r.c);
    if (g > 1) {
        for (Int& v : r.a) v /= g;
        r.c /= g;
    }
}

// Eliminates the last variable of every row.
std::vector<Row> eliminate_last(const std::vector<Row>& rows) {
    std::vector<const Row*> lower, upper, flat;
    const std::size_t v = rows.empty() ? 0 : rows[0].a.size() - 1;
    for (const Row& r : rows) {
        if (r.a[v] > 0)
            lower.push_back(&r);
        else if (r.a[v] < 0)
            upper.push_back(&r);
        else
            flat.push_back(&r);
    }
    std::set<Row> out;
    auto drop_last = [v](const Row& r) {
        Row s{IntVec(r.a.begin(), r.a.begin() + static_cast<long>(v)), r.c};
        reduce_row(s);
        return s;
    };
    for (const Row* r : flat) out.insert(drop_last(*r));
    for (const Row* lo : lower) {
        for (const Row* up : upper) {
            Row combo;
            combo.a.resize(v + 1);
            for (std::size_t j = 0; j <= v; ++j)
                combo.a[j] = lo->a[v] * up->a[j] - up->a[v] * lo->a[j];
            combo.c = lo->a[v] * up->c - up->a[v] * lo->c;
            out.insert(drop_last(combo));
        }
    }
    return std::vector<Row>(out.begin(), out.end());
}

bool tight_set_is_facet(const PositivePolyhedron& P, const IntVec& h, const Int& c) {
    const int d = P.dim();
    std::vector<RatVec> dirs;
    const RatVec* base = nullptr;
    for (const RatVec& g : P.generators()) {
        if (dot(h, g) != Rational(c)) continue;
        if (!base) {
            base = &g;
            continue;
        }
        RatVec diff(g.size());
        for (std::size_t j = 0; j < g.size(); ++j) diff[j] = g[j] - (*base)[j];
        dirs.push_back(std::move(diff));
    }
    if (!base) return false;
    for (int j = 0; j < d; ++j) {
        if (h[static_cast<std::size_t>(j)] != 0) continue;
        RatVec e(static_cast<std::size_t>(d), Rational(0));
        e[static_cast<std::size_t>(j)] = 1;
        dirs.push_back(std::move(e));
    }
    return rank_of(std::move(dirs)) == d - 1;
}

}  // namespace

std::vector<Hyperplane> facets_fourier_motzkin(const PositivePolyhedron& P) {
    const int d = P.dim();
    if (d > 5)
        throw std::invalid_argument("fourier-motzkin oracle: dimension cap of 5 exceeded");
    if (P.is_whole_orthant()) return {};
    const auto& gens = P.generators();
    const std::size_t k = gens.size();

    // Variables (x_1..x_d, lambda_1..lambda_k); lambda block eliminated last-first.
    std::vector<Row> rows;
    for (int j = 0; j < d; ++j) {
        Int l = 1;
        for (const RatVec& g : gens) l = int_lcm(l, rat_den(g[static_cast<std::size_t>(j)]));
        Row r{IntVec(static_cast<std::size_t>(d) + k, Int(0)), Int(0)};
        r.a[static_cast<std::size_t>(j)] = l;
        for (std::size_t i = 0; i < k; ++i) {
            const Rational& v = gens[i][static_cast<std::size_t>(j)];
            r.a[static_cast<std::size_t>(d) + i] = -(rat_num(v) * (l / rat_den(v)));
        }
        rows.push_back(std::move(r));
    }
    for (std::size_t i = 0; i < k; ++i) {
        Row r{IntVec(static_cast<std::size_t>(d) + k, Int(0)), Int(0)};
        r.a[static_cast<std::size_t>(d) + i] = 1;
        rows.push_back(std::move(r));
    }
    {
        Row ge{IntVec(static_cast<std::size_t>(d) + k, Int(0)), Int(1)};
        Row le{IntVec(static_cast<std::size_t>(d) + k, Int(0)), Int(-1)};
        for (std::size_t i = 0; i < k; ++i) {
            ge.a[static_cast<std::size_t>(d) + i] = 1;
            le.a[static_cast<std::size_t>(d) + i] = -1;
        }
        rows.push_back(std::move(ge));
        rows.push_back(std::move(le));
    }

    for (std::size_t step = 0; step < k; ++step) rows = eliminate_last(rows);

    // Strongest offset per normal direction, then the exact facet test.
    std::map<IntVec, Int> best;
    for (Row& r : rows) {
        if (is_zero(r.a)) {
            if (r.c > 0) throw std::logic_error("fourier-motzkin: inconsistent system");
            continue;
        }
        auto it = best.find(r.a);
        if (it == best.end() || it->second < r.c) best[r.a] = r.c;
    }
    std::vector<Hyperplane> out;
    for (auto& [h, c] : best) {
        if (c <= 0) continue;  // coordinate or slack inequality
        bool nonneg = std::all_of(h.begin(), h.end(), [](const Int& v) { return v >= 0; });
        if (!nonneg) throw std::logic_error("fourier-motzkin: negative facet normal");
        if (!tight_set_is_facet(P, h, c)) continue;
        out.emplace_back(h, c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IntVec> lattice_points_naive(const PositivePolyhedron& P, const Rational& w,
                                         const IntVec& box, long cap) {
    if (w < 0) throw std::invalid_argument("lattice oracle: w must be nonnegative");
    if (static_cast<int>(box.size()) != P.dim())
        throw std::invalid_argument("lattice oracle: box dimension mismatch");
    check_box_cap(box, cap);
    std::vector<Hyperplane> facets = facets_fourier_motzkin(P);
    std::vector<IntVec> out;
    for_each_box_point(box, [&](const IntVec& p) {
        for (const Hyperplane& f : facets)
            if (Rational(dot(f.normal, p)) < w * Rational(f.offset)) return;
        out.push_back(p);
    });
    return out;
}

namespace {

bool knapsack_from(const std::vector<IntVec>& gens, const std::vector<IntVec>& suffix_min,
                   const IntVec& target, IntVec& current, std::size_t start, long remaining) {
    if (remaining == 0) return true;
    const std::size_t d = target.size();
    for (std::size_t j = 0; j < d; ++j)
        if (current[j] + remaining * suffix_min[start][j] > target[j]) return false;
    for (std::size_t i = start; i < gens.size(); ++i) {
        bool fits = true;
        for (std::size_t j = 0; j < d; ++j) {
            current[j] += gens[i][j];
            if (current[j] > target[j]) fits = false;
        }
        if (fits && knapsack_from(gens, suffix_min, target, current, i, remaining - 1))
            return true;
        for (std::size_t j = 0; j < d; ++j) current[j] -= gens[i][j];
    }
    return false;
}

}  // namespace

Verdict closure_membership_bruteforce(const MonomialIdeal& I, int p, const IntVec& a,
                                      int m_cap) {
    if (!I.semigroup().is_standard_orthant())
        throw std::invalid_argument("closure oracle: requires a polynomial-ring (orthant) ideal");
    if (m_cap < 1) throw std::invalid_argument("closure oracle: m_cap must be positive");
    if (p < 0) throw std::invalid_argument("closure oracle: power must be nonnegative");
    for (const Int& v : a)
        if (v < 0) return Verdict::NonMember;
    if (p == 0) return Verdict::Member;

    const auto& gens = I.exponents();
    const std::size_t d = a.size();
    std::vector<IntVec> suffix_min(gens.size() + 1, IntVec(d, Int(0)));
    for (std::size_t i = gens.size(); i-- > 0;) {
        for (std::size_t j = 0; j < d; ++j)
            suffix_min[i][j] =
                i + 1 < gens.size() ? std::min(gens[i][j], suffix_min[i + 1][j]) : gens[i][j];
    }

    for (int m = 1; m <= m_cap; ++m) {
        IntVec target(d);
        for (std::size_t j = 0; j < d; ++j) target[j] = Int(m) * a[j];
        IntVec current(d, Int(0));
        if (knapsack_from(gens, suffix_min, target, current, 0, static_cast<long>(p) * m))
            return Verdict::Member;
    }

    PositivePolyhedron np(static_cast<int>(d), [&] {
        std::vector<RatVec> g;
        for (const IntVec& e : gens) g.push_back(to_rat_vec(e));
        return g;
    }());
    for (const Hyperplane& f : facets_fourier_motzkin(np)) {
        if (dot(f.normal, a) < Int(p) * f.offset) return Verdict::NonMember;
    }
    throw std::runtime_error(
        "closure oracle: brute-force search exhausted with no separating facet; raise m_cap");
}

}  // namespace oracle
}  // namespace reeskit
