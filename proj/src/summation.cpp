#include "reeskit/summation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "reeskit/lp.hpp"

namespace reeskit {

namespace {

IntVec concat(const IntVec& a, const IntVec& b) {
    IntVec out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

// One monomial operand with its weight table at level w.
struct Side {
    ReesPackage pkg;
    SemigroupTable table;

    const AffineSemigroup& semigroup() const { return pkg.monomial().semigroup; }
    bool unit() const { return !table.has_facets; }
};

Side make_side(const MonomialIdeal& I, const Rational& w, long cap) {
    ReesPackage pkg = rees_package_monomial(I);
    IntVec box = generator_box(pkg, w);
    SemigroupTable table = build_semigroup_table(pkg, box, cap);
    return Side{std::move(pkg), std::move(table)};
}

// Joint membership test: weight_l/e_l + weight_r/e_r >= w, scaled to integers.
struct PairTest {
    Int left_mul, right_mul, rhs;
    bool left_unit, right_unit;

    bool operator()(const SemigroupTable& lt, std::size_t li, const SemigroupTable& rt,
                    std::size_t ri) const {
        if (!lt.in_s[li] || !rt.in_s[ri]) return false;
        if (left_unit || right_unit) return true;
        return lt.weight[li] * left_mul + rt.weight[ri] * right_mul >= rhs;
    }
};

PairTest make_pair_test(const Side& L, const Side& R, const Rational& w) {
    PairTest t;
    t.left_unit = L.unit();
    t.right_unit = R.unit();
    t.left_mul = R.table.e * rat_den(w);
    t.right_mul = L.table.e * rat_den(w);
    t.rhs = rat_num(w) * L.table.e * R.table.e;
    return t;
}

// Minimal generators of the joined rational power, as concatenated pairs.
std::vector<std::pair<IntVec, IntVec>> join_lhs_generators(const Side& L, const Side& R,
                                                           const Rational& w) {
    PairTest test = make_pair_test(L, R, w);
    std::map<Rational, std::vector<IntVec>> fiber_cache;
    auto fiber = [&](const Rational& level) -> const std::vector<IntVec>& {
        auto it = fiber_cache.find(level);
        if (it == fiber_cache.end())
            it = fiber_cache
                     .emplace(level, table_level_generators(R.table,
                                                            R.semigroup().generators(), level))
                     .first;
        return it->second;
    };

    std::vector<std::pair<IntVec, IntVec>> out;
    for_each_box_point(L.table.box, [&](const IntVec& p) {
        const std::size_t ip = L.table.index(p);
        if (!L.table.in_s[ip]) return;
        // Only weight-jump points can start a minimal pair.
        for (const IntVec& g : L.semigroup().generators()) {
            IntVec q = vec_sub(p, g);
            if (!L.table.contains(q)) continue;
            const std::size_t iq = L.table.index(q);
            if (L.table.in_s[iq] &&
                (L.unit() || L.table.weight[iq] == L.table.weight[ip]))
                return;
        }
        Rational residual(0);
        if (!L.unit()) {
            Rational beta(L.table.weight[ip], L.table.e);
            if (beta < w) residual = w - beta;
        }
        for (const IntVec& n : fiber(residual)) {
            const std::size_t in = R.table.index(n);
            bool minimal = test(L.table, ip, R.table, in);
            if (!minimal) continue;
            for (const IntVec& g : L.semigroup().generators()) {
                IntVec q = vec_sub(p, g);
                if (L.table.contains(q) && test(L.table, L.table.index(q), R.table, in)) {
                    minimal = false;
                    break;
                }
            }
            if (!minimal) continue;
            for (const IntVec& g : R.semigroup().generators()) {
                IntVec q = vec_sub(n, g);
                if (R.table.contains(q) && test(L.table, ip, R.table, R.table.index(q))) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) out.emplace_back(p, n);
        }
    });
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return lex_less(a.first, b.first);
        return lex_less(a.second, b.second);
    });
    return out;
}

// b - a in S, both inside the table box.
bool table_divides(const SemigroupTable& table, const IntVec& a, const IntVec& b) {
    IntVec diff = vec_sub(b, a);
    if (!table.contains(diff)) return false;
    return table.in_s[table.index(diff)] != 0;
}

}  // namespace

JoinedPackage join_packages(const ReesPackage& P, const ReesPackage& Q) {
    PositivePolyhedron omega = conv_join(P.polyhedron, Q.polyhedron);
    std::vector<Hyperplane> paired;
    std::vector<std::pair<int, int>> provenance;
    for (std::size_t k1 = 0; k1 < P.facets.size(); ++k1) {
        for (std::size_t k2 = 0; k2 < Q.facets.size(); ++k2) {
            paired.push_back(star(P.facets[k1], Q.facets[k2]));
            provenance.emplace_back(static_cast<int>(k1), static_cast<int>(k2));
        }
    }
    std::set<Hyperplane> distinct(paired.begin(), paired.end());
    if (distinct.size() != paired.size())
        throw std::logic_error("join: star products of distinct facet pairs collided");
    std::vector<Hyperplane> direct = facet_enumeration(omega);
    if (std::vector<Hyperplane>(distinct.begin(), distinct.end()) != direct)
        throw std::logic_error("join: paired facets disagree with the joined polyhedron");
    return JoinedPackage{P, Q, std::move(omega), std::move(paired), std::move(provenance)};
}

std::optional<AlphaCertificate> summation_split(const JoinedPackage& JP, const Rational& w,
                                                const RatVec& point) {
    if (w < 0) throw std::invalid_argument("split: w must be nonnegative");
    const int d1 = JP.left.polyhedron.dim();
    const int d2 = JP.right.polyhedron.dim();
    if (static_cast<int>(point.size()) != d1 + d2)
        throw std::invalid_argument("split: point dimension mismatch");
    for (const Rational& v : point)
        if (v < 0) return std::nullopt;

    const auto& G1 = JP.left.polyhedron.generators();
    const auto& G2 = JP.right.polyhedron.generators();
    const std::size_t k1 = G1.size(), k2 = G2.size();
    const std::size_t rows = static_cast<std::size_t>(d1 + d2) + 1;
    const std::size_t vars = k1 + k2 + static_cast<std::size_t>(d1 + d2);

    std::vector<RatVec> A(rows, RatVec(vars, Rational(0)));
    RatVec b(rows, Rational(0));
    for (int j = 0; j < d1; ++j) {
        const std::size_t r = static_cast<std::size_t>(j);
        for (std::size_t i = 0; i < k1; ++i) A[r][i] = G1[i][static_cast<std::size_t>(j)];
        A[r][k1 + k2 + r] = 1;
        b[r] = point[r];
    }
    for (int j = 0; j < d2; ++j) {
        const std::size_t r = static_cast<std::size_t>(d1 + j);
        for (std::size_t i = 0; i < k2; ++i) A[r][k1 + i] = G2[i][static_cast<std::size_t>(j)];
        A[r][k1 + k2 + r] = 1;
        b[r] = point[r];
    }
    for (std::size_t i = 0; i < k1 + k2; ++i) A[rows - 1][i] = 1;
    b[rows - 1] = w;

    auto solution = lp_feasible_point(std::move(A), std::move(b));
    if (!solution) return std::nullopt;

    Rational alpha = 0;
    for (std::size_t i = 0; i < k1; ++i) alpha += (*solution)[i];
    AlphaCertificate cert;
    cert.alpha = alpha;
    cert.left_point.assign(point.begin(), point.begin() + d1);
    cert.right_point.assign(point.begin() + d1, point.end());
    if (alpha < 0 || alpha > w ||
        !facet_membership(JP.left.facets, alpha, cert.left_point) ||
        !facet_membership(JP.right.facets, w - alpha, cert.right_point))
        throw std::logic_error("split: certificate failed verification");
    return cert;
}

std::vector<Rational> alpha_term_list(const JoinedPackage& JP, const Rational& w, long cap) {
    if (w < 0) throw std::invalid_argument("alpha terms: w must be nonnegative");
    if (w == 0) return {Rational(0)};
    const Int e = int_lcm(denominator_bound(JP.left), denominator_bound(JP.right));

    std::vector<Rational> grid;  // descending
    const Int kmax = rat_floor(w * Rational(e));
    if (Rational(kmax, e) != w) grid.push_back(w);
    for (Int k = kmax; k >= 0; --k) grid.emplace_back(k, e);

    const std::vector<Rational> v1 = achieved_levels(JP.left, w, cap);
    const std::vector<Rational> v2 = achieved_levels(JP.right, w, cap);
    std::vector<char> covered(v1.size() * v2.size(), 0);

    std::vector<Rational> kept;
    for (const Rational& alpha : grid) {
        bool needed = false;
        for (std::size_t i = 0; i < v1.size() && !needed; ++i) {
            if (v1[i] < alpha) continue;
            for (std::size_t j = 0; j < v2.size(); ++j) {
                if (v2[j] < w - alpha) continue;
                if (!covered[i * v2.size() + j]) {
                    needed = true;
                    break;
                }
            }
        }
        if (!needed) continue;
        kept.push_back(alpha);
        for (std::size_t i = 0; i < v1.size(); ++i) {
            if (v1[i] < alpha) continue;
            for (std::size_t j = 0; j < v2.size(); ++j)
                if (v2[j] >= w - alpha) covered[i * v2.size() + j] = 1;
        }
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

std::string verdict_name(SummationVerdict v) {
    switch (v) {
        case SummationVerdict::Equal: return "EQUAL";
        case SummationVerdict::LhsNotInRhs: return "LHS_NOT_IN_RHS";
        case SummationVerdict::RhsNotInLhs: return "RHS_NOT_IN_LHS";
    }
    return "";
}

SummationReport check_summation_monomial(const MonomialIdeal& I, const MonomialIdeal& J,
                                         const Rational& w, long cap) {
    if (w < 0) throw std::invalid_argument("summation check: w must be nonnegative");
    Side L = make_side(I, w, cap);
    Side R = make_side(J, w, cap);
    JoinedPackage JP = join_packages(L.pkg, R.pkg);

    SummationReport report;
    report.alpha_terms = alpha_term_list(JP, w, cap);

    // Left side: minimal generators of the joined rational power.
    auto lhs = join_lhs_generators(L, R, w);
    for (const auto& [m, n] : lhs) report.lhs_generators.push_back(concat(m, n));

    // Right side: products of rational-power generators over the alpha terms.
    std::set<std::pair<IntVec, IntVec>> rhs;
    for (const Rational& alpha : report.alpha_terms) {
        auto gl = table_level_generators(L.table, L.semigroup().generators(), alpha);
        auto gr = table_level_generators(R.table, R.semigroup().generators(), w - alpha);
        for (const IntVec& g : gl)
            for (const IntVec& h : gr) rhs.emplace(g, h);
    }
    for (const auto& [g, h] : rhs) report.rhs_generators.push_back(concat(g, h));

    PairTest test = make_pair_test(L, R, w);
    for (const auto& [g, h] : rhs) {
        if (!test(L.table, L.table.index(g), R.table, R.table.index(h))) {
            report.verdict = SummationVerdict::RhsNotInLhs;
            report.witness = concat(g, h);
            return report;
        }
    }
    for (const auto& [m, n] : lhs) {
        bool inside = false;
        for (const auto& [g, h] : rhs) {
            if (table_divides(L.table, g, m) && table_divides(R.table, h, n)) {
                inside = true;
                break;
            }
        }
        if (!inside) {
            report.verdict = SummationVerdict::LhsNotInRhs;
            report.witness = concat(m, n);
            return report;
        }
    }
    report.verdict = SummationVerdict::Equal;
    return report;
}

SummationReport check_summation_lattice(const ReesPackage& P, const ReesPackage& Q,
                                        const Rational& w, long cap) {
    if (w < 0) throw std::invalid_argument("summation check: w must be nonnegative");
    JoinedPackage JP = join_packages(P, Q);
    SummationReport report;
    report.alpha_terms = alpha_term_list(JP, w, cap);

    if (P.facets.empty() || Q.facets.empty()) return report;  // unit side: trivially equal

    auto left_points = achieved_value_points(P, w, cap);
    auto right_points = achieved_value_points(Q, w, cap);

    const std::size_t total = left_points.size() * right_points.size();
    const std::size_t lp_stride = std::max<std::size_t>(1, total / 200);
    std::size_t pair_index = 0;
    for (const IntVec& u : left_points) {
        for (const IntVec& x : right_points) {
            RatVec joint = to_rat_vec(concat(u, x));
            bool member = facet_membership(JP.paired_facets, w, joint);
            bool covered = false;
            for (const Rational& alpha : report.alpha_terms) {
                if (facet_membership(P.facets, alpha, to_rat_vec(u)) &&
                    facet_membership(Q.facets, w - alpha, to_rat_vec(x))) {
                    covered = true;
                    break;
                }
            }
            if (member != covered) {
                report.verdict = covered ? SummationVerdict::RhsNotInLhs
                                         : SummationVerdict::LhsNotInRhs;
                report.witness = concat(u, x);
                return report;
            }
            if (pair_index % lp_stride == 0 &&
                polyhedron_membership(JP.omega, w, joint) != member)
                throw std::logic_error("summation check: facet and LP membership disagree");
            ++pair_index;
        }
    }
    return report;
}

bool in_product_sum(const MonomialIdeal& I, const MonomialIdeal& J, const Rational& w,
                    const IntVec& point, long cap) {
    if (!(I.semigroup() == J.semigroup()))
        throw std::invalid_argument("product sum: ideals must share the ambient ring");
    ReesPackage PI = rees_package_monomial(I);
    ReesPackage PJ = rees_package_monomial(J);
    if (!rational_power_membership(PI, Rational(0), point)) return false;  // not even in S
    for (const Int& v : point)
        if (v < 0) return false;
    check_box_cap(point, cap);

    const Int e = int_lcm(denominator_bound(PI), denominator_bound(PJ));
    std::vector<Rational> grid;
    const Int kmax = rat_floor(w * Rational(e));
    for (Int k = 0; k <= kmax; ++k) grid.emplace_back(k, e);
    if (Rational(kmax, e) != w) grid.push_back(w);

    bool found = false;
    for_each_box_point(point, [&](const IntVec& u) {
        if (found) return;
        IntVec rest = vec_sub(point, u);
        for (const Rational& alpha : grid) {
            if (rational_power_membership(PI, alpha, u) &&
                rational_power_membership(PJ, w - alpha, rest)) {
                found = true;
                return;
            }
        }
    });
    return found;
}

CounterexampleReport same_ring_counterexample(int n, long cap) {
    if (n < 1) throw std::invalid_argument("counterexample: n must be positive");
    AffineSemigroup plane = AffineSemigroup::orthant(2);
    MonomialIdeal I(plane, {{Int(1), Int(3)}});
    MonomialIdeal J(plane, {{Int(3), Int(1)}});
    MonomialIdeal sum(plane, {{Int(1), Int(3)}, {Int(3), Int(1)}});

    CounterexampleReport report;
    report.n = n;
    report.w = Rational(2 * n + 1);
    report.witness = IntVec{Int(4 * n + 2), Int(4 * n + 2)};
    report.in_closure = rational_power_membership(sum, report.w, report.witness);
    report.in_sum = in_product_sum(I, J, report.w, report.witness, cap);
    return report;
}

SandwichReport asymptotic_sandwich_check(const MonomialIdeal& I, const MonomialIdeal& J,
                                         const Rational& w, const Rational& tau, long cap) {
    if (tau < 0 || tau > w)
        throw std::invalid_argument("sandwich: tau must lie in [0, w]");
    Side L = make_side(I, w, cap);
    Side R = make_side(J, w, cap);
    JoinedPackage JP = join_packages(L.pkg, R.pkg);
    PairTest test = make_pair_test(L, R, w);

    SandwichReport report;
    report.left_holds = true;
    for (const Rational& alpha : alpha_term_list(JP, w, cap)) {
        auto gl = table_level_generators(L.table, L.semigroup().generators(), alpha);
        auto gr = table_level_generators(R.table, R.semigroup().generators(), w - alpha);
        for (const IntVec& g : gl) {
            for (const IntVec& h : gr) {
                if (!test(L.table, L.table.index(g), R.table, R.table.index(h))) {
                    report.left_holds = false;
                    report.witness = concat(g, h);
                    break;
                }
            }
            if (!report.left_holds) break;
        }
        if (!report.left_holds) break;
    }

    report.right_holds = true;
    const Int tl = rat_num(tau) * L.table.e, tl_mul = rat_den(tau);
    const Rational rest = w - tau;
    const Int tr = rat_num(rest) * R.table.e, tr_mul = rat_den(rest);
    for (const auto& [m, n] : join_lhs_generators(L, R, w)) {
        bool left_side = L.unit() || L.table.weight[L.table.index(m)] * tl_mul >= tl;
        bool right_side = R.unit() || R.table.weight[R.table.index(n)] * tr_mul >= tr;
        if (!left_side && !right_side) {
            report.right_holds = false;
            if (!report.witness) report.witness = concat(m, n);
            break;
        }
    }
    return report;
}

std::optional<Rational> sandwich_w0_search(const MonomialIdeal& I, const MonomialIdeal& J,
                                           const Rational& w, long cap) {
    ReesPackage PI = rees_package_monomial(I);
    ReesPackage PJ = rees_package_monomial(J);
    const Int e = int_lcm(denominator_bound(PI), denominator_bound(PJ));
    for (Int k = 0; Rational(k, e) * 2 <= w; ++k) {
        Rational w0(k, e);
        bool all_hold = true;
        for (Int j = rat_ceil(w0 * Rational(e)); Rational(j, e) <= w - w0 && all_hold; ++j) {
            Rational tau(j, e);
            if (tau < w0) continue;
            if (!asymptotic_sandwich_check(I, J, w, tau, cap).right_holds) all_hold = false;
        }
        if (all_hold) return w0;
    }
    return std::nullopt;
}

}  // namespace reeskit
