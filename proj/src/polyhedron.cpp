#include "reeskit/polyhedron.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "reeskit/lp.hpp"

namespace reeskit {

namespace {

bool rat_vec_lex_less(const RatVec& a, const RatVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// g in conv(others) + orthant?
bool dominated_by(const RatVec& g, const std::vector<RatVec>& others) {
    if (others.empty()) return false;
    const std::size_t d = g.size();
    const std::size_t k = others.size();
    // variables: lambda_1..lambda_k, slack_1..slack_d
    std::vector<RatVec> A(d + 1, RatVec(k + d, Rational(0)));
    RatVec b(d + 1, Rational(0));
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < k; ++i) A[j][i] = others[i][j];
        A[j][k + j] = 1;
        b[j] = g[j];
    }
    for (std::size_t i = 0; i < k; ++i) A[d][i] = 1;
    b[d] = 1;
    return lp_feasible_point(std::move(A), std::move(b)).has_value();
}

IntVec scaled_integer_row(const RatVec& g, bool append_one) {
    Int l = 1;
    for (const Rational& v : g) l = int_lcm(l, rat_den(v));
    IntVec row;
    row.reserve(g.size() + (append_one ? 1 : 0));
    for (const Rational& v : g) row.push_back(rat_num(v) * (l / rat_den(v)));
    if (append_one) row.push_back(l);
    return row;
}

}  // namespace

PositivePolyhedron::PositivePolyhedron(int dim, std::vector<RatVec> generators) : dim_(dim) {
    if (dim < 1) throw std::invalid_argument("polyhedron: dimension must be positive");
    if (generators.empty()) throw std::invalid_argument("polyhedron: no generators");
    bool has_origin = false;
    for (const RatVec& g : generators) {
        if (static_cast<int>(g.size()) != dim)
            throw std::invalid_argument("polyhedron: generator dimension mismatch");
        bool zero = true;
        for (const Rational& v : g) {
            if (v < 0) throw std::invalid_argument("polyhedron: negative generator entry");
            if (v != 0) zero = false;
        }
        if (zero) has_origin = true;
    }
    if (has_origin) {
        // The represented set is the whole orthant.
        generators_.assign(1, RatVec(dim, Rational(0)));
        return;
    }
    std::sort(generators.begin(), generators.end(), rat_vec_lex_less);
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    // Greedy removal of dominated generators leaves exactly the vertex set.
    for (std::size_t i = 0; i < generators.size();) {
        std::vector<RatVec> others;
        for (std::size_t j = 0; j < generators.size(); ++j)
            if (j != i) others.push_back(generators[j]);
        if (dominated_by(generators[i], others))
            generators.erase(generators.begin() + static_cast<long>(i));
        else
            ++i;
    }
    generators_ = std::move(generators);
}

bool PositivePolyhedron::is_whole_orthant() const {
    return generators_.size() == 1 &&
           std::all_of(generators_[0].begin(), generators_[0].end(),
                       [](const Rational& v) { return v == 0; });
}

std::vector<IntVec> dual_cone_extreme_rays(const std::vector<IntVec>& rows) {
    if (rows.empty()) throw std::invalid_argument("double description: no rows");
    const std::size_t m = rows.size();
    const std::size_t n = rows[0].size();
    if (m > 64) throw std::invalid_argument("double description: more than 64 rows unsupported");

    // Initial simplicial cone from a nonsingular row subset.
    std::vector<std::size_t> init;
    {
        std::vector<RatVec> acc;
        for (std::size_t i = 0; i < m && init.size() < n; ++i) {
            acc.push_back(to_rat_vec(rows[i]));
            if (rank_of(acc) == static_cast<int>(acc.size()))
                init.push_back(i);
            else
                acc.pop_back();
        }
        if (init.size() < n)
            throw std::invalid_argument("double description: row matrix not of full column rank");
    }

    struct Ray {
        IntVec v;
        std::uint64_t zero_mask = 0;  // over processed row indices
    };

    std::vector<char> processed(m, 0);
    auto compute_mask = [&](const IntVec& v) {
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (processed[i] && dot(rows[i], v) == 0) mask |= (std::uint64_t{1} << i);
        return mask;
    };

    std::vector<Ray> rays;
    {
        std::vector<RatVec> B;
        for (std::size_t i : init) B.push_back(to_rat_vec(rows[i]));
        for (std::size_t i : init) processed[i] = 1;
        for (std::size_t j = 0; j < n; ++j) {
            RatVec e(n, Rational(0));
            e[j] = 1;
            RatVec col;
            if (!solve_square(B, e, col))
                throw std::logic_error("double description: singular initial basis");
            IntVec r = scaled_integer_row(col, false);
            make_primitive(r);
            rays.push_back(Ray{std::move(r), 0});
        }
        for (Ray& r : rays) r.zero_mask = compute_mask(r.v);
    }

    for (std::size_t a = 0; a < m; ++a) {
        if (processed[a]) continue;
        std::vector<Int> side(rays.size());
        for (std::size_t i = 0; i < rays.size(); ++i) side[i] = dot(rows[a], rays[i].v);

        bool any_negative =
            std::any_of(side.begin(), side.end(), [](const Int& s) { return s < 0; });
        processed[a] = 1;
        if (!any_negative) {
            for (std::size_t i = 0; i < rays.size(); ++i)
                if (side[i] == 0) rays[i].zero_mask |= (std::uint64_t{1} << a);
            continue;
        }

        std::vector<Ray> next;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (side[i] < 0) continue;
            Ray kept = rays[i];
            if (side[i] == 0) kept.zero_mask |= (std::uint64_t{1} << a);
            next.push_back(std::move(kept));
        }
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (side[i] <= 0) continue;
            for (std::size_t j = 0; j < rays.size(); ++j) {
                if (side[j] >= 0) continue;
                std::uint64_t common = rays[i].zero_mask & rays[j].zero_mask;
                bool adjacent = true;
                for (std::size_t k = 0; k < rays.size(); ++k) {
                    if (k == i || k == j) continue;
                    if ((common & ~rays[k].zero_mask) == 0) {
                        adjacent = false;
                        break;
                    }
                }
                if (!adjacent) continue;
                IntVec combo(n);
                for (std::size_t t = 0; t < n; ++t)
                    combo[t] = side[i] * rays[j].v[t] - side[j] * rays[i].v[t];
                make_primitive(combo);
                if (is_zero(combo)) continue;
                bool dup = std::any_of(next.begin(), next.end(),
                                       [&](const Ray& r) { return r.v == combo; });
                if (dup) continue;
                Ray created{std::move(combo), 0};
                created.zero_mask = compute_mask(created.v);
                next.push_back(std::move(created));
            }
        }
        rays = std::move(next);
    }

    std::vector<IntVec> out;
    out.reserve(rays.size());
    for (Ray& r : rays) out.push_back(std::move(r.v));
    return out;
}

std::vector<Hyperplane> facet_enumeration(const PositivePolyhedron& P) {
    if (P.is_whole_orthant()) return {};
    const int d = P.dim();
    std::vector<IntVec> rows;
    for (const RatVec& g : P.generators()) rows.push_back(scaled_integer_row(g, true));
    for (int j = 0; j < d; ++j) {
        IntVec row(d + 1, Int(0));
        row[static_cast<std::size_t>(j)] = 1;
        rows.push_back(std::move(row));
    }
    std::vector<Hyperplane> out;
    for (IntVec& ray : dual_cone_extreme_rays(rows)) {
        if (ray[static_cast<std::size_t>(d)] >= 0) continue;
        Int offset = -ray[static_cast<std::size_t>(d)];
        ray.pop_back();
        out.emplace_back(std::move(ray), std::move(offset));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool polyhedron_membership(const PositivePolyhedron& P, const Rational& w, const RatVec& point) {
    if (w < 0) throw std::invalid_argument("membership: w must be nonnegative");
    if (static_cast<int>(point.size()) != P.dim())
        throw std::invalid_argument("membership: point dimension mismatch");
    for (const Rational& v : point)
        if (v < 0) return false;
    const std::size_t d = point.size();
    const std::size_t k = P.generators().size();
    std::vector<RatVec> A(d + 1, RatVec(k + d, Rational(0)));
    RatVec b(d + 1, Rational(0));
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < k; ++i) A[j][i] = P.generators()[i][j];
        A[j][k + j] = 1;
        b[j] = point[j];
    }
    for (std::size_t i = 0; i < k; ++i) A[d][i] = 1;
    b[d] = w;
    return lp_feasible_point(std::move(A), std::move(b)).has_value();
}

bool facet_membership(const std::vector<Hyperplane>& facets, const Rational& w,
                      const RatVec& point) {
    for (const Rational& v : point)
        if (v < 0) return false;
    for (const Hyperplane& f : facets) {
        if (dot(f.normal, point) < w * Rational(f.offset)) return false;
    }
    return true;
}

PositivePolyhedron conv_join(const PositivePolyhedron& P1, const PositivePolyhedron& P2) {
    const int d1 = P1.dim(), d2 = P2.dim();
    std::vector<RatVec> gens;
    for (const RatVec& g : P1.generators()) {
        RatVec v(static_cast<std::size_t>(d1 + d2), Rational(0));
        std::copy(g.begin(), g.end(), v.begin());
        gens.push_back(std::move(v));
    }
    for (const RatVec& g : P2.generators()) {
        RatVec v(static_cast<std::size_t>(d1 + d2), Rational(0));
        std::copy(g.begin(), g.end(), v.begin() + d1);
        gens.push_back(std::move(v));
    }
    return PositivePolyhedron(d1 + d2, std::move(gens));
}

Int box_volume(const IntVec& box) {
    Int v = 1;
    for (const Int& b : box) v *= (b + 1);
    return v;
}

void check_box_cap(const IntVec& box, long cap) {
    if (box_volume(box) > cap)
        throw cap_exceeded_error("enumeration box exceeds cap of " + std::to_string(cap) +
                                 " points");
}

std::vector<IntVec> scale_and_ceil_lattice(const PositivePolyhedron& P, const Rational& w,
                                           const IntVec& box, long cap) {
    if (w < 0) throw std::invalid_argument("lattice enumeration: w must be nonnegative");
    if (static_cast<int>(box.size()) != P.dim())
        throw std::invalid_argument("lattice enumeration: box dimension mismatch");
    for (const Int& b : box)
        if (b < 0) throw std::invalid_argument("lattice enumeration: negative box bound");
    check_box_cap(box, cap);
    std::vector<IntVec> out;
    for_each_box_point(box, [&](const IntVec& p) {
        if (polyhedron_membership(P, w, to_rat_vec(p))) out.push_back(p);
    });
    return out;
}

}  // namespace reeskit
