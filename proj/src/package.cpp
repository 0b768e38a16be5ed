#include "reeskit/package.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace reeskit {

namespace {

Int max_coordinate(const std::vector<IntVec>& vecs) {
    Int m = 0;
    for (const IntVec& v : vecs)
        for (const Int& x : v) m = std::max(m, x);
    return m;
}

void require_nonneg_generators(const ReesPackage& pkg) {
    if (!pkg.is_monomial())
        throw std::invalid_argument("operation requires a monomial package");
    if (!pkg.monomial().semigroup.has_nonnegative_generators())
        throw std::invalid_argument(
            "generator enumeration requires a semigroup with componentwise nonnegative "
            "generators");
}

IntVec facet_values_of(const std::vector<Hyperplane>& facets, const PositivePolyhedron& poly) {
    IntVec values;
    values.reserve(facets.size());
    for (const Hyperplane& f : facets) values.push_back(f.offset);
    // The offset is the minimum of the valuation over the generators; assert it.
    for (std::size_t k = 0; k < facets.size(); ++k) {
        Rational mn;
        bool first = true;
        for (const RatVec& g : poly.generators()) {
            Rational v = dot(facets[k].normal, g);
            if (first || v < mn) mn = v, first = false;
        }
        if (!first && mn != Rational(values[k]))
            throw std::logic_error("package: facet offset is not the ideal value");
    }
    return values;
}

}  // namespace

ReesPackage rees_package_monomial(const MonomialIdeal& I) {
    const AffineSemigroup& S = I.semigroup();
    const auto& valuations = S.cone_valuations();
    const int d = static_cast<int>(valuations.size());

    std::vector<RatVec> images;
    images.reserve(I.exponents().size());
    for (const IntVec& a : I.exponents()) images.push_back(to_rat_vec(S.value_vector(a)));

    PositivePolyhedron sigma(d, std::move(images));
    std::vector<Hyperplane> facets = facet_enumeration(sigma);
    IntVec values = facet_values_of(facets, sigma);

    std::vector<IntVec> composite;
    composite.reserve(facets.size());
    for (const Hyperplane& f : facets) {
        IntVec u(static_cast<std::size_t>(S.rank()), Int(0));
        for (std::size_t j = 0; j < valuations.size(); ++j)
            for (int t = 0; t < S.rank(); ++t)
                u[static_cast<std::size_t>(t)] +=
                    f.normal[j] * valuations[j].normal[static_cast<std::size_t>(t)];
        composite.push_back(std::move(u));
    }

    return ReesPackage{d, MonomialValueMap{S, I.exponents(), std::move(composite)},
                       std::move(sigma), std::move(facets), std::move(values)};
}

ReesPackage rees_package_diagrams(const DiagramIdeal& D) {
    const int d = D.family().gamma_dim();
    std::vector<RatVec> images;
    for (const Diagram& sigma : D.lambda())
        images.push_back(to_rat_vec(gamma_vector(D.family(), sigma)));
    PositivePolyhedron gamma_poly(d, std::move(images));
    std::vector<Hyperplane> facets = facet_enumeration(gamma_poly);
    IntVec values = facet_values_of(facets, gamma_poly);

    if (D.family().kind == FamilyKind::Hankel) {
        // The Rees valuations of a Hankel product are contained in the
        // canonical gamma valuations, so every facet normal must be a unit
        // vector; the containment may be strict, which reporting layers flag.
        const int s1 = D.lambda().front().max_part();
        for (const Hyperplane& f : facets) {
            int nonzero = 0, position = -1;
            for (int j = 0; j < d; ++j) {
                if (f.normal[static_cast<std::size_t>(j)] != 0) {
                    ++nonzero;
                    position = j;
                }
            }
            if (nonzero != 1 || f.normal[static_cast<std::size_t>(position)] != 1 ||
                position >= s1)
                throw std::logic_error("hankel package: facet outside the gamma valuations");
        }
    }

    return ReesPackage{d, DiagramValueMap{D.family(), D.lambda()}, std::move(gamma_poly),
                       std::move(facets), std::move(values)};
}

Int denominator_bound(const ReesPackage& pkg) {
    Int e = 1;
    for (const Int& c : pkg.facet_values) e = int_lcm(e, c);
    return e;
}

// ---- monomial rational powers ------------------------------------------------

bool rational_power_membership(const ReesPackage& pkg, const Rational& w, const IntVec& n) {
    if (w < 0) throw std::invalid_argument("rational power: w must be nonnegative");
    const MonomialValueMap& vm = pkg.monomial();
    if (n.size() != static_cast<std::size_t>(vm.semigroup.rank()))
        throw std::invalid_argument("rational power: dimension mismatch");
    if (!membership_in_semigroup(vm.semigroup, n)) return false;
    for (std::size_t k = 0; k < pkg.facets.size(); ++k) {
        Int value = dot(vm.composite_normals[k], n);
        if (Rational(value) < w * Rational(pkg.facet_values[k])) return false;
    }
    return true;
}

bool rational_power_membership(const MonomialIdeal& I, const Rational& w, const IntVec& n) {
    return rational_power_membership(rees_package_monomial(I), w, n);
}

std::size_t SemigroupTable::index(const IntVec& p) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        idx += static_cast<std::size_t>(p[i]) * strides[i];
    return idx;
}

bool SemigroupTable::contains(const IntVec& p) const {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] < 0 || p[i] > box[i]) return false;
    return true;
}

SemigroupTable build_semigroup_table(const ReesPackage& pkg, const IntVec& box, long cap) {
    require_nonneg_generators(pkg);
    check_box_cap(box, cap);
    const MonomialValueMap& vm = pkg.monomial();
    const std::size_t s = box.size();

    SemigroupTable table;
    table.box = box;
    table.e = denominator_bound(pkg);
    table.has_facets = !pkg.facets.empty();
    table.strides.assign(s, 1);
    for (std::size_t i = s; i-- > 1;)
        table.strides[i - 1] =
            table.strides[i] * static_cast<std::size_t>(Int(box[i] + 1).convert_to<long>());
    std::size_t total = static_cast<std::size_t>(box_volume(box).convert_to<long>());
    table.in_s.assign(total, 0);
    table.weight.assign(total, Int(0));

    // Scale factors e/c_k make the weights integral.
    std::vector<Int> scale;
    for (const Int& c : pkg.facet_values) scale.push_back(table.e / c);

    for_each_box_point(box, [&](const IntVec& p) {
        const std::size_t idx = table.index(p);
        if (is_zero(p)) {
            table.in_s[idx] = 1;
        } else {
            bool member = false;
            for (const IntVec& g : vm.semigroup.generators()) {
                IntVec q = vec_sub(p, g);
                if (!table.contains(q)) continue;
                if (table.in_s[table.index(q)]) {
                    member = true;
                    break;
                }
            }
            table.in_s[idx] = member ? 1 : 0;
        }
        if (!table.in_s[idx] || !table.has_facets) return;
        Int best;
        bool first = true;
        for (std::size_t k = 0; k < pkg.facets.size(); ++k) {
            Int v = dot(vm.composite_normals[k], p) * scale[k];
            if (first || v < best) best = v, first = false;
        }
        table.weight[idx] = best;
    });
    return table;
}

IntVec generator_box(const ReesPackage& pkg, const Rational& w) {
    require_nonneg_generators(pkg);
    const MonomialValueMap& vm = pkg.monomial();
    Int m = max_coordinate(vm.ideal_exponents);
    Int g = max_coordinate(vm.semigroup.generators());
    Int bound = rat_ceil(w * Rational(m)) + g;
    return IntVec(static_cast<std::size_t>(vm.semigroup.rank()), bound);
}

std::vector<IntVec> table_level_generators(const SemigroupTable& table,
                                           const std::vector<IntVec>& semigroup_generators,
                                           const Rational& alpha) {
    // weight/e >= alpha  <=>  weight * den(alpha) >= num(alpha) * e
    const Int lhs_mul = rat_den(alpha);
    const Int rhs = rat_num(alpha) * table.e;
    auto member = [&](std::size_t idx) {
        if (!table.in_s[idx]) return false;
        if (!table.has_facets) return true;
        return table.weight[idx] * lhs_mul >= rhs;
    };
    std::vector<IntVec> out;
    for_each_box_point(table.box, [&](const IntVec& p) {
        const std::size_t idx = table.index(p);
        if (!member(idx)) return;
        for (const IntVec& g : semigroup_generators) {
            IntVec q = vec_sub(p, g);
            if (table.contains(q) && member(table.index(q))) return;
        }
        out.push_back(p);
    });
    return out;
}

std::vector<IntVec> rational_power_generators(const ReesPackage& pkg, const Rational& w,
                                              long cap) {
    if (w < 0) throw std::invalid_argument("rational power: w must be nonnegative");
    require_nonneg_generators(pkg);
    const MonomialValueMap& vm = pkg.monomial();
    const Int e = denominator_bound(pkg);
    const Rational reduced(rat_ceil(w * Rational(e)), e);
    if (reduced == 0 || pkg.facets.empty())
        return {IntVec(static_cast<std::size_t>(vm.semigroup.rank()), Int(0))};
    IntVec box = generator_box(pkg, reduced);
    SemigroupTable table = build_semigroup_table(pkg, box, cap);
    return table_level_generators(table, vm.semigroup.generators(), reduced);
}

std::vector<IntVec> rational_power_generators(const MonomialIdeal& I, const Rational& w,
                                              long cap) {
    return rational_power_generators(rees_package_monomial(I), w, cap);
}

// ---- diagram rational powers -------------------------------------------------

bool rational_power_shape_membership(const ReesPackage& pkg, const Rational& w,
                                     const Diagram& sigma) {
    const DiagramValueMap& vm = pkg.diagram();
    if (sigma.max_part() > vm.family.gamma_dim())
        throw std::invalid_argument("shape membership: part exceeds the family bound");
    return facet_membership(pkg.facets, w, to_rat_vec(gamma_vector(vm.family, sigma)));
}

bool rational_power_shape_membership(const DiagramIdeal& D, const Rational& w,
                                     const Diagram& sigma) {
    return rational_power_shape_membership(rees_package_diagrams(D), w, sigma);
}

std::vector<IntVec> symbolic_intersection_exponents(const DiagramIdeal& D, const Rational& w,
                                                    long cap) {
    if (w < 0) throw std::invalid_argument("symbolic exponents: w must be nonnegative");
    if (D.family().kind == FamilyKind::Hankel) {
        const Diagram& sigma = D.lambda().front();
        IntVec v(static_cast<std::size_t>(D.family().n));
        for (int t = 1; t <= D.family().n; ++t)
            v[static_cast<std::size_t>(t - 1)] = rat_ceil(w * Rational(gamma(t, sigma)));
        return {std::move(v)};
    }
    ReesPackage pkg = rees_package_diagrams(D);
    const int d = pkg.ambient_dim;
    if (pkg.facets.empty()) return {IntVec(static_cast<std::size_t>(d), Int(0))};
    Int max_offset = 0;
    for (const Int& c : pkg.facet_values) max_offset = std::max(max_offset, c);
    IntVec box(static_cast<std::size_t>(d), rat_ceil(w * Rational(max_offset)));
    check_box_cap(box, cap);
    auto member = [&](const IntVec& p) {
        for (const Hyperplane& f : pkg.facets)
            if (Rational(dot(f.normal, p)) < w * Rational(f.offset)) return false;
        return true;
    };
    std::vector<IntVec> out;
    for_each_box_point(box, [&](const IntVec& p) {
        if (!member(p)) return;
        // The member set is upward closed, so minimality is a local test.
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i] == 0) continue;
            IntVec q = p;
            --q[i];
            if (member(q)) return;
        }
        out.push_back(p);
    });
    return out;
}

// ---- achieved levels ----------------------------------------------------------

namespace {

void enumerate_diagrams(int part_bound, const Int& size_bound,
                        const std::function<void(const Diagram&)>& visit) {
    std::vector<int> parts;
    std::function<void(int, Int)> rec = [&](int max_part, Int remaining) {
        visit(Diagram(parts));
        for (int s = std::min(max_part, part_bound); s >= 1; --s) {
            if (remaining < s) continue;
            parts.push_back(s);
            rec(s, remaining - s);
            parts.pop_back();
        }
    };
    rec(part_bound, size_bound);
}

Rational clamp_level(const Rational& v, const Rational& w) { return v < w ? v : w; }

}  // namespace

std::vector<IntVec> achieved_value_points(const ReesPackage& pkg, const Rational& w, long cap) {
    std::set<IntVec> points;
    if (pkg.is_monomial()) {
        const MonomialValueMap& vm = pkg.monomial();
        IntVec box = generator_box(pkg, w);
        SemigroupTable table = build_semigroup_table(pkg, box, cap);
        for_each_box_point(table.box, [&](const IntVec& p) {
            if (table.in_s[table.index(p)]) points.insert(vm.semigroup.value_vector(p));
        });
    } else {
        const DiagramValueMap& vm = pkg.diagram();
        Int max_offset = 0, max_gamma1 = 0;
        for (const Int& c : pkg.facet_values) max_offset = std::max(max_offset, c);
        for (const Diagram& sigma : vm.lambda) max_gamma1 = std::max(max_gamma1, gamma(1, sigma));
        Int size_bound = rat_ceil(w * Rational(max_offset)) + max_gamma1;
        enumerate_diagrams(vm.family.gamma_dim(), size_bound, [&](const Diagram& sigma) {
            points.insert(gamma_vector(vm.family, sigma));
        });
    }
    return std::vector<IntVec>(points.begin(), points.end());
}

std::vector<Rational> achieved_levels(const ReesPackage& pkg, const Rational& w, long cap) {
    std::set<Rational> levels;
    if (pkg.facets.empty()) return {w};

    auto level_of_weight = [&](const Int& weight, const Int& e) {
        return clamp_level(Rational(weight, e), w);
    };

    if (pkg.is_monomial()) {
        IntVec box = generator_box(pkg, w);
        SemigroupTable table = build_semigroup_table(pkg, box, cap);
        for_each_box_point(table.box, [&](const IntVec& p) {
            const std::size_t idx = table.index(p);
            if (table.in_s[idx]) levels.insert(level_of_weight(table.weight[idx], table.e));
        });
    } else {
        const DiagramValueMap& vm = pkg.diagram();
        Int max_offset = 0, max_gamma1 = 0;
        for (const Int& c : pkg.facet_values) max_offset = std::max(max_offset, c);
        for (const Diagram& sigma : vm.lambda) max_gamma1 = std::max(max_gamma1, gamma(1, sigma));
        Int size_bound = rat_ceil(w * Rational(max_offset)) + max_gamma1;
        const Int e = denominator_bound(pkg);
        enumerate_diagrams(vm.family.gamma_dim(), size_bound, [&](const Diagram& sigma) {
            IntVec g = gamma_vector(vm.family, sigma);
            Int best;
            bool first = true;
            for (std::size_t k = 0; k < pkg.facets.size(); ++k) {
                Int v = dot(pkg.facets[k].normal, g) * (e / pkg.facet_values[k]);
                if (first || v < best) best = v, first = false;
            }
            levels.insert(level_of_weight(best, e));
        });
    }
    return std::vector<Rational>(levels.begin(), levels.end());
}

}  // namespace reeskit
