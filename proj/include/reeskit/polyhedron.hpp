#pragma once

#include <optional>
#include <vector>

#include "reeskit/hyperplane.hpp"

namespace reeskit {

// conv(generators) + nonnegative orthant. Generators are componentwise
// nonnegative rational vectors; the stored set is inclusion-minimal. When a
// generator is the origin the polyhedron is the whole orthant and the origin
// is the single stored generator.
class PositivePolyhedron {
public:
    PositivePolyhedron(int dim, std::vector<RatVec> generators);

    int dim() const { return dim_; }
    const std::vector<RatVec>& generators() const { return generators_; }
    bool is_whole_orthant() const;

private:
    int dim_;
    std::vector<RatVec> generators_;
};

// Non-coordinate supporting hyperplanes (primitive nonnegative normal,
// positive offset), deduplicated, in lexicographic (normal, offset) order.
// Double description over the homogenization cone.
std::vector<Hyperplane> facet_enumeration(const PositivePolyhedron& P);

// point in w*P, decided by exact LP feasibility over the V-representation.
bool polyhedron_membership(const PositivePolyhedron& P, const Rational& w, const RatVec& point);

// Same test against an explicit facet list (H-representation route).
bool facet_membership(const std::vector<Hyperplane>& facets, const Rational& w,
                      const RatVec& point);

// conv(P1 embedded with trailing zeros, P2 with leading zeros) + orthant.
PositivePolyhedron conv_join(const PositivePolyhedron& P1, const PositivePolyhedron& P2);

// Lattice points p with 0 <= p <= box and p in w*P, lexicographically sorted.
std::vector<IntVec> scale_and_ceil_lattice(const PositivePolyhedron& P, const Rational& w,
                                           const IntVec& box,
                                           long cap = kDefaultEnumerationCap);

// Extreme rays of {y : rows[i] . y >= 0}, primitive. The row matrix must have
// full column rank (the cone it cuts out is then pointed at every insertion
// step of the double description run).
std::vector<IntVec> dual_cone_extreme_rays(const std::vector<IntVec>& rows);

// Iterates 0 <= p <= box in lexicographic order, calling f on each point.
template <typename F>
void for_each_box_point(const IntVec& box, F&& f) {
    IntVec p(box.size(), Int(0));
    for (;;) {
        f(p);
        std::size_t i = box.size();
        while (i > 0) {
            --i;
            if (p[i] < box[i]) {
                ++p[i];
                for (std::size_t j = i + 1; j < box.size(); ++j) p[j] = 0;
                break;
            }
            if (i == 0) return;
        }
        if (box.empty()) return;
    }
}

Int box_volume(const IntVec& box);
void check_box_cap(const IntVec& box, long cap);

}  // namespace reeskit
