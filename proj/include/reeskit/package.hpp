#pragma once

#include <optional>
#include <variant>

#include "reeskit/diagram.hpp"
#include "reeskit/semigroup.hpp"

namespace reeskit {

// Value map of a monomial package: the cone facet valuations of S, plus the
// composite integer normals u_k = sum_j h_{k,j} f_j expressing each Rees
// valuation directly on exponent vectors.
struct MonomialValueMap {
    AffineSemigroup semigroup;
    std::vector<IntVec> ideal_exponents;
    std::vector<IntVec> composite_normals;  // parallel to the facet list
};

struct DiagramValueMap {
    MatrixFamily family;
    std::vector<Diagram> lambda;
};

using ValueMap = std::variant<MonomialValueMap, DiagramValueMap>;

// Polyhedral description of the rational powers of an ideal: for every w the
// w-th rational power is spanned by the basis elements whose value vector
// lies in w * polyhedron, and the facets are the Rees valuations.
struct ReesPackage {
    int ambient_dim;
    ValueMap value_map;
    PositivePolyhedron polyhedron;
    std::vector<Hyperplane> facets;  // lexicographic order
    IntVec facet_values;             // c_k = value of the k-th Rees valuation on the ideal

    bool is_monomial() const { return std::holds_alternative<MonomialValueMap>(value_map); }
    const MonomialValueMap& monomial() const { return std::get<MonomialValueMap>(value_map); }
    const DiagramValueMap& diagram() const { return std::get<DiagramValueMap>(value_map); }
};

ReesPackage rees_package_monomial(const MonomialIdeal& I);
ReesPackage rees_package_diagrams(const DiagramIdeal& D);

// lcm of the facet values; rational powers stabilize on the grid Z/e.
Int denominator_bound(const ReesPackage& pkg);

// ---- monomial rational powers ------------------------------------------------

bool rational_power_membership(const ReesPackage& pkg, const Rational& w, const IntVec& n);
bool rational_power_membership(const MonomialIdeal& I, const Rational& w, const IntVec& n);

std::vector<IntVec> rational_power_generators(const ReesPackage& pkg, const Rational& w,
                                              long cap = kDefaultEnumerationCap);
std::vector<IntVec> rational_power_generators(const MonomialIdeal& I, const Rational& w,
                                              long cap = kDefaultEnumerationCap);

// ---- diagram rational powers -------------------------------------------------

bool rational_power_shape_membership(const ReesPackage& pkg, const Rational& w,
                                     const Diagram& sigma);
bool rational_power_shape_membership(const DiagramIdeal& D, const Rational& w,
                                     const Diagram& sigma);

// Componentwise-minimal exponent vectors a in wGamma cap Z^d; each encodes an
// intersection of symbolic powers. Hankel families return the single vector
// (ceil(w*gamma_1(sigma)), ..., ceil(w*gamma_n(sigma))) of length n.
std::vector<IntVec> symbolic_intersection_exponents(const DiagramIdeal& D, const Rational& w,
                                                    long cap = kDefaultEnumerationCap);

// ---- shared weight machinery -------------------------------------------------

// Flat table over the box [0, B] in exponent space: semigroup membership flags
// and the scaled ideal weight e * min_k V_k(p)/c_k of every member point.
// Requires a monomial package over a semigroup with nonnegative generators.
struct SemigroupTable {
    IntVec box;
    std::vector<std::size_t> strides;
    std::vector<char> in_s;
    std::vector<Int> weight;  // valid where in_s; scale factor is e
    Int e;
    bool has_facets;

    std::size_t index(const IntVec& p) const;
    bool contains(const IntVec& p) const;
};

SemigroupTable build_semigroup_table(const ReesPackage& pkg, const IntVec& box,
                                     long cap = kDefaultEnumerationCap);

// Certified box for enumerating minimal generators at level w.
IntVec generator_box(const ReesPackage& pkg, const Rational& w);

// Minimal member points of the table at a given level (exact rational alpha).
std::vector<IntVec> table_level_generators(const SemigroupTable& table,
                                           const std::vector<IntVec>& semigroup_generators,
                                           const Rational& alpha);

// Distinct ideal weights realized by the value map inside its certified box,
// clamped to [0, w], sorted ascending. Used by the alpha-term reduction.
std::vector<Rational> achieved_levels(const ReesPackage& pkg, const Rational& w,
                                      long cap = kDefaultEnumerationCap);

// Distinct value vectors realized by the value map inside the certified box
// (images of actual basis elements), sorted lexicographically.
std::vector<IntVec> achieved_value_points(const ReesPackage& pkg, const Rational& w,
                                          long cap = kDefaultEnumerationCap);

}  // namespace reeskit
