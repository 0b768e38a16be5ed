#pragma once

#include <vector>

#include "reeskit/polyhedron.hpp"

namespace reeskit {

// Primitive inner normal of a facet of the semigroup cone; the associated
// monomial valuation is n -> <normal, n>.
struct ConeValuation {
    IntVec normal;

    friend bool operator==(const ConeValuation& a, const ConeValuation& b) {
        return a.normal == b.normal;
    }
};

// Finitely generated subsemigroup of Z^s whose cone is strongly convex and
// full-dimensional. Facet valuations are computed on construction.
class AffineSemigroup {
public:
    AffineSemigroup(int rank, std::vector<IntVec> generators);

    static AffineSemigroup orthant(int rank);

    int rank() const { return rank_; }
    const std::vector<IntVec>& generators() const { return generators_; }
    const std::vector<ConeValuation>& cone_valuations() const { return valuations_; }
    bool has_nonnegative_generators() const { return nonneg_; }
    bool is_standard_orthant() const { return standard_orthant_; }

    // (<f_1, n>, ..., <f_d, n>) in valuation coordinates.
    IntVec value_vector(const IntVec& n) const;

    friend bool operator==(const AffineSemigroup& a, const AffineSemigroup& b) {
        return a.rank_ == b.rank_ && a.generators_ == b.generators_;
    }

private:
    int rank_;
    std::vector<IntVec> generators_;
    std::vector<ConeValuation> valuations_;
    bool nonneg_ = true;
    bool standard_orthant_ = false;
};

// One primitive inner normal per facet of the semigroup cone, in
// lexicographic order.
std::vector<ConeValuation> cone_facet_valuations(const AffineSemigroup& S);

// n a nonnegative integer combination of the generators, by bounded exact
// search with cone pruning.
bool membership_in_semigroup(const AffineSemigroup& S, const IntVec& n);

// Monomial ideal given by the exponent vectors of a generating set. The
// exponent set is validated against S and minimized under S-divisibility.
class MonomialIdeal {
public:
    MonomialIdeal(AffineSemigroup semigroup, std::vector<IntVec> exponents);

    const AffineSemigroup& semigroup() const { return semigroup_; }
    const std::vector<IntVec>& exponents() const { return exponents_; }

private:
    AffineSemigroup semigroup_;
    std::vector<IntVec> exponents_;
};

}  // namespace reeskit
