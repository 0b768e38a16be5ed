#pragma once

#include <string>
#include <utility>

#include "reeskit/package.hpp"

namespace reeskit {

// Tensor-product package: the joined polyhedron together with the star
// products of all facet pairs. The paired facets coincide with the facets of
// omega and their count is the product of the two facet counts.
struct JoinedPackage {
    ReesPackage left;
    ReesPackage right;
    PositivePolyhedron omega;
    std::vector<Hyperplane> paired_facets;
    std::vector<std::pair<int, int>> provenance;  // (left facet, right facet) per pair
};

JoinedPackage join_packages(const ReesPackage& P, const ReesPackage& Q);

// Witness for point in w*Omega: alpha with the left half in alpha*Gamma and
// the right half in (w-alpha)*Sigma.
struct AlphaCertificate {
    Rational alpha;
    RatVec left_point;
    RatVec right_point;
};

std::optional<AlphaCertificate> summation_split(const JoinedPackage& JP, const Rational& w,
                                                const RatVec& point);

// Irredundant list of alpha values whose term products already span the w-th
// rational power of the joined ideal. Grid {k/e} with e the joint denominator
// bound, reduced greedily from the largest alpha; ascending output.
std::vector<Rational> alpha_term_list(const JoinedPackage& JP, const Rational& w,
                                      long cap = kDefaultEnumerationCap);

enum class SummationVerdict { Equal, LhsNotInRhs, RhsNotInLhs };

std::string verdict_name(SummationVerdict v);

struct SummationReport {
    SummationVerdict verdict = SummationVerdict::Equal;
    std::vector<Rational> alpha_terms;
    std::vector<IntVec> lhs_generators;  // concatenated exponent pairs
    std::vector<IntVec> rhs_generators;
    std::optional<IntVec> witness;
};

// Generator-level comparison of the joined rational power against the union
// of alpha-term products, for monomial ideals in separate semigroup rings.
SummationReport check_summation_monomial(const MonomialIdeal& I, const MonomialIdeal& J,
                                         const Rational& w,
                                         long cap = kDefaultEnumerationCap);

// Lattice-level comparison for pairs involving diagram packages: membership
// of achieved value pairs in w*Omega versus coverage by the alpha terms.
SummationReport check_summation_lattice(const ReesPackage& P, const ReesPackage& Q,
                                        const Rational& w,
                                        long cap = kDefaultEnumerationCap);

// x*y-plane witness family: with I = (x y^3) and J = (x^3 y) in the same
// ring, the monomial (4n+2, 4n+2) lies in the closure of (I+J)^(2n+1) but in
// no product of rational powers of I and J.
struct CounterexampleReport {
    int n = 0;
    Rational w;
    IntVec witness;
    bool in_closure = false;
    bool in_sum = false;
};

CounterexampleReport same_ring_counterexample(int n, long cap = kDefaultEnumerationCap);

// point in sum_alpha closure(I^alpha) * closure(J^(w-alpha)) for ideals of a
// common semigroup ring, alpha over the grid {k/e} plus w.
bool in_product_sum(const MonomialIdeal& I, const MonomialIdeal& J, const Rational& w,
                    const IntVec& point, long cap = kDefaultEnumerationCap);

// Two-sided asymptotic inclusion check at a fixed tau: the alpha-term sum
// sits inside the joined rational power, which sits inside
// closure(I^tau)T + closure(J^(w-tau))T.
struct SandwichReport {
    bool left_holds = false;
    bool right_holds = false;
    std::optional<IntVec> witness;
};

SandwichReport asymptotic_sandwich_check(const MonomialIdeal& I, const MonomialIdeal& J,
                                         const Rational& w, const Rational& tau,
                                         long cap = kDefaultEnumerationCap);

// Least grid value w0 such that the right inclusion holds for every grid tau
// in [w0, w - w0]; empty when no grid value works.
std::optional<Rational> sandwich_w0_search(const MonomialIdeal& I, const MonomialIdeal& J,
                                           const Rational& w,
                                           long cap = kDefaultEnumerationCap);

}  // namespace reeskit
