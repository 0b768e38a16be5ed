#pragma once

#include "reeskit/semigroup.hpp"

namespace reeskit {
namespace oracle {

// Non-coordinate facets by exact Fourier-Motzkin elimination of the lifted
// system {x = sum lambda_i g_i + r, lambda >= 0, sum lambda = 1, r >= 0}.
// Independent of the double description path. Dimension <= 5.
std::vector<Hyperplane> facets_fourier_motzkin(const PositivePolyhedron& P);

// Full box scan deciding each point against the H-representation only.
std::vector<IntVec> lattice_points_naive(const PositivePolyhedron& P, const Rational& w,
                                         const IntVec& box, long cap = kDefaultEnumerationCap);

enum class Verdict { Member, NonMember, Inconclusive };

// Definition-level test for x^a in the integral closure of I^p over a
// polynomial ring: search for m <= m_cap with m*a componentwise above a sum
// of p*m exponent generators; certify non-membership by a separating facet.
// A brute-force miss without a separating facet throws, rather than trusting
// either side.
Verdict closure_membership_bruteforce(const MonomialIdeal& I, int p, const IntVec& a,
                                      int m_cap = 32);

}  // namespace oracle
}  // namespace reeskit
