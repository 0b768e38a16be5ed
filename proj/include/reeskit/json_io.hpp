#pragma once

#include <json.hpp>

#include "reeskit/summation.hpp"

namespace reeskit {

using Json = nlohmann::ordered_json;

Json int_to_json(const Int& v);
Int json_to_int(const Json& j);
IntVec json_to_int_vec(const Json& j);
Json int_vec_to_json(const IntVec& v);

Json rational_to_json(const Rational& r);
Rational json_to_rational(const Json& j);

Json hyperplane_to_json(const Hyperplane& h);
Hyperplane hyperplane_from_json(const Json& j);

Json polyhedron_to_json(const PositivePolyhedron& P);
PositivePolyhedron polyhedron_from_json(const Json& j);

// {"semigroup": {"rank": s, "generators": [[..]]} | "orthant", "rank": s,
//  "ideal": {"exponents": [[..]]}}
bool is_monomial_input(const Json& j);
MonomialIdeal monomial_ideal_from_json(const Json& j);

// {"family": {"kind": "generic", "m": 2, "n": 3}, "lambda": [[2], [1,1,1]]}
DiagramIdeal diagram_ideal_from_json(const Json& j);

Json package_to_json(const ReesPackage& pkg);
Json joined_package_to_json(const JoinedPackage& JP);
Json summation_report_to_json(const SummationReport& report);

}  // namespace reeskit
