#include "reeskit/json_io.hpp"

#include <limits>

namespace reeskit {

namespace {

constexpr long long kMaxJsonInt = 9007199254740992LL;  // 2^53, exact in JSON numbers

Json require_field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw std::invalid_argument(std::string("missing field '") + key + "'");
    return j.at(key);
}

}  // namespace

Json int_to_json(const Int& v) {
    if (v >= -kMaxJsonInt && v <= kMaxJsonInt) return Json(v.convert_to<long long>());
    return Json(v.str());
}

Int json_to_int(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected an integer");
}

IntVec json_to_int_vec(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an integer vector");
    IntVec v;
    v.reserve(j.size());
    for (const Json& x : j) v.push_back(json_to_int(x));
    return v;
}

Json int_vec_to_json(const IntVec& v) {
    Json out = Json::array();
    for (const Int& x : v) out.push_back(int_to_json(x));
    return out;
}

Json rational_to_json(const Rational& r) { return Json(rational_to_string(r)); }

Rational json_to_rational(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw std::invalid_argument("expected a rational as 'p/q' or an integer");
}

Json hyperplane_to_json(const Hyperplane& h) {
    return Json{{"normal", int_vec_to_json(h.normal)}, {"offset", int_to_json(h.offset)}};
}

Hyperplane hyperplane_from_json(const Json& j) {
    return Hyperplane(json_to_int_vec(require_field(j, "normal")),
                      json_to_int(require_field(j, "offset")));
}

Json polyhedron_to_json(const PositivePolyhedron& P) {
    Json gens = Json::array();
    for (const RatVec& g : P.generators()) {
        Json row = Json::array();
        for (const Rational& v : g) row.push_back(rational_to_json(v));
        gens.push_back(std::move(row));
    }
    return Json{{"dim", P.dim()}, {"generators", std::move(gens)}};
}

PositivePolyhedron polyhedron_from_json(const Json& j) {
    int dim = require_field(j, "dim").get<int>();
    std::vector<RatVec> gens;
    for (const Json& row : require_field(j, "generators")) {
        RatVec g;
        for (const Json& v : row) g.push_back(json_to_rational(v));
        gens.push_back(std::move(g));
    }
    return PositivePolyhedron(dim, std::move(gens));
}

bool is_monomial_input(const Json& j) { return j.is_object() && j.contains("semigroup"); }

MonomialIdeal monomial_ideal_from_json(const Json& j) {
    const Json sg = require_field(j, "semigroup");
    std::optional<AffineSemigroup> S;
    if (sg.is_string()) {
        if (sg.get<std::string>() != "orthant")
            throw std::invalid_argument("unknown semigroup shortcut '" +
                                        sg.get<std::string>() + "'");
        S = AffineSemigroup::orthant(require_field(j, "rank").get<int>());
    } else {
        int rank = require_field(sg, "rank").get<int>();
        std::vector<IntVec> gens;
        for (const Json& g : require_field(sg, "generators")) gens.push_back(json_to_int_vec(g));
        S = AffineSemigroup(rank, std::move(gens));
    }
    std::vector<IntVec> exponents;
    for (const Json& a : require_field(require_field(j, "ideal"), "exponents"))
        exponents.push_back(json_to_int_vec(a));
    return MonomialIdeal(std::move(*S), std::move(exponents));
}

DiagramIdeal diagram_ideal_from_json(const Json& j) {
    const Json fam = require_field(j, "family");
    const std::string kind = require_field(fam, "kind").get<std::string>();
    std::optional<MatrixFamily> family;
    if (kind == "generic")
        family = MatrixFamily::generic(require_field(fam, "m").get<int>(),
                                       require_field(fam, "n").get<int>());
    else if (kind == "symmetric")
        family = MatrixFamily::symmetric(require_field(fam, "n").get<int>());
    else if (kind == "pfaffian")
        family = MatrixFamily::pfaffian(require_field(fam, "n").get<int>());
    else if (kind == "hankel")
        family = MatrixFamily::hankel(require_field(fam, "n").get<int>());
    else
        throw std::invalid_argument("unknown family kind '" + kind + "'");
    std::vector<Diagram> lambda;
    for (const Json& parts : require_field(j, "lambda"))
        lambda.emplace_back(parts.get<std::vector<int>>());
    return DiagramIdeal(*family, std::move(lambda));
}

Json package_to_json(const ReesPackage& pkg) {
    Json out;
    out["ambient_dim"] = pkg.ambient_dim;
    if (pkg.is_monomial()) {
        const MonomialValueMap& vm = pkg.monomial();
        Json vals = Json::array();
        for (const ConeValuation& v : vm.semigroup.cone_valuations())
            vals.push_back(int_vec_to_json(v.normal));
        out["value_map"] = Json{{"kind", "monomial"}, {"cone_valuations", std::move(vals)}};
    } else {
        const DiagramValueMap& vm = pkg.diagram();
        Json fam{{"kind", vm.family.kind_name()}};
        if (vm.family.kind == FamilyKind::Generic) fam["m"] = vm.family.m;
        fam["n"] = vm.family.n;
        Json lambda = Json::array();
        for (const Diagram& sigma : vm.lambda) lambda.push_back(sigma.parts());
        out["value_map"] = Json{{"kind", "diagram"},
                                {"family", std::move(fam)},
                                {"lambda", std::move(lambda)}};
        if (vm.family.kind == FamilyKind::Hankel)
            out["value_map"]["rees_valuations_subset_only"] = true;
    }
    out["polyhedron"] = polyhedron_to_json(pkg.polyhedron);
    Json facets = Json::array();
    for (const Hyperplane& f : pkg.facets) facets.push_back(hyperplane_to_json(f));
    out["facets"] = std::move(facets);
    out["facet_values"] = int_vec_to_json(pkg.facet_values);
    out["denominator_bound"] = int_to_json(denominator_bound(pkg));
    return out;
}

Json joined_package_to_json(const JoinedPackage& JP) {
    Json out;
    out["omega"] = polyhedron_to_json(JP.omega);
    Json paired = Json::array();
    for (std::size_t i = 0; i < JP.paired_facets.size(); ++i) {
        Json entry = hyperplane_to_json(JP.paired_facets[i]);
        entry["provenance"] = Json::array(
            {JP.provenance[i].first, JP.provenance[i].second});
        paired.push_back(std::move(entry));
    }
    out["paired_valuations"] = std::move(paired);
    out["count"] = JP.paired_facets.size();
    out["counting_law"] = Json{{"left", JP.left.facets.size()},
                               {"right", JP.right.facets.size()},
                               {"product", JP.left.facets.size() * JP.right.facets.size()},
                               {"holds", JP.paired_facets.size() ==
                                             JP.left.facets.size() * JP.right.facets.size()}};
    return out;
}

Json summation_report_to_json(const SummationReport& report) {
    Json out;
    out["verdict"] = verdict_name(report.verdict);
    Json terms = Json::array();
    for (const Rational& a : report.alpha_terms) terms.push_back(rational_to_json(a));
    out["alpha_terms"] = std::move(terms);
    Json lhs = Json::array();
    for (const IntVec& g : report.lhs_generators) lhs.push_back(int_vec_to_json(g));
    out["lhs_generators"] = std::move(lhs);
    Json rhs = Json::array();
    for (const IntVec& g : report.rhs_generators) rhs.push_back(int_vec_to_json(g));
    out["rhs_generators"] = std::move(rhs);
    if (report.witness) out["witness"] = int_vec_to_json(*report.witness);
    return out;
}

}  // namespace reeskit
