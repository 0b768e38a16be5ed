#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "reeskit/json_io.hpp"
#include "reeskit/oracle.hpp"

namespace {

using namespace reeskit;

struct CliError {
    int code;
    std::string message;
};

long cap_from_env() {
    if (const char* env = std::getenv("REESKIT_CAP")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw CliError{2, "REESKIT_CAP must be a positive integer"};
    }
    return kDefaultEnumerationCap;
}

Json parse_json_text(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw CliError{2, origin + ": malformed JSON at line " + std::to_string(line) +
                              ", column " + std::to_string(column)};
    }
}

Json load_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CliError{2, "cannot open input file '" + path + "'"};
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_json_text(buffer.str(), path);
}

Rational parse_w(const std::string& text, const char* flag) {
    try {
        Rational w = parse_rational(text);
        if (w < 0) throw CliError{2, std::string(flag) + " must be nonnegative"};
        return w;
    } catch (const std::invalid_argument& e) {
        throw CliError{2, std::string(flag) + ": " + e.what()};
    }
}

IntVec parse_int_csv(const std::string& text) {
    IntVec out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(Int(item));
        } catch (const std::runtime_error&) {
            throw CliError{2, "malformed integer list '" + text + "'"};
        }
    }
    if (out.empty()) throw CliError{2, "empty integer list"};
    return out;
}

std::string render_combination(const IntVec& coeffs, const std::string& symbol, bool latex) {
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        if (!out.empty()) out += latex ? "+" : " + ";
        if (coeffs[i] != 1) out += coeffs[i].str();
        out += latex ? symbol + "_{" + std::to_string(i + 1) + "}"
                     : symbol + std::to_string(i + 1);
    }
    return out;
}

std::string render_equation(const Hyperplane& f, const std::string& symbol, bool latex) {
    return render_combination(f.normal, symbol, latex) + (latex ? "=" : " = ") +
           f.offset.str();
}

std::string value_symbol(const ReesPackage& pkg, bool latex) {
    if (pkg.is_monomial()) return "v";
    return latex ? "\\gamma" : "gamma";
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string format_vector(const RatVec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += rational_to_string(v[i]);
    }
    return out + ")";
}

std::string format_vector(const IntVec& v) { return format_vector(to_rat_vec(v)); }

void print_package_text(const ReesPackage& pkg) {
    if (pkg.is_monomial()) {
        const auto& vm = pkg.monomial();
        std::cout << "package (monomial, ambient dimension " << pkg.ambient_dim << ")\n";
        std::cout << "cone valuations:\n";
        const auto& vals = vm.semigroup.cone_valuations();
        for (std::size_t i = 0; i < vals.size(); ++i)
            std::cout << "  v" << i + 1 << " = " << format_vector(vals[i].normal) << "\n";
    } else {
        const auto& vm = pkg.diagram();
        std::cout << "package (diagram " << vm.family.kind_name() << ", ambient dimension "
                  << pkg.ambient_dim << ")\n";
    }
    std::cout << "polyhedron generators:";
    for (const RatVec& g : pkg.polyhedron.generators()) std::cout << " " << format_vector(g);
    std::cout << "\nfacets (Rees valuations):\n";
    if (pkg.facets.empty()) std::cout << "  none (unit ideal)\n";
    const std::string sym = value_symbol(pkg, false);
    for (const Hyperplane& f : pkg.facets)
        std::cout << "  " << render_equation(f, sym, false) << "\n";
    std::cout << "denominator bound e = " << denominator_bound(pkg) << "\n";
    if (!pkg.is_monomial() && pkg.diagram().family.kind == FamilyKind::Hankel)
        std::cout << "note: the Rees valuations are contained in the listed gamma valuations;"
                  << " equality is not asserted\n";
}

void print_package_latex(const ReesPackage& pkg) {
    std::cout << "% polyhedron generators:";
    for (const RatVec& g : pkg.polyhedron.generators()) std::cout << " " << format_vector(g);
    std::cout << "\n";
    const std::string sym = value_symbol(pkg, true);
    for (std::size_t k = 0; k < pkg.facets.size(); ++k)
        std::cout << "H_{" << k + 1 << "}\\colon " << render_equation(pkg.facets[k], sym, true)
                  << " \\\\\n";
}

ReesPackage package_from_input(const Json& input) {
    if (is_monomial_input(input)) return rees_package_monomial(monomial_ideal_from_json(input));
    return rees_package_diagrams(diagram_ideal_from_json(input));
}

void oracle_check_facets(const ReesPackage& pkg) {
    auto fm = oracle::facets_fourier_motzkin(pkg.polyhedron);
    if (fm != pkg.facets)
        throw CliError{1, "oracle cross-check failed: fourier-motzkin facets disagree"};
}

// ---- subcommand payloads -------------------------------------------------

int run_package(const Json& input, const std::string& format, bool use_oracle) {
    ReesPackage pkg = package_from_input(input);
    if (use_oracle) oracle_check_facets(pkg);
    if (format == "json") {
        Json out = package_to_json(pkg);
        if (use_oracle) out["oracle_agrees"] = true;
        emit(out);
    } else if (format == "text") {
        print_package_text(pkg);
    } else {
        print_package_latex(pkg);
    }
    return 0;
}

int run_ratpow(const Json& input, const Rational& w, bool generators,
               const std::string& member_csv, const std::string& format, bool use_oracle,
               long cap) {
    if (format == "latex") throw CliError{2, "latex format supports package, join, star"};
    if (is_monomial_input(input)) {
        MonomialIdeal I = monomial_ideal_from_json(input);
        ReesPackage pkg = rees_package_monomial(I);
        if (generators) {
            auto gens = rational_power_generators(pkg, w, cap);
            if (use_oracle && I.semigroup().is_standard_orthant()) {
                const Int q = rat_den(w);
                const int p = static_cast<int>(rat_num(w).convert_to<long>());
                for (const IntVec& g : gens) {
                    IntVec scaled(g.size());
                    for (std::size_t i = 0; i < g.size(); ++i) scaled[i] = g[i] * q;
                    if (oracle::closure_membership_bruteforce(I, p, scaled) !=
                        oracle::Verdict::Member)
                        throw CliError{1, "oracle cross-check failed: generator not in closure"};
                }
            }
            if (format == "json") {
                Json out;
                out["w"] = rational_to_json(w);
                Json arr = Json::array();
                for (const IntVec& g : gens) arr.push_back(int_vec_to_json(g));
                out["generators"] = std::move(arr);
                if (use_oracle) out["oracle_agrees"] = true;
                emit(out);
            } else {
                std::cout << "generators of the rational power at w = " << rational_to_string(w)
                          << ":\n";
                for (const IntVec& g : gens) std::cout << "  " << format_vector(g) << "\n";
            }
            return 0;
        }
        IntVec point = parse_int_csv(member_csv);
        bool member = rational_power_membership(pkg, w, point);
        if (use_oracle && I.semigroup().is_standard_orthant()) {
            const Int q = rat_den(w);
            const int p = static_cast<int>(rat_num(w).convert_to<long>());
            IntVec scaled(point.size());
            for (std::size_t i = 0; i < point.size(); ++i) scaled[i] = point[i] * q;
            bool oracle_member =
                oracle::closure_membership_bruteforce(I, p, scaled) == oracle::Verdict::Member;
            if (oracle_member != member)
                throw CliError{1, "oracle cross-check failed: membership disagrees"};
        }
        if (format == "json") {
            Json out;
            out["w"] = rational_to_json(w);
            out["point"] = int_vec_to_json(point);
            out["member"] = member;
            if (use_oracle) out["oracle_agrees"] = true;
            emit(out);
        } else {
            std::cout << format_vector(point) << (member ? " lies in" : " does not lie in")
                      << " the rational power at w = " << rational_to_string(w) << "\n";
        }
        return 0;
    }
    DiagramIdeal D = diagram_ideal_from_json(input);
    if (generators) {
        auto exps = symbolic_intersection_exponents(D, w, cap);
        if (format == "json") {
            Json out;
            out["w"] = rational_to_json(w);
            Json arr = Json::array();
            for (const IntVec& a : exps) arr.push_back(int_vec_to_json(a));
            out["symbolic_exponents"] = std::move(arr);
            emit(out);
        } else {
            std::cout << "minimal symbolic-power exponents at w = " << rational_to_string(w)
                      << ":\n";
            for (const IntVec& a : exps) std::cout << "  " << format_vector(a) << "\n";
        }
        return 0;
    }
    IntVec parts = parse_int_csv(member_csv);
    std::vector<int> small;
    for (const Int& p : parts) small.push_back(static_cast<int>(p.convert_to<long>()));
    bool member = rational_power_shape_membership(D, w, Diagram(small));
    if (format == "json") {
        Json out;
        out["w"] = rational_to_json(w);
        out["shape"] = int_vec_to_json(parts);
        out["member"] = member;
        emit(out);
    } else {
        std::cout << "shape " << format_vector(parts)
                  << (member ? " lies in" : " does not lie in") << " the rational power at w = "
                  << rational_to_string(w) << "\n";
    }
    return 0;
}

int run_join(const Json& input, const std::string& format, bool use_oracle) {
    if (!input.contains("left") || !input.contains("right"))
        throw CliError{2, "join input must contain 'left' and 'right' ideals"};
    ReesPackage P = package_from_input(input.at("left"));
    ReesPackage Q = package_from_input(input.at("right"));
    JoinedPackage JP = join_packages(P, Q);
    if (use_oracle && JP.omega.dim() <= 5) {
        auto fm = oracle::facets_fourier_motzkin(JP.omega);
        auto sorted = JP.paired_facets;
        std::sort(sorted.begin(), sorted.end());
        if (fm != sorted)
            throw CliError{1, "oracle cross-check failed: joined facets disagree"};
    }
    if (format == "json") {
        Json out = joined_package_to_json(JP);
        if (use_oracle) out["oracle_agrees"] = true;
        emit(out);
    } else if (format == "text") {
        std::cout << "joined package, ambient dimension " << JP.omega.dim() << "\n";
        std::cout << "paired valuations (" << JP.paired_facets.size() << " = "
                  << JP.left.facets.size() << " x " << JP.right.facets.size() << "):\n";
        for (const Hyperplane& f : JP.paired_facets)
            std::cout << "  " << render_equation(f, "X", false) << "\n";
    } else {
        for (std::size_t k = 0; k < JP.paired_facets.size(); ++k)
            std::cout << "H_{" << k + 1 << "}\\colon "
                      << render_equation(JP.paired_facets[k], "X", true) << " \\\\\n";
    }
    return 0;
}

int run_sum_check(const Json& input, const Rational& w, const std::string& format, long cap) {
    if (format == "latex") throw CliError{2, "latex format supports package, join, star"};
    if (!input.contains("left") || !input.contains("right"))
        throw CliError{2, "sum-check input must contain 'left' and 'right' ideals"};
    const Json& left = input.at("left");
    const Json& right = input.at("right");
    SummationReport report;
    if (is_monomial_input(left) && is_monomial_input(right)) {
        report = check_summation_monomial(monomial_ideal_from_json(left),
                                          monomial_ideal_from_json(right), w, cap);
    } else {
        report = check_summation_lattice(package_from_input(left), package_from_input(right), w,
                                         cap);
    }
    if (format == "json") {
        Json out = summation_report_to_json(report);
        out["w"] = rational_to_json(w);
        emit(out);
    } else {
        std::cout << "verdict: " << verdict_name(report.verdict) << "\nalpha terms:";
        for (const Rational& a : report.alpha_terms)
            std::cout << " " << rational_to_string(a);
        std::cout << "\n";
        if (report.witness)
            std::cout << "witness: " << format_vector(*report.witness) << "\n";
    }
    return report.verdict == SummationVerdict::Equal ? 0 : 1;
}

int run_counterexample(int n, const std::string& format, long cap) {
    if (format == "latex") throw CliError{2, "latex format supports package, join, star"};
    CounterexampleReport report = same_ring_counterexample(n, cap);
    if (format == "json") {
        Json out;
        out["n"] = report.n;
        out["w"] = rational_to_json(report.w);
        out["witness"] = int_vec_to_json(report.witness);
        out["in_closure"] = report.in_closure;
        out["in_sum"] = report.in_sum;
        emit(out);
    } else {
        std::cout << "witness " << format_vector(report.witness) << " at w = "
                  << rational_to_string(report.w) << ": in_closure="
                  << (report.in_closure ? "true" : "false")
                  << " in_sum=" << (report.in_sum ? "true" : "false") << "\n";
    }
    return (report.in_closure && !report.in_sum) ? 0 : 1;
}

int run_sandwich(const Json& input, const Rational& w, const std::string& tau_text,
                 const std::string& format, long cap) {
    if (format == "latex") throw CliError{2, "latex format supports package, join, star"};
    if (!input.contains("left") || !input.contains("right"))
        throw CliError{2, "sandwich input must contain 'left' and 'right' ideals"};
    if (!is_monomial_input(input.at("left")) || !is_monomial_input(input.at("right")))
        throw CliError{2, "sandwich supports monomial ideals"};
    MonomialIdeal I = monomial_ideal_from_json(input.at("left"));
    MonomialIdeal J = monomial_ideal_from_json(input.at("right"));
    if (!tau_text.empty()) {
        Rational tau = parse_w(tau_text, "--tau");
        SandwichReport report = asymptotic_sandwich_check(I, J, w, tau, cap);
        if (format == "json") {
            Json out;
            out["w"] = rational_to_json(w);
            out["tau"] = rational_to_json(tau);
            out["left_inclusion"] = report.left_holds;
            out["right_inclusion"] = report.right_holds;
            if (report.witness) out["witness"] = int_vec_to_json(*report.witness);
            emit(out);
        } else {
            std::cout << "left inclusion: " << (report.left_holds ? "holds" : "fails")
                      << "\nright inclusion at tau = " << rational_to_string(tau) << ": "
                      << (report.right_holds ? "holds" : "fails") << "\n";
        }
        return (report.left_holds && report.right_holds) ? 0 : 1;
    }
    auto w0 = sandwich_w0_search(I, J, w, cap);
    if (format == "json") {
        Json out;
        out["w"] = rational_to_json(w);
        if (w0)
            out["w0"] = rational_to_json(*w0);
        else
            out["w0"] = nullptr;
        emit(out);
    } else {
        if (w0)
            std::cout << "least grid w0 = " << rational_to_string(*w0) << "\n";
        else
            std::cout << "no grid w0 works\n";
    }
    return w0 ? 0 : 1;
}

int run_resurgence(int m, int t, const std::string& format) {
    if (format == "latex") throw CliError{2, "latex format supports package, join, star"};
    Rational value = det_asymptotic_resurgence(m, t);
    if (format == "json") {
        Json out;
        out["m"] = m;
        out["t"] = t;
        out["value"] = rational_to_json(value);
        emit(out);
    } else {
        std::cout << "asymptotic resurgence of the " << t << "-minor ideal (m = " << m
                  << "): " << rational_to_string(value) << "\n";
    }
    return 0;
}

int run_star(const Json& input, const std::string& format) {
    if (!input.contains("h1") || !input.contains("h2"))
        throw CliError{2, "star input must contain hyperplanes 'h1' and 'h2'"};
    Hyperplane result = star(hyperplane_from_json(input.at("h1")),
                             hyperplane_from_json(input.at("h2")));
    if (format == "json") {
        Json out;
        out["result"] = hyperplane_to_json(result);
        emit(out);
    } else if (format == "text") {
        std::cout << render_equation(result, "X", false) << "\n";
    } else {
        std::cout << render_equation(result, "X", true) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Rees packages, rational powers, and the summation formula"};
    app.require_subcommand(1);

    std::string input_path, format = "json", w_text, tau_text, member_csv;
    bool generators = false, use_oracle = false;
    int n = 1, res_m = 0, res_t = 0;
    long cap_flag = 0, seed = 0;

    auto add_common = [&](CLI::App* cmd, bool needs_input) {
        auto* opt = cmd->add_option("--input", input_path, "input JSON file");
        if (needs_input) opt->required();
        cmd->add_option("--format", format, "output format: json, text, latex")
            ->check(CLI::IsMember({"json", "text", "latex"}));
        cmd->add_flag("--oracle", use_oracle, "cross-check with the brute-force oracle");
        cmd->add_option("--cap", cap_flag, "enumeration cap (points)");
        cmd->add_option("--seed", seed, "seed echoed for reproducibility");
    };

    CLI::App* c_package = app.add_subcommand("package", "Rees package of an ideal");
    add_common(c_package, true);

    CLI::App* c_ratpow = app.add_subcommand("ratpow", "rational power membership or generators");
    add_common(c_ratpow, true);
    c_ratpow->add_option("--w", w_text, "exponent w as p/q")->required();
    c_ratpow->add_flag("--generators", generators, "list minimal generators");
    c_ratpow->add_option("--member", member_csv,
                         "comma-separated exponent vector (or diagram shape)");

    CLI::App* c_join = app.add_subcommand("join", "joined package and paired valuations");
    add_common(c_join, true);

    CLI::App* c_sum = app.add_subcommand("sum-check", "verify the summation identity");
    add_common(c_sum, true);
    c_sum->add_option("--w", w_text, "exponent w as p/q")->required();

    CLI::App* c_counter = app.add_subcommand("counterexample",
                                             "same-ring witness family for the summation");
    add_common(c_counter, false);
    c_counter->add_option("--n", n, "family parameter")->required();

    CLI::App* c_sandwich = app.add_subcommand("sandwich", "asymptotic inclusion check");
    add_common(c_sandwich, true);
    c_sandwich->add_option("--w", w_text, "exponent w as p/q")->required();
    c_sandwich->add_option("--tau", tau_text, "split point tau as p/q");

    CLI::App* c_res = app.add_subcommand("resurgence",
                                         "asymptotic resurgence of a determinantal ideal");
    add_common(c_res, false);
    c_res->add_option("--m", res_m, "matrix rows")->required();
    c_res->add_option("--t", res_t, "minor size")->required();

    CLI::App* c_star = app.add_subcommand("star", "star product of two hyperplanes");
    add_common(c_star, true);

    CLI11_PARSE(app, argc, argv);

    try {
        long cap = cap_flag > 0 ? cap_flag : cap_from_env();
        if (c_package->parsed()) return run_package(load_input(input_path), format, use_oracle);
        if (c_ratpow->parsed()) {
            if (!generators && member_csv.empty())
                throw CliError{2, "ratpow requires exactly one of --generators or --member"};
            return run_ratpow(load_input(input_path), parse_w(w_text, "--w"), generators,
                              member_csv, format, use_oracle, cap);
        }
        if (c_join->parsed()) return run_join(load_input(input_path), format, use_oracle);
        if (c_sum->parsed())
            return run_sum_check(load_input(input_path), parse_w(w_text, "--w"), format, cap);
        if (c_counter->parsed()) return run_counterexample(n, format, cap);
        if (c_sandwich->parsed())
            return run_sandwich(load_input(input_path), parse_w(w_text, "--w"), tau_text, format,
                                cap);
        if (c_res->parsed()) return run_resurgence(res_m, res_t, format);
        if (c_star->parsed()) return run_star(load_input(input_path), format);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const cap_exceeded_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
