#pragma once

// Command-line front end. run() parses argv, dispatches to the library and
// prints a report as text or JSON. Numbers are always emitted as decimal
// strings so that output is reproducible byte for byte.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbivol/coxeter.hpp"
#include "orbivol/covolume.hpp"
#include "orbivol/error.hpp"
#include "orbivol/intpoly.hpp"
#include "orbivol/lobachevsky.hpp"
#include "orbivol/modp.hpp"
#include "orbivol/number_field.hpp"
#include "orbivol/numkernel.hpp"
#include "orbivol/prism.hpp"
#include "orbivol/zeta.hpp"

namespace orbivol::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitDegraded = 2;
inline constexpr int kExitUsage = 64;
inline constexpr const char* kSchema = "orbivol-report/1";

using Json = nlohmann::ordered_json;

struct RunConfig {
    int digits = kDefaultDigits;
    std::uint64_t cutoff = kDefaultCutoff;
    std::optional<std::string> tol;  // decimal, overrides the digits-derived tolerance
    std::string output = "text";
    std::string fields_path;
};

struct Report {
    std::vector<std::string> command;
    Json results = Json::array();
    Json diagnostics = Json::object();
    std::vector<std::string> warnings;
    int exit_code = kExitOk;

    void add(const std::string& label, const std::string& value, const std::string& error = "") {
        Json r;
        r["label"] = label;
        r["value"] = value;
        if (!error.empty()) r["error"] = error;
        results.push_back(r);
    }
};

// Angles: decimals, or rational multiples of pi such as "pi/4", "2pi/5",
// "3*pi/10", "-pi/6".
inline Real parse_angle(const std::string& text) {
    static const std::regex pi_form(R"(^\s*([+-]?)\s*(\d+)?\s*\*?\s*pi\s*(?:/\s*(\d+))?\s*$)");
    static const std::regex decimal(R"(^\s*[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?\s*$)");
    std::smatch m;
    if (std::regex_match(text, m, pi_form)) {
        Real num = m[2].matched ? Real(m[2].str()) : Real(1);
        Real den = m[3].matched ? Real(m[3].str()) : Real(1);
        if (den == 0) throw ParseError("angle '" + text + "' divides by zero", 0);
        Real v = num * const_pi() / den;
        return m[1].str() == "-" ? Real(-v) : v;
    }
    if (std::regex_match(text, m, decimal)) return Real(text);
    throw ParseError("cannot parse angle '" + text + "' (expected e.g. pi/4, 2pi/5 or 0.785)", 0);
}

inline std::vector<long long> parse_int_list(const std::string& text) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ParseError("expected a comma-separated integer list, got '" + text + "'", 0);
        }
    }
    if (out.empty()) throw ParseError("empty integer list", 0);
    return out;
}

class Runner {
public:
    Runner(RunConfig cfg, Report& report) : cfg_(std::move(cfg)), report_(report) {}

    std::string fmt(const Real& x) const { return to_decimal(x, cfg_.digits); }
    static std::string err(const Real& x) { return to_scientific(x, 3); }

    Real tolerance() const { return cfg_.tol ? Real(*cfg_.tol) : prism::default_tolerance(); }

    std::vector<NumberField> fields() const {
        std::vector<NumberField> out = builtin_fields();
        if (!cfg_.fields_path.empty()) {
            for (auto& f : load_fields(cfg_.fields_path)) {
                if (const NumberField* existing = find_field(out, f.label)) {
                    out.erase(out.begin() + (existing - out.data()));
                }
                out.push_back(std::move(f));
            }
        }
        return out;
    }

    // "label" (built-in or from --fields) or "FILE#label".
    NumberField field(const std::string& spec) const {
        auto hash = spec.find('#');
        if (hash != std::string::npos) {
            auto list = load_fields(spec.substr(0, hash));
            const NumberField* f = find_field(list, spec.substr(hash + 1));
            if (f == nullptr) throw DependencyError("no field '" + spec.substr(hash + 1) + "' in " + spec.substr(0, hash));
            return *f;
        }
        auto list = fields();
        const NumberField* f = find_field(list, spec);
        if (f == nullptr) throw DependencyError("unknown field '" + spec + "'");
        return *f;
    }

    void lob(int which, const std::string& omega_text, const std::string& method) {
        Real omega = parse_angle(omega_text);
        report_.diagnostics["omega"] = fmt(omega);
        if (which == 2) {
            auto v = lob2_with_bound(omega);
            report_.add("lob2", fmt(v.value), err(v.tail_bound));
            report_.diagnostics["method"] = "Clausen series";
            return;
        }
        if (method == "integral") {
            auto q = lob3_integral(omega);
            report_.add("lob3", fmt(q.value), err(q.error_estimate));
            report_.diagnostics["method"] = "tanh-sinh quadrature of lob2";
            report_.diagnostics["evaluations"] = std::to_string(q.evaluations);
        } else {
            auto v = lob3_with_bound(omega, zeta_int(3));
            report_.add("lob3", fmt(v.value), err(v.tail_bound));
            report_.diagnostics["method"] = "Clausen series";
        }
    }

    void prism_cmd(const std::string& alpha_text, const std::string& polytope, bool closed_forms) {
        if (closed_forms) {
            for (const auto& [name, value] : prism::closed_form_references()) report_.add(name, fmt(value), "0");
            return;
        }
        prism::PrismVolume v;
        if (!polytope.empty()) {
            auto id = prism::parse_polytope(polytope);
            v = prism::polytope_volume(id, tolerance());
            report_.diagnostics["alpha"] = fmt(prism::polytope_alpha(id));
            report_.add("vol5(" + prism::to_string(id) + ")", fmt(v.value), err(v.error_estimate));
        } else {
            Real alpha = parse_angle(alpha_text);
            v = prism::prism_volume(alpha, tolerance());
            report_.diagnostics["alpha"] = fmt(alpha);
            report_.add("vol5(P(alpha))", fmt(v.value), err(v.error_estimate));
        }
        report_.diagnostics["evaluations"] = std::to_string(v.evaluations);
        report_.diagnostics["tolerance"] = err(tolerance());
    }

    static coxeter::CoxeterDiagram diagram_from_json(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw ConfigError("cannot open diagram file '" + path + "'");
        Json doc;
        try {
            doc = Json::parse(in);
        } catch (const Json::parse_error& e) {
            throw ParseError(std::string("diagram file: ") + e.what(), e.byte);
        }
        try {
            coxeter::CoxeterDiagram d(doc.at("nodes").get<std::size_t>());
            for (const auto& e : doc.at("edges")) {
                auto i = e.at("i").get<std::size_t>(), j = e.at("j").get<std::size_t>();
                if (e.value("dashed", false)) {
                    coxeter::Dashed dash;
                    if (e.contains("length")) {
                        const auto& l = e["length"];
                        dash.length = l.is_string() ? Real(l.get<std::string>()) : Real(l.get<double>());
                    }
                    d.add_edge(i, j, dash);
                    continue;
                }
                const auto& w = e.at("weight");
                std::string ws = w.is_string() ? w.get<std::string>() : std::to_string(w.get<long>());
                auto slash = ws.find('/');
                long q = std::stol(ws.substr(0, slash));
                long p = slash == std::string::npos ? 1 : std::stol(ws.substr(slash + 1));
                d.add_edge(i, j, coxeter::make_weight(q, p));
            }
            return d;
        } catch (const Json::exception& e) {
            throw ValidationError(std::string("diagram file: ") + e.what());
        } catch (const std::invalid_argument&) {
            throw ValidationError("diagram file: malformed edge weight");
        }
    }

    void coxeter_cmd(const std::string& symbol, const std::string& diagram_path, const std::vector<std::string>& dashed,
                     const std::string& prism_id, std::string check) {
        using namespace coxeter;
        CoxeterDiagram d;
        if (!prism_id.empty()) {
            auto id = prism::parse_polytope(prism_id);
            if (id == prism::Polytope::P1) {
                auto base = solve_dashed(prism_diagram(make_weight(3)), 5, 6);
                d = double_prism_diagram(2 * base.length);
                report_.diagnostics["base_length"] = fmt(base.length);
            } else {
                d = prism_diagram(make_weight(id == prism::Polytope::P2 ? 4 : 3));
            }
        } else if (!diagram_path.empty()) {
            d = diagram_from_json(diagram_path);
        } else if (!symbol.empty()) {
            d = parse_symbol(symbol);
        } else {
            throw ValidationError("coxeter: give --symbol, --diagram or --prism");
        }
        for (const auto& spec : dashed) {
            std::vector<std::string> parts;
            std::stringstream ss(spec);
            std::string item;
            while (std::getline(ss, item, ',')) parts.push_back(item);
            if (parts.size() < 2 || parts.size() > 3) throw ParseError("--dashed expects i,j[,length]", 0);
            std::size_t i = std::stoul(parts[0]), j = std::stoul(parts[1]);
            while (std::max(i, j) >= d.node_count()) d.add_node();
            Dashed dash;
            if (parts.size() == 3) dash.length = Real(parts[2]);
            d.add_edge(i, j, dash);
        }
        try {
            report_.diagnostics["symbol"] = render_symbol(d);
        } catch (const ValidationError&) {
            // Solid part disconnected or not a chain/fork: no bracket symbol.
        }
        report_.diagnostics["nodes"] = std::to_string(d.node_count());
        auto unknown = d.unknown_dashed();
        if (check.empty()) check = unknown.empty() ? "signature" : "solve";
        if (check == "solve") {
            if (unknown.size() != 1) throw UnresolvedEdgeError("solve needs exactly one dashed edge of unknown length");
            auto [i, j] = unknown.front();
            auto sol = solve_dashed(d, i, j);
            d.set_dashed_length(i, j, sol.length);
            report_.add("length(" + std::to_string(i) + "," + std::to_string(j) + ")", fmt(sol.length));
            report_.add("cosh_length", fmt(sol.cosh_length));
            report_.add("det_residual", err(sol.det_residual));
        } else if (check != "signature") {
            throw ValidationError("--check must be signature or solve");
        } else if (!unknown.empty()) {
            throw UnresolvedEdgeError("diagram has dashed edges of unknown length; use --check solve or give lengths");
        }
        auto g = gram(d);
        report_.add("inertia", to_string(inertia(g)));
        report_.add("det", err(determinant(g)));
    }

    void zeta_cmd(const std::string& field_spec, long long disc, const std::string& over, const std::string& beta,
                  const std::string& poly, long long mod_p, int s) {
        if (!poly.empty()) {
            IntPoly f = IntPoly::from_descending(parse_int_list(poly));
            report_.add("poly", f.str());
            report_.add("disc", poly_disc(f).str());
            if (mod_p > 0) {
                auto shape = factor_shape_mod_p(f, static_cast<std::uint64_t>(mod_p));
                std::string text;
                for (const auto& pf : shape.factors)
                    text += (text.empty() ? "" : " ") + std::string("(f=") + std::to_string(pf.residue_degree) +
                            ",e=" + std::to_string(pf.ramification) + ")";
                report_.add("shape mod " + std::to_string(mod_p), text);
            }
            return;
        }
        if (disc != 0) {
            Real v = dedekind_zeta_quadratic(disc, s);
            report_.add("zeta_Q(sqrt" + std::to_string(disc) + ")(" + std::to_string(s) + ")", fmt(v), "0");
            report_.diagnostics["method"] = "character sum of Hurwitz zeta values";
            return;
        }
        if (field_spec.empty()) throw ValidationError("zeta: give --disc, --field or --poly");
        NumberField f = field(field_spec);
        report_.diagnostics["field"] = f.label;
        report_.diagnostics["poly"] = f.poly.str();
        report_.diagnostics["cutoff"] = std::to_string(cfg_.cutoff);
        EulerProductValue v;
        std::string label;
        if (!beta.empty()) {
            auto b = parse_int_list(beta);
            if (b.size() < 2 || b.size() > 3) throw ParseError("--beta expects a,b[,c] for (a + b sqrtD)/c", 0);
            QuadDescriptor desc{b[0], b[1], b.size() == 3 ? b[2] : 1};
            v = relative_L(f, desc, s, cfg_.cutoff);
            label = "L_" + f.label + "(sqrt(beta))/" + f.label;
        } else if (!over.empty()) {
            NumberField k = field(over);
            v = relative_L_quotient(f, k, s, cfg_.cutoff);
            label = "L_" + f.label + "/" + k.label;
        } else {
            v = dedekind_zeta_euler(f, s, cfg_.cutoff);
            label = "zeta_" + f.label;
        }
        report_.add(label + "(" + std::to_string(s) + ")", fmt(v.value), err(v.tail_bound));
        report_.diagnostics["method"] = "Euler product";
    }

    void add_provenance(const std::vector<ProvenanceEntry>& prov) {
        Json list = Json::array();
        for (const auto& p : prov) {
            Json e;
            e["name"] = p.name;
            e["value"] = fmt(p.value);
            e["tail_bound"] = err(p.tail_bound);
            e["cutoff"] = std::to_string(p.cutoff);
            e["method"] = p.method;
            list.push_back(e);
        }
        report_.diagnostics["provenance"] = list;
    }

    void covolume_cmd(const std::string& which) {
        auto label = parse_case(which);
        auto list = fields();
        auto r = hyperbolic_covolume(lattice_case(label), cfg_.cutoff, list);
        report_.add("covolume(" + to_string(label) + ")", fmt(r.hyperbolic_covolume), err(r.tail_bound));
        report_.add("mu_covolume", fmt(r.mu_covolume));
        add_provenance(r.provenance);
    }

    void bounds_cmd(const std::string& eq, int d, const std::string& dk, const std::string& dl, long h) {
        Real value;
        if (eq == "37") {
            value = bound_deg_ge7();
        } else if (eq == "35") {
            value = bound_disc(d, Real(dk));
        } else if (eq == "34") {
            value = bound_disc_pair(d, Real(dk), Real(dl));
        } else if (eq == "31") {
            value = bound_classno(d, Real(dk), Real(dl), h);
        } else {
            throw ValidationError("--eq must be 37, 35, 34 or 31");
        }
        report_.add("bound(" + eq + ")", fmt(value), "0");
        report_.add("exceeds_threshold", value > sieve_threshold() ? "true" : "false");
        report_.diagnostics["threshold"] = "0.004";
    }

    void verify_cmd(const std::string& which, int target) {
        auto id = parse_identity(which);
        auto v = verify_identity(id, target, cfg_.cutoff);
        report_.add("lhs", fmt(v.lhs), err(v.lhs_tail));
        report_.add("rhs", fmt(v.rhs), err(v.rhs_error));
        report_.add("matched_digits", std::to_string(v.matched_digits));
        report_.add("achievable_digits", std::to_string(v.achievable_digits));
        report_.add("target_digits", std::to_string(v.target_digits));
        add_provenance(v.provenance);
        if (v.degraded) {
            report_.warnings.push_back("target of " + std::to_string(target) + " digits exceeds the certified ceiling of " +
                                       std::to_string(v.achievable_digits) + " digits");
            report_.exit_code = kExitDegraded;
        } else if (v.matched_digits < target) {
            throw ValidationError("identity " + which + " matched only " + std::to_string(v.matched_digits) +
                                  " digits, target " + std::to_string(target));
        }
    }

    void table1_cmd() {
        const Real tol = tolerance();
        for (auto id : {prism::Polytope::P0, prism::Polytope::P1, prism::Polytope::P2}) {
            auto v = prism::polytope_volume(id, tol);
            report_.add("Delta" + prism::to_string(id).substr(1), fmt(v.value), err(v.error_estimate));
        }
        auto list = fields();
        for (auto c : {CaseLabel::Gamma0, CaseLabel::Gamma1, CaseLabel::Gamma2}) {
            auto r = hyperbolic_covolume(lattice_case(c), cfg_.cutoff, list);
            report_.add("Gamma" + to_string(c).substr(5), fmt(r.hyperbolic_covolume), err(r.tail_bound));
        }
        report_.diagnostics["cutoff"] = std::to_string(cfg_.cutoff);
    }

private:
    RunConfig cfg_;
    Report& report_;
};

inline void print(const Report& r, const std::string& format, std::ostream& out, double elapsed) {
    if (format == "json") {
        Json doc;
        doc["schema"] = kSchema;
        doc["command"] = r.command;
        doc["results"] = r.results;
        doc["diagnostics"] = r.diagnostics;
        doc["warnings"] = r.warnings;
        doc["exit_code"] = r.exit_code;
        doc["timing"] = {{"elapsed_s", to_decimal(Real(elapsed), 3)}};
        out << doc.dump(2) << "\n";
        return;
    }
    for (const auto& res : r.results) {
        out << res["label"].get<std::string>() << " = " << res["value"].get<std::string>();
        if (res.contains("error")) out << "  (+- " << res["error"].get<std::string>() << ")";
        out << "\n";
    }
    for (const auto& [key, value] : r.diagnostics.items()) {
        if (value.is_string()) {
            out << "# " << key << ": " << value.get<std::string>() << "\n";
        } else if (value.is_array()) {
            for (const auto& e : value) {
                out << "# " << key << ": " << e.value("name", "") << " = " << e.value("value", "") << " (tail "
                    << e.value("tail_bound", "") << ", cutoff " << e.value("cutoff", "") << ")\n";
            }
        }
    }
    for (const auto& w : r.warnings) out << "warning: " << w << "\n";
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"orbivol: volumes of small compact arithmetic hyperbolic 5-orbifolds", "orbivol"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::string tol_text;
    try {
        cfg.digits = default_digits_from_env();
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    app.add_option("--digits", cfg.digits, "Requested decimal digits (>= 30; default $ORBIVOL_DIGITS or 60)");
    app.add_option("--cutoff", cfg.cutoff, "Prime cutoff for Euler products (>= 1000)");
    app.add_option("--tol", tol_text, "Quadrature tolerance (default 10^-(digits-5))");
    app.add_option("--output", cfg.output, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--fields", cfg.fields_path, "JSON file with additional number fields");

    auto* lob = app.add_subcommand("lob", "Lobachevsky functions lob2, lob3");
    int lob_fn = 2;
    std::string omega, lob_method = "series";
    lob->add_option("--order,--fn", lob_fn, "2 or 3")->check(CLI::IsMember({2, 3}));
    lob->add_option("--omega", omega, "Argument, e.g. pi/5 or 0.6")->required();
    lob->add_option("--method", lob_method, "lob3 evaluation")->check(CLI::IsMember({"series", "integral"}));

    auto* prism_cmd = app.add_subcommand("prism", "Volume of the prism [5,3,3,3,alpha]");
    std::string alpha, polytope;
    bool closed_forms = false;
    auto* alpha_opt = prism_cmd->add_option("--alpha", alpha, "Dihedral angle in [pi/4, 2pi/5]");
    prism_cmd->add_option("--polytope", polytope, "P0, P1 or P2")->excludes(alpha_opt);
    prism_cmd->add_flag("--closed-forms", closed_forms, "Print the closed-form reference volumes");

    auto* cox = app.add_subcommand("coxeter", "Coxeter diagrams: Gram signature and dashed-edge lengths");
    std::string symbol, diagram, cox_prism, check;
    std::vector<std::string> dashed;
    cox->add_option("--symbol", symbol, "Coxeter symbol, e.g. [5,3,3,3,4]");
    cox->add_option("--diagram", diagram, "JSON diagram file");
    cox->add_option("--dashed", dashed, "Dashed edge i,j[,length]; repeatable");
    cox->add_option("--prism", cox_prism, "Built-in prism diagram P0, P1 or P2");
    cox->add_option("--check", check, "signature or solve")->check(CLI::IsMember({"signature", "solve"}));

    auto* zeta = app.add_subcommand("zeta", "Dedekind zeta and relative L-values");
    std::string field_spec, over, beta, poly;
    long long disc = 0, mod_p = 0;
    int s = 3;
    zeta->add_option("--field", field_spec, "Field label or FILE#label");
    zeta->add_option("--disc", disc, "Fundamental discriminant of a real quadratic field");
    zeta->add_option("--over", over, "Base field: print L(s, field/over)");
    zeta->add_option("--beta", beta, "a,b[,c]: L(s, k(sqrt beta)/k) with beta = (a + b sqrtD)/c");
    zeta->add_option("--poly", poly, "Coefficients, leading first: print the discriminant");
    zeta->add_option("--mod-p", mod_p, "With --poly: factorization shape mod p");
    zeta->add_option("--s", s, "Integer argument >= 2");

    auto* cov = app.add_subcommand("covolume", "Arithmetic hyperbolic covolumes");
    std::string which_case;
    cov->add_option("--case", which_case, "gamma0, gamma1, gamma2, 448 or 475")
        ->required()
        ->check(CLI::IsMember({"gamma0", "gamma1", "gamma2", "448", "475"}));

    auto* bounds = app.add_subcommand("bounds", "Sieve lower bounds");
    std::string eq, dk = "1", dl = "1";
    int d = 2;
    long h = 1;
    bounds->add_option("--eq", eq, "37, 35, 34 or 31")->required()->check(CLI::IsMember({"37", "35", "34", "31"}));
    bounds->add_option("--d", d, "Degree of k");
    bounds->add_option("--dk", dk, "Discriminant of k");
    bounds->add_option("--dl", dl, "Discriminant of l");
    bounds->add_option("--class-number", h, "Class number of l");

    auto* verify = app.add_subcommand("verify", "Arithmetic covolume versus twice the prism volume");
    std::string identity;
    int target = 11;
    verify->add_option("--identity", identity, "gamma0 or gamma2")->required()->check(CLI::IsMember({"gamma0", "gamma2"}));
    verify->add_option("--target", target, "Digits that must agree");

    app.add_subcommand("table1", "Both columns of the covolume table");

    if (argc <= 1) {
        out << app.help();
        return kExitUsage;
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }
    if (cfg.digits < kMinDigits) {
        err << "usage error: --digits must be >= " << kMinDigits << "\n";
        return kExitUsage;
    }
    if (cfg.cutoff < 1000) {
        err << "usage error: --cutoff must be >= 1000\n";
        return kExitUsage;
    }
    if (!tol_text.empty()) cfg.tol = tol_text;

    Report report;
    for (int i = 1; i < argc; ++i) report.command.emplace_back(argv[i]);
    report.diagnostics["digits"] = std::to_string(cfg.digits);
    const auto start = std::chrono::steady_clock::now();
    try {
        WorkingPrecision scope(cfg.digits);
        if (cfg.tol) {
            Real t(*cfg.tol);
            if (!(t > 0)) throw ConfigError("--tol must be positive");
        }
        Runner runner(cfg, report);
        CLI::App* sub = app.get_subcommands().front();
        const std::string name = sub->get_name();
        if (name == "lob") {
            runner.lob(lob_fn, omega, lob_method);
        } else if (name == "prism") {
            if (alpha.empty() && polytope.empty() && !closed_forms) throw ValidationError("prism: give --alpha or --polytope");
            runner.prism_cmd(alpha, polytope, closed_forms);
        } else if (name == "coxeter") {
            runner.coxeter_cmd(symbol, diagram, dashed, cox_prism, check);
        } else if (name == "zeta") {
            runner.zeta_cmd(field_spec, disc, over, beta, poly, mod_p, s);
        } else if (name == "covolume") {
            runner.covolume_cmd(which_case);
        } else if (name == "bounds") {
            runner.bounds_cmd(eq, d, dk, dl, h);
        } else if (name == "verify") {
            runner.verify_cmd(identity, target);
        } else if (name == "table1") {
            runner.table1_cmd();
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        print(report, cfg.output, out, elapsed);
        return report.exit_code;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
}

}  // namespace orbivol::cli
