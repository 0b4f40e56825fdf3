// Command-line front end: compute invariants, construct families, compare
// closed forms against the engine, and run the verification sweeps.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "indpoly/chordal.hpp"
#include "indpoly/closed_forms.hpp"
#include "indpoly/engine.hpp"
#include "indpoly/families.hpp"
#include "indpoly/graph.hpp"
#include "indpoly/polynomial.hpp"
#include "indpoly/verify.hpp"

namespace {

using indpoly::BigInt;
using indpoly::Graph;
using indpoly::IntPolynomial;
using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        int value = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return value;
    } catch (const std::exception&) {
        throw UsageError("expected an integer for " + what + ", got '" + s + "'");
    }
}

std::vector<int> parse_int_list(const std::string& s, const std::string& what) {
    std::vector<int> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ',')) out.push_back(parse_int(item, what));
    if (out.empty()) throw UsageError("expected a comma-separated list for " + what);
    return out;
}

int brute_force_guard() {
    if (const char* env = std::getenv("INDPOLY_MAX_N")) {
        try {
            return parse_int(env, "INDPOLY_MAX_N");
        } catch (const std::exception&) {
            throw UsageError("INDPOLY_MAX_N must be an integer");
        }
    }
    return indpoly::kBruteForceGuard;
}

json envelope(const std::string& command, const std::string& input_summary) {
    json j;
    j["schema"] = 1;
    j["command"] = command;
    j["input_summary"] = input_summary;
    j["status"] = "ok";
    return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string replace_var(std::string text, char from, char to) {
    for (char& c : text) {
        if (c == from) c = to;
    }
    return text;
}

// ---- family construction -------------------------------------------------

struct FamilyInstance {
    Graph graph;
    std::string summary;
    // Parameters kept around for classify.
    std::string name;
    std::vector<std::string> params;
};

void require_params(const std::vector<std::string>& params, std::size_t count, const std::string& name) {
    if (params.size() != count) {
        throw UsageError("family '" + name + "' expects " + std::to_string(count) + " parameter(s)");
    }
}

FamilyInstance build_family(const std::string& name, const std::vector<std::string>& params) {
    FamilyInstance out;
    out.name = name;
    out.params = params;
    std::string joined;
    for (const auto& p : params) joined += " " + p;
    out.summary = "family " + name + joined;

    if (name == "path") {
        require_params(params, 1, name);
        out.graph = indpoly::path(parse_int(params[0], "n"));
    } else if (name == "complete") {
        require_params(params, 1, name);
        out.graph = indpoly::complete(parse_int(params[0], "n"));
    } else if (name == "complete-minus-edge") {
        require_params(params, 1, name);
        out.graph = indpoly::complete_minus_edge(parse_int(params[0], "n"));
    } else if (name == "big-star") {
        require_params(params, 1, name);
        out.graph = indpoly::big_star({parse_int_list(params[0], "arms")});
    } else if (name == "whisker") {
        require_params(params, 2, name);
        Graph base = indpoly::parse_graph6(params[0]);
        out.graph = indpoly::whisker({base, parse_int_list(params[1], "leaf counts")});
    } else if (name == "caterpillar") {
        require_params(params, 2, name);
        int spine = parse_int(params[0], "spine");
        out.graph = indpoly::caterpillar({spine, parse_int_list(params[1], "leaf counts")});
    } else if (name == "two-clique") {
        require_params(params, 3, name);
        out.graph = indpoly::two_clique(
            {parse_int(params[0], "n"), parse_int(params[1], "a"), parse_int(params[2], "t")});
    } else if (name == "bouquet") {
        require_params(params, 1, name);
        out.graph = indpoly::clique_bouquet({parse_int_list(params[0], "radii")});
    } else if (name == "cochordal-witness") {
        require_params(params, 2, name);
        out.graph = indpoly::cochordal_symmetric_witness(parse_int(params[0], "d"), parse_int(params[1], "m"));
    } else if (name == "exp-witness") {
        require_params(params, 1, name);
        out.graph = indpoly::exponential_witness(parse_int(params[0], "n"));
    } else {
        throw UsageError("unknown family '" + name + "'");
    }
    return out;
}

// ---- poly ----------------------------------------------------------------

struct PolyOptions {
    std::string edges_file;
    std::string g6;
    std::vector<std::string> family_args;
    bool brute_force = false;
    bool json_output = false;
};

std::pair<Graph, std::string> resolve_input(const PolyOptions& opt) {
    int sources = (opt.edges_file.empty() ? 0 : 1) + (opt.g6.empty() ? 0 : 1) +
                  (opt.family_args.empty() ? 0 : 1);
    if (sources != 1) {
        throw UsageError("exactly one of --edges, --g6, --family is required");
    }
    if (!opt.edges_file.empty()) {
        std::ifstream in(opt.edges_file);
        if (!in) throw UsageError("cannot open '" + opt.edges_file + "'");
        std::stringstream buffer;
        buffer << in.rdbuf();
        return {indpoly::parse_edge_list_text(buffer.str()), "edges " + opt.edges_file};
    }
    if (!opt.g6.empty()) {
        return {indpoly::parse_graph6(opt.g6), "g6 " + opt.g6};
    }
    FamilyInstance inst =
        build_family(opt.family_args[0],
                     {opt.family_args.begin() + 1, opt.family_args.end()});
    return {std::move(inst.graph), inst.summary};
}

json report_to_json(const indpoly::InvariantReport& r) {
    json out;
    out["alpha"] = r.alpha;
    out["poly"] = indpoly::to_decimal_strings(r.poly);
    out["poly_text"] = r.poly.to_text();
    out["value_at_minus_one"] = r.value_at_minus_one.str();
    out["multiplicity"] = r.multiplicity;
    out["h_poly"] = indpoly::to_decimal_strings(r.h.h);
    out["h_text"] = replace_var(r.h.h.to_text(), 'x', 't');
    out["a_invariant"] = r.h.a_invariant;
    out["pseudo_gorenstein_star"] = r.pseudo_gorenstein_star;
    out["symmetric"] = r.symmetric;
    return out;
}

int cmd_poly(const PolyOptions& opt) {
    auto [graph, summary] = resolve_input(opt);

    indpoly::InvariantReport rep;
    if (opt.brute_force) {
        rep.poly = indpoly::brute_force_polynomial(graph, brute_force_guard());
        rep.alpha = rep.poly.degree();
        rep.value_at_minus_one = rep.poly.eval(-1);
        rep.multiplicity = indpoly::multiplicity_at_minus_one(rep.poly);
        rep.h = indpoly::h_transform(rep.poly, rep.alpha);
        rep.pseudo_gorenstein_star =
            rep.value_at_minus_one == (rep.alpha % 2 == 0 ? BigInt(1) : BigInt(-1));
        rep.symmetric = indpoly::is_symmetric(rep.poly);
    } else {
        rep = indpoly::report(graph);
    }

    if (opt.json_output) {
        json j = envelope("poly", summary);
        json result = report_to_json(rep);
        result["n"] = graph.n();
        result["edge_count"] = graph.edge_count();
        j["result"] = result;
        emit(j);
    } else {
        std::cout << "input: " << summary << " (n=" << graph.n() << ", edges=" << graph.edge_count()
                  << ")\n";
        std::cout << "P(x)                = " << rep.poly.to_text() << "\n";
        std::cout << "alpha               = " << rep.alpha << "\n";
        std::cout << "P(-1)               = " << rep.value_at_minus_one.str() << "\n";
        std::cout << "multiplicity M      = " << rep.multiplicity << "\n";
        std::cout << "h(t)                = " << replace_var(rep.h.h.to_text(), 'x', 't') << "\n";
        std::cout << "a-invariant         = " << rep.h.a_invariant << "\n";
        std::cout << "pseudo-Gorenstein*  = " << (rep.pseudo_gorenstein_star ? "yes" : "no") << "\n";
        std::cout << "symmetric           = " << (rep.symmetric ? "yes" : "no") << "\n";
    }
    return kExitOk;
}

// ---- classify --------------------------------------------------------------

struct ClassifyRow {
    std::string invariant;
    std::string closed_form;
    std::string engine;
    bool agree = false;
};

void add_row(std::vector<ClassifyRow>& rows, const std::string& invariant, const std::string& closed,
             const std::string& engine) {
    rows.push_back({invariant, closed, engine, closed == engine});
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::vector<ClassifyRow> classify_rows(const FamilyInstance& inst) {
    std::vector<ClassifyRow> rows;
    const Graph& g = inst.graph;
    IntPolynomial p = indpoly::independence_polynomial(g);
    BigInt value = p.eval(-1);
    int alpha = p.degree();
    bool pg = value == (alpha % 2 == 0 ? BigInt(1) : BigInt(-1));

    const std::string& name = inst.name;
    const auto& params = inst.params;
    if (name == "path") {
        int n = parse_int(params[0], "n");
        add_row(rows, "polynomial", indpoly::path_polynomial(n).to_text(), p.to_text());
        add_row(rows, "value_at_minus_one", std::to_string(indpoly::path_minus_one(n)), value.str());
    } else if (name == "complete") {
        int n = parse_int(params[0], "n");
        IntPolynomial expected(std::vector<BigInt>{1, n});
        add_row(rows, "polynomial", expected.to_text(), p.to_text());
    } else if (name == "complete-minus-edge") {
        int n = parse_int(params[0], "n");
        IntPolynomial expected(std::vector<BigInt>{1, n, 1});
        add_row(rows, "polynomial", expected.to_text(), p.to_text());
    } else if (name == "big-star") {
        indpoly::BigStarParams bp{parse_int_list(params[0], "arms")};
        add_row(rows, "polynomial", indpoly::big_star_poly_formula(bp).to_text(), p.to_text());
        add_row(rows, "value_at_minus_one", std::to_string(indpoly::big_star_minus_one(bp)), value.str());
        add_row(rows, "alpha", std::to_string(indpoly::big_star_alpha(bp)), std::to_string(alpha));
        add_row(rows, "pseudo_gorenstein_star", bool_text(indpoly::big_star_pseudo_gorenstein(bp)),
                bool_text(pg));
        add_row(rows, "symmetric", bool_text(indpoly::big_star_is_symmetric(bp)),
                bool_text(indpoly::is_symmetric(p)));
    } else if (name == "whisker") {
        indpoly::WhiskerSpec spec{indpoly::parse_graph6(params[0]),
                                  parse_int_list(params[1], "leaf counts")};
        add_row(rows, "polynomial", indpoly::whisker_polynomial(spec).to_text(), p.to_text());
        add_row(rows, "value_at_minus_one", indpoly::whisker_minus_one(spec).str(), value.str());
        add_row(rows, "alpha", std::to_string(indpoly::whisker_alpha(spec)), std::to_string(alpha));
        bool full_support = true;
        for (int f : spec.leaf_counts) full_support = full_support && f >= 1;
        if (full_support) {
            add_row(rows, "symmetric", bool_text(indpoly::whisker_symmetric_criterion(spec)),
                    bool_text(indpoly::is_symmetric(p)));
        }
    } else if (name == "caterpillar") {
        indpoly::CaterpillarSpec spec{parse_int(params[0], "spine"),
                                      parse_int_list(params[1], "leaf counts")};
        add_row(rows, "value_at_minus_one", std::to_string(indpoly::caterpillar_minus_one(spec)),
                value.str());
        add_row(rows, "alpha", std::to_string(indpoly::caterpillar_alpha(spec)), std::to_string(alpha));
        add_row(rows, "pseudo_gorenstein_star", bool_text(indpoly::caterpillar_pseudo_gorenstein(spec)),
                bool_text(pg));
        bool full_support = true;
        for (int f : spec.leaf_counts) full_support = full_support && f >= 1;
        if (full_support) {
            add_row(rows, "symmetric", bool_text(indpoly::caterpillar_symmetric_criterion(spec)),
                    bool_text(indpoly::is_symmetric(p)));
        }
    } else if (name == "two-clique") {
        indpoly::TwoCliqueParams tp{parse_int(params[0], "n"), parse_int(params[1], "a"),
                                    parse_int(params[2], "t")};
        add_row(rows, "value_at_minus_one", std::to_string(indpoly::two_clique_minus_one(tp)),
                value.str());
        add_row(rows, "alpha_at_most_2", "true", bool_text(alpha <= 2));
        add_row(rows, "chordal", "true", bool_text(indpoly::is_chordal(g)));
    } else if (name == "bouquet") {
        indpoly::BouquetParams bp{parse_int_list(params[0], "radii")};
        add_row(rows, "polynomial", indpoly::bouquet_poly_formula(bp).to_text(), p.to_text());
        add_row(rows, "value_at_minus_one", indpoly::bouquet_minus_one(bp).str(), value.str());
        add_row(rows, "chordal", "true", bool_text(indpoly::is_chordal(g)));
    } else if (name == "cochordal-witness") {
        int d = parse_int(params[0], "d");
        int m = parse_int(params[1], "m");
        IntPolynomial expected =
            IntPolynomial::one_plus_x_power(d) +
            (IntPolynomial::constant(m) * IntPolynomial::one_plus_x_power(d - 2)).times_x();
        add_row(rows, "polynomial", expected.to_text(), p.to_text());
        auto recovered = indpoly::cochordal_symmetric_form(p);
        add_row(rows, "recovered_m", std::to_string(m), recovered ? recovered->str() : "absent");
        add_row(rows, "symmetric", "true", bool_text(indpoly::is_symmetric(p)));
        add_row(rows, "cochordal", "true", bool_text(indpoly::is_cochordal(g)));
    } else if (name == "exp-witness") {
        int n = parse_int(params[0], "n");
        indpoly::BouquetParams bp = indpoly::exponential_witness_params(n);
        add_row(rows, "value_at_minus_one", indpoly::bouquet_minus_one(bp).str(), value.str());
        BigInt bound = (BigInt(1) << (2 * ((n - 1) / 5))) - 1;
        add_row(rows, "abs_value_at_least_" + bound.str(), "true", bool_text(abs(value) >= bound));
        add_row(rows, "chordal", "true", bool_text(indpoly::is_chordal(g)));
    } else {
        throw UsageError("family '" + name + "' has no closed forms to classify");
    }
    return rows;
}

int cmd_classify(const std::vector<std::string>& args, bool json_output) {
    if (args.empty()) throw UsageError("classify needs a family name");
    FamilyInstance inst = build_family(args[0], {args.begin() + 1, args.end()});
    std::vector<ClassifyRow> rows = classify_rows(inst);

    bool all_agree = true;
    for (const auto& row : rows) all_agree = all_agree && row.agree;

    if (json_output) {
        json j = envelope("classify", inst.summary);
        json result;
        result["family"] = inst.name;
        result["all_agree"] = all_agree;
        result["rows"] = json::array();
        for (const auto& row : rows) {
            result["rows"].push_back({{"invariant", row.invariant},
                                      {"closed_form", row.closed_form},
                                      {"engine", row.engine},
                                      {"agree", row.agree}});
        }
        j["result"] = result;
        emit(j);
    } else {
        std::cout << "input: " << inst.summary << "\n";
        for (const auto& row : rows) {
            std::cout << (row.agree ? "  agree    " : "  DISAGREE ") << row.invariant
                      << ": closed-form=" << row.closed_form << " engine=" << row.engine << "\n";
        }
        std::cout << (all_agree ? "all invariants agree\n" : "DISAGREEMENT FOUND\n");
    }
    return all_agree ? kExitOk : kExitVerificationFailure;
}

// ---- family ----------------------------------------------------------------

int cmd_family(const std::vector<std::string>& args, bool as_g6, bool as_edges, bool json_output) {
    if (args.empty()) throw UsageError("family needs a family name");
    if (as_g6 && as_edges) throw UsageError("choose one of --g6 and --edges");
    FamilyInstance inst = build_family(args[0], {args.begin() + 1, args.end()});

    std::string format = as_g6 ? "graph6" : "edge-list";
    if (json_output) {
        json j = envelope("family", inst.summary);
        json result;
        result["n"] = inst.graph.n();
        result["format"] = format;
        if (as_g6) {
            result["graph6"] = indpoly::encode_graph6(inst.graph);
        } else {
            result["edge_list"] = indpoly::to_edge_list_text(inst.graph);
        }
        if (!inst.graph.labels().empty()) result["labels"] = inst.graph.labels();
        j["result"] = result;
        emit(j);
    } else if (as_g6) {
        std::cout << indpoly::encode_graph6(inst.graph) << "\n";
    } else {
        std::cout << indpoly::to_edge_list_text(inst.graph);
    }
    return kExitOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyOptions {
    std::string suite;
    int max_q = -1;
    int max_arm = -1;
    int count = -1;
    int max_n = -1;
    int single_n = -1;
    std::uint64_t seed = 0;
    bool seed_set = false;
    bool json_output = false;
};

std::vector<indpoly::verify::SweepResult> run_suites(const VerifyOptions& opt) {
    using namespace indpoly::verify;
    Bounds bounds;
    if (opt.max_q >= 0) bounds.max_q = opt.max_q;
    if (opt.max_arm >= 0) bounds.max_arm = opt.max_arm;
    if (opt.seed_set) bounds.seed = opt.seed;
    if (opt.count >= 0) {
        bounds.whisker_count = opt.count;
        bounds.tree_count = opt.count;
        bounds.engstrom_count = opt.count;
        bounds.oracle_count = opt.count;
        bounds.identity_count = opt.count;
    }
    if (opt.single_n >= 0) {
        if (opt.suite != "range") throw UsageError("--n applies to the 'range' suite only");
        bounds.range_lo = opt.single_n;
        bounds.range_hi = opt.single_n;
    }
    if (opt.max_n >= 0) {
        if (opt.suite == "paths") {
            bounds.path_max_n = opt.max_n;
        } else if (opt.suite == "cochordal") {
            bounds.cochordal_n = opt.max_n;
        } else if (opt.suite == "trees") {
            bounds.tree_max_n = opt.max_n;
        } else if (opt.suite == "engstrom") {
            bounds.engstrom_max_n = opt.max_n;
        } else if (opt.suite == "oracle") {
            bounds.oracle_max_n = opt.max_n;
        } else if (opt.suite == "range") {
            bounds.range_hi = opt.max_n;
        } else {
            throw UsageError("--max-n does not apply to suite '" + opt.suite + "'");
        }
    }

    if (opt.suite == "paths") return {run_paths(bounds)};
    if (opt.suite == "big-stars") return {run_big_stars(bounds)};
    if (opt.suite == "caterpillars") return {run_caterpillars(bounds)};
    if (opt.suite == "whiskers") return {run_whiskers(bounds)};
    if (opt.suite == "cochordal") return {run_cochordal(bounds)};
    if (opt.suite == "range") return {run_range(bounds)};
    if (opt.suite == "bouquets") return {run_bouquets(bounds)};
    if (opt.suite == "trees") return {run_trees(bounds)};
    if (opt.suite == "engstrom") return {run_engstrom(bounds)};
    if (opt.suite == "oracle") return {run_oracle(bounds)};
    if (opt.suite == "all") return run_all(bounds);
    throw UsageError("unknown suite '" + opt.suite + "'");
}

int cmd_verify(const VerifyOptions& opt) {
    std::vector<indpoly::verify::SweepResult> results = run_suites(opt);
    bool ok = true;
    for (const auto& r : results) ok = ok && r.ok();

    if (opt.json_output) {
        json j = envelope("verify", "suite " + opt.suite);
        json suites = json::array();
        for (const auto& r : results) {
            json s;
            s["suite"] = r.suite;
            s["checked"] = r.checked;
            s["failures"] = r.failures;
            s["ok"] = r.ok();
            if (!r.first_counterexample.empty()) s["first_counterexample"] = r.first_counterexample;
            if (!r.notes.empty()) s["notes"] = r.notes;
            suites.push_back(s);
        }
        j["result"] = {{"ok", ok}, {"suites", suites}};
        if (!ok) j["status"] = "error";
        emit(j);
    } else {
        for (const auto& r : results) {
            std::cout << (r.ok() ? "pass" : "FAIL") << "  " << r.suite << "  checked=" << r.checked
                      << " failures=" << r.failures;
            for (const auto& note : r.notes) std::cout << "  [" << note << "]";
            if (!r.ok()) std::cout << "\n      first counterexample: " << r.first_counterexample;
            std::cout << "\n";
        }
    }
    return ok ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact independence polynomials, invariants, and closed-form verification"};
    app.require_subcommand(1);

    PolyOptions poly_opt;
    auto* poly = app.add_subcommand("poly", "compute the independence polynomial and its invariants");
    poly->add_option("--edges", poly_opt.edges_file, "edge-list file (first line n, then 'u v' lines)");
    poly->add_option("--g6", poly_opt.g6, "graph6 string");
    poly->add_option("--family", poly_opt.family_args, "family name followed by its parameters")
        ->expected(-1);
    poly->add_flag("--brute-force", poly_opt.brute_force, "use the subset-enumeration oracle");
    poly->add_flag("--json", poly_opt.json_output, "JSON output");

    std::vector<std::string> classify_args;
    bool classify_json = false;
    auto* classify = app.add_subcommand("classify", "compare closed-form invariants with the engine");
    classify->add_option("family", classify_args, "family name followed by its parameters")
        ->required()
        ->expected(-1);
    classify->add_flag("--json", classify_json, "JSON output");

    std::vector<std::string> family_args;
    bool family_g6 = false;
    bool family_edges = false;
    bool family_json = false;
    auto* family = app.add_subcommand("family", "construct a family instance and print it");
    family->add_option("family", family_args, "family name followed by its parameters")
        ->required()
        ->expected(-1);
    family->add_flag("--g6", family_g6, "emit graph6");
    family->add_flag("--edges", family_edges, "emit the edge-list text format (default)");
    family->add_flag("--json", family_json, "JSON output");

    VerifyOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "run a verification sweep");
    verify
        ->add_option("suite", verify_opt.suite,
                     "paths | big-stars | caterpillars | whiskers | cochordal | range | bouquets | "
                     "trees | engstrom | oracle | all")
        ->required();
    verify->add_option("--max-q", verify_opt.max_q, "big stars: maximum arm count");
    verify->add_option("--max-arm", verify_opt.max_arm, "big stars: maximum arm length");
    verify->add_option("--count", verify_opt.count, "randomized suites: number of instances");
    verify->add_option("--max-n", verify_opt.max_n, "per-suite size cap");
    verify->add_option("--n", verify_opt.single_n, "range suite: restrict to a single n");
    auto* seed_opt = verify->add_option("--seed", verify_opt.seed, "seed for randomized sweeps");
    verify->add_flag("--json", verify_opt.json_output, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }
    verify_opt.seed_set = seed_opt->count() > 0;

    bool json_output = poly_opt.json_output || classify_json || family_json || verify_opt.json_output;
    std::string command = poly->parsed()      ? "poly"
                          : classify->parsed() ? "classify"
                          : family->parsed()   ? "family"
                                               : "verify";
    try {
        if (poly->parsed()) return cmd_poly(poly_opt);
        if (classify->parsed()) return cmd_classify(classify_args, classify_json);
        if (family->parsed()) return cmd_family(family_args, family_g6, family_edges, family_json);
        return cmd_verify(verify_opt);
    } catch (const std::exception& e) {
        if (json_output) {
            json j = envelope(command, "");
            j["status"] = "error";
            j["error"] = e.what();
            emit(j);
        } else {
            std::cerr << "error: " << e.what() << "\n";
        }
        return kExitUsage;
    }
}
