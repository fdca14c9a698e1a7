// ======================================================================
// limpack.cpp -- command-line surface for the toolkit
//
// Subcommands: compute, verify, generate, reduce, theorems.
// Exit codes: 0 success/pass, 1 verification or sweep failure, 2 usage
// or parse error.  Stdout is machine-oriented (graph6 or JSON lines);
// timing chatter goes to stderr so identical invocations stay
// byte-identical on stdout.
// ======================================================================

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "limpack/families.hpp"
#include "limpack/graph.hpp"
#include "limpack/harness.hpp"
#include "limpack/io.hpp"
#include "limpack/reduce.hpp"
#include "limpack/solve.hpp"
#include "limpack/tree.hpp"
#include "limpack/verify.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------
// shared plumbing
// ---------------------------------------------------------------------

long long default_budget_from_env() {
    const char* raw = std::getenv("LIMPACK_BUDGET");
    if (!raw || !*raw) return 0;
    char* end = nullptr;
    const long long v = std::strtoll(raw, &end, 10);
    if (end == raw || *end != '\0' || v < 0)
        throw UsageError(std::string("LIMPACK_BUDGET must be a nonnegative integer, got \"") +
                         raw + "\"");
    return v;
}

limpack::Graph load_input_graph(const std::string& path, const std::string& inline_g6) {
    if (!path.empty() && !inline_g6.empty())
        throw UsageError("provide exactly one of --graph and --g6");
    if (!inline_g6.empty()) return limpack::from_graph6(inline_g6);
    if (!path.empty()) return limpack::read_graph_file(path);
    throw UsageError("an input graph is required (--graph FILE or --g6 STRING)");
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << text;
}

ordered_json json_from_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot open certificate file: " + path);
    ordered_json j;
    try {
        f >> j;
    } catch (const std::exception& e) {
        throw UsageError("malformed certificate JSON: " + std::string(e.what()));
    }
    return j;
}

std::vector<int> int_list(const ordered_json& j, int n, const char* what) {
    if (!j.is_array()) throw UsageError(std::string(what) + " must be a JSON array");
    std::vector<int> out;
    for (const auto& e : j) {
        if (!e.is_number_integer())
            throw UsageError(std::string(what) + " must contain integers only");
        const long long v = e.get<long long>();
        if (v < 0 || v >= n)
            throw UsageError(std::string(what) + " index " + std::to_string(v) +
                             " out of range for order " + std::to_string(n));
        out.push_back(int(v));
    }
    return out;
}

// ---------------------------------------------------------------------
// compute
// ---------------------------------------------------------------------

struct ComputeCfg {
    std::string graph_path, inline_g6, invariant, out_path;
    int k = 2;
    long long budget = -1;  // -1: take LIMPACK_BUDGET (or unlimited)
};

const char* status_name(limpack::SolveStatus s) {
    switch (s) {
        case limpack::SolveStatus::Exact: return "exact";
        case limpack::SolveStatus::Incomplete: return "incomplete";
        default: return "undefined";
    }
}

int run_compute(const ComputeCfg& cfg) {
    const auto g = load_input_graph(cfg.graph_path, cfg.inline_g6);
    limpack::SolveOptions so;
    so.node_budget = cfg.budget >= 0 ? cfg.budget : default_budget_from_env();

    limpack::InvariantResult r;
    const std::string& inv = cfg.invariant;
    if (inv == "lk") r = limpack::l_k(g, cfg.k, so);
    else if (inv == "l2") r = limpack::l_k(g, 2, so);
    else if (inv == "lkt") r = limpack::l_kt(g, cfg.k, so);
    else if (inv == "l2t") r = limpack::l_kt(g, 2, so);
    else if (inv == "rho") r = limpack::rho(g, so);
    else if (inv == "rho_o") r = limpack::rho_o(g, so);
    else if (inv == "gamma_xk" || inv == "gamma") r = limpack::gamma_xk(g, cfg.k, so);
    else if (inv == "chi_xk" || inv == "chi") r = limpack::chi_xk(g, cfg.k, so);
    else if (inv == "d_xk" || inv == "d") r = limpack::d_xk(g, cfg.k, so);
    else if (inv == "chi2") r = limpack::chi2_distance(g, so);
    else throw UsageError("unknown invariant: " + inv);

    ordered_json j;
    j["invariant"] = r.invariant;
    j["k"] = r.k;
    j["status"] = status_name(r.status);
    if (r.value >= 0) j["value"] = r.value; else j["value"] = nullptr;
    if (r.status == limpack::SolveStatus::Incomplete) {
        j["lower"] = r.lower;
        j["upper"] = r.upper;
    }
    j["nodes"] = r.nodes_explored;
    if (r.set_certificate) j["certificate"] = *r.set_certificate;
    if (r.partition_certificate)
        j["certificate"] = r.partition_certificate->class_lists();
    emit(j.dump() + "\n", cfg.out_path);
    return kExitPass;
}

// ---------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------

struct VerifyCfg {
    std::string graph_path, inline_g6, predicate, cert_path, out_path;
    int k = 2;
};

int run_verify(const VerifyCfg& cfg) {
    const auto g = load_input_graph(cfg.graph_path, cfg.inline_g6);
    const auto j = json_from_file(cfg.cert_path);

    const bool partition_shaped = j.is_array() && !j.empty() && j[0].is_array();
    limpack::CheckResult res;
    const std::string& p = cfg.predicate;
    if (p == "lk" || p == "lkt" || p == "ktd" || p == "rho" || p == "rho_o") {
        if (partition_shaped)
            throw UsageError("predicate " + p + " expects a flat vertex list, not a partition");
        const auto verts = int_list(j, g.order(), "certificate");
        const auto b = limpack::make_vertex_set(g, verts);
        if (p == "lk") res = limpack::is_k_limited_packing(g, b, cfg.k);
        else if (p == "lkt") res = limpack::is_k_total_limited_packing(g, b, cfg.k);
        else if (p == "ktd") res = limpack::is_k_tuple_dominating(g, b, cfg.k);
        else if (p == "rho") res = limpack::is_packing(g, b);
        else res = limpack::is_open_packing(g, b);
    } else if (p == "klp" || p == "ktdp" || p == "chi2") {
        if (!partition_shaped)
            throw UsageError("predicate " + p + " expects a JSON array of class arrays");
        std::vector<std::vector<int>> classes;
        for (const auto& cls : j) classes.push_back(int_list(cls, g.order(), "partition class"));
        limpack::VertexPartition part;
        try {
            part = limpack::VertexPartition::from_classes(g.order(), classes);
        } catch (const std::exception& e) {
            throw UsageError(std::string("malformed partition: ") + e.what());
        }
        if (p == "klp") res = limpack::is_klp_partition(g, part, cfg.k);
        else if (p == "ktdp") res = limpack::is_ktd_partition(g, part, cfg.k);
        else res = limpack::is_2distance_coloring(g, part);
    } else {
        throw UsageError("unknown predicate: " + p +
                         " (expected lk|lkt|ktd|rho|rho_o|klp|ktdp|chi2)");
    }

    ordered_json out;
    out["predicate"] = p;
    out["ok"] = res.ok;
    if (res.violation) {
        out["vertex"] = res.violation->vertex;
        out["observed"] = res.violation->observed;
        out["bound"] = res.violation->bound;
        out["detail"] = res.violation->detail;
    }
    emit(out.dump() + "\n", cfg.out_path);
    return res.ok ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------------
// generate
// ---------------------------------------------------------------------

struct GenerateCfg {
    std::string family, out_path, positions;
    int k = 2, t = 1, r = 2, s = 2, p = 1, cycle_len = 6, n = 1, count = 1;
    unsigned long long seed = 1;
    bool describe = false;
};

ordered_json sharpness_meta(const limpack::SharpnessInstance& si, ordered_json params) {
    ordered_json meta;
    meta["family"] = si.family;
    meta["params"] = std::move(params);
    meta["order"] = si.graph.order();
    meta["expected"] = ordered_json::object();
    for (const auto& [key, value] : si.expected) meta["expected"][key] = value;
    if (!si.witness_sets.empty()) {
        meta["witness_sets"] = ordered_json::object();
        for (const auto& [key, verts] : si.witness_sets) meta["witness_sets"][key] = verts;
    }
    if (!si.witness_partitions.empty()) {
        meta["witness_partitions"] = ordered_json::object();
        for (const auto& [key, part] : si.witness_partitions)
            meta["witness_partitions"][key] = part.class_lists();
    }
    return meta;
}

std::vector<int> parse_positions(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw UsageError("--positions expects comma-separated integers, got \"" + tok + "\"");
        }
    }
    return out;
}

int run_generate(const GenerateCfg& cfg) {
    std::vector<limpack::Graph> graphs;
    ordered_json meta;
    const std::string& fam = cfg.family;
    if (fam == "omega") {
        graphs.push_back(limpack::build_canonical_omega(cfg.k, cfg.t, cfg.r));
        meta["family"] = "omega";
        meta["params"] = {{"k", cfg.k}, {"t", cfg.t}, {"r", cfg.r}};
        meta["order"] = graphs[0].order();
        meta["expected"] = {{"min_degree", cfg.t * cfg.k + cfg.r - 1}, {"d_xk", cfg.t}};
    } else if (fam == "lambda" || fam == "lambda-random") {
        limpack::LambdaSpec spec;
        spec.r = cfg.r;
        spec.s = cfg.s;
        graphs.push_back(fam == "lambda" ? limpack::build_lambda(spec)
                                         : limpack::build_lambda_random(spec, cfg.seed));
        meta["family"] = fam;
        meta["params"] = {{"r", cfg.r}, {"s", cfg.s}};
        if (fam == "lambda-random") meta["params"]["seed"] = cfg.seed;
        meta["order"] = graphs[0].order();
        meta["expected"] = {{"chi_x2", cfg.r}, {"l2", cfg.s}, {"gamma_x2", cfg.s}};
    } else if (fam == "ng-cocktail") {
        auto si = limpack::build_ng_cocktail(cfg.p);
        meta = sharpness_meta(si, {{"p", cfg.p}});
        graphs.push_back(std::move(si.graph));
    } else if (fam == "pendant-cycle") {
        auto si = limpack::build_girth_pendant_cycle(cfg.cycle_len, parse_positions(cfg.positions));
        meta = sharpness_meta(si, {{"cycle_len", cfg.cycle_len}, {"positions", cfg.positions}});
        graphs.push_back(std::move(si.graph));
    } else if (fam == "tree-diff") {
        auto si = limpack::build_tree_diff_sharp(cfg.t);
        meta = sharpness_meta(si, {{"t", cfg.t}});
        graphs.push_back(std::move(si.graph));
    } else if (fam == "gap") {
        auto si = limpack::build_gap_graph(cfg.p);
        meta = sharpness_meta(si, {{"p", cfg.p}});
        graphs.push_back(std::move(si.graph));
    } else if (fam == "path" || fam == "cycle" || fam == "star" || fam == "complete" ||
               fam == "complete-minus-matching") {
        if (fam == "path") graphs.push_back(limpack::path_graph(cfg.n));
        else if (fam == "cycle") graphs.push_back(limpack::cycle_graph(cfg.n));
        else if (fam == "star") graphs.push_back(limpack::star_graph(cfg.n));
        else if (fam == "complete") graphs.push_back(limpack::complete_graph(cfg.n));
        else graphs.push_back(limpack::complete_minus_perfect_matching(cfg.n));
        meta["family"] = fam;
        meta["params"] = {{"n", cfg.n}};
    } else if (fam == "random-tree") {
        graphs = limpack::random_trees(cfg.count, cfg.n, cfg.seed);
        meta["family"] = fam;
        meta["params"] = {{"n", cfg.n}, {"count", cfg.count}, {"seed", cfg.seed}};
    } else if (fam == "random-graph") {
        graphs = limpack::random_graphs(cfg.count, cfg.n, cfg.seed);
        meta["family"] = fam;
        meta["params"] = {{"n", cfg.n}, {"count", cfg.count}, {"seed", cfg.seed}};
    } else {
        throw UsageError("unknown family: " + fam);
    }
    meta["count"] = graphs.size();

    std::string g6_text;
    for (const auto& g : graphs) g6_text += limpack::to_graph6(g) + "\n";
    emit(g6_text, cfg.out_path);
    if (!cfg.out_path.empty()) {
        std::ofstream side(cfg.out_path + ".json");
        if (!side) throw std::runtime_error("cannot open sidecar file: " + cfg.out_path + ".json");
        side << meta.dump() << "\n";
    }
    if (cfg.describe) std::cout << meta.dump() << "\n";
    return kExitPass;
}

// ---------------------------------------------------------------------
// reduce
// ---------------------------------------------------------------------

struct ReduceCfg {
    std::string graph_path, inline_g6, out_path, lift_path;
    bool check = false;
    long long budget = -1;
};

int run_reduce(const ReduceCfg& cfg) {
    const auto g = load_input_graph(cfg.graph_path, cfg.inline_g6);
    if (cfg.check) {
        limpack::SolveOptions so;
        so.node_budget = cfg.budget >= 0 ? cfg.budget : default_budget_from_env();
        const auto rc = limpack::check_reduction_identity(g, so);
        ordered_json j;
        j["ok"] = rc.ok;
        j["incomplete"] = rc.incomplete;
        j["open_packing"] = rc.open_packing.value;
        j["total_limited_packing"] = rc.total_packing.value;
        j["threshold_offset"] = g.order();
        emit(j.dump() + "\n", cfg.out_path);
        return rc.ok ? kExitPass : kExitFail;
    }
    if (!cfg.lift_path.empty()) {
        const auto j = json_from_file(cfg.lift_path);
        const auto verts = int_list(j, g.order(), "certificate");
        const auto b = limpack::make_vertex_set(g, verts);
        ordered_json out;
        try {
            const auto lifted = limpack::lift_certificate(g, b);
            out["ok"] = true;
            out["lifted"] = lifted.to_vector();
            emit(out.dump() + "\n", cfg.out_path);
            return kExitPass;
        } catch (const std::invalid_argument& e) {
            out["ok"] = false;
            out["detail"] = e.what();
            emit(out.dump() + "\n", cfg.out_path);
            return kExitFail;
        }
    }
    const auto inst = limpack::reduce_op_to_2tlp(g);
    emit(limpack::to_graph6(inst.target) + "\n", cfg.out_path);
    if (!cfg.out_path.empty()) {
        ordered_json side;
        side["threshold_offset"] = inst.threshold_offset;
        side["source_order"] = inst.source.order();
        side["target_order"] = inst.target.order();
        std::ofstream sf(cfg.out_path + ".json");
        if (!sf) throw std::runtime_error("cannot open sidecar file: " + cfg.out_path + ".json");
        sf << side.dump() << "\n";
    }
    return kExitPass;
}

// ---------------------------------------------------------------------
// theorems
// ---------------------------------------------------------------------

struct TheoremsCfg {
    std::string ids, graphs_path, out_path;
    int exhaustive = 0, trees = 0, random_count = 0, n = 0, threads = 0;
    unsigned long long seed = 1;
    long long budget = -1;
    bool table = false;
};

std::vector<std::string> parse_ids(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
        while (!tok.empty() && tok.back() == ' ') tok.pop_back();
        if (!tok.empty()) out.push_back(tok);
    }
    return out;
}

int run_theorems(const TheoremsCfg& cfg) {
    std::vector<std::string> ids;
    if (cfg.ids.empty()) {
        for (const auto& c : limpack::theorem_registry()) ids.push_back(c.id);
    } else {
        ids = parse_ids(cfg.ids);
        for (const auto& id : ids) {
            bool known = false;
            for (const auto& c : limpack::theorem_registry()) known |= c.id == id;
            if (!known) throw UsageError("unknown check id: " + id);
        }
    }

    std::vector<limpack::Graph> stream;
    if (cfg.exhaustive > 0) {
        auto g = limpack::enumerate_labeled_graphs(cfg.exhaustive);
        stream.insert(stream.end(), g.begin(), g.end());
    }
    if (cfg.trees > 0) {
        auto g = limpack::enumerate_trees(cfg.trees);
        stream.insert(stream.end(), g.begin(), g.end());
    }
    if (!cfg.graphs_path.empty()) {
        auto g = limpack::read_graph6_file(cfg.graphs_path);
        stream.insert(stream.end(), g.begin(), g.end());
    }
    if (cfg.random_count > 0) {
        if (cfg.n < 1) throw UsageError("--random needs --n to set the graph order");
        auto g = limpack::random_graphs(cfg.random_count, cfg.n, cfg.seed);
        stream.insert(stream.end(), g.begin(), g.end());
    }
    if (stream.empty())
        throw UsageError("no graphs to sweep: give --exhaustive N, --trees N, --graphs FILE, "
                         "or --random COUNT --n N");

    limpack::HarnessOptions hopts;
    hopts.node_budget = cfg.budget >= 0 ? cfg.budget : default_budget_from_env();
    hopts.threads = cfg.threads;

    std::string output;
    bool all_pass = true;
    for (const auto& id : ids) {
        const auto report = limpack::run_check(id, stream, hopts);
        all_pass = all_pass && report.passed();
        if (cfg.table) {
            std::ostringstream row;
            row << report.id << "  " << (report.passed() ? "pass" : "FAIL")
                << "  tested=" << report.graphs_tested
                << " skipped=" << report.graphs_skipped
                << " failures=" << report.failures.size()
                << " incomplete=" << report.incomplete.size() << "\n";
            output += row.str();
        } else {
            output += limpack::report_to_jsonl(report);
        }
        std::cerr << "[" << report.id << "] " << report.graphs_tested << " tested, "
                  << report.graphs_skipped << " skipped in " << report.runtime_seconds
                  << "s\n";
    }
    emit(output, cfg.out_path);
    return all_pass ? kExitPass : kExitFail;
}

}  // namespace

// ---------------------------------------------------------------------

int main(int argc, char** argv) {
    CLI::App app{"exact limited-packing / tuple-domination toolkit"};
    app.require_subcommand(1);

    ComputeCfg ccfg;
    auto* compute = app.add_subcommand("compute", "compute an invariant with a certificate");
    compute->add_option("--graph", ccfg.graph_path, "input graph file (.g6/.dimacs/.col/edge list)");
    compute->add_option("--g6", ccfg.inline_g6, "inline graph6 string");
    compute->add_option("--invariant", ccfg.invariant,
                        "lk|l2|lkt|l2t|rho|rho_o|gamma_xk|chi_xk|d_xk|chi2")
        ->required();
    compute->add_option("--k", ccfg.k, "parameter k (default 2)");
    compute->add_option("--budget", ccfg.budget, "node budget (default LIMPACK_BUDGET or unlimited)");
    compute->add_option("--out", ccfg.out_path, "write the JSON record here instead of stdout");

    VerifyCfg vcfg;
    auto* verify = app.add_subcommand("verify", "check a certificate against a predicate");
    verify->add_option("--graph", vcfg.graph_path, "input graph file");
    verify->add_option("--g6", vcfg.inline_g6, "inline graph6 string");
    verify->add_option("--predicate", vcfg.predicate, "lk|lkt|ktd|rho|rho_o|klp|ktdp|chi2")
        ->required();
    verify->add_option("--certificate", vcfg.cert_path,
                       "JSON file: vertex array, or array of class arrays for partitions")
        ->required();
    verify->add_option("--k", vcfg.k, "parameter k (default 2)");
    verify->add_option("--out", vcfg.out_path, "write the JSON verdict here instead of stdout");

    GenerateCfg gcfg;
    auto* generate = app.add_subcommand("generate", "emit a named family as graph6");
    generate->add_option("--family", gcfg.family,
                         "omega|lambda|lambda-random|ng-cocktail|pendant-cycle|tree-diff|gap|"
                         "path|cycle|star|complete|complete-minus-matching|random-tree|random-graph")
        ->required();
    generate->add_option("--k", gcfg.k, "omega: tuple parameter");
    generate->add_option("--t", gcfg.t, "omega: block count; tree-diff: scale");
    generate->add_option("--r", gcfg.r, "omega: remainder; lambda: part count");
    generate->add_option("--s", gcfg.s, "lambda: part size (even)");
    generate->add_option("--p", gcfg.p, "ng-cocktail/gap: scale");
    generate->add_option("--cycle-len", gcfg.cycle_len, "pendant-cycle: cycle length");
    generate->add_option("--positions", gcfg.positions,
                         "pendant-cycle: comma-separated pendant positions");
    generate->add_option("--n", gcfg.n, "order for path/cycle/star/complete/random families");
    generate->add_option("--count", gcfg.count, "random families: number of graphs");
    generate->add_option("--seed", gcfg.seed, "random families: RNG seed");
    generate->add_option("--out", gcfg.out_path,
                         "write graph6 here plus a .json metadata sidecar");
    generate->add_flag("--describe", gcfg.describe, "also print the metadata JSON to stdout");

    ReduceCfg rcfg;
    auto* reduce = app.add_subcommand("reduce",
                                      "map an open-packing instance to a total-limited-packing one");
    reduce->add_option("--graph", rcfg.graph_path, "input graph file");
    reduce->add_option("--g6", rcfg.inline_g6, "inline graph6 string");
    reduce->add_flag("--check", rcfg.check, "solve both sides and confirm the value identity");
    reduce->add_option("--lift", rcfg.lift_path,
                       "JSON vertex array: lift this open packing to the reduced graph");
    reduce->add_option("--budget", rcfg.budget, "node budget for --check");
    reduce->add_option("--out", rcfg.out_path, "output file (graph6 plus .json sidecar)");

    TheoremsCfg tcfg;
    auto* theorems = app.add_subcommand("theorems", "sweep registered checks over graph streams");
    theorems->add_option("--ids", tcfg.ids, "comma-separated check ids (default: all)");
    theorems->add_option("--exhaustive", tcfg.exhaustive, "all labeled graphs on N vertices (N <= 6)");
    theorems->add_option("--trees", tcfg.trees, "all free trees on N vertices (N <= 16)");
    theorems->add_option("--graphs", tcfg.graphs_path, "graph6 file to sweep");
    theorems->add_option("--random", tcfg.random_count, "number of seeded random graphs");
    theorems->add_option("--n", tcfg.n, "order for --random");
    theorems->add_option("--seed", tcfg.seed, "seed for --random");
    theorems->add_option("--budget", tcfg.budget, "node budget per solve");
    theorems->add_option("--threads", tcfg.threads, "worker threads (default: hardware)");
    theorems->add_flag("--table", tcfg.table, "human-readable summary instead of JSON lines");
    theorems->add_option("--out", tcfg.out_path, "write the report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*compute) return run_compute(ccfg);
        if (*verify) return run_verify(vcfg);
        if (*generate) return run_generate(gcfg);
        if (*reduce) return run_reduce(rcfg);
        if (*theorems) return run_theorems(tcfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
