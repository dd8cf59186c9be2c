// Command-line front end: construct family members, compute exact bounds,
// run the certified solver, classify separation, and reproduce the stored
// tables.  Exit codes for scripting: 0 decided/success, 2 unresolved or
// uncertified, 1 error.
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "srg/bounds.hpp"
#include "srg/cache.hpp"
#include "srg/catalog.hpp"
#include "srg/classify.hpp"
#include "srg/dimacs.hpp"
#include "srg/error.hpp"
#include "srg/families.hpp"
#include "srg/graph.hpp"
#include "srg/report.hpp"
#include "srg/solver.hpp"

namespace {

using namespace srg;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUnresolved = 2;

const char* kVertexOrder =
    "deterministic generator enumeration: affine points as base-p digit strings with the "
    "leading coordinate most significant; projective points scaled so the first nonzero "
    "coordinate is 1, enumerated in the same order; subsets and subspaces in lexicographic "
    "order of their canonical keys";

// ---------------------------------------------------------------------------
// Shared flag groups

struct SpecFlags {
    std::string spec_text;
    std::string family;
    int64_t n = 0, q = 0, p = 0, e = 0, t = 0, m = 0, dim = 0;
    int row = 0;
    std::string epsilon;  // "+1" or "-1"
    std::string polar;    // w, q, q+, q-, h, hd

    CLI::Option *o_n = nullptr, *o_q = nullptr, *o_p = nullptr, *o_e = nullptr, *o_t = nullptr,
                *o_m = nullptr, *o_dim = nullptr, *o_row = nullptr, *o_eps = nullptr,
                *o_polar = nullptr;

    bool given() const { return !spec_text.empty() || !family.empty(); }

    FamilySpec build() const {
        if (!spec_text.empty()) return FamilySpec::parse(spec_text);
        require(!family.empty(), "ParseError", "missing --family (or --spec)");
        std::ostringstream text;
        text << "family=" << family;
        auto put = [&text](const char* key, int64_t v) { text << ' ' << key << '=' << v; };
        if (o_n->count()) put("n", n);
        if (o_q->count()) put("q", q);
        if (o_p->count()) put("p", p);
        if (o_e->count()) put("e", e);
        if (o_t->count()) put("t", t);
        if (o_m->count()) put("m", m);
        if (o_dim->count()) put("dim", dim);
        if (o_row->count()) put("row", row);
        if (o_eps->count()) text << " epsilon=" << epsilon;
        if (o_polar->count()) text << " polar=" << polar;
        return FamilySpec::parse(text.str());
    }
};

void add_spec_flags(CLI::App* cmd, SpecFlags& f) {
    cmd->add_option("--spec", f.spec_text, "full spec string, e.g. \"family=vls p=2 e=3 t=3\"");
    cmd->add_option("--family", f.family,
                    "family name (triangular, grid, paley, peisert, vls, grassmann, bilinear, "
                    "polar, no, nu, voplus, vominus, vsz, bvls, hoffman-singleton, gewirtz, m22, "
                    "higman-sims, dualpolarhalf5, e6, alternating, row)");
    f.o_n = cmd->add_option("--n", f.n, "size / ambient dimension");
    f.o_q = cmd->add_option("--q", f.q, "field order");
    f.o_p = cmd->add_option("--p", f.p, "characteristic");
    f.o_e = cmd->add_option("--e", f.e, "cyclotomic class count (odd prime)");
    f.o_t = cmd->add_option("--t", f.t, "tower exponent");
    f.o_m = cmd->add_option("--m", f.m, "tower index");
    f.o_dim = cmd->add_option("--dim", f.dim, "projective dimension");
    f.o_row = cmd->add_option("--row", f.row, "stored table row id (1..53)");
    f.o_eps = cmd->add_option("--epsilon", f.epsilon, "quadric type, +1 or -1 (write --epsilon=-1)")
                  ->check(CLI::IsMember({"+1", "1", "-1"}));
    f.o_polar = cmd->add_option("--polar", f.polar, "polar space type: w, q, q+, q-, h, hd");
}

struct BudgetFlags {
    int64_t max_nodes = Budget{}.max_nodes;
    double max_seconds = Budget{}.max_seconds;
    int threads = 1;
    uint64_t seed = 0;

    Budget build() const {
        Budget b;
        b.max_nodes = max_nodes;
        b.max_seconds = max_seconds;
        b.threads = threads;
        return b;
    }
};

void add_budget_flags(CLI::App* cmd, BudgetFlags& b) {
    cmd->add_option("--max-nodes", b.max_nodes, "search node budget");
    cmd->add_option("--max-seconds", b.max_seconds, "search time budget in seconds");
    cmd->add_option("--threads", b.threads, "solver worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", b.seed, "seed for all randomized search (default 0)");
}

// ---------------------------------------------------------------------------
// Small helpers

DenseGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    require(static_cast<bool>(in), "IoError", "cannot open input file " + path);
    return read_dimacs(in, path);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    require(static_cast<bool>(out), "IoError", "cannot write output file " + path);
    out << text;
}

std::string quick_kind_name(QuickVerdict::Kind kind) {
    switch (kind) {
        case QuickVerdict::Kind::FractionalDelsarte: return "FractionalDelsarte";
        case QuickVerdict::Kind::FractionalHoffman: return "FractionalHoffman";
        case QuickVerdict::Kind::IrrationalBounds: return "IrrationalBounds";
        case QuickVerdict::Kind::NeedsSearch: return "NeedsSearch";
    }
    return "?";
}

std::string solve_status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::Exact: return "Exact";
        case SolveStatus::BoundCertified: return "BoundCertified";
        case SolveStatus::LowerBoundOnly: return "LowerBoundOnly";
    }
    return "?";
}

ordered_json params_json(const SrgParams& p) {
    return ordered_json{{"nu", p.nu}, {"k", p.k}, {"lambda", p.lambda}, {"mu", p.mu}};
}

ordered_json hints_json(const WitnessHint& h) {
    return ordered_json{
        {"clique", h.clique}, {"coclique", h.coclique}, {"provenance", h.provenance}};
}

int exit_code_for(SepStatus status) {
    return status == SepStatus::Unresolved ? kExitUnresolved : kExitOk;
}

// ---------------------------------------------------------------------------
// gen

int run_gen(const SpecFlags& sf, const std::string& out_path, const std::string& format) {
    const FamilySpec spec = sf.build();
    const Generated gen = generate(spec);
    const SrgParams params = params_for(spec);

    ordered_json meta{
        {"schema", kSchemaVersion},
        {"tool_version", kToolVersion},
        {"command", "gen"},
        {"spec", spec.to_string()},
        {"params", params_json(params)},
        {"vertices", gen.graph.nu()},
        {"edges", gen.graph.edge_count()},
        {"checksum", gen.graph.checksum()},
        {"vertex_order", kVertexOrder},
        {"hints", hints_json(gen.hint)},
    };

    if (format == "dimacs") {
        const std::string body = to_dimacs(gen.graph);
        if (out_path.empty()) {
            std::cout << body;
        } else {
            write_text_file(out_path, body);
            write_text_file(out_path + ".meta.json", meta.dump(2) + "\n");
            std::cerr << "wrote " << out_path << " and " << out_path << ".meta.json\n";
        }
    } else {
        ordered_json edges = ordered_json::array();
        for (int u = 0; u < gen.graph.nu(); ++u)
            for (int v = u + 1; v < gen.graph.nu(); ++v)
                if (gen.graph.adjacent(u, v)) edges.push_back(ordered_json::array({u, v}));
        meta["edge_list"] = std::move(edges);
        const std::string body = meta.dump(2) + "\n";
        if (out_path.empty())
            std::cout << body;
        else
            write_text_file(out_path, body);
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// bounds

int run_bounds(const SpecFlags& sf, const std::optional<SrgParams>& direct,
               const std::string& in_path, bool as_json) {
    SrgParams params;
    std::string subject;
    if (direct) {
        params = *direct;
        subject = "given parameters";
    } else if (!in_path.empty()) {
        const DenseGraph g = read_graph_file(in_path);
        params = verify_srg(g);
        subject = in_path;
    } else {
        const FamilySpec spec = sf.build();
        params = params_for(spec);
        subject = spec.to_string();
    }
    const BoundReport rep = bound_report(params);
    const QuickVerdict qv = quick_verdict(params);
    if (as_json) {
        ordered_json j{
            {"schema", kSchemaVersion},
            {"tool_version", kToolVersion},
            {"command", "bounds"},
            {"subject", subject},
            {"params", params_json(params)},
            {"spectrum", ordered_json{{"r", rep.r.to_string()}, {"s", rep.s.to_string()}}},
            {"bounds",
             ordered_json{{"delsarte", rep.delsarte.to_string()},
                          {"hoffman", rep.hoffman.to_string()},
                          {"delsarte_integral", rep.delsarte_integral},
                          {"hoffman_integral", rep.hoffman_integral},
                          {"omega_target", rep.omega_target},
                          {"alpha_target", rep.alpha_target}}},
            {"feasible", feasibility(params)},
            {"quick",
             ordered_json{{"kind", quick_kind_name(qv.kind)}, {"separating", qv.separating()}}},
        };
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << subject << "  " << params.to_string() << "\n";
        std::cout << "spectrum   r = " << rep.r.to_string() << ", s = " << rep.s.to_string() << "\n";
        std::cout << "delsarte   " << rep.delsarte.to_string()
                  << (rep.delsarte_integral ? "" : " (not an integer)") << ", clique target "
                  << rep.omega_target << "\n";
        std::cout << "hoffman    " << rep.hoffman.to_string()
                  << (rep.hoffman_integral ? "" : " (not an integer)") << ", coclique target "
                  << rep.alpha_target << "\n";
        std::cout << "quick      " << quick_kind_name(qv.kind)
                  << (qv.separating() ? " (separating before any search)" : "") << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// solve

int run_solve(const std::string& in_path, const std::string& mode,
              const std::optional<int64_t>& cap, const BudgetFlags& bf,
              const std::string& witness_out, bool as_json) {
    const DenseGraph g = read_graph_file(in_path);
    const Budget budget = bf.build();
    const SolveResult res = mode == "clique" ? max_clique(g, cap, budget)
                                             : max_coclique(g, cap, budget);
    if (!witness_out.empty()) {
        std::ostringstream lines;
        for (int v : res.witness) lines << v << "\n";
        write_text_file(witness_out, lines.str());
    }
    if (as_json) {
        ordered_json j{
            {"schema", kSchemaVersion},
            {"tool_version", kToolVersion},
            {"command", "solve"},
            {"input", in_path},
            {"mode", mode},
            {"cap", cap ? ordered_json(*cap) : ordered_json(nullptr)},
            {"value", res.value},
            {"status", solve_status_name(res.status)},
            {"witness", res.witness},
            {"nodes_explored", res.nodes_explored},
            {"elapsed_seconds", res.elapsed_seconds},
            {"run",
             ordered_json{{"seed", bf.seed},
                          {"budget_nodes", bf.max_nodes},
                          {"budget_seconds", bf.max_seconds},
                          {"threads", bf.threads}}},
        };
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << in_path << "  " << mode << " number "
                  << (res.status == SolveStatus::LowerBoundOnly ? ">= " : "= ") << res.value << " ("
                  << solve_status_name(res.status) << ")\n";
        std::cout << "explored   " << res.nodes_explored << " nodes in " << res.elapsed_seconds
                  << " s\n";
        std::cout << "witness    " << res.witness.size() << " vertices\n";
    }
    return res.status == SolveStatus::LowerBoundOnly ? kExitUnresolved : kExitOk;
}

// ---------------------------------------------------------------------------
// classify

RunRecord make_record(const std::string& spec_text, const std::string& input,
                      const SrgParams& params, const Verdict& verdict, const BudgetFlags& bf,
                      double elapsed) {
    const BoundReport rep = bound_report(params);
    RunRecord rec;
    rec.command = "classify";
    rec.spec = spec_text;
    rec.input = input;
    rec.params = params;
    rec.s = rep.s.to_string();
    rec.r = rep.r.to_string();
    rec.delsarte = rep.delsarte.to_string();
    rec.hoffman = rep.hoffman.to_string();
    rec.omega_target = rep.omega_target;
    rec.alpha_target = rep.alpha_target;
    rec.verdict = verdict;
    rec.seed = bf.seed;
    rec.budget_nodes = bf.max_nodes;
    rec.budget_seconds = bf.max_seconds;
    rec.threads = bf.threads;
    rec.elapsed_seconds = elapsed;
    rec.timestamp = iso_timestamp_now();
    return rec;
}

int emit_record(const RunRecord& rec, bool as_json) {
    std::cout << (as_json ? record_to_json(rec) : record_to_text(rec));
    return exit_code_for(rec.verdict.status);
}

int run_classify(const SpecFlags& sf, const std::string& in_path, const BudgetFlags& bf,
                 const std::string& cache_flag, bool as_json) {
    const Budget budget = bf.build();
    if (!in_path.empty()) {
        // File inputs are never cached: the parameters do not determine the
        // graph, and the file is the only identity we have.
        const DenseGraph g = read_graph_file(in_path);
        const SrgParams params = verify_srg(g);
        const auto t0 = std::chrono::steady_clock::now();
        const Verdict v = classify_graph(g, budget, WitnessHint{}, bf.seed);
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return emit_record(make_record("", in_path, params, v, bf, elapsed), as_json);
    }

    const FamilySpec spec = sf.build();
    const SrgParams params = params_for(spec);
    const std::string dir = resolve_cache_dir(cache_flag);
    const std::string key = cache_key(spec.to_string(), params);
    if (auto hit = cache_get(dir, key, budget, bf.seed)) {
        std::cerr << "served from cache (" << key << ")\n";
        return emit_record(*hit, as_json);
    }
    const auto t0 = std::chrono::steady_clock::now();
    const Verdict v = classify_family(spec, budget, bf.seed);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const RunRecord rec = make_record(spec.to_string(), "", params, v, bf, elapsed);
    if (!dir.empty()) cache_put(dir, key, rec);
    return emit_record(rec, as_json);
}

// ---------------------------------------------------------------------------
// table

int run_table(int which, const BudgetFlags& bf, bool as_json) {
    WhichTable w;
    switch (which) {
        case 1: w = WhichTable::Table1Membership; break;
        case 2: w = WhichTable::Table2; break;
        case 5: w = WhichTable::Table5; break;
        case 6: w = WhichTable::Table6; break;
        default: fail("InvalidParams", "--which must be one of 1, 2, 5, 6");
    }
    const TableReport rep = reproduce_table(w, bf.build());
    std::cout << (as_json ? table_to_json(rep) : table_to_text(rep));
    return rep.all_match ? kExitOk : kExitUnresolved;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact clique/coclique separation toolkit for strongly regular graphs"};
    app.require_subcommand(1);
    std::string data_dir;
    app.add_option("--data-dir", data_dir, "override the stored-table data directory")
        ->envname("SRGSEP_DATA_DIR");

    // gen
    auto* gen = app.add_subcommand("gen", "construct a family member and write it out");
    SpecFlags gen_spec;
    add_spec_flags(gen, gen_spec);
    std::string gen_out, gen_format = "dimacs";
    gen->add_option("--out", gen_out, "output path (stdout when omitted)");
    gen->add_option("--format", gen_format, "output format")
        ->check(CLI::IsMember({"dimacs", "json"}));

    // bounds
    auto* bounds = app.add_subcommand("bounds", "exact spectrum and ratio bounds");
    SpecFlags bounds_spec;
    add_spec_flags(bounds, bounds_spec);
    int64_t b_nu = 0, b_k = 0, b_lambda = -1, b_mu = -1;
    auto* o_nu = bounds->add_option("--nu", b_nu, "vertex count");
    auto* o_k = bounds->add_option("--k", b_k, "valency");
    auto* o_lambda = bounds->add_option("--lambda", b_lambda, "common neighbours of an edge");
    auto* o_mu = bounds->add_option("--mu", b_mu, "common neighbours of a non-edge");
    std::string bounds_in;
    bounds->add_option("--in", bounds_in, "DIMACS graph file");
    bool bounds_json = false;
    bounds->add_flag("--json", bounds_json, "emit JSON instead of text");

    // solve
    auto* solve = app.add_subcommand("solve", "certified maximum clique or coclique");
    std::string solve_in, solve_mode, solve_witness;
    solve->add_option("--in", solve_in, "DIMACS graph file")->required();
    solve->add_option("--mode", solve_mode, "set kind")
        ->required()
        ->check(CLI::IsMember({"clique", "coclique"}));
    int64_t solve_cap = 0;
    auto* o_cap = solve->add_option("--cap", solve_cap, "stop once this size is proven optimal");
    solve->add_option("--witness-out", solve_witness, "write the witness, one vertex per line");
    BudgetFlags solve_budget;
    add_budget_flags(solve, solve_budget);
    bool solve_json = false;
    solve->add_flag("--json", solve_json, "emit JSON instead of text");

    // classify
    auto* classify = app.add_subcommand("classify", "separation verdict for a family member or file");
    SpecFlags classify_spec;
    add_spec_flags(classify, classify_spec);
    std::string classify_in, classify_cache;
    classify->add_option("--in", classify_in, "DIMACS graph file (bypasses the cache)");
    classify->add_option("--cache-dir", classify_cache,
                         "result cache directory (or SRGSEP_CACHE_DIR)");
    BudgetFlags classify_budget;
    add_budget_flags(classify, classify_budget);
    bool classify_json = false;
    classify->add_flag("--json", classify_json, "emit JSON instead of text");

    // table
    auto* table = app.add_subcommand("table", "reproduce a stored table and diff it");
    int table_which = 2;
    table->add_option("--which", table_which, "table to reproduce: 1, 2, 5 or 6")
        ->required()
        ->check(CLI::IsMember({1, 2, 5, 6}));
    BudgetFlags table_budget;
    add_budget_flags(table, table_budget);
    bool table_json = false;
    table->add_flag("--json", table_json, "emit JSON instead of text");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!data_dir.empty()) set_data_dir(data_dir);
        if (gen->parsed()) return run_gen(gen_spec, gen_out, gen_format);
        if (bounds->parsed()) {
            std::optional<SrgParams> direct;
            if (o_nu->count() || o_k->count() || o_lambda->count() || o_mu->count()) {
                require(o_nu->count() && o_k->count() && o_lambda->count() && o_mu->count(),
                        "ParseError", "--nu, --k, --lambda, --mu must be given together");
                direct = SrgParams{b_nu, b_k, b_lambda, b_mu};
            }
            return run_bounds(bounds_spec, direct, bounds_in, bounds_json);
        }
        if (solve->parsed()) {
            std::optional<int64_t> cap;
            if (o_cap->count()) cap = solve_cap;
            return run_solve(solve_in, solve_mode, cap, solve_budget, solve_witness, solve_json);
        }
        if (classify->parsed())
            return run_classify(classify_spec, classify_in, classify_budget, classify_cache,
                                classify_json);
        if (table->parsed()) return run_table(table_which, table_budget, table_json);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
