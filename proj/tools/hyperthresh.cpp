#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hyperthresh/absorbing.hpp"
#include "hyperthresh/auxgraph.hpp"
#include "hyperthresh/error.hpp"
#include "hyperthresh/extremal.hpp"
#include "hyperthresh/io.hpp"
#include "hyperthresh/lemmas.hpp"
#include "hyperthresh/matching.hpp"
#include "hyperthresh/random.hpp"
#include "hyperthresh/report_json.hpp"
#include "hyperthresh/verify/acceptance.hpp"

namespace ht = hyperthresh;

namespace {

enum Exit : int { kOk = 0, kFailed = 1, kInvalid = 2, kAbsent = 3, kTruncated = 4 };

constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

std::uint64_t default_budget()
{
    if (const char* env = std::getenv("HYPERTHRESH_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw ht::InvalidInput(std::string("HYPERTHRESH_BUDGET is not a number: ") + env);
        }
    }
    return kDefaultNodeBudget;
}

struct Output {
    std::string path;

    void write(const std::string& text) const
    {
        if (path.empty() || path == "-") {
            std::cout << text;
            return;
        }
        std::ofstream os(path, std::ios::binary);
        if (!os) throw ht::InvalidInput("cannot write " + path);
        os << text;
    }

    void json(const ht::Json& j) const { write(j.dump(2) + "\n"); }
};

ht::VertexSet parse_vertex_list(const std::string& text)
{
    std::vector<int> idx;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            idx.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ht::InvalidInput("bad vertex list '" + text + "'");
        }
    }
    std::sort(idx.begin(), idx.end());
    return ht::VertexSet::from_indices(idx);
}

struct Common {
    std::string out;
    std::uint64_t seed = 0;
    std::uint64_t budget = 0;
    int jobs = 1;
};

// gen ------------------------------------------------------------------------

struct GenArgs {
    int n = 0;
    int k = 0;
    int size_a = 0;
    std::string kind = "odd";
    bool random = false;
    double p = 0.5;
    std::string format = "text";
};

int cmd_gen(const GenArgs& a, const Common& c)
{
    const ht::Hypergraph h = a.random ? ht::random_hypergraph(a.n, a.k, a.p, c.seed)
                                      : ht::build(ht::ExtremalSpec{ht::kind_from_string(a.kind), ht::Bipartition::canonical(a.n, a.size_a), a.k});
    const Output out{c.out};
    if (a.format == "json")
        out.json(ht::to_json(h));
    else
        out.write(ht::to_text(h));
    return kOk;
}

// convert --------------------------------------------------------------------

int cmd_convert(const std::string& file, const std::string& format, const Common& c)
{
    const ht::Hypergraph h = ht::read_hypergraph_file(file);
    const Output out{c.out};
    if (format == "json")
        out.json(ht::to_json(h));
    else
        out.write(ht::to_text(h));
    return kOk;
}

// threshold ------------------------------------------------------------------

int cmd_threshold(int n, int k, int l, const Common& c)
{
    Output{c.out}.json(ht::to_json(ht::threshold(n, k, l)));
    return kOk;
}

// solve ----------------------------------------------------------------------

int cmd_solve(const std::string& file, bool cache, const Common& c)
{
    const ht::Hypergraph h = ht::read_hypergraph_file(file);
    if (h.n() % h.k() != 0) {
        Output{c.out}.json(ht::Json{{"perfect", false}, {"edges", ht::Json::array()}, {"status", "absent"}, {"nodes", 0},
                                    {"reason", "k does not divide n"}});
        return kAbsent;
    }
    ht::SearchOptions options;
    options.node_budget = c.budget;
    options.transposition_cache = cache;
    const auto result = ht::search_perfect_matching(h, h.vertices(), options);
    ht::Json j = ht::to_json(result);
    j["budget"] = c.budget;
    j["truncated"] = result.status == ht::SearchStatus::aborted;
    Output{c.out}.json(j);
    switch (result.status) {
    case ht::SearchStatus::found: return kOk;
    case ht::SearchStatus::absent: return kAbsent;
    case ht::SearchStatus::aborted: return kTruncated;
    }
    return kFailed;
}

// absorb ---------------------------------------------------------------------

struct AbsorbArgs {
    std::string file;
    std::string q;
    std::string split_x;
    bool all_splits = false;
    std::string forbidden;
    std::size_t limit = 0;
    std::string format = "json";
    bool build = false;
    double xi = 0.1;
};

void append_block(std::string& text, ht::VertexSet q, const std::vector<ht::VertexSet>& edges, int size)
{
    text += "# absorber-for:";
    for (int v : q.indices()) text += " " + std::to_string(v);
    text += "\n# absorber-size: " + std::to_string(size) + "\n";
    for (ht::VertexSet e : edges) {
        const auto idx = e.indices();
        for (std::size_t i = 0; i < idx.size(); ++i) text += (i ? " " : "") + std::to_string(idx[i]);
        text += "\n";
    }
}

int cmd_absorb(const AbsorbArgs& a, const Common& c)
{
    const ht::Hypergraph h = ht::read_hypergraph_file(a.file);
    const Output out{c.out};
    if (a.build) {
        ht::AbsorbingMatchingOptions options;
        options.xi = a.xi;
        options.seed = c.seed;
        if (a.limit != 0) options.per_q_budget = a.limit;
        const auto am = ht::build_absorbing_matching(h, options);
        if (a.format == "text") {
            std::string text;
            for (const auto& r : am.records) append_block(text, r.q, r.edges, r.size);
            out.write(text);
        } else {
            ht::Json j = ht::to_json(am);
            j["seed"] = c.seed;
            j["xi"] = a.xi;
            out.json(j);
        }
        return kOk;
    }
    if (a.q.empty()) throw ht::InvalidInput("absorb needs --q or --build");
    const ht::VertexSet q = parse_vertex_list(a.q);
    ht::AbsorberQuery query;
    query.union_all_splits = a.all_splits;
    query.budget = a.limit;
    if (!a.forbidden.empty()) query.forbidden = parse_vertex_list(a.forbidden);
    if (!a.split_x.empty()) {
        const ht::VertexSet x = parse_vertex_list(a.split_x);
        query.split = ht::QSplit{x, q - x};
    }
    const auto singles = ht::enumerate_absorbing_ksets(h, q, query);
    const auto doubles = ht::enumerate_absorbing_2ksets(h, q, query);
    if (a.format == "text") {
        std::string text;
        for (const auto& s : singles.absorbers) append_block(text, q, s.matching_of_set().edges, h.k());
        for (const auto& d : doubles.absorbers) append_block(text, q, d.matching_of_set().edges, 2 * h.k());
        out.write(text);
    } else {
        out.json(ht::Json{{"q", ht::to_json(q)}, {"kAbsorbers", ht::to_json(singles)}, {"twoKAbsorbers", ht::to_json(doubles)}});
    }
    return singles.truncated || doubles.truncated ? kTruncated : kOk;
}

// pipeline -------------------------------------------------------------------

struct PipelineArgs {
    std::string file;
    double xi = 0.1;
    double gamma = 0.05;
    bool no_fallback = false;
    bool timings = false;
    std::size_t attempts = 0;
};

int cmd_pipeline(const PipelineArgs& a, const Common& c)
{
    const ht::Hypergraph h = ht::read_hypergraph_file(a.file);
    ht::PipelineParams params;
    params.xi = a.xi;
    params.gamma = a.gamma;
    params.seed = c.seed;
    params.fallback = !a.no_fallback;
    params.node_budget = c.budget;
    params.max_attempts = a.attempts;
    const auto report = ht::pm_via_absorption(h, params);
    Output{c.out}.json(ht::to_json(report, a.timings));
    switch (report.status) {
    case ht::PipelineStatus::perfect:
    case ht::PipelineStatus::perfect_fallback: return kOk;
    case ht::PipelineStatus::no_perfect: return kAbsent;
    case ht::PipelineStatus::aborted: return kTruncated;
    case ht::PipelineStatus::failed: return kFailed;
    }
    return kFailed;
}

// structure ------------------------------------------------------------------

struct StructureArgs {
    std::string file;
    double gamma = 0.05;
    double beta1 = 0.01;
    std::string parity_a;
    std::string kind = "odd";
};

int cmd_structure(const StructureArgs& a, const Common& c)
{
    const ht::Hypergraph h = ht::read_hypergraph_file(a.file);
    ht::Json j;
    if (!a.parity_a.empty()) {
        const auto coloring = ht::parity_coloring(h.n(), h.k(), parse_vertex_list(a.parity_a), ht::kind_from_string(a.kind));
        auto rep = ht::classify_pairs(coloring, a.beta1, c.jobs);
        rep.case_a = ht::case_a(h, a.gamma);
        rep.case_b = ht::case_b(h, a.gamma);
        rep.bad_ksets = ht::bad_kset_count(coloring);
        rep.edit_distance = ht::edit_distance_model(h, coloring);
        j = ht::to_json(rep);
        j["coloring"] = "parity";
    } else {
        const auto rep = ht::analyze_structure(h, a.gamma, a.beta1, c.jobs);
        j = ht::to_json(rep);
        j["coloring"] = rep.case_a || rep.case_b ? "none" : "derived";
        if (!rep.case_a && !rep.case_b) j["partition"] = ht::to_json(ht::derive_partition(h, a.gamma));
    }
    j["gamma"] = a.gamma;
    j["auxEdges"] = ht::aux_edge_count(h);
    Output{c.out}.json(j);
    return kOk;
}

// lemmas ---------------------------------------------------------------------

struct LemmaArgs {
    int count = 20;
    int max_n = 10;
    int max_r = 3;
};

int cmd_lemmas(const LemmaArgs& a, const Common& c)
{
    if (a.count < 0 || a.max_r < 1 || a.max_n < a.max_r + 1 || a.max_n > 16)
        throw ht::InvalidInput("lemmas needs count >= 0, max-r >= 1 and max-r < max-n <= 16");
    ht::Rng rng(c.seed);
    ht::Json reports = ht::Json::array();
    bool failed = false;
    auto add = [&](const ht::CheckReport& rep, ht::Json context, bool asserted) {
        ht::Json j = ht::to_json(rep);
        j["context"] = std::move(context);
        j["asserted"] = asserted;
        reports.push_back(j);
        failed = failed || (asserted && rep.verdict == ht::Verdict::fail);
    };
    for (int i = 0; i < a.count; ++i) {
        const int r = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(a.max_r)));
        const int n = r + 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(a.max_n - r)));
        const double p = rng.unit();
        const ht::Hypergraph f = ht::random_hypergraph(n, r, p, rng.next());
        const ht::Json ctx{{"instance", i}, {"n", n}, {"r", r}, {"edges", f.edge_count()}};
        for (const auto& rep : ht::verify_profile_identities(f)) add(rep, ctx, true);
        add(ht::kk_clique_bound_check(f), ctx, true);
        add(ht::df_sum_lower_bound_report(f), ctx, false);
        if (r >= 2) add(ht::degree_monotonicity_check(f, 0, r - 1), ctx, true);
    }
    for (int r = 1; r <= 4; ++r)
        for (double alpha : {0.0, 0.1, 0.25, 0.5, 0.75, 0.9, 1.0})
            add(ht::root_inequality_check(alpha, r), ht::Json{{"alpha", alpha}, {"r", r}}, true);
    for (double cc : {0.0, 0.25, 0.5, 0.75, 1.0})
        for (int r = 1; r <= 4; ++r)
            for (const auto& rep : ht::evensum_asymptotic_check(cc, r, 32)) add(rep, ht::Json{{"c", cc}, {"r", r}, {"n", 32}}, true);
    for (const auto& rep : ht::parity_split_check(4, 2, 3)) add(rep, ht::Json{{"a", 4}, {"b", 2}, {"r", 3}}, true);
    Output{c.out}.json(ht::Json{{"seed", c.seed}, {"reports", reports}});
    return failed ? kFailed : kOk;
}

// verify ---------------------------------------------------------------------

int cmd_verify(const std::string& level_name, const Common& c)
{
    const auto level = ht::acceptance::level_from_string(level_name);
    std::string text = "level: " + level_name + "\n";
    bool ok = true;
    ht::acceptance::run_all(level, [&](const ht::acceptance::CriterionResult& r) {
        const std::string line = ht::acceptance::format_line(r) + "\n";
        if (c.out.empty()) std::cout << line << std::flush;
        text += line;
        ok = ok && r.pass;
    });
    if (!c.out.empty()) Output{c.out}.write(text);
    return ok ? kOk : kFailed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact workbench for perfect matchings and degree thresholds in k-uniform hypergraphs"};
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_option("--out,-o", common.out, "Output file (stdout by default)");
    app.add_option("--seed", common.seed, "Seed for randomized commands");
    app.add_option("--budget", common.budget, "Search node budget (0: unlimited; default from HYPERTHRESH_BUDGET)");
    app.add_option("--jobs,-j", common.jobs, "Worker threads")->check(CLI::PositiveNumber);

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "Write an extremal construction or a random hypergraph");
    gen->add_option("--n", gen_args.n, "Vertices")->required();
    gen->add_option("--k", gen_args.k, "Uniformity")->required();
    gen->add_option("--size-a", gen_args.size_a, "|A| of the bipartition");
    gen->add_option("--kind", gen_args.kind, "odd or even")->check(CLI::IsMember({"odd", "even"}));
    gen->add_flag("--random", gen_args.random, "Random hypergraph with edge probability --p instead");
    gen->add_option("--p", gen_args.p, "Edge probability for --random");
    gen->add_option("--format", gen_args.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    std::string conv_file;
    std::string conv_format = "text";
    auto* conv = app.add_subcommand("convert", "Parse a hypergraph file and write it back in canonical form");
    conv->add_option("file", conv_file, "Hypergraph file (text or JSON)")->required();
    conv->add_option("--format", conv_format, "text or json")->check(CLI::IsMember({"text", "json"}));

    int th_n = 0, th_k = 0, th_l = 0;
    auto* thr = app.add_subcommand("threshold", "Exact threshold over the extremal family");
    thr->add_option("--n", th_n, "Vertices")->required();
    thr->add_option("--k", th_k, "Uniformity")->required();
    thr->add_option("--l", th_l, "Degree order, 1 <= l <= k-1")->required();

    std::string solve_file;
    bool solve_cache = false;
    auto* solve = app.add_subcommand("solve", "Exact perfect-matching search");
    solve->add_option("file", solve_file, "Hypergraph file (text or JSON)")->required();
    solve->add_flag("--cache", solve_cache, "Remember dead covered-vertex states");

    AbsorbArgs absorb_args;
    auto* absorb = app.add_subcommand("absorb", "Structured absorbers for a k-set, or a greedy absorbing matching");
    absorb->add_option("file", absorb_args.file, "Hypergraph file (text or JSON)")->required();
    absorb->add_option("--q", absorb_args.q, "Comma-separated k-set to absorb");
    absorb->add_option("--split-x", absorb_args.split_x, "The floor(k/2) vertices of Q playing x");
    absorb->add_flag("--all-splits", absorb_args.all_splits, "Union over every split of Q");
    absorb->add_option("--forbid", absorb_args.forbidden, "Comma-separated vertices absorbers must avoid");
    absorb->add_option("--limit", absorb_args.limit, "Cap on distinct absorbers (0: unlimited)");
    absorb->add_option("--format", absorb_args.format, "json, or text edge blocks")->check(CLI::IsMember({"text", "json"}));
    absorb->add_flag("--build", absorb_args.build, "Build an absorbing matching from random sets instead");
    absorb->add_option("--xi", absorb_args.xi, "Absorbing matching size fraction");

    PipelineArgs pipe_args;
    auto* pipe = app.add_subcommand("pipeline", "Perfect matching via absorption with exact fallback");
    pipe->add_option("file", pipe_args.file, "Hypergraph file (text or JSON)")->required();
    pipe->add_option("--xi", pipe_args.xi, "Absorbing matching size fraction");
    pipe->add_option("--gamma", pipe_args.gamma, "Recorded in the report; unused by the pipeline");
    pipe->add_option("--attempts", pipe_args.attempts, "Random absorbing draws (0: 8n)");
    pipe->add_flag("--no-fallback", pipe_args.no_fallback, "Skip the exact search when absorption fails");
    pipe->add_flag("--timings", pipe_args.timings, "Include wall-clock phase timings");

    StructureArgs st_args;
    auto* st = app.add_subcommand("structure", "Auxiliary-graph diagnostics and vertex-class recovery");
    st->add_option("file", st_args.file, "Hypergraph file (text or JSON)")->required();
    st->add_option("--gamma", st_args.gamma, "Good-partner and case thresholds");
    st->add_option("--beta1", st_args.beta1, "Small C/D threshold factor");
    st->add_option("--parity-a", st_args.parity_a, "Use the parity colouring of this vertex set");
    st->add_option("--kind", st_args.kind, "Kind of the parity colouring")->check(CLI::IsMember({"odd", "even"}));

    LemmaArgs lemma_args;
    auto* lem = app.add_subcommand("lemmas", "Counting-lemma checks on random families");
    lem->add_option("--count", lemma_args.count, "Random families per check");
    lem->add_option("--max-n", lemma_args.max_n, "Largest vertex count");
    lem->add_option("--max-r", lemma_args.max_r, "Largest uniformity");

    std::string level = "smoke";
    auto* ver = app.add_subcommand("verify", "Run the acceptance suite");
    ver->add_option("--level", level, "smoke or full")->check(CLI::IsMember({"smoke", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInvalid;
    }

    try {
        if (app.get_option("--budget")->count() == 0) common.budget = default_budget();
        if (*gen) return cmd_gen(gen_args, common);
        if (*conv) return cmd_convert(conv_file, conv_format, common);
        if (*thr) return cmd_threshold(th_n, th_k, th_l, common);
        if (*solve) return cmd_solve(solve_file, solve_cache, common);
        if (*absorb) return cmd_absorb(absorb_args, common);
        if (*pipe) return cmd_pipeline(pipe_args, common);
        if (*st) return cmd_structure(st_args, common);
        if (*lem) return cmd_lemmas(lemma_args, common);
        if (*ver) return cmd_verify(level, common);
    } catch (const ht::InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const ht::NotApplicable& e) {
        std::cerr << "not applicable: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailed;
    }
    return kFailed;
}
