#include "hyperthresh/verify/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "hyperthresh/absorbing.hpp"
#include "hyperthresh/auxgraph.hpp"
#include "hyperthresh/combinatorics.hpp"
#include "hyperthresh/error.hpp"
#include "hyperthresh/extremal.hpp"
#include "hyperthresh/lemmas.hpp"
#include "hyperthresh/matching.hpp"
#include "hyperthresh/random.hpp"
#include "hyperthresh/report_json.hpp"
#include "hyperthresh/verify/oracle.hpp"

namespace hyperthresh::acceptance {

namespace {

constexpr std::size_t kShownViolations = 5;
constexpr std::uint64_t kSeed = 20240611;

class Tally {
public:
    void check(bool ok, const std::string& what)
    {
        ++checks_;
        if (ok) return;
        if (violations_++ < kShownViolations) shown_.push_back(what);
    }
    void warn(const std::string& what) { warnings_.push_back(what); }

    std::uint64_t checks() const { return checks_; }
    std::uint64_t violations() const { return violations_; }
    const std::vector<std::string>& warnings() const { return warnings_; }

    std::string summary() const
    {
        std::ostringstream os;
        os << checks_ << " checks, " << violations_ << " violations";
        for (const auto& s : shown_) os << "; " << s;
        return os.str();
    }

private:
    std::uint64_t checks_ = 0;
    std::uint64_t violations_ = 0;
    std::vector<std::string> shown_;
    std::vector<std::string> warnings_;
};

template <typename Body>
CriterionResult run(int id, std::string name, double budget, Body&& body)
{
    Tally tally;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
        body(tally);
    } catch (const std::exception& e) {
        error = e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = error.empty() && tally.violations() == 0;
    std::string detail = error.empty() ? tally.summary() : "exception: " + error;
    if (budget > 0 && seconds >= budget) {
        pass = false;
        detail += "; runtime budget exceeded";
    }
    return {id, std::move(name), pass, std::move(detail), tally.warnings(), seconds, budget};
}

std::string label(int n, int k) { return "(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")"; }

std::string label(const ExtremalSpec& s)
{
    return "(n=" + std::to_string(s.n()) + ",k=" + std::to_string(s.k) + ",|A|=" + std::to_string(s.part.size_a()) + "," +
           to_string(s.kind) + ")";
}

} // namespace

Level level_from_string(const std::string& s)
{
    if (s == "smoke") return Level::smoke;
    if (s == "full") return Level::full;
    throw InvalidInput("level must be 'smoke' or 'full', got '" + s + "'");
}

std::string to_string(Level level) { return level == Level::smoke ? "smoke" : "full"; }

std::string format_line(const CriterionResult& r)
{
    char timing[64];
    if (r.budget_seconds > 0)
        std::snprintf(timing, sizeof timing, "[%.2f s / %.0f s]", r.seconds, r.budget_seconds);
    else
        std::snprintf(timing, sizeof timing, "[%.2f s]", r.seconds);
    std::string line = std::string(r.pass ? "PASS" : "FAIL") + " c" + std::to_string(r.id) + " " + r.name + ": " + r.detail + " " + timing;
    for (const auto& w : r.warnings) line += "\n     warning: " + w;
    return line;
}

CriterionResult extremal_non_matchability(Level level)
{
    const int max_n = level == Level::full ? 15 : 12;
    return run(1, "extremal-non-matchability", 60.0, [&](Tally& t) {
        for (int k : {3, 4, 5}) {
            for (int n = k; n <= max_n; n += k) {
                for (const auto& spec : hext_family(n, k)) {
                    const auto cert = no_pm_certificate(spec, n / k);
                    const auto search = search_perfect_matching(build(spec), VertexSet::prefix(n));
                    t.check(cert.no_perfect_matching, "certificate silent at " + label(spec));
                    t.check(search.status == SearchStatus::absent, "solver " + to_string(search.status) + " at " + label(spec));
                }
            }
        }
    });
}

CriterionResult threshold_formula_agreement(Level level)
{
    const int max_n = level == Level::full ? 28 : 16;
    return run(2, "threshold-formula-agreement", 30.0, [&](Tally& t) {
        struct Anchor {
            int n, k;
            std::uint64_t value;
        };
        for (const Anchor& a : {Anchor{9, 3, 2}, Anchor{12, 3, 4}, Anchor{12, 4, 4}}) {
            const auto report = threshold(a.n, a.k, a.k - 1);
            const auto formula = threshold_codegree_formula(a.n, a.k);
            t.check(report.value == a.value, "threshold " + label(a.n, a.k) + " = " + std::to_string(report.value));
            t.check(oracle::threshold(a.n, a.k, a.k - 1) == a.value, "enumeration oracle disagrees at " + label(a.n, a.k));
            t.check(formula == HalfInteger::from_int(static_cast<std::int64_t>(a.value)),
                    "formula " + to_string(formula) + " at " + label(a.n, a.k));
        }
        for (int k : {3, 4}) {
            for (int n = k; n <= max_n; n += k) {
                const auto value = threshold(n, k, k - 1).value;
                const auto formula = threshold_codegree_formula(n, k);
                const bool agree = formula == HalfInteger::from_int(static_cast<std::int64_t>(value));
                const std::string what = "delta " + std::to_string(value) + " vs formula " + to_string(formula) + " at " + label(n, k);
                if (n >= 3 * k)
                    t.check(agree, what);
                else if (!agree)
                    t.warn(what + " (below 3k)");
            }
        }
    });
}

CriterionResult closed_form_degrees(Level level)
{
    const int max_n = level == Level::full ? 14 : 10;
    return run(3, "closed-form-degrees", 60.0, [&](Tally& t) {
        for (int n = 2; n <= max_n; ++n) {
            for (int k = 2; k <= n; ++k) {
                if (n % k != 0) continue;
                for (const auto& spec : hext_family(n, k)) {
                    const Hypergraph h = build(spec);
                    for (int l = 0; l < k; ++l) {
                        const auto closed = min_l_degree_closed(spec, l);
                        const auto brute = min_l_degree(h, l);
                        t.check(closed == brute, "l=" + std::to_string(l) + " closed " + std::to_string(closed) + " vs " +
                                                     std::to_string(brute) + " at " + label(spec));
                    }
                }
            }
        }
    });
}

CriterionResult absorber_soundness(Level level)
{
    const int instances = level == Level::full ? 100 : 20;
    return run(4, "absorber-soundness", 0.0, [&](Tally& t) {
        Rng rng(kSeed);
        for (int i = 0; i < instances; ++i) {
            const int n = 6 + static_cast<int>(rng.below(7));
            const double p = 0.3 + 0.65 * rng.unit();
            const Hypergraph h = random_hypergraph(n, 3, p, rng.next());
            const VertexSet q = rng.subset(h.vertices(), 3);
            const std::string where = "instance " + std::to_string(i) + " " + label(n, 3) + " Q=" + to_string(q);
            AbsorberQuery query;
            query.union_all_splits = true;
            const auto singles = enumerate_absorbing_ksets(h, q, query);
            const auto doubles = enumerate_absorbing_2ksets(h, q, query);
            for (const auto& a : singles.absorbers) {
                t.check(is_absorbing(h, a.set, q).has_value() && oracle::is_absorbing(h, a.set, q), where + " k-absorber " + to_string(a.set));
                t.check(verify_matching(h, a.matching_of_set(), false) && verify_matching(h, a.matching_with_q(), false) &&
                            a.matching_with_q().covered() == (a.set | q),
                        where + " k-absorber witness " + to_string(a.set));
            }
            for (const auto& a : doubles.absorbers) {
                t.check(is_absorbing(h, a.set, q).has_value() && oracle::is_absorbing(h, a.set, q), where + " 2k-absorber " + to_string(a.set));
                t.check(verify_matching(h, a.matching_of_set(), false) && verify_matching(h, a.matching_with_q(), false) &&
                            a.matching_with_q().covered() == (a.set | q),
                        where + " 2k-absorber witness " + to_string(a.set));
            }
            t.check(oracle::generic_absorber_count(h, q, 3) >= singles.absorbers.size(), where + " generic k count below structured");
            t.check(oracle::generic_absorber_count(h, q, 6) >= doubles.absorbers.size(), where + " generic 2k count below structured");
        }
    });
}

CriterionResult profile_identities(Level level)
{
    const int instances = level == Level::full ? 600 : 100;
    return run(5, "profile-identities-and-kk", 0.0, [&](Tally& t) {
        Rng rng(kSeed + 5);
        for (int i = 0; i < instances; ++i) {
            const int r = 1 + static_cast<int>(rng.below(3));
            const int n = r + 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(12 - r)));
            const Hypergraph f = random_hypergraph(n, r, rng.unit(), rng.next());
            const std::string where = "instance " + std::to_string(i) + " (n=" + std::to_string(n) + ",r=" + std::to_string(r) + ")";
            for (const auto& rep : verify_profile_identities(f)) t.check(rep.verdict == Verdict::pass, where + " " + rep.check);
            t.check(t_profile(f).t == oracle::t_profile(f), where + " t-profile differs from oracle");
            t.check(df_pair_sum(f) == oracle::df_pair_sum(f), where + " D_F pair sum differs from oracle");
            const auto kk = kk_clique_bound_check(f);
            t.check(kk.verdict != Verdict::fail, where + " KK bound margin " + std::to_string(to_double(kk.margin)));
            if (kk.verdict == Verdict::inconclusive) t.warn(where + " KK bound inconclusive");
        }
    });
}

CriterionResult parity_split_sums(Level level)
{
    const int max_ab = level == Level::full ? 40 : 20;
    const int max_n = level == Level::full ? 64 : 32;
    return run(6, "parity-split-sums", 0.0, [&](Tally& t) {
        for (int a = 0; a <= max_ab; ++a)
            for (int b = 0; b <= max_ab; ++b)
                for (int r = 0; r <= 8; ++r) {
                    const std::string where = "(a=" + std::to_string(a) + ",b=" + std::to_string(b) + ",r=" + std::to_string(r) + ")";
                    for (const auto& rep : parity_split_check(a, b, r)) t.check(rep.verdict == Verdict::pass, where + " " + rep.check);
                    t.check(static_cast<Int128>(signed_coefficient(a, b, r)) == oracle::signed_coefficient(a, b, r),
                            where + " coefficient differs from convolution oracle");
                }
        for (double c : {0.0, 0.25, 0.5, 0.75, 1.0})
            for (int n = 1; n <= max_n; ++n) {
                if (std::abs(c * n - std::round(c * n)) > 1e-12) continue;
                for (int r = 1; r <= 8; ++r)
                    for (const auto& rep : evensum_asymptotic_check(c, r, n))
                        t.check(rep.verdict == Verdict::pass, rep.check + " at c=" + std::to_string(c) + ",n=" + std::to_string(n) +
                                                                  ",r=" + std::to_string(r));
            }
    });
}

CriterionResult aux_graph_exactness(Level level)
{
    const int instances = level == Level::full ? 100 : 30;
    const int max_n = level == Level::full ? 10 : 8;
    return run(7, "aux-graph-exactness", 0.0, [&](Tally& t) {
        Rng rng(kSeed + 7);
        for (int i = 0; i < instances; ++i) {
            const int k = 3 + static_cast<int>(rng.below(3));
            const int n = k + static_cast<int>(rng.below(static_cast<std::uint64_t>(13 - k)));
            const Hypergraph h = random_hypergraph(n, k, rng.unit(), rng.next());
            const AuxShape s = aux_shape(n, k);
            const auto expected = h.edge_count() * binom(static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(s.r));
            const auto count = aux_edge_count(h);
            t.check(count == expected && oracle::aux_edge_count(h) == expected, "aux edge count at instance " + std::to_string(i));
        }
        for (int n = 2; n <= max_n; ++n)
            for (int k = 2; k <= n; ++k) {
                if (n % k != 0) continue;
                for (const auto& spec : hext_family(n, k)) {
                    const auto c = parity_coloring(n, k, spec.part.a(), spec.kind);
                    const Hypergraph h = build(spec);
                    t.check(edit_distance_model(h, c) == 0 && oracle::edit_distance_model(h, c) == 0, "edit distance at " + label(spec));
                    t.check(bad_kset_count(c) == 0 && oracle::bad_kset_count(c) == 0, "bad k-sets at " + label(spec));
                }
            }
        for (int n = 2; n <= max_n; ++n)
            for (int k = 2; k <= std::min(n, 5); ++k) {
                std::vector<PartitionColoring> colorings;
                for (int a = 1; a < n; ++a)
                    for (Kind kind : {Kind::odd, Kind::even}) colorings.push_back(parity_coloring(n, k, VertexSet::prefix(a), kind));
                for (int j = 0; j < 4; ++j) colorings.push_back(random_coloring(n, k, rng.next()));
                const AuxShape s = aux_shape(n, k);
                const auto full = binom(static_cast<std::uint64_t>(n - 2), static_cast<std::uint64_t>(s.r - 1));
                const auto full_prime = binom(static_cast<std::uint64_t>(n - 2), static_cast<std::uint64_t>(s.r_prime - 1));
                for (const auto& c : colorings)
                    for (int u = 0; u < n; ++u)
                        for (int v = u + 1; v < n; ++v) {
                            const auto cd = cd_counts(c, u, v);
                            const auto ref = oracle::cd_counts(c, u, v);
                            const std::string where = label(n, k) + " pair " + std::to_string(u) + "," + std::to_string(v);
                            t.check(cd.c + cd.d == full && cd.c_prime + cd.d_prime == full_prime, "C+D identity " + where);
                            t.check(cd.c == ref.c && cd.d == ref.d && cd.c_prime == ref.c_prime && cd.d_prime == ref.d_prime,
                                    "C/D oracle " + where);
                        }
            }
    });
}

CriterionResult partition_recovery(Level level)
{
    const std::vector<int> sizes = level == Level::full ? std::vector<int>{8, 9, 10} : std::vector<int>{8};
    return run(8, "partition-recovery", 0.0, [&](Tally& t) {
        for (int n : sizes)
            for (int k : {3, 4})
                for (int a = 1; a < n; ++a)
                    for (Kind kind : {Kind::odd, Kind::even}) {
                        const VertexSet cls = VertexSet::prefix(a);
                        const VertexSet other = VertexSet::prefix(n) - cls;
                        const auto rep = classify_pairs(parity_coloring(n, k, cls, kind), 0.01);
                        const bool recovered = (rep.v1_class == cls && rep.v2_class == other) || (rep.v1_class == other && rep.v2_class == cls);
                        t.check(rep.v0_class.empty() && recovered, label(n, k) + " |A|=" + std::to_string(a) + " " + to_string(kind) +
                                                                       ": V1=" + to_string(rep.v1_class) + " V2=" + to_string(rep.v2_class));
                    }
    });
}

CriterionResult pipeline_sanity(Level level)
{
    const int max_n = level == Level::full ? 20 : 12;
    return run(9, "pipeline-sanity", 0.0, [&](Tally& t) {
        PipelineParams params;
        params.seed = kSeed;
        for (int n = 2; n <= max_n; ++n)
            for (int k = 2; k <= n; ++k) {
                if (n % k != 0) continue;
                const Hypergraph h = Hypergraph::complete(n, k);
                const auto first = pm_via_absorption(h, params);
                const auto second = pm_via_absorption(h, params);
                const bool perfect = first.status == PipelineStatus::perfect || first.status == PipelineStatus::perfect_fallback;
                t.check(perfect && verify_matching(h, first.matching, true), "complete " + label(n, k) + " " + to_string(first.status));
                t.check(to_json(first, false) == to_json(second, false), "nondeterministic on complete " + label(n, k));
            }
        for (const auto& spec : hext_family(12, 3)) {
            const Hypergraph h = build(spec);
            const auto report = pm_via_absorption(h, params);
            const auto solver = search_perfect_matching(h, h.vertices());
            t.check(report.status == PipelineStatus::no_perfect && solver.status == SearchStatus::absent,
                    "extremal " + label(spec) + " " + to_string(report.status));
            t.check(to_json(report, false) == to_json(pm_via_absorption(h, params), false), "nondeterministic on " + label(spec));
        }
    });
}

std::vector<CriterionResult> run_all(Level level, const std::function<void(const CriterionResult&)>& on_result)
{
    using Fn = CriterionResult (*)(Level);
    const Fn criteria[] = {extremal_non_matchability, threshold_formula_agreement, closed_form_degrees,
                           absorber_soundness,        profile_identities,          parity_split_sums,
                           aux_graph_exactness,       partition_recovery,          pipeline_sanity};
    std::vector<CriterionResult> out;
    for (Fn f : criteria) {
        out.push_back(f(level));
        if (on_result) on_result(out.back());
    }
    return out;
}

} // namespace hyperthresh::acceptance
