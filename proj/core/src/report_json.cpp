#include "hyperthresh/report_json.hpp"

namespace hyperthresh {

namespace {

Json sets(const std::vector<VertexSet>& v)
{
    Json out = Json::array();
    for (VertexSet s : v) out.push_back(to_json(s));
    return out;
}

Json record(const AbsorberRecord& r)
{
    return Json{{"q", to_json(r.q)}, {"set", to_json(r.s)}, {"size", r.size}, {"edges", sets(r.edges)}};
}

Json availability(const AbsorberAvailability& a)
{
    return Json{{"q", to_json(a.q)}, {"kAbsorbers", a.k_absorbers}, {"twoKAbsorbers", a.two_k_absorbers}, {"truncated", a.truncated}};
}

Json split(const QSplit& s) { return Json{{"x", to_json(s.x)}, {"y", to_json(s.y)}}; }

template <typename A, typename F>
Json list_json(const AbsorberList<A>& list, F&& parts)
{
    Json items = Json::array();
    for (const auto& a : list.absorbers) {
        Json item{{"set", to_json(a.set)}, {"split", split(a.split)}};
        parts(item, a);
        item["matchingOfSet"] = sets(a.matching_of_set().edges);
        item["matchingWithQ"] = sets(a.matching_with_q().edges);
        items.push_back(std::move(item));
    }
    return Json{{"distinct", list.absorbers.size()}, {"labeled", list.labeled_count}, {"truncated", list.truncated}, {"absorbers", items}};
}

} // namespace

Json to_json(const ExtremalSpec& spec) { return Json{{"kind", to_string(spec.kind)}, {"sizeA", spec.part.size_a()}}; }

Json to_json(HalfInteger h)
{
    if (h.is_integer()) return Json(h.twice() / 2);
    return Json(h.to_double());
}

Json to_json(const ThresholdReport& report)
{
    Json out{{"n", report.n}, {"k", report.k}, {"l", report.l}, {"delta", report.value}};
    if (report.l == report.k - 1 && report.k >= 3) {
        const HalfInteger formula = threshold_codegree_formula(report.n, report.k);
        out["formula_k_minus_1"] = to_json(formula);
        out["formula_is_integer"] = formula.is_integer();
        out["formula_difference"] = to_json(HalfInteger::from_twice(2 * static_cast<std::int64_t>(report.value) - formula.twice()));
    }
    Json witnesses = Json::array();
    for (const auto& w : report.witnesses) witnesses.push_back(to_json(w));
    out["witnesses"] = witnesses;
    Json table = Json::array();
    for (const auto& row : report.table)
        table.push_back(Json{{"kind", to_string(row.spec.kind)}, {"sizeA", row.spec.part.size_a()}, {"minDegree", row.min_degree}});
    out["table"] = table;
    return out;
}

Json to_json(const ParityCertificate& cert)
{
    return Json{{"edgesInMatching", cert.edges_in_matching},
                {"forcedSumParity", cert.forced_sum_parity},
                {"sizeAParity", cert.size_a_parity},
                {"noPerfectMatching", cert.no_perfect_matching},
                {"reason", cert.reason}};
}

Json to_json(const Matching& m) { return sets(m.edges); }

Json to_json(const SearchResult& result)
{
    return Json{{"perfect", result.status == SearchStatus::found},
                {"status", to_string(result.status)},
                {"nodes", result.nodes},
                {"edges", to_json(result.matching)}};
}

Json to_json(const AbsorberList<KAbsorber>& list)
{
    return list_json(list, [](Json& item, const KAbsorber& a) {
        item["xPrime"] = to_json(a.x_prime);
        item["yPrime"] = to_json(a.y_prime);
    });
}

Json to_json(const AbsorberList<TwoKAbsorber>& list)
{
    return list_json(list, [](Json& item, const TwoKAbsorber& a) {
        item["xPrime"] = to_json(a.x_prime);
        item["yPrime"] = to_json(a.y_prime);
        item["wPrime"] = to_json(a.w_prime);
        item["zPrime"] = to_json(a.z_prime);
    });
}

Json to_json(const AbsorbingMatching& am)
{
    Json records = Json::array();
    for (const auto& r : am.records) records.push_back(record(r));
    Json avail = Json::array();
    for (const auto& a : am.availability) avail.push_back(availability(a));
    return Json{{"size", am.matching.size()}, {"cap", am.cap}, {"attempts", am.attempts},
                {"edges", to_json(am.matching)}, {"absorbers", records}, {"availability", avail}};
}

Json to_json(const PipelineReport& report, bool timings)
{
    Json records = Json::array();
    for (const auto& r : report.absorbers) records.push_back(record(r));
    Json out{{"n", report.n},
             {"k", report.k},
             {"seed", report.params.seed},
             {"xi", report.params.xi},
             {"gamma", report.params.gamma},
             {"status", to_string(report.status)},
             {"perfect", report.status == PipelineStatus::perfect || report.status == PipelineStatus::perfect_fallback},
             {"absorbingSize", report.absorbing_size},
             {"absorbingCap", report.absorbing_cap},
             {"absorbers", records},
             {"greedySize", report.greedy_size},
             {"leftover", report.leftover},
             {"chunks", report.chunks},
             {"leftoverDivisible", report.leftover_divisible},
             {"absorbed", report.absorbed},
             {"fallbackUsed", report.fallback_used},
             {"truncated", report.truncated},
             {"searchNodes", report.search_nodes},
             {"edges", to_json(report.matching)}};
    if (timings)
        out["timingsMs"] = Json{{"absorbing", report.absorbing_ms},
                                {"greedy", report.greedy_ms},
                                {"absorption", report.absorption_ms},
                                {"fallback", report.fallback_ms}};
    return out;
}

Json to_json(const StructureReport& report)
{
    Json out{{"V0", to_json(report.v0_class)},
             {"V1", to_json(report.v1_class)},
             {"V2", to_json(report.v2_class)},
             {"badKSets", report.bad_ksets ? Json(*report.bad_ksets) : Json(nullptr)},
             {"editDistance", report.edit_distance ? Json(*report.edit_distance) : Json(nullptr)},
             {"caseA", report.case_a},
             {"caseB", report.case_b},
             {"flags", report.flags},
             {"n", report.n},
             {"k", report.k},
             {"beta1", report.beta1},
             {"v0", report.v0 >= 0 ? Json(report.v0) : Json(nullptr)},
             {"smallR", report.small_r},
             {"smallRPrime", report.small_r_prime},
             {"pairs", report.pairs},
             {"consistentPairs", report.consistent_pairs},
             {"similarPairs", report.similar_pairs},
             {"consistentSimilarPairs", report.consistent_similar_pairs},
             {"cToV0", report.c_to_v0},
             {"dToV0", report.d_to_v0},
             {"x1Agreement", report.x1_agreement},
             {"degenerate", report.degenerate}};
    return out;
}

Json to_json(const DerivedPartition& dp)
{
    return Json{{"witness", to_json(dp.witness)},
                {"witnessGoodCount", dp.witness_good_count},
                {"aPrime", dp.a_prime.size()},
                {"aDoublePrime", dp.a_dprime.size()},
                {"bPrime", dp.b_prime.size()},
                {"bDoublePrime", dp.b_dprime.size()},
                {"xPrime", dp.x_prime.size()},
                {"yPrime", dp.y_prime.size()},
                {"eXpYp", dp.e_xp_yp},
                {"eXdYd", dp.e_xd_yd},
                {"eXpYd", dp.e_xp_yd},
                {"eXdYp", dp.e_xd_yp},
                {"editDistance", dp.edit_distance}};
}

Json to_json(const Number& x)
{
    return std::visit([](auto v) { return Json(v); }, x);
}

Json to_json(const CheckReport& report)
{
    return Json{{"check", report.check},
                {"lhs", to_json(report.lhs)},
                {"rhs", to_json(report.rhs)},
                {"margin", to_json(report.margin)},
                {"verdict", to_string(report.verdict)}};
}

} // namespace hyperthresh
