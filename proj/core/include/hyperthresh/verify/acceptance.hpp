#pragma once

#include <functional>
#include <string>
#include <vector>

namespace hyperthresh::acceptance {

/// smoke: reduced ranges for quick checks; full: the complete criteria.
enum class Level { smoke, full };

Level level_from_string(const std::string& s);
std::string to_string(Level level);

struct CriterionResult {
    int id;
    std::string name;
    bool pass;
    std::string detail;
    std::vector<std::string> warnings;
    double seconds;
    double budget_seconds; // 0: no runtime bound
};

/// "PASS c1 extremal-non-matchability: ... [0.41 s / 60 s]"
std::string format_line(const CriterionResult& r);

CriterionResult extremal_non_matchability(Level level);
CriterionResult threshold_formula_agreement(Level level);
CriterionResult closed_form_degrees(Level level);
CriterionResult absorber_soundness(Level level);
CriterionResult profile_identities(Level level);
CriterionResult parity_split_sums(Level level);
CriterionResult aux_graph_exactness(Level level);
CriterionResult partition_recovery(Level level);
CriterionResult pipeline_sanity(Level level);

/// Runs every criterion in order, reporting each result as it completes.
std::vector<CriterionResult> run_all(Level level, const std::function<void(const CriterionResult&)>& on_result = {});

} // namespace hyperthresh::acceptance
