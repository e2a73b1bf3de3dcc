#include <cstdlib>
#include <iostream>
#include <string>

#include <gtest/gtest.h>

#include "hyperthresh/verify/acceptance.hpp"

namespace ha = hyperthresh::acceptance;

namespace {

// HYPERTHRESH_ACCEPTANCE_LEVEL=smoke shortens the run; the default is the full criteria.
ha::Level level()
{
    const char* env = std::getenv("HYPERTHRESH_ACCEPTANCE_LEVEL");
    return env ? ha::level_from_string(env) : ha::Level::full;
}

void expect_pass(const ha::CriterionResult& r)
{
    std::cout << ha::format_line(r) << std::endl;
    EXPECT_TRUE(r.pass) << r.detail;
}

} // namespace

TEST(Acceptance, C1ExtremalNonMatchability) { expect_pass(ha::extremal_non_matchability(level())); }
TEST(Acceptance, C2ThresholdFormulaAgreement) { expect_pass(ha::threshold_formula_agreement(level())); }
TEST(Acceptance, C3ClosedFormDegrees) { expect_pass(ha::closed_form_degrees(level())); }
TEST(Acceptance, C4AbsorberSoundness) { expect_pass(ha::absorber_soundness(level())); }
TEST(Acceptance, C5ProfileIdentitiesAndKk) { expect_pass(ha::profile_identities(level())); }
TEST(Acceptance, C6ParitySplitSums) { expect_pass(ha::parity_split_sums(level())); }
TEST(Acceptance, C7AuxGraphExactness) { expect_pass(ha::aux_graph_exactness(level())); }
TEST(Acceptance, C8PartitionRecovery) { expect_pass(ha::partition_recovery(level())); }
TEST(Acceptance, C9PipelineSanity) { expect_pass(ha::pipeline_sanity(level())); }

int main(int argc, char** argv)
{
    testing::InitGoogleTest(&argc, argv);
    std::cout << "acceptance level: " << ha::to_string(level()) << std::endl;
    return RUN_ALL_TESTS();
}
