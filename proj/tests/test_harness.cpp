#include <mpt/harness.hpp>

#include <gtest/gtest.h>

using namespace mpt;

namespace {

auto status_of(const InstanceRecord & record, const std::string & name) -> std::optional<CheckStatus>
{
    for (const auto & check : record.checks)
        if (check.name == name)
            return check.status;
    return std::nullopt;
}

} // namespace

TEST(Harness, PerturbIsDeterministicAndRich)
{
    auto d = gen_Q(q_grid().front());
    auto a = perturb(d, 3), b = perturb(d, 3);
    EXPECT_EQ(a, b);
    EXPECT_TRUE(is_rich(a));
    std::size_t differing = 0;
    for (auto [u, v] : d.arcs())
        differing += a.has_arc(u, v) ? 0 : 1;
    EXPECT_EQ(differing, 1U);
}

TEST(Harness, PerturbGivesUpWhenNothingStaysRich)
{
    // every arc of a directed 4-cycle is needed for strong connectivity
    auto d = MultipartiteTournament::build({{0, 2}, {1, 3}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    try {
        (void)perturb(d, 1, 20);
        FAIL();
    }
    catch (const Error & e) {
        EXPECT_EQ(e.code(), ErrorCode::GaveUp);
    }
}

TEST(Harness, SeededPermutationIsAPermutation)
{
    auto p = seeded_permutation(50, 9);
    auto sorted = p;
    std::sort(sorted.begin(), sorted.end());
    for (int k = 0; k < 50; ++k)
        EXPECT_EQ(sorted[k], k);
    EXPECT_EQ(p, seeded_permutation(50, 9));
    EXPECT_NE(p, seeded_permutation(50, 10));
}

TEST(Harness, ChecksOnHMember)
{
    CampaignConfig config;
    config.lemma6 = true;
    auto spec = h_grid().front();
    auto record = run_instance("h", spec, config);
    EXPECT_EQ(record.verdict, Verdict::MemberOfH);
    for (const auto * name : {"theorem1", "theorem3", "bondy", "extension_range", "no_c2_oracle", "diameter",
             "round_trip", "no_insertion_k9", "c1_meets_all_parts", "lemma6_shape"})
        EXPECT_EQ(status_of(record, name), CheckStatus::Pass) << name;
    // the literal copy property is the only red check on this member
    EXPECT_EQ(status_of(record, "cycle_copy_literal"), CheckStatus::Fail);
    std::size_t red = 0;
    for (const auto & check : record.checks)
        red += check.status == CheckStatus::Fail ? 1 : 0;
    EXPECT_EQ(red, 1U);
}

// [DERIVED] networkx: strong, lengths 3..9 only, C below is a 9-cycle with every
// off-cycle vertex in N+(C) and N-(C); vertex 6 differs from 5 only on v_1.
TEST(Harness, LiteralCopyPropertyFailsOnSplitPart)
{
    HSpec spec{8, 3, std::vector<int>(8, 2), {}};
    for (char bit : std::string("11011000111100"))
        spec.v1_orientation.push_back(bit == '1');
    auto d = gen_H(spec);
    auto facts = compute_facts(d);
    CycleWitness cycle{{0, 1, 3, 5, 7, 9, 11, 13, 15}};
    ASSERT_TRUE(is_valid_cycle(d, cycle));
    EXPECT_TRUE(d.has_arc(0, 6));
    EXPECT_TRUE(d.has_arc(5, 0));

    auto literal = check_cycle_copy_literal(d, facts);
    EXPECT_EQ(literal.status, CheckStatus::Fail);
    ASSERT_EQ(literal.witnesses.size(), 1U);
    EXPECT_EQ(literal.witnesses[0].length(), 9);
    EXPECT_EQ(check_lemma6_shape(d, facts).status, CheckStatus::Pass);
}

TEST(Harness, ChecksOnWMember)
{
    CampaignConfig config;
    auto record = run_instance("w", w_grid().front(), config);
    EXPECT_FALSE(record.failed());
    for (const auto * name : {"theorem2", "w_has_c2", "no_insertion_k8", "round_trip", "bondy"})
        EXPECT_EQ(status_of(record, name), CheckStatus::Pass) << name;
}

TEST(Harness, MembershipCheckOnRandomInstanceWithTenCycle)
{
    auto d = random_rich(8, std::vector<int>(8, 2), 1);
    auto facts = compute_facts(d);
    auto record = check_theorem3(d, facts);
    EXPECT_EQ(record.status, CheckStatus::Pass);
    ASSERT_EQ(record.witnesses.size(), 1U);
    EXPECT_EQ(record.witnesses[0].length(), 10);
    EXPECT_FALSE(record.certificate);
    EXPECT_EQ(check_lemma6_shape(d, facts).status, CheckStatus::Skipped);
}

TEST(Harness, CycleFamilyCapMakesRecordInconclusive)
{
    auto spec = h_grid().front();
    auto d = gen_H(spec);
    auto facts = compute_facts(d);
    EXPECT_EQ(check_lemma6_shape(d, facts, 3).status, CheckStatus::Inconclusive);
    EXPECT_EQ(check_cycle_copy_literal(d, facts, 3).status, CheckStatus::Inconclusive);
    EXPECT_EQ(check_c1_meets_all_parts(d, facts, 3).status, CheckStatus::Inconclusive);
}

TEST(Harness, DiameterTripwire)
{
    auto q = gen_Q(q_grid().front());
    EXPECT_EQ(check_diameter(q, Verdict::MemberOfQ).status, CheckStatus::Pass);
    EXPECT_EQ(check_diameter(q, Verdict::MemberOfH).status, CheckStatus::Fail);
    EXPECT_EQ(check_diameter(q, Verdict::NotMember).status, CheckStatus::Skipped);
}

TEST(Harness, CampaignIsReproducibleAndOrdered)
{
    CampaignConfig config;
    config.h_specs = {h_grid().front()};
    config.q_specs = {q_grid().front()};
    config.perturbations = 3;
    config.fuzz_count = 5;
    auto a = run_campaign(config);
    config.threads = 3;
    auto b = run_campaign(config);
    ASSERT_EQ(a.records.size(), 10U);
    ASSERT_EQ(b.records.size(), 10U);
    for (std::size_t k = 0; k < a.records.size(); ++k) {
        EXPECT_EQ(a.records[k].label, b.records[k].label);
        EXPECT_EQ(a.records[k].spectrum, b.records[k].spectrum);
        EXPECT_EQ(a.records[k].verdict, b.records[k].verdict);
        ASSERT_EQ(a.records[k].checks.size(), b.records[k].checks.size());
        for (std::size_t j = 0; j < a.records[k].checks.size(); ++j) {
            EXPECT_EQ(a.records[k].checks[j].status, b.records[k].checks[j].status);
            EXPECT_EQ(a.records[k].checks[j].witnesses, b.records[k].checks[j].witnesses);
        }
    }
    EXPECT_TRUE(a.passed());
    EXPECT_EQ(a.records[0].label, "H#0");
    EXPECT_EQ(a.records[2].label, "perturb#0");
    EXPECT_EQ(a.records[5].label, "fuzz#0");
    EXPECT_NE(summary_table(a).find("theorem3"), std::string::npos);
}

TEST(Harness, ExplorationIsGated)
{
    CampaignConfig config;
    config.fuzz_c = 6;
    config.fuzz_count = 5;
    EXPECT_THROW((void)run_campaign(config), Error);
    config.explore = true;
    auto report = run_campaign(config);
    EXPECT_TRUE(report.passed());
    for (const auto & record : report.records)
        EXPECT_EQ(status_of(record, "theorem3"), std::nullopt);
}

TEST(Harness, GridsMeetTheirSizes)
{
    auto h = h_grid();
    auto q = q_grid();
    EXPECT_GE(h.size(), 50U);
    EXPECT_GE(q.size(), 50U);
    EXPECT_GE(w_grid().size(), 20U);
    std::set<ReversalCase> cases;
    for (const auto & spec : q)
        for (const auto & r : spec.reversals)
            cases.insert(r.which);
    EXPECT_EQ(cases.size(), 4U);
}
