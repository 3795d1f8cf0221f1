#include <mpt/cycles.hpp>
#include <mpt/families.hpp>

#include <gtest/gtest.h>

#include <map>
#include <set>

using namespace mpt;

namespace {

auto q_example() -> MultipartiteTournament { return gen_Q(QSpec{8, 18, 1, 3, {{1, 2}, {2, 2}, {17, 2}, {18, 2}}, {}}); }
auto w_example() -> MultipartiteTournament { return gen_W(WSpec{8, 16, {{1, 2}, {2, 2}, {15, 2}, {16, 2}}}); }

auto fig1_h() -> MultipartiteTournament
{
    // v_1 dominates V_2, V_9 dominates v_1, alternating in between
    std::vector<bool> orientation{true, true};
    for (int k = 0; k < 5; ++k) {
        orientation.push_back(true);
        orientation.push_back(false);
    }
    orientation.push_back(false);
    orientation.push_back(false);
    return gen_H(HSpec{8, 4, std::vector<int>(8, 2), orientation});
}

auto cycle_counts(const MultipartiteTournament & d, int q_max) -> std::map<int, std::size_t>
{
    std::map<int, std::size_t> counts;
    for (int q = 3; q <= q_max; ++q) {
        auto cycles = all_cycles_of_length(d, q);
        EXPECT_FALSE(cycles.exhausted);
        if (! cycles.cycles.empty())
            counts[q] = cycles.cycles.size();
    }
    return counts;
}

} // namespace

TEST(Cycles, TriangleSpectrum)
{
    auto d = MultipartiteTournament::build({{0}, {1}, {2}}, {{0, 1}, {1, 2}, {2, 0}});
    auto w = find_cycle(d, 3);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->vertices, (std::vector<Vertex>{0, 1, 2}));
    EXPECT_THROW((void)find_cycle(d, 4), Error);
    EXPECT_THROW((void)find_cycle(d, 2), Error);
}

// [DERIVED] per-length cycle counts from networkx simple_cycles(length_bound=10)
TEST(Cycles, CountsMatchIndependentEnumeration)
{
    EXPECT_EQ(cycle_counts(q_example(), 10),
        (std::map<int, std::size_t>{{3, 19}, {4, 23}, {5, 22}, {6, 21}, {7, 20}, {8, 18}, {9, 18}}));
    EXPECT_EQ(cycle_counts(w_example(), 10),
        (std::map<int, std::size_t>{{3, 22}, {4, 21}, {5, 20}, {6, 19}, {7, 18}, {8, 17}, {10, 15}}));
    EXPECT_EQ(cycle_counts(fig1_h(), 10),
        (std::map<int, std::size_t>{{3, 34}, {4, 176}, {5, 556}, {6, 1096}, {7, 1328}, {8, 896}, {9, 256}}));
    auto r = random_rich(8, std::vector<int>(8, 2), 1);
    EXPECT_EQ(cycle_counts(r, 6), (std::map<int, std::size_t>{{3, 91}, {4, 375}, {5, 1596}, {6, 6367}}));
}

TEST(Cycles, EnumerationCapMarksExhausted)
{
    auto r = random_rich(8, std::vector<int>(8, 2), 1);
    auto capped = all_cycles_of_length(r, 5, 100);
    EXPECT_TRUE(capped.exhausted);
    EXPECT_EQ(capped.cycles.size(), 100U);
}

TEST(Cycles, WitnessIsLexicographicallySmallestRotation)
{
    auto d = q_example();
    auto all = all_cycles_of_length(d, 9);
    auto w = find_cycle(d, 9);
    ASSERT_TRUE(w);
    EXPECT_EQ(*w, all.cycles.front());
    EXPECT_TRUE(std::is_sorted(all.cycles.begin(), all.cycles.end(),
        [](const auto & a, const auto & b) { return a.vertices < b.vertices; }));
}

TEST(Cycles, SpectrumOfFamilyExamples)
{
    EXPECT_EQ(cycle_spectrum(q_example(), 10).lengths(), (std::vector<int>{3, 4, 5, 6, 7, 8, 9}));
    EXPECT_EQ(cycle_spectrum(w_example(), 10).lengths(), (std::vector<int>{3, 4, 5, 6, 7, 8, 10}));
    EXPECT_THROW((void)cycle_spectrum(q_example(), 23), Error);
}

TEST(Cycles, InsertionPositions)
{
    // 0 -> 1 -> 2 -> 0 with 3 in 0's part: 1 -> 3 -> 2 lets 3 slide in after 1
    auto d = MultipartiteTournament::build({{0, 3}, {1}, {2}}, {{0, 1}, {1, 2}, {2, 0}, {1, 3}, {3, 2}});
    CycleWitness c{{0, 1, 2}};
    EXPECT_EQ(can_insert(d, c, 3), (std::vector<Vertex>{1}));
    EXPECT_THROW((void)can_insert(d, c, 0), Error);
}

TEST(Cycles, ExtensionRangeOnQMember)
{
    auto d = q_example();
    auto spectrum = cycle_spectrum(d, 10);
    for (int q = 3; q <= 9; ++q) {
        const auto * w = spectrum.witness(q);
        ASSERT_NE(w, nullptr);
        auto report = check_extension_range(d, *w, &spectrum);
        EXPECT_TRUE(report.passed()) << "k=" << q;
        EXPECT_EQ(report.upper, report.l < d.c() ? d.c() + report.k - report.l : report.k);
    }
}

TEST(Cycles, DeadlineThrowsTimeout)
{
    auto r = random_rich(8, std::vector<int>(8, 4), 3);
    SearchLimits limits{std::chrono::steady_clock::now() - std::chrono::seconds(1)};
    EXPECT_THROW((void)all_cycles_of_length(r, 12, default_enumeration_cap, limits), Error);
}

// property: fast and oracle agree, witnesses are valid cycles of the asked length
TEST(CyclesProperty, FastMatchesOracleOnSmallRandomInstances)
{
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        int c = 3 + static_cast<int>(seed % 4);
        std::vector<int> sizes(c, 1 + static_cast<int>(seed % 3));
        auto d = random_multipartite(sizes, seed);
        for (int q = 3; q <= d.n(); ++q) {
            auto fast = find_cycle(d, q, SearchMode::Fast);
            auto oracle = find_cycle(d, q, SearchMode::Oracle);
            ASSERT_EQ(fast, oracle) << "seed " << seed << " q " << q;
            if (fast) {
                EXPECT_TRUE(is_valid_cycle(d, *fast));
                EXPECT_EQ(fast->length(), q);
                EXPECT_EQ(*std::min_element(fast->vertices.begin(), fast->vertices.end()), fast->vertices.front());
            }
        }
    }
}

// property: enumeration lists each rotation class once, each a valid cycle
TEST(CyclesProperty, EnumerationHasOneRotationPerCycle)
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto d = random_multipartite({2, 2, 2, 1}, seed);
        for (int q = 3; q <= d.n(); ++q) {
            auto all = all_cycles_of_length(d, q);
            std::set<std::vector<Vertex>> canonical;
            for (const auto & c : all.cycles) {
                EXPECT_TRUE(is_valid_cycle(d, c));
                EXPECT_TRUE(canonical.insert(c.vertices).second);
            }
            EXPECT_EQ(! all.cycles.empty(), find_cycle(d, q).has_value());
        }
    }
}
