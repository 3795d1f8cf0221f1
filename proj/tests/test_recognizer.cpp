#include <mpt/cycles.hpp>
#include <mpt/families.hpp>
#include <mpt/harness.hpp>
#include <mpt/recognizer.hpp>

#include <gtest/gtest.h>

using namespace mpt;

namespace {

auto h_member(int i, std::uint64_t seed) -> HSpec
{
    HSpec spec{8, i, std::vector<int>(8, 2), {}};
    spec.v1_orientation = random_strong_orientation(spec, seed);
    return spec;
}

} // namespace

TEST(TwinQuotient, ContractsBlowUps)
{
    QSpec spec{8, 18, 1, 3, {{1, 2}, {2, 2}, {17, 2}, {18, 3}}, {}};
    auto d = gen_Q(spec);
    auto tq = twin_quotient(d);
    EXPECT_EQ(tq.quotient.n(), 18);
    EXPECT_EQ(tq.expand(), d);
    EXPECT_EQ(tq.classes.back().size(), 3U);
}

// property: classes are twins, and no two classes of one part are twins
TEST(TwinQuotientProperty, ClassesAreMaximalTwinSets)
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto d = random_multipartite({3, 3, 2}, seed);
        auto tq = twin_quotient(d);
        EXPECT_EQ(tq.expand(), d);
        for (const auto & cls : tq.classes)
            for (auto v : cls)
                for (Vertex x = 0; x < d.n(); ++x) {
                    EXPECT_EQ(d.has_arc(v, x), d.has_arc(cls[0], x));
                    EXPECT_EQ(d.has_arc(x, v), d.has_arc(x, cls[0]));
                }
        auto again = twin_quotient(tq.quotient);
        EXPECT_EQ(again.quotient.n(), tq.quotient.n());
    }
}

TEST(Recognizer, RoundTripsQMembersUnderRelabeling)
{
    std::vector<QSpec> specs{
        {8, 18, 1, 3, {{1, 2}, {2, 2}, {17, 2}, {18, 2}}, {}},
        {8, 18, 1, 3, {{3, 2}}, {{ReversalCase::Case1, 1}}},
        {8, 18, 2, 9, {{2, 3}}, {{ReversalCase::Case2, 2}}},
        {8, 21, 1, 3, {{3, 3}, {19, 3}}, {{ReversalCase::Case1, 2}, {ReversalCase::Case3, 1}}},
        {8, 22, 4, 9, {}, {}},
    };
    for (std::size_t k = 0; k < specs.size(); ++k) {
        auto d = relabel(gen_Q(specs[k]), seeded_permutation(vertex_count(specs[k]), k + 11));
        auto result = recognize(d);
        ASSERT_EQ(result.verdict, Verdict::MemberOfQ) << k;
        EXPECT_TRUE(verify_certificate(d, result));
        EXPECT_EQ(vertex_count(std::get<QSpec>(result.spec)), d.n());
    }
}

TEST(Recognizer, RoundTripsHMembersUnderRelabeling)
{
    for (int i = 3; i <= 6; ++i) {
        auto spec = h_member(i, 100 + i);
        auto d = relabel(gen_H(spec), seeded_permutation(vertex_count(spec), i));
        auto result = recognize(d);
        ASSERT_EQ(result.verdict, Verdict::MemberOfH);
        EXPECT_TRUE(verify_certificate(d, result));
        EXPECT_EQ(std::get<HSpec>(result.spec).i, i);
        EXPECT_EQ(std::get<HSpec>(result.spec), canonical(spec));
    }
}

TEST(Recognizer, RoundTripsWMembers)
{
    for (const auto & spec : w_grid()) {
        auto d = relabel(gen_W(spec), seeded_permutation(vertex_count(spec), 5));
        auto result = recognize_W(d);
        ASSERT_EQ(result.verdict, Verdict::MemberOfW);
        EXPECT_TRUE(verify_certificate(d, result));
        EXPECT_EQ(std::get<WSpec>(result.spec), spec);
        EXPECT_FALSE(recognize(d).is_member());
    }
}

// The converse of an H member with i = 3 behaves like an H member with
// i = c: rich, no (c+2)-cycle, small diameter, yet outside 2 < i < c-1.
TEST(Recognizer, ConverseOfHMemberNeedsExtendedRange)
{
    auto d = converse(gen_H(h_member(3, 7)));
    ASSERT_TRUE(is_rich(d));
    EXPECT_FALSE(find_cycle(d, 10, SearchMode::Oracle));
    EXPECT_LE(diam(d), 4);
    EXPECT_FALSE(recognize(d).is_member());

    auto extended = recognize(d, RecognizerOptions{HRange::Extended});
    ASSERT_EQ(extended.verdict, Verdict::MemberOfH);
    EXPECT_EQ(std::get<HSpec>(extended.spec).i, 8);
    EXPECT_TRUE(verify_certificate(d, extended));
}

TEST(Recognizer, SingleArcFlipCanLandOnAnotherQMember)
{
    QSpec spec{8, 18, 1, 3, {{3, 2}}, {}};
    auto d = gen_Q(spec);
    auto a2 = blowup_vertices(spec.blowup, 18, 2).front();
    auto a3 = blowup_vertices(spec.blowup, 18, 3).front();
    auto flipped = reverse_arc(d, {a2, a3});
    auto result = recognize(flipped);
    ASSERT_EQ(result.verdict, Verdict::MemberOfQ);
    const auto & q = std::get<QSpec>(result.spec);
    EXPECT_EQ(q.reversals, (std::vector<Reversal>{{ReversalCase::Case1, 1}}));
    EXPECT_FALSE(find_cycle(flipped, 10, SearchMode::Oracle));
}

TEST(Recognizer, NonMembers)
{
    auto r = random_rich(8, std::vector<int>(8, 2), 1);
    EXPECT_TRUE(find_cycle(r, 10));
    EXPECT_EQ(recognize(r).verdict, Verdict::NotMember);
    EXPECT_EQ(recognize_W(r).verdict, Verdict::NotMember);

    auto small = random_rich(6, std::vector<int>(6, 2), 1);
    EXPECT_FALSE(recognize_Q(small).is_member());
    EXPECT_FALSE(recognize_H(small).is_member());
}

TEST(Recognizer, TamperedCertificateIsRejected)
{
    auto d = gen_Q(QSpec{8, 19, 1, 3, {}, {}});
    auto result = recognize(d);
    ASSERT_TRUE(verify_certificate(d, result));
    std::swap(result.correspondence[0], result.correspondence[5]);
    EXPECT_FALSE(verify_certificate(d, result));
    result.correspondence.pop_back();
    EXPECT_FALSE(verify_certificate(d, result));
    EXPECT_FALSE(verify_certificate(d, RecognitionResult{}));
}

// property: recognizing a relabeled member yields the same canonical spec
TEST(RecognizerProperty, CanonicalSpecIsLabelIndependent)
{
    auto grid = q_grid();
    for (std::size_t k = 0; k < grid.size(); k += 7) {
        auto d = gen_Q(grid[k]);
        auto first = recognize(d);
        ASSERT_TRUE(first.is_member()) << k;
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            auto again = recognize(relabel(d, seeded_permutation(d.n(), seed)));
            ASSERT_TRUE(again.is_member());
            EXPECT_EQ(std::get<QSpec>(again.spec), std::get<QSpec>(first.spec));
        }
    }
}
