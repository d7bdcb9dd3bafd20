#include <gtest/gtest.h>

#include "laurent/constellation.hpp"
#include "laurent/passport.hpp"
#include "laurent/perm.hpp"
#include "support.hpp"

using namespace laurent;

namespace {

// 1-indexed cycle notation helper for readability
Perm cyc(int n, std::vector<std::vector<int>> cycles) {
    for (auto& c : cycles)
        for (auto& x : c) --x;
    return Perm::from_cycles(n, cycles);
}

ConstellationTuple klein() { return from_rotations(4, {cyc(4, {{1, 2}, {3, 4}}), cyc(4, {{1, 3}, {2, 4}})}); }

}  // namespace

TEST(Perm, LeftToRightProduct) {
    Perm a = cyc(3, {{1, 2}});
    Perm b = cyc(3, {{2, 3}});
    // 1 -a-> 2 -b-> 3
    EXPECT_EQ((a * b)[0], 2);
    EXPECT_EQ((a * b), cyc(3, {{1, 3, 2}}));
}

TEST(Perm, RejectsNonBijection) { EXPECT_THROW(Perm({0, 0, 1}), Error); }

TEST(Perm, OneBasedRoundTrip) {
    Perm p = Perm::from_one_based({2, 3, 1});
    EXPECT_EQ(p.one_based(), (std::vector<int>{2, 3, 1}));
    EXPECT_EQ(to_cycle_string(p), "(1 2 3)");
}

TEST(FromRotations, KleinTupleCompletesWithThirdInvolution) {
    auto c = klein();
    EXPECT_EQ(c.face(), cyc(4, {{1, 4}, {2, 3}}));
    EXPECT_TRUE(product_is_identity(c));
}

TEST(FromRotations, InversePairGivesIdentityFace) {
    auto c = from_rotations(3, {cyc(3, {{1, 2, 3}}), cyc(3, {{1, 3, 2}})});
    EXPECT_TRUE(c.face().is_identity());
}

TEST(FromRotations, DegreeOne) {
    auto c = from_rotations(1, {Perm::identity(1), Perm::identity(1)});
    EXPECT_TRUE(c.face().is_identity());
    EXPECT_EQ(c.q(), 3);
}

TEST(FromRotations, DegreeMismatchThrows) {
    try {
        from_rotations(3, {Perm::identity(3), Perm::identity(4)});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DegreeMismatch);
    }
}

TEST(CycleType, Examples) {
    EXPECT_EQ(cycle_type(Perm::identity(5)), (Partition{1, 1, 1, 1, 1}));
    EXPECT_EQ(cycle_type(cyc(4, {{1, 2}, {3, 4}})), (Partition{2, 2}));
    EXPECT_EQ(cycle_type(cyc(6, {{1, 2, 3}, {5, 6}})), (Partition{1, 2, 3}));
}

TEST(Transitivity, Examples) {
    EXPECT_TRUE(is_transitive(klein()));
    ConstellationTuple c{4, {cyc(4, {{1, 2}}), cyc(4, {{1, 2}}), Perm::identity(4)}};
    EXPECT_FALSE(is_transitive(c));
    EXPECT_TRUE(is_transitive(from_rotations(1, {Perm::identity(1), Perm::identity(1)})));
}

TEST(Genus, Examples) {
    EXPECT_EQ(genus(klein()), 0);
    Perm t = cyc(3, {{1, 2, 3}});
    EXPECT_EQ(genus(ConstellationTuple{3, {t, t, t}}), 1);
    EXPECT_EQ(genus(from_rotations(1, {Perm::identity(1), Perm::identity(1)})), 0);
    ConstellationTuple split{4, {cyc(4, {{1, 2}}), cyc(4, {{1, 2}}), Perm::identity(4)}};
    try {
        genus(split);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotTransitive);
    }
}

TEST(VerifyAgainst, KleinTupleMatchesEqualFaces) {
    auto rep = verify_against(klein(), make_passport({{2, 2}, {2, 2}}, {2, 2}));
    EXPECT_TRUE(rep.passed());
    EXPECT_TRUE(rep.transitive && rep.genus_zero && rep.colored_match && rep.face_match);
}

TEST(VerifyAgainst, KleinTupleFailsOnFaceForUnequalFaces) {
    auto rep = verify_against(klein(), make_passport({{2, 2}, {2, 2}}, {3, 1}));
    EXPECT_FALSE(rep.passed());
    EXPECT_FALSE(rep.face_match);
    EXPECT_TRUE(rep.transitive && rep.genus_zero && rep.colored_match);
    ASSERT_EQ(rep.failures.size(), 1U);
    EXPECT_EQ(rep.failures[0].substr(0, 3), "(d)");
}

TEST(VerifyAgainst, IntransitiveTupleFailsOnConnectivity) {
    ConstellationTuple c = from_rotations(4, {cyc(4, {{1, 2}}), cyc(4, {{3, 4}})});
    auto rep = verify_against(c, make_passport({{2, 2}, {2, 2}}, {2, 2}));
    EXPECT_FALSE(rep.transitive);
    EXPECT_FALSE(rep.passed());
}

TEST(VerifyAgainst, ShapeMismatchThrows) {
    auto p = make_passport({{2, 2}, {2, 2}}, {2, 2});
    try {
        verify_against(from_rotations(3, {Perm::identity(3), Perm::identity(3)}), p);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DegreeMismatch);
    }
    try {
        verify_against(from_rotations(4, {Perm::identity(4), Perm::identity(4), Perm::identity(4)}), p);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::QMismatch);
    }
}

TEST(Properties, RandomRotationsHaveIdentityProductAndConsistentTypes) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 9);
        const int r = 2 + static_cast<int>(rng() % 4);
        std::vector<Perm> rots;
        for (int i = 0; i < r; ++i) rots.emplace_back(support::random_images(n, rng));
        auto c = from_rotations(n, rots);
        EXPECT_TRUE(product_is_identity(c));
        for (const auto& g : c.g) {
            EXPECT_EQ(cycle_type(g).sum(), n);
            EXPECT_EQ(cycle_type(g).parts(), support::cycle_lengths(g.images()));
        }
        if (is_transitive(c)) {
            const long euler = total_cycles(c) - static_cast<long>(c.q() - 2) * n;
            EXPECT_EQ(euler % 2, 0);
            EXPECT_GE(genus(c), 0);
        }
    }
}

TEST(Properties, VerificationIsInvariantUnderSimultaneousConjugation) {
    std::mt19937 rng(5);
    auto p = make_passport({{2, 2}, {2, 2}}, {2, 2});
    auto bad = make_passport({{2, 2}, {2, 2}}, {3, 1});
    for (int trial = 0; trial < 200; ++trial) {
        Perm h(support::random_images(4, rng));
        auto c = conjugate(klein(), h);
        EXPECT_TRUE(verify_against(c, p).passed());
        EXPECT_EQ(verify_against(c, bad).failures, verify_against(klein(), bad).failures);
    }
}

TEST(BraidReorder, PreservesProductAndPermutesCycleTypes) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const int r = 2 + static_cast<int>(rng() % 4);
        std::vector<Perm> rots;
        for (int i = 0; i < r; ++i) rots.emplace_back(support::random_images(n, rng));
        auto c = from_rotations(n, rots);
        std::vector<int> order(static_cast<std::size_t>(r));
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        auto d = braid_reorder(c, order);
        EXPECT_TRUE(product_is_identity(d));
        EXPECT_EQ(d.face(), c.face());
        EXPECT_EQ(is_transitive(d), is_transitive(c));
        for (int k = 0; k < r; ++k)
            EXPECT_EQ(cycle_type(d.g[static_cast<std::size_t>(k)]),
                      cycle_type(c.g[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])]));
    }
}
