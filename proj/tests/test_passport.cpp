#include <gtest/gtest.h>

#include <map>

#include "laurent/passport.hpp"
#include "support.hpp"

using namespace laurent;

namespace {

std::vector<ViolationKind> kinds(const ValidationResult& r) {
    std::vector<ViolationKind> out;
    for (const auto& v : r.violations) out.push_back(v.kind);
    return out;
}

bool has(const ValidationResult& r, ViolationKind k) {
    auto ks = kinds(r);
    return std::find(ks.begin(), ks.end(), k) != ks.end();
}

support::PassportKey key_of(const LaurentPassport& p) {
    support::PassportKey key;
    for (const auto& c : p.colored()) key.push_back(c.parts());
    std::sort(key.begin(), key.end());
    key.push_back(p.face().parts());
    return key;
}

}  // namespace

TEST(Partition, StoresPartsIncreasingAndComparesAsMultiset) {
    Partition a{3, 1, 2};
    EXPECT_EQ(a.parts(), (std::vector<int>{1, 2, 3}));
    EXPECT_EQ(a, (Partition{2, 3, 1}));
    EXPECT_EQ(a.sum(), 6);
    EXPECT_EQ(a.count(), 3);
    EXPECT_EQ(to_string(a), "3,2,1");
}

TEST(Partition, EnumerationMatchesIndependentRecursion) {
    for (int n = 1; n <= 14; ++n) {
        auto mine = partitions_of(n);
        auto ref = support::partitions(n);
        ASSERT_EQ(mine.size(), ref.size()) << "n=" << n;
        for (std::size_t i = 0; i < mine.size(); ++i) EXPECT_EQ(mine[i].parts(), ref[i]) << "n=" << n;
    }
}

TEST(Validate, AcceptsSmallestKnownPassport) {
    auto r = validate({{{2, 2}, {2, 2}}, {3, 1}});
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(r.passport->n(), 4);
    EXPECT_EQ(r.passport->q(), 3);
    EXPECT_EQ(r.passport->s(), 1);
}

TEST(Validate, FivePartitionDatumWithThreePartFaceFailsOnlyTheFaceCheck) {
    RawPassport raw{{{1, 2, 3, 3}, {1, 1, 1, 1, 1, 2, 2}, {1, 1, 1, 1, 1, 1, 3}, {1, 1, 1, 1, 1, 1, 1, 2}}, {1, 2, 6}};
    auto r = validate(raw);
    EXPECT_FALSE(r.ok());
    EXPECT_EQ(kinds(r), std::vector<ViolationKind>{ViolationKind::FaceNotTwoParts});
    EXPECT_FALSE(has(r, ViolationKind::RHViolation));
}

TEST(Validate, TwoPartitionsAreTooFew) {
    auto r = validate({{{3, 1}}, {2, 2}});
    EXPECT_FALSE(r.ok());
    EXPECT_TRUE(has(r, ViolationKind::TooFewPartitions));
}

TEST(Validate, ReportsEveryViolatedInvariant) {
    auto r = validate({{{1, 1, 1, 1}, {2, 2, 1}}, {2, 2}});
    EXPECT_FALSE(r.ok());
    EXPECT_TRUE(has(r, ViolationKind::TrivialPartition));
    EXPECT_TRUE(has(r, ViolationKind::SumMismatch));
    EXPECT_TRUE(has(r, ViolationKind::RHViolation));
}

TEST(Validate, RejectsRiemannHurwitzFailure) {
    auto r = validate({{{2, 2}, {2, 2}, {2, 2}}, {2, 2}});
    EXPECT_FALSE(r.ok());
    EXPECT_EQ(kinds(r), std::vector<ViolationKind>{ViolationKind::RHViolation});
}

TEST(Validate, RejectsNonPositiveParts) {
    auto r = validate({{{2, 2}, {4, 0}}, {3, 1}});
    EXPECT_FALSE(r.ok());
    EXPECT_TRUE(has(r, ViolationKind::NonPositivePart));
}

TEST(Canonicalize, OrdersByNontrivialCountAndRecordsTheSwap) {
    auto p = make_passport({{1, 3}, {2, 2}}, {2, 2});
    auto [c, rel] = canonicalize(p);
    EXPECT_EQ(c.colored(0), (Partition{2, 2}));
    EXPECT_EQ(c.colored(1), (Partition{1, 3}));
    EXPECT_EQ(c.s(), 2);
    EXPECT_EQ(rel.perm, (std::vector<int>{1, 0}));
    EXPECT_EQ(apply_relabeling(c, rel), p);
}

TEST(Canonicalize, CanonicalInputGivesIdentity) {
    auto p = make_passport({{2, 2}, {1, 3}}, {2, 2});
    auto [c, rel] = canonicalize(p);
    EXPECT_TRUE(rel.is_identity());
    EXPECT_EQ(c, p);
}

TEST(Canonicalize, FaceStoresSmallerPartFirst) {
    auto p = make_passport({{2, 2}, {2, 2}}, {3, 1});
    EXPECT_EQ(p.face().parts(), (std::vector<int>{1, 3}));
    EXPECT_EQ(p.s(), 1);
}

TEST(Canonicalize, TiesBreakOnDecreasingPartList) {
    auto p = make_passport({{1, 1, 1, 2}, {1, 1, 3}, {1, 2, 2}}, {1, 4});
    auto [c, rel] = canonicalize(p);
    EXPECT_EQ(c.colored(0), (Partition{1, 2, 2}));
    EXPECT_EQ(c.colored(1), (Partition{1, 1, 3}));
    EXPECT_EQ(c.colored(2), (Partition{1, 1, 1, 2}));
    EXPECT_EQ(rel.perm, (std::vector<int>{2, 1, 0}));
    EXPECT_TRUE(is_canonical(c));
}

TEST(Derived, CountsAndNontrivialParts) {
    auto d = derived(make_passport({{2, 2}, {1, 3}}, {2, 2}));
    EXPECT_EQ(d.q[0], 2);
    EXPECT_EQ(d.e[0], 0);
    EXPECT_EQ(d.b[0], (std::vector<int>{2, 2}));

    auto d2 = derived(make_passport({{1, 1, 3, 3}, {2, 2, 2, 2}}, {4, 4}));
    EXPECT_EQ(d2.q[0], 2);
    EXPECT_EQ(d2.e[0], 2);
    EXPECT_EQ(d2.b[0], (std::vector<int>{3, 3}));
}

TEST(Derived, MixedPartitionFromNineStarDatum) {
    Partition g{1, 2, 3, 3};
    EXPECT_EQ(static_cast<int>(g.nontrivial().size()), 3);
    EXPECT_EQ(g.ones(), 1);
    EXPECT_EQ(g.nontrivial(), (std::vector<int>{2, 3, 3}));
}

TEST(GopSides, AllTwosGiveZero) {
    auto [l, r] = gop_sides(make_passport({{2, 2}, {2, 2}}, {2, 2}));
    EXPECT_EQ(l, 0);
    EXPECT_EQ(r, 0);
}

TEST(GopSides, HandEvaluatedExamples) {
    auto [l1, r1] = gop_sides(make_passport({{1, 2, 2}, {2, 3}}, {1, 4}));
    EXPECT_EQ(l1, 1);
    EXPECT_EQ(r1, 1);
    auto [l2, r2] = gop_sides(make_passport({{2, 2, 2}, {1, 2, 3}}, {3, 3}));
    EXPECT_EQ(l2, 1);
    EXPECT_EQ(r2, 1);
}

TEST(Enumerate, DegreeFourThreePoints) {
    auto all = enumerate_passports(4, 3);
    ASSERT_EQ(all.size(), 8U);
    std::set<support::PassportKey> got;
    for (const auto& p : all) got.insert(key_of(p));
    std::set<support::PassportKey> want;
    for (auto pair : std::vector<std::vector<support::Parts>>{
             {{4}, {1, 1, 2}}, {{1, 3}, {1, 3}}, {{1, 3}, {2, 2}}, {{2, 2}, {2, 2}}})
        for (support::Parts face : {support::Parts{1, 3}, support::Parts{2, 2}}) {
            auto k = pair;
            std::sort(k.begin(), k.end());
            k.push_back(face);
            want.insert(k);
        }
    EXPECT_EQ(got, want);
}

TEST(Enumerate, DegreeTwoIsEmpty) { EXPECT_TRUE(enumerate_passports(2, 3).empty()); }

TEST(Enumerate, DegreeThreeFourPointsHasOne) {
    auto all = enumerate_passports(3, 4);
    ASSERT_EQ(all.size(), 1U);
    EXPECT_EQ(key_of(all[0]), (support::PassportKey{{1, 2}, {1, 2}, {1, 2}, {1, 2}}));
}

TEST(Enumerate, MatchesBruteForceAndIsDeterministic) {
    for (int q = 3; q <= 5; ++q)
        for (int n = 2; n <= 10; ++n) {
            auto all = enumerate_passports(n, q);
            std::set<support::PassportKey> got;
            for (const auto& p : all) got.insert(key_of(p));
            EXPECT_EQ(got.size(), all.size()) << "duplicates at n=" << n << " q=" << q;
            EXPECT_EQ(got, support::passports(n, q)) << "n=" << n << " q=" << q;
            EXPECT_EQ(enumerate_passports(n, q), all);
        }
}

TEST(Properties, EnumeratedPassportsValidateAndSatisfyTheBranchIdentity) {
    for (int q = 3; q <= 5; ++q)
        for (int n = 2; n <= 10; ++n)
            for (const auto& p : enumerate_passports(n, q)) {
                RawPassport raw;
                for (const auto& c : p.colored()) raw.colored.push_back(c.parts());
                raw.face = p.face().parts();
                EXPECT_TRUE(validate(raw).ok());
                auto [c, rel] = canonicalize(p);
                auto [lhs, rhs] = gop_sides(c);
                EXPECT_EQ(lhs, rhs);
                auto d = derived(c);
                for (int i = 0; i < c.r(); ++i) {
                    EXPECT_EQ(d.e[static_cast<std::size_t>(i)] + d.q[static_cast<std::size_t>(i)], c.colored(i).count());
                    EXPECT_EQ(d.e[static_cast<std::size_t>(i)] + std::accumulate(d.b[static_cast<std::size_t>(i)].begin(), d.b[static_cast<std::size_t>(i)].end(), 0), n);
                }
            }
}

TEST(Properties, CanonicalizeIsIdempotentAndRoundTrips) {
    std::mt19937 rng(7);
    for (int q = 3; q <= 5; ++q)
        for (int n = 3; n <= 8; ++n)
            for (const auto& p : enumerate_passports(n, q)) {
                auto colored = p.colored();
                std::shuffle(colored.begin(), colored.end(), rng);
                auto shuffled = make_passport(colored, p.face());
                auto [c, rel] = canonicalize(shuffled);
                EXPECT_TRUE(is_canonical(c));
                EXPECT_EQ(apply_relabeling(c, rel), shuffled);
                auto [c2, rel2] = canonicalize(c);
                EXPECT_EQ(c2, c);
                EXPECT_TRUE(rel2.is_identity());
            }
}

TEST(Properties, NontrivialPartsDetermineThePassport) {
    // equal r and equal b rows force equal passports, pooled over all n
    std::map<std::pair<int, std::vector<std::vector<int>>>, std::vector<LaurentPassport>> groups;
    for (int q = 3; q <= 5; ++q)
        for (int n = 2; n <= 10; ++n)
            for (const auto& p : enumerate_passports(n, q)) {
                auto [c, rel] = canonicalize(p);
                auto d = derived(c);
                groups[{c.r(), d.b}].push_back(c);
            }
    for (const auto& [key, ps] : groups) {
        std::set<std::vector<Partition>> colored;
        for (const auto& p : ps) colored.insert(p.colored());
        EXPECT_EQ(colored.size(), 1U);
    }
}
