#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "algcat/errors.hpp"
#include "algcat/permcore.hpp"

using namespace algcat;

namespace {

Perm random_perm(int n, std::mt19937& rng) {
    std::vector<Point> v(n);
    std::iota(v.begin(), v.end(), 0);
    std::shuffle(v.begin(), v.end(), rng);
    return Perm(v);
}

}  // namespace

TEST(Perm, RejectsNonBijections) {
    EXPECT_THROW(Perm({0, 0, 1}), DomainError);
    EXPECT_THROW(Perm({0, 3, 1}), DomainError);
    EXPECT_THROW(Perm({-1, 0}), DomainError);
}

TEST(Perm, ApplyOutOfRangeThrows) {
    const Perm p({1, 2, 0});
    EXPECT_EQ(p(0), 1);
    EXPECT_EQ(apply(p, 2), 0);
    EXPECT_THROW(p(3), DomainError);
}

TEST(Perm, ComposeAppliesRightFactorFirst) {
    // (p o q)(x) = p(q(x))
    EXPECT_EQ(compose(Perm({0, 2, 1}), Perm({1, 0, 2})), Perm({2, 0, 1}));
    EXPECT_EQ(compose(Perm({1, 0, 2}), Perm({0, 2, 1})), Perm({1, 2, 0}));
}

TEST(Perm, ComposeDegreeMismatchThrows) {
    EXPECT_THROW(compose(Perm({0, 1}), Perm({0, 1, 2})), DomainError);
}

TEST(Perm, InverseFrozen) {
    EXPECT_EQ(inverse(Perm({1, 0, 3, 4, 2})), Perm({1, 0, 4, 2, 3}));
}

TEST(Perm, InvolutionsAndFixpoints) {
    EXPECT_TRUE(is_involution(Perm({1, 0, 2})));
    EXPECT_FALSE(is_involution(Perm({1, 2, 0})));
    EXPECT_FALSE(is_involution(Perm::identity(3)));
    EXPECT_EQ(fixpoints(Perm({1, 0, 2})), std::vector<Point>{2});
    EXPECT_TRUE(fixpoints(Perm({1, 0, 3, 2})).empty());
}

TEST(Perm, ToString) { EXPECT_EQ(to_string(Perm({2, 0, 1})), "[2,0,1]"); }

TEST(PermProperty, GroupLawsOnRandomPermutations) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + trial % 9;
        const Perm p = random_perm(n, rng), q = random_perm(n, rng), r = random_perm(n, rng);
        EXPECT_EQ(compose(compose(p, q), r), compose(p, compose(q, r)));
        EXPECT_EQ(inverse(inverse(p)), p);
        EXPECT_TRUE(compose(p, inverse(p)).is_identity());
        EXPECT_EQ(compose(Perm::identity(n), p), p);
        EXPECT_EQ(inverse(compose(p, q)), compose(inverse(q), inverse(p)));
    }
}

TEST(PermSet, SortedAndDeduplicated) {
    const PermSet s({Perm({1, 0, 2}), Perm({0, 1, 2}), Perm({1, 0, 2})});
    ASSERT_EQ(s.size(), 2u);
    EXPECT_EQ(s[0], Perm::identity(3));
    EXPECT_EQ(s.index_of(Perm({1, 0, 2})), 1u);
    EXPECT_FALSE(s.contains(Perm({2, 1, 0})));
}

TEST(PermSet, MixedDegreesThrow) {
    EXPECT_THROW(PermSet({Perm({0, 1}), Perm({0, 1, 2})}), DomainError);
}

TEST(Closure, SymmetricGroupS3) {
    const auto g = closure(PermSet({Perm({1, 2, 0}), Perm({1, 0, 2})}));
    EXPECT_EQ(g.size(), 6u);
    EXPECT_TRUE(is_subgroup(g));
}

TEST(Closure, CyclicAndS4) {
    EXPECT_EQ(closure(PermSet({Perm({1, 2, 3, 4, 0})})).size(), 5u);
    EXPECT_EQ(closure(PermSet({Perm({1, 2, 3, 0}), Perm({1, 0, 2, 3})})).size(), 24u);
}

TEST(Closure, CapExceededThrows) {
    EXPECT_THROW(closure(PermSet({Perm({1, 2, 3, 0}), Perm({1, 0, 2, 3})}), 10), ResourceError);
}

TEST(Closure, Idempotent) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + trial % 5;
        const auto g = closure(PermSet({random_perm(n, rng), random_perm(n, rng)}));
        EXPECT_EQ(closure(g), g);
        EXPECT_TRUE(is_subgroup(g));
    }
}

TEST(IsSubgroup, RejectsNonClosedSets) {
    EXPECT_FALSE(is_subgroup(PermSet({Perm({0, 1, 2}), Perm({1, 2, 0})})));
    EXPECT_FALSE(is_subgroup(PermSet({Perm({1, 0, 2})})));
}
