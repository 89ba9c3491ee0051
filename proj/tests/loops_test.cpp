#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "algcat/loops.hpp"
#include "algcat/rps.hpp"

using namespace algcat;

namespace {

const std::vector<std::vector<int>> kNonAssoc5 = {
    {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};

Loop klein() { return check_loop({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}, 0); }

// Every map src -> tgt, filtered by the defining equation.
std::vector<ElementMap> brute_force_homs(const Loop& s, const Loop& t) {
    std::vector<ElementMap> out;
    ElementMap f(s.order(), 0);
    while (true) {
        if (is_loop_morphism(f, s, t)) out.push_back(f);
        int i = s.order() - 1;
        while (i >= 0 && f[i] == t.order() - 1) f[i--] = 0;
        if (i < 0) break;
        ++f[i];
    }
    return out;
}

// Reduced Latin squares of order n with identity 0, by plain recursion.
void all_reduced(int n, std::vector<int>& t, int cell, std::vector<Loop>& out) {
    if (cell == n * n) {
        out.push_back(check_loop(t, n, 0));
        return;
    }
    const int r = cell / n, c = cell % n;
    if (r == 0 || c == 0) {
        t[cell] = r == 0 ? c : r;
        all_reduced(n, t, cell + 1, out);
        return;
    }
    for (int v = 0; v < n; ++v) {
        bool ok = true;
        for (int k = 0; k < c && ok; ++k) ok = t[r * n + k] != v;
        for (int k = 0; k < r && ok; ++k) ok = t[k * n + c] != v;
        if (!ok) continue;
        t[cell] = v;
        all_reduced(n, t, cell + 1, out);
    }
}

std::size_t brute_force_iso_classes(int n) {
    std::vector<Loop> squares;
    std::vector<int> t(n * n, 0);
    all_reduced(n, t, 0, squares);
    std::vector<Loop> reps;
    for (const auto& l : squares) {
        const bool seen = std::any_of(reps.begin(), reps.end(),
                                      [&](const Loop& r) { return loops_isomorphic(l, r).has_value(); });
        if (!seen) reps.push_back(l);
    }
    return reps.size();
}

}  // namespace

TEST(Loop, RejectsRepeatedRowEntry) {
    try {
        check_loop({{0, 1, 2}, {1, 1, 0}, {2, 0, 1}}, 0);
        FAIL() << "accepted a non-Latin square";
    } catch (const LatinSquareViolation& e) {
        EXPECT_FALSE(e.witness().empty());
    }
}

TEST(Loop, RejectsMissingIdentity) {
    // Latin, but 0 is not two-sided neutral.
    EXPECT_THROW(check_loop({{1, 0, 2}, {0, 2, 1}, {2, 1, 0}}, 0), IdentityViolation);
    EXPECT_THROW(check_loop({{0, 1}, {1, 0}}, 2), std::exception);
}

TEST(Loop, NonIdentityNeutralElement) {
    // a * b = a + b + 1 mod 3, neutral element 2
    const Loop l = check_loop({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}}, 2);
    EXPECT_EQ(l.identity(), 2);
    EXPECT_TRUE(is_associative(l));
}

TEST(Loop, CyclicGroupsAreAssociative) {
    for (int n = 1; n <= 7; ++n) EXPECT_TRUE(is_associative(cyclic_loop(n))) << n;
}

TEST(Loop, NonAssociativeOrderFiveWitness) {
    const Loop l = check_loop(kNonAssoc5, 0);
    EXPECT_FALSE(is_associative(l));
    const auto w = associativity_witness(l);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(*w, (std::vector<int>{1, 1, 2}));
    const int a = (*w)[0], b = (*w)[1], c = (*w)[2];
    EXPECT_NE(l(l(a, b), c), l(a, l(b, c)));
}

TEST(LoopMorphism, FrozenCounts) {
    EXPECT_EQ(enumerate_loop_morphisms(cyclic_loop(2), cyclic_loop(2)).size(), 2u);
    EXPECT_EQ(enumerate_loop_morphisms(cyclic_loop(3), cyclic_loop(2)).size(), 1u);
    EXPECT_FALSE(is_loop_morphism({0, 1}, cyclic_loop(2), cyclic_loop(3)));
    EXPECT_EQ(enumerate_loop_morphisms(cyclic_loop(4), cyclic_loop(2)).size(), 2u);
    EXPECT_EQ(enumerate_loop_morphisms(klein(), klein()).size(), 16u);
}

TEST(LoopMorphism, AgreesWithBruteForce) {
    std::vector<Loop> ls;
    for (int n = 1; n <= 4; ++n) ls.push_back(cyclic_loop(n));
    ls.push_back(klein());
    ls.push_back(check_loop(kNonAssoc5, 0));
    for (const auto& s : ls)
        for (const auto& t : ls) EXPECT_EQ(enumerate_loop_morphisms(s, t), brute_force_homs(s, t));
}

TEST(LoopIso, CyclicFourIsNotKlein) {
    EXPECT_FALSE(loops_isomorphic(cyclic_loop(4), klein()).has_value());
    EXPECT_TRUE(loops_isomorphic(klein(), klein()).has_value());
}

TEST(LoopIso, RelabelingIsAnIsomorphism) {
    const Loop l = check_loop(kNonAssoc5, 0);
    const ElementMap pi{3, 0, 4, 1, 2};
    const Loop r = relabel(l, pi);
    EXPECT_EQ(r.identity(), 3);
    EXPECT_TRUE(is_loop_morphism(pi, l, r));
    EXPECT_TRUE(loops_isomorphic(l, r).has_value());
    EXPECT_THROW(canonical_form(r), PreconditionError);
    const Loop fixed = relabel(l, {0, 3, 4, 1, 2});
    EXPECT_EQ(canonical_form(l), canonical_form(fixed));
}

TEST(LoopEnumeration, FrozenCounts) {
    const std::size_t expected[] = {1, 1, 1, 2, 6, 109};
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(enumerate_loops(n).size(), expected[n - 1]) << n;
}

TEST(LoopEnumeration, AgreesWithPairwiseIsomorphismOracle) {
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(enumerate_loops(n).size(), brute_force_iso_classes(n)) << n;
}

TEST(LoopEnumeration, CapEnforced) { EXPECT_THROW(enumerate_loops(7), ResourceError); }

TEST(LoopEnumeration, RepresentativesPairwiseNonIsomorphic) {
    const auto ls = enumerate_loops(5);
    for (std::size_t i = 0; i < ls.size(); ++i)
        for (std::size_t j = i + 1; j < ls.size(); ++j) EXPECT_FALSE(loops_isomorphic(ls[i], ls[j]).has_value());
}

TEST(LeftTranslation, RowsAreRegular) {
    const Loop l = check_loop(kNonAssoc5, 0);
    const Rps r = loop_to_rps(l);
    EXPECT_EQ(r.members().size(), 5u);
    for (int a = 0; a < 5; ++a) {
        EXPECT_TRUE(r.members().contains(left_translation(l, a)));
        EXPECT_EQ(left_translation(l, a)(0), a);
    }
}
