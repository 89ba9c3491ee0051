#include <gtest/gtest.h>

#include "algcat/neardomain.hpp"
#include "algcat/s2t.hpp"

using namespace algcat;

namespace {

const int kOrders[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16};

int axiom_of(const std::vector<int>& add, const std::vector<int>& mul, int n) {
    try {
        check_neardomain(add, mul, n, 0, 1);
    } catch (const AxiomViolation& e) {
        return e.axiom();
    }
    return 0;
}

// x -> x^3 on GF(3)[t]/(t^2+1), elements a+3b for a+bt.
ElementMap frobenius9() {
    ElementMap phi(9);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) phi[a + 3 * b] = a + 3 * ((3 - b) % 3);
    return phi;
}

}  // namespace

TEST(GaloisField, GF2IsXorAnd) {
    const Neardomain f = galois_field(2);
    EXPECT_EQ(f.add_table(), (std::vector<int>{0, 1, 1, 0}));
    EXPECT_EQ(f.mul_table(), (std::vector<int>{0, 0, 0, 1}));
}

TEST(GaloisField, GF3IsIntegersMod3) {
    const Neardomain f = galois_field(3);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            EXPECT_EQ(f.add(a, b), (a + b) % 3);
            EXPECT_EQ(f.mul(a, b), (a * b) % 3);
        }
}

TEST(GaloisField, GF9UsesTSquaredPlusOne) {
    const Neardomain f = galois_field(9);
    EXPECT_EQ(f.mul(3, 3), 2);  // t*t = -1
    EXPECT_EQ(f.add(4, 5), 6);  // (1+t)+(2+t) = 2t
}

TEST(GaloisField, UnsupportedOrders) {
    EXPECT_THROW(galois_field(6), DomainError);
    EXPECT_THROW(galois_field(32), DomainError);
}

TEST(GaloisField, AllAreCommutativeNearfields) {
    for (int q : kOrders) {
        const Neardomain f = galois_field(q);
        EXPECT_TRUE(is_nearfield(f)) << q;
        EXPECT_EQ(characteristic_two(f), (q % 2 == 0)) << q;
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) EXPECT_EQ(f.mul(a, b), f.mul(b, a));
    }
}

TEST(CheckNeardomain, CorruptedMultiplicationIsAxiom3) {
    const Neardomain f = galois_field(3);
    auto mul = f.mul_table();
    mul[1 * 3 + 2] = 0;
    EXPECT_EQ(axiom_of(f.add_table(), mul, 3), 3);
}

TEST(CheckNeardomain, NonLatinAdditionIsAxiom1) {
    const Neardomain f = galois_field(3);
    auto add = f.add_table();
    add[1 * 3 + 1] = 1;
    EXPECT_EQ(axiom_of(add, f.mul_table(), 3), 1);
}

TEST(CheckNeardomain, ZeroTimesSomethingIsAxiom4) {
    const Neardomain f = galois_field(3);
    auto mul = f.mul_table();
    mul[0 * 3 + 1] = 1;
    EXPECT_EQ(axiom_of(f.add_table(), mul, 3), 4);
}

TEST(CheckNeardomain, RightArgumentTwistBreaksLeftDistributivity) {
    // The twist by the class of the right factor gives a right nearfield.
    const Neardomain gf9 = galois_field(9);
    std::vector<int> mul(81);
    auto is_square = [&](int y) {
        for (int x = 1; x < 9; ++x)
            if (gf9.mul(x, x) == y) return true;
        return false;
    };
    for (int x = 0; x < 9; ++x)
        for (int y = 0; y < 9; ++y)
            mul[x * 9 + y] = is_square(y) || y == 0 ? gf9.mul(x, y) : gf9.mul(gf9.mul(gf9.mul(x, x), x), y);
    EXPECT_EQ(axiom_of(gf9.add_table(), mul, 9), 5);
}

TEST(CheckNeardomain, OrderOneRejected) { EXPECT_THROW(check_neardomain({0}, {0}, 1, 0, 0), DomainError); }

TEST(DCoeff, AllOneOnNearfields) {
    std::vector<Neardomain> fs;
    for (int q : kOrders) fs.push_back(galois_field(q));
    fs.push_back(dickson_nearfield_9());
    for (const auto& f : fs)
        for (int a = 0; a < f.order(); ++a)
            for (int b = 0; b < f.order(); ++b) EXPECT_EQ(d_coeff(f, a, b), f.one());
}

TEST(Dickson9, IsAProperNearfield) {
    const Neardomain d = dickson_nearfield_9();
    EXPECT_TRUE(is_nearfield(d));
    EXPECT_FALSE(characteristic_two(d));
    EXPECT_EQ(d.add_table(), galois_field(9).add_table());
    bool commutative = true;
    for (int a = 0; a < 9; ++a)
        for (int b = 0; b < 9; ++b) commutative = commutative && d.mul(a, b) == d.mul(b, a);
    EXPECT_FALSE(commutative);
}

TEST(Dickson9, OneIsNeutralAndMultiplicationAssociative) {
    const Neardomain d = dickson_nearfield_9();
    for (int y = 0; y < 9; ++y) {
        EXPECT_EQ(d.mul(1, y), y);
        EXPECT_EQ(d.mul(y, 1), y);
    }
    for (int a = 1; a < 9; ++a)
        for (int b = 1; b < 9; ++b)
            for (int c = 1; c < 9; ++c) EXPECT_EQ(d.mul(d.mul(a, b), c), d.mul(a, d.mul(b, c)));
}

TEST(Dickson9, NotIsomorphicToGF9) {
    const Neardomain d = dickson_nearfield_9(), f = galois_field(9);
    EXPECT_TRUE(enumerate_nd_morphisms(d, f).empty());
    EXPECT_TRUE(enumerate_nd_morphisms(f, d).empty());
}

TEST(NdMorphism, FrozenExamples) {
    EXPECT_TRUE(is_nd_morphism({0, 1, 2}, galois_field(3), galois_field(3)));
    EXPECT_FALSE(is_nd_morphism({0, 1}, galois_field(2), galois_field(3)));
    EXPECT_TRUE(enumerate_nd_morphisms(galois_field(2), galois_field(3)).empty());
    EXPECT_EQ(enumerate_nd_morphisms(galois_field(3), galois_field(3)), (std::vector<ElementMap>{{0, 1, 2}}));
}

TEST(NdMorphism, GF9AutomorphismsAreIdentityAndFrobenius) {
    const auto homs = enumerate_nd_morphisms(galois_field(9), galois_field(9));
    ASSERT_EQ(homs.size(), 2u);
    EXPECT_EQ(homs[0], (ElementMap{0, 1, 2, 3, 4, 5, 6, 7, 8}));
    EXPECT_EQ(homs[1], frobenius9());
}

TEST(NdMorphism, PrimeSubfieldEmbedding) {
    const auto homs = enumerate_nd_morphisms(galois_field(3), galois_field(9));
    ASSERT_EQ(homs.size(), 1u);
    EXPECT_EQ(homs[0], (ElementMap{0, 1, 2}));
}

TEST(NdMorphism, SubfieldsOfGF16) {
    EXPECT_EQ(enumerate_nd_morphisms(galois_field(4), galois_field(16)).size(), 2u);
    EXPECT_TRUE(enumerate_nd_morphisms(galois_field(8), galois_field(16)).empty());
    EXPECT_EQ(enumerate_nd_morphisms(galois_field(16), galois_field(16)).size(), 4u);
}

TEST(NdMorphism, RelabelingIsAnIsomorphism) {
    const Neardomain d = dickson_nearfield_9();
    const ElementMap pi{4, 7, 1, 0, 8, 2, 6, 3, 5};
    const Neardomain r = relabel(d, pi);
    EXPECT_EQ(r.zero(), 4);
    EXPECT_EQ(r.one(), 7);
    EXPECT_TRUE(is_nd_morphism(pi, d, r));
    EXPECT_FALSE(enumerate_nd_morphisms(d, r).empty());
}

TEST(Affine, ParametersRoundTrip) {
    const Neardomain d = dickson_nearfield_9();
    for (int a = 0; a < 9; ++a)
        for (int b = 1; b < 9; ++b) {
            const AffineMap m = affine_map(d, a, b);
            for (int x = 0; x < 9; ++x) EXPECT_EQ(m.as_perm(x), d.add(a, d.mul(b, x)));
            EXPECT_EQ(affine_parameters(d, m.as_perm), std::make_pair(a, b));
        }
    EXPECT_THROW(affine_map(d, 0, 0), DomainError);
}

TEST(T2, GroupOrders) {
    for (int q : kOrders) EXPECT_EQ(t2_group(galois_field(q)).size(), static_cast<std::size_t>(q * (q - 1))) << q;
    EXPECT_EQ(t2_group(dickson_nearfield_9()).size(), 72u);
}

TEST(T2, GF3IsS3) {
    const auto g = t2_group(galois_field(3));
    EXPECT_EQ(g.group(), closure(PermSet({Perm({1, 2, 0}), Perm({1, 0, 2})})));
    EXPECT_EQ(g.omega0(), 0);
    EXPECT_EQ(g.omega1(), 1);
}

TEST(FunctorL, IdentityAndEmbedding) {
    const Neardomain f3 = galois_field(3), f9 = galois_field(9);
    const S2tGroup g3 = t2_group(f3), g9 = t2_group(f9);
    EXPECT_EQ(functor_L_mor({0, 1, 2}, f3, f3), identity_morphism(g3));
    const S2tMorphism m = functor_L_mor({0, 1, 2}, f3, f9);
    EXPECT_TRUE(is_s2t_morphism(m, g3, g9));
    for (std::size_t i = 0; i < g3.size(); ++i) {
        const auto [a, b] = affine_parameters(f3, g3.element(i));
        EXPECT_EQ(affine_parameters(f9, g9.element(m.f[i])), std::make_pair(m.phi[a], m.phi[b]));
    }
}

TEST(FunctorL, RejectsNonMorphism) {
    EXPECT_THROW(functor_L_mor({0, 2, 1}, galois_field(3), galois_field(9)), PreconditionError);
}
