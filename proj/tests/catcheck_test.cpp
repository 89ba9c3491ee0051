#include <gtest/gtest.h>

#include "algcat/catcheck.hpp"

using namespace algcat;

namespace {

template <class T>
const Named<T>& find(const std::vector<Named<T>>& xs, const std::string& id) {
    for (const auto& x : xs)
        if (x.id == id) return x;
    throw std::out_of_range(id);
}

}  // namespace

TEST(Zoo, Contents) {
    const Zoo& zoo = standard_zoo();
    EXPECT_EQ(zoo.loops.size(), 11u);
    EXPECT_EQ(zoo.neardomains.size(), 8u);
    EXPECT_GE(zoo.groups.size(), 12u);
    EXPECT_EQ(find(zoo.groups, "S3'").value.size(), 6u);
    EXPECT_EQ(find(zoo.neardomains, "D9").value, dickson_nearfield_9());
}

TEST(FunctorLaws, HoldForF) { EXPECT_TRUE(check_functor_laws(FunctorId::F, standard_zoo()).pass); }
TEST(FunctorLaws, HoldForK) { EXPECT_TRUE(check_functor_laws(FunctorId::K, standard_zoo(), 9).pass); }
TEST(FunctorLaws, HoldForL) { EXPECT_TRUE(check_functor_laws(FunctorId::L, standard_zoo(), 9).pass); }

TEST(FunctorLaws, DetectsABrokenIdentity) {
    auto fd = functor_F_data();
    fd.map_mor = [](const RpsMorphism& m, const Rps&, const Rps&) {
        ElementMap phi = m.phi;
        if (phi.size() > 1) std::swap(phi[0], phi[1]);
        return phi;
    };
    const Verdict v = check_functor_laws("broken F", standard_zoo().rps, fd);
    EXPECT_FALSE(v.pass);
    EXPECT_FALSE(v.witness.empty());
}

TEST(FunctorLaws, DetectsABrokenComposition) {
    auto fd = functor_F_data();
    fd.target_compose = [](const ElementMap& second, const ElementMap&) { return second; };
    std::vector<Named<Rps>> objs{{"Z2", loop_to_rps(cyclic_loop(2))}, {"Z4", loop_to_rps(cyclic_loop(4))}};
    EXPECT_FALSE(check_functor_laws("broken F", objs, fd).pass);
}

TEST(FullFaithful, FBijectsOnZooPairs) {
    const auto& rps = standard_zoo().rps;
    for (const auto& r : rps)
        for (const auto& s : rps) {
            const HomSetReport h = check_full_faithful_F(r, s);
            EXPECT_TRUE(h.bijection) << r.id << " -> " << s.id << ": " << h.witness;
            EXPECT_EQ(h.source_count, h.target_count);
        }
}

TEST(FullFaithful, FrozenHomCounts) {
    const Zoo& zoo = standard_zoo();
    const auto gf2 = find(zoo.neardomains, "GF2"), gf3 = find(zoo.neardomains, "GF3"), gf9 = find(zoo.neardomains, "GF9");
    EXPECT_EQ(check_full_faithful_L(gf2, gf3).source_count, 0u);
    EXPECT_EQ(check_full_faithful_L(gf9, gf9).source_count, 2u);
    EXPECT_EQ(check_full_faithful_L(gf3, gf9).target_count, 1u);
    const auto k = check_full_faithful_K(find(zoo.groups, "T2(GF4)"), find(zoo.groups, "T2(GF4)'"));
    EXPECT_TRUE(k.bijection);
    EXPECT_EQ(k.source_count, 2u);
}

TEST(FullFaithful, CompareHomsetsDetectsNonInjectiveMap) {
    const std::vector<ElementMap> source{{0, 1}, {1, 0}}, target{{0, 1}, {1, 0}};
    const auto h = compare_homsets("a", "b", source, target, [](const ElementMap&) { return ElementMap{0, 1}; });
    EXPECT_FALSE(h.bijection);
    EXPECT_FALSE(h.witness.empty());
}

TEST(RoundTrip, AllZooObjects) {
    const Zoo& zoo = standard_zoo();
    for (const auto& l : zoo.loops) EXPECT_TRUE(check_roundtrip_F(l).pass) << l.id;
    for (const auto& f : zoo.neardomains) EXPECT_TRUE(check_roundtrip_KL(f).pass) << f.id;
    for (const auto& g : zoo.groups) EXPECT_TRUE(check_roundtrip_LK(g).pass) << g.id;
}

TEST(Naturality, GF3IntoGF9) {
    const Zoo& zoo = standard_zoo();
    const auto& g = find(zoo.groups, "T2(GF3)");
    const auto& h = find(zoo.groups, "T2(GF9)");
    const auto homs = enumerate_s2t_morphisms(g.value, h.value);
    ASSERT_EQ(homs.size(), 1u);
    EXPECT_TRUE(check_naturality(homs[0], g, h).pass);
}

TEST(NearfieldCriterion, DetectsAWrongASet) {
    const auto& g = find(standard_zoo().groups, "T2(GF5)");
    EXPECT_TRUE(check_nearfield_criterion(g, set_A(g.value).members()).pass);
    std::vector<Perm> bad = set_A(g.value).members().members();
    bad.pop_back();
    EXPECT_FALSE(check_nearfield_criterion(g, PermSet(5, bad)).pass);
}

TEST(IsomorphismReflection, RelabeledAndDistinct) {
    const Zoo& zoo = standard_zoo();
    EXPECT_TRUE(check_isomorphism_reflection(find(zoo.groups, "T2(GF3)"), find(zoo.groups, "S3'")).pass);
    EXPECT_TRUE(check_isomorphism_reflection(find(zoo.groups, "T2(GF9)"), find(zoo.groups, "T2(D9)")).pass);
}

TEST(CharacteristicCoherence, AllZooGroups) {
    for (const auto& g : standard_zoo().groups) EXPECT_TRUE(check_characteristic_coherence(g).pass) << g.id;
}

TEST(Acceptance, EveryCriterionPassesWithWitnessText) {
    const auto verdicts = run_acceptance(standard_zoo());
    ASSERT_EQ(verdicts.size(), 10u);
    for (const auto& v : verdicts) EXPECT_TRUE(v.pass) << v.name << ": " << v.witness;
}
