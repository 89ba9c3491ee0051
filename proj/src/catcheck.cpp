#include "algcat/catcheck.hpp"

#include <numeric>
#include <random>
#include <set>

namespace algcat {

std::string describe(const ElementMap& m) { return detail::map_str(m); }

std::string describe(const RpsMorphism& m) {
    return "(f=" + detail::map_str(m.f) + ", phi=" + detail::map_str(m.phi) + ")";
}

std::string describe(const S2tMorphism& m) {
    return "(f=" + detail::map_str(m.f) + ", phi=" + detail::map_str(m.phi) + ")";
}

const char* to_string(FunctorId id) {
    switch (id) {
        case FunctorId::F: return "F";
        case FunctorId::K: return "K";
        case FunctorId::L: return "L";
    }
    return "?";
}

namespace {

Zoo build_zoo() {
    Zoo z;
    for (int n = 1; n <= 5; ++n) {
        const auto loops = enumerate_loops(n);
        for (std::size_t i = 0; i < loops.size(); ++i)
            z.loops.push_back({"L" + std::to_string(n) + "." + std::to_string(i), loops[i]});
    }
    for (const auto& l : z.loops) z.rps.push_back({"rps(" + l.id + ")", loop_to_rps(l.value)});
    z.rps.push_back({"rps(L3.0)@1", relocate_basepoint(loop_to_rps(z.loops[2].value), 1)});
    for (const auto& l : z.loops)
        if (l.value.order() == 5 && !is_associative(l.value)) {
            z.rps.push_back({"rps(" + l.id + ")@2", relocate_basepoint(loop_to_rps(l.value), 2)});
            break;
        }

    for (int q : {2, 3, 4, 5, 7, 8, 9}) z.neardomains.push_back({"GF" + std::to_string(q), galois_field(q)});
    z.neardomains.push_back({"D9", dickson_nearfield_9()});

    for (const auto& f : z.neardomains) z.groups.push_back({"T2(" + f.id + ")", t2_group(f.value)});
    auto group = [&](const std::string& id) {
        for (const auto& g : z.groups)
            if (g.id == id) return g.value;
        throw AlgebraError("zoo has no group " + id);
    };
    z.groups.push_back({"S3'", relabel(group("T2(GF3)"), Perm({2, 0, 1}))});
    z.groups.push_back({"T2(GF4)'", relabel(group("T2(GF4)"), Perm({1, 3, 0, 2}))});
    z.groups.push_back({"T2(GF5)@3,1", with_base_points(group("T2(GF5)"), 3, 1)});
    z.groups.push_back({"T2(D9)'", relabel(group("T2(D9)"), Perm({4, 7, 1, 0, 8, 2, 6, 3, 5}))});
    return z;
}

ElementMap identity_map(int n) {
    ElementMap m(n);
    std::iota(m.begin(), m.end(), 0);
    return m;
}

ElementMap compose_maps(const ElementMap& second, const ElementMap& first) {
    ElementMap out;
    for (int x : first) out.push_back(second.at(x));
    return out;
}

bool injective(const ElementMap& m) { return std::set<int>(m.begin(), m.end()).size() == m.size(); }

Verdict fail(Verdict v, std::string witness, const detail::Stopwatch& clock) {
    v.pass = false;
    v.witness = std::move(witness);
    v.elapsed_ms = clock.ms();
    return v;
}

Verdict done(Verdict v, const detail::Stopwatch& clock) {
    v.elapsed_ms = clock.ms();
    return v;
}

std::string first_table_difference(const std::string& what, const std::vector<int>& a, const std::vector<int>& b,
                                   int n) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (a[i] != b[i])
            return what + " differs at (" + std::to_string(i / n) + "," + std::to_string(i % n) + "): " +
                   std::to_string(a[i]) + " vs " + std::to_string(b[i]);
    return what + " sizes differ";
}

}  // namespace

const Zoo& standard_zoo() {
    static const Zoo zoo = build_zoo();
    return zoo;
}

FunctorData<Rps, RpsMorphism, Loop, ElementMap> functor_F_data() {
    FunctorData<Rps, RpsMorphism, Loop, ElementMap> d;
    d.homs = [](const Rps& r, const Rps& s) { return enumerate_rps_morphisms_direct(r, s); };
    d.identity = [](const Rps& r) { return identity_morphism(r); };
    d.compose = [](const RpsMorphism& b, const RpsMorphism& a) { return compose(b, a); };
    d.map_obj = [](const Rps& r) { return functor_F_obj(r); };
    d.map_mor = [](const RpsMorphism& m, const Rps&, const Rps&) { return functor_F_mor(m); };
    d.target_identity = [](const Loop& l) { return identity_map(l.order()); };
    d.target_compose = compose_maps;
    d.valid = [](const ElementMap& phi, const Loop& a, const Loop& b) { return is_loop_morphism(phi, a, b); };
    return d;
}

FunctorData<S2tGroup, S2tMorphism, Neardomain, ElementMap> functor_K_data() {
    FunctorData<S2tGroup, S2tMorphism, Neardomain, ElementMap> d;
    d.homs = [](const S2tGroup& g, const S2tGroup& h) { return enumerate_s2t_morphisms(g, h); };
    d.identity = [](const S2tGroup& g) { return identity_morphism(g); };
    d.compose = [](const S2tMorphism& b, const S2tMorphism& a) { return compose(b, a); };
    d.map_obj = [](const S2tGroup& g) { return functor_K_obj(g); };
    // The image is validated against the precomputed K-objects by `valid`,
    // which is the content of functor_K_mor.
    d.map_mor = [](const S2tMorphism& m, const S2tGroup&, const S2tGroup&) { return m.phi; };
    d.target_identity = [](const Neardomain& f) { return identity_map(f.order()); };
    d.target_compose = compose_maps;
    d.valid = [](const ElementMap& phi, const Neardomain& a, const Neardomain& b) {
        return is_nd_morphism(phi, a, b);
    };
    return d;
}

FunctorData<Neardomain, ElementMap, S2tGroup, S2tMorphism> functor_L_data() {
    FunctorData<Neardomain, ElementMap, S2tGroup, S2tMorphism> d;
    d.homs = [](const Neardomain& a, const Neardomain& b) { return enumerate_nd_morphisms(a, b); };
    d.identity = [](const Neardomain& f) { return identity_map(f.order()); };
    d.compose = compose_maps;
    d.map_obj = [](const Neardomain& f) { return t2_group(f); };
    d.map_mor = [](const ElementMap& phi, const Neardomain& a, const Neardomain& b) {
        return functor_L_mor(phi, a, b);
    };
    d.target_identity = [](const S2tGroup& g) { return identity_morphism(g); };
    d.target_compose = [](const S2tMorphism& b, const S2tMorphism& a) { return compose(b, a); };
    d.valid = [](const S2tMorphism& m, const S2tGroup& g, const S2tGroup& h) { return is_s2t_morphism(m, g, h); };
    return d;
}

Verdict check_functor_laws(FunctorId id, const Zoo& zoo, int max_order) {
    const std::string name = std::string("functor laws of ") + to_string(id);
    switch (id) {
        case FunctorId::F: {
            std::vector<Named<Rps>> objs;
            for (const auto& r : zoo.rps)
                if (r.value.degree() <= max_order) objs.push_back(r);
            return check_functor_laws(name, objs, functor_F_data());
        }
        case FunctorId::K: return check_functor_laws(name, zoo.groups, functor_K_data());
        case FunctorId::L: return check_functor_laws(name, zoo.neardomains, functor_L_data());
    }
    throw DomainError("unknown functor");
}

HomSetReport check_full_faithful_F(const Named<Rps>& r, const Named<Rps>& s) {
    const auto source = enumerate_rps_morphisms_direct(r.value, s.value);
    const auto target = enumerate_loop_morphisms(induced_loop(r.value), induced_loop(s.value));
    auto report = compare_homsets(r.id, s.id, source, target, [](const RpsMorphism& m) { return functor_F_mor(m); });
    if (!report.bijection) return report;
    for (const auto& phi : target) {
        const RpsMorphism lifted = lift_loop_morphism(phi, r.value, s.value);
        if (functor_F_mor(lifted) != phi || !std::binary_search(source.begin(), source.end(), lifted)) {
            report.bijection = false;
            report.witness = "lift of " + describe(phi) + " is not its preimage";
            return report;
        }
    }
    return report;
}

HomSetReport check_full_faithful_K(const Named<S2tGroup>& g, const Named<S2tGroup>& h, int oracle_degree) {
    const bool direct = g.value.degree() <= oracle_degree && h.value.degree() <= oracle_degree;
    const auto source = direct ? enumerate_s2t_morphisms_direct(g.value, h.value, oracle_degree)
                               : enumerate_s2t_morphisms(g.value, h.value);
    const auto target = enumerate_nd_morphisms(functor_K_obj(g.value), functor_K_obj(h.value));
    return compare_homsets(g.id, h.id, source, target,
                           [&](const S2tMorphism& m) { return functor_K_mor(m, g.value, h.value); });
}

HomSetReport check_full_faithful_L(const Named<Neardomain>& a, const Named<Neardomain>& b, int oracle_degree) {
    const auto source = enumerate_nd_morphisms(a.value, b.value);
    const auto target = enumerate_s2t_morphisms_direct(t2_group(a.value), t2_group(b.value), oracle_degree);
    return compare_homsets(a.id, b.id, source, target,
                           [&](const ElementMap& phi) { return functor_L_mor(phi, a.value, b.value); });
}

Verdict check_roundtrip_F(const Named<Loop>& l) {
    detail::Stopwatch clock;
    Verdict v{"F round trip " + l.id};
    const Loop back = induced_loop(loop_to_rps(l.value));
    if (back.identity() != l.value.identity())
        return fail(v, "identity " + std::to_string(back.identity()) + " vs " + std::to_string(l.value.identity()),
                    clock);
    if (back != l.value)
        return fail(v, first_table_difference("table", back.table(), l.value.table(), l.value.order()), clock);
    return done(v, clock);
}

Verdict check_roundtrip_KL(const Named<Neardomain>& f) {
    detail::Stopwatch clock;
    Verdict v{"K(L(F)) = F for " + f.id};
    const Neardomain back = functor_K_obj(t2_group(f.value));
    const int n = f.value.order();
    if (back.zero() != f.value.zero() || back.one() != f.value.one())
        return fail(v, "constants (" + std::to_string(back.zero()) + "," + std::to_string(back.one()) + ") vs (" +
                           std::to_string(f.value.zero()) + "," + std::to_string(f.value.one()) + ")",
                    clock);
    if (back.add_table() != f.value.add_table())
        return fail(v, first_table_difference("addition", back.add_table(), f.value.add_table(), n), clock);
    if (back.mul_table() != f.value.mul_table())
        return fail(v, first_table_difference("multiplication", back.mul_table(), f.value.mul_table(), n), clock);
    return done(v, clock);
}

Verdict check_roundtrip_LK(const Named<S2tGroup>& g) {
    detail::Stopwatch clock;
    Verdict v{"gamma: L(K(G)) -> G for " + g.id};
    const S2tGroup lk = lk_object(g.value);
    S2tMorphism gamma;
    try {
        gamma = gamma_component(g.value);
    } catch (const AlgebraError& e) {
        return fail(v, e.what(), clock);
    }
    S2tMorphism inv{ElementMap(gamma.f.size(), -1), gamma.phi};
    for (std::size_t i = 0; i < gamma.f.size(); ++i) inv.f[gamma.f[i]] = static_cast<int>(i);
    if (std::find(inv.f.begin(), inv.f.end(), -1) != inv.f.end())
        return fail(v, "k is not surjective: " + describe(gamma.f), clock);
    if (!is_s2t_morphism(inv, g.value, lk)) return fail(v, "inverse " + describe(inv) + " is not a morphism", clock);
    if (compose(inv, gamma) != identity_morphism(lk) || compose(gamma, inv) != identity_morphism(g.value))
        return fail(v, "gamma and its inverse do not compose to identities", clock);
    return done(v, clock);
}

Verdict check_naturality(const S2tMorphism& m, const Named<S2tGroup>& g, const Named<S2tGroup>& h) {
    detail::Stopwatch clock;
    Verdict v{"naturality " + g.id + " -> " + h.id};
    const S2tMorphism lhs = compose(m, gamma_component(g.value));
    const S2tMorphism lifted = functor_L_mor(m.phi, functor_K_obj(g.value), functor_K_obj(h.value));
    const S2tMorphism rhs = compose(gamma_component(h.value), lifted);
    for (std::size_t i = 0; i < lhs.f.size(); ++i)
        if (lhs.f[i] != rhs.f[i])
            return fail(v,
                        "square fails at affine map #" + std::to_string(i) + ": " +
                            to_string(h.value.element(lhs.f[i])) + " vs " + to_string(h.value.element(rhs.f[i])),
                        clock);
    if (lhs.phi != rhs.phi) return fail(v, "point maps differ: " + describe(lhs.phi) + " vs " + describe(rhs.phi), clock);
    return done(v, clock);
}

Verdict check_nearfield_criterion(const Named<S2tGroup>& g, const PermSet& a_set) {
    detail::Stopwatch clock;
    Verdict v{"nearfield criterion " + g.id};
    const bool a = is_subgroup(a_set);
    const bool j2 = J_squared_is_subgroup(g.value);
    const bool nf = is_nearfield(functor_K_obj(g.value));
    if (a != j2 || j2 != nf)
        return fail(v,
                    std::string("A subgroup: ") + (a ? "true" : "false") + ", J^2 subgroup: " + (j2 ? "true" : "false") +
                        ", nearfield: " + (nf ? "true" : "false"),
                    clock);
    return done(v, clock);
}

Verdict check_equivalence_restriction(const Zoo& zoo) {
    detail::Stopwatch clock;
    Verdict v{"nearfield restriction"};
    for (const auto& g : zoo.groups) {
        auto c = check_nearfield_criterion(g, set_A(g.value).members());
        if (!c.pass) return fail(v, g.id + ": " + c.witness, clock);
    }
    for (const auto& f : zoo.neardomains) {
        if (!is_nearfield(f.value)) continue;
        if (!A_is_subgroup(t2_group(f.value))) return fail(v, "A is not a subgroup of T2(" + f.id + ")", clock);
        auto rt = check_roundtrip_KL(f);
        if (!rt.pass) return fail(v, f.id + ": " + rt.witness, clock);
    }
    return done(v, clock);
}

Verdict check_isomorphism_reflection(const Named<S2tGroup>& g, const Named<S2tGroup>& h) {
    detail::Stopwatch clock;
    Verdict v{"isomorphism reflection " + g.id + " / " + h.id};
    bool group_iso = false;
    if (g.value.degree() == h.value.degree() && g.value.size() == h.value.size())
        group_iso = !enumerate_s2t_morphisms_direct(g.value, h.value).empty();
    const Neardomain kg = functor_K_obj(g.value), kh = functor_K_obj(h.value);
    const bool nd_iso = kg.order() == kh.order() && !enumerate_nd_morphisms(kg, kh).empty();
    if (group_iso != nd_iso)
        return fail(v, std::string("s2t isomorphic: ") + (group_iso ? "true" : "false") +
                           ", neardomains isomorphic: " + (nd_iso ? "true" : "false"),
                    clock);
    return done(v, clock);
}

Verdict check_characteristic_coherence(const Named<S2tGroup>& g) {
    detail::Stopwatch clock;
    Verdict v{"characteristic " + g.id};
    const PermSet j = involutions(g.value);
    if (j.empty()) return fail(v, "no involutions", clock);
    const auto count = fixpoints(j[0]).size();
    for (const auto& x : j)
        if (fixpoints(x).size() != count || count > 1)
            return fail(v, "involution " + to_string(x) + " has " + std::to_string(fixpoints(x).size()) +
                               " fixpoints, first has " + std::to_string(count),
                        clock);
    const bool two = characteristic(g.value) == Characteristic::Two;
    if (two != (count == 0)) return fail(v, "characteristic disagrees with fixpoint count", clock);
    if (two != characteristic_two(functor_K_obj(g.value)))
        return fail(v, std::string("characteristic ") + (two ? "2" : "not 2") + " but 1+1" + (two ? "!=" : "=") +
                           "0 in K(G)",
                    clock);
    return done(v, clock);
}

// ---------------------------------------------------------------------------
// Acceptance battery

namespace {

Verdict criterion_loop_rps(const Zoo& zoo) {
    detail::Stopwatch clock;
    Verdict v{"loop/rps equivalence"};
    for (const auto& l : zoo.loops) {
        auto rt = check_roundtrip_F(l);
        if (!rt.pass) return fail(v, l.id + ": " + rt.witness, clock);
    }
    std::size_t pairs = 0;
    for (const auto& r : zoo.rps)
        for (const auto& s : zoo.rps) {
            auto rep = check_full_faithful_F(r, s);
            if (!rep.bijection || rep.source_count != rep.target_count)
                return fail(v, r.id + " -> " + s.id + ": " + rep.witness, clock);
            ++pairs;
        }
    v.witness = std::to_string(zoo.loops.size()) + " round trips, " + std::to_string(pairs) + " hom-set bijections";
    return done(v, clock);
}

Verdict criterion_characterization(const Zoo& zoo) {
    detail::Stopwatch clock;
    Verdict v{"morphism characterization"};
    std::size_t checked = 0, disagreements = 0, positives = 0;
    std::string first;
    auto probe = [&](const ElementMap& f, const ElementMap& phi, const Named<Rps>& r, const Named<Rps>& s) {
        const bool a = characterize_morphism(f, phi, r.value, s.value);
        const bool b = is_rps_morphism(RpsMorphism{f, phi}, r.value, s.value);
        ++checked;
        positives += b;
        if (a != b && disagreements++ == 0)
            first = r.id + " -> " + s.id + " " + describe(RpsMorphism{f, phi});
    };

    std::vector<Named<Rps>> small, large;
    for (const auto& r : zoo.rps) (r.value.degree() <= 3 ? small : large).push_back(r);

    // Exhaustive: every f, every phi with phi(omega) = sigma.
    for (const auto& r : small)
        for (const auto& s : small) {
            const int n = r.value.degree(), k = s.value.degree();
            int total = 1;
            for (int i = 0; i < 2 * n; ++i) total *= k;
            for (int code = 0; code < total; ++code) {
                ElementMap f(n), phi(n);
                int c = code;
                for (int i = 0; i < n; ++i, c /= k) f[i] = c % k;
                for (int i = 0; i < n; ++i, c /= k) phi[i] = c % k;
                if (phi[r.value.basepoint()] != s.value.basepoint()) continue;
                probe(f, phi, r, s);
            }
        }

    // 1000 random candidates on degrees 4 and 5, a third of them genuine
    // morphisms and a third single-entry corruptions of genuine ones.
    std::mt19937 rng(20240601);
    auto pick = [&](int bound) { return std::uniform_int_distribution<int>(0, bound - 1)(rng); };
    for (int trial = 0; trial < 1000; ++trial) {
        const auto& r = large[pick(static_cast<int>(large.size()))];
        const auto& s = large[pick(static_cast<int>(large.size()))];
        const int n = r.value.degree(), k = s.value.degree();
        ElementMap f(n), phi(n);
        const auto homs = trial % 3 == 0 ? std::vector<RpsMorphism>{} : enumerate_rps_morphisms(r.value, s.value);
        if (homs.empty()) {
            for (auto& x : f) x = pick(k);
            for (auto& x : phi) x = pick(k);
            phi[r.value.basepoint()] = s.value.basepoint();
        } else {
            const auto& m = homs[pick(static_cast<int>(homs.size()))];
            f = m.f;
            phi = m.phi;
            if (trial % 3 == 2) {
                const int i = pick(n);
                f[i] = (f[i] + 1 + pick(k - 1)) % k;
            }
        }
        probe(f, phi, r, s);
    }
    if (disagreements) return fail(v, std::to_string(disagreements) + " disagreements, first at " + first, clock);
    v.witness = std::to_string(checked) + " candidates, " + std::to_string(positives) + " morphisms, 0 disagreements";
    return done(v, clock);
}

Verdict criterion_neardomains(const Zoo& zoo) {
    detail::Stopwatch clock;
    Verdict v{"neardomain validity and finiteness"};
    for (const auto& f : zoo.neardomains) {
        try {
            check_neardomain(f.value.add_table(), f.value.mul_table(), f.value.order(), f.value.zero(), f.value.one());
        } catch (const ValidationError& e) {
            return fail(v, f.id + ": " + e.what(), clock);
        }
        if (!is_nearfield(f.value)) return fail(v, f.id + " is not a nearfield", clock);
    }
    for (const auto& g : zoo.groups)
        if (!is_nearfield(functor_K_obj(g.value))) return fail(v, "K(" + g.id + ") is not a nearfield", clock);
    const Neardomain d9 = dickson_nearfield_9(), gf9 = galois_field(9);
    const auto there = enumerate_nd_morphisms(d9, gf9), back = enumerate_nd_morphisms(gf9, d9);
    if (!there.empty() || !back.empty())
        return fail(v, "structure-preserving bijection between D9 and GF9: " +
                           describe(there.empty() ? back.front() : there.front()),
                    clock);
    v.witness = "0 bijections D9 <-> GF9";
    return done(v, clock);
}

Verdict criterion_t2(const Zoo& zoo) {
    detail::Stopwatch clock;
    Verdict v{"T2 construction"};
    const std::vector<std::size_t> expected{2, 6, 12, 20, 42, 56, 72, 72};
    for (std::size_t i = 0; i < zoo.neardomains.size(); ++i) {
        const auto& f = zoo.neardomains[i];
        const S2tGroup g = t2_group(f.value);
        check_s2t(g.group(), g.omega0(), g.omega1());
        const auto n = static_cast<std::size_t>(f.value.order());
        if (g.size() != n * (n - 1) || g.size() != expected.at(i))
            return fail(v, f.id + ": |G| = " + std::to_string(g.size()), clock);
        const Neardomain& F = f.value;
        for (int a = 0; a < F.order(); ++a)
            for (int b = 0; b < F.order(); ++b) {
                if (b == F.zero()) continue;
                for (int k = 0; k < F.order(); ++k)
                    for (int l = 0; l < F.order(); ++l) {
                        if (l == F.zero()) continue;
                        const int bk = F.mul(b, k);
                        const int d = d_coeff(F, a, bk);
                        if (d != F.one()) return fail(v, f.id + ": d != 1", clock);
                        const Perm lhs = compose(affine_map(F, a, b).as_perm, affine_map(F, k, l).as_perm);
                        const Perm rhs = affine_map(F, F.add(a, bk), F.mul(d, F.mul(b, l))).as_perm;
                        if (lhs != rhs)
                            return fail(v,
                                        f.id + ": composition law fails at (a,b,k,l) = (" + std::to_string(a) + "," +
                                            std::to_string(b) + "," + std::to_string(k) + "," + std::to_string(l) + ")",
                                        clock);
                    }
            }
    }
    return done(v, clock);
}

Verdict criterion_characteristic(const Zoo& zoo) {
    detail::Stopwatch clock;
    Verdict v{"characteristic coherence"};
    for (const auto& g : zoo.groups) {
        auto c = check_characteristic_coherence(g);
        if (!c.pass) return fail(v, c.witness, clock);
    }
    return done(v, clock);
}

Verdict criterion_set_a(const Zoo& zoo) {
    detail::Stopwatch clock;
    Verdict v{"involution structure"};
    for (const auto& g : zoo.groups) {
        try {
            const Rps a = set_A(g.value);
            check_rps(a.members(), a.basepoint());
        } catch (const ValidationError& e) {
            return fail(v, g.id + ": " + e.what(), clock);
        }
    }
    for (const auto& f : zoo.neardomains) {
        std::vector<Perm> translations;
        for (int c = 0; c < f.value.order(); ++c) translations.push_back(affine_map(f.value, c, f.value.one()).as_perm);
        const PermSet expected(f.value.order(), std::move(translations));
        const PermSet actual = set_A(t2_group(f.value)).members();
        if (actual != expected) {
            for (const auto& x : actual)
                if (!expected.contains(x))
                    return fail(v, "A of T2(" + f.id + ") contains " + to_string(x) + ", not a translation", clock);
            return fail(v, "A of T2(" + f.id + ") misses a translation", clock);
        }
    }
    return done(v, clock);
}

Verdict criterion_main_equivalence(const Zoo& zoo) {
    detail::Stopwatch clock;
    Verdict v{"main equivalence"};
    for (const auto& f : zoo.neardomains) {
        auto c = check_roundtrip_KL(f);
        if (!c.pass) return fail(v, c.witness, clock);
    }
    // Non-native presentations: K(G) is none of the built neardomains, so
    // gamma has to match affine maps to elements under a relabeling.
    std::size_t relabeled = 0;
    for (const auto& g : zoo.groups) {
        auto c = check_roundtrip_LK(g);
        if (!c.pass) return fail(v, c.witness, clock);
        const Neardomain k = functor_K_obj(g.value);
        relabeled += std::none_of(zoo.neardomains.begin(), zoo.neardomains.end(),
                                  [&](const auto& f) { return f.value == k; });
    }
    if (relabeled < 2) return fail(v, "fewer than two non-native group presentations", clock);
    std::size_t squares = 0, pairs = 0;
    for (const auto& g : zoo.groups)
        for (const auto& h : zoo.groups) {
            auto rep = check_full_faithful_K(g, h);
            if (!rep.bijection) return fail(v, "K on " + g.id + " -> " + h.id + ": " + rep.witness, clock);
            ++pairs;
            for (const auto& m : enumerate_s2t_morphisms_direct(g.value, h.value)) {
                auto n = check_naturality(m, g, h);
                if (!n.pass) return fail(v, n.name + ": " + n.witness, clock);
                auto lemma = lemma_images(m, g.value, h.value);
                if (!lemma.pass()) return fail(v, g.id + " -> " + h.id + ": f(J) or f(A) escapes", clock);
                ++squares;
            }
            auto iso = check_isomorphism_reflection(g, h);
            if (!iso.pass) return fail(v, iso.name + ": " + iso.witness, clock);
        }
    v.witness = std::to_string(pairs) + " hom-set bijections, " + std::to_string(squares) + " naturality squares, " +
                std::to_string(relabeled) + " non-native presentations";
    return done(v, clock);
}

Verdict criterion_injectivity(const Zoo& zoo) {
    detail::Stopwatch clock;
    Verdict v{"injectivity"};
    std::size_t nd = 0, s2t = 0;
    for (const auto& a : zoo.neardomains)
        for (const auto& b : zoo.neardomains)
            for (const auto& phi : enumerate_nd_morphisms(a.value, b.value)) {
                if (!injective(phi)) return fail(v, a.id + " -> " + b.id + ": " + describe(phi), clock);
                ++nd;
            }
    for (const auto& g : zoo.groups)
        for (const auto& h : zoo.groups)
            for (const auto& m : enumerate_s2t_morphisms_direct(g.value, h.value)) {
                if (!injective(m.f)) return fail(v, g.id + " -> " + h.id + ": " + describe(m.f), clock);
                ++s2t;
            }
    v.witness = std::to_string(nd) + " neardomain morphisms, " + std::to_string(s2t) + " s2t morphisms";
    return done(v, clock);
}


// Each mutation feeds a deliberately corrupted input to a theorem-backed
// check; the check has to reject it with a concrete witness.
struct Mutation {
    std::string label;
    std::function<std::string()> run;  // witness of the rejection, "" if accepted
};

template <class Fn>
std::string rejection(Fn&& fn) {
    try {
        return fn();
    } catch (const ValidationError& e) {
        return std::string(e.what()) + " " + detail::map_str(e.witness());
    }
}

Verdict criterion_mutations(const Zoo& zoo) {
    detail::Stopwatch clock;
    Verdict v{"mutation sensitivity"};
    auto rps_named = [&](const std::string& id) {
        for (const auto& r : zoo.rps)
            if (r.id == id) return r;
        throw AlgebraError("zoo has no r.p.s. " + id);
    };
    auto group_named = [&](const std::string& id) {
        for (const auto& g : zoo.groups)
            if (g.id == id) return g;
        throw AlgebraError("zoo has no group " + id);
    };
    const Named<Rps> c3 = rps_named("rps(L3.0)");

    std::vector<Mutation> mutations{
        {"1: F with the base-point condition dropped",
         [&] {
             auto d = functor_F_data();
             d.homs = [](const Rps& r, const Rps& s) {
                 std::vector<RpsMorphism> all;
                 for (Point p = 0; p < s.degree(); ++p)
                     for (auto& m : enumerate_rps_morphisms_direct(r, relocate_basepoint(s, p))) all.push_back(m);
                 return all;
             };
             std::vector<Named<Rps>> objs{c3};
             return check_functor_laws("F corrupted", objs, d).witness;
         }},
        {"1: F collapsing every morphism to the trivial map",
         [&] {
             const auto source = enumerate_rps_morphisms_direct(c3.value, c3.value);
             const auto target = enumerate_loop_morphisms(induced_loop(c3.value), induced_loop(c3.value));
             return compare_homsets(c3.id, c3.id, source, target, [&](const RpsMorphism&) {
                        return ElementMap(c3.value.degree(), c3.value.basepoint());
                    }).witness;
         }},
        {"1: r.p.s. with a transposition in place of a rotation",
         [&] {
             return rejection([] {
                 check_rps(PermSet(3, {Perm({0, 1, 2}), Perm({1, 2, 0}), Perm({0, 2, 1})}), 0);
                 return std::string();
             });
         }},
        {"3: GF(3) with 1*2 corrupted to 0",
         [&] {
             return rejection([] {
                 const Neardomain f = galois_field(3);
                 auto mul = f.mul_table();
                 mul[1 * 3 + 2] = 0;
                 check_neardomain(f.add_table(), mul, 3, 0, 1);
                 return std::string();
             });
         }},
        {"3: order 9 nearfield twisted on the right argument",
         [&] {
             return rejection([] {
                 const Neardomain gf = galois_field(9);
                 std::vector<bool> square(9, false);
                 for (int x = 1; x < 9; ++x) square[gf.mul(x, x)] = true;
                 std::vector<int> mul(81);
                 for (int x = 0; x < 9; ++x)
                     for (int y = 0; y < 9; ++y)
                         mul[x * 9 + y] = square[y] ? gf.mul(x, y) : gf.mul(gf.mul(x, gf.mul(x, x)), y);
                 check_neardomain(gf.add_table(), mul, 9, 0, 1);
                 return std::string();
             });
         }},
        {"4: C3 offered as sharply 2-transitive",
         [&] {
             return rejection([] {
                 check_s2t(closure(PermSet(3, {Perm({1, 2, 0})})), 0, 1);
                 return std::string();
             });
         }},
        {"4: T2(GF5) with one affine map replaced",
         [&] {
             return rejection([&] {
                 auto members = t2_group(galois_field(5)).group().members();
                 members.back() = Perm({0, 2, 1, 3, 4});
                 check_s2t(PermSet(5, members), 0, 1);
                 return std::string();
             });
         }},
        {"7: naturality of a morphism with two images swapped",
         [&] {
             const auto g = group_named("T2(GF3)");
             S2tMorphism m = identity_morphism(g.value);
             std::swap(m.f[1], m.f[2]);
             return check_naturality(m, g, g).witness;
         }},
        {"7: K collapsing every morphism's point map",
         [&] {
             const auto g = group_named("T2(GF9)");
             const auto source = enumerate_s2t_morphisms_direct(g.value, g.value);
             const auto target = enumerate_nd_morphisms(functor_K_obj(g.value), functor_K_obj(g.value));
             return compare_homsets(g.id, g.id, source, target, [&](const S2tMorphism&) {
                        ElementMap id(g.value.degree());
                        std::iota(id.begin(), id.end(), 0);
                        return id;
                    }).witness;
         }},
        {"8: A of T2(GF5) with one translation removed",
         [&] {
             const auto g = group_named("T2(GF5)");
             auto members = set_A(g.value).members().members();
             members.pop_back();
             return check_nearfield_criterion(g, PermSet(5, members)).witness;
         }},
    };

    for (const auto& m : mutations)
        if (m.run().empty()) return fail(v, "mutation accepted: " + m.label, clock);
    v.witness = std::to_string(mutations.size()) + " mutations rejected";
    return done(v, clock);
}

}  // namespace

std::vector<Verdict> run_acceptance(const Zoo& zoo) {
    std::vector<Verdict> out;
    out.push_back(criterion_loop_rps(zoo));
    out.push_back(criterion_characterization(zoo));
    out.push_back(criterion_neardomains(zoo));
    out.push_back(criterion_t2(zoo));
    out.push_back(criterion_characteristic(zoo));
    out.push_back(criterion_set_a(zoo));
    out.push_back(criterion_main_equivalence(zoo));
    out.push_back(check_equivalence_restriction(zoo));
    out.push_back(criterion_injectivity(zoo));
    out.push_back(criterion_mutations(zoo));
    return out;
}

}  // namespace algcat
