#include "algcat/s2t.hpp"

#include <algorithm>
#include <set>

#include "algcat/detail/backtrack.hpp"

namespace algcat {

NotAGroup::NotAGroup(const std::string& what, std::vector<int> witness)
    : ValidationError("not a group: " + what, std::move(witness)) {}

NotSharplyTransitive::NotSharplyTransitive(Point a1, Point a2, Point b1, Point b2, int count)
    : ValidationError(std::to_string(count) + " elements map (" + std::to_string(a1) + "," + std::to_string(a2) +
                          ") to (" + std::to_string(b1) + "," + std::to_string(b2) + "), expected exactly 1",
                      {a1, a2, b1, b2, count}) {}

DegenerateOmega::DegenerateOmega(Point omega)
    : ValidationError("base points coincide at " + std::to_string(omega), {omega}) {}

DichotomyViolation::DichotomyViolation(int j1, int count1, int j2, int count2)
    : ValidationError("involutions " + std::to_string(j1) + " and " + std::to_string(j2) + " have " +
                          std::to_string(count1) + " and " + std::to_string(count2) + " fixpoints",
                      {j1, count1, j2, count2}) {}

S2tGroup::S2tGroup(PermSet group, Point omega0, Point omega1)
    : group_(std::move(group)), omega0_(omega0), omega1_(omega1),
      by_base_images_(static_cast<std::size_t>(group_.degree()) * group_.degree(), 0) {
    const int n = group_.degree();
    for (std::size_t i = 0; i < group_.size(); ++i)
        by_base_images_[group_[i](omega0_) * n + group_[i](omega1_)] = i;
}

std::size_t S2tGroup::element_with(Point b0, Point b1) const {
    const int n = degree();
    if (b0 < 0 || b0 >= n || b1 < 0 || b1 >= n || b0 == b1)
        throw DomainError("element_with: need two distinct points in range");
    return by_base_images_[b0 * n + b1];
}

std::size_t S2tGroup::element_mapping(Point a1, Point a2, Point b1, Point b2) const {
    for (std::size_t i = 0; i < group_.size(); ++i)
        if (group_[i](a1) == b1 && group_[i](a2) == b2) return i;
    throw DomainError("element_mapping: no element maps the given pairs");
}

S2tGroup check_s2t(PermSet group, Point omega0, Point omega1) {
    const int n = group.degree();
    if (n < 2) throw DomainError("sharply 2-transitive group needs at least 2 points");
    if (omega0 < 0 || omega0 >= n || omega1 < 0 || omega1 >= n) throw DomainError("base point out of range");
    if (omega0 == omega1) throw DegenerateOmega(omega0);

    if (!group.contains(Perm::identity(n))) throw NotAGroup("identity missing", {});
    for (std::size_t i = 0; i < group.size(); ++i) {
        if (!group.contains(inverse(group[i])))
            throw NotAGroup("inverse of element " + std::to_string(i) + " missing", {static_cast<int>(i)});
        for (std::size_t j = 0; j < group.size(); ++j)
            if (!group.contains(compose(group[i], group[j])))
                throw NotAGroup("product of elements " + std::to_string(i) + " and " + std::to_string(j) + " missing",
                                {static_cast<int>(i), static_cast<int>(j)});
    }

    // count[(a1,a2),(b1,b2)]
    const std::size_t n2 = static_cast<std::size_t>(n) * n;
    std::vector<int> count(n2 * n2, 0);
    for (const auto& g : group)
        for (Point a1 = 0; a1 < n; ++a1)
            for (Point a2 = 0; a2 < n; ++a2)
                if (a1 != a2) ++count[(a1 * n + a2) * n2 + g(a1) * n + g(a2)];
    for (Point a1 = 0; a1 < n; ++a1)
        for (Point a2 = 0; a2 < n; ++a2) {
            if (a1 == a2) continue;
            for (Point b1 = 0; b1 < n; ++b1)
                for (Point b2 = 0; b2 < n; ++b2) {
                    if (b1 == b2) continue;
                    const int c = count[(a1 * n + a2) * n2 + b1 * n + b2];
                    if (c != 1) throw NotSharplyTransitive(a1, a2, b1, b2, c);
                }
        }
    return S2tGroup(std::move(group), omega0, omega1);
}

S2tGroup s2t_from_generators(const PermSet& gens, Point omega0, Point omega1, std::size_t cap) {
    return check_s2t(closure(gens, cap), omega0, omega1);
}

S2tGroup relabel(const S2tGroup& g, const Perm& pi) {
    if (pi.degree() != g.degree()) throw DomainError("relabel: degree mismatch");
    const Perm pi_inv = inverse(pi);
    std::vector<Perm> conj;
    for (const auto& x : g.group()) conj.push_back(compose(pi, compose(x, pi_inv)));
    return check_s2t(PermSet(g.degree(), std::move(conj)), pi(g.omega0()), pi(g.omega1()));
}

S2tGroup with_base_points(const S2tGroup& g, Point omega0, Point omega1) {
    return check_s2t(g.group(), omega0, omega1);
}

PermSet involutions(const S2tGroup& g) {
    std::vector<Perm> j;
    for (const auto& x : g.group())
        if (is_involution(x)) j.push_back(x);
    return PermSet(g.degree(), std::move(j));
}

const char* to_string(Characteristic c) { return c == Characteristic::Two ? "2" : "not 2"; }

namespace {

Characteristic characteristic_of(const S2tGroup& g, const PermSet& j) {
    if (j.empty()) throw AlgebraError("group has no involutions");
    const auto first = static_cast<int>(fixpoints(j[0]).size());
    for (std::size_t i = 1; i < j.size(); ++i) {
        const auto c = static_cast<int>(fixpoints(j[i]).size());
        if (c != first)
            throw DichotomyViolation(static_cast<int>(g.group().require_index(j[0])), first,
                                     static_cast<int>(g.group().require_index(j[i])), c);
    }
    if (first > 1) {
        const int idx = static_cast<int>(g.group().require_index(j[0]));
        throw DichotomyViolation(idx, first, idx, first);
    }
    return first == 0 ? Characteristic::Two : Characteristic::NotTwo;
}

Perm nu_of(const S2tGroup& g, const PermSet& j) {
    std::vector<Perm> fixing;
    for (const auto& x : j)
        if (x(g.omega0()) == g.omega0()) fixing.push_back(x);
    if (fixing.size() != 1)
        throw AlgebraError(std::to_string(fixing.size()) + " involutions fix omega0, expected exactly 1");
    return fixing.front();
}

Rps a_of(const S2tGroup& g) {
    const PermSet j = involutions(g);
    std::vector<Perm> a;
    if (characteristic_of(g, j) == Characteristic::NotTwo) {
        const Perm nu = nu_of(g, j);
        for (const auto& x : j) a.push_back(compose(x, nu));
    } else {
        a.assign(j.begin(), j.end());
        a.push_back(Perm::identity(g.degree()));
    }
    return check_rps(PermSet(g.degree(), std::move(a)), g.omega0());
}

Point add0_with(const Rps& a, Point alpha, Point beta) { return a.member(a.member_at(alpha))(beta); }

Point mul1_with(const S2tGroup& g, Point alpha, Point beta) {
    if (alpha == g.omega0() || beta == g.omega0()) return g.omega0();
    return g.element(g.element_with(g.omega0(), alpha))(beta);
}

void check_points(const S2tGroup& g, Point a, Point b) {
    if (a < 0 || a >= g.degree() || b < 0 || b >= g.degree()) throw DomainError("point out of range");
}

bool injective(const ElementMap& m) {
    std::set<int> s(m.begin(), m.end());
    return s.size() == m.size();
}

}  // namespace

Characteristic characteristic(const S2tGroup& g) { return characteristic_of(g, involutions(g)); }

Perm nu_involution(const S2tGroup& g) {
    const PermSet j = involutions(g);
    if (characteristic_of(g, j) == Characteristic::Two)
        throw PreconditionError("nu_involution is undefined in characteristic 2");
    return nu_of(g, j);
}

Rps set_A(const S2tGroup& g) { return a_of(g); }

Point add0(const S2tGroup& g, Point alpha, Point beta) {
    check_points(g, alpha, beta);
    return add0_with(a_of(g), alpha, beta);
}

Point mul1(const S2tGroup& g, Point alpha, Point beta) {
    check_points(g, alpha, beta);
    return mul1_with(g, alpha, beta);
}

Neardomain functor_K_obj(const S2tGroup& g) {
    const int n = g.degree();
    // The stabilizer of omega0 acts regularly on the remaining points.
    for (Point a = 0; a < n; ++a) {
        if (a == g.omega0()) continue;
        const Perm& s = g.element(g.element_with(g.omega0(), a));
        if (s(g.omega0()) != g.omega0() || s(g.omega1()) != a)
            throw AlgebraError("stabilizer of omega0 is not regular on the other points");
    }
    const Rps a = a_of(g);
    std::vector<int> add(static_cast<std::size_t>(n) * n), mul(add.size());
    for (Point x = 0; x < n; ++x)
        for (Point y = 0; y < n; ++y) {
            add[x * n + y] = add0_with(a, x, y);
            mul[x * n + y] = mul1_with(g, x, y);
        }
    return check_neardomain(std::move(add), std::move(mul), n, g.omega0(), g.omega1());
}

S2tMorphism identity_morphism(const S2tGroup& g) {
    S2tMorphism m;
    for (std::size_t i = 0; i < g.size(); ++i) m.f.push_back(static_cast<int>(i));
    for (int x = 0; x < g.degree(); ++x) m.phi.push_back(x);
    return m;
}

S2tMorphism compose(const S2tMorphism& second, const S2tMorphism& first) {
    S2tMorphism out;
    for (int i : first.f) out.f.push_back(second.f.at(i));
    for (int x : first.phi) out.phi.push_back(second.phi.at(x));
    return out;
}

bool is_s2t_morphism(const S2tMorphism& m, const S2tGroup& source, const S2tGroup& target) {
    const auto gs = static_cast<int>(source.size()), hs = static_cast<int>(target.size());
    if (static_cast<int>(m.f.size()) != gs || static_cast<int>(m.phi.size()) != source.degree()) return false;
    for (int y : m.f)
        if (y < 0 || y >= hs) return false;
    for (int y : m.phi)
        if (y < 0 || y >= target.degree()) return false;
    if (characteristic(source) != characteristic(target)) return false;
    if (m.phi[source.omega0()] != target.omega0() || m.phi[source.omega1()] != target.omega1()) return false;
    if (!injective(m.phi)) return false;
    for (int i = 0; i < gs; ++i)
        for (int j = 0; j < gs; ++j) {
            const auto ij = source.group().require_index(compose(source.element(i), source.element(j)));
            if (target.element(m.f[ij]) != compose(target.element(m.f[i]), target.element(m.f[j]))) return false;
        }
    for (int i = 0; i < gs; ++i)
        for (Point w = 0; w < source.degree(); ++w)
            if (m.phi[source.element(i)(w)] != target.element(m.f[i])(m.phi[w])) return false;
    if (!injective(m.f)) throw AlgebraError("morphism with injective phi has non-injective f");
    return true;
}

InclusionReport lemma_images(const S2tMorphism& m, const S2tGroup& source, const S2tGroup& target) {
    InclusionReport r;
    const PermSet j_src = involutions(source), j_tgt = involutions(target);
    const Rps a_src = a_of(source), a_tgt = a_of(target);
    auto image = [&](const Perm& x) -> const Perm& { return target.element(m.f[source.group().require_index(x)]); };
    for (const auto& x : j_src)
        if (!j_tgt.contains(image(x))) {
            r.involutions_preserved = false;
            r.witnesses.push_back(static_cast<int>(source.group().require_index(x)));
        }
    for (const auto& x : a_src.members())
        if (!a_tgt.members().contains(image(x))) {
            r.a_preserved = false;
            r.witnesses.push_back(static_cast<int>(source.group().require_index(x)));
        }
    return r;
}

ElementMap functor_K_mor(const S2tMorphism& m, const S2tGroup& source, const S2tGroup& target) {
    if (!is_nd_morphism(m.phi, functor_K_obj(source), functor_K_obj(target)))
        throw AlgebraError("phi of an s2t morphism is not a neardomain morphism");
    return m.phi;
}

S2tGroup lk_object(const S2tGroup& g) { return t2_group(functor_K_obj(g)); }

S2tMorphism gamma_component(const S2tGroup& g) {
    const S2tGroup src = lk_object(g);
    S2tMorphism m;
    for (const auto& tau : src.group())
        m.f.push_back(static_cast<int>(g.element_with(tau(g.omega0()), tau(g.omega1()))));
    for (int x = 0; x < g.degree(); ++x) m.phi.push_back(x);
    if (src.size() != g.size() || !injective(m.f) || !is_s2t_morphism(m, src, g))
        throw AlgebraError("gamma component is not an isomorphism");
    return m;
}

bool A_is_subgroup(const S2tGroup& g) { return is_subgroup(a_of(g).members()); }

bool J_squared_is_subgroup(const S2tGroup& g) {
    const PermSet j = involutions(g);
    std::vector<Perm> sq;
    for (const auto& x : j)
        for (const auto& y : j) sq.push_back(compose(x, y));
    return is_subgroup(PermSet(g.degree(), std::move(sq)));
}

std::vector<S2tMorphism> enumerate_s2t_morphisms(const S2tGroup& source, const S2tGroup& target) {
    std::vector<S2tMorphism> out;
    if (characteristic(source) != characteristic(target)) return out;
    const Neardomain ks = functor_K_obj(source), kt = functor_K_obj(target);
    for (const auto& phi : enumerate_nd_morphisms(ks, kt)) {
        S2tMorphism m;
        m.phi = phi;
        for (const auto& x : source.group())
            m.f.push_back(static_cast<int>(target.element_with(phi[x(source.omega0())], phi[x(source.omega1())])));
        if (!is_s2t_morphism(m, source, target)) throw AlgebraError("transported morphism failed verification");
        out.push_back(std::move(m));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<S2tMorphism> enumerate_s2t_morphisms_direct(const S2tGroup& source, const S2tGroup& target,
                                                        int max_degree) {
    if (source.degree() > max_degree || target.degree() > max_degree)
        throw ResourceError("direct s2t hom-set search capped at degree " + std::to_string(max_degree));
    std::vector<S2tMorphism> out;
    if (characteristic(source) != characteristic(target)) return out;
    const auto gs = source.size(), hs = target.size();
    auto pinned = [&](const ElementMap& phi, int i) {
        if (i == source.omega0()) return phi[i] == target.omega0();
        if (i == source.omega1()) return phi[i] == target.omega1();
        return phi[i] != target.omega0() && phi[i] != target.omega1();
    };
    detail::backtrack_maps(source.degree(), target.degree(), true, pinned, [&](const ElementMap& phi) {
        std::vector<std::vector<int>> choices(gs);
        for (std::size_t i = 0; i < gs; ++i) {
            const Perm& x = source.element(i);
            for (std::size_t j = 0; j < hs; ++j) {
                const Perm& y = target.element(j);
                bool ok = true;
                for (Point w = 0; w < source.degree() && ok; ++w) ok = phi[x(w)] == y(phi[w]);
                if (ok) choices[i].push_back(static_cast<int>(j));
            }
            if (choices[i].empty()) return true;
        }
        std::vector<std::size_t> pick(gs, 0);
        for (;;) {
            S2tMorphism m{ElementMap(gs), phi};
            for (std::size_t i = 0; i < gs; ++i) m.f[i] = choices[i][pick[i]];
            if (is_s2t_morphism(m, source, target)) out.push_back(std::move(m));
            auto i = static_cast<long>(gs) - 1;
            while (i >= 0 && ++pick[i] == choices[i].size()) pick[i--] = 0;
            if (i < 0) break;
        }
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace algcat
