#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "algcat/errors.hpp"
#include "algcat/loops.hpp"
#include "algcat/neardomain.hpp"
#include "algcat/permcore.hpp"
#include "algcat/rps.hpp"

namespace algcat {

/// witness = offending member indices (a, b) for a missing product,
/// (a) for a missing inverse, empty when the identity is absent.
class NotAGroup : public ValidationError {
public:
    NotAGroup(const std::string& what, std::vector<int> witness);
};

/// witness = {a1, a2, b1, b2, count}: `count` elements map (a1,a2) to (b1,b2).
class NotSharplyTransitive : public ValidationError {
public:
    NotSharplyTransitive(Point a1, Point a2, Point b1, Point b2, int count);
};

class DegenerateOmega : public ValidationError {
public:
    explicit DegenerateOmega(Point omega);
};

/// Involutions with differing fixpoint counts. witness = {j1, count1, j2, count2}.
class DichotomyViolation : public ValidationError {
public:
    DichotomyViolation(int j1, int count1, int j2, int count2);
};

/// Sharply 2-transitive permutation group with base points omega0 != omega1.
class S2tGroup {
public:
    const PermSet& group() const noexcept { return group_; }
    int degree() const noexcept { return group_.degree(); }
    Point omega0() const noexcept { return omega0_; }
    Point omega1() const noexcept { return omega1_; }
    std::size_t size() const noexcept { return group_.size(); }
    const Perm& element(std::size_t i) const { return group_[i]; }

    /// Index of the unique element with g(omega0) = b0 and g(omega1) = b1.
    std::size_t element_with(Point b0, Point b1) const;

    /// Index of the unique element with g(a1) = b1 and g(a2) = b2.
    std::size_t element_mapping(Point a1, Point a2, Point b1, Point b2) const;

    std::size_t identity_index() const { return element_with(omega0_, omega1_); }

    friend bool operator==(const S2tGroup& a, const S2tGroup& b) {
        return a.group_ == b.group_ && a.omega0_ == b.omega0_ && a.omega1_ == b.omega1_;
    }

private:
    S2tGroup(PermSet group, Point omega0, Point omega1);

    PermSet group_;
    Point omega0_;
    Point omega1_;
    std::vector<std::size_t> by_base_images_;

    friend S2tGroup check_s2t(PermSet, Point, Point);
};

/// Throws DomainError (degree < 2, base point out of range), DegenerateOmega,
/// NotAGroup, NotSharplyTransitive.
S2tGroup check_s2t(PermSet group, Point omega0, Point omega1);

/// check_s2t(closure(gens)).
S2tGroup s2t_from_generators(const PermSet& gens, Point omega0, Point omega1,
                             std::size_t cap = kDefaultClosureCap);

/// Conjugate copy: g -> pi g pi^-1, base points moved by pi.
S2tGroup relabel(const S2tGroup& g, const Perm& pi);

/// Same group with other base points.
S2tGroup with_base_points(const S2tGroup& g, Point omega0, Point omega1);

/// J = { g : g^2 = 1 != g }.
PermSet involutions(const S2tGroup& g);

enum class Characteristic { Two, NotTwo };

const char* to_string(Characteristic c);

/// Two iff every involution is fixpoint-free, NotTwo iff every involution
/// has exactly one fixpoint. Throws DichotomyViolation otherwise.
Characteristic characteristic(const S2tGroup& g);

/// The unique involution fixing omega0. Throws PreconditionError in
/// characteristic two.
Perm nu_involution(const S2tGroup& g);

/// A = J o nu (characteristic != 2) or J u {1} (characteristic 2), as the
/// regular permutation set (A, Omega, omega0).
Rps set_A(const S2tGroup& g);

/// a(beta) for the a in A with a(omega0) = alpha.
Point add0(const S2tGroup& g, Point alpha, Point beta);

/// g(beta) for the g fixing omega0 with g(omega1) = alpha; omega0 if
/// alpha or beta is omega0.
Point mul1(const S2tGroup& g, Point alpha, Point beta);

/// (Omega, +0, .1) with zero omega0 and one omega1.
Neardomain functor_K_obj(const S2tGroup& g);

/// f: group index -> group index, phi: point -> point.
struct S2tMorphism {
    ElementMap f;
    ElementMap phi;

    friend bool operator==(const S2tMorphism&, const S2tMorphism&) = default;
    friend auto operator<=>(const S2tMorphism&, const S2tMorphism&) = default;
};

S2tMorphism identity_morphism(const S2tGroup& g);

/// second o first.
S2tMorphism compose(const S2tMorphism& second, const S2tMorphism& first);

/// Equal characteristics, f a homomorphism, phi injective with
/// phi(omega_i) = sigma_i, and phi(x(w)) = f(x)(phi(w)) everywhere.
bool is_s2t_morphism(const S2tMorphism& m, const S2tGroup& source, const S2tGroup& target);

struct InclusionReport {
    bool involutions_preserved = true;  ///< f(J) within the target's involutions
    bool a_preserved = true;            ///< f(A) within the target's A
    std::vector<int> witnesses;         ///< source element indices that fail
    bool pass() const { return involutions_preserved && a_preserved; }
};

InclusionReport lemma_images(const S2tMorphism& m, const S2tGroup& source, const S2tGroup& target);

/// phi, after verifying it is a neardomain morphism K(source) -> K(target).
/// Throws AlgebraError if it is not.
ElementMap functor_K_mor(const S2tMorphism& m, const S2tGroup& source, const S2tGroup& target);

/// t2_group(functor_K_obj(g)).
S2tGroup lk_object(const S2tGroup& g);

/// gamma_g = (k, 1_Omega): lk_object(g) -> g with k(tau_{a,b}) the element of
/// g agreeing with tau_{a,b} on omega0 and omega1. Verified to be an
/// isomorphism.
S2tMorphism gamma_component(const S2tGroup& g);

bool A_is_subgroup(const S2tGroup& g);

/// J^2 = { gh : g, h in J } is a subgroup.
bool J_squared_is_subgroup(const S2tGroup& g);

/// Hom-set via the neardomain side: each morphism of K-images, transported
/// through L and the gamma components. Sorted.
std::vector<S2tMorphism> enumerate_s2t_morphisms(const S2tGroup& source, const S2tGroup& target);

inline constexpr int kDefaultDirectOracleDegree = 9;

/// Independent oracle: every injective phi respecting the base points and,
/// per element, every target element completing the square; keeps the
/// homomorphisms. Empty across characteristics. Throws ResourceError when
/// either degree exceeds `max_degree`. Sorted.
std::vector<S2tMorphism> enumerate_s2t_morphisms_direct(const S2tGroup& source, const S2tGroup& target,
                                                        int max_degree = kDefaultDirectOracleDegree);

}  // namespace algcat
