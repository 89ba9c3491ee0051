#pragma once

#include <cstddef>
#include <vector>

#include "algcat/errors.hpp"
#include "algcat/loops.hpp"
#include "algcat/permcore.hpp"

namespace algcat {

class MissingIdentity : public ValidationError {
public:
    MissingIdentity();
};

/// Some pair (alpha, beta) is moved by `count` != 1 members.
/// witness = {alpha, beta, count}.
class RegularityViolation : public ValidationError {
public:
    RegularityViolation(Point alpha, Point beta, int count);
};

/// Regular permutation set (M, Omega, omega): M contains the identity and
/// for all alpha, beta exactly one member sends alpha to beta.
///
/// Members are addressed by their index in the sorted PermSet.
class Rps {
public:
    const PermSet& members() const noexcept { return members_; }
    int degree() const noexcept { return members_.degree(); }
    Point basepoint() const noexcept { return basepoint_; }
    const Perm& member(std::size_t i) const { return members_[i]; }

    /// mu: member index -> image of the base point.
    Point point_of(std::size_t member) const { return mu_[member]; }
    /// mu^-1: the unique member sending the base point to `p`.
    std::size_t member_at(Point p) const { return mu_inv_[p]; }
    /// The unique member sending `alpha` to `beta`.
    std::size_t transporter(Point alpha, Point beta) const;

    std::size_t identity_index() const { return mu_inv_[basepoint_]; }

    friend bool operator==(const Rps& a, const Rps& b) {
        return a.members_ == b.members_ && a.basepoint_ == b.basepoint_;
    }

private:
    Rps(PermSet members, Point basepoint);

    PermSet members_;
    Point basepoint_;
    std::vector<Point> mu_;
    std::vector<std::size_t> mu_inv_;

    friend Rps check_rps(PermSet, Point);
};

/// Throws DomainError (base point out of range), MissingIdentity,
/// RegularityViolation for the first offending (alpha, beta).
Rps check_rps(PermSet members, Point basepoint);

/// Same member set with another base point.
Rps relocate_basepoint(const Rps& r, Point basepoint);

/// Evaluation at the base point, as a member-index -> point table.
std::vector<Point> mu(const Rps& r);

/// mu^-1((m o k)(omega)). Throws DomainError for non-members.
Perm otimes(const Rps& r, const Perm& m, const Perm& k);

/// (M, otimes) on member indices.
Loop member_loop(const Rps& r);

/// (Omega, .) with a.b = (mu^-1(a) o mu^-1(b))(omega), identity omega.
Loop induced_loop(const Rps& r);

/// f: member index -> member index, phi: point -> point.
struct RpsMorphism {
    ElementMap f;
    ElementMap phi;

    friend bool operator==(const RpsMorphism&, const RpsMorphism&) = default;
    friend auto operator<=>(const RpsMorphism&, const RpsMorphism&) = default;
};

RpsMorphism identity_morphism(const Rps& r);

/// second o first.
RpsMorphism compose(const RpsMorphism& second, const RpsMorphism& first);

/// phi(omega) = sigma and phi(m(alpha)) = f(m)(phi(alpha)) for all m, alpha.
bool is_rps_morphism(const RpsMorphism& m, const Rps& r, const Rps& s);

/// f(m)(sigma) = phi(m(omega)) for all m, and f is a loop morphism
/// member_loop(r) -> member_loop(s). Requires phi(omega) = sigma.
bool characterize_morphism(const ElementMap& f, const ElementMap& phi, const Rps& r, const Rps& s);

inline Loop functor_F_obj(const Rps& r) { return induced_loop(r); }
inline ElementMap functor_F_mor(const RpsMorphism& m) { return m.phi; }

/// (nu^-1 o phi o mu, phi). Throws PreconditionError unless phi is a loop
/// morphism induced_loop(r) -> induced_loop(s).
RpsMorphism lift_loop_morphism(const ElementMap& phi, const Rps& r, const Rps& s);

/// Hom-set obtained by lifting every loop morphism of the induced loops.
std::vector<RpsMorphism> enumerate_rps_morphisms(const Rps& r, const Rps& s);

/// Independent oracle: every phi with phi(omega) = sigma, and for each
/// member every target member completing the commuting square. Sorted.
std::vector<RpsMorphism> enumerate_rps_morphisms_direct(const Rps& r, const Rps& s);

}  // namespace algcat
