#pragma once

#include <utility>
#include <vector>

#include "algcat/errors.hpp"
#include "algcat/loops.hpp"
#include "algcat/permcore.hpp"

namespace algcat {

class S2tGroup;
struct S2tMorphism;

/// Violation of one of the six neardomain axioms.
/// witness()[0] is the axiom index 1..6, the rest are the offending elements.
class AxiomViolation : public ValidationError {
public:
    AxiomViolation(int axiom, std::vector<int> elements, const std::string& detail);
    int axiom() const { return witness()[0]; }
    std::vector<int> elements() const { return {witness().begin() + 1, witness().end()}; }
};

/// (F, +, .) with distinguished zero and one, validated against:
///   1. (F,+) is a loop with neutral element zero
///   2. a+b = 0 implies b+a = 0
///   3. (F\{0}, .) is a group with neutral element one
///   4. 0.a = 0
///   5. a.(b+c) = a.b + a.c
///   6. for all a,b there is d != 0 with a+(b+x) = (a+b)+d.x for every x
class Neardomain {
public:
    int order() const noexcept { return order_; }
    int zero() const noexcept { return zero_; }
    int one() const noexcept { return one_; }
    int add(int a, int b) const { return add_[a * order_ + b]; }
    int mul(int a, int b) const { return mul_[a * order_ + b]; }
    const std::vector<int>& add_table() const noexcept { return add_; }
    const std::vector<int>& mul_table() const noexcept { return mul_; }

    /// The unique y with a + y = c.
    int left_subtract(int a, int c) const { return add_left_div_[a * order_ + c]; }

    friend bool operator==(const Neardomain& a, const Neardomain& b) {
        return a.order_ == b.order_ && a.zero_ == b.zero_ && a.one_ == b.one_ && a.add_ == b.add_ &&
               a.mul_ == b.mul_;
    }

private:
    Neardomain(int order, std::vector<int> add, std::vector<int> mul, int zero, int one);

    int order_;
    std::vector<int> add_;
    std::vector<int> mul_;
    int zero_;
    int one_;
    std::vector<int> add_left_div_;

    friend Neardomain check_neardomain(std::vector<int>, std::vector<int>, int, int, int);
};

/// Row-major n*n tables. Throws DomainError for malformed input (shape,
/// range, zero == one, n < 2) and AxiomViolation for the first failing axiom.
Neardomain check_neardomain(std::vector<int> add, std::vector<int> mul, int order, int zero, int one);

/// The d_{a,b} of axiom 6.
int d_coeff(const Neardomain& f, int a, int b);

/// All d_{a,b} equal one. When true, (F,+) is also verified associative.
bool is_nearfield(const Neardomain& f);

/// 1 + 1 = 0.
bool characteristic_two(const Neardomain& f);

/// phi preserves + and . on all pairs and sends one to one.
bool is_nd_morphism(const ElementMap& phi, const Neardomain& source, const Neardomain& target);

/// Complete hom-set, lexicographic in image tuples; every member injective.
std::vector<ElementMap> enumerate_nd_morphisms(const Neardomain& source, const Neardomain& target);

/// Same structure with elements renamed along the bijection pi.
Neardomain relabel(const Neardomain& f, const ElementMap& pi);

/// GF(q) for q in {2,3,4,5,7,8,9,11,13,16}. Elements of GF(p^k) are indexed
/// by sum c_i p^i for the polynomial sum c_i t^i, reduced modulo:
///   q=4: t^2+t+1   q=8: t^3+t+1   q=9: t^2+1   q=16: t^4+t+1
/// Throws DomainError for any other q.
Neardomain galois_field(int q);

/// Order 9 proper nearfield on the additive group of GF(9):
/// x o y = x*y if x is a square in GF(9)*, x*y^3 otherwise.
Neardomain dickson_nearfield_9();

/// tau_{a,b}: x -> a + b.x.
struct AffineMap {
    int a;
    int b;
    Perm as_perm;
};

AffineMap affine_map(const Neardomain& f, int a, int b);

/// (a, b) with p = tau_{a,b}; a = p(0), b = left_subtract(a, p(1)).
/// Throws DomainError when p is not affine.
std::pair<int, int> affine_parameters(const Neardomain& f, const Perm& p);

/// (T2(F), F, 0, 1). Verifies the composition law
/// tau_{a,b} o tau_{k,l} = tau_{a+bk, d_{a,bk} b l} on all pairs.
S2tGroup t2_group(const Neardomain& f);

/// (f_phi, phi) with f_phi(tau_{a,b}) = tau_{phi a, phi b}, between
/// t2_group(source) and t2_group(target). Throws PreconditionError unless
/// phi is a neardomain morphism.
S2tMorphism functor_L_mor(const ElementMap& phi, const Neardomain& source, const Neardomain& target);

}  // namespace algcat
