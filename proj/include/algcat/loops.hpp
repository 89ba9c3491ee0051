#pragma once

#include <optional>
#include <vector>

#include "algcat/errors.hpp"
#include "algcat/permcore.hpp"

namespace algcat {

class Rps;

/// Map between element index sets; position i holds the image of element i.
using ElementMap = std::vector<int>;

/// A row or column of a Cayley table that is not a permutation.
/// witness = {is_row (1/0), index, duplicated value}.
class LatinSquareViolation : public ValidationError {
public:
    LatinSquareViolation(bool row, int index, int value);
    bool is_row() const { return witness()[0] == 1; }
    int index() const { return witness()[1]; }
    int value() const { return witness()[2]; }
};

/// The claimed identity fails on one side. witness = {is_left (1/0), element}.
class IdentityViolation : public ValidationError {
public:
    IdentityViolation(bool left, int element);
};

/// Finite loop: Latin square Cayley table with a two-sided identity.
class Loop {
public:
    int order() const noexcept { return order_; }
    int identity() const noexcept { return identity_; }
    int operator()(int a, int b) const { return table_[a * order_ + b]; }
    int mul(int a, int b) const { return table_[a * order_ + b]; }

    /// Row-major n*n table.
    const std::vector<int>& table() const noexcept { return table_; }
    std::vector<std::vector<int>> rows() const;

    friend bool operator==(const Loop&, const Loop&) = default;

private:
    Loop(int order, std::vector<int> table, int identity)
        : order_(order), table_(std::move(table)), identity_(identity) {}

    int order_;
    std::vector<int> table_;
    int identity_;

    friend Loop check_loop(std::vector<int>, int, int);
};

/// Validates a row-major n*n table. Throws DomainError for malformed
/// shapes or out-of-range entries, LatinSquareViolation, IdentityViolation.
Loop check_loop(std::vector<int> table, int order, int identity);
Loop check_loop(const std::vector<std::vector<int>>& rows, int identity);

/// Z_n with identity 0.
Loop cyclic_loop(int n);

bool is_associative(const Loop& l);

/// First triple (a,b,c), lexicographically, with (ab)c != a(bc).
std::optional<std::vector<int>> associativity_witness(const Loop& l);

bool is_loop_morphism(const ElementMap& f, const Loop& source, const Loop& target);

/// Complete hom-set in lexicographic order of image tuples.
std::vector<ElementMap> enumerate_loop_morphisms(const Loop& source, const Loop& target);

/// x -> a*x.
Perm left_translation(const Loop& l, int a);

/// (left translations, elements, identity).
Rps loop_to_rps(const Loop& l);

/// First bijective morphism in lexicographic order, if any.
std::optional<ElementMap> loops_isomorphic(const Loop& a, const Loop& b);

/// Table relabeled along the bijection `pi`: new(pi a, pi b) = pi(a b).
Loop relabel(const Loop& l, const ElementMap& pi);

/// Lexicographically least relabeling fixing the identity, which must be 0.
Loop canonical_form(const Loop& l);

inline constexpr int kDefaultLoopOrderCap = 6;

/// All loops of order n with identity 0 up to isomorphism, as canonical
/// forms in increasing table order. Throws ResourceError when n > cap.
std::vector<Loop> enumerate_loops(int n, int cap = kDefaultLoopOrderCap);

}  // namespace algcat
