#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "algcat/errors.hpp"

namespace algcat {

using Point = int;

/// Permutation of {0..n-1} stored as its image array.
///
/// Composition follows the left-action convention used throughout the
/// library: compose(p, q)(x) == p(q(x)).
class Perm {
public:
    /// Throws DomainError unless `images` is a bijection of {0..n-1}, n >= 1.
    explicit Perm(std::vector<Point> images);

    static Perm identity(int degree);

    int degree() const noexcept { return static_cast<int>(images_.size()); }
    const std::vector<Point>& images() const noexcept { return images_; }

    /// Throws DomainError for x outside 0..degree-1.
    Point apply(Point x) const;
    Point operator()(Point x) const { return apply(x); }

    bool is_identity() const noexcept;

    friend bool operator==(const Perm&, const Perm&) = default;
    friend auto operator<=>(const Perm&, const Perm&) = default;

private:
    struct Unchecked {};
    Perm(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

    std::vector<Point> images_;

    friend Perm compose(const Perm&, const Perm&);
    friend Perm inverse(const Perm&);
};

Point apply(const Perm& p, Point x);

/// (p o q)(x) = p(q(x)). Throws DomainError on degree mismatch.
Perm compose(const Perm& p, const Perm& q);

Perm inverse(const Perm& p);

/// p*p == 1 and p != 1.
bool is_involution(const Perm& p);

std::vector<Point> fixpoints(const Perm& p);

std::string to_string(const Perm& p);

/// Sorted, duplicate-free set of permutations of a common degree.
class PermSet {
public:
    /// Sorts and deduplicates. Throws DomainError on mixed degrees or when
    /// `members` is empty and no degree is given.
    explicit PermSet(std::vector<Perm> members);
    PermSet(int degree, std::vector<Perm> members);

    int degree() const noexcept { return degree_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }

    const Perm& operator[](std::size_t i) const { return members_[i]; }
    const std::vector<Perm>& members() const noexcept { return members_; }
    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }

    std::optional<std::size_t> index_of(const Perm& p) const;
    bool contains(const Perm& p) const { return index_of(p).has_value(); }

    /// Index of `p`; throws DomainError when p is not a member.
    std::size_t require_index(const Perm& p) const;

    friend bool operator==(const PermSet&, const PermSet&) = default;

private:
    void normalize();

    int degree_;
    std::vector<Perm> members_;
};

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

/// Smallest subgroup of Sym(n) containing `gens`. Members sorted by image
/// array. Throws ResourceError once the closure exceeds `cap` elements.
PermSet closure(const PermSet& gens, std::size_t cap = kDefaultClosureCap);

/// Closed under composition and inverses and contains the identity.
bool is_subgroup(const PermSet& s);

}  // namespace algcat
