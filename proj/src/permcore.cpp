#include "algcat/permcore.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace algcat {

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
    const auto n = images_.size();
    if (n == 0) throw DomainError("permutation of degree 0");
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        const Point y = images_[i];
        if (y < 0 || static_cast<std::size_t>(y) >= n)
            throw DomainError("image " + std::to_string(y) + " of point " + std::to_string(i) +
                              " out of range for degree " + std::to_string(n));
        if (seen[y]) throw DomainError("image " + std::to_string(y) + " repeated; not a bijection");
        seen[y] = true;
    }
}

Perm Perm::identity(int degree) {
    if (degree < 1) throw DomainError("permutation of degree " + std::to_string(degree));
    std::vector<Point> img(degree);
    for (int i = 0; i < degree; ++i) img[i] = i;
    return Perm(std::move(img), Unchecked{});
}

Point Perm::apply(Point x) const {
    if (x < 0 || x >= degree())
        throw DomainError("point " + std::to_string(x) + " out of range for degree " +
                          std::to_string(degree()));
    return images_[x];
}

bool Perm::is_identity() const noexcept {
    for (int i = 0; i < degree(); ++i)
        if (images_[i] != i) return false;
    return true;
}

Point apply(const Perm& p, Point x) { return p.apply(x); }

Perm compose(const Perm& p, const Perm& q) {
    if (p.degree() != q.degree())
        throw DomainError("compose: degree mismatch " + std::to_string(p.degree()) + " vs " +
                          std::to_string(q.degree()));
    std::vector<Point> img(p.degree());
    for (int x = 0; x < p.degree(); ++x) img[x] = p.images_[q.images_[x]];
    return Perm(std::move(img), Perm::Unchecked{});
}

Perm inverse(const Perm& p) {
    std::vector<Point> img(p.degree());
    for (int x = 0; x < p.degree(); ++x) img[p.images_[x]] = x;
    return Perm(std::move(img), Perm::Unchecked{});
}

bool is_involution(const Perm& p) { return !p.is_identity() && compose(p, p).is_identity(); }

std::vector<Point> fixpoints(const Perm& p) {
    std::vector<Point> out;
    for (int x = 0; x < p.degree(); ++x)
        if (p(x) == x) out.push_back(x);
    return out;
}

std::string to_string(const Perm& p) {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < p.degree(); ++i) os << (i ? "," : "") << p.images()[i];
    os << ']';
    return os.str();
}

namespace {

int common_degree(const std::vector<Perm>& members) {
    if (members.empty()) throw DomainError("empty permutation set has no degree");
    return members.front().degree();
}

}  // namespace

// Delegating would move `members` before common_degree reads it.
PermSet::PermSet(std::vector<Perm> members) : degree_(common_degree(members)), members_(std::move(members)) {
    normalize();
}

PermSet::PermSet(int degree, std::vector<Perm> members) : degree_(degree), members_(std::move(members)) {
    normalize();
}

void PermSet::normalize() {
    for (const auto& m : members_)
        if (m.degree() != degree_)
            throw DomainError("permutation set mixes degrees " + std::to_string(degree_) + " and " +
                              std::to_string(m.degree()));
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

std::optional<std::size_t> PermSet::index_of(const Perm& p) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), p);
    if (it == members_.end() || *it != p) return std::nullopt;
    return static_cast<std::size_t>(it - members_.begin());
}

std::size_t PermSet::require_index(const Perm& p) const {
    if (auto i = index_of(p)) return *i;
    throw DomainError("permutation " + to_string(p) + " is not a member");
}

PermSet closure(const PermSet& gens, std::size_t cap) {
    if (gens.empty()) throw DomainError("closure of an empty generator set");
    // Breadth-first search of the Cayley graph; in a finite group the
    // monoid generated by gens is already inverse-closed.
    std::set<Perm> seen{Perm::identity(gens.degree())};
    std::deque<Perm> frontier{Perm::identity(gens.degree())};
    while (!frontier.empty()) {
        Perm g = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& s : gens) {
            Perm h = compose(s, g);
            if (seen.insert(h).second) {
                if (seen.size() > cap)
                    throw ResourceError("closure exceeds cap of " + std::to_string(cap) + " elements");
                frontier.push_back(std::move(h));
            }
        }
    }
    return PermSet(gens.degree(), std::vector<Perm>(seen.begin(), seen.end()));
}

bool is_subgroup(const PermSet& s) {
    if (s.empty() || !s.contains(Perm::identity(s.degree()))) return false;
    for (const auto& a : s) {
        if (!s.contains(inverse(a))) return false;
        for (const auto& b : s)
            if (!s.contains(compose(a, b))) return false;
    }
    return true;
}

}  // namespace algcat
