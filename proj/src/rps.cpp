#include "algcat/rps.hpp"

#include <algorithm>
#include <cassert>

namespace algcat {

MissingIdentity::MissingIdentity() : ValidationError("identity permutation is not a member", {}) {}

RegularityViolation::RegularityViolation(Point alpha, Point beta, int count)
    : ValidationError(std::to_string(count) + " members send " + std::to_string(alpha) + " to " +
                          std::to_string(beta) + ", expected exactly 1",
                      {alpha, beta, count}) {}

Rps::Rps(PermSet members, Point basepoint)
    : members_(std::move(members)), basepoint_(basepoint), mu_(members_.size()), mu_inv_(members_.size()) {
    for (std::size_t i = 0; i < members_.size(); ++i) {
        mu_[i] = members_[i](basepoint_);
        mu_inv_[mu_[i]] = i;
    }
}

std::size_t Rps::transporter(Point alpha, Point beta) const {
    for (std::size_t i = 0; i < members_.size(); ++i)
        if (members_[i](alpha) == beta) return i;
    throw DomainError("no transporter; points out of range");
}

Rps check_rps(PermSet members, Point basepoint) {
    const int n = members.degree();
    if (basepoint < 0 || basepoint >= n) throw DomainError("base point out of range");
    if (!members.contains(Perm::identity(n))) throw MissingIdentity();
    std::vector<int> count(static_cast<std::size_t>(n) * n, 0);
    for (const auto& m : members)
        for (Point a = 0; a < n; ++a) ++count[a * n + m(a)];
    for (Point a = 0; a < n; ++a)
        for (Point b = 0; b < n; ++b)
            if (count[a * n + b] != 1) throw RegularityViolation(a, b, count[a * n + b]);
    return Rps(std::move(members), basepoint);
}

Rps relocate_basepoint(const Rps& r, Point basepoint) { return check_rps(r.members(), basepoint); }

std::vector<Point> mu(const Rps& r) {
    std::vector<Point> out(r.members().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = r.point_of(i);
    return out;
}

Perm otimes(const Rps& r, const Perm& m, const Perm& k) {
    const auto im = r.members().require_index(m);
    const auto ik = r.members().require_index(k);
    return r.member(r.member_at(r.member(im)(r.member(ik)(r.basepoint()))));
}

Loop member_loop(const Rps& r) {
    const int n = r.degree();
    std::vector<int> t(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            t[i * n + j] = static_cast<int>(r.member_at(r.member(i)(r.point_of(j))));
    return check_loop(std::move(t), n, static_cast<int>(r.identity_index()));
}

Loop induced_loop(const Rps& r) {
    const int n = r.degree();
    std::vector<int> t(static_cast<std::size_t>(n) * n);
    // mu^-1(b)(omega) = b, so a.b = mu^-1(a)(b).
    for (Point a = 0; a < n; ++a) {
        const Perm& m = r.member(r.member_at(a));
        for (Point b = 0; b < n; ++b) t[a * n + b] = m(b);
    }
    return check_loop(std::move(t), n, r.basepoint());
}

RpsMorphism identity_morphism(const Rps& r) {
    RpsMorphism m;
    for (int i = 0; i < r.degree(); ++i) {
        m.f.push_back(i);
        m.phi.push_back(i);
    }
    return m;
}

RpsMorphism compose(const RpsMorphism& second, const RpsMorphism& first) {
    RpsMorphism out;
    for (int i : first.f) out.f.push_back(second.f.at(i));
    for (int x : first.phi) out.phi.push_back(second.phi.at(x));
    return out;
}

namespace {

bool in_range(const ElementMap& m, int size, int range) {
    return static_cast<int>(m.size()) == size &&
           std::all_of(m.begin(), m.end(), [&](int y) { return y >= 0 && y < range; });
}

}  // namespace

bool is_rps_morphism(const RpsMorphism& m, const Rps& r, const Rps& s) {
    const int n = r.degree();
    if (!in_range(m.f, n, s.degree()) || !in_range(m.phi, n, s.degree())) return false;
    if (m.phi[r.basepoint()] != s.basepoint()) return false;
    for (int i = 0; i < n; ++i) {
        const Perm& src = r.member(i);
        const Perm& dst = s.member(m.f[i]);
        for (Point a = 0; a < n; ++a)
            if (m.phi[src(a)] != dst(m.phi[a])) return false;
    }
    assert(static_cast<std::size_t>(m.f[r.identity_index()]) == s.identity_index());
    return true;
}

bool characterize_morphism(const ElementMap& f, const ElementMap& phi, const Rps& r, const Rps& s) {
    const int n = r.degree();
    if (!in_range(f, n, s.degree()) || !in_range(phi, n, s.degree()))
        throw DomainError("characterize_morphism: maps are not total");
    if (phi[r.basepoint()] != s.basepoint())
        throw PreconditionError("characterize_morphism requires phi(omega) = sigma");
    for (int i = 0; i < n; ++i)
        if (s.member(f[i])(s.basepoint()) != phi[r.point_of(i)]) return false;
    return is_loop_morphism(f, member_loop(r), member_loop(s));
}

RpsMorphism lift_loop_morphism(const ElementMap& phi, const Rps& r, const Rps& s) {
    if (!is_loop_morphism(phi, induced_loop(r), induced_loop(s)))
        throw PreconditionError("lift_loop_morphism: phi is not a loop morphism of the induced loops");
    RpsMorphism m;
    m.phi = phi;
    m.f.resize(r.degree());
    for (int i = 0; i < r.degree(); ++i) m.f[i] = static_cast<int>(s.member_at(phi[r.point_of(i)]));
    return m;
}

std::vector<RpsMorphism> enumerate_rps_morphisms(const Rps& r, const Rps& s) {
    std::vector<RpsMorphism> out;
    for (const auto& phi : enumerate_loop_morphisms(induced_loop(r), induced_loop(s)))
        out.push_back(lift_loop_morphism(phi, r, s));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<RpsMorphism> enumerate_rps_morphisms_direct(const Rps& r, const Rps& s) {
    const int n = r.degree(), k = s.degree();
    std::vector<RpsMorphism> out;
    ElementMap phi(n, 0);
    phi[r.basepoint()] = s.basepoint();
    for (;;) {
        // Admissible images of every member under this phi.
        std::vector<std::vector<int>> choices(n);
        bool dead = false;
        for (int i = 0; i < n && !dead; ++i) {
            for (int j = 0; j < k; ++j) {
                bool ok = true;
                for (Point a = 0; a < n && ok; ++a) ok = phi[r.member(i)(a)] == s.member(j)(phi[a]);
                if (ok) choices[i].push_back(j);
            }
            dead = choices[i].empty();
        }
        if (!dead) {
            std::vector<std::size_t> pick(n, 0);
            for (;;) {
                RpsMorphism m{ElementMap(n), phi};
                for (int i = 0; i < n; ++i) m.f[i] = choices[i][pick[i]];
                out.push_back(std::move(m));
                int i = n - 1;
                while (i >= 0 && ++pick[i] == choices[i].size()) pick[i--] = 0;
                if (i < 0) break;
            }
        }
        // Next phi, odometer style, skipping the pinned base point.
        int x = n - 1;
        for (; x >= 0; --x) {
            if (x == r.basepoint()) continue;
            if (++phi[x] < k) break;
            phi[x] = 0;
        }
        if (x < 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace algcat
