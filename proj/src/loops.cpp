#include "algcat/loops.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

#include "algcat/detail/backtrack.hpp"
#include "algcat/rps.hpp"

namespace algcat {

LatinSquareViolation::LatinSquareViolation(bool row, int index, int value)
    : ValidationError(std::string(row ? "row " : "column ") + std::to_string(index) + " repeats value " +
                          std::to_string(value),
                      {row ? 1 : 0, index, value}) {}

IdentityViolation::IdentityViolation(bool left, int element)
    : ValidationError(std::string(left ? "left" : "right") + " identity law fails at element " +
                          std::to_string(element),
                      {left ? 1 : 0, element}) {}

std::vector<std::vector<int>> Loop::rows() const {
    std::vector<std::vector<int>> out(order_);
    for (int a = 0; a < order_; ++a)
        out[a].assign(table_.begin() + a * order_, table_.begin() + (a + 1) * order_);
    return out;
}

Loop check_loop(std::vector<int> table, int order, int identity) {
    if (order < 1) throw DomainError("loop order must be at least 1");
    if (table.size() != static_cast<std::size_t>(order) * order)
        throw DomainError("table has " + std::to_string(table.size()) + " entries, expected " +
                          std::to_string(order * order));
    if (identity < 0 || identity >= order) throw DomainError("identity element out of range");
    for (int v : table)
        if (v < 0 || v >= order) throw DomainError("table entry " + std::to_string(v) + " out of range");

    for (int a = 0; a < order; ++a) {
        std::vector<bool> seen(order, false);
        for (int b = 0; b < order; ++b) {
            const int v = table[a * order + b];
            if (seen[v]) throw LatinSquareViolation(true, a, v);
            seen[v] = true;
        }
    }
    for (int b = 0; b < order; ++b) {
        std::vector<bool> seen(order, false);
        for (int a = 0; a < order; ++a) {
            const int v = table[a * order + b];
            if (seen[v]) throw LatinSquareViolation(false, b, v);
            seen[v] = true;
        }
    }
    for (int x = 0; x < order; ++x) {
        if (table[identity * order + x] != x) throw IdentityViolation(true, x);
        if (table[x * order + identity] != x) throw IdentityViolation(false, x);
    }
    return Loop(order, std::move(table), identity);
}

Loop check_loop(const std::vector<std::vector<int>>& rows, int identity) {
    const int n = static_cast<int>(rows.size());
    std::vector<int> flat;
    flat.reserve(rows.size() * rows.size());
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != n) throw DomainError("table is not square");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return check_loop(std::move(flat), n, identity);
}

Loop cyclic_loop(int n) {
    std::vector<int> t(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
    return check_loop(std::move(t), n, 0);
}

std::optional<std::vector<int>> associativity_witness(const Loop& l) {
    const int n = l.order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (l(l(a, b), c) != l(a, l(b, c))) return std::vector<int>{a, b, c};
    return std::nullopt;
}

bool is_associative(const Loop& l) { return !associativity_witness(l).has_value(); }

namespace {

bool well_formed(const ElementMap& f, const Loop& source, const Loop& target) {
    if (static_cast<int>(f.size()) != source.order()) return false;
    return std::all_of(f.begin(), f.end(), [&](int y) { return y >= 0 && y < target.order(); });
}

// Checks every product a*b whose three participants are all assigned and at
// least one of them is element i.
bool closed_products_hold(const ElementMap& f, int i, const Loop& source, const Loop& target) {
    for (int a = 0; a <= i; ++a)
        for (int b = 0; b <= i; ++b) {
            const int ab = source(a, b);
            if (ab > i || std::max({a, b, ab}) != i) continue;
            if (f[ab] != target(f[a], f[b])) return false;
        }
    return true;
}

std::vector<ElementMap> search_morphisms(const Loop& source, const Loop& target, bool injective,
                                         std::size_t limit) {
    std::vector<ElementMap> out;
    detail::backtrack_maps(
        source.order(), target.order(), injective,
        [&](const ElementMap& f, int i) { return closed_products_hold(f, i, source, target); },
        [&](const ElementMap& f) {
            out.push_back(f);
            return out.size() < limit;
        });
    return out;
}

}  // namespace

bool is_loop_morphism(const ElementMap& f, const Loop& source, const Loop& target) {
    if (!well_formed(f, source, target)) return false;
    const int n = source.order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (f[source(a, b)] != target(f[a], f[b])) return false;
    // f(e) = f(e)f(e) forces f(e) to be the identity of the target.
    assert(f[source.identity()] == target.identity());
    return true;
}

std::vector<ElementMap> enumerate_loop_morphisms(const Loop& source, const Loop& target) {
    auto homs = search_morphisms(source, target, false, static_cast<std::size_t>(-1));
    for ([[maybe_unused]] const auto& f : homs) assert(is_loop_morphism(f, source, target));
    return homs;
}

Perm left_translation(const Loop& l, int a) {
    if (a < 0 || a >= l.order()) throw DomainError("element out of range");
    std::vector<Point> img(l.order());
    for (int x = 0; x < l.order(); ++x) img[x] = l(a, x);
    return Perm(std::move(img));
}

Rps loop_to_rps(const Loop& l) {
    std::vector<Perm> translations;
    translations.reserve(l.order());
    for (int a = 0; a < l.order(); ++a) translations.push_back(left_translation(l, a));
    return check_rps(PermSet(l.order(), std::move(translations)), l.identity());
}

std::optional<ElementMap> loops_isomorphic(const Loop& a, const Loop& b) {
    if (a.order() != b.order()) return std::nullopt;
    auto found = search_morphisms(a, b, true, 1);
    if (found.empty()) return std::nullopt;
    return found.front();
}

Loop relabel(const Loop& l, const ElementMap& pi) {
    const int n = l.order();
    if (static_cast<int>(pi.size()) != n) throw DomainError("relabeling has wrong size");
    Perm(std::vector<Point>(pi.begin(), pi.end()));  // validates bijectivity
    std::vector<int> t(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[pi[a] * n + pi[b]] = pi[l(a, b)];
    return check_loop(std::move(t), n, pi[l.identity()]);
}

namespace {

// Lexicographic minimum over relabelings fixing 0; `pi` must start as the
// identity and is permuted in place.
std::vector<int> min_relabeled_table(const Loop& l) {
    const int n = l.order();
    std::vector<int> pi(n);
    std::iota(pi.begin(), pi.end(), 0);
    std::vector<int> best = l.table();
    std::vector<int> cur(best.size());
    while (std::next_permutation(pi.begin() + 1, pi.end())) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) cur[pi[a] * n + pi[b]] = pi[l(a, b)];
        if (cur < best) best = cur;
    }
    return best;
}

}  // namespace

Loop canonical_form(const Loop& l) {
    if (l.identity() != 0) throw PreconditionError("canonical_form expects identity 0");
    return check_loop(min_relabeled_table(l), l.order(), 0);
}

std::vector<Loop> enumerate_loops(int n, int cap) {
    if (n < 1) throw DomainError("loop order must be at least 1");
    if (n > cap)
        throw ResourceError("loop enumeration capped at order " + std::to_string(cap) + ", got " +
                            std::to_string(n));

    // Reduced Latin squares: row 0 and column 0 are the identity.
    std::vector<int> t(static_cast<std::size_t>(n) * n, -1);
    for (int x = 0; x < n; ++x) t[x] = t[x * n] = x;
    std::vector<unsigned> row_used(n, 0), col_used(n, 0);
    for (int x = 0; x < n; ++x) {
        row_used[x] |= 1u << x;
        col_used[x] |= 1u << x;
    }
    std::set<std::vector<int>> classes;
    auto rec = [&](auto&& self, int cell) -> void {
        if (cell == n * n) {
            Loop l = check_loop(t, n, 0);
            classes.insert(min_relabeled_table(l));
            return;
        }
        const int a = cell / n, b = cell % n;
        if (a == 0 || b == 0) {
            self(self, cell + 1);
            return;
        }
        for (int v = 0; v < n; ++v) {
            const unsigned bit = 1u << v;
            if ((row_used[a] & bit) || (col_used[b] & bit)) continue;
            row_used[a] |= bit;
            col_used[b] |= bit;
            t[cell] = v;
            self(self, cell + 1);
            row_used[a] &= ~bit;
            col_used[b] &= ~bit;
        }
        t[cell] = -1;
    };
    rec(rec, 0);

    std::vector<Loop> out;
    out.reserve(classes.size());
    for (const auto& table : classes) out.push_back(check_loop(table, n, 0));
    return out;
}

}  // namespace algcat
