#include "algcat/neardomain.hpp"

#include <algorithm>
#include <map>

#include "algcat/detail/backtrack.hpp"
#include "algcat/s2t.hpp"

namespace algcat {

AxiomViolation::AxiomViolation(int axiom, std::vector<int> elements, const std::string& detail)
    : ValidationError("axiom " + std::to_string(axiom) + " violated: " + detail, [&] {
          std::vector<int> w{axiom};
          w.insert(w.end(), elements.begin(), elements.end());
          return w;
      }()) {}

Neardomain::Neardomain(int order, std::vector<int> add, std::vector<int> mul, int zero, int one)
    : order_(order), add_(std::move(add)), mul_(std::move(mul)), zero_(zero), one_(one),
      add_left_div_(static_cast<std::size_t>(order) * order) {
    for (int a = 0; a < order_; ++a)
        for (int y = 0; y < order_; ++y) add_left_div_[a * order_ + add_[a * order_ + y]] = y;
}

namespace {

std::string tuple_str(std::initializer_list<int> xs) {
    std::string s = "(";
    bool first = true;
    for (int x : xs) {
        s += (first ? "" : ",") + std::to_string(x);
        first = false;
    }
    return s + ")";
}

}  // namespace

Neardomain check_neardomain(std::vector<int> add, std::vector<int> mul, int n, int zero, int one) {
    if (n < 2) throw DomainError("neardomain order must be at least 2");
    const auto cells = static_cast<std::size_t>(n) * n;
    if (add.size() != cells || mul.size() != cells) throw DomainError("tables must be n*n");
    if (zero < 0 || zero >= n || one < 0 || one >= n) throw DomainError("zero/one out of range");
    if (zero == one) throw DomainError("zero and one must differ");
    for (int v : mul)
        if (v < 0 || v >= n) throw DomainError("mul entry " + std::to_string(v) + " out of range");
    auto A = [&](int a, int b) { return add[a * n + b]; };
    auto M = [&](int a, int b) { return mul[a * n + b]; };

    // 1
    try {
        check_loop(add, n, zero);
    } catch (const ValidationError& e) {
        throw AxiomViolation(1, e.witness(), e.what());
    } catch (const DomainError& e) {
        throw AxiomViolation(1, {}, e.what());
    }
    // 2
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (A(a, b) == zero && A(b, a) != zero)
                throw AxiomViolation(2, {a, b}, "a+b=0 but b+a!=0 at " + tuple_str({a, b}));
    // 3
    for (int a = 0; a < n; ++a) {
        if (a == zero) continue;
        if (M(one, a) != a || M(a, one) != a)
            throw AxiomViolation(3, {a}, "one is not neutral for " + std::to_string(a));
        bool has_inverse = false;
        for (int b = 0; b < n; ++b) {
            if (b == zero) continue;
            if (M(a, b) == zero)
                throw AxiomViolation(3, {a, b}, "product of nonzero elements is zero at " + tuple_str({a, b}));
            has_inverse = has_inverse || M(a, b) == one;
        }
        if (!has_inverse) throw AxiomViolation(3, {a}, "no inverse for " + std::to_string(a));
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (a == zero || b == zero || c == zero) continue;
                if (M(M(a, b), c) != M(a, M(b, c)))
                    throw AxiomViolation(3, {a, b, c}, "multiplication not associative at " + tuple_str({a, b, c}));
            }
    // 4
    for (int a = 0; a < n; ++a)
        if (M(zero, a) != zero) throw AxiomViolation(4, {a}, "0.a != 0 at a=" + std::to_string(a));
    // 5
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (M(a, A(b, c)) != A(M(a, b), M(a, c)))
                    throw AxiomViolation(5, {a, b, c}, "a.(b+c) != a.b+a.c at " + tuple_str({a, b, c}));
    // Consequence of 1 and 5.
    for (int a = 0; a < n; ++a)
        if (M(a, zero) != zero) throw AxiomViolation(5, {a}, "a.0 != 0 at a=" + std::to_string(a));

    Neardomain f(n, std::move(add), std::move(mul), zero, one);
    // 6: solve at x = one, then confirm for every x.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const int ab = f.add(a, b);
            const int d = f.left_subtract(ab, f.add(a, f.add(b, one)));
            if (d == zero) throw AxiomViolation(6, {a, b}, "d_{a,b} would be zero at " + tuple_str({a, b}));
            for (int x = 0; x < n; ++x)
                if (f.add(a, f.add(b, x)) != f.add(ab, f.mul(d, x)))
                    throw AxiomViolation(6, {a, b, x}, "no d_{a,b} works at " + tuple_str({a, b, x}));
        }
    return f;
}

int d_coeff(const Neardomain& f, int a, int b) {
    const int n = f.order();
    if (a < 0 || a >= n || b < 0 || b >= n) throw DomainError("d_coeff: element out of range");
    const int ab = f.add(a, b);
    const int d = f.left_subtract(ab, f.add(a, f.add(b, f.one())));
    for (int x = 0; x < n; ++x)
        if (f.add(a, f.add(b, x)) != f.add(ab, f.mul(d, x)))
            throw AxiomViolation(6, {a, b, x}, "d_{a,b} fails at x=" + std::to_string(x));
    return d;
}

bool is_nearfield(const Neardomain& f) {
    const int n = f.order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (d_coeff(f, a, b) != f.one()) return false;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (f.add(f.add(a, b), c) != f.add(a, f.add(b, c)))
                    throw AlgebraError("all d_{a,b} are one but addition is not associative");
    return true;
}

bool characteristic_two(const Neardomain& f) { return f.add(f.one(), f.one()) == f.zero(); }

bool is_nd_morphism(const ElementMap& phi, const Neardomain& source, const Neardomain& target) {
    const int n = source.order();
    if (static_cast<int>(phi.size()) != n) return false;
    for (int y : phi)
        if (y < 0 || y >= target.order()) return false;
    // phi(1) = phi(1)phi(1) admits the constant zero map otherwise.
    if (phi[source.one()] != target.one()) return false;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (phi[source.add(a, b)] != target.add(phi[a], phi[b])) return false;
            if (phi[source.mul(a, b)] != target.mul(phi[a], phi[b])) return false;
        }
    std::vector<int> sorted = phi;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw AlgebraError("neardomain morphism is not injective");
    return true;
}

std::vector<ElementMap> enumerate_nd_morphisms(const Neardomain& source, const Neardomain& target) {
    std::vector<ElementMap> out;
    auto consistent = [&](const ElementMap& f, int i) {
        if (i == source.one() && f[i] != target.one()) return false;
        for (int a = 0; a <= i; ++a)
            for (int b = 0; b <= i; ++b) {
                const int s = source.add(a, b), p = source.mul(a, b);
                if (s <= i && std::max({a, b, s}) == i && f[s] != target.add(f[a], f[b])) return false;
                if (p <= i && std::max({a, b, p}) == i && f[p] != target.mul(f[a], f[b])) return false;
            }
        return true;
    };
    // Not restricted to injective maps: injectivity is a consequence that the
    // caller may check, not a search assumption.
    detail::backtrack_maps(source.order(), target.order(), false, consistent, [&](const ElementMap& f) {
        out.push_back(f);
        return true;
    });
    for (const auto& f : out)
        if (!is_nd_morphism(f, source, target)) throw AlgebraError("morphism search emitted a non-morphism");
    return out;
}

Neardomain relabel(const Neardomain& f, const ElementMap& pi) {
    const int n = f.order();
    if (static_cast<int>(pi.size()) != n) throw DomainError("relabeling has wrong size");
    Perm(std::vector<Point>(pi.begin(), pi.end()));
    std::vector<int> add(static_cast<std::size_t>(n) * n), mul(add.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            add[pi[a] * n + pi[b]] = pi[f.add(a, b)];
            mul[pi[a] * n + pi[b]] = pi[f.mul(a, b)];
        }
    return check_neardomain(std::move(add), std::move(mul), n, pi[f.zero()], pi[f.one()]);
}

namespace {

struct FieldSpec {
    int p;
    int k;
    std::vector<int> modulus;  // low to high, monic
};

const std::map<int, FieldSpec>& field_specs() {
    static const std::map<int, FieldSpec> specs{
        {2, {2, 1, {0, 1}}},      {3, {3, 1, {0, 1}}},        {4, {2, 2, {1, 1, 1}}},
        {5, {5, 1, {0, 1}}},      {7, {7, 1, {0, 1}}},        {8, {2, 3, {1, 1, 0, 1}}},
        {9, {3, 2, {1, 0, 1}}},   {11, {11, 1, {0, 1}}},      {13, {13, 1, {0, 1}}},
        {16, {2, 4, {1, 1, 0, 0, 1}}},
    };
    return specs;
}

std::vector<int> digits(int x, int p, int k) {
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i, x /= p) c[i] = x % p;
    return c;
}

int undigits(const std::vector<int>& c, int p) {
    int x = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) x = x * p + *it;
    return x;
}

int poly_mul(int x, int y, const FieldSpec& s) {
    if (s.k == 1) return (x * y) % s.p;
    auto a = digits(x, s.p, s.k), b = digits(y, s.p, s.k);
    std::vector<int> prod(2 * s.k - 1, 0);
    for (int i = 0; i < s.k; ++i)
        for (int j = 0; j < s.k; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % s.p;
    for (int d = 2 * s.k - 2; d >= s.k; --d) {
        const int c = prod[d];
        if (c == 0) continue;
        for (int i = 0; i <= s.k; ++i) {
            int& t = prod[d - s.k + i];
            t = ((t - c * s.modulus[i]) % s.p + s.p) % s.p;
        }
    }
    prod.resize(s.k);
    return undigits(prod, s.p);
}

int poly_add(int x, int y, const FieldSpec& s) {
    auto a = digits(x, s.p, s.k), b = digits(y, s.p, s.k);
    for (int i = 0; i < s.k; ++i) a[i] = (a[i] + b[i]) % s.p;
    return undigits(a, s.p);
}

}  // namespace

Neardomain galois_field(int q) {
    auto it = field_specs().find(q);
    if (it == field_specs().end()) throw DomainError("unsupported field order " + std::to_string(q));
    const FieldSpec& s = it->second;
    std::vector<int> add(static_cast<std::size_t>(q) * q), mul(add.size());
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y) {
            add[x * q + y] = poly_add(x, y, s);
            mul[x * q + y] = poly_mul(x, y, s);
        }
    return check_neardomain(std::move(add), std::move(mul), q, 0, 1);
}

Neardomain dickson_nearfield_9() {
    const Neardomain gf = galois_field(9);
    std::vector<bool> square(9, false);
    for (int x = 1; x < 9; ++x) square[gf.mul(x, x)] = true;
    auto cube = [&](int y) { return gf.mul(y, gf.mul(y, y)); };
    std::vector<int> mul(81);
    for (int x = 0; x < 9; ++x)
        for (int y = 0; y < 9; ++y) mul[x * 9 + y] = square[x] ? gf.mul(x, y) : gf.mul(x, cube(y));
    return check_neardomain(gf.add_table(), std::move(mul), 9, 0, 1);
}

AffineMap affine_map(const Neardomain& f, int a, int b) {
    const int n = f.order();
    if (a < 0 || a >= n || b < 0 || b >= n) throw DomainError("affine_map: element out of range");
    if (b == f.zero()) throw DomainError("affine_map: b must be nonzero");
    std::vector<Point> img(n);
    for (int x = 0; x < n; ++x) img[x] = f.add(a, f.mul(b, x));
    return {a, b, Perm(std::move(img))};
}

std::pair<int, int> affine_parameters(const Neardomain& f, const Perm& p) {
    if (p.degree() != f.order()) throw DomainError("affine_parameters: degree mismatch");
    const int a = p(f.zero());
    const int b = f.left_subtract(a, p(f.one()));
    if (b == f.zero() || affine_map(f, a, b).as_perm != p)
        throw DomainError("permutation " + to_string(p) + " is not affine");
    return {a, b};
}

S2tGroup t2_group(const Neardomain& f) {
    const int n = f.order();
    std::vector<Perm> maps;
    maps.reserve(static_cast<std::size_t>(n) * (n - 1));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (b != f.zero()) maps.push_back(affine_map(f, a, b).as_perm);
    S2tGroup g = check_s2t(PermSet(n, std::move(maps)), f.zero(), f.one());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (b == f.zero()) continue;
            const Perm tab = affine_map(f, a, b).as_perm;
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    if (l == f.zero()) continue;
                    const int bk = f.mul(b, k);
                    const int coeff = f.mul(d_coeff(f, a, bk), f.mul(b, l));
                    if (compose(tab, affine_map(f, k, l).as_perm) != affine_map(f, f.add(a, bk), coeff).as_perm)
                        throw AlgebraError("affine composition law fails at " + tuple_str({a, b, k, l}));
                }
        }
    return g;
}

S2tMorphism functor_L_mor(const ElementMap& phi, const Neardomain& source, const Neardomain& target) {
    if (!is_nd_morphism(phi, source, target))
        throw PreconditionError("functor_L_mor: phi is not a neardomain morphism");
    const S2tGroup g = t2_group(source), h = t2_group(target);
    S2tMorphism m;
    m.phi = phi;
    m.f.resize(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto [a, b] = affine_parameters(source, g.element(i));
        m.f[i] = static_cast<int>(h.group().require_index(affine_map(target, phi[a], phi[b]).as_perm));
    }
    return m;
}

}  // namespace algcat
