#include "algcat/structure_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace algcat {

const char* to_string(StructureKind k) {
    switch (k) {
        case StructureKind::Loop: return "loop";
        case StructureKind::Ndom: return "ndom";
        case StructureKind::Rps: return "rps";
        case StructureKind::S2t: return "s2t";
    }
    return "?";
}

StructureKind parse_kind(std::string_view name) {
    if (name == "loop") return StructureKind::Loop;
    if (name == "ndom") return StructureKind::Ndom;
    if (name == "rps") return StructureKind::Rps;
    if (name == "s2t") return StructureKind::S2t;
    throw DomainError("unknown structure kind '" + std::string(name) + "'");
}

StructureKind kind_of(const Structure& s) { return static_cast<StructureKind>(s.index()); }

ParseError::ParseError(int line, const std::string& what)
    : AlgebraError(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

SemanticError::SemanticError(int line, const std::string& what, std::vector<int> witness)
    : AlgebraError(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line),
      witness_(std::move(witness)) {}

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> out;
    std::istringstream in{std::string(text)};
    std::string raw;
    for (int number = 1; std::getline(in, raw); ++number) {
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        const auto first = raw.find_first_not_of(" \t");
        if (first == std::string::npos || raw[first] == '#') continue;
        std::istringstream words(raw);
        Line l{number, {}};
        for (std::string w; words >> w;) l.tokens.push_back(w);
        out.push_back(std::move(l));
    }
    return out;
}

int to_int(const std::string& tok, int line) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line, "expected an integer, got '" + tok + "'");
    return v;
}

std::vector<int> ints(const Line& l, std::size_t expected) {
    if (l.tokens.size() != expected)
        throw ParseError(l.number, "expected " + std::to_string(expected) + " integers, got " +
                                       std::to_string(l.tokens.size()));
    std::vector<int> out;
    for (const auto& t : l.tokens) out.push_back(to_int(t, l.number));
    return out;
}

class Cursor {
public:
    explicit Cursor(std::vector<Line> lines) : lines_(std::move(lines)) {}
    bool done() const { return pos_ == lines_.size(); }
    const Line& next() {
        if (done()) throw ParseError(0, "unexpected end of input");
        return lines_[pos_++];
    }
    const Line& peek() const { return lines_.at(pos_); }

private:
    std::vector<Line> lines_;
    std::size_t pos_ = 0;
};

std::vector<int> read_table(Cursor& c, int n) {
    std::vector<int> t;
    for (int r = 0; r < n; ++r) {
        const Line& l = c.next();
        const auto row = ints(l, n);
        for (int v : row)
            if (v < 0 || v >= n) throw ParseError(l.number, "entry " + std::to_string(v) + " out of range");
        t.insert(t.end(), row.begin(), row.end());
    }
    return t;
}

std::vector<Perm> read_perms(Cursor& c, int n) {
    std::vector<Perm> out;
    while (!c.done()) {
        const Line& l = c.next();
        try {
            out.emplace_back(ints(l, n));
        } catch (const DomainError& e) {
            throw SemanticError(l.number, e.what(), {});
        }
    }
    if (out.empty()) throw ParseError(0, "no permutations given");
    return out;
}

template <class Fn>
auto checked(Fn&& fn) {
    try {
        return fn();
    } catch (const ValidationError& e) {
        throw SemanticError(0, e.what(), e.witness());
    } catch (const DomainError& e) {
        throw SemanticError(0, e.what(), {});
    }
}

}  // namespace

Structure parse_structure(std::string_view text, std::size_t max_closure) {
    Cursor c(tokenize(text));
    if (c.done()) throw ParseError(0, "empty input");
    const Line& header = c.next();
    StructureKind kind;
    try {
        kind = parse_kind(header.tokens.at(0));
    } catch (const DomainError& e) {
        throw ParseError(header.number, e.what());
    }
    auto header_ints = [&](std::size_t lo, std::size_t hi) {
        const auto count = header.tokens.size() - 1;
        if (count < lo || count > hi) throw ParseError(header.number, "wrong number of header fields");
        std::vector<int> v;
        for (std::size_t i = 1; i < header.tokens.size(); ++i) v.push_back(to_int(header.tokens[i], header.number));
        if (v[0] < 1) throw ParseError(header.number, "order must be positive");
        return v;
    };
    auto finish = [&](Structure s) {
        if (!c.done()) throw ParseError(c.peek().number, "unexpected trailing content");
        return s;
    };

    switch (kind) {
        case StructureKind::Loop: {
            const auto h = header_ints(1, 2);
            const int n = h[0];
            auto t = read_table(c, n);
            return finish(checked([&] { return check_loop(std::move(t), n, h.size() > 1 ? h[1] : 0); }));
        }
        case StructureKind::Ndom: {
            const auto h = header_ints(3, 3);
            const int n = h[0];
            auto add = read_table(c, n);
            const Line& sep = c.next();
            if (sep.tokens.size() != 1 || sep.tokens[0] != "mul") throw ParseError(sep.number, "expected 'mul'");
            auto mul = read_table(c, n);
            return finish(checked([&] { return check_neardomain(std::move(add), std::move(mul), n, h[1], h[2]); }));
        }
        case StructureKind::Rps: {
            const auto h = header_ints(2, 2);
            auto perms = read_perms(c, h[0]);
            return checked([&] { return check_rps(PermSet(h[0], std::move(perms)), h[1]); });
        }
        case StructureKind::S2t: {
            const auto h = header_ints(3, 3);
            bool generators = false;
            if (!c.done() && c.peek().tokens.size() == 1 && c.peek().tokens[0] == "generators") {
                generators = true;
                c.next();
            }
            auto perms = read_perms(c, h[0]);
            return checked([&] {
                PermSet set(h[0], std::move(perms));
                return generators ? s2t_from_generators(set, h[1], h[2], max_closure)
                                  : check_s2t(std::move(set), h[1], h[2]);
            });
        }
    }
    throw ParseError(header.number, "unknown structure kind");
}

Structure read_structure(const std::string& path, std::size_t max_closure) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_structure(buf.str(), max_closure);
}

namespace {

void put_row(std::ostringstream& os, const std::vector<int>& values, std::size_t from, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) os << (i ? " " : "") << values[from + i];
    os << '\n';
}

void put_table(std::ostringstream& os, const std::vector<int>& t, int n) {
    for (int r = 0; r < n; ++r) put_row(os, t, static_cast<std::size_t>(r) * n, n);
}

void put_perms(std::ostringstream& os, const PermSet& s) {
    for (const auto& p : s) put_row(os, p.images(), 0, p.images().size());
}

}  // namespace

std::string emit_structure(const Structure& s) {
    std::ostringstream os;
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Loop>) {
                os << "loop " << x.order();
                if (x.identity() != 0) os << ' ' << x.identity();
                os << '\n';
                put_table(os, x.table(), x.order());
            } else if constexpr (std::is_same_v<T, Neardomain>) {
                os << "ndom " << x.order() << ' ' << x.zero() << ' ' << x.one() << '\n';
                put_table(os, x.add_table(), x.order());
                os << "mul\n";
                put_table(os, x.mul_table(), x.order());
            } else if constexpr (std::is_same_v<T, Rps>) {
                os << "rps " << x.degree() << ' ' << x.basepoint() << '\n';
                put_perms(os, x.members());
            } else {
                os << "s2t " << x.degree() << ' ' << x.omega0() << ' ' << x.omega1() << '\n';
                put_perms(os, x.group());
            }
        },
        s);
    return os.str();
}

}  // namespace algcat
