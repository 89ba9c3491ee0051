// algcat: check, convert and compare finite loops, regular permutation
// sets, neardomains and sharply 2-transitive groups.
//
// Exit codes: 0 pass/valid, 1 semantic failure, 2 usage/parse/IO error.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "algcat/catcheck.hpp"
#include "algcat/report.hpp"
#include "algcat/structure_io.hpp"

namespace {

using namespace algcat;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Options {
    bool json = false;
    bool no_timestamp = false;
    std::size_t max_closure = kDefaultClosureCap;
};

void print(Report r, const Options& opt, std::ostream& os = std::cout) {
    if (!opt.no_timestamp) r.stamp();
    os << (opt.json ? r.json() : r.text());
}

/// Reads a structure, reporting failures. Sets `code` on failure.
std::optional<Structure> load(const std::string& path, const Options& opt, int& code) {
    Report r;
    r.set("file", path);
    try {
        return read_structure(path, opt.max_closure);
    } catch (const ParseError& e) {
        r.set("valid", false);
        r.set("error", e.what());
        code = kUsage;
    } catch (const SemanticError& e) {
        r.set("valid", false);
        r.set("error", e.what());
        if (!e.witness().empty()) r.set("witness", e.witness());
        code = kFailed;
    } catch (const AlgebraError& e) {
        r.set("valid", false);
        r.set("error", e.what());
        code = kFailed;
    }
    print(r, opt);
    return std::nullopt;
}

void describe_facts(const Structure& s, Report& r) {
    r.set("kind", to_string(kind_of(s)));
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Loop>) {
                r.set("order", x.order());
                r.set("identity", x.identity());
                r.set("associative", is_associative(x));
            } else if constexpr (std::is_same_v<T, Neardomain>) {
                r.set("order", x.order());
                r.set("nearfield", is_nearfield(x));
                r.set("char2", characteristic_two(x));
            } else if constexpr (std::is_same_v<T, Rps>) {
                r.set("degree", x.degree());
                r.set("basepoint", x.basepoint());
                r.set("induced_loop_associative", is_associative(induced_loop(x)));
            } else {
                r.set("degree", x.degree());
                r.set("group_order", x.size());
                r.set("characteristic", to_string(characteristic(x)));
                r.set("involutions", involutions(x).size());
                r.set("A_subgroup", A_is_subgroup(x));
                r.set("J2_subgroup", J_squared_is_subgroup(x));
                r.set("nearfield", is_nearfield(functor_K_obj(x)));
            }
        },
        s);
}

int cmd_check(const std::string& path, const Options& opt) {
    int code = kOk;
    auto s = load(path, opt, code);
    if (!s) return code;
    Report r;
    r.set("file", path);
    r.set("valid", true);
    describe_facts(*s, r);
    print(r, opt);
    return kOk;
}

int cmd_convert(const std::string& path, const std::string& to, const Options& opt) {
    StructureKind target;
    try {
        target = parse_kind(to);
    } catch (const DomainError& e) {
        std::cerr << e.what() << '\n';
        return kUsage;
    }
    int code = kOk;
    auto s = load(path, opt, code);
    if (!s) return code;
    const StructureKind source = kind_of(*s);
    std::optional<Structure> out;
    if (source == target) {
        out = *s;
    } else if (source == StructureKind::Loop && target == StructureKind::Rps) {
        out = loop_to_rps(std::get<Loop>(*s));
    } else if (source == StructureKind::Rps && target == StructureKind::Loop) {
        out = functor_F_obj(std::get<Rps>(*s));
    } else if (source == StructureKind::Ndom && target == StructureKind::S2t) {
        out = t2_group(std::get<Neardomain>(*s));
    } else if (source == StructureKind::S2t && target == StructureKind::Ndom) {
        out = functor_K_obj(std::get<S2tGroup>(*s));
    } else {
        std::cerr << "cannot convert " << to_string(source) << " to " << to_string(target) << '\n';
        return kUsage;
    }
    std::cout << emit_structure(*out);
    return kOk;
}

int cmd_roundtrip(const std::string& path, const Options& opt) {
    int code = kOk;
    auto s = load(path, opt, code);
    if (!s) return code;
    Report r;
    r.set("file", path);
    r.set("kind", to_string(kind_of(*s)));
    std::vector<Verdict> verdicts;
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Loop>) {
                verdicts.push_back(check_roundtrip_F({path, x}));
            } else if constexpr (std::is_same_v<T, Neardomain>) {
                verdicts.push_back(check_roundtrip_KL({path, x}));
            } else if constexpr (std::is_same_v<T, Rps>) {
                Verdict v{"rps -> loop -> rps for " + path};
                if (!(loop_to_rps(induced_loop(x)) == x)) {
                    v.pass = false;
                    v.witness = "left translations of the induced loop differ from the members";
                }
                verdicts.push_back(v);
                verdicts.push_back(check_roundtrip_F({"induced loop", induced_loop(x)}));
            } else {
                verdicts.push_back(check_roundtrip_LK({path, x}));
                verdicts.push_back(check_roundtrip_KL({"K(" + path + ")", functor_K_obj(x)}));
            }
        },
        *s);
    bool pass = true;
    for (const auto& v : verdicts) {
        r.add_verdict(v, !opt.no_timestamp);
        pass = pass && v.pass;
    }
    r.set("pass", pass);
    print(r, opt);
    return pass ? kOk : kFailed;
}

template <class Mor>
std::vector<std::string> describe_all(const std::vector<Mor>& ms) {
    std::vector<std::string> out;
    for (const auto& m : ms) out.push_back(describe(m));
    return out;
}

void add_homset_report(Report& r, const HomSetReport& h, const char* functor) {
    Verdict v{std::string("functor ") + functor + " bijection", h.bijection,
              h.bijection ? "" : h.witness};
    r.set("functor", functor);
    r.set("source_hom_count", h.source_count);
    r.set("target_hom_count", h.target_count);
    r.set("bijection", h.bijection);
}

int cmd_homset(const std::string& p1, const std::string& p2, const Options& opt) {
    int code = kOk;
    auto a = load(p1, opt, code);
    if (!a) return code;
    auto b = load(p2, opt, code);
    if (!b) return code;
    if (kind_of(*a) != kind_of(*b)) {
        std::cerr << "kind mismatch: " << to_string(kind_of(*a)) << " vs " << to_string(kind_of(*b)) << '\n';
        return kUsage;
    }
    Report r;
    r.set("source", p1);
    r.set("target", p2);
    r.set("kind", to_string(kind_of(*a)));
    bool pass = true;
    switch (kind_of(*a)) {
        case StructureKind::Loop: {
            const auto homs = enumerate_loop_morphisms(std::get<Loop>(*a), std::get<Loop>(*b));
            r.set("count", homs.size());
            r.set("morphism", describe_all(homs));
            break;
        }
        case StructureKind::Rps: {
            const Named<Rps> x{p1, std::get<Rps>(*a)}, y{p2, std::get<Rps>(*b)};
            const auto homs = enumerate_rps_morphisms_direct(x.value, y.value);
            r.set("count", homs.size());
            r.set("morphism", describe_all(homs));
            const auto h = check_full_faithful_F(x, y);
            add_homset_report(r, h, "F");
            pass = h.bijection;
            break;
        }
        case StructureKind::Ndom: {
            const Named<Neardomain> x{p1, std::get<Neardomain>(*a)}, y{p2, std::get<Neardomain>(*b)};
            const auto homs = enumerate_nd_morphisms(x.value, y.value);
            r.set("count", homs.size());
            r.set("morphism", describe_all(homs));
            if (x.value.order() <= kDefaultDirectOracleDegree && y.value.order() <= kDefaultDirectOracleDegree) {
                const auto h = check_full_faithful_L(x, y);
                add_homset_report(r, h, "L");
                pass = h.bijection;
            }
            break;
        }
        case StructureKind::S2t: {
            const Named<S2tGroup> x{p1, std::get<S2tGroup>(*a)}, y{p2, std::get<S2tGroup>(*b)};
            const bool direct = x.value.degree() <= kDefaultDirectOracleDegree &&
                                y.value.degree() <= kDefaultDirectOracleDegree;
            const auto homs = direct ? enumerate_s2t_morphisms_direct(x.value, y.value)
                                     : enumerate_s2t_morphisms(x.value, y.value);
            r.set("count", homs.size());
            r.set("morphism", describe_all(homs));
            const auto h = check_full_faithful_K(x, y);
            add_homset_report(r, h, "K");
            pass = h.bijection;
            break;
        }
    }
    print(r, opt);
    return pass ? kOk : kFailed;
}

struct ZooRequest {
    int loops = 0;
    int gf = 0;
    bool dickson9 = false;
    std::string out_dir;
};

int cmd_zoo(const ZooRequest& req) {
    std::vector<std::pair<std::string, Structure>> items;
    try {
        if (req.loops > 0) {
            const auto loops = enumerate_loops(req.loops);
            for (std::size_t i = 0; i < loops.size(); ++i)
                items.emplace_back("loop" + std::to_string(req.loops) + "_" + std::to_string(i), loops[i]);
        } else if (req.gf > 0) {
            items.emplace_back("gf" + std::to_string(req.gf), galois_field(req.gf));
        } else {
            items.emplace_back("dickson9", dickson_nearfield_9());
        }
    } catch (const AlgebraError& e) {
        std::cerr << e.what() << '\n';
        return kUsage;
    }
    if (!req.out_dir.empty()) {
        std::filesystem::create_directories(req.out_dir);
        for (const auto& [id, s] : items) {
            const auto path = std::filesystem::path(req.out_dir) / (id + ".txt");
            std::ofstream(path) << emit_structure(s);
            std::cout << path.string() << '\n';
        }
        return kOk;
    }
    for (std::size_t i = 0; i < items.size(); ++i)
        std::cout << (i ? "\n" : "") << "# " << items[i].first << '\n' << emit_structure(items[i].second);
    return kOk;
}

int cmd_verify_all(const Options& opt) {
    Report r;
    bool pass = true;
    for (const auto& v : run_acceptance(standard_zoo())) {
        r.add_verdict(v, !opt.no_timestamp);
        pass = pass && v.pass;
    }
    r.set("pass", pass);
    print(r, opt);
    return pass ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite loops, regular permutation sets, neardomains and sharply 2-transitive groups"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.json, "Emit reports as JSON");
    app.add_flag("--no-timestamp", opt.no_timestamp, "Omit timestamps and timings from reports");
    app.add_option("--max-closure", opt.max_closure, "Size cap for generator closures")->check(CLI::PositiveNumber);

    std::function<int()> run;
    std::string path, path2, to;

    auto* check = app.add_subcommand("check", "Validate a structure file and report derived facts");
    check->add_option("file", path, "Structure file")->required();
    check->callback([&] { run = [&] { return cmd_check(path, opt); }; });

    auto* convert = app.add_subcommand("convert", "Convert along loop<->rps and ndom<->s2t");
    convert->add_option("file", path, "Structure file")->required();
    convert->add_option("--to", to, "Target kind: loop, rps, ndom, s2t")->required();
    convert->callback([&] { run = [&] { return cmd_convert(path, to, opt); }; });

    auto* roundtrip = app.add_subcommand("roundtrip", "Verify the round-trip identities for a structure");
    roundtrip->add_option("file", path, "Structure file")->required();
    roundtrip->callback([&] { run = [&] { return cmd_roundtrip(path, opt); }; });

    auto* homset = app.add_subcommand("homset", "List a hom-set and check the functor bijection");
    homset->add_option("source", path, "Source structure file")->required();
    homset->add_option("target", path2, "Target structure file")->required();
    homset->callback([&] { run = [&] { return cmd_homset(path, path2, opt); }; });

    ZooRequest zreq;
    auto* zoo = app.add_subcommand("zoo", "Emit standard structures");
    auto* loops_opt = zoo->add_option("--enumerate-loops", zreq.loops, "All loops of order n up to isomorphism");
    auto* gf_opt = zoo->add_option("--gf", zreq.gf, "The field GF(q)");
    auto* d9_opt = zoo->add_flag("--dickson9", zreq.dickson9, "The order 9 proper nearfield");
    loops_opt->excludes(gf_opt)->excludes(d9_opt);
    gf_opt->excludes(d9_opt);
    zoo->add_option("--out-dir", zreq.out_dir, "Write one file per structure into this directory");
    zoo->callback([&] {
        run = [&] {
            if (zreq.loops == 0 && zreq.gf == 0 && !zreq.dickson9) {
                std::cerr << "zoo: one of --enumerate-loops, --gf, --dickson9 is required\n";
                return kUsage;
            }
            return cmd_zoo(zreq);
        };
    });

    auto* verify = app.add_subcommand("verify-all", "Run the full verification battery on the standard zoo");
    verify->callback([&] { run = [&] { return cmd_verify_all(opt); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }
    try {
        return run();
    } catch (const AlgebraError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailed;
    }
}
