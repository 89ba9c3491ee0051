#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "algcat/catcheck.hpp"
#include "algcat/structure_io.hpp"

using namespace algcat;

namespace {

int parse_error_line(const std::string& text) {
    try {
        parse_structure(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

}  // namespace

TEST(Parse, LoopZ2) {
    const auto s = parse_structure("loop 2\n0 1\n1 0\n");
    ASSERT_EQ(kind_of(s), StructureKind::Loop);
    EXPECT_EQ(std::get<Loop>(s), cyclic_loop(2));
}

TEST(Parse, LoopWithIdentityOverride) {
    const auto s = parse_structure("loop 3 2\n1 2 0\n2 0 1\n0 1 2\n");
    EXPECT_EQ(std::get<Loop>(s).identity(), 2);
}

TEST(Parse, NeardomainGF3) {
    const auto s = parse_structure("ndom 3 0 1\n0 1 2\n1 2 0\n2 0 1\nmul\n0 0 0\n0 1 2\n0 2 1\n");
    EXPECT_EQ(std::get<Neardomain>(s), galois_field(3));
}

TEST(Parse, S2tFromGenerators) {
    const auto s = parse_structure("s2t 3 0 1\ngenerators\n1 2 0\n1 0 2");
    EXPECT_EQ(std::get<S2tGroup>(s).size(), 6u);
}

TEST(Parse, RpsWithCommentsAndBlankLines) {
    const auto s = parse_structure("# C3\nrps 3 1\n\n0 1 2\n# rotations\n1 2 0\n2 0 1\n");
    const Rps& r = std::get<Rps>(s);
    EXPECT_EQ(r.basepoint(), 1);
    EXPECT_EQ(r.members().size(), 3u);
}

TEST(Parse, GeneratorClosureCap) {
    EXPECT_THROW(parse_structure("s2t 4 0 1\ngenerators\n1 2 3 0\n1 0 2 3\n", 10), ResourceError);
}

TEST(Parse, SyntaxErrorsCarryLineNumbers) {
    EXPECT_EQ(parse_error_line("loop 2\n0 1\n1 x\n"), 3);
    EXPECT_EQ(parse_error_line("loop 2\n0 1 0\n1 0\n"), 2);
    EXPECT_EQ(parse_error_line("loop 2\n0 1\n1 5\n"), 3);
    EXPECT_EQ(parse_error_line("group 2\n0 1\n"), 1);
    EXPECT_EQ(parse_error_line("ndom 2 0 1\n0 1\n1 0\nmult\n0 0\n0 1\n"), 4);
    EXPECT_EQ(parse_error_line("loop 2\n0 1\n1 0\n0 1\n"), 4);
    EXPECT_EQ(parse_error_line("loop 2\n0 1\n"), 0);
    EXPECT_EQ(parse_error_line("# nothing\n"), 0);
}

TEST(Parse, SemanticErrorsCarryWitness) {
    try {
        parse_structure("loop 3\n0 1 2\n1 1 0\n2 0 1\n");
        FAIL() << "non-Latin square accepted";
    } catch (const SemanticError& e) {
        EXPECT_FALSE(e.witness().empty());
    }
    EXPECT_THROW(parse_structure("rps 3 0\n0 1 2\n1 0 2\n"), SemanticError);
    EXPECT_THROW(parse_structure("s2t 3 0 1\n0 1 2\n1 2 0\n2 0 1\n"), SemanticError);
    EXPECT_THROW(parse_structure("rps 3 0\n0 1 1\n"), SemanticError);
}

TEST(Emit, FrozenLoopText) {
    EXPECT_EQ(emit_structure(cyclic_loop(3)), "loop 3\n0 1 2\n1 2 0\n2 0 1\n");
}

TEST(Emit, FrozenS2tText) {
    EXPECT_EQ(emit_structure(t2_group(galois_field(2))), "s2t 2 0 1\n0 1\n1 0\n");
}

TEST(Emit, RoundTripsEveryZooObject) {
    const Zoo& zoo = standard_zoo();
    std::vector<Structure> all;
    for (const auto& x : zoo.loops) all.push_back(x.value);
    for (const auto& x : zoo.rps) all.push_back(x.value);
    for (const auto& x : zoo.neardomains) all.push_back(x.value);
    for (const auto& x : zoo.groups) all.push_back(x.value);
    all.push_back(relabel(cyclic_loop(4), {2, 0, 3, 1}));
    all.push_back(relabel(dickson_nearfield_9(), {4, 7, 1, 0, 8, 2, 6, 3, 5}));
    for (const auto& s : all) {
        const std::string text = emit_structure(s);
        const Structure back = parse_structure(text);
        EXPECT_EQ(back, s) << text;
        EXPECT_EQ(emit_structure(back), text);
    }
}

TEST(ReadStructure, MissingFileIsParseError) {
    EXPECT_THROW(read_structure("/nonexistent/structure.txt"), ParseError);
}

TEST(ReadStructure, ReadsFromDisk) {
    const auto path = std::filesystem::temp_directory_path() / "algcat_io_test_gf4.txt";
    std::ofstream(path) << emit_structure(galois_field(4));
    EXPECT_EQ(std::get<Neardomain>(read_structure(path.string())), galois_field(4));
    std::filesystem::remove(path);
}

TEST(Kind, NamesRoundTrip) {
    for (auto k : {StructureKind::Loop, StructureKind::Ndom, StructureKind::Rps, StructureKind::S2t})
        EXPECT_EQ(parse_kind(to_string(k)), k);
    EXPECT_THROW(parse_kind("group"), DomainError);
}
