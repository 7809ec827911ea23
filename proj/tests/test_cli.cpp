#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gorder/cli.hpp"
#include "gorder/document.hpp"
#include "gorder/funcspace.hpp"

using namespace gorder;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(GORDER_FIXTURE_DIR) + "/" + name; }

std::string write_temp(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("gorder_cli_" + name);
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST(CliValidate, ExitCodes) {
    auto r = run({"validate", fixture("chain3.json")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "valid, N=3\n");

    r = run({"validate", fixture("antichain2.json")});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("antisymmetry (a, b)"), std::string::npos);

    r = run({"validate", fixture("diamond.json"), "--close"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("antisymmetry (b, c)"), std::string::npos);

    r = run({"validate", fixture("diamond.json")});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("transitivity (a, b, d)"), std::string::npos);

    EXPECT_EQ(run({"validate", fixture("chain3_open.json")}).code, 1);
    EXPECT_EQ(run({"validate", fixture("chain3_open.json"), "--close"}).code, 0);
    EXPECT_EQ(run({"validate", fixture("empty.json")}).code, 1);

    for (const char* bad : {"malformed.json", "duplicate.json", "unknown_label.json", "unknown_field.json",
                            "does_not_exist.json"})
        EXPECT_EQ(run({"validate", fixture(bad)}).code, 2) << bad;
}

TEST(CliValidate, MalformedReportsLine) {
    const auto r = run({"validate", fixture("malformed.json")});
    EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
}

TEST(CliValidate, JsonReport) {
    const auto r = run({"--json", "validate", fixture("cycle2.json")});
    EXPECT_EQ(r.code, 1);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_FALSE(j["valid"].get<bool>());
    EXPECT_EQ(j["asymmetry"], nlohmann::json::parse(R"([["a","b"]])"));

    const auto ok = run({"validate", fixture("chain3.json"), "--json"});
    EXPECT_EQ(nlohmann::json::parse(ok.out), nlohmann::json::parse(R"({"valid":true,"n":3})"));
}

TEST(CliClassify, PairAndAll) {
    auto r = run({"classify", fixture("n_poset.json"), "0", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "0 3 Unordered\n");
    r = run({"classify", fixture("chain3.json"), "c", "a"});
    EXPECT_EQ(r.out, "c a GreaterThan\n");
    r = run({"classify", fixture("chain3.json")});
    EXPECT_EQ(r.out, "a b LessThan\na c LessThan\nb c LessThan\n");
    EXPECT_EQ(run({"classify", fixture("chain3.json"), "a", "zz"}).code, 2);
    EXPECT_EQ(run({"classify", fixture("antichain2.json")}).code, 1);
}

TEST(CliMatch, TwoChainAndPatterns) {
    auto r = run({"match", fixture("chain3.json"), "--two-chain"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{a, b}\n{a, c}\n{b, c}\n3 subtypes, 3 embeddings, 1 automorphisms\n");

    r = run({"match", fixture("n_poset.json"), fixture("pattern_chain2.json")});
    EXPECT_EQ(r.out, "{0, 2}\n{1, 2}\n{1, 3}\n3 subtypes, 3 embeddings, 1 automorphisms\n");

    r = run({"match", fixture("chain3.json"), fixture("chain5.json")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "0 subtypes, 0 embeddings, 1 automorphisms\n");

    r = run({"match", fixture("antichain2.json"), "--two-chain"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("antisymmetry"), std::string::npos);

    EXPECT_EQ(run({"match", fixture("chain3.json"), fixture("cycle2.json")}).code, 1);
    EXPECT_EQ(run({"match", fixture("chain3.json")}).code, 2);
}

TEST(CliMatch, JsonReportCountsAreConsistent) {
    const auto r = run({"match", fixture("n_poset.json"), fixture("pattern_antichain2.json"), "--json",
                        "--threads", "3"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["subtypes"], nlohmann::json::parse(R"([["0","1"],["0","3"],["2","3"]])"));
    EXPECT_EQ(j["counts"]["embeddings"].get<int>(), 6);
    EXPECT_EQ(j["counts"]["automorphisms"].get<int>(), 2);
    EXPECT_EQ(j["embeddings"][0], nlohmann::json::parse(R"({"p":"0","q":"1"})"));
    EXPECT_EQ(j["pattern"]["size"].get<int>(), 2);
}

TEST(CliGenerate, Kinds) {
    auto r = run({"generate", "chain", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, R"({"elements":["e0","e1","e2"],"lt":[["e0","e1"],["e0","e2"],["e1","e2"]],"closed":true})"
                     "\n");

    r = run({"generate", "antichain", "2"});
    const auto path = write_temp("ac2.json", r.out);
    EXPECT_EQ(run({"validate", path}).code, 1);

    r = run({"generate", "funcspace", "2", "-1", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto space = funcspace::build_funcspace({2, -1, 1});
    EXPECT_EQ(parse_order(r.out), to_document(space.carrier(), space.relation(), true));

    EXPECT_EQ(run({"generate", "n-poset"}).code, 0);
    EXPECT_EQ(run({"generate", "nonsense"}).code, 2);
    EXPECT_EQ(run({"generate", "chain"}).code, 2);
    EXPECT_EQ(run({"generate", "chain", "x"}).code, 2);
}

TEST(CliGenerate, RandomIsReproducible) {
    const auto a = run({"generate", "random", "9", "0.3", "--seed", "42"});
    const auto b = run({"--seed", "42", "generate", "random", "9", "0.3"});
    const auto c = run({"generate", "random", "9", "0.3", "42"});
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, c.out);
    EXPECT_NE(a.err.find("seed="), std::string::npos);
    EXPECT_EQ(run({"validate", write_temp("rand.json", a.out)}).code, 0);
    EXPECT_EQ(run({"generate", "random", "5", "1.5"}).code, 1);
}

TEST(CliGenerate, SumAndProductRouteThroughValidation) {
    // Two singletons side by side collapse under the derived order.
    auto r = run({"generate", "sum", fixture("single.json"), fixture("single.json")});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("antisymmetry (L:x, R:x)"), std::string::npos) << r.err;

    r = run({"generate", "sum", fixture("chain3.json"), fixture("pattern_chain2.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto sum = parse_order(r.out);
    EXPECT_EQ(sum.elements, (std::vector<std::string>{"L:a", "L:b", "L:c", "R:lo", "R:hi"}));
    EXPECT_EQ(sum.lt.size(), 4U);

    // The square of a 2-chain is the diamond: its two middles share down and up sets.
    r = run({"generate", "product", fixture("pattern_chain2.json"), fixture("pattern_chain2.json")});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("antisymmetry ((lo,hi), (hi,lo))"), std::string::npos) << r.err;

    r = run({"generate", "product", fixture("chain3.json"), fixture("single.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto prod = parse_order(r.out);
    EXPECT_EQ(prod.elements, (std::vector<std::string>{"(a,x)", "(b,x)", "(c,x)"}));
    EXPECT_EQ(prod.lt.size(), 3U);
    EXPECT_EQ(run({"validate", write_temp("prod.json", r.out)}).code, 0);
}

TEST(CliDot, Covers) {
    auto r = run({"dot", fixture("chain3.json")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "digraph \"order\" {\n  \"a\";\n  \"b\";\n  \"c\";\n  \"a\" -> \"b\";\n  \"b\" -> \"c\";\n}\n");
    r = run({"dot", fixture("n_poset.json")});
    EXPECT_NE(r.out.find("\"0\" -> \"2\";\n  \"1\" -> \"2\";\n  \"1\" -> \"3\";\n"), std::string::npos);
    r = run({"dot", fixture("single.json")});
    EXPECT_EQ(r.out, "digraph \"order\" {\n  \"x\";\n}\n");
    EXPECT_EQ(run({"dot", fixture("antichain2.json")}).code, 1);
}

TEST(CliUsage, BadInvocations) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}
