#include "gorder/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gorder/document.hpp"
#include "gorder/dot.hpp"
#include "gorder/generate.hpp"
#include "gorder/matcher.hpp"

namespace gorder::cli {

using nlohmann::ordered_json;

namespace {

// Raised for I/O and usage problems; maps to kUsage.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

OrderDocument load(const std::string& path) {
    try {
        return parse_order(read_file(path));
    } catch (const DocumentError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

std::string tuple_text(const Carrier& c, std::initializer_list<Index> idx) {
    std::string s = "(";
    bool first = true;
    for (Index i : idx) {
        if (!first) s += ", ";
        s += c.label(i);
        first = false;
    }
    return s + ")";
}

void print_report(std::ostream& out, const Carrier& c, const ViolationReport& r, bool json) {
    if (json) {
        ordered_json j;
        j["valid"] = false;
        j["n"] = c.size();
        j["asymmetry"] = ordered_json::array();
        for (auto [a, b] : r.asymmetry_pairs) j["asymmetry"].push_back({c.label(a), c.label(b)});
        j["transitivity"] = ordered_json::array();
        for (auto [a, b, d] : r.transitivity_triples)
            j["transitivity"].push_back({c.label(a), c.label(b), c.label(d)});
        j["antisymmetry"] = ordered_json::array();
        for (auto [a, b] : r.antisymmetry_pairs) j["antisymmetry"].push_back({c.label(a), c.label(b)});
        out << j.dump() << '\n';
        return;
    }
    out << "invalid, N=" << c.size() << ": " << r.asymmetry_pairs.size() << " asymmetry, "
        << r.transitivity_triples.size() << " transitivity, " << r.antisymmetry_pairs.size()
        << " antisymmetry violations\n";
    for (auto [a, b] : r.asymmetry_pairs) out << "  asymmetry " << tuple_text(c, {a, b}) << '\n';
    for (auto [a, b, d] : r.transitivity_triples) out << "  transitivity " << tuple_text(c, {a, b, d}) << '\n';
    for (auto [a, b] : r.antisymmetry_pairs) out << "  antisymmetry " << tuple_text(c, {a, b}) << '\n';
}

struct Globals {
    bool json = false;
    bool close = false;
    std::uint64_t seed = 0;
};

int cmd_validate(const std::string& file, const Globals& g, std::ostream& out) {
    const OrderDocument doc = load(file);
    const BuildResult built = build_from_document(doc, g.close);
    if (const auto* report = std::get_if<ViolationReport>(&built)) {
        print_report(out, carrier_of(doc), *report, g.json);
        return kInvalid;
    }
    const auto& order = std::get<OrderedType>(built);
    if (g.json)
        out << ordered_json{{"valid", true}, {"n", order.size()}}.dump() << '\n';
    else
        out << "valid, N=" << order.size() << '\n';
    return kOk;
}

// Loads and validates, printing the report on failure.
std::optional<OrderedType> load_valid(const std::string& file, const Globals& g, std::ostream& out) {
    const OrderDocument doc = load(file);
    BuildResult built = build_from_document(doc, g.close);
    if (auto* order = std::get_if<OrderedType>(&built)) return std::move(*order);
    print_report(out, carrier_of(doc), std::get<ViolationReport>(built), g.json);
    return std::nullopt;
}

int cmd_classify(const std::string& file, const std::vector<std::string>& pair, const Globals& g,
                 std::ostream& out) {
    const auto order = load_valid(file, g, out);
    if (!order) return kInvalid;
    const Carrier& c = order->carrier();
    std::vector<std::pair<Index, Index>> todo;
    if (pair.empty()) {
        for (Index i = 0; i < order->size(); ++i)
            for (Index j = i + 1; j < order->size(); ++j) todo.emplace_back(i, j);
    } else if (pair.size() == 2) {
        try {
            todo.emplace_back(c.index_of(pair[0]), c.index_of(pair[1]));
        } catch (const OrderError& e) {
            throw UsageError(e.what());
        }
    } else {
        throw UsageError("classify takes either no labels or exactly two");
    }
    ordered_json rows = ordered_json::array();
    for (auto [i, j] : todo) {
        const auto verdict = std::string(to_string(classify_pair(*order, i, j)));
        if (g.json)
            rows.push_back(ordered_json{{"a", c.label(i)}, {"b", c.label(j)}, {"verdict", verdict}});
        else
            out << c.label(i) << ' ' << c.label(j) << ' ' << verdict << '\n';
    }
    if (g.json) out << ordered_json{{"pairs", rows}}.dump() << '\n';
    return kOk;
}

int cmd_match(const std::string& ground_file, const std::string& pattern_file, bool two_chain, std::size_t threads,
              const Globals& g, std::ostream& out) {
    const auto order = load_valid(ground_file, g, out);
    if (!order) return kInvalid;

    std::optional<Pattern> pattern;
    std::string pattern_source = "two-chain";
    if (two_chain) {
        pattern = Pattern::chain(2);
    } else {
        if (pattern_file.empty()) throw UsageError("match needs a pattern file or --two-chain");
        const OrderDocument doc = load(pattern_file);
        StrictRelation rel = relation_of(doc);
        if (g.close) rel = transitive_closure(rel);
        auto built = Pattern::from_relation(carrier_of(doc), std::move(rel));
        if (auto* report = std::get_if<ViolationReport>(&built)) {
            print_report(out, carrier_of(doc), *report, g.json);
            return kInvalid;
        }
        pattern = std::move(std::get<Pattern>(built));
        pattern_source = pattern_file;
    }

    const MatchResult result =
        two_chain ? enumerate_two_chain(*order) : match_pattern(*order, *pattern, {threads});
    const std::size_t n_aut = automorphisms(*pattern).size();
    const Carrier& gc = order->carrier();
    const Carrier& pc = pattern->carrier();

    if (g.json) {
        ordered_json j;
        j["ground"] = ordered_json{{"source", ground_file}, {"size", order->size()}};
        j["pattern"] = ordered_json{{"source", pattern_source}, {"size", pattern->size()}};
        j["subtypes"] = ordered_json::array();
        for (const auto& s : result.subtypes) {
            ordered_json labels = ordered_json::array();
            for (Index i : s) labels.push_back(gc.label(i));
            j["subtypes"].push_back(std::move(labels));
        }
        j["embeddings"] = ordered_json::array();
        for (const auto& e : result.embeddings) {
            ordered_json m = ordered_json::object();
            for (Index p = 0; p < e.map.size(); ++p) m[pc.label(p)] = gc.label(e.map[p]);
            j["embeddings"].push_back(std::move(m));
        }
        j["counts"] = ordered_json{{"embeddings", result.embeddings.size()},
                       {"subtypes", result.subtypes.size()},
                       {"automorphisms", n_aut}};
        out << j.dump() << '\n';
        return kOk;
    }
    for (const auto& s : result.subtypes) {
        out << '{';
        for (std::size_t k = 0; k < s.size(); ++k) out << (k ? ", " : "") << gc.label(s[k]);
        out << "}\n";
    }
    out << result.subtypes.size() << " subtypes, " << result.embeddings.size() << " embeddings, " << n_aut
        << " automorphisms\n";
    return kOk;
}

template <typename T>
T parse_number(const std::string& s, const char* what) {
    std::istringstream in(s);
    T v{};
    if (!(in >> v) || !in.eof()) throw UsageError(std::string("bad ") + what + ": " + s);
    return v;
}

int cmd_generate(const std::vector<std::string>& params, const Globals& g, std::ostream& out, std::ostream& err) {
    if (params.empty()) throw UsageError("generate needs a kind");
    const std::string& kind = params[0];
    auto need = [&](std::size_t n) {
        if (params.size() != n + 1) throw UsageError(kind + " takes " + std::to_string(n) + " parameter(s)");
    };
    auto emit = [&](const OrderDocument& doc) {
        out << serialize_order(doc) << '\n';
        return kOk;
    };
    auto emit_combined = [&](const generate::Combined& c) {
        if (!c.report.empty()) {
            err << kind << " result is not a generalized ordered type\n";
            print_report(err, carrier_of(c.doc), c.report, g.json);
            return static_cast<int>(kInvalid);
        }
        return static_cast<int>(emit(c.doc));
    };

    if (kind == "chain") {
        need(1);
        return emit(generate::chain(parse_number<std::size_t>(params[1], "size")));
    }
    if (kind == "antichain") {
        need(1);
        return emit(generate::antichain(parse_number<std::size_t>(params[1], "size")));
    }
    if (kind == "n-poset") {
        need(0);
        return emit(generate::n_poset());
    }
    if (kind == "random") {
        if (params.size() != 3 && params.size() != 4) throw UsageError("random takes n p [seed]");
        const auto n = parse_number<std::size_t>(params[1], "size");
        const auto p = parse_number<double>(params[2], "probability");
        std::uint64_t seed = g.seed;
        if (params.size() == 4) seed = parse_number<std::uint64_t>(params[3], "seed");
        try {
            const auto r = generate::random_order(n, p, seed);
            err << "seed=" << r.seed << " attempts=" << r.attempts << '\n';
            return emit(to_document(r.order.carrier(), r.order.relation(), true));
        } catch (const generate::GenerateError& e) {
            err << e.what() << '\n';
            return kInvalid;
        }
    }
    if (kind == "funcspace") {
        need(3);
        funcspace::Config cfg{parse_number<std::size_t>(params[1], "x_size"),
                              parse_number<std::int64_t>(params[2], "y_min"),
                              parse_number<std::int64_t>(params[3], "y_max")};
        try {
            return emit(generate::funcspace(cfg));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    if (kind == "sum") {
        need(2);
        return emit_combined(generate::sum(load(params[1]), load(params[2])));
    }
    if (kind == "product") {
        need(2);
        return emit_combined(generate::product(load(params[1]), load(params[2])));
    }
    throw UsageError("unknown kind \"" + kind + "\"");
}

int cmd_dot(const std::string& file, const Globals& g, std::ostream& out) {
    const auto order = load_valid(file, g, out);
    if (!order) return kInvalid;
    out << to_dot(*order);
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite generalized ordered types: validate, classify, match, generate, dot", "gorder"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_flag("--json", g.json, "Emit one JSON object per result");
    app.add_flag("--close", g.close, "Transitively close input relations before validating");
    app.add_option("--seed", g.seed, "Seed for random generation");

    std::string file, pattern_file;
    std::vector<std::string> labels, params;
    bool two_chain = false;
    std::size_t threads = 1;

    auto* validate = app.add_subcommand("validate", "Check the order axioms");
    validate->add_option("file", file, "Order document")->required();

    auto* classify = app.add_subcommand("classify", "Classify element pairs");
    classify->add_option("file", file, "Order document")->required();
    classify->add_option("labels", labels, "Two element labels (default: all pairs)");

    auto* match = app.add_subcommand("match", "Find all subtypes isomorphic to a pattern");
    match->add_option("ground", file, "Ground order document")->required();
    match->add_option("pattern", pattern_file, "Pattern document");
    match->add_flag("--two-chain", two_chain, "Run the literal two-chain enumeration");
    match->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

    auto* gen = app.add_subcommand("generate", "Print a generated order document");
    gen->add_option("params", params, "kind and parameters")->required();

    auto* dot = app.add_subcommand("dot", "Print the cover relation as Graphviz DOT");
    dot->add_option("file", file, "Order document")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }
    try {
        if (*validate) return cmd_validate(file, g, out);
        if (*classify) return cmd_classify(file, labels, g, out);
        if (*match) return cmd_match(file, pattern_file, two_chain, threads, g, out);
        if (*gen) return cmd_generate(params, g, out, err);
        if (*dot) return cmd_dot(file, g, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const OrderError& e) {
        // Only the empty carrier reaches here; labels were checked at parse time.
        err << "error: " << e.what() << '\n';
        return kInvalid;
    }
    return kUsage;
}

}  // namespace gorder::cli
