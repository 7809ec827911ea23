#include "gorder/document.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace gorder {

using nlohmann::ordered_json;

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min(byte, text.size() + 1);
    for (std::size_t i = 0; i + 1 < end; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

[[noreturn]] void schema_error(const std::string& what) { throw DocumentError(DocumentError::Kind::Schema, what); }

std::string expect_string(const ordered_json& j, const char* where) {
    if (!j.is_string()) schema_error(std::string(where) + ": expected a string");
    return j.get<std::string>();
}

}  // namespace

OrderDocument parse_order(std::string_view text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text.begin(), text.end());
    } catch (const ordered_json::parse_error& e) {
        const auto [line, column] = line_column(text, e.byte);
        throw DocumentError(DocumentError::Kind::Syntax,
                            "syntax error at line " + std::to_string(line) + ", column " + std::to_string(column),
                            line, column);
    }
    if (!j.is_object()) schema_error("document must be a JSON object");

    OrderDocument doc;
    bool have_elements = false, have_lt = false;
    for (const auto& [key, value] : j.items()) {
        if (key == "elements") {
            if (!value.is_array()) schema_error("\"elements\" must be an array");
            for (const auto& e : value) doc.elements.push_back(expect_string(e, "elements"));
            have_elements = true;
        } else if (key == "lt") {
            if (!value.is_array()) schema_error("\"lt\" must be an array");
            for (const auto& p : value) {
                if (!p.is_array() || p.size() != 2) schema_error("\"lt\" entries must be [label, label] pairs");
                doc.lt.emplace_back(expect_string(p[0], "lt"), expect_string(p[1], "lt"));
            }
            have_lt = true;
        } else if (key == "closed") {
            if (!value.is_boolean()) schema_error("\"closed\" must be a boolean");
            doc.closed = value.get<bool>();
        } else {
            schema_error("unknown field \"" + key + "\"");
        }
    }
    if (!have_elements) schema_error("missing field \"elements\"");
    if (!have_lt) schema_error("missing field \"lt\"");

    std::vector<std::string> sorted = doc.elements;
    std::sort(sorted.begin(), sorted.end());
    if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end())
        throw DocumentError(DocumentError::Kind::DuplicateLabel, "duplicate label \"" + *it + "\"");
    for (const auto& [a, b] : doc.lt)
        for (const auto* label : {&a, &b})
            if (!std::binary_search(sorted.begin(), sorted.end(), *label))
                throw DocumentError(DocumentError::Kind::UnknownLabel, "unknown label \"" + *label + "\" in lt");
    return doc;
}

std::string serialize_order(const OrderDocument& doc) {
    const Carrier carrier = carrier_of(doc);
    std::vector<std::pair<Index, Index>> pairs;
    pairs.reserve(doc.lt.size());
    for (const auto& [a, b] : doc.lt) pairs.emplace_back(carrier.index_of(a), carrier.index_of(b));
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

    ordered_json lt = ordered_json::array();
    for (auto [i, j] : pairs) lt.push_back({carrier.label(i), carrier.label(j)});
    ordered_json j;
    j["elements"] = doc.elements;
    j["lt"] = std::move(lt);
    j["closed"] = doc.closed;
    return j.dump();
}

Carrier carrier_of(const OrderDocument& doc) { return Carrier(doc.elements); }

StrictRelation relation_of(const OrderDocument& doc) {
    const Carrier carrier = carrier_of(doc);
    StrictRelation rel(carrier.size());
    for (const auto& [a, b] : doc.lt) rel.add(carrier.index_of(a), carrier.index_of(b));
    return rel;
}

OrderDocument to_document(const Carrier& carrier, const StrictRelation& rel, bool closed) {
    OrderDocument doc;
    doc.elements = carrier.labels();
    for (auto [i, j] : rel.pairs()) doc.lt.emplace_back(carrier.label(i), carrier.label(j));
    doc.closed = closed;
    return doc;
}

BuildResult build_from_document(const OrderDocument& doc, bool close) {
    return build_order(carrier_of(doc), doc.lt, close);
}

}  // namespace gorder
