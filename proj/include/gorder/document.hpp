#pragma once

// JSON order documents:
//   {"elements":["a","b"],"lt":[["a","b"]],"closed":false}

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gorder/order.hpp"

namespace gorder {

struct OrderDocument {
    std::vector<std::string> elements;
    std::vector<std::pair<std::string, std::string>> lt;
    bool closed = false;

    bool operator==(const OrderDocument&) const = default;
};

class DocumentError : public std::runtime_error {
public:
    enum class Kind { Syntax, Schema, DuplicateLabel, UnknownLabel };

    DocumentError(Kind kind, const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : std::runtime_error(what), kind_(kind), line_(line), column_(column) {}

    Kind kind() const { return kind_; }
    /// 1-based; zero when the error has no source position.
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    Kind kind_;
    std::size_t line_;
    std::size_t column_;
};

/// Throws DocumentError. Unknown fields are rejected; "closed" defaults to false.
OrderDocument parse_order(std::string_view text);

/// Canonical single-line form: elements in document order, lt pairs deduplicated and sorted by
/// the element positions of their endpoints.
std::string serialize_order(const OrderDocument& doc);

Carrier carrier_of(const OrderDocument& doc);
StrictRelation relation_of(const OrderDocument& doc);
OrderDocument to_document(const Carrier& carrier, const StrictRelation& rel, bool closed);

/// carrier_of + build_order; closes when close is set.
BuildResult build_from_document(const OrderDocument& doc, bool close);

}  // namespace gorder
