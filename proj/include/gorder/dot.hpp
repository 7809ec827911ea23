#pragma once

#include <string>

#include "gorder/order.hpp"

namespace gorder {

/// Covers: i -> j iff i < j with nothing strictly between.
StrictRelation cover_relation(const OrderedType& order);

/// Graphviz digraph of the cover relation; nodes in carrier order, edges lexicographic.
std::string to_dot(const OrderedType& order, const std::string& name = "order");

}  // namespace gorder
