#include "gorder/dot.hpp"

#include <sstream>

namespace gorder {

StrictRelation cover_relation(const OrderedType& order) {
    StrictRelation covers(order.size());
    for (Index i = 0; i < order.size(); ++i) {
        order.up(i).for_each([&](Index j) {
            BitSet between = order.up(i);
            between &= order.down(j);
            if (between.none()) covers.add(i, j);
        });
    }
    return covers;
}

namespace {
std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}
}  // namespace

std::string to_dot(const OrderedType& order, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << quoted(name) << " {\n";
    for (Index i = 0; i < order.size(); ++i) os << "  " << quoted(order.carrier().label(i)) << ";\n";
    for (auto [i, j] : cover_relation(order).pairs())
        os << "  " << quoted(order.carrier().label(i)) << " -> " << quoted(order.carrier().label(j)) << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace gorder
