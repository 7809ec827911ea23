#pragma once

#include <cstdint>
#include <stdexcept>

#include "gorder/document.hpp"
#include "gorder/funcspace.hpp"

namespace gorder::generate {

class GenerateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

OrderDocument chain(std::size_t n);
OrderDocument antichain(std::size_t n);
/// e0 < e2, e1 < e2, e1 < e3.
OrderDocument n_poset();
OrderDocument funcspace(const funcspace::Config& cfg);

struct RandomOrder {
    OrderedType order;
    std::uint64_t seed;      // seed of the accepted attempt
    std::size_t attempts;
};

/// Draws each index pair i < j with probability p (as e_i < e_j), closes, and validates.
/// Attempt t uses seed + t; positive-antisymmetry failures are rejected, never repaired.
/// Throws GenerateError after max_attempts rejections.
RandomOrder random_order(std::size_t n, double p, std::uint64_t seed, std::size_t max_attempts = 1000);

/// Raw relation on n elements with each ordered pair (including loops) drawn with probability p.
StrictRelation random_relation(std::size_t n, double p, std::uint64_t seed);

/// Uniform double in [0, 1) from the top 53 bits of a 64-bit draw.
double unit_draw(std::uint64_t bits);

struct Combined {
    OrderDocument doc;
    ViolationReport report;  // empty iff doc is a valid order
};

/// Disjoint union, labels "L:a" / "R:b", no cross pairs.
Combined sum(const OrderDocument& left, const OrderDocument& right);
/// Pairs "(a,b)" with (a,b) < (a',b') iff a <= a' and b <= b' (reflexive closure of <) and the
/// pairs differ. Not something the theory defines; a test-instance factory.
Combined product(const OrderDocument& left, const OrderDocument& right);

}  // namespace gorder::generate
