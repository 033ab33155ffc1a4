#pragma once

#include <string>
#include <vector>

#include "fillings/manifold.hpp"
#include "fillings/slope.hpp"

namespace fl {

// N(a_1 + ... + a_k) when b is empty, otherwise N(a_1 + ... + a_k + R(b_1 + ... + b_m)).
// Leaves are Conway fractions of rational tangles; R is the quarter turn (x -> -1/x on fractions).
struct ArborescentLink {
    std::vector<Slope> a;
    std::vector<Slope> b;

    bool two_node() const { return !b.empty(); }
    bool operator==(const ArborescentLink&) const = default;
};

// double branched cover as a canonical descriptor
ManifoldDesc double_cover(const ArborescentLink& link);

// |n| of the fraction pair of the whole sum; independent of double_cover
i64 pair_determinant(const ArborescentLink& link);

std::string to_string(const ArborescentLink& link);

}  // namespace fl
