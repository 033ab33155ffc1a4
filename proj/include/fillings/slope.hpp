#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fl {

using i64 = std::int64_t;

// Reduced p/q with q >= 0; 1/0 is the only slope with q == 0.
struct Slope {
    i64 num = 0;
    i64 den = 1;

    bool is_inf() const { return den == 0; }
    bool is_integer() const { return den == 1; }
    auto operator<=>(const Slope&) const = default;
};

Slope slope_normalize(i64 p, i64 q);
i64 slope_distance(const Slope& a, const Slope& b);

using TwistSequence = std::vector<i64>;

Slope twists_to_fraction(const TwistSequence& t);
TwistSequence fraction_to_twists(const Slope& s);

// "p/q", "-p/q", "p/-q", "n"; throws std::invalid_argument
Slope parse_slope(std::string_view text);
std::string to_string(const Slope& s);   // always "p/q"
std::string short_string(const Slope& s); // integers without "/1"

// projective arithmetic used by the tangle formulas; 1/0 + finite = 1/0
Slope inv(const Slope& s);   // 1/x
Slope neg(const Slope& s);
Slope add(const Slope& s, i64 n);
Slope add(const Slope& a, const Slope& b); // rejects 1/0 + 1/0
Slope rot(const Slope& s);   // -1/x

inline Slope slope(i64 p, i64 q = 1) { return slope_normalize(p, q); }

}  // namespace fl
