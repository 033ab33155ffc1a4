#include "fillings/slope.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace fl {

namespace {

i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("slope arithmetic overflow");
    return r;
}

i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("slope arithmetic overflow");
    return r;
}

i64 floor_div(i64 a, i64 b) {
    i64 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

Slope slope_normalize(i64 p, i64 q) {
    if (p == 0 && q == 0) throw std::invalid_argument("slope 0/0");
    if (q == 0) return {1, 0};
    if (q < 0) {
        p = -p;
        q = -q;
    }
    i64 g = std::gcd(p, q);
    return {p / g, q / g};
}

i64 slope_distance(const Slope& a, const Slope& b) {
    i64 d = checked_add(checked_mul(a.num, b.den), -checked_mul(b.num, a.den));
    return d < 0 ? -d : d;
}

Slope twists_to_fraction(const TwistSequence& t) {
    if (t.empty()) return {0, 1};
    // x = p/q projectively; a + 1/x = (a p + q) / p
    i64 p = t[0], q = 1;
    for (std::size_t i = 1; i < t.size(); ++i) {
        i64 np = checked_add(checked_mul(t[i], p), q);
        q = p;
        p = np;
    }
    return slope_normalize(p, q);
}

TwistSequence fraction_to_twists(const Slope& s) {
    if (s.is_inf()) return {0, 0};
    TwistSequence out;
    i64 p = s.num, q = s.den;
    // x = a + 1/y with a = floor(x + 1/2), so |y| >= 2 for every inner step
    while (true) {
        i64 a = floor_div(2 * p + q, 2 * q);
        i64 r = p - a * q;
        out.push_back(a);
        if (r == 0) break;
        p = q;
        q = r;
        if (q < 0) {
            p = -p;
            q = -q;
        }
    }
    return {out.rbegin(), out.rend()};
}

Slope parse_slope(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
        if (!s.empty() && s.front() == '+') s.remove_prefix(1);
        i64 v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
            throw std::invalid_argument("bad fraction: " + std::string(text));
        return v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return slope_normalize(parse_int(text), 1);
    return slope_normalize(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string to_string(const Slope& s) {
    return std::to_string(s.num) + "/" + std::to_string(s.den);
}

std::string short_string(const Slope& s) {
    if (s.den == 1) return std::to_string(s.num);
    return to_string(s);
}

Slope inv(const Slope& s) {
    if (s.num == 0) return {1, 0};
    return slope_normalize(s.den, s.num);
}

Slope neg(const Slope& s) {
    if (s.is_inf()) return s;
    return {-s.num, s.den};
}

Slope add(const Slope& s, i64 n) {
    if (s.is_inf()) return s;
    return slope_normalize(checked_add(s.num, checked_mul(n, s.den)), s.den);
}

Slope add(const Slope& a, const Slope& b) {
    if (a.is_inf() && b.is_inf()) throw std::domain_error("1/0 + 1/0");
    if (a.is_inf()) return a;
    if (b.is_inf()) return b;
    return slope_normalize(checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
                           checked_mul(a.den, b.den));
}

Slope rot(const Slope& s) { return neg(inv(s)); }

}  // namespace fl
