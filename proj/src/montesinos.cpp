#include "fillings/montesinos.hpp"

#include <stdexcept>

namespace fl {

namespace {

int count_inf(const std::vector<Slope>& xs) {
    int k = 0;
    for (const auto& x : xs) k += x.is_inf();
    return k;
}

int count_exceptional(const std::vector<Slope>& xs) {
    int k = 0;
    for (const auto& x : xs) k += x.den >= 2;
    return k;
}

std::vector<Fiber> fibers_of(const std::vector<Slope>& xs) {
    std::vector<Fiber> f;
    for (const auto& x : xs) f.push_back({x.den, x.num});
    return f;
}

// D(y_1 + ... + y_k) = # D(y_j), D(b/a) = N(-a/b) covered by L(a, -b)
std::vector<ManifoldDesc> denominator_parts(const std::vector<Slope>& xs) {
    std::vector<ManifoldDesc> parts;
    int infs = 0;
    for (const auto& x : xs) {
        if (x.is_inf()) {
            ++infs;
            continue;
        }
        if (x.den >= 2) parts.push_back(make_lens(x.den, -x.num));
    }
    // each further infinite leaf closes off a split unknot
    for (int i = 1; i < infs; ++i) parts.push_back({S2xS1{}});
    return parts;
}

ManifoldDesc single_node(const std::vector<Slope>& xs) {
    if (count_inf(xs) > 0) return make_connsum(denominator_parts(xs));
    return make_sfs(fibers_of(xs), 0);
}

Slope total(const std::vector<Slope>& xs) {
    Slope s{0, 1};
    for (const auto& x : xs) s = add(s, x);
    return s;
}

ManifoldDesc two_node(const std::vector<Slope>& a, const std::vector<Slope>& b) {
    // an infinite leaf on one side: N(1/0 + Y + R(B)) = D(Y) # N(B)
    if (count_inf(a) > 0) {
        auto parts = denominator_parts(a);
        parts.push_back(single_node(b));
        return make_connsum(std::move(parts));
    }
    if (count_inf(b) > 0) {
        auto parts = denominator_parts(b);
        parts.push_back(single_node(a));
        return make_connsum(std::move(parts));
    }
    const int ca = count_exceptional(a), cb = count_exceptional(b);
    if (ca >= 2 && cb >= 2) {
        TorusUnion t;
        t.left = make_disk_piece(fibers_of(a), 0);
        t.right = make_disk_piece(fibers_of(b), 0);
        // s_R = h_L, h_R = s_L: the fibers meet once
        t.gluing = Gluing{0, 1, 1, 0};
        t.fiber_delta = 1;
        return {t};
    }
    // a side with at most one exceptional fiber is a solid torus; N(r + R(B)) = N(B + R(r))
    if (ca <= 1) {
        auto leaves = b;
        leaves.push_back(rot(total(a)));
        return single_node(leaves);
    }
    auto leaves = a;
    leaves.push_back(rot(total(b)));
    return single_node(leaves);
}

struct Pair {
    __int128 n, d;
};

Pair pair_sum(const std::vector<Slope>& xs) {
    Pair s{0, 1};
    for (const auto& x : xs) s = {s.n * x.den + (__int128)x.num * s.d, s.d * x.den};
    return s;
}

std::string sum_string(const std::vector<Slope>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += " + ";
        s += short_string(xs[i]);
    }
    return s;
}

}  // namespace

ManifoldDesc double_cover(const ArborescentLink& link) {
    if (link.a.empty()) throw std::invalid_argument("arborescent link with empty first node");
    if (!link.two_node()) return single_node(link.a);
    return two_node(link.a, link.b);
}

i64 pair_determinant(const ArborescentLink& link) {
    Pair a = pair_sum(link.a);
    if (link.two_node()) {
        Pair b = pair_sum(link.b);
        Pair rb{-b.d, b.n};
        a = {a.n * rb.d + rb.n * a.d, a.d * rb.d};
    }
    __int128 n = a.n < 0 ? -a.n : a.n;
    if (n > INT64_MAX) throw std::overflow_error("pair_determinant overflow");
    return (i64)n;
}

std::string to_string(const ArborescentLink& link) {
    std::string s = "N(" + sum_string(link.a);
    if (link.two_node()) s += " + R(" + sum_string(link.b) + ")";
    return s + ")";
}

}  // namespace fl
