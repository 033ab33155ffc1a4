#include "fillings/manifold.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "fillings/intmat.hpp"

namespace fl {

namespace {

i64 floor_div(i64 a, i64 b) {
    i64 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

i64 mod(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

// x, y with a x + b y = gcd(a, b) >= 0
void ext_gcd(i64 a, i64 b, i64& g, i64& x, i64& y) {
    i64 x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        i64 q = floor_div(a, b);
        i64 t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
        t = y0 - q * y1;
        y0 = y1;
        y1 = t;
    }
    if (a < 0) {
        a = -a;
        x0 = -x0;
        y0 = -y0;
    }
    g = a;
    x = x0;
    y = y0;
}

i64 to_i64(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("h1_order overflow");
    return (i64)v;
}

void check_fiber(const Fiber& f) {
    if (f.alpha < 0) throw std::invalid_argument("fiber with negative alpha");
    if (std::gcd(f.alpha, f.beta) != 1)
        throw std::invalid_argument("fiber (" + std::to_string(f.alpha) + "," +
                                    std::to_string(f.beta) + ") not coprime");
}

std::string join_orders(const std::vector<i64>& o) {
    std::string s;
    for (std::size_t i = 0; i < o.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(o[i]);
    }
    return s;
}

std::string pairs(const SeifertPiece& p) {
    std::string s = "b=" + std::to_string(p.euler);
    for (const auto& f : p.fibers)
        s += "; (" + std::to_string(f.alpha) + "," + std::to_string(f.beta) + ")";
    return s;
}

// the piece as a Seifert disk piece contributes rows for its fibers plus the
// expression s = sum x_i - e h; returns coefficient vector of s over [x..., h]
struct PieceRows {
    IntMatrix rows;
    std::vector<i64> section;  // length fibers + 1
};

PieceRows piece_rows(const SeifertPiece& p) {
    const std::size_t n = p.fibers.size();
    PieceRows out;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<i64> r(n + 1, 0);
        r[i] = p.fibers[i].alpha;
        r[n] = p.fibers[i].beta;
        out.rows.push_back(r);
    }
    out.section.assign(n + 1, 1);
    out.section[n] = -p.euler;
    return out;
}

std::optional<i64> torus_union_h1(const TorusUnion& t) {
    if (!t.gluing) return std::nullopt;
    const Gluing& g = *t.gluing;
    PieceRows L = piece_rows(t.left), R = piece_rows(t.right);
    const std::size_t nl = t.left.fibers.size() + 1, nr = t.right.fibers.size() + 1;
    const std::size_t n = nl + nr;
    IntMatrix m;
    for (auto& r : L.rows) {
        std::vector<i64> row(n, 0);
        std::copy(r.begin(), r.end(), row.begin());
        m.push_back(row);
    }
    for (auto& r : R.rows) {
        std::vector<i64> row(n, 0);
        std::copy(r.begin(), r.end(), row.begin() + nl);
        m.push_back(row);
    }
    std::vector<i64> sL(n, 0), hL(n, 0), sR(n, 0), hR(n, 0);
    std::copy(L.section.begin(), L.section.end(), sL.begin());
    hL[nl - 1] = 1;
    std::copy(R.section.begin(), R.section.end(), sR.begin() + nl);
    hR[n - 1] = 1;
    std::vector<i64> r1(n), r2(n);
    for (std::size_t i = 0; i < n; ++i) {
        r1[i] = sR[i] - g.a * sL[i] - g.b * hL[i];
        r2[i] = hR[i] - g.c * sL[i] - g.d * hL[i];
    }
    m.push_back(r1);
    m.push_back(r2);
    i64 d = det_bareiss(m);
    return d < 0 ? -d : d;
}

}  // namespace

std::vector<i64> SeifertPiece::orders() const {
    std::vector<i64> o;
    for (const auto& f : fibers)
        if (f.alpha >= 2) o.push_back(f.alpha);
    std::sort(o.begin(), o.end());
    return o;
}

bool ConnSum::operator==(const ConnSum& o) const { return parts == o.parts; }

SeifertPiece normalized(SeifertPiece piece) {
    std::vector<Fiber> out;
    for (const auto& f : piece.fibers) {
        check_fiber(f);
        if (f.alpha == 0) throw std::invalid_argument("order-0 fiber cannot be normalized");
        i64 k = floor_div(f.beta, f.alpha);
        piece.euler += k;
        i64 b = f.beta - k * f.alpha;
        if (f.alpha >= 2) out.push_back({f.alpha, b});
    }
    std::sort(out.begin(), out.end());
    piece.fibers = out;
    return piece;
}

ManifoldDesc make_lens(i64 p, i64 q) {
    if (p < 0) {
        p = -p;
        q = -q;
    }
    if (p == 0) {
        if (q != 1 && q != -1) throw std::invalid_argument("L(0,q) needs q = +-1");
        return {S2xS1{}};
    }
    if (p == 1) return {S3{}};
    if (std::gcd(p, q) != 1) throw std::invalid_argument("lens parameters not coprime");
    return {Lens{p, mod(q, p)}};
}

SeifertPiece make_disk_piece(std::vector<Fiber> fibers, i64 euler) {
    SeifertPiece p{Base::disk, std::move(fibers), euler};
    return normalized(p);
}

ManifoldDesc make_sfs(std::vector<Fiber> fibers, i64 euler) {
    int zeros = 0;
    for (const auto& f : fibers) {
        check_fiber(f);
        if (f.alpha == 0) ++zeros;
    }
    if (zeros > 0) {
        // an order-0 fiber splits the space along a sphere
        std::vector<ManifoldDesc> parts;
        for (const auto& f : fibers)
            if (f.alpha >= 2) parts.push_back(make_lens(f.alpha, -f.beta));
        for (int i = 1; i < zeros; ++i) parts.push_back({S2xS1{}});
        return make_connsum(std::move(parts));
    }
    SeifertPiece p = normalized({Base::sphere, std::move(fibers), euler});
    if (p.fibers.size() <= 2) return sfs_to_lens(p);
    return {SFS{p}};
}

ManifoldDesc make_connsum(std::vector<ManifoldDesc> parts) {
    std::vector<ManifoldDesc> flat;
    for (auto& m : parts) {
        if (m.is<S3>()) continue;
        if (m.is<ConnSum>()) {
            for (const auto& x : m.as<ConnSum>().parts) flat.push_back(x);
        } else {
            flat.push_back(std::move(m));
        }
    }
    if (flat.empty()) return {S3{}};
    if (flat.size() == 1) return flat.front();
    std::stable_sort(flat.begin(), flat.end(), [](const ManifoldDesc& a, const ManifoldDesc& b) {
        auto ha = h1_order(a).value_or(-1), hb = h1_order(b).value_or(-1);
        if (ha != hb) return ha > hb;
        return to_string(a) < to_string(b);
    });
    return {ConnSum{std::move(flat)}};
}

ManifoldDesc sfs_to_lens(const SeifertPiece& piece) {
    SeifertPiece p = normalized(piece);
    if (p.fibers.size() > 2) throw std::invalid_argument("sfs_to_lens: three or more exceptional fibers");
    // the space is the cover of N(n1/d1 + n2/d2), framing folded into the first fraction
    i64 n1 = p.euler, d1 = 1, n2 = 0, d2 = 1;
    if (!p.fibers.empty()) {
        d1 = p.fibers[0].alpha;
        n1 = p.fibers[0].beta + p.euler * d1;
    }
    if (p.fibers.size() == 2) {
        d2 = p.fibers[1].alpha;
        n2 = p.fibers[1].beta;
    }
    i64 g, x, y;
    ext_gcd(n2, d2, g, x, y);  // n2 x + d2 y = 1, so d2' = x, n2' = -y
    i64 pp = n1 * d2 + d1 * n2;
    i64 q = -(n1 * x + d1 * -y);
    if (pp == 0) return {S2xS1{}};
    return make_lens(pp, q);
}

bool lens_homeo(const Lens& a, const Lens& b) {
    i64 p = a.p < 0 ? -a.p : a.p;
    if (p != (b.p < 0 ? -b.p : b.p)) return false;
    if (p <= 1) return true;
    i64 q = mod(a.q, p), q2 = mod(b.q, p);
    i64 g, x, y;
    ext_gcd(q, p, g, x, y);
    if (g != 1) return false;
    i64 qi = mod(x, p);
    return q2 == q || q2 == mod(-q, p) || q2 == qi || q2 == mod(-qi, p);
}

std::optional<i64> h1_order(const ManifoldDesc& m) {
    return std::visit(
        [](const auto& x) -> std::optional<i64> {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, S3>) {
                return 1;
            } else if constexpr (std::is_same_v<T, S2xS1>) {
                return 0;
            } else if constexpr (std::is_same_v<T, Lens>) {
                return x.p;
            } else if constexpr (std::is_same_v<T, SFS>) {
                const auto& f = x.piece.fibers;
                __int128 prod = 1;
                for (const auto& fb : f) prod *= fb.alpha;
                __int128 s = (__int128)x.piece.euler * prod;
                for (std::size_t i = 0; i < f.size(); ++i) {
                    __int128 t = f[i].beta;
                    for (std::size_t j = 0; j < f.size(); ++j)
                        if (j != i) t *= f[j].alpha;
                    s += t;
                }
                return to_i64(s < 0 ? -s : s);
            } else if constexpr (std::is_same_v<T, TorusUnion>) {
                return torus_union_h1(x);
            } else {
                __int128 prod = 1;
                for (const auto& part : x.parts) {
                    auto h = h1_order(part);
                    if (!h) return std::nullopt;
                    prod *= *h;
                }
                return to_i64(prod);
            }
        },
        m.v);
}

ClassificationReport classify(const ManifoldDesc& m) {
    ClassificationReport r;
    if (m.is<S3>() || m.is<Lens>()) {
        r.is_lens = true;
        r.is_prime = true;
        r.is_seifert = true;
    } else if (m.is<S2xS1>()) {
        // prime but not irreducible; kept non-reducible so is_reducible => !is_prime holds
        r.is_prime = true;
        r.is_seifert = true;
    } else if (m.is<SFS>()) {
        const auto n = m.as<SFS>().piece.orders().size();
        r.is_prime = true;
        r.is_seifert = true;
        r.is_toroidal = n >= 4;
    } else if (m.is<TorusUnion>()) {
        const auto& t = m.as<TorusUnion>();
        auto ol = t.left.orders(), orr = t.right.orders();
        if (ol.size() < 2 || orr.size() < 2)
            throw std::invalid_argument("TorusUnion side with fewer than two exceptional fibers is not canonical");
        r.is_toroidal = true;
        r.is_prime = true;
        r.is_seifert = t.fiber_delta == 0;
        auto kb = [](const std::vector<i64>& o) { return o == std::vector<i64>{2, 2}; };
        r.contains_klein_bottle = kb(ol) || kb(orr);
    } else {
        const auto& parts = m.as<ConnSum>().parts;
        r.is_reducible = true;
        r.is_prime = false;
        // RP3 # RP3 is the one Seifert connected sum
        r.is_seifert = parts.size() == 2 && parts[0].is<Lens>() && parts[1].is<Lens>() &&
                       parts[0].as<Lens>().p == 2 && parts[1].as<Lens>().p == 2;
    }
    return r;
}

bool equivalent(const ManifoldDesc& a, const ManifoldDesc& b) {
    if (classify(a) != classify(b)) return false;
    if (h1_order(a) != h1_order(b)) return false;
    if (a.v.index() != b.v.index()) return false;
    if (a.is<Lens>()) return lens_homeo(a.as<Lens>(), b.as<Lens>());
    if (a.is<SFS>()) return a.as<SFS>().piece.orders() == b.as<SFS>().piece.orders();
    if (a.is<TorusUnion>()) {
        const auto &x = a.as<TorusUnion>(), &y = b.as<TorusUnion>();
        if (x.fiber_delta != y.fiber_delta) return false;
        auto xl = x.left.orders(), xr = x.right.orders(), yl = y.left.orders(), yr = y.right.orders();
        return (xl == yl && xr == yr) || (xl == yr && xr == yl);
    }
    if (a.is<ConnSum>()) {
        const auto &xs = a.as<ConnSum>().parts, &ys = b.as<ConnSum>().parts;
        if (xs.size() != ys.size()) return false;
        std::vector<bool> used(ys.size(), false);
        for (const auto& x : xs) {
            bool hit = false;
            for (std::size_t j = 0; j < ys.size() && !hit; ++j)
                if (!used[j] && equivalent(x, ys[j])) used[j] = hit = true;
            if (!hit) return false;
        }
        return true;
    }
    return true;
}

i64 lens_q_display(const Lens& l) {
    i64 q = mod(l.q, l.p);
    if (2 * q > l.p) q -= l.p;
    return q;
}

std::string to_string(const ManifoldDesc& m) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, S3>) {
                return "S3";
            } else if constexpr (std::is_same_v<T, S2xS1>) {
                return "S2xS1";
            } else if constexpr (std::is_same_v<T, Lens>) {
                return "L(" + std::to_string(x.p) + "," + std::to_string(lens_q_display(x)) + ")";
            } else if constexpr (std::is_same_v<T, SFS>) {
                return "S2(" + join_orders(x.piece.orders()) + ")";
            } else if constexpr (std::is_same_v<T, TorusUnion>) {
                return "D2(" + join_orders(x.left.orders()) + ") U_T D2(" + join_orders(x.right.orders()) +
                       ") [delta=" + std::to_string(x.fiber_delta) + "]";
            } else {
                std::string s;
                for (std::size_t i = 0; i < x.parts.size(); ++i) {
                    if (i) s += " # ";
                    s += to_string(x.parts[i]);
                }
                return s;
            }
        },
        m.v);
}

std::string describe(const ManifoldDesc& m) {
    if (m.is<SFS>()) return to_string(m) + " [" + pairs(m.as<SFS>().piece) + "]";
    if (m.is<TorusUnion>()) {
        const auto& t = m.as<TorusUnion>();
        return to_string(m) + " [left " + pairs(t.left) + " | right " + pairs(t.right) + "]";
    }
    if (m.is<ConnSum>()) {
        std::string s;
        for (const auto& p : m.as<ConnSum>().parts) {
            if (!s.empty()) s += " # ";
            s += describe(p);
        }
        return s;
    }
    return to_string(m);
}

std::string to_string(const ClassificationReport& r) {
    std::ostringstream os;
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    os << "reducible=" << yn(r.is_reducible) << " lens=" << yn(r.is_lens) << " seifert=" << yn(r.is_seifert)
       << " toroidal=" << yn(r.is_toroidal) << " prime=" << yn(r.is_prime)
       << " klein_bottle=" << yn(r.contains_klein_bottle);
    return os.str();
}

}  // namespace fl
