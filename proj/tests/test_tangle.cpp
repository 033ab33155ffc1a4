#include <random>

#include "doctest.h"
#include "fillings/diagram.hpp"
#include "fillings/tangle.hpp"
#include "oracles.hpp"

using namespace fl;

namespace {

ManifoldDesc cover(const char* q) { return cover_Q(parse_q(q)); }

bool is_lens(const ManifoldDesc& m, i64 p, i64 q) { return m.is<Lens>() && lens_homeo(m.as<Lens>(), Lens{p, q}); }

bool sfs_orders(const ManifoldDesc& m, std::vector<i64> want) {
    std::sort(want.begin(), want.end());
    return m.is<SFS>() && m.as<SFS>().piece.orders() == want;
}

bool union_orders(const ManifoldDesc& m, std::vector<i64> l, std::vector<i64> r) {
    if (!m.is<TorusUnion>()) return false;
    std::sort(l.begin(), l.end());
    std::sort(r.begin(), r.end());
    const auto& t = m.as<TorusUnion>();
    auto a = t.left.orders(), b = t.right.orders();
    return t.fiber_delta == 1 && ((a == l && b == r) || (a == r && b == l));
}

bool l3_l2(const ManifoldDesc& m) {
    if (!m.is<ConnSum>() || m.as<ConnSum>().parts.size() != 2) return false;
    const auto& ps = m.as<ConnSum>().parts;
    return ps[0].is<Lens>() && ps[1].is<Lens>() && lens_homeo(ps[0].as<Lens>(), {3, 1}) && lens_homeo(ps[1].as<Lens>(), {2, 1});
}

}  // namespace

TEST_SUITE("tangle") {

TEST_CASE("pentangle conversion") {
    auto p = q_to_pentangle(parse_q("Q(2,-5,1/-3,-1/3)"));
    CHECK(p.slots[0] == slope(-1, 2));
    CHECK(p.slots[1] == slope(1, 5));
    CHECK(p.slots[2] == slope(1, 2));
    CHECK(p.slots[3] == slope(3));
    CHECK(p.slots[4] == slope(3));
    CHECK(q_to_pentangle(parse_q("Q(1,2,3,1/0)")).slots[4] == slope(0));
    auto star = q_to_pentangle(parse_q("Q(1,2,3,*)"));
    CHECK_FALSE(star.slots[4].has_value());

    std::mt19937_64 rng(3);
    std::uniform_int_distribution<i64> num(-30, 30), den(0, 30);
    auto rnd = [&]() -> Slot {
        if (rng() % 10 == 0) return std::nullopt;
        i64 a = num(rng), b = den(rng);
        if (a == 0 && b == 0) b = 1;
        return slope_normalize(a, b);
    };
    for (int i = 0; i < 1000; ++i) {
        QFilling f = make_q(rnd(), rnd(), rnd(), rnd());
        CHECK(pentangle_to_q(q_to_pentangle(f)) == f);
    }
}

TEST_CASE("parse and print") {
    CHECK(parse_q("Q(2,-5,1/-3,-1/3)") == parse_q("Q(2, -5, -1/3, 1/-3)"));
    CHECK(to_string(parse_q("Q(2,-5,1/-3,*)")) == "Q(2,-5,-1/3,*)");
    CHECK_THROWS(parse_q("Q(1,2,3)"));
    CHECK_THROWS_AS(cover_Q(parse_q("Q(1,2,3,*)")), std::invalid_argument);
    CHECK_THROWS_AS(cover_Q(parse_q("Q(0,0,0,0)")), OutsideFamily);
}

TEST_CASE("pinned covers") {
    // the family member and the three closed forms
    CHECK(l3_l2(cover("Q(2,-7,-1/5,-1/3)")));
    CHECK(sfs_orders(cover("Q(2,-5,1/2,-1/3)"), {2, 3, 5}));
    CHECK(union_orders(cover("Q(2,-5,-1/3,1/0)"), {2, 5}, {2, 3}));
    // lens values
    CHECK(is_lens(cover("Q(-4,3,1/0,-1/3)"), 7, -2));
    CHECK(is_lens(cover("Q(1,-3,1/4,-1/3)"), 8, -3));
    CHECK(is_lens(cover("Q(1,3,1/4,-1/3)"), 10, -3));
    CHECK(is_lens(cover("Q(-2,1,-1/3,-1/3)"), 16, -5));
    CHECK(is_lens(cover("Q(2,-4,-1/3,-1/3)"), 5, 1));
    CHECK(sfs_orders(cover("Q(0,-4,-1/3,-1/3)"), {3, 4, 5}));
    CHECK(sfs_orders(cover("Q(-4,3,1,-1/3)"), {4, 2, 3}));
}

TEST_CASE("pinned lens values are not accidental") {
    CHECK_FALSE(is_lens(cover("Q(-2,1,-1/3,-1/3)"), 16, 3 * 3));
    CHECK_FALSE(is_lens(cover("Q(1,3,1/4,-1/3)"), 10, 1));
}

TEST_CASE("parametric families") {
    for (i64 n = -12; n <= 12; ++n) {
        const Slope om = slope(1, n);
        if (n == 0) continue;
        // W(-1): D2(2,4) U D2(2,|1/w - 1|)
        if (std::abs(n - 1) >= 2) CHECK(union_orders(cover_Q(make_q(slope(-1), slope(-3), om, slope(-1, 3))), {2, 4}, {2, std::abs(n - 1)}));
        // W(1): S2(2,2,|1/w - 3|)
        if (std::abs(n - 3) >= 2) CHECK(sfs_orders(cover_Q(make_q(slope(1), slope(-3), om, slope(-1, 3))), {2, 2, std::abs(n - 3)}));
        for (i64 phi = -8; phi <= 8; ++phi) {
            // theta = 2 form: S2(2,3,|phi + 2 - 1/w|)
            i64 c = std::abs(phi + 2 - n);
            auto m = cover_Q(make_q(slope(2), slope(phi), om, slope(-1, 3)));
            if (c >= 2) CHECK(sfs_orders(m, {2, 3, c}));
            // pi = 1/0 form
            for (i64 th = -6; th <= 6; ++th)
                if (std::abs(th) >= 2 && std::abs(phi) >= 2 && std::abs(n) >= 2)
                    CHECK(union_orders(cover_Q(make_q(slope(th), slope(phi), om, slope(1, 0))), {std::abs(th), std::abs(phi)},
                                       {2, std::abs(n)}));
        }
    }
    // W(0): S2(3,5,|theta|)
    for (i64 th = -12; th <= 12; ++th)
        if (std::abs(th) >= 2) CHECK(sfs_orders(cover_Q(make_q(slope(th), slope(0), slope(-1, 3), slope(-1, 3))), {3, 5, std::abs(th)}));
    // the theta = 2 formula and the phi = 1 reading agree as multisets: S2(2,6,3) = S2(2,3,6)
    CHECK(sfs_orders(cover("Q(2,1,-1/3,-1/3)"), {2, 6, 3}));
}

TEST_CASE("family") {
    for (i64 p = -12; p <= -3; ++p) {
        auto [a, b] = family_manifolds(p);
        CHECK(l3_l2(a));
        CHECK(h1_order(a) == 6);
        CHECK(union_orders(b, {2, std::abs(p - 2)}, {2, std::abs(p)}));
        auto r = classify(b);
        CHECK(r.is_toroidal);
        CHECK_FALSE(r.is_seifert);
        CHECK(slope_distance(slope(1, 0), slope(-1, 3)) == 3);
    }
    auto [a4, b4] = family_manifolds(-4);
    CHECK(union_orders(b4, {2, 6}, {2, 4}));
    auto r10 = classify(family_manifolds(-10).second);
    CHECK(r10.is_toroidal);
    CHECK_FALSE(r10.is_seifert);
    CHECK_FALSE(r10.contains_klein_bottle);
    CHECK_THROWS_AS(family_manifolds(4), std::invalid_argument);
}

TEST_CASE("admissible p") {
    for (i64 p = -12; p <= 12; ++p) {
        auto a = admissible_p(p);
        bool bad = p >= -2 && p <= 4;
        CHECK(a.accepted == !bad);
        if (a.accepted) CHECK(a.canonical == std::min(p, -p + 2));
    }
    CHECK(admissible_p(4).reason == "klein_bottle");
    CHECK(admissible_p(-2).reason == "klein_bottle");
    CHECK(admissible_p(5).canonical == -3);
    CHECK(admissible_p(0).reason.find("omega=1/0") != std::string::npos);
    CHECK(admissible_p(2).reason.find("1/2") != std::string::npos);
    CHECK(admissible_p(3).reason.find("1/3") != std::string::npos);
}

TEST_CASE("symmetries") {
    CHECK(verify_symmetries(parse_q("Q(-4,3,1,-1/3)")));
    CHECK(equivalent(cover("Q(-4,3,1,-1/3)"), cover("Q(3,-4,1,-1/3)")));
    for (const char* pi : {"1/0", "-1/3"}) {
        auto a = cover_Q(make_q(slope(2), slope(3), slope(1, 5), parse_slope(pi)));
        auto b = cover_Q(make_q(slope(2), slope(-5), slope(1, -3), parse_slope(pi)));
        CHECK(equivalent(a, b));
    }
    CHECK(verify_symmetries(parse_q("Q(5,5,1/3,1/0)")));
}

TEST_CASE("theta-phi swap on a 500 sample grid") {
    auto pool = grid_pool();
    std::mt19937_64 rng(500);
    int done = 0;
    while (done < 500) {
        const Slope& th = pool[rng() % pool.size()];
        const Slope& om = pool[rng() % pool.size()];
        const Slope pi = rng() % 2 ? slope(1, 0) : slope(-1, 3);
        // pi = -1/3 needs one of the small slots to be supported
        static const std::vector<Slope> small{slope(2), slope(1), slope(0), slope(-1), slope(1, 0)};
        const Slope ph = pi.is_inf() ? pool[rng() % pool.size()] : small[rng() % small.size()];
        QFilling f = make_q(th, ph, om, pi), g = make_q(ph, th, om, pi);
        if (cover_forms(f).empty() || cover_forms(g).empty()) continue;
        CHECK(equivalent(cover_Q(f), cover_Q(g)));
        ++done;
    }
}

TEST_CASE("all closed forms that apply agree") {
    auto pool = grid_pool();
    int multi = 0;
    for (const auto& th : pool)
        for (const Slope& ph : {slope(2), slope(1), slope(0), slope(-1), slope(1, 0)})
            for (const Slope& om : {slope(1, 0), slope(1), slope(0), slope(1, 2), slope(-1, 3)}) {
                auto forms = cover_forms(make_q(th, ph, om, slope(-1, 3)));
                if (forms.size() < 2) continue;
                ++multi;
                auto first = double_cover(forms[0].link);
                for (std::size_t i = 1; i < forms.size(); ++i) CHECK(equivalent(first, double_cover(forms[i].link)));
            }
    CHECK(multi > 50);
}

TEST_CASE("small theta with pi = 1/0 is Seifert or reducible") {
    for (const Slope& t : {slope(-1), slope(0), slope(1), slope(1, 0)})
        for (i64 phi = -9; phi <= 9; ++phi)
            for (i64 n = -9; n <= 9; ++n) {
                if (n == 0) continue;
                for (const Slope& om : {slope(1, n), slope(2, n)}) {
                    if (om == slope(1) || om == slope(-1) || om == slope(0) || om == slope(1, 2) || om.is_inf()) continue;
                    auto r = classify(cover_Q(make_q(t, slope(phi), om, slope(1, 0))));
                    CHECK((r.is_seifert || r.is_reducible));
                }
            }
}

TEST_CASE("symmetries at bracket level") {
    // theta <-> phi and p <-> -p + 2 are isotopies up to mirror
    for (const Slope& pi : {slope(1, 0), slope(-1, 3)}) {
        for (auto [a, b] : std::vector<std::pair<i64, i64>>{{2, -3}, {1, 3}, {-2, 1}, {0, 2}}) {
            auto x = oracle::bracket(diagram_Q(make_q(slope(a), slope(b), slope(1, 3), pi)));
            auto y = oracle::bracket(diagram_Q(make_q(slope(b), slope(a), slope(1, 3), pi)));
            CHECK(oracle::equal_up_to_unit_or_mirror(x, y));
        }
        for (i64 p : {-3, -4}) {
            auto x = oracle::bracket(diagram_Q(family_filling(p, pi)));
            auto y = oracle::bracket(diagram_Q(family_filling(-p + 2, pi)));
            CHECK(oracle::equal_up_to_unit_or_mirror(x, y));
        }
    }
}

TEST_CASE("covers match the bracket oracle on small fillings") {
    for (const char* s : {"Q(2,-7,-1/5,-1/3)", "Q(-4,3,1/0,-1/3)", "Q(1,-3,1/4,-1/3)", "Q(2,-4,-1/3,-1/3)", "Q(2,-5,1/2,-1/3)",
                          "Q(2,-5,-1/3,1/0)", "Q(-2,1,-1/3,-1/3)", "Q(3,2,1/2,1/0)"}) {
        auto f = parse_q(s);
        CHECK(h1_order(cover_Q(f)) == oracle::bracket_determinant(diagram_Q(f)));
    }
}

}
