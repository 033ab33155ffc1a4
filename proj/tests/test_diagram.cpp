#include <random>

#include "doctest.h"
#include "fillings/diagram.hpp"
#include "oracles.hpp"

using namespace fl;

namespace {

const char* kTrefoil = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
const char* kHopf = "X(4,1,3,2) X(2,3,1,4)";
const char* kFigureEight = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";

// every deletion choice for both colors gives the same value
void check_deletion_and_color(const PlanarDiagram& d, i64 expect) {
    for (int color : {0, 1}) {
        auto g = goeritz_full(d, color);
        for (std::size_t i = 0; i < g.size(); ++i) {
            i64 s = 0;
            for (auto v : g[i]) s += v;
            CHECK(s == 0);
            for (std::size_t j = 0; j < g.size(); ++j) CHECK(g[i][j] == g[j][i]);
            CHECK(goeritz_determinant(d, color, (int)i) == expect);
        }
    }
}

}  // namespace

TEST_SUITE("diagram") {

TEST_CASE("small diagrams") {
    PlanarDiagram unknot;
    unknot.free_loops = 1;
    CHECK(goeritz_determinant(unknot) == 1);
    CHECK(checkerboard_regions(unknot).faces.size() == 2);

    auto hopf = parse_pd(kHopf);
    auto rh = checkerboard_regions(hopf);
    CHECK(rh.faces.size() == 4);
    CHECK(goeritz_determinant(hopf) == 2);

    auto tref = parse_pd(kTrefoil);
    auto rt = checkerboard_regions(tref);
    CHECK(rt.faces.size() == 5);
    CHECK(rt.color[rt.outer] == 0);
    CHECK(goeritz_determinant(tref) == 3);
    CHECK(goeritz_determinant(parse_pd(kFigureEight)) == 5);

    // proper coloring: the two sides of every edge differ
    for (const auto& d : {hopf, tref}) {
        auto r = checkerboard_regions(d);
        for (int c = 0; c < (int)d.crossings.size(); ++c)
            for (int k = 0; k < 4; ++k) CHECK(r.color[r.face_of[{c, k}]] != r.color[r.face_of[{c, (k + 1) % 4}]]);
    }
}

TEST_CASE("pd text round trip") {
    auto d = parse_pd(kFigureEight);
    CHECK(parse_pd(to_pd(d)).crossings == d.crossings);
    CHECK_THROWS(parse_pd("X(1,2,3)"));
    CHECK_THROWS(parse_pd("Y(1,2,3,4)"));
}

TEST_CASE("bracket oracle on known links") {
    CHECK(oracle::bracket_determinant(parse_pd(kTrefoil)) == 3);
    CHECK(oracle::bracket_determinant(parse_pd(kHopf)) == 2);
    CHECK(oracle::bracket_determinant(parse_pd(kFigureEight)) == 5);
    // trefoil bracket: A^-7 - A^-3 - A^5 up to mirror
    oracle::Poly t{{-7, 1}, {-3, -1}, {5, -1}};
    CHECK(oracle::equal_up_to_unit_or_mirror(oracle::bracket(parse_pd(kTrefoil)), t));
    CHECK_FALSE(oracle::equal_up_to_unit(oracle::bracket(parse_pd(kFigureEight)), t));
    PlanarDiagram two;
    two.free_loops = 2;
    CHECK(oracle::bracket_determinant(two) == 0);
}

TEST_CASE("rational closures") {
    for (i64 q = 1; q <= 9; ++q)
        for (i64 p = -15; p <= 15; ++p) {
            if (std::gcd(p, q) != 1) continue;
            auto d = rational_closure(slope(p, q));
            i64 want = std::abs(p);
            CHECK(goeritz_determinant(d) == want);
            if (d.crossings.size() <= 14) CHECK(oracle::bracket_determinant(d) == want);
        }
}

TEST_CASE("deletion choice and color swap") {
    check_deletion_and_color(parse_pd(kTrefoil), 3);
    check_deletion_and_color(parse_pd(kFigureEight), 5);
    for (auto s : {slope(7, 3), slope(-12, 5), slope(17, 7)}) check_deletion_and_color(rational_closure(s), std::abs(s.num));
    auto q = diagram_Q(parse_q("Q(2,-5,1/-3,-1/3)"));
    check_deletion_and_color(q, 6);
}

TEST_CASE("Reidemeister I and II, at most 12 crossings") {
    std::mt19937_64 rng(11);
    std::vector<PlanarDiagram> base{parse_pd(kTrefoil), parse_pd(kHopf), parse_pd(kFigureEight), rational_closure(slope(7, 3)),
                                    rational_closure(slope(13, 5))};
    int moves = 0;
    for (const auto& d0 : base) {
        const i64 det0 = goeritz_determinant(d0);
        const auto br0 = oracle::bracket(d0);
        PlanarDiagram d = d0;
        while (d.crossings.size() + 2 <= 12) {
            if (rng() % 2) {
                int label = 1 + (int)(rng() % d.num_edges());
                d = reidemeister1(d, label, (int)(rng() % 4));
            } else {
                auto r = checkerboard_regions(d);
                int f = (int)(rng() % r.faces.size());
                int len = (int)r.faces[f].size();
                if (len < 2) continue;
                int i = (int)(rng() % len), j = (int)(rng() % len);
                if (i == j) continue;
                try {
                    d = reidemeister2(d, f, i, j, rng() % 2);
                } catch (const std::invalid_argument&) {
                    continue;
                }
            }
            ++moves;
            REQUIRE(d.crossings.size() <= 12);
            CHECK(goeritz_determinant(d) == det0);
            CHECK(goeritz_determinant(d, 1, (int)(rng() % 2)) == det0);
            CHECK(oracle::equal_up_to_unit(oracle::bracket(d), br0));
        }
    }
    CHECK(moves >= 20);
}

TEST_CASE("connected sum multiplies") {
    std::vector<PlanarDiagram> ds{parse_pd(kTrefoil), parse_pd(kHopf), parse_pd(kFigureEight), rational_closure(slope(7, 2)),
                                  rational_closure(slope(9, 4))};
    for (const auto& a : ds)
        for (const auto& b : ds) {
            auto s = connected_sum(a, b);
            CHECK(goeritz_determinant(s) == goeritz_determinant(a) * goeritz_determinant(b));
        }
}

TEST_CASE("Q diagrams") {
    auto z = diagram_Q(parse_q("Q(0,0,0,0)"));
    CHECK(goeritz_determinant(z) == oracle::bracket_determinant(z));
    CHECK(goeritz_determinant(diagram_Q(parse_q("Q(2,-5,1/-3,-1/3)"))) == 6);
    CHECK(goeritz_determinant(diagram_Q(parse_q("Q(-4,3,1/0,-1/3)"))) == 7);
    // crossing count stays within template size plus twist lengths
    const std::size_t c0 = q_template().skeleton.size();
    for (const char* s : {"Q(2,-5,1/2,-1/3)", "Q(7,0,-1/3,-1/3)", "Q(1,3,1/4,-1/3)"}) {
        auto f = parse_q(s);
        std::size_t twist = 0;
        for (const auto& site : q_template().sites) {
            const Slot& v = site.slot == "theta" ? f.theta : site.slot == "phi" ? f.phi : site.slot == "omega" ? f.omega : f.pi;
            for (auto t : fraction_to_twists(apply_frame(site.frame, *v))) twist += (std::size_t)std::abs(t);
        }
        CHECK(diagram_Q(f).crossings.size() <= c0 + twist);
    }
}

TEST_CASE("bracket oracle agrees with Goeritz on Q fillings") {
    auto pool = std::vector<Slope>{slope(1, 0), slope(0), slope(1), slope(-1), slope(2), slope(-2), slope(3), slope(1, 2), slope(-1, 3), slope(1, 3)};
    int n = 0, k = 0;
    for (const auto& pi : {slope(1, 0), slope(-1, 3)})
        for (const auto& th : pool)
            for (const auto& ph : pool)
                for (const auto& om : pool) {
                    if (k++ % 7) continue;
                    auto d = diagram_Q(make_q(th, ph, om, pi));
                    if (d.crossings.size() > 22) continue;
                    CHECK(goeritz_determinant(d) == oracle::bracket_determinant(d));
                    ++n;
                }
    CHECK(n >= 40);
}

TEST_CASE("oracle grid") {
    auto r = oracle_grid(4999);
    CHECK(r.checked >= 300);
    CHECK(r.mismatches.empty());
}

}
