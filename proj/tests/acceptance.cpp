// One line per acceptance criterion; exit 0 iff every line says PASS.
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "fillings/cases.hpp"
#include "fillings/diagram.hpp"
#include "fillings/graphs.hpp"
#include "fillings/index.hpp"
#include "fillings/manifold.hpp"
#include "fillings/slope.hpp"
#include "fillings/tangle.hpp"

using namespace fl;

namespace {

bool lens_is(const ManifoldDesc& m, i64 p, i64 q) { return m.is<Lens>() && lens_homeo(m.as<Lens>(), {p, q}); }

bool orders_are(const ManifoldDesc& m, std::vector<i64> o) {
    std::sort(o.begin(), o.end());
    return m.is<SFS>() && m.as<SFS>().piece.orders() == o;
}

bool union_is(const ManifoldDesc& m, std::vector<i64> l, std::vector<i64> r) {
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
    return lens_is(ps[0], 3, 1) && lens_is(ps[1], 2, 1);
}

ManifoldDesc cover(const std::string& q) { return cover_Q(parse_q(q)); }

std::string c1(bool& ok) {
    for (i64 p = -12; p <= -3; ++p) {
        auto [a, b] = family_manifolds(p);
        auto r = classify(b);
        if (!l3_l2(a) || h1_order(a) != 6 || !union_is(b, {2, std::abs(p - 2)}, {2, std::abs(p)}) || !r.is_toroidal || r.is_seifert) {
            ok = false;
            return "p=" + std::to_string(p) + " differs";
        }
    }
    ok = true;
    return "p=-3..-12: L(3,1)#L(2,1) with |H1|=6 and D2(2,|p-2|) U_T D2(2,|p|), toroidal, not SFS";
}

std::string c2(bool& ok) {
    int good = 0, total = 0;
    auto pin = [&](bool b) {
        ++total;
        good += b;
    };
    pin(l3_l2(cover("Q(2,-7,-1/5,-1/3)")));
    pin(orders_are(cover("Q(2,-5,1/2,-1/3)"), {2, 3, 5}));
    pin(union_is(cover("Q(2,-5,-1/3,1/0)"), {2, 5}, {2, 3}));
    pin(lens_is(cover("Q(-4,3,1/0,-1/3)"), 7, -2));
    pin(lens_is(cover("Q(1,-3,1/4,-1/3)"), 8, -3));
    pin(lens_is(cover("Q(1,3,1/4,-1/3)"), 10, -3));
    pin(lens_is(cover("Q(-2,1,-1/3,-1/3)"), 16, -5));
    pin(lens_is(cover("Q(2,-4,-1/3,-1/3)"), 5, 1));
    pin(orders_are(cover("Q(0,-4,-1/3,-1/3)"), {3, 4, 5}));
    pin(orders_are(cover("Q(-4,3,1,-1/3)"), {4, 2, 3}));
    // the parametric ones, over a range of parameters
    bool w1 = true, w2 = true, w3 = true;
    for (i64 n = -12; n <= 12; ++n) {
        if (n == 0) continue;
        if (std::abs(n - 1) >= 2)
            w1 = w1 && union_is(cover_Q(make_q(slope(-1), slope(-3), slope(1, n), slope(-1, 3))), {2, 4}, {2, std::abs(n - 1)});
        if (std::abs(n - 3) >= 2)
            w2 = w2 && orders_are(cover_Q(make_q(slope(1), slope(-3), slope(1, n), slope(-1, 3))), {2, 2, std::abs(n - 3)});
    }
    for (i64 t = -12; t <= 12; ++t)
        if (std::abs(t) >= 2) w3 = w3 && orders_are(cover_Q(make_q(slope(t), slope(0), slope(-1, 3), slope(-1, 3))), {3, 5, std::abs(t)});
    pin(w1);
    pin(w2);
    pin(w3);
    ok = good == total && total == 13;
    return std::to_string(good) + "/" + std::to_string(total) + " pinned covers reproduced (lens up to lens_homeo, orders as multisets)";
}

std::string c3(bool& ok) {
    auto r = oracle_grid();
    ok = r.checked >= 300 && r.mismatches.empty();
    return std::to_string(r.checked) + " fillings checked, " + std::to_string(r.mismatches.size()) + " mismatches";
}

std::string c4(bool& ok) {
    i64 d = slope_distance(slope(1, 0), slope(-1, 3));
    std::vector<i64> rejected;
    for (i64 p = -12; p <= 12; ++p)
        if (!admissible_p(p).accepted) rejected.push_back(p);
    ok = d == 3 && rejected == std::vector<i64>{-2, -1, 0, 1, 2, 3, 4};
    std::string s;
    for (auto p : rejected) s += (s.empty() ? "" : ",") + std::to_string(p);
    return "distance(1/0, -1/3) = " + std::to_string(d) + ", rejected {" + s + "}";
}

std::string c5(bool& ok) {
    std::mt19937_64 rng(1);
    int bad = 0;
    for (int i = 0; i < 200; ++i) {
        auto g = random_plane_graph(rng, 40);
        orient_randomly(g, rng);
        if (g.num_edges() > 40 || !is_connected(g) || trace_faces(g).euler != 2 || indices(g).total != 2) ++bad;
    }
    ok = bad == 0;
    return "200 seeded graphs, " + std::to_string(bad) + " with sum of indices != 2";
}

std::string c6(bool& ok) {
    auto l = standard_layout();
    auto i = enumerate_interior_types(l).size();
    auto b = enumerate_boundary_cycle_types(l, DualMode::omega).size();
    ok = i == 4 && b == 8;
    return std::to_string(i) + " interior types, " + std::to_string(b) + " boundary cycle types for w";
}

std::string c7(bool& ok) {
    auto r = run_elimination_suite(standard_layout());
    int elim = 0, order1 = 0, ab = 0, claim = 0, bad = 0;
    for (const auto& e : r.entries) {
        // the first elimination entry is the feasible context itself
        bool infeasible = e.verdict.rfind("infeasible", 0) == 0;
        if (e.id == "elimination" && e.expected == "infeasible") {
            ++elim;
            bad += !(e.pass && infeasible);
        } else if (e.id == "order1") {
            ++order1;
            bad += !(e.pass && infeasible);
        } else if (e.id == "abface") {
            ++ab;
            bad += !(e.pass && infeasible);
        } else if (e.id == "omega2.claim") {
            ++claim;
            bad += !(e.pass && infeasible);
        }
    }
    ok = bad == 0 && elim == 5 && order1 >= 4 && ab == 1 && claim == 1;
    return std::to_string(elim) + " elimination corners, " + std::to_string(order1) + " order1 triples, abface, omega2 claim: " +
           std::to_string(bad) + " not infeasible";
}

std::string c8(bool& ok) {
    std::vector<std::string> failed;
    // continued fractions
    {
        std::mt19937_64 rng(20261015);
        std::uniform_int_distribution<i64> num(-1000000, 1000000), den(1, 1000000);
        int done = 0, bad = 0;
        while (done < 10000) {
            i64 p = num(rng), q = den(rng);
            if (std::gcd(p, q) != 1) continue;
            bad += twists_to_fraction(fraction_to_twists({p, q})) != Slope{p, q};
            ++done;
        }
        if (bad) failed.push_back("round trip");
    }
    // lens_homeo axioms
    {
        bool good = true;
        for (i64 p = 2; p <= 30 && good; ++p) {
            std::vector<i64> qs;
            for (i64 q = 0; q < p; ++q)
                if (std::gcd(p, q) == 1) qs.push_back(q);
            for (i64 a : qs) {
                good = good && lens_homeo({p, a}, {p, a});
                for (i64 b : qs) {
                    bool ab = lens_homeo({p, a}, {p, b});
                    good = good && ab == lens_homeo({p, b}, {p, a});
                    if (ab)
                        for (i64 c : qs)
                            if (lens_homeo({p, b}, {p, c})) good = good && lens_homeo({p, a}, {p, c});
                }
            }
        }
        if (!good) failed.push_back("lens_homeo");
    }
    // parity on every shipped fixture
    {
        int n = 0;
        bool good = true;
        for (const auto& f : std::filesystem::directory_iterator(FILLINGS_DATA_DIR)) {
            if (f.path().extension() != ".json") continue;
            std::ifstream in(f.path());
            std::stringstream ss;
            ss << in.rdbuf();
            ++n;
            good = good && verify_parity(parse_pair(ss.str()));
        }
        if (!good || n == 0) failed.push_back("parity");
    }
    // Goeritz: deletion choice, color, Reidemeister I/II up to 12 crossings
    {
        bool good = true;
        std::mt19937_64 rng(11);
        std::vector<PlanarDiagram> base{parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"), parse_pd("X(4,1,3,2) X(2,3,1,4)"),
                                        parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"), rational_closure(slope(7, 3))};
        for (const auto& d0 : base) {
            const i64 det0 = goeritz_determinant(d0);
            PlanarDiagram d = d0;
            int guard = 0;
            while (d.crossings.size() + 2 <= 12 && guard++ < 100) {
                for (int color : {0, 1}) {
                    const int m = (int)goeritz_full(d, color).size();
                    for (int del = 0; del < m; ++del) good = good && goeritz_determinant(d, color, del) == det0;
                }
                if (rng() % 2) {
                    d = reidemeister1(d, 1 + (int)(rng() % d.num_edges()), (int)(rng() % 4));
                } else {
                    auto r = checkerboard_regions(d);
                    int f = (int)(rng() % r.faces.size());
                    int len = (int)r.faces[f].size();
                    int i = (int)(rng() % len), j = (int)(rng() % len);
                    if (i == j) continue;
                    try {
                        d = reidemeister2(d, f, i, j, rng() % 2);
                    } catch (const std::invalid_argument&) {
                        continue;
                    }
                }
            }
            good = good && goeritz_determinant(d) == det0;
        }
        if (!good) failed.push_back("Goeritz invariance");
    }
    ok = failed.empty();
    if (ok) return "round trip (10000), lens_homeo axioms (p <= 30), parity on fixtures, Goeritz invariance";
    std::string s = "failed:";
    for (auto& f : failed) s += " " + f;
    return s;
}

}  // namespace

int main() {
    using Fn = std::string (*)(bool&);
    const Fn fns[] = {c1, c2, c3, c4, c5, c6, c7, c8};
    bool all = true;
    for (int i = 0; i < 8; ++i) {
        bool ok = false;
        std::string msg;
        auto t0 = std::chrono::steady_clock::now();
        try {
            msg = fns[i](ok);
        } catch (const std::exception& e) {
            ok = false;
            msg = std::string("error: ") + e.what();
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << "criterion " << i + 1 << ": " << (ok ? "PASS" : "FAIL") << "  " << msg << " (" << std::fixed
                  << std::setprecision(2) << s << " s)\n";
        all = all && ok;
    }
    return all ? 0 : 1;
}
