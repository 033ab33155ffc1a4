#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "fillings/graphs.hpp"
#include "fillings/index.hpp"

using namespace fl;

namespace {

RotationGraph cycle(int n) {
    RotationGraph g;
    for (int i = 0; i < n; ++i) g.add_vertex();
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

RotationGraph theta_graph() {
    RotationGraph g;
    g.add_vertex();
    g.add_vertex();
    for (int i = 0; i < 3; ++i) g.add_edge(0, 1);
    // reversed order at the second vertex keeps it planar
    g.rotation[1] = {5, 3, 1};
    return g;
}

void orient_all(RotationGraph& g, int o) {
    for (auto& x : g.orient) x = o;
}

// tail of dual edge e under its orientation
int tail(const RotationGraph& g, int e) { return g.orient[e] > 0 ? g.edges[e].first : g.edges[e].second; }

GraphPair fixture() {
    std::ifstream in(FILLINGS_DATA_DIR "/fixture_n4.json");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_pair(ss.str());
}

std::vector<Side> dual_colors(const Dual& d, const std::vector<Side>& by_face) {
    std::vector<Side> out(d.graph.num_vertices, Side::W);
    for (std::size_t f = 0; f < by_face.size(); ++f) out[d.vertex_of_face[f]] = by_face[f];
    return out;
}

// every edge replaced by two parallel ones; all degrees become even
RotationGraph doubled(const RotationGraph& g) {
    RotationGraph h;
    h.num_vertices = g.num_vertices;
    h.rotation.assign(g.num_vertices, {});
    for (auto [u, v] : g.edges) {
        h.edges.push_back({u, v});
        h.edges.push_back({u, v});
    }
    h.orient.assign(h.edges.size(), 0);
    h.tag.assign(h.edges.size(), std::nullopt);
    for (int v = 0; v < g.num_vertices; ++v)
        for (int d : g.rotation[v]) {
            int e = d >> 1;
            if ((d & 1) == 0) {
                h.rotation[v].push_back(4 * e);
                h.rotation[v].push_back(4 * e + 2);
            } else {
                h.rotation[v].push_back(4 * e + 3);
                h.rotation[v].push_back(4 * e + 1);
            }
        }
    return h;
}

// faces alternate across every edge; nullopt when that is impossible
std::optional<std::vector<Side>> proper_colors(const FaceTrace& t) {
    std::vector<int> c(t.faces.size(), -1);
    c[0] = 0;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (int d : t.faces[f]) {
            int nb = t.face_of[d ^ 1];
            if (c[nb] == -1) {
                c[nb] = 1 - c[f];
                stack.push_back(nb);
            } else if (c[nb] == c[f]) {
                return std::nullopt;
            }
        }
    }
    std::vector<Side> out;
    for (int x : c) out.push_back(x ? Side::B : Side::W);
    return out;
}

}  // namespace

TEST_SUITE("index") {

TEST_CASE("face counts") {
    for (int n = 1; n <= 8; ++n) {
        auto t = trace_faces(cycle(n));
        CHECK(t.faces.size() == 2);
        CHECK(t.euler == 2);
    }
    RotationGraph e;
    e.add_vertex();
    e.add_vertex();
    e.add_edge(0, 1);
    CHECK(trace_faces(e).faces.size() == 1);
    CHECK(trace_faces(e).euler == 2);
    auto th = trace_faces(theta_graph());
    CHECK(th.faces.size() == 3);
    CHECK(th.euler == 2);
    // the other order at the second vertex is the torus
    auto tt = theta_graph();
    tt.rotation[1] = {1, 3, 5};
    CHECK(trace_faces(tt).euler == 0);
}

TEST_CASE("broken rotations are rejected") {
    auto g = cycle(3);
    g.rotation[0].pop_back();
    CHECK_FALSE(rotation_problems(g).empty());
    CHECK_THROWS_AS(trace_faces(g), std::invalid_argument);
}

TEST_CASE("index examples") {
    for (int n = 2; n <= 7; ++n) {
        auto g = cycle(n);
        orient_all(g, 1);
        auto r = indices(g);
        for (double i : r.i_vertex) CHECK(i == 0);
        for (double i : r.i_face) CHECK(i == 1);
        CHECK(r.total == 2);
    }
    RotationGraph e;
    e.add_vertex();
    e.add_vertex();
    e.add_edge(0, 1);
    e.orient = {1};
    auto r = indices(e);
    CHECK(r.i_vertex == std::vector<double>{1, 1});
    CHECK(r.s_face == std::vector<int>{2});
    CHECK(r.i_face == std::vector<double>{0});
    CHECK(r.total == 2);
    CHECK(to_text(r).find("sum of indices = 2") != std::string::npos);

    auto u = cycle(3);
    CHECK_THROWS(indices(u));  // unoriented
}

TEST_CASE("200 random graphs") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 200; ++i) {
        auto g = random_plane_graph(rng, 40);
        orient_randomly(g, rng);
        REQUIRE(g.num_edges() <= 40);
        REQUIRE(is_connected(g));
        REQUIRE(trace_faces(g).euler == 2);
        auto r = indices(g);
        for (int s : r.s_vertex) CHECK(s % 2 == 0);
        for (int s : r.s_face) CHECK(s % 2 == 0);
        double sum = 0;
        for (double x : r.i_vertex) sum += x;
        for (double x : r.i_face) sum += x;
        CHECK(sum == r.total);
        CHECK(r.total == 2);
    }
}

TEST_CASE("duals") {
    auto bigon = cycle(2);
    auto d = build_dual(bigon, 0);
    CHECK(d.graph.num_vertices == 2);
    CHECK(d.graph.num_edges() == 2);
    CHECK(d.graph.edges[0].first != d.graph.edges[0].second);

    auto tri = build_dual(cycle(3), 0);
    CHECK(tri.graph.num_vertices == 2);
    CHECK(tri.graph.num_edges() == 3);
    for (auto [a, b] : tri.graph.edges) CHECK(a != b);

    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        auto g = random_plane_graph(rng, 25);
        auto dd = build_dual(build_dual(g, 0).graph, 0);
        CHECK(dd.graph.num_edges() == g.num_edges());
        CHECK(isomorphic(dd.graph, g));
    }
    CHECK_FALSE(isomorphic(cycle(3), cycle(4)));
    CHECK_FALSE(isomorphic(theta_graph(), cycle(3)));
}

TEST_CASE("dual orientation rules") {
    // triangle: inside B, outside face colored locally
    auto g = cycle(3);
    g.tag = {Block::a, Block::b, Block::g};
    // on the sphere either face can be the outside one
    const int inside = 0, outside = 1;
    auto d = build_dual(g, outside);
    std::vector<Side> col(2);
    col[inside] = Side::B;
    col[outside] = Side::W;
    auto c = dual_colors(d, col);
    const int w_vertex = d.vertex_of_face[outside];
    auto om = orient_dual(d, g, c, DualMode::omega);
    CHECK(tail(om, 0) == w_vertex);  // alpha, w: W -> B
    CHECK(tail(om, 1) != w_vertex);  // beta, w: B -> W
    auto op = orient_dual(d, g, c, DualMode::omega_prime);
    CHECK(tail(op, 2) != w_vertex);  // gamma, w': B -> W
    CHECK(tail(op, 1) == w_vertex);  // beta, w': W -> B

    g.tag[2] = Block::eN;
    CHECK_THROWS(orient_dual(d, g, c, DualMode::omega));
    g.tag[2].reset();
    CHECK_THROWS(orient_dual(d, g, c, DualMode::omega));
}

TEST_CASE("modes differ exactly on alpha and beta") {
    std::mt19937_64 rng(9);
    int tested = 0;
    for (int i = 0; i < 100; ++i) {
        auto g = doubled(random_plane_graph(rng, 12));
        auto t = trace_faces(g);
        REQUIRE(t.euler == 2);
        auto pc = proper_colors(t);
        REQUIRE(pc);
        auto col = *pc;
        const Block cls[] = {Block::a, Block::b, Block::g, Block::d};
        for (auto& x : g.tag) x = cls[rng() % 4];
        auto d = build_dual(g, 0);
        auto c = dual_colors(d, col);
        RotationGraph a, b;
        try {
            a = orient_dual(d, g, c, DualMode::omega);
            b = orient_dual(d, g, c, DualMode::omega_prime);
        } catch (const std::invalid_argument&) {
            continue;  // a loop with the outside face on both sides
        }
        ++tested;
        for (int e = 0; e < g.num_edges(); ++e) {
            bool ab = *g.tag[e] == Block::a || *g.tag[e] == Block::b;
            CHECK((a.orient[e] != b.orient[e]) == ab);
        }
    }
    CHECK(tested >= 50);
}

TEST_CASE("w_to_b table") {
    CHECK(w_to_b(DualMode::omega, Block::a));
    CHECK(w_to_b(DualMode::omega, Block::d));
    CHECK_FALSE(w_to_b(DualMode::omega, Block::b));
    CHECK_FALSE(w_to_b(DualMode::omega, Block::g));
    CHECK(w_to_b(DualMode::omega_prime, Block::b));
    CHECK(w_to_b(DualMode::omega_prime, Block::d));
    CHECK_FALSE(w_to_b(DualMode::omega_prime, Block::a));
    CHECK_FALSE(w_to_b(DualMode::omega_prime, Block::g));
}

TEST_CASE("classify_dual on small duals") {
    // triangle: every dual edge inside -> outside, so outside is a sink
    auto g = cycle(3);
    auto d = build_dual(g, 0);
    auto o = d.graph;
    const int out = d.outside;
    for (int e = 0; e < o.num_edges(); ++e) o.orient[e] = o.edges[e].second == out ? 1 : -1;
    auto c = classify_dual(d, o, std::vector<VertexKind>(3, VertexKind::interior));
    CHECK(c.sinks == std::vector<int>{out});
    CHECK(c.sources.size() == 1);
    CHECK(c.cycles.empty());
    CHECK(c.index.total == 2);

    // bigon: opposite dual edges make both dual faces coherent cycles
    auto bg = cycle(2);
    auto bd = build_dual(bg, 0);
    auto bo = bd.graph;
    bo.orient = {1, -1};
    std::vector<VertexKind> kinds{VertexKind::interior, VertexKind::boundary};
    auto bc = classify_dual(bd, bo, kinds);
    CHECK(bc.cycles.size() == 2);
    CHECK(bc.sinks.empty());
    std::set<std::string> tags(bc.cycle_kind.begin(), bc.cycle_kind.end());
    CHECK(tags == std::set<std::string>{"ordinary", "boundary"});
    for (std::size_t i = 0; i < bc.cycles.size(); ++i)
        CHECK(bc.cycle_kind[i] == (kinds[bc.cycle_vertex[i]] == VertexKind::interior ? "ordinary" : "boundary"));
    CHECK(bc.index.total == 2);
}

TEST_CASE("Lambda of the fixture in both modes") {
    auto p = fixture();
    auto l = lambda_of(p, 0);
    REQUIRE(l.problems.empty());
    auto d = build_dual(l.graph, l.outside);
    auto c = dual_colors(d, l.face_color);
    auto t = trace_faces(l.graph);
    for (DualMode m : {DualMode::omega, DualMode::omega_prime}) {
        auto o = orient_dual(d, l.graph, c, m);
        auto r = classify_dual(d, o, l.kind);
        CHECK(r.index.total == 2);
        // sinks and sources away from the outside face sit in binary faces
        std::vector<int> face_of_vertex(d.graph.num_vertices, -1);
        for (std::size_t f = 0; f < d.vertex_of_face.size(); ++f) face_of_vertex[d.vertex_of_face[f]] = (int)f;
        for (const auto* vs : {&r.sinks, &r.sources})
            for (int v : *vs) {
                if (v == d.outside) continue;
                std::set<Block> cls;
                for (int dart : t.faces[face_of_vertex[v]]) cls.insert(*l.graph.tag[dart >> 1]);
                CHECK(cls.size() == 2);
            }
        if (m == DualMode::omega) {
            CHECK(r.sinks.size() + r.sources.size() == 0);
            CHECK(r.cycles.size() == 2);
        } else {
            CHECK(r.sinks.size() == 1);
            CHECK(r.sources.size() == 1);
            CHECK(r.cycles.empty());
        }
    }
}

TEST_CASE("index of the labelled G1") {
    auto g = labelled_orientation(fixture());
    CHECK(indices(g).total == 2);
}

}
