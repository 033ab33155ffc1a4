#include "fillings/index.hpp"

#include <algorithm>
#include "json.hpp"
#include <sstream>
#include <stdexcept>

namespace fl {

int RotationGraph::add_vertex() {
    rotation.emplace_back();
    return num_vertices++;
}

int RotationGraph::add_edge(int u, int v) {
    int e = (int)edges.size();
    edges.emplace_back(u, v);
    orient.push_back(0);
    tag.emplace_back();
    rotation[u].push_back(2 * e);
    rotation[v].push_back(2 * e + 1);
    return e;
}

std::vector<std::string> rotation_problems(const RotationGraph& g) {
    std::vector<std::string> out;
    if ((int)g.rotation.size() != g.num_vertices) out.push_back("rotation count differs from vertex count");
    int E = g.num_edges();
    std::vector<int> seen(2 * E, 0);
    for (int v = 0; v < (int)g.rotation.size(); ++v)
        for (int d : g.rotation[v]) {
            if (d < 0 || d >= 2 * E) {
                out.push_back("vertex " + std::to_string(v) + ": dart " + std::to_string(d) + " out of range");
                continue;
            }
            if (g.dart_vertex(d) != v)
                out.push_back("vertex " + std::to_string(v) + ": dart " + std::to_string(d) + " belongs elsewhere");
            ++seen[d];
        }
    for (int d = 0; d < 2 * E; ++d)
        if (seen[d] != 1)
            out.push_back("dart " + std::to_string(d) + " listed " + std::to_string(seen[d]) + " times");
    if ((int)g.orient.size() != E || (int)g.tag.size() != E) out.push_back("per-edge data has the wrong length");
    return out;
}

bool is_connected(const RotationGraph& g) {
    if (g.num_vertices == 0) return false;
    std::vector<std::vector<int>> adj(g.num_vertices);
    for (auto [u, v] : g.edges) adj[u].push_back(v), adj[v].push_back(u);
    std::vector<char> mark(g.num_vertices, 0);
    std::vector<int> st{0};
    mark[0] = 1;
    int cnt = 1;
    while (!st.empty()) {
        int u = st.back();
        st.pop_back();
        for (int w : adj[u])
            if (!mark[w]) mark[w] = 1, ++cnt, st.push_back(w);
    }
    return cnt == g.num_vertices;
}

namespace {

// position of each dart in its rotation
std::vector<int> slot_of(const RotationGraph& g) {
    std::vector<int> pos(2 * g.num_edges(), -1);
    for (const auto& r : g.rotation)
        for (int i = 0; i < (int)r.size(); ++i) pos[r[i]] = i;
    return pos;
}

int next_dart(const RotationGraph& g, const std::vector<int>& pos, int d) {
    const auto& r = g.rotation[g.dart_vertex(d)];
    return r[(pos[d] + 1) % r.size()];
}

bool forward(const RotationGraph& g, int d) {
    int o = g.orient[d >> 1];
    return (d & 1) ? o < 0 : o > 0;
}

std::string half(int twice) {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

}  // namespace

FaceTrace trace_faces(const RotationGraph& g) {
    auto bad = rotation_problems(g);
    if (!bad.empty()) throw std::invalid_argument("rotation system: " + bad.front());
    FaceTrace t;
    int D = 2 * g.num_edges();
    t.face_of.assign(D, -1);
    auto pos = slot_of(g);
    for (int s = 0; s < D; ++s) {
        if (t.face_of[s] >= 0) continue;
        int f = (int)t.faces.size();
        t.faces.emplace_back();
        int d = s;
        do {
            t.face_of[d] = f;
            t.faces[f].push_back(d);
            d = next_dart(g, pos, d ^ 1);
        } while (d != s);
    }
    // isolated vertices have no darts; a lone vertex still bounds one face
    int F = (int)t.faces.size();
    if (g.num_edges() == 0 && g.num_vertices > 0) {
        t.faces.emplace_back();
        F = (int)t.faces.size();
    }
    t.euler = g.num_vertices - g.num_edges() + F;
    return t;
}

IndexReport indices(const RotationGraph& g) {
    if (!is_connected(g)) throw std::invalid_argument("indices: graph is not connected");
    for (int o : g.orient)
        if (o == 0) throw std::invalid_argument("indices: unoriented edge present");
    FaceTrace t = trace_faces(g);
    if (t.euler != 2) throw std::invalid_argument("indices: graph is not genus 0");
    IndexReport r;
    int twice_total = 0;
    for (int v = 0; v < g.num_vertices; ++v) {
        const auto& rot = g.rotation[v];
        int s = 0;
        for (std::size_t i = 0; i < rot.size(); ++i)
            if (forward(g, rot[i]) != forward(g, rot[(i + 1) % rot.size()])) ++s;
        r.s_vertex.push_back(s);
        r.i_vertex.push_back(1.0 - s / 2.0);
        twice_total += 2 - s;
    }
    for (const auto& f : t.faces) {
        int s = 0;
        for (std::size_t i = 0; i < f.size(); ++i)
            if (forward(g, f[i]) != forward(g, f[(i + 1) % f.size()])) ++s;
        r.s_face.push_back(s);
        r.chi_face.push_back(1);
        r.i_face.push_back(1.0 - s / 2.0);
        twice_total += 2 - s;
    }
    r.total = twice_total / 2.0;
    return r;
}

std::string to_text(const IndexReport& r) {
    std::ostringstream os;
    for (std::size_t v = 0; v < r.s_vertex.size(); ++v)
        os << "vertex " << v << ": s=" << r.s_vertex[v] << " I=" << half(2 - r.s_vertex[v]) << "\n";
    for (std::size_t f = 0; f < r.s_face.size(); ++f)
        os << "face " << f << ": s=" << r.s_face[f] << " I=" << half(2 * r.chi_face[f] - r.s_face[f]) << "\n";
    os << "sum of indices = " << half((int)(2 * r.total)) << "\n";
    return os.str();
}

std::string to_json(const IndexReport& r) {
    nlohmann::json j;
    j["s_vertex"] = r.s_vertex;
    j["s_face"] = r.s_face;
    j["i_vertex"] = r.i_vertex;
    j["i_face"] = r.i_face;
    j["total"] = r.total;
    return j.dump();
}

Dual build_dual(const RotationGraph& g, int outside_face) {
    FaceTrace t = trace_faces(g);
    Dual d;
    int F = (int)t.faces.size();
    if (outside_face < 0 || outside_face >= F) throw std::invalid_argument("build_dual: no such face");
    d.graph.num_vertices = F;
    d.graph.rotation.assign(F, {});
    d.graph.edges.resize(g.num_edges());
    d.graph.orient.assign(g.num_edges(), 0);
    d.graph.tag = g.tag;
    for (int e = 0; e < g.num_edges(); ++e) d.graph.edges[e] = {t.face_of[2 * e], t.face_of[2 * e + 1]};
    // the face orbit becomes the rotation; faces of the dual are then the primal vertices
    for (int f = 0; f < F; ++f) d.graph.rotation[f] = t.faces[f];
    d.vertex_of_face.resize(F);
    for (int f = 0; f < F; ++f) d.vertex_of_face[f] = f;
    d.outside = outside_face;
    d.primal_vertex_of_dart.resize(2 * g.num_edges());
    for (int x = 0; x < 2 * g.num_edges(); ++x) d.primal_vertex_of_dart[x] = g.dart_vertex(x);
    return d;
}

bool isomorphic(const RotationGraph& a, const RotationGraph& b) {
    if (a.num_vertices != b.num_vertices || a.num_edges() != b.num_edges()) return false;
    if (!is_connected(a) || !is_connected(b)) throw std::invalid_argument("isomorphic: connected graphs only");
    if (a.num_edges() == 0) return true;
    auto pa = slot_of(a), pb = slot_of(b);
    int D = 2 * a.num_edges();
    for (int t0 = 0; t0 < D; ++t0) {
        std::vector<int> m(D, -1), inv(D, -1);
        std::vector<std::pair<int, int>> st{{0, t0}};
        bool ok = true;
        while (ok && !st.empty()) {
            auto [x, y] = st.back();
            st.pop_back();
            if (m[x] == y) continue;
            if (m[x] >= 0 || inv[y] >= 0) {
                ok = false;
                break;
            }
            m[x] = y, inv[y] = x;
            st.push_back({x ^ 1, y ^ 1});
            st.push_back({next_dart(a, pa, x), next_dart(b, pb, y)});
        }
        if (!ok) continue;
        // darts at one vertex must land at one vertex
        std::vector<int> vm(a.num_vertices, -1);
        for (int x = 0; x < D && ok; ++x) {
            int u = a.dart_vertex(x), w = b.dart_vertex(m[x]);
            if (vm[u] < 0) vm[u] = w;
            else if (vm[u] != w) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

RotationGraph orient_dual(const Dual& d, const RotationGraph& primal, const std::vector<Side>& face_color,
                          DualMode mode) {
    if ((int)face_color.size() != d.graph.num_vertices)
        throw std::invalid_argument("orient_dual: need one color per face");
    RotationGraph out = d.graph;
    for (int e = 0; e < primal.num_edges(); ++e) {
        auto c = primal.tag[e];
        if (!c) throw std::invalid_argument("orient_dual: edge " + std::to_string(e) + " has no class");
        if (!is_positive(*c))
            throw std::invalid_argument("orient_dual: edge " + std::to_string(e) + " is a loop class");
        auto [f0, f1] = d.graph.edges[e];
        if (f0 == d.outside && f1 == d.outside)
            throw std::invalid_argument("orient_dual: edge " + std::to_string(e) + " has the outside face on both sides");
        Side s0 = face_color[f0], s1 = face_color[f1];
        if (f0 == d.outside) s0 = other(s1);
        if (f1 == d.outside) s1 = other(s0);
        if (s0 == s1)
            throw std::invalid_argument("orient_dual: faces across edge " + std::to_string(e) + " share a color");
        bool wb = w_to_b(mode, *c);
        // +1 runs f0 -> f1
        bool from_f0 = wb ? s0 == Side::W : s0 == Side::B;
        out.orient[e] = from_f0 ? 1 : -1;
    }
    return out;
}

DualClassification classify_dual(const Dual& d, const RotationGraph& oriented,
                                 const std::vector<VertexKind>& primal_kind) {
    DualClassification c;
    c.index = indices(oriented);
    for (int v = 0; v < oriented.num_vertices; ++v) {
        const auto& rot = oriented.rotation[v];
        if (rot.empty() || c.index.s_vertex[v] != 0) continue;
        (forward(oriented, rot[0]) ? c.sources : c.sinks).push_back(v);
    }
    FaceTrace t = trace_faces(oriented);
    for (int f = 0; f < (int)t.faces.size(); ++f) {
        if (c.index.s_face[f] != 0 || c.index.chi_face[f] != 1 || t.faces[f].empty()) continue;
        c.cycles.push_back(f);
        // a dual face runs round the darts of one primal vertex
        int pv = d.primal_vertex_of_dart.at(t.faces[f][0]);
        c.cycle_vertex.push_back(pv);
        VertexKind k = pv < (int)primal_kind.size() ? primal_kind[pv] : VertexKind::interior;
        c.cycle_kind.emplace_back(k == VertexKind::interior ? "ordinary"
                                  : k == VertexKind::boundary ? "boundary" : "exceptional");
    }
    return c;
}

RotationGraph random_plane_graph(std::mt19937_64& rng, int max_edges) {
    if (max_edges < 1) throw std::invalid_argument("random_plane_graph: need at least one edge");
    auto pick = [&](int n) { return (int)std::uniform_int_distribution<int>(0, n - 1)(rng); };
    RotationGraph g;
    int V = 1 + pick(std::min(15, max_edges + 1));
    g.add_vertex();
    for (int v = 1; v < V; ++v) {
        int u = pick(v);
        g.add_vertex();
        int e = (int)g.edges.size();
        g.edges.emplace_back(u, v);
        g.orient.push_back(0);
        g.tag.emplace_back();
        auto& r = g.rotation[u];
        r.insert(r.begin() + pick((int)r.size() + 1), 2 * e);
        g.rotation[v].push_back(2 * e + 1);
    }
    int E = std::max(1, V - 1 + pick(max_edges - (V - 1) + 1));
    while (g.num_edges() < E) {
        int e = g.num_edges();
        if (e == 0) {
            g.add_edge(0, 0);
            continue;
        }
        FaceTrace t = trace_faces(g);
        const auto& f = t.faces[pick((int)t.faces.size())];
        int i = pick((int)f.size()), j = pick((int)f.size());
        int di = f[i], dj = f[j];
        int u = g.dart_vertex(di), w = g.dart_vertex(dj);
        g.edges.emplace_back(u, w);
        g.orient.push_back(0);
        g.tag.emplace_back();
        // new darts go just before the face's outgoing darts, inside that corner
        auto ins = [&](int vtx, int before, int nd) {
            auto& r = g.rotation[vtx];
            r.insert(std::find(r.begin(), r.end(), before), nd);
        };
        ins(u, di, 2 * e);
        ins(w, dj, 2 * e + 1);
    }
    return g;
}

void orient_randomly(RotationGraph& g, std::mt19937_64& rng) {
    for (auto& o : g.orient) o = (rng() & 1) ? 1 : -1;
}

}  // namespace fl
