#include "fillings/graphs.hpp"

#include <algorithm>
#include <functional>
#include "json.hpp"
#include <numeric>
#include <set>
#include <sstream>

namespace fl {

std::string to_string(const PairIssue& i) { return i.kind + " at " + i.where + ": " + i.message; }

PairError::PairError(std::vector<PairIssue> is)
    : std::invalid_argument(is.empty() ? std::string("invalid graph pair") : to_string(is.front())),
      issues(std::move(is)) {}

namespace {

std::string uname(int x) { return "u" + std::to_string(x + 1); }
std::string vname(int i) { return "v" + std::to_string(i + 1); }
std::string at(const std::string& v, int s) { return v + " slot " + std::to_string(s); }

int wrap(int label, int m) { return ((label - 1) % m + m) % m + 1; }

Block loop_class(Block t) {
    if (t == Block::eN || t == Block::eS) return Block::eps;
    if (t == Block::epN || t == Block::epS) return Block::epsp;
    return t;
}

// finds where each edge end sits and matches G1 ends to G2 ends through the labels
void link(GraphPair& p, std::vector<PairIssue>& out) {
    const int E = p.num_edges;
    std::vector<std::vector<Where>> o1(E), o2(E);
    for (int x = 0; x < (int)p.g1_rotation.size(); ++x)
        for (int s = 0; s < (int)p.g1_rotation[x].size(); ++s) {
            int e = p.g1_rotation[x][s].edge;
            if (e < 0 || e >= E) out.push_back({"dangling", at(uname(x), s), "unknown edge " + std::to_string(e)});
            else o1[e].push_back({x, s});
        }
    for (int i = 0; i < kN2; ++i)
        for (int s = 0; s < (int)p.g2_rotation[i].size(); ++s) {
            int e = p.g2_rotation[i][s].edge;
            if (e < 0 || e >= E) out.push_back({"dangling", at(vname(i), s), "unknown edge " + std::to_string(e)});
            else o2[e].push_back({i, s});
        }
    p.g1_end.assign(E, {});
    p.g2_end.assign(E, {});
    for (int e = 0; e < E; ++e) {
        std::string we = "edge " + std::to_string(e);
        if (o1[e].size() != 2 || o2[e].size() != 2) {
            out.push_back({"dangling", we,
                           std::to_string(o1[e].size()) + " ends in G1 and " + std::to_string(o2[e].size()) +
                               " in G2, expected 2 and 2"});
            continue;
        }
        p.g1_end[e] = {o1[e][0], o1[e][1]};
        // G1 end at u_x with label i sits on v_i, where it carries label x
        auto fits = [&](const Where& a, const Where& b) {
            return p.g1_rotation[a.vertex][a.slot].label == b.vertex + 1 &&
                   p.g2_rotation[b.vertex][b.slot].label == a.vertex + 1;
        };
        const auto& a = o1[e];
        const auto& b = o2[e];
        if (fits(a[0], b[0]) && fits(a[1], b[1])) p.g2_end[e] = {b[0], b[1]};
        else if (fits(a[0], b[1]) && fits(a[1], b[0])) p.g2_end[e] = {b[1], b[0]};
        else
            out.push_back({"label-match", we,
                           "G1 ends at " + at(uname(a[0].vertex), a[0].slot) + ", " + at(uname(a[1].vertex), a[1].slot) +
                               " do not match G2 ends at " + at(vname(b[0].vertex), b[0].slot) + ", " +
                               at(vname(b[1].vertex), b[1].slot)});
    }
}

bool tagged(const GraphPair& p) {
    for (const auto& r : p.g2_rotation)
        for (const auto& s : r)
            if (s.tag) return true;
    return false;
}

struct Dsu {
    std::vector<int> up;
    explicit Dsu(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
    int find(int x) { return up[x] == x ? x : up[x] = find(up[x]); }
    void join(int a, int b) { up[find(a)] = find(b); }
};

std::vector<std::vector<int>> parallel_families(const RotationGraph& g) {
    FaceTrace t = trace_faces(g);
    Dsu u(g.num_edges());
    for (const auto& f : t.faces)
        if (f.size() == 2 && (f[0] >> 1) != (f[1] >> 1)) u.join(f[0] >> 1, f[1] >> 1);
    std::map<int, std::vector<int>> by;
    for (int e = 0; e < g.num_edges(); ++e) by[u.find(e)].push_back(e);
    std::vector<std::vector<int>> out;
    for (auto& [r, es] : by) out.push_back(es);
    std::sort(out.begin(), out.end());
    return out;
}

bool cellular(const RotationGraph& g, Which w) {
    if (!is_connected(g)) return false;
    return trace_faces(g).euler == (w == Which::G1 ? 2 : 0);
}

std::vector<PairIssue> check(GraphPair& p) {
    std::vector<PairIssue> out;
    if (p.n1 < 1) {
        out.push_back({"schema", "n1", "n1 must be at least 1"});
        return out;
    }
    if ((int)p.g1_signs.size() != p.n1) out.push_back({"sign", "G1", "need one sign per G1 vertex"});
    for (int x = 0; x < (int)p.g1_signs.size(); ++x)
        if (p.g1_signs[x] != 1 && p.g1_signs[x] != -1) out.push_back({"sign", uname(x), "sign must be +1 or -1"});
    for (int i = 0; i < kN2; ++i)
        if (p.g2_signs[i] != 1 && p.g2_signs[i] != -1) out.push_back({"sign", vname(i), "sign must be +1 or -1"});
    if (p.g2_signs[0] == p.g2_signs[1]) out.push_back({"sign", "v1, v2", "the two G2 vertices must be antiparallel"});
    if ((int)p.g1_rotation.size() != p.n1) {
        out.push_back({"schema", "G1", "expected " + std::to_string(p.n1) + " vertices"});
        return out;
    }

    for (int x = 0; x < p.n1; ++x) {
        const auto& r = p.g1_rotation[x];
        if ((int)r.size() != kDelta * kN2) {
            out.push_back({"valency", uname(x), std::to_string(r.size()) + " slots, expected 6"});
            continue;
        }
        for (int s = 0; s < (int)r.size(); ++s) {
            if (r[s].label < 1 || r[s].label > kN2)
                out.push_back({"label", at(uname(x), s), "label " + std::to_string(r[s].label) + " out of range"});
            if (r[s].tag) out.push_back({"class", at(uname(x), s), "class tags belong on G2 slots"});
        }
        for (int s = 0; s < (int)r.size(); ++s) {
            int t = (s + 1) % (int)r.size();
            if (r[t].label == r[s].label)
                out.push_back({"label-order", at(uname(x), t), "labels must read 1,2,1,2,1,2"});
        }
    }
    for (int i = 0; i < kN2; ++i) {
        const auto& r = p.g2_rotation[i];
        if ((int)r.size() != kDelta * p.n1) {
            out.push_back({"valency", vname(i),
                           std::to_string(r.size()) + " slots, expected " + std::to_string(kDelta * p.n1)});
            continue;
        }
        int step = p.g2_signs[i] >= 0 ? 1 : -1;
        for (int s = 0; s < (int)r.size(); ++s)
            if (r[s].label < 1 || r[s].label > p.n1)
                out.push_back({"label", at(vname(i), s), "label " + std::to_string(r[s].label) + " out of range"});
        for (int s = 0; s < (int)r.size(); ++s) {
            int t = (s + 1) % (int)r.size();
            if (r[t].label != wrap(r[s].label + step, p.n1))
                out.push_back({"label-order", at(vname(i), t),
                               "expected label " + std::to_string(wrap(r[s].label + step, p.n1)) + ", found " +
                                   std::to_string(r[t].label)});
        }
    }
    if (!out.empty()) return out;

    link(p, out);
    if (!out.empty()) return out;

    if (tagged(p)) {
        for (int e = 0; e < p.num_edges; ++e) {
            auto [a, b] = p.g2_end[e];
            auto ta = p.g2_rotation[a.vertex][a.slot].tag, tb = p.g2_rotation[b.vertex][b.slot].tag;
            std::string we = "edge " + std::to_string(e);
            if (!ta || !tb) {
                out.push_back({"class", we, "every G2 slot needs a class once any slot has one"});
                continue;
            }
            if (a.vertex != b.vertex) {
                if (!is_positive(*ta) || *ta != *tb)
                    out.push_back({"class", we, "an edge from v1 to v2 needs one of a, b, g, d at both ends"});
            } else {
                std::set<Block> want = a.vertex == 0 ? std::set<Block>{Block::eN, Block::eS}
                                                     : std::set<Block>{Block::epN, Block::epS};
                if (std::set<Block>{*ta, *tb} != want)
                    out.push_back({"class", we,
                                   std::string("a loop at ") + vname(a.vertex) + " needs one N end and one S end of " +
                                       (a.vertex == 0 ? "e" : "e'")});
            }
        }
        if (!out.empty()) return out;
        // classes must be exactly the parallel families of the torus embedding
        RotationGraph g = as_rotation_graph(p, Which::G2);
        if (!cellular(g, Which::G2)) {
            out.push_back({"class", "G2", "classes need a connected torus embedding (V - E + F = 0)"});
            return out;
        }
        std::map<Block, std::set<int>> fam_of_class;
        auto fams = parallel_families(g);
        std::vector<int> fam(p.num_edges);
        for (int f = 0; f < (int)fams.size(); ++f)
            for (int e : fams[f]) fam[e] = f;
        for (int e = 0; e < p.num_edges; ++e) fam_of_class[*p.edge_class(e)].insert(fam[e]);
        std::map<int, std::set<Block>> class_of_fam;
        for (int e = 0; e < p.num_edges; ++e) class_of_fam[fam[e]].insert(*p.edge_class(e));
        for (auto& [c, fs] : fam_of_class)
            if (fs.size() > 1)
                out.push_back({"class", std::string("class ") + std::string(block_name(c)),
                               "edges tagged alike are not mutually parallel"});
        for (auto& [f, cs] : class_of_fam)
            if (cs.size() > 1)
                out.push_back({"class", "edge " + std::to_string(fams[f].front()),
                               "parallel edges carry different classes"});
    }
    return out;
}

}  // namespace

std::optional<Block> GraphPair::edge_class(int e) const {
    if (e < 0 || e >= (int)g2_end.size()) return std::nullopt;
    auto w = g2_end[e][0];
    if (w.vertex < 0) return std::nullopt;
    auto t = g2_rotation[w.vertex][w.slot].tag;
    if (!t) return std::nullopt;
    return loop_class(*t);
}

bool GraphPair::positive(Which w, int e) const {
    if (w == Which::G1) return g1_signs[g1_end[e][0].vertex] == g1_signs[g1_end[e][1].vertex];
    return g2_signs[g2_end[e][0].vertex] == g2_signs[g2_end[e][1].vertex];
}

std::array<int, 2> GraphPair::labels(Which w, int e) const {
    std::array<int, 2> l{};
    for (int k = 0; k < 2; ++k) {
        Where at = w == Which::G1 ? g1_end[e][k] : g2_end[e][k];
        l[k] = w == Which::G1 ? g1_rotation[at.vertex][at.slot].label : g2_rotation[at.vertex][at.slot].label;
    }
    return l;
}

std::vector<PairIssue> validate(const GraphPair& p) {
    GraphPair q = p;
    return check(q);
}

GraphPair build_pair(GraphPair p) {
    auto issues = check(p);
    if (!issues.empty()) throw PairError(std::move(issues));
    return p;
}

RotationGraph as_rotation_graph(const GraphPair& p, Which w) {
    RotationGraph g;
    int nv = w == Which::G1 ? p.n1 : kN2;
    for (int v = 0; v < nv; ++v) g.add_vertex();
    const auto& ends = w == Which::G1 ? p.g1_end : p.g2_end;
    g.edges.resize(p.num_edges);
    g.orient.assign(p.num_edges, 0);
    g.tag.assign(p.num_edges, std::nullopt);
    for (int e = 0; e < p.num_edges; ++e) {
        g.edges[e] = {ends[e][0].vertex, ends[e][1].vertex};
        g.tag[e] = p.edge_class(e);
    }
    for (int v = 0; v < nv; ++v) {
        const auto& r = w == Which::G1 ? p.g1_rotation[v] : p.g2_rotation[v];
        for (int s = 0; s < (int)r.size(); ++s) {
            int e = r[s].edge;
            int k = (ends[e][0].vertex == v && ends[e][0].slot == s) ? 0 : 1;
            g.rotation[v].push_back(2 * e + k);
        }
    }
    return g;
}

ParityReport check_parity(const GraphPair& p) {
    ParityReport r;
    for (int e = 0; e < p.num_edges; ++e) {
        bool a = p.positive(Which::G1, e), b = p.positive(Which::G2, e);
        if (a == b) {
            r.ok = false;
            r.violations.push_back("edge " + std::to_string(e) + ": " + (a ? "positive" : "negative") +
                                   " in both graphs");
        }
    }
    return r;
}

bool verify_parity(const GraphPair& p) { return check_parity(p).ok; }

ReducedWeights reduced_weights(const GraphPair& p, Which w) {
    ReducedWeights r;
    GraphPair q = p;
    std::vector<PairIssue> bad;
    link(q, bad);
    if (bad.empty()) {
        RotationGraph g = as_rotation_graph(q, w);
        if (rotation_problems(g).empty()) {
            r.families = parallel_families(g);
            for (auto& f : r.families) r.weight.push_back((int)f.size());
        }
    } else {
        r.flags.push_back("edge ends do not link: " + to_string(bad.front()));
    }
    if (w == Which::G1) return r;

    // G2 class weights come from the slot tags, one count per block
    std::map<Block, int> ends;
    for (int i = 0; i < kN2; ++i)
        for (const auto& s : p.g2_rotation[i])
            if (s.tag) ++ends[*s.tag];
    if (ends.empty()) {
        // untagged: loops are the only distinction
        int l1 = 0, l2 = 0;
        for (int e = 0; e < q.num_edges && bad.empty(); ++e)
            if (q.g2_end[e][0].vertex == q.g2_end[e][1].vertex) ++(q.g2_end[e][0].vertex == 0 ? l1 : l2);
        r.class_weight[Block::eps] = l1;
        r.class_weight[Block::epsp] = l2;
        if (l1 != l2) r.flags.push_back("w(e) != w(e')");
        for (int i = 0; i < kN2; ++i)
            if ((int)p.g2_rotation[i].size() != kDelta * p.n1) r.flags.push_back(vname(i) + " total != 3n1");
        return r;
    }
    for (Block c : {Block::a, Block::b, Block::g, Block::d}) {
        // each a..d edge leaves one end on each circle
        r.class_weight[c] = ends[c] / 2;
        if (ends[c] % 2) r.flags.push_back(std::string("class ") + std::string(block_name(c)) + " has an odd end count");
    }
    r.class_weight[Block::eps] = ends[Block::eN];
    r.class_weight[Block::epsp] = ends[Block::epN];
    if (ends[Block::eN] != ends[Block::eS]) r.flags.push_back("w(eN) != w(eS)");
    if (ends[Block::epN] != ends[Block::epS]) r.flags.push_back("w(e'N) != w(e'S)");
    if (r.class_weight[Block::eps] != r.class_weight[Block::epsp]) r.flags.push_back("w(e) != w(e')");
    for (int i = 0; i < kN2; ++i) {
        int tot = 0;
        for (const auto& s : p.g2_rotation[i])
            if (s.tag && (is_positive(*s.tag) || loop_class(*s.tag) == (i == 0 ? Block::eps : Block::epsp))) ++tot;
        int pos = r.class_weight[Block::a] + r.class_weight[Block::b] + r.class_weight[Block::g] +
                  r.class_weight[Block::d];
        int loops = i == 0 ? r.class_weight[Block::eps] : r.class_weight[Block::epsp];
        if (pos + 2 * loops != kDelta * p.n1 || tot != kDelta * p.n1)
            r.flags.push_back(vname(i) + " total != 3n1");
    }
    return r;
}

std::vector<GraphCycle> find_scharlemann_cycles(const GraphPair& p, Which w) {
    std::vector<GraphCycle> out;
    RotationGraph g = as_rotation_graph(p, w);
    if (!cellular(g, w)) return out;
    const int m = w == Which::G1 ? kN2 : p.n1;
    FaceTrace t = trace_faces(g);
    for (int f = 0; f < (int)t.faces.size(); ++f) {
        const auto& darts = t.faces[f];
        std::vector<int> es;
        for (int d : darts) es.push_back(d >> 1);
        std::set<int> uniq(es.begin(), es.end());
        if (uniq.size() != es.size()) continue;
        bool pos = std::all_of(es.begin(), es.end(), [&](int e) { return p.positive(w, e); });
        if (!pos) continue;
        for (int x = 1; x <= m; ++x) {
            std::multiset<int> want{x, wrap(x + 1, m)};
            bool ok = std::all_of(es.begin(), es.end(), [&](int e) {
                auto l = p.labels(w, e);
                return std::multiset<int>{l[0], l[1]} == want;
            });
            if (!ok) continue;
            GraphCycle c;
            c.edges = es;
            c.label_pair = {x, wrap(x + 1, m)};
            c.s_cycle = es.size() == 2;
            c.face = f;
            out.push_back(c);
            break;
        }
    }
    return out;
}

std::vector<XCycle> find_x_cycles(const GraphPair& p, Which w, int x, int max_len) {
    const int nv = w == Which::G1 ? p.n1 : kN2;
    const auto& ends = w == Which::G1 ? p.g1_end : p.g2_end;
    // arcs tail -> head through edge e, tail end labelled x
    std::vector<std::vector<std::pair<int, int>>> arcs(nv);
    for (int e = 0; e < p.num_edges; ++e) {
        if (!p.positive(w, e)) continue;
        auto l = p.labels(w, e);
        int a = ends[e][0].vertex, b = ends[e][1].vertex;
        if (l[0] == x) arcs[a].push_back({b, e});
        if (l[1] == x && !(a == b && l[0] == x)) arcs[b].push_back({a, e});
    }
    std::vector<XCycle> out;
    std::set<std::vector<int>> seen;
    std::vector<int> path_e, path_v;
    std::vector<char> on(nv, 0);
    // cycles are rooted at their least vertex
    std::function<void(int, int)> dfs = [&](int root, int v) {
        for (auto [h, e] : arcs[v]) {
            if (max_len > 0 && (int)path_e.size() + 1 > max_len) continue;
            if (h == root) {
                path_e.push_back(e);
                std::vector<int> key = path_e;
                std::sort(key.begin(), key.end());
                if (seen.insert(key).second) out.push_back({path_e, path_v});
                path_e.pop_back();
                continue;
            }
            if (h < root || on[h]) continue;
            on[h] = 1;
            path_e.push_back(e);
            path_v.push_back(h);
            dfs(root, h);
            path_v.pop_back();
            path_e.pop_back();
            on[h] = 0;
        }
    };
    for (int r = 0; r < nv; ++r) {
        on.assign(nv, 0);
        on[r] = 1;
        path_v = {r};
        path_e.clear();
        dfs(r, r);
    }
    return out;
}

Side corner_side(const GraphPair& p, int x, int s) {
    bool one = p.g1_rotation[x][s].label == 1;
    return one == (p.g1_signs[x] > 0) ? Side::B : Side::W;
}

RotationGraph labelled_orientation(const GraphPair& p) {
    RotationGraph g = as_rotation_graph(p, Which::G1);
    for (int e = 0; e < p.num_edges; ++e) {
        auto l = p.labels(Which::G1, e);
        g.orient[e] = (l[0] == 1 || l[1] != 1) ? 1 : -1;
    }
    return g;
}

LambdaView lambda_of(const GraphPair& p, int root) {
    if (root < 0 || root >= p.n1) throw std::invalid_argument("lambda_of: no such vertex");
    LambdaView L;
    // component of the positive subgraph
    std::vector<int> comp(p.n1, -1);
    std::vector<int> st{root};
    comp[root] = 0;
    L.g1_vertex.push_back(root);
    while (!st.empty()) {
        int u = st.back();
        st.pop_back();
        for (const auto& sl : p.g1_rotation[u]) {
            int e = sl.edge;
            if (!p.positive(Which::G1, e)) continue;
            for (int k = 0; k < 2; ++k) {
                int w = p.g1_end[e][k].vertex;
                if (comp[w] < 0) {
                    comp[w] = (int)L.g1_vertex.size();
                    L.g1_vertex.push_back(w);
                    st.push_back(w);
                }
            }
        }
    }
    std::vector<int> local(p.num_edges, -1);
    for (int e = 0; e < p.num_edges; ++e)
        if (p.positive(Which::G1, e) && comp[p.g1_end[e][0].vertex] >= 0) {
            local[e] = (int)L.g1_edge.size();
            L.g1_edge.push_back(e);
        }
    RotationGraph& g = L.graph;
    for (std::size_t i = 0; i < L.g1_vertex.size(); ++i) g.add_vertex();
    g.edges.resize(L.g1_edge.size());
    g.orient.assign(L.g1_edge.size(), 0);
    g.tag.assign(L.g1_edge.size(), std::nullopt);
    // dart -> G1 slot, for reading corners back
    std::vector<std::pair<int, int>> dart_slot(2 * L.g1_edge.size());
    for (std::size_t i = 0; i < L.g1_edge.size(); ++i) {
        int e = L.g1_edge[i];
        g.edges[i] = {comp[p.g1_end[e][0].vertex], comp[p.g1_end[e][1].vertex]};
        g.tag[i] = p.edge_class(e);
    }
    for (std::size_t v = 0; v < L.g1_vertex.size(); ++v) {
        int x = L.g1_vertex[v];
        bool all_in = true;
        for (int s = 0; s < (int)p.g1_rotation[x].size(); ++s) {
            int e = p.g1_rotation[x][s].edge;
            if (local[e] < 0) {
                all_in = false;
                continue;
            }
            int k = (p.g1_end[e][0].vertex == x && p.g1_end[e][0].slot == s) ? 0 : 1;
            int d = 2 * local[e] + k;
            g.rotation[v].push_back(d);
            dart_slot[d] = {x, s};
        }
        L.kind.push_back(all_in ? VertexKind::interior : VertexKind::boundary);
    }
    FaceTrace t = trace_faces(g);
    std::size_t most = 0;
    std::vector<std::optional<Side>> known;
    for (int f = 0; f < (int)t.faces.size(); ++f) {
        if (t.faces[f].size() > most) most = t.faces[f].size(), L.outside = f;
        // corners sit between the arriving dart and the next one leaving
        std::optional<Side> col;
        bool clash = false;
        const auto& fd = t.faces[f];
        for (std::size_t i = 0; i < fd.size(); ++i) {
            int in = fd[(i + fd.size() - 1) % fd.size()] ^ 1, out = fd[i];
            auto [x, s] = dart_slot[in];
            if (dart_slot[out].second != (s + 1) % (int)p.g1_rotation[x].size()) continue;
            Side c = corner_side(p, x, s);
            if (col && *col != c) clash = true;
            col = c;
        }
        if (clash) L.problems.push_back("face " + std::to_string(f) + ": corners on both sides");
        known.push_back(col);
    }
    // faces without a G1 corner of their own take the opposite color across an edge
    for (bool moved = true; moved;) {
        moved = false;
        for (int e = 0; e < g.num_edges(); ++e) {
            int f0 = t.face_of[2 * e], f1 = t.face_of[2 * e + 1];
            if (known[f0] && !known[f1]) known[f1] = other(*known[f0]), moved = true;
            if (known[f1] && !known[f0]) known[f0] = other(*known[f1]), moved = true;
        }
    }
    for (int f = 0; f < (int)t.faces.size(); ++f) {
        if (!known[f]) L.problems.push_back("face " + std::to_string(f) + ": color undetermined");
        L.face_color.push_back(known[f].value_or(Side::B));
    }
    for (int e = 0; e < g.num_edges(); ++e) {
        int f0 = t.face_of[2 * e], f1 = t.face_of[2 * e + 1];
        if (f0 != L.outside && f1 != L.outside && L.face_color[f0] == L.face_color[f1])
            L.problems.push_back("edge " + std::to_string(L.g1_edge[e]) + ": same color on both sides");
    }
    if (g.num_edges() == 0) L.outside = 0, L.face_color.assign(1, Side::B);
    return L;
}

PairSummary summarize(const GraphPair& p) {
    PairSummary s;
    s.issues = validate(p);
    if (!s.issues.empty()) return s;
    GraphPair q = build_pair(p);
    s.parity = check_parity(q);
    s.euler_g1 = trace_faces(as_rotation_graph(q, Which::G1)).euler;
    s.euler_g2 = trace_faces(as_rotation_graph(q, Which::G2)).euler;
    s.weights_g2 = reduced_weights(q, Which::G2);
    s.s_cycles_g1 = find_scharlemann_cycles(q, Which::G1);
    s.s_cycles_g2 = find_scharlemann_cycles(q, Which::G2);
    return s;
}

// ---- JSON ----

namespace {

using nlohmann::json;

constexpr std::string_view kFormat = "fillings-graph-pair";
constexpr int kVersion = 1;

std::string class_word(Block t) {
    switch (loop_class(t)) {
        case Block::a: return "alpha";
        case Block::b: return "beta";
        case Block::g: return "gamma";
        case Block::d: return "delta";
        case Block::eps: return "epsilon";
        default: return "epsilon'";
    }
}

}  // namespace

GraphPair parse_pair(std::string_view text) {
    std::vector<PairIssue> bad;
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw PairError({{"schema", "file", e.what()}});
    }
    auto fail = [&](std::string where, std::string msg) {
        bad.push_back({"schema", std::move(where), std::move(msg)});
    };
    GraphPair p;
    try {
        if (!j.is_object()) throw PairError({{"schema", "file", "top level must be an object"}});
        if (j.value("format", std::string()) != kFormat) fail("format", "expected \"fillings-graph-pair\"");
        if (j.value("version", 0) != kVersion) fail("version", "expected version 1");
        p.n1 = j.at("n1").get<int>();
        const auto& sg = j.at("signs");
        p.g1_signs = sg.at("G1").get<std::vector<int>>();
        auto g2 = sg.at("G2").get<std::vector<int>>();
        if (g2.size() != kN2) throw PairError({{"schema", "signs.G2", "G2 must have exactly two vertices"}});
        p.g2_signs = {g2[0], g2[1]};
        if (p.n1 < 1 || p.n1 > 10000) throw PairError({{"schema", "n1", "n1 out of range"}});
        p.g1_rotation.assign(p.n1, {});
        std::vector<char> have1(p.n1, 0), have2(kN2, 0);
        for (const auto& v : j.at("vertices")) {
            std::string name = v.at("name").get<std::string>();
            bool g1 = !name.empty() && name[0] == 'u';
            int k = 0;
            try {
                k = std::stoi(name.substr(1)) - 1;
            } catch (...) {
                k = -1;
            }
            if (name.size() < 2 || (name[0] != 'u' && name[0] != 'v') || k < 0 || (g1 ? k >= p.n1 : k >= kN2)) {
                fail(name, "vertex names are u1..u<n1>, v1, v2");
                continue;
            }
            auto& seen = g1 ? have1[k] : have2[k];
            if (seen) fail(name, "vertex listed twice");
            seen = 1;
            auto& rot = g1 ? p.g1_rotation[k] : p.g2_rotation[k];
            int s = 0;
            for (const auto& e : v.at("rotation")) {
                EndSlot sl;
                sl.edge = e.at("edge").get<int>();
                sl.label = e.at("label").get<int>();
                if (e.contains("class")) {
                    auto c = parse_block(e.at("class").get<std::string>());
                    if (!c) fail(at(name, s), "unknown class");
                    else if (is_positive(*c)) {
                        if (e.contains("subclass")) fail(at(name, s), "only loop classes take a subclass");
                        sl.tag = *c;
                    } else {
                        std::string sub = e.value("subclass", std::string());
                        Block base = loop_class(*c);
                        if (sub != "N" && sub != "S") fail(at(name, s), "loop ends need subclass N or S");
                        else if (base == Block::eps) sl.tag = sub == "N" ? Block::eN : Block::eS;
                        else sl.tag = sub == "N" ? Block::epN : Block::epS;
                    }
                }
                rot.push_back(sl);
                ++s;
            }
        }
        for (int x = 0; x < p.n1; ++x)
            if (!have1[x]) fail(uname(x), "vertex missing");
        for (int i = 0; i < kN2; ++i)
            if (!have2[i]) fail(vname(i), "vertex missing");
        const auto& edges = j.at("edges");
        p.num_edges = (int)edges.size();
        std::vector<std::array<std::pair<std::string, int>, 2>> listed(p.num_edges);
        std::vector<char> have_id(p.num_edges, 0);
        for (const auto& e : edges) {
            int id = e.at("id").get<int>();
            if (id < 0 || id >= p.num_edges || have_id[id]) {
                fail("edge " + std::to_string(id), "edge ids must be 0..E-1, each once");
                continue;
            }
            have_id[id] = 1;
            for (int k = 0; k < 2; ++k) {
                const auto& en = e.at(k ? "end1" : "end0");
                listed[id][k] = {en.at("vertex").get<std::string>(), en.at("slot").get<int>()};
            }
        }
        if (!bad.empty()) throw PairError(bad);
        auto issues = check(p);
        if (!issues.empty()) throw PairError(issues);
        for (int e = 0; e < p.num_edges; ++e) {
            std::set<std::pair<std::string, int>> a{listed[e][0], listed[e][1]};
            std::set<std::pair<std::string, int>> b;
            for (int k = 0; k < 2; ++k) b.insert({uname(p.g1_end[e][k].vertex), p.g1_end[e][k].slot});
            if (a != b)
                bad.push_back({"dangling", "edge " + std::to_string(e),
                               "listed ends " + at(listed[e][0].first, listed[e][0].second) + ", " +
                                   at(listed[e][1].first, listed[e][1].second) + " differ from the rotations"});
        }
        if (!bad.empty()) throw PairError(bad);
    } catch (const json::exception& e) {
        bad.push_back({"schema", "file", e.what()});
        throw PairError(bad);
    }
    return p;
}

std::string to_json_text(const GraphPair& p) {
    auto dump = [](const json& x) { return x.dump(); };
    std::ostringstream os;
    os << "{\n \"format\": \"" << kFormat << "\",\n \"version\": " << kVersion << ",\n \"n1\": " << p.n1 << ",\n";
    os << " \"signs\": {\"G1\": " << dump(p.g1_signs) << ", \"G2\": " << dump(std::vector<int>{p.g2_signs[0], p.g2_signs[1]})
       << "},\n \"vertices\": [\n";
    auto vertex = [&](const std::string& name, const std::vector<EndSlot>& r, bool last) {
        os << "  {\"name\": \"" << name << "\", \"rotation\": [\n";
        for (std::size_t s = 0; s < r.size(); ++s) {
            os << "    {\"edge\": " << r[s].edge << ", \"label\": " << r[s].label;
            if (r[s].tag) {
                os << ", \"class\": \"" << class_word(*r[s].tag) << "\"";
                if (!is_positive(*r[s].tag))
                    os << ", \"subclass\": \"" << (*r[s].tag == Block::eN || *r[s].tag == Block::epN ? "N" : "S") << "\"";
            }
            os << "}" << (s + 1 < r.size() ? "," : "") << "\n";
        }
        os << "  ]}" << (last ? "" : ",") << "\n";
    };
    for (int x = 0; x < p.n1; ++x) vertex(uname(x), p.g1_rotation[x], false);
    for (int i = 0; i < kN2; ++i) vertex(vname(i), p.g2_rotation[i], i + 1 == kN2);
    os << " ],\n \"edges\": [\n";
    for (int e = 0; e < p.num_edges; ++e) {
        os << "  {\"id\": " << e;
        for (int k = 0; k < 2; ++k) {
            Where w = e < (int)p.g1_end.size() ? p.g1_end[e][k] : Where{};
            os << ", \"end" << k << "\": {\"vertex\": \"" << (w.vertex >= 0 ? uname(w.vertex) : "?")
               << "\", \"slot\": " << w.slot << "}";
        }
        os << "}" << (e + 1 < p.num_edges ? "," : "") << "\n";
    }
    os << " ]\n}\n";
    return os.str();
}

}  // namespace fl
