#include "fillings/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fl {

namespace {

struct UnionFind {
    std::map<int, int> parent;
    int find(int x) {
        auto it = parent.find(x);
        if (it == parent.end()) {
            parent[x] = x;
            return x;
        }
        int r = x;
        while (parent[r] != r) r = parent[r];
        while (parent[x] != r) {
            int n = parent[x];
            parent[x] = r;
            x = n;
        }
        return r;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// for each (crossing, position) the (crossing, position) at the other end of its edge
std::map<RegionCorner, RegionCorner> edge_ends(const PlanarDiagram& d) {
    std::map<int, std::vector<RegionCorner>> where;
    for (int c = 0; c < (int)d.crossings.size(); ++c)
        for (int k = 0; k < 4; ++k) where[d.crossings[c][k]].push_back({c, k});
    std::map<RegionCorner, RegionCorner> other;
    for (auto& [label, v] : where) {
        if (v.size() != 2)
            throw std::invalid_argument("label " + std::to_string(label) + " occurs " + std::to_string(v.size()) +
                                        " times");
        other[v[0]] = v[1];
        other[v[1]] = v[0];
    }
    return other;
}

const char* kTemplate = R"(# Q tangle skeleton
# finger crossings (the finger passes over), then the fixed psi = 2 ball
X(8,11,10,13)
X(10,12,9,14)
X(9,6,16,15)
X(15,16,5,3)
# insertion sites: ball fraction = (a x + b) / (c x + d) of the slot value x
site theta nw=3 ne=14 sw=4 se=1 frame=0,1,1,0
site phi nw=13 ne=8 sw=1 se=2 frame=0,1,1,0
site omega nw=7 ne=5 sw=2 se=4 frame=0,1,1,-1
site pi nw=12 ne=6 sw=11 se=7 frame=-1,-1,0,1
)";

std::vector<int> parse_ints(std::string_view s) {
    std::vector<int> out;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty() && cur != "-") out.push_back(std::stoi(cur));
        cur.clear();
    };
    for (char c : s) {
        if (std::isdigit((unsigned char)c) || (c == '-' && cur.empty()))
            cur += c;
        else
            flush();
    }
    flush();
    return out;
}

}  // namespace

bool is_connected(const PlanarDiagram& d) {
    if (d.crossings.empty()) return d.free_loops <= 1;
    if (d.free_loops > 0) return false;
    auto other = edge_ends(d);
    const int n = (int)d.crossings.size();
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        for (int k = 0; k < 4; ++k) {
            int c2 = other[{c, k}].first;
            if (!seen[c2]) {
                seen[c2] = true;
                stack.push_back(c2);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

Regions checkerboard_regions(const PlanarDiagram& d) {
    Regions r;
    const int n = (int)d.crossings.size();
    if (n == 0) {
        // free loops only: nested annuli, colors alternate outward
        for (int i = 0; i <= d.free_loops; ++i) {
            r.faces.push_back({});
            r.color.push_back(i % 2);
        }
        return r;
    }
    if (!is_connected(d)) throw std::invalid_argument("checkerboard_regions: diagram is not connected");
    auto other = edge_ends(d);
    for (int c = 0; c < n; ++c) {
        for (int k = 0; k < 4; ++k) {
            if (r.face_of.count({c, k})) continue;
            const int f = (int)r.faces.size();
            r.faces.push_back({});
            RegionCorner cur{c, k};
            while (!r.face_of.count(cur)) {
                r.face_of[cur] = f;
                r.faces[f].push_back(cur);
                RegionCorner next = other[{cur.first, (cur.second + 3) % 4}];
                cur = next;
            }
        }
    }
    if ((int)r.faces.size() != n + 2) throw std::invalid_argument("checkerboard_regions: diagram is not planar");
    r.outer = r.face_of[{0, 0}];
    r.color.assign(r.faces.size(), -1);
    r.color[r.outer] = 0;
    std::vector<int> stack{r.outer};
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (auto [c, k] : r.faces[f]) {
            // across the edges at positions k-1 and k lie the neighbouring corners
            for (int nb : {r.face_of[{c, (k + 3) % 4}], r.face_of[{c, (k + 1) % 4}]}) {
                if (r.color[nb] == -1) {
                    r.color[nb] = 1 - r.color[f];
                    stack.push_back(nb);
                } else if (r.color[nb] == r.color[f]) {
                    throw std::invalid_argument("checkerboard_regions: no proper 2-coloring");
                }
            }
        }
    }
    return r;
}

IntMatrix goeritz_full(const PlanarDiagram& d, int color) {
    Regions r = checkerboard_regions(d);
    std::vector<int> index(r.faces.size(), -1);
    int m = 0;
    for (std::size_t f = 0; f < r.faces.size(); ++f)
        if (r.color[f] == color) index[f] = m++;
    IntMatrix g(m, std::vector<i64>(m, 0));
    for (int c = 0; c < (int)d.crossings.size(); ++c) {
        int w1, w2, eta;
        if (r.color[r.face_of[{c, 0}]] == color) {
            eta = 1;
            w1 = r.face_of[{c, 0}];
            w2 = r.face_of[{c, 2}];
        } else {
            eta = -1;
            w1 = r.face_of[{c, 1}];
            w2 = r.face_of[{c, 3}];
        }
        if (w1 == w2) continue;
        int i = index[w1], j = index[w2];
        g[i][j] -= eta;
        g[j][i] -= eta;
        g[i][i] += eta;
        g[j][j] += eta;
    }
    return g;
}

i64 goeritz_determinant(const PlanarDiagram& d, int color, int deleted) {
    if (d.crossings.empty()) return d.free_loops == 1 ? 1 : 0;
    if (!is_connected(d)) return 0;
    IntMatrix g = goeritz_full(d, color);
    const int m = (int)g.size();
    if (deleted < 0 || deleted >= m) throw std::out_of_range("goeritz_determinant: bad deleted index");
    IntMatrix minor;
    for (int i = 0; i < m; ++i) {
        if (i == deleted) continue;
        std::vector<i64> row;
        for (int j = 0; j < m; ++j)
            if (j != deleted) row.push_back(g[i][j]);
        minor.push_back(row);
    }
    i64 v = det_bareiss(minor);
    return v < 0 ? -v : v;
}

std::string to_pd(const PlanarDiagram& d) {
    std::ostringstream os;
    int top = 0;
    for (const auto& c : d.crossings) {
        os << "X(" << c[0] << "," << c[1] << "," << c[2] << "," << c[3] << ")\n";
        for (int x : c) top = std::max(top, x);
    }
    for (int i = 0; i < d.free_loops; ++i) os << "O(" << ++top << ")\n";
    return os.str();
}

PlanarDiagram parse_pd(std::string_view text) {
    PlanarDiagram d;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        if ((c == 'X' || c == 'O') && i + 1 < text.size() && (text[i + 1] == '(' || text[i + 1] == '[')) {
            char close = text[i + 1] == '(' ? ')' : ']';
            auto end = text.find(close, i);
            if (end == std::string_view::npos) throw std::invalid_argument("parse_pd: unterminated entry");
            auto nums = parse_ints(text.substr(i + 2, end - i - 2));
            if (c == 'X') {
                if (nums.size() != 4) throw std::invalid_argument("parse_pd: crossing needs four labels");
                d.crossings.push_back({nums[0], nums[1], nums[2], nums[3]});
            } else {
                ++d.free_loops;
            }
            i = end + 1;
            continue;
        }
        if (!std::isspace((unsigned char)c) && c != ',' && c != ';')
            throw std::invalid_argument(std::string("parse_pd: unexpected character '") + c + "'");
        ++i;
    }
    edge_ends(d);  // validates the label multiplicities
    return d;
}

// ---- tangle algebra ----

DTangle DiagramBuilder::crossing() {
    int nw = fresh(), sw = fresh(), se = fresh(), ne = fresh();
    DTangle t;
    t.crossings.push_back({nw, sw, se, ne});
    t.nw = nw;
    t.sw = sw;
    t.se = se;
    t.ne = ne;
    return t;
}

DTangle DiagramBuilder::zero() {
    int a = fresh(), b = fresh();
    DTangle t;
    t.nw = t.ne = a;
    t.sw = t.se = b;
    return t;
}

DTangle DiagramBuilder::infinity() {
    int a = fresh(), b = fresh();
    DTangle t;
    t.nw = t.sw = a;
    t.ne = t.se = b;
    return t;
}

DTangle DiagramBuilder::sum(const DTangle& a, const DTangle& b) {
    DTangle t;
    t.crossings = a.crossings;
    t.crossings.insert(t.crossings.end(), b.crossings.begin(), b.crossings.end());
    t.ids = a.ids;
    t.ids.insert(t.ids.end(), b.ids.begin(), b.ids.end());
    t.ids.push_back({a.ne, b.nw});
    t.ids.push_back({a.se, b.sw});
    t.nw = a.nw;
    t.sw = a.sw;
    t.ne = b.ne;
    t.se = b.se;
    return t;
}

DTangle DiagramBuilder::rotate(const DTangle& t) {
    DTangle r = t;
    r.sw = t.nw;
    r.se = t.sw;
    r.ne = t.se;
    r.nw = t.ne;
    return r;
}

DTangle DiagramBuilder::mirror(const DTangle& t) {
    DTangle r = t;
    for (auto& c : r.crossings) c = {c[1], c[2], c[3], c[0]};
    return r;
}

DTangle DiagramBuilder::integer(i64 n) {
    if (n == 0) return zero();
    DTangle t = crossing();
    for (i64 i = 1; i < (n < 0 ? -n : n); ++i) t = sum(t, crossing());
    return n > 0 ? t : mirror(t);
}

DTangle DiagramBuilder::rational(const Slope& s) {
    TwistSequence seq = fraction_to_twists(s);
    DTangle t = integer(seq[0]);
    for (std::size_t i = 1; i < seq.size(); ++i) t = sum(integer(seq[i]), mirror(rotate(t)));
    return t;
}

DTangle DiagramBuilder::montesinos(const std::vector<Slope>& leaves) {
    if (leaves.empty()) return zero();
    DTangle t = rational(leaves[0]);
    for (std::size_t i = 1; i < leaves.size(); ++i) t = sum(t, rational(leaves[i]));
    return t;
}

PlanarDiagram DiagramBuilder::close(std::vector<std::array<int, 4>> crossings,
                                    std::vector<std::pair<int, int>> ids, const std::vector<int>& all_edges) {
    UnionFind uf;
    for (int e : all_edges) uf.find(e);
    for (auto& [a, b] : ids) uf.unite(a, b);
    std::map<int, int> label;
    PlanarDiagram d;
    for (auto& c : crossings) {
        std::array<int, 4> out;
        for (int k = 0; k < 4; ++k) {
            int root = uf.find(c[k]);
            auto it = label.find(root);
            if (it == label.end()) it = label.emplace(root, (int)label.size() + 1).first;
            out[k] = it->second;
        }
        d.crossings.push_back(out);
    }
    std::set<int> loops;
    for (auto& [e, p] : uf.parent) {
        int root = uf.find(e);
        if (!label.count(root)) loops.insert(root);
    }
    d.free_loops = (int)loops.size();
    return d;
}

PlanarDiagram DiagramBuilder::close_N(const DTangle& t) {
    auto ids = t.ids;
    ids.push_back({t.nw, t.ne});
    ids.push_back({t.sw, t.se});
    std::vector<int> all(next_ - 1);
    std::iota(all.begin(), all.end(), 1);
    return close(t.crossings, ids, all);
}

PlanarDiagram DiagramBuilder::close_D(const DTangle& t) {
    auto ids = t.ids;
    ids.push_back({t.nw, t.sw});
    ids.push_back({t.ne, t.se});
    std::vector<int> all(next_ - 1);
    std::iota(all.begin(), all.end(), 1);
    return close(t.crossings, ids, all);
}

PlanarDiagram diagram_of(const ArborescentLink& link) {
    DiagramBuilder b;
    DTangle t = b.montesinos(link.a);
    if (link.two_node()) t = b.sum(t, DiagramBuilder::rotate(b.montesinos(link.b)));
    return b.close_N(t);
}

PlanarDiagram rational_closure(const Slope& s) {
    DiagramBuilder b;
    return b.close_N(b.rational(s));
}

PlanarDiagram connected_sum(const PlanarDiagram& a, const PlanarDiagram& b) {
    if (a.crossings.empty() && a.free_loops == 1) return b;
    if (b.crossings.empty() && b.free_loops == 1) return a;
    if (a.crossings.empty() || b.crossings.empty()) {
        PlanarDiagram d = a.crossings.empty() ? b : a;
        d.free_loops += (a.crossings.empty() ? a.free_loops : b.free_loops) - 1;
        return d;
    }
    PlanarDiagram d = a;
    int offset = 0;
    for (auto& c : a.crossings)
        for (int x : c) offset = std::max(offset, x);
    // cut edge ea of a and edge eb of b, then join them crosswise
    auto ends_a = edge_ends(a);
    const RegionCorner a1{0, 0}, a2 = ends_a[a1];
    const RegionCorner b1{0, 0};
    const int ea = a.crossings[0][0];
    const int eb = b.crossings[0][0] + offset;
    d.crossings[a2.first][a2.second] = eb;
    const int base = (int)d.crossings.size();
    for (auto c : b.crossings) {
        for (int& x : c) x += offset;
        d.crossings.push_back(c);
    }
    d.crossings[base + b1.first][b1.second] = ea;
    d.free_loops = a.free_loops + b.free_loops;
    return d;
}

// ---- the template ----

Slope apply_frame(const std::array<i64, 4>& f, const Slope& x) {
    return slope_normalize(f[0] * x.num + f[1] * x.den, f[2] * x.num + f[3] * x.den);
}

std::string_view q_template_text() { return kTemplate; }

QTemplate parse_template(std::string_view text) {
    QTemplate t;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        auto start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;
        line = line.substr(start);
        if (line[0] == 'X') {
            auto nums = parse_ints(line.substr(1));
            if (nums.size() != 4) throw std::invalid_argument("template crossing: " + line);
            t.skeleton.push_back({nums[0], nums[1], nums[2], nums[3]});
        } else if (line.rfind("site", 0) == 0) {
            std::istringstream ls(line.substr(4));
            TemplateSite s{};
            std::string tok;
            ls >> s.slot;
            while (ls >> tok) {
                auto eq = tok.find('=');
                if (eq == std::string::npos) throw std::invalid_argument("template site: " + line);
                std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
                auto nums = parse_ints(val);
                if (key == "frame") {
                    if (nums.size() != 4) throw std::invalid_argument("template frame: " + line);
                    s.frame = {nums[0], nums[1], nums[2], nums[3]};
                } else if (nums.size() == 1 && key == "nw") {
                    s.nw = nums[0];
                } else if (nums.size() == 1 && key == "ne") {
                    s.ne = nums[0];
                } else if (nums.size() == 1 && key == "sw") {
                    s.sw = nums[0];
                } else if (nums.size() == 1 && key == "se") {
                    s.se = nums[0];
                } else {
                    throw std::invalid_argument("template site key: " + tok);
                }
            }
            t.sites.push_back(s);
        } else {
            throw std::invalid_argument("template line: " + line);
        }
    }
    // every skeleton label must be used exactly twice by crossings and site ends together
    std::map<int, int> uses;
    for (auto& c : t.skeleton)
        for (int x : c) ++uses[x];
    for (auto& s : t.sites)
        for (int x : {s.nw, s.ne, s.sw, s.se}) ++uses[x];
    for (auto& [label, n] : uses)
        if (n != 2) throw std::invalid_argument("template label " + std::to_string(label) + " used " +
                                                std::to_string(n) + " times");
    return t;
}

const QTemplate& q_template() {
    static const QTemplate t = parse_template(kTemplate);
    return t;
}

PlanarDiagram diagram_Q(const QFilling& f) {
    if (!f.filled()) throw std::invalid_argument("diagram_Q needs all four slots filled");
    const QTemplate& tpl = q_template();
    int top = 0;
    for (auto& c : tpl.skeleton)
        for (int x : c) top = std::max(top, x);
    for (auto& s : tpl.sites) top = std::max({top, s.nw, s.ne, s.sw, s.se});
    DiagramBuilder b;
    while (b.fresh() < top) {
    }
    auto crossings = tpl.skeleton;
    std::vector<std::pair<int, int>> ids;
    std::vector<int> all;
    for (int i = 1; i <= top; ++i) all.push_back(i);
    for (const auto& s : tpl.sites) {
        const Slot* slot = s.slot == "theta" ? &f.theta
                           : s.slot == "phi" ? &f.phi
                           : s.slot == "omega" ? &f.omega
                           : s.slot == "pi" ? &f.pi
                                             : nullptr;
        if (!slot) throw std::invalid_argument("template site names unknown slot " + s.slot);
        DTangle ball = b.rational(apply_frame(s.frame, **slot));
        crossings.insert(crossings.end(), ball.crossings.begin(), ball.crossings.end());
        ids.insert(ids.end(), ball.ids.begin(), ball.ids.end());
        ids.push_back({ball.nw, s.nw});
        ids.push_back({ball.ne, s.ne});
        ids.push_back({ball.sw, s.sw});
        ids.push_back({ball.se, s.se});
    }
    int last = b.fresh();
    for (int i = top + 1; i < last; ++i) all.push_back(i);
    return DiagramBuilder::close(crossings, ids, all);
}

// ---- moves ----

PlanarDiagram reidemeister1(const PlanarDiagram& d, int label, int variant) {
    PlanarDiagram out = d;
    int top = 0;
    for (auto& c : d.crossings)
        for (int x : c) top = std::max(top, x);
    const int y = top + 1, loop = top + 2;
    bool done = false;
    for (auto& c : out.crossings) {
        for (int k = 0; k < 4 && !done; ++k)
            if (c[k] == label) {
                c[k] = y;
                done = true;
            }
        if (done) break;
    }
    if (!done) throw std::invalid_argument("reidemeister1: no such label");
    std::array<int, 4> kink{label, loop, loop, y};
    std::rotate(kink.begin(), kink.begin() + (variant & 3), kink.end());
    out.crossings.push_back(kink);
    return out;
}

PlanarDiagram reidemeister2(const PlanarDiagram& d, int face, int i, int j, bool over) {
    Regions r = checkerboard_regions(d);
    const auto& corners = r.faces.at(face);
    const int len = (int)corners.size();
    if (i == j || i < 0 || j < 0 || i >= len || j >= len) throw std::invalid_argument("reidemeister2: bad corners");
    // boundary edge t leaves corner t at position k-1 and arrives at corner t+1
    auto leave = [&](int t) { return RegionCorner{corners[t].first, (corners[t].second + 3) % 4}; };
    auto arrive = [&](int t) { return corners[(t + 1) % len]; };
    const int e = d.crossings[leave(i).first][leave(i).second];
    const int f = d.crossings[leave(j).first][leave(j).second];
    if (e == f) throw std::invalid_argument("reidemeister2: same edge twice");
    int top = 0;
    for (auto& c : d.crossings)
        for (int x : c) top = std::max(top, x);
    const int e2 = top + 1, e3 = top + 2, f2 = top + 3, f3 = top + 4;
    PlanarDiagram out = d;
    out.crossings[arrive(i).first][arrive(i).second] = e3;
    out.crossings[arrive(j).first][arrive(j).second] = f3;
    // e dives across f at the east crossing and comes back at the west crossing
    std::array<int, 4> east{f3, e, f2, e2}, west{f2, e3, f, e2};
    if (!over) {
        east = {e, f2, e2, f3};
        west = {e3, f, e2, f2};
    }
    out.crossings.push_back(east);
    out.crossings.push_back(west);
    return out;
}

OracleCheck oracle_check(const QFilling& f) {
    OracleCheck c;
    c.filling = f;
    CoverForm form = cover_form(f);
    c.shape = form.shape;
    c.cover = h1_order(cover_Q(f));
    c.det = goeritz_determinant(diagram_Q(f));
    c.match = c.cover && *c.cover == c.det;
    return c;
}

std::vector<Slope> grid_pool() {
    std::vector<Slope> out{slope(1, 0)};
    for (i64 q = 1; q <= 9; ++q)
        for (i64 p = -9; p <= 9; ++p)
            if (std::gcd(p, q) == 1) out.push_back(slope(p, q));
    return out;
}

GridReport oracle_grid(int stride) {
    if (stride < 1) throw std::invalid_argument("oracle_grid: stride must be positive");
    GridReport r;
    auto pool = grid_pool();
    long k = 0;
    for (const Slope& pi : {slope(1, 0), slope(-1, 3)})
        for (const Slope& th : pool)
            for (const Slope& ph : pool)
                for (const Slope& om : pool) {
                    if (k++ % stride) continue;
                    QFilling f = make_q(th, ph, om, pi);
                    if (cover_forms(f).empty()) {
                        ++r.skipped;
                        continue;
                    }
                    auto c = oracle_check(f);
                    ++r.checked;
                    if (!c.match) r.mismatches.push_back(c);
                }
    return r;
}

}  // namespace fl
