#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fillings/cases.hpp"
#include "fillings/diagram.hpp"
#include "fillings/graphs.hpp"
#include "fillings/index.hpp"
#include "fillings/manifold.hpp"
#include "fillings/slope.hpp"
#include "fillings/tangle.hpp"

using namespace fl;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kFail = 1, kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Slope slope_arg(const std::string& name, const std::string& text) {
    try {
        return parse_slope(text);
    } catch (const std::exception& e) {
        throw UsageError("--" + name + ": " + e.what());
    }
}

std::string words(const ClassificationReport& r) {
    std::vector<std::string> w;
    if (r.is_reducible) w.push_back("reducible");
    if (r.is_lens) w.push_back("lens space");
    if (r.is_toroidal) w.push_back("toroidal");
    w.push_back(r.is_seifert ? "SFS" : "not SFS");
    if (r.contains_klein_bottle) w.push_back("contains Klein bottle");
    std::string s;
    for (auto& x : w) s += (s.empty() ? "" : ", ") + x;
    return s;
}

json class_json(const ClassificationReport& r) {
    return {{"reducible", r.is_reducible}, {"lens", r.is_lens},       {"seifert", r.is_seifert},
            {"toroidal", r.is_toroidal},   {"prime", r.is_prime}, {"klein_bottle", r.contains_klein_bottle}};
}

std::string h1_text(const std::optional<i64>& h) { return h ? std::to_string(*h) : std::string("?"); }

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::uint64_t seed_from_env() {
    const char* s = std::getenv("FILLINGS_LAB_SEED");
    if (!s || !*s) return 1;
    try {
        return std::stoull(s);
    } catch (...) {
        throw UsageError("FILLINGS_LAB_SEED must be an unsigned integer");
    }
}

// ---- cover ----
struct CoverArgs {
    std::string theta, phi, omega, pi;
    bool oracle = false, json = false;
};

int run_cover(const CoverArgs& a) {
    QFilling f = make_q(slope_arg("theta", a.theta), slope_arg("phi", a.phi), slope_arg("omega", a.omega),
                        slope_arg("pi", a.pi));
    ManifoldDesc m;
    std::string shape;
    try {
        shape = cover_form(f).shape;
        m = cover_Q(f);
    } catch (const OutsideFamily& e) {
        if (a.json) std::cout << json{{"filling", to_string(f)}, {"error", "outside implemented family"}}.dump() << "\n";
        else std::cout << to_string(f) << ": outside implemented family\n";
        return kFail;
    }
    auto h = h1_order(m);
    auto c = classify(m);
    int code = kOk;
    std::optional<i64> det;
    if (a.oracle) {
        det = goeritz_determinant(diagram_Q(f));
        if (!h || *h != *det) code = kFail;
    }
    if (a.json) {
        json j{{"filling", to_string(f)}, {"shape", shape},        {"manifold", to_string(m)},
               {"describe", describe(m)}, {"h1", h ? json(*h) : json()}, {"classification", class_json(c)}};
        if (det) j["oracle"] = {{"det", *det}, {"match", code == kOk}};
        std::cout << j.dump() << "\n";
        return code;
    }
    std::cout << to_string(m) << ", |H1|=" << h1_text(h);
    if (det) std::cout << ", oracle: " << *det << (code == kOk ? " OK" : " MISMATCH");
    std::cout << "\n" << to_string(m) << ", " << words(c) << "\n";
    std::cout << "form: " << shape << "\n";
    return code;
}

// ---- family ----
int run_family(long long p, bool as_json) {
    auto adm = admissible_p(p);
    const Slope a = slope(1, 0), b = slope(-1, 3);
    i64 dist = slope_distance(a, b);
    if (!adm.accepted) {
        std::string why = adm.reason == "klein_bottle" ? "Klein bottle" : adm.reason;
        std::replace(why.begin(), why.end(), '_', ' ');
        if (as_json) std::cout << json{{"p", p}, {"accepted", false}, {"reason", adm.reason}}.dump() << "\n";
        else std::cout << "reject: " << why << "\n";
        return kFail;
    }
    auto [m1, m2] = family_manifolds(p);
    if (as_json) {
        json j{{"p", p}, {"accepted", true}, {"canonical", adm.canonical}, {"distance", dist}};
        for (auto [key, m] : {std::pair<const char*, const ManifoldDesc*>{"pi=-1/3", &m1}, {"pi=1/0", &m2}}) {
            auto h = h1_order(*m);
            j[key] = {{"manifold", to_string(*m)}, {"h1", h ? json(*h) : json()}, {"classification", class_json(classify(*m))}};
        }
        std::cout << j.dump() << "\n";
        return dist == 3 ? kOk : kFail;
    }
    std::cout << "accepted";
    if (adm.canonical != p) std::cout << " (canonical p=" << adm.canonical << ")";
    std::cout << "\n";
    for (auto [key, m] : {std::pair<const char*, const ManifoldDesc*>{"-1/3", &m1}, {"1/0", &m2}})
        std::cout << "pi=" << key << ": " << to_string(*m) << ", |H1|=" << h1_text(h1_order(*m)) << ", "
                  << words(classify(*m)) << "\n";
    std::cout << "distance(1/0, -1/3) = " << dist << (dist == 3 ? "" : "  (expected 3)") << "\n";
    return dist == 3 ? kOk : kFail;
}

// ---- det ----
struct DetArgs {
    std::string pd, file, theta, phi, omega, pi;
    bool grid = false, json = false;
    int stride = 997;
};

int run_det(const DetArgs& a) {
    if (a.grid) {
        if (a.stride < 1) throw UsageError("--stride must be positive");
        auto r = oracle_grid(a.stride);
        if (a.json) {
            json bad = json::array();
            for (auto& c : r.mismatches)
                bad.push_back({{"filling", to_string(c.filling)}, {"det", c.det}, {"h1", c.cover ? json(*c.cover) : json()}});
            std::cout << json{{"checked", r.checked}, {"skipped", r.skipped}, {"mismatches", bad}}.dump() << "\n";
        } else {
            std::cout << "checked " << r.checked << ", skipped " << r.skipped << ", mismatches " << r.mismatches.size() << "\n";
            for (auto& c : r.mismatches)
                std::cout << "  " << to_string(c.filling) << ": det " << c.det << ", |H1| " << h1_text(c.cover) << "\n";
        }
        return r.mismatches.empty() ? kOk : kFail;
    }
    int given = !a.pd.empty() + !a.file.empty() + !a.theta.empty();
    if (given != 1) throw UsageError("det needs exactly one of --pd, --file, or the four slot flags");
    PlanarDiagram d;
    std::string what;
    try {
        if (!a.theta.empty()) {
            if (a.phi.empty() || a.omega.empty() || a.pi.empty()) throw UsageError("det needs all four slot flags");
            QFilling f = make_q(slope_arg("theta", a.theta), slope_arg("phi", a.phi), slope_arg("omega", a.omega),
                                slope_arg("pi", a.pi));
            d = diagram_Q(f);
            what = to_string(f);
        } else {
            d = parse_pd(a.pd.empty() ? read_file(a.file) : a.pd);
            what = "diagram";
        }
    } catch (const UsageError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    i64 det = goeritz_determinant(d);
    if (a.json) std::cout << json{{"input", what}, {"crossings", d.crossings.size()}, {"det", det}}.dump() << "\n";
    else std::cout << "det = " << det << " (" << d.crossings.size() << " crossings)\n";
    return kOk;
}

// ---- graph ----
struct GraphArgs {
    std::string file, dual;
    bool index = false, json = false;
    int root = 1;
};

int run_graph_verify(const GraphArgs& a) {
    GraphPair p;
    try {
        p = parse_pair(read_file(a.file));
    } catch (const PairError& e) {
        if (a.json) {
            json is = json::array();
            for (auto& i : e.issues) is.push_back({{"kind", i.kind}, {"where", i.where}, {"message", i.message}});
            std::cout << json{{"valid", false}, {"issues", is}}.dump() << "\n";
        } else {
            std::cout << "invalid graph pair\n";
            for (auto& i : e.issues) std::cout << "  " << to_string(i) << "\n";
        }
        return kUsage;
    }
    std::optional<DualMode> mode;
    if (!a.dual.empty()) {
        mode = parse_mode(a.dual);
        if (!mode) throw UsageError("--dual takes w or w'");
    }
    std::vector<std::pair<std::string, bool>> checks;
    std::vector<std::string> notes;
    json j{{"valid", true}};

    auto s = summarize(p);
    checks.push_back({"parity", s.parity.ok});
    for (auto& v : s.parity.violations) notes.push_back(v);
    checks.push_back({"G1 V-E+F = 2", s.euler_g1 == 2});
    checks.push_back({"G2 V-E+F = 0", s.euler_g2 == 0});
    checks.push_back({"weights", s.weights_g2.flags.empty()});
    for (auto& f : s.weights_g2.flags) notes.push_back(f);
    bool sc_x = true;
    for (Which w : {Which::G1, Which::G2})
        for (auto& c : find_scharlemann_cycles(p, w))
            for (int x : c.label_pair) {
                auto xs = find_x_cycles(p, w, x);
                std::vector<int> key = c.edges;
                std::sort(key.begin(), key.end());
                bool hit = std::any_of(xs.begin(), xs.end(), [&](const XCycle& y) {
                    auto k2 = y.edges;
                    std::sort(k2.begin(), k2.end());
                    return k2 == key;
                });
                sc_x = sc_x && hit;
            }
    checks.push_back({"Scharlemann cycles are x-cycles", sc_x});
    std::string weights;
    for (auto& [c, w] : s.weights_g2.class_weight) weights += std::string(weights.empty() ? "" : " ") + "w(" + std::string(block_name(c)) + ")=" + std::to_string(w);
    j["weights"] = weights;
    j["s_cycles"] = {{"G1", s.s_cycles_g1.size()}, {"G2", s.s_cycles_g2.size()}};

    std::optional<IndexReport> idx;
    if (a.index) {
        idx = indices(labelled_orientation(p));
        checks.push_back({"sum of indices = 2", idx->total == 2});
    }
    std::optional<DualClassification> dc;
    LambdaView L;
    if (mode) {
        if (a.root < 1 || a.root > p.n1) throw UsageError("--root must name a G1 vertex 1..n1");
        L = lambda_of(p, a.root - 1);
        checks.push_back({"Lambda face colors", L.problems.empty()});
        for (auto& x : L.problems) notes.push_back(x);
        if (L.problems.empty() && L.graph.num_edges() > 0) {
            Dual d = build_dual(L.graph, L.outside);
            RotationGraph o = orient_dual(d, L.graph, L.face_color, *mode);
            dc = classify_dual(d, o, L.kind);
            checks.push_back({"dual sum of indices = 2", dc->index.total == 2});
        }
    }
    bool all = std::all_of(checks.begin(), checks.end(), [](auto& c) { return c.second; });
    if (a.json) {
        json cj = json::array();
        for (auto& [name, ok] : checks) cj.push_back({{"check", name}, {"pass", ok}});
        j["checks"] = cj;
        j["notes"] = notes;
        if (idx) j["index"] = json::parse(to_json(*idx));
        if (dc)
            j["dual"] = {{"mode", std::string(mode_name(*mode))},
                         {"sinks", dc->sinks.size()},
                         {"sources", dc->sources.size()},
                         {"cycles", dc->cycle_kind},
                         {"total", dc->index.total}};
        j["pass"] = all;
        std::cout << j.dump() << "\n";
        return all ? kOk : kFail;
    }
    std::cout << "n1=" << p.n1 << ", " << p.num_edges << " edges, " << weights << "\n";
    std::cout << "S-cycles: G1 " << s.s_cycles_g1.size() << ", G2 " << s.s_cycles_g2.size() << "\n";
    for (auto& [name, ok] : checks) std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
    for (auto& n : notes) std::cout << "  " << n << "\n";
    if (idx) std::cout << to_text(*idx);
    if (dc) {
        std::cout << "dual (" << mode_name(*mode) << "): " << dc->sinks.size() << " sinks, " << dc->sources.size()
                  << " sources, " << dc->cycles.size() << " cycles";
        for (auto& k : dc->cycle_kind) std::cout << " [" << k << "]";
        std::cout << "\n" << "dual sum of indices = " << dc->index.total << "\n";
    }
    return all ? kOk : kFail;
}

int run_graph_random(int count, int max_edges, bool as_json) {
    if (count < 1 || max_edges < 1) throw UsageError("--count and --max-edges must be positive");
    std::uint64_t seed = seed_from_env();
    std::mt19937_64 rng(seed);
    int bad = 0;
    for (int k = 0; k < count; ++k) {
        RotationGraph g = random_plane_graph(rng, max_edges);
        orient_randomly(g, rng);
        if (indices(g).total != 2) ++bad;
    }
    if (as_json) std::cout << json{{"seed", seed}, {"graphs", count}, {"failures", bad}}.dump() << "\n";
    else std::cout << "seed " << seed << ": " << count << " graphs, " << bad << " with sum of indices != 2\n";
    return bad ? kFail : kOk;
}

// ---- enumerate ----
int run_interior(bool as_json) {
    auto en = enumerate_interior(standard_layout());
    if (as_json) {
        json cs = json::array();
        for (auto& c : en.classes) {
            json ms = json::array();
            for (auto& m : c.members) ms.push_back(type_name(m));
            cs.push_back({{"representative", type_name(c.representative)}, {"members", ms}});
        }
        std::cout << json{{"types", en.classes.size()}, {"labelled", en.labelled.size()}, {"classes", cs}}.dump() << "\n";
        return kOk;
    }
    std::cout << en.classes.size() << " types (" << en.labelled.size() << " labelled)\n";
    for (auto& c : en.classes) {
        std::cout << "  " << type_name(c.representative);
        if (c.members.size() > 1) {
            std::cout << "  also";
            for (auto& m : c.members)
                if (!(m == c.representative)) std::cout << " " << type_name(m);
        }
        std::cout << "\n";
    }
    return kOk;
}

int run_boundary(const std::string& mode_text, bool with_context, bool as_json) {
    auto m = parse_mode(mode_text);
    if (!m) throw UsageError("--mode takes w or w'");
    BoundaryOptions o;
    o.context_b = with_context;
    auto ts = enumerate_boundary_cycle_types(standard_layout(), *m, o);
    auto subs = [](const BoundaryType& t) {
        std::string s;
        for (auto& [x, y] : t.subclasses) s += std::string(s.empty() ? "" : " ") + std::string(block_name(x)) + "/" + std::string(block_name(y));
        return s;
    };
    if (as_json) {
        json a = json::array();
        for (auto& t : ts)
            a.push_back({{"type", type_name(t.type)}, {"clockwise", t.clockwise}, {"subclasses", subs(t)}});
        std::cout << json{{"mode", std::string(mode_name(*m))}, {"types", ts.size()}, {"list", a}}.dump() << "\n";
        return kOk;
    }
    std::cout << ts.size() << " types (mode " << mode_name(*m) << ")\n";
    for (auto& t : ts)
        std::cout << "  " << type_name(t.type) << (t.clockwise ? "  cw" : "  ccw") << "  loop ends: " << subs(t) << "\n";
    return kOk;
}

int run_suite(bool as_json) {
    auto r = run_elimination_suite(standard_layout());
    std::cout << (as_json ? to_json(r) + "\n" : to_text(r));
    return r.pass() ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fillings_lab: slope arithmetic, covers, determinants, intersection graphs and case checks"};
    app.require_subcommand(1);
    std::function<int()> action;

    CoverArgs ca;
    auto* cover = app.add_subcommand("cover", "double branched cover of a filled Q tangle");
    cover->add_option("--theta", ca.theta)->required();
    cover->add_option("--phi", ca.phi)->required();
    cover->add_option("--omega", ca.omega)->required();
    cover->add_option("--pi", ca.pi)->required();
    cover->add_flag("--oracle", ca.oracle, "also compute the Goeritz determinant of the filled diagram");
    cover->add_flag("--json", ca.json);
    cover->callback([&] { action = [&] { return run_cover(ca); }; });

    long long p = 0;
    bool fj = false;
    auto* family = app.add_subcommand("family", "the two fillings Q(2, p-2, 1/p, pi) for pi = -1/3 and 1/0");
    family->add_option("-p", p)->required();
    family->add_flag("--json", fj);
    family->callback([&] { action = [&] { return run_family(p, fj); }; });

    DetArgs da;
    auto* det = app.add_subcommand("det", "Goeritz determinant of a PD code, a filled template, or the oracle grid");
    det->add_option("--pd", da.pd, "PD text, X(a,b,c,d) per crossing");
    det->add_option("--file", da.file, "file holding PD text");
    det->add_option("--theta", da.theta);
    det->add_option("--phi", da.phi);
    det->add_option("--omega", da.omega);
    det->add_option("--pi", da.pi);
    det->add_flag("--grid", da.grid, "compare determinant and |H1| over the filling grid");
    det->add_option("--stride", da.stride, "keep every stride-th grid filling");
    det->add_flag("--json", da.json);
    det->callback([&] { action = [&] { return run_det(da); }; });

    auto* graph = app.add_subcommand("graph", "intersection graph pairs and plane graph indices");
    graph->require_subcommand(1);
    GraphArgs ga;
    auto* verify = graph->add_subcommand("verify", "validate a graph pair file and run the checks");
    verify->add_option("file", ga.file)->required();
    verify->add_flag("--index", ga.index, "index report of G1, edges run from their label-1 end");
    verify->add_option("--dual", ga.dual, "orient the dual of Lambda by mode w or w'");
    verify->add_option("--root", ga.root, "G1 vertex whose G1+ component is Lambda");
    verify->add_flag("--json", ga.json);
    verify->callback([&] { action = [&] { return run_graph_verify(ga); }; });
    int count = 200, max_edges = 40;
    bool rj = false;
    auto* random = graph->add_subcommand("random-index", "index equation on seeded random plane graphs");
    random->add_option("--count", count);
    random->add_option("--max-edges", max_edges);
    random->add_flag("--json", rj);
    random->callback([&] { action = [&] { return run_graph_random(count, max_edges, rj); }; });

    auto* en = app.add_subcommand("enumerate", "vertex and boundary-cycle types, elimination suite");
    en->require_subcommand(1);
    bool ej = false;
    auto* interior = en->add_subcommand("interior", "interior vertex types");
    interior->add_flag("--json", ej);
    interior->callback([&] { action = [&] { return run_interior(ej); }; });
    std::string mode = "w";
    bool ctx = false;
    auto* bc = en->add_subcommand("boundary-cycles", "boundary cycle types for one dual mode");
    bc->add_option("--mode", mode)->required();
    bc->add_flag("--context", ctx, "also require the B corners of the bigon and trigon");
    bc->add_flag("--json", ej);
    bc->callback([&] { action = [&] { return run_boundary(mode, ctx, ej); }; });
    auto* suite = en->add_subcommand("suite", "lemma-by-lemma elimination report");
    suite->add_flag("--json", ej);
    suite->callback([&] { action = [&] { return run_suite(ej); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    try {
        return action ? action() : kUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
}
