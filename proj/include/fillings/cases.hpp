#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fl {

// Class-endpoint blocks on the two fat vertices of G2. eps/epsp are loop ends whose
// N/S subclass is not fixed yet.
enum class Block : std::uint8_t { a, b, g, d, eN, eS, epN, epS, eps, epsp };
inline constexpr int kBlocks = 10;

std::string_view block_name(Block x);  // "a", "b", "g", "d", "eN", "eS", "e'N", "e'S", "e", "e'"
std::optional<Block> parse_block(std::string_view s);
bool is_positive(Block x);  // a, b, g, d
bool is_resolved(Block x);
bool on_v1(Block x);  // a..d sit on both circles

enum class Side : std::uint8_t { B, W };
char side_char(Side s);
inline Side other(Side s) { return s == Side::B ? Side::W : Side::B; }

struct ClassLayout {
    std::vector<Block> v1_ccw;  // blocks around v1, anticlockwise
    std::vector<Block> v2_cw;   // blocks around v2, clockwise
    // the cut arc leaves v1 just after v1_ccw[cut_v1] and v2 just after v2_cw[cut_v2]
    int cut_v1 = 0, cut_v2 = 0;

    bool has(Block x) const;
    int index_v1(Block x) const;  // -1 when absent
    int index_v2(Block x) const;
};

ClassLayout standard_layout();
ClassLayout without_block(ClassLayout l, Block x);  // a..d removed from both circles
// human readable violations of the textual placement constraints, empty when fine
std::vector<std::string> layout_problems(const ClassLayout& l);

// X(at1, at2): at1 is the class at label 1 (on v1), at2 the class at label 2 (on v2)
struct Corner {
    Side side = Side::B;
    Block at1 = Block::a, at2 = Block::a;
    auto operator<=>(const Corner&) const = default;
};
std::string to_string(const Corner& c);  // "B(a,b)"
std::vector<Corner> corners(Side s, std::initializer_list<std::pair<Block, Block>> pairs);

// Block-level test: can the arcs be put inside their blocks without crossing in the annulus.
// All corners must share one side and use resolved blocks present in the layout.
bool corners_coexist(const std::vector<Corner>& cs, const ClassLayout& l);

// ---- exact slot model ----
// 3n points on each circle, block sizes from the weights (both loop blocks carry w(e)),
// every B arc is p -> p + shift_b, every W arc p -> p + shift_w, shift_w = shift_b -+ n.
struct SlotModel {
    int n = 0;
    std::map<Block, int> weight;  // a, b, g, d, eps
    int shift_b = 0, shift_w = 0;
    std::vector<Block> v1, v2;  // block at each point

    std::vector<Corner> realized(Side s) const;  // distinct corner types drawn by all arcs
    // the six edge ends at the G1 vertex whose label-1 ends start at v1 point p
    std::array<Block, 6> vertex(int p) const;
};
// visits models with 1 <= n <= max_n, positive-class weights >= min_weight; stop when fn returns false
void for_each_slot_model(const ClassLayout& l, int max_n, int min_weight, const std::function<bool(const SlotModel&)>& fn);
std::optional<SlotModel> realize(const std::vector<Corner>& cs, const ClassLayout& l, int max_n = 8);

// ---- vertex types ----
// edges in rotation order; edges[0] has label first_label, labels alternate; the corner
// between edges[k] and edges[k+1] is on side first_side for even k
struct VertexType {
    std::vector<Block> edges;
    int first_label = 1;
    Side first_side = Side::B;
    auto operator<=>(const VertexType&) const = default;
};
std::vector<Corner> corners_of(const VertexType& t);
VertexType canonical(const VertexType& t);  // least of the rotations and reflections
std::string type_name(const VertexType& t);  // "1:a,a,b,d,g,b|W"

// relabelling of classes (optionally swapping v1 and v2) that maps the layout to itself,
// possibly with both circle orders reversed
struct LayoutSymmetry {
    std::array<Block, kBlocks> map{};
    bool swap = false;
    bool reverse = false;
};
// keep_subclass: loop ends keep their N/S name (eN goes to eN or e'N)
std::vector<LayoutSymmetry> layout_symmetries(const ClassLayout& l, bool keep_subclass = true);
VertexType apply(const LayoutSymmetry& s, const VertexType& t);

// black disk faces are copies of one of these; their corners bound what a B corner can be
struct FaceContext {
    std::vector<std::vector<Block>> black_faces;  // class sequence around each face
    bool restrict_black = true;                   // B corners between positive edges must come from these faces
    bool context_b = true;                        // B corners must coexist with the faces' own corners
};
FaceContext standard_faces();  // the B(a,b) bigon and the (g,g,d) trigon
std::vector<Corner> face_corners(Side s, const std::vector<Block>& cls);

struct TypeClass {
    VertexType representative;
    std::vector<VertexType> members;
};
struct InteriorEnumeration {
    std::vector<VertexType> labelled;  // up to rotation and reflection
    std::vector<TypeClass> classes;    // orbits under the layout symmetries
    int images_outside = 0;            // symmetry images that are not admissible themselves
};
InteriorEnumeration enumerate_interior(const ClassLayout& l, const FaceContext& f = standard_faces(),
                                       bool keep_subclass = true);
// the classes, one per orbit
std::vector<TypeClass> enumerate_interior_types(const ClassLayout& l);

enum class DualMode : std::uint8_t { omega, omega_prime };
std::string_view mode_name(DualMode m);  // "w", "w'"
std::optional<DualMode> parse_mode(std::string_view s);
// classes whose dual edges run W -> B
bool w_to_b(DualMode m, Block c);

struct BoundaryType {
    VertexType type;            // four positive edges then the two loop ends
    bool clockwise = false;     // sense of the dual cycle
    std::vector<std::pair<Block, Block>> subclasses;  // (eps, epsp) resolutions that coexist
};
struct BoundaryOptions {
    bool restrict_black = true;
    bool context_b = false;  // add the bigon and trigon corners on the B side
};
std::vector<BoundaryType> enumerate_boundary_cycle_types(const ClassLayout& l, DualMode m,
                                                         const BoundaryOptions& o = {});

// label pattern at the vertex: {a,g,e | b,d,e'} or {b,d,e | a,g,e'}
bool claim_applies(const VertexType& t);
// resolution allowed by the loop-label rule: eN goes with e'S and eS with e'N
bool claim_allows(Block eps_sub, Block epsp_sub);

// ---- weights ----
enum class Rel : std::uint8_t { le, ge, eq, lt, gt };
struct LinearConstraint {
    std::map<std::string, std::int64_t> coef;
    Rel rel = Rel::le;
    std::int64_t rhs = 0;
    std::string label;
};
// "2e + g + d - b <= 0"; integer coefficients, variables are identifiers
LinearConstraint parse_constraint(std::string_view text, std::string label = {});
std::string to_string(const LinearConstraint& c);

struct WeightVerdict {
    bool feasible = false;
    // feasible: a rational point, "p/q" per variable
    std::map<std::string, std::string> point;
    // infeasible: integer y >= 0 over `rows` with y.A = 0 and y.b < 0
    // rows: the input as <= rows, strict ones tightened by 1 and equalities split
    std::vector<std::int64_t> certificate;
    std::vector<LinearConstraint> rows;  // tightened rows the certificate refers to
};
// strict inequalities are tightened by 1 (weights are integers), then solved over the rationals
WeightVerdict weight_feasibility(const std::vector<LinearConstraint>& cs);
bool check_certificate(const WeightVerdict& v);

// the structural rows: weights >= 0, each < n, v1 total 3n, w(e) = w(e')
std::vector<LinearConstraint> structural_rows();

// ---- suite ----
struct SuiteEntry {
    std::string id;        // lemma id
    std::string anchor;    // where the statement lives
    std::string query;
    std::string expected;  // "infeasible", "feasible", "count=1", ...
    std::string verdict;
    bool pass = false;
    bool assumption = false;  // topological input, wired in rather than derived
    std::string note;
};
struct SuiteReport {
    std::vector<SuiteEntry> entries;
    bool pass() const;
    int mismatches() const;
};
SuiteReport run_elimination_suite(const ClassLayout& l);
std::string to_text(const SuiteReport& r);
std::string to_json(const SuiteReport& r);

}  // namespace fl
