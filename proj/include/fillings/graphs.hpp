#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fillings/cases.hpp"
#include "fillings/index.hpp"

namespace fl {

inline constexpr int kDelta = 3;
inline constexpr int kN2 = 2;

enum class Which : std::uint8_t { G1, G2 };

// one endpoint slot at a fat vertex
struct EndSlot {
    int edge = -1;
    int label = 0;                // vertex of the other graph, 1-based
    std::optional<Block> tag;     // G2 only: a, b, g, d, or a resolved loop end eN/eS/e'N/e'S
    bool operator==(const EndSlot&) const = default;
};

struct Where {
    int vertex = -1;  // 0-based
    int slot = -1;
};

struct PairIssue {
    std::string kind;   // "label-order", "sign", "dangling", "class", "schema", ...
    std::string where;  // "u3 slot 4", "v1 slot 7", "edge 5"
    std::string message;
};
std::string to_string(const PairIssue& i);

struct PairError : std::invalid_argument {
    std::vector<PairIssue> issues;
    explicit PairError(std::vector<PairIssue> is);
};

// Rotations are listed anticlockwise in a fixed orientation of each surface.
// Around a positive vertex labels increase, around a negative one they decrease.
struct GraphPair {
    int n1 = 0;
    std::vector<int> g1_signs;  // +1 / -1
    std::array<int, kN2> g2_signs{1, -1};
    std::vector<std::vector<EndSlot>> g1_rotation;  // n1 vertices, 6 slots each
    std::array<std::vector<EndSlot>, kN2> g2_rotation;
    int num_edges = 0;
    // filled by build_pair: where each edge end sits; end k of the edge in G1 matches end k in G2
    std::vector<std::array<Where, 2>> g1_end, g2_end;

    std::optional<Block> edge_class(int e) const;  // a..d, eps or epsp; empty when untagged
    bool positive(Which w, int e) const;
    // endpoint labels (other-graph vertex, 1-based) of edge e as seen in graph w
    std::array<int, 2> labels(Which w, int e) const;
};

// every violation found; an empty list means the pair is valid
std::vector<PairIssue> validate(const GraphPair& p);
// fills g1_end / g2_end from the slots and validates; throws PairError
GraphPair build_pair(GraphPair p);

// JSON schema "fillings-graph-pair" version 1, see README.md
GraphPair parse_pair(std::string_view json_text);
std::string to_json_text(const GraphPair& p);

RotationGraph as_rotation_graph(const GraphPair& p, Which w);

struct ParityReport {
    bool ok = true;
    std::vector<std::string> violations;  // "edge 4: positive in both graphs"
};
ParityReport check_parity(const GraphPair& p);
bool verify_parity(const GraphPair& p);

struct ReducedWeights {
    std::vector<std::vector<int>> families;  // mutually parallel edges
    std::vector<int> weight;
    std::map<Block, int> class_weight;       // G2: a, b, g, d, eps, epsp
    std::vector<std::string> flags;          // failed conservation checks
};
ReducedWeights reduced_weights(const GraphPair& p, Which w);

struct GraphCycle {
    std::vector<int> edges;  // in boundary order
    std::array<int, 2> label_pair{0, 0};  // {x, x+1}, cyclic
    bool s_cycle = false;     // length 2
    int face = -1;
};
std::vector<GraphCycle> find_scharlemann_cycles(const GraphPair& p, Which w);

struct XCycle {
    std::vector<int> edges;     // in order
    std::vector<int> vertices;  // tail of each edge
};
// simple directed cycles of positive edges run so that every tail carries label x,
// each reported once up to rotation; max_len <= 0 means no bound
std::vector<XCycle> find_x_cycles(const GraphPair& p, Which w, int x, int max_len = 0);

// side of the G1 corner between slot s and slot s+1 at u_x: B when it leaves a label-1
// slot at a positive vertex or a label-2 slot at a negative one
Side corner_side(const GraphPair& p, int x, int s);

// G1 oriented for index counting: every edge runs from its label-1 end, loops of equal
// labels from end 0
RotationGraph labelled_orientation(const GraphPair& p);

// the component of G1+ through one vertex, with face colors read off the G1 corners
struct LambdaView {
    RotationGraph graph;         // edges carry their G2 classes
    std::vector<int> g1_vertex;  // per Lambda vertex
    std::vector<int> g1_edge;    // per Lambda edge
    std::vector<Side> face_color;
    std::vector<VertexKind> kind;  // interior when every G1 edge there is in Lambda
    int outside = -1;              // the face with the most corners
    std::vector<std::string> problems;  // faces whose corners disagree, ...
};
LambdaView lambda_of(const GraphPair& p, int root = 0);

struct PairSummary {
    std::vector<PairIssue> issues;
    ParityReport parity;
    int euler_g1 = 0, euler_g2 = 0;
    ReducedWeights weights_g2;
    std::vector<GraphCycle> s_cycles_g1, s_cycles_g2;
};
PairSummary summarize(const GraphPair& p);

}  // namespace fl
