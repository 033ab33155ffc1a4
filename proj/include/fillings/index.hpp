#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fillings/cases.hpp"

namespace fl {

// Darts: edge e has dart 2e at edges[e].first and dart 2e+1 at edges[e].second.
// rotation[v] lists the darts at v anticlockwise.
struct RotationGraph {
    int num_vertices = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> rotation;
    std::vector<int> orient;  // per edge: +1 first -> second, -1 reversed, 0 unset
    std::vector<std::optional<Block>> tag;

    int add_vertex();
    // appends the new darts at the end of both rotations
    int add_edge(int u, int v);
    int num_edges() const { return (int)edges.size(); }
    int dart_vertex(int d) const { return (d & 1) ? edges[d >> 1].second : edges[d >> 1].first; }
};

// every edge listed once per end and every dart in exactly one rotation slot
std::vector<std::string> rotation_problems(const RotationGraph& g);
bool is_connected(const RotationGraph& g);

struct FaceTrace {
    std::vector<std::vector<int>> faces;  // darts, each leaving the face's corner in order
    std::vector<int> face_of;             // per dart
    int euler = 0;                        // V - E + F
};
// throws std::invalid_argument on a broken rotation system
FaceTrace trace_faces(const RotationGraph& g);

struct IndexReport {
    std::vector<int> s_vertex, s_face;
    std::vector<double> i_vertex, i_face;  // halves, stored exactly in binary
    std::vector<int> chi_face;
    double total = 0;
};
// needs every edge oriented and a connected genus-0 graph
IndexReport indices(const RotationGraph& g);
std::string to_text(const IndexReport& r);
std::string to_json(const IndexReport& r);

struct Dual {
    RotationGraph graph;  // dual dart d is primal dart d turned a quarter
    std::vector<int> vertex_of_face;
    int outside = -1;  // dual vertex of the designated outside face
    std::vector<int> primal_vertex_of_dart;
};
Dual build_dual(const RotationGraph& g, int outside_face = 0);

// embedded isomorphism (rotation preserving) of connected graphs
bool isomorphic(const RotationGraph& a, const RotationGraph& b);

// face colors of the primal, one per face; the outside face takes, next to each of its
// edges, the color opposite to the face across that edge
RotationGraph orient_dual(const Dual& d, const RotationGraph& primal, const std::vector<Side>& face_color,
                          DualMode mode);

enum class VertexKind : std::uint8_t { interior, boundary, exceptional };
struct DualClassification {
    std::vector<int> sinks, sources;  // dual vertices
    std::vector<int> cycles;          // dual faces with no switches
    std::vector<std::string> cycle_kind;  // "ordinary", "boundary", "exceptional"
    std::vector<int> cycle_vertex;        // primal vertex dual to each cycle
    IndexReport index;
};
DualClassification classify_dual(const Dual& d, const RotationGraph& oriented,
                                 const std::vector<VertexKind>& primal_kind);

// random connected plane graph: a random tree, then chords split faces
RotationGraph random_plane_graph(std::mt19937_64& rng, int max_edges);
void orient_randomly(RotationGraph& g, std::mt19937_64& rng);

}  // namespace fl
