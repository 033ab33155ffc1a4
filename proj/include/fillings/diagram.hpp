#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fillings/intmat.hpp"
#include "fillings/montesinos.hpp"
#include "fillings/slope.hpp"
#include "fillings/tangle.hpp"

namespace fl {

// X(a,b,c,d): edge labels counterclockwise around the crossing, a and c on the
// under-strand. Every label occurs exactly twice. free_loops counts crossingless
// unknotted components drawn apart from the rest.
struct PlanarDiagram {
    std::vector<std::array<int, 4>> crossings;
    int free_loops = 0;

    int num_edges() const { return 2 * (int)crossings.size(); }
};

// corner (crossing, k) is the sector between positions k-1 and k
using RegionCorner = std::pair<int, int>;

struct Regions {
    std::vector<std::vector<RegionCorner>> faces;
    std::vector<int> color;  // 0 white, 1 black
    int outer = 0;           // index of the face treated as unbounded
    std::map<RegionCorner, int> face_of;
};

bool is_connected(const PlanarDiagram& d);
// throws std::invalid_argument for a diagram whose face count is not crossings + 2
Regions checkerboard_regions(const PlanarDiagram& d);

// Goeritz matrix over regions of one color (0 white, 1 black), nothing deleted
IntMatrix goeritz_full(const PlanarDiagram& d, int color = 0);
// |det| with row/column `deleted` removed from the full matrix
i64 goeritz_determinant(const PlanarDiagram& d, int color = 0, int deleted = 0);

std::string to_pd(const PlanarDiagram& d);
PlanarDiagram parse_pd(std::string_view text);

// ---- tangle algebra on diagrams ----
// Ends are edge ids; ids lists identifications still to be resolved.
struct DTangle {
    std::vector<std::array<int, 4>> crossings;
    int nw = 0, ne = 0, sw = 0, se = 0;
    std::vector<std::pair<int, int>> ids;
};

class DiagramBuilder {
   public:
    int fresh() { return next_++; }

    DTangle crossing();  // the +1 tangle
    DTangle zero();
    DTangle infinity();
    DTangle integer(i64 n);
    DTangle rational(const Slope& s);  // built from fraction_to_twists
    DTangle sum(const DTangle& a, const DTangle& b);
    static DTangle rotate(const DTangle& t);  // quarter turn, fraction x -> -1/x
    static DTangle mirror(const DTangle& t);
    DTangle montesinos(const std::vector<Slope>& leaves);

    // close up crossings plus identifications into a diagram with compact labels
    static PlanarDiagram close(std::vector<std::array<int, 4>> crossings, std::vector<std::pair<int, int>> ids,
                               const std::vector<int>& all_edges);
    PlanarDiagram close_N(const DTangle& t);
    PlanarDiagram close_D(const DTangle& t);

   private:
    int next_ = 1;
};

PlanarDiagram diagram_of(const ArborescentLink& link);
PlanarDiagram rational_closure(const Slope& s);  // N(s)
PlanarDiagram connected_sum(const PlanarDiagram& a, const PlanarDiagram& b);

// ---- the Q template, stored as data ----
struct TemplateSite {
    std::string slot;  // theta, phi, omega, pi
    int nw, ne, sw, se;
    std::array<i64, 4> frame;  // ball fraction (a x + b) / (c x + d) of the slot value x
};
struct QTemplate {
    std::vector<std::array<int, 4>> skeleton;
    std::vector<TemplateSite> sites;
};

const QTemplate& q_template();
QTemplate parse_template(std::string_view text);
std::string_view q_template_text();
Slope apply_frame(const std::array<i64, 4>& frame, const Slope& x);

PlanarDiagram diagram_Q(const QFilling& f);

// ---- cover against diagram ----
struct OracleCheck {
    QFilling filling;
    std::string shape;     // closed form used by cover_Q
    std::optional<i64> cover;  // h1_order(cover_Q(f)), 0 when infinite
    i64 det = 0;           // goeritz_determinant(diagram_Q(f))
    bool match = false;
};
// throws OutsideFamily when cover_Q has no closed form for f
OracleCheck oracle_check(const QFilling& f);

struct GridReport {
    int checked = 0;
    int skipped = 0;  // outside the implemented family
    std::vector<OracleCheck> mismatches;
};
// the slot pool: reduced p/q with |p| <= 9, 1 <= q <= 9, plus 1/0
std::vector<Slope> grid_pool();
// every (theta, phi, omega) from the pool, pi in {1/0, -1/3}; stride > 1 keeps every stride-th triple
GridReport oracle_grid(int stride = 997);

// ---- small Reidemeister move engine ----
// R1: kink on the edge `label`; variant in 0..3 picks side and crossing sign
PlanarDiagram reidemeister1(const PlanarDiagram& d, int label, int variant);
// R2: push the edge leaving corner `from` across the edge leaving corner `to`,
// both corners on the same face; `over` picks which strand ends on top
PlanarDiagram reidemeister2(const PlanarDiagram& d, int face, int i, int j, bool over);

}  // namespace fl
