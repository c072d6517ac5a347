#ifndef TILECOUNT_LATTICE_HPP
#define TILECOUNT_LATTICE_HPP

#include <utility>
#include <vector>

#include "tilecount/ppcore.hpp"
#include "tilecount/region.hpp"

namespace tilecount {

// ---- region constructors ----

// Hexagon with boundary word (clockwise from the top-left vertex)
// b*E, c*SE, a*SW, b*W, c*NW, a*NE.
Region build_hexagon(long a, long b, long c);

// Region whose tilings biject with PP^m(lam): word
// lam1*E, m*SE, then per row [SW, (lam_i - lam_{i+1})*W], then m*NW, r*NE.
Region build_shape_region(const Partition& lam, long m);

// Free-boundary region whose tilings biject with SPP^m(lam). Built in the
// rotated frame where the reflection axis of the doubled shape lies along
// horizontal lattice edges: word SW^{lam1}, W^m, then per row
// [NW, NE^{lam_i - lam_{i+1} - 1}], then the free side E^{m+d} on row 0.
Region build_shifted_region(const StrictPartition& lam, long m);

// Four-parameter free-boundary region; t = 0 coincides with
// build_shifted_region(delta_{y+z} + delta_z, x). The boundary word is
// documented in the README.
Region build_flashlight(const FlashlightParams& p);

// Trapezoid with zigzag bottom and k removed down-pointing triangles below
// the top side at positions s_1 < ... < s_k (counted from the left end).
Region build_quartered_hexagon(long x, const std::vector<long>& s);

DualGraph dual_graph(const Region& r);

// ---- matchings ----

struct MatchBudget {
    int triangle_budget = 64;
    long enum_cap = 1000000;
};

// Number of matchings covering every non-free vertex; free vertices may stay
// unmatched. Frontier-mask memoization over the column-major vertex order.
Count count_matchings_free(const DualGraph& g, const MatchBudget& budget = {});
Count count_tilings(const Region& r, const MatchBudget& budget = {});

struct Tiling {
    std::vector<std::pair<Tri, Tri>> lozenges;  // each pair sorted, list sorted
    std::vector<Tri> uncovered;                 // free triangles left unmatched
};

std::vector<Tiling> enumerate_tilings(const Region& r, const MatchBudget& budget = {});

// Removes the forced-edge cascade: any non-free vertex of degree one must be
// matched along its unique edge. Returns the reduced graph and the forced
// lozenges.
struct ForcedReduction {
    DualGraph graph;
    std::vector<std::pair<Tri, Tri>> forced;
};
ForcedReduction reduce_forced(const DualGraph& g);

// ---- bijections ----

// Heights of the horizontal-crossing lozenges along the lattice path of each
// row; requires shape provenance.
PlanePartition tiling_to_pp(const Region& r, const Tiling& t);
Tiling pp_to_tiling(const Region& r, const PlanePartition& pi);

// Shifted variant via the symmetric doubling; requires shifted provenance
// (build_shifted_region, or build_flashlight with t = 0).
PlanePartition tiling_to_spp(const Region& r, const Tiling& t);
Tiling spp_to_tiling(const Region& r, const PlanePartition& pi);

// ---- condensation machinery ----

struct KuoVertices {
    Tri u, v, w, s;
};

// A deletion case of the condensation step: which of {u,v,w,s} are removed
// and the flashlight region whose tiling count must match.
struct ConversionCase {
    std::string name;    // e.g. "uv"
    std::string dels;    // subset of "uvws"
    FlashlightParams target;
};

// The eight cases (z >= 2) or their z = 1 replacements.
std::vector<ConversionCase> conversion_cases(const FlashlightParams& p);

// Positions whose deletions realize the conversion cases; seeded at the four
// region corners and validated against the product formula, with a local
// search fallback. Requires x >= 2, z >= 1.
struct KuoPlacement {
    KuoVertices verts;
    bool from_seed = true;
};
KuoPlacement flashlight_kuo_vertices(const FlashlightParams& p,
                                     const MatchBudget& budget = {});

std::vector<Tri> kuo_deletion(const KuoVertices& k, const std::string& dels);

// Checks every conversion case by brute-force deletion counts against the
// product formula.
bool conversions_verify(const FlashlightParams& p, const KuoVertices& k,
                        const MatchBudget& budget = {});

// No three mutually vertex-disjoint paths (u->w, v->S, s->S') and the
// symmetric condition: searched exhaustively with flow-based pruning.
std::pair<bool, bool> separation_check(const DualGraph& g, const KuoVertices& k,
                                       long node_budget = 4000000);

// The free-boundary condensation identity, all eight counts by brute force.
bool kuo_verify(const DualGraph& g, const KuoVertices& k,
                const MatchBudget& budget = {});

enum class RecurrenceMode { formula, brute };

// Checks the z >= 2 recurrence or its z = 1 variant on the product formula
// or on brute-force region counts.
bool recurrence_verify(const FlashlightParams& p, RecurrenceMode mode,
                       const MatchBudget& budget = {});

// M(F_{1,y,z,t}) decomposes as the free semihexagon count times a sum of
// quartered-hexagon counts over the z-subsets of [z+1].
bool x1_decomposition_check(long y, long z, long t);

struct Y0Report {
    Count lhs;  // brute-force count of the y = 0 region
    Count rhs;  // product formula evaluated verbatim
    bool equal;
};
Y0Report conjecture_y0_check(long x, long z, long t, const MatchBudget& budget = {});

// ---- rendering ----

// Deterministic SVG: triangles outlined, free edges dashed, lozenges colored
// by orientation.
std::string render_svg(const Region& r, const Tiling* t);
void render_svg_file(const Region& r, const Tiling* t, const std::string& path);

}  // namespace tilecount

#endif
