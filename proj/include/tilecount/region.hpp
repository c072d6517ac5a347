#ifndef TILECOUNT_REGION_HPP
#define TILECOUNT_REGION_HPP

#include <array>
#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tilecount/formulas.hpp"
#include "tilecount/shapes.hpp"

namespace tilecount {

// Unit triangle of the triangular lattice. Row u grows downward; (u,v) is
// up-pointing iff u+v is even. Triangles (u,v) and (u,v+-1) share a slanted
// edge; (u,v) and (u+1,v) share a horizontal edge iff u+v is even
// (up-pointing above down-pointing).
struct Tri {
    int u = 0;
    int v = 0;
    bool up() const { return ((u + v) & 1) == 0; }
    auto operator<=>(const Tri&) const = default;
    std::string str() const;
};

// Lattice vertex in doubled-x coordinates: the Euclidean position is
// (X/2, u * sqrt(3)/2). Valid vertices have X+u odd.
struct Vtx {
    int X = 0;
    int u = 0;
    auto operator<=>(const Vtx&) const = default;
};

std::array<Vtx, 3> tri_vertices(const Tri& t);
Tri tri_from_vertices(std::array<Vtx, 3> vs);

// Lattice symmetries used by the shifted-shape constructions: rotations by
// +-120 degrees about the vertex (X,u) = (1,0) and the reflection across the
// lattice line {X - u = 1}.
Vtx rot120(const Vtx& p);
Vtx rot240(const Vtx& p);
Vtx mirror_diag(const Vtx& p);
Tri rot120(const Tri& t);
Tri rot240(const Tri& t);
Tri mirror_diag(const Tri& t);

enum class Dir { E, W, NE, NW, SE, SW };
Vtx step(const Vtx& p, Dir d);

using BoundaryWord = std::vector<std::pair<Dir, int>>;

struct ShapeRegionInfo {
    Partition shape;
    int m;
};
struct ShiftedRegionInfo {
    StrictPartition shape;
    int m;
};

// Finite set of unit triangles plus a marked free subset of them.
class Region {
public:
    Region() = default;
    Region(std::vector<Tri> triangles, std::vector<Tri> free, std::string label);

    const std::vector<Tri>& triangles() const { return tris_; }
    bool contains(const Tri& t) const { return set_.count(t) > 0; }
    bool is_free(const Tri& t) const { return free_.count(t) > 0; }
    int size() const { return static_cast<int>(tris_.size()); }
    int free_count() const { return static_cast<int>(free_.size()); }
    const std::string& label() const { return label_; }

    int up_count() const;
    int down_count() const;

    // line-oriented debug dump: "u v orientation free-flag"
    std::string dump() const;

    std::optional<ShapeRegionInfo> shape_info;
    std::optional<ShiftedRegionInfo> shifted_info;
    std::optional<FlashlightParams> flashlight_info;

private:
    std::vector<Tri> tris_;  // sorted by (u,v)
    std::set<Tri> set_;
    std::set<Tri> free_;
    std::string label_;
};

// Traces the closed boundary word from `start` and collects the enclosed
// triangles by exact point-in-polygon tests on centroids. Throws
// parameter_error when the word does not close.
Region region_from_boundary(const Vtx& start, const BoundaryWord& word,
                            const std::string& label);

// The polygon corners of a boundary word (each unit step merged into runs).
std::vector<Vtx> boundary_polygon(const Vtx& start, const BoundaryWord& word);

// Bipartite adjacency structure over a Region's triangles. Vertices are
// ordered column-major (by v, then u) so that matchings can be counted by a
// frontier sweep.
class DualGraph {
public:
    explicit DualGraph(const Region& r);

    int n() const { return static_cast<int>(tris_.size()); }
    const Tri& tri(int i) const { return tris_[static_cast<size_t>(i)]; }
    int index_of(const Tri& t) const;  // -1 when absent
    bool is_free(int i) const { return free_[static_cast<size_t>(i)] != 0; }
    const std::vector<int>& neighbors(int i) const { return adj_[static_cast<size_t>(i)]; }
    int free_count() const;
    int up_count() const;
    int down_count() const;

    // Deletion of a vertex subset (tolerates absent triangles in `del` only
    // if allow_missing is set; the Kuo conversions always delete existing
    // triangles).
    DualGraph remove(const std::vector<Tri>& del) const;

private:
    DualGraph() = default;
    void build(std::vector<Tri> tris, std::vector<char> free);
    std::vector<Tri> tris_;
    std::vector<char> free_;
    std::vector<std::vector<int>> adj_;
};

}  // namespace tilecount

#endif
