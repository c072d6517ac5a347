#include <sstream>

#include "tilecount/lattice.hpp"

namespace tilecount {

Region build_hexagon(long a, long b, long c) {
    if (a < 0 || b < 0 || c < 0)
        throw parameter_error("build_hexagon: sides must be nonnegative");
    BoundaryWord word = {{Dir::E, static_cast<int>(b)},  {Dir::SE, static_cast<int>(c)},
                         {Dir::SW, static_cast<int>(a)}, {Dir::W, static_cast<int>(b)},
                         {Dir::NW, static_cast<int>(c)}, {Dir::NE, static_cast<int>(a)}};
    std::ostringstream label;
    label << "hex:" << a << "," << b << "," << c;
    Region r = region_from_boundary(Vtx{1, 0}, word, label.str());
    if (a > 0 && b > 0) {
        std::vector<int> parts(static_cast<size_t>(a), static_cast<int>(b));
        r.shape_info = ShapeRegionInfo{Partition(parts), static_cast<int>(c)};
    }
    return r;
}

Region build_shape_region(const Partition& lam, long m) {
    if (lam.rows() == 0)
        throw parameter_error("build_shape_region: shape must be nonempty");
    if (m < 0) throw parameter_error("build_shape_region: m >= 0 required");
    const int r = lam.rows();
    BoundaryWord word;
    word.push_back({Dir::E, lam.part(1)});
    word.push_back({Dir::SE, static_cast<int>(m)});
    for (int i = 1; i <= r; ++i) {
        word.push_back({Dir::SW, 1});
        word.push_back({Dir::W, lam.part(i) - lam.part(i + 1)});
    }
    word.push_back({Dir::NW, static_cast<int>(m)});
    word.push_back({Dir::NE, r});
    Region reg = region_from_boundary(Vtx{1, 0}, word, "shape:" + lam.str());
    reg.shape_info = ShapeRegionInfo{lam, static_cast<int>(m)};
    return reg;
}

namespace {

// Halved region of the doubled shape in the rotated frame: the reflection
// axis lies along horizontal edges on row 0 and becomes the free side (the
// final E run). The staircase loop climbs one row per step and has lam1 steps
// in total, so it always returns to row 0. When t_ext > 0, a horizontal
// boundary run of that length is inserted after staircase row t_after (this
// is the t-side of the flashlight regions; it widens the lower-left
// trapezoid, whose bottom side grows by the same amount).
Region halved_region(const std::vector<int>& lam, long m, long t_ext, int t_after,
                     const std::string& label) {
    const int d = static_cast<int>(lam.size());
    const int lam1 = d ? lam[0] : 0;
    auto part = [&](int i) { return (i >= 1 && i <= d) ? lam[i - 1] : 0; };
    BoundaryWord word;
    word.push_back({Dir::SW, lam1});
    word.push_back({Dir::W, static_cast<int>(m + t_ext)});
    for (int i = 1; i <= d; ++i) {
        int run = (i == d) ? part(d) - 1 : part(i) - part(i + 1) - 1;
        if (run < 0)
            throw parameter_error("halved_region: shape is not strictly decreasing");
        word.push_back({Dir::NW, 1});
        word.push_back({Dir::NE, run});
        if (i == t_after && t_ext > 0)
            word.push_back({Dir::E, static_cast<int>(t_ext)});
    }
    word.push_back({Dir::E, static_cast<int>(m) + d});

    Region filled = region_from_boundary(Vtx{1, 0}, word, label);
    std::vector<Tri> tris = filled.triangles();
    std::vector<Tri> free;
    const int left = 1 - 2 * (static_cast<int>(m) + d);
    for (const Tri& t : tris)
        if (t.u == 0 && !t.up() && t.v >= left && t.v + 2 <= 1) free.push_back(t);
    return Region(std::move(tris), std::move(free), label);
}

}  // namespace

Region build_shifted_region(const StrictPartition& lam, long m) {
    if (m < 0) throw parameter_error("build_shifted_region: m >= 0 required");
    if (lam.rows() == 0)
        throw parameter_error("build_shifted_region: shape must be nonempty");
    std::vector<int> parts(lam.parts().begin(), lam.parts().end());
    Region reg = halved_region(parts, m, 0, 0, "shifted:" + lam.str() + ",m=" +
                                                   std::to_string(m));
    reg.shifted_info = ShiftedRegionInfo{lam, static_cast<int>(m)};
    return reg;
}

Region build_flashlight(const FlashlightParams& p) {
    if (p.x < 0 || p.y < 0 || p.z < 0 || p.t < 0)
        throw parameter_error("build_flashlight: nonnegative parameters required");
    std::string label = p.str();
    Region reg;
    if (p.z == 0) {
        // the t-extension degenerates to a zero-width slit: the region is
        // the free semihexagon for delta_y, independently of t
        if (p.y == 0) {
            reg = Region({}, {}, label);
        } else {
            std::vector<int> parts;
            for (long i = p.y; i >= 1; --i) parts.push_back(static_cast<int>(i));
            reg = halved_region(parts, p.x, 0, 0, label);
            reg.shifted_info =
                ShiftedRegionInfo{StrictPartition(parts), static_cast<int>(p.x)};
        }
    } else {
        std::vector<int> parts;
        long n = p.y + p.z, k = p.z;
        for (long i = 1; i <= n; ++i) {
            long v = (n + 1 - i) + (i <= k ? (k + 1 - i) : 0);
            parts.push_back(static_cast<int>(v));
        }
        reg = halved_region(parts, p.x, p.t, static_cast<int>(k), label);
        if (p.t == 0)
            reg.shifted_info =
                ShiftedRegionInfo{StrictPartition(parts), static_cast<int>(p.x)};
    }
    reg.flashlight_info = p;
    return reg;
}

Region build_quartered_hexagon(long x, const std::vector<long>& s) {
    const long k = static_cast<long>(s.size());
    if (x < 0) throw parameter_error("build_quartered_hexagon: x >= 0 required");
    for (long i = 0; i < k; ++i) {
        if (s[i] < 1 || s[i] > x + k)
            throw parameter_error(
                "build_quartered_hexagon: positions must lie in [1, x+k]");
        if (i > 0 && s[i - 1] >= s[i])
            throw parameter_error("build_quartered_hexagon: positions must be increasing");
    }
    std::ostringstream label;
    label << "qhex:" << x;
    for (long v : s) label << "," << v;
    if (x + k == 0) return Region({}, {}, label.str());
    BoundaryWord word;
    word.push_back({Dir::E, static_cast<int>(x + k)});
    word.push_back({Dir::SW, static_cast<int>(2 * k)});
    word.push_back({Dir::W, static_cast<int>(x)});
    for (long i = 0; i < k; ++i) {
        word.push_back({Dir::NW, 1});
        word.push_back({Dir::NE, 1});
    }
    Region full = region_from_boundary(Vtx{1, 0}, word, label.str());
    std::set<Tri> dents;
    for (long pos : s) dents.insert(Tri{0, static_cast<int>(2 * pos - 1)});
    std::vector<Tri> tris;
    for (const Tri& t : full.triangles()) {
        if (dents.count(t)) continue;
        tris.push_back(t);
    }
    if (tris.size() + s.size() != full.triangles().size())
        throw parameter_error("build_quartered_hexagon: dent positions outside region");
    return Region(std::move(tris), {}, label.str());
}

DualGraph dual_graph(const Region& r) { return DualGraph(r); }

}  // namespace tilecount
