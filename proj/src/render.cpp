#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "tilecount/lattice.hpp"

namespace tilecount {

namespace {

constexpr double kScale = 36.0;
constexpr double kMargin = 12.0;
const double kRow = std::sqrt(3.0) / 2.0;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v + 0.0);  // avoid -0.00
    if (std::string(buf) == "-0.00") return "0.00";
    return buf;
}

struct Frame {
    double xoff, yoff;
    std::pair<double, double> map(const Vtx& p) const {
        return {p.X / 2.0 * kScale + xoff, p.u * kRow * kScale + yoff};
    }
};

std::string polygon_path(const Frame& f, const std::vector<Vtx>& vs) {
    std::ostringstream os;
    for (size_t i = 0; i < vs.size(); ++i) {
        auto [x, y] = f.map(vs[i]);
        os << (i ? " L " : "M ") << fmt(x) << " " << fmt(y);
    }
    os << " Z";
    return os.str();
}

// The union quadrilateral of two edge-adjacent triangles: the two private
// vertices alternate with the two shared ones.
std::vector<Vtx> lozenge_quad(const Tri& a, const Tri& b) {
    auto va = tri_vertices(a), vb = tri_vertices(b);
    std::vector<Vtx> shared, only_a, only_b;
    for (const Vtx& p : va) {
        bool s = false;
        for (const Vtx& q : vb) s = s || p == q;
        (s ? shared : only_a).push_back(p);
    }
    for (const Vtx& q : vb) {
        bool s = false;
        for (const Vtx& p : va) s = s || p == q;
        if (!s) only_b.push_back(q);
    }
    if (shared.size() != 2 || only_a.size() != 1 || only_b.size() != 1)
        throw parameter_error("lozenge_quad: triangles are not edge-adjacent");
    return {only_a[0], shared[0], only_b[0], shared[1]};
}

const char* lozenge_color(const Tri& a, const Tri& b) {
    if (a.u != b.u) return "#b3cde3";           // vertical (crossing) lozenge
    const Tri& up = a.up() ? a : b;
    const Tri& dn = a.up() ? b : a;
    return dn.v == up.v + 1 ? "#ccebc5" : "#fbb4ae";
}

}  // namespace

std::string render_svg(const Region& r, const Tiling* t) {
    int xmin = 0, xmax = 0, umin = 0, umax = 0;
    bool first = true;
    for (const Tri& tri : r.triangles())
        for (const Vtx& p : tri_vertices(tri)) {
            if (first || p.X < xmin) xmin = p.X;
            if (first || p.X > xmax) xmax = p.X;
            if (first || p.u < umin) umin = p.u;
            if (first || p.u > umax) umax = p.u;
            first = false;
        }
    Frame f{kMargin - xmin / 2.0 * kScale, kMargin - umin * kRow * kScale};
    double width = (xmax - xmin) / 2.0 * kScale + 2 * kMargin;
    double height = (umax - umin) * kRow * kScale + 2 * kMargin;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width)
       << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " "
       << fmt(height) << "\">\n";

    if (t) {
        for (const auto& [a, b] : t->lozenges) {
            os << "  <path class=\"lozenge\" d=\""
               << polygon_path(f, lozenge_quad(a, b)) << "\" fill=\""
               << lozenge_color(a, b) << "\" stroke=\"#555555\" stroke-width=\"1.6\"/>\n";
        }
    }
    for (const Tri& tri : r.triangles()) {
        std::vector<Vtx> vs(tri_vertices(tri).begin(), tri_vertices(tri).end());
        os << "  <path class=\"triangle\" d=\"" << polygon_path(f, vs)
           << "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"0.5\"/>\n";
    }
    // free boundary: dashed horizontal edge of each free triangle
    for (const Tri& tri : r.triangles()) {
        if (!r.is_free(tri)) continue;
        int yrow = tri.up() ? tri.u + 1 : tri.u;
        auto [x1, y1] = f.map(Vtx{tri.v, yrow});
        auto [x2, y2] = f.map(Vtx{tri.v + 2, yrow});
        os << "  <line class=\"free\" x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1)
           << "\" x2=\"" << fmt(x2) << "\" y2=\"" << fmt(y2)
           << "\" stroke=\"#d95f02\" stroke-width=\"2\" stroke-dasharray=\"6 4\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

void render_svg_file(const Region& r, const Tiling* t, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parameter_error("render_svg_file: cannot open " + path);
    out << render_svg(r, t);
    if (!out) throw parameter_error("render_svg_file: write failed for " + path);
}

}  // namespace tilecount
