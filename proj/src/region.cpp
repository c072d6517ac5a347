#include "tilecount/region.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tilecount {

std::string Tri::str() const {
    std::ostringstream os;
    os << "(" << u << "," << v << (up() ? ",up" : ",down") << ")";
    return os.str();
}

std::array<Vtx, 3> tri_vertices(const Tri& t) {
    if (t.up())
        return {Vtx{t.v, t.u + 1}, Vtx{t.v + 2, t.u + 1}, Vtx{t.v + 1, t.u}};
    return {Vtx{t.v, t.u}, Vtx{t.v + 2, t.u}, Vtx{t.v + 1, t.u + 1}};
}

Tri tri_from_vertices(std::array<Vtx, 3> vs) {
    std::sort(vs.begin(), vs.end(), [](const Vtx& a, const Vtx& b) {
        return a.u != b.u ? a.u < b.u : a.X < b.X;
    });
    // two vertices share a row (the horizontal edge), the third is the apex
    if (vs[0].u == vs[1].u) {
        // apex below: down-pointing with top edge at row vs[0].u
        Tri t{vs[0].u, vs[0].X};
        if (t.up()) throw parameter_error("tri_from_vertices: inconsistent vertex set");
        return t;
    }
    if (vs[1].u == vs[2].u) {
        Tri t{vs[1].u - 1, vs[1].X};
        if (!t.up()) throw parameter_error("tri_from_vertices: inconsistent vertex set");
        return t;
    }
    throw parameter_error("tri_from_vertices: no horizontal edge");
}

Vtx rot120(const Vtx& p) { return {(3 - p.X - 3 * p.u) / 2, (p.X - 1 - p.u) / 2}; }
Vtx rot240(const Vtx& p) { return {(3 - p.X + 3 * p.u) / 2, (1 - p.X - p.u) / 2}; }
Vtx mirror_diag(const Vtx& p) { return {(3 - p.X + 3 * p.u) / 2, (p.X - 1 + p.u) / 2}; }

namespace {
template <class F>
Tri map_tri(const Tri& t, F&& f) {
    auto vs = tri_vertices(t);
    return tri_from_vertices({f(vs[0]), f(vs[1]), f(vs[2])});
}
}  // namespace

Tri rot120(const Tri& t) { return map_tri(t, [](const Vtx& p) { return rot120(p); }); }
Tri rot240(const Tri& t) { return map_tri(t, [](const Vtx& p) { return rot240(p); }); }
Tri mirror_diag(const Tri& t) {
    return map_tri(t, [](const Vtx& p) { return mirror_diag(p); });
}

Vtx step(const Vtx& p, Dir d) {
    switch (d) {
    case Dir::E: return {p.X + 2, p.u};
    case Dir::W: return {p.X - 2, p.u};
    case Dir::NE: return {p.X + 1, p.u - 1};
    case Dir::NW: return {p.X - 1, p.u - 1};
    case Dir::SE: return {p.X + 1, p.u + 1};
    case Dir::SW: return {p.X - 1, p.u + 1};
    }
    throw parameter_error("step: bad direction");
}

Region::Region(std::vector<Tri> triangles, std::vector<Tri> free, std::string label)
    : tris_(std::move(triangles)), label_(std::move(label)) {
    std::sort(tris_.begin(), tris_.end());
    tris_.erase(std::unique(tris_.begin(), tris_.end()), tris_.end());
    set_.insert(tris_.begin(), tris_.end());
    for (const Tri& f : free) {
        if (!set_.count(f))
            throw parameter_error("Region: free triangle " + f.str() + " not in region");
        free_.insert(f);
    }
}

int Region::up_count() const {
    int n = 0;
    for (const Tri& t : tris_)
        if (t.up()) ++n;
    return n;
}

int Region::down_count() const { return size() - up_count(); }

std::string Region::dump() const {
    std::ostringstream os;
    for (const Tri& t : tris_)
        os << t.u << " " << t.v << " " << (t.up() ? "up" : "down") << " "
           << (is_free(t) ? 1 : 0) << "\n";
    return os.str();
}

std::vector<Vtx> boundary_polygon(const Vtx& start, const BoundaryWord& word) {
    std::vector<Vtx> pts;
    Vtx cur = start;
    pts.push_back(cur);
    for (const auto& [d, n] : word) {
        if (n < 0) throw parameter_error("boundary word: negative run length");
        for (int i = 0; i < n; ++i) {
            cur = step(cur, d);
            pts.push_back(cur);
        }
    }
    if (!(cur == start)) throw parameter_error("boundary word does not close");
    pts.pop_back();
    return pts;
}

namespace {

// Exact centroid-in-polygon test. Points are scaled to integer coordinates
// (X, Y=3u); triangle centroids have Y = 3u+2 (up) or 3u+1 (down), which is
// never congruent to an edge endpoint's Y, so no degenerate cases arise.
bool point_in_polygon(const std::vector<Vtx>& poly, long long tx, long long ty) {
    bool inside = false;
    size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        const Vtx& a = poly[i];
        const Vtx& b = poly[(i + 1) % n];
        long long ay = 3LL * a.u, by = 3LL * b.u;
        if ((ay > ty) == (by > ty)) continue;
        // x-coordinate of the crossing minus tx, with sign of (by-ay)
        long long num = (a.X - tx) * (by - ay) + (b.X - a.X) * (ty - ay);
        long long den = by - ay;
        if (num == 0) throw parameter_error("point_in_polygon: point on boundary");
        if ((num > 0) == (den > 0)) inside = !inside;
    }
    return inside;
}

}  // namespace

Region region_from_boundary(const Vtx& start, const BoundaryWord& word,
                            const std::string& label) {
    std::vector<Vtx> poly = boundary_polygon(start, word);
    std::vector<Tri> tris;
    if (!poly.empty()) {
        int umin = poly[0].u, umax = poly[0].u, xmin = poly[0].X, xmax = poly[0].X;
        for (const Vtx& p : poly) {
            umin = std::min(umin, p.u);
            umax = std::max(umax, p.u);
            xmin = std::min(xmin, p.X);
            xmax = std::max(xmax, p.X);
        }
        for (int u = umin; u < umax; ++u) {
            for (int v = xmin - 1; v <= xmax - 1; ++v) {
                Tri t{u, v};
                long long ty = 3LL * u + (t.up() ? 2 : 1);
                if (point_in_polygon(poly, t.v + 1, ty)) tris.push_back(t);
            }
        }
    }
    return Region(std::move(tris), {}, label);
}

void DualGraph::build(std::vector<Tri> tris, std::vector<char> free) {
    tris_ = std::move(tris);
    free_ = std::move(free);
    std::map<Tri, int> idx;
    for (int i = 0; i < n(); ++i) idx[tris_[static_cast<size_t>(i)]] = i;
    adj_.assign(tris_.size(), {});
    for (int i = 0; i < n(); ++i) {
        const Tri& t = tris_[static_cast<size_t>(i)];
        std::vector<Tri> nbrs = {Tri{t.u, t.v - 1}, Tri{t.u, t.v + 1}};
        nbrs.push_back(t.up() ? Tri{t.u + 1, t.v} : Tri{t.u - 1, t.v});
        for (const Tri& nb : nbrs) {
            auto it = idx.find(nb);
            if (it != idx.end()) adj_[static_cast<size_t>(i)].push_back(it->second);
        }
        std::sort(adj_[static_cast<size_t>(i)].begin(), adj_[static_cast<size_t>(i)].end());
    }
}

DualGraph::DualGraph(const Region& r) {
    std::vector<Tri> tris = r.triangles();
    std::sort(tris.begin(), tris.end(), [](const Tri& a, const Tri& b) {
        return a.v != b.v ? a.v < b.v : a.u < b.u;
    });
    std::vector<char> free(tris.size(), 0);
    for (size_t i = 0; i < tris.size(); ++i) free[i] = r.is_free(tris[i]) ? 1 : 0;
    build(std::move(tris), std::move(free));
}

int DualGraph::index_of(const Tri& t) const {
    auto cmp = [](const Tri& a, const Tri& b) {
        return a.v != b.v ? a.v < b.v : a.u < b.u;
    };
    auto it = std::lower_bound(tris_.begin(), tris_.end(), t, cmp);
    if (it != tris_.end() && *it == t) return static_cast<int>(it - tris_.begin());
    return -1;
}

int DualGraph::free_count() const {
    int c = 0;
    for (char f : free_) c += f;
    return c;
}

int DualGraph::up_count() const {
    int c = 0;
    for (const Tri& t : tris_) c += t.up() ? 1 : 0;
    return c;
}

int DualGraph::down_count() const { return n() - up_count(); }

DualGraph DualGraph::remove(const std::vector<Tri>& del) const {
    std::set<Tri> gone;
    for (const Tri& t : del) {
        if (index_of(t) < 0)
            throw parameter_error("DualGraph::remove: triangle " + t.str() +
                                  " not in graph");
        gone.insert(t);
    }
    std::vector<Tri> tris;
    std::vector<char> free;
    for (int i = 0; i < n(); ++i) {
        if (gone.count(tris_[static_cast<size_t>(i)])) continue;
        tris.push_back(tris_[static_cast<size_t>(i)]);
        free.push_back(free_[static_cast<size_t>(i)]);
    }
    DualGraph g;
    g.build(std::move(tris), std::move(free));
    return g;
}

}  // namespace tilecount
