#include <algorithm>
#include <map>

#include "tilecount/lattice.hpp"

namespace tilecount {

namespace {

// Path-tracing core shared by both directions. Path i of an unshifted shape
// region enters at the up-pointing triangle (i-1, 1-i) and crosses lozenges
// with two slanted edges of the NE family: the vertical lozenge descends one
// row ("V"), the same-row lozenge is a level step ("L") carrying the entry.
Tri path_entry(int i) { return Tri{i - 1, 1 - i}; }

std::map<Tri, Tri> mate_map(const Tiling& t) {
    std::map<Tri, Tri> mate;
    for (const auto& [a, b] : t.lozenges) {
        mate[a] = b;
        mate[b] = a;
    }
    return mate;
}

}  // namespace

PlanePartition tiling_to_pp(const Region& r, const Tiling& t) {
    if (!r.shape_info)
        throw parameter_error("tiling_to_pp: region carries no shape provenance");
    const Partition& lam = r.shape_info->shape;
    const int m = r.shape_info->m;
    auto mate = mate_map(t);

    PlanePartition pi;
    pi.shape = lam;
    pi.bound = m;
    for (int i = 1; i <= lam.rows(); ++i) {
        Tri cur = path_entry(i);
        std::vector<int> vpos;  // V-crossings seen so far at each L
        std::vector<int> row;
        int vseen = 0;
        while (true) {
            auto it = mate.find(cur);
            if (it == mate.end())
                throw parameter_error("tiling_to_pp: path hits uncovered triangle " +
                                      cur.str());
            Tri p = it->second;
            if (p == Tri{cur.u, cur.v + 1}) {
                row.push_back(vseen);  // placeholder: heights fixed up below
                cur = Tri{cur.u, cur.v + 2};
            } else if (p == Tri{cur.u + 1, cur.v}) {
                ++vseen;
                cur = Tri{cur.u + 1, cur.v + 1};
            } else {
                throw parameter_error("tiling_to_pp: malformed path at " + cur.str());
            }
            if (!r.contains(cur)) break;
        }
        if (vseen != m || static_cast<int>(row.size()) != lam.part(i))
            throw parameter_error("tiling_to_pp: path " + std::to_string(i) +
                                  " has wrong step counts");
        for (int& e : row) e = m - e;  // entry = descents remaining after the L
        pi.rows.push_back(std::move(row));
    }
    return pi;
}

Tiling pp_to_tiling(const Region& r, const PlanePartition& pi) {
    if (!r.shape_info)
        throw parameter_error("pp_to_tiling: region carries no shape provenance");
    const Partition& lam = r.shape_info->shape;
    const int m = r.shape_info->m;
    if (!(std::holds_alternative<Partition>(pi.shape) &&
          std::get<Partition>(pi.shape) == lam && pi.bound == m && pi.valid()))
        throw parameter_error("pp_to_tiling: plane partition does not match region");

    std::set<Tri> used;
    std::vector<std::pair<Tri, Tri>> loz;
    auto place = [&](const Tri& a, const Tri& b) {
        if (!r.contains(a) || !r.contains(b))
            throw parameter_error("pp_to_tiling: lozenge outside region");
        if (!used.insert(a).second || !used.insert(b).second)
            throw parameter_error("pp_to_tiling: overlapping lozenges");
        loz.push_back(b < a ? std::make_pair(b, a) : std::make_pair(a, b));
    };
    for (int i = 1; i <= lam.rows(); ++i) {
        Tri cur = path_entry(i);
        int vdone = 0;
        for (int j = 1; j <= lam.part(i); ++j) {
            int need = m - pi.entry(i, j);
            while (vdone < need) {
                place(cur, Tri{cur.u + 1, cur.v});
                cur = Tri{cur.u + 1, cur.v + 1};
                ++vdone;
            }
            place(cur, Tri{cur.u, cur.v + 1});
            cur = Tri{cur.u, cur.v + 2};
        }
        while (vdone < m) {
            place(cur, Tri{cur.u + 1, cur.v});
            cur = Tri{cur.u + 1, cur.v + 1};
            ++vdone;
        }
        if (r.contains(cur))
            throw parameter_error("pp_to_tiling: path " + std::to_string(i) +
                                  " fails to exit the region");
    }
    // off-path triangles pair into lozenges with horizontal edges of the
    // remaining orientation
    for (const Tri& a : r.triangles()) {
        if (used.count(a) || !a.up()) continue;
        Tri b{a.u, a.v - 1};
        if (!r.contains(b) || used.count(b))
            throw parameter_error("pp_to_tiling: off-path triangle cannot be covered");
        place(a, b);
    }
    if (used.size() != r.triangles().size())
        throw parameter_error("pp_to_tiling: region not fully covered");
    Tiling t;
    t.lozenges = std::move(loz);
    std::sort(t.lozenges.begin(), t.lozenges.end());
    return t;
}

namespace {

bool in_upper_half(const Tri& t) { return t.v > t.u; }

}  // namespace

PlanePartition tiling_to_spp(const Region& r, const Tiling& t) {
    if (!r.shifted_info)
        throw parameter_error(
            "tiling_to_spp: region carries no shifted provenance (flashlight regions "
            "with t > 0 have no plane partition reading)");
    const StrictPartition& lam = r.shifted_info->shape;
    const int m = r.shifted_info->m;
    Region full = build_shape_region(double_shape(lam), m);

    Tiling tf;
    for (const auto& [a, b] : t.lozenges) {
        Tri A = rot240(a), B = rot240(b);
        Tri A2 = mirror_diag(A), B2 = mirror_diag(B);
        tf.lozenges.push_back(B < A ? std::make_pair(B, A) : std::make_pair(A, B));
        tf.lozenges.push_back(B2 < A2 ? std::make_pair(B2, A2) : std::make_pair(A2, B2));
    }
    for (const Tri& f : t.uncovered) {
        Tri F = rot240(f), F2 = mirror_diag(F);
        tf.lozenges.push_back(F2 < F ? std::make_pair(F2, F) : std::make_pair(F, F2));
    }
    std::sort(tf.lozenges.begin(), tf.lozenges.end());

    PlanePartition pf = tiling_to_pp(full, tf);
    if (!(transpose(pf) == pf))
        throw parameter_error("tiling_to_spp: doubled tiling is not symmetric");
    PlanePartition out;
    out.shape = lam;
    out.bound = m;
    for (int i = 1; i <= lam.rows(); ++i) {
        std::vector<int> row;
        for (int j = i; j <= i + lam.part(i) - 1; ++j) row.push_back(pf.entry(i, j));
        out.rows.push_back(std::move(row));
    }
    return out;
}

Tiling spp_to_tiling(const Region& r, const PlanePartition& pi) {
    if (!r.shifted_info)
        throw parameter_error("spp_to_tiling: region carries no shifted provenance");
    const StrictPartition& lam = r.shifted_info->shape;
    const int m = r.shifted_info->m;
    if (!(std::holds_alternative<StrictPartition>(pi.shape) &&
          std::get<StrictPartition>(pi.shape) == lam && pi.bound == m && pi.valid()))
        throw parameter_error("spp_to_tiling: plane partition does not match region");

    Partition mu = double_shape(lam);
    Region full = build_shape_region(mu, m);
    PlanePartition pf;
    pf.shape = mu;
    pf.bound = m;
    for (int i = 1; i <= mu.rows(); ++i) {
        std::vector<int> row;
        for (int j = 1; j <= mu.part(i); ++j)
            row.push_back(pi.entry(std::min(i, j), std::max(i, j)));
        pf.rows.push_back(std::move(row));
    }
    Tiling tf = pp_to_tiling(full, pf);

    Tiling out;
    for (const auto& [A, B] : tf.lozenges) {
        bool au = in_upper_half(A), bu = in_upper_half(B);
        if (au && bu) {
            Tri a = rot120(A), b = rot120(B);
            out.lozenges.push_back(b < a ? std::make_pair(b, a) : std::make_pair(a, b));
        } else if (au != bu) {
            out.uncovered.push_back(rot120(au ? A : B));
        }
    }
    std::sort(out.lozenges.begin(), out.lozenges.end());
    std::sort(out.uncovered.begin(), out.uncovered.end());
    return out;
}

}  // namespace tilecount
