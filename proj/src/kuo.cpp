#include <algorithm>
#include <map>

#include "tilecount/lattice.hpp"

namespace tilecount {

std::vector<ConversionCase> conversion_cases(const FlashlightParams& p) {
    if (p.x < 2 || p.z < 1)
        throw parameter_error("conversion_cases: induction regime needs x >= 2, z >= 1");
    const long x = p.x, y = p.y, z = p.z, t = p.t;
    std::vector<ConversionCase> cs;
    cs.push_back({"convert1", "", {x, y, z, t}});
    if (z >= 2) {
        cs.push_back({"convert2", "uvws", {x - 2, y + 2, z - 2, t + 2}});
        cs.push_back({"convert7", "us", {x, y + 2, z - 2, t + 1}});
    } else {
        cs.push_back({"convert2b", "uvws", {x - 2, y + 1, 0, t + 2}});
        cs.push_back({"convert7b", "us", {x, y + 1, 0, t + 1}});
    }
    cs.push_back({"convert3", "vs", {x - 2, y + 2, z - 1, t + 1}});
    cs.push_back({"convert4", "uw", {x, y, z - 1, t + 1}});
    cs.push_back({"convert5", "uv", {x, y, z - 1, t}});
    cs.push_back({"convert6", "ws", {x - 2, y + 2, z - 1, t + 2}});
    cs.push_back({"convert8", "vw", {x - 2, y, z, t + 1}});
    return cs;
}

std::vector<Tri> kuo_deletion(const KuoVertices& k, const std::string& dels) {
    std::vector<Tri> d;
    for (char c : dels) {
        switch (c) {
        case 'u': d.push_back(k.u); break;
        case 'v': d.push_back(k.v); break;
        case 'w': d.push_back(k.w); break;
        case 's': d.push_back(k.s); break;
        default: throw parameter_error("kuo_deletion: bad vertex name");
        }
    }
    return d;
}

namespace {

bool placement_ok(const Region& reg, const DualGraph& g, const FlashlightParams& p,
                  const KuoVertices& k, const MatchBudget& budget,
                  std::map<std::vector<Tri>, Count>* cache) {
    const Tri all[4] = {k.u, k.v, k.w, k.s};
    for (const Tri& t : all)
        if (!reg.contains(t) || reg.is_free(t)) return false;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (all[i] == all[j]) return false;
    for (const ConversionCase& c : conversion_cases(p)) {
        std::vector<Tri> del = kuo_deletion(k, c.dels);
        std::sort(del.begin(), del.end());
        Count got;
        auto it = cache ? cache->find(del) : std::map<std::vector<Tri>, Count>::iterator{};
        if (cache && it != cache->end()) {
            got = it->second;
        } else {
            got = count_matchings_free(g.remove(del), budget);
            if (cache) (*cache)[del] = got;
        }
        if (got != count_flashlight_formula(c.target)) return false;
    }
    return true;
}

}  // namespace

KuoPlacement flashlight_kuo_vertices(const FlashlightParams& p, const MatchBudget& budget) {
    if (p.x < 2 || p.z < 1)
        throw parameter_error(
            "flashlight_kuo_vertices: induction regime needs x >= 2, z >= 1");
    if (p.y < 1)
        throw parameter_error("flashlight_kuo_vertices: y >= 1 required");
    Region reg = build_flashlight(p);
    DualGraph g(reg);
    const int depth = static_cast<int>(p.y + 2 * p.z);
    const int XC = 1 - depth - 2 * static_cast<int>(p.x + p.t);  // teeth corner

    // Corner seeds: u at the teeth corner, v/w beside the two ends of the
    // free side, s at the corner of the long slanted side.
    KuoVertices seed{Tri{depth - 1, XC - 1},
                     Tri{0, 2 - 2 * static_cast<int>(p.x + p.y + p.z)},
                     Tri{0, -2},
                     Tri{depth - 1, -depth}};
    std::map<std::vector<Tri>, Count> cache;
    if (placement_ok(reg, g, p, seed, budget, &cache)) return {seed, true};

    // Local search around the four corners, in a deterministic order.
    auto window = [&](int cu, int cv, int radius) {
        std::vector<Tri> out;
        for (const Tri& t : reg.triangles())
            if (std::abs(t.u - cu) <= radius && std::abs(t.v - cv) <= 2 * radius &&
                !reg.is_free(t))
                out.push_back(t);
        return out;
    };
    const int R = 3;
    std::vector<Tri> CU = window(depth - 1, XC - 1, R);
    std::vector<Tri> CV = window(0, 2 - 2 * static_cast<int>(p.x + p.y + p.z), R);
    std::vector<Tri> CW = window(0, -2, R);
    std::vector<Tri> CS = window(depth - 1, -depth, R);
    for (const Tri& u : CU)
        for (const Tri& v : CV)
            for (const Tri& w : CW)
                for (const Tri& s : CS) {
                    KuoVertices k{u, v, w, s};
                    if (placement_ok(reg, g, p, k, budget, &cache)) return {k, false};
                }
    throw parameter_error("flashlight_kuo_vertices: no placement satisfies the "
                          "conversion identities near the corners for " + p.str());
}

bool conversions_verify(const FlashlightParams& p, const KuoVertices& k,
                        const MatchBudget& budget) {
    Region reg = build_flashlight(p);
    DualGraph g(reg);
    return placement_ok(reg, g, p, k, budget, nullptr);
}

namespace {

// Vertex-capacity max flow of value up to 2 from {a,b} to the free set,
// in the graph minus `blocked`. Standard vertex-splitting with BFS
// augmentation; everything has unit capacity.
bool has_two_flow(const DualGraph& g, int a, int b, const std::vector<char>& blocked) {
    const int n = g.n();
    if (blocked[static_cast<size_t>(a)] || blocked[static_cast<size_t>(b)]) return false;
    // node 2i = in, 2i+1 = out, 2n = source, 2n+1 = sink
    const int S = 2 * n, T = 2 * n + 1, N = 2 * n + 2;
    std::vector<std::vector<int>> cap(static_cast<size_t>(N),
                                      std::vector<int>(static_cast<size_t>(N), 0));
    for (int i = 0; i < n; ++i) {
        if (blocked[static_cast<size_t>(i)]) continue;
        cap[2 * i][2 * i + 1] = 1;
        for (int j : g.neighbors(i))
            if (!blocked[static_cast<size_t>(j)]) cap[2 * i + 1][2 * j] = 1;
        if (g.is_free(i)) cap[2 * i + 1][T] = 1;
    }
    cap[S][2 * a] = 1;
    cap[S][2 * b] = 1;
    int flow = 0;
    while (flow < 2) {
        std::vector<int> prev(static_cast<size_t>(N), -1);
        std::vector<int> queue = {S};
        prev[S] = S;
        for (size_t qi = 0; qi < queue.size() && prev[T] < 0; ++qi) {
            int c = queue[static_cast<size_t>(qi)];
            for (int d = 0; d < N; ++d)
                if (prev[d] < 0 && cap[c][d] > 0) {
                    prev[d] = c;
                    queue.push_back(d);
                }
        }
        if (prev[T] < 0) break;
        for (int c = T; c != S; c = prev[c]) {
            cap[prev[c]][c] -= 1;
            cap[c][prev[c]] += 1;
        }
        ++flow;
    }
    return flow >= 2;
}

// Searches for three mutually vertex-disjoint paths: p1src -> p1dst, and two
// paths from q2/q3 to distinct free vertices. DFS over the first path with a
// monotone flow prune.
bool violating_triple(const DualGraph& g, int p1src, int p1dst, int q2, int q3,
                      long node_budget) {
    const int n = g.n();
    if (g.free_count() < 2) return false;
    std::vector<char> onpath(static_cast<size_t>(n), 0);
    onpath[static_cast<size_t>(p1src)] = 1;
    onpath[static_cast<size_t>(q2)] = 1;  // the first path may not touch q2/q3
    onpath[static_cast<size_t>(q3)] = 1;
    long nodes = 0;
    auto flow_ok = [&](bool include_dst) {
        std::vector<char> blocked = onpath;
        blocked[static_cast<size_t>(q2)] = 0;
        blocked[static_cast<size_t>(q3)] = 0;
        if (include_dst) blocked[static_cast<size_t>(p1dst)] = 1;
        return has_two_flow(g, q2, q3, blocked);
    };
    auto rec = [&](auto&& self, int cur) -> bool {
        if (++nodes > node_budget)
            throw resource_error("separation_check: node budget exceeded");
        if (cur == p1dst) return flow_ok(false);
        if (!flow_ok(true)) return false;
        for (int nx : g.neighbors(cur)) {
            if (onpath[static_cast<size_t>(nx)]) continue;
            onpath[static_cast<size_t>(nx)] = 1;
            bool hit = self(self, nx);
            onpath[static_cast<size_t>(nx)] = 0;
            if (hit) return true;
        }
        return false;
    };
    return rec(rec, p1src);
}

}  // namespace

std::pair<bool, bool> separation_check(const DualGraph& g, const KuoVertices& k,
                                       long node_budget) {
    int iu = g.index_of(k.u), iv = g.index_of(k.v), iw = g.index_of(k.w),
        is = g.index_of(k.s);
    if (iu < 0 || iv < 0 || iw < 0 || is < 0)
        throw parameter_error("separation_check: vertices must lie in the graph");
    for (int i : {iu, iv, iw, is})
        if (g.is_free(i))
            throw parameter_error("separation_check: u,v,w,s must avoid the free set");
    bool uw = !violating_triple(g, iu, iw, iv, is, node_budget);
    bool vs = !violating_triple(g, iv, is, iu, iw, node_budget);
    return {uw, vs};
}

bool kuo_verify(const DualGraph& g, const KuoVertices& k, const MatchBudget& budget) {
    auto cnt = [&](const std::string& dels) {
        return count_matchings_free(g.remove(kuo_deletion(k, dels)), budget);
    };
    Count m0 = count_matchings_free(g, budget);
    return m0 * cnt("uvws") + cnt("uw") * cnt("vs") ==
           cnt("us") * cnt("vw") + cnt("uv") * cnt("ws");
}

bool recurrence_verify(const FlashlightParams& p, RecurrenceMode mode,
                       const MatchBudget& budget) {
    if (p.x < 2 || p.z < 1)
        throw parameter_error("recurrence_verify: x >= 2 and z >= 1 required");
    const long x = p.x, y = p.y, z = p.z, t = p.t;
    auto M = [&](long a, long b, long c, long d) -> Count {
        FlashlightParams q{a, b, c, d};
        if (mode == RecurrenceMode::formula) return count_flashlight_formula(q);
        return count_tilings(build_flashlight(q), budget);
    };
    if (z >= 2)
        return M(x, y, z, t) * M(x - 2, y + 2, z - 2, t + 2) +
                   M(x - 2, y + 2, z - 1, t + 1) * M(x, y, z - 1, t + 1) ==
               M(x, y, z - 1, t) * M(x - 2, y + 2, z - 1, t + 2) +
                   M(x, y + 2, z - 2, t + 1) * M(x - 2, y, z, t + 1);
    return M(x, y, 1, t) * M(x - 2, y + 1, 0, t + 2) +
               M(x - 2, y + 2, 0, t + 1) * M(x, y, 0, t + 1) ==
           M(x, y, 0, t) * M(x - 2, y + 2, 0, t + 2) +
               M(x, y + 1, 0, t + 1) * M(x - 2, y, 1, t + 1);
}

bool x1_decomposition_check(long y, long z, long t) {
    if (y < 1 || z < 0 || t < 0)
        throw parameter_error("x1_decomposition_check: y >= 1 and z,t >= 0 required");
    Count hs = count_shifted_staircase(y, 1);
    Count sum = 0;
    for (long lstar = 1; lstar <= z + 1; ++lstar) {
        std::vector<long> sv;
        for (long l = 1; l <= z + 1; ++l)
            if (l != lstar) sv.push_back(t + l);
        sum += count_quartered_hexagon(t + 1, sv);
    }
    return hs * sum == count_flashlight_formula({1, y, z, t});
}

Y0Report conjecture_y0_check(long x, long z, long t, const MatchBudget& budget) {
    if (x < 0 || z < 0 || t < 0)
        throw parameter_error("conjecture_y0_check: nonnegative parameters required");
    FlashlightParams p{x, 0, z, t};
    Count lhs = count_tilings(build_flashlight(p), budget);
    Count rhs = count_flashlight_formula(p);
    return {lhs, rhs, lhs == rhs};
}

}  // namespace tilecount
