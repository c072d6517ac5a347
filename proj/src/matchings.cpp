#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "tilecount/lattice.hpp"

namespace tilecount {

namespace {

void check_budget(const DualGraph& g, const MatchBudget& budget) {
    if (g.n() > budget.triangle_budget)
        throw resource_error("matching counter: " + std::to_string(g.n()) +
                             " triangles exceed the triangle budget of " +
                             std::to_string(budget.triangle_budget));
}

int max_edge_span(const DualGraph& g) {
    int span = 0;
    for (int i = 0; i < g.n(); ++i)
        for (int j : g.neighbors(i)) span = std::max(span, j - i);
    return span;
}

}  // namespace

// Counts matchings covering every non-free vertex by sweeping the
// column-major vertex order. The state is the set of already-covered
// vertices within a 64-wide window ahead of the lowest uncovered index;
// edges never span more than a couple of column heights, so this works for
// any region the budget admits.
Count count_matchings_free(const DualGraph& g, const MatchBudget& budget) {
    check_budget(g, budget);
    const int n = g.n();
    if (n == 0) return 1;
    if (max_edge_span(g) >= 64)
        throw resource_error("matching counter: adjacency window exceeds 64 columns");

    std::vector<std::unordered_map<std::uint64_t, Count>> memo(static_cast<size_t>(n));
    auto rec = [&](auto&& self, int i, std::uint64_t w) -> Count {
        while (i < n && (w & 1)) {
            ++i;
            w >>= 1;
        }
        if (i == n) return 1;
        auto& table = memo[static_cast<size_t>(i)];
        auto it = table.find(w);
        if (it != table.end()) return it->second;
        Count total = 0;
        if (g.is_free(i)) total += self(self, i + 1, w >> 1);
        for (int j : g.neighbors(i)) {
            if (j < i) continue;  // earlier vertices are already covered
            std::uint64_t bit = 1ull << (j - i);
            if (w & bit) continue;
            total += self(self, i + 1, (w | bit) >> 1);
        }
        table.emplace(w, total);
        return total;
    };
    return rec(rec, 0, 0);
}

Count count_tilings(const Region& r, const MatchBudget& budget) {
    return count_matchings_free(DualGraph(r), budget);
}

std::vector<Tiling> enumerate_tilings(const Region& r, const MatchBudget& budget) {
    DualGraph g(r);
    check_budget(g, budget);
    const int n = g.n();
    std::vector<Tiling> out;
    std::vector<int> mate(static_cast<size_t>(n), -1);  // -1 open, -2 skipped
    auto emit = [&]() {
        if (static_cast<long>(out.size()) >= budget.enum_cap)
            throw resource_error("enumerate_tilings: more than " +
                                 std::to_string(budget.enum_cap) + " tilings");
        Tiling t;
        for (int i = 0; i < n; ++i) {
            if (mate[static_cast<size_t>(i)] > i) {
                Tri a = g.tri(i), b = g.tri(mate[static_cast<size_t>(i)]);
                if (b < a) std::swap(a, b);
                t.lozenges.push_back({a, b});
            } else if (mate[static_cast<size_t>(i)] == -2) {
                t.uncovered.push_back(g.tri(i));
            }
        }
        std::sort(t.lozenges.begin(), t.lozenges.end());
        std::sort(t.uncovered.begin(), t.uncovered.end());
        out.push_back(std::move(t));
    };
    auto rec = [&](auto&& self, int i) -> void {
        while (i < n && mate[static_cast<size_t>(i)] != -1) ++i;
        if (i == n) {
            emit();
            return;
        }
        for (int j : g.neighbors(i)) {
            if (j < i || mate[static_cast<size_t>(j)] != -1) continue;
            mate[static_cast<size_t>(i)] = j;
            mate[static_cast<size_t>(j)] = i;
            self(self, i + 1);
            mate[static_cast<size_t>(i)] = -1;
            mate[static_cast<size_t>(j)] = -1;
        }
        if (g.is_free(i)) {
            mate[static_cast<size_t>(i)] = -2;
            self(self, i + 1);
            mate[static_cast<size_t>(i)] = -1;
        }
    };
    rec(rec, 0);
    return out;
}

ForcedReduction reduce_forced(const DualGraph& g) {
    const int n = g.n();
    std::vector<char> alive(static_cast<size_t>(n), 1);
    std::vector<std::pair<Tri, Tri>> forced;
    bool progress = true;
    while (progress) {
        progress = false;
        for (int i = 0; i < n; ++i) {
            if (!alive[static_cast<size_t>(i)] || g.is_free(i)) continue;
            int deg = 0, last = -1;
            for (int j : g.neighbors(i))
                if (alive[static_cast<size_t>(j)]) {
                    ++deg;
                    last = j;
                }
            if (deg == 1) {
                Tri a = g.tri(i), b = g.tri(last);
                if (b < a) std::swap(a, b);
                forced.push_back({a, b});
                alive[static_cast<size_t>(i)] = 0;
                alive[static_cast<size_t>(last)] = 0;
                progress = true;
            }
        }
    }
    std::vector<Tri> dead;
    for (int i = 0; i < n; ++i)
        if (!alive[static_cast<size_t>(i)]) dead.push_back(g.tri(i));
    std::sort(forced.begin(), forced.end());
    return {g.remove(dead), std::move(forced)};
}

}  // namespace tilecount
