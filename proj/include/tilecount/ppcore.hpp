#ifndef TILECOUNT_PPCORE_HPP
#define TILECOUNT_PPCORE_HPP

#include <functional>
#include <optional>
#include <vector>

#include "tilecount/qpoly.hpp"
#include "tilecount/shapes.hpp"

namespace tilecount {

// A (shifted) plane partition with entries bounded by `bound`. rows[i] holds
// the entries of diagram row i+1 left to right; for shifted shapes row i+1
// starts at column i+1 of the shifted diagram.
struct PlanePartition {
    Shape shape;
    int bound = 0;
    std::vector<std::vector<int>> rows;

    Integer size() const;
    // Sum of the on-or-above-diagonal entries; only defined for square
    // (n x n) shapes.
    std::optional<Integer> half_size() const;
    bool is_square() const;

    // 1-based diagram coordinates (shifted-aware); 0 outside the shape.
    int entry(int i, int j) const;

    // Checks shape bounds, 0 <= entry <= bound and row/column monotonicity.
    bool valid() const;

    std::string str() const;
    bool operator==(const PlanePartition&) const;
    bool operator<(const PlanePartition&) const;  // row-major reading word
};

// Flattened cell grid driving the enumerators: per cell the index of its
// left/above neighbor (-1 when absent). Cells are in row-major order, which
// makes the enumeration order the lexicographic order of the reading word.
struct EnumCells {
    std::vector<int> left;
    std::vector<int> above;
    std::vector<int> row_start;  // first cell index of each row
    int m = 0;
};

EnumCells make_cells(const Partition& shape, int m);
EnumCells make_cells(const StrictPartition& shape, int m);

// Visits every bounded filling exactly once, lexicographically ascending in
// the row-major reading word. `f` receives the flat value vector.
template <class F>
void for_each_filling(const EnumCells& g, F&& f) {
    const int n = static_cast<int>(g.left.size());
    std::vector<int> vals(static_cast<size_t>(n), 0);
    auto rec = [&](auto&& self, int k) -> void {
        if (k == n) {
            f(const_cast<const std::vector<int>&>(vals));
            return;
        }
        int ub = g.m;
        if (g.left[k] >= 0) ub = std::min(ub, vals[g.left[k]]);
        if (g.above[k] >= 0) ub = std::min(ub, vals[g.above[k]]);
        for (int v = 0; v <= ub; ++v) {
            vals[static_cast<size_t>(k)] = v;
            self(self, k + 1);
        }
    };
    rec(rec, 0);
}

// Count-only fast path (same recursion, last cell summed in closed form).
Count count_fillings(const EnumCells& g);

std::vector<PlanePartition> enumerate_pp(const Partition& shape, int m);
std::vector<PlanePartition> enumerate_spp(const StrictPartition& shape, int m);
Count count_pp(const Partition& shape, int m);
Count count_spp(const StrictPartition& shape, int m);

template <class F>
void for_each_pp(const Partition& shape, int m, F&& f) {
    for_each_filling(make_cells(shape, m), std::forward<F>(f));
}
template <class F>
void for_each_spp(const StrictPartition& shape, int m, F&& f) {
    for_each_filling(make_cells(shape, m), std::forward<F>(f));
}

// Reflection across the main diagonal; requires a self-conjugate unshifted
// shape.
PlanePartition transpose(const PlanePartition& pi);
// Co(pi)_{i,j} = m - pi_{a+1-i,b+1-j}; requires a rectangle shape.
PlanePartition complement(const PlanePartition& pi);

bool is_symmetric(const PlanePartition& pi);

enum class SymmetryClass {
    all,
    symmetric,
    transpose_complementary,
    symmetric_self_complementary,
};

Count count_symmetry_class(SymmetryClass cls, int n, int m);
std::vector<PlanePartition> enumerate_symmetry_class(SymmetryClass cls, int n, int m);

enum class Weight { size, half_size };

QPoly gen_function(const std::vector<PlanePartition>& stream, Weight w);

}  // namespace tilecount

#endif
