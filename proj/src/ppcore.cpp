#include "tilecount/ppcore.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tilecount {

Integer PlanePartition::size() const {
    Integer s = 0;
    for (const auto& r : rows)
        for (int v : r) s += v;
    return s;
}

bool PlanePartition::is_square() const {
    if (shape_is_shifted(shape)) return false;
    const auto& p = std::get<Partition>(shape);
    return p.rows() == p.cols();
}

std::optional<Integer> PlanePartition::half_size() const {
    if (!is_square()) return std::nullopt;
    Integer s = 0;
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = i; j < rows[i].size(); ++j) s += rows[i][j];
    return s;
}

int PlanePartition::entry(int i, int j) const {
    if (i < 1 || i > static_cast<int>(rows.size())) return 0;
    int j0 = shape_is_shifted(shape) ? i : 1;  // column of the first cell in row i
    int idx = j - j0;
    const auto& r = rows[static_cast<size_t>(i - 1)];
    if (idx < 0 || idx >= static_cast<int>(r.size())) return 0;
    return r[static_cast<size_t>(idx)];
}

bool PlanePartition::valid() const {
    bool shifted = shape_is_shifted(shape);
    int nrows = std::visit([](const auto& p) { return p.rows(); }, shape);
    if (static_cast<int>(rows.size()) != nrows) return false;
    for (int i = 1; i <= nrows; ++i) {
        int len = std::visit([&](const auto& p) { return p.part(i); }, shape);
        const auto& r = rows[static_cast<size_t>(i - 1)];
        if (static_cast<int>(r.size()) != len) return false;
        for (int v : r)
            if (v < 0 || v > bound) return false;
        for (size_t j = 1; j < r.size(); ++j)
            if (r[j - 1] < r[j]) return false;
        if (i > 1) {
            // column comparisons in absolute diagram coordinates
            int j0 = shifted ? i : 1;
            for (int j = j0; j < j0 + len; ++j) {
                int above_first = shifted ? i - 1 : 1;
                int above_len = std::visit([&](const auto& p) { return p.part(i - 1); }, shape);
                if (j >= above_first && j < above_first + above_len) {
                    if (entry(i - 1, j) < entry(i, j)) return false;
                }
            }
        }
    }
    return true;
}

std::string PlanePartition::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i) os << " / ";
        for (size_t j = 0; j < rows[i].size(); ++j) {
            if (j) os << " ";
            os << rows[i][j];
        }
    }
    return os.str();
}

bool PlanePartition::operator==(const PlanePartition& o) const {
    return rows == o.rows && bound == o.bound;
}

bool PlanePartition::operator<(const PlanePartition& o) const {
    return rows < o.rows;
}

namespace {

EnumCells make_cells_impl(const std::vector<int>& len, const std::vector<int>& first_col,
                          int m) {
    EnumCells g;
    g.m = m;
    // cell index by (row, absolute column) for the above-neighbor lookup
    std::map<std::pair<int, int>, int> idx;
    int n = 0;
    for (size_t i = 0; i < len.size(); ++i) {
        g.row_start.push_back(n);
        for (int c = 0; c < len[i]; ++c) {
            int col = first_col[i] + c;
            g.left.push_back(c > 0 ? n - 1 : -1);
            int above = -1;
            if (i > 0) {
                auto it = idx.find({static_cast<int>(i) - 1, col});
                if (it != idx.end()) above = it->second;
            }
            g.above.push_back(above);
            idx[{static_cast<int>(i), col}] = n;
            ++n;
        }
    }
    return g;
}

}  // namespace

EnumCells make_cells(const Partition& shape, int m) {
    std::vector<int> len(shape.parts().begin(), shape.parts().end());
    std::vector<int> first(len.size(), 1);
    return make_cells_impl(len, first, m);
}

EnumCells make_cells(const StrictPartition& shape, int m) {
    std::vector<int> len(shape.parts().begin(), shape.parts().end());
    std::vector<int> first(len.size());
    for (size_t i = 0; i < len.size(); ++i) first[i] = static_cast<int>(i) + 1;
    return make_cells_impl(len, first, m);
}

Count count_fillings(const EnumCells& g) {
    const int n = static_cast<int>(g.left.size());
    if (g.m < 0) return 0;
    if (n == 0) return 1;
    std::vector<int> vals(static_cast<size_t>(n), 0);
    long long local = 0;  // batched into the bignum to keep the hot loop cheap
    Count total = 0;
    auto flush = [&]() {
        total += local;
        local = 0;
    };
    auto rec = [&](auto&& self, int k) -> void {
        int ub = g.m;
        if (g.left[k] >= 0) ub = std::min(ub, vals[g.left[k]]);
        if (g.above[k] >= 0) ub = std::min(ub, vals[g.above[k]]);
        if (k == n - 1) {
            local += ub + 1;
            if (local > (1LL << 60)) flush();
            return;
        }
        for (int v = 0; v <= ub; ++v) {
            vals[static_cast<size_t>(k)] = v;
            self(self, k + 1);
        }
    };
    rec(rec, 0);
    flush();
    return total;
}

namespace {

template <class ShapeT>
std::vector<PlanePartition> enumerate_impl(const ShapeT& shape, int m) {
    EnumCells g = make_cells(shape, m);
    std::vector<PlanePartition> out;
    for_each_filling(g, [&](const std::vector<int>& vals) {
        PlanePartition pp;
        pp.shape = shape;
        pp.bound = m;
        const auto& parts = shape.parts();
        size_t pos = 0;
        for (int len : parts) {
            pp.rows.emplace_back(vals.begin() + pos, vals.begin() + pos + len);
            pos += static_cast<size_t>(len);
        }
        out.push_back(std::move(pp));
    });
    if (out.empty()) {
        PlanePartition empty;
        empty.shape = shape;
        empty.bound = m;
        out.push_back(std::move(empty));
    }
    return out;
}

}  // namespace

std::vector<PlanePartition> enumerate_pp(const Partition& shape, int m) {
    return enumerate_impl(shape, m);
}

std::vector<PlanePartition> enumerate_spp(const StrictPartition& shape, int m) {
    return enumerate_impl(shape, m);
}

Count count_pp(const Partition& shape, int m) { return count_fillings(make_cells(shape, m)); }

Count count_spp(const StrictPartition& shape, int m) {
    return count_fillings(make_cells(shape, m));
}

PlanePartition transpose(const PlanePartition& pi) {
    if (shape_is_shifted(pi.shape))
        throw parameter_error("transpose: defined for unshifted self-conjugate shapes");
    const auto& p = std::get<Partition>(pi.shape);
    if (!p.self_conjugate())
        throw parameter_error("transpose: shape " + p.str() + " is not self-conjugate");
    PlanePartition out;
    out.shape = pi.shape;
    out.bound = pi.bound;
    for (int i = 1; i <= p.rows(); ++i) {
        std::vector<int> row;
        for (int j = 1; j <= p.part(i); ++j) row.push_back(pi.entry(j, i));
        out.rows.push_back(std::move(row));
    }
    return out;
}

PlanePartition complement(const PlanePartition& pi) {
    if (shape_is_shifted(pi.shape))
        throw parameter_error("complement: defined for rectangle shapes");
    const auto& p = std::get<Partition>(pi.shape);
    int a = p.rows(), b = p.cols();
    for (int i = 1; i <= a; ++i)
        if (p.part(i) != b)
            throw parameter_error("complement: shape " + p.str() + " is not a rectangle");
    PlanePartition out;
    out.shape = pi.shape;
    out.bound = pi.bound;
    for (int i = 1; i <= a; ++i) {
        std::vector<int> row;
        for (int j = 1; j <= b; ++j)
            row.push_back(pi.bound - pi.entry(a + 1 - i, b + 1 - j));
        out.rows.push_back(std::move(row));
    }
    return out;
}

bool is_symmetric(const PlanePartition& pi) { return transpose(pi) == pi; }

std::vector<PlanePartition> enumerate_symmetry_class(SymmetryClass cls, int n, int m) {
    Partition square(std::vector<int>(static_cast<size_t>(n), n));
    std::vector<PlanePartition> out;
    for (const auto& pi : enumerate_pp(square, m)) {
        bool keep = false;
        switch (cls) {
        case SymmetryClass::all: keep = true; break;
        case SymmetryClass::symmetric: keep = transpose(pi) == pi; break;
        case SymmetryClass::transpose_complementary:
            keep = transpose(pi) == complement(pi);
            break;
        case SymmetryClass::symmetric_self_complementary:
            keep = transpose(pi) == pi && complement(pi) == pi;
            break;
        }
        if (keep) out.push_back(pi);
    }
    return out;
}

Count count_symmetry_class(SymmetryClass cls, int n, int m) {
    if (n < 0 || m < 0) throw parameter_error("count_symmetry_class: n,m >= 0 required");
    if (n == 0) return 1;
    return Count(enumerate_symmetry_class(cls, n, m).size());
}

QPoly gen_function(const std::vector<PlanePartition>& stream, Weight w) {
    std::vector<Integer> coeffs;
    for (const auto& pi : stream) {
        Integer wt;
        if (w == Weight::size) {
            wt = pi.size();
        } else {
            auto h = pi.half_size();
            if (!h)
                throw parameter_error("gen_function: half_size needs a square shape");
            wt = *h;
        }
        unsigned long e = wt.get_ui();
        if (coeffs.size() <= e) coeffs.resize(e + 1, Integer(0));
        coeffs[e] += 1;
    }
    return QPoly::from_coeffs(std::move(coeffs));
}

}  // namespace tilecount
