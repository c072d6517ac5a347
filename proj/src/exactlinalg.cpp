#include "tilecount/exactlinalg.hpp"

namespace tilecount {

namespace {

bool ring_zero(const Integer& x) { return x == 0; }
bool ring_zero(const QPoly& x) { return x.is_zero(); }

Integer ring_divexact(const Integer& a, const Integer& b) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}
QPoly ring_divexact(const QPoly& a, const QPoly& b) { return a.divexact(b); }

template <class R>
R det_bareiss(SquareMatrix<R> a) {
    const int n = static_cast<int>(a.size());
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n)
            throw parameter_error("det_exact: matrix must be square");
    if (n == 0) return R(1);
    R prev = R(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (ring_zero(a[k][k])) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (!ring_zero(a[r][k])) { piv = r; break; }
            if (piv < 0) return R(0);
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                R num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = ring_divexact(num, prev);
            }
            a[i][k] = R(0);
        }
        prev = a[k][k];
    }
    R d = a[n - 1][n - 1];
    if (sign < 0) d = R(0) - d;
    return d;
}

}  // namespace

Integer det_exact(SquareMatrix<Integer> a) { return det_bareiss(std::move(a)); }
QPoly det_exact(SquareMatrix<QPoly> a) { return det_bareiss(std::move(a)); }

Integer pfaffian_exact(const SquareMatrix<Integer>& a) {
    const int n = static_cast<int>(a.size());
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n)
            throw parameter_error("pfaffian_exact: matrix must be square");
    if (n % 2 != 0) throw parameter_error("pfaffian_exact: dimension must be even");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (a[i][j] != -a[j][i])
                throw parameter_error("pfaffian_exact: matrix is not skew-symmetric");

    // expansion over subsets of active indices
    std::vector<int> idx(static_cast<size_t>(n));
    auto rec = [&](auto&& self, std::vector<int> act) -> Integer {
        if (act.empty()) return 1;
        Integer sum = 0;
        int i0 = act[0];
        for (size_t p = 1; p < act.size(); ++p) {
            if (a[i0][act[p]] == 0) continue;
            std::vector<int> rest;
            rest.reserve(act.size() - 2);
            for (size_t q = 1; q < act.size(); ++q)
                if (q != p) rest.push_back(act[q]);
            Integer term = a[i0][act[p]] * self(self, std::move(rest));
            if (p % 2 == 1)
                sum += term;
            else
                sum -= term;
        }
        return sum;
    };
    std::vector<int> all(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<size_t>(i)] = i;
    return rec(rec, all);
}

SquareMatrix<Integer> pp_det_matrix(const Partition& lam, long m) {
    const int n = lam.rows();
    SquareMatrix<Integer> a(static_cast<size_t>(n),
                            std::vector<Integer>(static_cast<size_t>(n)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            a[i - 1][j - 1] = binom_int(lam.part(i) + m, i - j + m);
    return a;
}

SquareMatrix<QPoly> pp_det_matrix_q(const Partition& lam, long m) {
    const int n = lam.rows();
    SquareMatrix<QPoly> a(static_cast<size_t>(n),
                          std::vector<QPoly>(static_cast<size_t>(n)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            long f = (j > i) ? to_integer(binom_ext(j - i, 2)).get_si()
                             : to_integer(binom_ext(i - j + 1, 2)).get_si();
            QPoly e = q_binom(lam.part(i) + m, i - j + m);
            a[i - 1][j - 1] = QPoly::monomial(Integer(1), static_cast<int>(f)) * e;
        }
    return a;
}

Count count_pp_det(const Partition& lam, long m) {
    if (m < 0) throw parameter_error("count_pp_det: m >= 0 required");
    if (lam.rows() == 0) return 1;
    Integer d = det_exact(pp_det_matrix(lam, m));
    if (d < 0) throw parameter_error("count_pp_det: negative determinant");
    return d;
}

QPoly count_pp_det_q(const Partition& lam, long m) {
    if (m < 0) throw parameter_error("count_pp_det_q: m >= 0 required");
    if (lam.rows() == 0) return QPoly::one();
    return det_exact(pp_det_matrix_q(lam, m));
}

SquareMatrix<Integer> spp_pf_matrix(const StrictPartition& lam, long m) {
    int n = lam.rows();
    std::vector<long> parts(lam.parts().begin(), lam.parts().end());
    if (n % 2 != 0) {
        parts.push_back(0);  // lambda_n := 0
        ++n;
    }
    const long K = m + n - 1;
    // A[i][e] = binom(lambda_i - 1 + m + i - 1 - e, m + i - 1 - e); the
    // b = 0 case yields binom(-1, 0) = 1 for padded zero parts.
    std::vector<std::vector<Integer>> A(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        A[i - 1].resize(static_cast<size_t>(K) + 1);
        for (long e = 0; e <= K; ++e)
            A[i - 1][static_cast<size_t>(e)] =
                binom_int(parts[i - 1] - 1 + m + i - 1 - e, m + i - 1 - e);
    }
    SquareMatrix<Integer> M(static_cast<size_t>(n),
                            std::vector<Integer>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            // sum_{0<=k<l<=K} [A_i(k)A_j(l) - A_i(l)A_j(k)] via prefix sums
            Integer sum = 0, pre_i = 0, pre_j = 0;
            for (long l = 0; l <= K; ++l) {
                if (l > 0) {
                    pre_i += A[i][static_cast<size_t>(l - 1)];
                    pre_j += A[j][static_cast<size_t>(l - 1)];
                    sum += pre_i * A[j][static_cast<size_t>(l)] -
                           A[i][static_cast<size_t>(l)] * pre_j;
                }
            }
            M[static_cast<size_t>(i)][static_cast<size_t>(j)] = sum;
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (M[i][j] != -M[j][i])
                throw parameter_error("spp_pf_matrix: built matrix is not skew-symmetric");
    return M;
}

Count count_spp_pf(const StrictPartition& lam, long m) {
    if (m < 0) throw parameter_error("count_spp_pf: m >= 0 required");
    if (lam.rows() == 0) return 1;
    Integer pf = pfaffian_exact(spp_pf_matrix(lam, m));
    if (pf < 0) throw parameter_error("count_spp_pf: negative Pfaffian");
    return pf;
}

}  // namespace tilecount
