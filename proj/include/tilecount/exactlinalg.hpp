#ifndef TILECOUNT_EXACTLINALG_HPP
#define TILECOUNT_EXACTLINALG_HPP

#include <vector>

#include "tilecount/ppcore.hpp"
#include "tilecount/qpoly.hpp"
#include "tilecount/shapes.hpp"

namespace tilecount {

template <class R>
using SquareMatrix = std::vector<std::vector<R>>;

// Fraction-free (Bareiss) elimination; exact over any integral domain with
// exact division. Works for Integer and QPoly entries.
Integer det_exact(SquareMatrix<Integer> a);
QPoly det_exact(SquareMatrix<QPoly> a);

// Pfaffian by expansion along the first row of the remaining submatrix.
// Requires a skew-symmetric matrix of even dimension (0x0 gives 1).
Integer pfaffian_exact(const SquareMatrix<Integer>& a);

// Matrix of the determinantal plane partition count: (i,j) entry
// binom(lambda_i + m, i - j + m).
SquareMatrix<Integer> pp_det_matrix(const Partition& lam, long m);
// q-analog: q^{f(i,j)} * qbinom(lambda_i + m, i - j + m) with
// f(i,j) = C(j-i,2) for j > i and C(i-j+1,2) otherwise.
SquareMatrix<QPoly> pp_det_matrix_q(const Partition& lam, long m);

Count count_pp_det(const Partition& lam, long m);
QPoly count_pp_det_q(const Partition& lam, long m);

// Skew-symmetric matrix of the shifted count (double sum of 2x2 binomial
// differences over 0 <= k <= l <= m+n-1); lam is padded with a zero part
// when its length is odd.
SquareMatrix<Integer> spp_pf_matrix(const StrictPartition& lam, long m);
Count count_spp_pf(const StrictPartition& lam, long m);

}  // namespace tilecount

#endif
