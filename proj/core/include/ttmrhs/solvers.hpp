#pragma once

#include <cstddef>
#include <vector>

#include "ttmrhs/types.hpp"

namespace ttmrhs {

/// Pivots of a pivot-free elimination of a tridiagonal Toeplitz matrix.
///
/// Scalar mode stores the Thomas pivots s_1..s_n. Block mode partitions
/// the matrix into 2x2 diagonal blocks (one trailing 1x1 block when the
/// order is odd). Every 2x2 pivot block has the form [[p_k, sup], [sub, diag]]
/// so only p_k is stored, followed by the trailing scalar pivot if present.
struct PivotFactorization {
    enum class Mode { scalar, block2x2 };

    std::size_t order = 0;
    Mode mode = Mode::scalar;
    std::vector<double> pivots;
};

/// |pivot| (or |det| of a pivot block) at or below this value is treated as
/// breakdown: 1e-300 * max(1, |diag| + |sub| + |sup|).
[[nodiscard]] double singularity_threshold(const TridiagToeplitz& t);

/// Thomas pivots s_1 = diag, s_k = diag - sub * sup / s_{k-1}. Throws ZeroPivot.
[[nodiscard]] PivotFactorization factor_scalar(const TridiagToeplitz& t);
/// 2x2 block pivots. Throws SingularPivotBlock.
[[nodiscard]] PivotFactorization factor_block(const TridiagToeplitz& t);

/// Scalar LU (Thomas algorithm), O(order * cols). Throws ZeroPivot.
[[nodiscard]] DenseMatrix thomas_solve(const TridiagToeplitz& t, const DenseMatrix& rhs);

/// Exact 2x2 block LU with block back substitution, O(order * cols).
/// Handles zero diagonals as long as the pivot blocks stay nonsingular.
/// Throws SingularPivotBlock.
[[nodiscard]] DenseMatrix block_lu_solve(const TridiagToeplitz& t, const DenseMatrix& rhs);

/// Solves T^T Y = rhs (block_lu_solve on the band-swapped matrix).
[[nodiscard]] DenseMatrix solve_transpose(const TridiagToeplitz& t, const DenseMatrix& rhs);

/// Row-cycled 2x2 block solver. The first equation is moved to the bottom,
/// which turns the leading (order-1)x(order-1) block into an upper
/// triangular Toeplitz matrix with `sub` on its diagonal:
///
///   [ U   c ] [x_head]   [b_2..b_n]
///   [ r^T a ] [x_n   ] = [b_1     ]
///
/// U is handled by back substitution and x_n by the scalar Schur complement
/// a - r^T U^{-1} c. Cheap and exact in exact arithmetic, but the back
/// substitution recurrence amplifies rounding by the ratio of the roots of
/// sub + diag z + sup z^2, so it is only accurate for subdiagonally dominant
/// matrices. Throws SingularPivotBlock(1) when sub is zero and
/// SingularPivotBlock(2) when the Schur complement vanishes.
[[nodiscard]] DenseMatrix row_cycled_solve(const TridiagToeplitz& t, const DenseMatrix& rhs);

/// Gaussian elimination with partial pivoting. Reference solver for tests
/// and for the small capacitance systems. Throws SingularMatrix.
[[nodiscard]] DenseMatrix dense_gepp_solve(const DenseMatrix& a, const DenseMatrix& rhs);

/// a^{-1} by GEPP against the identity.
[[nodiscard]] DenseMatrix dense_inverse(const DenseMatrix& a);

/// ||a||_1 * ||a^{-1}||_1. Throws SingularMatrix.
[[nodiscard]] double condition_1norm(const DenseMatrix& a);

}  // namespace ttmrhs
