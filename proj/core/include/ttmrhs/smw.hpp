#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "ttmrhs/expansion.hpp"
#include "ttmrhs/types.hpp"

namespace ttmrhs {

/// Toeplitz solver used for the dual solves and the final lifted solve.
enum class InnerSolver {
    block_lu,    ///< exact 2x2 block LU (block_lu_solve)
    row_cycled,  ///< row-cycled 2x2 block partition (row_cycled_solve)
};

/// How Q^{-1} b = b - U M^{-1} V^T b is evaluated.
enum class QinvMode {
    capacitance_solve,  ///< GEPP on M (V^T b); M^{-1} is never formed
    explicit_inverse,   ///< W = M^{-1} V^T is formed first, then applied to b
};

struct SolveOptions {
    InnerSolver inner = InnerSolver::block_lu;
    QinvMode qinv = QinvMode::capacitance_solve;
    bool parallel_dual_solves = false;
};

/// Reference configuration for the benchmark tables: row-cycled inner
/// solves and an explicitly formed M^{-1} V^T.
[[nodiscard]] inline SolveOptions reference_options() {
    return {InnerSolver::row_cycled, QinvMode::explicit_inverse, false};
}

[[nodiscard]] std::string_view to_string(InnerSolver s);
[[nodiscard]] std::string_view to_string(QinvMode q);

/// Dispatches a tridiagonal Toeplitz solve T X = rhs to `solver`.
[[nodiscard]] DenseMatrix inner_solve(InnerSolver solver, const TridiagToeplitz& t,
                                      const DenseMatrix& rhs);

/// Sherman-Morrison-Woodbury factors of Q = I + U V^T, where Q ahat = I_m (x) T.
///
/// There are N = 2(m-1) rank-one terms. u_k has a single nonzero: for seam j,
/// u_{2j-1} = -sup at row j*n and u_{2j} = -sub at row j*n + 1. The matching
/// v columns are the dual solutions y_{jn+1} and y_{jn} of ahat^T y_i = e_i.
/// The capacitance matrix is M = I_N + V^T U.
struct CapacitanceSystem {
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<std::size_t> u_rows;  // 0-based
    std::vector<double> u_values;
    DenseMatrix v;                    // (m*n) x N
    DenseMatrix capacitance;          // N x N

    [[nodiscard]] std::size_t rank() const noexcept { return u_rows.size(); }
};

struct SolveDiagnostics {
    double capacitance_condition = 1.0;  // 1-norm estimate, +inf if singular
    std::size_t transpose_solves = 0;
    std::size_t forward_solves = 0;
};

struct SolveOutcome {
    DenseMatrix x;      // n x m
    ColumnVector phi;   // Q^{-1} vec(B)
    SolveDiagnostics diagnostics;
};

/// Solves ahat^T y = e_i for every seam, columns ordered (y_{jn+1}, y_{jn})
/// for j = 1..m-1. Result is (m*n) x 2(m-1).
[[nodiscard]] DenseMatrix dual_solves(const ExpandedSystem& sys,
                                      InnerSolver solver = InnerSolver::block_lu,
                                      bool parallel = false);

/// Assembles U, V and M from the dual solutions. Each u_k has one nonzero,
/// so M costs O(N^2) scalar reads.
[[nodiscard]] CapacitanceSystem build_capacitance(const ExpandedSystem& sys, DenseMatrix duals);

/// phi = Q^{-1} b. Throws CapacitanceSingular when M cannot be factored.
[[nodiscard]] ColumnVector apply_qinv(const CapacitanceSystem& cap, const ColumnVector& b,
                                      QinvMode mode = QinvMode::capacitance_solve);

/// Multiple right-hand-side solve T X = B through the lifted system:
/// expand, dual solves, capacitance, phi = Q^{-1} vec(B), ahat x = phi, unvec.
[[nodiscard]] SolveOutcome solve_mrhs(const TridiagToeplitz& t, const DenseMatrix& b,
                                      const SolveOptions& options = {});

}  // namespace ttmrhs
