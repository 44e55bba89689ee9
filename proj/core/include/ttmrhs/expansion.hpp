#pragma once

#include <cstddef>
#include <vector>

#include "ttmrhs/types.hpp"

namespace ttmrhs {

/// Entry position in the lifted (m*n) x (m*n) matrix. 1-based, as in reports.
struct Position {
    std::size_t row = 0;
    std::size_t col = 0;

    friend bool operator==(const Position&, const Position&) = default;
};

/// One seam between diagonal blocks j and j+1 of I_m (x) T. Filling the two
/// zeros at the seam with `sup` and `sub` joins the blocks into one band.
struct JunctionCorrection {
    std::size_t j = 0;        // 1..m-1
    Position sup_pos;         // (j*n, j*n + 1)
    double sup_value = 0.0;
    Position sub_pos;         // (j*n + 1, j*n)
    double sub_value = 0.0;
};

/// Lifted system: ahat is the full tridiagonal Toeplitz matrix of order m*n
/// and ahat = I_m (x) T + sum of corrections.
struct ExpandedSystem {
    TridiagToeplitz ahat;
    std::vector<JunctionCorrection> corrections;
    std::size_t n = 0;
    std::size_t m = 0;
};

/// Seam corrections for j = 1..m-1 (values left at zero).
[[nodiscard]] std::vector<JunctionCorrection> junction_indices(std::size_t n, std::size_t m);

/// Lift of T X = B with m right-hand sides. Throws std::invalid_argument when m == 0.
[[nodiscard]] ExpandedSystem expand(const TridiagToeplitz& t, std::size_t m);

/// Upper bound on m * order accepted by assemble_kron_dense.
inline constexpr std::size_t kDenseLiftLimit = 2048;

/// Dense I_m (x) T. Test-scale only; throws std::length_error past kDenseLiftLimit.
[[nodiscard]] DenseMatrix assemble_kron_dense(const TridiagToeplitz& t, std::size_t m);

/// Adds every correction of `sys` into the dense matrix `a` (of order m*n).
void add_corrections(const ExpandedSystem& sys, DenseMatrix& a);

}  // namespace ttmrhs
