#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "ttmrhs/smw.hpp"
#include "ttmrhs/types.hpp"

namespace ttmrhs {

enum class Method { alg1, columnwise, dense_oracle };

[[nodiscard]] std::string_view to_string(Method m);

/// Matrix norm used for ||B - T X|| / ||B||.
enum class ResidualNorm { frobenius, spectral };

[[nodiscard]] std::string_view to_string(ResidualNorm r);

struct SolveReport {
    Method method = Method::alg1;
    std::size_t n = 0;
    std::size_t m = 0;
    double relative_residual = 0.0;
    double time_mean_s = 0.0;
    std::size_t reps = 1;
    std::optional<double> capacitance_condition;
};

/// m independent order-n solves, one block_lu_solve per column.
[[nodiscard]] DenseMatrix columnwise_solve(const TridiagToeplitz& t, const DenseMatrix& b);

/// GEPP on the dense assembly of T.
[[nodiscard]] DenseMatrix dense_oracle_solve(const TridiagToeplitz& t, const DenseMatrix& b);

struct MethodResult {
    DenseMatrix x;
    std::optional<SolveDiagnostics> diagnostics;  // alg1 only
};

/// Runs `method` on T X = B. `options` applies to alg1 only.
[[nodiscard]] MethodResult run_method(Method method, const TridiagToeplitz& t,
                                      const DenseMatrix& b, const SolveOptions& options = {});

[[nodiscard]] double frobenius_norm(const DenseMatrix& a);
/// Largest singular value, from the eigenvalues of the smaller Gram matrix.
[[nodiscard]] double spectral_norm(const DenseMatrix& a);

/// ||B - T X|| / ||B||. Throws DegenerateRHS when ||B|| == 0.
[[nodiscard]] double relative_residual(const TridiagToeplitz& t, const DenseMatrix& x,
                                       const DenseMatrix& b,
                                       ResidualNorm norm = ResidualNorm::frobenius);

struct TimingStats {
    double mean_s = 0.0;
    std::vector<double> samples_s;
};

/// Runs `task` `reps` times back to back on a monotonic clock and reports the
/// arithmetic mean. No warm-up run is discarded.
template <class Task>
TimingStats timed_run(Task&& task, std::size_t reps = 10) {
    using clock = std::chrono::steady_clock;
    TimingStats stats;
    if (reps == 0) throw std::invalid_argument("timed_run: reps must be >= 1");
    stats.samples_s.reserve(reps);
    double total = 0.0;
    for (std::size_t r = 0; r < reps; ++r) {
        const auto start = clock::now();
        task();
        const std::chrono::duration<double> elapsed = clock::now() - start;
        stats.samples_s.push_back(elapsed.count());
        total += elapsed.count();
    }
    stats.mean_s = total / static_cast<double>(reps);
    return stats;
}

}  // namespace ttmrhs
