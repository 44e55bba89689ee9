#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ttmrhs/metrics.hpp"

namespace ttmrhs::cli {

enum class ExitCode : int { ok = 0, usage = 2, breakdown = 3 };

enum class Example { grcar, symbol021, custom };

/// One cell of a benchmark table. `failure` holds the error name when the
/// solve broke down; the residual column then reads FAIL(<name>).
struct BenchRow {
    Example example = Example::custom;
    std::size_t n = 0;
    std::size_t m = 0;
    Method method = Method::alg1;
    double relative_residual = 0.0;
    std::optional<std::string> failure;
    double time_mean_s = 0.0;
    std::size_t reps = 10;
};

struct BenchConfig {
    Example example = Example::grcar;
    double sub = 0.0;
    double diag = 1.0;
    double sup = 0.0;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (n, m)
    std::vector<Method> methods{Method::alg1};
    std::size_t reps = 10;
    SolveOptions options = reference_options();
    ResidualNorm norm = ResidualNorm::frobenius;
};

/// Runs every (n, m, method) cell with B = ones(n, m). Rows come back sorted
/// by n, then m, then method name. Solver breakdowns become failure rows.
[[nodiscard]] std::vector<BenchRow> run_bench(const BenchConfig& config);

[[nodiscard]] std::string csv_header();
[[nodiscard]] std::string to_csv(const BenchRow& row);
[[nodiscard]] std::string residual_cell(const BenchRow& row);
void write_markdown(const std::vector<BenchRow>& rows, std::ostream& out);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
[[nodiscard]] int run_cli(const std::vector<std::string>& args, std::ostream& out,
                          std::ostream& err);

}  // namespace ttmrhs::cli
