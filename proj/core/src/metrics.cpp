#include "ttmrhs/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ttmrhs/errors.hpp"
#include "ttmrhs/solvers.hpp"

namespace ttmrhs {

std::string_view to_string(Method m) {
    switch (m) {
        case Method::alg1: return "alg1";
        case Method::columnwise: return "columnwise";
        case Method::dense_oracle: return "dense";
    }
    return "?";
}

std::string_view to_string(ResidualNorm r) {
    return r == ResidualNorm::frobenius ? "fro" : "spectral";
}

DenseMatrix columnwise_solve(const TridiagToeplitz& t, const DenseMatrix& b) {
    if (b.rows() != t.order) throw DimensionMismatch("columnwise_solve: row count mismatch");
    DenseMatrix x(b.rows(), b.cols());
    DenseMatrix column(b.rows(), 1);
    for (std::size_t j = 0; j < b.cols(); ++j) {
        std::ranges::copy(b.col(j), column.col(0).begin());
        const DenseMatrix sol = block_lu_solve(t, column);
        std::ranges::copy(sol.col(0), x.col(j).begin());
    }
    return x;
}

DenseMatrix dense_oracle_solve(const TridiagToeplitz& t, const DenseMatrix& b) {
    return dense_gepp_solve(assemble_dense(t), b);
}

MethodResult run_method(Method method, const TridiagToeplitz& t, const DenseMatrix& b,
                        const SolveOptions& options) {
    switch (method) {
        case Method::alg1: {
            auto out = solve_mrhs(t, b, options);
            return {std::move(out.x), out.diagnostics};
        }
        case Method::columnwise: return {columnwise_solve(t, b), std::nullopt};
        case Method::dense_oracle: return {dense_oracle_solve(t, b), std::nullopt};
    }
    throw std::invalid_argument("unknown method");
}

double frobenius_norm(const DenseMatrix& a) {
    double scale = 0.0;
    for (double v : a.data()) scale = std::max(scale, std::abs(v));
    if (scale == 0.0 || !std::isfinite(scale)) return scale;
    double sum = 0.0;
    for (double v : a.data()) {
        const double r = v / scale;
        sum += r * r;
    }
    return scale * std::sqrt(sum);
}

namespace {

// Largest eigenvalue of a symmetric matrix by cyclic Jacobi rotations.
double largest_symmetric_eigenvalue(DenseMatrix g) {
    const std::size_t n = g.rows();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        double diag = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            diag += g(j, j) * g(j, j);
            for (std::size_t i = 0; i < j; ++i) off += g(i, j) * g(i, j);
        }
        if (off <= 1e-30 * diag || off == 0.0) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = g(p, q);
                if (apq == 0.0) continue;
                const double theta = (g(q, q) - g(p, p)) / (2.0 * apq);
                const double tn = std::copysign(1.0, theta) /
                                  (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(tn * tn + 1.0);
                const double s = tn * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double gkp = g(k, p);
                    const double gkq = g(k, q);
                    g(k, p) = c * gkp - s * gkq;
                    g(k, q) = s * gkp + c * gkq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double gpk = g(p, k);
                    const double gqk = g(q, k);
                    g(p, k) = c * gpk - s * gqk;
                    g(q, k) = s * gpk + c * gqk;
                }
            }
        }
    }
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) best = std::max(best, g(i, i));
    return best;
}

}  // namespace

double spectral_norm(const DenseMatrix& a) {
    double scale = 0.0;
    for (double v : a.data()) scale = std::max(scale, std::abs(v));
    if (scale == 0.0 || !std::isfinite(scale)) return scale;

    const bool tall = a.rows() >= a.cols();
    const std::size_t k = tall ? a.cols() : a.rows();
    const std::size_t inner = tall ? a.rows() : a.cols();
    auto at = [&](std::size_t outer, std::size_t i) {
        return (tall ? a(i, outer) : a(outer, i)) / scale;
    };
    DenseMatrix gram(k, k);
    for (std::size_t p = 0; p < k; ++p)
        for (std::size_t q = 0; q <= p; ++q) {
            double s = 0.0;
            for (std::size_t i = 0; i < inner; ++i) s += at(p, i) * at(q, i);
            gram(p, q) = s;
            gram(q, p) = s;
        }
    return scale * std::sqrt(std::max(0.0, largest_symmetric_eigenvalue(std::move(gram))));
}

double relative_residual(const TridiagToeplitz& t, const DenseMatrix& x, const DenseMatrix& b,
                         ResidualNorm norm) {
    if (x.rows() != b.rows() || x.cols() != b.cols()) {
        throw DimensionMismatch("relative_residual: X and B shapes differ");
    }
    const DenseMatrix tx = tt_apply(t, x);
    DenseMatrix r(b.rows(), b.cols());
    for (std::size_t i = 0; i < r.size(); ++i) r.data()[i] = b.data()[i] - tx.data()[i];
    const auto measure = norm == ResidualNorm::frobenius ? frobenius_norm : spectral_norm;
    const double denom = measure(b);
    if (denom == 0.0) throw DegenerateRHS();
    return measure(r) / denom;
}

}  // namespace ttmrhs
