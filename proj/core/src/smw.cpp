#include "ttmrhs/smw.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>
#include <limits>
#include <string>
#include <thread>

#include "ttmrhs/errors.hpp"
#include "ttmrhs/solvers.hpp"

namespace ttmrhs {

std::string_view to_string(InnerSolver s) {
    switch (s) {
        case InnerSolver::block_lu: return "block-lu";
        case InnerSolver::row_cycled: return "row-cycled";
    }
    return "?";
}

std::string_view to_string(QinvMode q) {
    switch (q) {
        case QinvMode::capacitance_solve: return "solve";
        case QinvMode::explicit_inverse: return "inverse";
    }
    return "?";
}

DenseMatrix inner_solve(InnerSolver solver, const TridiagToeplitz& t, const DenseMatrix& rhs) {
    switch (solver) {
        case InnerSolver::block_lu: return block_lu_solve(t, rhs);
        case InnerSolver::row_cycled: return row_cycled_solve(t, rhs);
    }
    throw std::invalid_argument("unknown inner solver");
}

DenseMatrix dual_solves(const ExpandedSystem& sys, InnerSolver solver, bool parallel) {
    const std::size_t order = sys.ahat.order;
    const std::size_t count = 2 * sys.corrections.size();
    DenseMatrix rhs(order, count);
    for (std::size_t j = 0; j < sys.corrections.size(); ++j) {
        const std::size_t seam = sys.corrections[j].sup_pos.row;  // 1-based j*n
        rhs(seam, 2 * j) = 1.0;          // e_{jn+1}
        rhs(seam - 1, 2 * j + 1) = 1.0;  // e_{jn}
    }
    if (count == 0) return rhs;

    const TridiagToeplitz at = sys.ahat.transposed();
    const std::size_t workers =
        parallel ? std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()))
                 : 1;
    if (workers <= 1) return inner_solve(solver, at, rhs);

    // Column solves are independent; each worker handles a contiguous slice
    // and writes back into its own columns, so the result does not depend on
    // the split.
    DenseMatrix out(order, count);
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        const std::size_t per = (count + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t lo = w * per;
            const std::size_t hi = std::min(count, lo + per);
            if (lo >= hi) break;
            pool.emplace_back([&, w, lo, hi] {
                try {
                    DenseMatrix slice(order, hi - lo);
                    for (std::size_t c = lo; c < hi; ++c)
                        std::ranges::copy(rhs.col(c), slice.col(c - lo).begin());
                    const DenseMatrix y = inner_solve(solver, at, slice);
                    for (std::size_t c = lo; c < hi; ++c)
                        std::ranges::copy(y.col(c - lo), out.col(c).begin());
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

CapacitanceSystem build_capacitance(const ExpandedSystem& sys, DenseMatrix duals) {
    const std::size_t rank = 2 * sys.corrections.size();
    if (duals.cols() != rank || duals.rows() != sys.ahat.order) {
        throw DimensionMismatch("build_capacitance: dual solutions have the wrong shape");
    }
    CapacitanceSystem cap;
    cap.n = sys.n;
    cap.m = sys.m;
    cap.u_rows.reserve(rank);
    cap.u_values.reserve(rank);
    for (const auto& c : sys.corrections) {
        cap.u_rows.push_back(c.sup_pos.row - 1);
        cap.u_values.push_back(-c.sup_value);
        cap.u_rows.push_back(c.sub_pos.row - 1);
        cap.u_values.push_back(-c.sub_value);
    }
    cap.v = std::move(duals);
    cap.capacitance = DenseMatrix::identity(rank);
    for (std::size_t l = 0; l < rank; ++l)
        for (std::size_t k = 0; k < rank; ++k)
            cap.capacitance(k, l) += cap.u_values[l] * cap.v(cap.u_rows[l], k);
    return cap;
}

ColumnVector apply_qinv(const CapacitanceSystem& cap, const ColumnVector& b, QinvMode mode) {
    if (b.len() != cap.v.rows()) throw DimensionMismatch("apply_qinv: vector length mismatch");
    const std::size_t rank = cap.rank();
    ColumnVector phi = b;
    if (rank == 0) return phi;

    const std::size_t len = b.len();
    std::vector<double> w(rank, 0.0);
    try {
        if (mode == QinvMode::capacitance_solve) {
            DenseMatrix vtb(rank, 1);
            for (std::size_t k = 0; k < rank; ++k) {
                double s = 0.0;
                for (std::size_t i = 0; i < len; ++i) s += cap.v(i, k) * b[i];
                vtb(k, 0) = s;
            }
            const DenseMatrix sol = dense_gepp_solve(cap.capacitance, vtb);
            for (std::size_t k = 0; k < rank; ++k) w[k] = sol(k, 0);
        } else {
            const DenseMatrix minv = dense_inverse(cap.capacitance);
            // Row k of M^{-1} V^T, then its product with b.
            std::vector<double> row(len);
            for (std::size_t k = 0; k < rank; ++k) {
                std::ranges::fill(row, 0.0);
                for (std::size_t l = 0; l < rank; ++l) {
                    const double a = minv(k, l);
                    for (std::size_t i = 0; i < len; ++i) row[i] += a * cap.v(i, l);
                }
                double s = 0.0;
                for (std::size_t i = 0; i < len; ++i) s += row[i] * b[i];
                w[k] = s;
            }
        }
    } catch (const SingularMatrix&) {
        throw CapacitanceSingular();
    }
    for (std::size_t k = 0; k < rank; ++k) phi[cap.u_rows[k]] -= cap.u_values[k] * w[k];
    return phi;
}

SolveOutcome solve_mrhs(const TridiagToeplitz& t, const DenseMatrix& b, const SolveOptions& options) {
    if (b.rows() != t.order) {
        throw DimensionMismatch("solve_mrhs: B has " + std::to_string(b.rows()) +
                                " rows, matrix order is " + std::to_string(t.order));
    }
    if (b.cols() == 0) throw DimensionMismatch("solve_mrhs: B has no columns");

    const ExpandedSystem sys = expand(t, b.cols());
    DenseMatrix duals = dual_solves(sys, options.inner, options.parallel_dual_solves);

    SolveOutcome out;
    out.diagnostics.transpose_solves = duals.cols();
    const CapacitanceSystem cap = build_capacitance(sys, std::move(duals));
    if (cap.rank() > 0) {
        try {
            out.diagnostics.capacitance_condition = condition_1norm(cap.capacitance);
        } catch (const SingularMatrix&) {
            out.diagnostics.capacitance_condition = std::numeric_limits<double>::infinity();
        }
    }

    out.phi = apply_qinv(cap, vec(b), options.qinv);
    const DenseMatrix phi_col(sys.ahat.order, 1,
                              std::vector<double>(out.phi.data().begin(), out.phi.data().end()));
    const DenseMatrix x = inner_solve(options.inner, sys.ahat, phi_col);
    out.diagnostics.forward_solves = 1;
    out.x = DenseMatrix(t.order, b.cols(), std::vector<double>(x.data().begin(), x.data().end()));
    return out;
}

}  // namespace ttmrhs
