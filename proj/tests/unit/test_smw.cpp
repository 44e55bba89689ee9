#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <random>

#include "oracles.hpp"
#include "ttmrhs/errors.hpp"
#include "ttmrhs/metrics.hpp"
#include "ttmrhs/smw.hpp"
#include "ttmrhs/solvers.hpp"

namespace ttmrhs {
namespace {

using testing::rel_diff;

TEST(DualSolves, NoSeamsNoSolves) {
    const DenseMatrix y = dual_solves(expand(grcar(6), 1));
    EXPECT_EQ(y.rows(), 6u);
    EXPECT_EQ(y.cols(), 0u);
}

TEST(DualSolves, DiagonalAhatGivesScaledUnitVectors) {
    const auto sys = expand({3, 0.0, 4.0, 0.0}, 3);
    const DenseMatrix y = dual_solves(sys);
    ASSERT_EQ(y.cols(), 4u);
    // Columns are (e_{jn+1}, e_{jn}) / 4 for j = 1, 2 with n = 3.
    const std::size_t hot[] = {3, 2, 6, 5};  // 0-based rows
    for (std::size_t c = 0; c < 4; ++c)
        for (std::size_t i = 0; i < 9; ++i) EXPECT_EQ(y(i, c), i == hot[c] ? 0.25 : 0.0);
}

TEST(DualSolves, ResidualAgainstAssembledTranspose) {
    const auto sys = expand({2, 1.0, 2.0, 1.0}, 2);
    const DenseMatrix y = dual_solves(sys);
    ASSERT_EQ(y.cols(), 2u);
    DenseMatrix e(4, 2);
    e(2, 0) = 1.0;  // e_{n+1}
    e(1, 1) = 1.0;  // e_n
    const DenseMatrix at = testing::dense_band(4, 1.0, 2.0, 1.0).transposed();
    EXPECT_LE(rel_diff(matmul(at, y), e), 1e-12);
}

TEST(BuildCapacitance, ZeroBandsGiveIdentity) {
    const auto sys = expand({4, 0.0, 3.0, 0.0}, 3);
    const auto cap = build_capacitance(sys, dual_solves(sys));
    EXPECT_EQ(cap.capacitance, DenseMatrix::identity(4));
}

TEST(BuildCapacitance, TwoColumnFormula) {
    const TridiagToeplitz t{3, -0.7, 2.5, 0.4};
    const std::size_t n = t.order;
    const auto sys = expand(t, 2);
    const DenseMatrix y = dual_solves(sys);
    const auto cap = build_capacitance(sys, y);
    // v_1 = y_{n+1}, v_2 = y_n; rows n and n+1 are 0-based n-1 and n.
    const DenseMatrix& m = cap.capacitance;
    EXPECT_DOUBLE_EQ(m(0, 0), 1.0 - t.sup * y(n - 1, 0));
    EXPECT_DOUBLE_EQ(m(0, 1), -t.sub * y(n, 0));
    EXPECT_DOUBLE_EQ(m(1, 0), -t.sup * y(n - 1, 1));
    EXPECT_DOUBLE_EQ(m(1, 1), 1.0 - t.sub * y(n, 1));
}

TEST(BuildCapacitance, RankAndShape) {
    const auto sys = expand(grcar(4), 3);
    const auto cap = build_capacitance(sys, dual_solves(sys));
    EXPECT_EQ(cap.rank(), 4u);
    EXPECT_EQ(cap.capacitance.rows(), 4u);
    EXPECT_EQ(cap.capacitance.cols(), 4u);
    EXPECT_EQ(cap.u_rows, (std::vector<std::size_t>{3, 4, 7, 8}));
    EXPECT_EQ(cap.u_values, (std::vector<double>{-1.0, 1.0, -1.0, 1.0}));
}

TEST(BuildCapacitance, EntriesMatchDenseProducts) {
    // M[k][l] = delta_kl + v_k^T u_l with U assembled densely.
    const auto sys = expand({5, 0.3, -2.0, 0.9}, 4);
    const auto cap = build_capacitance(sys, dual_solves(sys));
    DenseMatrix u(cap.v.rows(), cap.rank());
    for (std::size_t k = 0; k < cap.rank(); ++k) u(cap.u_rows[k], k) = cap.u_values[k];
    DenseMatrix expect = matmul(cap.v.transposed(), u);
    for (std::size_t k = 0; k < cap.rank(); ++k) expect(k, k) += 1.0;
    EXPECT_LE(rel_diff(cap.capacitance, expect), 1e-15);
}

TEST(ApplyQinv, TrivialCorrections) {
    std::mt19937_64 rng(4);
    const ColumnVector b = vec(testing::random_matrix(rng, 12, 1));
    const auto diag_only = expand({4, 0.0, 2.0, 0.0}, 3);
    const auto cap0 = build_capacitance(diag_only, dual_solves(diag_only));
    EXPECT_EQ(apply_qinv(cap0, b), b);

    const auto single = expand({12, 1.0, 3.0, 1.0}, 1);
    const auto cap1 = build_capacitance(single, dual_solves(single));
    EXPECT_EQ(apply_qinv(cap1, b), b);
    EXPECT_EQ(apply_qinv(cap1, b, QinvMode::explicit_inverse), b);
}

TEST(ApplyQinv, LengthMismatchThrows) {
    const auto sys = expand(grcar(3), 2);
    const auto cap = build_capacitance(sys, dual_solves(sys));
    EXPECT_THROW((void)apply_qinv(cap, ColumnVector(5)), DimensionMismatch);
}

TEST(ApplyQinv, InvertsDenseQ) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const auto t = testing::random_dominant(rng, 1 + trial % 10);
        const std::size_t m = 1 + trial % 5;
        const auto sys = expand(t, m);
        const auto cap = build_capacitance(sys, dual_solves(sys));
        const DenseMatrix b = testing::random_matrix(rng, t.order * m, 1);
        const DenseMatrix q = testing::dense_q(t, m);
        for (auto mode : {QinvMode::capacitance_solve, QinvMode::explicit_inverse}) {
            const ColumnVector phi = apply_qinv(cap, vec(b), mode);
            EXPECT_LE(rel_diff(matmul(q, testing::as_column(phi)), b), 1e-12) << trial;
        }
    }
}

TEST(SolveMrhs, TwoByTwoOnes) {
    const auto out = solve_mrhs({2, 1.0, 2.0, 1.0}, DenseMatrix::ones(2, 2));
    DenseMatrix expect(2, 2, std::vector<double>(4, 1.0 / 3.0));
    EXPECT_LE(rel_diff(out.x, expect), 1e-15);
    EXPECT_EQ(out.diagnostics.transpose_solves, 2u);
    EXPECT_EQ(out.diagnostics.forward_solves, 1u);
}

TEST(SolveMrhs, SingleColumnIsOneBlockLuSolveBitwise) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        const auto t = testing::random_dominant(rng, 1 + trial);
        const DenseMatrix b = testing::random_matrix(rng, t.order, 1);
        const auto out = solve_mrhs(t, b);
        EXPECT_EQ(out.x, block_lu_solve(t, b));
        EXPECT_EQ(out.phi, vec(b));
        EXPECT_EQ(out.diagnostics.transpose_solves, 0u);
    }
}

TEST(SolveMrhs, SolveCounts) {
    for (std::size_t m = 1; m <= 10; ++m) {
        const auto out = solve_mrhs({6, 1.0, 4.0, -1.0}, DenseMatrix::ones(6, m));
        EXPECT_EQ(out.diagnostics.transpose_solves, 2 * m - 2);
        EXPECT_EQ(out.diagnostics.forward_solves, 1u);
    }
}

TEST(SolveMrhs, AgreesWithDenseOracleOnLiftedSystem) {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 200; ++trial) {
        const auto t = testing::random_dominant(rng, 1 + trial % 12);
        const std::size_t m = 1 + trial % 4;
        const DenseMatrix b = testing::random_matrix(rng, t.order, m);
        const DenseMatrix lifted = testing::kron_identity(m, assemble_dense(t));
        const DenseMatrix ref = dense_gepp_solve(lifted, testing::as_column(vec(b)));
        const auto out = solve_mrhs(t, b);
        EXPECT_LE(rel_diff(testing::as_column(vec(out.x)), ref), 1e-8) << trial;
        EXPECT_LE(out.diagnostics.capacitance_condition, 1e8);
    }
}

TEST(SolveMrhs, ParallelDualSolvesAreBitwiseIdentical) {
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 10; ++trial) {
        const auto t = testing::random_dominant(rng, 5 + trial);
        const DenseMatrix b = testing::random_matrix(rng, t.order, 2 + trial);
        SolveOptions par;
        par.parallel_dual_solves = true;
        const auto seq_out = solve_mrhs(t, b);
        const auto par_out = solve_mrhs(t, b, par);
        EXPECT_EQ(seq_out.x, par_out.x);
        EXPECT_EQ(seq_out.phi, par_out.phi);
        // Row-cycled overflows to NaN on larger dominant instances; compare bits.
        const DenseMatrix yp = dual_solves(expand(t, b.cols()), InnerSolver::row_cycled, true);
        const DenseMatrix ys = dual_solves(expand(t, b.cols()), InnerSolver::row_cycled, false);
        ASSERT_EQ(yp.size(), ys.size());
        EXPECT_EQ(std::memcmp(yp.data().data(), ys.data().data(), yp.size() * sizeof(double)), 0);
    }
}

TEST(SolveMrhs, SingularBlockMakesCapacitanceSingular) {
    // T = [0] is singular while the lifted [[0, 2], [1, 0]] is not, so
    // M = I + V^T U vanishes identically.
    const TridiagToeplitz t{1, 1.0, 0.0, 2.0};
    const auto sys = expand(t, 2);
    const auto cap = build_capacitance(sys, dual_solves(sys));
    EXPECT_EQ(cap.capacitance, DenseMatrix(2, 2));
    EXPECT_THROW((void)solve_mrhs(t, DenseMatrix::ones(1, 2)), CapacitanceSingular);
    EXPECT_THROW((void)solve_mrhs(t, DenseMatrix::ones(1, 2), reference_options()),
                 CapacitanceSingular);
}

TEST(SolveMrhs, PropagatesPivotBlockBreakdown) {
    // Lifted order 3 * 1 is odd with a zero diagonal.
    EXPECT_THROW((void)solve_mrhs({3, 1.0, 0.0, 2.0}, DenseMatrix::ones(3, 1)), SingularPivotBlock);
}

TEST(SolveMrhs, RejectsShapeMismatch) {
    EXPECT_THROW((void)solve_mrhs(grcar(4), DenseMatrix::ones(3, 2)), DimensionMismatch);
}

TEST(SolveMrhs, ExactConfigurationIsStableOnGrcar) {
    for (std::size_t m : {2u, 5u, 8u, 10u}) {
        const DenseMatrix b = DenseMatrix::ones(10, m);
        const auto out = solve_mrhs(grcar(10), b);
        EXPECT_LE(relative_residual(grcar(10), out.x, b), 1e-14) << m;
    }
}

TEST(SolveMrhs, ReferenceConfigurationDegradesOnGrcar) {
    auto residual = [](std::size_t m) {
        const DenseMatrix b = DenseMatrix::ones(10, m);
        return relative_residual(grcar(10), solve_mrhs(grcar(10), b, reference_options()).x, b);
    };
    EXPECT_LT(residual(2), 1e-10);
    EXPECT_GT(residual(8), 1e-2);
}

TEST(SolveMrhs, ReferenceConfigurationGrcarTenTwo) {
    const DenseMatrix b = DenseMatrix::ones(10, 2);
    const auto out = solve_mrhs(grcar(10), b, reference_options());
    // Known reference value 6.4370e-13 (five significant digits, matrix 2-norm).
    const double r = relative_residual(grcar(10), out.x, b, ResidualNorm::spectral);
    EXPECT_NEAR(r, 6.4370e-13, 0.00005e-13);
}

}  // namespace
}  // namespace ttmrhs
