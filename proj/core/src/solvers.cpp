#include "ttmrhs/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <utility>

#include "ttmrhs/errors.hpp"

namespace ttmrhs {

namespace {

constexpr double kSingularScale = 1e-300;

void require_rows(const TridiagToeplitz& t, const DenseMatrix& rhs, const char* who) {
    if (rhs.rows() != t.order) {
        throw DimensionMismatch(std::string(who) + ": rhs has " + std::to_string(rhs.rows()) +
                                " rows, matrix order is " + std::to_string(t.order));
    }
}

void thomas_column(const TridiagToeplitz& t, std::span<const double> s, std::span<double> x) {
    const std::size_t n = t.order;
    for (std::size_t k = 1; k < n; ++k) x[k] -= (t.sub / s[k - 1]) * x[k - 1];
    x[n - 1] /= s[n - 1];
    for (std::size_t k = n - 1; k-- > 0;) x[k] = (x[k] - t.sup * x[k + 1]) / s[k];
}

// Block k covers rows 2k, 2k+1 with pivot block D_k = [[p_k, sup], [sub, diag]].
// Forward:  z_k[0] -= sub * (D_{k-1}^{-1} z_{k-1})[1]
// Backward: x_k = D_k^{-1} (z_k - [0, sup * x_{k+1}[0]])
void block_column(const TridiagToeplitz& t, std::span<const double> piv, std::span<double> x) {
    const std::size_t n = t.order;
    const std::size_t nblocks = n / 2;
    const bool trailing = (n % 2) != 0;
    const double d = t.diag;
    const double coupling = t.sup * t.sub;

    auto det = [&](std::size_t k) { return piv[k] * d - coupling; };
    // Second component of D_k^{-1} v.
    auto inv_second = [&](std::size_t k, double v0, double v1) {
        return (-t.sub * v0 + piv[k] * v1) / det(k);
    };

    for (std::size_t k = 1; k < nblocks; ++k) {
        x[2 * k] -= t.sub * inv_second(k - 1, x[2 * k - 2], x[2 * k - 1]);
    }
    double next_first = 0.0;
    if (trailing) {
        if (nblocks > 0) x[n - 1] -= t.sub * inv_second(nblocks - 1, x[n - 3], x[n - 2]);
        x[n - 1] /= piv[nblocks];
        next_first = x[n - 1];
    }
    for (std::size_t k = nblocks; k-- > 0;) {
        const double r0 = x[2 * k];
        const bool has_next = (k + 1 < nblocks) || trailing;
        const double r1 = x[2 * k + 1] - (has_next ? t.sup * next_first : 0.0);
        const double dk = det(k);
        x[2 * k] = (d * r0 - t.sup * r1) / dk;
        x[2 * k + 1] = (-t.sub * r0 + piv[k] * r1) / dk;
        next_first = x[2 * k];
    }
}

}  // namespace

double singularity_threshold(const TridiagToeplitz& t) {
    return kSingularScale * std::max(1.0, t.band_scale());
}

PivotFactorization factor_scalar(const TridiagToeplitz& t) {
    const double tau = singularity_threshold(t);
    PivotFactorization f{t.order, PivotFactorization::Mode::scalar, {}};
    f.pivots.resize(t.order);
    double s = t.diag;
    for (std::size_t k = 0; k < t.order; ++k) {
        if (k > 0) s = t.diag - t.sub * t.sup / s;
        if (std::abs(s) <= tau) throw ZeroPivot(k + 1);
        f.pivots[k] = s;
    }
    return f;
}

PivotFactorization factor_block(const TridiagToeplitz& t) {
    const double tau = singularity_threshold(t);
    const std::size_t nblocks = t.order / 2;
    const bool trailing = (t.order % 2) != 0;
    PivotFactorization f{t.order, PivotFactorization::Mode::block2x2, {}};
    f.pivots.reserve(nblocks + (trailing ? 1 : 0));

    const double coupling = t.sup * t.sub;
    double p = t.diag;
    double prev_det = 0.0;
    for (std::size_t k = 0; k < nblocks; ++k) {
        if (k > 0) p = t.diag - coupling * f.pivots[k - 1] / prev_det;
        const double det = p * t.diag - coupling;
        if (std::abs(det) <= tau) throw SingularPivotBlock(k + 1);
        f.pivots.push_back(p);
        prev_det = det;
    }
    if (trailing) {
        const double q = nblocks == 0 ? t.diag : t.diag - coupling * f.pivots.back() / prev_det;
        if (std::abs(q) <= tau) throw SingularPivotBlock(nblocks + 1);
        f.pivots.push_back(q);
    }
    return f;
}

DenseMatrix thomas_solve(const TridiagToeplitz& t, const DenseMatrix& rhs) {
    require_rows(t, rhs, "thomas_solve");
    const auto f = factor_scalar(t);
    DenseMatrix x = rhs;
    for (std::size_t j = 0; j < x.cols(); ++j) thomas_column(t, f.pivots, x.col(j));
    return x;
}

DenseMatrix block_lu_solve(const TridiagToeplitz& t, const DenseMatrix& rhs) {
    require_rows(t, rhs, "block_lu_solve");
    const auto f = factor_block(t);
    DenseMatrix x = rhs;
    for (std::size_t j = 0; j < x.cols(); ++j) block_column(t, f.pivots, x.col(j));
    return x;
}

DenseMatrix solve_transpose(const TridiagToeplitz& t, const DenseMatrix& rhs) {
    return block_lu_solve(t.transposed(), rhs);
}

DenseMatrix row_cycled_solve(const TridiagToeplitz& t, const DenseMatrix& rhs) {
    require_rows(t, rhs, "row_cycled_solve");
    const double tau = singularity_threshold(t);
    const std::size_t n = t.order;
    DenseMatrix x(n, rhs.cols());

    if (n == 1) {
        if (std::abs(t.diag) <= tau) throw SingularPivotBlock(1);
        for (std::size_t j = 0; j < rhs.cols(); ++j) x(0, j) = rhs(0, j) / t.diag;
        return x;
    }
    if (std::abs(t.sub) <= tau) throw SingularPivotBlock(1);

    const std::size_t len = n - 1;
    const double d = t.diag;
    const double corner = n == 2 ? t.sup : 0.0;

    // U w = v, U upper triangular Toeplitz with sub / diag / sup on its
    // main / first / second diagonals.
    auto back_substitute = [&](std::span<double> w) {
        for (std::size_t k = len; k-- > 0;) {
            double s = w[k];
            if (k + 1 < len) s -= d * w[k + 1];
            if (k + 2 < len) s -= t.sup * w[k + 2];
            w[k] = s / t.sub;
        }
    };
    // r^T w with r = (diag, sup, 0, ...).
    auto r_dot = [&](std::span<const double> w) {
        double s = d * w[0];
        if (len > 1) s += t.sup * w[1];
        return s;
    };

    std::vector<double> uc(len, 0.0);
    uc[len - 1] = d;
    if (len > 1) uc[len - 2] = t.sup;
    back_substitute(uc);
    const double schur = corner - r_dot(uc);
    if (std::abs(schur) <= tau) throw SingularPivotBlock(2);

    std::vector<double> ub(len);
    for (std::size_t j = 0; j < rhs.cols(); ++j) {
        auto b = rhs.col(j);
        std::copy(b.begin() + 1, b.end(), ub.begin());
        back_substitute(ub);
        const double last = (b[0] - r_dot(ub)) / schur;
        auto out = x.col(j);
        for (std::size_t k = 0; k < len; ++k) out[k] = ub[k] - uc[k] * last;
        out[len] = last;
    }
    return x;
}

DenseMatrix dense_gepp_solve(const DenseMatrix& a, const DenseMatrix& rhs) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw DimensionMismatch("dense_gepp_solve: matrix is not square");
    if (rhs.rows() != n) throw DimensionMismatch("dense_gepp_solve: rhs rows differ from order");

    double scale = 1.0;
    for (double v : a.data()) scale = std::max(scale, std::abs(v));
    const double tau = kSingularScale * scale;

    DenseMatrix lu = a;
    DenseMatrix x = rhs;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        double best = std::abs(lu(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            if (std::abs(lu(i, k)) > best) {
                best = std::abs(lu(i, k));
                p = i;
            }
        }
        if (best <= tau) throw SingularMatrix(k + 1);
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(p, j));
            for (std::size_t j = 0; j < x.cols(); ++j) std::swap(x(k, j), x(p, j));
        }
        const double pivot = lu(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double l = lu(i, k) / pivot;
            lu(i, k) = l;
            if (l == 0.0) continue;
            for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= l * lu(k, j);
            for (std::size_t j = 0; j < x.cols(); ++j) x(i, j) -= l * x(k, j);
        }
    }
    for (std::size_t j = 0; j < x.cols(); ++j) {
        for (std::size_t k = n; k-- > 0;) {
            double s = x(k, j);
            for (std::size_t c = k + 1; c < n; ++c) s -= lu(k, c) * x(c, j);
            x(k, j) = s / lu(k, k);
        }
    }
    return x;
}

DenseMatrix dense_inverse(const DenseMatrix& a) {
    return dense_gepp_solve(a, DenseMatrix::identity(a.rows()));
}

double condition_1norm(const DenseMatrix& a) {
    auto norm1 = [](const DenseMatrix& m) {
        double best = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            double s = 0.0;
            for (double v : m.col(j)) s += std::abs(v);
            best = std::max(best, s);
        }
        return best;
    };
    return norm1(a) * norm1(dense_inverse(a));
}

}  // namespace ttmrhs
