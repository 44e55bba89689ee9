#include "ttmrhs/types.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ttmrhs/errors.hpp"

namespace ttmrhs {

TridiagToeplitz::TridiagToeplitz(std::size_t order_, double sub_, double diag_, double sup_)
    : order(order_), sub(sub_), diag(diag_), sup(sup_) {
    if (order == 0) throw std::invalid_argument("tridiagonal Toeplitz order must be >= 1");
}

double TridiagToeplitz::band_scale() const {
    return std::abs(diag) + std::abs(sub) + std::abs(sup);
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
        throw DimensionMismatch("matrix data length " + std::to_string(data_.size()) +
                                " does not match " + std::to_string(rows_) + "x" +
                                std::to_string(cols_));
    }
}

DenseMatrix DenseMatrix::ones(std::size_t rows, std::size_t cols) {
    return {rows, cols, std::vector<double>(rows * cols, 1.0)};
}

DenseMatrix DenseMatrix::identity(std::size_t order) {
    DenseMatrix a(order, order);
    for (std::size_t i = 0; i < order; ++i) a(i, i) = 1.0;
    return a;
}

DenseMatrix DenseMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    DenseMatrix a(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw DimensionMismatch("ragged row literal");
        std::size_t j = 0;
        for (double v : row) a(i, j++) = v;
        ++i;
    }
    return a;
}

DenseMatrix DenseMatrix::transposed() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t j = 0; j < cols_; ++j)
        for (std::size_t i = 0; i < rows_; ++i) t(j, i) = (*this)(i, j);
    return t;
}

DenseMatrix assemble_dense(const TridiagToeplitz& t) {
    const std::size_t n = t.order;
    DenseMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = t.diag;
        if (i + 1 < n) {
            a(i, i + 1) = t.sup;
            a(i + 1, i) = t.sub;
        }
    }
    return a;
}

DenseMatrix tt_apply(const TridiagToeplitz& t, const DenseMatrix& x) {
    if (x.rows() != t.order) {
        throw DimensionMismatch("tt_apply: operand has " + std::to_string(x.rows()) +
                                " rows, matrix order is " + std::to_string(t.order));
    }
    const std::size_t n = t.order;
    DenseMatrix y(n, x.cols());
    for (std::size_t j = 0; j < x.cols(); ++j) {
        auto in = x.col(j);
        auto out = y.col(j);
        for (std::size_t i = 0; i < n; ++i) {
            double acc = t.diag * in[i];
            if (i > 0) acc += t.sub * in[i - 1];
            if (i + 1 < n) acc += t.sup * in[i + 1];
            out[i] = acc;
        }
    }
    return y;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matmul: inner dimensions differ");
    DenseMatrix c(a.rows(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double bkj = b(k, j);
            if (bkj == 0.0) continue;
            for (std::size_t i = 0; i < a.rows(); ++i) c(i, j) += a(i, k) * bkj;
        }
    return c;
}

ColumnVector vec(const DenseMatrix& x) {
    auto d = x.data();
    return ColumnVector(std::vector<double>(d.begin(), d.end()));
}

DenseMatrix unvec(const ColumnVector& v, std::size_t rows, std::size_t cols) {
    if (v.len() != rows * cols) {
        throw DimensionMismatch("unvec: length " + std::to_string(v.len()) + " is not " +
                                std::to_string(rows) + "x" + std::to_string(cols));
    }
    auto d = v.data();
    return {rows, cols, std::vector<double>(d.begin(), d.end())};
}

TridiagToeplitz grcar(std::size_t n) { return {n, -1.0, 1.0, 1.0}; }

TridiagToeplitz from_symbol(double c_sub, double c_diag, double c_sup, std::size_t n) {
    return {n, c_sub, c_diag, c_sup};
}

}  // namespace ttmrhs
