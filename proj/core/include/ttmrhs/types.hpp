#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace ttmrhs {

/// Tridiagonal Toeplitz matrix of order `order`: `diag` on the main
/// diagonal, `sup` on the first superdiagonal, `sub` on the first
/// subdiagonal.
struct TridiagToeplitz {
    std::size_t order = 1;
    double sub = 0.0;
    double diag = 1.0;
    double sup = 0.0;

    TridiagToeplitz() = default;
    /// Throws std::invalid_argument when order == 0.
    TridiagToeplitz(std::size_t order, double sub, double diag, double sup);

    /// Band-swapped matrix, i.e. the transpose.
    [[nodiscard]] TridiagToeplitz transposed() const { return {order, sup, diag, sub}; }
    /// Sum of band magnitudes; the scale used by the singularity thresholds.
    [[nodiscard]] double band_scale() const;

    friend bool operator==(const TridiagToeplitz&, const TridiagToeplitz&) = default;
};

/// Dense column-major matrix. Element (i, j) is 0-based.
class DenseMatrix {
public:
    DenseMatrix() = default;
    /// Zero-initialized rows x cols matrix.
    DenseMatrix(std::size_t rows, std::size_t cols);
    /// Adopts column-major `data`; throws DimensionMismatch on a length mismatch.
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> data);

    static DenseMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    static DenseMatrix ones(std::size_t rows, std::size_t cols);
    static DenseMatrix identity(std::size_t order);
    /// Row-major literal, handy in tests: from_rows({{1, 3}, {2, 4}}).
    static DenseMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] std::size_t size() const noexcept { return data_.size(); }
    [[nodiscard]] bool empty() const noexcept { return data_.empty(); }

    double& operator()(std::size_t i, std::size_t j) { return data_[j * rows_ + i]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[j * rows_ + i]; }

    [[nodiscard]] std::span<double> col(std::size_t j) { return {data_.data() + j * rows_, rows_}; }
    [[nodiscard]] std::span<const double> col(std::size_t j) const {
        return {data_.data() + j * rows_, rows_};
    }
    [[nodiscard]] std::span<double> data() noexcept { return data_; }
    [[nodiscard]] std::span<const double> data() const noexcept { return data_; }

    [[nodiscard]] DenseMatrix transposed() const;

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// A single column; the vec of a matrix and the long vectors of the lifted system.
class ColumnVector {
public:
    ColumnVector() = default;
    explicit ColumnVector(std::size_t len) : data_(len, 0.0) {}
    explicit ColumnVector(std::vector<double> data) : data_(std::move(data)) {}
    ColumnVector(std::initializer_list<double> values) : data_(values) {}

    [[nodiscard]] std::size_t len() const noexcept { return data_.size(); }
    double& operator[](std::size_t i) { return data_[i]; }
    double operator[](std::size_t i) const { return data_[i]; }
    [[nodiscard]] std::span<double> data() noexcept { return data_; }
    [[nodiscard]] std::span<const double> data() const noexcept { return data_; }

    friend bool operator==(const ColumnVector&, const ColumnVector&) = default;

private:
    std::vector<double> data_;
};

/// Dense order x order assembly of `t`.
[[nodiscard]] DenseMatrix assemble_dense(const TridiagToeplitz& t);

/// Bandwise product T * x in O(order * cols).
[[nodiscard]] DenseMatrix tt_apply(const TridiagToeplitz& t, const DenseMatrix& x);

/// Dense product a * b (test-scale oracle arithmetic).
[[nodiscard]] DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);

/// Stacks the columns of x top to bottom.
[[nodiscard]] ColumnVector vec(const DenseMatrix& x);
/// Inverse of vec; throws DimensionMismatch unless v.len() == rows * cols.
[[nodiscard]] DenseMatrix unvec(const ColumnVector& v, std::size_t rows, std::size_t cols);

/// Tridiagonal Grcar matrix: sub -1, diag 1, sup 1.
[[nodiscard]] TridiagToeplitz grcar(std::size_t n);

/// Matrix generated by the symbol f(theta) = c_sub e^{i theta} + c_diag + c_sup e^{-i theta},
/// with entry (j, k) the Fourier coefficient of index j - k. So e^{i theta} + 2 e^{-i theta}
/// gives sub 1, diag 0, sup 2.
[[nodiscard]] TridiagToeplitz from_symbol(double c_sub, double c_diag, double c_sup, std::size_t n);

}  // namespace ttmrhs
