#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ttmrhs {

/// Shape or length disagreement between operands.
class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Base for numerical breakdowns raised by the solvers. `name()` is the
/// stable identifier printed by the command line tools.
class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    [[nodiscard]] virtual std::string_view name() const noexcept = 0;
};

/// Scalar elimination hit a pivot at or below the singularity threshold.
/// `index()` is 1-based.
class ZeroPivot : public SolverError {
public:
    explicit ZeroPivot(std::size_t index)
        : SolverError("zero pivot at position " + std::to_string(index)), index_(index) {}
    [[nodiscard]] std::string_view name() const noexcept override { return "ZeroPivot"; }
    [[nodiscard]] std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// Block elimination hit a (near) singular pivot block. `index()` is 1-based.
class SingularPivotBlock : public SolverError {
public:
    explicit SingularPivotBlock(std::size_t index)
        : SolverError("singular pivot block " + std::to_string(index)), index_(index) {}
    [[nodiscard]] std::string_view name() const noexcept override { return "SingularPivotBlock"; }
    [[nodiscard]] std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// Dense elimination found a pivot column with no usable entry.
class SingularMatrix : public SolverError {
public:
    explicit SingularMatrix(std::size_t column)
        : SolverError("singular matrix: no pivot in column " + std::to_string(column)) {}
    [[nodiscard]] std::string_view name() const noexcept override { return "SingularMatrix"; }
};

/// The low-rank correction cannot be inverted for this instance.
class CapacitanceSingular : public SolverError {
public:
    CapacitanceSingular() : SolverError("capacitance matrix is singular") {}
    [[nodiscard]] std::string_view name() const noexcept override { return "CapacitanceSingular"; }
};

/// Relative residual requested for an all-zero right-hand side.
class DegenerateRHS : public std::domain_error {
public:
    DegenerateRHS() : std::domain_error("right-hand side has zero norm") {}
};

}  // namespace ttmrhs
