#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "ttmrhs/types.hpp"

namespace ttmrhs::cli {

/// Malformed matrix CSV. `line()` is 1-based.
class CsvError : public std::runtime_error {
public:
    CsvError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// One matrix row per line, comma separated, no header. Blank trailing lines
/// are ignored. Throws CsvError on ragged rows, bad numbers or empty input.
[[nodiscard]] DenseMatrix read_matrix_csv(std::istream& in);
[[nodiscard]] DenseMatrix read_rhs_csv(const std::string& path);

/// Same format, every value with 17 significant digits.
void write_matrix_csv(const DenseMatrix& x, std::ostream& out);
void write_matrix_csv(const DenseMatrix& x, const std::string& path);

/// "%.17g"
[[nodiscard]] std::string format_exact(double v);
/// Scientific notation with 5 significant digits, e.g. 6.4370e-13.
[[nodiscard]] std::string format_sci5(double v);

}  // namespace ttmrhs::cli
