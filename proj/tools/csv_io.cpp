#include "csv_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

namespace ttmrhs::cli {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_field(std::string_view field, std::size_t line) {
    field = trim(field);
    if (field.empty()) throw CsvError(line, "empty field");
    if (field.front() == '+') field.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw CsvError(line, "not a number: '" + std::string(field) + "'");
    }
    return v;
}

}  // namespace

DenseMatrix read_matrix_csv(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string text;
    std::size_t line = 0;
    std::size_t blank_run_start = 0;
    while (std::getline(in, text)) {
        ++line;
        const auto body = trim(text);
        if (body.empty()) {
            if (blank_run_start == 0) blank_run_start = line;
            continue;
        }
        if (blank_run_start != 0 && !rows.empty()) throw CsvError(blank_run_start, "blank line");
        blank_run_start = 0;
        std::vector<double> row;
        std::size_t start = 0;
        while (true) {
            const auto comma = body.find(',', start);
            row.push_back(parse_field(body.substr(start, comma - start), line));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw CsvError(line, "expected " + std::to_string(rows.front().size()) +
                                     " fields, found " + std::to_string(row.size()));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw CsvError(line == 0 ? 1 : line, "no data");

    DenseMatrix x(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) x(i, j) = rows[i][j];
    return x;
}

DenseMatrix read_rhs_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CsvError(0, "cannot open '" + path + "'");
    return read_matrix_csv(in);
}

void write_matrix_csv(const DenseMatrix& x, std::ostream& out) {
    for (std::size_t i = 0; i < x.rows(); ++i) {
        for (std::size_t j = 0; j < x.cols(); ++j) {
            if (j > 0) out << ',';
            out << format_exact(x(i, j));
        }
        out << '\n';
    }
}

void write_matrix_csv(const DenseMatrix& x, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    write_matrix_csv(x, out);
}

std::string format_exact(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_sci5(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.4e", v);
    return buf;
}

}  // namespace ttmrhs::cli
