#include "ttmrhs/expansion.hpp"

#include <stdexcept>
#include <string>

#include "ttmrhs/errors.hpp"

namespace ttmrhs {

std::vector<JunctionCorrection> junction_indices(std::size_t n, std::size_t m) {
    std::vector<JunctionCorrection> out;
    if (m < 2) return out;
    out.reserve(m - 1);
    for (std::size_t j = 1; j < m; ++j) {
        const std::size_t seam = j * n;
        out.push_back({j, {seam, seam + 1}, 0.0, {seam + 1, seam}, 0.0});
    }
    return out;
}

ExpandedSystem expand(const TridiagToeplitz& t, std::size_t m) {
    if (m == 0) throw std::invalid_argument("expand: need at least one right-hand side");
    ExpandedSystem sys{{m * t.order, t.sub, t.diag, t.sup}, junction_indices(t.order, m), t.order,
                       m};
    for (auto& c : sys.corrections) {
        c.sup_value = t.sup;
        c.sub_value = t.sub;
    }
    return sys;
}

DenseMatrix assemble_kron_dense(const TridiagToeplitz& t, std::size_t m) {
    const std::size_t n = t.order;
    if (m * n > kDenseLiftLimit) {
        throw std::length_error("assemble_kron_dense: order " + std::to_string(m * n) +
                                " exceeds " + std::to_string(kDenseLiftLimit));
    }
    const DenseMatrix block = assemble_dense(t);
    DenseMatrix a(m * n, m * n);
    for (std::size_t b = 0; b < m; ++b)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) a(b * n + i, b * n + j) = block(i, j);
    return a;
}

void add_corrections(const ExpandedSystem& sys, DenseMatrix& a) {
    const std::size_t order = sys.n * sys.m;
    if (a.rows() != order || a.cols() != order) {
        throw DimensionMismatch("add_corrections: matrix is not of lifted order");
    }
    for (const auto& c : sys.corrections) {
        a(c.sup_pos.row - 1, c.sup_pos.col - 1) += c.sup_value;
        a(c.sub_pos.row - 1, c.sub_pos.col - 1) += c.sub_value;
    }
}

}  // namespace ttmrhs
