// Acceptance checks. One line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "ttmrhs/ttmrhs.hpp"

namespace {

using namespace ttmrhs;
using testing::rel_diff;

struct Check {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4e", v);
    return buf;
}

double grcar_residual(std::size_t m, const SolveOptions& options) {
    const DenseMatrix b = DenseMatrix::ones(10, m);
    return relative_residual(grcar(10), solve_mrhs(grcar(10), b, options).x, b);
}

Check ac1() {
    Check c;
    for (const auto& [label, options] :
         {std::pair{"exact", SolveOptions{}}, std::pair{"reference", reference_options()}}) {
        const auto start = std::chrono::steady_clock::now();
        const double r = grcar_residual(2, options);
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
        c.require(r <= 1e-10, std::string(label) + " residual " + sci(r));
        c.require(dt.count() < 1.0, std::string(label) + " took " + sci(dt.count()) + " s");
    }
    if (c.pass) c.detail = "residual <= 1e-10 and under 1 s in both configurations";
    return c;
}

Check ac2() {
    Check c;
    const auto ref = reference_options();
    const double r2 = grcar_residual(2, ref), r5 = grcar_residual(5, ref);
    const double r8 = grcar_residual(8, ref), r10 = grcar_residual(10, ref);
    c.require(r2 <= 1e-10, "m=2 " + sci(r2));
    c.require(r5 >= 1e-9, "m=5 " + sci(r5));
    c.require(r8 >= 1e-2, "m=8 " + sci(r8));
    c.require(r10 >= 1.0, "m=10 " + sci(r10));
    if (c.pass) c.detail = "m=2 " + sci(r2) + ", m=5 " + sci(r5) + ", m=8 " + sci(r8) + ", m=10 " + sci(r10);
    return c;
}

Check ac3() {
    Check c;
    const TridiagToeplitz z = from_symbol(1.0, 0.0, 2.0, 10);
    for (const auto& options : {SolveOptions{}, reference_options()}) {
        for (std::size_t m : {2u, 4u, 8u, 10u}) {
            const DenseMatrix b = DenseMatrix::ones(10, m);
            try {
                const double r = relative_residual(z, solve_mrhs(z, b, options).x, b);
                c.require(r <= 1e-12, "m=" + std::to_string(m) + " " + sci(r));
            } catch (const SolverError& e) {
                c.require(false, "m=" + std::to_string(m) + " " + std::string(e.name()));
            }
        }
    }
    try {
        (void)thomas_solve(z, DenseMatrix::ones(10, 1));
        c.require(false, "thomas_solve did not raise ZeroPivot");
    } catch (const ZeroPivot& e) {
        c.require(e.index() == 1, "ZeroPivot at " + std::to_string(e.index()));
    }
    if (c.pass) c.detail = "n=10 residuals <= 1e-12, scalar LU raises ZeroPivot(1)";
    return c;
}

Check ac4() {
    Check c;
    const auto ref = reference_options();
    const TridiagToeplitz z = from_symbol(1.0, 0.0, 2.0, 30);
    auto residual = [&](std::size_t m) {
        const DenseMatrix b = DenseMatrix::ones(30, m);
        return relative_residual(z, solve_mrhs(z, b, ref).x, b);
    };
    const double r8 = residual(8), r2 = residual(2);
    c.require(r8 >= 0.05 && r8 <= 5.0, "30:8 " + sci(r8));
    c.require(r2 <= 1e-10, "30:2 " + sci(r2));
    if (c.pass) c.detail = "30:8 " + sci(r8) + ", 30:2 " + sci(r2);
    return c;
}

struct Instance {
    TridiagToeplitz t;
    DenseMatrix b;
};

std::vector<Instance> random_instances() {
    std::mt19937_64 rng(20240501);
    std::uniform_int_distribution<std::size_t> n_dist(1, 12), m_dist(1, 4);
    std::vector<Instance> out;
    for (int i = 0; i < 500; ++i) {
        const auto t = testing::random_dominant(rng, n_dist(rng));
        out.push_back({t, testing::random_matrix(rng, t.order, m_dist(rng))});
    }
    return out;
}

Check ac5(const std::vector<Instance>& cases) {
    Check c;
    double worst = 0.0;
    for (const auto& [t, b] : cases) {
        const DenseMatrix lifted = testing::kron_identity(b.cols(), assemble_dense(t));
        const DenseMatrix ref = dense_gepp_solve(lifted, testing::as_column(vec(b)));
        worst = std::max(worst, rel_diff(testing::as_column(vec(solve_mrhs(t, b).x)), ref));
    }
    c.require(worst <= 1e-8, "worst relative difference " + sci(worst));
    if (c.pass) c.detail = "500 instances, worst relative difference " + sci(worst);
    return c;
}

Check ac6(const std::vector<Instance>& cases) {
    Check c;
    double worst = 0.0;
    for (const auto& [t, b] : cases) {
        const auto sys = expand(t, b.cols());
        const auto cap = build_capacitance(sys, dual_solves(sys));
        const DenseMatrix q = testing::dense_q(t, b.cols());
        const DenseMatrix bb = testing::as_column(vec(b));
        worst = std::max(worst, rel_diff(matmul(q, testing::as_column(apply_qinv(cap, vec(b)))), bb));
    }
    c.require(worst <= 1e-12, "worst relative difference " + sci(worst));
    if (c.pass) c.detail = "Q * phi == b, worst relative difference " + sci(worst);
    return c;
}

Check ac7() {
    Check c;
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> band(-9, 9);
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= 16; ++n) {
        for (std::size_t m = 1; m <= 8; ++m) {
            const TridiagToeplitz t{n, double(band(rng)), double(band(rng)), double(band(rng))};
            const auto sys = expand(t, m);
            DenseMatrix lifted = testing::kron_identity(m, testing::dense_band(n, t.sub, t.diag, t.sup));
            add_corrections(sys, lifted);
            c.require(lifted == assemble_dense(sys.ahat),
                      "n=" + std::to_string(n) + " m=" + std::to_string(m));
            c.require(sys.corrections.size() == m - 1, "correction count");
            ++checked;
        }
    }
    if (c.pass) c.detail = std::to_string(checked) + " (n, m) pairs, exact equality";
    return c;
}

Check ac8() {
    Check c;
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        const auto t = testing::random_dominant(rng, 1 + trial);
        const DenseMatrix b = testing::random_matrix(rng, t.order, 1);
        const auto out = solve_mrhs(t, b);
        c.require(out.x == block_lu_solve(t, b), "m=1 differs at order " + std::to_string(t.order));
        c.require(out.diagnostics.transpose_solves == 0, "m=1 used dual solves");
    }
    for (std::size_t m = 1; m <= 12; ++m) {
        const auto out = solve_mrhs({9, 1.0, 4.0, -1.0}, DenseMatrix::ones(9, m));
        c.require(out.diagnostics.transpose_solves == 2 * m - 2, "transpose solves at m=" + std::to_string(m));
        c.require(out.diagnostics.forward_solves == 1, "forward solves at m=" + std::to_string(m));
    }
    if (c.pass) c.detail = "m=1 bitwise equal to one block LU solve, 2m-2 transpose + 1 forward";
    return c;
}

double median_seconds(const TridiagToeplitz& t, const DenseMatrix& b) {
    std::vector<double> s;
    for (int i = 0; i < 5; ++i) {
        const auto start = std::chrono::steady_clock::now();
        const DenseMatrix x = block_lu_solve(t, b);
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
        if (x.rows() != t.order) std::abort();
        s.push_back(dt.count());
    }
    std::nth_element(s.begin(), s.begin() + 2, s.end());
    return s[2];
}

Check ac9() {
    Check c;
    const TridiagToeplitz small{1'000'000, 1.0, 4.0, 1.0}, large{2'000'000, 1.0, 4.0, 1.0};
    const DenseMatrix b1 = DenseMatrix::ones(small.order, 1), b2 = DenseMatrix::ones(large.order, 1);
    (void)median_seconds(small, b1);  // warm up the allocator
    const double t1 = median_seconds(small, b1);
    const double t2 = median_seconds(large, b2);
    const double ratio = t2 / t1;
    c.require(ratio >= 1.5 && ratio <= 3.0, "ratio " + sci(ratio));
    c.detail = c.pass ? "t(2e6)/t(1e6) = " + sci(ratio) : c.detail;
    return c;
}

}  // namespace

int main() {
    const auto cases = random_instances();
    const std::vector<std::pair<const char*, Check (*)()>> simple{
        {"AC1 grcar(10), m=2 accurate and fast", ac1},
        {"AC2 grcar(10) degradation with m (reference configuration)", ac2},
        {"AC3 zero-diagonal n=10 accurate, scalar LU breaks down", ac3},
        {"AC4 zero-diagonal breakdown band at 30:8 (reference configuration)", ac4},
    };
    int failures = 0;
    auto report = [&](const char* label, const Check& c) {
        std::printf("[%s] %s: %s\n", c.pass ? "PASS" : "FAIL", label, c.detail.c_str());
        failures += !c.pass;
    };
    auto guarded = [&](const char* label, auto&& fn) {
        try {
            report(label, fn());
        } catch (const std::exception& e) {
            report(label, Check{false, std::string("exception: ") + e.what()});
        }
    };
    for (const auto& [label, fn] : simple) guarded(label, fn);
    guarded("AC5 agreement with dense GEPP on the lifted system", [&] { return ac5(cases); });
    guarded("AC6 Q^{-1} application inverts dense Q", [&] { return ac6(cases); });
    guarded("AC7 lifted structure identity", ac7);
    guarded("AC8 single column reduction and solve counts", ac8);
    guarded("AC9 linear scaling of the tridiagonal solve", ac9);
    std::printf("%d of 9 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
