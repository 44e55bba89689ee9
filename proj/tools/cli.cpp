#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "csv_io.hpp"
#include "ttmrhs/errors.hpp"

namespace ttmrhs::cli {

namespace {

const std::map<std::string, Method> kMethods{
    {"alg1", Method::alg1}, {"columnwise", Method::columnwise}, {"dense", Method::dense_oracle}};
const std::map<std::string, InnerSolver> kInner{{"block-lu", InnerSolver::block_lu},
                                                {"row-cycled", InnerSolver::row_cycled}};
const std::map<std::string, QinvMode> kQinv{{"solve", QinvMode::capacitance_solve},
                                            {"inverse", QinvMode::explicit_inverse}};
const std::map<std::string, ResidualNorm> kNorm{{"fro", ResidualNorm::frobenius},
                                                {"spectral", ResidualNorm::spectral}};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string_view example_name(Example e) {
    switch (e) {
        case Example::grcar: return "grcar";
        case Example::symbol021: return "symbol021";
        case Example::custom: return "custom";
    }
    return "?";
}

std::size_t parse_count(std::string_view text, const char* what) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || v == 0) {
        throw UsageError(std::string("invalid ") + what + ": '" + std::string(text) + "'");
    }
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> parse_pairs(const std::string& text) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& item : split(text, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw UsageError("pair '" + item + "' is not n:m");
        out.emplace_back(parse_count(std::string_view(item).substr(0, colon), "n"),
                         parse_count(std::string_view(item).substr(colon + 1), "m"));
    }
    if (out.empty()) throw UsageError("--pairs is empty");
    return out;
}

std::vector<std::size_t> parse_list(const std::string& text, const char* what) {
    std::vector<std::size_t> out;
    for (const auto& item : split(text, ',')) out.push_back(parse_count(item, what));
    if (out.empty()) throw UsageError(std::string("empty ") + what + " list");
    return out;
}

nlohmann::json report_json(const SolveReport& r, const SolveOptions& options, ResidualNorm norm,
                           const std::optional<SolveDiagnostics>& diag) {
    nlohmann::json j;
    j["method"] = std::string(to_string(r.method));
    j["n"] = r.n;
    j["m"] = r.m;
    j["relative_residual"] = r.relative_residual;
    j["time_mean_s"] = r.time_mean_s;
    j["reps"] = r.reps;
    nlohmann::json d;
    d["norm"] = std::string(to_string(norm));
    if (diag) {
        d["capacitance_condition"] = diag->capacitance_condition;
        d["transpose_solves"] = diag->transpose_solves;
        d["forward_solves"] = diag->forward_solves;
        d["inner_solver"] = std::string(to_string(options.inner));
        d["qinv"] = std::string(to_string(options.qinv));
    }
    j["diagnostics"] = d;
    return j;
}

struct SolveArgs {
    std::optional<std::size_t> n;
    std::optional<std::size_t> m;
    std::optional<double> diag, sup, sub;
    bool grcar = false;
    bool example2 = false;
    std::string rhs = "ones";
    std::string method = "alg1";
    std::string inner = "block-lu";
    std::string qinv = "solve";
    std::string norm = "fro";
    std::string out = "stdout";
    std::string report = "json";
    std::string report_out = "stdout";
    std::size_t reps = 1;
    bool parallel = false;
};

struct BenchArgs {
    std::string example = "1";
    std::optional<double> diag, sup, sub;
    std::string pairs;
    std::string n_list;
    std::string m_list;
    std::size_t reps = 10;
    std::string methods = "alg1";
    std::string format = "csv";
    std::string inner = "row-cycled";
    std::string qinv = "inverse";
    std::string norm = "fro";
};

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
    if (a.grcar && a.example2) throw UsageError("--grcar and --example2 are exclusive");
    const bool custom = a.diag || a.sup || a.sub;
    if ((a.grcar || a.example2) && custom) {
        throw UsageError("band flags cannot be combined with --grcar/--example2");
    }
    if (!a.grcar && !a.example2 && !a.diag) {
        throw UsageError("give --grcar, --example2 or at least --diag");
    }

    DenseMatrix b;
    if (a.rhs == "ones") {
        if (!a.n) throw UsageError("--n is required with --rhs ones");
        b = DenseMatrix::ones(*a.n, a.m.value_or(1));
    } else {
        try {
            b = read_rhs_csv(a.rhs);
        } catch (const CsvError& e) {
            throw UsageError(a.rhs + ": " + e.what());
        }
        if (a.n && *a.n != b.rows()) throw UsageError("--n disagrees with the rhs file");
        if (a.m && *a.m != b.cols()) throw UsageError("--m disagrees with the rhs file");
    }
    const std::size_t n = b.rows();
    TridiagToeplitz t;
    if (a.grcar) t = grcar(n);
    else if (a.example2) t = from_symbol(1.0, 0.0, 2.0, n);
    else t = from_symbol(a.sub.value_or(0.0), *a.diag, a.sup.value_or(0.0), n);

    const Method method = kMethods.at(a.method);
    SolveOptions options{kInner.at(a.inner), kQinv.at(a.qinv), a.parallel};
    const ResidualNorm norm = kNorm.at(a.norm);

    MethodResult result;
    TimingStats timing;
    try {
        timing = timed_run([&] { result = run_method(method, t, b, options); }, a.reps);
    } catch (const SolverError& e) {
        err << e.name() << ": " << e.what() << '\n';
        return static_cast<int>(ExitCode::breakdown);
    }

    SolveReport report{method, n, b.cols(), relative_residual(t, result.x, b, norm),
                       timing.mean_s, a.reps, std::nullopt};
    if (result.diagnostics) report.capacitance_condition = result.diagnostics->capacitance_condition;

    if (a.out == "stdout") write_matrix_csv(result.x, out);
    else write_matrix_csv(result.x, a.out);

    std::ostringstream rep;
    if (a.report == "json") {
        rep << report_json(report, options, norm, result.diagnostics).dump() << '\n';
    } else {
        rep << "method,n,m,relative_residual,time_mean_s,reps,capacitance_condition\n"
            << to_string(report.method) << ',' << report.n << ',' << report.m << ','
            << format_sci5(report.relative_residual) << ',' << format_sci5(report.time_mean_s)
            << ',' << report.reps << ','
            << (report.capacitance_condition ? format_sci5(*report.capacitance_condition) : "")
            << '\n';
    }
    if (a.report_out == "stdout") {
        out << rep.str();
    } else {
        std::ofstream f(a.report_out);
        if (!f) throw UsageError("cannot write '" + a.report_out + "'");
        f << rep.str();
    }
    return static_cast<int>(ExitCode::ok);
}

int cmd_bench(const BenchArgs& a, std::ostream& out) {
    BenchConfig config;
    const bool custom_bands = a.diag || a.sup || a.sub;
    if (a.example == "1") {
        config.example = Example::grcar;
    } else if (a.example == "2") {
        config.example = Example::symbol021;
    } else {
        config.example = Example::custom;
        if (!a.diag) throw UsageError("--example custom needs --diag");
    }
    if (config.example != Example::custom && custom_bands) {
        throw UsageError("band flags need --example custom");
    }
    config.sub = a.sub.value_or(0.0);
    config.diag = a.diag.value_or(1.0);
    config.sup = a.sup.value_or(0.0);

    if (!a.pairs.empty()) {
        if (!a.n_list.empty() || !a.m_list.empty()) {
            throw UsageError("--pairs cannot be combined with --n-list/--m-list");
        }
        config.pairs = parse_pairs(a.pairs);
    } else {
        if (a.n_list.empty() || a.m_list.empty()) {
            throw UsageError("give --pairs or both --n-list and --m-list");
        }
        for (auto n : parse_list(a.n_list, "n"))
            for (auto m : parse_list(a.m_list, "m")) config.pairs.emplace_back(n, m);
    }
    config.methods.clear();
    for (const auto& name : split(a.methods, ',')) {
        const auto it = kMethods.find(name);
        if (it == kMethods.end()) throw UsageError("unknown method '" + name + "'");
        config.methods.push_back(it->second);
    }
    if (config.methods.empty()) throw UsageError("--methods is empty");
    config.reps = a.reps;
    config.options = {kInner.at(a.inner), kQinv.at(a.qinv), false};
    config.norm = kNorm.at(a.norm);

    const auto rows = run_bench(config);
    if (a.format == "md") {
        write_markdown(rows, out);
    } else {
        out << csv_header() << '\n';
        for (const auto& r : rows) out << to_csv(r) << '\n';
    }
    return static_cast<int>(ExitCode::ok);
}

template <class Map>
std::vector<std::string> keys(const Map& m) {
    std::vector<std::string> k;
    for (const auto& [name, _] : m) k.push_back(name);
    return k;
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchConfig& config) {
    auto pairs = config.pairs;
    std::ranges::sort(pairs);
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    auto methods = config.methods;
    std::ranges::sort(methods, {}, [](Method m) { return to_string(m); });
    methods.erase(std::unique(methods.begin(), methods.end()), methods.end());

    std::vector<BenchRow> rows;
    for (const auto& [n, m] : pairs) {
        TridiagToeplitz t;
        switch (config.example) {
            case Example::grcar: t = grcar(n); break;
            case Example::symbol021: t = from_symbol(1.0, 0.0, 2.0, n); break;
            case Example::custom: t = from_symbol(config.sub, config.diag, config.sup, n); break;
        }
        const DenseMatrix b = DenseMatrix::ones(n, m);
        for (Method method : methods) {
            BenchRow row{config.example, n, m, method, 0.0, std::nullopt, 0.0, config.reps};
            DenseMatrix x;
            try {
                const auto timing = timed_run(
                    [&] { x = run_method(method, t, b, config.options).x; }, config.reps);
                row.time_mean_s = timing.mean_s;
                row.relative_residual = relative_residual(t, x, b, config.norm);
            } catch (const SolverError& e) {
                row.failure = std::string(e.name());
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string csv_header() { return "example,n,m,method,relative_residual,time_mean_s,reps"; }

std::string residual_cell(const BenchRow& row) {
    return row.failure ? "FAIL(" + *row.failure + ")" : format_sci5(row.relative_residual);
}

std::string to_csv(const BenchRow& row) {
    std::ostringstream s;
    s << example_name(row.example) << ',' << row.n << ',' << row.m << ','
      << to_string(row.method) << ',' << residual_cell(row) << ','
      << (row.failure ? std::string("") : format_sci5(row.time_mean_s)) << ',' << row.reps;
    return s.str();
}

void write_markdown(const std::vector<BenchRow>& rows, std::ostream& out) {
    out << "| example | n | m | method | relative residual | time (s) | reps |\n"
        << "|---|---:|---:|---|---:|---:|---:|\n";
    for (const auto& r : rows) {
        out << "| " << example_name(r.example) << " | " << r.n << " | " << r.m << " | "
            << to_string(r.method) << " | " << residual_cell(r) << " | "
            << (r.failure ? std::string("-") : format_sci5(r.time_mean_s)) << " | " << r.reps
            << " |\n";
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Tridiagonal Toeplitz solver with multiple right-hand sides", "ttmrhs"};
    app.require_subcommand(1);

    SolveArgs s;
    auto* solve = app.add_subcommand("solve", "Solve T X = B once and report the residual");
    solve->add_option("--n", s.n, "Matrix order (rows of B)")->check(CLI::PositiveNumber);
    solve->add_option("--m", s.m, "Number of right-hand sides")->check(CLI::PositiveNumber);
    solve->add_option("--diag", s.diag, "Main diagonal value");
    solve->add_option("--sup", s.sup, "Superdiagonal value (default 0)");
    solve->add_option("--sub", s.sub, "Subdiagonal value (default 0)");
    solve->add_flag("--grcar", s.grcar, "Grcar matrix: sub -1, diag 1, sup 1");
    solve->add_flag("--example2", s.example2, "Zero-diagonal matrix: sub 1, diag 0, sup 2");
    solve->add_option("--rhs", s.rhs, "'ones' or a CSV file");
    solve->add_option("--method", s.method)->check(CLI::IsMember(keys(kMethods)));
    solve->add_option("--inner", s.inner, "Toeplitz solver inside alg1")
        ->check(CLI::IsMember(keys(kInner)));
    solve->add_option("--qinv", s.qinv, "How alg1 applies Q^{-1}")->check(CLI::IsMember(keys(kQinv)));
    solve->add_option("--norm", s.norm, "Residual norm")->check(CLI::IsMember(keys(kNorm)));
    solve->add_option("--out", s.out, "Where to write X ('stdout' or a path)");
    solve->add_option("--report", s.report)->check(CLI::IsMember({"json", "csv"}));
    solve->add_option("--report-out", s.report_out, "Where to write the report");
    solve->add_option("--reps", s.reps, "Timed repetitions")->check(CLI::PositiveNumber);
    solve->add_flag("--parallel", s.parallel, "Run the dual solves on several threads");

    BenchArgs bq;
    auto* bench = app.add_subcommand("bench", "Regenerate residual/timing tables");
    bench->add_option("--example", bq.example, "1 (Grcar), 2 (sub 1, diag 0, sup 2) or custom")
        ->check(CLI::IsMember({"1", "2", "custom"}));
    bench->add_option("--diag", bq.diag);
    bench->add_option("--sup", bq.sup);
    bench->add_option("--sub", bq.sub);
    bench->add_option("--pairs", bq.pairs, "Comma separated n:m cells");
    bench->add_option("--n-list", bq.n_list, "Comma separated orders (cross product with --m-list)");
    bench->add_option("--m-list", bq.m_list, "Comma separated right-hand-side counts");
    bench->add_option("--reps", bq.reps, "Timed repetitions per cell")->check(CLI::PositiveNumber);
    bench->add_option("--methods", bq.methods, "Comma separated: alg1,columnwise,dense");
    bench->add_option("--format", bq.format)->check(CLI::IsMember({"csv", "md"}));
    bench->add_option("--inner", bq.inner)->check(CLI::IsMember(keys(kInner)));
    bench->add_option("--qinv", bq.qinv)->check(CLI::IsMember(keys(kQinv)));
    bench->add_option("--norm", bq.norm)->check(CLI::IsMember(keys(kNorm)));

    std::vector<const char*> argv{"ttmrhs"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return static_cast<int>(ExitCode::ok);
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return static_cast<int>(ExitCode::usage);
    }

    try {
        if (solve->parsed()) return cmd_solve(s, out, err);
        return cmd_bench(bq, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::usage);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::usage);
    }
}

}  // namespace ttmrhs::cli
