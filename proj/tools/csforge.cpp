// csforge: checkers, exact SOS verification, tensor demos, and deterministic
// conjecture scans over the generalized Cauchy-Schwarz inequalities.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "csforge/errors.hpp"
#include "csforge/inequalities.hpp"
#include "csforge/multilinear.hpp"
#include "csforge/report.hpp"
#include "csforge/search.hpp"
#include "csforge/sos.hpp"

namespace {

using namespace csforge;

enum class OutputFormat { text, csv, structured };

struct GlobalOptions {
    OutputFormat format = OutputFormat::text;
    Tolerance tol;
    std::uint64_t seed = 0;
};

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;
constexpr int kExitConvergence = 3;

std::vector<double> parse_number_list(const std::string& text, char sep) {
    std::vector<double> out;
    std::string token;
    std::istringstream stream(text);
    while (std::getline(stream, token, sep)) {
        if (token.empty()) continue;
        std::size_t used = 0;
        const double value = std::stod(token, &used);
        if (used != token.size()) {
            throw std::invalid_argument("could not parse number '" + token + "'");
        }
        out.push_back(value);
    }
    if (out.empty()) throw std::invalid_argument("empty number list '" + text + "'");
    return out;
}

RealVector parse_vector(const std::string& text) {
    return RealVector(parse_number_list(text, ','));
}

std::vector<RealVector> parse_vector_list(const std::string& text) {
    std::vector<RealVector> out;
    std::string token;
    std::istringstream stream(text);
    while (std::getline(stream, token, ';')) {
        if (!token.empty()) out.push_back(parse_vector(token));
    }
    if (out.empty()) throw std::invalid_argument("empty vector list");
    return out;
}

DenseMatrix parse_matrix(const std::string& text) {
    const std::vector<RealVector> rows = parse_vector_list(text);
    const std::size_t cols = rows[0].dim();
    std::vector<double> entries;
    entries.reserve(rows.size() * cols);
    for (const auto& row : rows) {
        if (row.dim() != cols) {
            throw std::invalid_argument("matrix rows have unequal lengths");
        }
        for (double e : row) entries.push_back(e);
    }
    return DenseMatrix(rows.size(), cols, std::move(entries));
}

PermutationS2p parse_sigma(const std::string& text) {
    std::vector<int> image;
    for (double v : parse_number_list(text, ',')) {
        image.push_back(static_cast<int>(v));
    }
    return PermutationS2p(image);
}

Rational parse_rational(const std::string& token) {
    // Accept integers, a/b fractions, and decimal literals (scaled exactly).
    if (token.find('/') != std::string::npos) {
        Rational q(token);
        q.canonicalize();
        return q;
    }
    const std::size_t dot = token.find('.');
    if (dot == std::string::npos) {
        Rational q(token);
        q.canonicalize();
        return q;
    }
    std::string digits = token.substr(0, dot) + token.substr(dot + 1);
    const std::size_t frac_digits = token.size() - dot - 1;
    std::string denom = "1";
    denom.append(frac_digits, '0');
    Rational q(digits + "/" + denom);
    q.canonicalize();
    return q;
}

RationalVector parse_rational_vector(const std::string& text) {
    RationalVector out;
    std::string token;
    std::istringstream stream(text);
    while (std::getline(stream, token, ',')) {
        if (!token.empty()) out.push_back(parse_rational(token));
    }
    if (out.empty()) throw std::invalid_argument("empty rational vector");
    return out;
}

/// One vector per line, whitespace-separated decimals, '#' starts a comment.
std::vector<RealVector> read_vectors_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
    std::vector<RealVector> out;
    std::string line;
    while (std::getline(in, line)) {
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream row(line);
        std::vector<double> entries;
        double value = 0.0;
        while (row >> value) entries.push_back(value);
        if (!entries.empty()) out.emplace_back(std::move(entries));
    }
    if (out.empty()) throw std::invalid_argument("no vectors found in '" + path + "'");
    return out;
}

void print_report(const InequalityReport& report, const GlobalOptions& opts,
                  bool with_csv_header = true) {
    switch (opts.format) {
        case OutputFormat::text:
            std::cout << render_line(report) << '\n';
            break;
        case OutputFormat::csv:
            if (with_csv_header) std::cout << render_csv_header() << '\n';
            std::cout << render_csv_row(report) << '\n';
            break;
        case OutputFormat::structured:
            std::cout << render_structured(report) << '\n';
            break;
    }
}

int report_exit_code(const std::vector<InequalityReport>& reports, bool proven) {
    if (!proven) return kExitOk;
    for (const auto& r : reports) {
        if (!r.holds) return kExitViolation;
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

struct CheckFlags {
    std::string name;
    std::string v, w, x;
    std::string X, Y, P;
    std::string xs, ys;
    std::string sigma;
    std::vector<std::string> numbered;  // --v1 ... --v8
    std::optional<double> exponent;
    bool strict = false;
    std::string file;
};

int run_check(const CheckFlags& flags, const GlobalOptions& opts) {
    const RegisteredChecker* checker = find_checker(flags.name);
    if (checker == nullptr) {
        std::cerr << "unknown checker '" << flags.name << "'; available:";
        for (const auto& c : checker_registry()) std::cerr << ' ' << c.name;
        std::cerr << '\n';
        return kExitUsage;
    }

    bool inline_vectors = !flags.v.empty() || !flags.w.empty() || !flags.x.empty() ||
                          !flags.xs.empty() || !flags.ys.empty();
    for (const std::string& s : flags.numbered) inline_vectors = inline_vectors || !s.empty();
    if (!flags.file.empty() && inline_vectors) {
        std::cerr << "choose exactly one input source: --file or inline vectors\n";
        return kExitUsage;
    }

    CheckInputs inputs;
    if (!flags.file.empty()) {
        inputs.vectors = read_vectors_file(flags.file);
    } else {
        for (const std::string& s : {flags.v, flags.w, flags.x}) {
            if (!s.empty()) inputs.vectors.push_back(parse_vector(s));
        }
        for (const std::string& s : flags.numbered) {
            if (!s.empty()) inputs.vectors.push_back(parse_vector(s));
        }
    }
    for (const std::string& s : {flags.X, flags.Y, flags.P}) {
        if (!s.empty()) inputs.matrices.push_back(parse_matrix(s));
    }
    if (!flags.xs.empty()) inputs.xs = parse_vector_list(flags.xs);
    if (!flags.ys.empty()) inputs.ys = parse_vector_list(flags.ys);
    if (!flags.sigma.empty()) inputs.sigma = parse_sigma(flags.sigma);
    inputs.exponent = flags.exponent;
    inputs.strict = flags.strict;

    const std::vector<InequalityReport> reports = checker->run(inputs, opts.tol);
    bool first = true;
    for (const auto& report : reports) {
        print_report(report, opts, first);
        first = false;
    }
    return report_exit_code(reports, checker->proven);
}

// ---------------------------------------------------------------------------
// sos-verify
// ---------------------------------------------------------------------------

struct SosFlags {
    int n = 0;
    int k = 1;
    std::string v, w;
    bool random = false;
    bool exact = false;
};

int run_sos_verify(const SosFlags& flags, const GlobalOptions& opts) {
    std::string v_text = flags.v;
    std::string w_text = flags.w;
    if (flags.random) {
        if (!v_text.empty() || !w_text.empty()) {
            std::cerr << "--random and inline vectors are mutually exclusive\n";
            return kExitUsage;
        }
        if (flags.n < 1) {
            std::cerr << "--random requires --n\n";
            return kExitUsage;
        }
        TrialRng rng(opts.seed, 0);
        auto draw = [&rng, &flags]() {
            std::string text;
            for (int i = 0; i < flags.n; ++i) {
                const int value = static_cast<int>(rng.next_u64() % 21) - 10;
                if (i) text += ',';
                text += std::to_string(value);
            }
            return text;
        };
        v_text = draw();
        w_text = draw();
        std::cout << "# v=" << v_text << " w=" << w_text << '\n';
    }
    if (v_text.empty() || w_text.empty()) {
        std::cerr << "sos-verify needs --v and --w, or --random\n";
        return kExitUsage;
    }

    if (flags.exact) {
        const RationalVector v = parse_rational_vector(v_text);
        const RationalVector w = parse_rational_vector(w_text);
        if (flags.n > 0 && (v.size() != static_cast<std::size_t>(flags.n) ||
                            w.size() != static_cast<std::size_t>(flags.n))) {
            std::cerr << "vector dimension does not match --n\n";
            return kExitUsage;
        }
        const Rational lhs = sos_lhs(v, w, flags.k);
        const Rational rhs = sos_rhs(v, w, flags.k);
        const Rational diff = lhs - rhs;
        std::cout << "lhs " << lhs.get_str() << "\nrhs " << rhs.get_str()
                  << "\ndifference " << diff.get_str() << '\n';
        return diff == 0 ? kExitOk : kExitViolation;
    }

    const RealVector v = parse_vector(v_text);
    const RealVector w = parse_vector(w_text);
    const double lhs = sos_lhs(v, w, flags.k);
    const double rhs = sos_rhs(v, w, flags.k);
    const double diff = lhs - rhs;
    std::cout << "lhs " << format_double(lhs) << "\nrhs " << format_double(rhs)
              << "\ndifference " << format_double(diff) << '\n';
    const bool ok = std::abs(diff) <= opts.tol.allowance(lhs, rhs);
    return ok ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------------------
// scan / figure
// ---------------------------------------------------------------------------

struct ScanFlags {
    std::size_t n = 2;
    std::uint64_t trials = 10000;
    double p_min = 0.0;
    double p_max = 5.0;
    std::string p_range;  // "lo..hi"
    std::string p_grid;
    std::string dist = "nonneg";
    std::string out;
    bool envelope_column = false;
    bool hunt_p12 = false;
    int restarts = 1000;
};

ScanConfig build_scan_config(const ScanFlags& flags, const GlobalOptions& opts) {
    ScanConfig cfg;
    cfg.seed = opts.seed;
    cfg.trials = flags.trials;
    cfg.n = flags.n;
    cfg.p_min = flags.p_min;
    cfg.p_max = flags.p_max;
    if (!flags.p_range.empty()) {
        const std::size_t dots = flags.p_range.find("..");
        if (dots == std::string::npos) {
            throw std::invalid_argument("--p expects the form <lo>..<hi>");
        }
        cfg.p_min = std::stod(flags.p_range.substr(0, dots));
        cfg.p_max = std::stod(flags.p_range.substr(dots + 2));
    }
    if (!flags.p_grid.empty()) cfg.p_grid = parse_number_list(flags.p_grid, ',');
    if (flags.dist == "nonneg") {
        cfg.dist = VectorDistribution::nonneg_gaussian_unit_sphere;
    } else if (flags.dist == "gaussian") {
        cfg.dist = VectorDistribution::gaussian_unit_sphere;
    } else {
        throw std::invalid_argument("--dist must be 'nonneg' or 'gaussian'");
    }
    return cfg;
}

int run_scan_cmd(const ScanFlags& flags, const GlobalOptions& opts) {
    if (flags.hunt_p12) {
        const HillClimbResult best = find_p12_counterexample(opts.seed, flags.n, flags.restarts);
        std::cout << "best-diff " << format_double(best.diff) << '\n'
                  << "p " << format_double(best.p) << '\n'
                  << "inputs " << DigestBuilder().add("v", best.v).add("w", best.w).str()
                  << '\n'
                  << (best.diff < 0.0 ? "counterexample found\n" : "no counterexample\n");
        return kExitOk;
    }

    const ScanConfig cfg = build_scan_config(flags, opts);
    const ScanResult result = run_scan(cfg, opts.tol);
    const ScanSummary& s = result.summary;

    if (!flags.out.empty()) {
        std::ofstream sink(flags.out, std::ios::binary);
        if (!sink) {
            std::cerr << "cannot open '" << flags.out << "' for writing\n";
            return kExitUsage;
        }
        emit_figure_data(cfg, sink, flags.envelope_column);
    }

    std::cout << "trials " << cfg.trials << "\nn " << cfg.n << '\n';
    if (cfg.p_grid.empty()) {
        std::cout << "p-range " << format_double(cfg.p_min) << ".."
                  << format_double(cfg.p_max) << '\n';
    }
    std::cout << "min-diff " << format_double(s.min_diff) << '\n'
              << "argmin-trial " << s.argmin_trial << '\n'
              << "argmin-inputs " << s.argmin_inputs << '\n'
              << "negatives " << s.negative_count << '\n';
    if (s.any_p_ge_2) {
        std::cout << "min-diff-p>=2 " << format_double(s.min_diff_p_ge_2) << '\n'
                  << "negatives-p>=2 " << s.negative_count_p_ge_2 << '\n';
        if (s.negative_count_p_ge_2 > 0) {
            std::cout << "finding: negative margin inside the conjectured range\n";
        }
    }
    return kExitOk;
}

int run_figure(const ScanFlags& flags, const GlobalOptions& opts) {
    const ScanConfig cfg = build_scan_config(flags, opts);
    if (!flags.out.empty()) {
        std::ofstream sink(flags.out, std::ios::binary);
        if (!sink) {
            std::cerr << "cannot open '" << flags.out << "' for writing\n";
            return kExitUsage;
        }
        emit_figure_data(cfg, sink, flags.envelope_column);
        return kExitOk;
    }
    emit_figure_data(cfg, std::cout, flags.envelope_column);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// tensor demos
// ---------------------------------------------------------------------------

struct TensorFlags {
    std::string demo;
    std::vector<std::string> numbered;
    std::string v, w, x;
    std::string sigma;
    int parties = 0;
};

std::vector<RealVector> collect_numbered(const TensorFlags& flags) {
    std::vector<RealVector> out;
    for (const std::string& s : flags.numbered) {
        if (!s.empty()) out.push_back(parse_vector(s));
    }
    if (out.empty()) throw std::invalid_argument("tensor demos need --v1 ... --vp vectors");
    if (flags.parties > 0 && out.size() != static_cast<std::size_t>(flags.parties)) {
        throw std::invalid_argument("--p says " + std::to_string(flags.parties) +
                                    " parties but " + std::to_string(out.size()) +
                                    " vectors were given");
    }
    return out;
}

int run_tensor(const TensorFlags& flags, const GlobalOptions& opts) {
    if (flags.demo == "twirl") {
        const std::vector<RealVector> vs = collect_numbered(flags);
        const MultiTensor X = product_tensor(vs, vs);
        const MultiTensor T = twirl(X);
        std::size_t kept = 0;
        for (double e : T.flat()) kept += e != 0.0;
        std::cout << "trace-before " << format_double(trace(matrix_view(X))) << '\n'
                  << "trace-after " << format_double(trace(matrix_view(T))) << '\n'
                  << "frobenius-before " << format_double(frobenius_norm(matrix_view(X)))
                  << '\n'
                  << "frobenius-after " << format_double(frobenius_norm(matrix_view(T)))
                  << '\n'
                  << "entries-kept " << kept << " of " << T.flat().size() << '\n';
        return kExitOk;
    }
    if (flags.demo == "realign") {
        if (flags.sigma.empty()) throw std::invalid_argument("realign needs --sigma");
        const std::vector<RealVector> vs = collect_numbered(flags);
        const PermutationS2p sigma = parse_sigma(flags.sigma);
        const MultiTensor X = product_tensor(vs, vs);
        const MultiTensor T = twirl(X);
        std::cout << "trace-norm-realigned "
                  << format_double(trace_norm(matrix_view(realign(X, sigma)))) << '\n'
                  << "trace-norm-twirl-realigned "
                  << format_double(trace_norm(matrix_view(realign(T, sigma)))) << '\n'
                  << "trace-bound " << format_double(trace(matrix_view(X))) << '\n';
        return kExitOk;
    }
    if (flags.demo == "generalized") {
        if (flags.sigma.empty()) throw std::invalid_argument("generalized needs --sigma");
        const std::vector<RealVector> vs = collect_numbered(flags);
        const InequalityReport report =
            check_generalized(vs, parse_sigma(flags.sigma), opts.tol);
        print_report(report, opts);
        return report.holds ? kExitOk : kExitViolation;
    }
    if (flags.demo == "tripartite") {
        if (flags.v.empty() || flags.w.empty() || flags.x.empty()) {
            throw std::invalid_argument("tripartite needs --v, --w, and --x");
        }
        const RealVector v = parse_vector(flags.v);
        const RealVector w = parse_vector(flags.w);
        const RealVector x = parse_vector(flags.x);
        const InequalityReport report = check_tripartite(v, w, x, opts.tol);
        const TripartiteBlocks blocks = tripartite_lhs_explicit(v, w, x);
        print_report(report, opts);
        if (opts.format == OutputFormat::structured) {
            nlohmann::ordered_json extra;
            extra["paired"] = blocks.paired;
            extra["cross"] = blocks.cross;
            extra["cells"] = blocks.cells;
            extra["cross_signed"] = blocks.cross_signed;
            extra["total"] = blocks.total();
            std::cout << extra.dump() << '\n';
        } else {
            std::cout << "blocks-paired " << format_double(blocks.paired) << '\n'
                      << "blocks-cross " << format_double(blocks.cross) << '\n'
                      << "blocks-cells " << format_double(blocks.cells) << '\n'
                      << "blocks-cross-signed " << format_double(blocks.cross_signed)
                      << '\n'
                      << "blocks-total " << format_double(blocks.total()) << '\n';
        }
        return report.holds ? kExitOk : kExitViolation;
    }
    std::cerr << "unknown tensor demo '" << flags.demo
              << "' (twirl | realign | generalized | tripartite)\n";
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized Cauchy-Schwarz inequality toolbox"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions opts;
    std::string format = "text";
    app.add_option("--format", format, "output format: text | csv | structured")
        ->check(CLI::IsMember({"text", "csv", "structured"}));
    app.add_option("--atol", opts.tol.atol, "absolute tolerance (default 1e-12)");
    app.add_option("--rtol", opts.tol.rtol, "relative tolerance (default 1e-9)");
    auto* seed_opt = app.add_option("--seed", opts.seed, "RNG seed (default CS_FORGE_SEED or 0)");

    CheckFlags check_flags;
    CLI::App* check = app.add_subcommand("check", "evaluate a named inequality checker");
    check->add_option("name", check_flags.name, "checker name")->required();
    check->add_option("--v", check_flags.v, "vector, comma-separated");
    check->add_option("--w", check_flags.w, "vector");
    check->add_option("--x", check_flags.x, "vector");
    check->add_option("--X", check_flags.X, "matrix, rows ';'-separated");
    check->add_option("--Y", check_flags.Y, "matrix");
    check->add_option("--P", check_flags.P, "projection matrix");
    check->add_option("--xs", check_flags.xs, "';'-separated vectors");
    check->add_option("--ys", check_flags.ys, "';'-separated vectors");
    check->add_option("--sigma", check_flags.sigma, "permutation, one-line image");
    check_flags.numbered.resize(8);
    for (std::size_t i = 0; i < check_flags.numbered.size(); ++i) {
        check->add_option("--v" + std::to_string(i + 1), check_flags.numbered[i],
                          "numbered vector");
    }
    double check_exp = 0.0;
    double check_p = 0.0;
    auto* exp_opt = check->add_option("--exp", check_exp, "exponent x");
    auto* p_opt = check->add_option("--p", check_p, "exponent p");
    check->add_flag("--strict", check_flags.strict, "require strictly positive entries");
    check->add_option("--file", check_flags.file,
                      "vectors from file, one per line, '#' comments");

    SosFlags sos_flags;
    CLI::App* sos = app.add_subcommand("sos-verify", "verify the sum-of-squares identity");
    sos->add_option("--n", sos_flags.n, "dimension (for --random)");
    sos->add_option("--k", sos_flags.k, "half the exponent, k >= 1")->required();
    sos->add_option("--v", sos_flags.v, "vector (rationals allowed with --exact)");
    sos->add_option("--w", sos_flags.w, "vector");
    sos->add_flag("--random", sos_flags.random, "draw random integer vectors");
    sos->add_flag("--exact", sos_flags.exact, "exact rational arithmetic");

    ScanFlags scan_flags;
    CLI::App* scan = app.add_subcommand("scan", "conjecture scan summary");
    scan->add_option("--n", scan_flags.n, "vector dimension");
    scan->add_option("--trials", scan_flags.trials, "number of trials");
    scan->add_option("--p", scan_flags.p_range, "exponent range lo..hi");
    scan->add_option("--p-min", scan_flags.p_min, "lower exponent bound");
    scan->add_option("--p-max", scan_flags.p_max, "upper exponent bound");
    scan->add_option("--p-grid", scan_flags.p_grid, "fixed exponent grid a,b,c");
    scan->add_option("--dist", scan_flags.dist, "nonneg | gaussian");
    scan->add_option("--out", scan_flags.out, "also write CSV rows to this file");
    scan->add_flag("--envelope", scan_flags.envelope_column, "add envelope column to --out");
    scan->add_flag("--hunt-p12", scan_flags.hunt_p12,
                   "hill-climb for a p in (1,2) counterexample instead of scanning");
    scan->add_option("--restarts", scan_flags.restarts, "hill-climb restarts");

    ScanFlags figure_flags;
    CLI::App* figure = app.add_subcommand("figure", "emit scatter CSV (p, diff)");
    figure->add_option("--n", figure_flags.n, "vector dimension");
    figure->add_option("--trials", figure_flags.trials, "number of trials");
    figure->add_option("--p-min", figure_flags.p_min, "lower exponent bound");
    figure->add_option("--p-max", figure_flags.p_max, "upper exponent bound");
    figure->add_option("--p-grid", figure_flags.p_grid, "fixed exponent grid a,b,c");
    figure->add_option("--dist", figure_flags.dist, "nonneg | gaussian");
    figure->add_option("--out", figure_flags.out, "write to file instead of stdout");
    figure->add_flag("--envelope", figure_flags.envelope_column, "add envelope column");

    TensorFlags tensor_flags;
    CLI::App* tensor = app.add_subcommand("tensor", "tensor demos");
    tensor->add_option("demo", tensor_flags.demo, "twirl | realign | generalized | tripartite")
        ->required();
    tensor_flags.numbered.resize(8);
    for (std::size_t i = 0; i < tensor_flags.numbered.size(); ++i) {
        tensor->add_option("--v" + std::to_string(i + 1), tensor_flags.numbered[i],
                           "numbered vector");
    }
    tensor->add_option("--p", tensor_flags.parties,
                       "party count (checked against the vectors given)");
    tensor->add_option("--v", tensor_flags.v, "vector");
    tensor->add_option("--w", tensor_flags.w, "vector");
    tensor->add_option("--x", tensor_flags.x, "vector");
    tensor->add_option("--sigma", tensor_flags.sigma, "permutation, one-line image");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (format == "csv") opts.format = OutputFormat::csv;
    if (format == "structured") opts.format = OutputFormat::structured;
    if (seed_opt->count() == 0) {
        if (const char* env = std::getenv("CS_FORGE_SEED")) {
            opts.seed = std::strtoull(env, nullptr, 10);
        }
    }
    if (exp_opt->count() > 0) {
        check_flags.exponent = check_exp;
    } else if (p_opt->count() > 0) {
        check_flags.exponent = check_p;
    }

    try {
        if (check->parsed()) return run_check(check_flags, opts);
        if (sos->parsed()) return run_sos_verify(sos_flags, opts);
        if (scan->parsed()) return run_scan_cmd(scan_flags, opts);
        if (figure->parsed()) return run_figure(figure_flags, opts);
        if (tensor->parsed()) return run_tensor(tensor_flags, opts);
    } catch (const ConvergenceFailure& e) {
        std::cerr << "convergence failure: " << e.what() << '\n';
        return kExitConvergence;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
