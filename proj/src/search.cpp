#include "csforge/search.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "csforge/errors.hpp"
#include "csforge/inequalities.hpp"

namespace csforge {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

struct TrialDraw {
    double p;
    RealVector v;
    RealVector w;
};

TrialDraw draw_trial(const ScanConfig& cfg, std::uint64_t t) {
    TrialRng rng(cfg.seed, t);
    double p;
    if (!cfg.p_grid.empty()) {
        p = cfg.p_grid[t % cfg.p_grid.size()];
    } else {
        do {
            p = cfg.p_min + rng.next_unit() * (cfg.p_max - cfg.p_min);
        } while (p <= 0.0);
    }
    RealVector v = sample_unit_vector(rng, cfg.n, cfg.dist);
    RealVector w = sample_unit_vector(rng, cfg.n, cfg.dist);
    return TrialDraw{p, std::move(v), std::move(w)};
}

ScanRow scan_trial(const ScanConfig& cfg, std::uint64_t t) {
    const TrialDraw draw = draw_trial(cfg, t);
    const InequalityReport report = check_conjecture(draw.p, draw.v, draw.w, /*strict=*/false);
    return ScanRow{draw.p, report.margin, t};
}

}  // namespace

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t trial) {
    // Decorrelate the per-trial streams before drawing.
    std::uint64_t mix = seed;
    state_ = splitmix64(mix);
    mix = state_ ^ (trial * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL);
    state_ = splitmix64(mix);
}

std::uint64_t TrialRng::next_u64() { return splitmix64(state_); }

double TrialRng::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double TrialRng::next_gaussian() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    double u1;
    do {
        u1 = next_unit();
    } while (u1 == 0.0);
    const double u2 = next_unit();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * 3.14159265358979323846 * u2;
    cached_ = radius * std::sin(angle);
    has_cached_ = true;
    return radius * std::cos(angle);
}

void ScanConfig::validate() const {
    if (trials < 1) throw std::invalid_argument("ScanConfig: trials must be at least 1");
    if (n < 1) throw std::invalid_argument("ScanConfig: n must be at least 1");
    if (p_grid.empty()) {
        if (!(p_min >= 0.0) || !(p_max > 0.0) || !(p_min <= p_max)) {
            throw std::invalid_argument("ScanConfig: need 0 <= p_min <= p_max with p_max > 0");
        }
    } else {
        for (double p : p_grid) {
            if (!(p > 0.0)) throw std::invalid_argument("ScanConfig: grid exponents must be > 0");
        }
    }
}

RealVector sample_unit_vector(TrialRng& rng, std::size_t n, VectorDistribution dist) {
    if (n < 1) throw std::invalid_argument("sample_unit_vector: n must be at least 1");
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<double> entries(n);
        double norm_sq = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double g = rng.next_gaussian();
            if (dist == VectorDistribution::nonneg_gaussian_unit_sphere) g = std::abs(g);
            entries[i] = g;
            norm_sq += g * g;
        }
        if (norm_sq == 0.0) continue;
        const double inv = 1.0 / std::sqrt(norm_sq);
        for (double& e : entries) e *= inv;
        return RealVector(std::move(entries));
    }
    throw DegenerateDraw("sample_unit_vector: 100 all-zero draws in a row");
}

ScanResult run_scan(const ScanConfig& cfg, const Tolerance& tol) {
    cfg.validate();
    ScanResult result;
    result.rows.reserve(cfg.trials);
    ScanSummary& summary = result.summary;
    summary.min_diff = std::numeric_limits<double>::infinity();
    summary.min_diff_p_ge_2 = std::numeric_limits<double>::infinity();

    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
        const TrialDraw draw = draw_trial(cfg, t);
        const InequalityReport report =
            check_conjecture(draw.p, draw.v, draw.w, /*strict=*/false, tol);
        const ScanRow row{draw.p, report.margin, t};
        result.rows.push_back(row);

        const bool negative = !report.holds;
        if (negative) ++summary.negative_count;
        if (row.diff < summary.min_diff) {
            summary.min_diff = row.diff;
            summary.argmin_trial = t;
            summary.argmin_p = row.p;
        }
        if (row.p >= 2.0) {
            summary.any_p_ge_2 = true;
            if (negative) ++summary.negative_count_p_ge_2;
            summary.min_diff_p_ge_2 = std::min(summary.min_diff_p_ge_2, row.diff);
        }
    }

    // Reconstruct the argmin inputs so the finding is replayable.
    const TrialDraw argmin = draw_trial(cfg, summary.argmin_trial);
    summary.argmin_inputs =
        DigestBuilder().add("p", argmin.p).add("v", argmin.v).add("w", argmin.w).str();
    return result;
}

double envelope(int n, double p) {
    if (n < 2) throw std::invalid_argument("envelope: n must be at least 2");
    if (!(p > 0.0)) throw ExponentOutOfRange("envelope: p must be positive");
    const double a = std::floor((n + 1) / 2.0);
    const double b = std::ceil((n + 1) / 2.0);
    return 1.0 - std::pow(a * b, (1.0 - p) / 2.0);
}

std::pair<RealVector, RealVector> extremal_pair(int n) {
    if (n < 2) throw std::invalid_argument("extremal_pair: n must be at least 2");
    const int a = (n + 1) / 2;      // floor
    const int b = n + 1 - a;        // ceil
    RealVector v = RealVector::zeros(n);
    RealVector w = RealVector::zeros(n);
    const double va = 1.0 / std::sqrt(static_cast<double>(a));
    const double wb = 1.0 / std::sqrt(static_cast<double>(b));
    for (int i = 0; i < a; ++i) v[i] = va;
    // Supports overlap exactly at index a-1.
    for (int i = a - 1; i < n; ++i) w[i] = wb;
    return {v, w};
}

InequalityReport example_p12(double p, double eps, const Tolerance& tol) {
    if (!(p > 1.0 && p < 2.0)) {
        throw ExponentOutOfRange("example_p12: p must lie in (1, 2)");
    }
    if (eps < 0.0) {
        throw std::invalid_argument("example_p12: eps must be non-negative");
    }
    const RealVector v{1.0, 1.0};
    const RealVector w{1.0, 1.0 + eps};
    return check_conjecture(p, v, w, /*strict=*/true, tol);
}

std::vector<InequalityReport> counterexamples_p01(const Tolerance& tol) {
    const RealVector v{1.0, 1.0};
    const RealVector w_pos{1.0, 2.0};  // margin > 0 across (0,1)
    const RealVector w_neg{0.0, 1.0};  // margin < 0 across (0,1)
    std::vector<InequalityReport> reports;
    constexpr int kGridPoints = 20;
    for (int g = 1; g <= kGridPoints; ++g) {
        const double p = static_cast<double>(g) / (kGridPoints + 1);
        InequalityReport above = check_conjecture(p, v, w_pos, /*strict=*/true, tol);
        above.name = "conjecture-p01-above";
        reports.push_back(std::move(above));
        InequalityReport below = check_conjecture(p, v, w_neg, /*strict=*/false, tol);
        below.name = "conjecture-p01-below";
        reports.push_back(std::move(below));
    }
    return reports;
}

std::uint64_t emit_figure_data(const ScanConfig& cfg, std::ostream& sink,
                               bool with_envelope) {
    cfg.validate();
    sink << (with_envelope ? "p,diff,envelope" : "p,diff") << '\n';
    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
        const ScanRow row = scan_trial(cfg, t);
        sink << format_double(row.p) << ',' << format_double(row.diff);
        if (with_envelope) {
            sink << ',' << format_double(envelope(static_cast<int>(cfg.n), row.p));
        }
        sink << '\n';
        if (!sink) {
            throw std::runtime_error("emit_figure_data: sink write failure");
        }
    }
    return cfg.trials;
}

namespace {

double conjecture_margin(double p, const RealVector& v, const RealVector& w) {
    return check_conjecture(p, v, w, /*strict=*/false).margin;
}

RealVector normalized_nonneg(const std::vector<double>& raw) {
    double norm_sq = 0.0;
    for (double e : raw) norm_sq += e * e;
    const double inv = 1.0 / std::sqrt(norm_sq);
    std::vector<double> out(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) out[i] = std::abs(raw[i]) * inv;
    return RealVector(std::move(out));
}

}  // namespace

HillClimbResult find_p12_counterexample(std::uint64_t seed, std::size_t n, int restarts) {
    if (n < 2) throw std::invalid_argument("find_p12_counterexample: n must be at least 2");
    if (restarts < 1) throw std::invalid_argument("find_p12_counterexample: restarts must be >= 1");

    HillClimbResult best{1.5, RealVector::zeros(n), RealVector::zeros(n),
                         std::numeric_limits<double>::infinity()};
    for (int restart = 0; restart < restarts; ++restart) {
        TrialRng rng(seed, static_cast<std::uint64_t>(restart));
        RealVector v = sample_unit_vector(rng, n, VectorDistribution::nonneg_gaussian_unit_sphere);
        RealVector w = sample_unit_vector(rng, n, VectorDistribution::nonneg_gaussian_unit_sphere);
        double p = 1.0 + rng.next_unit();
        double diff = conjecture_margin(p, v, w);
        double step = 0.1;
        int stale = 0;
        for (int iter = 0; iter < 400 && step > 1e-10; ++iter) {
            // Propose a perturbation of (v, w, p); keep it when -diff improves.
            std::vector<double> cand_v(n), cand_w(n);
            for (std::size_t i = 0; i < n; ++i) {
                cand_v[i] = v[i] + step * rng.next_gaussian();
                cand_w[i] = w[i] + step * rng.next_gaussian();
            }
            double cand_p = p + step * rng.next_gaussian();
            if (cand_p <= 1.0 + 1e-9) cand_p = 1.0 + 1e-9;
            if (cand_p >= 2.0 - 1e-9) cand_p = 2.0 - 1e-9;
            const RealVector nv = normalized_nonneg(cand_v);
            const RealVector nw = normalized_nonneg(cand_w);
            const double cand_diff = conjecture_margin(cand_p, nv, nw);
            if (cand_diff < diff) {
                v = nv;
                w = nw;
                p = cand_p;
                diff = cand_diff;
                stale = 0;
            } else if (++stale >= 20) {
                step *= 0.5;
                stale = 0;
            }
        }
        if (diff < best.diff) best = HillClimbResult{p, v, w, diff};
    }
    return best;
}

}  // namespace csforge
