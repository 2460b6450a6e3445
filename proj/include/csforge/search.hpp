#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "csforge/report.hpp"
#include "csforge/vectors.hpp"

namespace csforge {

/// Counter-based SplitMix64 stream. Trial t draws from a stream derived from
/// (seed, t), so per-trial results are independent of evaluation order.
class TrialRng {
public:
    TrialRng(std::uint64_t seed, std::uint64_t trial);

    std::uint64_t next_u64();
    /// Uniform in [0, 1) with 53 random bits.
    double next_unit();
    /// Standard normal via Box-Muller (pairs cached).
    double next_gaussian();

private:
    std::uint64_t state_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

enum class VectorDistribution {
    gaussian_unit_sphere,         // uniform on the sphere
    nonneg_gaussian_unit_sphere,  // entrywise absolute values, then normalized
};

/// Configuration of a conjecture scan. p is drawn uniformly from
/// [p_min, p_max] unless p_grid is nonempty, in which case trial t uses
/// p_grid[t mod size].
struct ScanConfig {
    std::uint64_t seed = 0;
    std::uint64_t trials = 1;
    std::size_t n = 2;
    double p_min = 2.0;
    double p_max = 10.0;
    std::vector<double> p_grid;
    VectorDistribution dist = VectorDistribution::nonneg_gaussian_unit_sphere;

    void validate() const;
};

/// One scan sample: diff is the conjecture margin rhs - lhs.
struct ScanRow {
    double p = 0.0;
    double diff = 0.0;
    std::uint64_t trial_index = 0;
};

struct ScanSummary {
    double min_diff = 0.0;
    std::uint64_t argmin_trial = 0;
    double argmin_p = 0.0;
    std::string argmin_inputs;
    /// Rows failing the margin rule, over all sampled p.
    std::uint64_t negative_count = 0;
    /// Same statistics restricted to the conjectured range p >= 2.
    double min_diff_p_ge_2 = 0.0;
    std::uint64_t negative_count_p_ge_2 = 0;
    bool any_p_ge_2 = false;
};

struct ScanResult {
    std::vector<ScanRow> rows;
    ScanSummary summary;
};

/// Unit vector of dimension n; the nonneg variant has all entries >= 0.
/// Throws DegenerateDraw after 100 all-zero draws.
RealVector sample_unit_vector(TrialRng& rng, std::size_t n, VectorDistribution dist);

/// Deterministic scan of the conjecture margin over random unit-vector pairs.
ScanResult run_scan(const ScanConfig& cfg, const Tolerance& tol = {});

/// 1 - (floor((n+1)/2) * ceil((n+1)/2))^((1-p)/2), the observed upper
/// boundary of the scan scatter.
double envelope(int n, double p);

/// Normalized indicator vectors with supports of sizes floor((n+1)/2) and
/// ceil((n+1)/2) overlapping in exactly one coordinate; their conjecture
/// margin equals envelope(n, p) for every p.
std::pair<RealVector, RealVector> extremal_pair(int n);

/// Margin report for v = (1,1), w = (1, 1+eps) at exponent p in (1,2); for
/// small eps the margin is negative, about (p 2^p / 8 - p^2 / 4) eps^2.
InequalityReport example_p12(double p, double eps, const Tolerance& tol = {});

/// The two fixed vector pairs whose margins have opposite signs across
/// p in (0,1), evaluated on a 20-point grid: ((1,1),(1,2)) stays positive,
/// ((1,1),(0,1)) stays negative.
std::vector<InequalityReport> counterexamples_p01(const Tolerance& tol = {});

/// Streams CSV rows `p,diff` (plus an `envelope` column on request) for the
/// configured scan; byte-identical output for identical configs. Returns the
/// number of data rows written.
std::uint64_t emit_figure_data(const ScanConfig& cfg, std::ostream& sink,
                               bool with_envelope = false);

/// Best counterexample found by hill-climbing -margin over (v, w, p) with
/// p in (1,2); diff < 0 means one was found.
struct HillClimbResult {
    double p = 0.0;
    RealVector v;
    RealVector w;
    double diff = 0.0;
};

HillClimbResult find_p12_counterexample(std::uint64_t seed, std::size_t n, int restarts);

}  // namespace csforge
