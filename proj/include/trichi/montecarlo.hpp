#pragma once

#include "trichi/triple.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace trichi {

/// Noise model: each side drawn independently as
/// base_side + Gaussian(0, rel_sigma * base_side).
/// Draws with a non-positive side are redrawn as a whole triple.
struct NoiseSpec {
    double base_side = 5.0;
    double rel_sigma = 0.2;
    std::uint64_t n_samples = 100000;
    std::uint64_t seed = 0;
};

struct HistogramBin {
    double lower;
    double upper;
    std::uint64_t count;
};

struct SimulationResult {
    double mean_abs_chi = 0.0;
    /// Fraction of samples with |chi| <= mean_abs_chi (raw, not binned).
    double fraction_below_mean = 0.0;
    /// Fraction of tuples failing the strict triangle inequality
    /// (largest side >= sum of the other two; degenerate counts).
    double violation_rate = 0.0;
    /// Fraction of samples with |chi| > sqrt(3)/144.
    double exceed_chimax_rate = 0.0;
    /// Equal-width bins over [0, max |chi|]; counts sum to n_samples.
    /// Collapses to the single bin [0, 0] when every sample is zero.
    std::vector<HistogramBin> histogram;

    /// Per-sample |chi| in draw order, and whether that tuple satisfied the
    /// strict triangle inequality.
    std::vector<double> abs_chi;
    std::vector<std::uint8_t> strict;
};

/// Deterministic for a fixed spec (including seed): the stream is
/// mt19937-64 + Box-Muller, single-threaded, fixed accumulation order.
SimulationResult simulate(const NoiseSpec& spec, std::size_t histogram_bins = 100);

struct ConfidenceRow {
    double rel_error;
    double chi_threshold;
};

/// One row per error level, in input order. The threshold is the mean of
/// |chi| over noise-only samples; about 75% of such samples fall below it,
/// so a measured |chi| above the threshold is chiral at 75% confidence.
/// Each row runs on its own substream derived from (seed, row index).
std::vector<ConfidenceRow> confidence_table(const std::vector<double>& rel_errors,
                                            std::uint64_t n_samples, std::uint64_t seed);

/// The error levels tabulated by default: 0.01 ... 0.40.
const std::vector<double>& default_error_levels();

struct SignificanceVerdict {
    double chi;
    double threshold;
    bool significant;
    double confidence;  // always 0.75
};

/// Compare |chirality(t)| against the noise-only threshold simulated at the
/// given relative error. chi = 0 is never significant.
SignificanceVerdict is_significant(const SideTriple& t, double rel_error,
                                   std::uint64_t n_samples, std::uint64_t seed);

/// Fraction of raw samples at or below the distribution mean.
double percentile_of_mean(const SimulationResult& r);

}  // namespace trichi
