#include "trichi/montecarlo.hpp"

#include "trichi/chirality.hpp"
#include "trichi/extremal.hpp"
#include "trichi/random.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace trichi {

namespace {

void validate(const NoiseSpec& spec) {
    if (!(spec.base_side > 0.0) || !std::isfinite(spec.base_side)) {
        throw std::invalid_argument("NoiseSpec: base_side must be positive");
    }
    if (!(spec.rel_sigma >= 0.0) || !std::isfinite(spec.rel_sigma)) {
        throw std::invalid_argument("NoiseSpec: rel_sigma must be >= 0");
    }
    if (spec.n_samples < 1) {
        throw std::invalid_argument("NoiseSpec: n_samples must be >= 1");
    }
}

}  // namespace

SimulationResult simulate(const NoiseSpec& spec, std::size_t histogram_bins) {
    validate(spec);
    if (histogram_bins < 1) {
        throw std::invalid_argument("simulate: histogram_bins must be >= 1");
    }

    const double sigma = spec.rel_sigma * spec.base_side;
    const double chi_max = chi_max_analytic().chi_max;
    GaussianRng rng(spec.seed);

    SimulationResult res;
    res.abs_chi.reserve(spec.n_samples);
    res.strict.reserve(spec.n_samples);

    double sum_abs = 0.0;
    std::uint64_t violations = 0;
    std::uint64_t exceed = 0;

    for (std::uint64_t s = 0; s < spec.n_samples; ++s) {
        double a, b, c;
        do {
            a = spec.base_side + sigma * rng.standard_normal();
            b = spec.base_side + sigma * rng.standard_normal();
            c = spec.base_side + sigma * rng.standard_normal();
        } while (a <= 0.0 || b <= 0.0 || c <= 0.0);

        const double chi = chirality(SideTriple(a, b, c));
        const double abs_chi = std::fabs(chi);
        const bool strict = a < b + c && b < a + c && c < a + b;

        res.abs_chi.push_back(abs_chi);
        res.strict.push_back(strict ? 1 : 0);
        sum_abs += abs_chi;
        if (!strict) ++violations;
        if (abs_chi > chi_max) ++exceed;
    }

    const double n = static_cast<double>(spec.n_samples);
    res.mean_abs_chi = sum_abs / n;
    res.violation_rate = static_cast<double>(violations) / n;
    res.exceed_chimax_rate = static_cast<double>(exceed) / n;

    std::uint64_t below = 0;
    double max_abs = 0.0;
    for (double v : res.abs_chi) {
        if (v <= res.mean_abs_chi) ++below;
        max_abs = std::max(max_abs, v);
    }
    res.fraction_below_mean = static_cast<double>(below) / n;

    if (max_abs == 0.0) {
        res.histogram.push_back({0.0, 0.0, spec.n_samples});
    } else {
        const double width = max_abs / static_cast<double>(histogram_bins);
        res.histogram.resize(histogram_bins);
        for (std::size_t b = 0; b < histogram_bins; ++b) {
            res.histogram[b] = {width * static_cast<double>(b),
                                width * static_cast<double>(b + 1), 0};
        }
        for (double v : res.abs_chi) {
            auto idx = static_cast<std::size_t>(v / width);
            if (idx >= histogram_bins) idx = histogram_bins - 1;  // v == max
            ++res.histogram[idx].count;
        }
    }
    return res;
}

std::vector<ConfidenceRow> confidence_table(const std::vector<double>& rel_errors,
                                            std::uint64_t n_samples, std::uint64_t seed) {
    std::vector<ConfidenceRow> rows;
    rows.reserve(rel_errors.size());
    for (std::size_t i = 0; i < rel_errors.size(); ++i) {
        NoiseSpec spec;
        spec.rel_sigma = rel_errors[i];
        spec.n_samples = n_samples;
        spec.seed = substream_seed(seed, i);
        rows.push_back({rel_errors[i], simulate(spec).mean_abs_chi});
    }
    return rows;
}

const std::vector<double>& default_error_levels() {
    static const std::vector<double> levels = {0.01, 0.025, 0.05, 0.075, 0.10, 0.15,
                                               0.20, 0.25, 0.30, 0.35, 0.40};
    return levels;
}

SignificanceVerdict is_significant(const SideTriple& t, double rel_error,
                                   std::uint64_t n_samples, std::uint64_t seed) {
    if (!(rel_error >= 0.0) || !std::isfinite(rel_error)) {
        throw std::invalid_argument("is_significant: rel_error must be >= 0");
    }
    NoiseSpec spec;
    spec.rel_sigma = rel_error;
    spec.n_samples = n_samples;
    spec.seed = seed;
    const double threshold = simulate(spec).mean_abs_chi;
    const double chi = chirality(t);
    // chi = 0 stays achiral even when the threshold collapses to 0.
    const bool significant = std::fabs(chi) >= threshold && std::fabs(chi) > 0.0;
    return {chi, threshold, significant, 0.75};
}

double percentile_of_mean(const SimulationResult& r) {
    if (r.abs_chi.empty()) {
        throw std::invalid_argument("percentile_of_mean: empty result");
    }
    std::uint64_t below = 0;
    for (double v : r.abs_chi) {
        if (v <= r.mean_abs_chi) ++below;
    }
    return static_cast<double>(below) / static_cast<double>(r.abs_chi.size());
}

}  // namespace trichi
