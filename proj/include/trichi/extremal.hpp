#pragma once

#include "trichi/triple.hpp"

#include <cstddef>

namespace trichi {

struct ExtremalResult {
    /// Largest chirality value attainable by a valid (closed) triangle.
    double chi_max;
    /// Normalized maximizer.
    NormalizedTriple argmax;
    /// True when the maximizer sits on the degenerate boundary
    /// a_bar = b_bar + c_bar, i.e. a_bar = 1/2.
    bool on_boundary;
};

/// Closed-form maximum over the closed triangle-inequality region
/// (every normalized side <= 1/2):
///
///     chi_max = sqrt(3)/144  at  (1/2, (3-sqrt(3))/12, (3+sqrt(3))/12)
///
/// On the active boundary a_bar = 1/2 the value reduces to
/// b(1/2 - b)(1/2 - 2b), whose stationary point solves
/// 6b^2 - 3b + 1/4 = 0.
ExtremalResult chi_max_analytic();

struct SearchResult {
    /// Refined maximizer (golden-section along the active boundary).
    ExtremalResult best;
    /// Best raw lattice value before refinement, and where it was found.
    double grid_chi;
    NormalizedTriple grid_argmax;
    std::size_t resolution;
};

/// Exhaustive scan of the closed triangle region on the lattice
/// (i/res, j/res, k/res), i+j+k = res, followed by a golden-section
/// refinement of b_bar along the boundary a_bar = 1/2 to a bracket width
/// of 1e-10. Ties in the scan keep the lexicographically smallest point.
///
/// Accepts 100 <= resolution <= 50000. The raw lattice value converges to
/// chi_max_analytic() as O(1/resolution^2) when 1/2 lies on the lattice.
SearchResult chi_max_search(std::size_t resolution);

}  // namespace trichi
