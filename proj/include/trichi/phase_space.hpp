#pragma once

#include "trichi/triple.hpp"

#include <cstddef>
#include <vector>

namespace trichi {

/// Divide each side by the perimeter. Chirality is unchanged.
NormalizedTriple normalize(const SideTriple& t);

enum class GridDomain { full_simplex, triangle_region };

/// One lattice point of the phase-space simplex.
///
/// segment encodes the strict ordering of (a_bar, b_bar, c_bar):
///   1: a>b>c   2: a>c>b   3: b>a>c   4: b>c>a   5: c>a>b   6: c>b>a
/// and 0 when at least two components are equal (nodal: chi == 0 there).
/// Segments 2, 3, 6 carry positive chi; 1, 4, 5 negative.
struct PhaseCell {
    double a_bar;
    double b_bar;
    double c_bar;
    double chi;
    int segment;
    bool in_triangle;  // every normalized side <= 1/2
};

struct PhaseGrid {
    std::size_t resolution;  // lattice points per simplex edge
    GridDomain domain;
    /// Row-major: a_bar ascending outer, b_bar ascending inner.
    std::vector<PhaseCell> cells;
};

/// Uniform barycentric lattice with resolution points per edge, i.e.
/// (i, j, k)/(resolution-1) with i+j+k = resolution-1. resolution = 2
/// yields the three simplex corners. chi is evaluated from the integer
/// numerator (i-j)(j-k)(k-i), so nodal cells are exactly zero and the six
/// permutation images of a cell carry exactly opposite-signed values.
///
/// domain = triangle_region keeps only cells with every side <= 1/2.
/// Accepts 2 <= resolution <= 4001.
PhaseGrid make_grid(std::size_t resolution, GridDomain domain = GridDomain::full_simplex);

/// The cells lying on the isosceles lines a=b, b=c or a=c. On this lattice
/// a cell is within half a grid spacing of an equality line exactly when it
/// lies on it, so these are precisely the segment == 0 cells.
std::vector<PhaseCell> nodal_lines(const PhaseGrid& g);

const char* to_string(GridDomain d);

}  // namespace trichi
