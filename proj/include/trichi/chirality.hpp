#pragma once

#include "trichi/triple.hpp"

namespace trichi {

/// Sign of the chirality value. Positive values are called left-handed,
/// negative ones right-handed; zero is achiral.
enum class Handedness { left, right, achiral };

enum class SymmetryClass { equilateral, isosceles, scalene };

/// strict:      every side is less than the sum of the other two
/// degenerate:  one side equals the sum of the other two (within tolerance)
/// non_triangle: one side exceeds the sum of the other two
enum class TriangleStatus { strict, degenerate, non_triangle };

struct ChiralityResult {
    double chi;
    Handedness handedness;
    SymmetryClass symmetry_class;
    TriangleStatus triangle_status;
};

/// Chirality of an ordered side triple:
///
///     chi = (a-b)(b-c)(c-a) / (a+b+c)^3
///
/// The triangle inequality is not required; any positive triple is valid.
///
/// Evaluation order is fixed: the three differences and the perimeter terms
/// are combined in value-sorted order, so every permutation of the inputs
/// reorders the same operand multisets. This makes cyclic images
/// bit-identical and pair swaps an exact sign flip.
double chirality(const SideTriple& t);

/// Full classification of a triple. Side equality (symmetry class) and the
/// degenerate boundary are tested with the relative tolerance `rel_tol`;
/// rel_tol = 0 means exact comparison.
ChiralityResult classify(const SideTriple& t, double rel_tol = 0.0);

/// (a, b, c) -> (c, a, b). Preserves chirality exactly.
SideTriple cyclic_rotate(const SideTriple& t);

enum class SidePair { ab, bc, ac };

/// Exchange the two chosen positions. Negates chirality exactly.
SideTriple swap_pair(const SideTriple& t, SidePair which);

/// The cyclic rotation that puts the largest side first (earliest index
/// wins ties). Chirality is preserved exactly.
SideTriple canonicalize_cyclic(const SideTriple& t);

/// Sides sorted descending. Preserves |chirality| exactly; the result is
/// never positive since a >= b >= c fixes the sign pattern.
SideTriple canonicalize_sorted(const SideTriple& t);

const char* to_string(Handedness h);
const char* to_string(SymmetryClass s);
const char* to_string(TriangleStatus s);

}  // namespace trichi
