#include "trichi/chirality.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace trichi {

namespace {

// Ascending by (|v|, v). Sorting operands before combining makes the
// evaluation a function of the operand multiset: cyclic rotations reuse the
// same differences, and pair swaps negate all three, so the product flips
// sign exactly.
void sort_abs(double d[3]) {
    auto key_less = [](double x, double y) {
        const double ax = std::fabs(x);
        const double ay = std::fabs(y);
        return ax < ay || (ax == ay && x < y);
    };
    std::sort(d, d + 3, key_less);
}

bool approx_equal(double x, double y, double rel_tol) {
    if (x == y) return true;
    return std::fabs(x - y) <= rel_tol * std::max(std::fabs(x), std::fabs(y));
}

}  // namespace

SideTriple::SideTriple(double a, double b, double c) : s_{a, b, c} {
    for (double v : s_) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw std::invalid_argument("SideTriple: sides must be positive finite numbers");
        }
    }
}

double chirality(const SideTriple& t) {
    double d[3] = {t.a() - t.b(), t.b() - t.c(), t.c() - t.a()};
    sort_abs(d);
    const double num = (d[0] * d[1]) * d[2];
    if (num == 0.0) return 0.0;  // avoid -0.0 for isosceles inputs

    double s[3] = {t.a(), t.b(), t.c()};
    std::sort(s, s + 3);
    const double p = (s[0] + s[1]) + s[2];
    return num / ((p * p) * p);
}

ChiralityResult classify(const SideTriple& t, double rel_tol) {
    if (!(rel_tol >= 0.0)) {
        throw std::invalid_argument("classify: rel_tol must be >= 0");
    }
    const double chi = chirality(t);
    const double a = t.a(), b = t.b(), c = t.c();

    const bool ab = approx_equal(a, b, rel_tol);
    const bool bc = approx_equal(b, c, rel_tol);
    const bool ac = approx_equal(a, c, rel_tol);
    SymmetryClass sym = SymmetryClass::scalene;
    if (ab && bc && ac) {
        sym = SymmetryClass::equilateral;
    } else if (ab || bc || ac) {
        sym = SymmetryClass::isosceles;
    }

    TriangleStatus status;
    if (approx_equal(a, b + c, rel_tol) || approx_equal(b, a + c, rel_tol) ||
        approx_equal(c, a + b, rel_tol)) {
        status = TriangleStatus::degenerate;
    } else if (a < b + c && b < a + c && c < a + b) {
        status = TriangleStatus::strict;
    } else {
        status = TriangleStatus::non_triangle;
    }

    Handedness hand = Handedness::achiral;
    if (chi > 0.0) hand = Handedness::left;
    if (chi < 0.0) hand = Handedness::right;

    return {chi, hand, sym, status};
}

SideTriple cyclic_rotate(const SideTriple& t) {
    return {t.c(), t.a(), t.b()};
}

SideTriple swap_pair(const SideTriple& t, SidePair which) {
    switch (which) {
        case SidePair::ab: return {t.b(), t.a(), t.c()};
        case SidePair::bc: return {t.a(), t.c(), t.b()};
        case SidePair::ac: return {t.c(), t.b(), t.a()};
    }
    throw std::invalid_argument("swap_pair: bad pair index");
}

SideTriple canonicalize_cyclic(const SideTriple& t) {
    std::size_t i = 0;
    if (t[1] > t[i]) i = 1;
    if (t[2] > t[i]) i = 2;
    return {t[i], t[(i + 1) % 3], t[(i + 2) % 3]};
}

SideTriple canonicalize_sorted(const SideTriple& t) {
    double s[3] = {t.a(), t.b(), t.c()};
    std::sort(s, s + 3, std::greater<>());
    return {s[0], s[1], s[2]};
}

const char* to_string(Handedness h) {
    switch (h) {
        case Handedness::left: return "left";
        case Handedness::right: return "right";
        case Handedness::achiral: return "achiral";
    }
    return "?";
}

const char* to_string(SymmetryClass s) {
    switch (s) {
        case SymmetryClass::equilateral: return "equilateral";
        case SymmetryClass::isosceles: return "isosceles";
        case SymmetryClass::scalene: return "scalene";
    }
    return "?";
}

const char* to_string(TriangleStatus s) {
    switch (s) {
        case TriangleStatus::strict: return "strict";
        case TriangleStatus::degenerate: return "degenerate";
        case TriangleStatus::non_triangle: return "non_triangle";
    }
    return "?";
}

}  // namespace trichi
