#pragma once

#include <array>
#include <cstddef>

namespace trichi {

/// Ordered side lengths (a, b, c) of a triangle or, more generally, any
/// positive 3-tuple. The order is semantic: labels follow the
/// counter-clockwise side convention, so (a, b, c) and (b, a, c) describe
/// mirror-image objects, not the same one.
///
/// Construction rejects non-positive or non-finite values.
class SideTriple {
public:
    SideTriple(double a, double b, double c);

    double a() const { return s_[0]; }
    double b() const { return s_[1]; }
    double c() const { return s_[2]; }
    double operator[](std::size_t i) const { return s_[i]; }

    double perimeter() const { return s_[0] + s_[1] + s_[2]; }

    friend bool operator==(const SideTriple&, const SideTriple&) = default;

private:
    std::array<double, 3> s_;
};

/// Sides divided by the perimeter: a point of the 2-simplex.
/// Each component lies in (0, 1) and the three sum to 1 within 1e-12.
struct NormalizedTriple {
    double a_bar;
    double b_bar;
    double c_bar;
};

}  // namespace trichi
