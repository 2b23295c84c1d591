#include "trichi/phase_space.hpp"

#include <cstdint>
#include <stdexcept>

namespace trichi {

NormalizedTriple normalize(const SideTriple& t) {
    const double p = t.perimeter();
    return {t.a() / p, t.b() / p, t.c() / p};
}

namespace {

int segment_of(std::int64_t i, std::int64_t j, std::int64_t k) {
    if (i == j || j == k || i == k) return 0;
    if (i > j) {
        if (j > k) return 1;        // a>b>c
        return i > k ? 2 : 5;       // a>c>b : c>a>b
    }
    if (i > k) return 3;            // b>a>c
    return j > k ? 4 : 6;           // b>c>a : c>b>a
}

}  // namespace

PhaseGrid make_grid(std::size_t resolution, GridDomain domain) {
    if (resolution < 2 || resolution > 4001) {
        throw std::invalid_argument("make_grid: resolution must be in [2, 4001]");
    }
    const std::int64_t d = static_cast<std::int64_t>(resolution) - 1;
    const double dd = static_cast<double>(d);
    const double denom = (dd * dd) * dd;

    PhaseGrid grid;
    grid.resolution = resolution;
    grid.domain = domain;
    grid.cells.reserve((resolution * (resolution + 1)) / 2);

    for (std::int64_t i = 0; i <= d; ++i) {
        for (std::int64_t j = 0; j <= d - i; ++j) {
            const std::int64_t k = d - i - j;
            const bool in_triangle = 2 * i <= d && 2 * j <= d && 2 * k <= d;
            if (domain == GridDomain::triangle_region && !in_triangle) continue;

            // Integer numerator: nodal cells are exactly zero and permutation
            // images of a cell get exactly opposite values.
            const std::int64_t num = (i - j) * (j - k) * (k - i);
            PhaseCell cell;
            cell.a_bar = static_cast<double>(i) / dd;
            cell.b_bar = static_cast<double>(j) / dd;
            cell.c_bar = static_cast<double>(k) / dd;
            cell.chi = num == 0 ? 0.0 : static_cast<double>(num) / denom;
            cell.segment = segment_of(i, j, k);
            cell.in_triangle = in_triangle;
            grid.cells.push_back(cell);
        }
    }
    return grid;
}

std::vector<PhaseCell> nodal_lines(const PhaseGrid& g) {
    std::vector<PhaseCell> out;
    for (const PhaseCell& c : g.cells) {
        if (c.segment == 0) out.push_back(c);
    }
    return out;
}

const char* to_string(GridDomain d) {
    return d == GridDomain::full_simplex ? "full_simplex" : "triangle_region";
}

}  // namespace trichi
