#include "trichi/extremal.hpp"

#include "trichi/chirality.hpp"

#include <cmath>
#include <stdexcept>

namespace trichi {

namespace {

// Maximize f over [lo, hi] until the bracket is narrower than tol.
template <typename F>
double golden_section_max(F f, double lo, double hi, double tol) {
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - invphi * (hi - lo);
    double x2 = lo + invphi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    while (hi - lo > tol) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + invphi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - invphi * (hi - lo);
            f1 = f(x1);
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

ExtremalResult chi_max_analytic() {
    const double r3 = std::sqrt(3.0);
    const double b = (3.0 - r3) / 12.0;
    return {r3 / 144.0, {0.5, b, (3.0 + r3) / 12.0}, true};
}

SearchResult chi_max_search(std::size_t resolution) {
    if (resolution < 100 || resolution > 50000) {
        throw std::invalid_argument("chi_max_search: resolution must be in [100, 50000]");
    }
    const long long n = static_cast<long long>(resolution);
    const double inv = 1.0 / static_cast<double>(n);

    // Scan the closed region 2i <= n, 2j <= n, 2k <= n, i+j+k = n. Cells with
    // a zero index sit on isosceles corners of the region where chi = 0, so
    // they can never carry the maximum and are skipped.
    double best_chi = -1.0;
    long long best_i = 0, best_j = 0;
    for (long long i = 1; 2 * i <= n; ++i) {
        const long long j_lo = std::max(1LL, n - i - n / 2);
        const long long j_hi = std::min(n / 2, n - i - 1);
        for (long long j = j_lo; j <= j_hi; ++j) {
            const long long k = n - i - j;
            const double v = chirality(SideTriple(static_cast<double>(i) * inv,
                                                  static_cast<double>(j) * inv,
                                                  static_cast<double>(k) * inv));
            // Strictly-greater keeps the first (lexicographically smallest)
            // maximizer, making the scan order-independent.
            if (v > best_chi) {
                best_chi = v;
                best_i = i;
                best_j = j;
            }
        }
    }

    const SideTriple grid_point(static_cast<double>(best_i) * inv,
                                static_cast<double>(best_j) * inv,
                                static_cast<double>(n - best_i - best_j) * inv);

    // chi is invariant under cyclic rotation, so rotate the winner to put its
    // largest side first; the active constraint is then a_bar = 1/2 and the
    // refinement is one-dimensional in b_bar.
    const SideTriple canon = canonicalize_cyclic(grid_point);
    auto boundary_chi = [](double b) {
        return chirality(SideTriple(0.5, b, 0.5 - b));
    };
    const double h = inv;
    const double lo = std::max(canon.b() - 2.0 * h, 1e-9);
    const double hi = std::min(canon.b() + 2.0 * h, 0.5 - 1e-9);
    const double b_star = golden_section_max(boundary_chi, lo, hi, 1e-10);
    const double refined = boundary_chi(b_star);

    SearchResult result;
    result.resolution = resolution;
    result.grid_chi = best_chi;
    result.grid_argmax = {grid_point.a(), grid_point.b(), grid_point.c()};
    if (refined >= best_chi) {
        result.best = {refined, {0.5, b_star, 0.5 - b_star}, true};
    } else {
        // Refinement can only lose against the lattice if the bracket was
        // degenerate; keep the lattice point in that case.
        const NormalizedTriple arg{canon.a(), canon.b(), canon.c()};
        const bool on_boundary = std::fabs(arg.a_bar - 0.5) < 0.5 * h;
        result.best = {best_chi, arg, on_boundary};
    }
    return result;
}

}  // namespace trichi
