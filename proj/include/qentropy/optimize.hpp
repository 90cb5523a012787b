#pragma once

#include <cmath>
#include <functional>
#include <utility>

namespace qentropy::optimize {

// Golden-section maximization of a unimodal-enough function on [lo, hi].
inline std::pair<double, double> golden_section_max(
    const std::function<double(double)>& f, double lo, double hi, double xtol) {
    constexpr double invphi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > xtol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        }
    }
    const double xm = 0.5 * (a + b);
    const double fm = f(xm);
    if (fm >= f1 && fm >= f2) return {xm, fm};
    return f1 > f2 ? std::make_pair(x1, f1) : std::make_pair(x2, f2);
}

// Coarse grid scan followed by golden-section refinement around the best cell.
inline std::pair<double, double> grid_then_golden_max(
    const std::function<double(double)>& f, double lo, double hi, int npts,
    double xtol) {
    double best_x = lo, best_f = f(lo);
    int best_i = 0;
    for (int i = 1; i < npts; ++i) {
        const double x = lo + (hi - lo) * i / (npts - 1);
        const double fx = f(x);
        if (fx > best_f) {
            best_f = fx;
            best_x = x;
            best_i = i;
        }
    }
    const double step = (hi - lo) / (npts - 1);
    const double a = std::max(lo, best_x - step);
    const double b = std::min(hi, best_x + step);
    (void)best_i;
    auto [x, fx] = golden_section_max(f, a, b, xtol);
    return fx > best_f ? std::make_pair(x, fx) : std::make_pair(best_x, best_f);
}

}  // namespace qentropy::optimize
