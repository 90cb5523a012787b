#include "qentropy/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qentropy::specfun {

namespace {

// Lanczos approximation, g = 7, 9 coefficients.
constexpr double lanczos_g = 7.0;
constexpr double lanczos_c[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

double ln_gamma_lanczos(double x) {
    // valid for x >= 0.5
    const double z = x - 1.0;
    double a = lanczos_c[0];
    for (int i = 1; i < 9; ++i) a += lanczos_c[i] / (z + i);
    const double t = z + lanczos_g + 0.5;
    return 0.5 * ln_2pi + (z + 0.5) * std::log(t) - t + std::log(a);
}

}  // namespace

double ln_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("ln_gamma: argument must be positive");
    if (x < 0.5) {
        // reflection keeps full accuracy for small arguments
        return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) -
               ln_gamma_lanczos(1.0 - x);
    }
    return ln_gamma_lanczos(x);
}

double hermite(unsigned n, double x) {
    if (n > 60) throw std::domain_error("hermite: n must not exceed 60");
    if (n == 0) return 1.0;
    double hm = 1.0;        // H_0
    double h = 2.0 * x;     // H_1
    for (unsigned k = 1; k < n; ++k) {
        const double hp = 2.0 * x * h - 2.0 * k * hm;
        hm = h;
        h = hp;
    }
    return h;
}

double laguerre_gen(unsigned n, double a, double x) {
    if (n == 0) return 1.0;
    double lm = 1.0;            // L_0
    double l = 1.0 + a - x;     // L_1
    for (unsigned k = 1; k < n; ++k) {
        const double lp = ((2.0 * k + 1.0 + a - x) * l - (k + a) * lm) / (k + 1.0);
        lm = l;
        l = lp;
    }
    return l;
}

}  // namespace qentropy::specfun
