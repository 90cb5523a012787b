#pragma once

namespace qentropy::specfun {

struct MathConstants {
    double euler_gamma;
    double zeta3;
    double ln_pi;
    double ln_2pi;
};

inline constexpr MathConstants constants{
    0.57721566490153286061,  // Euler-Mascheroni
    1.20205690315959428540,  // zeta(3)
    1.14472988584940017414,  // ln(pi)
    1.83787706640934548356,  // ln(2*pi)
};

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double euler_gamma = constants.euler_gamma;
inline constexpr double zeta3 = constants.zeta3;
inline constexpr double ln_pi = constants.ln_pi;
inline constexpr double ln_2pi = constants.ln_2pi;

// log Gamma(x) for x > 0 (Lanczos, g = 7); throws std::domain_error otherwise.
double ln_gamma(double x);

// Physicists' Hermite polynomial H_n(x) by upward recurrence, n <= 60.
double hermite(unsigned n, double x);

// Generalized Laguerre polynomial L_n^(a)(x) by upward recurrence.
double laguerre_gen(unsigned n, double a, double x);

}  // namespace qentropy::specfun
