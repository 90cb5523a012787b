#include "qentropy/systems.hpp"

#include <cmath>
#include <limits>

#include "qentropy/optimize.hpp"
#include "qentropy/quadrature.hpp"
#include "qentropy/specfun.hpp"

namespace qentropy::systems {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// sin(v/2)/v, stable near v = 0
double half_sinc(double v) {
    if (std::fabs(v) < 1e-4) {
        double v2 = v * v;
        return 0.5 - v2 / 48.0 + v2 * v2 / 3840.0;
    }
    return std::sin(0.5 * v) / v;
}

// unit-scale position density rho_hat(y); density(x) = rho_hat(x/s)/s
double rho_hat(const SystemDescriptor& sys, double y) {
    unsigned n = sys.quantum_number;
    switch (sys.family) {
        case Family::HarmonicOscillator: {
            double q = specfun::hermite(n, y) * std::exp(-0.5 * y * y);
            double log_norm = n * std::log(2.0) +
                              specfun::ln_gamma(n + 1.0) +
                              0.5 * specfun::ln_pi;
            return q * q * std::exp(-log_norm);
        }
        case Family::RobinWall:
            return y >= 0.0 ? 2.0 * std::exp(-2.0 * y) : 0.0;
        case Family::Q1DHydrogen: {
            if (y < 0.0) return 0.0;
            double psi = 2.0 * std::pow(double(n), -2.5) * y *
                         std::exp(-y / n) *
                         specfun::laguerre_gen(n - 1, 1.0, 2.0 * y / n);
            return psi * psi;
        }
        case Family::NeumannWell:
            return std::fabs(y) <= 0.5 ? 1.0 : 0.0;
        case Family::DirichletWell: {
            if (std::fabs(y) > 0.5) return 0.0;
            double t = (n % 2 == 1) ? std::cos(n * specfun::pi * y)
                                    : std::sin(n * specfun::pi * y);
            return 2.0 * t * t;
        }
    }
    return 0.0;
}

// unit-scale momentum density gamma_hat(u); density(k) = s * gamma_hat(s k)
double gamma_hat(const SystemDescriptor& sys, double u) {
    unsigned n = sys.quantum_number;
    switch (sys.family) {
        case Family::HarmonicOscillator:
            return rho_hat(sys, u);  // Fourier mirror of the Gaussian family
        case Family::RobinWall:
            return (1.0 / specfun::pi) / (1.0 + u * u);
        case Family::Q1DHydrogen: {
            double d = 1.0 + double(n) * n * u * u;
            return (2.0 * n / specfun::pi) / (d * d);
        }
        case Family::NeumannWell: {
            double h = half_sinc(u);
            return (2.0 / specfun::pi) * h * h;
        }
        case Family::DirichletWell: {
            double a = half_sinc(n * specfun::pi - u);
            double b = half_sinc(n * specfun::pi + u);
            double amp = (n % 2 == 1) ? a + b : a - b;
            return (1.0 / specfun::pi) * amp * amp;
        }
    }
    return 0.0;
}

// \int_0^C k^2 gamma(k) dk, oscillation-aware for the box wells
double momentum_m2_to_cutoff(const SystemDescriptor& sys, double C) {
    double s = sys.scale;
    auto f = [&](double k) { return k * k * momentum_density(sys, k); };
    if (sys.family != Family::NeumannWell &&
        sys.family != Family::DirichletWell)
        return quad::integrate(f, {0.0, C}, 1e-7).value;
    unsigned n = sys.quantum_number;
    double period = 2.0 * specfun::pi / s;
    double head_end = (n + 4) * specfun::pi / s;
    double total = 0.0;
    for (unsigned j = 0; j < n + 4; ++j)
        total += quad::integrate(f,
                                 {j * specfun::pi / s,
                                  (j + 1) * specfun::pi / s},
                                 1e-9)
                     .value;
    auto m = (unsigned long)std::floor((C - head_end) / period);
    double a = head_end;
    for (unsigned long w = 0; w < m; ++w, a += period)
        total += quad::gk15_panel(f, a, a + period).value;
    return total;
}

// decade ratio test: successive increments over cutoffs 10^2..10^6 / scale;
// persistently non-shrinking increments flag a divergent second moment
bool second_moment_divergent(const SystemDescriptor& sys) {
    double vals[5];
    for (int d = 2; d <= 6; ++d)
        vals[d - 2] = momentum_m2_to_cutoff(sys, std::pow(10.0, d) / sys.scale);
    for (int j = 0; j + 1 < 4; ++j) {
        double inc0 = vals[j + 1] - vals[j];
        double inc1 = vals[j + 2] - vals[j + 1];
        if (!(inc0 > 0.0) || inc1 <= 0.9 * inc0) return false;
    }
    return true;
}

// full second momentum moment for the Dirichlet well (head + closed tail)
double dirichlet_momentum_m2(const SystemDescriptor& sys) {
    double s = sys.scale;
    unsigned n = sys.quantum_number;
    auto f = [&](double k) { return k * k * momentum_density(sys, k); };
    double head = 0.0;
    for (unsigned j = 0; j < n + 4; ++j)
        head += quad::integrate(f,
                                {j * specfun::pi / s,
                                 (j + 1) * specfun::pi / s},
                                1e-9)
                    .value;
    double tail = quad::integrate_oscillatory_tail(
                      f, 2.0 * specfun::pi / s, (n + 4) * specfun::pi / s,
                      1e-9, quad::DecayHint{2.0, false})
                      .value;
    return 2.0 * (head + tail);
}

double scan_sup(const SystemDescriptor& sys, bool momentum, double lo,
                double hi, int npts) {
    auto f = [&](double y) {
        return momentum ? gamma_hat(sys, y) : rho_hat(sys, y);
    };
    return optimize::grid_then_golden_max(f, lo, hi, npts, 1e-12).second;
}

}  // namespace

void validate(const SystemDescriptor& sys) {
    if (!(sys.scale > 0.0) || !std::isfinite(sys.scale))
        throw std::invalid_argument("scale must be positive and finite");
    unsigned n = sys.quantum_number;
    switch (sys.family) {
        case Family::HarmonicOscillator:
            if (n > 30)
                throw std::invalid_argument(
                    "oscillator level out of range (n <= 30)");
            return;
        case Family::RobinWall:
            if (n != 1)
                throw std::invalid_argument(
                    "the attractive Robin wall has a single bound state (n = "
                    "1)");
            return;
        case Family::Q1DHydrogen:
            if (n < 1 || n > 10)
                throw std::invalid_argument(
                    "hydrogen level out of range (1 <= n <= 10)");
            return;
        case Family::NeumannWell:
            if (n != 0)
                throw std::invalid_argument(
                    "only the Neumann ground state (n = 0) is supported");
            return;
        case Family::DirichletWell:
            if (n < 1)
                throw std::invalid_argument("Dirichlet levels start at n = 1");
            return;
    }
    throw std::invalid_argument("unknown family");
}

double position_density(const SystemDescriptor& sys, double x) {
    validate(sys);
    if (!std::isfinite(x)) return 0.0;
    return rho_hat(sys, x / sys.scale) / sys.scale;
}

double momentum_density(const SystemDescriptor& sys, double k) {
    validate(sys);
    if (!std::isfinite(k)) return 0.0;
    return sys.scale * gamma_hat(sys, sys.scale * k);
}

double density(const SystemDescriptor& sys, Space space, double point) {
    return space == Space::Position ? position_density(sys, point)
                                    : momentum_density(sys, point);
}

double energy(const SystemDescriptor& sys) {
    validate(sys);
    unsigned n = sys.quantum_number;
    switch (sys.family) {
        case Family::HarmonicOscillator:
            return n + 0.5;
        case Family::RobinWall:
            return -0.5;
        case Family::Q1DHydrogen:
            return -0.5 / (double(n) * n);
        case Family::NeumannWell:
            return 0.0;
        case Family::DirichletWell:
            return (n * specfun::pi) * (n * specfun::pi);
    }
    return 0.0;
}

Support support(const SystemDescriptor& sys, Space space) {
    validate(sys);
    if (space == Space::Momentum) return {-kInf, kInf};
    switch (sys.family) {
        case Family::HarmonicOscillator:
            return {-kInf, kInf};
        case Family::RobinWall:
        case Family::Q1DHydrogen:
            return {0.0, kInf};
        case Family::NeumannWell:
        case Family::DirichletWell:
            return {-0.5 * sys.scale, 0.5 * sys.scale};
    }
    return {-kInf, kInf};
}

double density_sup(const SystemDescriptor& sys, Space space) {
    validate(sys);
    unsigned n = sys.quantum_number;
    double s = sys.scale;
    bool momentum = (space == Space::Momentum);
    double sup_hat = 0.0;
    switch (sys.family) {
        case Family::HarmonicOscillator:
            // |H_n| e^{-y^2/2} peaks inside the classical turning points
            sup_hat = (n == 0) ? 1.0 / std::sqrt(specfun::pi)
                               : scan_sup(sys, false, 0.0,
                                          std::sqrt(2.0 * n + 1.0) + 2.0,
                                          2001);
            break;
        case Family::RobinWall:
            sup_hat = momentum ? 1.0 / specfun::pi : 2.0;
            break;
        case Family::Q1DHydrogen:
            if (momentum)
                sup_hat = 2.0 * n / specfun::pi;
            else
                sup_hat = (n == 1) ? 4.0 * std::exp(-2.0)
                                   : scan_sup(sys, false, 0.0,
                                              4.0 * n * n + 20.0, 4001);
            break;
        case Family::NeumannWell:
            sup_hat = momentum ? 0.5 / specfun::pi : 1.0;
            break;
        case Family::DirichletWell:
            sup_hat = momentum
                          ? scan_sup(sys, true, 0.0, n * specfun::pi + 16.0,
                                     4001)
                          : 2.0;
            break;
    }
    return momentum ? s * sup_hat : sup_hat / s;
}

Deviation deviation(const SystemDescriptor& sys, Space space) {
    validate(sys);
    unsigned n = sys.quantum_number;
    double s = sys.scale;
    if (space == Space::Position) {
        switch (sys.family) {
            case Family::HarmonicOscillator:
                return {s * std::sqrt(n + 0.5), false};
            case Family::RobinWall:
                return {0.5 * s, false};
            case Family::Q1DHydrogen: {
                auto moment = [&](int p) {
                    return quad::integrate(
                               [&](double y) {
                                   return std::pow(y, p) * rho_hat(sys, y);
                               },
                               {0.0, kInf}, 1e-11)
                        .value;
                };
                double m1 = moment(1), m2 = moment(2);
                return {s * std::sqrt(m2 - m1 * m1), false};
            }
            case Family::NeumannWell:
                return {s / std::sqrt(12.0), false};
            case Family::DirichletWell: {
                double v = 1.0 / 12.0 -
                           0.5 / (double(n) * n * specfun::pi * specfun::pi);
                return {s * std::sqrt(v), false};
            }
        }
    }
    // momentum densities here are even, so the mean vanishes
    switch (sys.family) {
        case Family::HarmonicOscillator:
            return {std::sqrt(n + 0.5) / s, false};
        case Family::Q1DHydrogen: {
            double m2 = 2.0 *
                        quad::integrate(
                            [&](double k) {
                                return k * k * momentum_density(sys, k);
                            },
                            {0.0, kInf}, 1e-11)
                            .value;
            return {std::sqrt(m2), false};
        }
        case Family::RobinWall:
        case Family::NeumannWell:
        case Family::DirichletWell:
            if (second_moment_divergent(sys)) return {kInf, true};
            return {std::sqrt(dirichlet_momentum_m2(sys)), false};
    }
    return {kInf, true};
}

double operator_momentum_variance(const SystemDescriptor& sys) {
    validate(sys);
    unsigned n = sys.quantum_number;
    switch (sys.family) {
        case Family::HarmonicOscillator: {
            double log_norm = n * std::log(2.0) +
                              specfun::ln_gamma(n + 1.0) +
                              0.5 * specfun::ln_pi;
            double c = std::exp(-log_norm) / (sys.scale * sys.scale);
            return quad::integrate(
                       [&](double y) {
                           double dh = n > 0
                                           ? 2.0 * n *
                                                 specfun::hermite(n - 1, y)
                                           : 0.0;
                           double g = dh - y * specfun::hermite(n, y);
                           return c * g * g * std::exp(-y * y);
                       },
                       {-kInf, kInf}, 1e-12)
                .value;
        }
        case Family::NeumannWell:
            return 0.0;  // flat ground state, vanishing derivative
        default:
            throw NotImplemented(
                "operator momentum variance is available for the oscillator "
                "and the Neumann well only");
    }
}

std::string family_name(Family family) {
    switch (family) {
        case Family::HarmonicOscillator:
            return "ho";
        case Family::RobinWall:
            return "robin";
        case Family::Q1DHydrogen:
            return "q1d";
        case Family::NeumannWell:
            return "neumann";
        case Family::DirichletWell:
            return "dirichlet";
    }
    return "unknown";
}

}  // namespace qentropy::systems
