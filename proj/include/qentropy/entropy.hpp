#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qentropy/systems.hpp"

namespace qentropy::entropy {

enum class EntropyKind { Renyi, Tsallis, Shannon, Onicescu };

// how a value was obtained: analytic formula, adaptive quadrature, or a
// limiting construction (suprema for infinite order, conjugate at 1/2)
enum class Path { ClosedForm, Quadrature, Limit };

enum class Divergence { None, LogDivergent, PowerDivergent };

// smallest order for which the density-power integral converges; orders at or
// below it make Renyi/Tsallis functionals blow up in the stated fashion
struct ThresholdInfo {
    double alpha_threshold;  // one of 0, 1/4, 1/2
    Divergence divergence;
};

struct EntropyResult {
    EntropyKind kind;
    systems::Space space;
    double alpha;  // order; reported as 1 for Shannon, 2 for Onicescu
    double value;
    Path path;
    double abs_error;  // estimated absolute error (0 for closed forms)
    double scale_used;
};

struct DivergentEntropy : std::runtime_error {
    ThresholdInfo info;
    DivergentEntropy(const std::string& what, ThresholdInfo i)
        : std::runtime_error(what), info(i) {}
};

ThresholdInfo threshold(const systems::SystemDescriptor& sys,
                        systems::Space space);

// resolution order for tolerances: explicit argument, QENTROPY_REL_TOL
// environment variable, built-in 1e-10
double default_rel_tol();

EntropyResult renyi(const systems::SystemDescriptor& sys,
                    systems::Space space, double alpha, double rel_tol = 0.0);
EntropyResult tsallis(const systems::SystemDescriptor& sys,
                      systems::Space space, double alpha,
                      double rel_tol = 0.0);
EntropyResult shannon(const systems::SystemDescriptor& sys,
                      systems::Space space, double rel_tol = 0.0);
EntropyResult onicescu(const systems::SystemDescriptor& sys,
                       systems::Space space, double rel_tol = 0.0);

// conjugate order: 1/alpha + 1/beta = 2; +infinity at alpha = 1/2,
// domain_error below
double conjugate_beta(double alpha);

// functional transforms between the two entropy families at fixed order
double renyi_from_tsallis(double t, double alpha);
double tsallis_from_renyi(double r, double alpha);

// ln of the density-power integral, the common core of both entropies;
// exposed so the two evaluation paths can be compared directly
struct LnIntegral {
    double value;
    Path path;
    double abs_error;
};
std::optional<LnIntegral> closed_ln_integral(
    const systems::SystemDescriptor& sys, systems::Space space, double alpha);
LnIntegral quadrature_ln_integral(const systems::SystemDescriptor& sys,
                                  systems::Space space, double alpha,
                                  double rel_tol = 0.0);
LnIntegral ln_density_integral(const systems::SystemDescriptor& sys,
                               systems::Space space, double alpha,
                               double rel_tol = 0.0);

// tabulated Renyi-entropy expansions; evaluation bases:
//   AtZero:      c0*ln(alpha) + c1
//   NearOne:     c0 + c1*u + c2*u^2 + ...          (u = alpha - 1)
//   AtInfinity:  c0 + c1*ln(alpha)/alpha + c2/alpha
//   AtThreshold: c0*ln(alpha - threshold) + c1
enum class Regime { AtZero, NearOne, AtInfinity, AtThreshold };

struct Expansion {
    Regime regime;
    double anchor;  // threshold order for AtThreshold, 0 otherwise
    std::vector<double> coeffs;
};

// coefficients with the scale folded into the constant term; throws
// systems::NotImplemented where no tabulated expansion exists
Expansion asymptotic_coefficients(const systems::SystemDescriptor& sys,
                                  systems::Space space, Regime regime);
double expansion_value(const Expansion& e, double alpha);

// d/dalpha of the Tsallis functional at alpha = 1, from the identity
// T'(1) = R'(1) - S^2/2; needs a tabulated NearOne expansion
double tsallis_near_one_slope(const systems::SystemDescriptor& sys,
                              systems::Space space);

// leading behavior of the hydrogen momentum Tsallis functional at its
// convergence threshold: T(1/4 + eps) ~ c_inv/eps + c_const
struct ThresholdExpansion {
    double c_inv;
    double c_const;
};
ThresholdExpansion tsallis_threshold_expansion(
    const systems::SystemDescriptor& sys);

}  // namespace qentropy::entropy
