#pragma once

#include "qentropy/entropy.hpp"
#include "qentropy/systems.hpp"

namespace qentropy::uncertainty {

enum class Relation { RenyiSum, TsallisSobolev, ShannonSum, Heisenberg };

// second-moment route uses the density's standard deviations; operator route
// differentiates the waveform (exposes the boundary pathology of the wells)
enum class HeisenbergRoute { MomentBased, OperatorBased };

inline constexpr double saturation_tol = 1e-7;
inline constexpr double verification_tol = 1e-9;

struct UncertaintyReport {
    Relation relation;
    double alpha;  // position-side order (2 for the deviation product)
    double beta;   // conjugate momentum-side order (may be +infinity)
    double lhs;
    double rhs;
    double gap;  // lhs - rhs
    bool satisfied;
    bool saturated;  // |gap| <= saturation_tol
};

// lower bound of the position/momentum Renyi entropy sum at conjugate
// orders: ln(pi) - [ln(alpha) - (alpha-1/2)/(alpha-1) * ln(2*alpha - 1)];
// equals 1 + ln(pi) at alpha = 1 and ln(2*pi) at both 1/2 and infinity
double f_bound(double alpha);

// R_rho(alpha) + R_gamma(beta) >= f(alpha) with 1/alpha + 1/beta = 2
UncertaintyReport renyi_relation(const systems::SystemDescriptor& sys,
                                 double alpha, double rel_tol = 0.0);

// (alpha/pi)^(1/4a) [int rho^a]^(1/2a) >= (beta/pi)^(1/4b) [int gamma^b]^(1/2b)
// valid for 1/2 <= alpha <= 1; larger orders are evaluated as a diagnostic
UncertaintyReport tsallis_relation(const systems::SystemDescriptor& sys,
                                   double alpha, double rel_tol = 0.0);

// S_rho + S_gamma >= 1 + ln(pi)
UncertaintyReport shannon_relation(const systems::SystemDescriptor& sys,
                                   double rel_tol = 0.0);

// delta(x) * delta(k) >= 1/2 via the chosen route
UncertaintyReport heisenberg_relation(const systems::SystemDescriptor& sys,
                                      HeisenbergRoute route);

struct SumMaximum {
    double alpha;
    double value;
    bool unbounded;  // sum still climbing at the bracket edge
};

// maximize R_rho(alpha) + R_gamma(beta(alpha)) over alpha in [0.5+1e-4, 60]:
// coarse log-spaced scan refined by golden section
SumMaximum find_sum_maximum(const systems::SystemDescriptor& sys,
                            double rel_tol = 0.0);

}  // namespace qentropy::uncertainty
