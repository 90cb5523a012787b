#pragma once

#include <utility>
#include <vector>

#include "qentropy/systems.hpp"

namespace qentropy::conjecture {

// dyadic approach to the conjectured alpha = 1/2 limit of the entropic
// sum: alpha_j = 1/2 + 2^-j, with the conjugate order beta_j = 2^(j-2) + 1/2
struct ConjectureTrace {
    systems::SystemDescriptor system;
    std::vector<double> alphas;
    std::vector<double> renyi_sums;    // R_rho(alpha_j) + R_gamma(beta_j)
    std::vector<double> tsallis_gaps;  // lhs - rhs of the Sobolev relation
    std::vector<bool> point_ok;        // false where evaluation failed
    double extrapolated_limit;         // eps -> 0 fit of the sums
    double extrapolated_gap;           // eps -> 0 fit of the gaps
    double renyi_target;               // ln(2*pi)
    double gap_target;                 // 0
};

// scans the ground state of a family (throws std::invalid_argument for
// excited states or n_points < 3) and extrapolates with the model
// c0 + c1*eps*ln(eps) + c2*eps, eps = 2*alpha - 1, through the last three
// successful points
ConjectureTrace conjecture_scan(const systems::SystemDescriptor& sys,
                                int n_points, double rel_tol = 0.0);

// R_rho(alpha) + R_gamma(beta) for the Neumann ground state; grows without
// bound as alpha -> infinity (beta approaches the momentum threshold 1/2)
double neumann_renyi_sum(double alpha, double rel_tol = 0.0);

// the two sides of the Sobolev-type relation for a well ground state;
// both equal (2*pi)^(-1/2) for Neumann and 2*pi^(-3/2) for Dirichlet at
// alpha = 1/2
std::pair<double, double> tsallis_sides_well(
    const systems::SystemDescriptor& well, double alpha,
    double rel_tol = 0.0);

}  // namespace qentropy::conjecture
