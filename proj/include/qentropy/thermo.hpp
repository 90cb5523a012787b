#pragma once

#include <stdexcept>
#include <vector>

#include "qentropy/entropy.hpp"

namespace qentropy::thermo {

// probabilities of a finite event set; k_B = 1 throughout, so discrete
// entropies are dimensionless
struct DiscreteDistribution {
    std::vector<double> probs;
};

struct LevelSystem {
    std::vector<double> energies;  // in units of the reference k_B*T
    double temperature = 1.0;
};

struct EmptySupport : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void validate(const DiscreteDistribution& p);
void validate(const LevelSystem& ls);

// discrete counterpart of the continuous functionals with 0*ln(0) := 0 and
// 0^alpha := 0; Onicescu maps to the information energy sum of p^2
double discrete_entropy(const DiscreteDistribution& p,
                        entropy::EntropyKind kind, double alpha);

struct AdditivityReport {
    double alpha;
    double renyi_gap;    // R_fg - (R_f + R_g)
    double tsallis_gap;  // T_fg - [T_f + T_g + (1 - alpha) T_f T_g]
    double shannon_gap;  // S_fg - (S_f + S_g)
    bool additive;       // every gap within 1e-10
};

// product distribution of two independent measurements against the
// additivity (Renyi, Shannon) and pseudo-additivity (Tsallis) laws
AdditivityReport additivity_check(const DiscreteDistribution& f,
                                  const DiscreteDistribution& g, double alpha);

struct Equilibrium {
    DiscreteDistribution dist;
    double partition;
    bool gibbs_path;      // order within 1e-6 of unity
    bool cutoff_applied;  // at least one nonpositive bracket clipped to 0
};

// entropy-extremizing distribution p_n ~ [1 - (alpha-1) E_n / T]^(1/(alpha-1))
// with the standard cutoff convention; throws EmptySupport when every
// bracket is nonpositive
Equilibrium tsallis_equilibrium(const LevelSystem& ls, double alpha);

struct FreeEnergyReport {
    double alpha;  // ratio of the two temperatures T1/T2
    double lhs;    // Renyi entropy (order alpha) of the Gibbs state at T1
    double rhs;    // -(F(T2) - F(T1))/(T2 - T1) with F = -T ln Z
    double gap;
};

// exact finite-difference identity linking the Renyi entropy of a thermal
// state to the Helmholtz free energy at the two temperatures
FreeEnergyReport renyi_free_energy_identity(
    const std::vector<double>& energies, double t1, double t2);

// stable Boltzmann-Gibbs helpers, exposed for cross-checks
DiscreteDistribution gibbs_distribution(const std::vector<double>& energies,
                                        double temperature);
double log_partition(const std::vector<double>& energies, double temperature);

}  // namespace qentropy::thermo
