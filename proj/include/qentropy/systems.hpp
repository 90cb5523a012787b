#pragma once

#include <stdexcept>
#include <string>

namespace qentropy::systems {

enum class Family {
    HarmonicOscillator,
    RobinWall,
    Q1DHydrogen,
    NeumannWell,
    DirichletWell,
};

enum class Space { Position, Momentum };

// family: which solvable system; quantum_number: HO n >= 0, Q1D n in [1,10],
// Robin single bound state (n = 1), Neumann ground only (n = 0),
// Dirichlet n >= 1; scale: characteristic length (r_omega, |Lambda|, x0, a).
struct SystemDescriptor {
    Family family;
    unsigned quantum_number = 0;
    double scale = 1.0;
};

struct NotImplemented : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void validate(const SystemDescriptor& sys);

double position_density(const SystemDescriptor& sys, double x);
double momentum_density(const SystemDescriptor& sys, double k);
double density(const SystemDescriptor& sys, Space space, double point);

// dimensionless level energy in units hbar^2/(m scale^2); HO: n + 1/2,
// Robin: -1/2, Q1D: -1/(2 n^2), Neumann ground: 0, Dirichlet: (n pi)^2.
double energy(const SystemDescriptor& sys);

struct Support {
    double lo, hi;  // +-infinity allowed
};
Support support(const SystemDescriptor& sys, Space space);

// supremum of the density over its support (min-entropy ingredient)
double density_sup(const SystemDescriptor& sys, Space space);

struct Deviation {
    double value;    // standard deviation; +infinity when divergent
    bool divergent;  // second moment grows without bound (decade ratio test)
};
Deviation deviation(const SystemDescriptor& sys, Space space);

// <k^2> from the analytic derivative of the position waveform;
// implemented for HarmonicOscillator and NeumannWell, else NotImplemented.
double operator_momentum_variance(const SystemDescriptor& sys);

std::string family_name(Family family);

}  // namespace qentropy::systems
