#include "qentropy/conjecture.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qentropy/entropy.hpp"
#include "qentropy/quadrature.hpp"
#include "qentropy/specfun.hpp"
#include "qentropy/uncertainty.hpp"

namespace qentropy::conjecture {

namespace {

bool is_ground(const systems::SystemDescriptor& sys) {
    switch (sys.family) {
        case systems::Family::HarmonicOscillator:
        case systems::Family::NeumannWell:
            return sys.quantum_number == 0;
        case systems::Family::RobinWall:
        case systems::Family::Q1DHydrogen:
        case systems::Family::DirichletWell:
            return sys.quantum_number == 1;
    }
    return false;
}

// value at eps = 0 of the interpolant c0 + c1*eps*ln(eps) + c2*eps through
// the last three successful points
double extrapolate(const std::vector<double>& eps,
                   const std::vector<double>& ys,
                   const std::vector<bool>& ok) {
    int idx[3];
    int have = 0;
    for (int i = static_cast<int>(ys.size()) - 1; i >= 0 && have < 3; --i)
        if (ok[i]) idx[have++] = i;
    if (have < 3) return std::numeric_limits<double>::quiet_NaN();

    long double m[3][3], y[3];
    for (int r = 0; r < 3; ++r) {
        const long double e = eps[idx[r]];
        m[r][0] = 1.0L;
        m[r][1] = e * std::log(static_cast<double>(e));
        m[r][2] = e;
        y[r] = ys[idx[r]];
    }
    const auto det3 = [](const long double a[3][3]) {
        return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
               a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
               a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    };
    const long double d = det3(m);
    long double mc[3][3];
    for (int r = 0; r < 3; ++r) {
        mc[r][0] = y[r];
        mc[r][1] = m[r][1];
        mc[r][2] = m[r][2];
    }
    return static_cast<double>(det3(mc) / d);
}

}  // namespace

ConjectureTrace conjecture_scan(const systems::SystemDescriptor& sys,
                                int n_points, double rel_tol) {
    systems::validate(sys);
    if (!is_ground(sys))
        throw std::invalid_argument(
            "conjecture_scan: only ground states approach the conjectured "
            "limit");
    if (n_points < 3)
        throw std::invalid_argument("conjecture_scan: need at least 3 points");

    ConjectureTrace tr;
    tr.system = sys;
    tr.renyi_target = specfun::ln_2pi;
    tr.gap_target = 0.0;

    std::vector<double> eps;
    for (int j = 1; j <= n_points; ++j) {
        const double alpha = 0.5 + std::ldexp(1.0, -j);
        eps.push_back(2.0 * alpha - 1.0);
        tr.alphas.push_back(alpha);
        double sum = std::numeric_limits<double>::quiet_NaN();
        double gap = std::numeric_limits<double>::quiet_NaN();
        bool ok = true;
        try {
            sum = uncertainty::renyi_relation(sys, alpha, rel_tol).lhs;
            gap = uncertainty::tsallis_relation(sys, alpha, rel_tol).gap;
        } catch (const entropy::DivergentEntropy&) {
            ok = false;
        } catch (const quad::NonConvergent&) {
            ok = false;
        }
        tr.renyi_sums.push_back(sum);
        tr.tsallis_gaps.push_back(gap);
        tr.point_ok.push_back(ok);
    }

    tr.extrapolated_limit = extrapolate(eps, tr.renyi_sums, tr.point_ok);
    tr.extrapolated_gap = extrapolate(eps, tr.tsallis_gaps, tr.point_ok);
    return tr;
}

double neumann_renyi_sum(double alpha, double rel_tol) {
    if (!(alpha > 0.5))
        throw std::domain_error(
            "neumann_renyi_sum: order must exceed 1/2 so the conjugate is "
            "finite");
    const systems::SystemDescriptor neumann{systems::Family::NeumannWell, 0,
                                            1.0};
    return uncertainty::renyi_relation(neumann, alpha, rel_tol).lhs;
}

std::pair<double, double> tsallis_sides_well(
    const systems::SystemDescriptor& well, double alpha, double rel_tol) {
    if (well.family != systems::Family::NeumannWell &&
        well.family != systems::Family::DirichletWell)
        throw std::invalid_argument("tsallis_sides_well: well families only");
    if (!(alpha >= 0.5 && alpha <= 1.0))
        throw std::domain_error(
            "tsallis_sides_well: order must lie in [1/2, 1]");
    const auto rep = uncertainty::tsallis_relation(well, alpha, rel_tol);
    return {rep.lhs, rep.rhs};
}

}  // namespace qentropy::conjecture
