#include "qentropy/uncertainty.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "qentropy/optimize.hpp"
#include "qentropy/specfun.hpp"

namespace qentropy::uncertainty {

namespace {

constexpr double kOnePlusLnPi = 1.0 + specfun::ln_pi;

UncertaintyReport grade(Relation relation, double alpha, double beta,
                        double lhs, double rhs) {
    UncertaintyReport r;
    r.relation = relation;
    r.alpha = alpha;
    r.beta = beta;
    r.lhs = lhs;
    r.rhs = rhs;
    r.gap = lhs - rhs;
    r.satisfied = r.gap >= -verification_tol;
    r.saturated = std::isfinite(r.gap) && std::fabs(r.gap) <= saturation_tol;
    return r;
}

}  // namespace

double f_bound(double alpha) {
    if (std::isnan(alpha) || alpha < 0.5)
        throw std::domain_error("f_bound: order must be at least 1/2");
    if (alpha == 0.5 || std::isinf(alpha)) return specfun::ln_2pi;
    const double u = alpha - 1.0;
    if (std::fabs(u) < 1e-6) return kOnePlusLnPi - u * u / 6.0;
    return specfun::ln_pi -
           (std::log(alpha) - (alpha - 0.5) / u * std::log(2.0 * alpha - 1.0));
}

UncertaintyReport renyi_relation(const systems::SystemDescriptor& sys,
                                 double alpha, double rel_tol) {
    const double beta = entropy::conjugate_beta(alpha);
    const double lhs =
        entropy::renyi(sys, systems::Space::Position, alpha, rel_tol).value +
        entropy::renyi(sys, systems::Space::Momentum, beta, rel_tol).value;
    return grade(Relation::RenyiSum, alpha, beta, lhs, f_bound(alpha));
}

UncertaintyReport tsallis_relation(const systems::SystemDescriptor& sys,
                                   double alpha, double rel_tol) {
    if (std::isnan(alpha) || alpha < 0.5 || std::isinf(alpha))
        throw std::domain_error("tsallis_relation: order must be finite, >= 1/2");
    const double beta = entropy::conjugate_beta(alpha);
    const auto lp =
        entropy::ln_density_integral(sys, systems::Space::Position, alpha,
                                     rel_tol);
    const double lhs = std::exp(0.25 / alpha * std::log(alpha / specfun::pi) +
                                lp.value / (2.0 * alpha));
    double rhs;
    if (std::isinf(beta)) {
        rhs = std::sqrt(systems::density_sup(sys, systems::Space::Momentum));
    } else {
        const auto lm =
            entropy::ln_density_integral(sys, systems::Space::Momentum, beta,
                                         rel_tol);
        rhs = std::exp(0.25 / beta * std::log(beta / specfun::pi) +
                       lm.value / (2.0 * beta));
    }
    return grade(Relation::TsallisSobolev, alpha, beta, lhs, rhs);
}

UncertaintyReport shannon_relation(const systems::SystemDescriptor& sys,
                                   double rel_tol) {
    const double lhs =
        entropy::shannon(sys, systems::Space::Position, rel_tol).value +
        entropy::shannon(sys, systems::Space::Momentum, rel_tol).value;
    return grade(Relation::ShannonSum, 1.0, 1.0, lhs, kOnePlusLnPi);
}

UncertaintyReport heisenberg_relation(const systems::SystemDescriptor& sys,
                                      HeisenbergRoute route) {
    const auto dx = systems::deviation(sys, systems::Space::Position);
    double dk;
    if (route == HeisenbergRoute::OperatorBased) {
        dk = std::sqrt(systems::operator_momentum_variance(sys));
    } else {
        const auto dev = systems::deviation(sys, systems::Space::Momentum);
        dk = dev.divergent ? std::numeric_limits<double>::infinity()
                           : dev.value;
    }
    const double lhs = dx.divergent || std::isinf(dk)
                           ? std::numeric_limits<double>::infinity()
                           : dx.value * dk;
    return grade(Relation::Heisenberg, 2.0, 2.0, lhs, 0.5);
}

SumMaximum find_sum_maximum(const systems::SystemDescriptor& sys,
                            double rel_tol) {
    const double rel = rel_tol > 0.0 ? rel_tol : 1e-7;
    const double lo = 0.5 + 1e-4;
    const double hi = 60.0;
    const auto g = [&](double a) {
        const double b = entropy::conjugate_beta(a);
        return entropy::renyi(sys, systems::Space::Position, a, rel).value +
               entropy::renyi(sys, systems::Space::Momentum, b, rel).value;
    };

    constexpr int npts = 16;
    std::vector<double> xs(npts), ys(npts);
    const double lr = std::log(hi / lo);
    int best = 0;
    for (int i = 0; i < npts; ++i) {
        xs[i] = lo * std::exp(lr * i / (npts - 1));
        ys[i] = g(xs[i]);
        if (ys[i] > ys[best]) best = i;
    }
    if (best == npts - 1 && ys[npts - 1] > ys[npts - 2] &&
        ys[npts - 2] > ys[npts - 3])
        return {xs[best], ys[best], true};

    const double a = xs[best > 0 ? best - 1 : 0];
    const double b = xs[best < npts - 1 ? best + 1 : best];
    auto [x, fx] = optimize::golden_section_max(g, a, b, 1e-3);
    if (ys[best] > fx) return {xs[best], ys[best], false};
    return {x, fx, false};
}

}  // namespace qentropy::uncertainty
