#include "qentropy/entropy.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <limits>

#include "qentropy/quadrature.hpp"
#include "qentropy/specfun.hpp"

namespace qentropy::entropy {

namespace {

using systems::Family;
using systems::Space;
using systems::SystemDescriptor;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNearOne = 1e-6;  // crossover to the Shannon limit

double resolve_tol(double rel_tol) {
    return rel_tol > 0.0 ? rel_tol : default_rel_tol();
}

bool momentum_oscillates(const SystemDescriptor& sys) {
    return sys.family == Family::NeumannWell ||
           sys.family == Family::DirichletWell;
}

void require_convergent(const SystemDescriptor& sys, Space space,
                        double alpha) {
    ThresholdInfo info = threshold(sys, space);
    if (alpha > info.alpha_threshold) return;
    char msg[160];
    std::snprintf(msg, sizeof msg,
                  "density-power integral of the %s %s density diverges for "
                  "order %.17g <= %.17g",
                  systems::family_name(sys.family).c_str(),
                  space == Space::Position ? "position" : "momentum", alpha,
                  info.alpha_threshold);
    throw DivergentEntropy(msg, info);
}

struct Assembled {
    double value;
    double err;
};

// box-well momentum integrals: resolved head over the first few lobes, then
// a period-windowed oscillatory tail; densities are even so double the half
Assembled well_momentum_integral(const SystemDescriptor& sys,
                                 const std::function<double(double)>& f,
                                 double rel, quad::DecayHint hint) {
    const double seg = specfun::pi / sys.scale;
    const unsigned nseg = sys.quantum_number + 4;
    double value = 0.0, err = 0.0;
    for (unsigned j = 0; j < nseg; ++j) {
        auto q = quad::integrate(f, {j * seg, (j + 1) * seg}, rel);
        value += q.value;
        err += q.abs_error_estimate;
    }
    auto t =
        quad::integrate_oscillatory_tail(f, 2.0 * seg, nseg * seg, rel, hint);
    value += t.value;
    err += t.abs_error_estimate;
    return {2.0 * value, 2.0 * err};
}

// large-k envelope exponent of the well momentum densities
double well_decay_power(const SystemDescriptor& sys) {
    return sys.family == Family::NeumannWell ? 2.0 : 4.0;
}

EntropyResult from_shannon(EntropyKind kind, const SystemDescriptor& sys,
                           Space space, double alpha, double rel_tol) {
    EntropyResult s = shannon(sys, space, rel_tol);
    return {kind, space, alpha, s.value, s.path, s.abs_error, sys.scale};
}

}  // namespace

ThresholdInfo threshold(const systems::SystemDescriptor& sys, Space space) {
    systems::validate(sys);
    if (space == Space::Position) return {0.0, Divergence::None};
    switch (sys.family) {
        case Family::HarmonicOscillator:
            return {0.0, Divergence::None};
        case Family::RobinWall:
        case Family::NeumannWell:
            return {0.5, Divergence::LogDivergent};
        case Family::Q1DHydrogen:
        case Family::DirichletWell:
            return {0.25, Divergence::PowerDivergent};
    }
    return {0.0, Divergence::None};
}

double default_rel_tol() {
    static const double cached = [] {
        if (const char* env = std::getenv("QENTROPY_REL_TOL")) {
            char* end = nullptr;
            double v = std::strtod(env, &end);
            if (end != env && v > 0.0 && v < 1.0) return v;
        }
        return 1e-10;
    }();
    return cached;
}

std::optional<LnIntegral> closed_ln_integral(const SystemDescriptor& sys,
                                             Space space, double alpha) {
    systems::validate(sys);
    if (!std::isfinite(alpha) || alpha <= 0.0) return std::nullopt;
    if (alpha <= threshold(sys, space).alpha_threshold) return std::nullopt;
    const unsigned n = sys.quantum_number;
    const double ls = std::log(sys.scale);
    // scale covariance: a dilation adds (1-alpha) ln s in position and
    // (alpha-1) ln s in momentum to the log of the density-power integral
    const double shift =
        (space == Space::Position ? 1.0 - alpha : alpha - 1.0) * ls;
    const double ln2 = std::log(2.0);
    double unit = 0.0;
    switch (sys.family) {
        case Family::HarmonicOscillator:
            if (n == 0)
                unit = 0.5 * (1.0 - alpha) * specfun::ln_pi -
                       0.5 * std::log(alpha);
            else if (n == 1)
                unit = alpha * ln2 - 0.5 * alpha * specfun::ln_pi -
                       (alpha + 0.5) * std::log(alpha) +
                       specfun::ln_gamma(alpha + 0.5);
            else
                return std::nullopt;
            break;
        case Family::RobinWall:
            if (space == Space::Position)
                unit = (alpha - 1.0) * ln2 - std::log(alpha);
            else
                unit = -alpha * specfun::ln_pi + 0.5 * specfun::ln_pi +
                       specfun::ln_gamma(alpha - 0.5) -
                       specfun::ln_gamma(alpha);
            break;
        case Family::Q1DHydrogen:
            if (space == Space::Position) {
                if (n != 1) return std::nullopt;
                unit = specfun::ln_gamma(2.0 * alpha + 1.0) - ln2 -
                       (2.0 * alpha + 1.0) * std::log(alpha);
            } else {
                unit = alpha * std::log(2.0 * n / specfun::pi) -
                       std::log(double(n)) + 0.5 * specfun::ln_pi +
                       specfun::ln_gamma(2.0 * alpha - 0.5) -
                       specfun::ln_gamma(2.0 * alpha);
            }
            break;
        case Family::NeumannWell:
        case Family::DirichletWell:
            return std::nullopt;
    }
    return LnIntegral{unit + shift, Path::ClosedForm, 0.0};
}

LnIntegral quadrature_ln_integral(const SystemDescriptor& sys, Space space,
                                  double alpha, double rel_tol) {
    systems::validate(sys);
    if (!std::isfinite(alpha) || alpha <= 0.0)
        throw std::invalid_argument("entropic order must be positive");
    require_convergent(sys, space, alpha);
    const double rel = resolve_tol(rel_tol);
    // rescale by the density supremum so the integrand stays in [0,1]
    const double M = systems::density_sup(sys, space);
    auto g = [&](double p) {
        double r = systems::density(sys, space, p);
        return r > 0.0 ? std::pow(r / M, alpha) : 0.0;
    };
    double value, err;
    if (space == Space::Momentum && momentum_oscillates(sys)) {
        Assembled a = well_momentum_integral(
            sys, g, rel, {alpha * well_decay_power(sys), false});
        value = a.value;
        err = a.err;
    } else {
        auto sup = systems::support(sys, space);
        auto q = quad::integrate(g, {sup.lo, sup.hi}, rel);
        value = q.value;
        err = q.abs_error_estimate;
    }
    return {alpha * std::log(M) + std::log(value), Path::Quadrature,
            err / value};
}

LnIntegral ln_density_integral(const SystemDescriptor& sys, Space space,
                               double alpha, double rel_tol) {
    if (auto closed = closed_ln_integral(sys, space, alpha)) return *closed;
    return quadrature_ln_integral(sys, space, alpha, rel_tol);
}

EntropyResult renyi(const SystemDescriptor& sys, Space space, double alpha,
                    double rel_tol) {
    systems::validate(sys);
    if (std::isnan(alpha) || alpha <= 0.0)
        throw std::invalid_argument("entropic order must be positive");
    if (std::isinf(alpha)) {
        // min-entropy: R(inf) = -ln sup(density)
        double v = -std::log(systems::density_sup(sys, space));
        return {EntropyKind::Renyi, space,        alpha, v,
                Path::Limit,        1e-12 * (1.0 + std::fabs(v)), sys.scale};
    }
    require_convergent(sys, space, alpha);
    if (std::fabs(alpha - 1.0) < kNearOne)
        return from_shannon(EntropyKind::Renyi, sys, space, alpha, rel_tol);
    LnIntegral L = ln_density_integral(sys, space, alpha, rel_tol);
    return {EntropyKind::Renyi,
            space,
            alpha,
            L.value / (1.0 - alpha),
            L.path,
            L.abs_error / std::fabs(1.0 - alpha),
            sys.scale};
}

EntropyResult tsallis(const SystemDescriptor& sys, Space space, double alpha,
                      double rel_tol) {
    systems::validate(sys);
    if (!std::isfinite(alpha) || alpha <= 0.0)
        throw std::invalid_argument(
            "Tsallis order must be positive and finite");
    require_convergent(sys, space, alpha);
    if (std::fabs(alpha - 1.0) < kNearOne)
        return from_shannon(EntropyKind::Tsallis, sys, space, alpha, rel_tol);
    LnIntegral L = ln_density_integral(sys, space, alpha, rel_tol);
    const double u = alpha - 1.0;
    return {EntropyKind::Tsallis,
            space,
            alpha,
            -std::expm1(L.value) / u,
            L.path,
            std::exp(L.value) * L.abs_error / std::fabs(u),
            sys.scale};
}

EntropyResult shannon(const SystemDescriptor& sys, Space space,
                      double rel_tol) {
    systems::validate(sys);
    const unsigned n = sys.quantum_number;
    const double ls = std::log(sys.scale);
    const double sign = (space == Space::Position) ? 1.0 : -1.0;
    const double ln2 = std::log(2.0);
    bool closed = true;
    double unit = 0.0;
    switch (sys.family) {
        case Family::HarmonicOscillator:
            if (n == 0)
                unit = 0.5 * (1.0 + specfun::ln_pi);
            else if (n == 1)
                unit = ln2 + specfun::euler_gamma + 0.5 * specfun::ln_pi - 0.5;
            else
                closed = false;
            break;
        case Family::RobinWall:
            unit = (space == Space::Position) ? 1.0 - ln2
                                              : specfun::ln_pi + 2.0 * ln2;
            break;
        case Family::Q1DHydrogen:
            if (n == 1)
                unit = (space == Space::Position)
                           ? 2.0 * specfun::euler_gamma
                           : specfun::ln_pi + 3.0 * ln2 - 2.0;
            else
                closed = false;
            break;
        case Family::NeumannWell:
        case Family::DirichletWell:
            closed = false;
            break;
    }
    if (closed)
        return {EntropyKind::Shannon, space,          1.0, unit + sign * ls,
                Path::ClosedForm,     0.0, sys.scale};
    const double rel = resolve_tol(rel_tol);
    auto g = [&](double p) {
        double r = systems::density(sys, space, p);
        return r > 0.0 ? -r * std::log(r) : 0.0;
    };
    double value, err;
    if (space == Space::Momentum && momentum_oscillates(sys)) {
        Assembled a = well_momentum_integral(sys, g, rel,
                                             {well_decay_power(sys), true});
        value = a.value;
        err = a.err;
    } else {
        auto sup = systems::support(sys, space);
        auto q = quad::integrate(g, {sup.lo, sup.hi}, rel);
        value = q.value;
        err = q.abs_error_estimate;
    }
    return {EntropyKind::Shannon, space, 1.0, value, Path::Quadrature, err,
            sys.scale};
}

EntropyResult onicescu(const SystemDescriptor& sys, Space space,
                       double rel_tol) {
    LnIntegral L = ln_density_integral(sys, space, 2.0, rel_tol);
    double v = std::exp(L.value);
    return {EntropyKind::Onicescu, space,         2.0,      v,
            L.path,                v * L.abs_error, sys.scale};
}

double conjugate_beta(double alpha) {
    if (std::isnan(alpha) || alpha < 0.5)
        throw std::domain_error("conjugate order requires alpha >= 1/2");
    if (alpha == 0.5) return kInf;
    if (std::isinf(alpha)) return 0.5;
    return alpha / (2.0 * alpha - 1.0);
}

double renyi_from_tsallis(double t, double alpha) {
    if (std::fabs(alpha - 1.0) < 1e-12) return t;
    const double arg = (1.0 - alpha) * t;
    if (1.0 + arg <= 0.0)
        throw std::domain_error(
            "Tsallis value outside the representable range of ln(1+(1-a)T)");
    return std::log1p(arg) / (1.0 - alpha);
}

double tsallis_from_renyi(double r, double alpha) {
    if (std::fabs(alpha - 1.0) < 1e-12) return r;
    return std::expm1((1.0 - alpha) * r) / (1.0 - alpha);
}

Expansion asymptotic_coefficients(const SystemDescriptor& sys, Space space,
                                  Regime regime) {
    systems::validate(sys);
    const unsigned n = sys.quantum_number;
    const double pi = specfun::pi;
    const double pi2 = pi * pi;
    const double ln2 = std::log(2.0);
    const bool pos = (space == Space::Position);
    std::vector<double> c;
    double anchor = 0.0;
    switch (sys.family) {
        case Family::HarmonicOscillator:
            if (n > 1) break;
            if (regime == Regime::AtZero) {
                c = {-0.5, 0.5 * specfun::ln_pi};
            } else if (regime == Regime::NearOne) {
                if (n == 0)
                    c = {0.5 * (1.0 + specfun::ln_pi), -0.25, 1.0 / 6.0};
                else
                    c = {ln2 + specfun::euler_gamma + 0.5 * specfun::ln_pi -
                             0.5,
                         2.25 - 0.25 * pi2};
            } else if (regime == Regime::AtInfinity) {
                if (n == 0)
                    c = {0.5 * specfun::ln_pi, 0.5, 0.0};
                else
                    c = {1.0 - ln2 + 0.5 * specfun::ln_pi, 0.5,
                         1.0 - 1.5 * ln2};
            }
            break;
        case Family::RobinWall:
            if (pos) {
                if (regime == Regime::AtZero)
                    c = {-1.0, -ln2};
                else if (regime == Regime::NearOne)
                    c = {1.0 - ln2, -0.5, 1.0 / 3.0};
                else if (regime == Regime::AtInfinity)
                    c = {-ln2, 1.0, 0.0};
            } else {
                if (regime == Regime::NearOne)
                    c = {specfun::ln_pi + 2.0 * ln2, -pi2 / 6.0,
                         2.0 * specfun::zeta3};
                else if (regime == Regime::AtThreshold) {
                    anchor = 0.5;
                    c = {-2.0, -specfun::ln_pi};
                } else if (regime == Regime::AtInfinity)
                    c = {specfun::ln_pi, 0.5, 0.5 * specfun::ln_pi};
            }
            break;
        case Family::Q1DHydrogen:
            if (pos) {
                if (n != 1) break;
                if (regime == Regime::AtZero)
                    c = {-1.0, -ln2};
                else if (regime == Regime::NearOne)
                    c = {2.0 * specfun::euler_gamma, 3.0 - pi2 / 3.0};
                else if (regime == Regime::AtInfinity)
                    c = {2.0 - 2.0 * ln2, 0.5,
                         0.5 * (4.0 - 4.0 * ln2 - specfun::ln_pi)};
            } else {
                if (regime == Regime::NearOne)
                    c = {specfun::ln_pi + 3.0 * ln2 - 2.0 - std::log(double(n)),
                         6.0 - 2.0 * pi2 / 3.0};
                else if (regime == Regime::AtThreshold) {
                    anchor = 0.25;
                    c = {-4.0 / 3.0,
                         std::log(2.0 * n / pi) / 3.0 -
                             4.0 / 3.0 * std::log(2.0 * n)};
                } else if (regime == Regime::AtInfinity)
                    c = {std::log(0.5 * pi / n), 0.5,
                         0.5 * std::log(0.5 * pi)};
            }
            break;
        case Family::NeumannWell:
        case Family::DirichletWell:
            break;
    }
    if (c.empty())
        throw systems::NotImplemented(
            "no tabulated expansion for this system/space/regime");
    const double shift = (pos ? 1.0 : -1.0) * std::log(sys.scale);
    const std::size_t const_idx =
        (regime == Regime::AtZero || regime == Regime::AtThreshold) ? 1 : 0;
    c[const_idx] += shift;
    return {regime, anchor, std::move(c)};
}

double expansion_value(const Expansion& e, double alpha) {
    switch (e.regime) {
        case Regime::AtZero:
            return e.coeffs[0] * std::log(alpha) + e.coeffs[1];
        case Regime::NearOne: {
            const double u = alpha - 1.0;
            double acc = 0.0, up = 1.0;
            for (double ci : e.coeffs) {
                acc += ci * up;
                up *= u;
            }
            return acc;
        }
        case Regime::AtInfinity:
            return e.coeffs[0] + e.coeffs[1] * std::log(alpha) / alpha +
                   e.coeffs[2] / alpha;
        case Regime::AtThreshold:
            return e.coeffs[0] * std::log(alpha - e.anchor) + e.coeffs[1];
    }
    return 0.0;
}

double tsallis_near_one_slope(const SystemDescriptor& sys, Space space) {
    Expansion e = asymptotic_coefficients(sys, space, Regime::NearOne);
    const double s = shannon(sys, space).value;
    return e.coeffs[1] - 0.5 * s * s;
}

ThresholdExpansion tsallis_threshold_expansion(const SystemDescriptor& sys) {
    systems::validate(sys);
    if (sys.family != Family::Q1DHydrogen)
        throw systems::NotImplemented(
            "threshold expansion is tabulated for the hydrogen momentum "
            "functional only");
    const unsigned n = sys.quantum_number;
    const double a_pref = std::pow(2.0 / (specfun::pi * n * n * n), 0.25) *
                          std::pow(sys.scale, -0.75);
    const double d_term = 0.5 * std::log(2.0 * n / specfun::pi) +
                          2.0 * std::log(2.0) + 0.5 * std::log(sys.scale);
    return {2.0 / 3.0 * a_pref,
            -4.0 / 3.0 + 4.0 / 3.0 * a_pref * d_term + 8.0 / 9.0 * a_pref};
}

}  // namespace qentropy::entropy
