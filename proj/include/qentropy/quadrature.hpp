#pragma once

#include <functional>
#include <optional>
#include <stdexcept>

namespace qentropy::quad {

struct Interval {
    double lo;
    double hi;  // either endpoint may be +-infinity
};

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    int subdivisions = 0;
};

// Raised when the error target is unreachable; carries the best estimate.
struct NonConvergent : std::runtime_error {
    QuadratureResult best;
    explicit NonConvergent(const QuadratureResult& r)
        : std::runtime_error("quadrature failed to converge"), best(r) {}
};

// Raised when the integrand produces NaN at an evaluation point.
struct PropagatedInvalid : std::runtime_error {
    double at;
    explicit PropagatedInvalid(double x)
        : std::runtime_error("integrand returned NaN"), at(x) {}
};

using Fn = std::function<double(double)>;

// Adaptive 15-point Gauss-Kronrod: bisects the subinterval with the largest
// error estimate until sum of errors <= max(abs_tol, rel_tol*|value|).
// Infinite endpoints are mapped onto a finite box (x = t/(1-t^2) and the
// half-line analogues); evaluation points never touch interval endpoints.
QuadratureResult integrate(const Fn& f, Interval domain,
                           double rel_tol = 1e-10, double abs_tol = 0.0);

// Integral over [start, +inf) of a decaying integrand whose sign pattern or
// envelope repeats with the given period.  Per-period window integrals are
// summed directly; the remainder is closed either by an Euler transformation
// (iterated averaging of partial sums) when the windows alternate in sign, or
// by a fitted power-law model summed with Hurwitz-zeta asymptotics when they
// do not.  A window envelope that refuses to decay for 50 consecutive periods
// raises NonConvergent.
// known large-argument envelope of the integrand: |f| ~ x^-power, optionally
// carrying a ln(x) factor; lets the tail closure fit with the exact exponent
struct DecayHint {
    double power;
    bool log_factor = false;
};

QuadratureResult integrate_oscillatory_tail(
    const Fn& f, double period, double start, double rel_tol = 1e-10,
    std::optional<DecayHint> hint = std::nullopt);

// Single non-adaptive 15-point panel; cheap building block for long
// per-period window sums where only modest accuracy is needed.
QuadratureResult gk15_panel(const Fn& f, double a, double b);

}  // namespace qentropy::quad
