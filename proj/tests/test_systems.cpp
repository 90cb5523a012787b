#include <cmath>
#include <limits>
#include <stdexcept>

#include <doctest.h>

#include "qentropy/quadrature.hpp"
#include "qentropy/specfun.hpp"
#include "qentropy/systems.hpp"

namespace sys = qentropy::systems;
namespace quad = qentropy::quad;
namespace sf = qentropy::specfun;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double norm_integral(const sys::SystemDescriptor& d, sys::Space sp) {
    const auto sup = sys::support(d, sp);
    const auto f = [&](double p) { return sys::density(d, sp, p); };
    if (sp == sys::Space::Momentum &&
        (d.family == sys::Family::NeumannWell ||
         d.family == sys::Family::DirichletWell)) {
        // slowly decaying oscillatory tails: per-period windows plus closure
        const double power =
            d.family == sys::Family::NeumannWell ? 2.0 : 4.0;
        const auto half = quad::integrate_oscillatory_tail(
            f, 2.0 * sf::pi / d.scale, 0.0, 1e-10, quad::DecayHint{power});
        return 2.0 * half.value;
    }
    return quad::integrate(f, {sup.lo, sup.hi}, 1e-12).value;
}

}  // namespace

TEST_SUITE("systems") {

TEST_CASE("densities are normalized in both spaces") {
    const sys::SystemDescriptor cases[] = {
        {sys::Family::HarmonicOscillator, 0, 1.0},
        {sys::Family::HarmonicOscillator, 3, 1.0},
        {sys::Family::RobinWall, 1, 1.0},
        {sys::Family::Q1DHydrogen, 1, 1.0},
        {sys::Family::Q1DHydrogen, 4, 1.0},
        {sys::Family::NeumannWell, 0, 1.0},
        {sys::Family::DirichletWell, 1, 1.0},
        {sys::Family::DirichletWell, 3, 1.0},
        {sys::Family::HarmonicOscillator, 1, 2.5},
        {sys::Family::RobinWall, 1, 0.4},
        {sys::Family::NeumannWell, 0, 3.0},
    };
    for (const auto& d : cases) {
        CAPTURE(sys::family_name(d.family));
        CAPTURE(d.quantum_number);
        CAPTURE(d.scale);
        CHECK(norm_integral(d, sys::Space::Position) ==
              doctest::Approx(1.0).epsilon(1e-10));
        CHECK(norm_integral(d, sys::Space::Momentum) ==
              doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("pointwise density values") {
    const sys::SystemDescriptor ho0{sys::Family::HarmonicOscillator, 0, 1.0};
    CHECK(sys::position_density(ho0, 0.0) ==
          doctest::Approx(1.0 / std::sqrt(sf::pi)).epsilon(1e-14));
    CHECK(sys::momentum_density(ho0, 0.0) ==
          doctest::Approx(1.0 / std::sqrt(sf::pi)).epsilon(1e-14));

    const sys::SystemDescriptor robin{sys::Family::RobinWall, 1, 1.0};
    CHECK(sys::position_density(robin, 0.5) ==
          doctest::Approx(2.0 * std::exp(-1.0)).epsilon(1e-14));
    // Lorentzian momentum profile
    CHECK(sys::momentum_density(robin, 0.0) ==
          doctest::Approx(1.0 / sf::pi).epsilon(1e-14));
    CHECK(sys::momentum_density(robin, 1.0) ==
          doctest::Approx(0.5 / sf::pi).epsilon(1e-13));

    const sys::SystemDescriptor q1{sys::Family::Q1DHydrogen, 1, 1.0};
    CHECK(sys::position_density(q1, 1.0) ==
          doctest::Approx(4.0 * std::exp(-2.0)).epsilon(1e-13));

    const sys::SystemDescriptor neu{sys::Family::NeumannWell, 0, 1.0};
    CHECK(sys::position_density(neu, 0.2) == doctest::Approx(1.0));
    CHECK(sys::momentum_density(neu, 0.0) ==
          doctest::Approx(0.5 / sf::pi).epsilon(1e-13));

    const sys::SystemDescriptor dir{sys::Family::DirichletWell, 1, 1.0};
    CHECK(sys::position_density(dir, 0.0) == doctest::Approx(2.0));
    CHECK(sys::momentum_density(dir, 0.0) ==
          doctest::Approx(4.0 / (sf::pi * sf::pi * sf::pi)).epsilon(1e-13));
}

TEST_CASE("hydrogen momentum density at the origin is 2n/pi") {
    for (unsigned n = 1; n <= 4; ++n) {
        const sys::SystemDescriptor d{sys::Family::Q1DHydrogen, n, 1.0};
        CAPTURE(n);
        CHECK(sys::momentum_density(d, 0.0) ==
              doctest::Approx(2.0 * n / sf::pi).epsilon(1e-12));
    }
}

TEST_CASE("densities vanish outside the support") {
    const sys::SystemDescriptor robin{sys::Family::RobinWall, 1, 1.0};
    CHECK(sys::position_density(robin, -0.3) == 0.0);
    const sys::SystemDescriptor neu{sys::Family::NeumannWell, 0, 1.0};
    CHECK(sys::position_density(neu, 0.7) == 0.0);
    const sys::SystemDescriptor dir{sys::Family::DirichletWell, 2, 1.0};
    CHECK(sys::position_density(dir, -0.51) == 0.0);
}

TEST_CASE("mirror symmetry of even-parity densities") {
    const sys::SystemDescriptor mirrored[] = {
        {sys::Family::HarmonicOscillator, 2, 1.3},
        {sys::Family::NeumannWell, 0, 1.0},
        {sys::Family::DirichletWell, 1, 1.0},
        {sys::Family::DirichletWell, 2, 1.0},
    };
    for (const auto& d : mirrored)
        for (const double x : {0.05, 0.21, 0.37, 0.45}) {
            CAPTURE(sys::family_name(d.family));
            CAPTURE(x);
            CHECK(sys::position_density(d, x) ==
                  doctest::Approx(sys::position_density(d, -x))
                      .epsilon(1e-12));
        }
    // momentum densities of real waveforms are even
    const sys::SystemDescriptor all[] = {
        {sys::Family::HarmonicOscillator, 1, 1.0},
        {sys::Family::RobinWall, 1, 1.0},
        {sys::Family::Q1DHydrogen, 2, 1.0},
        {sys::Family::NeumannWell, 0, 1.0},
        {sys::Family::DirichletWell, 2, 1.0},
    };
    for (const auto& d : all)
        for (const double k : {0.3, 1.7, 4.2}) {
            CAPTURE(sys::family_name(d.family));
            CAPTURE(k);
            CHECK(sys::momentum_density(d, k) ==
                  doctest::Approx(sys::momentum_density(d, -k))
                      .epsilon(1e-12));
        }
}

TEST_CASE("scale covariance of the densities") {
    const sys::SystemDescriptor base{sys::Family::Q1DHydrogen, 2, 1.0};
    for (const double s : {0.25, 1.0, 7.3}) {
        const sys::SystemDescriptor scaled{sys::Family::Q1DHydrogen, 2, s};
        for (const double x : {0.4, 1.1, 3.0}) {
            CAPTURE(s);
            CAPTURE(x);
            CHECK(sys::position_density(scaled, x) ==
                  doctest::Approx(sys::position_density(base, x / s) / s)
                      .epsilon(1e-12));
            CHECK(sys::momentum_density(scaled, x) ==
                  doctest::Approx(s * sys::momentum_density(base, s * x))
                      .epsilon(1e-12));
        }
    }
}

TEST_CASE("level energies") {
    CHECK(sys::energy({sys::Family::HarmonicOscillator, 0, 1.0}) ==
          doctest::Approx(0.5));
    CHECK(sys::energy({sys::Family::HarmonicOscillator, 4, 2.0}) ==
          doctest::Approx(4.5));
    CHECK(sys::energy({sys::Family::RobinWall, 1, 1.0}) ==
          doctest::Approx(-0.5));
    CHECK(sys::energy({sys::Family::Q1DHydrogen, 2, 1.0}) ==
          doctest::Approx(-0.125));
    CHECK(sys::energy({sys::Family::NeumannWell, 0, 1.0}) ==
          doctest::Approx(0.0));
    CHECK(sys::energy({sys::Family::DirichletWell, 2, 1.0}) ==
          doctest::Approx(4.0 * sf::pi * sf::pi).epsilon(1e-14));
}

TEST_CASE("supports") {
    const auto ho = sys::support({sys::Family::HarmonicOscillator, 0, 1.0},
                                 sys::Space::Position);
    CHECK(ho.lo == -kInf);
    CHECK(ho.hi == kInf);
    const auto ro =
        sys::support({sys::Family::RobinWall, 1, 1.0}, sys::Space::Position);
    CHECK(ro.lo == 0.0);
    CHECK(ro.hi == kInf);
    const auto we = sys::support({sys::Family::DirichletWell, 1, 4.0},
                                 sys::Space::Position);
    CHECK(we.lo == doctest::Approx(-2.0));
    CHECK(we.hi == doctest::Approx(2.0));
    const auto mo =
        sys::support({sys::Family::DirichletWell, 1, 4.0},
                     sys::Space::Momentum);
    CHECK(mo.lo == -kInf);
    CHECK(mo.hi == kInf);
}

TEST_CASE("density suprema") {
    const double inv_sqrt_pi = 1.0 / std::sqrt(sf::pi);
    CHECK(sys::density_sup({sys::Family::HarmonicOscillator, 0, 1.0},
                           sys::Space::Position) ==
          doctest::Approx(inv_sqrt_pi).epsilon(1e-10));
    CHECK(sys::density_sup({sys::Family::HarmonicOscillator, 0, 1.0},
                           sys::Space::Momentum) ==
          doctest::Approx(inv_sqrt_pi).epsilon(1e-10));
    CHECK(sys::density_sup({sys::Family::RobinWall, 1, 1.0},
                           sys::Space::Position) ==
          doctest::Approx(2.0).epsilon(1e-10));
    CHECK(sys::density_sup({sys::Family::RobinWall, 1, 1.0},
                           sys::Space::Momentum) ==
          doctest::Approx(1.0 / sf::pi).epsilon(1e-10));
    CHECK(sys::density_sup({sys::Family::NeumannWell, 0, 1.0},
                           sys::Space::Position) ==
          doctest::Approx(1.0).epsilon(1e-10));
    CHECK(sys::density_sup({sys::Family::NeumannWell, 0, 1.0},
                           sys::Space::Momentum) ==
          doctest::Approx(0.5 / sf::pi).epsilon(1e-10));
    CHECK(sys::density_sup({sys::Family::DirichletWell, 1, 1.0},
                           sys::Space::Position) ==
          doctest::Approx(2.0).epsilon(1e-10));
    // scale covariance of the supremum
    CHECK(sys::density_sup({sys::Family::RobinWall, 1, 5.0},
                           sys::Space::Position) ==
          doctest::Approx(0.4).epsilon(1e-10));
}

TEST_CASE("standard deviations and divergence flags") {
    const auto dev = [](sys::Family f, unsigned n, sys::Space sp) {
        return sys::deviation({f, n, 1.0}, sp);
    };
    CHECK(dev(sys::Family::HarmonicOscillator, 0, sys::Space::Position)
              .value == doctest::Approx(std::sqrt(0.5)).epsilon(1e-9));
    CHECK(dev(sys::Family::HarmonicOscillator, 1, sys::Space::Momentum)
              .value == doctest::Approx(std::sqrt(1.5)).epsilon(1e-9));
    CHECK(dev(sys::Family::RobinWall, 1, sys::Space::Position).value ==
          doctest::Approx(0.5).epsilon(1e-9));
    const auto robin_mom =
        dev(sys::Family::RobinWall, 1, sys::Space::Momentum);
    CHECK(robin_mom.divergent);
    CHECK(robin_mom.value == kInf);
    const auto neu_mom =
        dev(sys::Family::NeumannWell, 0, sys::Space::Momentum);
    CHECK(neu_mom.divergent);
    CHECK(dev(sys::Family::NeumannWell, 0, sys::Space::Position).value ==
          doctest::Approx(std::sqrt(1.0 / 12.0)).epsilon(1e-9));
    CHECK(dev(sys::Family::DirichletWell, 1, sys::Space::Position).value ==
          doctest::Approx(std::sqrt(1.0 / 12.0 -
                                    0.5 / (sf::pi * sf::pi)))
              .epsilon(1e-9));
    CHECK(dev(sys::Family::DirichletWell, 1, sys::Space::Momentum).value ==
          doctest::Approx(sf::pi).epsilon(1e-9));
    CHECK(dev(sys::Family::Q1DHydrogen, 1, sys::Space::Position).value ==
          doctest::Approx(std::sqrt(0.75)).epsilon(1e-9));
    CHECK(dev(sys::Family::Q1DHydrogen, 1, sys::Space::Momentum).value ==
          doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("operator-route momentum variance") {
    CHECK(sys::operator_momentum_variance(
              {sys::Family::HarmonicOscillator, 2, 1.0}) ==
          doctest::Approx(2.5).epsilon(1e-12));
    CHECK(sys::operator_momentum_variance({sys::Family::NeumannWell, 0,
                                           1.0}) ==
          doctest::Approx(0.0).epsilon(1e-14));
    CHECK_THROWS_AS((void)sys::operator_momentum_variance(
                        {sys::Family::RobinWall, 1, 1.0}),
                    sys::NotImplemented);
}

TEST_CASE("descriptor validation") {
    CHECK_THROWS_AS(sys::validate({sys::Family::RobinWall, 2, 1.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(sys::validate({sys::Family::Q1DHydrogen, 0, 1.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(sys::validate({sys::Family::Q1DHydrogen, 11, 1.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(sys::validate({sys::Family::NeumannWell, 1, 1.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(sys::validate({sys::Family::DirichletWell, 0, 1.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(sys::validate({sys::Family::HarmonicOscillator, 31, 1.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        sys::validate({sys::Family::HarmonicOscillator, 0, -1.0}),
        std::invalid_argument);
    CHECK_THROWS_AS(sys::validate({sys::Family::HarmonicOscillator, 0, 0.0}),
                    std::invalid_argument);
    CHECK_NOTHROW(sys::validate({sys::Family::Q1DHydrogen, 10, 0.1}));
}

TEST_CASE("family names") {
    CHECK(sys::family_name(sys::Family::HarmonicOscillator) == "ho");
    CHECK(sys::family_name(sys::Family::RobinWall) == "robin");
    CHECK(sys::family_name(sys::Family::Q1DHydrogen) == "q1d");
    CHECK(sys::family_name(sys::Family::NeumannWell) == "neumann");
    CHECK(sys::family_name(sys::Family::DirichletWell) == "dirichlet");
}

}  // TEST_SUITE
