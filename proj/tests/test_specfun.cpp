#include <cmath>
#include <limits>
#include <stdexcept>

#include <doctest.h>

#include "qentropy/quadrature.hpp"
#include "qentropy/specfun.hpp"

namespace sf = qentropy::specfun;
namespace quad = qentropy::quad;

TEST_SUITE("specfun") {

TEST_CASE("ln_gamma matches the standard library") {
    for (const double x : {0.1, 0.25, 0.5, 1.0, 1.5, 2.0, 3.75, 10.0, 41.5,
                           171.0, 1e-3, 1e3}) {
        CAPTURE(x);
        CHECK(sf::ln_gamma(x) ==
              doctest::Approx(std::lgamma(x)).epsilon(1e-13));
    }
}

TEST_CASE("ln_gamma special values") {
    CHECK(sf::ln_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(sf::ln_gamma(2.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(sf::ln_gamma(0.5) ==
          doctest::Approx(0.5 * sf::ln_pi).epsilon(1e-14));
    CHECK(sf::ln_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-14));
}

TEST_CASE("ln_gamma functional equation") {
    for (const double x : {0.3, 0.7, 1.9, 6.28, 33.0}) {
        CAPTURE(x);
        CHECK(sf::ln_gamma(x + 1.0) - sf::ln_gamma(x) ==
              doctest::Approx(std::log(x)).epsilon(1e-12));
    }
}

TEST_CASE("ln_gamma rejects the nonpositive axis") {
    CHECK_THROWS_AS((void)sf::ln_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS((void)sf::ln_gamma(-1.5), std::domain_error);
}

TEST_CASE("hermite low orders") {
    CHECK(sf::hermite(0, 3.2) == doctest::Approx(1.0));
    CHECK(sf::hermite(1, 1.5) == doctest::Approx(3.0));
    CHECK(sf::hermite(2, 1.0) == doctest::Approx(2.0));
    CHECK(sf::hermite(3, 1.0) == doctest::Approx(-4.0));
    CHECK(sf::hermite(4, 0.0) == doctest::Approx(12.0));
}

TEST_CASE("hermite recurrence consistency") {
    for (const double x : {-2.3, -0.4, 0.9, 3.1})
        for (unsigned n = 1; n <= 12; ++n) {
            CAPTURE(n);
            CAPTURE(x);
            const double lhs = sf::hermite(n + 1, x);
            const double rhs =
                2.0 * x * sf::hermite(n, x) - 2.0 * n * sf::hermite(n - 1, x);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        }
}

TEST_CASE("hermite orthogonality under the Gaussian weight") {
    const auto ip = [](unsigned m, unsigned n) {
        return quad::integrate(
                   [m, n](double x) {
                       return sf::hermite(m, x) * sf::hermite(n, x) *
                              std::exp(-x * x);
                   },
                   {-std::numeric_limits<double>::infinity(),
                    std::numeric_limits<double>::infinity()},
                   1e-12, 1e-12)
            .value;
    };
    CHECK(ip(2, 3) == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(ip(1, 4) == doctest::Approx(0.0).epsilon(1e-10));
    // ||H_n||^2 = 2^n n! sqrt(pi)
    CHECK(ip(3, 3) ==
          doctest::Approx(8.0 * 6.0 * std::sqrt(sf::pi)).epsilon(1e-10));
}

TEST_CASE("generalized laguerre low orders") {
    CHECK(sf::laguerre_gen(0, 1.0, 2.7) == doctest::Approx(1.0));
    // L_1^(a)(x) = 1 + a - x
    CHECK(sf::laguerre_gen(1, 1.0, 1.0) == doctest::Approx(1.0));
    CHECK(sf::laguerre_gen(1, 0.5, 2.0) == doctest::Approx(-0.5));
    // L_2^(1)(0) = binom(3, 2) = 3
    CHECK(sf::laguerre_gen(2, 1.0, 0.0) == doctest::Approx(3.0));
    // L_2^(a)(x) = x^2/2 - (a+2) x + (a+1)(a+2)/2
    CHECK(sf::laguerre_gen(2, 1.0, 3.0) ==
          doctest::Approx(9.0 / 2.0 - 9.0 + 3.0).epsilon(1e-13));
}

TEST_CASE("laguerre orthogonality under the x e^{-x} weight") {
    const auto ip = [](unsigned m, unsigned n) {
        return quad::integrate(
                   [m, n](double x) {
                       return sf::laguerre_gen(m, 1.0, x) *
                              sf::laguerre_gen(n, 1.0, x) * x * std::exp(-x);
                   },
                   {0.0, std::numeric_limits<double>::infinity()}, 1e-12,
                   1e-12)
            .value;
    };
    CHECK(ip(1, 2) == doctest::Approx(0.0).epsilon(1e-10));
    // ||L_n^(1)||^2 = (n+1)! / n! = n + 1
    CHECK(ip(2, 2) == doctest::Approx(3.0).epsilon(1e-10));
}

TEST_CASE("pinned constants") {
    CHECK(sf::ln_pi == doctest::Approx(std::log(sf::pi)).epsilon(1e-15));
    CHECK(sf::ln_2pi ==
          doctest::Approx(std::log(2.0 * sf::pi)).epsilon(1e-15));
    CHECK(std::exp(sf::zeta3) > 1.0);  // sanity: positive constant
    CHECK(sf::euler_gamma == doctest::Approx(0.5772156649015329));
}

}  // TEST_SUITE
