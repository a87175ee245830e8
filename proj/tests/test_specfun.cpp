#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "support/oracles.hpp"
#include "swave/mathieu.hpp"
#include "swave/specfun.hpp"

using namespace swave;
namespace sf = swave::specfun;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("jacobi amplitude") {
    SUBCASE("am(x|0) = x") {
        for (const double x : {0.1, 1.0, 3.7}) CHECK(sf::jacobi_am(x, 0.0) == doctest::Approx(x).epsilon(1e-14));
    }
    SUBCASE("quarter-period identity am(K(m)|m) = pi/2") {
        CHECK(sf::jacobi_am(sf::elliptic_k(0.5), 0.5) == doctest::Approx(kPi / 2).epsilon(1e-12));
    }
    SUBCASE("negative parameter against bisection oracle") {
        const double oracle = oracles::jacobi_am_bisect(0.8, -2.0);
        CHECK(sf::jacobi_am(0.8, -2.0) == doctest::Approx(oracle).epsilon(1e-9));
        // frozen from the oracle: am(0.8|-2.0)
        CHECK(sf::jacobi_am(0.8, -2.0) == doctest::Approx(0.95445323775892266).epsilon(1e-10));
    }
    SUBCASE("inverse property F(am(u|m)|m) = u") {
        for (const double m : {-20.0, -2.0, -0.3, 0.2, 0.7, 0.96}) {
            for (double u = -6.0; u <= 6.0; u += 0.37) {
                const double phi = sf::jacobi_am(u, m);
                CHECK(sf::elliptic_f(phi, m) == doctest::Approx(u).epsilon(1e-9).scale(1.0));
            }
        }
    }
    SUBCASE("derivative equals dn (finite differences)") {
        const double h = 1e-6;
        for (const double m : {-3.0, 0.5, 0.9}) {
            for (double u = -2.0; u <= 2.0; u += 0.5) {
                const double fd = (sf::jacobi_am(u + h, m) - sf::jacobi_am(u - h, m)) / (2 * h);
                CHECK(sf::jacobi_dn(u, m) == doctest::Approx(fd).epsilon(1e-6));
            }
        }
    }
    SUBCASE("degenerate parameter is the Gudermannian") {
        CHECK(sf::jacobi_am(1.3, 1.0) == doctest::Approx(std::asin(std::tanh(1.3))).epsilon(1e-14));
        CHECK(sf::jacobi_am(5.0, 1.0) < kPi / 2);  // horizontal asymptote
        CHECK(sf::jacobi_am(50.0, 1.0) <= kPi / 2);
        CHECK_THROWS_AS(sf::jacobi_am(0.5, 1.5), std::domain_error);
    }
    SUBCASE("monotone in u for m < 1") {
        for (const double m : {-5.0, 0.0, 0.85}) {
            double prev = sf::jacobi_am(-3.0, m);
            for (double u = -2.9; u <= 3.0; u += 0.1) {
                const double cur = sf::jacobi_am(u, m);
                CHECK(cur > prev);
                prev = cur;
            }
        }
    }
}

TEST_CASE("elliptic integrals") {
    SUBCASE("trivial parameters") {
        for (const double phi : {0.3, 1.1}) CHECK(sf::elliptic_e(phi, 0.0) == doctest::Approx(phi).epsilon(1e-14));
        CHECK(sf::elliptic_e(kPi / 2, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    }
    SUBCASE("complete E(pi/2|0.5) against quadrature oracle") {
        const double oracle = oracles::elliptic_e_quad(kPi / 2, 0.5);
        CHECK(sf::elliptic_e(kPi / 2, 0.5) == doctest::Approx(oracle).epsilon(1e-12));
        CHECK(sf::elliptic_e(kPi / 2, 0.5) == doctest::Approx(1.3506438810476755).epsilon(1e-12));
    }
    SUBCASE("incomplete values against quadrature, including negative parameter") {
        for (const double m : {-30.0, -1.0, 0.3, 0.9}) {
            for (const double phi : {0.2, 1.0, kPi / 2, 2.5}) {
                CHECK(sf::elliptic_e(phi, m) ==
                      doctest::Approx(oracles::elliptic_e_quad(phi, m)).epsilon(1e-11));
                CHECK(sf::elliptic_f(phi, m) ==
                      doctest::Approx(oracles::elliptic_f_quad(phi, m)).epsilon(1e-11));
            }
        }
    }
    SUBCASE("quasi-periodic extension") {
        for (const double m : {-4.0, 0.6}) {
            const double e1 = sf::elliptic_e(0.8 + kPi, m);
            const double e2 = sf::elliptic_e(0.8, m) + 2.0 * sf::elliptic_e_complete(m);
            CHECK(e1 == doctest::Approx(e2).epsilon(1e-12));
        }
    }
    SUBCASE("parameter > 1 rejected") {
        CHECK_THROWS_AS(sf::elliptic_e(0.3, 1.2), std::domain_error);
    }
}

TEST_CASE("bessel functions") {
    SUBCASE("series at origin") {
        CHECK(sf::bessel_j(0, 0.0) == 1.0);
        for (int s = 1; s <= 6; ++s) CHECK(sf::bessel_j(s, 0.0) == 0.0);
    }
    SUBCASE("J_1(1) against power series oracle") {
        const double oracle = oracles::bessel_j_series(1, 1.0);
        CHECK(sf::bessel_j(1, 1.0) == doctest::Approx(oracle).epsilon(1e-14));
        CHECK(sf::bessel_j(1, 1.0) == doctest::Approx(0.44005058574493355).epsilon(1e-13));
    }
    SUBCASE("recurrence identity at (s, z) = (3, 2.5)") {
        const double lhs = sf::bessel_j(2, 2.5) + sf::bessel_j(4, 2.5);
        const double rhs = (2.0 * 3 / 2.5) * sf::bessel_j(3, 2.5);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
    SUBCASE("agreement with the standard library implementation") {
        for (const int s : {0, 1, 2, 5, 12, 30}) {
            for (const double z : {0.3, 2.0, 7.7, 25.0, 60.0}) {
                CHECK(sf::bessel_j(s, z) ==
                      doctest::Approx(std::cyl_bessel_j(s, z)).epsilon(1e-10).scale(1.0));
            }
        }
    }
    SUBCASE("series agreement over the spectrum argument range") {
        for (const int s : {1, 2, 3, 8}) {
            for (const double z : {0.01, 0.5, 3.0, 9.0}) {
                CHECK(sf::bessel_j(s, z) ==
                      doctest::Approx(oracles::bessel_j_series(s, z)).epsilon(1e-9).scale(1.0));
            }
        }
    }
}

TEST_CASE("mathieu characteristic exponent") {
    SUBCASE("free equation: nu = sqrt(lambda)") {
        for (const double lam : {0.25, 1.0, 4.0, 17.3, 120.0}) {
            const FloquetExponent nu = mathieu_nu({lam, 0.0});
            CHECK(nu.isBand);
            CHECK(nu.nuRe == doctest::Approx(std::sqrt(lam)).epsilon(1e-9));
            CHECK(std::abs(nu.nuIm) < 1e-9);
        }
    }
    SUBCASE("lambda < 0 is unstable (gap) for weak coupling") {
        for (const double lam : {-0.5, -2.0, -10.0}) {
            const FloquetExponent nu = mathieu_nu({lam, 0.0});
            CHECK(!nu.isBand);
            CHECK(nu.nuRe == doctest::Approx(0.0).epsilon(1e-12));
            CHECK(nu.nuIm == doctest::Approx(std::sqrt(-lam)).epsilon(1e-9));
        }
    }
    SUBCASE("first instability tongue at (1.0, 0.5)") {
        // small-Q tongue boundaries a1 = 1 + Q, b1 = 1 - Q bracket lambda = 1
        const FloquetExponent nu = mathieu_nu({1.0, 0.5});
        CHECK(!nu.isBand);
        CHECK(nu.nuIm > 1e-3);
        CHECK(nu.nuRe == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("symmetry in Q -> -Q at (2.3, 0.7)") {
        const FloquetExponent a = mathieu_nu({2.3, 0.7});
        const FloquetExponent b = mathieu_nu({2.3, -0.7});
        CHECK(a.nuRe == doctest::Approx(b.nuRe).epsilon(1e-9));
        CHECK(a.nuIm == doctest::Approx(b.nuIm).epsilon(1e-9).scale(1.0));
    }
    SUBCASE("band interior points stay real") {
        // interiors of the first bands at moderate coupling
        for (const MathieuSpec spec : {MathieuSpec{0.5, 0.2}, MathieuSpec{2.5, 0.4},
                                       MathieuSpec{6.5, 0.8}, MathieuSpec{13.0, 1.0}}) {
            const FloquetExponent nu = mathieu_nu(spec);
            CHECK(nu.isBand);
        }
    }
    SUBCASE("agreement with the truncated Hill determinant") {
        for (const MathieuSpec spec :
             {MathieuSpec{0.7, 0.3}, MathieuSpec{2.3, 0.7}, MathieuSpec{-1.5, 0.8},
              MathieuSpec{7.3, 2.0}, MathieuSpec{1.0, 0.5}}) {
            const FloquetExponent nu = mathieu_nu(spec);
            const double hill = mathieu_cos_pi_nu_hill(spec, 320);
            const std::complex<double> nuC(nu.nuRe, nu.nuIm);
            const double cosImpl = std::cos(kPi * nuC).real();
            CHECK(cosImpl == doctest::Approx(hill).epsilon(1e-7).scale(1.0));
        }
    }
    SUBCASE("continuity branch survives large lambda") {
        // WKB-scale check: nu ~ (2/pi) int_0^{pi/2} sqrt(lambda - 2Q cos 2y) ... dy
        const double lam = 4.0e4, q = 1.0e3;
        const FloquetExponent nu = mathieu_nu({lam, q});
        CHECK(nu.isBand);
        const double wkb = (2.0 / kPi) * oracles::romberg(
                                             [&](double y) {
                                                 return std::sqrt(lam - 2.0 * q * std::cos(2.0 * y));
                                             },
                                             0.0, kPi / 2, 1e-12);
        CHECK(nu.nuRe == doctest::Approx(wkb).epsilon(1e-5));
    }
}

TEST_CASE("mathieu ODE solutions") {
    SUBCASE("harmonic oscillator limit") {
        const MathieuSolution sol = solve_mathieu({1.0, 0.0}, 0.0, 10.0, 1.0, 0.0);
        for (std::size_t i = 0; i < sol.y.size(); i += 7)
            CHECK(sol.f[i] == doctest::Approx(std::cos(sol.y[i])).epsilon(1e-9).scale(1.0));
    }
    SUBCASE("Wronskian of the fundamental pair is constant") {
        const MathieuSpec spec{3.7, 1.3};
        const MathieuSolution s1 = solve_mathieu(spec, 0.0, 20.0, 1.0, 0.0);
        const MathieuSolution s2 = solve_mathieu(spec, 0.0, 20.0, 0.0, 1.0);
        for (std::size_t i = 0; i < s1.y.size(); i += 11) {
            const double w = s1.f[i] * s2.fp[i] - s1.fp[i] * s2.f[i];
            CHECK(w == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
    SUBCASE("band solutions stay bounded over 50 periods") {
        const MathieuSpec spec{2.5, 0.4};
        REQUIRE(mathieu_nu(spec).isBand);
        const MathieuSolution sol = solve_mathieu(spec, 0.0, 50.0 * kPi, 1.0, 0.0);
        double maxAbs = 0.0;
        for (const double v : sol.f) maxAbs = std::max(maxAbs, std::abs(v));
        CHECK(maxAbs < 50.0);
    }
    SUBCASE("gap growth rate matches the Floquet exponent") {
        const MathieuSpec spec{1.0, 0.5};
        const FloquetExponent nu = mathieu_nu(spec);
        REQUIRE(!nu.isBand);
        const int periods = 50;
        const int perPeriod = 64;
        const MathieuSolution sol =
            solve_mathieu(spec, 0.0, periods * kPi, 1.0, 0.0, 1e-12, periods * perPeriod + 1);
        // by period 25 the decaying mode is gone; regress log |(f, f')| per period
        double sumX = 0, sumY = 0, sumXX = 0, sumXY = 0;
        int n = 0;
        for (int k = 25; k <= periods; ++k) {
            const std::size_t i = static_cast<std::size_t>(k * perPeriod);
            const double mag = std::hypot(sol.f[i], sol.fp[i]);
            sumX += k;
            sumY += std::log(mag);
            sumXX += static_cast<double>(k) * k;
            sumXY += k * std::log(mag);
            ++n;
        }
        const double slope = (n * sumXY - sumX * sumY) / (n * sumXX - sumX * sumX);
        CHECK(slope == doctest::Approx(kPi * nu.nuIm).epsilon(1e-4));
    }
    SUBCASE("invalid range rejected") {
        CHECK_THROWS_AS(solve_mathieu({1.0, 0.0}, 1.0, 0.5, 1.0, 0.0), std::invalid_argument);
    }
}
