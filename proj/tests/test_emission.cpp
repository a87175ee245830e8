#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "swave/emission.hpp"

using namespace swave::emission;

TEST_CASE("bessel argument") {
    SUBCASE("endpoint zeros") {
        CHECK(bessel_argument(3, 1.0, 0.0, 2.0) == 0.0);
        CHECK(bessel_argument(3, 1.0, 2.0, 2.0) == 0.0);
    }
    SUBCASE("midpoint value") {
        const double z = bessel_argument(4, 0.7, 1.0, 2.0);
        CHECK(z == doctest::Approx(4.0 * 0.7 / std::sqrt(1.49)).epsilon(1e-14));
    }
    SUBCASE("quarter-point arithmetic at s = 2, xi = 1") {
        CHECK(bessel_argument(2, 1.0, 0.5, 2.0) == doctest::Approx(std::sqrt(1.5)).epsilon(1e-14));
    }
    SUBCASE("domain") {
        CHECK_THROWS_AS(bessel_argument(1, 1.0, -0.1, 2.0), std::domain_error);
        CHECK_THROWS_AS(bessel_argument(1, 1.0, 2.1, 2.0), std::domain_error);
    }
}

TEST_CASE("harmonic probabilities") {
    SUBCASE("zero field emits nothing") {
        EmissionConfig cfg;
        cfg.xi = 0.0;
        cfg.kp = 0.01;
        for (int s = 1; s <= 4; ++s) CHECK(harmonic_probability(cfg, s) == 0.0);
        const HarmonicSpectrum sp = spectrum(cfg);
        CHECK(sp.total == 0.0);
        CHECK(sp.converged);
    }

    SUBCASE("perturbative regime: second harmonic strongly suppressed") {
        EmissionConfig cfg;
        cfg.xi = 0.1;
        cfg.kp = 0.01;
        const double w1 = harmonic_probability(cfg, 1);
        const double w2 = harmonic_probability(cfg, 2);
        CHECK(w1 > 0.0);
        CHECK(w2 / w1 < 0.05);
    }

    SUBCASE("harmonics decrease with s at moderate intensity") {
        EmissionConfig cfg;
        cfg.xi = 0.1;
        cfg.kp = 0.01;
        double prev = harmonic_probability(cfg, 1);
        for (int s = 2; s <= 5; ++s) {
            const double cur = harmonic_probability(cfg, s);
            CHECK(cur < prev);
            prev = cur;
        }
    }

    SUBCASE("adaptive and fixed-order quadratures agree") {
        for (const double xi : {0.1, 1.0}) {
            for (const double kp : {0.005, 0.01, 0.02}) {
                EmissionConfig cfg;
                cfg.xi = xi;
                cfg.kp = kp;
                for (int s = 1; s <= 10; ++s) {
                    const double a = harmonic_probability(cfg, s);
                    const double b = harmonic_probability_fixed(cfg, s);
                    CHECK(std::abs(a - b) <= 1e-6 * std::max(std::abs(a), std::abs(b)));
                }
            }
        }
    }

    SUBCASE("probabilities are nonnegative over a parameter grid") {
        for (const double xi : {0.01, 0.3, 1.0, 3.0}) {
            for (const double kp : {0.002, 0.01, 0.05}) {
                EmissionConfig cfg;
                cfg.xi = xi;
                cfg.kp = kp;
                for (int s = 1; s <= 12; ++s) CHECK(harmonic_probability(cfg, s) >= 0.0);
            }
        }
    }

    SUBCASE("small-xi scaling W_s ~ xi^(2s)") {
        for (int s = 1; s <= 3; ++s) {
            EmissionConfig lo, hi;
            lo.xi = 1e-3;
            hi.xi = 1e-2;
            lo.kp = hi.kp = 0.01;
            const double slope = std::log(harmonic_probability(hi, s) /
                                          harmonic_probability(lo, s)) /
                                 std::log(10.0);
            CHECK(slope == doctest::Approx(2.0 * s).epsilon(0.05));
        }
    }
}

TEST_CASE("spectrum assembly and convergence") {
    SUBCASE("moderate intensity converges with a small tail") {
        EmissionConfig cfg;
        cfg.xi = 1.0;
        cfg.kp = 0.01;
        cfg.sMax = 50;
        const HarmonicSpectrum sp = spectrum(cfg);
        CHECK(sp.converged);
        CHECK(sp.total > 0.0);
        // all reported harmonics nonnegative, total bounds every entry
        for (const auto& [s, w] : sp.entries) {
            CHECK(w >= 0.0);
            CHECK(sp.total >= w);
        }
        // the stopped tail entries sit below tolerance x total, and the
        // geometric tail-sum estimate is of the same order
        const std::size_t n = sp.entries.size();
        REQUIRE(n >= 4);
        for (std::size_t i = n - 3; i < n; ++i)
            CHECK(sp.entries[i].second <= 1e-8 * sp.total);
        const double r = sp.entries[n - 1].second / sp.entries[n - 2].second;
        CHECK(r < 1.0);
        CHECK(sp.entries[n - 1].second * r / (1.0 - r) < 3e-8 * sp.total);
    }

    SUBCASE("cutoff too small reports non-convergence honestly") {
        EmissionConfig cfg;
        cfg.xi = 2.0;
        cfg.kp = 0.01;
        cfg.sMax = 4;
        const HarmonicSpectrum sp = spectrum(cfg);
        CHECK(!sp.converged);
    }

    SUBCASE("invalid configurations rejected") {
        EmissionConfig cfg;
        cfg.xi = -1.0;
        cfg.kp = 0.01;
        CHECK_THROWS_AS(spectrum(cfg), std::invalid_argument);
        cfg.xi = 1.0;
        cfg.kp = 0.0;
        CHECK_THROWS_AS(spectrum(cfg), std::invalid_argument);
    }
}

TEST_CASE("node emission stability diagnostic") {
    SUBCASE("no longitudinal recoil keeps the node state") {
        const NodeEmissionDiagnosis d = node_emission_stability(0.0);
        CHECK(d.qParallel == 0.0);
        CHECK(!d.unstable);
    }
    SUBCASE("longitudinal photon momentum ejects the state") {
        const NodeEmissionDiagnosis d = node_emission_stability(0.3);
        CHECK(d.qParallel == doctest::Approx(-0.3).epsilon(1e-15));
        CHECK(d.unstable);
    }
    SUBCASE("generic emission direction is unstable") {
        for (const double lpar : {-0.7, 1e-6, 2.0}) CHECK(node_emission_stability(lpar).unstable);
    }
}
