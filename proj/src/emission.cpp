#include "swave/emission.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "swave/specfun.hpp"

namespace swave::emission {

namespace {

constexpr double kMass = 1.0;

void validate(const EmissionConfig& cfg) {
    if (cfg.xi < 0.0 || cfg.kp <= 0.0 || cfg.sMax < 1 || cfg.quadTol <= 0.0)
        throw std::invalid_argument("emission: invalid configuration");
}

double integrand(const EmissionConfig& cfg, int s, double u, double uS) {
    const double z = bessel_argument(s, cfg.xi, u, uS);
    const double js = specfun::bessel_j(s, z);
    const double jsp = specfun::bessel_j(s + 1, z);
    const double jsm = specfun::bessel_j(s - 1, z);
    const double mStar2Rel = 1.0 + cfg.xi * cfg.xi;
    const double bracket =
        -4.0 * js * js * mStar2Rel + 2.0 * cfg.xi * cfg.xi * (jsp * jsp + jsm * jsm);
    return bracket / ((1.0 + u) * (1.0 + u));
}

double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double b,
                            double fa, double fm, double fb, double whole, double tol,
                            int depth) {
    if (depth > 60) throw NonConvergence("emission quadrature: recursion depth exhausted");
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double s2 = left + right;
    if (std::abs(s2 - whole) <= 15.0 * tol) return s2 + (s2 - whole) / 15.0;
    return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, 0);
}

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.resize(static_cast<std::size_t>(n));
    w.resize(static_cast<std::size_t>(n));
    const double pi = 3.14159265358979323846;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double t = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * t * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (t * p0 - p1) / (t * t - 1.0);
            const double dt = p0 / pp;
            t -= dt;
            if (std::abs(dt) < 1e-15) break;
        }
        x[static_cast<std::size_t>(i)] = -t;
        x[static_cast<std::size_t>(n - 1 - i)] = t;
        w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - t * t) * pp * pp);
        w[static_cast<std::size_t>(n - 1 - i)] = w[static_cast<std::size_t>(i)];
    }
}

}  // namespace

double bessel_argument(int s, double xi, double u, double uS) {
    if (u < 0.0 || u > uS) throw std::domain_error("bessel_argument: u outside [0, u_s]");
    const double frac = (uS == 0.0) ? 0.0 : u / uS;
    return 2.0 * s * xi / std::sqrt(1.0 + xi * xi) * std::sqrt(frac * (1.0 - frac));
}

double harmonic_edge(const EmissionConfig& cfg, int s) {
    return 2.0 * s * cfg.kp / (kMass * kMass * (1.0 + cfg.xi * cfg.xi));
}

double harmonic_probability(const EmissionConfig& cfg, int s) {
    validate(cfg);
    if (s < 1) throw std::invalid_argument("harmonic_probability: s >= 1 required");
    if (cfg.xi == 0.0) return 0.0;
    const double uS = harmonic_edge(cfg, s);
    auto f = [&](double u) { return integrand(cfg, s, u, uS); };
    // scale the absolute tolerance off a coarse pass so quadTol acts relatively
    const double coarse = harmonic_probability_fixed(cfg, s, 4) /
                          (cfg.alpha * kMass * kMass / (4.0 * cfg.kp));
    const double tol = cfg.quadTol * std::max(std::abs(coarse), 1e-290);
    // pre-split: the integrand carries ~s oscillation humps, and a single
    // top-level Simpson estimate can accept them accidentally
    const int panels = std::max(8, s + 2);
    double integral = 0.0;
    for (int k = 0; k < panels; ++k) {
        const double a = uS * k / panels;
        const double b = (k + 1 == panels) ? uS : uS * (k + 1) / panels;
        integral += adaptive_simpson(f, a, b, tol / panels);
    }
    return cfg.alpha * kMass * kMass / (4.0 * cfg.kp) * integral;
}

double harmonic_probability_fixed(const EmissionConfig& cfg, int s, int panels) {
    validate(cfg);
    if (s < 1) throw std::invalid_argument("harmonic_probability_fixed: s >= 1 required");
    if (cfg.xi == 0.0) return 0.0;
    if (panels <= 0) panels = std::max(8, s + 4);
    const double uS = harmonic_edge(cfg, s);
    static thread_local std::vector<double> gx, gw;
    if (gx.size() != 20) gauss_legendre(20, gx, gw);
    double integral = 0.0;
    const double h = uS / panels;
    for (int k = 0; k < panels; ++k) {
        const double a = k * h, b = a + h;
        const double c = 0.5 * (a + b), r = 0.5 * (b - a);
        double acc = 0.0;
        for (std::size_t i = 0; i < gx.size(); ++i)
            acc += gw[i] * integrand(cfg, s, c + r * gx[i], uS);
        integral += acc * r;
    }
    return cfg.alpha * kMass * kMass / (4.0 * cfg.kp) * integral;
}

HarmonicSpectrum spectrum(const EmissionConfig& cfg) {
    validate(cfg);
    HarmonicSpectrum sp;
    int smallRun = 0;
    for (int s = 1; s <= cfg.sMax; ++s) {
        const double ws = harmonic_probability(cfg, s);
        sp.entries.emplace_back(s, ws);
        sp.total += ws;
        if (std::abs(ws) <= cfg.quadTol * sp.total) {
            if (++smallRun >= 3) {
                sp.converged = true;
                break;
            }
        } else {
            smallRun = 0;
        }
    }
    return sp;
}

NodeEmissionDiagnosis node_emission_stability(double lParallel) {
    // longitudinal momentum conservation: q'_par = -l'_par; a node state
    // needs q'_par = 0, so any longitudinal photon momentum ejects it
    return {-lParallel, lParallel != 0.0};
}

}  // namespace swave::emission
