// Plane-wave-limit photon emission (nonlinear Compton scattering) for a
// scalar charge: per-harmonic probabilities W_s and their sum, plus the
// magnetic-node recoil diagnostic.
#pragma once

#include <utility>
#include <vector>

#include "swave/errors.hpp"

namespace swave::emission {

struct EmissionConfig {
    double alpha = 1.0 / 137.035999;  // fine-structure constant
    double xi = 0.0;                  // intensity parameter
    double kp = 0.0;                  // k.p, units of m^2
    int sMax = 50;                    // harmonic cutoff
    double quadTol = 1e-8;            // quadrature and tail tolerance (relative)
};

// z = (2 s xi / sqrt(1+xi^2)) sqrt((u/u_s)(1 - u/u_s)), 0 <= u <= u_s
double bessel_argument(int s, double xi, double u, double uS);

// u_s = 2 s k.p / [m^2 (1 + xi^2)]
double harmonic_edge(const EmissionConfig& cfg, int s);

// W_s = (alpha m^2 / 4 k.p) int_0^{u_s} du/(1+u)^2
//       [ -4 J_s^2(z) m*^2/m^2 + 2 xi^2 (J_{s+1}^2(z) + J_{s-1}^2(z)) ],
// m*^2 = m^2 (1 + xi^2); adaptive quadrature to cfg.quadTol.
double harmonic_probability(const EmissionConfig& cfg, int s);

// same integral on composite fixed-order Gauss-Legendre panels; the
// independent cross-check route for the adaptive result
double harmonic_probability_fixed(const EmissionConfig& cfg, int s, int panels = 0);

struct HarmonicSpectrum {
    std::vector<std::pair<int, double>> entries;  // (s, W_s)
    double total = 0.0;
    bool converged = false;  // tail estimate fell below quadTol * total
};

// W_s for s = 1.. with tail stopping (three consecutive harmonics below
// quadTol * running total) up to cfg.sMax; `converged` is honest.
HarmonicSpectrum spectrum(const EmissionConfig& cfg);

struct NodeEmissionDiagnosis {
    double qParallel = 0.0;  // recoil q'_par = -l'_par of the outgoing state
    bool unstable = false;   // q'_par != 0: the outgoing state leaves the node
};

NodeEmissionDiagnosis node_emission_stability(double lParallel);

}  // namespace swave::emission
