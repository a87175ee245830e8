// Klein-Gordon reductions to Mathieu form, the approximation hierarchy
// (plane-wave, high-energy, multiple-scale, exact), quasi-momenta and
// effective masses, and the longitudinal-current diagnostic.
#pragma once

#include <complex>

#include "swave/background.hpp"
#include "swave/classical.hpp"
#include "swave/mathieu.hpp"

namespace swave::quantum {

using classical::SolubleCase;

struct KGReduction {
    SolubleCase reductionCase = SolubleCase::MagneticNode;
    MathieuSpec spec;         // canonical (lambda, Q)
    double phaseShift = 0.0;  // physical phase -> Mathieu variable: y = (phase - phaseShift)/2
    double phi0 = 0.0;        // node case: transverse angle of p; 0 for the Delta case
};

// Node case: lambda = 4[(kBar.p)^2 + xiSigma^2 m^2 kBar^2]/kBar^4,
//            Q = 4 xiSigma m |pPerp| / kBar^2, y = (phiBar - phi0 - pi/4)/2.
// Delta case: lambda = 4[(kDelta.p)^2 + (xi1^2+xi2^2) m^2 kDelta^2]/kDelta^4,
//            Q = -4 xi1 xi2 / kDelta^2, y = phiDelta/2.
// The forbidden region surfaces as lambda < 0 in the Delta case.
KGReduction kg_reduce(const Background& bg, const FourVector& p, SolubleCase c);

// u^pw(phi) = -int_0^phi [2 p.a + a^2] / (2 k.p) dphi', closed form for a
// circularly polarised wave; u^pw(0) = 0. Requires k.p != 0.
double volkov_exponent(const PlaneWave& w, const FourVector& p, double phi);

// Node high-energy phase: the Volkov exponent with kBar in place of the null
// wavevector, for the summed node field of amplitude m xiSigma.
double volkov_exponent_node(const Background& bg, const FourVector& p, double phiBar);

// Total phase p.x + arg(F G H) of the product-ansatz wavefunction; F = G = 1
// when p has no transverse components. Rejects vanishing k.p denominators.
double high_energy_phase(const Background& bg, const FourVector& p, const FourVector& x);

// Multiple-scale phase, closed form through the elliptic integral E:
//  - ZeroTransverse: phi^ms(phiDelta) = (m/kDelta^2) int_0^phiDelta phiDot^cl
//                  = (2 varpiDelta m / kDelta^2) E(phiDelta/2 | -mu^2/varpi^2)
//  - MagneticNode:   u^ms_p(phiBar) = -(kBar.p/kBar^2) phiBar
//                  + (2 varpi_p m / kBar^2) E(phiBar/2 | mu_p^2/varpi_p^2)
// with varpi_p, mu_p built from the node phase equation at Pi_in = p.
double multiscale_phase(const Background& bg, const FourVector& p, SolubleCase c, double phase);

// leading multiple-scale amplitude (1 - kDelta^2 a^2(phiDelta)/(kDelta.p)^2)^(-1/4)
double multiscale_amplitude(const Background& bg, const FourVector& p, double phiDelta);

enum class Model { PW, HE, MS, Exact };

struct QuasiMomentum {
    Model model = Model::PW;
    FourVector q;                       // Re q
    std::complex<double> mStar2{0.0};   // q.q ("effective mass" squared)
    bool band = true;                   // false only for Exact-model gap states
    double nuRe = 0.0, nuIm = 0.0;      // Exact model
    std::complex<double> expIPiNu{1.0, 0.0};
};

QuasiMomentum quasimomentum(const Background& bg, const FourVector& p, SolubleCase c, Model model);

// One sample of a wavefunction w(phi1, phi2) e^{i p.x} with phase derivatives.
struct WavefunctionSample {
    std::complex<double> w{1.0, 0.0};
    std::complex<double> dw1{0.0, 0.0};  // dw/dphi1
    std::complex<double> dw2{0.0, 0.0};  // dw/dphi2
};

// The longitudinal current is purely imaginary, j^3 = i c; returns
// c = -2 p^3 |w|^2 + 2 k1^3 Im(conj(w) w_1') + 2 k2^3 Im(conj(w) w_2').
double longitudinal_current(const Background& bg, const FourVector& p,
                            const WavefunctionSample& s);

}  // namespace swave::quantum
