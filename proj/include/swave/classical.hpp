// Lorentz-equation dynamics in the two-wave background: the numerical
// integrator oracle, the two conservation laws, and the two analytic phase
// solutions (transverse motion at a magnetic node; zero initial transverse
// canonical momentum).
#pragma once

#include <vector>

#include "swave/background.hpp"
#include "swave/errors.hpp"

namespace swave::classical {

struct ParticleState {
    double tau = 0.0;
    FourVector x;
    FourVector p;  // kinetic momentum, on-shell p.p = m^2
};

using Trajectory = std::vector<ParticleState>;

// Adaptive integration of dp/dtau = (e/m) F p, dx/dtau = p/m; samples are
// returned at nSamples equally spaced proper times in [init.tau, tauEnd].
Trajectory integrate_lorentz(const Background& bg, const ParticleState& init, double tauEnd,
                             double tol = 1e-10, int nSamples = 1001);

// e_{l,j} . Pi with Pi = p + a(x); constant along any true trajectory.
// Head-on (k1.k2 != 0) geometry required.
double conserved_transverse(const Background& bg, const ParticleState& state, int l, int j);

// 2 (k1.Pi)(k2.Pi) - (k1.k2) Pi^2; constant along any true trajectory.
double conserved_longitudinal(const Background& bg, const ParticleState& state);

enum class SolubleCase { MagneticNode, ZeroTransverse };

// Coefficient convention for muPerp^2 in the node phase equation
//     (d phiTilde / d tau)^2 = varpiPerp^2 - muPerp^2 sin^2(phiTilde/2).
// OdeConsistent (4 kBar^2 xiSigma |PiPerp| / m) is the value that satisfies
// the phase equation against the Lorentz oracle; AltHalved (2 kBar^2 ...)
// is kept so the competing printed coefficient stays machine-checkable.
enum class MuPerpConvention { OdeConsistent, AltHalved };

struct MagneticNodeOrbit {
    double varpiPerp2 = 0.0;  // ODE energy constant (value of phiBarDot^2 at phiTilde = 0)
    double muPerp2 = 0.0;
    double phi0 = 0.0;  // phase at which a(phiBar) is antiparallel to PiPerp (max energy)
    double s = 0.0;     // muPerp2 / varpiPerp2, in [0, 1) for physical inputs
    double piPerp = 0.0;  // |PiPerp_in|
    FourVector piIn;
};

// PiIn is the canonical momentum (p + a) at any point of the node orbit:
// PiIn^3 = 0, PiIn^0 > 0, and (PiIn^0)^2 - m^2 within the reachable band
// [(R - m xiSigma)^2, (R + m xiSigma)^2]. Requires xi1 = xi2, omega1 = omega2.
MagneticNodeOrbit magnetic_node_orbit(const Background& bg, const FourVector& PiIn,
                                      MuPerpConvention conv = MuPerpConvention::OdeConsistent);

// phiBar(tau) = 2 am(varpiPerp tau / 2 | s) + phi0, measured from phiTilde = 0.
double magnetic_node_phase(const MagneticNodeOrbit& orbit, double tau);
// d phiBar / d tau = varpiPerp dn(varpiPerp tau / 2 | s)
double magnetic_node_phase_derivative(const MagneticNodeOrbit& orbit, double tau);

enum class Regime { Allowed, Forbidden };

struct DeltaOrbit {
    double varpiDelta2 = 0.0;  // (kDelta.p_in)^2/m^2 + kDelta^2 xiSigma^2
    double muDelta2 = 0.0;     // -4 kDelta^2 xi1 xi2 (>= 0 for kDelta^2 < 0)
    double varpiDelta = 0.0;   // sign(kDelta.p_in) sqrt(varpiDelta2) when allowed
    Regime regime = Regime::Allowed;
    bool restFixedPoint = false;  // xi1 = xi2, equal omega, kDelta.p_in = 0
    double phiSigmaDot = 0.0;     // kSigma.p_in / m
    FourVector pIn;
};

// p_in is the asymptotic momentum with zero transverse components; the orbit
// starts at phiDelta = phiSigma = 0.
DeltaOrbit delta_orbit(const Background& bg, const FourVector& pIn);

struct DeltaPhases {
    double phiDelta = 0.0;
    double phiSigma = 0.0;
};

// phiDelta = 2 am(varpiDelta tau / 2 | -muDelta^2/varpiDelta^2),
// phiSigma = (kSigma.p_in/m) tau. Forbidden regime rejected; the rest fixed
// point returns phiDelta = 0.
DeltaPhases delta_phases(const DeltaOrbit& orbit, double tau);
double delta_phase_derivative(const DeltaOrbit& orbit, double tau);  // d phiDelta / d tau

// Rebuild x(tau), p(tau) on tauGrid from the analytic phase plus the
// transverse conservation laws (transverse coordinates by quadrature).
// For MagneticNode `pOrPiIn` is the canonical momentum PiIn; for
// ZeroTransverse it is the asymptotic kinetic momentum p_in.
Trajectory reconstruct_trajectory(const Background& bg, const FourVector& pOrPiIn,
                                  SolubleCase solCase, const std::vector<double>& tauGrid);

// Initial Lorentz-oracle state matching the analytic solutions' tau origin
// (phiTilde = 0 for the node case, phiDelta = phiSigma = 0 for the other).
ParticleState analytic_initial_state(const Background& bg, const FourVector& pOrPiIn,
                                     SolubleCase solCase);

}  // namespace swave::classical
