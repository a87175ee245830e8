#include "swave/classical.hpp"

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <cmath>

#include "swave/specfun.hpp"

namespace swave::classical {

namespace ode = boost::numeric::odeint;

namespace {

void require_on_shell(const FourVector& p, const char* who) {
    const double m2 = kMass * kMass;
    const double scale = m2 + p[0] * p[0];
    if (std::abs(dot(p, p) - m2) > 1e-8 * scale)
        throw std::invalid_argument(std::string(who) + ": momentum off mass shell");
}

double sgn(double x) { return x < 0.0 ? -1.0 : 1.0; }

}  // namespace

Trajectory integrate_lorentz(const Background& bg, const ParticleState& init, double tauEnd,
                             double tol, int nSamples) {
    require_on_shell(init.p, "integrate_lorentz");
    if (!(tauEnd > init.tau)) throw std::invalid_argument("integrate_lorentz: tauEnd <= tau0");
    if (nSamples < 2) throw std::invalid_argument("integrate_lorentz: need >= 2 samples");

    using State = std::array<double, 8>;
    const PlaneWave& w1 = bg.wave(1);
    const PlaneWave& w2 = bg.wave(2);
    const FourVector k1 = bg.k1(), k2 = bg.k2();

    auto rhs = [&](const State& s, State& d, double) {
        const FourVector x{s[0], s[1], s[2], s[3]};
        const FourVector p{s[4], s[5], s[6], s[7]};
        const FourVector a1p = wave_potential_derivative(w1, dot(k1, x));
        const FourVector a2p = wave_potential_derivative(w2, dot(k2, x));
        const FourVector force = (1.0 / kMass) * (dot(a1p, p) * k1 - dot(k1, p) * a1p +
                                                  dot(a2p, p) * k2 - dot(k2, p) * a2p);
        for (int i = 0; i < 4; ++i) {
            d[i] = s[4 + i] / kMass;
            d[4 + i] = force[i];
        }
    };

    std::vector<double> taus(static_cast<std::size_t>(nSamples));
    const double h = (tauEnd - init.tau) / (nSamples - 1);
    for (int i = 0; i < nSamples; ++i) taus[static_cast<std::size_t>(i)] = init.tau + i * h;
    taus.back() = tauEnd;

    State s{init.x[0], init.x[1], init.x[2], init.x[3],
            init.p[0], init.p[1], init.p[2], init.p[3]};

    Trajectory traj;
    traj.reserve(taus.size());
    ode::runge_kutta_fehlberg78<State> stepper;
    try {
        ode::integrate_times(ode::make_controlled(tol, tol, stepper), rhs, s, taus.begin(),
                             taus.end(), h / 16.0, [&traj](const State& st, double tau) {
                                 traj.push_back({tau,
                                                 {st[0], st[1], st[2], st[3]},
                                                 {st[4], st[5], st[6], st[7]}});
                             });
    } catch (const std::exception& e) {
        const double lastTau = traj.empty() ? init.tau : traj.back().tau;
        throw NonConvergence("integrate_lorentz: step failure after tau = " +
                             std::to_string(lastTau) + " (" + e.what() + ")");
    }
    return traj;
}

double conserved_transverse(const Background& bg, const ParticleState& state, int l, int j) {
    const FourVector e = conserved_basis_vector(bg, l, j);  // rejects k1.k2 = 0
    const FourVector Pi = state.p + eval_potential(bg, state.x);
    return dot(e, Pi);
}

double conserved_longitudinal(const Background& bg, const ParticleState& state) {
    const double k12 = bg.k1k2();
    if (k12 == 0.0) throw std::invalid_argument("conserved_longitudinal: degenerate geometry");
    const FourVector Pi = state.p + eval_potential(bg, state.x);
    return 2.0 * dot(bg.k1(), Pi) * dot(bg.k2(), Pi) - k12 * dot(Pi, Pi);
}

MagneticNodeOrbit magnetic_node_orbit(const Background& bg, const FourVector& PiIn,
                                      MuPerpConvention conv) {
    if (!bg.head_on_geometry())
        throw std::invalid_argument("magnetic_node_orbit: head-on geometry required");
    if (!bg.equal_amplitudes() || !bg.equal_frequencies())
        throw std::invalid_argument("magnetic_node_orbit: node requires xi1 = xi2 and equal omega");

    const double m = kMass;
    const double xiS = bg.xiSigma();
    const double scale = std::max({1.0, std::abs(PiIn[0]), m * xiS});
    if (std::abs(PiIn[3]) > 1e-9 * scale)
        throw std::invalid_argument("magnetic_node_orbit: PiIn must have zero longitudinal component");
    if (!(PiIn[0] > 0.0))
        throw std::invalid_argument("magnetic_node_orbit: PiIn^0 must be positive");

    const PlaneWave& w1 = bg.wave(1);
    const double pe1 = dot(PiIn, w1.eps1);
    const double pe2 = dot(PiIn, w1.eps2);
    const double r = std::hypot(pe1, pe2);

    // PiIn must sit on some node orbit: (Pi^0)^2 - m^2 within the band of
    // reachable |pPerp|^2 = |PiPerp - a|^2
    const double v = PiIn[0] * PiIn[0] - m * m;
    const double lo = (r - m * xiS) * (r - m * xiS);
    const double hi = (r + m * xiS) * (r + m * xiS);
    const double tolr = 1e-7 * std::max(1.0, hi);
    if (v < lo - tolr || v > hi + tolr)
        throw std::invalid_argument(
            "magnetic_node_orbit: PiIn^0 inconsistent with a node orbit of this background");

    const double kBar2 = norm2(bg.kBar());
    const double kBarPi = dot(bg.kBar(), PiIn);
    const double Pi2 = dot(PiIn, PiIn);

    MagneticNodeOrbit orbit;
    orbit.piIn = PiIn;
    orbit.piPerp = r;
    orbit.phi0 = (r == 0.0) ? 0.0 : std::atan2(pe2, pe1);
    orbit.varpiPerp2 = kBarPi * kBarPi / (m * m) +
                       kBar2 * (xiS * xiS - (Pi2 - m * m) / (m * m) + 2.0 * xiS * r / m);
    const double factor = (conv == MuPerpConvention::OdeConsistent) ? 4.0 : 2.0;
    orbit.muPerp2 = factor * kBar2 * xiS * r / m;
    orbit.s = (orbit.varpiPerp2 > 0.0) ? orbit.muPerp2 / orbit.varpiPerp2 : 0.0;
    return orbit;
}

double magnetic_node_phase(const MagneticNodeOrbit& orbit, double tau) {
    if (orbit.s >= 1.0) throw std::domain_error("magnetic_node_phase: s >= 1");
    const double varpi = std::sqrt(orbit.varpiPerp2);
    return 2.0 * specfun::jacobi_am(0.5 * varpi * tau, orbit.s) + orbit.phi0;
}

double magnetic_node_phase_derivative(const MagneticNodeOrbit& orbit, double tau) {
    if (orbit.s >= 1.0) throw std::domain_error("magnetic_node_phase_derivative: s >= 1");
    const double varpi = std::sqrt(orbit.varpiPerp2);
    return varpi * specfun::jacobi_dn(0.5 * varpi * tau, orbit.s);
}

DeltaOrbit delta_orbit(const Background& bg, const FourVector& pIn) {
    if (!bg.head_on_geometry())
        throw std::invalid_argument("delta_orbit: head-on geometry required");
    require_on_shell(pIn, "delta_orbit");
    const double scale = std::max(1.0, std::abs(pIn[0]));
    const PlaneWave& w1 = bg.wave(1);
    if (std::abs(dot(pIn, w1.eps1)) > 1e-9 * scale || std::abs(dot(pIn, w1.eps2)) > 1e-9 * scale)
        throw std::invalid_argument("delta_orbit: p_in must have zero transverse components");

    const double m = kMass;
    const double kD2 = norm2(bg.kDelta());
    const double kDp = dot(bg.kDelta(), pIn);
    const double xiS = bg.xiSigma();

    DeltaOrbit orbit;
    orbit.pIn = pIn;
    orbit.varpiDelta2 = kDp * kDp / (m * m) + kD2 * xiS * xiS;
    orbit.muDelta2 = -4.0 * kD2 * bg.wave(1).xi * bg.wave(2).xi;
    orbit.regime = (orbit.varpiDelta2 > 0.0) ? Regime::Allowed : Regime::Forbidden;
    orbit.restFixedPoint = bg.equal_amplitudes() && bg.equal_frequencies() &&
                           std::abs(kDp) <= 1e-12 * scale;
    orbit.varpiDelta =
        (orbit.regime == Regime::Allowed) ? sgn(kDp) * std::sqrt(orbit.varpiDelta2) : 0.0;
    orbit.phiSigmaDot = dot(bg.kSigma(), pIn) / m;
    return orbit;
}

DeltaPhases delta_phases(const DeltaOrbit& orbit, double tau) {
    if (orbit.regime == Regime::Forbidden) {
        if (orbit.restFixedPoint) return {0.0, orbit.phiSigmaDot * tau};
        throw std::domain_error("delta_phases: forbidden regime (no real phase solution)");
    }
    const double param = -orbit.muDelta2 / orbit.varpiDelta2;
    DeltaPhases ph;
    ph.phiDelta = 2.0 * specfun::jacobi_am(0.5 * orbit.varpiDelta * tau, param);
    ph.phiSigma = orbit.phiSigmaDot * tau;
    return ph;
}

double delta_phase_derivative(const DeltaOrbit& orbit, double tau) {
    if (orbit.regime == Regime::Forbidden) {
        if (orbit.restFixedPoint) return 0.0;
        throw std::domain_error("delta_phase_derivative: forbidden regime");
    }
    const double param = -orbit.muDelta2 / orbit.varpiDelta2;
    return orbit.varpiDelta * specfun::jacobi_dn(0.5 * orbit.varpiDelta * tau, param);
}

namespace {

// transverse kinetic momentum of a node orbit at proper time tau
FourVector node_momentum(const Background& bg, const MagneticNodeOrbit& orbit, double tau) {
    const double phiBar = magnetic_node_phase(orbit, tau);
    const PlaneWave& w1 = bg.wave(1);
    // at the node both waves share the phase phiBar, amplitude m xiSigma
    const double amp = kMass * bg.xiSigma();
    const FourVector a = amp * std::cos(phiBar) * w1.eps1 + amp * std::sin(phiBar) * w1.eps2;
    FourVector p = orbit.piIn - a;
    p[3] = 0.0;
    p[0] = std::sqrt(kMass * kMass + p[1] * p[1] + p[2] * p[2]);
    return p;
}

// kinetic momentum of a zero-transverse-canonical-momentum orbit at tau
FourVector delta_momentum(const Background& bg, const DeltaOrbit& orbit, double tau) {
    const DeltaPhases ph = delta_phases(orbit, tau);
    const double phi1 = 0.5 * (ph.phiSigma + ph.phiDelta);
    const double phi2 = 0.5 * (ph.phiSigma - ph.phiDelta);
    const FourVector a = wave_potential(bg.wave(1), phi1) + wave_potential(bg.wave(2), phi2);
    const double phiDeltaDot = delta_phase_derivative(orbit, tau);
    const double phi1Dot = 0.5 * (orbit.phiSigmaDot + phiDeltaDot);
    const double phi2Dot = 0.5 * (orbit.phiSigmaDot - phiDeltaDot);
    const double w1 = bg.wave(1).omega, w2 = bg.wave(2).omega;
    // k1.p = m phi1Dot = omega1 (p0 - pz), k2.p = m phi2Dot = omega2 (p0 + pz)
    const double p0 = 0.5 * kMass * (phi1Dot / w1 + phi2Dot / w2);
    const double pz = 0.5 * kMass * (phi2Dot / w2 - phi1Dot / w1);
    return {p0, -a[1], -a[2], pz};
}

}  // namespace

ParticleState analytic_initial_state(const Background& bg, const FourVector& pOrPiIn,
                                     SolubleCase solCase) {
    if (solCase == SolubleCase::MagneticNode) {
        const MagneticNodeOrbit orbit = magnetic_node_orbit(bg, pOrPiIn);
        const double omega = bg.kBar()[0];
        ParticleState st;
        st.tau = 0.0;
        st.x = {orbit.phi0 / omega, 0.0, 0.0, 0.0};
        st.p = node_momentum(bg, orbit, 0.0);
        return st;
    }
    const DeltaOrbit orbit = delta_orbit(bg, pOrPiIn);
    ParticleState st;
    st.tau = 0.0;
    st.x = {0.0, 0.0, 0.0, 0.0};
    if (orbit.regime == Regime::Forbidden && orbit.restFixedPoint) {
        st.p = {kMass, 0.0, 0.0, 0.0};
        return st;
    }
    st.p = delta_momentum(bg, orbit, 0.0);
    return st;
}

Trajectory reconstruct_trajectory(const Background& bg, const FourVector& pOrPiIn,
                                  SolubleCase solCase, const std::vector<double>& tauGrid) {
    if (tauGrid.empty()) throw std::invalid_argument("reconstruct_trajectory: empty tau grid");

    Trajectory traj;
    traj.reserve(tauGrid.size());

    if (solCase == SolubleCase::ZeroTransverse) {
        const DeltaOrbit orbit = delta_orbit(bg, pOrPiIn);
        if (orbit.regime == Regime::Forbidden && orbit.restFixedPoint) {
            for (const double tau : tauGrid)
                traj.push_back({tau, {tau, 0.0, 0.0, 0.0}, {kMass, 0.0, 0.0, 0.0}});
            return traj;
        }
        const double w1 = bg.wave(1).omega, w2 = bg.wave(2).omega;
        double xPerp[2] = {0.0, 0.0};
        double tauPrev = 0.0;
        for (const double tau : tauGrid) {
            // transverse coordinates by composite Simpson from the previous node
            const int panels = 8;
            const double hp = (tau - tauPrev) / panels;
            for (int k = 0; k < panels && hp != 0.0; ++k) {
                const double ta = tauPrev + k * hp;
                const FourVector pa = delta_momentum(bg, orbit, ta);
                const FourVector pm = delta_momentum(bg, orbit, ta + 0.5 * hp);
                const FourVector pb = delta_momentum(bg, orbit, ta + hp);
                for (int c = 0; c < 2; ++c)
                    xPerp[c] += hp / 6.0 * (pa[c + 1] + 4.0 * pm[c + 1] + pb[c + 1]) / kMass;
            }
            tauPrev = tau;
            const DeltaPhases ph = delta_phases(orbit, tau);
            const double phi1 = 0.5 * (ph.phiSigma + ph.phiDelta);
            const double phi2 = 0.5 * (ph.phiSigma - ph.phiDelta);
            const double t = 0.5 * (phi1 / w1 + phi2 / w2);
            const double z = 0.5 * (phi2 / w2 - phi1 / w1);
            traj.push_back({tau, {t, xPerp[0], xPerp[1], z}, delta_momentum(bg, orbit, tau)});
        }
        return traj;
    }

    const MagneticNodeOrbit orbit = magnetic_node_orbit(bg, pOrPiIn);
    const double omega = bg.kBar()[0];
    double xPerp[2] = {0.0, 0.0};
    double tauPrev = 0.0;
    for (const double tau : tauGrid) {
        const int panels = 8;
        const double hp = (tau - tauPrev) / panels;
        for (int k = 0; k < panels && hp != 0.0; ++k) {
            const double ta = tauPrev + k * hp;
            const FourVector pa = node_momentum(bg, orbit, ta);
            const FourVector pm = node_momentum(bg, orbit, ta + 0.5 * hp);
            const FourVector pb = node_momentum(bg, orbit, ta + hp);
            for (int c = 0; c < 2; ++c)
                xPerp[c] += hp / 6.0 * (pa[c + 1] + 4.0 * pm[c + 1] + pb[c + 1]) / kMass;
        }
        tauPrev = tau;
        const double phiBar = magnetic_node_phase(orbit, tau);
        traj.push_back({tau, {phiBar / omega, xPerp[0], xPerp[1], 0.0},
                        node_momentum(bg, orbit, tau)});
    }
    return traj;
}

}  // namespace swave::classical
