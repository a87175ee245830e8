#include "swave/quantum.hpp"

#include <cmath>
#include <stdexcept>

#include "swave/specfun.hpp"

namespace swave::quantum {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_on_shell(const FourVector& p, const char* who) {
    const double m2 = kMass * kMass;
    if (std::abs(dot(p, p) - m2) > 1e-8 * (m2 + p[0] * p[0]))
        throw std::invalid_argument(std::string(who) + ": momentum off mass shell");
}

double perp_momentum(const Background& bg, const FourVector& p) {
    return std::hypot(dot(p, bg.wave(1).eps1), dot(p, bg.wave(1).eps2));
}

// node-case phase-equation constants with Pi_in identified with p
void node_constants_p(const Background& bg, const FourVector& p, double& varpi2, double& mu2) {
    const double m = kMass;
    const double xiS = bg.xiSigma();
    const double pPerp = perp_momentum(bg, p);
    const double kBp = dot(bg.kBar(), p);
    const double kB2 = norm2(bg.kBar());
    varpi2 = kBp * kBp / (m * m) + kB2 * xiS * (xiS + 2.0 * pPerp / m);
    mu2 = 4.0 * kB2 * xiS * pPerp / m;
}

}  // namespace

KGReduction kg_reduce(const Background& bg, const FourVector& p, SolubleCase c) {
    if (!bg.head_on_geometry()) throw std::invalid_argument("kg_reduce: head-on geometry required");
    require_on_shell(p, "kg_reduce");
    const double m = kMass;
    const double scale = std::max(1.0, std::abs(p[0]));

    KGReduction red;
    red.reductionCase = c;
    if (c == SolubleCase::MagneticNode) {
        if (!bg.equal_amplitudes() || !bg.equal_frequencies())
            throw std::invalid_argument("kg_reduce: node case requires xi1 = xi2 and equal omega");
        if (std::abs(p[3]) > 1e-9 * scale)
            throw std::invalid_argument("kg_reduce: node case requires p^3 = 0");
        const double kB2 = norm2(bg.kBar());
        const double kBp = dot(bg.kBar(), p);
        const double xiS = bg.xiSigma();
        const double pPerp = perp_momentum(bg, p);
        red.spec.lambda = 4.0 * (kBp * kBp + xiS * xiS * m * m * kB2) / (kB2 * kB2);
        red.spec.q = 4.0 * xiS * m * pPerp / kB2;
        red.phi0 = (pPerp == 0.0) ? 0.0
                                  : std::atan2(dot(p, bg.wave(1).eps2), dot(p, bg.wave(1).eps1));
        red.phaseShift = red.phi0 + kPi / 4.0;
        return red;
    }
    if (std::abs(dot(p, bg.wave(1).eps1)) > 1e-9 * scale ||
        std::abs(dot(p, bg.wave(1).eps2)) > 1e-9 * scale)
        throw std::invalid_argument("kg_reduce: zero-transverse case requires pPerp = 0");
    const double kD2 = norm2(bg.kDelta());
    const double kDp = dot(bg.kDelta(), p);
    const double xi1 = bg.wave(1).xi, xi2 = bg.wave(2).xi;
    red.spec.lambda = 4.0 * (kDp * kDp + (xi1 * xi1 + xi2 * xi2) * m * m * kD2) / (kD2 * kD2);
    red.spec.q = -4.0 * xi1 * xi2 / kD2;
    red.phaseShift = 0.0;
    red.phi0 = 0.0;
    return red;
}

double volkov_exponent(const PlaneWave& w, const FourVector& p, double phi) {
    const FourVector k = w.wavevector();
    const double kp = dot(k, p);
    if (std::abs(kp) < 1e-14 * std::max(1.0, std::abs(p[0]) * w.omega))
        throw std::invalid_argument("volkov_exponent: k.p = 0");
    const double m = kMass;
    const double pe1 = dot(p, w.eps1);
    const double pe2 = dot(p, w.eps2);
    // int_0^phi 2 p.a = 2 m xi [pe1 sin(phi) + pe2 (1 - cos(phi))];
    // int_0^phi a^2 = -m^2 xi^2 phi for circular polarisation
    const double lin = 2.0 * m * w.xi * (pe1 * std::sin(phi) + pe2 * (1.0 - std::cos(phi)));
    const double quad = -m * m * w.xi * w.xi * phi;
    return -(lin + quad) / (2.0 * kp);
}

double volkov_exponent_node(const Background& bg, const FourVector& p, double phiBar) {
    const double kBp = dot(bg.kBar(), p);
    if (std::abs(kBp) < 1e-14 * std::max(1.0, std::abs(p[0])))
        throw std::invalid_argument("volkov_exponent_node: kBar.p = 0");
    const double m = kMass;
    const double xiS = bg.xiSigma();
    const double pe1 = dot(p, bg.wave(1).eps1);
    const double pe2 = dot(p, bg.wave(1).eps2);
    const double lin = 2.0 * m * xiS * (pe1 * std::sin(phiBar) + pe2 * (1.0 - std::cos(phiBar)));
    const double quad = -m * m * xiS * xiS * phiBar;
    return -(lin + quad) / (2.0 * kBp);
}

double high_energy_phase(const Background& bg, const FourVector& p, const FourVector& x) {
    const PhaseVariables ph = phase_variables(bg, x);
    const double m = kMass;
    const double scale = std::max(1.0, std::abs(p[0]));
    const double k1p = dot(bg.k1(), p);
    const double k2p = dot(bg.k2(), p);
    const double kDp = dot(bg.kDelta(), p);
    if (std::abs(k1p) < 1e-14 * scale || std::abs(k2p) < 1e-14 * scale ||
        std::abs(kDp) < 1e-14 * scale)
        throw std::invalid_argument("high_energy_phase: vanishing wavevector-momentum product");

    // F, G: -int p.a_l / k_l.p; H: -int a^2 / (2 kDelta.p) over phiDelta
    double phase = dot(p, x);
    for (int l = 1; l <= 2; ++l) {
        const PlaneWave& w = bg.wave(l);
        const double phi = (l == 1) ? ph.phi1 : ph.phi2;
        const double klp = (l == 1) ? k1p : k2p;
        const double pe1 = dot(p, w.eps1), pe2 = dot(p, w.eps2);
        phase -= m * w.xi * (pe1 * std::sin(phi) + pe2 * (1.0 - std::cos(phi))) / klp;
    }
    const double xi1 = bg.wave(1).xi, xi2 = bg.wave(2).xi;
    // int_0^phiDelta a^2 = -m^2 [(xi1^2 + xi2^2) phiDelta + 2 xi1 xi2 sin(phiDelta)]
    phase += m * m * ((xi1 * xi1 + xi2 * xi2) * ph.phiDelta + 2.0 * xi1 * xi2 * std::sin(ph.phiDelta)) /
             (2.0 * kDp);
    return phase;
}

double multiscale_phase(const Background& bg, const FourVector& p, SolubleCase c, double phase) {
    const double m = kMass;
    if (c == SolubleCase::ZeroTransverse) {
        const classical::DeltaOrbit orbit = classical::delta_orbit(bg, p);
        if (orbit.regime == classical::Regime::Forbidden)
            throw std::domain_error("multiscale_phase: forbidden regime");
        const double kD2 = norm2(bg.kDelta());
        const double param = -orbit.muDelta2 / orbit.varpiDelta2;
        return (2.0 * orbit.varpiDelta * m / kD2) * specfun::elliptic_e(0.5 * phase, param);
    }
    double varpi2 = 0.0, mu2 = 0.0;
    node_constants_p(bg, p, varpi2, mu2);
    const double kB2 = norm2(bg.kBar());
    const double kBp = dot(bg.kBar(), p);
    const double varpi = std::sqrt(varpi2);
    return -(kBp / kB2) * phase +
           (2.0 * varpi * m / kB2) * specfun::elliptic_e(0.5 * phase, mu2 / varpi2);
}

double multiscale_amplitude(const Background& bg, const FourVector& p, double phiDelta) {
    const double m = kMass;
    const double kD2 = norm2(bg.kDelta());
    const double kDp = dot(bg.kDelta(), p);
    const double xi1 = bg.wave(1).xi, xi2 = bg.wave(2).xi;
    const double s2 = std::sin(0.5 * phiDelta) * std::sin(0.5 * phiDelta);
    const double a2 = -m * m * (bg.xiSigma() * bg.xiSigma() - 4.0 * xi1 * xi2 * s2);
    const double root = 1.0 - kD2 * a2 / (kDp * kDp);
    if (root <= 0.0)
        throw std::domain_error("multiscale_amplitude: forbidden region (root <= 0)");
    return std::pow(root, -0.25);
}

QuasiMomentum quasimomentum(const Background& bg, const FourVector& p, SolubleCase c,
                            Model model) {
    require_on_shell(p, "quasimomentum");
    const double m = kMass;
    const bool node = (c == SolubleCase::MagneticNode);
    const FourVector kRef = node ? bg.kBar() : bg.kDelta();
    const double kRef2 = norm2(kRef);
    const double kRefP = dot(kRef, p);
    // cycle-averaged -a^2: m^2 xiSigma^2 at the node (constant there),
    // m^2 (xi1^2 + xi2^2) over the Delta phase
    const double xi1 = bg.wave(1).xi, xi2 = bg.wave(2).xi;
    const double meanA2 =
        node ? m * m * bg.xiSigma() * bg.xiSigma() : m * m * (xi1 * xi1 + xi2 * xi2);

    QuasiMomentum qm;
    qm.model = model;
    switch (model) {
        case Model::PW: {
            // plane-wave model: null reference wavevector, exact m*^2
            const double k1p = dot(bg.k1(), p);
            if (k1p == 0.0) throw std::invalid_argument("quasimomentum: k1.p = 0");
            qm.q = p + (meanA2 / (2.0 * k1p)) * bg.k1();
            qm.mStar2 = m * m + meanA2;
            return qm;
        }
        case Model::HE: {
            if (kRefP == 0.0) throw std::invalid_argument("quasimomentum: kRef.p = 0");
            qm.q = p + (meanA2 / (2.0 * kRefP)) * kRef;
            qm.mStar2 = norm2(qm.q);
            return qm;
        }
        case Model::MS: {
            double c0;
            if (node) {
                double varpi2 = 0.0, mu2 = 0.0;
                node_constants_p(bg, p, varpi2, mu2);
                const double varpi = std::sqrt(varpi2);
                c0 = -kRefP / kRef2 + (2.0 / kPi) * (varpi * m / kRef2) *
                                          specfun::elliptic_e_complete(mu2 / varpi2);
            } else {
                const classical::DeltaOrbit orbit = classical::delta_orbit(bg, p);
                if (orbit.regime == classical::Regime::Forbidden)
                    throw std::domain_error("quasimomentum: forbidden regime (MS)");
                const double param = -orbit.muDelta2 / orbit.varpiDelta2;
                c0 = -kRefP / kRef2 + (2.0 / kPi) * (orbit.varpiDelta * m / kRef2) *
                                          specfun::elliptic_e_complete(param);
            }
            qm.q = p + c0 * kRef;
            qm.mStar2 = norm2(qm.q);
            return qm;
        }
        case Model::Exact: {
            const KGReduction red = kg_reduce(bg, p, c);
            const FloquetExponent nu = mathieu_nu(red.spec);
            qm.nuRe = nu.nuRe;
            qm.nuIm = nu.nuIm;
            qm.band = nu.isBand;
            qm.expIPiNu = std::exp(std::complex<double>(0.0, kPi) *
                                   std::complex<double>(nu.nuRe, nu.nuIm));
            // Floquet branch with the free-wave limit: sigma nu/2 -> kRef.p/kRef^2
            const double sigma = (kRefP / kRef2) < 0.0 ? -1.0 : 1.0;
            const std::complex<double> cc =
                sigma * 0.5 * std::complex<double>(nu.nuRe, nu.nuIm) - kRefP / kRef2;
            qm.q = p + cc.real() * kRef;
            qm.mStar2 = m * m + 2.0 * cc * kRefP + cc * cc * kRef2;
            return qm;
        }
    }
    throw std::logic_error("quasimomentum: unknown model");
}

double longitudinal_current(const Background& bg, const FourVector& p,
                            const WavefunctionSample& s) {
    const double k13 = bg.k1()[3];
    const double k23 = bg.k2()[3];
    const double w2 = std::norm(s.w);
    return -2.0 * p[3] * w2 + 2.0 * k13 * std::imag(std::conj(s.w) * s.dw1) +
           2.0 * k23 * std::imag(std::conj(s.w) * s.dw2);
}

}  // namespace swave::quantum
