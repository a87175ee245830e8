#include "swave/background.hpp"

#include <cmath>
#include <stdexcept>

namespace swave {

void Background::validate() const {
    for (int l = 1; l <= 2; ++l) {
        const PlaneWave& w = wave(l);
        const double n = w.dir[0] * w.dir[0] + w.dir[1] * w.dir[1] + w.dir[2] * w.dir[2];
        if (std::abs(n - 1.0) > 1e-12) throw std::invalid_argument("PlaneWave: dir must be a unit vector");
        const FourVector k = w.wavevector();
        if (std::abs(dot(k, k)) > 1e-12 * w.omega * w.omega)
            throw std::invalid_argument("PlaneWave: wavevector not lightlike");
        for (const FourVector* e : {&w.eps1, &w.eps2}) {
            if (std::abs(dot(*e, *e) + 1.0) > 1e-12)
                throw std::invalid_argument("PlaneWave: polarisation not normalised to eps.eps = -1");
            if (std::abs(dot(k, *e)) > 1e-12 * w.omega)
                throw std::invalid_argument("PlaneWave: polarisation not transverse to k");
        }
        if (std::abs(dot(w.eps1, w.eps2)) > 1e-12)
            throw std::invalid_argument("PlaneWave: polarisations not orthogonal");
    }
}

PhaseVariables phase_variables(const Background& bg, const FourVector& x) {
    PhaseVariables ph;
    ph.phi1 = dot(bg.k1(), x);
    ph.phi2 = dot(bg.k2(), x);
    ph.phiDelta = ph.phi1 - ph.phi2;
    ph.phiSigma = ph.phi1 + ph.phi2;
    ph.phiBar = dot(bg.kBar(), x);
    return ph;
}

FourVector wave_potential(const PlaneWave& w, double phi) {
    const double amp = kMass * w.xi;
    return amp * std::cos(phi) * w.eps1 + amp * std::sin(phi) * w.eps2;
}

FourVector wave_potential_derivative(const PlaneWave& w, double phi) {
    const double amp = kMass * w.xi;
    return -amp * std::sin(phi) * w.eps1 + amp * std::cos(phi) * w.eps2;
}

FourVector eval_potential(const Background& bg, const FourVector& x) {
    const PhaseVariables ph = phase_variables(bg, x);
    return wave_potential(bg.wave(1), ph.phi1) + wave_potential(bg.wave(2), ph.phi2);
}

FourVector conserved_basis_vector(const Background& bg, int l, int j) {
    if (l < 1 || l > 2 || j < 1 || j > 2) throw std::invalid_argument("conserved_basis_vector: bad index");
    const double k12 = bg.k1k2();
    if (k12 == 0.0) throw std::invalid_argument("conserved_basis_vector: degenerate geometry (k1.k2 = 0)");
    const PlaneWave& w = bg.wave(l);
    const FourVector& eps = (j == 1) ? w.eps1 : w.eps2;
    return eps - (dot(eps, bg.k2()) / k12) * bg.k1() - (dot(eps, bg.k1()) / k12) * bg.k2();
}

std::array<std::array<double, 4>, 4> field_tensor(const Background& bg, const FourVector& x) {
    // f_{mu nu} = sum_l [ k_{l,mu} a_l'(phi_l)_nu - k_{l,nu} a_l'(phi_l)_mu ],
    // with all indices lowered by the metric diag(1,-1,-1,-1).
    const PhaseVariables ph = phase_variables(bg, x);
    std::array<std::array<double, 4>, 4> f{};
    const double g[4] = {1.0, -1.0, -1.0, -1.0};
    for (int l = 1; l <= 2; ++l) {
        const PlaneWave& w = bg.wave(l);
        const FourVector k = w.wavevector();
        const FourVector ap = wave_potential_derivative(w, l == 1 ? ph.phi1 : ph.phi2);
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = 0; nu < 4; ++nu)
                f[mu][nu] += g[mu] * k[mu] * g[nu] * ap[nu] - g[nu] * k[nu] * g[mu] * ap[mu];
    }
    return f;
}

}  // namespace swave
