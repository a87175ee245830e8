// Two-wave electromagnetic background: a(x) = a1(phi1) + a2(phi2) with
// circularly polarised plane waves a_l = m xi_l [eps_{l,1} cos(phi_l) +
// eps_{l,2} sin(phi_l)], phi_l = k_l . x.
#pragma once

#include <stdexcept>

#include "swave/fourvector.hpp"

namespace swave {

// Particle mass in internal units; all quantities are expressed in units of m.
inline constexpr double kMass = 1.0;

struct PlaneWave {
    double xi = 0.0;     // dimensionless intensity parameter
    double omega = 0.0;  // angular frequency, units of m
    std::array<double, 3> dir{0.0, 0.0, 1.0};
    FourVector eps1;  // spacelike polarisation, eps.eps = -1
    FourVector eps2;

    // null wavevector omega * (1, dir)
    FourVector wavevector() const {
        return {omega, omega * dir[0], omega * dir[1], omega * dir[2]};
    }
};

// Phase combinations used throughout: phiDelta = phi1 - phi2,
// phiSigma = phi1 + phi2, phiBar = kBar . x.
struct PhaseVariables {
    double phi1 = 0.0;
    double phi2 = 0.0;
    double phiDelta = 0.0;
    double phiSigma = 0.0;
    double phiBar = 0.0;
};

class Background {
  public:
    Background(const PlaneWave& w1, const PlaneWave& w2) : wave1_(w1), wave2_(w2) {
        k1_ = wave1_.wavevector();
        k2_ = wave2_.wavevector();
        kDelta_ = k1_ - k2_;
        kSigma_ = k1_ + k2_;
        kBar_ = 0.5 * kSigma_;
        xiSigma_ = wave1_.xi + wave2_.xi;
        validate();
    }

    // Head-on geometry: wave 1 along +z, wave 2 along -z, shared linear
    // polarisation basis eps1 = x, eps2 = y for both waves (the two waves then
    // carry opposite helicity and the summed field rotates rigidly at a node).
    static Background head_on(double xi1, double xi2, double omega1, double omega2) {
        if (omega1 <= 0.0 || omega2 <= 0.0) throw std::invalid_argument("head_on: omega must be > 0");
        if (xi1 < 0.0 || xi2 < 0.0) throw std::invalid_argument("head_on: xi must be >= 0");
        PlaneWave w1{xi1, omega1, {0.0, 0.0, 1.0}, {0, 1, 0, 0}, {0, 0, 1, 0}};
        PlaneWave w2{xi2, omega2, {0.0, 0.0, -1.0}, {0, 1, 0, 0}, {0, 0, 1, 0}};
        return {w1, w2};
    }

    const PlaneWave& wave(int l) const { return l == 1 ? wave1_ : wave2_; }
    const FourVector& k1() const { return k1_; }
    const FourVector& k2() const { return k2_; }
    const FourVector& kDelta() const { return kDelta_; }
    const FourVector& kSigma() const { return kSigma_; }
    const FourVector& kBar() const { return kBar_; }
    double xiSigma() const { return xiSigma_; }
    double k1k2() const { return dot(k1_, k2_); }

    bool head_on_geometry() const {
        return wave1_.dir[0] == -wave2_.dir[0] && wave1_.dir[1] == -wave2_.dir[1] &&
               wave1_.dir[2] == -wave2_.dir[2];
    }
    bool equal_amplitudes() const { return wave1_.xi == wave2_.xi; }
    bool equal_frequencies() const { return wave1_.omega == wave2_.omega; }

  private:
    void validate() const;

    PlaneWave wave1_, wave2_;
    FourVector k1_, k2_, kDelta_, kSigma_, kBar_;
    double xiSigma_ = 0.0;
};

PhaseVariables phase_variables(const Background& bg, const FourVector& x);

// a(x) = a1(phi1) + a2(phi2); total function of x.
FourVector eval_potential(const Background& bg, const FourVector& x);

// Single-wave potential and its phase derivative a_l'(phi_l).
FourVector wave_potential(const PlaneWave& w, double phi);
FourVector wave_potential_derivative(const PlaneWave& w, double phi);

// e_{l,j} = eps_{l,j} - (eps_{l,j}.k2 / k1.k2) k1 - (eps_{l,j}.k1 / k1.k2) k2;
// satisfies e_{l,j}.k1 = e_{l,j}.k2 = 0. Requires k1.k2 != 0.
FourVector conserved_basis_vector(const Background& bg, int l, int j);

// Scaled field tensor f_{mu nu} = d_mu a_nu - d_nu a_mu (a = eA), evaluated
// analytically from the closed-form potential. Row-major covariant components.
std::array<std::array<double, 4>, 4> field_tensor(const Background& bg, const FourVector& x);

}  // namespace swave
