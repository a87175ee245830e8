#include "swave/invariants.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace swave {

namespace {

int levi_civita(int a, int b, int c, int d) {
    // sign of the permutation (a b c d) of (0 1 2 3), 0 if repeated
    int p[4] = {a, b, c, d};
    int sign = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            if (p[i] == p[j]) return 0;
            if (p[i] > p[j]) {
                std::swap(p[i], p[j]);
                sign = -sign;
            }
        }
    return sign;
}

}  // namespace

InvariantSet relativistic_invariants(const Background& bg, const FourVector& p,
                                     const FourVector& x, double threshold) {
    const double m2 = kMass * kMass;
    if (std::abs(dot(p, p) - m2) > 1e-9 * m2)
        throw std::invalid_argument("relativistic_invariants: momentum off mass shell");

    const auto f = field_tensor(bg, x);  // covariant f_{mu nu}
    const double g[4] = {1.0, -1.0, -1.0, -1.0};

    // raise indices: f^{mu nu} = g^{mu mu} g^{nu nu} f_{mu nu} (diagonal metric)
    std::array<std::array<double, 4>, 4> fu{};
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) fu[mu][nu] = g[mu] * g[nu] * f[mu][nu];

    double ff = 0.0;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) ff += fu[mu][nu] * f[mu][nu];

    // dual: f*_{mu nu} = (1/2) eps_{mu nu rho sigma} f^{rho sigma}, eps_{0123} = +1
    double ffd = 0.0;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            double fstar = 0.0;
            for (int r = 0; r < 4; ++r)
                for (int s = 0; s < 4; ++s) {
                    const int e = levi_civita(mu, nu, r, s);
                    if (e != 0) fstar += 0.5 * e * fu[r][s];
                }
            ffd += fu[mu][nu] * fstar;
        }

    const double m4 = m2 * m2;
    InvariantSet inv;
    inv.xi = bg.xiSigma();
    inv.eta = dot(bg.kBar(), p) / m2;
    inv.calF = -ff / (4.0 * m4);
    inv.calG = -ffd / (4.0 * m4);
    inv.validity_ratio = (inv.calF == 0.0) ? std::numeric_limits<double>::infinity()
                                           : inv.eta * inv.eta / inv.calF;
    inv.plane_wave_valid = inv.validity_ratio > threshold;
    return inv;
}

}  // namespace swave
