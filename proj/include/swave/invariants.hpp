// Relativistic invariants of a probe momentum in the two-wave background:
// xi, eta = k.p/m^2, calF = -e^2 F^{uv}F_{uv}/4m^4, calG = -e^2 F^{uv}F*_{uv}/4m^4.
#pragma once

#include "swave/background.hpp"

namespace swave {

struct InvariantSet {
    double xi = 0.0;    // xiSigma of the background
    double eta = 0.0;   // kBar.p / m^2
    double calF = 0.0;  // > 0 for electric-dominated fields
    double calG = 0.0;
    double validity_ratio = 0.0;  // eta^2 / calF (inf when calF == 0)
    bool plane_wave_valid = false;
};

// p must be on-shell: |p.p - m^2| <= 1e-9 m^2. `threshold` is the minimum
// eta^2/calF ratio accepted as "plane-wave model valid".
InvariantSet relativistic_invariants(const Background& bg, const FourVector& p,
                                     const FourVector& x, double threshold = 10.0);

}  // namespace swave
