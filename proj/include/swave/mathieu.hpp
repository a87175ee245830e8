// Floquet analysis of the canonical Mathieu equation
//     F'' + [lambda - 2 Q cos(2y)] F = 0.
// The characteristic exponent nu is defined by J(y + pi) = e^{i pi nu} J(y);
// Im(nu) = 0 in stability bands, Im(nu) != 0 in gaps.
#pragma once

#include <vector>

#include "swave/errors.hpp"

namespace swave {

struct MathieuSpec {
    double lambda = 0.0;
    double q = 0.0;
};

struct FloquetExponent {
    double nuRe = 0.0;
    double nuIm = 0.0;
    bool isBand = true;
    double cosPiNu = 1.0;  // half-trace of the monodromy matrix (always real)
};

struct MathieuNuOptions {
    double bandTol = 1e-9;   // |Im nu| below this counts as a band
    double odeTol = 1e-13;   // local tolerance of the monodromy integration
};

// Characteristic exponent on the branch continuous in lambda with
// nu(lambda, 0) = sqrt(lambda) for lambda > 0 (real part a fixed nonnegative
// integer across each gap). nu is defined modulo 2; this branch makes
// e^{i pi nu} and the quasi-momentum single-valued along parameter sweeps.
FloquetExponent mathieu_nu(const MathieuSpec& spec, const MathieuNuOptions& opt = {});

// Sampled numerical solution of the canonical equation (oracle-grade).
struct MathieuSolution {
    std::vector<double> y;
    std::vector<double> f;
    std::vector<double> fp;
};

MathieuSolution solve_mathieu(const MathieuSpec& spec, double y0, double y1,
                              double f0, double fp0, double tol = 1e-10,
                              int nSamples = 0);

// Truncated Hill-determinant evaluation of cos(pi nu); secondary cross-check
// for mathieu_nu. Not valid within ~1e-6 of the poles lambda = (2n)^2.
double mathieu_cos_pi_nu_hill(const MathieuSpec& spec, int halfOrder = 30);

}  // namespace swave
