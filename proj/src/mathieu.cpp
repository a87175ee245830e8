#include "swave/mathieu.hpp"

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

namespace swave {

namespace ode = boost::numeric::odeint;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr long double kPiL = 3.141592653589793238462643383279503L;

using StateLD = std::array<long double, 4>;
using Mat2 = std::array<std::array<double, 2>, 2>;

long segment_count(const MathieuSpec& spec, int refine) {
    const double freq = std::sqrt(std::abs(spec.lambda) + 2.0 * std::abs(spec.q) + 1.0);
    return std::min<long>(2000000, refine * (64 + 16 * static_cast<long>(std::ceil(freq))));
}

// Fundamental matrix of F'' + [lambda - 2Q cos(2y)] F = 0 over [0, pi], both
// columns propagated together in extended precision. Deep instability regions
// grow beyond floating-point range, so the state is renormalised segment by
// segment: the true matrix is e^{logScale} times the returned one. The zero
// count of the (1,0) column over [0, pi) is collected along the way (in the
// n-th gap every nontrivial real solution has exactly n zeros per period,
// which pins Re nu there).
struct ScaledMonodromy {
    Mat2 m{};
    double logScale = 0.0;
    int zeros = 0;
};

ScaledMonodromy monodromy(const MathieuSpec& spec, double tol, int refine = 1) {
    const long double lam = spec.lambda;
    const long double q = spec.q;
    auto rhs = [lam, q](const StateLD& s, StateLD& d, long double y) {
        const long double g = lam - 2.0L * q * std::cos(2.0L * y);
        d[0] = s[1];
        d[1] = -g * s[0];
        d[2] = s[3];
        d[3] = -g * s[2];
    };
    StateLD s{1.0L, 0.0L, 0.0L, 1.0L};
    ode::runge_kutta_fehlberg78<StateLD, long double, StateLD, long double> stepper;
    auto controlled = ode::make_controlled(static_cast<long double>(tol),
                                           static_cast<long double>(tol), stepper);
    const long n = segment_count(spec, refine);
    const long double h = kPiL / static_cast<long double>(n);
    ScaledMonodromy out;
    long double prev = s[0];
    for (long i = 0; i < n; ++i) {
        try {
            ode::integrate_adaptive(controlled, rhs, s, i * h, (i + 1) * h, h / 4.0L);
        } catch (const std::exception& e) {
            throw NonConvergence(std::string("mathieu monodromy integration failed: ") + e.what());
        }
        if ((prev < 0.0L) != (s[0] < 0.0L)) ++out.zeros;
        prev = s[0];
        const long double mag =
            std::max({std::abs(s[0]), std::abs(s[1]), std::abs(s[2]), std::abs(s[3])});
        if (mag > 1e120L) {  // renormalise both columns by a common factor
            for (auto& v : s) v /= mag;
            prev /= mag;
            out.logScale += static_cast<double>(std::log(mag));
        }
    }
    out.m = Mat2{{{static_cast<double>(s[0]), static_cast<double>(s[2])},
                  {static_cast<double>(s[1]), static_cast<double>(s[3])}}};
    return out;
}

// Total phase advance of the complex Floquet solution over one period.
// J never vanishes inside an open band, so arg J is smooth and the advance
// equals pi * nu on the branch continuous from nu = sqrt(lambda) at Q = 0.
double floquet_phase_advance(const MathieuSpec& spec, const std::complex<double>& j0,
                             const std::complex<double>& jp0, double tol) {
    const double lam = spec.lambda;
    const double q = spec.q;
    using StateC = std::array<double, 5>;
    auto rhs = [lam, q](const StateC& s, StateC& d, double y) {
        const double g = lam - 2.0 * q * std::cos(2.0 * y);
        d[0] = s[2];
        d[1] = s[3];
        d[2] = -g * s[0];
        d[3] = -g * s[1];
        d[4] = (s[0] * s[3] - s[1] * s[2]) / (s[0] * s[0] + s[1] * s[1]);
    };
    StateC s{j0.real(), j0.imag(), jp0.real(), jp0.imag(), 0.0};
    const double freq = std::sqrt(std::abs(lam) + 2.0 * std::abs(q) + 1.0);
    ode::runge_kutta_fehlberg78<StateC> stepper;
    try {
        ode::integrate_adaptive(ode::make_controlled(tol, tol, stepper), rhs, s, 0.0, kPi,
                                kPi / (16.0 * freq));
    } catch (const std::exception& e) {
        throw NonConvergence(std::string("mathieu phase integration failed: ") + e.what());
    }
    return s[4];
}

}  // namespace

FloquetExponent mathieu_nu(const MathieuSpec& spec, const MathieuNuOptions& opt) {
    const ScaledMonodromy sm = monodromy(spec, opt.odeTol);
    const double tS = 0.5 * (sm.m[0][0] + sm.m[1][1]);  // true half-trace = e^logScale * tS

    FloquetExponent nu;
    nu.cosPiNu = std::exp(std::min(sm.logScale, 700.0)) * tS;

    const double edge = 1e-11;
    if (sm.logScale == 0.0 && std::abs(tS) < 1.0 - edge) {
        // stability band: fractional part from the trace, integer part from
        // the winding of the Floquet eigensolution
        const Mat2& m = sm.m;
        const double nu0 = std::acos(std::min(1.0, std::max(-1.0, tS))) / kPi;
        const std::complex<double> mu(tS, std::sin(kPi * nu0));

        // eigenvector (w0, w1) of the monodromy matrix, better-conditioned row
        std::complex<double> w0, w1;
        if (std::abs(m[0][1]) >= std::abs(m[1][0])) {
            w0 = m[0][1];
            w1 = mu - m[0][0];
        } else {
            w0 = mu - m[1][1];
            w1 = m[1][0];
        }
        const double scale = std::max({std::abs(m[0][0]), std::abs(m[0][1]), std::abs(m[1][0]),
                                       std::abs(m[1][1])});
        if (std::abs(w0) < 1e-10 * scale) {
            // band edge: eigenvectors degenerate, nu is (numerically) integer
            nu.nuRe = static_cast<double>(sm.zeros);
            nu.nuIm = 0.0;
            nu.isBand = true;
            return nu;
        }
        const double advance = floquet_phase_advance(spec, w0, w1, std::max(opt.odeTol, 1e-12));
        const double winding = std::abs(advance) / kPi;
        double best = 0.0, bestDist = 1e300;
        for (const double base : {nu0, -nu0}) {
            const double cand = base + 2.0 * std::round((winding - base) / 2.0);
            if (cand < -1e-9) continue;
            if (const double d = std::abs(cand - winding); d < bestDist) {
                bestDist = d;
                best = cand;
            }
        }
        if (bestDist > 0.5)
            throw NonConvergence("mathieu_nu: winding and monodromy trace are inconsistent");
        nu.nuRe = std::max(0.0, best);
        nu.nuIm = 0.0;
        nu.isBand = true;
        return nu;
    }

    if (sm.logScale == 0.0 && std::abs(tS) <= 1.0 + edge) {
        // numerically at a band edge: nu is an integer
        nu.nuRe = static_cast<double>(sm.zeros);
        nu.nuIm = 0.0;
        nu.isBand = true;
        return nu;
    }

    // instability gap: |cos(pi nu)| > 1, nu = k + i y with integer k; for deep
    // gaps acosh(|t|) reduces to log(2|t|) and the scaled form stays in range
    const double absT = std::abs(tS);
    double y;
    if (sm.logScale == 0.0 && absT < 1e15)
        y = std::acosh(absT) / kPi;
    else
        y = (sm.logScale + std::log(absT) + std::log(2.0)) / kPi;

    int k = sm.zeros;
    const bool wantEven = tS > 0.0;
    if ((k % 2 == 0) != wantEven) {
        k = monodromy(spec, opt.odeTol, 4).zeros;  // denser sampling retry
        if ((k % 2 == 0) != wantEven)
            throw NonConvergence("mathieu_nu: zero count parity inconsistent with trace");
    }
    nu.nuRe = static_cast<double>(k);
    nu.nuIm = y;
    nu.isBand = std::abs(nu.nuIm) < opt.bandTol;
    return nu;
}

MathieuSolution solve_mathieu(const MathieuSpec& spec, double y0, double y1, double f0,
                              double fp0, double tol, int nSamples) {
    if (!(y1 > y0)) throw std::invalid_argument("solve_mathieu: need y1 > y0");
    const double lam = spec.lambda;
    const double q = spec.q;
    const double freq = std::sqrt(std::abs(lam) + 2.0 * std::abs(q) + 1.0);
    if (nSamples <= 1) {
        nSamples = static_cast<int>(std::max(513.0, std::ceil(16.0 * (y1 - y0) * freq / kPi)));
        nSamples = std::min(nSamples, 400001);
    }

    auto rhs = [lam, q](const std::array<double, 2>& s, std::array<double, 2>& d, double y) {
        const double g = lam - 2.0 * q * std::cos(2.0 * y);
        d[0] = s[1];
        d[1] = -g * s[0];
    };

    MathieuSolution sol;
    sol.y.resize(static_cast<std::size_t>(nSamples));
    const double h = (y1 - y0) / (nSamples - 1);
    for (int i = 0; i < nSamples; ++i) sol.y[static_cast<std::size_t>(i)] = y0 + i * h;
    sol.y.back() = y1;
    sol.f.reserve(sol.y.size());
    sol.fp.reserve(sol.y.size());

    std::array<double, 2> s{f0, fp0};
    ode::runge_kutta_fehlberg78<std::array<double, 2>> stepper;
    try {
        ode::integrate_times(ode::make_controlled(tol, tol, stepper), rhs, s, sol.y.begin(),
                             sol.y.end(), h / 8.0,
                             [&sol](const std::array<double, 2>& st, double) {
                                 sol.f.push_back(st[0]);
                                 sol.fp.push_back(st[1]);
                             });
    } catch (const std::exception& e) {
        throw NonConvergence(std::string("solve_mathieu: step-size failure: ") + e.what());
    }
    return sol;
}

double mathieu_cos_pi_nu_hill(const MathieuSpec& spec, int halfOrder) {
    const double lam = spec.lambda;
    // beta_n = Q / (4 n^2 - lambda); poles at lambda = (2n)^2 excluded
    for (int n = -halfOrder; n <= halfOrder; ++n)
        if (std::abs(4.0 * n * n - lam) < 1e-6)
            throw std::domain_error("mathieu_cos_pi_nu_hill: lambda too close to a pole (2n)^2");

    auto beta = [&](int n) { return spec.q / (4.0 * n * n - lam); };
    // principal minors of the tridiagonal truncation, rows n = -N..N
    double dPrev2 = 1.0, dPrev1 = 1.0;
    for (int r = 1; r <= 2 * halfOrder; ++r) {
        const int nRow = -halfOrder + r;
        const double p = beta(nRow - 1) * beta(nRow);
        const double d = dPrev1 - p * dPrev2;
        dPrev2 = dPrev1;
        dPrev1 = d;
    }
    const double delta0 = dPrev1;

    const std::complex<double> sq = std::sqrt(std::complex<double>(lam, 0.0));
    const std::complex<double> s = std::sin(0.5 * kPi * sq);
    return 1.0 - 2.0 * delta0 * (s * s).real();
}

}  // namespace swave
