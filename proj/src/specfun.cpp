#include "swave/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace swave::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846;

double clamp1(double x) { return std::min(1.0, std::max(-1.0, x)); }

}  // namespace

double carlson_rf(double x, double y, double z) {
    if (x < 0.0 || y < 0.0 || z < 0.0 || (x + y == 0.0) || (y + z == 0.0) || (x + z == 0.0))
        throw std::domain_error("carlson_rf: arguments out of domain");
    double xn = x, yn = y, zn = z;
    double an = (x + y + z) / 3.0;
    const double a0 = an;
    double q = std::pow(3.0e-18, -1.0 / 6.0) *
               std::max({std::abs(a0 - x), std::abs(a0 - y), std::abs(a0 - z)});
    double f = 1.0;
    for (int it = 0; it < 200 && q > f * std::abs(an); ++it) {
        const double lam = std::sqrt(xn) * std::sqrt(yn) + std::sqrt(yn) * std::sqrt(zn) +
                           std::sqrt(zn) * std::sqrt(xn);
        xn = 0.25 * (xn + lam);
        yn = 0.25 * (yn + lam);
        zn = 0.25 * (zn + lam);
        an = 0.25 * (an + lam);
        f *= 4.0;
    }
    const double xd = (a0 - x) / (f * an);
    const double yd = (a0 - y) / (f * an);
    const double zd = -xd - yd;
    const double e2 = xd * yd - zd * zd;
    const double e3 = xd * yd * zd;
    return (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0) / std::sqrt(an);
}

double carlson_rd(double x, double y, double z) {
    if (x < 0.0 || y < 0.0 || z <= 0.0 || (x + y == 0.0))
        throw std::domain_error("carlson_rd: arguments out of domain");
    double xn = x, yn = y, zn = z;
    double an = (x + y + 3.0 * z) / 5.0;
    const double a0 = an;
    double q = std::pow(0.25e-18, -1.0 / 6.0) *
               std::max({std::abs(a0 - x), std::abs(a0 - y), std::abs(a0 - z)});
    double f = 1.0;
    double sum = 0.0;
    for (int it = 0; it < 200 && q > f * std::abs(an); ++it) {
        const double sz = std::sqrt(zn);
        const double lam = std::sqrt(xn) * std::sqrt(yn) + std::sqrt(yn) * sz + sz * std::sqrt(xn);
        sum += 1.0 / (f * sz * (zn + lam));
        xn = 0.25 * (xn + lam);
        yn = 0.25 * (yn + lam);
        zn = 0.25 * (zn + lam);
        an = 0.25 * (an + lam);
        f *= 4.0;
    }
    const double xd = (a0 - x) / (f * an);
    const double yd = (a0 - y) / (f * an);
    const double zd = -(xd + yd) / 3.0;
    const double e2 = xd * yd - 6.0 * zd * zd;
    const double e3 = (3.0 * xd * yd - 8.0 * zd * zd) * zd;
    const double e4 = 3.0 * (xd * yd - zd * zd) * zd * zd;
    const double e5 = xd * yd * zd * zd * zd;
    const double series = 1.0 - 3.0 * e2 / 14.0 + e3 / 6.0 + 9.0 * e2 * e2 / 88.0 -
                          3.0 * e4 / 22.0 - 9.0 * e2 * e3 / 52.0 + 3.0 * e5 / 26.0;
    return 3.0 * sum + series / (f * an * std::sqrt(an));
}

namespace {

// incomplete integrals on the principal range |theta| <= pi/2
double ef_principal(double theta, double m) {
    const double s = std::sin(theta);
    const double c2 = std::cos(theta) * std::cos(theta);
    const double w = 1.0 - m * s * s;
    return s * carlson_rf(c2, w, 1.0);
}

double ee_principal(double theta, double m) {
    const double s = std::sin(theta);
    const double c2 = std::cos(theta) * std::cos(theta);
    const double w = 1.0 - m * s * s;
    return s * carlson_rf(c2, w, 1.0) - (m / 3.0) * s * s * s * carlson_rd(c2, w, 1.0);
}

}  // namespace

double elliptic_k(double m) {
    if (m >= 1.0) throw std::domain_error("elliptic_k: parameter must be < 1");
    return carlson_rf(0.0, 1.0 - m, 1.0);
}

double elliptic_e_complete(double m) {
    if (m > 1.0) throw std::domain_error("elliptic_e_complete: parameter must be <= 1");
    if (m == 1.0) return 1.0;
    return carlson_rf(0.0, 1.0 - m, 1.0) - (m / 3.0) * carlson_rd(0.0, 1.0 - m, 1.0);
}

double elliptic_f(double phi, double m) {
    if (m > 1.0) throw std::domain_error("elliptic_f: parameter must be <= 1");
    if (m == 1.0) {
        if (std::abs(phi) >= kPi / 2.0) throw std::domain_error("elliptic_f: divergent at m = 1");
        return std::asinh(std::tan(phi));
    }
    const double n = std::round(phi / kPi);
    const double theta = phi - n * kPi;
    double val = ef_principal(theta, m);
    if (n != 0.0) val += 2.0 * n * elliptic_k(m);
    return val;
}

double elliptic_e(double phi, double m) {
    if (m > 1.0) throw std::domain_error("elliptic_e: parameter must be <= 1");
    const double n = std::round(phi / kPi);
    const double theta = phi - n * kPi;
    double val = (m == 1.0) ? std::sin(theta) : ee_principal(theta, m);
    if (n != 0.0) val += 2.0 * n * elliptic_e_complete(m);
    return val;
}

double jacobi_am(double u, double m) {
    if (m > 1.0) throw std::domain_error("jacobi_am: parameter must be <= 1");
    if (m == 0.0) return u;
    if (m == 1.0) return std::asin(std::tanh(u));  // Gudermannian limit
    if (m < 0.0) {
        // imaginary-modulus reflection through the complementary parameter:
        // F(phi|-mu) = [K(m') - F(pi/2 - phi|m')] / sqrt(1+mu), m' = mu/(1+mu)
        const double mu = -m;
        const double mp = mu / (1.0 + mu);
        const double v = elliptic_k(mp) - u * std::sqrt(1.0 + mu);
        return kPi / 2.0 - jacobi_am(v, mp);
    }
    // descending Landen / AGM, then backward angle recurrence
    double a = 1.0, b = std::sqrt(1.0 - m);
    double ca[64], aa[64];
    int n = 0;
    while (n < 63) {
        const double an = 0.5 * (a + b);
        const double cn = 0.5 * (a - b);
        b = std::sqrt(a * b);
        a = an;
        ca[++n] = cn;
        aa[n] = an;
        if (cn <= 1e-18 * an) break;
    }
    double phi = std::ldexp(a * u, n);  // 2^n a_n u
    for (int k = n; k >= 1; --k) phi = 0.5 * (phi + std::asin(clamp1(ca[k] / aa[k] * std::sin(phi))));
    return phi;
}

double jacobi_dn(double u, double m) {
    const double s = std::sin(jacobi_am(u, m));
    return std::sqrt(1.0 - m * s * s);
}

double bessel_j(int s, double z) {
    if (s < 0) throw std::domain_error("bessel_j: order must be >= 0");
    if (z < 0.0) {
        const double v = bessel_j(s, -z);
        return (s % 2 == 0) ? v : -v;
    }
    if (z == 0.0) return s == 0 ? 1.0 : 0.0;

    // Miller's algorithm: downward recurrence from a safely high order,
    // normalised with J_0 + 2 J_2 + 2 J_4 + ... = 1.
    const int base = std::max(s, static_cast<int>(z));
    int mstart = base + 16 + static_cast<int>(std::ceil(std::sqrt(40.0 * (base + 1))));
    if (mstart % 2 == 1) ++mstart;

    double jp = 0.0;   // J_{k+1}
    double jc = 1e-30; // J_k (arbitrary scale)
    double ans = (s == mstart) ? jc : 0.0;
    double sum = 0.0;
    for (int k = mstart; k >= 1; --k) {
        double jm = (2.0 * k / z) * jc - jp;
        jp = jc;
        jc = jm;
        if (std::abs(jc) > 1e250) {  // rescale to avoid overflow
            jc *= 1e-250;
            jp *= 1e-250;
            sum *= 1e-250;
            ans *= 1e-250;
        }
        const int order = k - 1;
        if (order % 2 == 0 && order > 0) sum += 2.0 * jc;
        if (order == s) ans = jc;
    }
    sum += jc;  // J_0 term
    return ans / sum;
}

}  // namespace swave::specfun
