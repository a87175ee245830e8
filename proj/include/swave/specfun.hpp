// Special functions required by the analytic orbit and wavefunction solutions:
// incomplete elliptic integrals (parameter convention, m = k^2, may be
// negative), the Jacobi amplitude, and integer-order Bessel functions.
#pragma once

namespace swave::specfun {

// Carlson symmetric forms R_F, R_D (duplication algorithm).
// Arguments nonnegative, at most one of x,y zero for R_F; z > 0 for R_D.
double carlson_rf(double x, double y, double z);
double carlson_rd(double x, double y, double z);

// F(phi|m) = int_0^phi dt / sqrt(1 - m sin^2 t), any real phi, m <= 1.
double elliptic_f(double phi, double m);

// E(phi|m) = int_0^phi sqrt(1 - m sin^2 t) dt, any real phi, m <= 1,
// with the quasi-periodic extension E(phi + pi|m) = E(phi|m) + 2 E(m).
double elliptic_e(double phi, double m);

// complete integrals K(m) = F(pi/2|m), E(m) = E(pi/2|m), m <= 1 (K: m < 1)
double elliptic_k(double m);
double elliptic_e_complete(double m);

// Jacobi amplitude am(u|m): the inverse of F, i.e. F(am(u|m)|m) = u.
// Any real u; any m <= 1 (descending Landen/AGM for 0<m<1, imaginary-modulus
// reflection for m<0, Gudermannian at m=1). m > 1 rejected.
double jacobi_am(double u, double m);

// dn(u|m) = d/du am(u|m) = sqrt(1 - m sin^2 am(u|m)).
double jacobi_dn(double u, double m);

// Bessel function of the first kind, integer order s >= 0, by Miller's
// backward recurrence with series normalisation.
double bessel_j(int s, double z);

}  // namespace swave::specfun
