// Minkowski four-vectors with metric signature (+,-,-,-).
//
// Natural units hbar = c = 1 with the particle mass m = 1 internally;
// momenta are in units of m, coordinates in units of 1/m.
#pragma once

#include <array>
#include <cmath>
#include <ostream>

namespace swave {

struct FourVector {
    // contravariant components (t, x, y, z)
    std::array<double, 4> c{0.0, 0.0, 0.0, 0.0};

    FourVector() = default;
    constexpr FourVector(double t, double x, double y, double z) : c{t, x, y, z} {}

    double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
    double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

    double t() const { return c[0]; }
    double x() const { return c[1]; }
    double y() const { return c[2]; }
    double z() const { return c[3]; }

    FourVector& operator+=(const FourVector& o) {
        for (int i = 0; i < 4; ++i) c[i] += o.c[i];
        return *this;
    }
    FourVector& operator-=(const FourVector& o) {
        for (int i = 0; i < 4; ++i) c[i] -= o.c[i];
        return *this;
    }
    FourVector& operator*=(double s) {
        for (auto& v : c) v *= s;
        return *this;
    }

    friend FourVector operator+(FourVector a, const FourVector& b) { return a += b; }
    friend FourVector operator-(FourVector a, const FourVector& b) { return a -= b; }
    friend FourVector operator*(double s, FourVector a) { return a *= s; }
    friend FourVector operator*(FourVector a, double s) { return a *= s; }
    friend FourVector operator-(const FourVector& a) { return {-a.c[0], -a.c[1], -a.c[2], -a.c[3]}; }
};

// Minkowski scalar product u.v = u0 v0 - u1 v1 - u2 v2 - u3 v3.
inline double dot(const FourVector& u, const FourVector& v) {
    return u.c[0] * v.c[0] - u.c[1] * v.c[1] - u.c[2] * v.c[2] - u.c[3] * v.c[3];
}

inline double norm2(const FourVector& u) { return dot(u, u); }

// Euclidean norm of the spatial part.
inline double spatial_norm(const FourVector& u) {
    return std::sqrt(u.c[1] * u.c[1] + u.c[2] * u.c[2] + u.c[3] * u.c[3]);
}

inline std::ostream& operator<<(std::ostream& os, const FourVector& v) {
    return os << "(" << v.c[0] << ", " << v.c[1] << ", " << v.c[2] << ", " << v.c[3] << ")";
}

}  // namespace swave
