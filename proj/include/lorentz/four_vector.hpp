#pragma once

#include <array>
#include <cmath>

namespace lorentz {

using Vec3 = std::array<double, 3>;

/// A point or tangent vector in Minkowski spacetime, signature (+,-,-,-).
/// Index 0 is the time component.
struct FourVector {
    std::array<double, 4> c{};

    FourVector() = default;
    FourVector(double c0, double c1, double c2, double c3) : c{c0, c1, c2, c3} {}

    double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
    double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

    FourVector operator+(const FourVector& o) const {
        return {c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2], c[3] + o.c[3]};
    }
    FourVector operator-(const FourVector& o) const {
        return {c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2], c[3] - o.c[3]};
    }
    FourVector operator*(double s) const {
        return {c[0] * s, c[1] * s, c[2] * s, c[3] * s};
    }

    bool finite() const {
        return std::isfinite(c[0]) && std::isfinite(c[1]) && std::isfinite(c[2]) &&
               std::isfinite(c[3]);
    }
};

inline FourVector operator*(double s, const FourVector& v) { return v * s; }

/// eta(a, b) with eta = diag(+1,-1,-1,-1).
inline double minkowski_inner(const FourVector& a, const FourVector& b) {
    return a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
}

inline double max_abs_diff(const FourVector& a, const FourVector& b) {
    double m = 0.0;
    for (int i = 0; i < 4; ++i) m = std::max(m, std::fabs(a[i] - b[i]));
    return m;
}

}  // namespace lorentz
