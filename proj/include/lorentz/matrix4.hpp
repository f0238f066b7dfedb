#pragma once

#include <array>
#include <cmath>

#include "lorentz/four_vector.hpp"

namespace lorentz {

/// Dense 4x4 real matrix with no group constraint. Row-major.
struct Matrix4 {
    std::array<double, 16> a{};

    double& operator()(int r, int col) { return a[static_cast<std::size_t>(r * 4 + col)]; }
    double operator()(int r, int col) const { return a[static_cast<std::size_t>(r * 4 + col)]; }

    static Matrix4 zero() { return {}; }

    static Matrix4 identity() {
        Matrix4 m;
        for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
        return m;
    }

    /// diag(+1,-1,-1,-1)
    static Matrix4 eta() {
        Matrix4 m;
        m(0, 0) = 1.0;
        m(1, 1) = m(2, 2) = m(3, 3) = -1.0;
        return m;
    }

    Matrix4 operator+(const Matrix4& o) const {
        Matrix4 r;
        for (int i = 0; i < 16; ++i) r.a[static_cast<std::size_t>(i)] =
            a[static_cast<std::size_t>(i)] + o.a[static_cast<std::size_t>(i)];
        return r;
    }

    Matrix4 operator-(const Matrix4& o) const {
        Matrix4 r;
        for (int i = 0; i < 16; ++i) r.a[static_cast<std::size_t>(i)] =
            a[static_cast<std::size_t>(i)] - o.a[static_cast<std::size_t>(i)];
        return r;
    }

    Matrix4 operator*(double s) const {
        Matrix4 r;
        for (int i = 0; i < 16; ++i) r.a[static_cast<std::size_t>(i)] =
            a[static_cast<std::size_t>(i)] * s;
        return r;
    }

    Matrix4 operator*(const Matrix4& o) const {
        Matrix4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                double s = 0.0;
                for (int k = 0; k < 4; ++k) s += (*this)(i, k) * o(k, j);
                r(i, j) = s;
            }
        return r;
    }

    FourVector operator*(const FourVector& v) const {
        FourVector r;
        for (int i = 0; i < 4; ++i) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k) s += (*this)(i, k) * v[k];
            r[i] = s;
        }
        return r;
    }

    Matrix4 transposed() const {
        Matrix4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r(i, j) = (*this)(j, i);
        return r;
    }

    double max_abs() const {
        double m = 0.0;
        for (double x : a) m = std::max(m, std::fabs(x));
        return m;
    }

    bool finite() const {
        for (double x : a)
            if (!std::isfinite(x)) return false;
        return true;
    }
};

inline Matrix4 operator*(double s, const Matrix4& m) { return m * s; }

inline double max_abs_diff(const Matrix4& a, const Matrix4& b) { return (a - b).max_abs(); }

/// Determinant by cofactor expansion along the first row.
inline double determinant(const Matrix4& m) {
    auto det3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
        return m(r0, c0) * (m(r1, c1) * m(r2, c2) - m(r1, c2) * m(r2, c1)) -
               m(r0, c1) * (m(r1, c0) * m(r2, c2) - m(r1, c2) * m(r2, c0)) +
               m(r0, c2) * (m(r1, c0) * m(r2, c1) - m(r1, c1) * m(r2, c0));
    };
    return m(0, 0) * det3(1, 2, 3, 1, 2, 3) - m(0, 1) * det3(1, 2, 3, 0, 2, 3) +
           m(0, 2) * det3(1, 2, 3, 0, 1, 3) - m(0, 3) * det3(1, 2, 3, 0, 1, 2);
}

}  // namespace lorentz
