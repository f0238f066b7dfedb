#pragma once

#include <array>

#include "lorentz/four_vector.hpp"
#include "lorentz/matrix4.hpp"

namespace lorentz {

/// Proper orthochronous Lorentz transformation acting on four-vectors,
/// u'^a = L^a_l u^l. Every constructor validates metric preservation
/// (max|L^T eta L - eta| <= 1e-12) and det L = +1 to the same tolerance.
class LorentzMatrix {
public:
    /// Validating constructor; throws StructuralError on violation.
    explicit LorentzMatrix(const Matrix4& m);

    static LorentzMatrix identity() { return LorentzMatrix(Matrix4::identity()); }

    const Matrix4& matrix() const { return m_; }
    double operator()(int r, int c) const { return m_(r, c); }

    /// Group inverse, eta L^T eta. Exact for Lorentz matrices, no solve needed.
    LorentzMatrix inverse() const;

    /// max|L^T eta L - eta|, the metric-preservation defect.
    double metric_defect() const;

private:
    Matrix4 m_;
};

/// Spatial rotation about axis i (1,2,3) by phi radians; time row/column
/// untouched. Throws ConfigError on an invalid axis.
LorentzMatrix rotation_matrix(int axis, double phi);

/// Boost along axis i (1,2,3) with rapidity psi: cosh/sinh block in
/// rows/cols {0, i}. Throws ConfigError on an invalid axis.
LorentzMatrix boost_matrix(int axis, double psi);

/// Matrix product a*b.
LorentzMatrix compose(const LorentzMatrix& a, const LorentzMatrix& b);

inline LorentzMatrix operator*(const LorentzMatrix& a, const LorentzMatrix& b) {
    return compose(a, b);
}

/// The six-factor product R1(phi1) R2(phi2) R3(phi3) B1(psi1) B2(psi2) B3(psi3),
/// multiplied left to right in index order.
LorentzMatrix general_product(const Vec3& phi, const Vec3& psi);

/// L u, preserving the Minkowski inner product.
FourVector apply(const LorentzMatrix& L, const FourVector& u);

}  // namespace lorentz
