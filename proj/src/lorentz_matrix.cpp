#include "lorentz/lorentz_matrix.hpp"

#include <cmath>
#include <sstream>

#include "lorentz/errors.hpp"

namespace lorentz {

namespace {
constexpr double kGroupTol = 1e-12;

double metric_defect_of(const Matrix4& m) {
    const Matrix4 eta = Matrix4::eta();
    return max_abs_diff(m.transposed() * eta * m, eta);
}

// cosh^2 - sinh^2 = 1 holds only to ~N^2 ulp at entry magnitude N, so the
// validation tolerance carries a scale-dependent round-off allowance on top
// of the 1e-12 floor.
double group_tol_for(const Matrix4& m) {
    const double n = m.max_abs();
    return kGroupTol + 32.0 * 1.1e-16 * n * n;
}
}  // namespace

LorentzMatrix::LorentzMatrix(const Matrix4& m) : m_(m) {
    const double defect = metric_defect_of(m);
    const double tol = group_tol_for(m);
    if (!m.finite() || defect > tol) {
        std::ostringstream os;
        os << "matrix is not Lorentz: metric-preservation defect " << defect;
        throw StructuralError(os.str());
    }
    const double d = determinant(m);
    if (std::fabs(d - 1.0) > tol) {
        std::ostringstream os;
        os << "matrix is not proper: det = " << d;
        throw StructuralError(os.str());
    }
}

LorentzMatrix LorentzMatrix::inverse() const {
    const Matrix4 eta = Matrix4::eta();
    return LorentzMatrix(eta * m_.transposed() * eta);
}

double LorentzMatrix::metric_defect() const { return metric_defect_of(m_); }

LorentzMatrix rotation_matrix(int axis, double phi) {
    if (axis < 1 || axis > 3) throw ConfigError("rotation axis must be 1, 2 or 3");
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    Matrix4 m = Matrix4::identity();
    switch (axis) {
        case 1:
            m(2, 2) = c; m(2, 3) = -s;
            m(3, 2) = s; m(3, 3) = c;
            break;
        case 2:
            m(1, 1) = c; m(1, 3) = s;
            m(3, 1) = -s; m(3, 3) = c;
            break;
        default:
            m(1, 1) = c; m(1, 2) = -s;
            m(2, 1) = s; m(2, 2) = c;
            break;
    }
    return LorentzMatrix(m);
}

LorentzMatrix boost_matrix(int axis, double psi) {
    if (axis < 1 || axis > 3) throw ConfigError("boost axis must be 1, 2 or 3");
    const double ch = std::cosh(psi);
    const double sh = std::sinh(psi);
    Matrix4 m = Matrix4::identity();
    m(0, 0) = ch;
    m(axis, axis) = ch;
    m(0, axis) = sh;
    m(axis, 0) = sh;
    return LorentzMatrix(m);
}

LorentzMatrix compose(const LorentzMatrix& a, const LorentzMatrix& b) {
    return LorentzMatrix(a.matrix() * b.matrix());
}

LorentzMatrix general_product(const Vec3& phi, const Vec3& psi) {
    LorentzMatrix L = rotation_matrix(1, phi[0]);
    L = L * rotation_matrix(2, phi[1]);
    L = L * rotation_matrix(3, phi[2]);
    L = L * boost_matrix(1, psi[0]);
    L = L * boost_matrix(2, psi[1]);
    L = L * boost_matrix(3, psi[2]);
    return L;
}

FourVector apply(const LorentzMatrix& L, const FourVector& u) { return L.matrix() * u; }

}  // namespace lorentz
