#pragma once

#include <functional>

#include "lorentz/four_vector.hpp"
#include "lorentz/lorentz_matrix.hpp"
#include "lorentz/matrix4.hpp"

namespace lorentz {

/// Lie-algebra element of the Lorentz group: boost rates eps and spatial
/// rotation rates b, both per unit proper time. The induced matrix has the
/// boost rates in the (symmetric) time row/column and the rotation rates in
/// the antisymmetric spatial block, so eta*Q is antisymmetric exactly by
/// construction.
class Generator {
public:
    Generator() = default;
    Generator(const Vec3& eps, const Vec3& b) : eps_(eps), b_(b) {}

    const Vec3& eps() const { return eps_; }
    const Vec3& b() const { return b_; }

    /// Row 0 = (0, e1, e2, e3); column 0 the same; spatial block
    /// (1,2) = -b3, (1,3) = +b2, (2,3) = -b1, antisymmetric.
    Matrix4 matrix() const;

    Generator operator+(const Generator& o) const {
        return {{eps_[0] + o.eps_[0], eps_[1] + o.eps_[1], eps_[2] + o.eps_[2]},
                {b_[0] + o.b_[0], b_[1] + o.b_[1], b_[2] + o.b_[2]}};
    }
    Generator operator*(double s) const {
        return {{eps_[0] * s, eps_[1] * s, eps_[2] * s},
                {b_[0] * s, b_[1] * s, b_[2] * s}};
    }

private:
    Vec3 eps_{};
    Vec3 b_{};
};

Generator generator_from_rates(const Vec3& eps, const Vec3& b);

/// Reads rates back out of a raw matrix, rejecting anything that deviates
/// from the generator pattern (symmetric time row/column, antisymmetric
/// spatial block, zero diagonal) by more than tol. Throws StructuralError
/// with the max deviation.
Generator rates_from_generator(const Matrix4& q, double tol);

/// Max deviation of q from the generator pattern; 0 for exact generators.
double generator_pattern_defect(const Matrix4& q);

using MatrixCurve = std::function<LorentzMatrix(double)>;

/// The six-factor family with linear angles: tau -> product of the three
/// rotations by b_i*tau and the three boosts by eps_i*tau.
MatrixCurve parametrized_curve(const Generator& gen);

/// Central 4th-order finite difference of a matrix curve at tau = 0.
Matrix4 derivative_at_zero(const MatrixCurve& curve, double h);

/// Default step for derivative_at_zero: balances h^4 truncation against
/// round-off for rates of order one.
inline constexpr double kDerivativeStep = 1e-3;

/// exp(tau*Q) by scaling-and-squaring with a truncated Taylor series.
LorentzMatrix expm(const Generator& gen, double tau);

/// exp(t*A) together with its running integral int_0^t exp(s*A) ds,
/// computed by the same scaling/doubling pass. Exposed for the exact
/// position update in the dynamics layer.
struct ExpWithIntegral {
    Matrix4 exp;
    Matrix4 integral;
};
ExpWithIntegral exp_and_integral(const Matrix4& a, double t);

/// Matrix commutator [a, b] = AB - BA, read back as a Generator.
Generator commutator(const Generator& a, const Generator& b);

}  // namespace lorentz
