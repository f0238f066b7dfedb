#pragma once

#include <string>
#include <vector>

#include "lorentz/field_tensor.hpp"
#include "lorentz/four_vector.hpp"
#include "lorentz/generator.hpp"

namespace lorentz {

/// A proper-time sample of the worldline: event x and four-velocity u.
struct ParticleState {
    double tau = 0.0;
    FourVector x;
    FourVector u{1.0, 0.0, 0.0, 0.0};

    /// <u,u> - 1.
    double shell_defect() const { return minkowski_inner(u, u) - 1.0; }
};

enum class Stepper { Exact, Rk4, Rk4Renorm };

std::string stepper_name(Stepper s);
Stepper stepper_from_name(const std::string& name);

struct Trajectory {
    std::vector<ParticleState> states;
    Stepper stepper = Stepper::Exact;
    double dt = 0.0;
    FieldMap::Tag map_tag = FieldMap::Tag::Uniform;
};

/// du/dtau = Q u with Q = tensor_to_generator(f, k).
FourVector lorentz_force(const FourVector& u, const FieldTensor& f, Coupling k);

/// Flow of a constant field over steps of fixed size: u -> exp(dt Q) u and
/// x -> x + (int_0^dt exp(s Q) ds) u, both precomputed once.
class ExactPropagator {
public:
    ExactPropagator(const FieldTensor& f, Coupling k, double dt);

    ParticleState step(const ParticleState& s) const;

    const Matrix4& velocity_map() const { return u_map_; }
    const Matrix4& position_map() const { return x_map_; }

private:
    Matrix4 u_map_;
    Matrix4 x_map_;
    double dt_;
};

/// One exact step under a field held constant over the step.
/// Throws ConfigError for dt <= 0.
ParticleState step_exact(const ParticleState& s, const FieldTensor& f, Coupling k, double dt);

/// Classical RK4 on the extended state (x, u) with derivatives (u, Q(x) u).
/// No renormalization inside the step.
ParticleState step_rk4(const ParticleState& s, const FieldMap& map, Coupling k, double dt);

/// Mass-shell projection u / sqrt(<u,u>). Throws ConfigError for
/// non-timelike or past-pointing u.
FourVector renormalize(const FourVector& u);

/// Fixed-step trajectory of n_steps+1 states. EXACT requires a UNIFORM map.
/// Aborts with IntegratorError if |<u,u> - 1| exceeds 1e-3.
Trajectory integrate(const FourVector& x0, const FourVector& u0, const FieldMap& map,
                     Coupling k, double dt, long n_steps, Stepper stepper);

/// Max component difference between integrating to tau1 then continuing to
/// tau2, and integrating to tau1+tau2 directly. EXACT takes single steps of
/// the stated spans; RK4 uses the fixed grid dt.
double flow_group_defect(const FourVector& x0, const FourVector& u0, const FieldMap& map,
                         Coupling k, double tau1, double tau2, Stepper stepper, double dt);

/// Closed-form hyperbolic motion: constant E along axis 1, start at rest at
/// the origin.
ParticleState oracle_hyperbolic(double E0, Coupling k, double tau);

/// Closed-form cyclotron motion: constant B along axis 3, start at the
/// origin with spatial four-velocity (u_perp, 0, 0).
ParticleState oracle_cyclotron(double B0, Coupling k, double u_perp, double tau);

}  // namespace lorentz
