#include "lorentz/dynamics.hpp"

#include <cmath>
#include <sstream>

#include "lorentz/errors.hpp"

namespace lorentz {

namespace {
constexpr double kShellAbortTol = 1e-3;

void check_shell_or_abort(const ParticleState& s) {
    const double defect = std::fabs(s.shell_defect());
    if (defect > kShellAbortTol) {
        std::ostringstream os;
        os << "mass-shell defect " << defect << " at tau = " << s.tau
           << " exceeds the abort threshold " << kShellAbortTol;
        throw IntegratorError(os.str());
    }
}
}  // namespace

std::string stepper_name(Stepper s) {
    switch (s) {
        case Stepper::Exact: return "exact";
        case Stepper::Rk4: return "rk4";
        default: return "rk4_renorm";
    }
}

Stepper stepper_from_name(const std::string& name) {
    if (name == "exact") return Stepper::Exact;
    if (name == "rk4") return Stepper::Rk4;
    if (name == "rk4_renorm") return Stepper::Rk4Renorm;
    throw ParseError("unknown stepper '" + name + "' (expected exact, rk4 or rk4_renorm)");
}

FourVector lorentz_force(const FourVector& u, const FieldTensor& f, Coupling k) {
    return tensor_to_generator(f, k).matrix() * u;
}

ExactPropagator::ExactPropagator(const FieldTensor& f, Coupling k, double dt) : dt_(dt) {
    if (!(dt > 0.0)) throw ConfigError("dt must be positive");
    const auto ei = exp_and_integral(tensor_to_generator(f, k).matrix(), dt);
    u_map_ = ei.exp;
    x_map_ = ei.integral;
}

ParticleState ExactPropagator::step(const ParticleState& s) const {
    ParticleState out;
    out.tau = s.tau + dt_;
    out.u = u_map_ * s.u;
    out.x = s.x + x_map_ * s.u;
    return out;
}

ParticleState step_exact(const ParticleState& s, const FieldTensor& f, Coupling k, double dt) {
    return ExactPropagator(f, k, dt).step(s);
}

ParticleState step_rk4(const ParticleState& s, const FieldMap& map, Coupling k, double dt) {
    if (!(dt > 0.0)) throw ConfigError("dt must be positive");
    auto du = [&](const FourVector& x, const FourVector& u) {
        return tensor_to_generator(evaluate(map, x), k).matrix() * u;
    };

    const FourVector k1x = s.u;
    const FourVector k1u = du(s.x, s.u);
    const FourVector k2x = s.u + k1u * (dt / 2);
    const FourVector k2u = du(s.x + k1x * (dt / 2), s.u + k1u * (dt / 2));
    const FourVector k3x = s.u + k2u * (dt / 2);
    const FourVector k3u = du(s.x + k2x * (dt / 2), s.u + k2u * (dt / 2));
    const FourVector k4x = s.u + k3u * dt;
    const FourVector k4u = du(s.x + k3x * dt, s.u + k3u * dt);

    ParticleState out;
    out.tau = s.tau + dt;
    out.x = s.x + (k1x + 2.0 * k2x + 2.0 * k3x + k4x) * (dt / 6);
    out.u = s.u + (k1u + 2.0 * k2u + 2.0 * k3u + k4u) * (dt / 6);
    return out;
}

FourVector renormalize(const FourVector& u) {
    const double n = minkowski_inner(u, u);
    if (!(n > 0.0) || !(u[0] > 0.0)) {
        std::ostringstream os;
        os << "four-velocity is not future-timelike (<u,u> = " << n << ", u0 = " << u[0]
           << "); integrator blow-up";
        throw ConfigError(os.str());
    }
    return u * (1.0 / std::sqrt(n));
}

Trajectory integrate(const FourVector& x0, const FourVector& u0, const FieldMap& map,
                     Coupling k, double dt, long n_steps, Stepper stepper) {
    if (!(dt > 0.0)) throw ConfigError("dt must be positive");
    if (n_steps < 1) throw ConfigError("n_steps must be at least 1");
    if (std::fabs(minkowski_inner(u0, u0) - 1.0) > 1e-9)
        throw ConfigError("initial four-velocity is off the mass shell");
    if (stepper == Stepper::Exact && !map.is_uniform())
        throw ConfigError("exact stepper requires a uniform field map");

    Trajectory traj;
    traj.stepper = stepper;
    traj.dt = dt;
    traj.map_tag = map.tag();
    traj.states.reserve(static_cast<std::size_t>(n_steps) + 1);

    ParticleState s;
    s.tau = 0.0;
    s.x = x0;
    s.u = u0;
    traj.states.push_back(s);

    if (stepper == Stepper::Exact) {
        const ExactPropagator prop(evaluate(map, x0), k, dt);
        for (long i = 0; i < n_steps; ++i) {
            s = prop.step(s);
            check_shell_or_abort(s);
            traj.states.push_back(s);
        }
    } else {
        for (long i = 0; i < n_steps; ++i) {
            s = step_rk4(s, map, k, dt);
            if (stepper == Stepper::Rk4Renorm) s.u = renormalize(s.u);
            check_shell_or_abort(s);
            traj.states.push_back(s);
        }
    }
    return traj;
}

double flow_group_defect(const FourVector& x0, const FourVector& u0, const FieldMap& map,
                         Coupling k, double tau1, double tau2, Stepper stepper, double dt) {
    ParticleState composed;
    ParticleState direct;
    composed.x = x0;
    composed.u = u0;
    direct = composed;

    if (stepper == Stepper::Exact) {
        if (!map.is_uniform()) throw ConfigError("exact stepper requires a uniform field map");
        const FieldTensor f = evaluate(map, x0);
        composed = step_exact(composed, f, k, tau1);
        composed = step_exact(composed, f, k, tau2);
        direct = step_exact(direct, f, k, tau1 + tau2);
    } else {
        const long n1 = std::lround(tau1 / dt);
        const long n2 = std::lround(tau2 / dt);
        auto run = [&](ParticleState s, long n) {
            for (long i = 0; i < n; ++i) {
                s = step_rk4(s, map, k, dt);
                if (stepper == Stepper::Rk4Renorm) s.u = renormalize(s.u);
            }
            return s;
        };
        composed = run(run(composed, n1), n2);
        direct = run(direct, n1 + n2);
    }

    return std::max(max_abs_diff(composed.x, direct.x), max_abs_diff(composed.u, direct.u));
}

ParticleState oracle_hyperbolic(double E0, Coupling k, double tau) {
    const double a = k.k * E0;
    ParticleState s;
    s.tau = tau;
    if (a == 0.0) {
        s.x = {tau, 0.0, 0.0, 0.0};
        s.u = {1.0, 0.0, 0.0, 0.0};
        return s;
    }
    s.u = {std::cosh(a * tau), std::sinh(a * tau), 0.0, 0.0};
    s.x = {std::sinh(a * tau) / a, (std::cosh(a * tau) - 1.0) / a, 0.0, 0.0};
    return s;
}

ParticleState oracle_cyclotron(double B0, Coupling k, double u_perp, double tau) {
    const double w = k.k * B0;
    const double gamma = std::sqrt(1.0 + u_perp * u_perp);
    ParticleState s;
    s.tau = tau;
    if (w == 0.0) {
        s.x = {gamma * tau, u_perp * tau, 0.0, 0.0};
        s.u = {gamma, u_perp, 0.0, 0.0};
        return s;
    }
    // u1' = -w u2, u2' = +w u1 from the spatial block of the generator.
    s.u = {gamma, u_perp * std::cos(w * tau), u_perp * std::sin(w * tau), 0.0};
    s.x = {gamma * tau, u_perp * std::sin(w * tau) / w, u_perp * (1.0 - std::cos(w * tau)) / w,
           0.0};
    return s;
}

}  // namespace lorentz
