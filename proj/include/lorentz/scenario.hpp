#pragma once

#include <iosfwd>
#include <string>

#include "lorentz/dynamics.hpp"

namespace lorentz {

/// Flat key-value scenario: one `key = value` per line, `#` comments,
/// vectors as comma-separated components.
struct Scenario {
    std::string name;
    double k = 1.0;
    Vec3 E{};
    Vec3 B{};
    std::string field_map = "uniform";  // "uniform" or "linear_b3"
    double gradient = 0.0;              // dB3/dx1 for linear_b3
    std::array<double, 4> x0{};
    Vec3 u0_spatial{};
    double dt = 0.0;
    long n_steps = 0;
    Stepper stepper = Stepper::Exact;
    long output_stride = 1;

    /// Time component completed from the mass shell: sqrt(1 + |u0|^2).
    FourVector initial_velocity() const;
    FourVector initial_position() const;
    FieldMap make_field_map() const;
};

/// Throws ParseError naming the offending key, or ConfigError for an
/// inconsistent stepper/map combination.
Scenario parse_scenario(const std::string& text);

/// Canonical writer; parse_scenario(render_scenario(s)) round-trips.
std::string render_scenario(const Scenario& s);

struct SimulationSummary {
    ParticleState final_state;
    double max_shell_defect = 0.0;
    double wall_seconds = 0.0;
    double steps_per_second = 0.0;
};

/// Runs the scenario and writes the trajectory as CSV with columns
/// tau,t,x,y,z,u0,u1,u2,u3,shell_defect at 17 significant digits.
/// stride_override > 0 replaces the scenario's output_stride.
SimulationSummary run_simulation(const Scenario& s, std::ostream& csv, long stride_override = 0);

}  // namespace lorentz
