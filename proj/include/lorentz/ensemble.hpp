#pragma once

#include <vector>

#include "lorentz/dynamics.hpp"

namespace lorentz {

/// Independent particles advanced through the same field map. No trajectory
/// storage; each state is updated in place.
struct Ensemble {
    std::vector<ParticleState> states;
};

/// Serial reference kernel. Identical arithmetic to advance_parallel, one
/// particle at a time.
void advance_serial(Ensemble& ens, const FieldMap& map, Coupling k, double dt, long n_steps,
                    Stepper stepper);

/// OpenMP kernel over particles. Field maps are pure, so the loop carries no
/// shared mutable state and results are bit-identical to the serial kernel.
void advance_parallel(Ensemble& ens, const FieldMap& map, Coupling k, double dt, long n_steps,
                      Stepper stepper);

}  // namespace lorentz
