#include "lorentz/ensemble.hpp"

#include <cmath>

#include "lorentz/errors.hpp"

namespace lorentz {

namespace {

ParticleState advance_one(ParticleState s, const FieldMap& map, Coupling k, double dt,
                          long n_steps, Stepper stepper, const ExactPropagator* prop) {
    if (stepper == Stepper::Exact) {
        for (long i = 0; i < n_steps; ++i) s = prop->step(s);
    } else {
        for (long i = 0; i < n_steps; ++i) {
            s = step_rk4(s, map, k, dt);
            if (stepper == Stepper::Rk4Renorm) s.u = renormalize(s.u);
        }
    }
    return s;
}

void advance_impl(Ensemble& ens, const FieldMap& map, Coupling k, double dt, long n_steps,
                  Stepper stepper, bool parallel) {
    if (!(dt > 0.0)) throw ConfigError("dt must be positive");
    if (stepper == Stepper::Exact && !map.is_uniform())
        throw ConfigError("exact stepper requires a uniform field map");

    const ExactPropagator* prop = nullptr;
    ExactPropagator uniform_prop{FieldTensor{}, k, dt};
    if (stepper == Stepper::Exact) {
        uniform_prop = ExactPropagator(evaluate(map, FourVector{}), k, dt);
        prop = &uniform_prop;
    }

    const long n = static_cast<long>(ens.states.size());
#pragma omp parallel for schedule(static) if (parallel)
    for (long i = 0; i < n; ++i) {
        auto& s = ens.states[static_cast<std::size_t>(i)];
        s = advance_one(s, map, k, dt, n_steps, stepper, prop);
    }
}

}  // namespace

void advance_serial(Ensemble& ens, const FieldMap& map, Coupling k, double dt, long n_steps,
                    Stepper stepper) {
    advance_impl(ens, map, k, dt, n_steps, stepper, false);
}

void advance_parallel(Ensemble& ens, const FieldMap& map, Coupling k, double dt, long n_steps,
                      Stepper stepper) {
    advance_impl(ens, map, k, dt, n_steps, stepper, true);
}

}  // namespace lorentz
