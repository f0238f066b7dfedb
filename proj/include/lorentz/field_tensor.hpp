#pragma once

#include <functional>
#include <string>
#include <utility>

#include "lorentz/four_vector.hpp"
#include "lorentz/generator.hpp"
#include "lorentz/lorentz_matrix.hpp"

namespace lorentz {

/// Electric and magnetic field triples in natural units (c = 1).
struct FieldTensor {
    Vec3 E{};
    Vec3 B{};
};

/// Charge-to-mass ratio q/m in natural units.
struct Coupling {
    double k = 1.0;
};

/// Generator with eps = k*E, b = k*B; the four-velocity evolution is then
/// du/dtau = Q u.
Generator tensor_to_generator(const FieldTensor& f, Coupling k);

/// Inverse identification, E = eps/k, B = b/k. Throws ConfigError for k = 0.
FieldTensor generator_to_tensor(const Generator& g, Coupling k);

/// Field in the frame reached by L, through the adjoint action on the
/// generator: Q' = L Q L^-1 with L^-1 = eta L^T eta. Throws StructuralError
/// if the conjugate leaves the algebra pattern beyond 1e-10 (a non-Lorentz L).
FieldTensor frame_transform(const FieldTensor& f, Coupling k, const LorentzMatrix& L);

/// The two Lorentz invariants (E.B, E.E - B.B).
std::pair<double, double> field_invariants(const FieldTensor& f);

/// Position-dependent field. Evaluation must be a pure function of position.
class FieldMap {
public:
    enum class Tag { Uniform, Varying };

    static FieldMap uniform(const Vec3& E, const Vec3& B) {
        FieldTensor f{E, B};
        return FieldMap(Tag::Uniform, [f](const FourVector&) { return f; });
    }

    static FieldMap varying(std::function<FieldTensor(const FourVector&)> fn) {
        return FieldMap(Tag::Varying, std::move(fn));
    }

    Tag tag() const { return tag_; }
    bool is_uniform() const { return tag_ == Tag::Uniform; }

private:
    FieldMap(Tag tag, std::function<FieldTensor(const FourVector&)> fn)
        : tag_(tag), fn_(std::move(fn)) {}

    Tag tag_;
    std::function<FieldTensor(const FourVector&)> fn_;

    friend FieldTensor evaluate(const FieldMap&, const FourVector&);
};

/// Total evaluation; throws IntegratorError naming the position if the map
/// yields non-finite fields.
FieldTensor evaluate(const FieldMap& map, const FourVector& x);

}  // namespace lorentz
