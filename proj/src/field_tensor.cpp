#include "lorentz/field_tensor.hpp"

#include <cmath>
#include <sstream>

#include "lorentz/errors.hpp"

namespace lorentz {

Generator tensor_to_generator(const FieldTensor& f, Coupling k) {
    return generator_from_rates({k.k * f.E[0], k.k * f.E[1], k.k * f.E[2]},
                                {k.k * f.B[0], k.k * f.B[1], k.k * f.B[2]});
}

FieldTensor generator_to_tensor(const Generator& g, Coupling k) {
    if (k.k == 0.0) throw ConfigError("coupling k must be nonzero to recover fields");
    const Vec3& e = g.eps();
    const Vec3& b = g.b();
    return {{e[0] / k.k, e[1] / k.k, e[2] / k.k}, {b[0] / k.k, b[1] / k.k, b[2] / k.k}};
}

FieldTensor frame_transform(const FieldTensor& f, Coupling k, const LorentzMatrix& L) {
    const Matrix4 q = tensor_to_generator(f, k).matrix();
    const Matrix4 linv = Matrix4::eta() * L.matrix().transposed() * Matrix4::eta();
    const Matrix4 conj = L.matrix() * q * linv;
    // Pattern tolerance scaled to the conjugate's magnitude; large boosts
    // amplify round-off linearly with the matrix norm.
    const double tol = 1e-10 * std::max(1.0, conj.max_abs());
    return generator_to_tensor(rates_from_generator(conj, tol), k);
}

std::pair<double, double> field_invariants(const FieldTensor& f) {
    const double eb = f.E[0] * f.B[0] + f.E[1] * f.B[1] + f.E[2] * f.B[2];
    const double e2 = f.E[0] * f.E[0] + f.E[1] * f.E[1] + f.E[2] * f.E[2];
    const double b2 = f.B[0] * f.B[0] + f.B[1] * f.B[1] + f.B[2] * f.B[2];
    return {eb, e2 - b2};
}

FieldTensor evaluate(const FieldMap& map, const FourVector& x) {
    FieldTensor f = map.fn_(x);
    for (int i = 0; i < 3; ++i) {
        if (!std::isfinite(f.E[i]) || !std::isfinite(f.B[i])) {
            std::ostringstream os;
            os << "field map produced non-finite fields at position (" << x[0] << ", " << x[1]
               << ", " << x[2] << ", " << x[3] << ")";
            throw IntegratorError(os.str());
        }
    }
    return f;
}

}  // namespace lorentz
