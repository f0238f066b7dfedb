#pragma once

#include <cstdint>
#include <string>

namespace lorentz {

struct VerifyReport {
    std::string text;
    bool passed = false;
};

/// Runs the randomized property suite: generator reconstruction by
/// differentiation, exponential group law, antisymmetry and force
/// orthogonality, closed-form single-axis matrices, inner-product
/// preservation, field invariants under frame transforms, adjoint
/// composition, mass-shell conservation, and the product-vs-exponential
/// defect slope. Deterministic for a fixed seed.
VerifyReport run_verify(std::uint64_t seed, int trials);

}  // namespace lorentz
