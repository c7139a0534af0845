// Cup products in the sphere-bundle ring of eta + eps over CP(2).
#include "tcsphere/cohomology_models.hpp"

#include <iostream>

int main() {
    using namespace tcsphere;
    const auto spec = BundleSpec::parse("CP(2); 1*eta+1*eps");
    const auto sb = build_sphere_bundle_ring(spec, CoefficientRing::Integers);
    const GradedClass x = GradedClass::generator(sb.ring, "x");
    const GradedClass& u = sb.u;

    std::cout << "ring: " << series_string(poincare_series(*sb.ring)) << "\n";
    std::cout << "u^2 = " << (u * u).to_string() << "\n";
    std::cout << "(u - x)^2 = " << pow(u - x, 2).to_string() << "\n";
    const GradedClass e = sb.stiefel_euler();
    std::cout << "e(stiefel) = " << e.to_string() << ", height " << height(e) << "\n";
    for (unsigned k = 1; k <= 4; ++k) std::cout << "  e^" << k << " = " << pow(e, k).to_string() << "\n";

    const auto model = build_erb_model(sb, 3);
    std::cout << "r = 3 model: " << series_string(poincare_series(*model.ring)) << "\n";
    std::cout << "kernel cup-length: " << kernel_cup_length_oracle(model) << "\n";
}
