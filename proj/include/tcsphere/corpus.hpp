#pragma once

#include "tcsphere/bundles.hpp"

#include <vector>

namespace tcsphere {

/// Regression corpus: every spec family the engine supports, at small sizes.
inline std::vector<BundleSpec> regression_corpus() {
    std::vector<BundleSpec> out;
    out.emplace_back(BaseSpace::point(), 0, 2);
    out.emplace_back(BaseSpace::point(), 0, 3);
    out.emplace_back(BaseSpace::point(), 0, 4);
    for (int m = 1; m <= 4; ++m) {
        for (int eps = 2; eps <= 4; ++eps) out.emplace_back(BaseSpace::sphere(m), 0, eps);
    }
    for (int n = 1; n <= 6; ++n) {
        for (int eps = 0; eps <= 4; ++eps) out.emplace_back(BaseSpace::complex_projective(n), 1, eps);
        for (int eps = 1; eps <= 2; ++eps) out.emplace_back(BaseSpace::complex_projective(n), 2, eps);
    }
    for (int n = 1; n <= 7; ++n) {
        for (int l = 1; l <= 4; ++l) {
            out.emplace_back(BaseSpace::real_projective(n), l, 1);
            out.emplace_back(BaseSpace::real_projective(n), l, 2);
        }
    }
    return out;
}

}  // namespace tcsphere
