#pragma once

#include "tcsphere/bundles.hpp"
#include "tcsphere/graded_ring.hpp"
#include "tcsphere/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

namespace tcsphere {

/// Cohomology of the unit sphere bundle of a bundle with a section:
/// H*(B)[u] / (u^2 - c*u) with deg u = q-1.
///
/// Over Z, c = e(eta) for spec = eta + eps. Over Z2, c = w_{q-1}(spec).
struct SphereBundleRing {
    BundleSpec spec;
    RingPtr base_ring;
    RingPtr ring;
    GradedClass u;
    GradedClass relation_class;  // c, pulled back to `ring`

    int q() const { return spec.rank(); }
    CoefficientRing coefficients() const { return ring->coefficients(); }

    /// Euler class of the Stiefel bundle over the sphere bundle (its mod-2
    /// reduction over Z2): c for q even, -c + 2u for q odd.
    GradedClass stiefel_euler() const {
        if (q() % 2 == 0) return relation_class;
        return -relation_class + 2 * u;
    }
};

inline SphereBundleRing build_sphere_bundle_ring(const BundleSpec& spec, CoefficientRing coefficients) {
    const int q = spec.rank();
    std::optional<GradedClass> c;
    if (coefficients == CoefficientRing::Integers) {
        c = euler_class_eta(spec);
    } else {
        if (spec.eps_count() == 0)
            throw BundleError(BundleError::Code::SectionRequired,
                              "a section is required for the Z2 model of " + spec.to_string());
        c = stiefel_whitney(spec, q - 1);
    }
    const RingPtr base_ring = c->ring();
    const std::size_t n = base_ring->generator_count();
    RewriteRule u_square{n, 2, padded_terms(*c, n + 1)};
    for (auto& term : u_square.rhs) term.exponents[n] = 1;
    auto ring = RingModel::extend(*base_ring, {{"u", q - 1}}, {std::move(u_square)}, spec.base().dim() + q - 1);
    return SphereBundleRing{spec, base_ring, ring, GradedClass::generator(ring, "u"), embed(*c, ring)};
}

/// Generators of the kernel of the diagonal, v_i - e(eta'_i).
struct KernelIdeal {
    std::vector<GradedClass> generators;
};

/// Iterated model of H*(E^r_B): the sphere-bundle ring with classes
/// v_1..v_{r-1} of degree q-1 adjoined, v_i^2 = e(eta'_i) * v_i.
///
/// With e(eta'_i) = 2 v_i - E for q odd the relation solves to v_i^2 = E v_i,
/// and for q even e(eta'_i) = E directly, so every v_i is rewritten by
/// v_i^2 -> E * v_i with E the (v-free) Stiefel Euler class.
struct ErBModel {
    SphereBundleRing sphere;
    unsigned r;
    RingPtr ring;
    GradedClass euler_stiefel;
    std::vector<GradedClass> v;
    std::vector<GradedClass> eta_prime;

    int q() const { return sphere.q(); }

    KernelIdeal kernel_ideal() const {
        KernelIdeal ideal;
        for (std::size_t i = 0; i < v.size(); ++i) ideal.generators.push_back(v[i] - eta_prime[i]);
        return ideal;
    }
};

inline ErBModel build_erb_model(const SphereBundleRing& sb, unsigned r) {
    if (r < 2) throw std::invalid_argument("r must be at least 2");
    const int q = sb.q();
    const std::size_t base_count = sb.ring->generator_count();
    const std::size_t total = base_count + r - 1;
    const GradedClass stiefel = sb.stiefel_euler();

    std::vector<Generator> extra;
    std::vector<RewriteRule> rules;
    for (unsigned i = 1; i < r; ++i) {
        extra.push_back({"v" + std::to_string(i), q - 1});
        RewriteRule rule{base_count + i - 1, 2, padded_terms(stiefel, total)};
        for (auto& term : rule.rhs) term.exponents[base_count + i - 1] = 1;
        rules.push_back(std::move(rule));
    }
    const int top = sb.spec.base().dim() + static_cast<int>(r) * (q - 1);
    auto ring = RingModel::extend(*sb.ring, std::move(extra), std::move(rules), top);

    ErBModel model{sb, r, ring, embed(stiefel, ring), {}, {}};
    for (unsigned i = 1; i < r; ++i) {
        GradedClass vi = GradedClass::generator(ring, "v" + std::to_string(i));
        model.eta_prime.push_back(q % 2 != 0 ? 2 * vi - model.euler_stiefel : model.euler_stiefel);
        model.v.push_back(std::move(vi));
    }
    return model;
}

/// Diagonal pullback H*(E^r_B) -> H*(E): v_i -> E, base classes and u fixed.
inline GradedClass diagonal_pullback(const ErBModel& m, const GradedClass& c) {
    if (c.ring() != m.ring) throw RingError("class does not belong to the model");
    const auto& target = m.sphere.ring;
    std::vector<GradedClass> images;
    for (const auto& g : target->generators()) images.push_back(GradedClass::generator(target, g.name));
    const GradedClass stiefel = m.sphere.stiefel_euler();
    for (unsigned i = 1; i < m.r; ++i) images.push_back(stiefel);
    return apply_homomorphism(c, target, images);
}

/// Cup-length of ker(diagonal pullback), by exhaustive search: the largest
/// sum(alpha) with prod_i (v_i - e(eta'_i))^alpha_i != 0.
inline unsigned kernel_cup_length_oracle(const ErBModel& m) {
    const auto generators = m.kernel_ideal().generators;
    const unsigned factor_degree = static_cast<unsigned>(m.q() - 1);
    const unsigned bound = static_cast<unsigned>(m.ring->top_degree()) / factor_degree + 1;

    // powers[i][a] = g_i^a
    std::vector<std::vector<GradedClass>> powers(generators.size());
    for (std::size_t i = 0; i < generators.size(); ++i) {
        powers[i].push_back(GradedClass::one(m.ring));
        for (unsigned a = 1; a <= bound; ++a) powers[i].push_back(powers[i].back() * generators[i]);
    }

    std::vector<std::vector<unsigned>> exponents;
    std::vector<unsigned> current(generators.size(), 0);
    auto enumerate = [&](auto&& self, std::size_t i, unsigned remaining) -> void {
        if (i == current.size()) {
            exponents.push_back(current);
            return;
        }
        for (unsigned a = 0; a <= remaining; ++a) {
            current[i] = a;
            self(self, i + 1, remaining - a);
        }
        current[i] = 0;
    };
    enumerate(enumerate, 0, bound);

    std::atomic<unsigned> best{0};
    parallel_for(exponents.size(), [&](std::size_t k) {
        const auto& alpha = exponents[k];
        unsigned total = 0;
        for (auto a : alpha) total += a;
        if (total <= best.load()) return;
        GradedClass product = GradedClass::one(m.ring);
        for (std::size_t i = 0; i < alpha.size() && !product.is_zero(); ++i) product *= powers[i][alpha[i]];
        if (product.is_zero()) return;
        unsigned seen = best.load();
        while (total > seen && !best.compare_exchange_weak(seen, total)) {
        }
    });
    return best.load();
}

}  // namespace tcsphere
