// Acceptance suite: one PASS/FAIL line per criterion, each with its time budget.
#include "tcsphere/cohomology_models.hpp"
#include "tcsphere/corpus.hpp"
#include "tcsphere/planner.hpp"
#include "tcsphere/tc_bounds.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace tcsphere;

namespace {

struct Outcome {
    bool ok = true;
    std::size_t checks = 0;
    std::vector<std::string> failures;

    void expect(bool cond, const std::function<std::string()>& what) {
        ++checks;
        if (!cond) {
            ok = false;
            failures.push_back(what());
        }
    }
};

unsigned ceil_div(int a, int b) { return static_cast<unsigned>((a + b - 1) / b); }

int run_criterion(int id, const std::string& title, double budget_s, const std::function<void(Outcome&)>& body) {
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(outcome);
    } catch (const std::exception& e) {
        outcome.ok = false;
        outcome.failures.push_back(std::string("exception: ") + e.what());
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = elapsed < budget_s;
    const bool pass = outcome.ok && in_time;
    std::ostringstream line;
    line << (pass ? "PASS" : "FAIL") << " [" << id << "] " << title << "  (" << outcome.checks << " checks, "
         << (outcome.checks - outcome.failures.size()) << " ok, " << elapsed << " s / budget " << budget_s << " s)";
    std::cout << line.str() << "\n";
    if (!in_time) std::cout << "      over time budget\n";
    for (std::size_t i = 0; i < outcome.failures.size() && i < 20; ++i)
        std::cout << "      " << outcome.failures[i] << "\n";
    if (outcome.failures.size() > 20) std::cout << "      ... " << outcome.failures.size() - 20 << " more\n";
    return pass ? 0 : 1;
}

}  // namespace

int main() {
    int failed = 0;

    failed += run_criterion(1, "eta+eps over CP(n): exact n+r (n even), n+r-1 (n odd); n 1..6, r 2..5", 1.0,
                            [](Outcome& o) {
        for (int n = 1; n <= 6; ++n) {
            for (unsigned r = 2; r <= 5; ++r) {
                const auto report = evaluate(BundleSpec(BaseSpace::complex_projective(n), 1, 1), r);
                const unsigned want = n % 2 == 0 ? n + r : n + r - 1;
                o.expect(report.exact == want, [&] {
                    return "CP(" + std::to_string(n) + ") r=" + std::to_string(r) + ": got " +
                           (report.exact ? std::to_string(*report.exact) : "none") + ", want " + std::to_string(want);
                });
            }
        }
    });

    failed += run_criterion(2, "l*eta+eps over RP(n): interval [c+r-2, c+r-1], c = ceil((n+1)/l); n 1..7, l 1..4, r 2..4",
                            1.0, [](Outcome& o) {
        for (int n = 1; n <= 7; ++n) {
            for (int l = 1; l <= 4; ++l) {
                for (unsigned r = 2; r <= 4; ++r) {
                    const auto report = evaluate(BundleSpec(BaseSpace::real_projective(n), l, 1), r);
                    const unsigned c = ceil_div(n + 1, l);
                    const unsigned lo = c + r - 2;
                    const unsigned hi = c + r - 1;
                    o.expect(report.lower == lo && report.upper == hi, [&] {
                        std::string why;
                        for (const auto& rule : report.rules) {
                            if (rule.bounds_below() && *rule.value == report.lower)
                                why += " " + std::string(to_string(rule.id));
                        }
                        return "RP(" + std::to_string(n) + ") l=" + std::to_string(l) + " r=" + std::to_string(r) +
                               ": got [" + std::to_string(report.lower) + ", " + std::to_string(*report.upper) +
                               "], want [" + std::to_string(lo) + ", " + std::to_string(hi) + "]; lower from" + why;
                    });
                }
            }
        }
    });

    failed += run_criterion(3, "integral oracle = h(e(stiefel)) + r - 1 on eta+eps over CP(n); n 1..4, r 2..4", 30.0,
                            [](Outcome& o) {
        for (int n = 1; n <= 4; ++n) {
            const auto spec = BundleSpec(BaseSpace::complex_projective(n), 1, 1);
            const auto sb = build_sphere_bundle_ring(spec, CoefficientRing::Integers);
            const auto x = GradedClass::generator(sb.ring, "x");
            const GradedClass e = -x + 2 * sb.u;  // q = 3 is odd
            const unsigned h = height(e);
            for (unsigned r = 2; r <= 4; ++r) {
                const unsigned oracle = kernel_cup_length_oracle(build_erb_model(sb, r));
                o.expect(oracle == h + r - 1 && oracle == static_cast<unsigned>(2 * (n / 2)) + r, [&] {
                    return "CP(" + std::to_string(n) + ") r=" + std::to_string(r) + ": oracle " +
                           std::to_string(oracle) + ", h + r - 1 = " + std::to_string(h + r - 1);
                });
            }
        }
    });

    failed += run_criterion(4, "mod-2 oracle = h(w_{q-1}|w_q) + r - 1 = c + r - 2 on l*eta+eps over RP(n); n 1..5, l 1..3, r 2..3",
                            30.0, [](Outcome& o) {
        for (int n = 1; n <= 5; ++n) {
            for (int l = 1; l <= 3; ++l) {
                const auto spec = BundleSpec(BaseSpace::real_projective(n), l, 1);
                const auto sb = build_sphere_bundle_ring(spec, CoefficientRing::ModTwo);
                const unsigned rel = sw_relative_height(spec);
                for (unsigned r = 2; r <= 3; ++r) {
                    const unsigned oracle = kernel_cup_length_oracle(build_erb_model(sb, r));
                    const unsigned closed = ceil_div(n + 1, l) + r - 2;
                    o.expect(oracle == rel + r - 1 && oracle == closed, [&] {
                        return "RP(" + std::to_string(n) + ") l=" + std::to_string(l) + " r=" + std::to_string(r) +
                               ": oracle " + std::to_string(oracle) + ", relative height + r - 1 = " +
                               std::to_string(rel + r - 1) + ", closed form " + std::to_string(closed);
                    });
                }
            }
        }
    });

    failed += run_criterion(5, "h(e(stiefel)) odd for odd q, equal to h(e(eta)) for even q; whole corpus", 1.0,
                            [](Outcome& o) {
        for (const auto& spec : regression_corpus()) {
            const auto f = facts(spec);
            if (!f.euler_height_stiefel) continue;
            const unsigned h = *f.euler_height_stiefel;
            const unsigned h_eta = height(*f.euler_class_eta);
            // independent value: height of e(stiefel) in the sphere-bundle ring itself
            const unsigned direct =
                height(build_sphere_bundle_ring(spec, CoefficientRing::Integers).stiefel_euler());
            const bool parity_ok = spec.rank() % 2 != 0 ? h % 2 == 1 : h == h_eta;
            o.expect(parity_ok && h == direct, [&] {
                return spec.to_string() + ": h = " + std::to_string(h) + ", h(e(eta)) = " + std::to_string(h_eta) +
                       ", direct " + std::to_string(direct);
            });
        }
    });

    failed += run_criterion(6, "ErB models: Poincare series, relations, diagonal kills kernel, multiplicative on 1000 pairs",
                            10.0, [](Outcome& o) {
        std::mt19937 rng(6);
        std::vector<ErBModel> models;
        for (const auto& spec : regression_corpus()) {
            if (spec.base().dim() > 8 || spec.rank() > 5) continue;
            std::vector<CoefficientRing> rings;
            if (facts(spec).euler_class_eta) rings.push_back(CoefficientRing::Integers);
            if (spec.eps_count() >= 1) rings.push_back(CoefficientRing::ModTwo);
            for (auto c : rings) {
                const auto sb = build_sphere_bundle_ring(spec, c);
                for (unsigned r = 2; r <= 3; ++r) models.push_back(build_erb_model(sb, r));
            }
        }
        for (const auto& m : models) {
            const auto& spec = m.sphere.spec;
            const auto label = [&] { return spec.to_string() + " " + std::string(to_string(m.ring->coefficients())) +
                                            " r=" + std::to_string(m.r); };
            // P_B(t) (1 + t^{q-1})^r by direct expansion
            auto expected = poincare_series(*make_base_ring(spec.base(), CoefficientRing::ModTwo));
            for (unsigned i = 0; i < m.r; ++i) {
                SeriesCoefficients next(expected.size() + static_cast<std::size_t>(spec.rank() - 1), 0);
                for (std::size_t d = 0; d < expected.size(); ++d) {
                    next[d] += expected[d];
                    next[d + static_cast<std::size_t>(spec.rank() - 1)] += expected[d];
                }
                expected = next;
            }
            o.expect(poincare_series(*m.ring) == expected, [&] { return label() + ": Poincare series"; });
            o.expect(m.sphere.u * m.sphere.u == m.sphere.relation_class * m.sphere.u,
                     [&] { return label() + ": u^2 = c u"; });
            for (std::size_t i = 0; i < m.v.size(); ++i) {
                o.expect(m.v[i] * m.v[i] == m.eta_prime[i] * m.v[i], [&] { return label() + ": v_i relation"; });
            }
            for (const auto& g : m.kernel_ideal().generators)
                o.expect(diagonal_pullback(m, g).is_zero(), [&] { return label() + ": kernel generator survives"; });
        }
        std::uniform_int_distribution<std::size_t> pick(0, models.size() - 1);
        std::uniform_int_distribution<int> coeff(-2, 2);
        auto random_class = [&](const RingPtr& ring) {
            GradedClass c = GradedClass::zero(ring);
            for (int d = 0; d <= ring->top_degree(); ++d) {
                for (const auto& mono : ring->basis(d)) {
                    if (rng() % 3 == 0) c += GradedClass::monomial(ring, mono, coeff(rng));
                }
            }
            return c;
        };
        for (int pair = 0; pair < 1000; ++pair) {
            const auto& m = models[pick(rng)];
            const auto a = random_class(m.ring);
            const auto b = random_class(m.ring);
            o.expect(diagonal_pullback(m, a * b) == diagonal_pullback(m, a) * diagonal_pullback(m, b),
                     [&] { return m.sphere.spec.to_string() + ": diagonal not multiplicative"; });
        }
    });

    failed += run_criterion(7, "planner: endpoints and norms within 1e-9 on 1024-point grids, piece <= r-1, exact great circle",
                            30.0, [](Outcome& o) {
        double worst_endpoint = 0.0;
        double worst_norm = 0.0;
        for (int q : {2, 4}) {
            const auto table = builtin_complex_section(q);
            for (std::size_t r : {2u, 3u, 4u}) {
                std::mt19937_64 rng(1000 * static_cast<unsigned>(q) + r);
                for (int trial = 0; trial < 10000; ++trial) {
                    const auto config = random_config(q, r, rng, trial % 4 == 0 ? 0.5 : 0.0);
                    const auto res = plan(config, table, 1024);
                    o.expect(res.piece_index <= r - 1, [&] { return "piece index " + std::to_string(res.piece_index); });
                    for (std::size_t n = 0; n < res.paths.size(); ++n) {
                        const auto& grid = res.samples[n];
                        worst_endpoint = std::max({worst_endpoint, (grid.front().point - config.points[0]).norm(),
                                                   (grid.back().point - config.points[res.paths[n].j - 1]).norm()});
                        for (const auto& s : grid) worst_norm = std::max(worst_norm, std::abs(s.point.norm() - 1.0));
                    }
                }
            }
            Vec e1 = Vec::Zero(q);
            e1[0] = 1.0;
            const auto res = plan({q, {e1, Vec(-e1)}, "b0"}, table, 1025);
            const double mid_error = (res.paths[0](0.5) - complex_structure_apply(e1)).norm();
            o.expect(res.paths[0].kind == PathKind::GreatCircle && res.piece_index == 1 && mid_error <= 1e-12,
                     [&] { return "great circle midpoint error " + std::to_string(mid_error); });
            std::mt19937_64 rng(q);
            for (int trial = 0; trial < 1000; ++trial) {
                const Vec e = random_unit_vector(q, rng);
                const auto gc = plan({q, {e, Vec(-e)}, "b0"}, table, 3);
                const double err = (gc.samples[0][1].point - complex_structure_apply(e)).norm();
                o.expect(err <= 1e-12, [&] { return "great circle midpoint error " + std::to_string(err); });
            }
        }
        o.expect(worst_endpoint <= 1e-9, [&] { return "endpoint error " + std::to_string(worst_endpoint); });
        o.expect(worst_norm <= 1e-9, [&] { return "norm deviation " + std::to_string(worst_norm); });
    });

    failed += run_criterion(8, "Hopf bundle exact r-1 (r 2..5); trivial rank 3 over S^2 exact r", 1.0, [](Outcome& o) {
        for (unsigned r = 2; r <= 5; ++r) {
            const auto hopf = evaluate(BundleSpec::parse("CP(1); 1*eta"), r);
            o.expect(hopf.exact == r - 1, [&] { return "Hopf r=" + std::to_string(r); });
            const auto trivial = evaluate(BundleSpec::parse("S(2); 3*eps"), r);
            o.expect(trivial.exact == r, [&] { return "S(2) trivial rank 3 r=" + std::to_string(r); });
        }
    });

    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criterion/criteria failed") << "\n";
    return failed == 0 ? 0 : 1;
}
