#pragma once

#include "tcsphere/parallel.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tcsphere {

using Vec = Eigen::VectorXd;

struct Tolerances {
    double norm = 1e-9;
    double endpoint = 1e-9;
    double antipodal = 1e-6;
    double denominator = 1e-12;
};

class PlannerError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// r points e_1..e_r on the unit sphere of one fibre R^q.
struct FiberConfig {
    int q = 2;
    std::vector<Vec> points;
    std::string fiber_id = "b0";

    std::size_t r() const { return points.size(); }

    void validate(const Tolerances& tol = {}) const {
        if (q < 2) throw std::invalid_argument("q must be at least 2");
        if (points.size() < 2) throw std::invalid_argument("a configuration needs at least two points");
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (points[i].size() != q)
                throw std::invalid_argument("point " + std::to_string(i + 1) + " has dimension " +
                                            std::to_string(points[i].size()) + ", expected " + std::to_string(q));
            if (std::abs(points[i].norm() - 1.0) > tol.norm)
                throw std::invalid_argument("point " + std::to_string(i + 1) + " is not a unit vector");
        }
    }
};

/// Section of the Stiefel bundle over one piece: e -> e' with e' a unit vector orthogonal to e.
using Section = std::function<Vec(const Vec&)>;
using Membership = std::function<bool(const Vec&)>;

struct SectionPiece {
    std::string name;
    Membership contains;
    Section section;
};

/// Disjoint pieces A_0..A_k of the fibre sphere, each with a section.
struct StiefelSectionTable {
    std::vector<SectionPiece> pieces;

    std::size_t k() const { return pieces.empty() ? 0 : pieces.size() - 1; }

    std::optional<std::size_t> piece_of(const Vec& e) const {
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            if (pieces[i].contains(e)) return i;
        }
        return std::nullopt;
    }
};

/// Multiplication by sqrt(-1) on pairs (x_1, y_1, ...) -> (-y_1, x_1, ...).
inline Vec complex_structure_apply(const Vec& e) {
    Vec out(e.size());
    for (Eigen::Index i = 0; i + 1 < e.size(); i += 2) {
        out[i] = -e[i + 1];
        out[i + 1] = e[i];
    }
    return out;
}

inline StiefelSectionTable builtin_complex_section(int q) {
    if (q < 2 || q % 2 != 0) throw std::invalid_argument("the complex section needs an even q >= 2");
    return {{{"complex", [](const Vec&) { return true; }, [](const Vec& e) { return complex_structure_apply(e); }}}};
}

/// Open cover U_0..U_k of the sphere with a section on each set.
using SectionCover = std::vector<SectionPiece>;

/// Disjoint table from an open cover: A_i = {e : mu(e) = k + 1 - i}, where
/// mu(e) counts the cover sets containing e. On A_i the section of the
/// first cover set containing e is used.
inline StiefelSectionTable partition_from_cover(SectionCover cover) {
    if (cover.empty()) throw std::invalid_argument("empty cover");
    auto shared = std::make_shared<const SectionCover>(std::move(cover));
    const std::size_t k = shared->size() - 1;
    auto mu = [shared](const Vec& e) {
        std::size_t count = 0;
        for (const auto& piece : *shared) count += piece.contains(e) ? 1 : 0;
        return count;
    };
    StiefelSectionTable table;
    for (std::size_t i = 0; i <= k; ++i) {
        const std::size_t target = k + 1 - i;
        table.pieces.push_back({"A" + std::to_string(i), [mu, target](const Vec& e) { return mu(e) == target; },
                                [shared](const Vec& e) -> Vec {
                                    for (const auto& piece : *shared) {
                                        if (piece.contains(e)) return piece.section(e);
                                    }
                                    throw PlannerError("point outside the cover");
                                }});
    }
    return table;
}

/// Two-set cover of S^{q-1}, q odd >= 3. Each set drops one end coordinate
/// and applies the complex structure to the remaining q-1 coordinates.
inline SectionCover odd_sphere_cover(int q) {
    if (q < 3 || q % 2 == 0) throw std::invalid_argument("the odd-sphere cover needs an odd q >= 3");
    const Eigen::Index n = q;
    SectionCover cover;
    cover.push_back({"U0", [n](const Vec& e) { return std::abs(e[n - 1]) < 0.9; },
                     [n](const Vec& e) {
                         Vec out = Vec::Zero(n);
                         out.head(n - 1) = complex_structure_apply(e.head(n - 1));
                         return Vec(out / out.norm());
                     }});
    cover.push_back({"U1", [n](const Vec& e) { return std::abs(e[n - 1]) > 0.1; },
                     [n](const Vec& e) {
                         Vec out = Vec::Zero(n);
                         out.tail(n - 1) = complex_structure_apply(e.tail(n - 1));
                         return Vec(out / out.norm());
                     }});
    return cover;
}

/// Complex table for even q, the partitioned two-set cover for odd q.
inline StiefelSectionTable default_section_table(int q) {
    if (q % 2 == 0) return builtin_complex_section(q);
    return partition_from_cover(odd_sphere_cover(q));
}

enum class PathKind { Interpolation, GreatCircle };

inline std::string_view to_string(PathKind k) { return k == PathKind::Interpolation ? "interpolation" : "great_circle"; }

/// Path gamma_j from e_1 to e_j inside the fibre sphere.
struct PlannedPath {
    std::size_t j;  // 1-based target index, 2..r
    PathKind kind;
    Vec e1;
    Vec ej;
    Vec section;  // s_i(e_1) for great circles, empty otherwise

    /// Interpolation: normalized chord. Great circle:
    /// cos(pi t) e_1 + sin(pi t) s_i(e_1), plus t (e_j + e_1) so the path ends
    /// on e_j exactly when e_j is only within the antipodal band of -e_1.
    Vec operator()(double t) const {
        Vec p;
        if (kind == PathKind::Interpolation) {
            p = (1.0 - t) * e1 + t * ej;
        } else {
            const double angle = std::numbers::pi * t;
            p = std::cos(angle) * e1 + std::sin(angle) * section + t * (ej + e1);
        }
        return p / p.norm();
    }
};

struct PathSample {
    double t;
    Vec point;
};

struct PlanResult {
    FiberConfig config;
    std::vector<std::size_t> antipodal_set;  // J, 1-based indices in 2..r
    std::optional<std::size_t> partition_index;  // i with e_1 in A_i, when J is nonempty
    std::size_t piece_index = 0;
    std::vector<PlannedPath> paths;
    std::vector<std::vector<PathSample>> samples;  // one uniform grid per path
};

inline std::vector<double> uniform_grid(std::size_t count) {
    std::vector<double> ts;
    if (count == 1) return {0.0};
    for (std::size_t i = 0; i < count; ++i) ts.push_back(static_cast<double>(i) / static_cast<double>(count - 1));
    return ts;
}

/// Sequential motion plan for one configuration: paths gamma_2..gamma_r
/// from e_1 and the index s = |J| + i of the partition piece G_s.
inline PlanResult plan(const FiberConfig& config, const StiefelSectionTable& table, std::size_t sample_count = 2,
                       const Tolerances& tol = {}) {
    config.validate(tol);
    PlanResult result{config, {}, std::nullopt, 0, {}, {}};
    const Vec& e1 = config.points[0];
    for (std::size_t j = 1; j < config.r(); ++j) {
        if ((config.points[j] + e1).norm() <= tol.antipodal) result.antipodal_set.push_back(j + 1);
    }
    Vec section;
    if (!result.antipodal_set.empty()) {
        const auto piece = table.piece_of(e1);
        if (!piece) throw PlannerError("section table does not cover e_1");
        result.partition_index = *piece;
        section = table.pieces[*piece].section(e1);
        result.piece_index = result.antipodal_set.size() + *piece;
    }
    const auto grid = uniform_grid(sample_count);
    for (std::size_t j = 1; j < config.r(); ++j) {
        const bool antipodal =
            std::find(result.antipodal_set.begin(), result.antipodal_set.end(), j + 1) != result.antipodal_set.end();
        PlannedPath path{j + 1, antipodal ? PathKind::GreatCircle : PathKind::Interpolation, e1, config.points[j],
                         antipodal ? section : Vec()};
        std::vector<PathSample> samples;
        for (double t : grid) {
            if (!antipodal && ((1.0 - t) * e1 + t * config.points[j]).norm() < tol.denominator)
                throw PlannerError("denominator underflow on path " + std::to_string(j + 1) +
                                   "; tighten the antipodal tolerance");
            samples.push_back({t, path(t)});
        }
        result.paths.push_back(std::move(path));
        result.samples.push_back(std::move(samples));
    }
    return result;
}

inline Vec random_unit_vector(int q, std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    Vec v(q);
    do {
        for (int i = 0; i < q; ++i) v[i] = normal(rng);
    } while (v.norm() < 1e-12);
    return v / v.norm();
}

/// Uniform random configuration of r points. With probability
/// `antipodal_probability` each e_j (j >= 2) is set to -e_1.
inline FiberConfig random_config(int q, std::size_t r, std::mt19937_64& rng, double antipodal_probability = 0.0) {
    FiberConfig config{q, {}, "b0"};
    std::bernoulli_distribution flip(antipodal_probability);
    config.points.push_back(random_unit_vector(q, rng));
    for (std::size_t j = 1; j < r; ++j) {
        if (antipodal_probability > 0.0 && flip(rng)) {
            config.points.push_back(-config.points[0]);
        } else {
            config.points.push_back(random_unit_vector(q, rng));
        }
    }
    return config;
}

struct StatsOptions {
    std::uint64_t seed = 0;
    Tolerances tolerances{};
    double antipodal_probability = 0.0;
};

struct PieceHistogram {
    std::vector<std::size_t> counts;  // index s = 0..k+r-1
    std::size_t samples = 0;
    std::size_t max_index = 0;
};

/// Plans `samples` random configurations and histograms the piece index.
/// Work is split into fixed chunks seeded from (seed, chunk), so the result
/// does not depend on the thread count.
inline PieceHistogram piece_statistics(std::size_t samples, int q, std::size_t r, const StiefelSectionTable& table,
                                       const StatsOptions& options = {}) {
    constexpr std::size_t kChunk = 4096;
    const std::size_t chunks = (samples + kChunk - 1) / kChunk;
    const std::size_t bins = table.k() + r;
    std::vector<std::vector<std::size_t>> partial(chunks, std::vector<std::size_t>(bins, 0));
    parallel_for(chunks, [&](std::size_t c) {
        std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                          static_cast<std::uint32_t>(c)};
        std::mt19937_64 rng(seq);
        const std::size_t end = std::min(samples, (c + 1) * kChunk);
        for (std::size_t n = c * kChunk; n < end; ++n) {
            const auto result =
                plan(random_config(q, r, rng, options.antipodal_probability), table, 2, options.tolerances);
            if (result.piece_index >= bins) throw PlannerError("piece index exceeds k + r - 1");
            ++partial[c][result.piece_index];
        }
    });
    PieceHistogram hist{std::vector<std::size_t>(bins, 0), samples, 0};
    for (const auto& p : partial) {
        for (std::size_t s = 0; s < bins; ++s) hist.counts[s] += p[s];
    }
    for (std::size_t s = 0; s < bins; ++s) {
        if (hist.counts[s] > 0) hist.max_index = s;
    }
    return hist;
}

}  // namespace tcsphere
