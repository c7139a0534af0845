#pragma once

#include "tcsphere/cohomology_models.hpp"
#include "tcsphere/planner.hpp"
#include "tcsphere/report.hpp"
#include "tcsphere/tc_bounds.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace tcsphere::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

struct OracleRecord {
    BundleSpec spec;
    unsigned r;
    CoefficientRing coefficients;
    unsigned oracle;
    unsigned formula;
    std::string formula_name;

    bool match() const { return oracle == formula; }
};

/// Integral model when the Euler class of the complement is available,
/// otherwise the mod-2 model.
inline CoefficientRing auto_coefficients(const BundleSpec& spec) {
    if (!spec.base().integral_model_available()) return CoefficientRing::ModTwo;
    try {
        (void)euler_class_eta(spec);
        return CoefficientRing::Integers;
    } catch (const BundleError&) {
        return CoefficientRing::ModTwo;
    }
}

inline OracleRecord run_oracle(const BundleSpec& spec, unsigned r, CoefficientRing coefficients) {
    const SphereBundleRing sb = build_sphere_bundle_ring(spec, coefficients);
    const ErBModel model = build_erb_model(sb, r);
    OracleRecord record{spec, r, coefficients, kernel_cup_length_oracle(model), 0, {}};
    if (coefficients == CoefficientRing::Integers) {
        record.formula = euler_height_stiefel(spec) + r - 1;
        record.formula_name = "h(e(stiefel)) + r - 1";
    } else {
        record.formula = sw_relative_height(spec) + r - 1;
        record.formula_name = "h(w_{q-1} | w_q) + r - 1";
    }
    return record;
}

namespace detail {

inline std::vector<double> parse_doubles(std::string_view text) {
    std::vector<double> out;
    while (true) {
        const auto comma = text.find(',');
        std::string_view item = text.substr(0, comma);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
            throw std::invalid_argument("malformed coordinate '" + std::string(item) + "'");
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        text = text.substr(comma + 1);
    }
    return out;
}

/// "x1,x2;y1,y2;..." -> points.
inline std::vector<Vec> parse_points(std::string_view text) {
    std::vector<Vec> points;
    while (true) {
        const auto semi = text.find(';');
        const auto coords = parse_doubles(text.substr(0, semi));
        points.push_back(Eigen::Map<const Vec>(coords.data(), static_cast<Eigen::Index>(coords.size())));
        if (semi == std::string_view::npos) break;
        text = text.substr(semi + 1);
    }
    return points;
}

inline Json vector_json(const Vec& v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
    return out;
}

}  // namespace detail

inline Json to_json(const OracleRecord& rec) {
    return {{"spec", rec.spec.to_string()},   {"r", rec.r},
            {"coefficients", to_string(rec.coefficients)}, {"oracle", rec.oracle},
            {"formula", rec.formula},          {"formula_name", rec.formula_name},
            {"match", rec.match()}};
}

inline Json to_json(const PlanResult& result, std::size_t k) {
    Json points = Json::array();
    for (const auto& p : result.config.points) points.push_back(detail::vector_json(p));
    Json paths = Json::array();
    Json samples = Json::array();
    for (std::size_t n = 0; n < result.paths.size(); ++n) {
        paths.push_back({{"j", result.paths[n].j}, {"kind", to_string(result.paths[n].kind)}});
        Json grid = Json::array();
        for (const auto& s : result.samples[n]) {
            Json row = Json::array({s.t});
            for (Eigen::Index i = 0; i < s.point.size(); ++i) row.push_back(s.point[i]);
            grid.push_back(std::move(row));
        }
        samples.push_back(std::move(grid));
    }
    return {{"config",
             {{"q", result.config.q}, {"r", result.config.r()}, {"fiber_id", result.config.fiber_id},
              {"points", std::move(points)}}},
            {"J", result.antipodal_set},
            {"partition_index", result.partition_index ? Json(*result.partition_index) : Json(nullptr)},
            {"piece_index", result.piece_index},
            {"k", k},
            {"paths", std::move(paths)},
            {"samples", std::move(samples)}};
}

inline Json to_json(const PieceHistogram& hist, int q, std::size_t r, std::size_t k, const StatsOptions& options) {
    return {{"q", q},
            {"r", r},
            {"k", k},
            {"samples", hist.samples},
            {"seed", options.seed},
            {"tau_antipodal", options.tolerances.antipodal},
            {"antipodal_probability", options.antipodal_probability},
            {"histogram", hist.counts},
            {"max_index", hist.max_index},
            {"bound", k + r - 1}};
}

/// Runs one command line; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bounds and motion plans for sequential parametrized TC of sphere bundles", "tc_sphere"};
    app.require_subcommand(1);
    const std::vector<std::string> formats{"text", "json", "csv"};

    std::string spec_text;
    unsigned r = 2;
    std::string format = "text";
    std::string coeffs = "auto";
    std::string family;
    std::string n_range;
    std::string l_range = "1";
    std::string r_range = "2";
    int q = 2;
    std::string points_text;
    std::size_t r_points = 2;
    std::uint64_t seed = 0;
    std::size_t samples = 11;
    std::size_t stat_samples = 10000;
    double tau_antipodal = Tolerances{}.antipodal;
    double antipodal_probability = 0.0;
    std::string fiber_id = "b0";
    bool normalize = false;

    auto* bounds = app.add_subcommand("bounds", "evaluate all bound rules for a bundle");
    bounds->add_option("spec", spec_text, std::string(kBundleGrammar))->required();
    bounds->add_option("--r", r, "sequence length r >= 2")->capture_default_str();
    bounds->add_option("--format", format)->check(CLI::IsMember(formats))->capture_default_str();

    auto* oracle = app.add_subcommand("oracle", "cross-check the cup-length oracle against the closed form");
    oracle->add_option("spec", spec_text, std::string(kBundleGrammar))->required();
    oracle->add_option("--r", r, "sequence length r >= 2")->capture_default_str();
    oracle->add_option("--coeffs", coeffs, "auto, Z or Z2")
        ->check(CLI::IsMember({"auto", "Z", "Z2"}))
        ->capture_default_str();
    oracle->add_option("--format", format)->check(CLI::IsMember(formats))->capture_default_str();

    auto* sweep_cmd = app.add_subcommand("sweep", "tabulate bounds over a spec family");
    sweep_cmd->add_option("--family", family, "cp_eta_eps or rp_l_eta_eps")->required();
    sweep_cmd->add_option("--n", n_range, "base parameter range a..b")->required();
    sweep_cmd->add_option("--l", l_range, "multiplicity range a..b")->capture_default_str();
    sweep_cmd->add_option("--r", r_range, "r range a..b")->capture_default_str();
    sweep_cmd->add_option("--format", format)->check(CLI::IsMember(formats))->capture_default_str();

    auto* plan_cmd = app.add_subcommand("plan", "motion plan for one configuration in a fibre");
    plan_cmd->add_option("--q", q, "fibre dimension q")->capture_default_str();
    plan_cmd->add_option("--points", points_text, "points e_1;...;e_r, coordinates comma separated");
    plan_cmd->add_option("--r", r_points, "number of random points when --points is absent")->capture_default_str();
    plan_cmd->add_option("--seed", seed, "seed for random points")->capture_default_str();
    plan_cmd->add_option("--samples", samples, "samples per path")->check(CLI::PositiveNumber)->capture_default_str();
    plan_cmd->add_option("--tau-antipodal", tau_antipodal)->check(CLI::PositiveNumber)->capture_default_str();
    plan_cmd->add_option("--fiber-id", fiber_id)->capture_default_str();
    plan_cmd->add_flag("--normalize", normalize, "rescale points to unit length");
    plan_cmd->add_option("--format", format)->check(CLI::IsMember(formats))->capture_default_str();

    auto* stats_cmd = app.add_subcommand("stats", "histogram of planner piece indices");
    stats_cmd->add_option("--q", q, "fibre dimension q")->capture_default_str();
    stats_cmd->add_option("--r", r_points, "number of points r")->capture_default_str();
    stats_cmd->add_option("--samples", stat_samples)->capture_default_str();
    stats_cmd->add_option("--seed", seed)->capture_default_str();
    stats_cmd->add_option("--tau-antipodal", tau_antipodal)->check(CLI::PositiveNumber)->capture_default_str();
    stats_cmd->add_option("--antipodal-prob", antipodal_probability, "chance that e_j = -e_1")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    stats_cmd->add_option("--format", format)->check(CLI::IsMember(formats))->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*bounds) {
            const auto report = evaluate(BundleSpec::parse(spec_text), r);
            if (format == "json") {
                out << to_json(report).dump(2) << "\n";
            } else if (format == "csv") {
                write_csv(out, report);
            } else {
                write_text(out, report);
            }
            return kOk;
        }
        if (*oracle) {
            if (r < 2) throw std::invalid_argument("r must be at least 2");
            const auto spec = BundleSpec::parse(spec_text);
            const CoefficientRing ring = coeffs == "Z"    ? CoefficientRing::Integers
                                         : coeffs == "Z2" ? CoefficientRing::ModTwo
                                                          : auto_coefficients(spec);
            const auto rec = run_oracle(spec, r, ring);
            if (format == "json") {
                out << to_json(rec).dump(2) << "\n";
            } else if (format == "csv") {
                out << "spec,r,coefficients,oracle,formula,match\n"
                    << '"' << rec.spec.to_string() << "\"," << rec.r << ',' << to_string(rec.coefficients) << ','
                    << rec.oracle << ',' << rec.formula << ',' << (rec.match() ? "MATCH" : "MISMATCH") << "\n";
            } else {
                out << "spec: " << rec.spec.to_string() << "\n"
                    << "r: " << rec.r << "\n"
                    << "coefficients: " << to_string(rec.coefficients) << "\n"
                    << "oracle: " << rec.oracle << "\n"
                    << "formula: " << rec.formula << "  (" << rec.formula_name << ")\n"
                    << (rec.match() ? "MATCH" : "MISMATCH") << "\n";
            }
            return rec.match() ? kOk : kFailure;
        }
        if (*sweep_cmd) {
            const SweepFamily fam = parse_family(family);
            const auto rows = sweep(fam, IntRange::parse(n_range), IntRange::parse(l_range), IntRange::parse(r_range));
            if (format == "json") {
                out << to_json(fam, rows).dump(2) << "\n";
            } else if (format == "csv") {
                write_csv(out, fam, rows);
            } else {
                write_text(out, fam, rows);
            }
            return kOk;
        }
        if (*plan_cmd) {
            Tolerances tol;
            tol.antipodal = tau_antipodal;
            FiberConfig config{q, {}, fiber_id};
            if (points_text.empty()) {
                std::mt19937_64 rng(seed);
                config = random_config(q, r_points, rng);
                config.fiber_id = fiber_id;
            } else {
                config.points = detail::parse_points(points_text);
                if (normalize) {
                    for (auto& p : config.points) {
                        if (p.norm() == 0.0) throw std::invalid_argument("cannot normalize a zero point");
                        p /= p.norm();
                    }
                }
            }
            config.validate(tol);
            const auto table = default_section_table(q);
            const auto result = plan(config, table, samples, tol);
            if (format == "json") {
                out << to_json(result, table.k()).dump(2) << "\n";
            } else if (format == "csv") {
                out << "j,t";
                for (int i = 1; i <= q; ++i) out << ",x" << i;
                out << "\n" << std::setprecision(17);
                for (std::size_t n = 0; n < result.paths.size(); ++n) {
                    for (const auto& s : result.samples[n]) {
                        out << result.paths[n].j << ',' << s.t;
                        for (Eigen::Index i = 0; i < s.point.size(); ++i) out << ',' << s.point[i];
                        out << "\n";
                    }
                }
            } else {
                out << "fiber: " << config.fiber_id << "\nJ: {";
                for (std::size_t n = 0; n < result.antipodal_set.size(); ++n)
                    out << (n ? "," : "") << result.antipodal_set[n];
                out << "}\npiece_index: " << result.piece_index << "\n" << std::fixed << std::setprecision(12);
                for (std::size_t n = 0; n < result.paths.size(); ++n) {
                    out << "path " << result.paths[n].j << " (" << to_string(result.paths[n].kind) << ")\n";
                    for (const auto& s : result.samples[n]) {
                        out << "  " << s.t;
                        for (Eigen::Index i = 0; i < s.point.size(); ++i) out << ' ' << s.point[i];
                        out << "\n";
                    }
                }
            }
            return kOk;
        }
        if (*stats_cmd) {
            if (r_points < 2) throw std::invalid_argument("r must be at least 2");
            StatsOptions options{seed, {}, antipodal_probability};
            options.tolerances.antipodal = tau_antipodal;
            const auto table = default_section_table(q);
            const auto hist = piece_statistics(stat_samples, q, r_points, table, options);
            const std::size_t bound = table.k() + r_points - 1;
            if (format == "json") {
                out << to_json(hist, q, r_points, table.k(), options).dump(2) << "\n";
            } else if (format == "csv") {
                out << "piece_index,count\n";
                for (std::size_t s = 0; s < hist.counts.size(); ++s) out << s << ',' << hist.counts[s] << "\n";
            } else {
                out << "q: " << q << "  r: " << r_points << "  k: " << table.k() << "  samples: " << hist.samples
                    << "\n";
                for (std::size_t s = 0; s < hist.counts.size(); ++s)
                    out << "  piece " << s << ": " << hist.counts[s] << "\n";
                out << "max_index: " << hist.max_index << " (bound " << bound << ")\n";
            }
            return hist.max_index <= bound ? kOk : kFailure;
        }
    } catch (const InvariantViolation& e) {
        err << "invariant violation: " << e.what() << "\n";
        return kFailure;
    } catch (const PlannerError& e) {
        err << "planner error: " << e.what() << "\n";
        return kFailure;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const BundleError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"tc_sphere"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace tcsphere::cli
