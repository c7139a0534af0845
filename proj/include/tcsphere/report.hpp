#pragma once

#include "tcsphere/parallel.hpp"
#include "tcsphere/tc_bounds.hpp"

#include <json.hpp>

#include <charconv>
#include <cstddef>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tcsphere {

using Json = nlohmann::ordered_json;

inline Json to_json(const BoundRule& rule) {
    Json conditions = Json::array();
    for (const auto& c : rule.conditions) conditions.push_back({{"description", c.description}, {"holds", c.holds}});
    return {{"id", to_string(rule.id)},
            {"direction", to_string(rule.direction)},
            {"value", rule.value ? Json(*rule.value) : Json(nullptr)},
            {"applicable", rule.applicable},
            {"conditions", std::move(conditions)},
            {"citation", citation(rule.id)}};
}

inline Json to_json(const BoundReport& report) {
    Json rules = Json::array();
    for (const auto& rule : report.rules) rules.push_back(to_json(rule));
    return {{"spec", report.spec.to_string()},
            {"r", report.r},
            {"rules", std::move(rules)},
            {"lower", report.lower},
            {"upper", report.upper ? Json(*report.upper) : Json(nullptr)},
            {"exact", report.exact ? Json(*report.exact) : Json(nullptr)}};
}

inline std::string interval_string(const BoundReport& report) {
    if (report.exact) return "exact " + std::to_string(*report.exact);
    return "[" + std::to_string(report.lower) + ", " + (report.upper ? std::to_string(*report.upper) : "inf") + "]";
}

inline void write_text(std::ostream& out, const BoundReport& report) {
    out << "spec: " << report.spec.to_string() << "\n"
        << "r: " << report.r << "\n"
        << "TC_r: " << interval_string(report) << "\n"
        << "rules:\n";
    for (const auto& rule : report.rules) {
        out << "  " << std::left << std::setw(16) << to_string(rule.id) << std::setw(6) << to_string(rule.direction);
        if (rule.applicable) {
            out << std::setw(14) << ("= " + std::to_string(*rule.value));
        } else {
            out << std::setw(14) << "inapplicable";
        }
        out << "[" << citation(rule.id) << "]\n";
        for (const auto& c : rule.conditions) {
            if (!c.holds) out << "      fails: " << c.description << "\n";
        }
    }
}

inline void write_csv(std::ostream& out, const BoundReport& report) {
    out << "spec,r,lower,upper,exact\n"
        << '"' << report.spec.to_string() << "\"," << report.r << ',' << report.lower << ','
        << (report.upper ? std::to_string(*report.upper) : "") << ','
        << (report.exact ? std::to_string(*report.exact) : "") << "\n";
}

/// Inclusive integer range written "a..b" or "a"; b < a is empty.
struct IntRange {
    int first = 0;
    int last = -1;

    bool empty() const { return last < first; }

    std::vector<int> values() const {
        std::vector<int> out;
        for (int v = first; v <= last; ++v) out.push_back(v);
        return out;
    }

    static IntRange parse(std::string_view text) {
        auto number = [&](std::string_view s) {
            int v = 0;
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
                throw std::invalid_argument("invalid range '" + std::string(text) + "' (expected a..b or a)");
            return v;
        };
        const auto dots = text.find("..");
        if (dots == std::string_view::npos) {
            const int v = number(text);
            return {v, v};
        }
        return {number(text.substr(0, dots)), number(text.substr(dots + 2))};
    }
};

enum class SweepFamily { CpEtaEps, RpLEtaEps };

inline SweepFamily parse_family(std::string_view name) {
    if (name == "cp_eta_eps") return SweepFamily::CpEtaEps;
    if (name == "rp_l_eta_eps") return SweepFamily::RpLEtaEps;
    throw std::invalid_argument("unknown family '" + std::string(name) + "' (expected cp_eta_eps or rp_l_eta_eps)");
}

inline std::string_view to_string(SweepFamily f) {
    return f == SweepFamily::CpEtaEps ? "cp_eta_eps" : "rp_l_eta_eps";
}

/// eta + l*eps over CP(n), or l*eta + eps over RP(n).
inline BundleSpec family_spec(SweepFamily family, int n, int l) {
    if (family == SweepFamily::CpEtaEps) return BundleSpec(BaseSpace::complex_projective(n), 1, l);
    return BundleSpec(BaseSpace::real_projective(n), l, 1);
}

struct SweepRow {
    int n;
    int l;
    unsigned r;
    BoundReport report;
};

inline std::vector<SweepRow> sweep(SweepFamily family, const IntRange& n, const IntRange& l, const IntRange& r) {
    struct Key {
        int n;
        int l;
        int r;
    };
    std::vector<Key> keys;
    for (int nv : n.values()) {
        for (int lv : l.values()) {
            for (int rv : r.values()) keys.push_back({nv, lv, rv});
        }
    }
    for (const auto& k : keys) {
        if (k.r < 2) throw std::invalid_argument("r must be at least 2");
    }
    std::vector<std::optional<SweepRow>> rows(keys.size());
    parallel_for(keys.size(), [&](std::size_t i) {
        const auto& k = keys[i];
        const unsigned r = static_cast<unsigned>(k.r);
        rows[i] = SweepRow{k.n, k.l, r, evaluate(family_spec(family, k.n, k.l), r)};
    });
    std::vector<SweepRow> out;
    for (auto& row : rows) out.push_back(std::move(*row));
    return out;
}

inline Json to_json(SweepFamily family, const std::vector<SweepRow>& rows) {
    Json out = Json::array();
    for (const auto& row : rows) {
        out.push_back({{"family", to_string(family)},
                       {"n", row.n},
                       {"l", row.l},
                       {"r", row.r},
                       {"spec", row.report.spec.to_string()},
                       {"lower", row.report.lower},
                       {"upper", row.report.upper ? Json(*row.report.upper) : Json(nullptr)},
                       {"exact", row.report.exact ? Json(*row.report.exact) : Json(nullptr)}});
    }
    return out;
}

inline void write_csv(std::ostream& out, SweepFamily family, const std::vector<SweepRow>& rows) {
    out << "family,n,l,r,lower,upper,exact\n";
    for (const auto& row : rows) {
        out << to_string(family) << ',' << row.n << ',' << row.l << ',' << row.r << ',' << row.report.lower << ','
            << (row.report.upper ? std::to_string(*row.report.upper) : "") << ','
            << (row.report.exact ? std::to_string(*row.report.exact) : "") << "\n";
    }
}

inline void write_text(std::ostream& out, SweepFamily family, const std::vector<SweepRow>& rows) {
    out << "family: " << to_string(family) << "\n";
    out << std::left << std::setw(4) << "n" << std::setw(4) << "l" << std::setw(4) << "r" << "TC_r\n";
    for (const auto& row : rows) {
        out << std::left << std::setw(4) << row.n << std::setw(4) << row.l << std::setw(4) << row.r
            << interval_string(row.report) << "\n";
    }
}

}  // namespace tcsphere
