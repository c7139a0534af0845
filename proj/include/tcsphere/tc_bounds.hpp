#pragma once

#include "tcsphere/bundles.hpp"
#include "tcsphere/graded_ring.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tcsphere {

/// Lower bound exceeding upper bound: a bug in a rule, never a valid outcome.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

enum class RuleId {
    LowerGeneric,
    LowerFiberParity,
    LowerEulerHeight,
    LowerSwHeight,
    UpperDimension,
    UpperComplex,
    UpperTwoSections,
    UpperSecatStiefel,
    UpperSharp,
};

inline constexpr std::array<RuleId, 9> kAllRules = {
    RuleId::LowerGeneric,   RuleId::LowerFiberParity, RuleId::LowerEulerHeight,
    RuleId::LowerSwHeight,  RuleId::UpperDimension,   RuleId::UpperComplex,
    RuleId::UpperTwoSections, RuleId::UpperSecatStiefel, RuleId::UpperSharp,
};

inline std::string_view to_string(RuleId id) {
    switch (id) {
        case RuleId::LowerGeneric: return "L_GENERIC";
        case RuleId::LowerFiberParity: return "L_FIBER_PARITY";
        case RuleId::LowerEulerHeight: return "L_EULER_HEIGHT";
        case RuleId::LowerSwHeight: return "L_SW_HEIGHT";
        case RuleId::UpperDimension: return "U_DIMENSION";
        case RuleId::UpperComplex: return "U_COMPLEX";
        case RuleId::UpperTwoSections: return "U_TWO_SECTIONS";
        case RuleId::UpperSecatStiefel: return "U_SECAT_STIEFEL";
        case RuleId::UpperSharp: return "U_SHARP";
    }
    return "?";
}

inline std::string_view citation(RuleId id) {
    switch (id) {
        case RuleId::LowerGeneric: return "sequential TC of the fibre sphere: r-1 for every sphere bundle";
        case RuleId::LowerFiberParity: return "odd rank: TC_r >= r";
        case RuleId::LowerEulerHeight: return "cup-length of ker(diagonal): h(e(stiefel)) + r - 1";
        case RuleId::LowerSwHeight: return "mod-2 cup-length: h(w_{q-1} | w_q) + r - 1";
        case RuleId::UpperDimension: return "dimension-connectivity upper bound";
        case RuleId::UpperComplex: return "complex structure: TC_r = r - 1";
        case RuleId::UpperTwoSections: return "two independent sections: TC_r <= r, equality for odd rank";
        case RuleId::UpperSecatStiefel: return "dim B <= (q-1) h(e(stiefel)): TC_r = secat(stiefel) + r - 1";
        case RuleId::UpperSharp: return "sharp upper bound for simply connected bases";
    }
    return "?";
}

enum class Direction { Lower, Upper, Exact };

inline std::string_view to_string(Direction d) {
    switch (d) {
        case Direction::Lower: return "lower";
        case Direction::Upper: return "upper";
        case Direction::Exact: return "exact";
    }
    return "?";
}

struct Condition {
    std::string description;
    bool holds = false;
};

struct BoundRule {
    RuleId id;
    Direction direction = Direction::Lower;
    std::optional<unsigned> value;  // present iff applicable
    bool applicable = false;
    std::vector<Condition> conditions;

    bool bounds_below() const { return applicable && direction != Direction::Upper; }
    bool bounds_above() const { return applicable && direction != Direction::Lower; }
};

struct BoundReport {
    BundleSpec spec;
    unsigned r;
    std::vector<BoundRule> rules;
    unsigned lower;
    std::optional<unsigned> upper;
    std::optional<unsigned> exact;

    const BoundRule& rule(RuleId id) const {
        for (const auto& rule : rules) {
            if (rule.id == id) return rule;
        }
        throw std::out_of_range("rule missing from report");
    }
};

/// Per-spec data shared by the rules (characteristic classes, heights).
struct BoundContext {
    BundleSpec spec;
    BundleFacts facts;
    unsigned sw_relative_height;

    explicit BoundContext(const BundleSpec& s)
        : spec(s), facts(tcsphere::facts(s)), sw_relative_height(tcsphere::sw_relative_height(s)) {}

    int q() const { return spec.rank(); }
    int dim_base() const { return spec.base().dim(); }
};

namespace detail {

inline BoundRule make_rule(RuleId id, Direction dir, std::vector<Condition> conditions, unsigned value) {
    BoundRule rule{id, dir, std::nullopt, false, std::move(conditions)};
    rule.applicable = std::all_of(rule.conditions.begin(), rule.conditions.end(),
                                  [](const Condition& c) { return c.holds; });
    if (rule.applicable) rule.value = value;
    return rule;
}

inline Condition euler_height_condition(const BoundContext& ctx) {
    if (ctx.facts.euler_height_stiefel) return {"euler height of the stiefel bundle available", true};
    return {"euler height of the stiefel bundle available (" + ctx.facts.euler_unavailable_reason + ")", false};
}

inline unsigned euler_height_or_zero(const BoundContext& ctx) { return ctx.facts.euler_height_stiefel.value_or(0); }

inline unsigned ceil_div(unsigned a, unsigned b) { return (a + b - 1) / b; }

}  // namespace detail

inline BoundRule rule_lower_generic(const BoundContext&, unsigned r) {
    return detail::make_rule(RuleId::LowerGeneric, Direction::Lower, {}, r - 1);
}

inline BoundRule rule_lower_parity(const BoundContext& ctx, unsigned r) {
    return detail::make_rule(RuleId::LowerFiberParity, Direction::Lower,
                             {{"q odd", ctx.q() % 2 != 0}, {"q >= 3", ctx.q() >= 3}}, r);
}

inline BoundRule rule_lower_euler_height(const BoundContext& ctx, unsigned r) {
    return detail::make_rule(RuleId::LowerEulerHeight, Direction::Lower,
                             {detail::euler_height_condition(ctx), {"q >= 3", ctx.q() >= 3}},
                             detail::euler_height_or_zero(ctx) + r - 1);
}

inline BoundRule rule_lower_sw_height(const BoundContext& ctx, unsigned r) {
    return detail::make_rule(RuleId::LowerSwHeight, Direction::Lower, {}, ctx.sw_relative_height + r - 1);
}

/// Applied for every q >= 2: S^{q-1} is (q-2)-connected, which at q = 2 is
/// the 0-connected case with the same formula.
inline BoundRule rule_upper_dimension(const BoundContext& ctx, unsigned r) {
    const unsigned q1 = static_cast<unsigned>(ctx.q() - 1);
    return detail::make_rule(RuleId::UpperDimension, Direction::Upper, {{"q >= 2", ctx.q() >= 2}},
                             r - 1 + detail::ceil_div(static_cast<unsigned>(ctx.dim_base()) + 1, q1));
}

inline BoundRule rule_upper_complex(const BoundContext& ctx, unsigned r) {
    return detail::make_rule(RuleId::UpperComplex, Direction::Exact,
                             {{"complex structure", ctx.facts.complex_structure}}, r - 1);
}

inline BoundRule rule_upper_two_sections(const BoundContext& ctx, unsigned r) {
    const bool odd = ctx.q() % 2 != 0;
    return detail::make_rule(RuleId::UpperTwoSections, odd ? Direction::Exact : Direction::Upper,
                             {{"two independent sections", ctx.facts.has_two_sections}, {"q >= 3", ctx.q() >= 3}},
                             r);
}

inline BoundRule rule_upper_secat(const BoundContext& ctx, unsigned r) {
    const unsigned h = detail::euler_height_or_zero(ctx);
    const bool fits = static_cast<unsigned>(ctx.dim_base()) <= static_cast<unsigned>(ctx.q() - 1) * h;
    return detail::make_rule(RuleId::UpperSecatStiefel, Direction::Exact,
                             {detail::euler_height_condition(ctx),
                              {"q >= 3", ctx.q() >= 3},
                              {"dim B <= (q-1) * h(e(stiefel))", ctx.facts.euler_height_stiefel.has_value() && fits}},
                             h + r - 1);
}

inline BoundRule rule_upper_sharp(const BoundContext& ctx, unsigned r) {
    const int q1 = ctx.q() - 1;
    const bool divides = ctx.dim_base() % q1 == 0;
    const unsigned quota = static_cast<unsigned>(ctx.dim_base() / q1);
    return detail::make_rule(
        RuleId::UpperSharp, Direction::Upper,
        {{"q >= 3", ctx.q() >= 3},
         {"base simply connected", ctx.spec.base().simply_connected()},
         {"(q-1) divides dim B", divides},
         detail::euler_height_condition(ctx),
         {"h(e(stiefel)) <= dim B / (q-1)",
          ctx.facts.euler_height_stiefel.has_value() && divides && detail::euler_height_or_zero(ctx) <= quota}},
        r - 1 + quota);
}

#define TCSPHERE_SPEC_OVERLOAD(name)                                                              \
    inline BoundRule name(const BundleSpec& spec, unsigned r) { return name(BoundContext(spec), r); }
TCSPHERE_SPEC_OVERLOAD(rule_lower_generic)
TCSPHERE_SPEC_OVERLOAD(rule_lower_parity)
TCSPHERE_SPEC_OVERLOAD(rule_lower_euler_height)
TCSPHERE_SPEC_OVERLOAD(rule_lower_sw_height)
TCSPHERE_SPEC_OVERLOAD(rule_upper_dimension)
TCSPHERE_SPEC_OVERLOAD(rule_upper_complex)
TCSPHERE_SPEC_OVERLOAD(rule_upper_two_sections)
TCSPHERE_SPEC_OVERLOAD(rule_upper_secat)
TCSPHERE_SPEC_OVERLOAD(rule_upper_sharp)
#undef TCSPHERE_SPEC_OVERLOAD

inline BoundRule evaluate_rule(RuleId id, const BoundContext& ctx, unsigned r) {
    switch (id) {
        case RuleId::LowerGeneric: return rule_lower_generic(ctx, r);
        case RuleId::LowerFiberParity: return rule_lower_parity(ctx, r);
        case RuleId::LowerEulerHeight: return rule_lower_euler_height(ctx, r);
        case RuleId::LowerSwHeight: return rule_lower_sw_height(ctx, r);
        case RuleId::UpperDimension: return rule_upper_dimension(ctx, r);
        case RuleId::UpperComplex: return rule_upper_complex(ctx, r);
        case RuleId::UpperTwoSections: return rule_upper_two_sections(ctx, r);
        case RuleId::UpperSecatStiefel: return rule_upper_secat(ctx, r);
        case RuleId::UpperSharp: return rule_upper_sharp(ctx, r);
    }
    throw std::logic_error("unknown rule");
}

inline BoundReport evaluate(const BoundContext& ctx, unsigned r) {
    if (r < 2) throw std::invalid_argument("r must be at least 2");
    BoundReport report{ctx.spec, r, {}, 0, std::nullopt, std::nullopt};
    for (RuleId id : kAllRules) {
        BoundRule rule = evaluate_rule(id, ctx, r);
        if (rule.bounds_below()) report.lower = std::max(report.lower, *rule.value);
        if (rule.bounds_above()) report.upper = report.upper ? std::min(*report.upper, *rule.value) : *rule.value;
        report.rules.push_back(std::move(rule));
    }
    if (report.upper && report.lower > *report.upper) {
        throw InvariantViolation("lower bound " + std::to_string(report.lower) + " exceeds upper bound " +
                                 std::to_string(*report.upper) + " for " + ctx.spec.to_string() +
                                 ", r = " + std::to_string(r));
    }
    if (report.upper && report.lower == *report.upper) report.exact = report.lower;
    return report;
}

inline BoundReport evaluate(const BundleSpec& spec, unsigned r) { return evaluate(BoundContext(spec), r); }

}  // namespace tcsphere
