#include "tcsphere/corpus.hpp"
#include "tcsphere/report.hpp"
#include "tcsphere/tc_bounds.hpp"

#include <catch_amalgamated.hpp>

using namespace tcsphere;

namespace {

BundleSpec spec(const char* text) { return BundleSpec::parse(text); }

std::optional<unsigned> value(const BoundRule& rule) { return rule.applicable ? rule.value : std::nullopt; }

}  // namespace

TEST_CASE("generic and parity lower bounds") {
    CHECK(value(rule_lower_generic(spec("CP(2); 1*eta+1*eps"), 2)) == 1u);
    CHECK(value(rule_lower_generic(spec("S(3); 4*eps"), 5)) == 4u);
    CHECK(value(rule_lower_generic(spec("CP(1); 1*eta"), 3)) == 2u);

    CHECK(value(rule_lower_parity(spec("CP(1); 1*eta+1*eps"), 2)) == 2u);
    CHECK_FALSE(rule_lower_parity(spec("CP(1); 1*eta+2*eps"), 2).applicable);
    CHECK(value(rule_lower_parity(spec("S(2); 5*eps"), 4)) == 4u);
}

TEST_CASE("Euler-height lower bound") {
    CHECK(value(rule_lower_euler_height(spec("CP(2); 1*eta+1*eps"), 2)) == 4u);
    CHECK(value(rule_lower_euler_height(spec("CP(3); 1*eta+1*eps"), 2)) == 4u);
    CHECK(value(rule_lower_euler_height(spec("S(2); 4*eps"), 3)) == 2u);
    const auto rp = rule_lower_euler_height(spec("RP(3); 2*eta+1*eps"), 2);
    CHECK_FALSE(rp.applicable);
    CHECK_FALSE(rp.value);
}

TEST_CASE("Stiefel-Whitney relative-height lower bound") {
    CHECK(value(rule_lower_sw_height(spec("RP(3); 2*eta+1*eps"), 2)) == 2u);
    CHECK(value(rule_lower_sw_height(spec("S(2); 3*eps"), 3)) == 2u);
    CHECK(value(rule_lower_sw_height(spec("RP(2); 1*eta+1*eps"), 3)) == 4u);
    for (int n = 1; n <= 7; ++n) {
        for (int l = 1; l <= 4; ++l) {
            const unsigned ceil = static_cast<unsigned>((n + 1 + l - 1) / l);
            CHECK(value(rule_lower_sw_height(BundleSpec(BaseSpace::real_projective(n), l, 1), 3)) == ceil + 1);
        }
    }
}

TEST_CASE("dimension upper bound") {
    for (int n = 1; n <= 5; ++n) {
        for (unsigned r = 2; r <= 4; ++r)
            CHECK(value(rule_upper_dimension(BundleSpec(BaseSpace::complex_projective(n), 1, 1), r)) == n + r);
    }
    CHECK(value(rule_upper_dimension(spec("RP(3); 2*eta+1*eps"), 2)) == 3u);
    CHECK(value(rule_upper_dimension(spec("pt; 3*eps"), 4)) == 4u);
}

TEST_CASE("complex, two-section, secat and sharp rules") {
    CHECK(value(rule_upper_complex(spec("CP(1); 1*eta"), 4)) == 3u);
    CHECK(value(rule_upper_complex(spec("CP(3); 1*eta+2*eps"), 2)) == 1u);
    CHECK_FALSE(rule_upper_complex(spec("CP(3); 1*eta+1*eps"), 2).applicable);

    const auto two = rule_upper_two_sections(spec("CP(2); 1*eta+3*eps"), 3);
    CHECK(two.direction == Direction::Exact);
    CHECK(value(two) == 3u);
    CHECK(rule_upper_two_sections(spec("CP(2); 1*eta+2*eps"), 3).direction == Direction::Upper);
    CHECK(value(rule_upper_two_sections(spec("S(4); 3*eps"), 2)) == 2u);
    CHECK_FALSE(rule_upper_two_sections(spec("CP(2); 1*eta+1*eps"), 2).applicable);

    CHECK(value(rule_upper_secat(spec("CP(2); 1*eta+1*eps"), 3)) == 5u);
    CHECK(value(rule_upper_secat(spec("CP(4); 1*eta+1*eps"), 2)) == 6u);
    // dim B = 6 <= (q-1) h = 6, so the rule applies to CP(3) as well
    CHECK(value(rule_upper_secat(spec("CP(3); 1*eta+1*eps"), 2)) == 4u);
    CHECK(value(rule_upper_secat(spec("CP(5); 1*eta+1*eps"), 2)) == 6u);
    // h(e(eta)) = 1 < dim B = 4
    CHECK_FALSE(rule_upper_secat(spec("CP(2); 1*eta+2*eps"), 2).applicable);

    CHECK(value(rule_upper_sharp(spec("CP(3); 1*eta+1*eps"), 2)) == 4u);
    CHECK_FALSE(rule_upper_sharp(spec("CP(2); 1*eta+1*eps"), 2).applicable);
    CHECK_FALSE(rule_upper_sharp(spec("RP(3); 2*eta+1*eps"), 2).applicable);
}

TEST_CASE("evaluate examples") {
    CHECK(evaluate(spec("CP(2); 1*eta+1*eps"), 3).exact == 5u);
    CHECK(evaluate(spec("CP(3); 1*eta+1*eps"), 2).exact == 4u);
    const auto rp = evaluate(spec("RP(3); 2*eta+1*eps"), 2);
    CHECK(rp.lower == 2);
    CHECK(rp.upper == 3u);
    CHECK_FALSE(rp.exact);
    CHECK(evaluate(spec("CP(1); 1*eta"), 4).exact == 3u);
    CHECK_THROWS_AS(evaluate(spec("CP(1); 1*eta"), 1), std::invalid_argument);
}

TEST_CASE("exactness over eta + eps on CP(n)") {
    for (int n = 1; n <= 6; ++n) {
        for (unsigned r = 2; r <= 5; ++r) {
            const auto report = evaluate(BundleSpec(BaseSpace::complex_projective(n), 1, 1), r);
            CHECK(report.exact == (n % 2 == 0 ? n + r : n + r - 1));
        }
    }
}

TEST_CASE("report invariants over the corpus") {
    for (const auto& s : regression_corpus()) {
        CAPTURE(s.to_string());
        std::optional<BoundReport> previous;
        for (unsigned r = 2; r <= 6; ++r) {
            BoundReport report = evaluate(s, r);
            REQUIRE(report.upper);
            CHECK(report.lower <= *report.upper);
            CHECK(report.exact.has_value() == (report.lower == *report.upper));
            CHECK(report.rules.size() == kAllRules.size());
            for (const auto& rule : report.rules) CHECK(rule.value.has_value() == rule.applicable);

            const auto& generic = report.rule(RuleId::LowerGeneric);
            const auto& euler = report.rule(RuleId::LowerEulerHeight);
            const auto& sw = report.rule(RuleId::LowerSwHeight);
            if (euler.applicable) CHECK(*euler.value >= *generic.value);
            if (euler.applicable && sw.applicable && s.base().kind() == BaseSpace::Kind::ComplexProjective)
                CHECK(*sw.value <= *euler.value);
            if (report.rule(RuleId::UpperComplex).applicable) {
                CHECK(report.exact == r - 1);
                for (const auto& rule : report.rules) {
                    if (rule.bounds_below()) CHECK(*rule.value <= r - 1);
                }
            }
            if (previous) {
                CHECK(report.lower >= previous->lower + 1);
                CHECK(*report.upper <= *previous->upper + 1);
                CHECK(*report.upper - report.lower <= *previous->upper - previous->lower);
            }
            previous = std::move(report);
        }
    }
}

TEST_CASE("q = 2 keeps only the rules whose hypotheses allow it") {
    for (const char* text : {"CP(1); 1*eta", "CP(3); 1*eta", "pt; 2*eps", "S(3); 2*eps", "RP(4); 1*eta+1*eps"}) {
        const auto report = evaluate(spec(text), 3);
        CAPTURE(text);
        for (RuleId id : {RuleId::LowerFiberParity, RuleId::LowerEulerHeight, RuleId::UpperTwoSections,
                          RuleId::UpperSecatStiefel, RuleId::UpperSharp})
            CHECK_FALSE(report.rule(id).applicable);
        CHECK(report.rule(RuleId::UpperDimension).applicable);
    }
}

TEST_CASE("JSON rendering carries every rule") {
    const auto json = to_json(evaluate(spec("RP(3); 2*eta+1*eps"), 2));
    CHECK(json["spec"] == "RP(3); 2*eta+1*eps");
    CHECK(json["lower"] == 2);
    CHECK(json["upper"] == 3);
    CHECK(json["exact"].is_null());
    REQUIRE(json["rules"].size() == 9);
    for (const auto& rule : json["rules"]) {
        CHECK(rule.contains("citation"));
        CHECK(rule["value"].is_null() == !rule["applicable"].get<bool>());
    }
}

TEST_CASE("sweeps") {
    const auto rows = sweep(SweepFamily::CpEtaEps, IntRange::parse("1..4"), IntRange::parse("1"), IntRange::parse("2"));
    std::vector<unsigned> exact;
    for (const auto& row : rows) exact.push_back(row.report.exact.value_or(0));
    CHECK(exact == std::vector<unsigned>{2, 4, 4, 6});

    const auto rp = sweep(SweepFamily::RpLEtaEps, IntRange::parse("3"), IntRange::parse("2"), IntRange::parse("2..4"));
    REQUIRE(rp.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(rp[i].report.lower == 2 + i);
        CHECK(rp[i].report.upper == 3 + i);
    }
    CHECK(sweep(SweepFamily::CpEtaEps, IntRange::parse("4..1"), IntRange::parse("1"), IntRange::parse("2")).empty());
    CHECK_THROWS(IntRange::parse("1..x"));
    CHECK_THROWS(parse_family("hopf"));
}
