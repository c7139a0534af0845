#pragma once

#include "tcsphere/base_space.hpp"
#include "tcsphere/graded_ring.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tcsphere {

inline constexpr std::string_view kBundleGrammar = "base=CP(n)|RP(n)|S(m)|pt; bundle=<k>*eta + <l>*eps";

class ParseError : public std::invalid_argument {
public:
    explicit ParseError(const std::string& what)
        : std::invalid_argument(what + " (expected grammar: " + std::string(kBundleGrammar) + ")") {}
};

/// Failure to put a bundle into the form an operation needs.
class BundleError : public std::runtime_error {
public:
    enum class Code {
        NotEtaEpsForm,             // no trivial summand to split off
        NonOrientableComplement,   // complement of the trivial summand has w1 != 0
        IntegralModelUnavailable,  // base has 2-torsion in integral cohomology
        SectionRequired,           // Z2 sphere-bundle model needs a section
    };

    BundleError(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Code code() const { return code_; }

private:
    Code code_;
};

enum class Summand { TrivialLine, RealCanonicalLine, ComplexCanonicalLine };

/// Whitney sum of copies of the canonical line bundle and trivial lines over a
/// supported base, written `k*eta + l*eps`.
class BundleSpec {
public:
    BundleSpec(BaseSpace base, int eta_count, int eps_count)
        : base_(base), eta_(eta_count), eps_(eps_count) {
        if (eta_ < 0 || eps_ < 0) throw std::invalid_argument("summand counts must be non-negative");
        if (eta_ > 0 && base_.kind() != BaseSpace::Kind::ComplexProjective &&
            base_.kind() != BaseSpace::Kind::RealProjective) {
            throw std::invalid_argument("eta is only defined over CP(n) and RP(n), not over " + base_.to_string());
        }
        if (rank() < 2) throw std::invalid_argument("bundle rank q must be at least 2");
    }

    static BundleSpec parse(std::string_view text);

    const BaseSpace& base() const { return base_; }
    int eta_count() const { return eta_; }
    int eps_count() const { return eps_; }

    /// The summand `eta` stands for over this base.
    Summand eta_kind() const {
        return base_.kind() == BaseSpace::Kind::ComplexProjective ? Summand::ComplexCanonicalLine
                                                                  : Summand::RealCanonicalLine;
    }

    std::vector<Summand> summands() const {
        std::vector<Summand> out(static_cast<std::size_t>(eta_), eta_kind());
        out.insert(out.end(), static_cast<std::size_t>(eps_), Summand::TrivialLine);
        return out;
    }

    /// Real rank q; complex canonical lines count twice.
    int rank() const { return eps_ + eta_ * (base_.kind() == BaseSpace::Kind::ComplexProjective ? 2 : 1); }

    std::string to_string() const {
        std::string bundle;
        if (eta_ > 0) bundle += std::to_string(eta_) + "*eta";
        if (eps_ > 0) bundle += (bundle.empty() ? "" : "+") + std::to_string(eps_) + "*eps";
        return base_.to_string() + "; " + bundle;
    }

    friend bool operator==(const BundleSpec&, const BundleSpec&) = default;

private:
    BaseSpace base_;
    int eta_;
    int eps_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline int parse_count(std::string_view s, std::string_view what) {
    s = trim(s);
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || value < 0)
        throw ParseError("invalid " + std::string(what) + " '" + std::string(s) + "'");
    return value;
}

inline BaseSpace parse_base(std::string_view s) {
    s = trim(s);
    if (s == "pt") return BaseSpace::point();
    const auto open = s.find('(');
    if (open == std::string_view::npos || s.back() != ')') throw ParseError("unknown base '" + std::string(s) + "'");
    const std::string_view name = trim(s.substr(0, open));
    const int param = parse_count(s.substr(open + 1, s.size() - open - 2), "base dimension");
    try {
        if (name == "CP") return BaseSpace::complex_projective(param);
        if (name == "RP") return BaseSpace::real_projective(param);
        if (name == "S") return BaseSpace::sphere(param);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    throw ParseError("unknown base '" + std::string(s) + "'");
}

}  // namespace detail

inline BundleSpec BundleSpec::parse(std::string_view text) {
    const auto semi = text.find(';');
    if (semi == std::string_view::npos) throw ParseError("missing ';' between base and bundle");
    const BaseSpace base = detail::parse_base(text.substr(0, semi));
    std::string_view rest = text.substr(semi + 1);
    int eta = 0;
    int eps = 0;
    bool any = false;
    while (true) {
        const auto plus = rest.find('+');
        std::string_view term = detail::trim(rest.substr(0, plus));
        if (term.empty()) throw ParseError("empty summand term");
        int count = 1;
        std::string_view name = term;
        if (const auto star = term.find('*'); star != std::string_view::npos) {
            count = detail::parse_count(term.substr(0, star), "summand multiplicity");
            name = detail::trim(term.substr(star + 1));
        }
        if (name == "eta") {
            eta += count;
        } else if (name == "eps") {
            eps += count;
        } else {
            throw ParseError("unknown summand '" + std::string(name) + "'");
        }
        any = true;
        if (plus == std::string_view::npos) break;
        rest = rest.substr(plus + 1);
    }
    if (!any) throw ParseError("no summands");
    try {
        return BundleSpec(base, eta, eps);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

/// Total Stiefel-Whitney class over Z2: (1+a)^k over RP(n), (1+x)^k over CP(n)
/// with x the mod-2 reduction of the degree-2 generator, 1 otherwise.
inline GradedClass sw_total(const BundleSpec& spec) {
    auto ring = make_base_ring(spec.base(), CoefficientRing::ModTwo);
    GradedClass total = GradedClass::one(ring);
    if (spec.eta_count() == 0) return total;
    const GradedClass line = GradedClass::one(ring) + GradedClass::generator(ring, ring->generators().front().name);
    return pow(line, static_cast<unsigned>(spec.eta_count()));
}

inline GradedClass stiefel_whitney(const BundleSpec& spec, int degree) { return sw_total(spec).component(degree); }

/// h(w_{q-1} | w_q), both classes taken from one total class.
inline unsigned sw_relative_height(const BundleSpec& spec) {
    const GradedClass total = sw_total(spec);
    return relative_height(total.component(spec.rank() - 1), total.component(spec.rank()));
}

/// Euler class of the complement eta' in spec = eta' + eps, in integral cohomology of the base.
///
/// The orientation is the one making e(eta) = +x for the complex canonical
/// line; heights do not depend on the choice.
inline GradedClass euler_class_eta(const BundleSpec& spec) {
    if (spec.eps_count() == 0)
        throw BundleError(BundleError::Code::NotEtaEpsForm, spec.to_string() + " has no trivial summand to split off");
    if (spec.base().kind() == BaseSpace::Kind::RealProjective) {
        if (spec.eta_count() % 2 != 0)
            throw BundleError(BundleError::Code::NonOrientableComplement,
                              "complement of eps in " + spec.to_string() + " is not orientable");
        throw BundleError(BundleError::Code::IntegralModelUnavailable,
                          "integral cohomology of " + spec.base().to_string() + " has 2-torsion");
    }
    auto ring = make_base_ring(spec.base(), CoefficientRing::Integers);
    if (spec.eps_count() >= 2) return GradedClass::zero(ring);
    // Only complex canonical lines remain; the top Chern class is x^k.
    Exponents e(ring->generator_count(), 0);
    e.at(0) = static_cast<std::uint32_t>(spec.eta_count());
    return GradedClass::monomial(ring, std::move(e));
}

/// Height of the Euler class of the Stiefel bundle, from the height of e(eta):
/// equal for q even, 2*floor(h/2)+1 for q odd.
inline unsigned euler_height_stiefel(const BundleSpec& spec) {
    const unsigned h = height(euler_class_eta(spec));
    if (spec.rank() % 2 == 0) return h;
    return 2 * (h / 2) + 1;
}

struct BundleFacts {
    bool orientable = true;
    bool has_section = false;
    bool has_two_sections = false;
    bool complex_structure = false;
    std::optional<GradedClass> euler_class_eta;
    GradedClass sw_total;
    std::optional<unsigned> euler_height_stiefel;
    std::string euler_unavailable_reason;
};

/// Structural flags and characteristic classes of a spec.
///
/// The complex-structure test is syntactic: any number of complex canonical
/// lines plus an even number of trivial lines, and no real canonical lines.
inline BundleFacts facts(const BundleSpec& spec) {
    const bool real_base = spec.base().kind() == BaseSpace::Kind::RealProjective;
    BundleFacts f{.orientable = !real_base || spec.eta_count() % 2 == 0,
                  .has_section = spec.eps_count() >= 1,
                  .has_two_sections = spec.eps_count() >= 2,
                  .complex_structure = spec.eps_count() % 2 == 0 && (!real_base || spec.eta_count() == 0),
                  .euler_class_eta = std::nullopt,
                  .sw_total = sw_total(spec),
                  .euler_height_stiefel = std::nullopt,
                  .euler_unavailable_reason = {}};
    try {
        f.euler_class_eta = euler_class_eta(spec);
        f.euler_height_stiefel = euler_height_stiefel(spec);
    } catch (const BundleError& e) {
        f.euler_unavailable_reason = e.what();
    }
    return f;
}

}  // namespace tcsphere
