#pragma once

#include "tcsphere/base_space.hpp"
#include "tcsphere/coefficients.hpp"
#include "tcsphere/gf2.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tcsphere {

/// Raised on malformed ring presentations and on operations that mix rings or
/// violate an operation's precondition.
class RingError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Exponents = std::vector<std::uint32_t>;

struct Generator {
    std::string name;
    int degree = 1;
};

struct Term {
    Exponents exponents;
    Coeff coeff;
};

/// Unreduced linear combination of monomials, in some ring's exponent coordinates.
using Polynomial = std::vector<Term>;

/// Rewrite rule `g^power -> rhs`.
///
/// The right side may only mention `g` (with exponent below `power`) and
/// generators listed before `g`, which makes rewriting terminate and keeps
/// normal forms unique.
struct RewriteRule {
    std::size_t generator = 0;
    std::uint32_t power = 2;
    Polynomial rhs;
};

class RingModel;
using RingPtr = std::shared_ptr<const RingModel>;

/// A finitely presented truncated graded-commutative ring over Z or Z2.
///
/// Elements are stored on the basis of normal-form monomials, one block per
/// degree. Classes of degree above `top_degree()` are zero. Over Z,
/// odd-degree generators anticommute and square to zero.
class RingModel {
public:
    using SparseVector = std::vector<std::pair<std::uint32_t, Coeff>>;

    static RingPtr create(std::vector<Generator> generators, std::vector<RewriteRule> rules,
                          CoefficientRing coefficients, int top_degree) {
        return RingPtr(new RingModel(std::move(generators), std::move(rules), coefficients, top_degree));
    }

    /// Ring whose generators are those of `base` followed by `extra`. Rules of
    /// `base` are kept; `extra_rules` use the combined generator indexing.
    static RingPtr extend(const RingModel& base, std::vector<Generator> extra,
                          std::vector<RewriteRule> extra_rules, int top_degree) {
        const std::size_t total = base.generators_.size() + extra.size();
        std::vector<Generator> gens = base.generators_;
        gens.insert(gens.end(), extra.begin(), extra.end());
        std::vector<RewriteRule> rules;
        for (const auto& rule : base.rules_) {
            RewriteRule padded{rule.generator, rule.power, {}};
            for (const auto& term : rule.rhs) padded.rhs.push_back({pad(term.exponents, total), term.coeff});
            rules.push_back(std::move(padded));
        }
        rules.insert(rules.end(), extra_rules.begin(), extra_rules.end());
        return create(std::move(gens), std::move(rules), base.coefficients_, top_degree);
    }

    const std::vector<Generator>& generators() const { return generators_; }
    const std::vector<RewriteRule>& relations() const { return rules_; }
    CoefficientRing coefficients() const { return coefficients_; }
    int top_degree() const { return top_degree_; }
    std::size_t generator_count() const { return generators_.size(); }

    std::optional<std::size_t> generator_index(std::string_view name) const {
        for (std::size_t i = 0; i < generators_.size(); ++i) {
            if (generators_[i].name == name) return i;
        }
        return std::nullopt;
    }

    int degree_of(const Exponents& e) const {
        int d = 0;
        for (std::size_t i = 0; i < e.size(); ++i) d += static_cast<int>(e[i]) * generators_[i].degree;
        return d;
    }

    std::span<const Exponents> basis(int degree) const {
        if (degree < 0 || degree > top_degree_) return {};
        return basis_[static_cast<std::size_t>(degree)];
    }

    std::size_t rank(int degree) const { return basis(degree).size(); }

    std::optional<std::size_t> basis_index(const Exponents& e) const {
        const int d = degree_of(e);
        if (d < 0 || d > top_degree_) return std::nullopt;
        const auto& index = basis_index_[static_cast<std::size_t>(d)];
        auto it = index.find(e);
        if (it == index.end()) return std::nullopt;
        return it->second;
    }

    /// Ranks of the graded pieces, indexed by degree 0..top_degree.
    std::vector<std::size_t> poincare_series() const {
        std::vector<std::size_t> series;
        for (const auto& block : basis_) series.push_back(block.size());
        return series;
    }

    /// True when `other` starts with exactly this ring's generators and
    /// shares its coefficients.
    bool is_prefix_of(const RingModel& other) const {
        if (other.coefficients_ != coefficients_ || other.generators_.size() < generators_.size()) return false;
        for (std::size_t i = 0; i < generators_.size(); ++i) {
            if (other.generators_[i].name != generators_[i].name ||
                other.generators_[i].degree != generators_[i].degree)
                return false;
        }
        return true;
    }

    std::string monomial_string(const Exponents& e) const {
        std::string out;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!out.empty()) out += '*';
            out += generators_[i].name;
            if (e[i] > 1) out += '^' + std::to_string(e[i]);
        }
        return out.empty() ? "1" : out;
    }

    /// Adds `c * m` in normal form into `out`, keyed by basis index in degree deg(m).
    void accumulate_normal_form(Exponents m, Coeff c, std::map<std::size_t, Coeff>& out) const {
        if (c == 0) return;
        const int d = degree_of(m);
        if (d > top_degree_) return;
        if (coefficients_ == CoefficientRing::Integers) {
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] >= 2 && generators_[i].degree % 2 != 0) return;
            }
        }
        for (std::size_t g = m.size(); g-- > 0;) {
            const RewriteRule* rule = rule_for_[g];
            if (rule == nullptr || m[g] < rule->power) continue;
            // g^power has even degree here (odd squares already vanished over Z,
            // signs are trivial over Z2), so it commutes past the other factors.
            m[g] -= rule->power;
            for (const auto& term : rule->rhs) {
                auto [product, sign] = multiply_monomials(term.exponents, m);
                if (sign == 0) continue;
                accumulate_normal_form(std::move(product), c * term.coeff * sign, out);
            }
            return;
        }
        auto it = basis_index_[static_cast<std::size_t>(d)].find(m);
        if (it == basis_index_[static_cast<std::size_t>(d)].end()) {
            throw std::logic_error("irreducible monomial missing from basis: " + monomial_string(m));
        }
        out[it->second] += c;
    }

    /// Ordered product of two monomials with its graded-commutativity sign.
    std::pair<Exponents, int> multiply_monomials(const Exponents& a, const Exponents& b) const {
        Exponents product(generators_.size(), 0);
        int parity = 0;
        if (coefficients_ == CoefficientRing::Integers) {
            // Each factor of b moves left past the factors of a with larger index.
            int odd_suffix = 0;
            for (std::size_t i = generators_.size(); i-- > 0;) {
                if (generators_[i].degree % 2 != 0) {
                    if (b[i] % 2 != 0) parity ^= odd_suffix & 1;
                    odd_suffix += static_cast<int>(a[i] % 2);
                }
            }
        }
        for (std::size_t i = 0; i < generators_.size(); ++i) product[i] = a[i] + b[i];
        return {std::move(product), parity ? -1 : 1};
    }

    /// Normal form of the product of two basis monomials. Memoized.
    const SparseVector& basis_product(int deg_a, std::size_t idx_a, int deg_b, std::size_t idx_b) const {
        const std::uint64_t key = (static_cast<std::uint64_t>(offset_[deg_a] + idx_a) << 32) |
                                  static_cast<std::uint64_t>(offset_[deg_b] + idx_b);
        {
            std::shared_lock lock(cache_mutex_);
            auto it = product_cache_.find(key);
            if (it != product_cache_.end()) return it->second;
        }
        SparseVector result;
        if (deg_a + deg_b <= top_degree_) {
            auto [m, sign] = multiply_monomials(basis_[deg_a][idx_a], basis_[deg_b][idx_b]);
            std::map<std::size_t, Coeff> acc;
            accumulate_normal_form(std::move(m), Coeff(sign), acc);
            for (auto& [idx, c] : acc) {
                Coeff n = normalize(coefficients_, c);
                if (n != 0) result.emplace_back(static_cast<std::uint32_t>(idx), std::move(n));
            }
        }
        std::unique_lock lock(cache_mutex_);
        auto [it, inserted] = product_cache_.emplace(key, std::move(result));
        return it->second;
    }

private:
    RingModel(std::vector<Generator> generators, std::vector<RewriteRule> rules, CoefficientRing coefficients,
              int top_degree)
        : generators_(std::move(generators)),
          rules_(std::move(rules)),
          coefficients_(coefficients),
          top_degree_(top_degree) {
        validate();
        build_basis();
    }

    static Exponents pad(const Exponents& e, std::size_t n) {
        Exponents out(n, 0);
        std::copy(e.begin(), e.end(), out.begin());
        return out;
    }

    void validate() {
        if (top_degree_ < 0) throw RingError("top degree must be non-negative");
        for (std::size_t i = 0; i < generators_.size(); ++i) {
            if (generators_[i].degree < 1) throw RingError("generator '" + generators_[i].name + "' has degree < 1");
            if (generators_[i].name.empty()) throw RingError("generator names must be non-empty");
            for (std::size_t j = 0; j < i; ++j) {
                if (generators_[j].name == generators_[i].name)
                    throw RingError("duplicate generator name '" + generators_[i].name + "'");
            }
        }
        rule_for_.assign(generators_.size(), nullptr);
        for (auto& rule : rules_) {
            if (rule.generator >= generators_.size()) throw RingError("rewrite rule refers to an unknown generator");
            if (rule.power < 2) throw RingError("rewrite rules must have the form g^k -> ..., k >= 2");
            if (rule_for_[rule.generator] != nullptr)
                throw RingError("more than one rewrite rule for '" + generators_[rule.generator].name + "'");
            const int lhs_degree = static_cast<int>(rule.power) * generators_[rule.generator].degree;
            Polynomial cleaned;
            for (auto& term : rule.rhs) {
                if (term.exponents.size() != generators_.size())
                    throw RingError("rewrite rule term has the wrong number of exponents");
                term.coeff = normalize(coefficients_, term.coeff);
                if (term.coeff == 0) continue;
                if (degree_of(term.exponents) != lhs_degree)
                    throw RingError("rewrite rule for '" + generators_[rule.generator].name + "' is not homogeneous");
                for (std::size_t k = rule.generator + 1; k < generators_.size(); ++k) {
                    if (term.exponents[k] != 0)
                        throw RingError("rewrite rule right side uses a later generator");
                }
                if (term.exponents[rule.generator] >= rule.power)
                    throw RingError("rewrite rule does not lower the exponent of its generator");
                cleaned.push_back(std::move(term));
            }
            rule.rhs = std::move(cleaned);
            if (coefficients_ == CoefficientRing::Integers && generators_[rule.generator].degree % 2 != 0 &&
                !rule.rhs.empty()) {
                throw RingError("odd-degree generator '" + generators_[rule.generator].name +
                                "' squares to zero over Z; its rewrite rule must be zero");
            }
            rule_for_[rule.generator] = &rule;
        }
    }

    void build_basis() {
        const std::size_t n = generators_.size();
        std::vector<std::uint32_t> bound(n, std::numeric_limits<std::uint32_t>::max());
        for (std::size_t i = 0; i < n; ++i) {
            if (rule_for_[i] != nullptr) bound[i] = rule_for_[i]->power;
            if (coefficients_ == CoefficientRing::Integers && generators_[i].degree % 2 != 0)
                bound[i] = std::min<std::uint32_t>(bound[i], 2);
        }
        basis_.assign(static_cast<std::size_t>(top_degree_) + 1, {});
        Exponents current(n, 0);
        enumerate(0, 0, bound, current);
        basis_index_.assign(basis_.size(), {});
        offset_.assign(basis_.size(), 0);
        std::size_t running = 0;
        for (std::size_t d = 0; d < basis_.size(); ++d) {
            std::sort(basis_[d].begin(), basis_[d].end());
            for (std::size_t i = 0; i < basis_[d].size(); ++i) basis_index_[d].emplace(basis_[d][i], i);
            offset_[d] = running;
            running += basis_[d].size();
        }
    }

    void enumerate(std::size_t g, int degree, const std::vector<std::uint32_t>& bound, Exponents& current) {
        if (g == generators_.size()) {
            basis_[static_cast<std::size_t>(degree)].push_back(current);
            return;
        }
        for (std::uint32_t e = 0; e < bound[g]; ++e) {
            const int d = degree + static_cast<int>(e) * generators_[g].degree;
            if (d > top_degree_) break;
            current[g] = e;
            enumerate(g + 1, d, bound, current);
        }
        current[g] = 0;
    }

    std::vector<Generator> generators_;
    std::vector<RewriteRule> rules_;
    CoefficientRing coefficients_;
    int top_degree_;
    std::vector<const RewriteRule*> rule_for_;
    std::vector<std::vector<Exponents>> basis_;
    std::vector<std::map<Exponents, std::size_t>> basis_index_;
    std::vector<std::size_t> offset_;

    mutable std::shared_mutex cache_mutex_;
    mutable std::unordered_map<std::uint64_t, SparseVector> product_cache_;
};

/// An element of a RingModel, stored per degree on the normal-form basis.
class GradedClass {
public:
    explicit GradedClass(RingPtr ring) : ring_(std::move(ring)) {
        if (!ring_) throw RingError("class needs a ring");
    }

    static GradedClass zero(RingPtr ring) { return GradedClass(std::move(ring)); }

    static GradedClass scalar(RingPtr ring, Coeff c) {
        GradedClass out(std::move(ring));
        c = normalize(out.ring_->coefficients(), std::move(c));
        if (c != 0) out.components_[0] = {std::move(c)};
        return out;
    }

    static GradedClass one(RingPtr ring) { return scalar(std::move(ring), 1); }

    static GradedClass monomial(RingPtr ring, Exponents exponents, Coeff c = 1) {
        GradedClass out(std::move(ring));
        if (exponents.size() != out.ring_->generator_count())
            throw RingError("monomial has the wrong number of exponents");
        out.add_term(std::move(exponents), std::move(c));
        return out;
    }

    static GradedClass generator(RingPtr ring, std::string_view name) {
        auto idx = ring->generator_index(name);
        if (!idx) throw RingError("unknown generator '" + std::string(name) + "'");
        Exponents e(ring->generator_count(), 0);
        e[*idx] = 1;
        return monomial(std::move(ring), std::move(e));
    }

    static GradedClass from_polynomial(RingPtr ring, const Polynomial& terms) {
        GradedClass out(std::move(ring));
        for (const auto& t : terms) {
            if (t.exponents.size() != out.ring_->generator_count())
                throw RingError("polynomial term has the wrong number of exponents");
            out.add_term(t.exponents, t.coeff);
        }
        return out;
    }

    const RingPtr& ring() const { return ring_; }
    const std::map<int, std::vector<Coeff>>& components() const { return components_; }

    bool is_zero() const { return components_.empty(); }

    /// Zero counts as homogeneous.
    bool is_homogeneous() const { return components_.size() <= 1; }

    /// Degree of a nonzero homogeneous class.
    std::optional<int> degree() const {
        if (components_.size() != 1) return std::nullopt;
        return components_.begin()->first;
    }

    GradedClass component(int degree) const {
        GradedClass out(ring_);
        auto it = components_.find(degree);
        if (it != components_.end()) out.components_.emplace(*it);
        return out;
    }

    Coeff coefficient(const Exponents& e) const {
        auto idx = ring_->basis_index(e);
        if (!idx) return 0;
        auto it = components_.find(ring_->degree_of(e));
        if (it == components_.end()) return 0;
        return it->second[*idx];
    }

    /// Nonzero terms in normal form, ordered by degree then monomial.
    Polynomial terms() const {
        Polynomial out;
        for (const auto& [d, vec] : components_) {
            auto basis = ring_->basis(d);
            for (std::size_t i = 0; i < vec.size(); ++i) {
                if (vec[i] != 0) out.push_back({basis[i], vec[i]});
            }
        }
        return out;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (const auto& term : terms()) {
            const std::string mono = ring_->monomial_string(term.exponents);
            Coeff mag = term.coeff < 0 ? Coeff(-term.coeff) : term.coeff;
            if (out.empty()) {
                if (term.coeff < 0) out += "-";
            } else {
                out += term.coeff < 0 ? " - " : " + ";
            }
            if (mono == "1") {
                out += mag.str();
            } else if (mag == 1) {
                out += mono;
            } else {
                out += mag.str() + "*" + mono;
            }
        }
        return out;
    }

    GradedClass operator-() const {
        GradedClass out(ring_);
        for (const auto& [d, vec] : components_) {
            auto& target = out.components_[d];
            target.reserve(vec.size());
            for (const auto& c : vec) target.push_back(normalize(ring_->coefficients(), -c));
        }
        return out;
    }

    GradedClass& operator+=(const GradedClass& other) {
        require_same_ring(other);
        for (const auto& [d, vec] : other.components_) {
            auto& target = components_[d];
            if (target.empty()) target.assign(vec.size(), 0);
            for (std::size_t i = 0; i < vec.size(); ++i) target[i] = normalize(ring_->coefficients(), target[i] + vec[i]);
            prune(d);
        }
        return *this;
    }

    GradedClass& operator-=(const GradedClass& other) { return *this += -other; }

    friend GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
    friend GradedClass operator-(GradedClass a, const GradedClass& b) { return a -= b; }

    friend GradedClass operator*(const Coeff& s, const GradedClass& a) {
        GradedClass out(a.ring_);
        for (const auto& [d, vec] : a.components_) {
            auto& target = out.components_[d];
            for (const auto& c : vec) target.push_back(normalize(a.ring_->coefficients(), s * c));
            out.prune(d);
        }
        return out;
    }

    friend GradedClass operator*(int s, const GradedClass& a) { return Coeff(s) * a; }

    /// Cup product.
    friend GradedClass operator*(const GradedClass& a, const GradedClass& b) {
        a.require_same_ring(b);
        const auto& ring = *a.ring_;
        GradedClass out(a.ring_);
        for (const auto& [da, va] : a.components_) {
            for (const auto& [db, vb] : b.components_) {
                const int d = da + db;
                if (d > ring.top_degree()) continue;
                auto& target = out.components_[d];
                if (target.empty()) target.assign(ring.rank(d), 0);
                for (std::size_t i = 0; i < va.size(); ++i) {
                    if (va[i] == 0) continue;
                    for (std::size_t j = 0; j < vb.size(); ++j) {
                        if (vb[j] == 0) continue;
                        const Coeff ab = va[i] * vb[j];
                        for (const auto& [k, c] : ring.basis_product(da, i, db, j)) target[k] += ab * c;
                    }
                }
            }
        }
        for (auto it = out.components_.begin(); it != out.components_.end();) {
            for (auto& c : it->second) c = normalize(ring.coefficients(), c);
            if (std::all_of(it->second.begin(), it->second.end(), [](const Coeff& c) { return c == 0; })) {
                it = out.components_.erase(it);
            } else {
                ++it;
            }
        }
        return out;
    }

    GradedClass& operator*=(const GradedClass& other) { return *this = *this * other; }

    friend bool operator==(const GradedClass& a, const GradedClass& b) {
        return a.ring_ == b.ring_ && a.components_ == b.components_;
    }

private:
    void require_same_ring(const GradedClass& other) const {
        if (ring_ != other.ring_) throw RingError("operands belong to different rings");
    }

    void add_term(Exponents e, Coeff c) {
        std::map<std::size_t, Coeff> acc;
        const int d = ring_->degree_of(e);
        ring_->accumulate_normal_form(std::move(e), std::move(c), acc);
        if (acc.empty()) return;
        auto& target = components_[d];
        if (target.empty()) target.assign(ring_->rank(d), 0);
        for (auto& [idx, coeff] : acc) target[idx] = normalize(ring_->coefficients(), target[idx] + coeff);
        prune(d);
    }

    void prune(int d) {
        auto it = components_.find(d);
        if (it == components_.end()) return;
        if (std::all_of(it->second.begin(), it->second.end(), [](const Coeff& c) { return c == 0; }))
            components_.erase(it);
    }

    RingPtr ring_;
    std::map<int, std::vector<Coeff>> components_;
};

inline GradedClass pow(const GradedClass& c, unsigned k) {
    GradedClass out = GradedClass::one(c.ring());
    for (unsigned i = 0; i < k; ++i) out *= c;
    return out;
}

/// Largest k with c^k != 0 (c^0 = 1); zero for c = 0.
inline unsigned height(const GradedClass& c) {
    if (!c.is_homogeneous()) throw RingError("height requires a homogeneous class");
    if (c.is_zero()) return 0;
    if (*c.degree() < 1) throw RingError("height requires a class of positive degree");
    GradedClass power = c;
    unsigned k = 1;
    for (;;) {
        GradedClass next = power * c;
        if (next.is_zero()) return k;
        power = std::move(next);
        ++k;
    }
}

/// Membership of a homogeneous class `p` in the principal ideal (b), decided
/// by GF(2) elimination on the degree-deg(p) block. Z2 only.
inline bool in_principal_ideal(const GradedClass& p, const GradedClass& b) {
    if (p.ring() != b.ring()) throw RingError("operands belong to different rings");
    if (p.ring()->coefficients() != CoefficientRing::ModTwo)
        throw RingError("ideal membership is only implemented over Z2");
    if (!p.is_homogeneous() || !b.is_homogeneous()) throw RingError("ideal membership requires homogeneous classes");
    if (p.is_zero()) return true;
    if (b.is_zero()) return false;
    const int d = *p.degree();
    const int cofactor_degree = d - *b.degree();
    if (cofactor_degree < 0) return false;
    const auto& ring = p.ring();
    const std::size_t dim = ring->rank(d);
    Gf2Span span(dim);
    for (const auto& m : ring->basis(cofactor_degree)) {
        GradedClass product = b * GradedClass::monomial(ring, m);
        Gf2Vector row(dim);
        auto it = product.components().find(d);
        if (it != product.components().end()) {
            for (std::size_t i = 0; i < dim; ++i) row.set(i, it->second[i] != 0);
        }
        span.insert(std::move(row));
    }
    Gf2Vector target(dim);
    const auto& vec = p.components().at(d);
    for (std::size_t i = 0; i < dim; ++i) target.set(i, vec[i] != 0);
    return span.contains(std::move(target));
}

/// Smallest k >= 0 with a^(k+1) in the ideal (b). Z2 only.
inline unsigned relative_height(const GradedClass& a, const GradedClass& b) {
    if (a.ring()->coefficients() != CoefficientRing::ModTwo)
        throw RingError("relative height is only implemented over Z2");
    if (a.ring() != b.ring()) throw RingError("operands belong to different rings");
    if (!a.is_homogeneous() || !b.is_homogeneous()) throw RingError("relative height requires homogeneous classes");
    GradedClass power = a;
    const unsigned limit = static_cast<unsigned>(a.ring()->top_degree()) + 1;
    for (unsigned k = 0; k <= limit; ++k) {
        if (in_principal_ideal(power, b)) return k;
        power *= a;
    }
    throw RingError("no power of the class lies in the ideal");
}

/// Image of `c` under the ring map sending generator i of c's ring to images[i].
inline GradedClass apply_homomorphism(const GradedClass& c, const RingPtr& target,
                                      std::span<const GradedClass> images) {
    const auto& source = *c.ring();
    if (images.size() != source.generator_count())
        throw RingError("homomorphism needs one image per generator");
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (images[i].ring() != target) throw RingError("generator image lives in the wrong ring");
        if (!images[i].is_zero() && images[i].degree() != source.generators()[i].degree)
            throw RingError("generator image has the wrong degree");
    }
    GradedClass out = GradedClass::zero(target);
    for (const auto& term : c.terms()) {
        GradedClass image = GradedClass::scalar(target, term.coeff);
        for (std::size_t i = 0; i < term.exponents.size(); ++i) {
            for (std::uint32_t e = 0; e < term.exponents[i]; ++e) image *= images[i];
        }
        out += image;
    }
    return out;
}

/// Pullback along a projection whose target ring extends c's ring by
/// appending generators.
inline GradedClass embed(const GradedClass& c, const RingPtr& target) {
    if (!c.ring()->is_prefix_of(*target)) throw RingError("target ring does not extend the source ring");
    std::vector<GradedClass> images;
    for (const auto& g : c.ring()->generators()) images.push_back(GradedClass::generator(target, g.name));
    return apply_homomorphism(c, target, images);
}

/// Terms of `c` written in the exponent coordinates of a ring with
/// `generator_count` generators (c's generators first).
inline Polynomial padded_terms(const GradedClass& c, std::size_t generator_count) {
    Polynomial out;
    for (auto term : c.terms()) {
        term.exponents.resize(generator_count, 0);
        out.push_back(std::move(term));
    }
    return out;
}

/// Standard truncated presentation of H*(base).
inline RingPtr make_base_ring(const BaseSpace& base, CoefficientRing coefficients) {
    using Kind = BaseSpace::Kind;
    switch (base.kind()) {
        case Kind::Point:
            return RingModel::create({}, {}, coefficients, 0);
        case Kind::Sphere:
            return RingModel::create({{"s", base.parameter()}}, {{0, 2, {}}}, coefficients, base.dim());
        case Kind::ComplexProjective:
            return RingModel::create({{"x", 2}}, {{0, static_cast<std::uint32_t>(base.parameter() + 1), {}}},
                                     coefficients, base.dim());
        case Kind::RealProjective:
            if (coefficients != CoefficientRing::ModTwo)
                throw RingError("integral cohomology of " + base.to_string() +
                                " has 2-torsion; only Z2 coefficients are supported");
            return RingModel::create({{"a", 1}}, {{0, static_cast<std::uint32_t>(base.parameter() + 1), {}}},
                                     coefficients, base.dim());
    }
    throw RingError("unknown base space");
}

/// Coefficients of a polynomial in t, lowest degree first.
using SeriesCoefficients = std::vector<std::size_t>;

inline SeriesCoefficients poincare_series(const RingModel& ring) { return ring.poincare_series(); }

inline std::string series_string(const SeriesCoefficients& s) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t d = 0; d < s.size(); ++d) {
        if (s[d] == 0) continue;
        if (!first) out << " + ";
        first = false;
        if (d == 0 || s[d] != 1) out << s[d];
        if (d > 0) out << "t" << (d > 1 ? "^" + std::to_string(d) : "");
    }
    if (first) out << "0";
    return out.str();
}

}  // namespace tcsphere
