#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fields.hpp"
#include "monomial.hpp"

namespace superfat::polyring {

using exactcore::BigInt;
using exactcore::FieldType;

// ===== Rings ================================================================

/// Ordered variable universe with either a total (Z) grading or a two-block
/// (Z^2) grading.  Rings are immutable and shared by pointer; two rings are
/// interchangeable when their contents agree.
class PolyRing {
public:
    [[nodiscard]] static std::shared_ptr<const PolyRing> standard(std::vector<std::string> vars) {
        return std::shared_ptr<const PolyRing>(new PolyRing(std::move(vars), 0));
    }
    [[nodiscard]] static std::shared_ptr<const PolyRing> bigraded(std::vector<std::string> first,
                                                                 std::vector<std::string> second) {
        if (first.empty() || second.empty())
            throw std::invalid_argument("bigraded ring needs two nonempty blocks");
        const std::size_t split = first.size();
        for (auto& v : second) first.push_back(std::move(v));
        return std::shared_ptr<const PolyRing>(new PolyRing(std::move(first), split));
    }

    [[nodiscard]] const std::vector<std::string>& variables() const { return vars_; }
    [[nodiscard]] std::size_t nvars() const { return vars_.size(); }
    [[nodiscard]] bool is_bigraded() const { return split_ != 0; }
    /// Size of the first block; only meaningful for bigraded rings.
    [[nodiscard]] std::size_t first_block() const { return split_; }

    [[nodiscard]] std::optional<std::size_t> index_of(std::string_view name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return i;
        return std::nullopt;
    }

    /// (first-block degree, second-block degree); requires a bigraded ring.
    [[nodiscard]] std::pair<unsigned, unsigned> bidegree(const Exponents& e) const {
        if (!is_bigraded()) throw std::logic_error("bidegree on a singly graded ring");
        unsigned a = 0, b = 0;
        for (std::size_t i = 0; i < e.size(); ++i) (i < split_ ? a : b) += e[i];
        return {a, b};
    }

    [[nodiscard]] bool operator==(const PolyRing& o) const {
        return vars_ == o.vars_ && split_ == o.split_;
    }

private:
    PolyRing(std::vector<std::string> vars, std::size_t split)
        : vars_(std::move(vars)), split_(split) {
        if (vars_.empty()) throw std::invalid_argument("ring needs at least one variable");
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (vars_[i].empty()) throw std::invalid_argument("empty variable name");
            for (std::size_t j = i + 1; j < vars_.size(); ++j)
                if (vars_[i] == vars_[j])
                    throw std::invalid_argument("duplicate variable name: " + vars_[i]);
        }
    }

    std::vector<std::string> vars_;
    std::size_t split_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

[[nodiscard]] inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && *a == *b);
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (!same_ring(a, b)) throw std::invalid_argument("operands live in different rings");
}

// ===== Polynomials ==========================================================

/// Sparse multivariate polynomial: a map from exponent vectors to nonzero
/// exact coefficients.  Values are immutable in spirit; all operations return
/// fresh polynomials.
template <FieldType K>
class Polynomial {
public:
    using TermMap = std::map<Exponents, K>;

    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {
        if (!ring_) throw std::invalid_argument("polynomial needs a ring");
    }

    [[nodiscard]] static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    [[nodiscard]] static Polynomial constant(RingPtr ring, K c) {
        Polynomial f(std::move(ring));
        f.add_term(Exponents(f.ring_->nvars(), 0), c);
        return f;
    }
    [[nodiscard]] static Polynomial variable(RingPtr ring, std::size_t index) {
        Polynomial f(std::move(ring));
        if (index >= f.ring_->nvars()) throw std::out_of_range("variable index");
        Exponents e(f.ring_->nvars(), 0);
        e[index] = 1;
        f.add_term(e, K(1));
        return f;
    }
    [[nodiscard]] static Polynomial variable(const RingPtr& ring, std::string_view name) {
        const auto idx = ring->index_of(name);
        if (!idx) throw std::invalid_argument("unknown variable: " + std::string(name));
        return variable(ring, *idx);
    }
    [[nodiscard]] static Polynomial monomial(RingPtr ring, Exponents e, K c) {
        Polynomial f(std::move(ring));
        if (e.size() != f.ring_->nvars()) throw std::invalid_argument("exponent length mismatch");
        f.add_term(std::move(e), c);
        return f;
    }

    [[nodiscard]] const RingPtr& ring() const { return ring_; }
    [[nodiscard]] const TermMap& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t term_count() const { return terms_.size(); }

    [[nodiscard]] K coefficient(const Exponents& e) const {
        const auto it = terms_.find(e);
        return it == terms_.end() ? K(0) : it->second;
    }

    /// Adds c * x^e, dropping the term if the sum cancels.
    void add_term(Exponents e, const K& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(std::move(e), c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    [[nodiscard]] Polynomial operator+(const Polynomial& o) const {
        require_same_ring(ring_, o.ring_);
        Polynomial r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }
    [[nodiscard]] Polynomial operator-(const Polynomial& o) const {
        require_same_ring(ring_, o.ring_);
        Polynomial r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
        return r;
    }
    [[nodiscard]] Polynomial operator-() const {
        Polynomial r(ring_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    [[nodiscard]] Polynomial operator*(const Polynomial& o) const {
        require_same_ring(ring_, o.ring_);
        Polynomial r(ring_);
        for (const auto& [ea, ca] : terms_)
            for (const auto& [eb, cb] : o.terms_) r.add_term(exponent_sum(ea, eb), ca * cb);
        return r;
    }
    [[nodiscard]] Polynomial operator*(const K& c) const {
        Polynomial r(ring_);
        if (c.is_zero()) return r;
        for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
        return r;
    }
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    [[nodiscard]] Polynomial pow(unsigned n) const {
        Polynomial r = constant(ring_, K(1));
        for (unsigned k = 0; k < n; ++k) r = r * *this;
        return r;
    }

    [[nodiscard]] bool operator==(const Polynomial& o) const {
        return same_ring(ring_, o.ring_) && terms_ == o.terms_;
    }

    /// Largest total degree of a term; -1 for the zero polynomial.
    [[nodiscard]] int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(polyring::total_degree(e)));
        return d;
    }

    [[nodiscard]] bool is_homogeneous() const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            const int k = static_cast<int>(polyring::total_degree(e));
            if (d == -1) d = k;
            else if (d != k) return false;
        }
        return true;
    }

    /// Bidegree when every term shares one; requires a bigraded ring.
    [[nodiscard]] std::optional<std::pair<unsigned, unsigned>> bidegree() const {
        std::optional<std::pair<unsigned, unsigned>> d;
        for (const auto& [e, c] : terms_) {
            const auto k = ring_->bidegree(e);
            if (!d) d = k;
            else if (*d != k) return std::nullopt;
        }
        return d;
    }

private:
    RingPtr ring_;
    TermMap terms_;
};

/// Base for lazily attached per-ideal computations (the Groebner layer hangs
/// its basis cache here).
struct IdealCacheBase {
    virtual ~IdealCacheBase() = default;
};

/// Finitely generated ideal: a ring plus a generator list.  Zero generators
/// are dropped on construction, so the stored list contains only nonzero
/// polynomials of the stated ring.
template <FieldType K>
struct Ideal {
    RingPtr ring;
    std::vector<Polynomial<K>> generators;
    /// Write-once memo slot, shared across copies; managed by the Groebner
    /// layer.
    std::shared_ptr<std::shared_ptr<const IdealCacheBase>> cache =
        std::make_shared<std::shared_ptr<const IdealCacheBase>>();

    Ideal(RingPtr r, std::vector<Polynomial<K>> gens) : ring(std::move(r)) {
        generators.reserve(gens.size());
        for (auto& g : gens) {
            require_same_ring(ring, g.ring());
            if (!g.is_zero()) generators.push_back(std::move(g));
        }
    }
};

// ===== Calculus primitives ==================================================

/// Sum of the terms of total degree exactly k (zero when absent).
template <FieldType K>
[[nodiscard]] Polynomial<K> homogeneous_component(const Polynomial<K>& f, unsigned k) {
    Polynomial<K> r(f.ring());
    for (const auto& [e, c] : f.terms())
        if (total_degree(e) == k) r.add_term(e, c);
    return r;
}

/// Minimal total degree of a term, read at the origin of the affine chart;
/// nullopt encodes +infinity (the zero polynomial).
template <FieldType K>
[[nodiscard]] std::optional<unsigned> order_at_origin(const Polynomial<K>& f) {
    std::optional<unsigned> m;
    for (const auto& [e, c] : f.terms()) {
        const unsigned d = total_degree(e);
        if (!m || d < *m) m = d;
    }
    return m;
}

/// f(a_1 t, ..., a_n t) collected as a univariate polynomial in t.
template <FieldType K>
[[nodiscard]] Polynomial<K> restrict_to_line(const Polynomial<K>& f, const std::vector<K>& a) {
    if (a.size() != f.ring()->nvars()) throw std::invalid_argument("direction length mismatch");
    bool nonzero = false;
    for (const K& v : a) nonzero = nonzero || !v.is_zero();
    if (!nonzero) throw std::invalid_argument("zero direction");
    const RingPtr tring = PolyRing::standard({"t"});
    Polynomial<K> r(tring);
    for (const auto& [e, c] : f.terms()) {
        K v = c;
        for (std::size_t i = 0; i < e.size() && !v.is_zero(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) v = v * a[i];
        r.add_term({total_degree(e)}, v);
    }
    return r;
}

template <FieldType K>
[[nodiscard]] Polynomial<K> differentiate(const Polynomial<K>& f, std::size_t var) {
    if (var >= f.ring()->nvars()) throw std::invalid_argument("unknown variable index");
    Polynomial<K> r(f.ring());
    for (const auto& [e, c] : f.terms()) {
        if (e[var] == 0) continue;
        Exponents d = e;
        --d[var];
        r.add_term(std::move(d), c * K(static_cast<long long>(e[var])));
    }
    return r;
}

template <FieldType K>
[[nodiscard]] Polynomial<K> differentiate(const Polynomial<K>& f, std::string_view var) {
    const auto idx = f.ring()->index_of(var);
    if (!idx) throw std::invalid_argument("unknown variable: " + std::string(var));
    return differentiate(f, *idx);
}

/// Ring homomorphism determined by an image for every variable; the images
/// fix the target ring and may live in any ring (including f's own).
template <FieldType K>
[[nodiscard]] Polynomial<K> substitute(const Polynomial<K>& f,
                                       const std::vector<Polynomial<K>>& images) {
    if (images.size() != f.ring()->nvars())
        throw std::invalid_argument("one image per variable required");
    const RingPtr target = images.front().ring();
    for (const auto& g : images) require_same_ring(target, g.ring());
    // Power cache per variable, grown on demand.
    std::vector<std::vector<Polynomial<K>>> powers(images.size());
    const auto power = [&](std::size_t i, unsigned k) -> const Polynomial<K>& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Polynomial<K>::constant(target, K(1)));
        while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
        return cache[k];
    };
    Polynomial<K> r(target);
    for (const auto& [e, c] : f.terms()) {
        Polynomial<K> term = Polynomial<K>::constant(target, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) term = term * power(i, e[i]);
        r += term;
    }
    return r;
}

template <FieldType K>
[[nodiscard]] K evaluate(const Polynomial<K>& f, const std::vector<K>& point) {
    if (point.size() != f.ring()->nvars()) throw std::invalid_argument("point length mismatch");
    K r(0);
    for (const auto& [e, c] : f.terms()) {
        K v = c;
        for (std::size_t i = 0; i < e.size() && !v.is_zero(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) v = v * point[i];
        r += v;
    }
    return r;
}

/// g acting on f as the constant-coefficient differential operator
/// g(d/dx_1, ..., d/dx_n): the monomial pairing is <x^a, x^b> = a! when a = b
/// and 0 otherwise (derivation convention).
template <FieldType K>
[[nodiscard]] Polynomial<K> apolar_action(const Polynomial<K>& g, const Polynomial<K>& f) {
    require_same_ring(g.ring(), f.ring());
    Polynomial<K> r(f.ring());
    for (const auto& [a, ca] : g.terms())
        for (const auto& [b, cb] : f.terms()) {
            if (!divides(a, b)) continue;
            BigInt falling = 1;
            for (std::size_t i = 0; i < a.size(); ++i)
                for (unsigned k = 0; k < a[i]; ++k) falling *= b[i] - k;
            r.add_term(exponent_quotient(b, a), ca * cb * K::from_integer(falling));
        }
    return r;
}

} // namespace superfat::polyring
