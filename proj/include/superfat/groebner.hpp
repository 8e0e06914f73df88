#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "graded.hpp"
#include "polynomial.hpp"

namespace superfat::groebner {

using exactcore::FieldType;
using exactcore::Matrix;
using polyring::Exponents;
using polyring::GradedPiece;
using polyring::Ideal;
using polyring::MonomialOrder;
using polyring::Polynomial;
using polyring::PolyRing;
using polyring::RingPtr;
using polyring::coprime;
using polyring::divides;
using polyring::exponent_lcm;
using polyring::exponent_quotient;
using polyring::total_degree;

// ===== Leading terms and division ===========================================

template <FieldType K>
struct LeadingTerm {
    Exponents monomial;
    K coeff;
};

/// Largest term with respect to the order; f must be nonzero.
template <FieldType K>
[[nodiscard]] LeadingTerm<K> leading_term(const Polynomial<K>& f, const MonomialOrder& order) {
    const auto& terms = f.terms();
    if (terms.empty()) throw std::invalid_argument("leading term of zero");
    auto best = terms.begin();
    for (auto it = std::next(terms.begin()); it != terms.end(); ++it)
        if (order.less(best->first, it->first)) best = it;
    return {best->first, best->second};
}

/// Remainder of multivariate division of f by the list: no term of the result
/// is divisible by any leading monomial of the divisors.
template <FieldType K>
[[nodiscard]] Polynomial<K> normal_form(Polynomial<K> f,
                                        const std::vector<Polynomial<K>>& divisors,
                                        const MonomialOrder& order) {
    std::vector<LeadingTerm<K>> lts;
    lts.reserve(divisors.size());
    for (const auto& g : divisors) lts.push_back(leading_term(g, order));
    Polynomial<K> remainder(f.ring());
    while (!f.is_zero()) {
        const LeadingTerm<K> lt = leading_term(f, order);
        bool reduced = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            if (!divides(lts[i].monomial, lt.monomial)) continue;
            const Exponents shift = exponent_quotient(lt.monomial, lts[i].monomial);
            const K factor = lt.coeff / lts[i].coeff;
            f -= divisors[i] * Polynomial<K>::monomial(f.ring(), shift, factor);
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.add_term(lt.monomial, lt.coeff);
            f.add_term(lt.monomial, -lt.coeff);
        }
    }
    return remainder;
}

template <FieldType K>
[[nodiscard]] Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g,
                                         const MonomialOrder& order) {
    const LeadingTerm<K> lf = leading_term(f, order), lg = leading_term(g, order);
    const Exponents l = exponent_lcm(lf.monomial, lg.monomial);
    const auto mf = Polynomial<K>::monomial(f.ring(), exponent_quotient(l, lf.monomial),
                                            K(1) / lf.coeff);
    const auto mg = Polynomial<K>::monomial(g.ring(), exponent_quotient(l, lg.monomial),
                                            K(1) / lg.coeff);
    return f * mf - g * mg;
}

// ===== Buchberger ===========================================================

template <FieldType K>
class GroebnerBasis {
public:
    GroebnerBasis(std::vector<Polynomial<K>> polys, MonomialOrder order)
        : polys_(std::move(polys)), order_(order) {}
    [[nodiscard]] const std::vector<Polynomial<K>>& polys() const { return polys_; }
    [[nodiscard]] const MonomialOrder& order() const { return order_; }

private:
    std::vector<Polynomial<K>> polys_;
    MonomialOrder order_;
};

namespace detail {

template <FieldType K>
[[nodiscard]] Polynomial<K> monic(const Polynomial<K>& f, const MonomialOrder& order) {
    const K c = leading_term(f, order).coeff;
    return c.is_one() ? f : f * (K(1) / c);
}

/// Buchberger with the coprime and chain criteria and a degree-ascending pair
/// queue; returns the unique reduced basis, sorted by ascending leading
/// monomial.  This is the library's computational hot spot; the problem sizes
/// here stay small enough that no signature-based refinement is needed.
template <FieldType K>
[[nodiscard]] std::vector<Polynomial<K>> buchberger(const std::vector<Polynomial<K>>& gens,
                                                    const MonomialOrder& order) {
    std::vector<Polynomial<K>> basis;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        const Polynomial<K> m = monic(g, order);
        if (std::find(basis.begin(), basis.end(), m) == basis.end()) basis.push_back(m);
    }
    if (basis.empty()) return basis;

    std::vector<Exponents> lm;
    lm.reserve(basis.size());
    for (const auto& g : basis) lm.push_back(leading_term(g, order).monomial);

    using PairKey = std::tuple<unsigned, std::size_t, std::size_t>; // (lcm degree, i, j)
    std::set<PairKey> queue;
    std::set<std::pair<std::size_t, std::size_t>> pending;
    const auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            queue.insert({total_degree(exponent_lcm(lm[i], lm[j])), i, j});
            pending.insert({i, j});
        }
    };
    for (std::size_t j = 1; j < basis.size(); ++j) push_pairs(j);

    while (!queue.empty()) {
        const auto [deg, i, j] = *queue.begin();
        queue.erase(queue.begin());
        pending.erase({i, j});
        if (coprime(lm[i], lm[j])) continue; // first Buchberger criterion
        // Chain criterion: some third leading monomial divides the pair's lcm
        // and both side pairs are already settled.
        const Exponents l = exponent_lcm(lm[i], lm[j]);
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == i || k == j || !divides(lm[k], l)) continue;
            const auto a = std::minmax(i, k), b = std::minmax(j, k);
            skip = !pending.count({a.first, a.second}) && !pending.count({b.first, b.second});
        }
        if (skip) continue;
        const Polynomial<K> r = normal_form(s_polynomial(basis[i], basis[j], order), basis, order);
        if (r.is_zero()) continue;
        basis.push_back(monic(r, order));
        lm.push_back(leading_term(basis.back(), order).monomial);
        push_pairs(basis.size() - 1);
    }

    // Minimalize: drop elements whose leading monomial another one divides.
    std::vector<Polynomial<K>> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j)
            redundant = i != j && divides(lm[j], lm[i]) &&
                        !(lm[i] == lm[j] && j > i); // keep the first of equal leads
        if (!redundant) minimal.push_back(basis[i]);
    }
    // Tail-reduce each element against the others.
    std::vector<Polynomial<K>> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial<K>> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial<K> r = others.empty() ? minimal[i] : normal_form(minimal[i], others, order);
        if (!r.is_zero()) reduced.push_back(monic(r, order));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const auto& a, const auto& b) {
        return order.less(leading_term(a, order).monomial, leading_term(b, order).monomial);
    });
    return reduced;
}

template <FieldType K>
struct BasisCache final : polyring::IdealCacheBase {
    GroebnerBasis<K> basis;
    explicit BasisCache(GroebnerBasis<K> b) : basis(std::move(b)) {}
};

} // namespace detail

/// Reduced Groebner basis of the ideal for the given order (grevlex by
/// default).  The result is memoized on the ideal: repeated calls reuse the
/// first computation when the order matches.
template <FieldType K>
[[nodiscard]] GroebnerBasis<K> groebner_basis(const Ideal<K>& ideal,
                                              MonomialOrder order = MonomialOrder::grevlex()) {
    if (const auto* hit = dynamic_cast<const detail::BasisCache<K>*>(ideal.cache->get()))
        if (hit->basis.order() == order) return hit->basis;
    GroebnerBasis<K> gb(detail::buchberger(ideal.generators, order), order);
    if (!*ideal.cache) *ideal.cache = std::make_shared<const detail::BasisCache<K>>(gb);
    return gb;
}

template <FieldType K>
[[nodiscard]] Polynomial<K> normal_form(const Polynomial<K>& f, const GroebnerBasis<K>& gb) {
    if (gb.polys().empty()) return f;
    return normal_form(f, gb.polys(), gb.order());
}

template <FieldType K>
[[nodiscard]] bool ideal_member(const Polynomial<K>& f, const Ideal<K>& ideal) {
    polyring::require_same_ring(f.ring(), ideal.ring);
    return normal_form(f, groebner_basis(ideal)).is_zero();
}

/// Does `inner` sit inside `outer`?
template <FieldType K>
[[nodiscard]] bool ideal_contains(const Ideal<K>& outer, const Ideal<K>& inner) {
    polyring::require_same_ring(outer.ring, inner.ring);
    const GroebnerBasis<K> gb = groebner_basis(outer);
    for (const auto& g : inner.generators)
        if (!normal_form(g, gb).is_zero()) return false;
    return true;
}

template <FieldType K>
[[nodiscard]] bool ideal_equal(const Ideal<K>& a, const Ideal<K>& b) {
    return ideal_contains(a, b) && ideal_contains(b, a);
}

// ===== Quotient data ========================================================

struct QuotientInfo {
    /// nullopt encodes an infinite-dimensional quotient.
    std::optional<std::size_t> dimension;
    /// Monomials outside the leading-term ideal, grevlex-ascending; truncated
    /// to the finite case.
    std::vector<Exponents> standard_monomials;
    [[nodiscard]] bool finite() const { return dimension.has_value(); }
};

/// Vector-space data of R/I: finite iff every variable appears as a pure
/// power among the leading monomials.
template <FieldType K>
[[nodiscard]] QuotientInfo quotient_info(const Ideal<K>& ideal) {
    const GroebnerBasis<K> gb = groebner_basis(ideal);
    const std::size_t n = ideal.ring->nvars();
    std::vector<Exponents> lm;
    for (const auto& g : gb.polys()) lm.push_back(leading_term(g, gb.order()).monomial);
    if (!lm.empty() && total_degree(lm.front()) == 0) return {0, {}}; // the unit ideal

    std::vector<unsigned> box(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        unsigned best = 0;
        for (const auto& m : lm) {
            if (total_degree(m) != m[v]) continue; // not a pure power of v
            if (best == 0 || m[v] < best) best = m[v];
        }
        if (best == 0) return {std::nullopt, {}};
        box[v] = best;
    }

    QuotientInfo info;
    Exponents cur(n, 0);
    const auto standard = [&](const Exponents& e) {
        for (const auto& m : lm)
            if (divides(m, e)) return false;
        return true;
    };
    // Walk the finite box under the pure powers and keep the monomials no
    // leading monomial divides.
    const auto walk = [&](auto&& self, std::size_t v) -> void {
        if (v == n) {
            if (standard(cur)) info.standard_monomials.push_back(cur);
            return;
        }
        for (unsigned k = 0; k < box[v]; ++k) {
            cur[v] = k;
            self(self, v + 1);
        }
        cur[v] = 0;
    };
    walk(walk, 0);
    std::sort(info.standard_monomials.begin(), info.standard_monomials.end(), polyring::grevlex_less);
    info.dimension = info.standard_monomials.size();
    return info;
}

// ===== Ideal arithmetic =====================================================

template <FieldType K>
[[nodiscard]] Ideal<K> ideal_sum(const Ideal<K>& a, const Ideal<K>& b) {
    polyring::require_same_ring(a.ring, b.ring);
    std::vector<Polynomial<K>> gens = a.generators;
    for (const auto& g : b.generators)
        if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
    return Ideal<K>(a.ring, std::move(gens));
}

template <FieldType K>
[[nodiscard]] Ideal<K> ideal_product(const Ideal<K>& a, const Ideal<K>& b) {
    polyring::require_same_ring(a.ring, b.ring);
    std::vector<Polynomial<K>> gens;
    for (const auto& f : a.generators)
        for (const auto& g : b.generators) {
            Polynomial<K> h = f * g;
            if (std::find(gens.begin(), gens.end(), h) == gens.end()) gens.push_back(std::move(h));
        }
    return Ideal<K>(a.ring, std::move(gens));
}

template <FieldType K>
[[nodiscard]] Ideal<K> ideal_power(const Ideal<K>& a, long long k) {
    if (k < 0) throw std::invalid_argument("negative ideal power");
    Ideal<K> r(a.ring, {Polynomial<K>::constant(a.ring, K(1))});
    for (long long j = 0; j < k; ++j) r = ideal_product(r, a);
    return r;
}

// ===== Elimination and intersection =========================================

/// Generators free of the first `block` variables, mapped down to the smaller
/// ring; with a block-elimination basis this generates the elimination ideal.
template <FieldType K>
[[nodiscard]] Ideal<K> eliminate_block(const Ideal<K>& ideal, std::size_t block,
                                       const RingPtr& target) {
    const GroebnerBasis<K> gb = groebner_basis(ideal, MonomialOrder::block_elim(block));
    std::vector<Polynomial<K>> kept;
    for (const auto& g : gb.polys()) {
        bool uses_block = false;
        for (const auto& [e, c] : g.terms())
            for (std::size_t v = 0; v < block && !uses_block; ++v) uses_block = e[v] > 0;
        if (uses_block) continue;
        Polynomial<K> mapped(target);
        for (const auto& [e, c] : g.terms())
            mapped.add_term(Exponents(e.begin() + static_cast<std::ptrdiff_t>(block), e.end()), c);
        kept.push_back(std::move(mapped));
    }
    return Ideal<K>(target, std::move(kept));
}

/// I cap J by eliminating an auxiliary variable from t*I + (1-t)*J.  The
/// variable is named "t!", which no parsed or user-declared ring can contain.
template <FieldType K>
[[nodiscard]] Ideal<K> ideal_intersection(const Ideal<K>& a, const Ideal<K>& b) {
    polyring::require_same_ring(a.ring, b.ring);
    std::vector<std::string> vars = {"t!"};
    for (const auto& v : a.ring->variables()) vars.push_back(v);
    const RingPtr extended = PolyRing::standard(std::move(vars));

    const auto lift = [&](const Polynomial<K>& f) {
        Polynomial<K> out(extended);
        for (const auto& [e, c] : f.terms()) {
            Exponents le(1, 0);
            le.insert(le.end(), e.begin(), e.end());
            out.add_term(std::move(le), c);
        }
        return out;
    };
    const Polynomial<K> t = Polynomial<K>::variable(extended, std::size_t{0});
    const Polynomial<K> one_minus_t = Polynomial<K>::constant(extended, K(1)) - t;
    std::vector<Polynomial<K>> gens;
    for (const auto& f : a.generators) gens.push_back(t * lift(f));
    for (const auto& g : b.generators) gens.push_back(one_minus_t * lift(g));
    return eliminate_block(Ideal<K>(extended, std::move(gens)), 1, a.ring);
}

// ===== Degreewise (truncated) ideal pieces ==================================

namespace detail {

[[nodiscard]] inline std::pair<unsigned, unsigned> piece_degree_of_generator(
    const RingPtr& ring, const auto& gen) {
    if (ring->is_bigraded()) {
        const auto bd = gen.bidegree();
        if (!bd) throw std::invalid_argument("generator is not bihomogeneous");
        return *bd;
    }
    if (!gen.is_homogeneous()) throw std::invalid_argument("generator is not homogeneous");
    return {static_cast<unsigned>(gen.total_degree()), 0};
}

} // namespace detail

/// Row-space basis of the degree piece I_d inside the given graded piece:
/// each homogeneous generator g contributes g * (all monomials of the
/// complementary degree).
template <FieldType K>
[[nodiscard]] Matrix<K> truncated_ideal_piece(const Ideal<K>& ideal, const GradedPiece& piece) {
    polyring::require_same_ring(ideal.ring, piece.ring());
    Matrix<K> rows(0, piece.dim());
    const auto [da, db] = piece.degree();
    for (const auto& g : ideal.generators) {
        const auto [ga, gb] = detail::piece_degree_of_generator(ideal.ring, g);
        if (ga > da || gb > db) continue;
        std::vector<Exponents> complements;
        if (ideal.ring->is_bigraded()) {
            complements = GradedPiece(ideal.ring, da - ga, db - gb).basis();
        } else {
            complements = GradedPiece(ideal.ring, da - ga).basis();
        }
        for (const auto& m : complements) {
            const Polynomial<K> prod = g * Polynomial<K>::monomial(ideal.ring, m, K(1));
            rows.push_row(coefficient_vector(prod, piece));
        }
    }
    return exactcore::row_space(rows);
}

/// Exact intersection of the degree-d pieces of several homogeneous ideals,
/// as a row-space basis inside the piece.
template <FieldType K>
[[nodiscard]] Matrix<K> truncated_intersection(const std::vector<Ideal<K>>& ideals,
                                               const GradedPiece& piece) {
    if (ideals.empty()) throw std::invalid_argument("empty intersection list");
    Matrix<K> acc = truncated_ideal_piece(ideals.front(), piece);
    for (std::size_t i = 1; i < ideals.size(); ++i)
        acc = exactcore::subspace_intersection(acc, truncated_ideal_piece(ideals[i], piece));
    return acc;
}

// ===== Minimal generator degrees ============================================

/// Degree multiset of a minimal homogeneous generating set: in each degree t
/// the count is dim I_t - dim(R_1 * I_{t-1}).
template <FieldType K>
[[nodiscard]] std::map<unsigned, std::size_t> minimal_generator_degrees(const Ideal<K>& ideal) {
    if (ideal.ring->is_bigraded())
        throw std::logic_error("minimal generator degrees: singly graded rings only");
    std::map<unsigned, std::size_t> out;
    if (ideal.generators.empty()) return out;
    unsigned lo = 0, hi = 0;
    bool first = true;
    for (const auto& g : ideal.generators) {
        if (!g.is_homogeneous()) throw std::invalid_argument("generator is not homogeneous");
        const unsigned d = static_cast<unsigned>(g.total_degree());
        lo = first ? d : std::min(lo, d);
        hi = first ? d : std::max(hi, d);
        first = false;
    }
    for (unsigned t = lo; t <= hi; ++t) {
        const GradedPiece piece(ideal.ring, t);
        const std::size_t dim_t = truncated_ideal_piece(ideal, piece).rows();
        std::size_t dim_grown = 0;
        if (t > 0) {
            const GradedPiece below(ideal.ring, t - 1);
            const Matrix<K> prev = truncated_ideal_piece(ideal, below);
            Matrix<K> grown(0, piece.dim());
            for (std::size_t r = 0; r < prev.rows(); ++r) {
                const Polynomial<K> f = from_coefficient_vector(below, prev.row(r));
                for (std::size_t v = 0; v < ideal.ring->nvars(); ++v)
                    grown.push_row(coefficient_vector(
                        f * Polynomial<K>::variable(ideal.ring, v), piece));
            }
            dim_grown = exactcore::rank(grown);
        }
        if (dim_t > dim_grown) out[t] = dim_t - dim_grown;
    }
    return out;
}

} // namespace superfat::groebner
