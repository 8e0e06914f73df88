#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "groebner.hpp"
#include "rng.hpp"

namespace superfat::zerodim {

using exactcore::BigInt;
using exactcore::FieldType;
using exactcore::Matrix;
using groebner::groebner_basis;
using groebner::ideal_contains;
using groebner::ideal_equal;
using groebner::ideal_intersection;
using groebner::ideal_sum;
using groebner::quotient_info;
using groebner::truncated_intersection;
using polyring::Exponents;
using polyring::GradedPiece;
using polyring::Ideal;
using polyring::Polynomial;
using polyring::PolyRing;
using polyring::RingPtr;

// ===== Reports and small types ==============================================

/// Outcome of the symmetry decision procedure for a scheme at the origin.
template <FieldType K>
struct SymmetryReport {
    bool symmetric = false;
    /// Smallest vanishing order among the generators; the candidate degree.
    unsigned m = 0;
    /// Length of the origin component.
    std::size_t length = 0;
    /// The ideal lies inside the m-th power of the maximal ideal, i.e. the
    /// scheme contains the m-fat point.  Automatic once m is the minimum
    /// generator order; recomputed as a cross-check.
    bool contains_fat_point = false;
    /// symmetric and length == m^n.
    bool superfat = false;
    /// When not symmetric: the ideal spanned by the lowest-degree homogeneous
    /// components of the generators, whose quotient is infinite-dimensional
    /// (the common-line certificate).
    std::optional<Ideal<K>> tangent_cone_witness;
};

/// A pair of independent linear forms and an exponent, standing for the
/// complete-intersection ideal (l1^m, l2^m).
template <FieldType K>
struct SquarePair {
    Polynomial<K> l1, l2;
    unsigned m;

    SquarePair(Polynomial<K> a, Polynomial<K> b, unsigned mm)
        : l1(std::move(a)), l2(std::move(b)), m(mm) {
        if (m == 0) throw std::invalid_argument("square pair needs a positive exponent");
        polyring::require_same_ring(l1.ring(), l2.ring());
        const GradedPiece linear(l1.ring(), 1);
        Matrix<K> rows(0, linear.dim());
        rows.push_row(coefficient_vector(l1, linear));
        rows.push_row(coefficient_vector(l2, linear));
        if (exactcore::rank(rows) != 2)
            throw std::invalid_argument("square pair needs independent linear forms");
    }

    [[nodiscard]] Ideal<K> ideal() const {
        return Ideal<K>(l1.ring(), {l1.pow(m), l2.pow(m)});
    }
};

// ===== Basic ideals =========================================================

/// The m-th power of the maximal ideal at the origin, generated by all
/// monomials of degree m (the ideal of the m-fat point).
template <FieldType K>
[[nodiscard]] Ideal<K> fat_point_ideal(const RingPtr& ring, unsigned m) {
    const GradedPiece piece(ring, m);
    std::vector<Polynomial<K>> gens;
    for (const auto& e : piece.basis())
        gens.push_back(Polynomial<K>::monomial(ring, e, K(1)));
    return Ideal<K>(ring, std::move(gens));
}

/// (l1^m, ..., ln^m) for n independent linear forms, n = number of variables.
template <FieldType K>
[[nodiscard]] Ideal<K> hypercube_ideal(const std::vector<Polynomial<K>>& forms, unsigned m) {
    if (forms.empty()) throw std::invalid_argument("hypercube needs linear forms");
    if (m == 0) throw std::invalid_argument("hypercube exponent must be positive");
    const RingPtr ring = forms.front().ring();
    if (forms.size() != ring->nvars())
        throw std::invalid_argument("hypercube needs one linear form per variable");
    const GradedPiece linear(ring, 1);
    Matrix<K> rows(0, linear.dim());
    for (const auto& f : forms) {
        polyring::require_same_ring(ring, f.ring());
        if (f.is_zero() || f.total_degree() != 1 || !f.is_homogeneous())
            throw std::invalid_argument("hypercube forms must be homogeneous linear");
        rows.push_row(coefficient_vector(f, linear));
    }
    if (exactcore::rank(rows) != ring->nvars())
        throw std::invalid_argument("hypercube forms must be linearly independent");
    std::vector<Polynomial<K>> gens;
    gens.reserve(forms.size());
    for (const auto& f : forms) gens.push_back(f.pow(m));
    return Ideal<K>(ring, std::move(gens));
}

// ===== Lengths at the origin ================================================

namespace detail {

/// Repeatedly doubles N until dim K[x]/(I + maximal^N) repeats and the
/// certifying bound N > value holds; returns (I + maximal^N, value).
template <FieldType K>
[[nodiscard]] std::pair<Ideal<K>, std::size_t> localize_at_origin(const Ideal<K>& ideal) {
    if (ideal.generators.empty())
        throw std::invalid_argument("the zero ideal has no isolated origin component");
    unsigned n_cap = 1;
    for (const auto& g : ideal.generators)
        n_cap = std::max(n_cap, static_cast<unsigned>(g.total_degree()) + 1);
    std::optional<std::size_t> prev;
    for (; n_cap <= 4096; n_cap *= 2) {
        Ideal<K> cut = ideal_sum(ideal, fat_point_ideal<K>(ideal.ring, n_cap));
        const std::size_t value = *quotient_info(cut).dimension;
        if (prev && *prev == value && n_cap > value) return {std::move(cut), value};
        prev = value;
    }
    throw std::runtime_error(
        "length at the origin did not stabilize: the origin is not an isolated point");
}

} // namespace detail

/// Length of the origin component: dim K[x]/(I + maximal^N) for stabilized N.
template <FieldType K>
[[nodiscard]] std::size_t length_at_origin(const Ideal<K>& ideal) {
    return detail::localize_at_origin(ideal).second;
}

/// The origin-primary component I + maximal^N (stabilized N), returned with
/// its reduced Groebner basis as the generating set.
template <FieldType K>
[[nodiscard]] Ideal<K> local_component(const Ideal<K>& ideal) {
    const auto [cut, value] = detail::localize_at_origin(ideal);
    (void)value;
    return Ideal<K>(ideal.ring, groebner_basis(cut).polys());
}

// ===== Line restrictions and the symmetry decision ==========================

/// Length of the scheme cut on the line t -> t*a through the origin: the
/// minimal vanishing order of the restricted generators.  nullopt encodes an
/// infinite intersection (the line lies inside the scheme).
template <FieldType K>
[[nodiscard]] std::optional<unsigned> line_intersection_length(const Ideal<K>& ideal,
                                                               const std::vector<K>& a) {
    if (a.size() != ideal.ring->nvars())
        throw std::invalid_argument("direction length must match the variable count");
    bool all_zero = true;
    for (const auto& c : a)
        if (!c.is_zero()) all_zero = false;
    if (all_zero) throw std::invalid_argument("zero direction");
    std::optional<unsigned> best;
    for (const auto& g : ideal.generators) {
        const auto ord = polyring::order_at_origin(polyring::restrict_to_line(g, a));
        if (ord && (!best || *ord < *best)) best = *ord;
    }
    return best;
}

/// Decides m-symmetry at the origin: m is the minimum generator order, and
/// the scheme is m-symmetric exactly when the ideal spanned by the degree-m
/// components of the generators has a finite-dimensional quotient (no line
/// lies in all tangent cones).  Fills the full report; rejects ideals that do
/// not vanish at the origin or are not 0-dimensional.
template <FieldType K>
[[nodiscard]] SymmetryReport<K> symmetry_degree(const Ideal<K>& ideal) {
    if (ideal.generators.empty())
        throw std::invalid_argument("the zero ideal does not define a 0-dimensional scheme");
    const std::size_t n = ideal.ring->nvars();
    const Exponents origin(n, 0);
    for (const auto& g : ideal.generators)
        if (!g.coefficient(origin).is_zero())
            throw std::invalid_argument("ideal is not supported at the origin");
    if (!quotient_info(ideal).finite())
        throw std::invalid_argument("ideal does not define a 0-dimensional scheme");

    unsigned m = 0;
    bool first = true;
    for (const auto& g : ideal.generators) {
        const unsigned d = *polyring::order_at_origin(g);
        m = first ? d : std::min(m, d);
        first = false;
    }
    std::vector<Polynomial<K>> cones;
    for (const auto& g : ideal.generators) {
        auto h = polyring::homogeneous_component(g, m);
        if (!h.is_zero()) cones.push_back(std::move(h));
    }
    Ideal<K> tangent(ideal.ring, std::move(cones));

    SymmetryReport<K> report;
    report.m = m;
    report.length = length_at_origin(ideal);
    report.contains_fat_point = ideal_contains(fat_point_ideal<K>(ideal.ring, m), ideal);
    report.symmetric = report.contains_fat_point && quotient_info(tangent).finite();
    std::size_t grid = 1;
    for (std::size_t i = 0; i < n; ++i) grid *= m;
    report.superfat = report.symmetric && report.length == grid;
    if (!report.symmetric) report.tangent_cone_witness = std::move(tangent);
    return report;
}

// ===== Superfat hull ========================================================

/// Encloses an m-symmetric scheme in a superfat one of length m^n: draw n
/// random combinations of the generators whose degree-m components have no
/// common zero line, and take the origin component of the ideal they
/// generate.  Every returned ideal is re-verified: it contains the input
/// scheme (hull ideal inside the input ideal) and reports (m, m^n, superfat);
/// genericity failures retry with fresh randomness.
template <FieldType K>
[[nodiscard]] Ideal<K> superfat_hull(const Ideal<K>& ideal, std::uint64_t seed) {
    const SymmetryReport<K> base = symmetry_degree(ideal);
    if (!base.symmetric)
        throw std::invalid_argument("superfat hull needs an m-symmetric input");
    const unsigned m = base.m;
    const std::size_t n = ideal.ring->nvars();
    std::size_t grid = 1;
    for (std::size_t i = 0; i < n; ++i) grid *= m;

    Rng rng(seed);
    for (int attempt = 0; attempt < 20; ++attempt) {
        std::vector<Polynomial<K>> combos, cones;
        for (std::size_t i = 0; i < n; ++i) {
            Polynomial<K> combo(ideal.ring);
            for (const auto& g : ideal.generators)
                combo += g * exactcore::random_scalar<K>(rng, 100);
            auto cone = polyring::homogeneous_component(combo, m);
            if (cone.is_zero()) break; // degenerate draw
            combos.push_back(std::move(combo));
            cones.push_back(std::move(cone));
        }
        if (combos.size() != n) continue;
        if (!quotient_info(Ideal<K>(ideal.ring, std::move(cones))).finite()) continue;
        const Ideal<K> hull = local_component(Ideal<K>(ideal.ring, std::move(combos)));
        if (!ideal_contains(ideal, hull)) continue;
        const SymmetryReport<K> check = symmetry_degree(hull);
        if (!check.superfat || check.m != m || check.length != grid) continue;
        return hull;
    }
    throw std::runtime_error("superfat hull: retry budget exhausted without a generic draw");
}

// ===== The 2-superfat square normal form ====================================

/// Result of the pencil construction: the two linear forms when the rank-1
/// condition has roots in the base field, else just the condition itself.
template <FieldType K>
struct SquareFormResult {
    /// Set when the pencil quadratic splits over the field: (l1^2, l2^2)
    /// equals the input ideal.
    std::optional<std::pair<Polynomial<K>, Polynomial<K>>> forms;
    /// disc(a*F + b*G) = q[0]*a^2 + q[1]*a*b + q[2]*b^2; its roots [a:b] mark
    /// the perfect squares in the pencil.  Returned so that a caller can move
    /// to an extension field when no root exists here.
    std::array<K, 3> pencil_quadratic;
};

namespace detail {

/// Writes a rank-1 binary quadratic q = c * l^2 with l monic; q must be a
/// perfect square.
template <FieldType K>
[[nodiscard]] Polynomial<K> monic_square_root(const Polynomial<K>& q) {
    const RingPtr ring = q.ring();
    const K a = q.coefficient({2, 0}), b = q.coefficient({1, 1}), c = q.coefficient({0, 2});
    const auto x = Polynomial<K>::variable(ring, std::size_t{0});
    const auto y = Polynomial<K>::variable(ring, std::size_t{1});
    Polynomial<K> l(ring);
    K scale(0);
    if (!a.is_zero()) {
        l = x + y * (b / (a + a));
        scale = a;
    } else if (!c.is_zero()) {
        l = y + x * (b / (c + c));
        scale = c;
    } else {
        throw std::logic_error("pencil member is not a perfect square");
    }
    if (!(l * l * scale == q)) throw std::logic_error("pencil member is not a perfect square");
    return l;
}

} // namespace detail

/// Writes a 2-superfat ideal in two variables as (l1^2, l2^2): the pencil
/// a*F + b*G of its two quadrics contains exactly two perfect squares, found
/// by solving a quadratic.  When that quadratic has no root in K the
/// coefficients come back in pencil_quadratic with forms unset.
template <FieldType K>
[[nodiscard]] SquareFormResult<K> two_superfat_square_form(const Ideal<K>& ideal) {
    if (ideal.ring->nvars() != 2)
        throw std::invalid_argument("square form needs two affine variables");
    const SymmetryReport<K> report = symmetry_degree(ideal);
    if (!report.superfat || report.m != 2)
        throw std::invalid_argument("input ideal is not 2-superfat");

    const GradedPiece quadrics(ideal.ring, 2);
    std::vector<Polynomial<K>> parts;
    for (const auto& g : ideal.generators) {
        auto h = polyring::homogeneous_component(g, 2);
        if (!h.is_zero()) parts.push_back(std::move(h));
    }
    const Matrix<K> span = exactcore::row_space(span_matrix(parts, quadrics));
    if (span.rows() != 2) throw std::invalid_argument("input ideal is not 2-superfat");
    const Polynomial<K> F = from_coefficient_vector(quadrics, span.row(0));
    const Polynomial<K> G = from_coefficient_vector(quadrics, span.row(1));

    // disc(a*F + b*G) = q0*a^2 + q1*a*b + q2*b^2 where disc(A,B,C) = B^2 - 4AC.
    const K a1 = F.coefficient({2, 0}), b1 = F.coefficient({1, 1}), c1 = F.coefficient({0, 2});
    const K a2 = G.coefficient({2, 0}), b2 = G.coefficient({1, 1}), c2 = G.coefficient({0, 2});
    const K q0 = b1 * b1 - a1 * c1 * K(4);
    const K q1 = b1 * b2 + b1 * b2 - (a1 * c2 + a2 * c1) * K(4);
    const K q2 = b2 * b2 - a2 * c2 * K(4);
    SquareFormResult<K> result{std::nullopt, {q0, q1, q2}};

    std::vector<std::pair<K, K>> roots; // [a : b] with a*F + b*G rank 1
    if (q0.is_zero() && q1.is_zero() && q2.is_zero())
        throw std::logic_error("pencil is entirely degenerate");
    if (q0.is_zero()) {
        roots.emplace_back(K(1), K(0));
        if (q1.is_zero()) throw std::logic_error("pencil has a double perfect square");
        roots.emplace_back(-q2, q1);
    } else {
        const K delta = q1 * q1 - q0 * q2 * K(4);
        if (delta.is_zero()) throw std::logic_error("pencil has a double perfect square");
        const std::optional<K> s = delta.sqrt();
        if (!s) return result; // roots live in a quadratic extension
        roots.emplace_back(-q1 + *s, q0 + q0);
        roots.emplace_back(-q1 - *s, q0 + q0);
    }
    const Polynomial<K> l1 = detail::monic_square_root(F * roots[0].first + G * roots[0].second);
    const Polynomial<K> l2 = detail::monic_square_root(F * roots[1].first + G * roots[1].second);
    const Ideal<K> rebuilt(ideal.ring, {l1 * l1, l2 * l2});
    if (!ideal_equal(rebuilt, ideal))
        throw std::logic_error("pencil construction failed to reproduce the input ideal");
    result.forms = {l1, l2};
    return result;
}

// ===== Smoothing family =====================================================

/// The ideal (F_1, ..., F_n) with F_i = x_i (x_i + t)(x_i + 2t)...(x_i + (m-1)t):
/// m^n simple points on a grid which degenerate onto (x_1^m, ..., x_n^m) as
/// t goes to 0.
template <FieldType K>
[[nodiscard]] Ideal<K> smoothing_family(unsigned m, std::size_t n, const K& t) {
    if (m == 0) throw std::invalid_argument("smoothing family needs m >= 1");
    if (n == 0) throw std::invalid_argument("smoothing family needs n >= 1");
    if (t.is_zero()) throw std::invalid_argument("smoothing family needs t != 0");
    if (K::characteristic() != 0 && K::characteristic() <= m)
        throw std::invalid_argument("field characteristic must exceed m");
    std::vector<std::string> names;
    if (n <= 3) {
        const std::array<std::string, 3> xyz = {"x", "y", "z"};
        names.assign(xyz.begin(), xyz.begin() + static_cast<long>(n));
    } else {
        for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    }
    const RingPtr ring = PolyRing::standard(names);
    std::vector<Polynomial<K>> gens;
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
        const auto xi = Polynomial<K>::variable(ring, i);
        Polynomial<K> f = xi;
        for (unsigned k = 1; k < m; ++k)
            f *= xi + Polynomial<K>::constant(ring, t * K::from_integer(BigInt(k)));
        gens.push_back(std::move(f));
    }
    return Ideal<K>(ring, std::move(gens));
}

// ===== Union of squares =====================================================

/// Verification record for: the union of all m-squares at a point is the
/// (2m-1)-fat point.
template <FieldType K>
struct UnionOfSquaresReport {
    unsigned m = 0;
    std::vector<SquarePair<K>> squares; // the 2m-1 witnesses, l_i = x + i*y
    /// (x,y)^{2m-1} sits inside every square ideal.
    bool fat_point_inside_each = false;
    /// The intersection has no form of degree 2m-2, so it equals the fat point.
    bool no_form_in_critical_degree = false;
    /// Cross-check via elimination, run for m <= 3.
    std::optional<bool> elimination_matches;
    [[nodiscard]] bool passed() const {
        return fat_point_inside_each && no_form_in_critical_degree &&
               elimination_matches.value_or(true);
    }
};

template <FieldType K>
[[nodiscard]] UnionOfSquaresReport<K> union_of_squares_check(unsigned m) {
    if (m == 0) throw std::invalid_argument("union of squares needs m >= 1");
    if (K::characteristic() != 0 && K::characteristic() < m)
        throw std::invalid_argument("field too small to separate the linear forms");
    const RingPtr ring = PolyRing::standard({"x", "y"});
    const auto x = Polynomial<K>::variable(ring, std::size_t{0});
    const auto y = Polynomial<K>::variable(ring, std::size_t{1});

    UnionOfSquaresReport<K> report;
    report.m = m;
    for (unsigned i = 1; i < m; ++i)
        report.squares.emplace_back(x, x + y * K::from_integer(BigInt(i)), m);
    report.squares.emplace_back(x, y, m);
    for (unsigned i = 1; i < m; ++i)
        report.squares.emplace_back(x + y * K::from_integer(BigInt(i)), y, m);

    const Ideal<K> fat = fat_point_ideal<K>(ring, 2 * m - 1);
    std::vector<Ideal<K>> ideals;
    report.fat_point_inside_each = true;
    for (const auto& sq : report.squares) {
        ideals.push_back(sq.ideal());
        report.fat_point_inside_each =
            report.fat_point_inside_each && ideal_contains(ideals.back(), fat);
    }
    report.no_form_in_critical_degree =
        truncated_intersection(ideals, GradedPiece(ring, 2 * m - 2)).rows() == 0;
    if (m <= 3) {
        Ideal<K> meet = ideals.front();
        for (std::size_t i = 1; i < ideals.size(); ++i)
            meet = ideal_intersection(meet, ideals[i]);
        report.elimination_matches = ideal_equal(meet, fat);
    }
    return report;
}

// ===== Perpendicular pairs ==================================================

/// Verification record for: intersecting the squares of the two perpendicular
/// pairs (x, y) and (x-y, x+y) yields exactly (x^2+y^2, x^3, x^2*y), a
/// non-symmetric scheme of length 5.
template <FieldType K>
struct PerpendicularUnionReport {
    Ideal<K> intersection;
    Ideal<K> expected;
    bool equals_expected = false;
    /// One pair alone gives strictly more than the two-pair intersection.
    bool single_pair_strictly_larger = false;
    SymmetryReport<K> expected_report;
    [[nodiscard]] bool passed() const {
        return equals_expected && single_pair_strictly_larger &&
               !expected_report.symmetric && expected_report.length == 5;
    }
};

template <FieldType K>
[[nodiscard]] PerpendicularUnionReport<K> perpendicular_union_check() {
    const RingPtr ring = PolyRing::standard({"x", "y"});
    const auto x = Polynomial<K>::variable(ring, std::size_t{0});
    const auto y = Polynomial<K>::variable(ring, std::size_t{1});
    const Ideal<K> axes = SquarePair<K>(x, y, 2).ideal();
    const Ideal<K> rotated = SquarePair<K>(x - y, x + y, 2).ideal();
    const Ideal<K> meet = ideal_intersection(axes, rotated);
    Ideal<K> expected(ring, {x * x + y * y, x * x * x, x * x * y});
    PerpendicularUnionReport<K> report{meet, expected, false, false, symmetry_degree(expected)};
    report.equals_expected = ideal_equal(meet, expected);
    report.single_pair_strictly_larger =
        ideal_contains(axes, expected) && !ideal_equal(axes, expected);
    return report;
}

// ===== Alternating binomial identity ========================================

/// The alternating dot product sum_j (-1)^j C(m+j-1, j) C(m, i-j); it
/// vanishes for all m, i >= 1, which is what makes the square-family
/// hyperplanes of the union check independent.
[[nodiscard]] inline BigInt binomial_identity(unsigned m, unsigned i) {
    BigInt acc = 0;
    for (unsigned j = 0; j <= i; ++j) {
        const BigInt term = exactcore::binomial(static_cast<long long>(m) + j - 1, j) *
                            exactcore::binomial(m, static_cast<long long>(i) - j);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

} // namespace superfat::zerodim
