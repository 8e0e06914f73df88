#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "apolarity.hpp"
#include "rng.hpp"

namespace superfat::secants {

using exactcore::FieldType;
using exactcore::Matrix;
using polyring::Exponents;
using polyring::GradedPiece;
using polyring::Polynomial;
using polyring::PolyRing;
using polyring::RingPtr;

// ===== Parameterized subvarieties of a graded piece =========================

/// A polynomial family of forms: the expression lives in a ring whose first
/// variables are the parameters and whose remaining variables generate the
/// target; expanding in the target monomials gives the coordinates of the
/// image point as polynomials in the parameters.
template <FieldType K>
struct ParamMap {
    std::string name;
    RingPtr combined; ///< parameter variables followed by the target variables
    std::size_t nparams;
    GradedPiece piece; ///< the graded piece of the target ring holding the image
    Polynomial<K> expression;
    /// Documented generic projective dimension of the image (parameters minus
    /// scaling redundancies), for reports; not used in computations.
    std::size_t expected_image_dimension;
};

/// Affine cone of a tangent space: the row span of the exact Jacobian.
template <FieldType K>
struct TangentSpan {
    std::vector<K> point;
    Matrix<K> span; ///< reduced rows in the piece's monomial coordinates

    [[nodiscard]] std::size_t affine_dimension() const { return span.rows(); }
};

namespace detail {

/// Coordinates of a combined-ring polynomial after evaluating the parameter
/// block at p: the target-monomial coefficient vector.
template <FieldType K>
[[nodiscard]] std::vector<K> coordinates_at(const ParamMap<K>& map, const Polynomial<K>& f,
                                            const std::vector<K>& p) {
    std::vector<K> coords(map.piece.dim(), K(0));
    for (const auto& [e, c] : f.terms()) {
        K v = c;
        for (std::size_t i = 0; i < map.nparams && !v.is_zero(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) v = v * p[i];
        if (v.is_zero()) continue;
        const Exponents tail(e.begin() + static_cast<long>(map.nparams), e.end());
        const auto idx = map.piece.index_of(tail);
        if (!idx) throw std::logic_error("map expression leaves its target piece");
        coords[*idx] += v;
    }
    return coords;
}

template <FieldType K>
void require_point(const ParamMap<K>& map, const std::vector<K>& p) {
    if (p.size() != map.nparams)
        throw std::invalid_argument("parameter point has the wrong length");
}

} // namespace detail

/// Coordinates of the image point at parameter values p.
template <FieldType K>
[[nodiscard]] std::vector<K> image_coordinates(const ParamMap<K>& map, const std::vector<K>& p) {
    detail::require_point(map, p);
    return detail::coordinates_at(map, map.expression, p);
}

/// The image point as a polynomial of the target piece.
template <FieldType K>
[[nodiscard]] Polynomial<K> image_form(const ParamMap<K>& map, const std::vector<K>& p) {
    return from_coefficient_vector(map.piece, image_coordinates(map, p));
}

/// Exact Jacobian span at p: one row per parameter, reduced.  For these
/// multihomogeneous maps the affine cone contains the image point itself.
template <FieldType K>
[[nodiscard]] TangentSpan<K> tangent_span(const ParamMap<K>& map, const std::vector<K>& p) {
    detail::require_point(map, p);
    Matrix<K> rows(0, map.piece.dim());
    for (std::size_t i = 0; i < map.nparams; ++i)
        rows.push_row(detail::coordinates_at(map, differentiate(map.expression, i), p));
    return TangentSpan<K>{p, exactcore::row_space(rows)};
}

// ===== Terracini dimension estimates ========================================

/// A generic secant dimension certified from below by exact ranks at random
/// rational points.
struct SecantEstimate {
    std::size_t projective_dimension = 0; ///< max over the trials
    unsigned agreeing_trials = 0;         ///< how many trials attained the max
    unsigned trials = 0;

    [[nodiscard]] bool unanimous() const { return agreeing_trials == trials; }
};

/// dim of the s-th secant variety by Terracini: the span of s tangent spaces
/// at independent random parameter points, maximized over the trials.  Each
/// trial is a pure function of (map, seed, trial index).
template <FieldType K>
[[nodiscard]] SecantEstimate secant_dimension(const ParamMap<K>& map, unsigned s,
                                              std::uint64_t seed, unsigned trials = 3) {
    if (s == 0) throw std::invalid_argument("secant index must be at least 1");
    if (trials == 0) throw std::invalid_argument("at least one trial required");
    std::vector<std::size_t> dims;
    for (unsigned t = 0; t < trials; ++t) {
        Rng rng(seed * 1000003ULL + t);
        Matrix<K> stacked(0, map.piece.dim());
        for (unsigned j = 0; j < s; ++j) {
            std::vector<K> p;
            p.reserve(map.nparams);
            for (std::size_t i = 0; i < map.nparams; ++i)
                p.push_back(exactcore::random_scalar<K>(rng, 50));
            const TangentSpan<K> span = tangent_span(map, p);
            for (std::size_t r = 0; r < span.span.rows(); ++r)
                stacked.push_row(span.span.row(r));
        }
        dims.push_back(exactcore::rank(stacked));
    }
    SecantEstimate est;
    est.trials = trials;
    std::size_t best = 0;
    for (const std::size_t v : dims) best = std::max(best, v);
    for (const std::size_t v : dims)
        if (v == best) ++est.agreeing_trials;
    est.projective_dimension = best == 0 ? 0 : best - 1;
    return est;
}

// ===== Builders =============================================================

namespace detail {

template <FieldType K>
[[nodiscard]] Polynomial<K> linear_form(const RingPtr& ring, std::size_t param_offset,
                                        std::size_t var_offset, std::size_t n) {
    Polynomial<K> f(ring);
    for (std::size_t i = 0; i < n; ++i)
        f += Polynomial<K>::variable(ring, param_offset + i) *
             Polynomial<K>::variable(ring, var_offset + i);
    return f;
}

[[nodiscard]] inline std::vector<std::string> numbered(std::string_view stem, std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(stem) + std::to_string(i));
    return names;
}

} // namespace detail

/// ell -> ell^d: the degree-d power map on linear forms in n + 1 variables.
template <FieldType K>
[[nodiscard]] ParamMap<K> veronese(std::size_t n, unsigned d) {
    if (n == 0 || d == 0) throw std::invalid_argument("veronese needs n, d >= 1");
    std::vector<std::string> names = detail::numbered("a", n + 1);
    const std::vector<std::string> vars = detail::numbered("x", n + 1);
    for (const auto& v : vars) names.push_back(v);
    const RingPtr combined = PolyRing::standard(names);
    const RingPtr target = PolyRing::standard(vars);
    const Polynomial<K> ell = detail::linear_form<K>(combined, 0, n + 1, n + 1);
    return ParamMap<K>{"veronese", combined,          n + 1,
                       GradedPiece(target, d),        ell.pow(d),
                       n};
}

/// (ell, G) -> ell^(d-2) G over ternary forms: the second osculating family.
template <FieldType K>
[[nodiscard]] ParamMap<K> tau2(unsigned d) {
    if (d < 2) throw std::invalid_argument("tau2 needs d >= 2");
    std::vector<std::string> names = detail::numbered("l", 3);
    for (const auto& g : detail::numbered("g", 6)) names.push_back(g);
    const std::vector<std::string> vars = {"x0", "x1", "x2"};
    for (const auto& v : vars) names.push_back(v);
    const RingPtr combined = PolyRing::standard(names);
    const RingPtr target = PolyRing::standard(vars);
    const Polynomial<K> ell = detail::linear_form<K>(combined, 0, 9, 3);
    // G runs over the conic coefficients in the deterministic degree-2 order.
    const GradedPiece conics(target, 2);
    Polynomial<K> g(combined);
    for (std::size_t j = 0; j < conics.dim(); ++j) {
        Exponents e(12, 0);
        const Exponents& tail = conics.basis()[j];
        for (std::size_t i = 0; i < 3; ++i) e[9 + i] = tail[i];
        e[3 + j] = 1;
        g += Polynomial<K>::monomial(combined, e, K(1));
    }
    const GradedPiece piece(target, d);
    const std::size_t ambient = piece.dim() - 1;
    return ParamMap<K>{"tau2",       combined, 9, piece, ell.pow(d - 2) * g,
                       std::min<std::size_t>(7, ambient)};
}

/// (l0, l1, l2) -> l0^(d-2) l1 l2: three independent linear forms, one
/// repeated to order d-2.
template <FieldType K>
[[nodiscard]] ParamMap<K> qq(unsigned d) {
    if (d < 3) throw std::invalid_argument("qq needs d >= 3");
    std::vector<std::string> names = detail::numbered("a", 3);
    for (const auto& v : detail::numbered("b", 3)) names.push_back(v);
    for (const auto& v : detail::numbered("c", 3)) names.push_back(v);
    const std::vector<std::string> vars = {"x0", "x1", "x2"};
    for (const auto& v : vars) names.push_back(v);
    const RingPtr combined = PolyRing::standard(names);
    const RingPtr target = PolyRing::standard(vars);
    const Polynomial<K> l0 = detail::linear_form<K>(combined, 0, 9, 3);
    const Polynomial<K> l1 = detail::linear_form<K>(combined, 3, 9, 3);
    const Polynomial<K> l2 = detail::linear_form<K>(combined, 6, 9, 3);
    return ParamMap<K>{"qq", combined, 9, GradedPiece(target, d), l0.pow(d - 2) * l1 * l2, 6};
}

/// (ell_s, ell_t) -> ell_s^d ell_t^d: the two-factor power surface.
template <FieldType K>
[[nodiscard]] ParamMap<K> segre_veronese(unsigned d) {
    if (d == 0) throw std::invalid_argument("segre_veronese needs d >= 1");
    std::vector<std::string> names = detail::numbered("a", 2);
    for (const auto& v : detail::numbered("b", 2)) names.push_back(v);
    const std::vector<std::string> svars = {"s0", "s1"}, tvars = {"t0", "t1"};
    for (const auto& v : svars) names.push_back(v);
    for (const auto& v : tvars) names.push_back(v);
    const RingPtr combined = PolyRing::standard(names);
    const RingPtr target = PolyRing::bigraded(svars, tvars);
    const Polynomial<K> ms = detail::linear_form<K>(combined, 0, 4, 2);
    const Polynomial<K> mt = detail::linear_form<K>(combined, 2, 6, 2);
    return ParamMap<K>{"sv", combined, 4, GradedPiece(target, d, d), ms.pow(d) * mt.pow(d), 2};
}

/// m_s^(d-1) m_t^(d-1) n with n a full bilinear form (4 parameters).
template <FieldType K>
[[nodiscard]] ParamMap<K> q2(unsigned d) {
    if (d < 2) throw std::invalid_argument("q2 needs d >= 2");
    std::vector<std::string> names = detail::numbered("a", 2);
    for (const auto& v : detail::numbered("b", 2)) names.push_back(v);
    for (const auto& v : detail::numbered("c", 4)) names.push_back(v);
    const std::vector<std::string> svars = {"s0", "s1"}, tvars = {"t0", "t1"};
    for (const auto& v : svars) names.push_back(v);
    for (const auto& v : tvars) names.push_back(v);
    const RingPtr combined = PolyRing::standard(names);
    const RingPtr target = PolyRing::bigraded(svars, tvars);
    const Polynomial<K> ms = detail::linear_form<K>(combined, 0, 8, 2);
    const Polynomial<K> mt = detail::linear_form<K>(combined, 2, 10, 2);
    const auto cv = [&](std::size_t i) { return Polynomial<K>::variable(combined, 4 + i); };
    const auto xv = [&](std::size_t i) { return Polynomial<K>::variable(combined, 8 + i); };
    const Polynomial<K> n = cv(0) * xv(0) * xv(2) + cv(1) * xv(0) * xv(3) +
                            cv(2) * xv(1) * xv(2) + cv(3) * xv(1) * xv(3);
    return ParamMap<K>{"q2",     combined,         8, GradedPiece(target, d, d),
                       ms.pow(d - 1) * mt.pow(d - 1) * n, 5};
}

/// m_s^(d-1) n_s m_t^(d-1) n_t: two nearly repeated factors per block.
template <FieldType K>
[[nodiscard]] ParamMap<K> qq2(unsigned d) {
    if (d < 2) throw std::invalid_argument("qq2 needs d >= 2");
    std::vector<std::string> names = detail::numbered("a", 2);
    for (const auto& v : detail::numbered("b", 2)) names.push_back(v);
    for (const auto& v : detail::numbered("c", 2)) names.push_back(v);
    for (const auto& v : detail::numbered("e", 2)) names.push_back(v);
    const std::vector<std::string> svars = {"s0", "s1"}, tvars = {"t0", "t1"};
    for (const auto& v : svars) names.push_back(v);
    for (const auto& v : tvars) names.push_back(v);
    const RingPtr combined = PolyRing::standard(names);
    const RingPtr target = PolyRing::bigraded(svars, tvars);
    const Polynomial<K> ms = detail::linear_form<K>(combined, 0, 8, 2);
    const Polynomial<K> ns = detail::linear_form<K>(combined, 2, 8, 2);
    const Polynomial<K> mt = detail::linear_form<K>(combined, 4, 10, 2);
    const Polynomial<K> nt = detail::linear_form<K>(combined, 6, 10, 2);
    return ParamMap<K>{"qq2",    combined,
                       8,        GradedPiece(target, d, d),
                       ms.pow(d - 1) * ns * mt.pow(d - 1) * nt, 4};
}

// ===== Fill-degree verification =============================================

/// The least s with sigma_s filling the ambient space of the osculating
/// family.  The counting formula predicts the fill everywhere except d = 4,
/// where the predicted two chords only reach a hypersurface and a third is
/// needed.
struct FillDegreeReport {
    unsigned d = 0;
    unsigned s_formula = 0;            ///< ceil((d^2 + 3d + 2) / 16)
    unsigned s_fill = 0;               ///< s_formula, plus one when d = 4
    std::size_t ambient = 0;           ///< dim of the target projective space
    std::size_t dim_at_fill = 0;       ///< secant dimension at s_fill
    std::size_t dim_below_fill = 0;    ///< secant dimension at s_fill - 1
    std::size_t expected_below = 0;    ///< min(ambient, 8(s_fill - 1) - 1), or 13 when d = 4
    bool verified = false;

    [[nodiscard]] bool passed() const { return verified; }
};

template <FieldType K>
[[nodiscard]] FillDegreeReport fill_degree_check(unsigned d, std::uint64_t seed,
                                                 unsigned trials = 3) {
    if (d < 3) throw std::invalid_argument("fill degree needs d >= 3");
    const ParamMap<K> map = tau2<K>(d);
    FillDegreeReport report;
    report.d = d;
    report.s_formula = (d * d + 3 * d + 2 + 15) / 16;
    report.s_fill = report.s_formula + (d == 4 ? 1 : 0);
    report.ambient = map.piece.dim() - 1;
    report.dim_at_fill = secant_dimension(map, report.s_fill, seed, trials).projective_dimension;
    report.dim_below_fill =
        secant_dimension(map, report.s_fill - 1, seed, trials).projective_dimension;
    report.expected_below =
        d == 4 ? 13 : std::min<std::size_t>(report.ambient, 8 * (report.s_fill - 1) - 1);
    report.verified = report.dim_at_fill == report.ambient &&
                      report.dim_below_fill == report.expected_below &&
                      report.dim_below_fill < report.ambient;
    return report;
}

// ===== Quadric incidence ====================================================

/// One incidence story: inside the 4-dimensional annihilator of a 2-square,
/// the family's points sweep a smooth quadric whose section by the tangent
/// plane of the base surface splits into two lines.
struct QuadricCaseReport {
    bool checked = false;
    bool quadric_smooth = false;            ///< the rank-4 form a0 a3 - a1 a2
    bool samples_factor = false;            ///< sampled quadric points factor as required
    bool tangent_section_rank_two = false;  ///< restricted conic = two lines
    bool degenerate_sample_in_tangent = false; ///< the a3 = 0 face lies in the plane

    [[nodiscard]] bool passed() const {
        return !checked || (quadric_smooth && samples_factor && tangent_section_rank_two &&
                            degenerate_sample_in_tangent);
    }
};

struct QuadricIncidenceReport {
    QuadricCaseReport power_surface;     ///< ternary case (needs d >= 3)
    QuadricCaseReport two_factor_surface; ///< bigraded case (needs d >= 2)

    [[nodiscard]] bool passed() const {
        return power_surface.passed() && two_factor_surface.passed() &&
               (power_surface.checked || two_factor_surface.checked);
    }
};

namespace detail {

/// Symmetric matrix of 2*(v0 v3 - v1 v2) restricted to the rows of B.
template <FieldType K>
[[nodiscard]] Matrix<K> restrict_hyperbolic_form(const Matrix<K>& b) {
    Matrix<K> q(4, 4);
    q.at(0, 3) = q.at(3, 0) = K(1);
    q.at(1, 2) = q.at(2, 1) = K(-1);
    return b * q * b.transpose();
}

/// Rewrites each row of a span in the coordinates of four distinguished basis
/// monomials; returns no rows if any row leaves their span.
template <FieldType K>
[[nodiscard]] Matrix<K> annihilator_coordinates(const Matrix<K>& span,
                                                const std::vector<Polynomial<K>>& basis,
                                                const GradedPiece& piece) {
    Matrix<K> coords(0, basis.size());
    for (std::size_t r = 0; r < span.rows(); ++r) {
        const std::vector<K> row = span.row(r);
        std::vector<K> solved(basis.size(), K(0));
        std::vector<K> rebuilt(piece.dim(), K(0));
        for (std::size_t j = 0; j < basis.size(); ++j) {
            const auto& e = basis[j].terms().begin()->first;
            const std::size_t idx = *piece.index_of(e);
            solved[j] = row[idx];
            rebuilt[idx] = row[idx];
        }
        for (std::size_t j = 0; j < rebuilt.size(); ++j)
            if (rebuilt[j] != row[j]) return Matrix<K>(0, basis.size());
        coords.push_row(solved);
    }
    return coords;
}

} // namespace detail

/// Runs the ternary story for d >= 3 and the bigraded story for d >= 2.
template <FieldType K>
[[nodiscard]] QuadricIncidenceReport quadric_incidence_check(unsigned d, std::uint64_t seed) {
    if (d < 2) throw std::invalid_argument("quadric incidence needs d >= 2");
    QuadricIncidenceReport report;
    Rng rng(seed);

    {
        // Hyperbolic coordinates on both annihilators: rank 4 means smooth.
        Matrix<K> q(4, 4);
        q.at(0, 3) = q.at(3, 0) = K(1);
        q.at(1, 2) = q.at(2, 1) = K(-1);
        const bool smooth = exactcore::rank(q) == 4;
        report.power_surface.quadric_smooth = smooth;
        report.two_factor_surface.quadric_smooth = smooth;
    }

    if (d >= 3) {
        auto& c = report.power_surface;
        c.checked = true;
        const ParamMap<K> power = veronese<K>(2, d);
        const RingPtr& ring = power.piece.ring();
        const auto x0 = Polynomial<K>::variable(ring, std::size_t{0});
        const auto x1 = Polynomial<K>::variable(ring, std::size_t{1});
        const auto x2 = Polynomial<K>::variable(ring, std::size_t{2});
        // Annihilator coordinates (a0 : a1 : a2 : a3) of the 2-square at the
        // base point: x2^(d-2) (a0 x2^2 + a1 x2 x0 + a2 x2 x1 + a3 x0 x1).
        const std::vector<Polynomial<K>> ells = {x2, x0, x1};

        c.samples_factor = true;
        for (int trial = 0; trial < 10; ++trial) {
            const K a0 = exactcore::random_nonzero_scalar<K>(rng, 25);
            const K a1 = exactcore::random_scalar<K>(rng, 25);
            const K a2 = exactcore::random_scalar<K>(rng, 25);
            const std::array<K, 4> a = {a0, a1, a2, a1 * a2 / a0};
            const auto mono = apolarity::qq_monomialize(a, ells, d);
            c.samples_factor = c.samples_factor &&
                               mono.x0.pow(d - 2) * mono.x1 * mono.x2 == mono.form * mono.scale;
        }

        // Tangent plane of the power map at the base linear form x2: spanned by
        // x2^d and x2^(d-1) xi, i.e. the face a3 = 0 of the annihilator.
        const TangentSpan<K> tangent = tangent_span(power, {K(0), K(0), K(1)});
        const std::vector<Polynomial<K>> basis = {
            x2.pow(d), x2.pow(d - 1) * x0, x2.pow(d - 1) * x1, x2.pow(d - 2) * x0 * x1};
        const Matrix<K> coords = detail::annihilator_coordinates(tangent.span, basis, power.piece);
        c.tangent_section_rank_two =
            coords.rows() == 3 && exactcore::rank(detail::restrict_hyperbolic_form(coords)) == 2;

        // A quadric point with a3 = 0 degenerates into the tangent plane.
        const K b1 = exactcore::random_nonzero_scalar<K>(rng, 25);
        const K b2 = exactcore::random_scalar<K>(rng, 25);
        const Polynomial<K> degenerate =
            x2.pow(d - 2) * (x2 * x2 * exactcore::random_nonzero_scalar<K>(rng, 25) +
                             x2 * x0 * b1 + x2 * x1 * b2);
        c.degenerate_sample_in_tangent =
            in_row_space(tangent.span, coefficient_vector(degenerate, power.piece));
    }

    {
        auto& c = report.two_factor_surface;
        c.checked = true;
        const ParamMap<K> surface = segre_veronese<K>(d);
        const RingPtr ring = surface.piece.ring();
        const auto s0 = Polynomial<K>::variable(ring, std::size_t{0});
        const auto s1 = Polynomial<K>::variable(ring, std::size_t{1});
        const auto t0 = Polynomial<K>::variable(ring, std::size_t{2});
        const auto t1 = Polynomial<K>::variable(ring, std::size_t{3});
        // Annihilator coordinates (b0 : b1 : b2 : b3) at the base point:
        // s0^(d-1) t0^(d-1) (b0 s0 t0 + b1 s0 t1 + b2 s1 t0 + b3 s1 t1).
        const std::vector<Polynomial<K>> basis = {
            s0.pow(d) * t0.pow(d), s0.pow(d) * t0.pow(d - 1) * t1,
            s0.pow(d - 1) * s1 * t0.pow(d), s0.pow(d - 1) * s1 * t0.pow(d - 1) * t1};

        c.samples_factor = true;
        for (int trial = 0; trial < 10; ++trial) {
            // Draw a quadric point with b0 != 0 and factor it back into the
            // product of two nearly repeated blocks.
            const K b0 = exactcore::random_nonzero_scalar<K>(rng, 25);
            const K b1 = exactcore::random_scalar<K>(rng, 25);
            const K b2 = exactcore::random_scalar<K>(rng, 25);
            const K b3 = b1 * b2 / b0;
            const Polynomial<K> form = basis[0] * b0 + basis[1] * b1 + basis[2] * b2 +
                                       basis[3] * b3;
            const Polynomial<K> product = s0.pow(d - 1) * (s0 * b0 + s1 * b2) * t0.pow(d - 1) *
                                          (t0 * K(1) + t1 * (b1 / b0));
            c.samples_factor = c.samples_factor && product == form;
        }

        const TangentSpan<K> tangent = tangent_span(surface, {K(1), K(0), K(1), K(0)});
        const Matrix<K> coords =
            detail::annihilator_coordinates(tangent.span, basis, surface.piece);
        c.tangent_section_rank_two =
            coords.rows() == 3 && exactcore::rank(detail::restrict_hyperbolic_form(coords)) == 2;

        const K b2 = exactcore::random_nonzero_scalar<K>(rng, 25);
        const Polynomial<K> degenerate =
            basis[0] * exactcore::random_nonzero_scalar<K>(rng, 25) + basis[2] * b2;
        c.degenerate_sample_in_tangent =
            in_row_space(tangent.span, coefficient_vector(degenerate, surface.piece));
    }

    return report;
}

} // namespace superfat::secants
