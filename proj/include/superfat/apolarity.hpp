#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "groebner.hpp"

namespace superfat::apolarity {

using exactcore::BigInt;
using exactcore::FieldType;
using exactcore::Matrix;
using polyring::Exponents;
using polyring::GradedPiece;
using polyring::Ideal;
using polyring::Polynomial;
using polyring::RingPtr;

// ===== The apolar pairing ===================================================

/// Product of the factorials of the entries: the weight e! that makes
/// <x^e, x^e> = e! under differentiation.
[[nodiscard]] inline BigInt exponent_factorial(const Exponents& e) {
    BigInt r = 1;
    for (const unsigned k : e) r *= exactcore::factorial(k);
    return r;
}

/// Which same-degree monomial pairing backs a perp computation.  Both are
/// diagonal in the monomial basis; they differ by the factorial weights, so
/// for ideals whose graded piece has a monomial basis the perp subspace is
/// the same either way.
enum class PairingConvention {
    Derivation,  ///< <x^a, x^b> = a! when a = b (the action g(d/dx)f)
    Contraction, ///< <x^a, x^b> = 1 when a = b
};

// ===== Perp spaces ==========================================================

/// The annihilator of a graded piece of an ideal inside the dual piece of the
/// ring, with a polynomial basis in deterministic order.
template <FieldType K>
struct PerpSpace {
    GradedPiece piece;
    std::vector<Polynomial<K>> basis;

    [[nodiscard]] std::size_t dim() const { return basis.size(); }

    /// Row space of the basis in the piece's coordinates.
    [[nodiscard]] Matrix<K> coordinates() const {
        return exactcore::row_space(span_matrix(basis, piece));
    }
};

/// All forms of the piece's degree annihilated by the ideal: the kernel of
/// the pairing of a spanning set of the ideal's piece (generators times
/// complementary monomials, no basis computation needed) against the piece.
template <FieldType K>
[[nodiscard]] PerpSpace<K> perp_space(const Ideal<K>& ideal, const GradedPiece& piece,
                                      PairingConvention convention = PairingConvention::Derivation) {
    Matrix<K> pairing = groebner::truncated_ideal_piece(ideal, piece);
    if (convention == PairingConvention::Derivation)
        for (std::size_t j = 0; j < pairing.cols(); ++j) {
            const K w = K::from_integer(exponent_factorial(piece.basis()[j]));
            for (std::size_t i = 0; i < pairing.rows(); ++i) pairing.at(i, j) *= w;
        }
    const Matrix<K> kernel = exactcore::kernel_basis(pairing);
    PerpSpace<K> space{piece, {}};
    space.basis.reserve(kernel.rows());
    for (std::size_t i = 0; i < kernel.rows(); ++i)
        space.basis.push_back(from_coefficient_vector(piece, kernel.row(i)));
    return space;
}

/// Exact linear membership of a form in the span of a perp space.
template <FieldType K>
[[nodiscard]] bool span_membership(const Polynomial<K>& f, const PerpSpace<K>& space) {
    return in_row_space(span_matrix(space.basis, space.piece),
                        coefficient_vector(f, space.piece));
}

/// Exact linear membership in the span of arbitrary forms of the piece.
template <FieldType K>
[[nodiscard]] bool span_membership(const Polynomial<K>& f,
                                   const std::vector<Polynomial<K>>& span,
                                   const GradedPiece& piece) {
    return in_row_space(span_matrix(span, piece), coefficient_vector(f, piece));
}

// ===== Catalecticants =======================================================

/// The apolar pairing of a fixed form F against products of complementary
/// monomials: entry (u, v) is (u*v)(d/dx) applied to F, i.e. the coefficient
/// of F at u*v scaled by (e_u + e_v)!.  Row/column monomials follow the
/// graded pieces' deterministic order.
template <FieldType K>
struct Catalecticant {
    GradedPiece row_piece, column_piece;
    Matrix<K> matrix;

    [[nodiscard]] std::size_t rank() const { return exactcore::rank(matrix); }
};

namespace detail {

template <FieldType K>
[[nodiscard]] Catalecticant<K> pairing_matrix(const Polynomial<K>& f, GradedPiece rows,
                                              GradedPiece cols) {
    Matrix<K> m(rows.dim(), cols.dim());
    for (std::size_t i = 0; i < rows.dim(); ++i)
        for (std::size_t j = 0; j < cols.dim(); ++j) {
            const Exponents e = polyring::exponent_sum(rows.basis()[i], cols.basis()[j]);
            const K c = f.coefficient(e);
            if (!c.is_zero()) m.at(i, j) = c * K::from_integer(exponent_factorial(e));
        }
    return Catalecticant<K>{std::move(rows), std::move(cols), std::move(m)};
}

} // namespace detail

/// Catalecticant of a degree-d form at the split (a, d-a).
template <FieldType K>
[[nodiscard]] Catalecticant<K> catalecticant(const Polynomial<K>& f, unsigned a) {
    if (f.is_zero()) throw std::invalid_argument("catalecticant of the zero form");
    if (!f.is_homogeneous()) throw std::invalid_argument("catalecticant needs a homogeneous form");
    const unsigned d = static_cast<unsigned>(f.total_degree());
    if (a > d) throw std::invalid_argument("split exceeds the degree");
    return detail::pairing_matrix(f, GradedPiece(f.ring(), a), GradedPiece(f.ring(), d - a));
}

/// Catalecticant of a bidegree-(d1, d2) form at the split (a1, a2).
template <FieldType K>
[[nodiscard]] Catalecticant<K> catalecticant(const Polynomial<K>& f,
                                             std::pair<unsigned, unsigned> split) {
    if (f.is_zero()) throw std::invalid_argument("catalecticant of the zero form");
    const RingPtr ring = f.ring();
    if (!ring->is_bigraded())
        throw std::invalid_argument("pair split needs a bigraded ring");
    std::optional<std::pair<unsigned, unsigned>> bidegree;
    for (const auto& [e, c] : f.terms()) {
        const auto d = ring->bidegree(e);
        if (bidegree && *bidegree != d)
            throw std::invalid_argument("catalecticant needs a bihomogeneous form");
        bidegree = d;
    }
    const auto [d1, d2] = *bidegree;
    if (split.first > d1 || split.second > d2)
        throw std::invalid_argument("split exceeds the bidegree");
    return detail::pairing_matrix(f, GradedPiece(ring, split.first, split.second),
                                  GradedPiece(ring, d1 - split.first, d2 - split.second));
}

// ===== Normal form on the second osculating variety ========================

/// How the residual conic of F = l^(d-2) * G sits against the line l = 0.
enum class Tau2Kind {
    SquareFree,   ///< G restricts to two distinct lines l0 * l1
    DoubleLine,   ///< G restricts to a double line l0^2
    LineMultiple, ///< G is divisible by l: F is a power times one extra line
};

template <FieldType K>
struct Tau2NormalForm {
    Tau2Kind kind;
    /// The restricted factors: two forms (square-free), one counted twice
    /// (double line), none (line multiple).  Empty in the square-free case
    /// when the factorization needs a quadratic field extension.
    std::vector<Polynomial<K>> factors;
    /// G = scale * (product of the factors, squaring the double line) plus a
    /// multiple of l; 1 when there are no factors.
    K scale = K(1);
    bool extension_required = false;
    /// Coefficients (A, B, C) of the residual binary quadratic when
    /// extension_required is set, for the caller to split elsewhere.
    std::array<K, 3> residual_quadratic{K(0), K(0), K(0)};
};

/// Classifies F = l^(d-2) * G in three variables by factoring the restriction
/// of the conic G to the line l = 0 (the pre-supplied factorization witness
/// (l, G) is verified by exact multiplication).
template <FieldType K>
[[nodiscard]] Tau2NormalForm<K> tau2_normal_form(const Polynomial<K>& f, const Polynomial<K>& l,
                                                 const Polynomial<K>& g) {
    const RingPtr ring = f.ring();
    polyring::require_same_ring(ring, l.ring());
    polyring::require_same_ring(ring, g.ring());
    if (ring->nvars() != 3) throw std::invalid_argument("normal form needs three variables");
    if (l.is_zero() || !l.is_homogeneous() || l.total_degree() != 1)
        throw std::invalid_argument("the witness l must be a linear form");
    if (g.is_zero() || !g.is_homogeneous() || g.total_degree() != 2)
        throw std::invalid_argument("the witness G must be a quadratic form");
    if (f.total_degree() < 2) throw std::invalid_argument("the form must have degree >= 2");
    const unsigned d = static_cast<unsigned>(f.total_degree());
    if (!(l.pow(d - 2) * g == f))
        throw std::invalid_argument("the form does not factor as l^(d-2) * G");

    // Substitute away the pivot variable of l to restrict G to the line l = 0.
    std::size_t pivot = 3;
    for (std::size_t i = 0; i < 3 && pivot == 3; ++i) {
        Exponents e(3, 0);
        e[i] = 1;
        if (!l.coefficient(e).is_zero()) pivot = i;
    }
    const K pivot_coeff = [&] {
        Exponents e(3, 0);
        e[pivot] = 1;
        return l.coefficient(e);
    }();
    std::vector<Polynomial<K>> images;
    for (std::size_t i = 0; i < 3; ++i) images.push_back(Polynomial<K>::variable(ring, i));
    images[pivot] -= l * (K(1) / pivot_coeff);
    const Polynomial<K> restricted = substitute(g, images);

    if (restricted.is_zero())
        return Tau2NormalForm<K>{Tau2Kind::LineMultiple, {}, K(1), false, {}};

    // The restriction is a binary quadratic A u^2 + B uv + C v^2 in the two
    // non-pivot variables.
    const std::array<std::size_t, 2> rest = pivot == 0   ? std::array<std::size_t, 2>{1, 2}
                                            : pivot == 1 ? std::array<std::size_t, 2>{0, 2}
                                                         : std::array<std::size_t, 2>{0, 1};
    const auto coeff_at = [&](unsigned du, unsigned dv) {
        Exponents e(3, 0);
        e[rest[0]] = du;
        e[rest[1]] = dv;
        return restricted.coefficient(e);
    };
    const K A = coeff_at(2, 0), B = coeff_at(1, 1), C = coeff_at(0, 2);
    const Polynomial<K> u = Polynomial<K>::variable(ring, rest[0]);
    const Polynomial<K> v = Polynomial<K>::variable(ring, rest[1]);
    const K disc = B * B - A * C * K(4);

    if (disc.is_zero()) {
        if (A.is_zero()) // disc = 0 forces B = 0 too: the quadratic is C v^2
            return Tau2NormalForm<K>{Tau2Kind::DoubleLine, {v}, C, false, {}};
        return Tau2NormalForm<K>{Tau2Kind::DoubleLine, {u + v * (B / (A + A))}, A, false, {}};
    }
    if (A.is_zero()) // v * (B u + C v) with B != 0
        return Tau2NormalForm<K>{Tau2Kind::SquareFree, {v, u + v * (C / B)}, B, false, {}};
    const std::optional<K> s = disc.sqrt();
    if (!s)
        return Tau2NormalForm<K>{Tau2Kind::SquareFree, {}, K(1), true, {A, B, C}};
    const K two_a = A + A;
    return Tau2NormalForm<K>{Tau2Kind::SquareFree,
                             {u + v * ((B - *s) / two_a), u + v * ((B + *s) / two_a)},
                             A,
                             false,
                             {}};
}

// ===== Monomialization on the quadric =======================================

/// The substitution that turns l0^(d-2)(a0 l0^2 + a1 l0 l1 + a2 l0 l2 + a3 l1 l2)
/// into a monomial-type product: scale * F = X0^(d-2) * X1 * X2 exactly.
template <FieldType K>
struct QQMonomialization {
    Polynomial<K> form; ///< F itself, expanded
    K scale;
    Polynomial<K> x0, x1, x2;
    bool degenerate = false; ///< a0 = 0: the direct factorization of the proof
};

/// Requires the point (a0 : a1 : a2 : a3) to sit on the quadric a0 a3 = a1 a2;
/// that identity is exactly what makes the displayed substitution work.
template <FieldType K>
[[nodiscard]] QQMonomialization<K> qq_monomialize(const std::array<K, 4>& a,
                                                  const std::vector<Polynomial<K>>& ells,
                                                  unsigned d) {
    if (ells.size() != 3) throw std::invalid_argument("three base linear forms required");
    const RingPtr ring = ells.front().ring();
    for (const auto& l : ells) {
        polyring::require_same_ring(ring, l.ring());
        if (l.is_zero() || !l.is_homogeneous() || l.total_degree() != 1)
            throw std::invalid_argument("base forms must be linear");
    }
    if (d < 2) throw std::invalid_argument("degree must be at least 2");
    if (!(a[0] * a[3] == a[1] * a[2]))
        throw std::invalid_argument("point not on the quadric a0*a3 = a1*a2");
    if (a[0].is_zero() && a[1].is_zero() && a[2].is_zero() && a[3].is_zero())
        throw std::invalid_argument("zero form");

    const Polynomial<K> &l0 = ells[0], &l1 = ells[1], &l2 = ells[2];
    const Polynomial<K> conic =
        l0 * l0 * a[0] + l0 * l1 * a[1] + l0 * l2 * a[2] + l1 * l2 * a[3];
    QQMonomialization<K> result{l0.pow(d - 2) * conic, K(1), l0, l0, l0};
    if (!a[0].is_zero()) {
        result.scale = a[0];
        result.x1 = l0 * a[0] + l1 * a[1];
        result.x2 = l0 * a[0] + l2 * a[2];
    } else if (a[1].is_zero()) { // F = l0^(d-2) * l2 * (a2 l0 + a3 l1)
        result.degenerate = true;
        result.x1 = l2;
        result.x2 = l0 * a[2] + l1 * a[3];
    } else { // a2 = 0 on the quadric: F = l0^(d-2) * l1 * (a1 l0 + a3 l2)
        result.degenerate = true;
        result.x1 = l1;
        result.x2 = l0 * a[1] + l2 * a[3];
    }
    if (!(result.x0.pow(d - 2) * result.x1 * result.x2 == result.form * result.scale))
        throw std::logic_error("monomialization identity failed to verify");
    return result;
}

} // namespace superfat::apolarity
