#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "matrix.hpp"
#include "polynomial.hpp"

namespace superfat::polyring {

using exactcore::Matrix;

namespace detail {

/// All exponent vectors over nvars variables of total degree d, sorted
/// grevlex-descending (so x_0^d comes first and x_{n-1}^d last).
[[nodiscard]] inline std::vector<Exponents> monomials_of_degree(std::size_t nvars, unsigned d) {
    std::vector<Exponents> out;
    Exponents cur;
    cur.reserve(nvars);
    const auto recurse = [&](auto&& self, unsigned remaining) -> void {
        if (cur.size() + 1 == nvars) {
            cur.push_back(remaining);
            out.push_back(cur);
            cur.pop_back();
            return;
        }
        for (unsigned k = 0; k <= remaining; ++k) {
            cur.push_back(k);
            self(self, remaining - k);
            cur.pop_back();
        }
    };
    recurse(recurse, d);
    std::sort(out.begin(), out.end(), [](const Exponents& a, const Exponents& b) {
        return grevlex_less(b, a); // descending
    });
    return out;
}

} // namespace detail

// ===== Graded pieces ========================================================

/// The monomial basis of one (bi)homogeneous piece of a ring, in a fixed
/// reproducible order: grevlex-descending, and for bigraded pieces the
/// product order with the first block outermost (each block again
/// grevlex-descending).  Every matrix layout in the library inherits this
/// order.
class GradedPiece {
public:
    /// Piece R_d of a singly graded ring.
    GradedPiece(RingPtr ring, unsigned d) : ring_(std::move(ring)), degree_(d, 0) {
        if (ring_->is_bigraded())
            throw std::logic_error("bigraded ring: use the two-degree constructor");
        basis_ = detail::monomials_of_degree(ring_->nvars(), d);
        index_basis();
    }

    /// Piece R_{a,b} of a bigraded ring.
    GradedPiece(RingPtr ring, unsigned a, unsigned b) : ring_(std::move(ring)), degree_(a, b) {
        if (!ring_->is_bigraded())
            throw std::logic_error("singly graded ring: use the one-degree constructor");
        const std::size_t split = ring_->first_block();
        const auto heads = detail::monomials_of_degree(split, a);
        const auto tails = detail::monomials_of_degree(ring_->nvars() - split, b);
        for (const auto& h : heads)
            for (const auto& t : tails) {
                Exponents e = h;
                e.insert(e.end(), t.begin(), t.end());
                basis_.push_back(std::move(e));
            }
        index_basis();
    }

    [[nodiscard]] const RingPtr& ring() const { return ring_; }
    [[nodiscard]] std::pair<unsigned, unsigned> degree() const { return degree_; }
    [[nodiscard]] const std::vector<Exponents>& basis() const { return basis_; }
    [[nodiscard]] std::size_t dim() const { return basis_.size(); }

    [[nodiscard]] std::optional<std::size_t> index_of(const Exponents& e) const {
        const auto it = index_.find(e);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

private:
    void index_basis() {
        for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
    }

    RingPtr ring_;
    std::pair<unsigned, unsigned> degree_;
    std::vector<Exponents> basis_;
    std::map<Exponents, std::size_t> index_;
};

// ===== Coordinates on a piece ===============================================

/// Coordinates of a (bi)homogeneous polynomial in the piece's basis order.
/// Every term of f must lie in the piece.
template <FieldType K>
[[nodiscard]] std::vector<K> coefficient_vector(const Polynomial<K>& f, const GradedPiece& piece) {
    require_same_ring(f.ring(), piece.ring());
    std::vector<K> v(piece.dim(), K(0));
    for (const auto& [e, c] : f.terms()) {
        const auto idx = piece.index_of(e);
        if (!idx) throw std::invalid_argument("polynomial has a term outside the graded piece");
        v[*idx] = c;
    }
    return v;
}

template <FieldType K>
[[nodiscard]] Polynomial<K> from_coefficient_vector(const GradedPiece& piece,
                                                    const std::vector<K>& v) {
    if (v.size() != piece.dim()) throw std::invalid_argument("coordinate length mismatch");
    Polynomial<K> f(piece.ring());
    for (std::size_t i = 0; i < v.size(); ++i) f.add_term(piece.basis()[i], v[i]);
    return f;
}

/// Rows are the coefficient vectors of the given polynomials; row-reduce to
/// get the span inside the piece.
template <FieldType K>
[[nodiscard]] Matrix<K> span_matrix(const std::vector<Polynomial<K>>& polys,
                                    const GradedPiece& piece) {
    Matrix<K> m(0, piece.dim());
    for (const auto& f : polys) m.push_row(coefficient_vector(f, piece));
    return m;
}

} // namespace superfat::polyring
