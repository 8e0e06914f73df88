#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

namespace superfat::polyring {

/// A monomial is its exponent vector; the owning ring supplies names.
using Exponents = std::vector<unsigned>;

[[nodiscard]] inline unsigned total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0u);
}

[[nodiscard]] inline bool divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

[[nodiscard]] inline Exponents exponent_sum(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

/// b / a; requires divides(a, b).
[[nodiscard]] inline Exponents exponent_quotient(const Exponents& b, const Exponents& a) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[i] - a[i];
    return r;
}

[[nodiscard]] inline Exponents exponent_lcm(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

[[nodiscard]] inline bool coprime(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

// ===== Monomial orders ======================================================

/// a < b in graded reverse lexicographic order (earlier variables are larger;
/// 1 is the minimum).
[[nodiscard]] inline bool grevlex_less(const Exponents& a, const Exponents& b) {
    const unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i]; // last differing exponent larger => smaller
    return false;
}

/// a < b in pure lexicographic order.
[[nodiscard]] inline bool lex_less(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

/// Total order on monomials used by the Groebner machinery.  block_elim(k)
/// compares the first k variables grevlex first and is an elimination order
/// for them.
class MonomialOrder {
public:
    [[nodiscard]] static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
    [[nodiscard]] static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
    [[nodiscard]] static MonomialOrder block_elim(std::size_t first_block) {
        return MonomialOrder(Kind::BlockElim, first_block);
    }

    [[nodiscard]] bool less(const Exponents& a, const Exponents& b) const {
        switch (kind_) {
            case Kind::Grevlex: return grevlex_less(a, b);
            case Kind::Lex: return lex_less(a, b);
            case Kind::BlockElim: {
                const Exponents ha(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(block_));
                const Exponents hb(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(block_));
                if (ha != hb) return grevlex_less(ha, hb);
                const Exponents ta(a.begin() + static_cast<std::ptrdiff_t>(block_), a.end());
                const Exponents tb(b.begin() + static_cast<std::ptrdiff_t>(block_), b.end());
                return grevlex_less(ta, tb);
            }
        }
        return false;
    }

    [[nodiscard]] bool greater(const Exponents& a, const Exponents& b) const { return less(b, a); }

    [[nodiscard]] bool operator==(const MonomialOrder& other) const {
        return kind_ == other.kind_ && block_ == other.block_;
    }

private:
    enum class Kind { Grevlex, Lex, BlockElim };
    MonomialOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}
    Kind kind_;
    std::size_t block_;
};

} // namespace superfat::polyring
