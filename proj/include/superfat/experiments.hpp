#pragma once

#include <chrono>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "rng.hpp"
#include "secants.hpp"
#include "zerodim.hpp"

namespace superfat::experiments {

using exactcore::FieldType;
using exactcore::Matrix;
using polyring::GradedPiece;
using polyring::Ideal;
using polyring::Polynomial;
using polyring::PolyRing;
using polyring::RingPtr;

// ===== Field labels =========================================================

template <FieldType K>
[[nodiscard]] std::string field_label() {
    if constexpr (std::is_same_v<K, exactcore::Rational>) return "QQ";
    if constexpr (std::is_same_v<K, exactcore::GaussianRational>) return "QQ(i)";
    if constexpr (std::is_same_v<K, exactcore::Fp>)
        return "GF(" + std::to_string(exactcore::Fp::modulus()) + ")";
    return "unknown field";
}

// ===== Hilbert-function profiles ============================================

/// A measured Hilbert function next to its conjectured or known values.
struct HFProfile {
    std::string descriptor;
    std::string field;
    std::vector<unsigned> degrees;
    std::vector<std::size_t> values;   ///< H(Z, t), exact
    std::vector<std::size_t> expected; ///< target values for the verdicts
    std::vector<bool> matches;

    [[nodiscard]] bool all_match() const {
        for (const bool b : matches)
            if (!b) return false;
        return !matches.empty();
    }

    [[nodiscard]] std::size_t total() const {
        return std::accumulate(values.begin(), values.end(), std::size_t{0});
    }
};

namespace detail {

/// Homogenization by the total degree: exponents gain a final slack variable.
template <FieldType K>
[[nodiscard]] Polynomial<K> homogenize(const Polynomial<K>& f, const RingPtr& target) {
    if (f.is_zero()) return Polynomial<K>(target);
    const auto d = static_cast<unsigned>(f.total_degree());
    Polynomial<K> out(target);
    for (const auto& [e, c] : f.terms()) {
        polyring::Exponents lifted = e;
        unsigned used = 0;
        for (const unsigned k : e) used += k;
        lifted.push_back(d - used);
        out += Polynomial<K>::monomial(target, lifted, c);
    }
    return out;
}

/// A random linear form through the given plane point, drawn from the
/// 2-dimensional space of such forms.
template <FieldType K>
[[nodiscard]] std::vector<K> line_through(const std::vector<K>& point, Rng& rng) {
    Matrix<K> evaluation(1, 3);
    for (std::size_t j = 0; j < 3; ++j) evaluation.at(0, j) = point[j];
    const Matrix<K> kernel = exactcore::kernel_basis(evaluation);
    for (;;) {
        const K a = exactcore::random_scalar<K>(rng, 50);
        const K b = exactcore::random_scalar<K>(rng, 50);
        if (a.is_zero() && b.is_zero()) continue;
        std::vector<K> line(3, K(0));
        for (std::size_t j = 0; j < 3; ++j)
            line[j] = a * kernel.at(0, j) + b * kernel.at(1, j);
        return line;
    }
}

template <FieldType K>
[[nodiscard]] bool independent_pair(const std::vector<K>& u, const std::vector<K>& v) {
    Matrix<K> m(0, u.size());
    m.push_row(u);
    m.push_row(v);
    return exactcore::rank(m) == 2;
}

} // namespace detail

/// Hilbert function of s random plane points each doubled along two random
/// lines through it, against the count min{4s, dim R_t}.  A match certifies
/// the generic value from below; a shortfall is recorded, never asserted
/// away.
template <FieldType K>
[[nodiscard]] HFProfile generic_square_hilbert(unsigned s, unsigned t_lo, unsigned t_hi,
                                               std::uint64_t seed) {
    if (s == 0) throw std::invalid_argument("at least one point required");
    if (t_hi < t_lo) throw std::invalid_argument("empty degree range");
    const RingPtr ring = PolyRing::standard({"x", "y", "z"});
    Rng rng(seed);

    std::vector<Ideal<K>> squares;
    const GradedPiece lines(ring, 1);
    for (unsigned i = 0; i < s; ++i) {
        std::vector<K> point(3, K(0));
        while (point[0].is_zero() && point[1].is_zero() && point[2].is_zero())
            for (auto& c : point) c = exactcore::random_scalar<K>(rng, 50);
        std::vector<K> first = detail::line_through<K>(point, rng);
        std::vector<K> second = detail::line_through<K>(point, rng);
        while (!detail::independent_pair(first, second))
            second = detail::line_through<K>(point, rng);
        const Polynomial<K> l1 = from_coefficient_vector(lines, first);
        const Polynomial<K> l2 = from_coefficient_vector(lines, second);
        squares.push_back(Ideal<K>(ring, {l1 * l1, l2 * l2}));
    }

    HFProfile profile;
    profile.descriptor = std::to_string(s) + " generic 2-square points in the plane";
    profile.field = field_label<K>();
    for (unsigned t = t_lo; t <= t_hi; ++t) {
        const GradedPiece piece(ring, t);
        const std::size_t cut = groebner::truncated_intersection(squares, piece).rows();
        const std::size_t h = piece.dim() - cut;
        profile.degrees.push_back(t);
        profile.values.push_back(h);
        profile.expected.push_back(std::min<std::size_t>(4 * std::size_t{s}, piece.dim()));
        profile.matches.push_back(h == profile.expected.back());
    }
    return profile;
}

// ===== Search for maximal superfat Hilbert functions ========================

struct SuperfatSearchReport {
    unsigned m = 0;
    unsigned trials = 0;
    unsigned attained = 0; ///< trials whose profile met the maximal values everywhere
    HFProfile best;        ///< largest total found

    [[nodiscard]] bool any_attained() const { return attained > 0; }
};

namespace detail {

/// A random affine curve of order exactly m at the origin (terms of degrees
/// m and m + 1).
template <FieldType K>
[[nodiscard]] Polynomial<K> order_m_curve(const RingPtr& ring, unsigned m, Rng& rng) {
    for (;;) {
        Polynomial<K> f(ring);
        for (unsigned d = m; d <= m + 1; ++d) {
            const GradedPiece piece(ring, d);
            for (const auto& e : piece.basis())
                f += Polynomial<K>::monomial(ring, e, exactcore::random_scalar<K>(rng, 50));
        }
        if (!homogeneous_component(f, m).is_zero()) return f;
    }
}

} // namespace detail

/// Samples local complete intersections of two random order-m curves with
/// independent tangent directions (each is m-superfat of length m^2),
/// homogenizes the component at the origin, and compares every Hilbert
/// function to the maximal candidate min{dim R_t, m^2}.  The outcome is
/// evidence, not a theorem: the report counts how many trials attained the
/// maximum.
template <FieldType K>
[[nodiscard]] SuperfatSearchReport superfat_hf_search(unsigned m, unsigned trials,
                                                      std::uint64_t seed) {
    if (m < 2) throw std::invalid_argument("superfat search needs m >= 2");
    if (trials == 0) throw std::invalid_argument("at least one trial required");
    const RingPtr affine = PolyRing::standard({"x", "y"});
    const RingPtr projective = PolyRing::standard({"x", "y", "z"});
    const std::size_t length = std::size_t{m} * m;

    SuperfatSearchReport report;
    report.m = m;
    report.trials = trials;
    for (unsigned trial = 0; trial < trials; ++trial) {
        Rng rng(seed * 1000003ULL + trial);
        Ideal<K> local(affine, {});
        for (int attempt = 0;; ++attempt) {
            if (attempt >= 20) throw std::runtime_error("no superfat sample found");
            const Polynomial<K> f = detail::order_m_curve<K>(affine, m, rng);
            const Polynomial<K> g = detail::order_m_curve<K>(affine, m, rng);
            const Ideal<K> cones(affine,
                                 {homogeneous_component(f, m), homogeneous_component(g, m)});
            if (!groebner::quotient_info(cones).finite()) continue;
            const Ideal<K> candidate(affine, {f, g});
            const auto symmetry = zerodim::symmetry_degree(candidate);
            if (!symmetry.superfat || symmetry.m != m || symmetry.length != length) continue;
            local = zerodim::local_component(candidate);
            break;
        }

        std::vector<Polynomial<K>> forms;
        for (const auto& g : local.generators)
            forms.push_back(detail::homogenize(g, projective));
        const Ideal<K> closure(projective, forms);

        HFProfile profile;
        profile.descriptor = "order-" + std::to_string(m) +
                             " local complete intersection, homogenized";
        profile.field = field_label<K>();
        for (unsigned t = 0; t <= 2 * m; ++t) {
            const GradedPiece piece(projective, t);
            const std::size_t h =
                piece.dim() - groebner::truncated_ideal_piece(closure, piece).rows();
            profile.degrees.push_back(t);
            profile.values.push_back(h);
            profile.expected.push_back(std::min(piece.dim(), length));
            profile.matches.push_back(h == profile.expected.back());
        }
        if (profile.all_match()) ++report.attained;
        if (report.best.values.empty() || profile.total() > report.best.total())
            report.best = profile;
    }
    return report;
}

// ===== Parameter sweeps =====================================================

enum class SweepKind { Union, Binomial, Fill, Secant };

struct SweepRow {
    std::string label;
    bool pass = false;
    std::uint64_t seed = 0;
    double milliseconds = 0.0;
    std::string detail;
};

struct SweepTable {
    std::string kind;
    std::vector<SweepRow> rows;

    [[nodiscard]] bool all_pass() const {
        for (const auto& r : rows)
            if (!r.pass) return false;
        return !rows.empty();
    }
};

/// Desk-scale campaign over one integer range.  Union: the 2m-1 squares story
/// for each m.  Binomial: the alternating identity over the whole grid up to
/// the bound.  Fill: chord counts of the osculating family.  Secant: second
/// chords of the bilinear family against the pinned dimensions.
template <FieldType K>
[[nodiscard]] SweepTable sweep(SweepKind kind, unsigned lo, unsigned hi, std::uint64_t seed) {
    if (lo == 0 || hi < lo) throw std::invalid_argument("bad sweep range");
    SweepTable table;
    const auto timed = [](auto&& body) {
        const auto start = std::chrono::steady_clock::now();
        body();
        const auto stop = std::chrono::steady_clock::now();
        return std::chrono::duration<double, std::milli>(stop - start).count();
    };

    switch (kind) {
    case SweepKind::Union: {
        table.kind = "union";
        if (hi > 5) throw std::invalid_argument("union sweep supports m <= 5");
        for (unsigned m = lo; m <= hi; ++m) {
            SweepRow row;
            row.label = "m=" + std::to_string(m);
            row.seed = seed;
            row.milliseconds = timed([&] {
                const auto r = zerodim::union_of_squares_check<K>(m);
                const bool elimination = !r.elimination_matches || *r.elimination_matches;
                row.pass = r.fat_point_inside_each && r.no_form_in_critical_degree &&
                           elimination;
                row.detail = "no form in degree " + std::to_string(2 * m - 2);
            });
            table.rows.push_back(row);
        }
        break;
    }
    case SweepKind::Binomial: {
        table.kind = "binomial";
        if (hi > 64) throw std::invalid_argument("binomial sweep supports bounds <= 64");
        for (unsigned m = lo; m <= hi; ++m) {
            SweepRow row;
            row.label = "m=" + std::to_string(m);
            row.seed = seed;
            row.milliseconds = timed([&] {
                row.pass = true;
                for (unsigned i = lo; i <= hi; ++i)
                    row.pass = row.pass && zerodim::binomial_identity(m, i) == 0;
                row.detail = "alternating sums vanish for i in " + std::to_string(lo) +
                             ".." + std::to_string(hi);
            });
            table.rows.push_back(row);
        }
        break;
    }
    case SweepKind::Fill: {
        table.kind = "fill";
        if (lo < 3 || hi > 8) throw std::invalid_argument("fill sweep supports 3 <= d <= 8");
        for (unsigned d = lo; d <= hi; ++d) {
            SweepRow row;
            row.label = "d=" + std::to_string(d);
            row.seed = seed * 1000003ULL + d;
            row.milliseconds = timed([&] {
                const auto r = secants::fill_degree_check<K>(d, row.seed);
                row.pass = r.verified;
                row.detail = "fills with s=" + std::to_string(r.s_fill) + " in dim " +
                             std::to_string(r.ambient);
            });
            table.rows.push_back(row);
        }
        break;
    }
    case SweepKind::Secant: {
        table.kind = "secant";
        if (lo < 2 || hi > 8) throw std::invalid_argument("secant sweep supports 2 <= d <= 8");
        for (unsigned d = lo; d <= hi; ++d) {
            SweepRow row;
            row.label = "d=" + std::to_string(d);
            row.seed = seed * 1000003ULL + d;
            row.milliseconds = timed([&] {
                const auto est = secants::secant_dimension(secants::q2<K>(d), 2, row.seed);
                const std::size_t expected = d == 2 ? 8 : 11;
                row.pass = est.projective_dimension == expected;
                row.detail = "dim=" + std::to_string(est.projective_dimension);
            });
            table.rows.push_back(row);
        }
        break;
    }
    }
    return table;
}

} // namespace superfat::experiments
