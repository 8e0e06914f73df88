// Acceptance gate: fourteen end-to-end checks of the library's headline
// results, each printed as a single pass/fail line with its time budget.
// Exits 0 only when every criterion passes inside its budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "superfat/superfat.hpp"

using namespace superfat;
using namespace superfat::exactcore;
using namespace superfat::polyring;

using QPoly = Polynomial<Rational>;
using QIdeal = Ideal<Rational>;
using FpPoly = Polynomial<Fp>;
using FpIdeal = Ideal<Fp>;

namespace {

int failures = 0;

void check(int number, const std::string& name, long budget_ms,
           const std::function<bool()>& body) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string("  [threw: ") + e.what() + "]";
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    const bool in_budget = ms <= budget_ms;
    if (!ok || !in_budget) ++failures;
    std::printf("[%2d/14] %s  %-52s (%5ld ms <= %ld ms)%s\n", number,
                ok && in_budget ? "PASS" : "FAIL", name.c_str(), ms, budget_ms,
                note.c_str());
    std::fflush(stdout);
}

[[nodiscard]] std::size_t binomial(std::size_t a, std::size_t b) {
    if (b > a) return 0;
    std::size_t r = 1;
    for (std::size_t k = 1; k <= b; ++k) r = r * (a - b + k) / k;
    return r;
}

[[nodiscard]] std::size_t int_pow(std::size_t base, std::size_t e) {
    std::size_t r = 1;
    while (e-- > 0) r *= base;
    return r;
}

template <FieldType K>
[[nodiscard]] bool same_matrix(const Matrix<K>& a, const Matrix<K>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!(a.at(i, j) == b.at(i, j))) return false;
    return true;
}

template <FieldType K>
[[nodiscard]] bool same_span(const std::vector<Polynomial<K>>& a,
                             const std::vector<Polynomial<K>>& b, const GradedPiece& piece) {
    return same_matrix(exactcore::row_space(span_matrix(a, piece)),
                       exactcore::row_space(span_matrix(b, piece)));
}

/// Unitriangular shear of the coordinate forms: always independent.
template <FieldType K>
[[nodiscard]] std::vector<Polynomial<K>> sheared_forms(const RingPtr& ring, Rng& rng) {
    const std::size_t n = ring->nvars();
    std::vector<Polynomial<K>> forms;
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial<K> l = Polynomial<K>::variable(ring, i);
        for (std::size_t j = i + 1; j < n; ++j)
            l = l + Polynomial<K>::variable(ring, j) * random_scalar<K>(rng, 7);
        forms.push_back(l);
    }
    return forms;
}

template <FieldType K>
[[nodiscard]] Ideal<K> maximal_power(const RingPtr& ring, unsigned m) {
    const GradedPiece piece(ring, m);
    std::vector<Polynomial<K>> gens;
    for (const auto& e : piece.basis())
        gens.push_back(Polynomial<K>::monomial(ring, e, K(1)));
    return Ideal<K>(ring, gens);
}

QPoly q_monomial(const RingPtr& ring, Exponents e) {
    return QPoly::monomial(ring, std::move(e), Rational(1));
}

// ===== 1: power-length laws =================================================

bool powers_and_fat_points() {
    const std::vector<std::vector<std::string>> var_sets = {{"x"}, {"x", "y"}, {"x", "y", "z"}};
    Rng rng(101);
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto ring = PolyRing::standard(var_sets[n - 1]);
        for (unsigned m = 1; m <= 4; ++m) {
            if (n == 3) {
                const auto forms = sheared_forms<Fp>(ring, rng);
                const auto info = groebner::quotient_info(zerodim::hypercube_ideal(forms, m));
                if (!info.dimension || *info.dimension != int_pow(m, n)) return false;
            } else {
                const auto forms = sheared_forms<Rational>(ring, rng);
                const auto info = groebner::quotient_info(zerodim::hypercube_ideal(forms, m));
                if (!info.dimension || *info.dimension != int_pow(m, n)) return false;
            }
        }
        for (unsigned m = 1; m <= 5; ++m) {
            const auto info = groebner::quotient_info(maximal_power<Rational>(ring, m));
            if (!info.dimension || *info.dimension != binomial(m + n - 1, n)) return false;
        }
    }
    return true;
}

// ===== 2: symmetry classification ===========================================

bool symmetry_classification() {
    const auto R2 = PolyRing::standard({"x", "y"});
    const auto square = zerodim::symmetry_degree(
        ioparse::parse_ideal<Rational>("[x^2, y^2]", R2));
    if (!(square.symmetric && square.m == 2 && square.length == 4 && square.superfat))
        return false;

    const auto eight = zerodim::symmetry_degree(
        ioparse::parse_ideal<Rational>("[x^3, y^3, x^2*y^2]", R2));
    if (!(eight.symmetric && eight.m == 3 && eight.length == 8 && !eight.superfat))
        return false;

    const auto nine = zerodim::symmetry_degree(ioparse::parse_ideal<Rational>(
        "[(x - y)^3, y^3 + x^2*y^2, x*y^3, y^4]", R2));
    if (!(nine.symmetric && nine.m == 3 && nine.length == 9 && nine.superfat)) return false;

    const auto R3 = PolyRing::standard({"x", "y", "z"});
    const auto projective = ioparse::parse_ideal<Rational>(
        "[(x - y)^3, y^3*z + x^2*y^2, x*y^3, y^4]", R3);
    const std::map<unsigned, std::size_t> expect = {{3, 1}, {4, 3}};
    if (groebner::minimal_generator_degrees(projective) != expect) return false;

    const auto five = zerodim::symmetry_degree(
        ioparse::parse_ideal<Rational>("[x^2 + y^2, x^3, x^2*y]", R2));
    return !five.symmetric && five.length == 5;
}

// ===== 3: line-by-line cross-validation =====================================

bool random_lines_agree() {
    const auto R = PolyRing::standard({"x", "y"});
    const std::vector<std::pair<std::string, unsigned>> symmetric_cases = {
        {"[x^2, y^2]", 2},
        {"[x^3, y^3, x^2*y^2]", 3},
        {"[(x - y)^3, y^3 + x^2*y^2, x*y^3, y^4]", 3},
    };
    Rng rng(301);
    for (const auto& [text, m] : symmetric_cases) {
        const auto ideal = ioparse::parse_ideal<Rational>(text, R);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<Rational> a = {random_scalar<Rational>(rng, 40),
                                       random_scalar<Rational>(rng, 40)};
            if (a[0].is_zero() && a[1].is_zero()) a[0] = Rational(1);
            if (zerodim::line_intersection_length(ideal, a) != m) return false;
        }
    }
    const auto deviant = ioparse::parse_ideal<GaussianRational>("[x^2 + y^2, x^3, x^2*y]", R);
    const GaussianRational one(1), i(Rational(0), Rational(1));
    return zerodim::line_intersection_length(deviant, {one, i}) == 3 &&
           zerodim::line_intersection_length(deviant, {one, -i}) == 3;
}

// ===== 4: superfat hulls ====================================================

bool hulls_certify() {
    const auto R = PolyRing::standard({"x", "y"});
    const std::vector<std::string> inputs = {"[x^2, x*y, y^2]", "[x^3, x^2*y, x*y^2, y^3]",
                                             "[x^3, y^3, x^2*y^2]"};
    for (const auto& text : inputs) {
        const auto ideal = ioparse::parse_ideal<Rational>(text, R);
        const unsigned m = zerodim::symmetry_degree(ideal).m;
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const auto hull = zerodim::superfat_hull(ideal, seed);
            if (!groebner::ideal_contains(ideal, hull)) return false;
            const auto report = zerodim::symmetry_degree(hull);
            if (!(report.superfat && report.m == m && report.length == m * m)) return false;
        }
    }
    return true;
}

// ===== 5: square unions =====================================================

bool unions_hold() {
    for (unsigned m = 1; m <= 5; ++m) {
        const auto report = zerodim::union_of_squares_check<Rational>(m);
        if (!report.fat_point_inside_each || !report.no_form_in_critical_degree) return false;
        if (m <= 3 && !(report.elimination_matches && *report.elimination_matches))
            return false;
    }
    return true;
}

// ===== 6: binomial identity =================================================

bool binomials_vanish() {
    for (unsigned m = 1; m <= 30; ++m)
        for (unsigned i = 1; i <= 30; ++i)
            if (!(zerodim::binomial_identity(m, i) == BigInt(0))) return false;
    return true;
}

// ===== 7: perpendicular union ===============================================

bool perpendicular_union() { return zerodim::perpendicular_union_check<Rational>().passed(); }

// ===== 8: annihilator bases =================================================

bool perp_bases_match() {
    const auto R = PolyRing::standard({"x0", "x1", "x2"});
    const auto square = ioparse::parse_ideal<Rational>("[x0^2, x1^2]", R);
    {
        const GradedPiece piece(R, 4);
        const auto space = apolarity::perp_space(square, piece);
        const std::vector<QPoly> expected = {
            q_monomial(R, {0, 0, 4}), q_monomial(R, {1, 0, 3}),
            q_monomial(R, {0, 1, 3}), q_monomial(R, {1, 1, 2})};
        if (space.dim() != 4 || !same_span(space.basis, expected, piece)) return false;
    }
    {
        const auto osculating = ioparse::parse_ideal<Rational>("[x1^2, x0*x1, x0^3]", R);
        const GradedPiece piece(R, 4);
        const auto space = apolarity::perp_space(osculating, piece);
        const std::vector<QPoly> expected = {
            q_monomial(R, {0, 0, 4}), q_monomial(R, {1, 0, 3}),
            q_monomial(R, {0, 1, 3}), q_monomial(R, {2, 0, 2})};
        if (space.dim() != 4 || !same_span(space.basis, expected, piece)) return false;
    }
    {
        const auto S = PolyRing::bigraded({"s0", "s1"}, {"t0", "t1"});
        const auto pair = ioparse::parse_ideal<Rational>("[s0^2, t0^2]", S);
        const GradedPiece piece(S, 2, 2);
        const auto space = apolarity::perp_space(pair, piece);
        const std::vector<QPoly> expected = {
            ioparse::parse_polynomial<Rational>("s0*s1*t0*t1", S),
            ioparse::parse_polynomial<Rational>("s0*s1*t1^2", S),
            ioparse::parse_polynomial<Rational>("s1^2*t0*t1", S),
            ioparse::parse_polynomial<Rational>("s1^2*t1^2", S)};
        if (space.dim() != 4 || !same_span(space.basis, expected, piece)) return false;
    }
    return true;
}

// ===== 9: catalecticant pattern =============================================

bool catalecticant_pattern() {
    const auto R = PolyRing::standard({"x0", "x1", "x2"});
    const auto x0 = QPoly::variable(R, std::size_t{0});
    const auto x1 = QPoly::variable(R, std::size_t{1});
    const auto x2 = QPoly::variable(R, std::size_t{2});
    const Rational a0(2), a1(3), a2(5), a3(7);
    const QPoly f =
        x2 * x2 * (x2 * x2 * a2 + x2 * x1 * a1 + x2 * x0 * a0 + x1 * x0 * a3);
    const auto cat = apolarity::catalecticant(f, 2);
    if (cat.matrix.rows() != 6 || cat.matrix.cols() != 6 || cat.rank() != 4) return false;
    std::map<std::pair<std::size_t, std::size_t>, Rational> nonzero;
    nonzero[{5, 5}] = Rational(24) * a2;
    nonzero[{4, 5}] = nonzero[{5, 4}] = Rational(6) * a1;
    nonzero[{3, 5}] = nonzero[{5, 3}] = Rational(6) * a0;
    nonzero[{1, 5}] = nonzero[{5, 1}] = Rational(2) * a3;
    nonzero[{3, 4}] = nonzero[{4, 3}] = Rational(2) * a3;
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            const auto hit = nonzero.find({i, j});
            const Rational want = hit == nonzero.end() ? Rational(0) : hit->second;
            if (!(cat.matrix.at(i, j) == want)) return false;
        }
    const auto osculating = ioparse::parse_ideal<Rational>("[x1^2, x0*x1, x0^3]", R);
    for (unsigned d = 3; d <= 8; ++d) {
        const GradedPiece piece(R, d);
        const auto space = apolarity::perp_space(osculating, piece);
        const std::vector<QPoly> expected = {
            q_monomial(R, {0, 0, d}), q_monomial(R, {1, 0, d - 1}),
            q_monomial(R, {0, 1, d - 1}), q_monomial(R, {2, 0, d - 2})};
        if (space.dim() != 4 || !same_span(space.basis, expected, piece)) return false;
    }
    return true;
}

// ===== 10: chord dimensions =================================================

bool chord_dimensions() {
    Fp::set_modulus(32003);
    const std::uint64_t seed = 424242;
    const auto pinned = [&](const secants::ParamMap<Fp>& map, unsigned s, std::size_t want) {
        const auto est = secants::secant_dimension(map, s, seed, 3);
        return est.unanimous() && est.projective_dimension == want;
    };
    for (unsigned d = 4; d <= 6; ++d)
        if (!pinned(secants::tau2<Fp>(d), 1, 7)) return false;
    for (unsigned d = 3; d <= 8; ++d)
        if (!secants::fill_degree_check<Fp>(d, seed + d, 3).verified) return false;

    const auto q22 = secants::q2<Fp>(2);
    if (!pinned(q22, 2, 8)) return false;
    Rng rng(777);
    const auto random_point = [&rng](std::size_t n) {
        std::vector<Fp> p;
        for (std::size_t j = 0; j < n; ++j) p.push_back(random_nonzero_scalar<Fp>(rng, 50));
        return p;
    };
    const auto w1 = secants::tangent_span(q22, random_point(q22.nparams));
    const auto w2 = secants::tangent_span(q22, random_point(q22.nparams));
    if (w1.affine_dimension() != 6 || w2.affine_dimension() != 6) return false;
    if (exactcore::subspace_intersection(w1.span, w2.span).rows() != 3) return false;

    for (unsigned d = 3; d <= 5; ++d)
        if (!pinned(secants::q2<Fp>(d), 2, 11)) return false;
    if (!pinned(secants::qq2<Fp>(2), 2, 7)) return false;
    for (unsigned d = 3; d <= 5; ++d)
        if (!pinned(secants::qq2<Fp>(d), 2, 9)) return false;

    // Repeated left factor (m_s = n_s): the tangent rank drops below 5.
    const auto repeated = secants::tangent_span(
        secants::qq2<Fp>(3),
        {Fp(1), Fp(2), Fp(1), Fp(2), Fp(3), Fp(4), Fp(5), Fp(6)});
    return repeated.affine_dimension() < 5;
}

// ===== 11: product-state membership =========================================

bool product_states_in_span() {
    const auto S = PolyRing::bigraded({"s0", "s1"}, {"t0", "t1"});
    const auto s0 = Polynomial<Rational>::variable(S, std::size_t{0});
    const auto s1 = Polynomial<Rational>::variable(S, std::size_t{1});
    const auto t0 = Polynomial<Rational>::variable(S, std::size_t{2});
    const auto t1 = Polynomial<Rational>::variable(S, std::size_t{3});
    const auto squares = ioparse::parse_ideal<Rational>("[s1^2, t1^2]", S);
    for (unsigned d = 2; d <= 5; ++d) {
        const auto space = apolarity::perp_space(squares, GradedPiece(S, d, d));
        if (space.dim() != 4) return false;
        const QPoly w = s0.pow(d - 1) * s1 * t0.pow(d - 1) * t1;
        if (!apolarity::span_membership(w, space)) return false;
    }
    return true;
}

// ===== 12: generic square interpolation =====================================

bool square_interpolation() {
    for (unsigned s = 1; s <= 7; ++s)
        for (std::uint64_t seed = 201; seed <= 205; ++seed) {
            const auto profile = experiments::generic_square_hilbert<Rational>(s, 0, 8, seed);
            if (!profile.all_match()) return false;
            for (std::size_t t = 0; t < profile.values.size(); ++t) {
                const std::size_t want =
                    std::min<std::size_t>(4 * s, binomial(t + 2, 2));
                if (profile.values[t] != want) return false;
            }
            if (s == 7 && profile.values[6] != 28) return false; // no sextic survives
        }
    return true;
}

// ===== 13: normal-form recovery =============================================

bool normal_forms_recover() {
    Fp::set_modulus(32003);
    const auto R = PolyRing::standard({"x", "y"});
    const auto x = FpPoly::variable(R, std::size_t{0});
    const auto y = FpPoly::variable(R, std::size_t{1});
    Rng rng(1313);
    for (int trial = 0; trial < 20; ++trial) {
        FpPoly l1(R), l2(R);
        do {
            l1 = x * random_scalar<Fp>(rng) + y * random_scalar<Fp>(rng);
            l2 = x * random_scalar<Fp>(rng) + y * random_scalar<Fp>(rng);
        } while (groebner::quotient_info(FpIdeal(R, {l1, l2})).dimension != 1);
        const FpIdeal input(R, {l1 * l1, l2 * l2});
        const auto res = zerodim::two_superfat_square_form(input);
        if (!res.forms) return false;
        const FpIdeal rebuilt(
            R, {res.forms->first * res.forms->first, res.forms->second * res.forms->second});
        if (!groebner::ideal_equal(input, rebuilt)) return false;
    }

    const auto T = PolyRing::standard({"x0", "x1", "x2"});
    const std::vector<FpPoly> ells = {FpPoly::variable(T, std::size_t{0}),
                                      FpPoly::variable(T, std::size_t{1}),
                                      FpPoly::variable(T, std::size_t{2})};
    for (int trial = 0; trial < 20; ++trial) {
        const Fp a0 = random_nonzero_scalar<Fp>(rng);
        const Fp a1 = random_scalar<Fp>(rng), a2 = random_scalar<Fp>(rng);
        const std::array<Fp, 4> a = {a0, a1, a2, a1 * a2 / a0};
        const unsigned d = 3 + static_cast<unsigned>(trial % 4);
        const auto mono = apolarity::qq_monomialize(a, ells, d);
        if (!(mono.x0.pow(d - 2) * mono.x1 * mono.x2 == mono.form * mono.scale))
            return false;
    }
    return true;
}

// ===== 14: smoothing families ===============================================

bool smoothing_families() {
    const std::vector<std::pair<unsigned, std::size_t>> cases = {{2, 2}, {3, 2}, {2, 3}};
    for (const auto& [m, n] : cases) {
        const auto family = zerodim::smoothing_family<Rational>(m, n, Rational(1));
        const auto info = groebner::quotient_info(family);
        if (!info.dimension || *info.dimension != int_pow(m, n)) return false;

        // The m^n grid points are pairwise distinct common zeros, so together
        // with the length count the fiber is reduced.
        std::vector<std::vector<Rational>> points(1);
        points[0] = std::vector<Rational>(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::vector<Rational>> extended;
            for (const auto& p : points)
                for (unsigned j = 0; j < m; ++j) {
                    auto q = p;
                    q[i] = Rational(-static_cast<long long>(j));
                    extended.push_back(q);
                }
            points = extended;
        }
        if (points.size() != int_pow(m, n)) return false;
        for (const auto& p : points)
            for (const auto& g : family.generators)
                if (!evaluate(g, p).is_zero()) return false;

        // Every coefficient below the pure power carries a positive power of
        // t, witnessed by exact geometric scaling from t = 1 to t = 1/2.
        const auto at_half = zerodim::smoothing_family<Rational>(m, n, Rational(1, 2));
        for (std::size_t i = 0; i < n; ++i) {
            const QPoly &f1 = family.generators[i], &fh = at_half.generators[i];
            Exponents lead(n, 0);
            lead[i] = m;
            if (!(f1.coefficient(lead) == Rational(1)) ||
                !(fh.coefficient(lead) == Rational(1)))
                return false;
            for (const auto& [e, c] : f1.terms()) {
                if (e == lead) continue;
                Rational scale(1);
                for (unsigned k = e[i]; k < m; ++k) scale = scale * Rational(1, 2);
                if (!(fh.coefficient(e) == c * scale)) return false;
            }
        }
    }
    return true;
}

} // namespace

int main() {
    std::printf("superfat acceptance gate\n");
    check(1, "power and fat-point length laws", 5000, powers_and_fat_points);
    check(2, "symmetry classification quadruple", 10000, symmetry_classification);
    check(3, "200 random lines per symmetric scheme", 10000, random_lines_agree);
    check(4, "superfat hulls over five seeds", 20000, hulls_certify);
    check(5, "square unions cut the fat point", 30000, unions_hold);
    check(6, "binomial identity on the 30x30 grid", 1000, binomials_vanish);
    check(7, "perpendicular union is the length-5 scheme", 2000, perpendicular_union);
    check(8, "annihilator bases match the displayed monomials", 2000, perp_bases_match);
    check(9, "catalecticant pattern and osculating annihilator", 5000, catalecticant_pattern);
    check(10, "chord dimensions with unanimous trials", 60000, chord_dimensions);
    check(11, "product states lie in the square span", 5000, product_states_in_span);
    check(12, "generic square interpolation, seven points", 60000, square_interpolation);
    check(13, "normal-form recovery on random samples", 20000, normal_forms_recover);
    check(14, "smoothing families of grid points", 10000, smoothing_families);
    if (failures == 0) {
        std::printf("all 14 criteria passed\n");
        return 0;
    }
    std::printf("%d criteria failed\n", failures);
    return 1;
}
