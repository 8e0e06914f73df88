#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "superfat/parse.hpp"
#include "superfat/rng.hpp"
#include "superfat/zerodim.hpp"

using namespace superfat;
using namespace superfat::exactcore;
using namespace superfat::polyring;
using namespace superfat::groebner;
using namespace superfat::zerodim;

using QPoly = Polynomial<Rational>;
using QIdeal = Ideal<Rational>;

namespace {

struct XY {
    RingPtr R = PolyRing::standard({"x", "y"});
    QPoly x = QPoly::variable(R, 0);
    QPoly y = QPoly::variable(R, 1);
};

QIdeal parse(const RingPtr& ring, std::string_view text) {
    return ioparse::parse_ideal<Rational>(text, ring);
}

/// The running length-8 example: 3-symmetric but one short of superfat.
QIdeal three_symmetric_eight(const XY& r) {
    return QIdeal(r.R, {r.x.pow(3), r.y.pow(3), r.x.pow(2) * r.y.pow(2)});
}

/// The non-symmetric length-5 scheme cut out by two perpendicular squares.
QIdeal perpendicular_five(const XY& r) {
    return QIdeal(r.R, {r.x * r.x + r.y * r.y, r.x.pow(3), r.x * r.x * r.y});
}

GaussianRational imaginary_unit() { return GaussianRational(Rational(0), Rational(1)); }

} // namespace

// ===== Line restrictions ====================================================

TEST(LineLength, SquareMeetsTheDiagonalTwice) {
    XY r;
    const QIdeal I(r.R, {r.x * r.x, r.y * r.y});
    EXPECT_EQ(line_intersection_length(I, {Rational(1), Rational(1)}), 2u);
    EXPECT_EQ(line_intersection_length(I, {Rational(3), Rational(-2)}), 2u);
}

TEST(LineLength, EightSchemeMeetsTheAxisWithLengthThree) {
    XY r;
    EXPECT_EQ(line_intersection_length(three_symmetric_eight(r), {Rational(1), Rational(0)}), 3u);
}

TEST(LineLength, PerpendicularSchemeHasDeviantImaginaryDirections) {
    const RingPtr R = PolyRing::standard({"x", "y"});
    const auto I = ioparse::parse_ideal<GaussianRational>("[x^2 + y^2, x^3, x^2*y]", R);
    // Generic directions see length 2; the isotropic lines x +- i*y see 3.
    EXPECT_EQ(line_intersection_length(I, {GaussianRational(1), GaussianRational(1)}), 2u);
    EXPECT_EQ(line_intersection_length(I, {GaussianRational(1), imaginary_unit()}), 3u);
    EXPECT_EQ(line_intersection_length(I, {GaussianRational(1), -imaginary_unit()}), 3u);
}

TEST(LineLength, LineInsideTheSchemeIsInfinite) {
    XY r;
    const QIdeal I(r.R, {r.x});
    EXPECT_FALSE(line_intersection_length(I, {Rational(0), Rational(1)}).has_value());
    EXPECT_EQ(line_intersection_length(I, {Rational(1), Rational(1)}), 1u);
}

TEST(LineLength, RejectsBadDirections) {
    XY r;
    const QIdeal I(r.R, {r.x * r.x, r.y * r.y});
    EXPECT_THROW((void)line_intersection_length(I, {Rational(0), Rational(0)}),
                 std::invalid_argument);
    EXPECT_THROW((void)line_intersection_length(I, {Rational(1)}), std::invalid_argument);
}

// ===== Symmetry decision ====================================================

TEST(SymmetryDegree, SquareIsTwoSuperfat) {
    XY r;
    const auto report = symmetry_degree(QIdeal(r.R, {r.x * r.x, r.y * r.y}));
    EXPECT_TRUE(report.symmetric);
    EXPECT_EQ(report.m, 2u);
    EXPECT_EQ(report.length, 4u);
    EXPECT_TRUE(report.contains_fat_point);
    EXPECT_TRUE(report.superfat);
    EXPECT_FALSE(report.tangent_cone_witness.has_value());
}

TEST(SymmetryDegree, EightSchemeIsSymmetricButNotSuperfat) {
    XY r;
    const auto report = symmetry_degree(three_symmetric_eight(r));
    EXPECT_TRUE(report.symmetric);
    EXPECT_EQ(report.m, 3u);
    EXPECT_EQ(report.length, 8u);
    EXPECT_FALSE(report.superfat); // 8 < 3^2
}

TEST(SymmetryDegree, PerpendicularSchemeFailsWithATangentConeWitness) {
    XY r;
    const auto report = symmetry_degree(perpendicular_five(r));
    EXPECT_FALSE(report.symmetric);
    EXPECT_EQ(report.m, 2u);
    EXPECT_EQ(report.length, 5u);
    EXPECT_FALSE(report.superfat);
    ASSERT_TRUE(report.tangent_cone_witness.has_value());
    // Only the quadric survives in degree 2; its quotient contains every
    // power of x - i*y's real avatar, i.e. is infinite-dimensional.
    const auto& witness = *report.tangent_cone_witness;
    ASSERT_EQ(witness.generators.size(), 1u);
    EXPECT_EQ(witness.generators[0], r.x * r.x + r.y * r.y);
    EXPECT_FALSE(quotient_info(witness).finite());
}

TEST(SymmetryDegree, RejectsDegenerateInputs) {
    XY r;
    EXPECT_THROW((void)symmetry_degree(QIdeal(r.R, {r.x - QPoly::constant(r.R, Rational(1)), r.y})),
                 std::invalid_argument); // supported away from the origin
    EXPECT_THROW((void)symmetry_degree(QIdeal(r.R, {r.x})), std::invalid_argument); // a curve
    EXPECT_THROW((void)symmetry_degree(QIdeal(r.R, {})), std::invalid_argument);    // zero ideal
}

// ===== Local lengths ========================================================

TEST(LengthAtOrigin, OriginPrimaryIdealIsItsOwnLocalization) {
    XY r;
    EXPECT_EQ(length_at_origin(QIdeal(r.R, {r.x * r.x, r.y * r.y})), 4u);
    EXPECT_TRUE(ideal_equal(local_component(QIdeal(r.R, {r.x * r.x, r.y * r.y})),
                            QIdeal(r.R, {r.x * r.x, r.y * r.y})));
}

TEST(LengthAtOrigin, DiscardsTheComponentAwayFromTheOrigin) {
    XY r;
    const QIdeal I = parse(r.R, "[x^2 - x, y]"); // simple points at x = 0 and x = 1
    EXPECT_EQ(length_at_origin(I), 1u);
    EXPECT_TRUE(ideal_equal(local_component(I), QIdeal(r.R, {r.x, r.y})));
}

TEST(LengthAtOrigin, CubicQuarticIntersectionHasLocalLengthNine) {
    XY r;
    // Total intersection length is 12 by Bezout; 3 sits at (-1, -1).
    const QIdeal I = parse(r.R, "[(x - y)^3, y^3 + x^2*y^2]");
    EXPECT_EQ(length_at_origin(I), 9u);
}

TEST(LocalComponent, CubicQuarticLocalizationMatchesTheFourGeneratorIdeal) {
    XY r;
    const QIdeal two = parse(r.R, "[(x - y)^3, y^3 + x^2*y^2]");
    const QIdeal four = parse(r.R, "[(x - y)^3, y^3 + x^2*y^2, x*y^3, y^4]");
    EXPECT_EQ(*quotient_info(four).dimension, 9u);
    EXPECT_TRUE(ideal_equal(local_component(two), four));
}

// ===== Hypercubes ===========================================================

TEST(Hypercube, AxisCubeInTwoVariables) {
    XY r;
    const QIdeal I = hypercube_ideal<Rational>({r.x, r.y}, 3);
    EXPECT_TRUE(ideal_equal(I, QIdeal(r.R, {r.x.pow(3), r.y.pow(3)})));
    const auto report = symmetry_degree(I);
    EXPECT_TRUE(report.superfat);
    EXPECT_EQ(report.m, 3u);
    EXPECT_EQ(report.length, 9u);
}

TEST(Hypercube, ShearedSquareStillHasLengthFour) {
    XY r;
    const auto report = symmetry_degree(hypercube_ideal<Rational>({r.x, r.x + r.y}, 2));
    EXPECT_TRUE(report.symmetric);
    EXPECT_EQ(report.m, 2u);
    EXPECT_EQ(report.length, 4u);
}

TEST(Hypercube, ThreeVariableCubeHasLengthEight) {
    const RingPtr R = PolyRing::standard({"x", "y", "z"});
    std::vector<QPoly> axes;
    for (std::size_t i = 0; i < 3; ++i) axes.push_back(QPoly::variable(R, i));
    const auto report = symmetry_degree(hypercube_ideal<Rational>(axes, 2));
    EXPECT_TRUE(report.superfat);
    EXPECT_EQ(report.length, 8u);
}

TEST(Hypercube, RejectsBadForms) {
    XY r;
    EXPECT_THROW((void)hypercube_ideal<Rational>({r.x, r.x * Rational(2)}, 2),
                 std::invalid_argument); // dependent
    EXPECT_THROW((void)hypercube_ideal<Rational>({r.x}, 2),
                 std::invalid_argument); // one form short
    EXPECT_THROW((void)hypercube_ideal<Rational>({r.x, r.y * r.y}, 2),
                 std::invalid_argument); // not linear
    EXPECT_THROW((void)hypercube_ideal<Rational>({r.x, r.y}, 0),
                 std::invalid_argument); // zero exponent
}

TEST(Hypercube, RandomPlanarSquaresHaveSquareLength) {
    XY r;
    Rng rng(11);
    for (unsigned m = 1; m <= 4; ++m) {
        for (int trial = 0; trial < 3; ++trial) {
            Rational a = random_scalar<Rational>(rng, 5), b = random_scalar<Rational>(rng, 5);
            Rational c = random_scalar<Rational>(rng, 5), d = random_scalar<Rational>(rng, 5);
            if ((a * d - b * c).is_zero()) {
                --trial;
                continue;
            }
            const auto report =
                symmetry_degree(hypercube_ideal<Rational>({r.x * a + r.y * b, r.x * c + r.y * d}, m));
            EXPECT_TRUE(report.superfat);
            EXPECT_EQ(report.length, static_cast<std::size_t>(m) * m);
        }
    }
}

TEST(Hypercube, RandomSpatialCubesHaveCubeLength) {
    const RingPtr R = PolyRing::standard({"x", "y", "z"});
    Rng rng(12);
    const GradedPiece linear(R, 1);
    for (unsigned m = 1; m <= 3; ++m) {
        std::vector<QPoly> forms;
        Matrix<Rational> rows(0, 3);
        while (forms.size() < 3) {
            QPoly f(R);
            for (std::size_t i = 0; i < 3; ++i)
                f += QPoly::variable(R, i) * random_scalar<Rational>(rng, 5);
            if (f.is_zero()) continue;
            rows.push_row(coefficient_vector(f, linear));
            if (rank(rows) == forms.size() + 1) {
                forms.push_back(f);
            } else {
                rows = row_space(rows);
            }
        }
        const auto report = symmetry_degree(hypercube_ideal<Rational>(forms, m));
        EXPECT_TRUE(report.superfat);
        EXPECT_EQ(report.length, static_cast<std::size_t>(m) * m * m);
    }
}

// ===== Superfat hull ========================================================

TEST(SuperfatHull, SuperfatInputComesBackUnchanged) {
    XY r;
    const QIdeal I(r.R, {r.x * r.x, r.y * r.y});
    EXPECT_TRUE(ideal_equal(superfat_hull(I, 1), I));
}

TEST(SuperfatHull, FatPointGrowsToLengthFour) {
    XY r;
    const QIdeal I(r.R, {r.x * r.x, r.x * r.y, r.y * r.y});
    const QIdeal hull = superfat_hull(I, 2);
    EXPECT_TRUE(ideal_contains(I, hull)); // hull scheme contains the fat point
    EXPECT_FALSE(ideal_equal(I, hull));   // strictly: length 3 grows to 4
    const auto report = symmetry_degree(hull);
    EXPECT_TRUE(report.superfat);
    EXPECT_EQ(report.m, 2u);
    EXPECT_EQ(report.length, 4u);
}

TEST(SuperfatHull, EightSchemeEmbedsInANineScheme) {
    XY r;
    const QIdeal I = three_symmetric_eight(r);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const QIdeal hull = superfat_hull(I, seed);
        EXPECT_TRUE(ideal_contains(I, hull));
        const auto report = symmetry_degree(hull);
        EXPECT_TRUE(report.superfat);
        EXPECT_EQ(report.m, 3u);
        EXPECT_EQ(report.length, 9u);
    }
}

TEST(SuperfatHull, RejectsNonSymmetricInput) {
    XY r;
    EXPECT_THROW((void)superfat_hull(perpendicular_five(r), 0), std::invalid_argument);
}

// ===== Square normal form ===================================================

TEST(SquareForm, AxisPairIsRecoveredMonically) {
    XY r;
    const auto result = two_superfat_square_form(QIdeal(r.R, {r.x * r.x, r.y * r.y}));
    ASSERT_TRUE(result.forms.has_value());
    const auto& [l1, l2] = *result.forms;
    EXPECT_TRUE((l1 == r.x && l2 == r.y) || (l1 == r.y && l2 == r.x));
}

TEST(SquareForm, DiagonalPairIsRecovered) {
    XY r;
    const QPoly u = r.x + r.y, v = r.x - r.y;
    const auto result = two_superfat_square_form(QIdeal(r.R, {u * u, v * v}));
    ASSERT_TRUE(result.forms.has_value());
    const auto& [l1, l2] = *result.forms;
    EXPECT_TRUE((l1 == u && l2 == v) || (l1 == v && l2 == u));
}

TEST(SquareForm, MixedGeneratorsStillRecoverTheForms) {
    XY r;
    const QPoly u = r.x + r.y, v = r.x - r.y;
    // Same ideal, but neither generator is a pure square.
    const auto result =
        two_superfat_square_form(QIdeal(r.R, {u * u + v * v, u * u - v * v}));
    ASSERT_TRUE(result.forms.has_value());
    const auto& [l1, l2] = *result.forms;
    EXPECT_TRUE((l1 == u && l2 == v) || (l1 == v && l2 == u));
}

TEST(SquareForm, HyperbolaPairNeedsAnImaginaryUnit) {
    Fp::set_modulus(32003); // 32003 = 3 mod 4, so no square root of -1
    const RingPtr R = PolyRing::standard({"x", "y"});
    const auto x = Polynomial<Fp>::variable(R, std::size_t{0});
    const auto y = Polynomial<Fp>::variable(R, std::size_t{1});
    const Ideal<Fp> I(R, {x * y, x * x - y * y});
    const auto result = two_superfat_square_form(I);
    EXPECT_FALSE(result.forms.has_value());
    // The rank-1 condition on a*(x^2 - y^2) + b*x*y is 4a^2 + b^2 = 0.
    EXPECT_EQ(result.pencil_quadratic[0], Fp(4));
    EXPECT_EQ(result.pencil_quadratic[1], Fp(0));
    EXPECT_EQ(result.pencil_quadratic[2], Fp(1));
}

TEST(SquareForm, HyperbolaPairSplitsOverACongruentPrime) {
    Fp::set_modulus(32009); // 32009 = 1 mod 4: -1 is a square
    const RingPtr R = PolyRing::standard({"x", "y"});
    const auto x = Polynomial<Fp>::variable(R, std::size_t{0});
    const auto y = Polynomial<Fp>::variable(R, std::size_t{1});
    const Ideal<Fp> I(R, {x * y, x * x - y * y});
    const auto result = two_superfat_square_form(I);
    ASSERT_TRUE(result.forms.has_value());
    const auto& [l1, l2] = *result.forms;
    EXPECT_TRUE(ideal_equal(Ideal<Fp>(R, {l1 * l1, l2 * l2}), I));
    Fp::set_modulus(32003);
}

TEST(SquareForm, HyperbolaPairSplitsOverTheGaussianRationals) {
    const RingPtr R = PolyRing::standard({"x", "y"});
    const auto x = Polynomial<GaussianRational>::variable(R, std::size_t{0});
    const auto y = Polynomial<GaussianRational>::variable(R, std::size_t{1});
    const Ideal<GaussianRational> I(R, {x * y, x * x - y * y});
    const auto result = two_superfat_square_form(I);
    ASSERT_TRUE(result.forms.has_value());
    const auto& [l1, l2] = *result.forms;
    const auto plus = x + y * imaginary_unit(), minus = x - y * imaginary_unit();
    EXPECT_TRUE((l1 == plus && l2 == minus) || (l1 == minus && l2 == plus));
    EXPECT_TRUE(ideal_equal(Ideal<GaussianRational>(R, {l1 * l1, l2 * l2}), I));
}

TEST(SquareForm, RandomPairsOverThePrimeFieldAlwaysSplit) {
    Fp::set_modulus(32003);
    const RingPtr R = PolyRing::standard({"x", "y"});
    const auto x = Polynomial<Fp>::variable(R, std::size_t{0});
    const auto y = Polynomial<Fp>::variable(R, std::size_t{1});
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const Fp a = random_scalar<Fp>(rng, 50), b = random_scalar<Fp>(rng, 50);
        const Fp c = random_scalar<Fp>(rng, 50), d = random_scalar<Fp>(rng, 50);
        if ((a * d - b * c).is_zero()) {
            --trial;
            continue;
        }
        const auto u = x * a + y * b, v = x * c + y * d;
        const Ideal<Fp> I(R, {u * u, v * v});
        // The two rank-1 pencil members exist by construction, so the
        // discriminant is always a square here.
        const auto result = two_superfat_square_form(I);
        ASSERT_TRUE(result.forms.has_value());
        const auto& [l1, l2] = *result.forms;
        EXPECT_TRUE(ideal_equal(Ideal<Fp>(R, {l1 * l1, l2 * l2}), I));
    }
}

TEST(SquareForm, RejectsSchemesThatAreNotTwoSuperfat) {
    XY r;
    EXPECT_THROW((void)two_superfat_square_form(three_symmetric_eight(r)),
                 std::invalid_argument); // degree 3
    EXPECT_THROW((void)two_superfat_square_form(perpendicular_five(r)),
                 std::invalid_argument); // not symmetric
    EXPECT_THROW((void)two_superfat_square_form(QIdeal(r.R, {r.x * r.x, r.y.pow(3)})),
                 std::invalid_argument); // mixed orders
}

// ===== Smoothing family =====================================================

TEST(SmoothingFamily, TwoPointsOnALine) {
    const QIdeal I = smoothing_family<Rational>(2, 1, Rational(1));
    ASSERT_EQ(I.generators.size(), 1u);
    EXPECT_EQ(*quotient_info(I).dimension, 2u);
}

TEST(SmoothingFamily, GridIdealsAreReducedOfSizeMToTheN) {
    struct Case {
        unsigned m;
        std::size_t n;
    };
    for (const Case c : {Case{2, 2}, Case{3, 2}, Case{2, 3}}) {
        const QIdeal I = smoothing_family<Rational>(c.m, c.n, Rational(1));
        std::size_t grid = 1;
        for (std::size_t i = 0; i < c.n; ++i) grid *= c.m;
        EXPECT_EQ(*quotient_info(I).dimension, grid);
        // Every grid point (-j_1, ..., -j_n), 0 <= j_i < m, kills every
        // generator; m^n distinct zeros matching the quotient dimension
        // certify a radical ideal of exactly those points.
        std::vector<std::size_t> digits(c.n, 0);
        std::size_t visited = 0;
        while (true) {
            std::vector<Rational> point;
            for (std::size_t i = 0; i < c.n; ++i)
                point.emplace_back(-static_cast<long long>(digits[i]));
            for (const auto& g : I.generators) EXPECT_TRUE(evaluate(g, point).is_zero());
            ++visited;
            std::size_t carry = 0;
            while (carry < c.n && ++digits[carry] == c.m) digits[carry++] = 0;
            if (carry == c.n) break;
        }
        EXPECT_EQ(visited, grid);
    }
}

TEST(SmoothingFamily, CoefficientsScaleTowardThePurePowers) {
    // F(x, t) has x^j-coefficient t^(m-j) * e_{m-j}(0..m-1), so passing from
    // t = 1 to t = 1/2 scales it by (1/2)^(m-j); as t -> 0 only x^m survives.
    for (unsigned m = 2; m <= 4; ++m) {
        const QIdeal at_one = smoothing_family<Rational>(m, 2, Rational(1));
        const QIdeal at_half = smoothing_family<Rational>(m, 2, Rational(1, 2));
        for (std::size_t i = 0; i < 2; ++i) {
            const QPoly &f1 = at_one.generators[i], &fh = at_half.generators[i];
            Exponents lead(2, 0);
            lead[i] = m;
            EXPECT_EQ(f1.coefficient(lead), Rational(1));
            EXPECT_EQ(fh.coefficient(lead), Rational(1));
            for (unsigned j = 0; j < m; ++j) {
                Exponents e(2, 0);
                e[i] = j;
                Rational scale(1);
                for (unsigned k = j; k < m; ++k) scale = scale * Rational(1, 2);
                EXPECT_EQ(fh.coefficient(e), f1.coefficient(e) * scale);
            }
        }
    }
}

TEST(SmoothingFamily, RejectsDegenerateParameters) {
    EXPECT_THROW((void)smoothing_family<Rational>(2, 2, Rational(0)), std::invalid_argument);
    EXPECT_THROW((void)smoothing_family<Rational>(0, 2, Rational(1)), std::invalid_argument);
    EXPECT_THROW((void)smoothing_family<Rational>(2, 0, Rational(1)), std::invalid_argument);
    Fp::set_modulus(3);
    EXPECT_THROW((void)smoothing_family<Fp>(3, 2, Fp(1)), std::invalid_argument);
    EXPECT_NO_THROW((void)smoothing_family<Fp>(2, 2, Fp(1)));
    Fp::set_modulus(32003);
}

// ===== Union of squares =====================================================

TEST(UnionOfSquares, PassesForSmallExponents) {
    for (unsigned m = 1; m <= 5; ++m) {
        const auto report = union_of_squares_check<Rational>(m);
        EXPECT_TRUE(report.fat_point_inside_each) << "m = " << m;
        EXPECT_TRUE(report.no_form_in_critical_degree) << "m = " << m;
        EXPECT_EQ(report.squares.size(), 2u * m - 1) << "m = " << m;
        EXPECT_TRUE(report.passed()) << "m = " << m;
        if (m <= 3) {
            ASSERT_TRUE(report.elimination_matches.has_value());
            EXPECT_TRUE(*report.elimination_matches);
        } else {
            EXPECT_FALSE(report.elimination_matches.has_value());
        }
    }
}

TEST(UnionOfSquares, RejectsTooSmallFields) {
    Fp::set_modulus(3);
    EXPECT_THROW((void)union_of_squares_check<Fp>(5), std::invalid_argument);
    EXPECT_NO_THROW((void)union_of_squares_check<Fp>(2));
    Fp::set_modulus(32003);
    EXPECT_THROW((void)union_of_squares_check<Rational>(0), std::invalid_argument);
}

TEST(PerpendicularUnion, TwoPairsCarveTheLengthFiveScheme) {
    const auto report = perpendicular_union_check<Rational>();
    EXPECT_TRUE(report.equals_expected);
    EXPECT_TRUE(report.single_pair_strictly_larger);
    EXPECT_FALSE(report.expected_report.symmetric);
    EXPECT_EQ(report.expected_report.m, 2u);
    EXPECT_EQ(report.expected_report.length, 5u);
    EXPECT_TRUE(report.passed());
}

// ===== Alternating binomial identity ========================================

TEST(BinomialIdentity, PinnedValuesVanish) {
    EXPECT_EQ(binomial_identity(1, 5), 0);
    EXPECT_EQ(binomial_identity(3, 2), 0); // 1*3 - 3*3 + 6*1
    EXPECT_EQ(binomial_identity(25, 17), 0);
}

TEST(BinomialIdentity, VanishesOnTheWholeGrid) {
    for (unsigned m = 1; m <= 30; ++m)
        for (unsigned i = 1; i <= 30; ++i)
            EXPECT_EQ(binomial_identity(m, i), 0) << "m = " << m << ", i = " << i;
}

TEST(BinomialIdentity, DoesNotVanishDegenerately) {
    EXPECT_EQ(binomial_identity(4, 0), 1); // i = 0 keeps only the j = 0 term
}

// ===== Cross-validation properties ==========================================

TEST(Properties, RandomLinesSeeTheSymmetryDegree) {
    XY r;
    Rng rng(7);
    const std::vector<std::pair<QIdeal, unsigned>> cases = {
        {QIdeal(r.R, {r.x * r.x, r.y * r.y}), 2u},
        {three_symmetric_eight(r), 3u},
    };
    for (const auto& [ideal, m] : cases) {
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<Rational> a = {random_scalar<Rational>(rng, 20),
                                       random_scalar<Rational>(rng, 20)};
            if (a[0].is_zero() && a[1].is_zero()) {
                --trial;
                continue;
            }
            ASSERT_EQ(line_intersection_length(ideal, a), m);
        }
    }
}

TEST(Properties, SymmetricSchemesSitBetweenTheFatPointAndTheHypercube) {
    XY r;
    const RingPtr R3 = PolyRing::standard({"x", "y", "z"});
    std::vector<QPoly> axes;
    for (std::size_t i = 0; i < 3; ++i) axes.push_back(QPoly::variable(R3, i));
    const std::vector<std::pair<QIdeal, std::size_t>> cases = {
        {QIdeal(r.R, {r.x * r.x, r.y * r.y}), 2},
        {three_symmetric_eight(r), 2},
        {hypercube_ideal<Rational>(axes, 2), 3},
    };
    for (const auto& [ideal, n] : cases) {
        const auto report = symmetry_degree(ideal);
        ASSERT_TRUE(report.symmetric);
        EXPECT_TRUE(report.contains_fat_point);
        std::size_t cube = 1;
        for (std::size_t i = 0; i < n; ++i) cube *= report.m;
        const BigInt floor = binomial(static_cast<long long>(report.m) + n - 1,
                                      static_cast<long long>(n));
        EXPECT_LE(floor, BigInt(static_cast<long long>(report.length)));
        EXPECT_LE(report.length, cube);
    }
}
