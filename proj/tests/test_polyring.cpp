#include <gtest/gtest.h>

#include "superfat/graded.hpp"
#include "superfat/polynomial.hpp"

using namespace superfat;
using namespace superfat::exactcore;
using namespace superfat::polyring;

using QPoly = Polynomial<Rational>;

namespace {

struct XY {
    RingPtr R = PolyRing::standard({"x", "y"});
    QPoly x = QPoly::variable(R, 0);
    QPoly y = QPoly::variable(R, 1);
};

template <class K>
Polynomial<K> random_polynomial(const RingPtr& ring, Rng& rng, unsigned maxdeg, int nterms) {
    Polynomial<K> f(ring);
    for (int t = 0; t < nterms; ++t) {
        Exponents e(ring->nvars());
        unsigned budget = rng.uniform_int(0, maxdeg);
        for (auto& ei : e) {
            ei = static_cast<unsigned>(rng.uniform_int(0, budget));
            budget -= ei;
        }
        f.add_term(e, random_scalar<K>(rng, 9));
    }
    return f;
}

} // namespace

// ===== Ring basics ==========================================================

TEST(PolyRing, Validation) {
    EXPECT_THROW(PolyRing::standard({}), std::invalid_argument);
    EXPECT_THROW(PolyRing::standard({"x", "x"}), std::invalid_argument);
    EXPECT_THROW(PolyRing::bigraded({}, {"t0"}), std::invalid_argument);
    const auto R = PolyRing::bigraded({"s0", "s1"}, {"t0", "t1"});
    EXPECT_TRUE(R->is_bigraded());
    EXPECT_EQ(R->first_block(), 2u);
    EXPECT_EQ(R->nvars(), 4u);
    EXPECT_EQ(R->index_of("t0"), 2u);
    EXPECT_EQ(R->index_of("z"), std::nullopt);
}

TEST(Polynomial, Arithmetic) {
    XY r;
    const QPoly sq = (r.x + r.y).pow(2);
    QPoly expect(r.R);
    expect.add_term({2, 0}, Rational(1));
    expect.add_term({1, 1}, Rational(2));
    expect.add_term({0, 2}, Rational(1));
    EXPECT_EQ(sq, expect);
    EXPECT_EQ((r.x - r.y) * (r.x + r.y), r.x.pow(2) - r.y.pow(2));
    EXPECT_TRUE((sq - sq).is_zero());
    EXPECT_EQ(sq.total_degree(), 2);
    EXPECT_TRUE(sq.is_homogeneous());
    EXPECT_FALSE((sq + r.x).is_homogeneous());
    EXPECT_EQ(QPoly::zero(r.R).total_degree(), -1);
}

TEST(Polynomial, BidegreeTracking) {
    const auto R = PolyRing::bigraded({"s0", "s1"}, {"t0", "t1"});
    const auto s0 = QPoly::variable(R, "s0"), t0 = QPoly::variable(R, "t0"),
               t1 = QPoly::variable(R, "t1");
    EXPECT_EQ((s0.pow(2) * t0 * t1).bidegree(), std::make_pair(2u, 2u));
    EXPECT_EQ((s0 + t0).bidegree(), std::nullopt);
}

// ===== Calculus primitives ==================================================

TEST(Calculus, HomogeneousComponent) {
    XY r;
    const QPoly f = r.x.pow(2) * r.y + r.x.pow(5);
    EXPECT_EQ(homogeneous_component(f, 3), r.x.pow(2) * r.y);
    EXPECT_TRUE(homogeneous_component(f, 4).is_zero());
    const QPoly g = (r.x - r.y).pow(3) + r.y.pow(4);
    EXPECT_EQ(homogeneous_component(g, 3), (r.x - r.y).pow(3));
}

TEST(Calculus, OrderAtOrigin) {
    XY r;
    EXPECT_EQ(order_at_origin(r.x.pow(2) * r.y + r.x.pow(5)), 3u);
    EXPECT_EQ(order_at_origin(QPoly::zero(r.R)), std::nullopt);
    EXPECT_EQ(order_at_origin(r.y.pow(3) + r.x.pow(2) * r.y.pow(2)), 3u);
}

TEST(Calculus, RestrictToLine) {
    XY r;
    const auto T = PolyRing::standard({"t"});
    const QPoly t = QPoly::variable(T, 0);
    EXPECT_EQ(restrict_to_line(r.x.pow(2), {Rational(1), Rational(1)}), t.pow(2));
    EXPECT_TRUE(restrict_to_line(r.x.pow(2) * r.y.pow(2), {Rational(1), Rational(0)}).is_zero());
    EXPECT_EQ(restrict_to_line((r.x - r.y).pow(3), {Rational(1), Rational(2)}), -t.pow(3));
    EXPECT_THROW((void)restrict_to_line(r.x, {Rational(0), Rational(0)}), std::invalid_argument);
    EXPECT_THROW((void)restrict_to_line(r.x, {Rational(1)}), std::invalid_argument);
}

TEST(Calculus, ApolarAction) {
    XY r;
    EXPECT_EQ(apolar_action(r.x, r.x.pow(2)), r.x * Rational(2));
    EXPECT_TRUE(apolar_action(r.x.pow(2), r.y.pow(3)).is_zero());
    const auto R3 = PolyRing::standard({"x0", "x1", "x2"});
    const auto x0 = QPoly::variable(R3, 0), x1 = QPoly::variable(R3, 1),
               x2 = QPoly::variable(R3, 2);
    // d/dx0 d/dx1 applied to x2^2 x0 x1 leaves x2^2 with unit coefficient.
    EXPECT_EQ(apolar_action(x0 * x1, x2.pow(2) * x0 * x1), x2.pow(2));
    // <x^a, x^a> = a! on the diagonal.
    EXPECT_EQ(apolar_action(x0.pow(3) * x1, x0.pow(3) * x1),
              QPoly::constant(R3, Rational(6)));
}

TEST(Calculus, ApolarPairingIsDiagonalAndPerfect) {
    const auto R3 = PolyRing::standard({"x0", "x1", "x2"});
    const GradedPiece piece(R3, 3);
    Matrix<Rational> gram(piece.dim(), piece.dim());
    for (std::size_t i = 0; i < piece.dim(); ++i)
        for (std::size_t j = 0; j < piece.dim(); ++j) {
            const auto gi = QPoly::monomial(R3, piece.basis()[i], Rational(1));
            const auto gj = QPoly::monomial(R3, piece.basis()[j], Rational(1));
            const QPoly v = apolar_action(gi, gj);
            gram.at(i, j) = v.is_zero() ? Rational(0) : v.terms().begin()->second;
        }
    for (std::size_t i = 0; i < piece.dim(); ++i)
        for (std::size_t j = 0; j < piece.dim(); ++j)
            if (i != j) EXPECT_TRUE(gram.at(i, j).is_zero());
    EXPECT_EQ(rank(gram), piece.dim());
}

TEST(Calculus, Differentiate) {
    XY r;
    EXPECT_EQ(differentiate(r.x.pow(2) * r.y, "x"), r.x * r.y * Rational(2));
    EXPECT_THROW((void)differentiate(r.x, "z"), std::invalid_argument);
}

TEST(Calculus, SubstituteTangentDirection) {
    // d/dl at l = 0 of (x + l*u)^2 is 2xu.
    const auto R = PolyRing::standard({"x", "u", "l"});
    const auto x = QPoly::variable(R, 0), u = QPoly::variable(R, 1), l = QPoly::variable(R, 2);
    const QPoly shifted = substitute(x.pow(2), {x + l * u, u, l});
    const QPoly at0 = substitute(differentiate(shifted, "l"),
                                 {x, u, QPoly::zero(R)});
    EXPECT_EQ(at0, x * u * Rational(2));
}

TEST(Calculus, ProductRuleTangentOfTripleProduct) {
    // d/dl at 0 of (ms + l*us)^2 (mt + l*ut)^2 (n + l*v)
    //   = 2 us ms mt^2 n + 2 ms^2 ut mt n + ms^2 mt^2 v.
    const auto R = PolyRing::standard({"ms", "us", "mt", "ut", "n", "v", "l"});
    const auto P = [&](const char* s) { return QPoly::variable(R, s); };
    const QPoly ms = P("ms"), us = P("us"), mt = P("mt"), ut = P("ut"), n = P("n"), v = P("v"),
                l = P("l");
    const QPoly f = (ms + l * us).pow(2) * (mt + l * ut).pow(2) * (n + l * v);
    std::vector<QPoly> at0 = {ms, us, mt, ut, n, v, QPoly::zero(R)};
    const QPoly tangent = substitute(differentiate(f, "l"), at0);
    const QPoly expect = us * ms * mt.pow(2) * n * Rational(2) +
                         ms.pow(2) * ut * mt * n * Rational(2) + ms.pow(2) * mt.pow(2) * v;
    EXPECT_EQ(tangent, expect);
}

// ===== Randomized identities ================================================

TEST(Properties, RingAxiomsAndConvolution) {
    XY r;
    Rng rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        const QPoly f = random_polynomial<Rational>(r.R, rng, 4, 4);
        const QPoly g = random_polynomial<Rational>(r.R, rng, 4, 4);
        const QPoly h = random_polynomial<Rational>(r.R, rng, 4, 4);
        EXPECT_EQ(f * (g + h), f * g + f * h);
        EXPECT_EQ((f * g) * h, f * (g * h));
        EXPECT_EQ(f * g, g * f);
        // Degree-k component of a product is the convolution of components.
        for (unsigned k = 0; k <= 6; ++k) {
            QPoly conv(r.R);
            for (unsigned j = 0; j <= k; ++j)
                conv += homogeneous_component(f, j) * homogeneous_component(g, k - j);
            EXPECT_EQ(homogeneous_component(f * g, k), conv);
        }
    }
}

TEST(Properties, OrderIsAdditive) {
    XY r;
    Rng rng(43);
    for (int trial = 0; trial < 25; ++trial) {
        const QPoly f = random_polynomial<Rational>(r.R, rng, 4, 3);
        const QPoly g = random_polynomial<Rational>(r.R, rng, 4, 3);
        if (f.is_zero() || g.is_zero()) continue;
        EXPECT_EQ(*order_at_origin(f * g), *order_at_origin(f) + *order_at_origin(g));
    }
}

TEST(Properties, LineRestrictionMatchesComponentEvaluation) {
    // The t^k coefficient of f(a t) is the k-th homogeneous component of f
    // evaluated at a; the symmetry decision procedure is built on this.
    XY r;
    Rng rng(47);
    for (int trial = 0; trial < 25; ++trial) {
        const QPoly f = random_polynomial<Rational>(r.R, rng, 5, 4);
        const std::vector<Rational> a = {random_scalar<Rational>(rng, 9),
                                         random_scalar<Rational>(rng, 9)};
        if (a[0].is_zero() && a[1].is_zero()) continue;
        const QPoly line = restrict_to_line(f, a);
        for (unsigned k = 0; k <= 5; ++k)
            EXPECT_EQ(line.coefficient({k}), evaluate(homogeneous_component(f, k), a));
    }
}

// ===== Graded pieces ========================================================

TEST(GradedPieces, TernaryQuarticBasisOrder) {
    const auto R = PolyRing::standard({"x0", "x1", "x2"});
    const GradedPiece piece(R, 4);
    ASSERT_EQ(piece.dim(), 15u);
    EXPECT_EQ(piece.basis()[0], Exponents({4, 0, 0}));
    EXPECT_EQ(piece.basis()[1], Exponents({3, 1, 0}));
    EXPECT_EQ(piece.basis()[2], Exponents({2, 2, 0})); // grevlex-descending
    EXPECT_EQ(piece.basis()[14], Exponents({0, 0, 4}));
    EXPECT_EQ(piece.index_of(Exponents({2, 2, 0})), 2u);
    EXPECT_EQ(piece.index_of(Exponents({1, 1, 1})), std::nullopt); // degree 3
}

TEST(GradedPieces, QuadraticPieceOrderMatchesCoordinateListing) {
    const auto R = PolyRing::standard({"x0", "x1", "x2"});
    const GradedPiece piece(R, 2);
    const std::vector<Exponents> expect = {{2, 0, 0}, {1, 1, 0}, {0, 2, 0},
                                           {1, 0, 1}, {0, 1, 1}, {0, 0, 2}};
    EXPECT_EQ(piece.basis(), expect);
}

TEST(GradedPieces, BigradedPiece) {
    const auto R = PolyRing::bigraded({"s0", "s1"}, {"t0", "t1"});
    const GradedPiece piece(R, 2, 2);
    ASSERT_EQ(piece.dim(), 9u);
    EXPECT_EQ(piece.basis().front(), Exponents({2, 0, 2, 0}));
    EXPECT_EQ(piece.basis().back(), Exponents({0, 2, 0, 2}));
    EXPECT_THROW(GradedPiece(R, 4), std::logic_error);
    EXPECT_THROW(GradedPiece(PolyRing::standard({"x"}), 1, 1), std::logic_error);
}

TEST(GradedPieces, CoefficientVectorRoundTrip) {
    const auto R = PolyRing::standard({"x0", "x1", "x2"});
    const GradedPiece piece(R, 3);
    Rng rng(53);
    std::vector<Rational> v(piece.dim());
    for (auto& c : v) c = random_scalar<Rational>(rng, 9);
    const QPoly f = from_coefficient_vector(piece, v);
    EXPECT_EQ(coefficient_vector(f, piece), v);
    const QPoly off = QPoly::variable(R, 0); // degree 1, outside the piece
    EXPECT_THROW((void)coefficient_vector(off, piece), std::invalid_argument);
}
