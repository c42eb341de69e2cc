#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>

#include "fdisp/models/mindlin.hpp"
#include "fdisp/models/wing.hpp"
#include "fdisp/multipoly.hpp"
#include "fdisp/polytext.hpp"
#include "fdisp/series.hpp"
#include "oracles.hpp"

using namespace fdisp;

namespace {

MultiPoly x() { return var("x"); }

}  // namespace

TEST(Rational, CanonicalForm) {
  Rational q = make_rational(6, -4);
  EXPECT_EQ(q.get_num(), -3);
  EXPECT_EQ(q.get_den(), 2);
  EXPECT_EQ(make_rational(0, 7), Rational(0));
  EXPECT_EQ(make_rational(0, 7).get_den(), 1);
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
}

TEST(Rational, ParseNumbers) {
  EXPECT_EQ(*parse_rational("-3/4"), make_rational(-3, 4));
  EXPECT_FALSE(parse_rational("0.5"));
  EXPECT_FALSE(parse_rational("1/0"));
  EXPECT_EQ(*parse_number("0.1"), make_rational(1, 10));
  EXPECT_EQ(*parse_number("-2.5e-3"), make_rational(-1, 400));
  EXPECT_EQ(*parse_number("1E2"), Rational(100));
  EXPECT_FALSE(parse_number("1e"));
  EXPECT_EQ(*exact_sqrt(make_rational(9, 4)), make_rational(3, 2));
  EXPECT_FALSE(exact_sqrt(Rational(2)));
}

TEST(PolyMake, Examples) {
  MultiPoly p = MultiPoly::make({"x"}, {{{2}, Rational(1)}, {{0}, Rational(-1)}});
  EXPECT_EQ(p, x().pow(2) - MultiPoly(1));
  MultiPoly z = MultiPoly::make({"w", "k"}, {});
  EXPECT_TRUE(z.is_zero());
  MultiPoly c = MultiPoly::make({"x"}, {{{1}, Rational(1)}, {{1}, Rational(-1)}});
  EXPECT_TRUE(c.is_zero());
  EXPECT_THROW(MultiPoly::make({"x"}, {{{1, 2}, Rational(1)}}), std::invalid_argument);
}

TEST(PolyMake, VariableOrderIsCanonical) {
  MultiPoly a = MultiPoly::make({"w", "k"}, {{{2, 1}, Rational(3)}});
  MultiPoly b = MultiPoly::make({"k", "w"}, {{{1, 2}, Rational(3)}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.variables(), (std::vector<std::string>{"k", "w"}));
}

TEST(PolyArith, Examples) {
  EXPECT_EQ((x() + 1) * (x() - 1), x().pow(2) - 1);
  const MultiPoly w = var("w"), k = var("k");
  EXPECT_EQ((w + k) * (w + 10 * k), w.pow(2) + 11 * w * k + 10 * k.pow(2));
  EXPECT_EQ(x().pow(0), MultiPoly(1));
}

TEST(PolyArith, RingAxiomsOnRandomPolys) {
  std::mt19937 rng(7);
  const std::vector<std::string> v1{"x", "y"}, v2{"y", "z"}, v3{"x", "z", "w"};
  for (int trial = 0; trial < 50; ++trial) {
    MultiPoly a = oracle::random_poly(rng, v1), b = oracle::random_poly(rng, v2), c = oracle::random_poly(rng, v3);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a - a, MultiPoly());
  }
}

TEST(PolyEval, Examples) {
  EXPECT_DOUBLE_EQ((x().pow(2) - 1).eval(std::map<std::string, double>{{"x", 3.0}}), 8.0);
  MultiPoly wing = wing_dispersion(WingCoeffs::from(WingParams{}));
  EXPECT_EQ(wing.eval(std::map<std::string, double>{{"w", 0.0}, {"k", 0.0}, {"b", 0.7}}), 0.0);
}

TEST(PolyEval, MissingVariableIsNamed) {
  MultiPoly p = var("x") * var("y");
  try {
    p.eval(std::map<std::string, double>{{"x", 1.0}});
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("y"), std::string::npos);
  }
}

TEST(PolyEval, PartialEvalOfMindlinAtZeroCoupling) {
  MindlinCoeffs c = MindlinCoeffs::symbolic();
  MultiPoly a0 = mindlin_A(c).partial_eval("b", Rational(0));
  EXPECT_FALSE(a0.depends_on("b"));
  // Hand expansion of the two uncoupled quadratics.
  const MultiPoly w2 = var("w").pow(2), k2 = var("k").pow(2);
  MultiPoly q1 = var("rho") * var("h").pow(3) * rat(1, 12) * w2 - var("D") * k2;
  MultiPoly q2 = var("rho") * w2 - var("kappa") * var("G") * k2;
  EXPECT_EQ(a0, q1 * q2);
}

TEST(PolyEval, MultiplicativeOnRandomPoints) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const std::vector<std::string> vars{"x", "y", "z"};
  for (int trial = 0; trial < 100; ++trial) {
    MultiPoly a = oracle::random_poly(rng, vars), b = oracle::random_poly(rng, vars);
    std::map<std::string, double> s{{"x", u(rng)}, {"y", u(rng)}, {"z", u(rng)}};
    double lhs = (a * b).eval(s), rhs = a.eval(s) * b.eval(s);
    EXPECT_NEAR(lhs, rhs, 1e-12 * std::max(1.0, std::abs(rhs)));
  }
}

TEST(PolyDerivative, Examples) {
  const MultiPoly w = var("w"), k = var("k"), c = var("c");
  EXPECT_EQ((w.pow(2) - c.pow(2) * k.pow(2)).derivative("w"), 2 * w);
  MultiPoly g2 = var("m") * w.pow(2) - var("EI") * k.pow(4);
  EXPECT_EQ(g2.derivative("k"), -4 * var("EI") * k.pow(3));
  MultiPoly five(5);
  EXPECT_THROW(five.derivative("x"), std::invalid_argument);
  EXPECT_TRUE(five.embed({"x"}).derivative("x").is_zero());
}

TEST(PolyDerivative, LeibnizRule) {
  std::mt19937 rng(5);
  const std::vector<std::string> vars{"x", "y"};
  for (int trial = 0; trial < 50; ++trial) {
    MultiPoly a = oracle::random_poly(rng, vars), b = oracle::random_poly(rng, vars);
    EXPECT_EQ((a * b).derivative("x"), a.derivative("x") * b + a * b.derivative("x"));
  }
}

TEST(PolyOps, SubstituteAndCoefficients) {
  MultiPoly p = var("y").pow(2) + var("x") * var("y");
  MultiPoly q = p.substitute("y", var("x") + 1);
  EXPECT_EQ(q, (var("x") + 1).pow(2) + var("x") * (var("x") + 1));
  auto cs = p.coefficients_in("y");
  ASSERT_EQ(cs.size(), 3u);
  EXPECT_TRUE(cs[0].is_zero());
  EXPECT_EQ(cs[1], var("x"));
  EXPECT_EQ(cs[2], MultiPoly(1));
  EXPECT_EQ(radial_lift(var("k").pow(4), "k", {"kx", "ky"}), (var("kx").pow(2) + var("ky").pow(2)).pow(2));
}

TEST(PolyText, FormatMatchesConvention) {
  MultiPoly p = var("w").pow(2) - var("c").pow(2) * var("k").pow(2);
  EXPECT_EQ(format_poly(p), "1*w^2 - 1*c^2*k^2");
  EXPECT_EQ(format_poly(MultiPoly()), "0");
  EXPECT_EQ(format_poly(MultiPoly(make_rational(-3, 4))), "-3/4");
}

TEST(PolyText, RoundTripOnRandomPolys) {
  std::mt19937 rng(3);
  const std::vector<std::string> vars{"b", "k", "w"};
  for (int trial = 0; trial < 100; ++trial) {
    MultiPoly a = oracle::random_poly(rng, vars, 5, 4);
    EXPECT_EQ(parse_poly(format_poly(a)), a);
  }
  EXPECT_EQ(parse_poly("(x+1)^2 - 2*x/2"), var("x").pow(2) + var("x") + 1);
  EXPECT_THROW(parse_poly("x/y"), TextError);
  EXPECT_THROW(parse_poly("0.5*x"), TextError);
  EXPECT_THROW(parse_poly("x +"), TextError);
}

TEST(PolyText, MatrixRoundTrip) {
  PolyMatrix m = parse_matrix("[w^2-k^2, b*k; b*k, w^2-4*k^2]");
  ASSERT_EQ(m.rows(), 2u);
  EXPECT_EQ(m(1, 1), var("w").pow(2) - 4 * var("k").pow(2));
  EXPECT_EQ(parse_matrix(format_matrix(m)), m);
  GaussMatrix g = parse_gauss_matrix("[1, -i*b*k; i*b*k, 2]");
  EXPECT_EQ(g(0, 1).im, -(var("b") * var("k")));
  EXPECT_EQ(parse_gauss_matrix(format_matrix(g)), g);
  EXPECT_THROW(parse_matrix("[1, 2; 3]"), TextError);
}

TEST(Series, ExactRelationGivesZeroSeries) {
  // y - x^2 with y = x^2
  auto s = TruncSeries<Rational>::monomial("x", Rational(1), Rational(2), Rational(1));
  auto r = series_substitute(var("y") - var("x").pow(2), "y", s);
  EXPECT_TRUE(r.is_zero());
  EXPECT_TRUE(r.is_exact());
}

TEST(Series, PuiseuxHalfStep) {
  // y^2 - x with y = x^(1/2)
  auto s = TruncSeries<Rational>::monomial("x", Rational(1), make_rational(1, 2), make_rational(1, 2));
  auto r = series_substitute(var("y").pow(2) - var("x"), "y", s);
  EXPECT_TRUE(r.is_zero());
}

TEST(Series, OrderPropagation) {
  // y = x + O(x^3): y^2 = x^2 + O(x^4)
  TruncSeries<Rational> s("x", Rational(1), Rational(3));
  s.set(Rational(1), Rational(1));
  auto sq = s * s;
  ASSERT_TRUE(sq.order());
  EXPECT_EQ(*sq.order(), Rational(4));
  EXPECT_EQ(sq.coefficient(Rational(2)), Rational(1));
  auto r = series_substitute(var("y").pow(2) - var("x").pow(2), "y", s, Rational(4));
  EXPECT_TRUE(r.is_zero());
  try {
    series_substitute(var("y").pow(2), "y", s, Rational(5));
    FAIL();
  } catch (const SeriesOrderError& e) {
    EXPECT_EQ(e.achievable(), Rational(4));
    EXPECT_NE(std::string(e.what()).find("4"), std::string::npos);
  }
}

TEST(Series, MindlinLowerSeriesAtReferenceData) {
  // b = 1/10, unit parameters, nu = 1/2: c1 = 1/b, c2 = -13/(24 b^3),
  // c3 = 185/(384 b^5), all rational.
  const Rational b = make_rational(1, 10);
  TruncSeries<Rational> w("k", Rational(2), Rational(8));
  w.set(Rational(2), Rational(1 / b));
  w.set(Rational(4), Rational(-13 / (24 * b * b * b)));
  w.set(Rational(6), Rational(185 / (384 * b * b * b * b * b)));
  MultiPoly A = mindlin_A(MindlinCoeffs::from(MindlinParams::reference(b))).partial_eval("b", b);
  auto r = series_substitute(A, "w", w, Rational(8));
  EXPECT_TRUE(r.is_zero());
  // One order further the first term survives.
  auto full = series_substitute(A, "w", w);
  ASSERT_TRUE(full.order());
  EXPECT_EQ(*full.order(), Rational(10));
}
