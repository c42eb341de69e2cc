#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "fdisp/mechanalog.hpp"

using namespace fdisp;

namespace {

OscillatorPair data() { return OscillatorPair{}; }

const Rational pstar = make_rational(1, 11);
const Rational omega_star_sq = make_rational(12, 11);

}  // namespace

TEST(Stiffness, AtZero) {
  auto [k1, k2] = effective_stiffness(data(), 0);
  EXPECT_EQ(k1, Rational(1));
  EXPECT_EQ(k2, make_rational(6, 5));
}

TEST(Stiffness, EqualAtCrossing) {
  auto [k1, k2] = effective_stiffness(data(), pstar);
  EXPECT_EQ(k1, omega_star_sq);
  EXPECT_EQ(k2, omega_star_sq);
}

TEST(Stiffness, IndependentOfCoupling) {
  for (const Rational& p : {Rational(0), pstar, make_rational(-1, 20), make_rational(1, 5)}) {
    OscillatorPair o = data();
    auto base = effective_stiffness(o, p);
    auto fbase = partial_freqs(o, p);
    for (const Rational& b : {make_rational(1, 5), make_rational(2, 5), make_rational(3, 5)}) {
      o.b = b;
      EXPECT_EQ(effective_stiffness(o, p), base);
      EXPECT_EQ(partial_freqs(o, p), fbase);
      RationalMatrix K = full_stiffness(o, p);
      EXPECT_EQ(K(0, 1), Rational(-b));
    }
  }
}

TEST(Stiffness, NonPositiveRejected) {
  OscillatorPair o = data();
  o.p_limit.reset();
  EXPECT_THROW(effective_stiffness(o, -1), std::domain_error);
  o.m1 = 0;
  EXPECT_THROW(effective_stiffness(o, 0), std::invalid_argument);
}

TEST(PartialFreqs, Values) {
  EXPECT_EQ(partial_freqs(data(), 0), std::make_pair(Rational(1), make_rational(6, 5)));
  EXPECT_EQ(partial_freqs(data(), pstar), std::make_pair(omega_star_sq, omega_star_sq));
  OscillatorPair o = data();
  o.alpha1 = o.alpha2 = 0;
  EXPECT_EQ(partial_freqs(o, make_rational(1, 7)), partial_freqs(o, 0));
  o = data();
  o.m1 = 2;
  o.kappa1 = 3;
  EXPECT_EQ(partial_freqs(o, make_rational(1, 10)).first, make_rational(33, 20));
}

TEST(EigenFreqs, Uncoupled) {
  EigenFreqs e = eigenfreqs(data(), 0, 0);
  ASSERT_TRUE(e.minus_exact && e.plus_exact);
  EXPECT_EQ(*e.minus_exact, Rational(1));
  EXPECT_EQ(*e.plus_exact, make_rational(6, 5));
}

TEST(EigenFreqs, SymmetricSplitAtCrossing) {
  for (const Rational& b : {make_rational(1, 5), make_rational(2, 5), make_rational(3, 5)}) {
    EigenFreqs e = eigenfreqs(data(), pstar, b);
    ASSERT_TRUE(e.minus_exact && e.plus_exact);
    EXPECT_EQ(*e.minus_exact, Rational(omega_star_sq - b));
    EXPECT_EQ(*e.plus_exact, Rational(omega_star_sq + b));
  }
  // kappa / sqrt(m1 m2) scaling with non-unit data.
  OscillatorPair o = data();
  o.m1 = 4;
  o.m2 = 9;
  o.kappa1 = 4;
  o.kappa2 = make_rational(54, 5);
  o.kappa = 2;
  EigenFreqs e = eigenfreqs(o, crossing_param(o), make_rational(1, 2));
  ASSERT_TRUE(e.plus_exact);
  EXPECT_EQ(Rational(*e.plus_exact - *e.minus_exact), make_rational(1, 3));
}

TEST(EigenFreqs, OmegaStar) {
  const double s = std::sqrt(to_double(omega_star_sq));
  EXPECT_NEAR(s, 1.0444659, 1e-7);
  EXPECT_NEAR(s, 1.044, 5e-4);
  EXPECT_THROW(eigenfreqs(data(), 0, -1), std::invalid_argument);
}

TEST(Crossing, Param) {
  EXPECT_EQ(crossing_param(data()), pstar);
  OscillatorPair o = data();
  o.kappa2 = 1;
  EXPECT_EQ(crossing_param(o), Rational(0));
  o = data();
  o.alpha1 = o.alpha2 = 0;
  try {
    crossing_param(o);
    FAIL();
  } catch (const std::domain_error& e) {
    EXPECT_NE(std::string(e.what()).find("no transversal crossing"), std::string::npos);
  }
  // alpha1 kappa1 / m1 = alpha2 kappa2 / m2 with distinct ratios.
  o = data();
  o.alpha1 = make_rational(6, 5);
  o.alpha2 = 1;
  EXPECT_THROW(crossing_param(o), std::domain_error);
}

TEST(Characteristic, Remainder) {
  auto f = factorize_coupled(characteristic_system(data(), make_rational(1, 7)));
  EXPECT_EQ(f.remainder, -(var("b").pow(2)));
  EXPECT_TRUE(f.remainder.partial_eval("b", Rational(0)).is_zero());
  OscillatorPair o = data();
  o.m1 = 2;
  o.m2 = 3;
  o.kappa = 5;
  auto g = factorize_coupled(characteristic_system(o, 0));
  EXPECT_EQ(g.remainder, MultiPoly(make_rational(-25, 6)) * var("b").pow(2));
  auto [W1, W2] = partial_freqs(o, 0);
  EXPECT_EQ(g.g1, var("w").pow(2) - MultiPoly(W1));
  EXPECT_EQ(g.g2, var("w").pow(2) - MultiPoly(W2));
}

TEST(Characteristic, RootsAtCrossing) {
  auto roots = real_roots(characteristic_in_w2(data(), pstar, make_rational(2, 5)));
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_EQ(roots[0].exact, std::optional<Rational>(Rational(omega_star_sq - make_rational(2, 5))));
  EXPECT_EQ(roots[1].exact, std::optional<Rational>(Rational(omega_star_sq + make_rational(2, 5))));
}

TEST(Characteristic, ClosedFormMatchesDeterminantRoots) {
  int checked = 0;
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) {
      const Rational p = make_rational(-1, 20) + make_rational(i, 40);
      const Rational b = make_rational(j, 11);
      EigenFreqs e = eigenfreqs(data(), p, b);
      auto z = real_roots(characteristic_in_w2(data(), p, b));
      auto zs = expand_multiplicities(z);
      ASSERT_EQ(zs.size(), 2u);
      EXPECT_NEAR(zs[0], e.minus, 1e-12);
      EXPECT_NEAR(zs[1], e.plus, 1e-12);
      // Straight from det in w: roots are +-omega.
      MultiPoly d = det(characteristic_system(data(), p).system()).partial_eval("b", b);
      auto ws = expand_multiplicities(real_roots(d));
      ASSERT_EQ(ws.size(), 4u);
      EXPECT_NEAR(ws[2] * ws[2], e.minus, 1e-12);
      EXPECT_NEAR(ws[3] * ws[3], e.plus, 1e-12);
      ++checked;
    }
  EXPECT_EQ(checked, 100);
}

TEST(EigenFreqs, Interlacing) {
  OscillatorPair o = data();
  for (int i = 0; i <= 20; ++i) {
    const Rational p = make_rational(-1, 20) + make_rational(i, 80);
    auto [W1, W2] = partial_freqs(o, p);
    const double lo = to_double(std::min(W1, W2)), hi = to_double(std::max(W1, W2));
    EigenFreqs e0 = eigenfreqs(o, p, 0);
    EXPECT_NEAR(e0.minus, lo, 1e-15);
    EXPECT_NEAR(e0.plus, hi, 1e-15);
    for (const Rational& b : {make_rational(1, 5), make_rational(3, 5)}) {
      EigenFreqs e = eigenfreqs(o, p, b);
      EXPECT_LT(e.minus, lo);
      EXPECT_GT(e.plus, hi);
    }
  }
}

TEST(Sweep, BareCrossing) {
  OscillatorPair o = data();
  o.p_limit.reset();
  auto grid = linear_grid(make_rational(-1, 20), make_rational(23, 100), 541);
  grid.push_back(pstar);
  std::sort(grid.begin(), grid.end());
  auto traces = sweep(o, grid, {Rational(0)});
  ASSERT_EQ(traces.size(), 2u);
  auto it = std::find(grid.begin(), grid.end(), pstar);
  const std::size_t i = static_cast<std::size_t>(it - grid.begin());
  const double s = std::sqrt(12.0 / 11.0);
  EXPECT_NEAR(traces[0].samples[i].omega, s, 1e-15);
  EXPECT_NEAR(traces[1].samples[i].omega, s, 1e-15);
  EXPECT_NEAR(traces[0].samples[i].k, 1.0 / 11.0, 1e-17);
  EXPECT_EQ(traces[0].model, "mech");
}

TEST(Sweep, MinimumGapAtCrossing) {
  OscillatorPair o = data();
  o.p_limit.reset();
  auto grid = linear_grid(make_rational(-1, 20), make_rational(23, 100), 541);
  const double step = (0.23 + 0.05) / 540;
  double prev_gap = 0;
  for (const Rational& b : {make_rational(1, 5), make_rational(2, 5), make_rational(3, 5)}) {
    const Rational pmin = min_gap_param(o, grid, b);
    EXPECT_LE(std::fabs(to_double(pmin) - 1.0 / 11.0), step);
    EigenFreqs e = eigenfreqs(o, pstar, b);
    const double gap = e.plus - e.minus;
    EXPECT_NEAR(gap, 2 * to_double(b), 1e-15);
    EXPECT_GT(gap, prev_gap);
    prev_gap = gap;
    for (const auto& p : grid) {
      EigenFreqs f = eigenfreqs(o, p, b);
      EXPECT_GE(f.plus - f.minus, gap - 1e-15);
    }
  }
  EXPECT_DOUBLE_EQ(eigenfreqs(o, pstar, make_rational(1, 5)).plus - eigenfreqs(o, pstar, make_rational(1, 5)).minus,
                   0.4);
}

TEST(Sweep, PLimitAndErrors) {
  OscillatorPair o = data();
  EXPECT_THROW(eigenfreqs(o, make_rational(23, 100), 0), std::domain_error);
  EXPECT_NO_THROW(eigenfreqs(o, make_rational(1, 5), 0));
  o.p_limit = make_rational(1, 4);
  EXPECT_NO_THROW(eigenfreqs(o, make_rational(23, 100), 0));
  EXPECT_THROW(sweep(o, {}, {Rational(0)}), std::invalid_argument);
  EXPECT_THROW(sweep(o, {Rational(0)}, {}), std::invalid_argument);
  EXPECT_THROW(min_gap_param(o, {}, 0), std::invalid_argument);
}
