#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "fdisp/crosspoint.hpp"
#include "fdisp/lagparse.hpp"
#include "fdisp/lagrangian.hpp"
#include "fdisp/models/kirchhoff.hpp"
#include "fdisp/models/mindlin.hpp"
#include "fdisp/models/twt.hpp"
#include "fdisp/models/wing.hpp"
#include "oracles.hpp"

using namespace fdisp;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(FDISP_DATA_DIR) + "/" + name);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

QuadraticLagrangian load(const std::string& name) {
  ParseOutcome out = parse_lagrangian(slurp(name));
  if (!out.ok()) throw std::runtime_error(name + " failed to parse");
  return *out.lagrangian;
}

// 1/2 (u_t^2 - c^2 u_x^2) built directly.
QuadraticLagrangian wave() {
  QuadraticLagrangian raw;
  raw.dim = 1;
  raw.fields = {"u"};
  const Slot t{0, {1, 0}}, x{0, {0, 1}};
  raw.coeff[{t, t}] = MultiPoly(1);
  raw.coeff[{x, x}] = -(var("c").pow(2));
  return symmetrize(raw);
}

}  // namespace

TEST(Symmetrize, SymmetricUnchanged) {
  QuadraticLagrangian w = wave();
  EXPECT_EQ(symmetrize(w), w);
}

TEST(Symmetrize, SplitsOffDiagonal) {
  QuadraticLagrangian raw;
  raw.dim = 1;
  raw.fields = {"u", "v"};
  const Slot ut{0, {1, 0}}, vx{1, {0, 1}};
  raw.coeff[{ut, vx}] = MultiPoly(2);
  QuadraticLagrangian s = symmetrize(raw);
  EXPECT_EQ(s.a(ut, vx), MultiPoly(1));
  EXPECT_EQ(s.a(vx, ut), MultiPoly(1));
  EXPECT_TRUE(s.is_symmetric());
}

TEST(Symmetrize, WingCrossTermSplitsEqually) {
  QuadraticLagrangian lag = load("wing.lag");
  const Slot theta_xx{0, {0, 2}}, u_xx{1, {0, 2}};
  MultiPoly expect = -(var("EI") * var("a") * var("b"));
  EXPECT_EQ(lag.a(u_xx, theta_xx), expect);
  EXPECT_EQ(lag.a(theta_xx, u_xx), expect);
}

TEST(Symbol, WaveEquation) {
  GaussMatrix m = symbol_matrix(wave());
  ASSERT_EQ(m.rows(), 1u);
  EXPECT_TRUE(m(0, 0).is_real());
  EXPECT_EQ(m(0, 0).re, var("w").pow(2) - var("c").pow(2) * var("k").pow(2));
  EXPECT_EQ(dispersion_poly(wave()), var("w").pow(2) - var("c").pow(2) * var("k").pow(2));
}

TEST(Symbol, FirstOrderCrossTermIsReal) {
  // u_t u_x: symbol (-i w)(conj i k) pairing gives a real w k entry.
  QuadraticLagrangian raw;
  raw.dim = 1;
  raw.fields = {"u"};
  raw.coeff[{Slot{0, {1, 0}}, Slot{0, {0, 1}}}] = MultiPoly(2);
  GaussMatrix m = symbol_matrix(symmetrize(raw));
  EXPECT_TRUE(m(0, 0).is_real());
  EXPECT_EQ(m(0, 0).re.total_degree(), 2u);
}

TEST(Symbol, WingMatchesHandMatrixUpToSignature) {
  GaussMatrix m = symbol_matrix(load("wing.lag"));
  auto sig = equal_up_to_signature(real_part(m), wing_matrix(WingCoeffs::symbolic()));
  ASSERT_TRUE(sig);
  EXPECT_EQ((*sig)[1] * (*sig)[2], -1);
  EXPECT_EQ(dispersion_poly(load("wing.lag")), wing_dispersion(WingCoeffs::symbolic()));
}

TEST(Symbol, KirchhoffPlate) {
  QuadraticLagrangian lag = load("kirchhoff.lag");
  GaussMatrix m = symbol_matrix(lag);
  EXPECT_EQ(m(0, 0).re, kirchhoff_dispersion(var("rho"), var("h"), var("D")));
  EXPECT_EQ(dispersion_poly(lag), kirchhoff_dispersion(var("rho"), var("h"), var("D")));
}

TEST(Symbol, KirchhoffNullTermsChangeNothing) {
  std::istringstream in(slurp("kirchhoff.lag"));
  std::string line, bare;
  int dropped = 0;
  while (std::getline(in, line)) {
    if (line.find("# null") != std::string::npos) {
      ++dropped;
      continue;
    }
    bare += line + "\n";
  }
  ASSERT_EQ(dropped, 4);
  ParseOutcome b = parse_lagrangian(bare);
  ASSERT_TRUE(b.ok());
  EXPECT_NE(b.lagrangian->coeff.size(), load("kirchhoff.lag").coeff.size());
  EXPECT_EQ(symbol_matrix(*b.lagrangian), symbol_matrix(load("kirchhoff.lag")));
}

TEST(Symbol, MindlinIsHermitianAndMatchesHandMatrix) {
  GaussMatrix m = symbol_matrix(load("mindlin.lag"));
  EXPECT_EQ(m, mindlin_full_matrix(MindlinCoeffs::symbolic()));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_EQ(m(i, j).re, m(j, i).re);
      EXPECT_EQ(m(i, j).im, -m(j, i).im);
    }
}

TEST(Dispersion, CrossPointLagrangian) {
  const MultiPoly w = var("w"), k = var("k");
  EXPECT_EQ(dispersion_poly(load("crosspoint.lag")), (w + var("g1") * k) * (w + var("g2") * k) - var("gg"));
}

TEST(Dispersion, TwtLagrangianIsMinusCTimesPhysicalMatrix) {
  TwtParams p{make_rational(3, 2), make_rational(2), make_rational(4), make_rational(5, 3), make_rational(2),
              make_rational(1, 4), make_rational(1, 2)};
  auto vals = twt_lagrangian_values(p);
  vals.erase("b");
  PolyMatrix m = real_part(specialize(symbol_matrix(load("twt.lag")), vals));
  EXPECT_EQ(MultiPoly(Rational(-p.C)) * m, twt_physical_matrix(p));
  MultiPoly d = dispersion_poly(load("twt.lag")).partial_eval(vals);
  EXPECT_EQ(MultiPoly(Rational(p.C * p.C)) * d, det(twt_physical_matrix(p)));
}

TEST(Dispersion, ScalingByLambdaToTheN) {
  QuadraticLagrangian lag = load("wing.lag");
  const Rational s = make_rational(-3, 2);
  EXPECT_EQ(dispersion_poly(scaled(lag, s)), dispersion_poly(lag).scaled(Rational(s * s)));
  QuadraticLagrangian m = load("mindlin.lag");
  EXPECT_EQ(dispersion_poly(scaled(m, s)), dispersion_poly(m).scaled(Rational(s * s * s)));
}

TEST(Dispersion, SymbolDeterminantMatchesLeibniz) {
  QuadraticLagrangian lag = load("mindlin.lag");
  GaussPoly d = oracle::leibniz_det(symbol_matrix(lag));
  ASSERT_TRUE(d.is_real());
  EXPECT_EQ(dispersion_poly(lag), d.re);
}

TEST(Dispersion, RoundTripRandomQuadratics) {
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  for (int t = 0; t < 50; ++t) {
    QuadDispersion q{make_rational(num(rng) == 0 ? 1 : num(rng), den(rng)), make_rational(num(rng), den(rng)),
                     make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))};
    if (sgn(q.A) == 0) q.A = 1;
    EXPECT_EQ(dispersion_poly(crosspoint_lagrangian(q)), quad_dispersion_poly(q));
  }
}

TEST(Specialize, DeclaredValues) {
  QuadraticLagrangian lag = load("wave.lag");
  GaussMatrix m = specialize(symbol_matrix(lag), lag.params);
  EXPECT_EQ(m(0, 0).re, var("w").pow(2) - var("k").pow(2));
}
