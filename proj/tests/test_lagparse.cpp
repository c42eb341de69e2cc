#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "fdisp/crosspoint.hpp"
#include "fdisp/lagparse.hpp"
#include "fdisp/models/wing.hpp"

using namespace fdisp;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(FDISP_DATA_DIR) + "/" + name);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ParseDiagnostic first_error(const std::string& src) {
  ParseOutcome out = parse_lagrangian(src);
  EXPECT_FALSE(out.ok()) << src;
  EXPECT_FALSE(out.diagnostics.empty());
  return out.diagnostics.empty() ? ParseDiagnostic{} : out.diagnostics.front();
}

const char* kWave = "dim 1\nfields u\nparam c 1\nterm 1/2 dt(u) dt(u)\nterm -1/2*c^2 dx(u) dx(u)\n";

// Column of the first occurrence of tok on the given 1-based line.
std::size_t column_of(const std::string& src, std::size_t line, const std::string& tok) {
  std::istringstream in(src);
  std::string l;
  for (std::size_t i = 0; i < line; ++i) std::getline(in, l);
  return l.find(tok) + 1;
}

}  // namespace

TEST(Parse, WaveEquation) {
  ParseOutcome out = parse_lagrangian(kWave);
  ASSERT_TRUE(out.ok());
  const QuadraticLagrangian& lag = *out.lagrangian;
  EXPECT_EQ(lag.dim, 1u);
  EXPECT_EQ(lag.fields, std::vector<std::string>{"u"});
  EXPECT_EQ(lag.params.at("c"), Rational(1));
  const Slot t{0, {1, 0}}, x{0, {0, 1}};
  EXPECT_EQ(lag.a(t, t), MultiPoly(1));
  EXPECT_EQ(lag.a(x, x), -(var("c").pow(2)));
  EXPECT_EQ(lag.coeff.size(), 2u);
}

TEST(Parse, WingFileGivesWingMatrix) {
  ParseOutcome out = parse_lagrangian(slurp("wing.lag"));
  ASSERT_TRUE(out.ok());
  EXPECT_EQ(out.lagrangian->coupling, std::optional<std::string>("b"));
  PolyMatrix m = real_part(symbol_matrix(*out.lagrangian));
  EXPECT_TRUE(equal_up_to_signature(m, wing_matrix(WingCoeffs::symbolic())));
}

TEST(Parse, AllDataFilesParse) {
  for (const char* f : {"wave.lag", "wing.lag", "twt.lag", "mindlin.lag", "kirchhoff.lag", "crosspoint.lag"}) {
    ParseOutcome out = parse_lagrangian(slurp(f));
    EXPECT_TRUE(out.ok()) << f;
    if (out.ok()) {
      EXPECT_TRUE(out.lagrangian->is_symmetric()) << f;
    }
  }
}

TEST(Parse, CommentsAndBlankLines) {
  ParseOutcome out = parse_lagrangian("# header\n\ndim 1   # trailing\nfields u\n\nterm 1 dt(u) dt(u) # kinetic\n");
  ASSERT_TRUE(out.ok());
  EXPECT_EQ(out.lagrangian->coeff.size(), 1u);
}

TEST(Parse, ParamOrderIrrelevant) {
  ParseOutcome a = parse_lagrangian("dim 1\nfields u\nparam a 2\nparam c 3\nterm a*c dt(u) dx(u)\n");
  ParseOutcome b = parse_lagrangian("dim 1\nfields u\nparam c 3\nparam a 2\nterm a*c dt(u) dx(u)\n");
  ASSERT_TRUE(a.ok() && b.ok());
  EXPECT_EQ(*a.lagrangian, *b.lagrangian);
}

TEST(Parse, NonQuadraticTerm) {
  std::string src = "dim 1\nfields u\nterm 1 dt(u) dt(u) dt(u)\n";
  ParseDiagnostic d = first_error(src);
  EXPECT_EQ(d.line, 3u);
  EXPECT_NE(d.message.find("term is not quadratic"), std::string::npos);
}

TEST(Parse, UnknownField) {
  std::string src = "dim 1\nfields u\nterm 1 dt(u) dt(v)\n";
  ParseDiagnostic d = first_error(src);
  EXPECT_EQ(d.line, 3u);
  EXPECT_EQ(d.column, column_of(src, 3, "v)"));
  EXPECT_NE(d.message.find("unknown field"), std::string::npos);
}

TEST(Parse, AxisBeyondDimension) {
  std::string src = "dim 1\nfields u\nterm 1 dy(u) dy(u)\n";
  ParseDiagnostic d = first_error(src);
  EXPECT_EQ(d.line, 3u);
  EXPECT_EQ(d.column, column_of(src, 3, "y"));
}

TEST(Parse, DuplicateField) {
  std::string src = "dim 1\nfields u v u\n";
  ParseDiagnostic d = first_error(src);
  EXPECT_EQ(d.line, 2u);
  EXPECT_EQ(d.column, 12u);
  EXPECT_NE(d.message.find("duplicate field"), std::string::npos);
}

TEST(Parse, NonRationalLiteral) {
  std::string src = "dim 1\nfields u\nparam c 1/0\n";
  ParseDiagnostic d = first_error(src);
  EXPECT_EQ(d.line, 3u);
  EXPECT_EQ(d.column, 9u);
  EXPECT_NE(d.message.find("not a rational"), std::string::npos);
  ParseDiagnostic e = first_error("dim 1\nfields u\nterm 1/2x dt(u) dt(u)\n");
  EXPECT_NE(e.message.find("not a rational"), std::string::npos);
}

TEST(Parse, UndeclaredParameter) {
  std::string src = "dim 1\nfields u\nterm 1/2*c dt(u) dt(u)\n";
  ParseDiagnostic d = first_error(src);
  EXPECT_EQ(d.line, 3u);
  EXPECT_EQ(d.column, column_of(src, 3, "c "));
}

TEST(Parse, ReservedNamesAndMissingDim) {
  EXPECT_NE(first_error("dim 1\nfields w\n").message.find("reserved"), std::string::npos);
  EXPECT_NE(first_error("fields u\n").message.find("dim"), std::string::npos);
  EXPECT_NE(first_error("dim 1\nfields u\ncoupling b\n").message.find("not declared"), std::string::npos);
  EXPECT_NE(first_error("dim 1\nfields u\nbogus 3\n").message.find("unknown keyword"), std::string::npos);
}

TEST(Parse, DiagnosticsCarryLocations) {
  std::string src = "dim 1\nfields u\nterm 1 dt(u)\nterm 1 dq(u) dt(u)\n";
  ParseOutcome out = parse_lagrangian(src);
  ASSERT_FALSE(out.ok());
  ASSERT_GE(out.diagnostics.size(), 2u);
  for (const auto& d : out.diagnostics) {
    EXPECT_GE(d.line, 1u);
    EXPECT_GE(d.column, 1u);
    EXPECT_NE(d.str().find(std::to_string(d.line) + ":" + std::to_string(d.column)), std::string::npos);
  }
}

TEST(Render, WaveRoundTrip) {
  QuadraticLagrangian lag = *parse_lagrangian(kWave).lagrangian;
  ParseOutcome again = parse_lagrangian(render_lagrangian(lag));
  ASSERT_TRUE(again.ok());
  EXPECT_EQ(*again.lagrangian, lag);
}

TEST(Render, DataFilesRoundTrip) {
  for (const char* f : {"wing.lag", "twt.lag", "mindlin.lag", "kirchhoff.lag", "crosspoint.lag"}) {
    QuadraticLagrangian lag = *parse_lagrangian(slurp(f)).lagrangian;
    ParseOutcome again = parse_lagrangian(render_lagrangian(lag));
    ASSERT_TRUE(again.ok()) << f;
    EXPECT_EQ(*again.lagrangian, lag) << f;
  }
}

TEST(Render, EmptyLagrangian) {
  QuadraticLagrangian empty;
  EXPECT_EQ(render_lagrangian(empty), "dim 0\nfields\n");
  ParseOutcome again = parse_lagrangian(render_lagrangian(empty));
  ASSERT_TRUE(again.ok());
  EXPECT_EQ(*again.lagrangian, empty);
}

TEST(Render, RandomCrossPointRoundTrip) {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> num(-12, 12), den(1, 9);
  for (int t = 0; t < 50; ++t) {
    QuadDispersion q{make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)),
                     make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))};
    QuadraticLagrangian lag = crosspoint_lagrangian(q);
    ParseOutcome again = parse_lagrangian(render_lagrangian(lag));
    ASSERT_TRUE(again.ok());
    EXPECT_EQ(*again.lagrangian, lag);
  }
}
