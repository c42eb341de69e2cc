#pragma once

// Line-oriented Lagrangian description language (.lag):
//
//   # comment
//   dim 1
//   fields u
//   param c 1
//   coupling b            (optional; names a declared param)
//   term 1/2 dt(u) dt(u)
//   term -1/2*c^2 dx(u) dx(u)
//
// Each `term c X Y` adds c * X * Y to the Lagrangian, where X and Y are
// derivative tokens d<axes>(<field>) with axes drawn from t, x, y, z
// (d(u) is the field itself). The coefficient is a product of rationals
// and declared parameters with non-negative integer powers.

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "fdisp/lagrangian.hpp"
#include "fdisp/rational.hpp"

namespace fdisp {

struct ParseDiagnostic {
  enum class Severity { error, warning };
  std::size_t line = 0;
  std::size_t column = 0;
  std::string message;
  Severity severity = Severity::error;

  std::string str() const {
    return std::to_string(line) + ":" + std::to_string(column) + ": " +
           (severity == Severity::error ? "error" : "warning") + ": " + message;
  }
};

struct ParseOutcome {
  std::optional<QuadraticLagrangian> lagrangian;
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const { return lagrangian.has_value(); }
  std::size_t error_count() const {
    std::size_t n = 0;
    for (const auto& d : diagnostics) n += d.severity == ParseDiagnostic::Severity::error;
    return n;
  }
};

namespace detail {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> split_tokens(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

inline bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

inline bool looks_like_derivative(std::string_view s) {
  return s.size() >= 4 && s[0] == 'd' && s.find('(') != std::string_view::npos && s.back() == ')';
}

class LagParser {
 public:
  explicit LagParser(std::string_view src) { split_lines(src); }

  ParseOutcome run() {
    declarations();
    if (dim_line_ == 0 && !has_errors()) error(1, 1, "missing `dim` declaration");
    terms();
    for (const auto& [name, line_col] : param_pos_)
      if (!used_params_.count(name) && lag_.coupling != name)
        warn(line_col.first, line_col.second, "parameter '" + name + "' is declared but never used");
    ParseOutcome out;
    out.diagnostics = diags_;
    if (!has_errors()) out.lagrangian = symmetrize(lag_);
    return out;
  }

 private:
  struct Line {
    std::size_t number;
    std::vector<Token> tokens;
  };

  void split_lines(std::string_view src) {
    std::size_t number = 1;
    std::size_t start = 0;
    while (start <= src.size()) {
      std::size_t end = src.find('\n', start);
      if (end == std::string_view::npos) end = src.size();
      std::string_view line = src.substr(start, end - start);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      std::size_t hash = line.find('#');
      if (hash != std::string_view::npos) line = line.substr(0, hash);
      auto toks = split_tokens(line);
      if (!toks.empty()) lines_.push_back({number, std::move(toks)});
      ++number;
      if (end == src.size()) break;
      start = end + 1;
    }
  }

  void declarations() {
    for (const auto& ln : lines_) {
      const auto& t = ln.tokens;
      std::string_view kw = t[0].text;
      if (kw == "dim") {
        if (dim_line_ != 0) {
          error(ln.number, t[0].column, "duplicate `dim` declaration");
          continue;
        }
        if (t.size() != 2) {
          error(ln.number, t[0].column, "`dim` takes exactly one integer argument");
          continue;
        }
        auto q = parse_rational(t[1].text);
        if (!q || !is_integer(*q) || *q < 0 || *q > 3) {
          error(ln.number, t[1].column, "spatial dimension must be an integer between 0 and 3");
          continue;
        }
        dim_line_ = ln.number;
        lag_.dim = static_cast<unsigned>(q->get_num().get_ui());
      } else if (kw == "fields") {
        for (std::size_t i = 1; i < t.size(); ++i) {
          std::string name(t[i].text);
          if (!is_identifier(name)) {
            error(ln.number, t[i].column, "invalid field name '" + name + "'");
          } else if (is_reserved_name(name)) {
            error(ln.number, t[i].column, "'" + name + "' is reserved for frequency/wavenumber variables");
          } else if (field_index_.count(name)) {
            error(ln.number, t[i].column, "duplicate field '" + name + "'");
          } else {
            field_index_[name] = lag_.fields.size();
            lag_.fields.push_back(name);
          }
        }
      } else if (kw == "param") {
        if (t.size() != 3) {
          error(ln.number, t[0].column, "`param` takes a name and a rational value");
          continue;
        }
        std::string name(t[1].text);
        auto q = parse_rational(t[2].text);
        if (!is_identifier(name)) {
          error(ln.number, t[1].column, "invalid parameter name '" + name + "'");
        } else if (is_reserved_name(name)) {
          error(ln.number, t[1].column, "'" + name + "' is reserved for frequency/wavenumber variables");
        } else if (lag_.params.count(name)) {
          error(ln.number, t[1].column, "duplicate parameter '" + name + "'");
        } else if (!q) {
          error(ln.number, t[2].column, "numeric literal '" + std::string(t[2].text) + "' is not a rational");
        } else {
          lag_.params[name] = *q;
          param_pos_[name] = {ln.number, t[1].column};
        }
      } else if (kw == "coupling") {
        if (t.size() != 2) {
          error(ln.number, t[0].column, "`coupling` takes one parameter name");
          continue;
        }
        coupling_tok_ = {ln.number, t[1]};
      } else if (kw != "term") {
        error(ln.number, t[0].column, "unknown keyword '" + std::string(kw) + "'");
      }
    }
    for (const auto& [name, pos] : param_pos_)
      if (field_index_.count(name)) error(pos.first, pos.second, "parameter '" + name + "' clashes with a field name");
    if (coupling_tok_) {
      std::string name(coupling_tok_->second.text);
      if (!lag_.params.count(name))
        error(coupling_tok_->first, coupling_tok_->second.column, "coupling parameter '" + name + "' is not declared");
      else
        lag_.coupling = name;
    }
  }

  void terms() {
    for (const auto& ln : lines_) {
      if (ln.tokens[0].text != "term") continue;
      const auto& t = ln.tokens;
      if (t.size() < 2) {
        error(ln.number, t[0].column, "`term` needs a coefficient and two derivative factors");
        continue;
      }
      std::size_t first_deriv = looks_like_derivative(t[1].text) ? 1 : 2;
      MultiPoly coef(1);
      bool ok = true;
      if (first_deriv == 2) {
        auto c = coefficient(ln.number, t[1]);
        if (!c)
          ok = false;
        else
          coef = *c;
      }
      std::size_t nderiv = t.size() - first_deriv;
      if (nderiv != 2) {
        std::size_t col = nderiv > 2 ? t[first_deriv + 2].column : t.back().column;
        error(ln.number, col, "term is not quadratic (" + std::to_string(nderiv) + " derivative factors)");
        continue;
      }
      auto x = derivative(ln.number, t[first_deriv]);
      auto y = derivative(ln.number, t[first_deriv + 1]);
      if (!ok || !x || !y) continue;
      // c X Y contributes a_{XY} = a_{YX} = c when X != Y and a_{XX} = 2c.
      lag_.coeff[{*x, *y}] += coef.scaled(Rational(2));
      if (lag_.coeff[{*x, *y}].is_zero()) lag_.coeff.erase({*x, *y});
    }
  }

  std::optional<MultiPoly> coefficient(std::size_t line, const Token& tok) {
    std::string_view s = tok.text;
    std::size_t offset = 0;
    MultiPoly c(1);
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
      if (s[0] == '-') c = MultiPoly(-1);
      offset = 1;
    }
    bool ok = true;
    while (true) {
      std::size_t star = s.find('*', offset);
      std::string_view f = s.substr(offset, star == std::string_view::npos ? std::string_view::npos : star - offset);
      std::size_t col = tok.column + offset;
      if (f.empty()) {
        error(line, std::min(col, tok.column + s.size() - 1), "empty factor in coefficient");
        return std::nullopt;
      }
      if (std::isdigit(static_cast<unsigned char>(f[0])) || f[0] == '.') {
        auto q = parse_rational(f);
        if (!q) {
          error(line, col, "numeric literal '" + std::string(f) + "' is not a rational");
          ok = false;
        } else {
          c = c.scaled(*q);
        }
      } else {
        std::size_t caret = f.find('^');
        std::string name(f.substr(0, caret));
        unsigned power = 1;
        if (caret != std::string_view::npos) {
          auto e = parse_rational(f.substr(caret + 1));
          if (!e || !is_integer(*e) || *e < 0 || *e > 64) {
            error(line, col + caret, "exponent must be a non-negative integer");
            ok = false;
          } else {
            power = static_cast<unsigned>(e->get_num().get_ui());
          }
        }
        if (!lag_.params.count(name)) {
          error(line, col, "undeclared parameter '" + name + "'");
          ok = false;
        } else {
          used_params_.insert(name);
          c *= MultiPoly::variable(name).pow(power);
        }
      }
      if (star == std::string_view::npos) break;
      offset = star + 1;
    }
    if (!ok) return std::nullopt;
    return c;
  }

  std::optional<Slot> derivative(std::size_t line, const Token& tok) {
    std::string_view s = tok.text;
    std::size_t open = s.find('(');
    if (s.empty() || s[0] != 'd' || open == std::string_view::npos || s.back() != ')') {
      error(line, tok.column, "expected a derivative factor d<axes>(<field>), got '" + std::string(s) + "'");
      return std::nullopt;
    }
    Slot slot;
    slot.mi.assign(lag_.dim + 1, 0);
    bool ok = true;
    for (std::size_t i = 1; i < open; ++i) {
      char a = s[i];
      std::size_t axis;
      if (a == 't')
        axis = 0;
      else if (a == 'x')
        axis = 1;
      else if (a == 'y')
        axis = 2;
      else if (a == 'z')
        axis = 3;
      else {
        error(line, tok.column + i, std::string("unknown derivative axis '") + a + "'");
        ok = false;
        continue;
      }
      if (axis > lag_.dim) {
        error(line, tok.column + i,
              std::string("derivative axis '") + a + "' exceeds spatial dimension " + std::to_string(lag_.dim));
        ok = false;
        continue;
      }
      ++slot.mi[axis];
    }
    std::string field(s.substr(open + 1, s.size() - open - 2));
    auto it = field_index_.find(field);
    if (it == field_index_.end()) {
      error(line, tok.column + open + 1, "unknown field '" + field + "'");
      return std::nullopt;
    }
    slot.field = it->second;
    if (!ok) return std::nullopt;
    return slot;
  }

  void error(std::size_t line, std::size_t col, std::string msg) {
    diags_.push_back({line, col, std::move(msg), ParseDiagnostic::Severity::error});
  }
  void warn(std::size_t line, std::size_t col, std::string msg) {
    diags_.push_back({line, col, std::move(msg), ParseDiagnostic::Severity::warning});
  }
  bool has_errors() const {
    for (const auto& d : diags_)
      if (d.severity == ParseDiagnostic::Severity::error) return true;
    return false;
  }

  std::vector<Line> lines_;
  QuadraticLagrangian lag_;
  std::size_t dim_line_ = 0;
  std::map<std::string, std::size_t> field_index_;
  std::map<std::string, std::pair<std::size_t, std::size_t>> param_pos_;
  std::optional<std::pair<std::size_t, Token>> coupling_tok_;
  std::set<std::string> used_params_;
  std::vector<ParseDiagnostic> diags_;
};

inline std::string derivative_token(const Slot& s, const std::vector<std::string>& fields) {
  static const char axes[] = {'t', 'x', 'y', 'z'};
  std::string out = "d";
  for (std::size_t a = 0; a < s.mi.size(); ++a) out.append(s.mi[a], axes[a]);
  return out + "(" + fields.at(s.field) + ")";
}

}  // namespace detail

inline ParseOutcome parse_lagrangian(std::string_view src) { return detail::LagParser(src).run(); }

// Canonical text. Off-diagonal pairs (X, Y) with X < Y are written once with
// coefficient a_{XY}; diagonal pairs with a_{XX}/2. One line per monomial.
inline std::string render_lagrangian(const QuadraticLagrangian& lag) {
  std::ostringstream os;
  os << "dim " << lag.dim << "\nfields";
  for (const auto& f : lag.fields) os << ' ' << f;
  os << '\n';
  for (const auto& [name, v] : lag.params) os << "param " << name << ' ' << to_string(v) << '\n';
  if (lag.coupling) os << "coupling " << *lag.coupling << '\n';
  for (const auto& [key, a] : lag.coeff) {
    const auto& [x, y] = key;
    if (y < x) continue;
    MultiPoly c = (x == y) ? a.scaled(make_rational(1, 2)) : a;
    for (const auto& [e, q] : c.terms()) {
      std::string coef = to_string(q);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        coef += '*' + c.variables()[i];
        if (e[i] > 1) coef += '^' + std::to_string(e[i]);
      }
      os << "term " << coef << ' ' << detail::derivative_token(x, lag.fields) << ' '
         << detail::derivative_token(y, lag.fields) << '\n';
    }
  }
  return os.str();
}

}  // namespace fdisp
