#pragma once

// Branch tracing: real roots in w at each grid point, threaded into
// continuous branches by matching against a linear prediction.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fdisp/roots.hpp"

namespace fdisp {

struct BranchSample {
  double k;
  double omega;
};

struct BranchTrace {
  int id = 0;
  std::vector<BranchSample> samples;
  std::string model;
  double b = 0.0;
  std::map<std::string, Rational> params;
};

// Evenly spaced rational grid lo, lo + h, ..., hi with n points.
inline std::vector<Rational> linear_grid(const Rational& lo, const Rational& hi, std::size_t n) {
  if (n == 0) throw std::invalid_argument("grid must have at least one point");
  if (n == 1) return {lo};
  if (!(hi > lo)) throw std::invalid_argument("grid needs lo < hi");
  std::vector<Rational> g(n);
  const Rational step = (hi - lo) / static_cast<long>(n - 1);
  for (std::size_t i = 0; i < n; ++i) g[i] = lo + step * static_cast<long>(i);
  return g;
}

namespace detail {

struct Active {
  int id;
  double last;
  double pred;
};

// Monotone matching of sorted predictions to sorted roots minimizing the
// total |difference| when the counts differ. Returns, for each prediction,
// the index of its root or -1.
inline std::vector<int> monotone_match(const std::vector<double>& pred, const std::vector<double>& roots) {
  const std::size_t n = pred.size(), m = roots.size();
  const double inf = std::numeric_limits<double>::infinity();
  // cost[i][j]: best cost matching first i predictions against first j roots,
  // with min(n, m) pairs in total.
  std::vector<std::vector<double>> cost(n + 1, std::vector<double>(m + 1, inf));
  std::vector<std::vector<int>> move(n + 1, std::vector<int>(m + 1, 0));
  cost[0][0] = 0;
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= m; ++j) {
      if (cost[i][j] == inf) continue;
      if (i < n && j < m && cost[i][j] + std::fabs(pred[i] - roots[j]) < cost[i + 1][j + 1]) {
        cost[i + 1][j + 1] = cost[i][j] + std::fabs(pred[i] - roots[j]);
        move[i + 1][j + 1] = 0;
      }
      if (n > m && i < n && static_cast<long>(i) - static_cast<long>(j) < static_cast<long>(n - m) && cost[i][j] < cost[i + 1][j]) {
        cost[i + 1][j] = cost[i][j];
        move[i + 1][j] = 1;  // prediction i unmatched
      }
      if (m > n && j < m && static_cast<long>(j) - static_cast<long>(i) < static_cast<long>(m - n) && cost[i][j] < cost[i][j + 1]) {
        cost[i][j + 1] = cost[i][j];
        move[i][j + 1] = 2;  // root j unmatched
      }
    }
  std::vector<int> out(n, -1);
  std::size_t i = n, j = m;
  while (i > 0 || j > 0) {
    int mv = move[i][j];
    if (mv == 0) {
      out[i - 1] = static_cast<int>(j - 1);
      --i;
      --j;
    } else if (mv == 1) {
      --i;
    } else {
      --j;
    }
  }
  return out;
}

}  // namespace detail

// Roots of dispersion(k, w) in w at each k, threaded into branches.
inline std::vector<BranchTrace> trace_branches(const MultiPoly& dispersion, const std::vector<Rational>& kgrid,
                                               const std::string& kvar = "k", const std::string& wvar = "w",
                                               double tol = 1e-12) {
  if (kgrid.empty()) throw std::invalid_argument("branch tracing needs a non-empty grid");
  for (std::size_t i = 1; i < kgrid.size(); ++i)
    if (!(kgrid[i] > kgrid[i - 1])) throw std::invalid_argument("grid must be strictly increasing");
  for (const auto& v : dispersion.used_variables())
    if (v != kvar && v != wvar) throw std::invalid_argument("dispersion depends on unassigned variable " + v);

  std::vector<BranchTrace> traces;
  std::vector<detail::Active> active;
  int next_id = 0;

  for (std::size_t step = 0; step < kgrid.size(); ++step) {
    const double k = to_double(kgrid[step]);
    MultiPoly p = dispersion.partial_eval(kvar, kgrid[step]);
    std::vector<double> roots;
    if (!p.is_zero()) roots = expand_multiplicities(real_roots(p, tol));

    // Predictions from the last two samples of each branch.
    for (auto& a : active) {
      const auto& s = traces[static_cast<std::size_t>(a.id)].samples;
      a.pred = a.last;
      if (s.size() >= 2) {
        const auto& p0 = s[s.size() - 2];
        const auto& p1 = s.back();
        a.pred = p1.omega + (p1.omega - p0.omega) / (p1.k - p0.k) * (k - p1.k);
      }
    }
    // Stable sort keeps the previous order on ties.
    std::stable_sort(active.begin(), active.end(), [](const auto& x, const auto& y) { return x.pred < y.pred; });
    std::vector<double> pred;
    for (const auto& a : active) pred.push_back(a.pred);
    std::vector<int> match = detail::monotone_match(pred, roots);

    std::vector<bool> used(roots.size(), false);
    std::vector<detail::Active> next;
    for (std::size_t i = 0; i < active.size(); ++i) {
      if (match[i] < 0) continue;
      auto& a = active[i];
      const double w = roots[static_cast<std::size_t>(match[i])];
      used[static_cast<std::size_t>(match[i])] = true;
      traces[static_cast<std::size_t>(a.id)].samples.push_back({k, w});
      next.push_back({a.id, w, w});
    }
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (used[j]) continue;
      BranchTrace t;
      t.id = next_id++;
      t.samples.push_back({k, roots[j]});
      traces.push_back(std::move(t));
      next.push_back({traces.back().id, roots[j], roots[j]});
    }
    std::sort(next.begin(), next.end(), [](const auto& x, const auto& y) { return x.last < y.last; });
    active = std::move(next);
  }
  return traces;
}

inline std::vector<BranchTrace> trace_branches(const MultiPoly& dispersion, const std::vector<double>& kgrid,
                                               const std::string& kvar = "k", const std::string& wvar = "w",
                                               double tol = 1e-12) {
  std::vector<Rational> g;
  for (double k : kgrid) g.push_back(from_double(k));
  return trace_branches(dispersion, g, kvar, wvar, tol);
}

inline void tag_traces(std::vector<BranchTrace>& traces, const std::string& model, double b,
                       const std::map<std::string, Rational>& params = {}) {
  for (auto& t : traces) {
    t.model = model;
    t.b = b;
    t.params = params;
  }
}

inline std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// Rows in the order given, each trace's samples by k.
inline void write_branch_csv(std::ostream& os, const std::vector<BranchTrace>& traces, const std::string& xname = "k",
                             bool with_model = true) {
  os << xname << ",omega,branch,b" << (with_model ? ",model" : "") << "\n";
  for (const auto& t : traces)
    for (const auto& s : t.samples) {
      os << format_double(s.k) << ',' << format_double(s.omega) << ',' << t.id << ',' << format_double(t.b);
      if (with_model) os << ',' << t.model;
      os << '\n';
    }
}

}  // namespace fdisp
