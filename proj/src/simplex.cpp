#include "ivo/simplex.hpp"

#include <algorithm>

namespace ivo {

namespace {

// tableau layout: rows = constraints (slack basis start), columns =
// [structural vars | slacks | artificials | rhs]
struct Tableau {
  int m, n;   // rows, structural columns
  int cols;   // total columns incl. rhs
  std::vector<double> t;
  std::vector<int> basis;
  double& at(int r, int c) { return t[r * cols + c]; }
};

constexpr double kEps = 1e-9;

bool pivot(Tableau& tb, int prow, int pcol) {
  double p = tb.at(prow, pcol);
  if (std::fabs(p) < 1e-12) return false;
  for (int c = 0; c < tb.cols; ++c) tb.at(prow, c) /= p;
  for (int r = 0; r <= tb.m; ++r) {
    if (r == prow) continue;
    double f = tb.at(r, pcol);
    if (f == 0.0) continue;
    for (int c = 0; c < tb.cols; ++c) tb.at(r, c) -= f * tb.at(prow, c);
  }
  tb.basis[prow] = pcol;
  return true;
}

// Bland's rule on the objective row stored at row index m
int run_simplex(Tableau& tb, int ncols_usable, int max_iter) {
  for (int it = 0; it < max_iter; ++it) {
    int pcol = -1;
    for (int c = 0; c < ncols_usable; ++c) {
      if (tb.at(tb.m, c) < -kEps) {
        pcol = c;
        break;
      }
    }
    if (pcol < 0) return 0; // optimal
    int prow = -1;
    double best = 0.0;
    for (int r = 0; r < tb.m; ++r) {
      double a = tb.at(r, pcol);
      if (a > kEps) {
        double ratio = tb.at(r, tb.cols - 1) / a;
        if (prow < 0 || ratio < best - 1e-15 ||
            (std::fabs(ratio - best) <= 1e-15 && tb.basis[r] < tb.basis[prow])) {
          prow = r;
          best = ratio;
        }
      }
    }
    if (prow < 0) return 1; // unbounded
    if (!pivot(tb, prow, pcol)) return 2;
  }
  return 2; // iteration limit
}

} // namespace

LpResult solve_lp(const LinearProgram& lp, int max_iter) {
  LpResult res;
  const int n = static_cast<int>(lp.c.size());
  const int m0 = static_cast<int>(lp.A.size());
  for (int i = 0; i < lp.box.size(); ++i)
    if (!lp.box[i].is_bounded()) return res;

  // shift y = x - lo >= 0; upper bounds become extra rows y_i <= w_i
  Vec lo(n), w(n);
  for (int i = 0; i < n; ++i) {
    lo[i] = lp.box[i].lo();
    w[i] = lp.box[i].width();
  }
  const int m = m0 + n;
  Tableau tb;
  tb.m = m;
  tb.n = n;
  const int nslack = m;
  // phase-1 artificials added lazily for rows with negative rhs
  std::vector<double> rhs(m);
  std::vector<Vec> rows(m);
  for (int r = 0; r < m0; ++r) {
    rows[r] = lp.A[r];
    rhs[r] = lp.b[r] - lp.A[r].dot(lo);
  }
  for (int i = 0; i < n; ++i) {
    rows[m0 + i] = Vec::Zero(n);
    rows[m0 + i][i] = 1.0;
    rhs[m0 + i] = w[i];
  }
  int nart = 0;
  std::vector<int> art_of_row(m, -1);
  for (int r = 0; r < m; ++r)
    if (rhs[r] < 0.0) art_of_row[r] = nart++;

  tb.cols = n + nslack + nart + 1;
  tb.t.assign(static_cast<size_t>(m + 1) * tb.cols, 0.0);
  tb.basis.assign(m, -1);
  for (int r = 0; r < m; ++r) {
    double sgn = rhs[r] < 0.0 ? -1.0 : 1.0;
    for (int c = 0; c < n; ++c) tb.at(r, c) = sgn * rows[r][c];
    tb.at(r, n + r) = sgn; // slack
    if (art_of_row[r] >= 0) {
      tb.at(r, n + nslack + art_of_row[r]) = 1.0;
      tb.basis[r] = n + nslack + art_of_row[r];
    } else {
      tb.basis[r] = n + r;
    }
    tb.at(r, tb.cols - 1) = sgn * rhs[r];
  }

  if (nart > 0) {
    // phase 1: minimize sum of artificials
    for (int r = 0; r < m; ++r) {
      if (art_of_row[r] < 0) continue;
      for (int c = 0; c < tb.cols; ++c) tb.at(m, c) -= tb.at(r, c);
    }
    int rc = run_simplex(tb, n + nslack, max_iter);
    double p1 = -tb.at(m, tb.cols - 1);
    if (rc == 2) return res;
    if (p1 > 1e-7) {
      // infeasible; phase-1 duals from the slack columns give a Farkas ray
      res.status = LpResult::Status::Infeasible;
      res.farkas = Vec::Zero(m0);
      for (int r = 0; r < m0; ++r) {
        double d = tb.at(m, n + r); // reduced cost on slack r
        res.farkas[r] = std::max(0.0, d);
      }
      return res;
    }
    // drive leftover artificials out of the basis when possible
    for (int r = 0; r < m; ++r) {
      if (tb.basis[r] >= n + nslack) {
        for (int c = 0; c < n + nslack; ++c)
          if (std::fabs(tb.at(r, c)) > 1e-9) {
            pivot(tb, r, c);
            break;
          }
      }
    }
    // rebuild objective row for phase 2
    for (int c = 0; c < tb.cols; ++c) tb.at(m, c) = 0.0;
  }

  for (int c = 0; c < n; ++c) tb.at(m, c) = lp.c[c];
  // price out the basis
  for (int r = 0; r < m; ++r) {
    int bc = tb.basis[r];
    double f = tb.at(m, bc);
    if (f == 0.0) continue;
    for (int c = 0; c < tb.cols; ++c) tb.at(m, c) -= f * tb.at(r, c);
  }
  int rc = run_simplex(tb, n + nslack, max_iter);
  if (rc == 1) {
    res.status = LpResult::Status::Unbounded;
    return res;
  }
  if (rc == 2) return res;

  res.x = lo;
  for (int r = 0; r < m; ++r)
    if (tb.basis[r] < n) res.x[tb.basis[r]] += tb.at(r, tb.cols - 1);
  // duals: reduced costs on the slack columns (>= 0 at optimality of a <=-LP)
  res.y = Vec::Zero(m0);
  for (int r = 0; r < m0; ++r) res.y[r] = std::max(0.0, tb.at(m, n + r));
  res.obj = lp.c.dot(res.x);
  res.status = LpResult::Status::Optimal;
  return res;
}

double certified_lower_bound(const LinearProgram& lp, const Vec& y) {
  const int n = static_cast<int>(lp.c.size());
  const int m = static_cast<int>(lp.A.size());
  Interval total(0.0);
  for (int i = 0; i < n; ++i) {
    Interval ri(lp.c[i]);
    for (int r = 0; r < m; ++r) {
      double yr = std::max(0.0, y.size() > r ? y[r] : 0.0);
      if (yr != 0.0) ri = ri + Interval(yr) * Interval(lp.A[r][i]);
    }
    Interval term = ri * lp.box[i];
    total = total + Interval(term.lo());
  }
  for (int r = 0; r < m; ++r) {
    double yr = std::max(0.0, y.size() > r ? y[r] : 0.0);
    if (yr != 0.0) total = total - Interval(yr) * Interval(lp.b[r]);
  }
  return total.lo();
}

bool certified_infeasible(const LinearProgram& lp, const Vec& y) {
  if (y.size() == 0) return false;
  const int n = static_cast<int>(lp.box.size());
  const int m = static_cast<int>(lp.A.size());
  Interval total(0.0);
  for (int i = 0; i < n; ++i) {
    Interval ri(0.0);
    for (int r = 0; r < m; ++r) {
      double yr = std::max(0.0, y[r]);
      if (yr != 0.0) ri = ri + Interval(yr) * Interval(lp.A[r][i]);
    }
    Interval term = ri * lp.box[i];
    total = total + Interval(term.lo());
  }
  for (int r = 0; r < m; ++r) {
    double yr = std::max(0.0, y[r]);
    if (yr != 0.0) total = total - Interval(yr) * Interval(lp.b[r]);
  }
  return total.lo() > 0.0;
}

} // namespace ivo
