#include "ivo/contract.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace ivo {

namespace {

// largest r with r^k <= x (x >= 0), and smallest r with r^k >= x
double root_down(double x, int k) {
  if (x <= 0.0) return 0.0;
  if (std::isinf(x)) return INFINITY;
  double r = std::pow(x, 1.0 / k);
  for (int i = 0; i < 64; ++i) {
    double base = r;
    int e = k;
    double acc = 1.0;
    while (e) {
      if (e & 1) acc = rnd::mul_up(acc, base);
      e >>= 1;
      if (e) base = rnd::mul_up(base, base);
    }
    if (acc <= x) return r;
    r = rnd::prev(r);
  }
  return r;
}
double root_up(double x, int k) {
  if (x <= 0.0) return 0.0;
  if (std::isinf(x)) return INFINITY;
  double r = std::pow(x, 1.0 / k);
  for (int i = 0; i < 64; ++i) {
    double base = r;
    int e = k;
    double acc = 1.0;
    while (e) {
      if (e & 1) acc = rnd::mul_down(acc, base);
      e >>= 1;
      if (e) base = rnd::mul_down(base, base);
    }
    if (acc >= x) return r;
    r = rnd::next(r);
  }
  return r;
}

Interval root_even(const Interval& t, int k) { // nonnegative kth root
  Interval c = intersect(t, Interval::nonneg());
  if (c.is_empty()) return c;
  return Interval(root_down(c.lo(), k), std::isinf(c.hi()) ? INFINITY : root_up(c.hi(), k));
}
Interval root_odd(const Interval& t, int k) {
  if (t.is_empty()) return t;
  auto r1 = [&](double v) { // root rounding down
    if (v >= 0.0) return root_down(v, k);
    return -root_up(-v, k);
  };
  auto r2 = [&](double v) {
    if (v >= 0.0) return std::isinf(v) ? INFINITY : root_up(v, k);
    return -root_down(-v, k);
  };
  return Interval(std::isinf(t.lo()) ? -INFINITY : r1(t.lo()), r2(t.hi()));
}

// intersect cur with a possibly two-piece set, hulling the surviving pieces
Interval meet_pieces(const Interval& cur, const IntervalPair& p) {
  if (p.count == 0) return Interval::empty();
  Interval a = intersect(cur, p.first);
  if (p.count == 1) return a;
  return hull(a, intersect(cur, p.second));
}

// conservative superset of {x in cur : sin x in t}
Interval proj_sin(const Interval& t0, const Interval& cur) {
  Interval t = intersect(t0, Interval(-1.0, 1.0));
  if (t.is_empty()) return t;
  double a = cur.lo(), b = cur.hi();
  if (!std::isfinite(a) || !std::isfinite(b) || std::max(std::fabs(a), std::fabs(b)) > 1e12)
    return cur;
  Interval base(rnd::asin_down(t.lo()), rnd::asin_up(t.hi())); // principal branch
  double kmin = std::floor((a - rnd::half_pi_hi) / rnd::two_pi_lo) - 1;
  double kmax = std::ceil((b + rnd::half_pi_hi) / rnd::two_pi_lo) + 1;
  if (kmax - kmin > 100) return cur;
  Interval acc = Interval::empty();
  for (double k = kmin; k <= kmax; ++k) {
    double off = k * rnd::two_pi_lo;
    double slack = std::max(1e-12, std::fabs(off) * 4e-16);
    Interval inc(base.lo() + off - slack, base.hi() + off + slack);
    acc = hull(acc, intersect(cur, inc));
    // decreasing branch: pi - asin
    Interval dec(rnd::pi_lo - base.hi() + off - slack, rnd::pi_hi - base.lo() + off + slack);
    acc = hull(acc, intersect(cur, dec));
  }
  return acc;
}

// conservative superset of {x in cur : cos x in t}
Interval proj_cos(const Interval& t0, const Interval& cur) {
  Interval t = intersect(t0, Interval(-1.0, 1.0));
  if (t.is_empty()) return t;
  double a = cur.lo(), b = cur.hi();
  if (!std::isfinite(a) || !std::isfinite(b) || std::max(std::fabs(a), std::fabs(b)) > 1e12)
    return cur;
  Interval base(rnd::acos_down(t.hi()), rnd::acos_up(t.lo())); // in [0, pi]
  double kmin = std::floor(a / rnd::two_pi_lo) - 1;
  double kmax = std::ceil(b / rnd::two_pi_lo) + 1;
  if (kmax - kmin > 100) return cur;
  Interval acc = Interval::empty();
  for (double k = kmin; k <= kmax; ++k) {
    double off = k * rnd::two_pi_lo;
    double slack = std::max(1e-12, std::fabs(off) * 4e-16);
    Interval pos(base.lo() + off - slack, base.hi() + off + slack);
    acc = hull(acc, intersect(cur, pos));
    Interval negb(-base.hi() + off - slack, -base.lo() + off + slack);
    acc = hull(acc, intersect(cur, negb));
  }
  return acc;
}

} // namespace

Revision hc4revise(const Expression& e, const Interval& rhs, const Box& b) {
  Revision r;
  const ExprDag& d = e.dag();
  const auto& sched = e.schedule();
  const auto& slot = e.slot();

  forward_sweep(e, b, r.tape);
  auto& cur = r.tape.val;
  r.value = cur.back();
  if (r.value.is_empty()) {
    r.out = ContractOutcome::make_empty();
    return r;
  }
  bool entailed = rhs.contains(r.value);
  Interval root = intersect(r.value, rhs);
  if (root.is_empty()) {
    r.out = ContractOutcome::make_empty();
    return r;
  }
  cur.back() = root;

  for (size_t idx = sched.size(); idx-- > 0;) {
    const ExprNode& n = d.node(sched[idx]);
    if (n.op == NodeOp::Const || n.op == NodeOp::Var) continue;
    const Interval t = cur[idx];
    int sa = slot[n.a];
    int sb = n.b >= 0 ? slot[n.b] : -1;
    Interval a = cur[sa];
    Interval bb = sb >= 0 ? cur[sb] : Interval();
    Interval na = a, nb = bb;
    switch (n.op) {
    case NodeOp::Add:
      na = intersect(a, t - bb);
      nb = intersect(bb, t - na);
      break;
    case NodeOp::Sub:
      na = intersect(a, t + bb);
      nb = intersect(bb, na - t);
      break;
    case NodeOp::Mul:
      na = meet_pieces(a, extended_div(t, bb));
      if (na.is_empty()) break;
      nb = meet_pieces(bb, extended_div(t, na));
      break;
    case NodeOp::Div:
      na = intersect(a, t * bb);
      if (na.is_empty()) break;
      if (t.contains(0.0) && na.contains(0.0)) {
        nb = bb; // any divisor can produce 0 from 0
      } else {
        nb = meet_pieces(bb, extended_div(na, t));
      }
      break;
    case NodeOp::Neg: na = intersect(a, -t); break;
    case NodeOp::Sqr: {
      Interval s = sqrt(t);
      if (s.is_empty()) { na = s; break; }
      na = hull(intersect(a, -s), intersect(a, s));
      break;
    }
    case NodeOp::Sqrt: na = intersect(a, sqr(intersect(t, Interval::nonneg()))); break;
    case NodeOp::Exp: na = intersect(a, log(t));
      if (na.is_empty() && t.contains(0.0) && a.lo() == -INFINITY) na = Interval(-INFINITY, -INFINITY);
      break;
    case NodeOp::Log: na = intersect(a, exp(t)); break;
    case NodeOp::Sin: na = proj_sin(t, a); break;
    case NodeOp::Cos: na = proj_cos(t, a); break;
    case NodeOp::Abs: {
      Interval tp = intersect(t, Interval::nonneg());
      if (tp.is_empty()) { na = tp; break; }
      na = hull(intersect(a, -tp), intersect(a, tp));
      break;
    }
    case NodeOp::Pow: {
      int k = n.k;
      Interval target = t;
      if (k < 0) {
        target = Interval(1.0) / t; // hull of the reciprocal set
        k = -k;
        if (target.lo() == -INFINITY && target.hi() == INFINITY) { na = a; break; }
      }
      if (k == 0) { na = t.contains(1.0) ? a : Interval::empty(); break; }
      if (k % 2 == 0) {
        Interval s = root_even(target, k);
        if (s.is_empty()) { na = s; break; }
        na = hull(intersect(a, -s), intersect(a, s));
      } else {
        na = intersect(a, root_odd(target, k));
      }
      break;
    }
    default: break;
    }
    if (na.is_empty() || (sb >= 0 && nb.is_empty())) {
      r.out = ContractOutcome::make_empty();
      return r;
    }
    cur[sa] = na;
    if (sb >= 0) cur[sb] = nb;
  }

  Box out = b;
  for (size_t s = 0; s < sched.size(); ++s) {
    const ExprNode& n = d.node(sched[s]);
    if (n.op == NodeOp::Var) out[n.a] = cur[s];
  }
  r.out = entailed ? ContractOutcome::entailed(std::move(out))
                   : ContractOutcome::contracted(std::move(out));
  return r;
}

Revision hc4revise(const Constraint& c, const Box& b) { return hc4revise(c.expr, c.rhs(), b); }

Interval box_narrow(const Expression& e, const Box& b, int i, const Interval& rhs, int max_iter) {
  Box bx = b;
  Interval T = b[i];
  for (int it = 0; it < max_iter && !T.is_empty(); ++it) {
    bx[i] = T;
    Interval G = grad_adjoint(e, bx)[i];
    double c = T.mid();
    bx[i] = Interval(c);
    Interval fc = eval_natural(e, bx);
    if (fc.is_empty()) break; // undefined at the midpoint slice; give up
    IntervalPair q = extended_div(fc - rhs, G);
    Interval acc = Interval::empty();
    if (q.count >= 1) acc = hull(acc, intersect(T, Interval(c) - q.first));
    if (q.count == 2) acc = hull(acc, intersect(T, Interval(c) - q.second));
    if (acc == T) break;
    T = acc;
  }
  return T;
}

std::vector<ZeroEnclosure> newton_univariate(const Expression& f, const Interval& X, double tol,
                                             int budget) {
  assert(f.arity() == 1);
  std::vector<ZeroEnclosure> out;
  std::deque<ZeroEnclosure> work{{X, false}};
  Box bx(1);
  while (!work.empty() && budget-- > 0) {
    ZeroEnclosure cur = work.front();
    work.pop_front();
    if (cur.x.is_empty()) continue;
    bx[0] = cur.x;
    Interval fx = eval_natural(f, bx);
    if (fx.is_empty() || !fx.contains(0.0)) continue;
    if (cur.x.width() <= tol) {
      out.push_back(cur);
      continue;
    }
    double c = cur.x.mid();
    bx[0] = Interval(c);
    Interval fc = eval_natural(f, bx);
    bx[0] = cur.x;
    Interval G = grad_adjoint(f, bx)[0];
    IntervalPair q = extended_div(fc, G);
    Interval n1 = Interval::empty(), n2 = Interval::empty();
    if (q.count >= 1) n1 = intersect(cur.x, Interval(c) - q.first);
    if (q.count == 2) n2 = intersect(cur.x, Interval(c) - q.second);
    if (q.count == 2 && !n1.is_empty() && !n2.is_empty()) {
      work.push_back({n1, false});
      work.push_back({n2, false});
      continue;
    }
    Interval nx = n1.is_empty() ? n2 : n1;
    if (nx.is_empty()) continue;
    bool certified = cur.certified || nx.interior_of(cur.x);
    if (nx.width() > 0.9 * cur.x.width()) {
      // stalled: bisect (certification does not transfer to halves)
      double m = nx.mid();
      if (nx.lo() < m && m < nx.hi()) {
        work.push_back({Interval(nx.lo(), m), false});
        work.push_back({Interval(m, nx.hi()), false});
      } else {
        out.push_back({nx, certified});
      }
      continue;
    }
    work.push_back({nx, certified});
  }
  // merge overlapping enclosures
  std::sort(out.begin(), out.end(),
            [](const ZeroEnclosure& a, const ZeroEnclosure& b) { return a.x.lo() < b.x.lo(); });
  std::vector<ZeroEnclosure> merged;
  for (const auto& z : out) {
    if (!merged.empty() && !merged.back().x.disjoint(z.x)) {
      merged.back().x = hull(merged.back().x, z.x);
      merged.back().certified = merged.back().certified && z.certified;
    } else {
      merged.push_back(z);
    }
  }
  return merged;
}

ContractOutcome newton_multivariate(const std::vector<Expression>& g, const Box& b, const Vec& xk) {
  const int m = static_cast<int>(g.size());
  const int n = b.size();
  if (m == 0) return ContractOutcome::contracted(b);

  std::vector<std::vector<Interval>> J(m);
  std::vector<Interval> gx(m);
  for (int r = 0; r < m; ++r) {
    J[r] = grad_adjoint(g[r], b);
    gx[r] = eval_point(g[r], xk);
    if (gx[r].is_empty()) return ContractOutcome::contracted(b);
    for (const auto& e : J[r])
      if (e.is_empty()) return ContractOutcome::contracted(b);
  }

  std::vector<std::vector<Interval>> A;
  std::vector<Interval> rhs;
  if (m == n) {
    Eigen::MatrixXd Jc(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) Jc(r, c) = J[r][c].is_empty() ? 0.0 : J[r][c].mid();
    Eigen::FullPivLU<Eigen::MatrixXd> lu(Jc);
    if (!lu.isInvertible()) return ContractOutcome::contracted(b); // no-op
    Eigen::MatrixXd M = lu.inverse();
    A.assign(n, std::vector<Interval>(n, Interval(0.0)));
    rhs.assign(n, Interval(0.0));
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        Interval s(0.0);
        for (int l = 0; l < n; ++l) s = s + Interval(M(r, l)) * J[l][c];
        A[r][c] = s;
      }
      Interval s(0.0);
      for (int l = 0; l < n; ++l) s = s + Interval(M(r, l)) * gx[l];
      rhs[r] = -s;
    }
  } else {
    A = J;
    rhs.resize(m);
    for (int r = 0; r < m; ++r) rhs[r] = -gx[r];
  }

  std::vector<Interval> Y(n);
  for (int i = 0; i < n; ++i) Y[i] = b[i] - Interval(xk[i]);

  const int rows = static_cast<int>(A.size());
  for (int r = 0; r < rows; ++r) {
    for (int i = 0; i < n; ++i) {
      if (rows == n && i != r) continue; // preconditioned: row r narrows var r
      const Interval& arc = A[r][i];
      if (arc == Interval(0.0)) continue;
      Interval s = rhs[r];
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        if (A[r][j] == Interval(0.0)) continue;
        s = s - A[r][j] * Y[j];
      }
      Interval yn = meet_pieces(Y[i], extended_div(s, arc));
      if (yn.is_empty()) return ContractOutcome::make_empty();
      Y[i] = yn;
    }
  }

  Box out = b;
  for (int i = 0; i < n; ++i) {
    out[i] = intersect(b[i], Interval(xk[i]) + Y[i]);
    if (out[i].is_empty()) return ContractOutcome::make_empty();
  }
  return ContractOutcome::contracted(std::move(out));
}

MohcResult mohc_revise(const Constraint& c, const Box& b) {
  MohcResult res;
  Revision rev = hc4revise(c, b);
  res.out = rev.out;
  res.lb = rev.value.is_empty() ? INFINITY : rev.value.lo();
  if (rev.out.empty()) return res;
  Box bx = rev.out.box;
  bool entailed = rev.out.kind == OutcomeKind::Entailed;

  auto grad = grad_adjoint(c.expr, bx);
  auto mono = monotonicity_info(c.expr, bx, grad);

  Box bminus = bx, bplus = bx;
  std::vector<int> vm; // monotone, multiple occurrences
  bool any_mono = false;
  for (int i : c.expr.variables()) {
    if (mono[i] == Monotonicity::Unknown || bx[i].is_degenerate()) continue;
    any_mono = true;
    if (mono[i] == Monotonicity::Increasing) {
      bminus[i] = Interval(bx[i].lo());
      bplus[i] = Interval(bx[i].hi());
    } else {
      bminus[i] = Interval(bx[i].hi());
      bplus[i] = Interval(bx[i].lo());
    }
    if (c.expr.occurrences(i) >= 2) vm.push_back(i);
  }
  res.bminus = bminus;
  if (any_mono) {
    Interval fm = eval_natural(c.expr, bminus);
    if (!fm.is_empty()) res.lb = std::max(res.lb, fm.lo());
  }
  if (vm.empty()) {
    res.out = entailed ? ContractOutcome::entailed(std::move(bx))
                       : ContractOutcome::contracted(std::move(bx));
    return res;
  }

  const Interval band = c.rhs();
  const Interval leq(-INFINITY, band.hi());
  const Interval geq(band.lo(), INFINITY);

  // min-side propagation: C(X^-) <= ub contracts the non-monotone variables
  {
    Revision rm = hc4revise(c.expr, leq, bminus);
    if (rm.out.empty()) {
      res.out = ContractOutcome::make_empty();
      return res;
    }
    for (int i : c.expr.variables())
      if (mono[i] == Monotonicity::Unknown) {
        bx[i] = intersect(bx[i], rm.out.box[i]);
        if (bx[i].is_empty()) {
          res.out = ContractOutcome::make_empty();
          return res;
        }
      }
  }
  // max-side propagation only constrains equalities
  if (c.rel == Rel::EqZero) {
    Revision rp = hc4revise(c.expr, geq, bplus);
    if (rp.out.empty()) {
      res.out = ContractOutcome::make_empty();
      return res;
    }
    for (int i : c.expr.variables())
      if (mono[i] == Monotonicity::Unknown) {
        bx[i] = intersect(bx[i], rp.out.box[i]);
        if (bx[i].is_empty()) {
          res.out = ContractOutcome::make_empty();
          return res;
        }
      }
  }

  // monotone narrowing: univariate interval Newton on the decomposition
  for (int i : vm) {
    Box bm = bminus;
    bm[i] = bx[i];
    Interval t = box_narrow(c.expr, bm, i, leq);
    if (c.rel == Rel::EqZero) {
      Box bp = bplus;
      bp[i] = bx[i];
      t = intersect(t, box_narrow(c.expr, bp, i, geq));
    }
    bx[i] = intersect(bx[i], t);
    if (bx[i].is_empty()) {
      res.out = ContractOutcome::make_empty();
      return res;
    }
  }

  // refresh X^- on the narrowed box
  for (int i : c.expr.variables()) {
    if (mono[i] == Monotonicity::Increasing) res.bminus[i] = Interval(bx[i].lo());
    else if (mono[i] == Monotonicity::Decreasing) res.bminus[i] = Interval(bx[i].hi());
    else res.bminus[i] = bx[i];
  }
  res.out = entailed ? ContractOutcome::entailed(std::move(bx))
                     : ContractOutcome::contracted(std::move(bx));
  return res;
}

ContractOutcome stationarity_contract(const Box& b, const Box& domain, const Expression& f,
                                      const std::vector<Interval>& grad,
                                      const std::vector<Expression>& dfdx) {
  Box bx = b;
  for (int i : f.variables()) {
    const Interval& g = grad[i];
    if (g.is_empty()) continue;
    double L = g.lo(), U = g.hi();
    bool left_f = bx[i].lo() <= domain[i].lo();
    bool right_f = bx[i].hi() >= domain[i].hi();
    if (L >= 0.0 && U <= 0.0) continue; // flat
    if (L >= 0.0) {                     // increasing
      if (left_f) {
        bx[i] = Interval(bx[i].lo());
      } else if (L > 0.0) {
        return ContractOutcome::make_empty();
      } else if (i < static_cast<int>(dfdx.size()) && dfdx[i].valid()) {
        // L == 0: any minimizer here is stationary in x_i
        Revision r = hc4revise(dfdx[i], Interval(0.0), bx);
        if (r.out.empty()) return ContractOutcome::make_empty();
        bx = r.out.box;
      }
    } else if (U <= 0.0) { // decreasing
      if (right_f) {
        bx[i] = Interval(bx[i].hi());
      } else if (U < 0.0) {
        return ContractOutcome::make_empty();
      } else if (i < static_cast<int>(dfdx.size()) && dfdx[i].valid()) {
        Revision r = hc4revise(dfdx[i], Interval(0.0), bx);
        if (r.out.empty()) return ContractOutcome::make_empty();
        bx = r.out.box;
      }
    } else { // 0 interior to the gradient enclosure
      if (!left_f && !right_f && i < static_cast<int>(dfdx.size()) && dfdx[i].valid()) {
        Revision r = hc4revise(dfdx[i], Interval(0.0), bx);
        if (r.out.empty()) return ContractOutcome::make_empty();
        bx = r.out.box;
      }
    }
  }
  return ContractOutcome::contracted(std::move(bx));
}

namespace {
struct GradBuilder {
  std::shared_ptr<ExprDag> dag;
  bool is_const(const Expr& e, double v) const {
    if (!e.valid()) return false;
    const ExprNode& n = dag->node(e.id());
    return n.op == NodeOp::Const && n.value == v;
  }
  Expr cst(double v) { return Expr(dag, dag->add_const(v)); }
  Expr add(const Expr& a, const Expr& b) {
    if (!a.valid()) return b;
    if (!b.valid()) return a;
    if (is_const(a, 0.0)) return b;
    if (is_const(b, 0.0)) return a;
    return a + b;
  }
  Expr mul(const Expr& a, const Expr& b) {
    if (is_const(a, 0.0) || is_const(b, 0.0)) return cst(0.0);
    if (is_const(a, 1.0)) return b;
    if (is_const(b, 1.0)) return a;
    return a * b;
  }
  Expr neg(const Expr& a) {
    if (is_const(a, 0.0)) return a;
    return -a;
  }
};
} // namespace

std::vector<Expression> symbolic_gradient(const Expression& e) {
  std::vector<Expression> out(e.arity());
  if (!e.valid()) return out;

  // work on a clone so the adjoint nodes do not grow the source dag
  auto clone = std::make_shared<ExprDag>(e.dag());
  GradBuilder gb{clone};

  const auto& sched = e.schedule();
  const auto& slot = e.slot();
  const ExprDag& d = *clone;
  std::vector<Expr> adj(sched.size());
  adj.back() = gb.cst(1.0);
  auto node_expr = [&](int id) { return Expr(clone, id); };

  for (size_t idx = sched.size(); idx-- > 0;) {
    const ExprNode n = d.node(sched[idx]);
    if (n.op == NodeOp::Const || n.op == NodeOp::Var) continue;
    Expr a = adj[idx];
    if (!a.valid() || gb.is_const(a, 0.0)) continue;
    int sa = slot[n.a];
    Expr A = node_expr(n.a);
    switch (n.op) {
    case NodeOp::Add:
      adj[sa] = gb.add(adj[sa], a);
      adj[slot[n.b]] = gb.add(adj[slot[n.b]], a);
      break;
    case NodeOp::Sub:
      adj[sa] = gb.add(adj[sa], a);
      adj[slot[n.b]] = gb.add(adj[slot[n.b]], gb.neg(a));
      break;
    case NodeOp::Mul:
      adj[sa] = gb.add(adj[sa], gb.mul(a, node_expr(n.b)));
      adj[slot[n.b]] = gb.add(adj[slot[n.b]], gb.mul(a, A));
      break;
    case NodeOp::Div: {
      Expr B = node_expr(n.b);
      adj[sa] = gb.add(adj[sa], a / B);
      adj[slot[n.b]] = gb.add(adj[slot[n.b]], gb.neg(gb.mul(a, A / sqr(B))));
      break;
    }
    case NodeOp::Neg: adj[sa] = gb.add(adj[sa], gb.neg(a)); break;
    case NodeOp::Sqr: adj[sa] = gb.add(adj[sa], gb.mul(a, gb.mul(gb.cst(2.0), A))); break;
    case NodeOp::Sqrt: adj[sa] = gb.add(adj[sa], a / gb.mul(gb.cst(2.0), sqrt(A))); break;
    case NodeOp::Exp: adj[sa] = gb.add(adj[sa], gb.mul(a, exp(A))); break;
    case NodeOp::Log: adj[sa] = gb.add(adj[sa], a / A); break;
    case NodeOp::Sin: adj[sa] = gb.add(adj[sa], gb.mul(a, cos(A))); break;
    case NodeOp::Cos: adj[sa] = gb.add(adj[sa], gb.neg(gb.mul(a, sin(A)))); break;
    case NodeOp::Abs: adj[sa] = gb.add(adj[sa], gb.mul(a, abs(A) / A)); break;
    case NodeOp::Pow:
      adj[sa] = gb.add(adj[sa], gb.mul(a, gb.mul(gb.cst(n.k), pow(A, n.k - 1))));
      break;
    default: break;
    }
  }

  for (size_t s = 0; s < sched.size(); ++s) {
    const ExprNode& n = d.node(sched[s]);
    if (n.op != NodeOp::Var) continue;
    Expr g = adj[s].valid() ? adj[s] : gb.cst(0.0);
    out[n.a] = Expression(g, e.arity());
  }
  for (int v = 0; v < e.arity(); ++v)
    if (!out[v].valid()) out[v] = Expression(gb.cst(0.0), e.arity());
  return out;
}

} // namespace ivo
