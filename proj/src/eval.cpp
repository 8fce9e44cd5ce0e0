#include "ivo/eval.hpp"

#include <cassert>
#include <cmath>

namespace ivo {

EvalCounters& eval_counters() {
  thread_local EvalCounters c;
  return c;
}

void forward_sweep(const Expression& e, const Box& b, Tape& t) {
  assert(b.size() >= e.arity());
  const ExprDag& d = e.dag();
  const auto& sched = e.schedule();
  const auto& slot = e.slot();
  t.val.resize(sched.size());
  for (size_t s = 0; s < sched.size(); ++s) {
    const ExprNode& n = d.node(sched[s]);
    Interval r;
    switch (n.op) {
    case NodeOp::Const: r = Interval(n.value); break;
    case NodeOp::Var: r = b[n.a]; break;
    case NodeOp::Add: r = t.val[slot[n.a]] + t.val[slot[n.b]]; break;
    case NodeOp::Sub: r = t.val[slot[n.a]] - t.val[slot[n.b]]; break;
    case NodeOp::Mul: r = t.val[slot[n.a]] * t.val[slot[n.b]]; break;
    case NodeOp::Div: r = t.val[slot[n.a]] / t.val[slot[n.b]]; break;
    case NodeOp::Neg: r = -t.val[slot[n.a]]; break;
    case NodeOp::Sqr: r = sqr(t.val[slot[n.a]]); break;
    case NodeOp::Sqrt: r = sqrt(t.val[slot[n.a]]); break;
    case NodeOp::Exp: r = exp(t.val[slot[n.a]]); break;
    case NodeOp::Log: r = log(t.val[slot[n.a]]); break;
    case NodeOp::Sin: r = sin(t.val[slot[n.a]]); break;
    case NodeOp::Cos: r = cos(t.val[slot[n.a]]); break;
    case NodeOp::Abs: r = abs(t.val[slot[n.a]]); break;
    case NodeOp::Pow: r = pow_int(t.val[slot[n.a]], n.k); break;
    }
    t.val[s] = r;
  }
}

Interval eval_natural(const Expression& e, const Box& b) {
  eval_counters().interval_evals++;
  thread_local Tape t;
  forward_sweep(e, b, t);
  return t.val.back();
}

Interval eval_point(const Expression& e, const Vec& x) {
  return eval_natural(e, Box::degenerate(x));
}

double eval_fpa(const Expression& e, const Vec& x) {
  eval_counters().fpa_evals++;
  const ExprDag& d = e.dag();
  const auto& sched = e.schedule();
  const auto& slot = e.slot();
  thread_local std::vector<double> v;
  v.resize(sched.size());
  for (size_t s = 0; s < sched.size(); ++s) {
    const ExprNode& n = d.node(sched[s]);
    double r = 0;
    switch (n.op) {
    case NodeOp::Const: r = n.value; break;
    case NodeOp::Var: r = x[n.a]; break;
    case NodeOp::Add: r = v[slot[n.a]] + v[slot[n.b]]; break;
    case NodeOp::Sub: r = v[slot[n.a]] - v[slot[n.b]]; break;
    case NodeOp::Mul: r = v[slot[n.a]] * v[slot[n.b]]; break;
    case NodeOp::Div: r = v[slot[n.a]] / v[slot[n.b]]; break;
    case NodeOp::Neg: r = -v[slot[n.a]]; break;
    case NodeOp::Sqr: r = v[slot[n.a]] * v[slot[n.a]]; break;
    case NodeOp::Sqrt: r = std::sqrt(v[slot[n.a]]); break;
    case NodeOp::Exp: r = std::exp(v[slot[n.a]]); break;
    case NodeOp::Log: r = std::log(v[slot[n.a]]); break;
    case NodeOp::Sin: r = std::sin(v[slot[n.a]]); break;
    case NodeOp::Cos: r = std::cos(v[slot[n.a]]); break;
    case NodeOp::Abs: r = std::fabs(v[slot[n.a]]); break;
    case NodeOp::Pow: {
      double base = v[slot[n.a]];
      int k = n.k;
      bool inv = k < 0;
      if (inv) k = -k;
      double acc = 1.0;
      while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
      }
      r = inv ? 1.0 / acc : acc;
      break;
    }
    }
    v[s] = r;
  }
  return v.back();
}

namespace {
// derivative of |.| per its subgradient
Interval abs_prime(const Interval& x) {
  if (x.is_empty()) return x;
  if (x.hi() < 0.0) return Interval(-1.0);
  if (x.lo() > 0.0) return Interval(1.0);
  return Interval(-1.0, 1.0);
}
} // namespace

bool reverse_sweep(const Expression& e, Tape& t, std::vector<Interval>& grad) {
  const ExprDag& d = e.dag();
  const auto& sched = e.schedule();
  const auto& slot = e.slot();
  t.adj.assign(sched.size(), Interval(0.0));
  t.adj.back() = Interval(1.0);
  for (size_t idx = sched.size(); idx-- > 0;) {
    const ExprNode& n = d.node(sched[idx]);
    const Interval& a = t.adj[idx];
    if (a.is_empty()) return false;
    if (n.op == NodeOp::Const) continue;
    if (n.op == NodeOp::Var) {
      grad[n.a] = grad[n.a] + a;
      continue;
    }
    if (a == Interval(0.0)) continue;
    int sa = slot[n.a];
    const Interval& va = t.val[sa];
    switch (n.op) {
    case NodeOp::Add:
      t.adj[sa] = t.adj[sa] + a;
      t.adj[slot[n.b]] = t.adj[slot[n.b]] + a;
      break;
    case NodeOp::Sub:
      t.adj[sa] = t.adj[sa] + a;
      t.adj[slot[n.b]] = t.adj[slot[n.b]] - a;
      break;
    case NodeOp::Mul:
      t.adj[sa] = t.adj[sa] + a * t.val[slot[n.b]];
      t.adj[slot[n.b]] = t.adj[slot[n.b]] + a * va;
      break;
    case NodeOp::Div: {
      const Interval& vb = t.val[slot[n.b]];
      t.adj[sa] = t.adj[sa] + a / vb;
      t.adj[slot[n.b]] = t.adj[slot[n.b]] - a * va / sqr(vb);
      break;
    }
    case NodeOp::Neg: t.adj[sa] = t.adj[sa] - a; break;
    case NodeOp::Sqr: t.adj[sa] = t.adj[sa] + a * (2.0 * va); break;
    case NodeOp::Sqrt: t.adj[sa] = t.adj[sa] + a / (2.0 * sqrt(va)); break;
    case NodeOp::Exp: t.adj[sa] = t.adj[sa] + a * exp(va); break;
    case NodeOp::Log: t.adj[sa] = t.adj[sa] + a / va; break;
    case NodeOp::Sin: t.adj[sa] = t.adj[sa] + a * cos(va); break;
    case NodeOp::Cos: t.adj[sa] = t.adj[sa] - a * sin(va); break;
    case NodeOp::Abs: t.adj[sa] = t.adj[sa] + a * abs_prime(va); break;
    case NodeOp::Pow:
      t.adj[sa] = t.adj[sa] + a * (static_cast<double>(n.k) * pow_int(va, n.k - 1));
      break;
    default: break;
    }
  }
  return true;
}

std::vector<Interval> grad_adjoint(const Expression& e, const Box& b) {
  eval_counters().gradient_evals++;
  thread_local Tape t;
  forward_sweep(e, b, t);
  std::vector<Interval> grad(e.arity(), Interval(0.0));
  if (t.val.back().is_empty()) {
    for (auto& g : grad) g = Interval::entire();
    return grad;
  }
  reverse_sweep(e, t, grad);
  return grad;
}

std::vector<Interval> constrained_gradient(const Expression& e, const Box& b, const Tape& contracted) {
  eval_counters().gradient_evals++;
  (void)b;
  Tape t;
  t.val = contracted.val;
  std::vector<Interval> grad(e.arity(), Interval(0.0));
  if (t.val.empty() || t.val.back().is_empty()) {
    for (auto& g : grad) g = Interval::entire();
    return grad;
  }
  reverse_sweep(e, t, grad);
  return grad;
}

Vec baumann_center_lo(const Box& b, const std::vector<Interval>& grad) {
  Vec c(b.size());
  for (int i = 0; i < b.size(); ++i) {
    const Interval& g = grad[i];
    const Interval& x = b[i];
    if (!x.is_bounded() || g.is_empty() || !g.is_bounded()) {
      c[i] = x.mid();
      continue;
    }
    double L = g.lo(), U = g.hi();
    if (L >= 0.0) c[i] = x.lo();
    else if (U <= 0.0) c[i] = x.hi();
    else {
      double denom = U - L;
      double t = (U * x.lo() - L * x.hi()) / denom;
      c[i] = std::min(std::max(t, x.lo()), x.hi());
    }
  }
  return c;
}

Vec baumann_center_hi(const Box& b, const std::vector<Interval>& grad) {
  Vec c(b.size());
  for (int i = 0; i < b.size(); ++i) {
    const Interval& g = grad[i];
    const Interval& x = b[i];
    if (!x.is_bounded() || g.is_empty() || !g.is_bounded()) {
      c[i] = x.mid();
      continue;
    }
    double L = g.lo(), U = g.hi();
    if (L >= 0.0) c[i] = x.hi();
    else if (U <= 0.0) c[i] = x.lo();
    else {
      double denom = U - L;
      double t = (U * x.hi() - L * x.lo()) / denom;
      c[i] = std::min(std::max(t, x.lo()), x.hi());
    }
  }
  return c;
}

Interval eval_mean_value_at(const Expression& e, const Box& b, const Vec& c,
                            const std::vector<Interval>* grad) {
  std::vector<Interval> g;
  if (!grad) {
    g = grad_adjoint(e, b);
    grad = &g;
  }
  Interval r = eval_point(e, c); // f(c) must be enclosed, not evaluated in FPA
  for (int i : e.variables()) r = r + (*grad)[i] * (b[i] - Interval(c[i]));
  return r;
}

Interval eval_mean_value(const Expression& e, const Box& b, Center rule,
                         const std::vector<Interval>* grad, Vec* center_out) {
  std::vector<Interval> g;
  if (!grad) {
    g = grad_adjoint(e, b);
    grad = &g;
  }
  Vec c;
  switch (rule) {
  case Center::Mid: c = b.midpoint(); break;
  case Center::BaumannLo: c = baumann_center_lo(b, *grad); break;
  case Center::BaumannHi: c = baumann_center_hi(b, *grad); break;
  }
  if (center_out) *center_out = c;
  return eval_mean_value_at(e, b, c, grad);
}

std::vector<Monotonicity> monotonicity_info(const Expression& e, const Box& b,
                                            const std::vector<Interval>& grad) {
  std::vector<Monotonicity> m(e.arity(), Monotonicity::Unknown);
  for (int i : e.variables()) {
    if (grad[i].is_empty()) continue;
    if (grad[i].lo() >= 0.0) m[i] = Monotonicity::Increasing;
    else if (grad[i].hi() <= 0.0) m[i] = Monotonicity::Decreasing;
  }
  return m;
}

namespace {
// one monotonicity level: build X- and X+; returns number of pinned variables
int pin_boxes(const Expression& e, const Box& b, Box& bm, Box& bp) {
  auto grad = grad_adjoint(e, b);
  auto mono = monotonicity_info(e, b, grad);
  int pinned = 0;
  bm = b;
  bp = b;
  for (int i : e.variables()) {
    if (b[i].is_degenerate()) continue;
    if (mono[i] == Monotonicity::Increasing) {
      bm[i] = Interval(b[i].lo());
      bp[i] = Interval(b[i].hi());
      ++pinned;
    } else if (mono[i] == Monotonicity::Decreasing) {
      bm[i] = Interval(b[i].hi());
      bp[i] = Interval(b[i].lo());
      ++pinned;
    }
  }
  return pinned;
}

double monotonic_lower(const Expression& e, const Box& b, bool recursive, int depth);
double monotonic_upper(const Expression& e, const Box& b, bool recursive, int depth);

double monotonic_lower(const Expression& e, const Box& b, bool recursive, int depth) {
  Box bm, bp;
  int pinned = pin_boxes(e, b, bm, bp);
  if (pinned == 0 || depth <= 0) return eval_natural(e, pinned ? bm : b).lo();
  if (!recursive) return eval_natural(e, bm).lo();
  return monotonic_lower(e, bm, true, depth - 1);
}

double monotonic_upper(const Expression& e, const Box& b, bool recursive, int depth) {
  Box bm, bp;
  int pinned = pin_boxes(e, b, bm, bp);
  if (pinned == 0 || depth <= 0) return eval_natural(e, pinned ? bp : b).hi();
  if (!recursive) return eval_natural(e, bp).hi();
  return monotonic_upper(e, bp, true, depth - 1);
}
} // namespace

Interval eval_monotonic_full(const Expression& e, const Box& b, bool recursive,
                             Box* bminus, Box* bplus) {
  Interval nat = eval_natural(e, b);
  if (nat.is_empty()) return nat;
  Box bm, bp;
  int pinned = pin_boxes(e, b, bm, bp);
  if (bminus) *bminus = bm;
  if (bplus) *bplus = bp;
  if (pinned == 0) return nat;
  double lo, hi;
  if (recursive) {
    int depth = e.arity() + 1;
    lo = monotonic_lower(e, bm, true, depth);
    hi = monotonic_upper(e, bp, true, depth);
  } else {
    lo = eval_natural(e, bm).lo();
    hi = eval_natural(e, bp).hi();
  }
  if (!(lo <= hi)) return nat; // a pinned sub-box evaluated empty
  // both routes enclose the range, so the intersection does too
  return intersect(Interval(lo, hi), nat);
}

Interval eval_monotonic(const Expression& e, const Box& b, bool recursive) {
  return eval_monotonic_full(e, b, recursive, nullptr, nullptr);
}

} // namespace ivo
