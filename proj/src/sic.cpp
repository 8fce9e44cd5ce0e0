#include "ivo/sic.hpp"

#include <algorithm>

namespace ivo {

namespace {
Box with_param(const Box& b, const Interval& p) {
  Box bp(b.size() + 1);
  for (int i = 0; i < b.size(); ++i) bp[i] = b[i];
  bp[b.size()] = p;
  return bp;
}
Box strip_param(const Box& bp) {
  Box b(bp.size() - 1);
  for (int i = 0; i < b.size(); ++i) b[i] = bp[i];
  return b;
}
Monotonicity param_monotonicity(const SIConstraint& g, const Box& b, const Interval& p) {
  Box bp = with_param(b, p);
  auto grad = grad_adjoint(g.expr, bp);
  const Interval& gp = grad[g.param_index()];
  if (gp.is_empty()) return Monotonicity::Unknown;
  if (gp.lo() >= 0.0) return Monotonicity::Increasing;
  if (gp.hi() <= 0.0) return Monotonicity::Decreasing;
  return Monotonicity::Unknown;
}
} // namespace

ContractOutcome contract_2b_sic(SIConstraint& g, const Box& b, bool* entailed) {
  if (entailed) *entailed = false;
  Revision rev = hc4revise(g.expr, Interval::nonpos(), with_param(b, g.P));
  if (rev.out.empty()) return ContractOutcome::make_empty();
  const Interval pnew = rev.out.box[g.param_index()];
  // p values removed here admit no x in b with c(x,p) <= 0: every x violates
  if (pnew.lo() > g.P.lo() || pnew.hi() < g.P.hi()) return ContractOutcome::make_empty();
  if (entailed && rev.value.hi() <= 0.0) *entailed = true;
  return ContractOutcome::contracted(strip_param(rev.out.box));
}

ContractOutcome instantiate_parameter(SIConstraint& g, const Box& b) {
  Monotonicity m = param_monotonicity(g, b, g.P);
  double phat;
  if (m == Monotonicity::Increasing) phat = g.P.hi();
  else if (m == Monotonicity::Decreasing) phat = g.P.lo();
  else phat = g.P.mid();
  Revision rev = hc4revise(g.expr, Interval::nonpos(), with_param(b, Interval(phat)));
  if (rev.out.empty()) return ContractOutcome::make_empty(); // violated at p = phat
  return ContractOutcome::contracted(strip_param(rev.out.box));
}

NegationResult contract_negation(SIConstraint& g, const Box& b) {
  Revision rev = hc4revise(g.expr, Interval::nonneg(), with_param(b, g.P));
  if (rev.out.empty()) return NegationResult::Entailed;
  g.P = rev.out.box[g.param_index()];
  return NegationResult::ParameterReduced;
}

ContractOutcome shave_parameter(SIConstraint& g, const Box& b, int slices, bool* entailed) {
  if (entailed) *entailed = false;
  if (slices < 1) slices = 1;
  Box bx = b;
  Interval acc = Interval::empty();
  const double plo = g.P.lo(), w = g.P.width();
  for (int i = 0; i < slices; ++i) {
    double a = i == 0 ? plo : plo + w * i / slices;
    double c = i == slices - 1 ? g.P.hi() : plo + w * (i + 1) / slices;
    if (a > c) continue;
    Interval pi(a, c);
    Interval pi_test = pi;
    Monotonicity m = param_monotonicity(g, bx, pi);
    if (m == Monotonicity::Increasing) pi_test = Interval(pi.hi());
    else if (m == Monotonicity::Decreasing) pi_test = Interval(pi.lo());
    else {
      SIConstraint sub = g;
      sub.P = pi;
      ContractOutcome inst = instantiate_parameter(sub, bx);
      if (inst.empty()) return ContractOutcome::make_empty();
      bx = inst.box;
    }
    Revision rev = hc4revise(g.expr, Interval::nonpos(), with_param(bx, pi_test));
    if (rev.value.is_empty() || rev.value.lo() > 0.0)
      return ContractOutcome::make_empty(); // violated for every x at some p in the slice
    if (rev.out.empty()) return ContractOutcome::make_empty();
    const Interval pnew = rev.out.box[g.param_index()];
    if (pnew.lo() > pi_test.lo() || pnew.hi() < pi_test.hi()) return ContractOutcome::make_empty();
    bx = strip_param(rev.out.box);
    if (rev.value.hi() <= 0.0) continue; // slice proven satisfied: dropped
    acc = hull(acc, pi);
  }
  if (acc.is_empty()) {
    if (entailed) *entailed = true;
    return ContractOutcome::entailed(std::move(bx));
  }
  g.P = acc;
  return ContractOutcome::contracted(std::move(bx));
}

bool maybe_bisect_parameter(const SIConstraint& g, const Box& b, Interval* p1, Interval* p2) {
  if (g.P.is_degenerate()) return false;
  double m = g.P.mid();
  Interval h1(g.P.lo(), m), h2(m, g.P.hi());
  Interval e0 = eval_natural(g.expr, with_param(b, g.P));
  Interval e1 = eval_natural(g.expr, with_param(b, h1));
  Interval e2 = eval_natural(g.expr, with_param(b, h2));
  if (e0.is_empty() || e1.is_empty() || e2.is_empty()) return false;
  double wh = hull(e1, e2).width();
  double w0 = e0.width();
  if (!std::isfinite(wh) || !std::isfinite(w0)) return false;
  if (wh < g.kappa * w0) {
    if (p1) *p1 = h1;
    if (p2) *p2 = h2;
    return true;
  }
  return false;
}

SicOutcome contract_sic(SIConstraint& g, const Box& b, SicStrategy strategy) {
  SicOutcome r;
  if (g.P.is_degenerate()) {
    r.out = contract_2b_sic(g, b, &r.entailed);
    return r;
  }
  Monotonicity m = param_monotonicity(g, b, g.P);
  if (m != Monotonicity::Unknown) {
    // instantiation at the worst-case bound is an equivalent constraint
    ContractOutcome inst = instantiate_parameter(g, b);
    if (inst.empty()) {
      r.out = inst;
      return r;
    }
    r.out = contract_2b_sic(g, inst.box, &r.entailed);
    return r;
  }
  ContractOutcome inst = instantiate_parameter(g, b);
  if (inst.empty()) {
    r.out = inst;
    return r;
  }
  r.out = contract_2b_sic(g, inst.box, &r.entailed);
  if (r.out.empty() || r.entailed) return r;
  if (contract_negation(g, r.out.box) == NegationResult::Entailed) {
    r.entailed = true;
    r.out = ContractOutcome::entailed(r.out.box);
    return r;
  }
  if (strategy == SicStrategy::Shave) {
    ContractOutcome sh = shave_parameter(g, r.out.box, g.shave_slices, &r.entailed);
    if (sh.empty()) {
      r.out = sh;
      return r;
    }
    r.out = r.entailed ? ContractOutcome::entailed(sh.box) : sh;
    return r;
  }
  if (maybe_bisect_parameter(g, r.out.box, &r.p1, &r.p2)) r.split = true;
  return r;
}

SicPointStatus sic_point_check(const Expression& expr, const Vec& x, const Interval& P,
                               double* violation, int budget) {
  Box bp(static_cast<int>(x.size()) + 1);
  for (int i = 0; i < x.size(); ++i) bp[i] = Interval(x[i]);

  struct Item {
    Interval p;
    int depth;
  };
  std::vector<Item> work{{P, 0}};
  bool undecided = false;
  double worst = 0.0;
  int used = 0;
  const int init_slices = 16, max_depth = 14;

  // first level: uniform slices
  if (!P.is_degenerate()) {
    work.clear();
    double lo = P.lo(), w = P.width();
    for (int i = 0; i < init_slices; ++i) {
      double a = i == 0 ? lo : lo + w * i / init_slices;
      double b = i == init_slices - 1 ? P.hi() : lo + w * (i + 1) / init_slices;
      work.push_back({Interval(a, b), 0});
    }
  }

  while (!work.empty()) {
    Item it = work.back();
    work.pop_back();
    if (++used > budget) {
      undecided = true;
      break;
    }
    bp[static_cast<int>(x.size())] = it.p;
    Interval v = eval_natural(expr, bp);
    if (v.is_empty()) {
      undecided = true;
      continue;
    }
    if (v.lo() > 0.0) {
      if (violation) *violation = v.lo();
      return SicPointStatus::Violated;
    }
    if (v.hi() <= 0.0) continue; // slice proven
    if (it.depth >= max_depth || it.p.width() <= 0.0) {
      undecided = true;
      worst = std::max(worst, v.hi());
      continue;
    }
    double m = it.p.mid();
    work.push_back({Interval(it.p.lo(), m), it.depth + 1});
    work.push_back({Interval(m, it.p.hi()), it.depth + 1});
  }
  if (undecided) {
    if (violation) *violation = worst;
    return SicPointStatus::Undecided;
  }
  if (violation) *violation = 0.0;
  return SicPointStatus::Proven;
}

} // namespace ivo
