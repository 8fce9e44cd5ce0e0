#include "ivo/convexify.hpp"

namespace ivo {

namespace {

struct Plane {
  Vec a;           // slope coefficients
  Interval offset; // enclosure of the affine constant: lin(x) = offset + a.x
  bool ok = false;
};

// Convex linear underestimator of sign*g on b, expanded at the corner given
// by mask bits (1 = lower bound): sign*g(x) >= offset + a.x for all x in b.
Plane corner_plane(const Expression& g, const std::vector<Interval>& grad, const Box& b,
                   uint64_t mask, double sign) {
  Plane p;
  const int n = b.size();
  p.a = Vec::Zero(n);
  Vec c(n);
  for (int i = 0; i < n; ++i) c[i] = b[i].mid();
  for (int i : g.variables()) {
    Interval gi = sign > 0 ? grad[i] : -grad[i];
    if (gi.is_empty() || !gi.is_bounded()) return p;
    bool at_lo = (mask >> (i % 64)) & 1;
    c[i] = at_lo ? b[i].lo() : b[i].hi();
    p.a[i] = at_lo ? gi.lo() : gi.hi();
  }
  Interval gc = eval_point(g, c);
  if (sign < 0) gc = -gc;
  if (gc.is_empty() || gc.lo() == -INFINITY) return p;
  Interval ac(0.0);
  for (int i : g.variables()) ac = ac + Interval(p.a[i]) * Interval(c[i]);
  p.offset = Interval(gc.lo()) - ac;
  if (!std::isfinite(p.offset.lo()) || !std::isfinite(p.offset.hi())) return p;
  p.ok = true;
  return p;
}

void push_row(LinearProgram& lp, const Vec& a, double beta) {
  lp.A.push_back(a);
  lp.b.conservativeResize(lp.b.size() + 1);
  lp.b[lp.b.size() - 1] = beta;
}

// sign*g(x) <= shift for feasible x, and sign*g >= offset + a.x, so the
// linear row a.x <= shift - offset is valid for every feasible point.
void add_planes(LinearProgram& lp, const Expression& g, const std::vector<Interval>& grad,
                const Box& b, uint64_t mask, double sign, double shift) {
  for (uint64_t mk : {mask, ~mask}) {
    Plane p = corner_plane(g, grad, b, mk, sign);
    if (!p.ok) continue;
    Interval rhs = Interval(shift) - p.offset;
    if (!std::isfinite(rhs.hi())) continue;
    push_row(lp, p.a, rhs.hi());
  }
}

} // namespace

ConvexifyResult convexify(const Box& b, const Expression& f, const ConstraintSystem& sys,
                          bool contract_vars, std::mt19937_64& rng, double f_cut) {
  ConvexifyResult res;
  res.out = ContractOutcome::contracted(b);
  const int n = b.size();
  for (int i = 0; i < n; ++i)
    if (!b[i].is_bounded()) return res;

  auto grad_f = grad_adjoint(f, b);
  Plane pf = corner_plane(f, grad_f, b, rng(), 1.0);
  if (!pf.ok) return res;

  LinearProgram lp;
  lp.box = b;
  lp.c = pf.a;

  for (size_t j = 0; j < sys.constraints.size(); ++j) {
    if (j < sys.cstatus.size() && sys.cstatus[j] == UnitStatus::Satisfied) continue;
    const Constraint& con = sys.constraints[j];
    auto gg = grad_adjoint(con.expr, b);
    uint64_t mask = rng();
    switch (con.rel) {
    case Rel::LeqZero: add_planes(lp, con.expr, gg, b, mask, +1.0, 0.0); break;
    case Rel::GeqZero: add_planes(lp, con.expr, gg, b, mask, -1.0, 0.0); break;
    case Rel::EqZero:
      add_planes(lp, con.expr, gg, b, mask, +1.0, con.eps_eq);
      add_planes(lp, con.expr, gg, b, mask, -1.0, con.eps_eq);
      break;
    }
  }

  // incumbent cut: f_lin(x) <= f(x) <= f_cut on the still-interesting region
  if (std::isfinite(f_cut)) {
    Interval rhs = Interval(f_cut) - pf.offset;
    if (std::isfinite(rhs.hi())) push_row(lp, pf.a, rhs.hi());
  }

  LpResult sol = solve_lp(lp);
  if (sol.status == LpResult::Status::Infeasible) {
    if (certified_infeasible(lp, sol.farkas)) {
      res.out = ContractOutcome::make_empty();
      return res;
    }
    return res; // cannot certify: degrade gracefully
  }
  if (sol.status != LpResult::Status::Optimal) return res;

  double clb = certified_lower_bound(lp, sol.y);
  res.lb = (Interval(clb) + pf.offset).lo();

  if (contract_vars) {
    Box out = b;
    for (int i = 0; i < n; ++i) {
      LinearProgram lpi = lp;
      lpi.c = Vec::Zero(n);
      lpi.c[i] = 1.0;
      LpResult lo_sol = solve_lp(lpi);
      double lo_i = out[i].lo();
      if (lo_sol.status == LpResult::Status::Optimal)
        lo_i = std::max(lo_i, certified_lower_bound(lpi, lo_sol.y));
      lpi.c[i] = -1.0;
      LpResult hi_sol = solve_lp(lpi);
      double hi_i = out[i].hi();
      if (hi_sol.status == LpResult::Status::Optimal)
        hi_i = std::min(hi_i, -certified_lower_bound(lpi, hi_sol.y));
      if (lo_i > hi_i) {
        res.out = ContractOutcome::make_empty();
        return res;
      }
      out[i] = Interval(lo_i, hi_i);
    }
    res.out = ContractOutcome::contracted(std::move(out));
  }
  return res;
}

} // namespace ivo
