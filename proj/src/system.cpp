#include "ivo/system.hpp"

#include <deque>

namespace ivo {

namespace {
std::vector<int> unit_vars(const ConstraintSystem& sys, int unit) {
  int nc = static_cast<int>(sys.constraints.size());
  if (unit < nc) return sys.constraints[unit].expr.variables();
  std::vector<int> v = sys.sics[unit - nc].expr.variables();
  // the parameter slot is not a search variable
  int p = sys.sics[unit - nc].param_index();
  std::erase(v, p);
  return v;
}
} // namespace

ContractOutcome fixed_point(ConstraintSystem& sys, const Box& b, const FixedPointOptions& opt) {
  const int nc = static_cast<int>(sys.constraints.size());
  if (sys.cstatus.size() != sys.constraints.size() || sys.sstatus.size() != sys.sics.size())
    sys.reset_status();

  Box bx = b;
  std::deque<int> queue;
  std::vector<char> inq(nc + sys.sics.size(), 0);
  auto is_active = [&](int u) {
    return u < nc ? sys.cstatus[u] == UnitStatus::Active
                  : sys.sstatus[u - nc] == UnitStatus::Active;
  };
  for (int u = 0; u < static_cast<int>(inq.size()); ++u)
    if (is_active(u)) {
      queue.push_back(u);
      inq[u] = 1;
    }

  auto wake = [&](const Box& before, const Box& after) {
    // a constraint re-enters only if one of its variables shrank below eta * w
    for (int u2 = 0; u2 < static_cast<int>(inq.size()); ++u2) {
      if (inq[u2] || !is_active(u2)) continue;
      for (int k : unit_vars(sys, u2)) {
        if (after[k].width() < opt.eta * before[k].width()) {
          queue.push_back(u2);
          inq[u2] = 1;
          break;
        }
      }
    }
  };

  int pops = 0;
  while (!queue.empty()) {
    if (++pops > opt.max_pops) break;
    int u = queue.front();
    queue.pop_front();
    inq[u] = 0;
    if (!is_active(u)) continue;

    Box before = bx;
    if (u < nc) {
      ContractOutcome out;
      if (opt.use_mohc) {
        out = mohc_revise(sys.constraints[u], bx).out;
      } else {
        out = hc4revise(sys.constraints[u], bx).out;
      }
      if (out.empty()) return ContractOutcome::make_empty();
      if (out.kind == OutcomeKind::Entailed) sys.cstatus[u] = UnitStatus::Satisfied;
      bx = out.box;
    } else {
      int s = u - nc;
      SicOutcome so = contract_sic(sys.sics[s], bx, opt.sic_strategy);
      if (so.out.empty()) return ContractOutcome::make_empty();
      if (so.entailed) sys.sstatus[s] = UnitStatus::Satisfied;
      bx = so.out.box;
      if (so.split) {
        // replace by two SICs over the halves; both stay active
        SIConstraint twin = sys.sics[s];
        sys.sics[s].P = so.p1;
        twin.P = so.p2;
        sys.sics.push_back(std::move(twin));
        sys.sstatus.push_back(UnitStatus::Active);
        inq.push_back(1);
        queue.push_back(static_cast<int>(inq.size()) - 1);
        queue.push_back(u);
        inq[u] = 1;
      }
    }
    wake(before, bx);
  }
  return ContractOutcome::contracted(std::move(bx));
}

SubContractor hc4_subcontractor(const FixedPointOptions& opt) {
  return [opt](ConstraintSystem& sys, const Box& b) { return fixed_point(sys, b, opt); };
}

namespace {
Interval nth_slice(const Interval& x, int k, int s) {
  double w = x.width();
  double a = k == 0 ? x.lo() : x.lo() + w * k / s;
  double b = k == s - 1 ? x.hi() : x.lo() + w * (k + 1) / s;
  return Interval(std::min(a, b), std::max(a, b));
}
} // namespace

ContractOutcome shave_3b(const ConstraintSystem& sys, const Box& b, int s3b,
                         const SubContractor& sub, Box* out) {
  Box bx = b;
  for (int i = 0; i < bx.size(); ++i) {
    if (bx[i].is_degenerate()) continue;
    double w = bx[i].width();
    if (!std::isfinite(w) || w == 0.0) continue;
    double slice = w / s3b;
    // left side
    for (int k = 0; k < s3b; ++k) {
      if (bx[i].is_empty()) return ContractOutcome::make_empty();
      double lo = bx[i].lo();
      double hi = std::min(bx[i].hi(), lo + slice);
      Box trial = bx;
      trial[i] = Interval(lo, hi);
      ConstraintSystem scratch = sys;
      if (!sub(scratch, trial).empty()) break;
      if (hi >= bx[i].hi()) return ContractOutcome::make_empty(); // whole domain refuted
      bx[i] = Interval(hi, bx[i].hi());
    }
    // right side
    for (int k = 0; k < s3b; ++k) {
      double hi = bx[i].hi();
      double lo = std::max(bx[i].lo(), hi - slice);
      Box trial = bx;
      trial[i] = Interval(lo, hi);
      ConstraintSystem scratch = sys;
      if (!sub(scratch, trial).empty()) break;
      if (lo <= bx[i].lo()) return ContractOutcome::make_empty();
      bx[i] = Interval(bx[i].lo(), lo);
    }
  }
  if (out) *out = bx;
  return ContractOutcome::contracted(std::move(bx));
}

namespace {
ContractOutcome var_cid(const ConstraintSystem& sys, Box& bx, int i, int scid,
                        const SubContractor& sub) {
  if (bx[i].is_degenerate() || !std::isfinite(bx[i].width()) || bx[i].width() == 0.0)
    return ContractOutcome::contracted(bx);
  Box acc;
  bool any = false;
  for (int k = 0; k < scid; ++k) {
    Box trial = bx;
    trial[i] = nth_slice(bx[i], k, scid);
    ConstraintSystem scratch = sys;
    ContractOutcome o = sub(scratch, trial);
    if (o.empty()) continue;
    acc = any ? Box::hull(acc, o.box) : o.box;
    any = true;
  }
  if (!any) return ContractOutcome::make_empty();
  bx = acc;
  return ContractOutcome::contracted(bx);
}
} // namespace

ContractOutcome shave_cid(const ConstraintSystem& sys, const Box& b, int scid,
                          const SubContractor& sub, Box* out) {
  Box bx = b;
  for (int i = 0; i < bx.size(); ++i) {
    ContractOutcome o = var_cid(sys, bx, i, scid, sub);
    if (o.empty()) return o;
  }
  if (out) *out = bx;
  return ContractOutcome::contracted(std::move(bx));
}

ContractOutcome threeb_cid(const ConstraintSystem& sys, const Box& b, int s3b, int scid,
                           const SubContractor& sub, Box* out) {
  Box bx = b;
  for (int i = 0; i < bx.size(); ++i) {
    if (bx[i].is_degenerate()) continue;
    double w = bx[i].width();
    if (!std::isfinite(w) || w == 0.0) continue;
    double slice = w / s3b;
    for (int k = 0; k < s3b; ++k) { // left refutation
      if (bx[i].is_empty()) return ContractOutcome::make_empty();
      double lo = bx[i].lo();
      double hi = std::min(bx[i].hi(), lo + slice);
      Box trial = bx;
      trial[i] = Interval(lo, hi);
      ConstraintSystem scratch = sys;
      if (!sub(scratch, trial).empty()) break;
      if (hi >= bx[i].hi()) return ContractOutcome::make_empty();
      bx[i] = Interval(hi, bx[i].hi());
    }
    for (int k = 0; k < s3b; ++k) { // right refutation
      double hi = bx[i].hi();
      double lo = std::max(bx[i].lo(), hi - slice);
      Box trial = bx;
      trial[i] = Interval(lo, hi);
      ConstraintSystem scratch = sys;
      if (!sub(scratch, trial).empty()) break;
      if (lo <= bx[i].lo()) return ContractOutcome::make_empty();
      bx[i] = Interval(bx[i].lo(), lo);
    }
    ContractOutcome o = var_cid(sys, bx, i, scid, sub);
    if (o.empty()) return o;
  }
  if (out) *out = bx;
  return ContractOutcome::contracted(std::move(bx));
}

} // namespace ivo
