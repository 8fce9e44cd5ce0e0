#ifndef IVO_SIMPLEX_HPP
#define IVO_SIMPLEX_HPP

#include <vector>

#include "ivo/box.hpp"

namespace ivo {

// minimize c.x subject to A x <= b and x in box (finite bounds)
struct LinearProgram {
  Vec c;
  std::vector<Vec> A;
  Vec b;
  Box box;
};

struct LpResult {
  enum class Status { Optimal, Infeasible, Unbounded, Failed } status = Status::Failed;
  Vec x;
  Vec y;      // row duals (>= 0) at optimality, one per row of A
  Vec farkas; // infeasibility multipliers (>= 0), one per row of A
  double obj = 0.0;
};

// dense two-phase primal simplex, Bland's rule; approximate on purpose.
// Rigor comes from the interval certificates below, never from the LP itself.
LpResult solve_lp(const LinearProgram& lp, int max_iter = 5000);

// c.x >= (c + A^T y).x - y.b for any y >= 0 and feasible x: a true lower
// bound despite LP roundoff, evaluated with interval arithmetic over the box.
double certified_lower_bound(const LinearProgram& lp, const Vec& y);

// Farkas check: min over the box of (A^T y).x - y.b > 0 proves infeasibility.
bool certified_infeasible(const LinearProgram& lp, const Vec& y);

} // namespace ivo

#endif
