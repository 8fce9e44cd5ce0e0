#ifndef IVO_CONVEXIFY_HPP
#define IVO_CONVEXIFY_HPP

#include <random>

#include "ivo/simplex.hpp"
#include "ivo/system.hpp"

namespace ivo {

struct ConvexifyResult {
  double lb = -INFINITY; // certified lower bound of f over the feasible part
  ContractOutcome out;
};

// Corner-Taylor linear relaxation of the objective and the active inequality
// constraints (one random corner and its opposite per constraint), lower
// bounded by one simplex call and post-certified with interval arithmetic.
// With contract_vars, 2n extra simplex calls narrow the variables (X-Newton).
ConvexifyResult convexify(const Box& b, const Expression& f, const ConstraintSystem& sys,
                          bool contract_vars, std::mt19937_64& rng,
                          double f_cut = INFINITY);

} // namespace ivo

#endif
