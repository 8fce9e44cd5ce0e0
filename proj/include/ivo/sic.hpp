#ifndef IVO_SIC_HPP
#define IVO_SIC_HPP

#include "ivo/contract.hpp"

namespace ivo {

enum class SicStrategy : uint8_t { Shave, Bisect };

// Semi-infinite constraint c(x, p) <= 0 for all p in P. The expression has
// arity n+1 with the parameter in the last slot; P is node-local and only
// ever loses values that are proven satisfied for every x in the node's box.
struct SIConstraint {
  Expression expr;
  Interval P;
  int shave_slices = 8;
  double kappa = 0.8;

  int param_index() const { return expr.arity() - 1; }
  int nvars() const { return expr.arity() - 1; }
};

struct SicOutcome {
  ContractOutcome out;
  bool entailed = false; // proven satisfied over (box, P)
  bool split = false;    // parameter bisection requested (strategy Bisect)
  Interval p1, p2;
};

// 2B pass on c(B, P) <= 0 treating p as a variable. A strict shrink of P is a
// violation witness (those p values fail for every x in B).
ContractOutcome contract_2b_sic(SIConstraint& g, const Box& b, bool* entailed);

// instantiate p at the constraint-equivalent bound (monotone case) or m(P)
ContractOutcome instantiate_parameter(SIConstraint& g, const Box& b);

enum class NegationResult : uint8_t { Entailed, ParameterReduced };
// contract a copy of (B, P) with respect to c > 0; empties => SIC entailed,
// otherwise P keeps only the still-undecided parameter values
NegationResult contract_negation(SIConstraint& g, const Box& b);

ContractOutcome shave_parameter(SIConstraint& g, const Box& b, int slices, bool* entailed);

bool maybe_bisect_parameter(const SIConstraint& g, const Box& b, Interval* p1, Interval* p2);

SicOutcome contract_sic(SIConstraint& g, const Box& b, SicStrategy strategy);

// Rigorous pointwise check of the SIC at x over the given parameter domain,
// by adaptive slicing of P.
enum class SicPointStatus : uint8_t { Proven, Violated, Undecided };
SicPointStatus sic_point_check(const Expression& expr, const Vec& x, const Interval& P,
                               double* violation = nullptr, int budget = 512);

} // namespace ivo

#endif
