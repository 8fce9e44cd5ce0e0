#ifndef IVO_CONTRACT_HPP
#define IVO_CONTRACT_HPP

#include <vector>

#include "ivo/eval.hpp"

namespace ivo {

enum class Rel : uint8_t { LeqZero, GeqZero, EqZero };

// EqZero is handled as the relaxed band [-eps_eq, eps_eq].
struct Constraint {
  Expression expr;
  Rel rel = Rel::LeqZero;
  double eps_eq = 1e-8;

  Interval rhs() const {
    switch (rel) {
    case Rel::LeqZero: return Interval(-INFINITY, 0.0);
    case Rel::GeqZero: return Interval(0.0, INFINITY);
    default: return Interval(-eps_eq, eps_eq);
    }
  }
};

enum class OutcomeKind : uint8_t { Contracted, Empty, Entailed };

struct ContractOutcome {
  OutcomeKind kind = OutcomeKind::Contracted;
  Box box;

  bool empty() const { return kind == OutcomeKind::Empty; }
  static ContractOutcome make_empty() { return {OutcomeKind::Empty, Box()}; }
  static ContractOutcome contracted(Box b) { return {OutcomeKind::Contracted, std::move(b)}; }
  static ContractOutcome entailed(Box b) { return {OutcomeKind::Entailed, std::move(b)}; }
};

// Forward-backward propagation (2B approximation) of expr(x) in rhs.
// The returned tape holds the post-propagation node values, which feed
// constrained_gradient.
struct Revision {
  ContractOutcome out;
  Tape tape;
  Interval value; // forward (pre-intersection) value of the expression
};
Revision hc4revise(const Expression& e, const Interval& rhs, const Box& b);
Revision hc4revise(const Constraint& c, const Box& b);

// Box-consistency narrowing of component i with respect to expr(x) in rhs,
// by a univariate interval Newton on that component.
Interval box_narrow(const Expression& e, const Box& b, int i, const Interval& rhs,
                    int max_iter = 24);

struct ZeroEnclosure {
  Interval x;
  bool certified = false; // an iterate landed strictly inside its predecessor
};
// All zeros of a univariate expression on X, to width <= tol.
std::vector<ZeroEnclosure> newton_univariate(const Expression& f, const Interval& X,
                                             double tol, int budget = 20000);

// One preconditioned interval Gauss-Seidel step on g(x) = 0 linearized at xk.
ContractOutcome newton_multivariate(const std::vector<Expression>& g, const Box& b,
                                    const Vec& xk);

struct MohcResult {
  ContractOutcome out;
  double lb = -INFINITY; // monotonicity-based lower bound of expr over the box
  Box bminus;            // X^- of the contracted box (minimizing corner box)
};
// HC4Revise plus monotone decomposition propagation and monotone narrowing.
MohcResult mohc_revise(const Constraint& c, const Box& b);

// Optimality-based reduction for bound constrained problems. grad encloses
// the objective gradient on b; dfdx are the symbolic partial derivatives
// (for the stationarity propagation), may be empty to skip that step.
ContractOutcome stationarity_contract(const Box& b, const Box& domain, const Expression& f,
                                      const std::vector<Interval>& grad,
                                      const std::vector<Expression>& dfdx);

// Symbolic adjoint differentiation: one expression per variable, sharing the
// input dag. Abs contributes abs(u)/u (a conservative subgradient carrier).
std::vector<Expression> symbolic_gradient(const Expression& e);

} // namespace ivo

#endif
