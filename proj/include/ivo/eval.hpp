#ifndef IVO_EVAL_HPP
#define IVO_EVAL_HPP

#include <vector>

#include "ivo/box.hpp"
#include "ivo/expr.hpp"

namespace ivo {

// Per-evaluation scratch, indexed by tape slot (see Expression::slot()).
// After a forward sweep, val[slot] is the natural-extension value of that
// subexpression; adj accumulates reverse-mode adjoints.
struct Tape {
  std::vector<Interval> val;
  std::vector<Interval> adj;
};

// evaluation counters (thread-local): interval evals, gradient evals, fpa evals
struct EvalCounters {
  long long interval_evals = 0;
  long long gradient_evals = 0;
  long long fpa_evals = 0;
};
EvalCounters& eval_counters();

void forward_sweep(const Expression& e, const Box& b, Tape& t);
Interval eval_natural(const Expression& e, const Box& b);
Interval eval_point(const Expression& e, const Vec& x); // degenerate-box enclosure

double eval_fpa(const Expression& e, const Vec& x); // round-to-nearest

// reverse sweep over existing tape values; adds this expression's adjoints
// into grad (size = arity). Returns false if any needed value is empty.
bool reverse_sweep(const Expression& e, Tape& t, std::vector<Interval>& grad);

std::vector<Interval> grad_adjoint(const Expression& e, const Box& b);
// gradient from an HC4Revise-contracted tape (tighter node enclosures)
std::vector<Interval> constrained_gradient(const Expression& e, const Box& b, const Tape& contracted);

enum class Center { Mid, BaumannLo, BaumannHi };

Interval eval_mean_value(const Expression& e, const Box& b, Center rule,
                         const std::vector<Interval>* grad = nullptr,
                         Vec* center_out = nullptr);
Interval eval_mean_value_at(const Expression& e, const Box& b, const Vec& c,
                            const std::vector<Interval>* grad = nullptr);

// componentwise Baumann center that maximizes the mean-value lower bound
Vec baumann_center_lo(const Box& b, const std::vector<Interval>& grad);
Vec baumann_center_hi(const Box& b, const std::vector<Interval>& grad);

enum class Monotonicity : uint8_t { Unknown, Increasing, Decreasing };

// per-variable flags on a box, from an interval gradient
std::vector<Monotonicity> monotonicity_info(const Expression& e, const Box& b,
                                            const std::vector<Interval>& grad);

Interval eval_monotonic(const Expression& e, const Box& b, bool recursive);
// also exposes the minimizing/maximizing sub-boxes X- and X+
Interval eval_monotonic_full(const Expression& e, const Box& b, bool recursive,
                             Box* bminus, Box* bplus);

} // namespace ivo

#endif
