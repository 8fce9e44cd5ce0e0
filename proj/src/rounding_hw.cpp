// Hardware directed-rounding backend. Compiled with -frounding-math so the
// optimizer cannot fold arithmetic across fesetround calls.
#include <cfenv>
#include <cmath>

namespace ivo::rnd::hw {

namespace {
struct Mode {
  int saved;
  explicit Mode(int m) : saved(std::fegetround()) { std::fesetround(m); }
  ~Mode() { std::fesetround(saved); }
};
volatile double sink; // defeats residual constant folding in the probe
} // namespace

bool probe() {
  {
    Mode m(FE_DOWNWARD);
    sink = 1.0;
    sink = sink + 1e-300;
  }
  double down = sink;
  {
    Mode m(FE_UPWARD);
    sink = 1.0;
    sink = sink + 1e-300;
  }
  double up = sink;
  return down < up && down <= 1.0 && up > 1.0;
}

#define IVO_HW_OP2(name, op, mode)                                             \
  double name(double a, double b) {                                            \
    Mode m(mode);                                                              \
    return a op b;                                                             \
  }

IVO_HW_OP2(add_down, +, FE_DOWNWARD)
IVO_HW_OP2(add_up, +, FE_UPWARD)
IVO_HW_OP2(sub_down, -, FE_DOWNWARD)
IVO_HW_OP2(sub_up, -, FE_UPWARD)
IVO_HW_OP2(mul_down, *, FE_DOWNWARD)
IVO_HW_OP2(mul_up, *, FE_UPWARD)
IVO_HW_OP2(div_down, /, FE_DOWNWARD)
IVO_HW_OP2(div_up, /, FE_UPWARD)

double sqrt_down(double a) {
  Mode m(FE_DOWNWARD);
  return std::sqrt(a);
}
double sqrt_up(double a) {
  Mode m(FE_UPWARD);
  return std::sqrt(a);
}

} // namespace ivo::rnd::hw
