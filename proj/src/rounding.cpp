#include "ivo/rounding.hpp"

#include <atomic>

namespace ivo::rnd {

namespace hw {
bool probe();
double add_down(double, double);
double add_up(double, double);
double sub_down(double, double);
double sub_up(double, double);
double mul_down(double, double);
double mul_up(double, double);
double div_down(double, double);
double div_up(double, double);
double sqrt_down(double);
double sqrt_up(double);
} // namespace hw

namespace {
std::atomic<Backend> g_backend{Backend::Software};

// exactness tests: residual of the rounded op, computed without rounding error
inline bool add_exact(double a, double b, double r) {
  double bv = r - a;
  double av = r - bv;
  double eb = b - bv;
  double ea = a - av;
  return ea + eb == 0.0;
}
inline bool mul_exact(double a, double b, double r) { return std::fma(a, b, -r) == 0.0; }
inline bool div_exact(double a, double b, double r) { return std::fma(r, b, -a) == 0.0; }
inline bool sqrt_exact(double a, double r) { return std::fma(r, r, -a) == 0.0; }

inline double down_unless(double r, bool exact) {
  if (exact || r == -INFINITY) return r;
  return prev(r);
}
inline double up_unless(double r, bool exact) {
  if (exact || r == INFINITY) return r;
  return next(r);
}
} // namespace

Backend backend() { return g_backend.load(std::memory_order_relaxed); }
void set_backend(Backend b) { g_backend.store(b, std::memory_order_relaxed); }
bool hardware_supported() {
  static const bool ok = hw::probe();
  return ok;
}

#define IVO_DISPATCH2(name)                                                    \
  double name(double a, double b) {                                            \
    if (backend() == Backend::Hardware) return hw::name(a, b);                 \
    return sw_##name(a, b);                                                    \
  }
#define IVO_DISPATCH1(name)                                                    \
  double name(double a) {                                                      \
    if (backend() == Backend::Hardware) return hw::name(a);                    \
    return sw_##name(a);                                                       \
  }

namespace {
inline double sw_add_down(double a, double b) {
  double r = a + b;
  return down_unless(r, add_exact(a, b, r));
}
inline double sw_add_up(double a, double b) {
  double r = a + b;
  return up_unless(r, add_exact(a, b, r));
}
inline double sw_sub_down(double a, double b) { return sw_add_down(a, -b); }
inline double sw_sub_up(double a, double b) { return sw_add_up(a, -b); }
inline double sw_mul_down(double a, double b) {
  double r = a * b;
  return down_unless(r, mul_exact(a, b, r));
}
inline double sw_mul_up(double a, double b) {
  double r = a * b;
  return up_unless(r, mul_exact(a, b, r));
}
inline double sw_div_down(double a, double b) {
  double r = a / b;
  return down_unless(r, std::isfinite(r) && div_exact(a, b, r));
}
inline double sw_div_up(double a, double b) {
  double r = a / b;
  return up_unless(r, std::isfinite(r) && div_exact(a, b, r));
}
inline double sw_sqrt_down(double a) {
  double r = std::sqrt(a);
  double d = down_unless(r, sqrt_exact(a, r));
  return d < 0.0 ? 0.0 : d;
}
inline double sw_sqrt_up(double a) {
  double r = std::sqrt(a);
  return up_unless(r, sqrt_exact(a, r));
}
} // namespace

IVO_DISPATCH2(add_down)
IVO_DISPATCH2(add_up)
IVO_DISPATCH2(sub_down)
IVO_DISPATCH2(sub_up)
IVO_DISPATCH2(mul_down)
IVO_DISPATCH2(mul_up)
IVO_DISPATCH2(div_down)
IVO_DISPATCH2(div_up)
IVO_DISPATCH1(sqrt_down)
IVO_DISPATCH1(sqrt_up)

// transcendental kernels: libm + 1 ulp outward, both backends
double exp_down(double a) {
  if (a == -INFINITY) return 0.0;
  double d = prev(std::exp(a));
  return d < 0.0 ? 0.0 : d;
}
double exp_up(double a) {
  if (a == INFINITY) return INFINITY;
  return next(std::exp(a));
}
double log_down(double a) {
  if (a == 0.0) return -INFINITY;
  if (a == INFINITY) return INFINITY;
  return prev(std::log(a));
}
double log_up(double a) {
  if (a == 0.0) return -INFINITY;
  if (a == INFINITY) return INFINITY;
  return next(std::log(a));
}
double sin_down(double a) {
  double d = prev(std::sin(a));
  return d < -1.0 ? -1.0 : d;
}
double sin_up(double a) {
  double u = next(std::sin(a));
  return u > 1.0 ? 1.0 : u;
}
double cos_down(double a) {
  double d = prev(std::cos(a));
  return d < -1.0 ? -1.0 : d;
}
double cos_up(double a) {
  double u = next(std::cos(a));
  return u > 1.0 ? 1.0 : u;
}
double asin_down(double a) { return prev(std::asin(a)); }
double asin_up(double a) { return next(std::asin(a)); }
double acos_down(double a) {
  double d = prev(std::acos(a));
  return d < 0.0 ? 0.0 : d;
}
double acos_up(double a) { return next(std::acos(a)); }

} // namespace ivo::rnd
