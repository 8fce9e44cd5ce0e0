#ifndef IVO_ROUNDING_HPP
#define IVO_ROUNDING_HPP

#include <cmath>

namespace ivo::rnd {

// Directed-rounding scalar kernels. Two backends:
//  - software (default): round-to-nearest op, then one step outward unless the
//    result is provably exact (checked with an fma residual);
//  - hardware: fesetround around each op, compiled in a TU with -frounding-math.
// Both enclose the exact real result; the property suite runs against both.
enum class Backend { Software, Hardware };

Backend backend();
void set_backend(Backend b);
bool hardware_supported();

inline double prev(double x) { return std::nextafter(x, -INFINITY); }
inline double next(double x) { return std::nextafter(x, INFINITY); }

double add_down(double a, double b);
double add_up(double a, double b);
double sub_down(double a, double b);
double sub_up(double a, double b);
double mul_down(double a, double b);
double mul_up(double a, double b);
double div_down(double a, double b);
double div_up(double a, double b);
double sqrt_down(double a);
double sqrt_up(double a);

// libm is not correctly rounded: results are widened by one ulp on each side
// regardless of backend.
double exp_down(double a);
double exp_up(double a);
double log_down(double a);
double log_up(double a);
double sin_down(double a);
double sin_up(double a);
double cos_down(double a);
double cos_up(double a);
double asin_down(double a);
double asin_up(double a);
double acos_down(double a);
double acos_up(double a);

// pi enclosures (nearest double below/above pi and friends)
inline constexpr double pi_lo = 3.1415926535897931;     // <= pi
inline constexpr double pi_hi = 3.1415926535897936;     // >= pi
inline constexpr double two_pi_lo = 6.2831853071795862; // <= 2pi
inline constexpr double two_pi_hi = 6.2831853071795871; // >= 2pi
inline constexpr double half_pi_lo = 1.5707963267948966;
inline constexpr double half_pi_hi = 1.5707963267948968;

} // namespace ivo::rnd

#endif
