#include "ivo/interval.hpp"

#include <algorithm>
#include <cstdio>

namespace ivo {

namespace {
// bound products with the 0 * inf = 0 convention
inline double pdown(double a, double b) {
  if (a == 0.0 || b == 0.0) return 0.0;
  return rnd::mul_down(a, b);
}
inline double pup(double a, double b) {
  if (a == 0.0 || b == 0.0) return 0.0;
  return rnd::mul_up(a, b);
}
} // namespace

Interval operator*(const Interval& x, const Interval& y) {
  if (x.is_empty() || y.is_empty()) return Interval::empty();
  double a = x.lo(), b = x.hi(), c = y.lo(), d = y.hi();
  double lo = std::min(std::min(pdown(a, c), pdown(a, d)), std::min(pdown(b, c), pdown(b, d)));
  double hi = std::max(std::max(pup(a, c), pup(a, d)), std::max(pup(b, c), pup(b, d)));
  return Interval(lo, hi);
}

IntervalPair extended_div(const Interval& x, const Interval& y) {
  IntervalPair r;
  if (x.is_empty() || y.is_empty()) return r;
  double c = y.lo(), d = y.hi();

  if (!y.contains(0.0)) {
    double a = x.lo(), b = x.hi();
    auto qdown = [](double p, double q) {
      if (p == 0.0) return 0.0;
      if (std::isinf(p) && std::isinf(q)) return 0.0; // corner of an unbounded quotient tail
      return rnd::div_down(p, q);
    };
    auto qup = [](double p, double q) {
      if (p == 0.0) return 0.0;
      if (std::isinf(p) && std::isinf(q)) return 0.0;
      return rnd::div_up(p, q);
    };
    double lo = std::min(std::min(qdown(a, c), qdown(a, d)), std::min(qdown(b, c), qdown(b, d)));
    double hi = std::max(std::max(qup(a, c), qup(a, d)), std::max(qup(b, c), qup(b, d)));
    r.first = Interval(lo, hi);
    r.count = 1;
    return r;
  }

  if (c == 0.0 && d == 0.0) return r; // empty quotient set

  if (x.contains(0.0)) {
    r.first = Interval::entire();
    r.count = 1;
    return r;
  }

  // x strictly positive or strictly negative, 0 in [c,d], y not [0,0]
  bool xpos = x.lo() > 0.0;
  double a = xpos ? x.lo() : x.hi(); // bound of smallest magnitude
  if (c == 0.0) {
    // quotient has the sign of x
    double q = xpos ? rnd::div_down(a, d) : -INFINITY;
    double qq = xpos ? INFINITY : rnd::div_up(a, d);
    r.first = Interval(q, qq);
    r.count = 1;
  } else if (d == 0.0) {
    double q = xpos ? -INFINITY : rnd::div_down(a, c);
    double qq = xpos ? rnd::div_up(a, c) : INFINITY;
    r.first = Interval(q, qq);
    r.count = 1;
  } else {
    // c < 0 < d: two pieces
    if (xpos) {
      r.first = Interval(-INFINITY, rnd::div_up(a, c));
      r.second = Interval(rnd::div_down(a, d), INFINITY);
    } else {
      r.first = Interval(-INFINITY, rnd::div_up(a, d));
      r.second = Interval(rnd::div_down(a, c), INFINITY);
    }
    r.count = 2;
    if (r.first.hi() >= r.second.lo()) { // numerically merged
      r.first = Interval::entire();
      r.second = Interval::empty();
      r.count = 1;
    }
  }
  return r;
}

Interval operator/(const Interval& x, const Interval& y) {
  IntervalPair p = extended_div(x, y);
  if (p.count == 0) return Interval::empty();
  return p.hulled();
}

Interval sqr(const Interval& x) {
  if (x.is_empty()) return x;
  double a = std::fabs(x.lo()), b = std::fabs(x.hi());
  double m = std::min(a, b), M = std::max(a, b);
  if (x.contains(0.0)) m = 0.0;
  return Interval(m == 0.0 ? 0.0 : rnd::mul_down(m, m), std::isinf(M) ? INFINITY : rnd::mul_up(M, M));
}

Interval sqrt(const Interval& x) {
  Interval c = intersect(x, Interval::nonneg());
  if (c.is_empty()) return c;
  double lo = c.lo() == 0.0 ? 0.0 : rnd::sqrt_down(c.lo());
  double hi = std::isinf(c.hi()) ? INFINITY : rnd::sqrt_up(c.hi());
  return Interval(lo, hi);
}

Interval exp(const Interval& x) {
  if (x.is_empty()) return x;
  return Interval(rnd::exp_down(x.lo()), rnd::exp_up(x.hi()));
}

Interval log(const Interval& x) {
  Interval c = intersect(x, Interval::nonneg());
  if (c.is_empty() || c.hi() <= 0.0) return Interval::empty();
  return Interval(rnd::log_down(c.lo()), rnd::log_up(c.hi()));
}

namespace {
// does [a,b] contain a point c + 2k*pi for some integer k? errs toward yes
bool contains_mod_2pi(double a, double b, double c) {
  double slack = std::max(1e-12, std::max(std::fabs(a), std::fabs(b)) * 4e-16);
  double k = std::ceil((a - c) / rnd::two_pi_hi - 1e-9);
  double cand = c + k * rnd::two_pi_lo;
  return cand <= b + slack && cand >= a - slack;
}
} // namespace

Interval sin(const Interval& x) {
  if (x.is_empty()) return x;
  double a = x.lo(), b = x.hi();
  if (!std::isfinite(a) || !std::isfinite(b) || rnd::sub_up(b, a) >= rnd::two_pi_lo ||
      std::max(std::fabs(a), std::fabs(b)) > 1e15)
    return Interval(-1.0, 1.0);
  double lo = std::min(rnd::sin_down(a), rnd::sin_down(b));
  double hi = std::max(rnd::sin_up(a), rnd::sin_up(b));
  if (contains_mod_2pi(a, b, rnd::half_pi_lo)) hi = 1.0;
  if (contains_mod_2pi(a, b, -rnd::half_pi_hi)) lo = -1.0;
  return Interval(lo, hi);
}

Interval cos(const Interval& x) {
  if (x.is_empty()) return x;
  double a = x.lo(), b = x.hi();
  if (!std::isfinite(a) || !std::isfinite(b) || rnd::sub_up(b, a) >= rnd::two_pi_lo ||
      std::max(std::fabs(a), std::fabs(b)) > 1e15)
    return Interval(-1.0, 1.0);
  double lo = std::min(rnd::cos_down(a), rnd::cos_down(b));
  double hi = std::max(rnd::cos_up(a), rnd::cos_up(b));
  if (contains_mod_2pi(a, b, 0.0)) hi = 1.0;
  if (contains_mod_2pi(a, b, rnd::pi_lo)) lo = -1.0;
  return Interval(lo, hi);
}

Interval abs(const Interval& x) {
  if (x.is_empty()) return x;
  if (x.lo() >= 0.0) return x;
  if (x.hi() <= 0.0) return -x;
  return Interval(0.0, std::max(-x.lo(), x.hi()));
}

namespace {
// x^k for x >= 0 by squaring, with one-sided rounding throughout
double pow_bound(double x, int k, bool up) {
  if (k == 0) return 1.0;
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return INFINITY;
  double acc = 1.0, base = x;
  int e = k;
  while (e > 0) {
    if (e & 1) acc = up ? rnd::mul_up(acc, base) : rnd::mul_down(acc, base);
    e >>= 1;
    if (e) base = up ? rnd::mul_up(base, base) : rnd::mul_down(base, base);
    if (std::isinf(acc) || std::isinf(base)) return up ? INFINITY : (acc == acc ? acc : 0.0);
  }
  return acc;
}
} // namespace

Interval pow_int(const Interval& x, int k) {
  if (x.is_empty()) return x;
  if (k == 0) return Interval(1.0, 1.0);
  if (k == 1) return x;
  if (k < 0) return Interval(1.0) / pow_int(x, -k);
  bool even = (k % 2) == 0;
  if (even) {
    double a = std::fabs(x.lo()), b = std::fabs(x.hi());
    double m = std::min(a, b), M = std::max(a, b);
    if (x.contains(0.0)) m = 0.0;
    return Interval(pow_bound(m, k, false), std::isinf(M) ? INFINITY : pow_bound(M, k, true));
  }
  // odd: monotone increasing
  auto lo_side = [&](double v) {
    if (v >= 0.0) return pow_bound(v, k, false);
    return -pow_bound(-v, k, true);
  };
  auto hi_side = [&](double v) {
    if (v >= 0.0) return std::isinf(v) ? INFINITY : pow_bound(v, k, true);
    return -pow_bound(-v, k, false);
  };
  return Interval(std::isinf(x.lo()) ? -INFINITY : lo_side(x.lo()), hi_side(x.hi()));
}

std::string to_string(const Interval& x) {
  if (x.is_empty()) return "[empty]";
  char buf[80];
  std::snprintf(buf, sizeof buf, "[%.17g,%.17g]", x.lo(), x.hi());
  return buf;
}

} // namespace ivo
