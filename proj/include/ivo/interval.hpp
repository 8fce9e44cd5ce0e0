#ifndef IVO_INTERVAL_HPP
#define IVO_INTERVAL_HPP

#include <cassert>
#include <cmath>
#include <string>

#include "ivo/rounding.hpp"

namespace ivo {

// Closed interval with IEEE-754 binary64 bounds (infinities allowed). The
// empty set is an explicit sentinel, not NaN bounds. Every operation returns
// an enclosure of the exact real-set result.
class Interval {
public:
  Interval() : lo_(0.0), hi_(0.0), empty_(false) {}
  Interval(double v) : lo_(v), hi_(v), empty_(false) { assert(!std::isnan(v)); }
  Interval(double lo, double hi) : lo_(lo), hi_(hi), empty_(false) {
    assert(!std::isnan(lo) && !std::isnan(hi));
    assert(lo <= hi);
  }

  static Interval empty() {
    Interval x;
    x.lo_ = INFINITY;
    x.hi_ = -INFINITY;
    x.empty_ = true;
    return x;
  }
  static Interval entire() { return Interval(-INFINITY, INFINITY); }
  static Interval nonneg() { return Interval(0.0, INFINITY); }
  static Interval nonpos() { return Interval(-INFINITY, 0.0); }

  bool is_empty() const { return empty_; }
  double lo() const { return lo_; }
  double hi() const { return hi_; }

  bool is_degenerate() const { return !empty_ && lo_ == hi_; }
  bool is_bounded() const { return !empty_ && std::isfinite(lo_) && std::isfinite(hi_); }

  double width() const {
    if (empty_) return 0.0;
    return rnd::sub_up(hi_, lo_);
  }

  // midpoint, guaranteed to lie inside a nonempty interval
  double mid() const {
    assert(!empty_);
    if (lo_ == -INFINITY && hi_ == INFINITY) return 0.0;
    if (lo_ == -INFINITY) return hi_ > -1.7e308 ? -1.7e308 : hi_;
    if (hi_ == INFINITY) return lo_ < 1.7e308 ? 1.7e308 : lo_;
    double m = 0.5 * lo_ + 0.5 * hi_;
    if (m < lo_) m = lo_;
    if (m > hi_) m = hi_;
    return m;
  }

  double mag() const { return empty_ ? 0.0 : std::max(std::fabs(lo_), std::fabs(hi_)); }

  bool contains(double x) const { return !empty_ && lo_ <= x && x <= hi_; }
  bool contains(const Interval& o) const {
    if (o.empty_) return true;
    return !empty_ && lo_ <= o.lo_ && o.hi_ <= hi_;
  }
  bool subset_of(const Interval& o) const { return o.contains(*this); }
  // strict containment in the interior (interval Newton existence certificate)
  bool interior_of(const Interval& o) const {
    if (empty_) return true;
    if (o.empty_) return false;
    return o.lo_ < lo_ && hi_ < o.hi_;
  }
  bool disjoint(const Interval& o) const {
    return empty_ || o.empty_ || hi_ < o.lo_ || o.hi_ < lo_;
  }

  bool operator==(const Interval& o) const {
    if (empty_ || o.empty_) return empty_ == o.empty_;
    return lo_ == o.lo_ && hi_ == o.hi_;
  }
  bool operator!=(const Interval& o) const { return !(*this == o); }

private:
  double lo_, hi_;
  bool empty_;
};

inline Interval intersect(const Interval& a, const Interval& b) {
  if (a.is_empty() || b.is_empty()) return Interval::empty();
  double lo = std::max(a.lo(), b.lo());
  double hi = std::min(a.hi(), b.hi());
  if (lo > hi) return Interval::empty();
  return Interval(lo, hi);
}

inline Interval hull(const Interval& a, const Interval& b) {
  if (a.is_empty()) return b;
  if (b.is_empty()) return a;
  return Interval(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

inline Interval hull(const Interval& a, double x) { return hull(a, Interval(x)); }

inline Interval operator-(const Interval& x) {
  if (x.is_empty()) return x;
  return Interval(-x.hi(), -x.lo());
}

inline Interval operator+(const Interval& x, const Interval& y) {
  if (x.is_empty() || y.is_empty()) return Interval::empty();
  return Interval(rnd::add_down(x.lo(), y.lo()), rnd::add_up(x.hi(), y.hi()));
}

inline Interval operator-(const Interval& x, const Interval& y) {
  if (x.is_empty() || y.is_empty()) return Interval::empty();
  return Interval(rnd::sub_down(x.lo(), y.hi()), rnd::sub_up(x.hi(), y.lo()));
}

Interval operator*(const Interval& x, const Interval& y);
// total division: hull of the extended quotient set (empty when y = [0,0])
Interval operator/(const Interval& x, const Interval& y);

inline Interval operator+(double a, const Interval& x) { return Interval(a) + x; }
inline Interval operator+(const Interval& x, double a) { return x + Interval(a); }
inline Interval operator-(double a, const Interval& x) { return Interval(a) - x; }
inline Interval operator-(const Interval& x, double a) { return x - Interval(a); }
inline Interval operator*(double a, const Interval& x) { return Interval(a) * x; }
inline Interval operator*(const Interval& x, double a) { return x * Interval(a); }
inline Interval operator/(double a, const Interval& x) { return Interval(a) / x; }
inline Interval operator/(const Interval& x, double a) { return x / Interval(a); }

// at most two intervals; second nonempty only for a genuine two-piece quotient
struct IntervalPair {
  Interval first = Interval::empty();
  Interval second = Interval::empty();
  int count = 0;
  Interval hulled() const { return hull(first, second); }
};

// extended division per the five-case reciprocal table; X/[0,0] is empty
IntervalPair extended_div(const Interval& x, const Interval& y);

Interval sqr(const Interval& x);
Interval sqrt(const Interval& x); // intersects with [0, +inf] first
Interval exp(const Interval& x);
Interval log(const Interval& x); // empty when hi <= 0
Interval sin(const Interval& x);
Interval cos(const Interval& x);
Interval abs(const Interval& x);
Interval pow_int(const Interval& x, int k);

// "[lo,hi]" with 17 significant digits; "[empty]" for the empty set
std::string to_string(const Interval& x);

} // namespace ivo

#endif
