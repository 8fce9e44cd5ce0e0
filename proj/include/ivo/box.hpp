#ifndef IVO_BOX_HPP
#define IVO_BOX_HPP

#include <initializer_list>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "ivo/interval.hpp"

namespace ivo {

using Vec = Eigen::VectorXd;

// Cartesian product of intervals; the search-space value carrier.
class Box {
public:
  Box() = default;
  explicit Box(int n) : c_(n) {}
  Box(std::initializer_list<Interval> l) : c_(l) {}
  explicit Box(std::vector<Interval> v) : c_(std::move(v)) {}

  int size() const { return static_cast<int>(c_.size()); }
  Interval& operator[](int i) { return c_[i]; }
  const Interval& operator[](int i) const { return c_[i]; }

  bool is_empty() const {
    for (const auto& x : c_)
      if (x.is_empty()) return true;
    return c_.empty();
  }

  double width() const {
    double w = 0.0;
    for (const auto& x : c_) w = std::max(w, x.width());
    return w;
  }

  int widest_index() const {
    int k = 0;
    double w = -1.0;
    for (int i = 0; i < size(); ++i)
      if (c_[i].width() > w) {
        w = c_[i].width();
        k = i;
      }
    return k;
  }

  Vec midpoint() const {
    Vec m(size());
    for (int i = 0; i < size(); ++i) m[i] = c_[i].mid();
    return m;
  }

  double volume() const {
    double v = 1.0;
    for (const auto& x : c_) v *= x.width();
    return v;
  }

  bool contains(const Vec& p) const {
    if (p.size() != size()) return false;
    for (int i = 0; i < size(); ++i)
      if (!c_[i].contains(p[i])) return false;
    return true;
  }

  bool contains(const Box& o) const {
    if (o.size() != size()) return false;
    for (int i = 0; i < size(); ++i)
      if (!c_[i].contains(o[i])) return false;
    return true;
  }

  bool operator==(const Box& o) const { return c_ == o.c_; }
  bool operator!=(const Box& o) const { return !(*this == o); }

  // children share the splitting face
  std::pair<Box, Box> bisect(int i) const {
    double m = c_[i].mid();
    Box a = *this, b = *this;
    a.c_[i] = Interval(c_[i].lo(), m);
    b.c_[i] = Interval(m, c_[i].hi());
    return {a, b};
  }

  bool splittable(int i) const {
    const Interval& x = c_[i];
    if (x.is_empty()) return false;
    double m = x.mid();
    return x.lo() < m && m < x.hi();
  }

  static Box degenerate(const Vec& p) {
    Box b(static_cast<int>(p.size()));
    for (int i = 0; i < b.size(); ++i) b[i] = Interval(p[i]);
    return b;
  }

  static Box hull(const Box& a, const Box& b) {
    Box h(a.size());
    for (int i = 0; i < a.size(); ++i) h[i] = ivo::hull(a[i], b[i]);
    return h;
  }

  const std::vector<Interval>& components() const { return c_; }

private:
  std::vector<Interval> c_;
};

// squared distance between a point and a box (0 inside)
inline double distance_sq(const Vec& x, const Box& b) {
  double d = 0.0;
  for (int j = 0; j < b.size(); ++j) {
    if (x[j] > b[j].hi()) {
      double t = x[j] - b[j].hi();
      d += t * t;
    } else if (x[j] < b[j].lo()) {
      double t = b[j].lo() - x[j];
      d += t * t;
    }
  }
  return d;
}

std::string to_string(const Box& b);

} // namespace ivo

#endif
