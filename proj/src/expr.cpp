#include "ivo/expr.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdio>
#include <functional>

namespace ivo {

namespace {
uint64_t node_key(const ExprNode& n) {
  uint64_t h = static_cast<uint64_t>(n.op);
  auto mix = [&h](uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  mix(static_cast<uint64_t>(static_cast<int64_t>(n.a)));
  mix(static_cast<uint64_t>(static_cast<int64_t>(n.b)));
  mix(std::bit_cast<uint64_t>(n.value));
  mix(static_cast<uint64_t>(static_cast<int64_t>(n.k)));
  return h;
}
bool same_node(const ExprNode& x, const ExprNode& y) {
  return x.op == y.op && x.a == y.a && x.b == y.b && x.k == y.k &&
         std::bit_cast<uint64_t>(x.value) == std::bit_cast<uint64_t>(y.value);
}
} // namespace

int ExprDag::intern(const ExprNode& n) {
  uint64_t key = node_key(n);
  auto& bucket = buckets_[key];
  for (int id : bucket)
    if (same_node(nodes_[id], n)) return id;
  nodes_.push_back(n);
  int id = static_cast<int>(nodes_.size()) - 1;
  bucket.push_back(id);
  return id;
}

int ExprDag::add_const(double v) { return intern({NodeOp::Const, -1, -1, v, 0}); }
int ExprDag::add_var(int index) { return intern({NodeOp::Var, index, -1, 0.0, 0}); }
int ExprDag::add_unary(NodeOp op, int a, int k) {
  assert(a >= 0 && a < size());
  return intern({op, a, -1, 0.0, k});
}
int ExprDag::add_binary(NodeOp op, int a, int b) {
  assert(a >= 0 && b >= 0 && a < size() && b < size());
  return intern({op, a, b, 0.0, 0});
}

Expr ExprBuilder::var(int i) const {
  assert(i >= 0 && i < arity_);
  return Expr(dag_, dag_->add_var(i));
}
std::vector<Expr> ExprBuilder::vars() const {
  std::vector<Expr> v;
  v.reserve(arity_);
  for (int i = 0; i < arity_; ++i) v.push_back(var(i));
  return v;
}
Expr ExprBuilder::constant(double v) const { return Expr(dag_, dag_->add_const(v)); }

namespace {
Expr bin(NodeOp op, const Expr& a, const Expr& b) {
  assert(a.valid() && b.valid() && a.dag() == b.dag());
  return Expr(a.dag(), a.dag()->add_binary(op, a.id(), b.id()));
}
Expr un(NodeOp op, const Expr& a, int k = 0) {
  assert(a.valid());
  return Expr(a.dag(), a.dag()->add_unary(op, a.id(), k));
}
Expr cst(const Expr& like, double v) {
  assert(like.valid());
  return Expr(like.dag(), like.dag()->add_const(v));
}
} // namespace

Expr operator+(const Expr& a, const Expr& b) { return bin(NodeOp::Add, a, b); }
Expr operator-(const Expr& a, const Expr& b) { return bin(NodeOp::Sub, a, b); }
Expr operator*(const Expr& a, const Expr& b) { return bin(NodeOp::Mul, a, b); }
Expr operator/(const Expr& a, const Expr& b) { return bin(NodeOp::Div, a, b); }
Expr operator-(const Expr& a) { return un(NodeOp::Neg, a); }
Expr operator+(const Expr& a, double c) { return a + cst(a, c); }
Expr operator+(double c, const Expr& a) { return cst(a, c) + a; }
Expr operator-(const Expr& a, double c) { return a - cst(a, c); }
Expr operator-(double c, const Expr& a) { return cst(a, c) - a; }
Expr operator*(const Expr& a, double c) { return a * cst(a, c); }
Expr operator*(double c, const Expr& a) { return cst(a, c) * a; }
Expr operator/(const Expr& a, double c) { return a / cst(a, c); }
Expr operator/(double c, const Expr& a) { return cst(a, c) / a; }
Expr sqr(const Expr& a) { return un(NodeOp::Sqr, a); }
Expr sqrt(const Expr& a) { return un(NodeOp::Sqrt, a); }
Expr exp(const Expr& a) { return un(NodeOp::Exp, a); }
Expr log(const Expr& a) { return un(NodeOp::Log, a); }
Expr sin(const Expr& a) { return un(NodeOp::Sin, a); }
Expr cos(const Expr& a) { return un(NodeOp::Cos, a); }
Expr abs(const Expr& a) { return un(NodeOp::Abs, a); }
Expr pow(const Expr& a, int k) { return un(NodeOp::Pow, a, k); }

Expression::Expression(const Expr& root, int arity)
    : dag_(root.dag()), root_(root.id()), arity_(arity) {
  assert(root.valid());
  const ExprDag& d = *dag_;
  // reachable set; node ids are already topologically ordered (append-only)
  std::vector<char> reach(d.size(), 0);
  std::vector<int> stack{root_};
  reach[root_] = 1;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    const ExprNode& n = d.node(i);
    if (n.op != NodeOp::Const && n.op != NodeOp::Var) {
      if (!reach[n.a]) {
        reach[n.a] = 1;
        stack.push_back(n.a);
      }
      if (n.b >= 0 && !reach[n.b]) {
        reach[n.b] = 1;
        stack.push_back(n.b);
      }
    }
  }
  slot_.assign(d.size(), -1);
  for (int i = 0; i < d.size(); ++i)
    if (reach[i]) {
      slot_[i] = static_cast<int>(schedule_.size());
      schedule_.push_back(i);
    }

  // occurrence counts = number of root-to-leaf paths, saturated
  constexpr int kSat = 1000;
  std::vector<int> paths(d.size(), 0);
  paths[root_] = 1;
  occ_.assign(arity_, 0);
  for (auto it = schedule_.rbegin(); it != schedule_.rend(); ++it) {
    int i = *it;
    int p = paths[i];
    if (p == 0) continue;
    const ExprNode& n = d.node(i);
    if (n.op == NodeOp::Var) {
      occ_[n.a] = std::min(kSat, occ_[n.a] + p);
    } else if (n.op != NodeOp::Const) {
      paths[n.a] = std::min(kSat, paths[n.a] + p);
      if (n.b >= 0) paths[n.b] = std::min(kSat, paths[n.b] + p);
    }
  }
  for (int v = 0; v < arity_; ++v)
    if (occ_[v] > 0) vars_.push_back(v);
}

int Expression::occurrences(int var) const {
  if (var < 0 || var >= static_cast<int>(occ_.size())) return 0;
  return occ_[var];
}

namespace {
void pretty_rec(const ExprDag& d, int i, std::string& out) {
  const ExprNode& n = d.node(i);
  char buf[40];
  switch (n.op) {
  case NodeOp::Const:
    std::snprintf(buf, sizeof buf, "%.17g", n.value);
    out += buf;
    return;
  case NodeOp::Var:
    out += "x" + std::to_string(n.a + 1);
    return;
  case NodeOp::Add:
  case NodeOp::Sub:
  case NodeOp::Mul:
  case NodeOp::Div: {
    const char* sym = n.op == NodeOp::Add ? " + "
                      : n.op == NodeOp::Sub ? " - "
                      : n.op == NodeOp::Mul ? " * "
                                            : " / ";
    out += '(';
    pretty_rec(d, n.a, out);
    out += sym;
    pretty_rec(d, n.b, out);
    out += ')';
    return;
  }
  case NodeOp::Neg:
    out += "(-";
    pretty_rec(d, n.a, out);
    out += ')';
    return;
  case NodeOp::Pow:
    out += '(';
    pretty_rec(d, n.a, out);
    out += '^' + std::to_string(n.k) + ')';
    return;
  default: {
    const char* fn = n.op == NodeOp::Sqr    ? "sqr"
                     : n.op == NodeOp::Sqrt ? "sqrt"
                     : n.op == NodeOp::Exp  ? "exp"
                     : n.op == NodeOp::Log  ? "log"
                     : n.op == NodeOp::Sin  ? "sin"
                     : n.op == NodeOp::Cos  ? "cos"
                                            : "abs";
    out += fn;
    out += '(';
    pretty_rec(d, n.a, out);
    out += ')';
    return;
  }
  }
}
} // namespace

std::string Expression::pretty() const {
  if (!valid()) return "<invalid>";
  std::string s;
  pretty_rec(*dag_, root_, s);
  return s;
}

} // namespace ivo
