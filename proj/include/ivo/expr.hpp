#ifndef IVO_EXPR_HPP
#define IVO_EXPR_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace ivo {

enum class NodeOp : uint8_t {
  Const,
  Var,
  Add,
  Sub,
  Mul,
  Div,
  Neg,
  Sqr,
  Sqrt,
  Exp,
  Log,
  Sin,
  Cos,
  Abs,
  Pow // integer exponent in ExprNode::k
};

inline bool is_binary(NodeOp op) {
  return op == NodeOp::Add || op == NodeOp::Sub || op == NodeOp::Mul || op == NodeOp::Div;
}
inline bool is_unary(NodeOp op) {
  return !is_binary(op) && op != NodeOp::Const && op != NodeOp::Var;
}

struct ExprNode {
  NodeOp op;
  int32_t a = -1; // first operand, or variable index for Var
  int32_t b = -1; // second operand
  double value = 0.0; // Const payload
  int32_t k = 0;      // Pow exponent
};

// Append-only DAG with structural sharing: identical subterms get one node.
class ExprDag {
public:
  int add_const(double v);
  int add_var(int index);
  int add_unary(NodeOp op, int a, int k = 0);
  int add_binary(NodeOp op, int a, int b);

  const ExprNode& node(int i) const { return nodes_[i]; }
  int size() const { return static_cast<int>(nodes_.size()); }

private:
  std::vector<ExprNode> nodes_;
  std::unordered_map<uint64_t, std::vector<int>> buckets_;
  int intern(const ExprNode& n);
};

// Building handle: value semantics, operator overloading appends to the dag.
class Expr {
public:
  Expr() = default;
  Expr(std::shared_ptr<ExprDag> dag, int id) : dag_(std::move(dag)), id_(id) {}

  const std::shared_ptr<ExprDag>& dag() const { return dag_; }
  int id() const { return id_; }
  bool valid() const { return dag_ != nullptr; }

private:
  std::shared_ptr<ExprDag> dag_;
  int id_ = -1;
};

class ExprBuilder {
public:
  explicit ExprBuilder(int arity) : dag_(std::make_shared<ExprDag>()), arity_(arity) {}
  Expr var(int i) const;
  std::vector<Expr> vars() const;
  Expr constant(double v) const;
  int arity() const { return arity_; }
  const std::shared_ptr<ExprDag>& dag() const { return dag_; }

private:
  std::shared_ptr<ExprDag> dag_;
  int arity_;
};

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr operator+(const Expr& a, double c);
Expr operator+(double c, const Expr& a);
Expr operator-(const Expr& a, double c);
Expr operator-(double c, const Expr& a);
Expr operator*(const Expr& a, double c);
Expr operator*(double c, const Expr& a);
Expr operator/(const Expr& a, double c);
Expr operator/(double c, const Expr& a);
Expr sqr(const Expr& a);
Expr sqrt(const Expr& a);
Expr exp(const Expr& a);
Expr log(const Expr& a);
Expr sin(const Expr& a);
Expr cos(const Expr& a);
Expr abs(const Expr& a);
Expr pow(const Expr& a, int k);

// Finalized factorable function: immutable, shareable between threads.
// Caches the evaluation schedule (reachable nodes in topological order),
// the variables present, and saturated per-variable occurrence counts.
class Expression {
public:
  Expression() = default;
  Expression(const Expr& root, int arity);

  int arity() const { return arity_; }
  int root() const { return root_; }
  const ExprDag& dag() const { return *dag_; }
  bool valid() const { return dag_ != nullptr; }

  // node ids in evaluation order (children first); last entry is the root
  const std::vector<int>& schedule() const { return schedule_; }
  // position of each scheduled node in dense tape storage, -1 if unscheduled
  const std::vector<int>& slot() const { return slot_; }
  int tape_size() const { return static_cast<int>(schedule_.size()); }

  const std::vector<int>& variables() const { return vars_; } // sorted indices
  // syntactic occurrence count per variable index (saturated at 1000)
  int occurrences(int var) const;
  bool uses(int var) const { return occurrences(var) > 0; }

  std::string pretty() const; // parenthesized infix

private:
  std::shared_ptr<const ExprDag> dag_;
  int root_ = -1;
  int arity_ = 0;
  std::vector<int> schedule_;
  std::vector<int> slot_;
  std::vector<int> vars_;
  std::vector<int> occ_;
};

} // namespace ivo

#endif
