#pragma once

#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "evokit/genotype.hpp"
#include "evokit/problem.hpp"
#include "evokit/rng.hpp"

namespace evokit::gp {

// Immutable expression tree. Terminals are constants or variables;
// functions are the binary operators + - * /.
struct Node {
  enum class Kind { constant, variable, op };

  Kind kind = Kind::constant;
  double value = 0.0;  // constant
  int var = 0;         // variable index
  char symbol = 0;     // operator
  std::vector<TreePtr> children;
  int size = 1;   // node count
  int depth = 1;  // levels, leaf = 1
};

TreePtr make_constant(double value);
TreePtr make_variable(int index);
TreePtr make_op(char symbol, TreePtr lhs, TreePtr rhs);

struct GpConfig {
  int num_variables = 1;
  std::vector<double> constant_pool = {1, 3, 5};
  std::string functions = "+-*/";
  int max_size = 50;
  int max_depth = 8;
  double p_c = 0.9;
  double p_m = 0.1;

  void validate() const;
  int terminal_choices() const {
    return num_variables + static_cast<int>(constant_pool.size());
  }
};

// Arithmetic evaluation; division by zero yields 1 (protected division).
// Throws std::out_of_range for a variable without a binding.
double eval_tree(const TreePtr& t, std::span<const double> env);

bool within_caps(const TreePtr& t, const GpConfig& cfg);
bool arity_ok(const TreePtr& t);

// Grow-style random tree within the given caps; terminals are forced at
// the depth limit and when the size budget is exhausted.
TreePtr random_tree_budget(const GpConfig& cfg, int max_depth, int max_size,
                           Rng& rng);
TreePtr random_tree(const GpConfig& cfg, Rng& rng);

// Swap uniformly chosen subtrees; a child that would exceed the caps is
// replaced by a copy of its parent.
std::pair<TreePtr, TreePtr> subtree_cross(const TreePtr& a, const TreePtr& b,
                                          const GpConfig& cfg, Rng& rng);

// Replace one uniformly chosen node by a fresh random subtree that keeps
// the whole tree within the caps.
TreePtr subtree_mutate(const TreePtr& t, const GpConfig& cfg, Rng& rng);

// Alternative mutation mode: redraw the value of one uniformly chosen
// terminal from its own class (constant pool or variable set).
TreePtr terminal_mutate(const TreePtr& t, const GpConfig& cfg, Rng& rng);

// Parenthesized prefix text, e.g. "(- (/ (* x 3) 5) 1)"; round-trips.
std::string to_text(const TreePtr& t);
TreePtr parse(const std::string& text);

bool equal(const TreePtr& a, const TreePtr& b);

// Phi = 1 / (1 + sum of squared errors) over the sample points; exactly 1
// when the tree matches the target everywhere.
Problem make_symbolic_regression(
    std::shared_ptr<const GpConfig> cfg,
    std::vector<std::pair<std::vector<double>, double>> samples);

}  // namespace evokit::gp
