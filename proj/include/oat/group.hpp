#pragma once

#include <vector>

namespace oat {

using Perm = std::vector<int>;

// A finite group given by its Cayley table.  Elements are dense indices
// 0..order-1; table[s][t] = s*t.
class FiniteGroup {
 public:
  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int s, int t) const { return table_[s][t]; }
  int inv(int t) const { return inverse_[t]; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  // Validates the table and computes identity and inverses.
  // Throws NotAGroup on any axiom failure.
  static FiniteGroup load(const std::vector<std::vector<int>>& table);

  static FiniteGroup cyclic(int n);
  static FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
  static FiniteGroup symmetric3();

  // Order of an element (smallest k >= 1 with t^k = e).
  int element_order(int t) const;

 private:
  int order_ = 0;
  int identity_ = 0;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
};

// All bijections f with f(s*t) = f(s)*f(t), sorted lexicographically.
std::vector<Perm> automorphisms(const FiniteGroup& g);

bool is_automorphism(const FiniteGroup& g, const Perm& f);

}  // namespace oat
