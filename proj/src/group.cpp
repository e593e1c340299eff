#include "oat/group.hpp"

#include <algorithm>
#include <array>

#include "oat/errors.hpp"

namespace oat {

FiniteGroup FiniteGroup::load(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw NotAGroup("empty Cayley table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw NotAGroup("Cayley table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw NotAGroup("entry out of range");
  }
  // Rows and columns must be permutations.
  for (int i = 0; i < n; ++i) {
    std::vector<bool> row_seen(n, false), col_seen(n, false);
    for (int j = 0; j < n; ++j) {
      if (row_seen[table[i][j]]) throw NotAGroup("row is not a permutation");
      row_seen[table[i][j]] = true;
      if (col_seen[table[j][i]]) throw NotAGroup("column is not a permutation");
      col_seen[table[j][i]] = true;
    }
  }
  // Identity.
  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int t = 0; t < n && ok; ++t)
      ok = table[e][t] == t && table[t][e] == t;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw NotAGroup("no identity element");
  // Inverses.
  std::vector<int> inverse(n, -1);
  for (int t = 0; t < n; ++t) {
    for (int s = 0; s < n; ++s)
      if (table[t][s] == identity && table[s][t] == identity) {
        inverse[t] = s;
        break;
      }
    if (inverse[t] < 0) throw NotAGroup("element without inverse");
  }
  // Associativity.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw NotAGroup("associativity failure");

  FiniteGroup g;
  g.order_ = n;
  g.identity_ = identity;
  g.table_ = table;
  g.inverse_ = std::move(inverse);
  return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return load(t);
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& g,
                                        const FiniteGroup& h) {
  const int n = g.order() * h.order();
  auto idx = [&](int a, int b) { return a * h.order() + b; };
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < h.order(); ++b)
      for (int c = 0; c < g.order(); ++c)
        for (int d = 0; d < h.order(); ++d)
          t[idx(a, b)][idx(c, d)] = idx(g.mul(a, c), h.mul(b, d));
  return load(t);
}

FiniteGroup FiniteGroup::symmetric3() {
  // Permutations of {0,1,2} in lexicographic order; composition p*q = p(q(.)).
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p = {0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int n = 6;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::array<int, 3> c;
      for (int k = 0; k < 3; ++k) c[k] = perms[i][perms[j][k]];
      t[i][j] = static_cast<int>(std::find(perms.begin(), perms.end(), c) -
                                 perms.begin());
    }
  return load(t);
}

int FiniteGroup::element_order(int t) const {
  int k = 1;
  int x = t;
  while (x != identity_) {
    x = mul(x, t);
    ++k;
  }
  return k;
}

bool is_automorphism(const FiniteGroup& g, const Perm& f) {
  const int n = g.order();
  if (static_cast<int>(f.size()) != n) return false;
  if (f[g.identity()] != g.identity()) return false;
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (f[g.mul(s, t)] != g.mul(f[s], f[t])) return false;
  return true;
}

namespace {

// Backtracking over images, pruning on element orders.
void search(const FiniteGroup& g, const std::vector<int>& orders, Perm& f,
            std::vector<bool>& used, int pos, std::vector<Perm>& out) {
  const int n = g.order();
  if (pos == n) {
    if (is_automorphism(g, f)) out.push_back(f);
    return;
  }
  if (pos == g.identity()) {
    f[pos] = pos;
    search(g, orders, f, used, pos + 1, out);
    return;
  }
  for (int img = 0; img < n; ++img) {
    if (used[img] || img == g.identity() || orders[img] != orders[pos])
      continue;
    // Partial homomorphism check against already-assigned images.
    bool ok = true;
    for (int s = 0; s < pos && ok; ++s) {
      if (s == g.identity()) continue;
      int st = g.mul(s, pos), ts = g.mul(pos, s);
      if (st < pos && st != g.identity() && f[st] != g.mul(f[s], img)) ok = false;
      if (ts < pos && ts != g.identity() && f[ts] != g.mul(img, f[s])) ok = false;
    }
    if (!ok) continue;
    used[img] = true;
    f[pos] = img;
    search(g, orders, f, used, pos + 1, out);
    used[img] = false;
  }
}

}  // namespace

std::vector<Perm> automorphisms(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<int> orders(n);
  for (int t = 0; t < n; ++t) orders[t] = g.element_order(t);
  Perm f(n, -1);
  std::vector<bool> used(n, false);
  std::vector<Perm> out;
  search(g, orders, f, used, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oat
