#include "bicat/groups_zoo.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace bicat {

GroupPtr trivial_group() {
  return FiniteGroup::unchecked({0}, 1, "Z1");
}

GroupPtr cyclic(int n) {
  std::vector<elem> table(static_cast<size_t>(n) * n);
  for (elem a = 0; a < n; ++a) {
    for (elem b = 0; b < n; ++b) table[a * n + b] = (a + b) % n;
  }
  return FiniteGroup::unchecked(std::move(table), n, "Z" + std::to_string(n));
}

GroupPtr perm_group(int n_points, const std::vector<std::vector<elem>>& gens,
                    std::string name) {
  std::vector<elem> identity(n_points);
  for (int i = 0; i < n_points; ++i) identity[i] = i;
  std::set<std::vector<elem>> seen{identity};
  std::vector<std::vector<elem>> frontier{identity};
  while (!frontier.empty()) {
    std::vector<std::vector<elem>> next;
    for (const auto& p : frontier) {
      for (const auto& g : gens) {
        std::vector<elem> q(n_points);
        for (int i = 0; i < n_points; ++i) q[i] = p[g[i]];
        if (seen.insert(q).second) next.push_back(q);
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::vector<elem>> elems(seen.begin(), seen.end());
  const int m = static_cast<int>(elems.size());
  std::vector<elem> table(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      // Composition "apply j first, then i".
      std::vector<elem> comp(n_points);
      for (int x = 0; x < n_points; ++x) comp[x] = elems[i][elems[j][x]];
      auto it = std::lower_bound(elems.begin(), elems.end(), comp);
      table[i * m + j] = static_cast<elem>(it - elems.begin());
    }
  }
  return FiniteGroup::unchecked(std::move(table), m, std::move(name));
}

GroupPtr sym3() {
  return perm_group(3, {{1, 0, 2}, {0, 2, 1}}, "S3");
}

GroupPtr dihedral4() {
  return perm_group(4, {{1, 2, 3, 0}, {1, 0, 3, 2}}, "D4");
}

GroupPtr klein4() {
  std::vector<elem> table = {
      0, 1, 2, 3,
      1, 0, 3, 2,
      2, 3, 0, 1,
      3, 2, 1, 0,
  };
  return FiniteGroup::unchecked(std::move(table), 4, "V4");
}

GroupPtr quaternion8() {
  // Index 2u + s encodes (-1)^s * basis[u] with basis 1, i, j, k.
  auto unit_mul = [](int u, int v, int& sign) {
    static const int prod[4][4] = {
        {0, 1, 2, 3},
        {1, 0, 3, 2},
        {2, 3, 0, 1},
        {3, 2, 1, 0},
    };
    static const int sgn[4][4] = {
        {+1, +1, +1, +1},
        {+1, -1, +1, -1},
        {+1, -1, -1, +1},
        {+1, +1, -1, -1},
    };
    sign = sgn[u][v];
    return prod[u][v];
  };
  std::vector<elem> table(64);
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      int sign;
      int u = unit_mul(a / 2, b / 2, sign);
      int s = (a % 2) ^ (b % 2) ^ (sign < 0 ? 1 : 0);
      table[a * 8 + b] = static_cast<elem>(2 * u + s);
    }
  }
  return FiniteGroup::unchecked(std::move(table), 8, "Q8");
}

namespace {

GroupPtr named_direct(GroupPtr a, GroupPtr b, std::string name) {
  auto prod = direct_product(std::move(a), std::move(b));
  return FiniteGroup::unchecked(prod.group->table(), prod.group->order(),
                                std::move(name));
}

}  // namespace

std::vector<GroupPtr> groups_of_order(int n) {
  switch (n) {
    case 1: return {trivial_group()};
    case 2: return {cyclic(2)};
    case 3: return {cyclic(3)};
    case 4: return {cyclic(4), klein4()};
    case 5: return {cyclic(5)};
    case 6: return {cyclic(6), sym3()};
    case 7: return {cyclic(7)};
    case 8:
      return {cyclic(8), named_direct(cyclic(4), cyclic(2), "Z4xZ2"),
              named_direct(cyclic(2), named_direct(cyclic(2), cyclic(2), "V4"),
                           "Z2^3"),
              dihedral4(), quaternion8()};
    default:
      fail(ErrKind::UsageError,
           "no catalogue of groups of order " + std::to_string(n));
  }
}

}  // namespace bicat
