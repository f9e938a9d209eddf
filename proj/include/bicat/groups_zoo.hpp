#pragma once
// Canonical small groups used by tests, fixtures and the exhaustive runs.
// Every construction puts the identity at index 0 and is deterministic, so
// frozen expected values stay meaningful.

#include <vector>

#include "bicat/group.hpp"

namespace bicat {

GroupPtr trivial_group();
GroupPtr cyclic(int n);
GroupPtr klein4();
GroupPtr sym3();
GroupPtr dihedral4();   // symmetries of the square, order 8
GroupPtr quaternion8();

// Permutations of 0..n_points-1 generated by `gens`, elements sorted
// lexicographically by one-line notation (identity first).
GroupPtr perm_group(int n_points, const std::vector<std::vector<elem>>& gens,
                    std::string name);

// All isomorphism types of a given order, 1 <= n <= 8, in a fixed order.
std::vector<GroupPtr> groups_of_order(int n);

}  // namespace bicat
