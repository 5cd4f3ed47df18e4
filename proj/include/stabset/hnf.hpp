#pragma once

#include <vector>

#include "stabset/rational.hpp"

namespace stabset {

// Row-style Hermite normal form over exact integers: U * input = H with U
// unimodular. Pivots are positive, entries above each pivot reduced into
// [0, pivot). Zero rows sink to the bottom.
struct HNFResult {
  std::vector<std::vector<Int>> h;  // same shape as input
  std::vector<std::vector<Int>> u;  // rows x rows, |det| = 1
  int rank = 0;
  // Product of pivots when rank equals the column count (the index of the
  // row lattice in Z^cols); 0 otherwise.
  Int lattice_index = 0;
};

HNFResult hermite_normal_form(const std::vector<std::vector<Int>>& rows);

}  // namespace stabset
