#pragma once

#include <span>
#include <string>
#include <vector>

#include "bks/rays.hpp"

namespace bks {

// Where a lifted ray came from. BStar/CStar are the seed rays padded with
// zeros on the right/left; BBar/CBar are the adjoined standard basis rays
// e_{d+1}..e_n and e_1..e_m.
enum class Origin { BStar, BBar, CStar, CBar };

std::string origin_label(Origin o);

// Result of lifting a dimension-d set to dimension n, d < n <= 2d.
// d_set = b_set ∪ c_set with projective duplicates collapsed; origins[i]
// lists every source of d_set[i], so overlap arithmetic stays visible.
struct LiftResult {
  RaySet b_set;
  RaySet c_set;
  RaySet d_set;
  std::vector<std::vector<Origin>> origins;
};

RaySet pad_right(const RaySet& a, int zeros);
RaySet pad_left(const RaySet& a, int zeros);

LiftResult lift(const RaySet& a, int target_dim);

// Direct-sum composition: A-rays padded right with dim(B) zeros, B-rays
// padded left with dim(A) zeros. Sizes always add, the blocks cannot collide.
RaySet compose_zp(const RaySet& a, const RaySet& b);

struct LiftStep {
  int target_dim;
  int size;
};
struct IterateResult {
  RaySet final_set;
  std::vector<LiftStep> steps;
};

IterateResult iterate_lift(const RaySet& a, std::span<const int> plan);

}  // namespace bks
