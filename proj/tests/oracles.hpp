// Brute-force reference implementations for the tests. These deliberately
// avoid the library's solver and clique machinery: bases come from scanning
// all n-subsets with direct dot products, colourability from scanning all
// 2^|S| assignments.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "bks/colouring.hpp"
#include "bks/ortho.hpp"
#include "bks/rays.hpp"

namespace oracle {

inline std::vector<bks::Basis> brute_force_bases(const bks::RaySet& s) {
  const int n = s.dimension();
  std::vector<bks::Basis> out;
  std::vector<int> pick;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(pick.size()) == n) {
      out.push_back(bks::Basis{pick});
      return;
    }
    for (int v = next; v < s.size(); ++v) {
      bool ok = true;
      for (int u : pick)
        if (bks::dot(s[u], s[v]) != 0) {
          ok = false;
          break;
        }
      if (!ok) continue;
      pick.push_back(v);
      self(self, v + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// validity of the assignment encoded in `white` (bit i = ray i gets 1)
inline bool assignment_valid(const bks::RaySet& s, const std::vector<bks::Basis>& bases,
                             std::uint64_t white, bks::ConstraintMode mode) {
  for (const bks::Basis& b : bases) {
    int sum = 0;
    for (int i : b.indices) sum += (white >> i) & 1u;
    if (sum != 1) return false;
  }
  if (mode == bks::ConstraintMode::BasisPlusPairwise)
    for (int i = 0; i < s.size(); ++i)
      for (int j = i + 1; j < s.size(); ++j)
        if (((white >> i) & 1u) && ((white >> j) & 1u) && bks::dot(s[i], s[j]) == 0)
          return false;
  return true;
}

inline bool brute_colourable(const bks::RaySet& s,
                             bks::ConstraintMode mode = bks::ConstraintMode::BasisOnly) {
  std::vector<bks::Basis> bases = brute_force_bases(s);
  const std::uint64_t lim = 1ull << s.size();
  for (std::uint64_t white = 0; white < lim; ++white)
    if (assignment_valid(s, bases, white, mode)) return true;
  return false;
}

inline std::uint64_t brute_count(const bks::RaySet& s,
                                 bks::ConstraintMode mode = bks::ConstraintMode::BasisOnly) {
  std::vector<bks::Basis> bases = brute_force_bases(s);
  const std::uint64_t lim = 1ull << s.size();
  std::uint64_t count = 0;
  for (std::uint64_t white = 0; white < lim; ++white)
    if (assignment_valid(s, bases, white, mode)) ++count;
  return count;
}

// whether some odd-cardinality collection of bases covers every ray an even
// number of times; exhaustive over all 2^|bases| selections
inline bool brute_parity_exists(const bks::RaySet& s, const std::vector<bks::Basis>& bases) {
  std::vector<std::uint64_t> masks;
  for (const bks::Basis& b : bases) {
    std::uint64_t m = 0;
    for (int i : b.indices) m |= 1ull << i;
    masks.push_back(m);
  }
  const std::uint64_t lim = 1ull << masks.size();
  for (std::uint64_t sel = 1; sel < lim; ++sel) {
    if (__builtin_popcountll(sel) % 2 == 0) continue;
    std::uint64_t acc = 0;
    for (std::size_t b = 0; b < masks.size(); ++b)
      if ((sel >> b) & 1u) acc ^= masks[b];
    if (acc == 0) return true;
  }
  return false;
}

// All inclusion-minimal non-colourable subsets of s, for |s| <= ~20.
// Monotone upward propagation answers most subsets; the rest get an
// exhaustive assignment scan restricted to the subset's rays.
inline std::vector<std::vector<int>> brute_minimal_noncolourable(
    const bks::RaySet& s, bks::ConstraintMode mode = bks::ConstraintMode::BasisOnly) {
  const int n = s.size();
  std::vector<bks::Basis> bases = brute_force_bases(s);
  std::vector<std::uint64_t> basis_masks;
  for (const bks::Basis& b : bases) {
    std::uint64_t m = 0;
    for (int i : b.indices) m |= 1ull << i;
    basis_masks.push_back(m);
  }
  std::vector<std::uint64_t> pair_masks;  // orthogonal pairs, pairwise mode
  if (mode == bks::ConstraintMode::BasisPlusPairwise)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (bks::dot(s[i], s[j]) == 0) pair_masks.push_back((1ull << i) | (1ull << j));

  auto subset_colourable = [&](std::uint64_t sub) -> bool {
    std::vector<std::uint64_t> active;
    for (std::uint64_t bm : basis_masks)
      if ((bm & ~sub) == 0) active.push_back(bm);
    std::vector<std::uint64_t> active_pairs;
    for (std::uint64_t pm : pair_masks)
      if ((pm & ~sub) == 0) active_pairs.push_back(pm);
    // rays outside every active constraint can stay black, so scan only the
    // covered ones (all of sub in pairwise mode)
    std::uint64_t covered = 0;
    for (std::uint64_t bm : active) covered |= bm;
    for (std::uint64_t pm : active_pairs) covered |= pm;
    std::uint64_t white = covered;
    for (;;) {
      bool ok = true;
      for (std::uint64_t bm : active)
        if (__builtin_popcountll(bm & white) != 1) {
          ok = false;
          break;
        }
      if (ok)
        for (std::uint64_t pm : active_pairs)
          if ((pm & white) == pm) {
            ok = false;
            break;
          }
      if (ok) return true;
      if (white == 0) return false;
      white = (white - 1) & covered;
    }
  };

  const std::uint64_t lim = 1ull << n;
  std::vector<std::uint8_t> noncol(lim, 0);
  std::vector<std::vector<int>> minimal;
  // order subsets by size so single-deletion results are known
  std::vector<std::vector<std::uint64_t>> by_size(static_cast<std::size_t>(n) + 1);
  for (std::uint64_t sub = 0; sub < lim; ++sub)
    by_size[static_cast<std::size_t>(__builtin_popcountll(sub))].push_back(sub);
  for (int size = 0; size <= n; ++size)
    for (std::uint64_t sub : by_size[static_cast<std::size_t>(size)]) {
      bool inherited = false;
      for (int i = 0; i < n && !inherited; ++i)
        if (((sub >> i) & 1u) && noncol[sub & ~(1ull << i)]) inherited = true;
      if (inherited) {
        noncol[sub] = 1;
        continue;
      }
      if (!subset_colourable(sub)) {
        noncol[sub] = 1;
        std::vector<int> indices;
        for (int i = 0; i < n; ++i)
          if ((sub >> i) & 1u) indices.push_back(i);
        minimal.push_back(std::move(indices));
      }
    }
  std::sort(minimal.begin(), minimal.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return minimal;
}

}  // namespace oracle
