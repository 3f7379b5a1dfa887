#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bks/ortho.hpp"
#include "bks/rays.hpp"

namespace bks {

// BasisOnly enforces exactly the basis rule: every complete basis carries
// exactly one value 1. BasisPlusPairwise additionally forbids two orthogonal
// rays from both carrying 1.
enum class ConstraintMode { BasisOnly, BasisPlusPairwise };

std::string to_string(ConstraintMode mode);
ConstraintMode mode_from_string(std::string_view text);

// Total 0/1 assignment over a ray set, indexed like the set.
struct Colouring {
  std::vector<std::uint8_t> bits;
};

struct SolveStats {
  std::uint64_t decisions = 0;
  std::uint64_t propagations = 0;
};

struct SolveResult {
  bool colourable = false;
  Colouring witness;  // meaningful iff colourable
  SolveStats stats;
};

// Exhaustive backtracking solver over a fixed ray set. Bases are enumerated
// once at construction; sub-instances induced by a subset of the rays reuse
// them (a deletion never creates a basis). Deterministic: variables are
// ordered by descending basis membership with index ties, value 0 is tried
// first, and unit propagation forces a lone unassigned ray of a zero-sum
// basis to 1 and the rest of a one-sum basis to 0.
class SubsetSolver {
 public:
  SubsetSolver(const RaySet& s, ConstraintMode mode);
  SubsetSolver(const RaySet& s, std::vector<Basis> bases, ConstraintMode mode);

  const RaySet& set() const { return *set_; }
  ConstraintMode mode() const { return mode_; }
  const std::vector<Basis>& bases() const { return bases_; }

  SolveResult solve_all();
  // active[i] nonzero keeps ray i; bases not fully active are dropped
  SolveResult solve_subset(std::span<const std::uint8_t> active);

  std::uint64_t count_all();
  std::uint64_t count_subset(std::span<const std::uint8_t> active);

  std::uint64_t total_decisions() const { return total_decisions_; }

 private:
  struct BasisState {
    std::int32_t ones;
    std::int32_t unassigned;
  };

  void prepare(std::span<const std::uint8_t> active);
  bool assign(int ray, int value);
  void undo_to(std::size_t mark);
  bool decide(std::size_t pos);
  void count_from(std::size_t pos, std::uint64_t& leaves);

  const RaySet* set_;
  ConstraintMode mode_;
  int n_;
  std::vector<Basis> bases_;
  std::vector<std::vector<std::int32_t>> ray_bases_;
  std::vector<std::vector<std::int32_t>> neighbours_;

  std::vector<char> ray_active_;
  std::vector<char> basis_active_;
  std::vector<BasisState> bstate_;
  std::vector<std::int8_t> value_;
  std::vector<std::int32_t> trail_;
  std::vector<std::int32_t> order_;
  int free_rays_ = 0;
  std::vector<std::pair<std::int32_t, std::int8_t>> queue_;
  SolveStats stats_;
  std::uint64_t total_decisions_ = 0;
};

SolveResult solve(const RaySet& s, ConstraintMode mode = ConstraintMode::BasisOnly);

// Checks a total colouring directly against rules (a)/(b), without going
// through the solver: every complete basis must sum to exactly 1, and in
// BasisPlusPairwise mode no orthogonal pair may be 1,1.
bool validate(const RaySet& s, const Colouring& c,
              ConstraintMode mode = ConstraintMode::BasisOnly);

// An odd number of bases in which every ray appears an even number of times.
// Existence proves non-colourability: the basis sums would add up to an odd
// total, but every ray contributes an even number of times.
struct ParityCertificate {
  std::vector<int> bases;
};

std::optional<ParityCertificate> parity_certificate(const RaySet& s);
std::optional<ParityCertificate> parity_certificate(const RaySet& s,
                                                    const std::vector<Basis>& bases);
bool check_parity_certificate(const RaySet& s, const std::vector<Basis>& bases,
                              const ParityCertificate& cert);

// Exact number of valid total colourings. Guarded by a ray-count bound so a
// huge unconstrained set cannot silently explode; raise max_rays to override.
std::uint64_t count_colourings(const RaySet& s,
                               ConstraintMode mode = ConstraintMode::BasisOnly,
                               int max_rays = 30);

}  // namespace bks
