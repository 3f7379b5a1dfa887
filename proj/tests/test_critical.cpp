#include "doctest.h"

#include <random>

#include "bks/catalog.hpp"
#include "bks/colouring.hpp"
#include "bks/construct.hpp"
#include "bks/critical.hpp"
#include "bks/rays.hpp"
#include "oracles.hpp"

using namespace bks;

namespace {

RaySet standard_basis(int n) {
  RaySet s(n);
  for (int i = 0; i < n; ++i) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(n), 0);
    v[static_cast<std::size_t>(i)] = 1;
    s.insert(std::move(v));
  }
  return s;
}

// full recheck of a reported minimal subset, straight from solve()
void check_reported_minimal(const RaySet& s, const MinimalSubset& ms) {
  RaySet sub = s.subset(ms.indices);
  CHECK_FALSE(solve(sub).colourable);
  for (std::size_t skip = 0; skip < ms.indices.size(); ++skip) {
    std::vector<int> fewer;
    for (std::size_t i = 0; i < ms.indices.size(); ++i)
      if (i != skip) fewer.push_back(ms.indices[i]);
    CHECK(solve(s.subset(fewer)).colourable);
  }
}

}  // namespace

TEST_CASE("criticality of the record sets") {
  for (const char* name : {"S4", "S5", "S6"}) {
    CriticalReport r = is_critical(catalog::get(name).set);
    CHECK(r.is_critical);
    CHECK(r.removable.empty());
  }
}

TEST_CASE("lifted sets are proofs but not critical") {
  RaySet d = lift(catalog::get("P24").set, 5).d_set;
  CriticalReport r = is_critical(d);
  CHECK_FALSE(r.is_critical);
  CHECK(!r.removable.empty());
}

TEST_CASE("colourable input is rejected") {
  RaySet s = standard_basis(4);
  CHECK_THROWS_AS(is_critical(s), NotAProofError);
  CHECK_THROWS_AS(enumerate_minimal(s), NotAProofError);
  CHECK_THROWS_AS(minimum_proof_size(s), NotAProofError);
}

TEST_CASE("S4 has exactly one minimal non-colourable subset: itself") {
  const RaySet& s4 = catalog::get("S4").set;
  CriticalReport r = enumerate_minimal(s4);
  CHECK(r.exhaustive);
  REQUIRE(r.minimal_subsets.size() == 1);
  CHECK(static_cast<int>(r.minimal_subsets[0].indices.size()) == 18);
  CHECK(r.min_size == 18);
  CHECK(r.count_at_min == 1);
  CHECK(minimum_proof_size(s4) == 18);
}

TEST_CASE("enumeration agrees with the subset-lattice oracle") {
  // S4 plus an extra ray that forms new tetrads
  RaySet s = catalog::get("S4").set;
  s.insert({1, 1, 1, 1});
  REQUIRE(s.size() == 19);

  auto expected = oracle::brute_minimal_noncolourable(s);
  CriticalReport got = enumerate_minimal(s);
  CHECK(got.exhaustive);
  REQUIRE(got.minimal_subsets.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i)
    CHECK(got.minimal_subsets[i].indices == expected[i]);

  std::size_t smallest = expected.front().size();
  CHECK(minimum_proof_size(s) == static_cast<int>(smallest));
  for (const MinimalSubset& ms : got.minimal_subsets) check_reported_minimal(s, ms);
}

TEST_CASE("minimal subsets of the 31-ray lift pass independent rechecks") {
  RaySet d = lift(catalog::get("S4").set, 5).d_set;
  CriticalReport r = enumerate_minimal(d);
  CHECK(r.exhaustive);
  REQUIRE(!r.minimal_subsets.empty());
  CHECK(r.min_size == 29);
  CHECK(minimum_proof_size(d) == 29);

  // catalog S5 must be among the minimum-size subsets
  const RaySet& s5 = catalog::get("S5").set;
  bool found_s5 = false;
  for (const MinimalSubset& ms : r.minimal_subsets) {
    if (static_cast<int>(ms.indices.size()) != 29) continue;
    if (d.subset(ms.indices).same_rays(s5)) found_s5 = true;
  }
  CHECK(found_s5);

  int rechecked = 0;
  for (const MinimalSubset& ms : r.minimal_subsets) {
    check_reported_minimal(d, ms);
    if (++rechecked == 5) break;  // full recheck of all of them runs in acceptance
  }
}

TEST_CASE("max_size filters the enumeration") {
  RaySet d = lift(catalog::get("S4").set, 5).d_set;
  CriticalReport bounded = enumerate_minimal(d, ConstraintMode::BasisOnly, 29);
  CHECK(bounded.exhaustive);
  CHECK(!bounded.minimal_subsets.empty());
  for (const MinimalSubset& ms : bounded.minimal_subsets)
    CHECK(ms.indices.size() == 29);

  CriticalReport full = enumerate_minimal(d);
  CHECK(bounded.count_at_min == full.count_at_min);
  CHECK(bounded.min_size == full.min_size);
}

TEST_CASE("budget exhaustion is flagged, never silent") {
  RaySet d = lift(catalog::get("S4").set, 5).d_set;
  CriticalReport r = enumerate_minimal(d, ConstraintMode::BasisOnly, std::nullopt,
                                       SearchBudget{3});
  CHECK_FALSE(r.exhaustive);
  CHECK_THROWS_AS(minimum_proof_size(d, ConstraintMode::BasisOnly, SearchBudget{3}),
                  BudgetExceededError);
}

TEST_CASE("thread count does not change the result") {
  RaySet d = lift(catalog::get("S4").set, 5).d_set;
  CriticalReport seq = enumerate_minimal(d, ConstraintMode::BasisOnly, std::nullopt,
                                         SearchBudget{}, 1);
  CriticalReport par = enumerate_minimal(d, ConstraintMode::BasisOnly, std::nullopt,
                                         SearchBudget{}, 4);
  CHECK(seq.nodes == par.nodes);
  CHECK(seq.exhaustive == par.exhaustive);
  REQUIRE(seq.minimal_subsets.size() == par.minimal_subsets.size());
  for (std::size_t i = 0; i < seq.minimal_subsets.size(); ++i)
    CHECK(seq.minimal_subsets[i].indices == par.minimal_subsets[i].indices);
}

TEST_CASE("monotonicity: supersets of non-colourable subsets stay non-colourable") {
  const RaySet& s8 = catalog::get("S8").set;
  std::mt19937 rng(99991);
  std::uniform_int_distribution<int> coin(0, 1);
  int hits = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<int> mid, low;
    for (int i = 0; i < s8.size(); ++i)
      if (coin(rng) || coin(rng)) mid.push_back(i);  // ~3/4 of the rays
    for (int i : mid)
      if (coin(rng) || coin(rng)) low.push_back(i);
    RaySet t = s8.subset(low);
    if (!solve(t).colourable) {
      CHECK_FALSE(solve(s8.subset(mid)).colourable);
      ++hits;
    }
  }
  (void)hits;
}
