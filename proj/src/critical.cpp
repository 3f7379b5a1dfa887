#include "bks/critical.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>
#include <unordered_map>

namespace bks {

namespace {

// subset mask over at most 128 rays
struct Bits128 {
  std::uint64_t w0 = 0, w1 = 0;

  static Bits128 full(int n) {
    Bits128 m;
    if (n >= 64) {
      m.w0 = ~0ull;
      m.w1 = (n == 128) ? ~0ull : ((1ull << (n - 64)) - 1);
    } else {
      m.w0 = (n == 64) ? ~0ull : ((1ull << n) - 1);
    }
    return m;
  }
  bool test(int i) const { return ((i < 64 ? w0 >> i : w1 >> (i - 64)) & 1u) != 0; }
  Bits128 with(int i) const {
    Bits128 m = *this;
    if (i < 64)
      m.w0 |= 1ull << i;
    else
      m.w1 |= 1ull << (i - 64);
    return m;
  }
  int and_count(const Bits128& other) const {
    return std::popcount(w0 & other.w0) + std::popcount(w1 & other.w1);
  }
  Bits128 without(int i) const {
    Bits128 m = *this;
    if (i < 64)
      m.w0 &= ~(1ull << i);
    else
      m.w1 &= ~(1ull << (i - 64));
    return m;
  }
  bool subset_of(const Bits128& other) const {
    return (w0 & ~other.w0) == 0 && (w1 & ~other.w1) == 0;
  }
  bool operator==(const Bits128& other) const { return w0 == other.w0 && w1 == other.w1; }
  int count() const { return std::popcount(w0) + std::popcount(w1); }
};

struct Bits128Hash {
  std::size_t operator()(const Bits128& m) const noexcept {
    std::uint64_t h = m.w0 * 0x9e3779b97f4a7c15ull;
    h ^= (m.w1 + 0x9e3779b97f4a7c15ull) + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

constexpr std::size_t kMemoCap = 1u << 22;  // entries before the cache resets

// Deletion search over subsets of one fixed ray set. The solver is built
// once; a subset's bases are the precomputed bases that survive the deletion.
// Verdicts are cached three ways, all exact: a mask memo, the minimal
// non-colourable sets found so far (supersets are non-colourable), and
// maximal colourable sets grown from solver witnesses (subsets are
// colourable, with the restricted witness).
class DeletionSearch {
 public:
  DeletionSearch(const RaySet& s, const std::vector<Basis>& bases, ConstraintMode mode)
      : solver_(s, bases, mode), n_(s.size()), mode_(mode),
        active_(static_cast<std::size_t>(s.size()), 0) {
    memo_.reserve(1u << 16);
    basis_masks_.reserve(bases.size());
    for (const Basis& b : bases) {
      Bits128 m;
      for (int i : b.indices) m = m.with(i);
      basis_masks_.push_back(m);
    }
    ray_bases_.assign(static_cast<std::size_t>(n_), {});
    for (std::size_t b = 0; b < bases.size(); ++b)
      for (int i : bases[b].indices)
        ray_bases_[static_cast<std::size_t>(i)].push_back(static_cast<int>(b));
  }

  bool colourable(const Bits128& mask) {
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    for (const Bits128& core : cores_)
      if (core.subset_of(mask)) {
        remember(mask, false);
        return false;
      }
    for (const Bits128& sat : colourable_sets_)
      if (mask.subset_of(sat)) {
        remember(mask, true);
        return true;
      }
    for (int i = 0; i < n_; ++i) active_[static_cast<std::size_t>(i)] = mask.test(i) ? 1 : 0;
    SolveResult result = solver_.solve_subset(active_);
    remember(mask, result.colourable);
    if (result.colourable) cache_colourable(mask, result.witness);
    return result.colourable;
  }

  void add_core(const Bits128& core) { cores_.push_back(core); }

 private:
  void remember(const Bits128& mask, bool value) {
    if (memo_.size() >= kMemoCap) memo_.clear();
    memo_.emplace(mask, value);
  }

  // grow the witnessed set: a ray can join as black whenever every basis it
  // completes already carries exactly one white
  void cache_colourable(const Bits128& mask, const Colouring& witness) {
    if (mode_ != ConstraintMode::BasisOnly) {
      push_colourable(mask);
      return;
    }
    Bits128 white;
    for (int i = 0; i < n_; ++i)
      if (witness.bits[static_cast<std::size_t>(i)]) white = white.with(i);
    Bits128 grown = mask;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int x = 0; x < n_; ++x) {
        if (grown.test(x)) continue;
        Bits128 candidate = grown.with(x);
        bool ok = true;
        for (int b : ray_bases_[static_cast<std::size_t>(x)]) {
          const Bits128& bm = basis_masks_[static_cast<std::size_t>(b)];
          if (!bm.subset_of(candidate)) continue;
          if (bm.and_count(white) != 1) {
            ok = false;
            break;
          }
        }
        if (ok) {
          grown = candidate;
          changed = true;
        }
      }
    }
    push_colourable(grown);
  }

  void push_colourable(const Bits128& grown) {
    for (const Bits128& sat : colourable_sets_)
      if (grown.subset_of(sat)) return;
    std::erase_if(colourable_sets_,
                  [&](const Bits128& sat) { return sat.subset_of(grown); });
    if (colourable_sets_.size() >= kSatCap)
      colourable_sets_.erase(colourable_sets_.begin());
    colourable_sets_.push_back(grown);
  }

  static constexpr std::size_t kSatCap = 256;

  SubsetSolver solver_;
  int n_;
  ConstraintMode mode_;
  std::vector<std::uint8_t> active_;
  std::unordered_map<Bits128, bool, Bits128Hash> memo_;
  std::vector<Bits128> cores_;
  std::vector<Bits128> colourable_sets_;
  std::vector<Bits128> basis_masks_;
  std::vector<std::vector<int>> ray_bases_;
};

std::vector<int> mask_indices(const Bits128& mask, int n) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(mask.count()));
  for (int i = 0; i < n; ++i)
    if (mask.test(i)) out.push_back(i);
  return out;
}

struct EnumState {
  DeletionSearch* search = nullptr;
  std::optional<int> max_size;
  std::uint64_t budget = 0;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  std::vector<Bits128> minimal;
};

// One node of the enumeration. `candidates` holds the rays that may still be
// removable (ancestors proved the rest keep a non-colourable core when
// deleted... i.e. their deletion left the set colourable). Branching is
// restricted to indices >= min_next so every subset is visited once.
void enumerate_node(EnumState& st, const Bits128& mask, int size, int min_next,
                    const std::vector<int>& candidates) {
  if (st.exhausted) return;
  if (++st.nodes > st.budget) {
    st.exhausted = true;
    return;
  }

  auto hi_begin = std::lower_bound(candidates.begin(), candidates.end(), min_next);
  const int hi_count = static_cast<int>(candidates.end() - hi_begin);

  // every minimal subset in this subtree keeps all non-candidates and all
  // candidates below min_next, so its size is at least size - hi_count
  if (st.max_size && size - hi_count > *st.max_size) return;

  std::vector<int> removable_hi;
  std::vector<int> child_candidates;
  child_candidates.reserve(candidates.size());
  child_candidates.assign(candidates.begin(), hi_begin);
  for (auto it = hi_begin; it != candidates.end(); ++it) {
    if (!st.search->colourable(mask.without(*it))) {
      removable_hi.push_back(*it);
      child_candidates.push_back(*it);
    }
  }

  if (removable_hi.empty()) {
    // no branch continues; minimal iff the low candidates all fail too
    for (auto it = candidates.begin(); it != hi_begin; ++it)
      if (!st.search->colourable(mask.without(*it))) return;
    st.search->add_core(mask);
    if (!st.max_size || size <= *st.max_size) st.minimal.push_back(mask);
    return;
  }
  if (st.max_size && size - static_cast<int>(removable_hi.size()) > *st.max_size) return;

  for (int r : removable_hi) {
    std::vector<int> next = child_candidates;
    next.erase(std::find(next.begin(), next.end(), r));
    enumerate_node(st, mask.without(r), size - 1, r + 1, next);
    if (st.exhausted) return;
  }
}

struct MinState {
  DeletionSearch* search = nullptr;
  std::uint64_t budget = 0;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  int best = 0;
};

void min_node(MinState& st, const Bits128& mask, int size, int min_next,
              const std::vector<int>& candidates) {
  if (st.exhausted) return;
  if (++st.nodes > st.budget) {
    st.exhausted = true;
    return;
  }

  auto hi_begin = std::lower_bound(candidates.begin(), candidates.end(), min_next);
  const int hi_count = static_cast<int>(candidates.end() - hi_begin);
  if (size - hi_count >= st.best) return;

  std::vector<int> removable_hi;
  std::vector<int> child_candidates;
  child_candidates.assign(candidates.begin(), hi_begin);
  for (auto it = hi_begin; it != candidates.end(); ++it) {
    if (!st.search->colourable(mask.without(*it))) {
      removable_hi.push_back(*it);
      child_candidates.push_back(*it);
    }
  }

  if (removable_hi.empty()) {
    for (auto it = candidates.begin(); it != hi_begin; ++it)
      if (!st.search->colourable(mask.without(*it))) return;
    st.search->add_core(mask);
    st.best = std::min(st.best, size);
    return;
  }
  if (size - static_cast<int>(removable_hi.size()) >= st.best) return;

  for (int r : removable_hi) {
    std::vector<int> next = child_candidates;
    next.erase(std::find(next.begin(), next.end(), r));
    min_node(st, mask.without(r), size - 1, r + 1, next);
    if (st.exhausted) return;
  }
}

}  // namespace

CriticalReport is_critical(const RaySet& s, ConstraintMode mode) {
  if (s.size() > 128) throw Error("critical-subset search supports at most 128 rays");
  std::vector<Basis> bases = enumerate_bases(s);
  DeletionSearch search(s, bases, mode);
  Bits128 all = Bits128::full(s.size());
  if (search.colourable(all))
    throw NotAProofError("input set is colourable, nothing to test");
  CriticalReport report;
  for (int i = 0; i < s.size(); ++i)
    if (!search.colourable(all.without(i))) report.removable.push_back(i);
  report.is_critical = report.removable.empty();
  report.nodes = 1;
  return report;
}

CriticalReport enumerate_minimal(const RaySet& s, ConstraintMode mode,
                                 std::optional<int> max_size, SearchBudget budget,
                                 int threads) {
  if (s.size() > 128) throw Error("critical-subset search supports at most 128 rays");
  std::vector<Basis> bases = enumerate_bases(s);
  DeletionSearch root_search(s, bases, mode);
  Bits128 all = Bits128::full(s.size());
  if (root_search.colourable(all))
    throw NotAProofError("input set is colourable, nothing to minimise");

  CriticalReport report;
  std::vector<int> removable;
  for (int i = 0; i < s.size(); ++i)
    if (!root_search.colourable(all.without(i))) removable.push_back(i);
  report.removable = removable;
  report.is_critical = removable.empty();
  report.nodes = 1;

  std::vector<Bits128> minimal_masks;
  if (removable.empty()) {
    if (!max_size || s.size() <= *max_size) minimal_masks.push_back(all);
  } else {
    // each branch gets an equal share of the remaining budget, so results do
    // not depend on scheduling
    const std::uint64_t remaining = budget.max_nodes > report.nodes
                                        ? budget.max_nodes - report.nodes
                                        : 0;
    const std::uint64_t share =
        std::max<std::uint64_t>(1, remaining / removable.size());
    struct Branch {
      int ray;
      EnumState state;
    };
    std::vector<Branch> branches(removable.size());
    for (std::size_t i = 0; i < removable.size(); ++i) branches[i].ray = removable[i];

    auto run_branch = [&](Branch& br, DeletionSearch& search) {
      br.state.search = &search;
      br.state.max_size = max_size;
      br.state.budget = share;
      std::vector<int> candidates = removable;
      candidates.erase(std::find(candidates.begin(), candidates.end(), br.ray));
      enumerate_node(br.state, all.without(br.ray), s.size() - 1, br.ray + 1, candidates);
    };

    int worker_count = std::max(1, std::min<int>(threads, static_cast<int>(branches.size())));
    if (worker_count == 1) {
      for (Branch& br : branches) run_branch(br, root_search);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      pool.reserve(static_cast<std::size_t>(worker_count));
      for (int w = 0; w < worker_count; ++w)
        pool.emplace_back([&]() {
          DeletionSearch local(s, bases, mode);
          for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= branches.size()) break;
            run_branch(branches[i], local);
          }
        });
      for (auto& t : pool) t.join();
    }

    for (Branch& br : branches) {
      report.nodes += br.state.nodes;
      if (br.state.exhausted) report.exhaustive = false;
      for (const Bits128& m : br.state.minimal) minimal_masks.push_back(m);
    }
  }

  report.minimal_subsets.reserve(minimal_masks.size());
  for (const Bits128& m : minimal_masks)
    report.minimal_subsets.push_back(MinimalSubset{mask_indices(m, s.size())});
  std::sort(report.minimal_subsets.begin(), report.minimal_subsets.end(),
            [](const MinimalSubset& a, const MinimalSubset& b) {
              if (a.indices.size() != b.indices.size())
                return a.indices.size() < b.indices.size();
              return a.indices < b.indices;
            });
  if (!report.minimal_subsets.empty()) {
    report.min_size = static_cast<int>(report.minimal_subsets.front().indices.size());
    for (const MinimalSubset& ms : report.minimal_subsets)
      if (static_cast<int>(ms.indices.size()) == report.min_size) ++report.count_at_min;
  }
  return report;
}

int minimum_proof_size(const RaySet& s, ConstraintMode mode, SearchBudget budget) {
  if (s.size() > 128) throw Error("critical-subset search supports at most 128 rays");
  std::vector<Basis> bases = enumerate_bases(s);
  DeletionSearch search(s, bases, mode);
  Bits128 all = Bits128::full(s.size());
  if (search.colourable(all))
    throw NotAProofError("input set is colourable, it is not a proof");

  std::vector<int> removable;
  for (int i = 0; i < s.size(); ++i)
    if (!search.colourable(all.without(i))) removable.push_back(i);
  if (removable.empty()) return s.size();

  MinState st;
  st.search = &search;
  st.budget = budget.max_nodes;
  st.best = s.size();
  st.nodes = 1;
  for (int r : removable) {
    std::vector<int> candidates = removable;
    candidates.erase(std::find(candidates.begin(), candidates.end(), r));
    min_node(st, all.without(r), s.size() - 1, r + 1, candidates);
    if (st.exhausted)
      throw BudgetExceededError("node budget exceeded before the minimum was certified");
  }
  return st.best;
}

}  // namespace bks
