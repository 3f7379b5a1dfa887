#include "bks/colouring.hpp"

#include <algorithm>
#include <bit>

namespace bks {

std::string to_string(ConstraintMode mode) {
  return mode == ConstraintMode::BasisOnly ? "basis" : "basis+pairwise";
}

ConstraintMode mode_from_string(std::string_view text) {
  if (text == "basis") return ConstraintMode::BasisOnly;
  if (text == "basis+pairwise" || text == "pairwise") return ConstraintMode::BasisPlusPairwise;
  throw Error("unknown constraint mode '" + std::string(text) + "'");
}

SubsetSolver::SubsetSolver(const RaySet& s, ConstraintMode mode)
    : SubsetSolver(s, enumerate_bases(s), mode) {}

SubsetSolver::SubsetSolver(const RaySet& s, std::vector<Basis> bases, ConstraintMode mode)
    : set_(&s), mode_(mode), n_(s.size()), bases_(std::move(bases)) {
  ray_bases_.assign(static_cast<std::size_t>(n_), {});
  for (std::size_t b = 0; b < bases_.size(); ++b)
    for (int i : bases_[b].indices)
      ray_bases_[static_cast<std::size_t>(i)].push_back(static_cast<std::int32_t>(b));
  if (mode_ == ConstraintMode::BasisPlusPairwise) {
    neighbours_.assign(static_cast<std::size_t>(n_), {});
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (dot(s[i], s[j]) == 0) {
          neighbours_[static_cast<std::size_t>(i)].push_back(j);
          neighbours_[static_cast<std::size_t>(j)].push_back(i);
        }
  }
  ray_active_.assign(static_cast<std::size_t>(n_), 1);
  basis_active_.assign(bases_.size(), 1);
  bstate_.resize(bases_.size());
  value_.assign(static_cast<std::size_t>(n_), -1);
}

void SubsetSolver::prepare(std::span<const std::uint8_t> active) {
  for (int i = 0; i < n_; ++i) ray_active_[static_cast<std::size_t>(i)] = active[static_cast<std::size_t>(i)] ? 1 : 0;
  for (std::size_t b = 0; b < bases_.size(); ++b) {
    bool all = true;
    for (int i : bases_[b].indices)
      if (!ray_active_[static_cast<std::size_t>(i)]) {
        all = false;
        break;
      }
    basis_active_[b] = all ? 1 : 0;
    if (all)
      bstate_[b] = BasisState{0, static_cast<std::int32_t>(bases_[b].indices.size())};
  }
  std::fill(value_.begin(), value_.end(), -1);
  trail_.clear();
  stats_ = SolveStats{};

  // decision order: constrained rays by descending basis membership, index ties
  order_.clear();
  free_rays_ = 0;
  std::vector<std::int32_t> weight(static_cast<std::size_t>(n_), 0);
  for (int i = 0; i < n_; ++i) {
    if (!ray_active_[static_cast<std::size_t>(i)]) continue;
    std::int32_t w = 0;
    for (std::int32_t b : ray_bases_[static_cast<std::size_t>(i)])
      if (basis_active_[static_cast<std::size_t>(b)]) ++w;
    weight[static_cast<std::size_t>(i)] = w;
    bool constrained = w > 0;
    if (mode_ == ConstraintMode::BasisPlusPairwise && !constrained)
      for (std::int32_t j : neighbours_[static_cast<std::size_t>(i)])
        if (ray_active_[static_cast<std::size_t>(j)]) {
          constrained = true;
          break;
        }
    if (constrained)
      order_.push_back(i);
    else
      ++free_rays_;
  }
  std::stable_sort(order_.begin(), order_.end(), [&](std::int32_t a, std::int32_t b) {
    return weight[static_cast<std::size_t>(a)] > weight[static_cast<std::size_t>(b)];
  });
}

bool SubsetSolver::assign(int ray, int value) {
  queue_.clear();
  queue_.emplace_back(ray, static_cast<std::int8_t>(value));
  std::size_t head = 0;
  bool ok = true;
  while (ok && head < queue_.size()) {
    auto [x, v] = queue_[head++];
    if (value_[static_cast<std::size_t>(x)] != -1) {
      if (value_[static_cast<std::size_t>(x)] != v) ok = false;
      continue;
    }
    value_[static_cast<std::size_t>(x)] = v;
    trail_.push_back(x);
    ++stats_.propagations;
    // update every basis of x even after a conflict, so undo stays symmetric
    for (std::int32_t b : ray_bases_[static_cast<std::size_t>(x)]) {
      if (!basis_active_[static_cast<std::size_t>(b)]) continue;
      BasisState& st = bstate_[static_cast<std::size_t>(b)];
      --st.unassigned;
      st.ones += v;
      if (st.ones > 1 || (st.unassigned == 0 && st.ones == 0)) {
        ok = false;
        continue;
      }
      if (!ok) continue;
      if (v == 1) {
        for (int y : bases_[static_cast<std::size_t>(b)].indices)
          if (value_[static_cast<std::size_t>(y)] == -1) queue_.emplace_back(y, 0);
      } else if (st.ones == 0 && st.unassigned == 1) {
        for (int y : bases_[static_cast<std::size_t>(b)].indices)
          if (value_[static_cast<std::size_t>(y)] == -1) {
            queue_.emplace_back(y, 1);
            break;
          }
      }
    }
    if (ok && mode_ == ConstraintMode::BasisPlusPairwise && v == 1)
      for (std::int32_t y : neighbours_[static_cast<std::size_t>(x)]) {
        if (!ray_active_[static_cast<std::size_t>(y)]) continue;
        if (value_[static_cast<std::size_t>(y)] == 1) {
          ok = false;
          break;
        }
        if (value_[static_cast<std::size_t>(y)] == -1) queue_.emplace_back(y, 0);
      }
  }
  return ok;
}

void SubsetSolver::undo_to(std::size_t mark) {
  while (trail_.size() > mark) {
    int x = trail_.back();
    trail_.pop_back();
    int v = value_[static_cast<std::size_t>(x)];
    value_[static_cast<std::size_t>(x)] = -1;
    for (std::int32_t b : ray_bases_[static_cast<std::size_t>(x)])
      if (basis_active_[static_cast<std::size_t>(b)]) {
        BasisState& st = bstate_[static_cast<std::size_t>(b)];
        ++st.unassigned;
        st.ones -= v;
      }
  }
}

bool SubsetSolver::decide(std::size_t pos) {
  while (pos < order_.size() && value_[static_cast<std::size_t>(order_[pos])] != -1) ++pos;
  if (pos == order_.size()) return true;
  int ray = order_[pos];
  for (int v = 0; v <= 1; ++v) {
    ++stats_.decisions;
    std::size_t mark = trail_.size();
    if (assign(ray, v) && decide(pos + 1)) return true;
    undo_to(mark);
  }
  return false;
}

void SubsetSolver::count_from(std::size_t pos, std::uint64_t& leaves) {
  while (pos < order_.size() && value_[static_cast<std::size_t>(order_[pos])] != -1) ++pos;
  if (pos == order_.size()) {
    ++leaves;
    return;
  }
  int ray = order_[pos];
  for (int v = 0; v <= 1; ++v) {
    ++stats_.decisions;
    std::size_t mark = trail_.size();
    if (assign(ray, v)) count_from(pos + 1, leaves);
    undo_to(mark);
  }
}

SolveResult SubsetSolver::solve_subset(std::span<const std::uint8_t> active) {
  prepare(active);
  SolveResult res;
  res.colourable = decide(0);
  if (res.colourable) {
    res.witness.bits.assign(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i)
      if (value_[static_cast<std::size_t>(i)] == 1) res.witness.bits[static_cast<std::size_t>(i)] = 1;
  }
  undo_to(0);
  res.stats = stats_;
  total_decisions_ += stats_.decisions;
  return res;
}

SolveResult SubsetSolver::solve_all() {
  std::vector<std::uint8_t> all(static_cast<std::size_t>(n_), 1);
  return solve_subset(all);
}

std::uint64_t SubsetSolver::count_subset(std::span<const std::uint8_t> active) {
  prepare(active);
  std::uint64_t leaves = 0;
  count_from(0, leaves);
  undo_to(0);
  total_decisions_ += stats_.decisions;
  if (free_rays_ >= 64 && leaves > 0)
    throw OverflowError("colouring count does not fit in 64 bits");
  if (leaves > 0 && free_rays_ > 0) {
    std::uint64_t factor = 1ull << free_rays_;
    if (leaves > ~0ull / factor) throw OverflowError("colouring count does not fit in 64 bits");
    leaves *= factor;
  }
  return leaves;
}

std::uint64_t SubsetSolver::count_all() {
  std::vector<std::uint8_t> all(static_cast<std::size_t>(n_), 1);
  return count_subset(all);
}

SolveResult solve(const RaySet& s, ConstraintMode mode) {
  SubsetSolver solver(s, mode);
  return solver.solve_all();
}

bool validate(const RaySet& s, const Colouring& c, ConstraintMode mode) {
  if (static_cast<int>(c.bits.size()) != s.size())
    throw DimensionMismatchError("colouring must assign a value to every ray");
  for (const Basis& b : enumerate_bases(s)) {
    int sum = 0;
    for (int i : b.indices) sum += c.bits[static_cast<std::size_t>(i)];
    if (sum != 1) return false;
  }
  if (mode == ConstraintMode::BasisPlusPairwise)
    for (int i = 0; i < s.size(); ++i)
      for (int j = i + 1; j < s.size(); ++j)
        if (c.bits[static_cast<std::size_t>(i)] && c.bits[static_cast<std::size_t>(j)] &&
            dot(s[i], s[j]) == 0)
          return false;
  return true;
}

std::optional<ParityCertificate> parity_certificate(const RaySet& s) {
  return parity_certificate(s, enumerate_bases(s));
}

std::optional<ParityCertificate> parity_certificate(const RaySet& s,
                                                    const std::vector<Basis>& bases) {
  const int nb = static_cast<int>(bases.size());
  if (nb == 0) return std::nullopt;
  const int nr = s.size();
  const int rw = (nr + 63) / 64;
  const int cw = (nb + 63) / 64;

  // GF(2) rows: [basis incidence | parity bit | combination of original rows]
  struct Row {
    std::vector<std::uint64_t> rays;
    std::uint8_t parity;
    std::vector<std::uint64_t> comb;
  };
  std::vector<Row> rows(static_cast<std::size_t>(nb));
  for (int b = 0; b < nb; ++b) {
    Row& row = rows[static_cast<std::size_t>(b)];
    row.rays.assign(static_cast<std::size_t>(rw), 0);
    row.comb.assign(static_cast<std::size_t>(cw), 0);
    for (int i : bases[static_cast<std::size_t>(b)].indices)
      row.rays[static_cast<std::size_t>(i) / 64] |= 1ull << (i % 64);
    row.parity = 1;
    row.comb[static_cast<std::size_t>(b) / 64] |= 1ull << (b % 64);
  }

  auto xor_into = [&](Row& dst, const Row& src) {
    for (int w = 0; w < rw; ++w) dst.rays[static_cast<std::size_t>(w)] ^= src.rays[static_cast<std::size_t>(w)];
    dst.parity ^= src.parity;
    for (int w = 0; w < cw; ++w) dst.comb[static_cast<std::size_t>(w)] ^= src.comb[static_cast<std::size_t>(w)];
  };

  int pivot_rows = 0;
  for (int col = 0; col < nr && pivot_rows < nb; ++col) {
    int pivot = -1;
    for (int r = pivot_rows; r < nb; ++r)
      if ((rows[static_cast<std::size_t>(r)].rays[static_cast<std::size_t>(col) / 64] >> (col % 64)) & 1u) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[static_cast<std::size_t>(pivot)], rows[static_cast<std::size_t>(pivot_rows)]);
    for (int r = 0; r < nb; ++r)
      if (r != pivot_rows &&
          ((rows[static_cast<std::size_t>(r)].rays[static_cast<std::size_t>(col) / 64] >> (col % 64)) & 1u))
        xor_into(rows[static_cast<std::size_t>(r)], rows[static_cast<std::size_t>(pivot_rows)]);
    ++pivot_rows;
  }

  // rows past the pivots are zero on the ray side; an odd one is a certificate
  for (int r = pivot_rows; r < nb; ++r) {
    if (!rows[static_cast<std::size_t>(r)].parity) continue;
    ParityCertificate cert;
    for (int b = 0; b < nb; ++b)
      if ((rows[static_cast<std::size_t>(r)].comb[static_cast<std::size_t>(b) / 64] >> (b % 64)) & 1u)
        cert.bases.push_back(b);
    return cert;
  }
  return std::nullopt;
}

bool check_parity_certificate(const RaySet& s, const std::vector<Basis>& bases,
                              const ParityCertificate& cert) {
  if (cert.bases.size() % 2 == 0) return false;
  std::vector<int> counts(static_cast<std::size_t>(s.size()), 0);
  std::vector<char> seen(bases.size(), 0);
  for (int b : cert.bases) {
    if (b < 0 || b >= static_cast<int>(bases.size()) || seen[static_cast<std::size_t>(b)]) return false;
    seen[static_cast<std::size_t>(b)] = 1;
    for (int i : bases[static_cast<std::size_t>(b)].indices) ++counts[static_cast<std::size_t>(i)];
  }
  for (int c : counts)
    if (c % 2 != 0) return false;
  return true;
}

std::uint64_t count_colourings(const RaySet& s, ConstraintMode mode, int max_rays) {
  if (s.size() > max_rays)
    throw BoundExceededError("set has " + std::to_string(s.size()) +
                             " rays, exhaustive count bound is " + std::to_string(max_rays));
  SubsetSolver solver(s, mode);
  return solver.count_all();
}

}  // namespace bks
