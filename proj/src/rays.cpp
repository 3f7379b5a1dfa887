#include "bks/rays.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>

namespace bks {

Ray::Ray(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw AllZeroError("ray needs at least one coordinate");
  std::uint64_t g = 0;
  for (std::int64_t v : coords_) {
    if (v == std::numeric_limits<std::int64_t>::min())
      throw OverflowError("coordinate magnitude out of range");
    g = std::gcd(g, static_cast<std::uint64_t>(v < 0 ? -v : v));
  }
  if (g == 0) throw AllZeroError();
  for (std::int64_t& v : coords_) v /= static_cast<std::int64_t>(g);
  for (std::int64_t v : coords_) {
    if (v == 0) continue;
    if (v < 0)
      for (std::int64_t& w : coords_) w = -w;
    break;
  }
}

std::string Ray::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(coords_[i]);
  }
  return out;
}

Ray canonicalize(std::vector<std::int64_t> coords) { return Ray(std::move(coords)); }

std::int64_t dot(const Ray& u, const Ray& v) {
  if (u.dimension() != v.dimension())
    throw DimensionMismatchError("dot product needs equal dimensions, got " +
                                 std::to_string(u.dimension()) + " and " +
                                 std::to_string(v.dimension()));
  std::int64_t acc = 0;
  for (int i = 0; i < u.dimension(); ++i) acc = checked_add(acc, checked_mul(u[i], v[i]));
  return acc;
}

bool orthogonal(const Ray& u, const Ray& v) { return dot(u, v) == 0; }

RaySet::RaySet(int dimension) : dimension_(dimension) {
  if (dimension < 1) throw DimensionOutOfRangeError("ray-set dimension must be positive");
}

int RaySet::insert(Ray r) {
  if (r.dimension() != dimension_)
    throw DimensionMismatchError("ray of dimension " + std::to_string(r.dimension()) +
                                 " inserted into set of dimension " + std::to_string(dimension_));
  auto it = index_.find(r);
  if (it != index_.end()) return it->second;
  int idx = static_cast<int>(rays_.size());
  index_.emplace(r, idx);
  rays_.push_back(std::move(r));
  return idx;
}

std::optional<int> RaySet::index_of(const Ray& r) const {
  auto it = index_.find(r);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool RaySet::erase(const Ray& r) {
  auto it = index_.find(r);
  if (it == index_.end()) return false;
  int idx = it->second;
  index_.erase(it);
  rays_.erase(rays_.begin() + idx);
  for (auto& [ray, pos] : index_)
    if (pos > idx) --pos;
  return true;
}

RaySet RaySet::subset(std::span<const int> indices) const {
  RaySet out(dimension_);
  for (int i : indices) out.insert(rays_[static_cast<std::size_t>(i)]);
  return out;
}

bool RaySet::same_rays(const RaySet& other) const {
  if (dimension_ != other.dimension_ || size() != other.size()) return false;
  for (const Ray& r : rays_)
    if (!other.contains(r)) return false;
  return true;
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

}  // namespace

ParsedSet parse_set(std::string_view text) {
  std::optional<RaySet> set;
  int duplicates = 0;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;

    if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);

    std::vector<std::int64_t> vals;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && is_space(line[i])) ++i;
      if (i >= line.size()) break;
      std::size_t start = i;
      while (i < line.size() && !is_space(line[i])) ++i;
      std::string_view tok = line.substr(start, i - start);
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec == std::errc::result_out_of_range)
        throw ParseError("line " + std::to_string(lineno) + ": integer out of range '" +
                         std::string(tok) + "'");
      if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError("line " + std::to_string(lineno) + ": malformed integer '" +
                         std::string(tok) + "'");
      vals.push_back(v);
    }
    if (vals.empty()) continue;

    if (!set) {
      set.emplace(static_cast<int>(vals.size()));
    } else if (static_cast<int>(vals.size()) != set->dimension()) {
      throw ParseError("line " + std::to_string(lineno) + ": expected " +
                       std::to_string(set->dimension()) + " coordinates, got " +
                       std::to_string(vals.size()));
    }
    if (std::all_of(vals.begin(), vals.end(), [](std::int64_t v) { return v == 0; }))
      throw ParseError("line " + std::to_string(lineno) + ": all-zero ray");

    int before = set->size();
    set->insert(Ray(std::move(vals)));
    if (set->size() == before) ++duplicates;
  }
  if (!set) throw ParseError("no rays in input");
  return ParsedSet{std::move(*set), duplicates};
}

std::string format_set(const RaySet& s) {
  std::string out;
  for (const Ray& r : s) {
    out += r.to_string();
    out += '\n';
  }
  return out;
}

}  // namespace bks
