#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace bks {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AllZeroError : Error {
  AllZeroError() : Error("ray must have a nonzero coordinate") {}
  explicit AllZeroError(const std::string& what) : Error(what) {}
};
struct OverflowError : Error {
  explicit OverflowError(const std::string& what) : Error(what) {}
};
struct DimensionMismatchError : Error {
  explicit DimensionMismatchError(const std::string& what) : Error(what) {}
};
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};
struct DimensionOutOfRangeError : Error {
  explicit DimensionOutOfRangeError(const std::string& what) : Error(what) {}
};
struct NotAProofError : Error {
  explicit NotAProofError(const std::string& what) : Error(what) {}
};
struct BoundExceededError : Error {
  explicit BoundExceededError(const std::string& what) : Error(what) {}
};
struct BudgetExceededError : Error {
  explicit BudgetExceededError(const std::string& what) : Error(what) {}
};
struct UnknownNameError : Error {
  explicit UnknownNameError(const std::string& what) : Error(what) {}
};

// 64-bit arithmetic that refuses to wrap. Catalog coordinates are tiny, but
// parsed input is not, and a silent wrap would corrupt orthogonality tests.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("integer overflow in addition");
  return r;
}
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("integer overflow in multiplication");
  return r;
}

// A projective ray with exact integer coordinates, stored canonically: the
// coordinates are coprime and the first nonzero one is positive. Two integer
// vectors spanning the same line therefore compare equal.
class Ray {
 public:
  explicit Ray(std::vector<std::int64_t> coords);

  int dimension() const { return static_cast<int>(coords_.size()); }
  const std::vector<std::int64_t>& coords() const { return coords_; }
  std::int64_t operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }

  bool operator==(const Ray& other) const { return coords_ == other.coords_; }
  bool operator!=(const Ray& other) const { return coords_ != other.coords_; }

  std::string to_string() const;  // "1 -1 0 0"

 private:
  std::vector<std::int64_t> coords_;
};

Ray canonicalize(std::vector<std::int64_t> coords);
std::int64_t dot(const Ray& u, const Ray& v);
bool orthogonal(const Ray& u, const Ray& v);

struct RayHash {
  std::size_t operator()(const Ray& r) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (std::int64_t v : r.coords())
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

// Ordered, duplicate-free collection of rays sharing one dimension.
// Insertion order is preserved so that all output is reproducible; set
// equality (same_rays) ignores order.
class RaySet {
 public:
  explicit RaySet(int dimension);

  int dimension() const { return dimension_; }
  int size() const { return static_cast<int>(rays_.size()); }
  bool empty() const { return rays_.empty(); }
  const Ray& operator[](int i) const { return rays_[static_cast<std::size_t>(i)]; }
  const std::vector<Ray>& rays() const { return rays_; }

  // Returns the index of the ray afterwards; inserting a duplicate is a no-op.
  int insert(Ray r);
  int insert(std::vector<std::int64_t> coords) { return insert(Ray(std::move(coords))); }

  bool contains(const Ray& r) const { return index_.count(r) != 0; }
  std::optional<int> index_of(const Ray& r) const;

  // Removes a ray; false if absent. Indices of later rays shift down by one.
  bool erase(const Ray& r);

  RaySet subset(std::span<const int> indices) const;
  bool same_rays(const RaySet& other) const;

  auto begin() const { return rays_.begin(); }
  auto end() const { return rays_.end(); }

 private:
  int dimension_;
  std::vector<Ray> rays_;
  std::unordered_map<Ray, int, RayHash> index_;
};

struct ParsedSet {
  RaySet set;
  int duplicates_collapsed = 0;
};

// Text format: one ray per line, whitespace-separated decimal integers,
// '#' starts a comment, blank lines ignored. The first data line fixes the
// dimension.
ParsedSet parse_set(std::string_view text);
std::string format_set(const RaySet& s);

}  // namespace bks
