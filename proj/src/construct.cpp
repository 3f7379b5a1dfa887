#include "bks/construct.hpp"

namespace bks {

std::string origin_label(Origin o) {
  switch (o) {
    case Origin::BStar: return "B*";
    case Origin::BBar: return "B̄";
    case Origin::CStar: return "C*";
    case Origin::CBar: return "C̄";
  }
  return "?";
}

RaySet pad_right(const RaySet& a, int zeros) {
  RaySet out(a.dimension() + zeros);
  for (const Ray& r : a) {
    std::vector<std::int64_t> c = r.coords();
    c.resize(static_cast<std::size_t>(a.dimension() + zeros), 0);
    out.insert(std::move(c));
  }
  return out;
}

RaySet pad_left(const RaySet& a, int zeros) {
  RaySet out(a.dimension() + zeros);
  for (const Ray& r : a) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(zeros), 0);
    c.insert(c.end(), r.coords().begin(), r.coords().end());
    out.insert(std::move(c));
  }
  return out;
}

namespace {

Ray unit_ray(int dim, int axis) {  // 1-based axis
  std::vector<std::int64_t> c(static_cast<std::size_t>(dim), 0);
  c[static_cast<std::size_t>(axis - 1)] = 1;
  return Ray(std::move(c));
}

}  // namespace

LiftResult lift(const RaySet& a, int target_dim) {
  const int d = a.dimension();
  const int n = target_dim;
  const int m = n - d;
  if (d < 3) throw DimensionOutOfRangeError("seed set must have dimension at least 3");
  if (m < 1 || m > d)
    throw DimensionOutOfRangeError("target dimension " + std::to_string(n) +
                                   " must satisfy d < n <= 2d for d = " + std::to_string(d));

  RaySet b_star = pad_right(a, m);
  RaySet c_star = pad_left(a, m);
  RaySet b_bar(n);
  for (int k = d + 1; k <= n; ++k) b_bar.insert(unit_ray(n, k));
  RaySet c_bar(n);
  for (int k = 1; k <= m; ++k) c_bar.insert(unit_ray(n, k));

  LiftResult res{RaySet(n), RaySet(n), RaySet(n), {}};
  for (const Ray& r : b_star) res.b_set.insert(r);
  for (const Ray& r : b_bar) res.b_set.insert(r);
  for (const Ray& r : c_star) res.c_set.insert(r);
  for (const Ray& r : c_bar) res.c_set.insert(r);
  for (const Ray& r : res.b_set) res.d_set.insert(r);
  for (const Ray& r : res.c_set) res.d_set.insert(r);

  res.origins.resize(static_cast<std::size_t>(res.d_set.size()));
  for (int i = 0; i < res.d_set.size(); ++i) {
    const Ray& r = res.d_set[i];
    auto& o = res.origins[static_cast<std::size_t>(i)];
    if (b_star.contains(r)) o.push_back(Origin::BStar);
    if (b_bar.contains(r)) o.push_back(Origin::BBar);
    if (c_star.contains(r)) o.push_back(Origin::CStar);
    if (c_bar.contains(r)) o.push_back(Origin::CBar);
  }
  return res;
}

RaySet compose_zp(const RaySet& a, const RaySet& b) {
  if (a.dimension() < 3 || b.dimension() < 3)
    throw DimensionOutOfRangeError("composition needs both components of dimension at least 3");
  RaySet out(a.dimension() + b.dimension());
  for (const Ray& r : pad_right(a, b.dimension())) out.insert(r);
  for (const Ray& r : pad_left(b, a.dimension())) out.insert(r);
  return out;
}

IterateResult iterate_lift(const RaySet& a, std::span<const int> plan) {
  IterateResult res{a, {}};
  for (int n : plan) {
    res.final_set = lift(res.final_set, n).d_set;
    res.steps.push_back(LiftStep{n, res.final_set.size()});
  }
  return res;
}

}  // namespace bks
