#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bks/rays.hpp"

namespace bks {

// A complete basis: n mutually orthogonal rays of a dimension-n set, stored
// as a sorted index set. In dimension n no n+1 rays can be mutually
// orthogonal, so every n-clique of the orthogonality graph is maximal.
struct Basis {
  std::vector<int> indices;

  bool operator==(const Basis& other) const { return indices == other.indices; }
};

// Orthogonality graph of a ray set: vertex i is ray i, edge (i,j) present iff
// dot(ray_i, ray_j) == 0 and i != j. Adjacency is kept as bit rows.
class OrthoGraph {
 public:
  explicit OrthoGraph(const RaySet& s);

  int vertex_count() const { return n_; }
  int words() const { return words_; }
  bool adjacent(int i, int j) const {
    return (row(i)[static_cast<std::size_t>(j) / 64] >> (static_cast<std::size_t>(j) % 64)) & 1u;
  }
  std::span<const std::uint64_t> row(int i) const {
    return {rows_.data() + static_cast<std::size_t>(i) * words_, static_cast<std::size_t>(words_)};
  }
  int degree(int i) const { return degrees_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& degrees() const { return degrees_; }
  int edge_count() const;

 private:
  int n_;
  int words_;
  std::vector<std::uint64_t> rows_;
  std::vector<int> degrees_;
};

OrthoGraph build_graph(const RaySet& s);

// All n-cliques of the orthogonality graph, each exactly once, in
// lexicographic order of the sorted index sets.
std::vector<Basis> enumerate_bases(const RaySet& s);
std::vector<Basis> enumerate_bases(const RaySet& s, const OrthoGraph& g);

// Per-ray count of bases containing it.
std::vector<int> incidence_stats(const RaySet& s, const std::vector<Basis>& bases);
std::vector<int> incidence_stats(const RaySet& s);

// Rank over the rationals of the chosen rays, by fraction-free elimination.
int exact_rank(const RaySet& s, std::span<const int> indices);

std::string to_dot(const RaySet& s, const OrthoGraph& g);

// `{"dimension": n, "rays": [[ints]], "bases": [[indices]]}`
std::string bases_json(const RaySet& s, const std::vector<Basis>& bases);

}  // namespace bks
