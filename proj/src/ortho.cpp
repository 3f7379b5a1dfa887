#include "bks/ortho.hpp"

#include <bit>

#include "json.hpp"

namespace bks {

OrthoGraph::OrthoGraph(const RaySet& s)
    : n_(s.size()), words_((s.size() + 63) / 64), rows_(), degrees_() {
  if (words_ == 0) words_ = 1;
  rows_.assign(static_cast<std::size_t>(n_) * words_, 0);
  degrees_.assign(static_cast<std::size_t>(n_), 0);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      if (dot(s[i], s[j]) != 0) continue;
      rows_[static_cast<std::size_t>(i) * words_ + j / 64] |= 1ull << (j % 64);
      rows_[static_cast<std::size_t>(j) * words_ + i / 64] |= 1ull << (i % 64);
      ++degrees_[static_cast<std::size_t>(i)];
      ++degrees_[static_cast<std::size_t>(j)];
    }
}

int OrthoGraph::edge_count() const {
  int total = 0;
  for (int d : degrees_) total += d;
  return total / 2;
}

OrthoGraph build_graph(const RaySet& s) { return OrthoGraph(s); }

namespace {

int popcount_words(std::span<const std::uint64_t> w) {
  int c = 0;
  for (std::uint64_t x : w) c += std::popcount(x);
  return c;
}

struct CliqueSearch {
  const OrthoGraph& g;
  int n;       // clique size wanted = dimension
  int words;
  std::vector<std::vector<std::uint64_t>> cand;  // per depth
  std::vector<int> clique;
  std::vector<Basis>& out;

  void run() {
    if (g.vertex_count() < n) return;
    for (int v = 0; v < g.vertex_count(); ++v) step(0, v);
  }

  // extend clique with v; candidates for the next level are the neighbours of
  // v beyond v that were still candidates here
  void step(int depth, int v) {
    clique.push_back(v);
    if (depth + 1 == n) {
      out.push_back(Basis{clique});
      clique.pop_back();
      return;
    }
    auto& next = cand[static_cast<std::size_t>(depth) + 1];
    auto row = g.row(v);
    if (depth == 0) {
      for (int w = 0; w < words; ++w) next[static_cast<std::size_t>(w)] = row[static_cast<std::size_t>(w)];
    } else {
      const auto& cur = cand[static_cast<std::size_t>(depth)];
      for (int w = 0; w < words; ++w)
        next[static_cast<std::size_t>(w)] = cur[static_cast<std::size_t>(w)] & row[static_cast<std::size_t>(w)];
    }
    // keep only vertices above v
    for (int w = 0; w < v / 64; ++w) next[static_cast<std::size_t>(w)] = 0;
    next[static_cast<std::size_t>(v) / 64] &= ~((v % 64 == 63) ? ~0ull : ((1ull << (v % 64 + 1)) - 1));

    if (depth + 1 + popcount_words(next) >= n) {
      for (int w = 0; w < words; ++w) {
        std::uint64_t bits = next[static_cast<std::size_t>(w)];
        while (bits) {
          int u = w * 64 + std::countr_zero(bits);
          bits &= bits - 1;
          step(depth + 1, u);
        }
      }
    }
    clique.pop_back();
  }
};

}  // namespace

std::vector<Basis> enumerate_bases(const RaySet& s, const OrthoGraph& g) {
  std::vector<Basis> out;
  int n = s.dimension();
  CliqueSearch search{g, n, g.words(),
                      std::vector<std::vector<std::uint64_t>>(
                          static_cast<std::size_t>(n) + 1,
                          std::vector<std::uint64_t>(static_cast<std::size_t>(g.words()))),
                      {}, out};
  search.clique.reserve(static_cast<std::size_t>(n));
  search.run();
  return out;
}

std::vector<Basis> enumerate_bases(const RaySet& s) {
  OrthoGraph g(s);
  return enumerate_bases(s, g);
}

std::vector<int> incidence_stats(const RaySet& s, const std::vector<Basis>& bases) {
  std::vector<int> counts(static_cast<std::size_t>(s.size()), 0);
  for (const Basis& b : bases)
    for (int i : b.indices) ++counts[static_cast<std::size_t>(i)];
  return counts;
}

std::vector<int> incidence_stats(const RaySet& s) {
  return incidence_stats(s, enumerate_bases(s));
}

namespace {

using int128 = __int128;

int128 abs128(int128 v) { return v < 0 ? -v : v; }

// multiply with |a*b| kept below 2^126 so the product cannot wrap
int128 mul128(int128 a, int128 b) {
  if (a != 0 && b != 0) {
    int128 limit = (static_cast<int128>(1) << 126) / abs128(a);
    if (abs128(b) > limit) throw OverflowError("overflow in exact rank computation");
  }
  return a * b;
}

}  // namespace

int exact_rank(const RaySet& s, std::span<const int> indices) {
  const int rows = static_cast<int>(indices.size());
  const int cols = s.dimension();
  std::vector<int128> m(static_cast<std::size_t>(rows) * cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      m[static_cast<std::size_t>(r) * cols + c] = s[indices[static_cast<std::size_t>(r)]][c];

  auto at = [&](int r, int c) -> int128& { return m[static_cast<std::size_t>(r) * cols + c]; };

  // fraction-free (Bareiss) elimination; divisions are exact
  int rank = 0;
  int128 prev = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int c = 0; c < cols; ++c) std::swap(at(pivot, c), at(rank, c));
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c)
        at(r, c) = (mul128(at(rank, col), at(r, c)) - mul128(at(r, col), at(rank, c))) / prev;
      at(r, col) = 0;
    }
    prev = at(rank, col);
    ++rank;
  }
  return rank;
}

std::string to_dot(const RaySet& s, const OrthoGraph& g) {
  std::string out = "graph orthogonality {\n";
  for (int i = 0; i < s.size(); ++i)
    out += "  v" + std::to_string(i) + " [label=\"" + s[i].to_string() + "\"];\n";
  for (int i = 0; i < g.vertex_count(); ++i)
    for (int j = i + 1; j < g.vertex_count(); ++j)
      if (g.adjacent(i, j))
        out += "  v" + std::to_string(i) + " -- v" + std::to_string(j) + ";\n";
  out += "}\n";
  return out;
}

std::string bases_json(const RaySet& s, const std::vector<Basis>& bases) {
  nlohmann::ordered_json doc;
  doc["dimension"] = s.dimension();
  auto& rays = doc["rays"] = nlohmann::ordered_json::array();
  for (const Ray& r : s) rays.push_back(r.coords());
  auto& bs = doc["bases"] = nlohmann::ordered_json::array();
  for (const Basis& b : bases) bs.push_back(b.indices);
  return doc.dump();
}

}  // namespace bks
