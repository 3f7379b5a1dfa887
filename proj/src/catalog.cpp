#include "bks/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <initializer_list>

#include "bks/colouring.hpp"
#include "bks/construct.hpp"
#include "bks/critical.hpp"
#include "bks/ortho.hpp"

namespace bks {
namespace catalog {

namespace {

RaySet make_s4() {
  RaySet s(4);
  const std::initializer_list<std::initializer_list<std::int64_t>> rows = {
      {1, 0, 0, 0},  {0, 0, 1, 0},   {0, 0, 0, 1},  {1, 1, 0, 0},  {0, 1, 1, 0},
      {0, 0, 1, 1},  {1, -1, 0, 0},  {0, 1, -1, 0}, {1, 0, 1, 0},  {0, 1, 0, 1},
      {0, 1, 0, -1}, {1, 0, 0, 1},   {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1},
      {1, 1, 1, -1}, {1, 1, -1, 1},  {-1, 1, 1, 1}};
  for (const auto& row : rows) s.insert(std::vector<std::int64_t>(row));
  return s;
}

// the 24 rays of the Peres set: the standard basis, the twelve
// permutations of (1,±1,0,0), and the eight sign patterns of (1,±1,±1,±1)
RaySet make_p24() {
  RaySet s(4);
  const std::initializer_list<std::initializer_list<std::int64_t>> rows = {
      {1, 0, 0, 0},  {0, 1, 0, 0},  {0, 0, 1, 0},  {0, 0, 0, 1},
      {1, 1, 0, 0},  {1, -1, 0, 0}, {1, 0, 1, 0},  {1, 0, -1, 0},
      {1, 0, 0, 1},  {1, 0, 0, -1}, {0, 1, 1, 0},  {0, 1, -1, 0},
      {0, 1, 0, 1},  {0, 1, 0, -1}, {0, 0, 1, 1},  {0, 0, 1, -1},
      {1, 1, 1, 1},  {1, 1, 1, -1}, {1, 1, -1, 1}, {1, 1, -1, -1},
      {1, -1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, -1, -1, -1}};
  for (const auto& row : rows) s.insert(std::vector<std::int64_t>(row));
  return s;
}

void remove_or_die(RaySet& s, std::vector<std::int64_t> coords, const char* name) {
  if (!s.erase(Ray(std::move(coords))))
    throw Error(std::string("catalog generation: expected ray missing from ") + name);
}

// S5 = {(a,0), (0,a) : a in S4} minus two rays
RaySet make_s5(const RaySet& s4) {
  RaySet s(5);
  for (const Ray& r : pad_right(s4, 1)) s.insert(r);
  for (const Ray& r : pad_left(s4, 1)) s.insert(r);
  remove_or_die(s, {0, 1, 0, 0, 0}, "S5");
  remove_or_die(s, {0, 0, 1, 0, 0}, "S5");
  return s;
}

// S6 = {(a,0,0), (0,0,a) : a in S4} plus three rays minus six rays
RaySet make_s6(const RaySet& s4) {
  RaySet s(6);
  for (const Ray& r : pad_right(s4, 2)) s.insert(r);
  for (const Ray& r : pad_left(s4, 2)) s.insert(r);
  s.insert({0, 1, 0, 0, 0, 0});
  s.insert({1, 0, -1, 0, 0, 0});
  s.insert({1, 1, 1, 1, 0, 0});
  remove_or_die(s, {0, 0, 1, 0, 0, 0}, "S6");
  remove_or_die(s, {0, 0, 0, 1, 0, 0}, "S6");
  remove_or_die(s, {1, 1, 0, 0, 0, 0}, "S6");
  remove_or_die(s, {0, 0, 1, -1, 0, 0}, "S6");
  remove_or_die(s, {1, -1, -1, 1, 0, 0}, "S6");
  remove_or_die(s, {0, 1, 0, 1, 0, 0}, "S6");
  return s;
}

// S7 = {(a,0,0,0), (0,0,0,a) : a in S4} minus one ray
RaySet make_s7(const RaySet& s4) {
  RaySet s(7);
  for (const Ray& r : pad_right(s4, 3)) s.insert(r);
  for (const Ray& r : pad_left(s4, 3)) s.insert(r);
  remove_or_die(s, {0, 0, 0, 1, 0, 0, 0}, "S7");
  return s;
}

std::vector<CatalogEntry> build_entries() {
  std::vector<CatalogEntry> entries;
  RaySet s4 = make_s4();

  {
    CatalogEntry e{"S4",
                   "18-ray critical set in dimension 4; the smallest possible "
                   "non-colourable set in any dimension",
                   s4,
                   {}};
    e.expected = ExpectedFacts{18, 9, 7, 2, false, true, true, 18};
    entries.push_back(std::move(e));
  }
  {
    CatalogEntry e{"S5", "29-ray critical set in dimension 5, generated from S4",
                   make_s5(s4), {}};
    e.expected = ExpectedFacts{29, 16, std::nullopt, std::nullopt, false, true, false,
                               std::nullopt};
    entries.push_back(std::move(e));
  }
  {
    CatalogEntry e{"S6", "31-ray critical set in dimension 6, generated from S4",
                   make_s6(s4), {}};
    e.expected = ExpectedFacts{31, 16, std::nullopt, std::nullopt, false, true, false,
                               std::nullopt};
    entries.push_back(std::move(e));
  }
  {
    CatalogEntry e{"S7", "34-ray critical set in dimension 7, generated from S4",
                   make_s7(s4), {}};
    e.expected = ExpectedFacts{34, 28, std::nullopt, std::nullopt, false, true, false,
                               std::nullopt};
    entries.push_back(std::move(e));
  }
  {
    CatalogEntry e{"S8", "36-ray critical set in dimension 8, the direct sum of S4 with itself",
                   compose_zp(s4, s4), {}};
    e.expected = ExpectedFacts{36, 81, 25, 18, false, true, true, std::nullopt};
    entries.push_back(std::move(e));
  }
  {
    CatalogEntry e{"P24",
                   "Peres' 24-ray set in dimension 4: the standard basis, the twelve "
                   "permutations of (1,±1,0,0) and the eight signings of (1,1,1,1); "
                   "non-colourable but not critical",
                   make_p24(),
                   {}};
    e.expected = ExpectedFacts{24, 24, std::nullopt, std::nullopt, false, false, true, 18};
    entries.push_back(std::move(e));
  }
  return entries;
}

const std::vector<CatalogEntry>& entries() {
  static const std::vector<CatalogEntry> kEntries = build_entries();
  return kEntries;
}

std::string normalise(std::string_view name) {
  std::string out;
  for (char c : name)
    if (c != '-') out += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

const CatalogEntry& get(std::string_view name) {
  std::string key = normalise(name);
  for (const CatalogEntry& e : entries())
    if (e.name == key) return e;
  throw UnknownNameError("unknown catalog set '" + std::string(name) + "'");
}

bool has(std::string_view name) {
  std::string key = normalise(name);
  for (const CatalogEntry& e : entries())
    if (e.name == key) return true;
  return false;
}

const std::vector<std::string>& names() {
  static const std::vector<std::string> kNames = [] {
    std::vector<std::string> out;
    for (const CatalogEntry& e : entries()) out.push_back(e.name);
    return out;
  }();
  return kNames;
}

VerifyResult verify_catalog() {
  VerifyResult result;
  auto check = [&result](const std::string& what, bool ok) {
    std::string line = (ok ? "ok   " : "FAIL ") + what;
    result.lines.push_back(line);
    if (!ok) {
      result.ok = false;
      result.failures.push_back(line);
    }
  };

  for (const CatalogEntry& e : entries()) {
    const ExpectedFacts& x = e.expected;
    check(e.name + " size " + std::to_string(x.size), e.set.size() == x.size);

    OrthoGraph g(e.set);
    std::vector<Basis> bases = enumerate_bases(e.set, g);
    check(e.name + " bases " + std::to_string(x.basis_count),
          static_cast<int>(bases.size()) == x.basis_count);

    if (x.uniform_degree) {
      bool all = std::all_of(g.degrees().begin(), g.degrees().end(),
                             [&](int d) { return d == *x.uniform_degree; });
      check(e.name + " degree " + std::to_string(*x.uniform_degree), all);
    }
    if (x.uniform_incidence) {
      std::vector<int> inc = incidence_stats(e.set, bases);
      bool all = std::all_of(inc.begin(), inc.end(),
                             [&](int c) { return c == *x.uniform_incidence; });
      check(e.name + " bases per ray " + std::to_string(*x.uniform_incidence), all);
    }

    SolveResult sr = solve(e.set, ConstraintMode::BasisOnly);
    check(e.name + (x.colourable ? " colourable" : " non-colourable"),
          sr.colourable == x.colourable);

    auto cert = parity_certificate(e.set, bases);
    check(e.name + (x.parity_certificate_exists ? " parity certificate exists"
                                                : " no parity certificate"),
          cert.has_value() == x.parity_certificate_exists);
    if (cert)
      check(e.name + " parity certificate sound",
            check_parity_certificate(e.set, bases, *cert) && !sr.colourable);

    if (!sr.colourable) {
      CriticalReport cr = is_critical(e.set, ConstraintMode::BasisOnly);
      check(e.name + (x.critical ? " critical" : " not critical"),
            cr.is_critical == x.critical);
    }

    if (x.minimum_proof_size) {
      int min_size = minimum_proof_size(e.set, ConstraintMode::BasisOnly);
      check(e.name + " minimum proof size " + std::to_string(*x.minimum_proof_size),
            min_size == *x.minimum_proof_size);
    }
  }

  // generation cross-checks tying the catalog to the constructions
  check("S8 equals the ZP composition of S4 with itself",
        get("S8").set.same_rays(compose_zp(get("S4").set, get("S4").set)));
  {
    const std::vector<int> expected_s4 = {31, 35, 37, 38};
    const std::vector<int> expected_p24 = {39, 44, 47, 48};
    for (int n = 5; n <= 8; ++n) {
      check("lift(S4," + std::to_string(n) + ") size " +
                std::to_string(expected_s4[static_cast<std::size_t>(n - 5)]),
            lift(get("S4").set, n).d_set.size() ==
                expected_s4[static_cast<std::size_t>(n - 5)]);
      check("lift(P24," + std::to_string(n) + ") size " +
                std::to_string(expected_p24[static_cast<std::size_t>(n - 5)]),
            lift(get("P24").set, n).d_set.size() ==
                expected_p24[static_cast<std::size_t>(n - 5)]);
    }
  }
  return result;
}

}  // namespace catalog
}  // namespace bks
