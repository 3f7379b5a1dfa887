#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bks/rays.hpp"

namespace bks {
namespace catalog {

struct ExpectedFacts {
  int size = 0;
  int basis_count = 0;
  std::optional<int> uniform_degree;     // every vertex has this degree
  std::optional<int> uniform_incidence;  // every ray sits in this many bases
  bool colourable = false;
  bool critical = false;
  bool parity_certificate_exists = false;
  std::optional<int> minimum_proof_size;
};

struct CatalogEntry {
  std::string name;
  std::string note;
  RaySet set;
  ExpectedFacts expected;
};

// Known names: S4 S5 S6 S7 S8 P24 (alias P-24). Throws UnknownNameError.
const CatalogEntry& get(std::string_view name);
const std::vector<std::string>& names();
bool has(std::string_view name);

struct VerifyResult {
  bool ok = true;
  std::vector<std::string> lines;     // one line per checked fact
  std::vector<std::string> failures;  // subset of lines that failed
};

// Recomputes every stored expected fact with the other modules and reports
// any mismatch. Slow facts (criticality, minimum proof sizes) are included.
VerifyResult verify_catalog();

}  // namespace catalog
}  // namespace bks
