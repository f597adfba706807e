#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cayley {

/// One verification line: the anchor string names the identity being checked,
/// spelled as a formula so failures are self-describing.
struct Check {
  std::string name;
  std::string anchor;
  bool pass = false;
  double measured = 0;
  double tol = 0;
  std::string detail;
};

struct Report {
  std::string command;
  std::uint64_t seed = 0;
  std::vector<Check> checks;

  void add(std::string name, std::string anchor, bool pass, double measured = 0,
           double tol = 0, std::string detail = {});
  bool all_pass() const;
  /// Checks sorted by name; emission is deterministic for fixed inputs.
  void sort();
  void emit_table(std::ostream& os) const;
  void emit_record(std::ostream& os) const;  // one JSON object per line
};

}  // namespace cayley
