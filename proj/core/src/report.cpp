#include "cayley/report.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace cayley {

void Report::add(std::string name, std::string anchor, bool pass,
                 double measured, double tol, std::string detail) {
  checks.push_back({std::move(name), std::move(anchor), pass, measured, tol,
                    std::move(detail)});
}

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void Report::sort() {
  std::stable_sort(checks.begin(), checks.end(),
                   [](const Check& a, const Check& b) { return a.name < b.name; });
}

namespace {

std::string fmt_num(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

void Report::emit_table(std::ostream& os) const {
  os << "# command: " << command << "\n";
  os << "# seed: " << seed << "\n";
  std::size_t w = 8;
  for (const auto& c : checks) w = std::max(w, c.name.size());
  for (const auto& c : checks) {
    os << (c.pass ? "[PASS] " : "[FAIL] ") << std::left << std::setw(int(w) + 2)
       << c.name << " measured=" << fmt_num(c.measured)
       << " tol=" << fmt_num(c.tol) << "  :: " << c.anchor;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
  }
  os << "# " << (all_pass() ? "ALL PASS" : "FAILURES PRESENT") << " ("
     << checks.size() << " checks)\n";
}

void Report::emit_record(std::ostream& os) const {
  os << "{\"command\":\"" << json_escape(command) << "\",\"seed\":" << seed
     << "}\n";
  for (const auto& c : checks) {
    os << "{\"name\":\"" << json_escape(c.name) << "\",\"anchor\":\""
       << json_escape(c.anchor) << "\",\"pass\":" << (c.pass ? "true" : "false")
       << ",\"measured\":" << std::setprecision(17) << c.measured
       << ",\"tol\":" << c.tol;
    if (!c.detail.empty()) os << ",\"detail\":\"" << json_escape(c.detail) << "\"";
    os << "}\n";
  }
}

}  // namespace cayley
