#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "cayley/scalar.hpp"

namespace cayley::topo {

struct degenerate_kahler : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct no_solutions : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct inconsistent_ranks : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using ZVec = std::vector<mpz_class>;
using QMat = std::vector<std::vector<mpq_class>>;

/// Rational intersection form with labeled basis.
struct IntersectionLattice {
  int rank = 0;
  QMat Q;  // rank x rank symmetric
  std::vector<std::string> labels;
};

struct ChernCandidate {
  ZVec a;
  bool primitive = false;
};

struct ScanFilters {
  long max_coeff = 50;       // bound on candidate entries
  long combo_bound = 3;      // bound on kernel-basis combination coefficients
  int required_independent = 2;
  // optional Seifert smoothness filter: (coordinate index, weight)
  std::optional<std::pair<int, long>> seifert;
};

struct ScanResult {
  ZVec cleared;              // integer vector Q k after clearing denominators
  mpz_class clearing_factor; // lcm of denominators applied
  std::vector<ZVec> kernel_basis;
  std::vector<ChernCandidate> candidates;
};

/// Integral solutions of a^T Q k = 0: integer kernel basis by exact
/// unimodular column reduction, then bounded enumeration of primitive
/// candidates through the filters.
ScanResult chern_scan(const IntersectionLattice& L, const ZVec& kahler,
                      const ScanFilters& filters = {});

/// gcd(a[coord], k) == 1: the smooth circle-bundle condition over a weighted
/// base with weight k on that coordinate.
bool seifert_filter(const ZVec& a, int coord, long k);

/// Betti numbers of the base together with the cup-rank table of the Euler
/// class: r[j] = rank( cup e : H^j -> H^{j+2} ).
struct GysinInput {
  std::vector<long> betti;
  std::vector<long> cup_rank;
};

/// b_k(P) = (b_k - r_{k-2}) + (b_{k-1} - r_{k-1}) for the circle bundle P.
std::vector<long> gysin_betti(const GysinInput& g);

/// Poincare-duality symmetry check; advisory only (open bases fail it).
bool poincare_symmetric(const std::vector<long>& betti);

struct LinkData {
  long b2_sigma = 0;
  long h5_dim = 0;
};

struct CheckEntry {
  std::string name;
  bool pass;
  std::string detail;
};

struct AdmissibilityReport {
  std::vector<CheckEntry> checks;
  std::string massey;  // "VACUOUS" or "UNDETERMINED"
  bool all_pass() const {
    for (auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Validates a candidate pair against the lattice: orthogonality to the
/// Kahler vector, linear independence, the two cohomological necessary
/// conditions, and the triple-product obstruction flag.
AdmissibilityReport admissibility_report(const IntersectionLattice& L,
                                         const ZVec& kahler,
                                         const std::vector<ZVec>& candidates,
                                         const LinkData& link);

}  // namespace cayley::topo
