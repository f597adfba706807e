#include "cayley/topology.hpp"

#include <algorithm>
#include <sstream>

namespace cayley::topo {

namespace {

mpz_class vec_gcd(const ZVec& v) {
  mpz_class g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

bool is_zero(const ZVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

mpz_class dot(const ZVec& a, const ZVec& b) {
  mpz_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

ScanResult chern_scan(const IntersectionLattice& L, const ZVec& kahler,
                      const ScanFilters& filters) {
  int m = L.rank;
  // Clear the form itself: multiply Q by the lcm of its denominators, then
  // contract with the integral vector. The factor is reported.
  mpz_class lcm = 1;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
              L.Q[std::size_t(i)][std::size_t(j)].get_den().get_mpz_t());
  ScanResult res;
  res.clearing_factor = lcm;
  res.cleared.resize(std::size_t(m));
  for (int i = 0; i < m; ++i) {
    mpq_class acc = 0;
    for (int j = 0; j < m; ++j)
      acc += L.Q[std::size_t(i)][std::size_t(j)] *
             mpq_class(kahler[std::size_t(j)]);
    mpq_class c = acc * mpq_class(lcm);
    res.cleared[std::size_t(i)] = c.get_num();
  }
  if (is_zero(res.cleared)) throw degenerate_kahler("chern_scan: Q k = 0");

  // Unimodular column reduction of the row vector w: after the sweep only
  // one nonzero entry remains and the other columns of the accumulated
  // transform span the kernel.
  ZVec row = res.cleared;
  std::vector<ZVec> cols(std::size_t(m), ZVec(std::size_t(m), 0));
  for (int i = 0; i < m; ++i) cols[std::size_t(i)][std::size_t(i)] = 1;

  auto col_axpy = [&](int dst, int src, const mpz_class& f) {
    row[std::size_t(dst)] += f * row[std::size_t(src)];
    for (int i = 0; i < m; ++i)
      cols[std::size_t(dst)][std::size_t(i)] += f * cols[std::size_t(src)][std::size_t(i)];
  };
  auto col_swap = [&](int a, int b) {
    std::swap(row[std::size_t(a)], row[std::size_t(b)]);
    std::swap(cols[std::size_t(a)], cols[std::size_t(b)]);
  };

  // gcd sweep: reduce all entries onto position 0
  while (true) {
    int piv = -1;
    for (int i = 0; i < m; ++i)
      if (row[std::size_t(i)] != 0 &&
          (piv < 0 || abs(row[std::size_t(i)]) < abs(row[std::size_t(piv)])))
        piv = i;
    if (piv < 0) break;
    if (piv != 0) col_swap(0, piv);
    bool clean = true;
    for (int i = 1; i < m; ++i) {
      if (row[std::size_t(i)] == 0) continue;
      mpz_class f = -(row[std::size_t(i)] / row[0]);
      col_axpy(i, 0, f);
      if (row[std::size_t(i)] != 0) clean = false;
    }
    if (clean) break;
  }

  for (int i = 1; i < m; ++i) res.kernel_basis.push_back(cols[std::size_t(i)]);
  if (int(res.kernel_basis.size()) < filters.required_independent)
    throw no_solutions("chern_scan: kernel rank below requested independence");

  // bounded enumeration of combinations (deduplicated up to sign)
  int k = int(res.kernel_basis.size());
  std::vector<long> combo(std::size_t(k), -filters.combo_bound);
  auto emit = [&](const ZVec& a) {
    if (is_zero(a)) return;
    for (const auto& x : a)
      if (abs(x) > filters.max_coeff) return;
    ZVec v = a;
    // canonical sign: first nonzero positive
    for (auto& x : v)
      if (x != 0) {
        if (x < 0)
          for (auto& y : v) y = -y;
        break;
      }
    ChernCandidate c;
    c.a = v;
    c.primitive = (vec_gcd(v) == 1);
    if (!c.primitive) return;
    if (filters.seifert &&
        !seifert_filter(v, filters.seifert->first, filters.seifert->second))
      return;
    for (auto& e : res.candidates)
      if (e.a == v) return;
    res.candidates.push_back(std::move(c));
  };
  while (true) {
    ZVec a(std::size_t(m), 0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < m; ++j)
        a[std::size_t(j)] += combo[std::size_t(i)] * res.kernel_basis[std::size_t(i)][std::size_t(j)];
    emit(a);
    int pos = 0;
    while (pos < k && combo[std::size_t(pos)] == filters.combo_bound) {
      combo[std::size_t(pos)] = -filters.combo_bound;
      ++pos;
    }
    if (pos == k) break;
    ++combo[std::size_t(pos)];
  }
  std::sort(res.candidates.begin(), res.candidates.end(),
            [](const ChernCandidate& a, const ChernCandidate& b) {
              return a.a < b.a;
            });
  return res;
}

bool seifert_filter(const ZVec& a, int coord, long k) {
  mpz_class g;
  mpz_class kk(k);
  mpz_gcd(g.get_mpz_t(), a[std::size_t(coord)].get_mpz_t(), kk.get_mpz_t());
  return g == 1;
}

std::vector<long> gysin_betti(const GysinInput& g) {
  int d = int(g.betti.size()) - 1;  // base dimension
  auto b = [&](int j) -> long {
    return (j < 0 || j > d) ? 0 : g.betti[std::size_t(j)];
  };
  auto r = [&](int j) -> long {
    if (j < 0 || j + 2 > d) return 0;
    return j < int(g.cup_rank.size()) ? g.cup_rank[std::size_t(j)] : 0;
  };
  for (int j = 0; j <= d; ++j) {
    long rj = r(j);
    if (rj < 0 || rj > std::min(b(j), b(j + 2)))
      throw inconsistent_ranks("gysin_betti: rank exceeds source or target");
  }
  std::vector<long> out(std::size_t(d + 2), 0);
  for (int k = 0; k <= d + 1; ++k)
    out[std::size_t(k)] = (b(k) - r(k - 2)) + (b(k - 1) - r(k - 1));
  return out;
}

bool poincare_symmetric(const std::vector<long>& betti) {
  int n = int(betti.size());
  for (int i = 0; i < n; ++i)
    if (betti[std::size_t(i)] != betti[std::size_t(n - 1 - i)]) return false;
  return true;
}

AdmissibilityReport admissibility_report(const IntersectionLattice& L,
                                         const ZVec& kahler,
                                         const std::vector<ZVec>& candidates,
                                         const LinkData& link) {
  AdmissibilityReport rep;
  // (i) orthogonality a^T Q k = 0, in exact rational arithmetic
  std::vector<mpq_class> w(std::size_t(L.rank), 0);
  for (int i = 0; i < L.rank; ++i)
    for (int j = 0; j < L.rank; ++j)
      w[std::size_t(i)] +=
          L.Q[std::size_t(i)][std::size_t(j)] * mpq_class(kahler[std::size_t(j)]);
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    mpq_class acc = 0;
    for (int i = 0; i < L.rank; ++i)
      acc += mpq_class(candidates[c][std::size_t(i)]) * w[std::size_t(i)];
    std::ostringstream os;
    os << "candidate " << c << ": a.Qk = " << acc;
    rep.checks.push_back({"orthogonality", acc == 0, os.str()});
  }
  // (ii) the pair must span a 2-dimensional subspace
  bool independent = false;
  if (candidates.size() >= 2) {
    const ZVec &a = candidates[0], &b = candidates[1];
    for (std::size_t i = 0; i < a.size() && !independent; ++i)
      for (std::size_t j = i + 1; j < a.size(); ++j)
        if (a[i] * b[j] - a[j] * b[i] != 0) {
          independent = true;
          break;
        }
  }
  rep.checks.push_back({"independent-pair", independent,
                        candidates.size() >= 2
                            ? "first two candidates checked"
                            : "fewer than two candidates"});
  // (iii) necessary cohomological conditions
  rep.checks.push_back({"dim H2(base) >= 2", L.rank >= 2,
                        "lattice rank " + std::to_string(L.rank)});
  rep.checks.push_back({"dim H2(link) >= 1", link.b2_sigma >= 1,
                        "b2(link) = " + std::to_string(link.b2_sigma)});
  // (iv) the triple-product obstruction is vacuous when H^5 vanishes
  rep.massey = (link.h5_dim == 0) ? "VACUOUS" : "UNDETERMINED";
  return rep;
}

}  // namespace cayley::topo
