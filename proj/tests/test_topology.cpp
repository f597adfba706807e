#include <doctest.h>

#include <random>

#include "cayley/topology.hpp"

using namespace cayley::topo;

namespace {

IntersectionLattice diag_lattice(const std::vector<long>& d) {
  IntersectionLattice L;
  L.rank = int(d.size());
  L.Q.assign(d.size(), std::vector<mpq_class>(d.size(), 0));
  for (std::size_t i = 0; i < d.size(); ++i) L.Q[i][i] = d[i];
  return L;
}

}  // namespace

TEST_CASE("chern_scan on the rank-4 blowup lattice") {
  IntersectionLattice L = diag_lattice({1, -1, -1, -1});
  L.labels = {"E", "D1", "D2", "D3"};
  ScanResult r = chern_scan(L, {3, 1, 1, 1});
  CHECK(r.kernel_basis.size() == 3);
  CHECK(r.clearing_factor == 1);

  // every basis vector and candidate is orthogonal, exactly
  ZVec qk{3, -1, -1, -1};
  for (auto& b : r.kernel_basis) {
    mpz_class s = 0;
    for (int i = 0; i < 4; ++i) s += b[std::size_t(i)] * qk[std::size_t(i)];
    CHECK(s == 0);
  }
  bool has_ones = false, has_diff = false;
  for (auto& c : r.candidates) {
    CHECK(c.primitive);
    mpz_class s = 0;
    for (int i = 0; i < 4; ++i) s += c.a[std::size_t(i)] * qk[std::size_t(i)];
    CHECK(s == 0);
    if (c.a == ZVec{1, 1, 1, 1}) has_ones = true;
    if (c.a == ZVec{0, 1, -1, 0} || c.a == ZVec{0, 0, 1, -1} ||
        c.a == ZVec{0, 1, 0, -1})
      has_diff = true;
  }
  CHECK(has_ones);
  CHECK(has_diff);

  // requesting more independence than the kernel affords
  ScanFilters too_many;
  too_many.required_independent = 4;
  CHECK_THROWS_AS(chern_scan(L, {3, 1, 1, 1}, too_many), no_solutions);

  CHECK_THROWS_AS(chern_scan(diag_lattice({0, 0}), {1, 1}), degenerate_kahler);
}

TEST_CASE("chern_scan clears orbifold denominators") {
  // diag(1/k, -1, -1) with k = 2: the condition picks up the k-cleared form
  IntersectionLattice L = diag_lattice({1, -1, -1});
  L.Q[0][0] = mpq_class(1, 2);
  ScanResult r = chern_scan(L, {2, 1, 1});
  CHECK(r.clearing_factor == 2);
  CHECK(r.cleared == ZVec{2, -2, -2});
  CHECK(r.kernel_basis.size() == 2);
  // e.g. (1,1,0) satisfies e~ e^a - d1 d1^a - d2 d2^a = 0 after clearing
  mpz_class s = 0;
  ZVec probe{1, 1, 0};
  for (int i = 0; i < 3; ++i) s += probe[std::size_t(i)] * r.cleared[std::size_t(i)];
  CHECK(s == 0);
}

TEST_CASE("seifert smoothness filter") {
  // canonical class coordinate e = -(k+2) is coprime with k iff k is odd
  for (long k = 2; k <= 20; ++k) {
    ZVec can{-(k + 2), 1, 1};
    CHECK(seifert_filter(can, 0, k) == (k % 2 == 1));
  }
  CHECK(!seifert_filter({2, 0, 0}, 0, 4));
  CHECK(seifert_filter({1, 7, -5}, 0, 9));
}

TEST_CASE("gysin recursion: tower, trivial bundle, sphere bundle") {
  // the two-step tower over the small-resolution pattern (1,0,p,0,0,0,0)
  for (long p = 2; p <= 10; ++p) {
    GysinInput step1{{1, 0, p, 0, 0, 0, 0}, {1, 0, 0, 0, 0}};
    auto b1 = gysin_betti(step1);
    CHECK(b1 == std::vector<long>{1, 0, p - 1, p, 0, 0, 0, 0});
    GysinInput step2{b1, {1, 0, 0, 0, 0, 0}};
    auto b2 = gysin_betti(step2);
    CHECK(b2[2] == p - 2);
    CHECK(b2[3] == 2 * p - 1);
    // euler characteristic of a circle bundle vanishes
    long chi = 0;
    int sgn = 1;
    for (long v : b2) {
      chi += sgn * v;
      sgn = -sgn;
    }
    CHECK(chi == 0);
  }

  // zero Euler class: the Kunneth answer for B x S^1
  GysinInput triv{{1, 0, 5, 0, 0, 0, 0}, {0, 0, 0, 0, 0}};
  CHECK(gysin_betti(triv) == std::vector<long>{1, 1, 5, 5, 0, 0, 0, 0});

  // the generator bundle over the 2-sphere is the 3-sphere
  GysinInput hopf{{1, 0, 1}, {1}};
  CHECK(gysin_betti(hopf) == std::vector<long>{1, 0, 0, 1});

  GysinInput bad{{1, 0, 1}, {2}};
  CHECK_THROWS_AS(gysin_betti(bad), inconsistent_ranks);
}

TEST_CASE("euler characteristic vanishes for arbitrary admissible inputs") {
  std::mt19937_64 g(7);
  std::uniform_int_distribution<long> d(0, 4);
  for (int t = 0; t < 50; ++t) {
    GysinInput in;
    in.betti.resize(7);
    for (auto& b : in.betti) b = d(g);
    in.betti[0] = 1;
    in.cup_rank.resize(5);
    for (int j = 0; j < 5; ++j) {
      long cap = std::min(in.betti[std::size_t(j)], in.betti[std::size_t(j + 2)]);
      in.cup_rank[std::size_t(j)] = cap == 0 ? 0 : d(g) % (cap + 1);
    }
    auto out = gysin_betti(in);
    long chi = 0;
    int sgn = 1;
    for (long v : out) {
      chi += sgn * v;
      sgn = -sgn;
    }
    CHECK(chi == 0);
  }
}

TEST_CASE("poincare symmetry advisory") {
  CHECK(poincare_symmetric({1, 0, 2, 2, 0, 1}));
  CHECK(!poincare_symmetric({1, 0, 5, 0, 0, 0, 0}));
}

TEST_CASE("admissibility report") {
  IntersectionLattice L = diag_lattice({1, -1, -1, -1});
  ZVec k{3, 1, 1, 1};
  // valid pair, vanishing H^5: everything passes, obstruction vacuous
  auto rep = admissibility_report(L, k, {{1, 1, 1, 1}, {0, 1, -1, 0}},
                                  LinkData{2, 0});
  CHECK(rep.all_pass());
  CHECK(rep.massey == "VACUOUS");

  // single candidate: the pair-independence check fails
  auto rep1 = admissibility_report(L, k, {{1, 1, 1, 1}}, LinkData{2, 0});
  CHECK(!rep1.all_pass());

  // link with no second cohomology: necessary condition fails
  auto rep2 = admissibility_report(L, k, {{1, 1, 1, 1}, {0, 1, -1, 0}},
                                   LinkData{0, 0});
  CHECK(!rep2.all_pass());

  // nonzero H^5 leaves the obstruction undetermined
  auto rep3 = admissibility_report(L, k, {{1, 1, 1, 1}, {0, 1, -1, 0}},
                                   LinkData{2, 1});
  CHECK(rep3.massey == "UNDETERMINED");

  // non-orthogonal candidate is reported, not thrown
  auto rep4 = admissibility_report(L, k, {{1, 0, 0, 0}, {0, 1, -1, 0}},
                                   LinkData{2, 0});
  CHECK(!rep4.all_pass());
}
