#include <doctest.h>

#include <sstream>

#include "cayley/io.hpp"
#include "test_support.hpp"

using namespace cayley;
using namespace cayley::io;
using testsup::random_form;
using testsup::random_jet;
using testsup::random_spin7;
using testsup::reseed;

TEST_CASE("scalar and form round trips") {
  reseed(50);
  Scalar q(22, 7);
  CHECK(scalar_from_json(scalar_to_json(q)) == q);
  Scalar f(0.125);
  CHECK(scalar_from_json(scalar_to_json(f)) == f);
  // big numerators travel as strings
  Scalar big(mpq_class(mpz_class("123456789012345678901234567890"),
                       mpz_class(7)));
  CHECK(scalar_from_json(scalar_to_json(big)) == big);

  for (int t = 0; t < 10; ++t) {
    Form a = random_form(6, 2);
    CHECK(form_from_json(form_to_json(a)) == a);
    Form b = random_form(8, 3).to_float();
    Form back = form_from_json(form_to_json(b));
    CHECK((back - b).max_abs() == 0.0);
  }

  // schema check: the terms carry idx/num/den fields
  json j = form_to_json(su3::standard_omega());
  CHECK(j["dim"] == 6);
  CHECK(j["degree"] == 2);
  CHECK(j["terms"].size() == 3);
  CHECK(j["terms"][0].contains("idx"));
  CHECK(j["terms"][0].contains("num"));
  CHECK(j["terms"][0].contains("den"));
}

TEST_CASE("structure round trips recompute the derived fields") {
  reseed(51);
  auto s = testsup::random_pulled_su3();
  auto s2 = su3_from_json(su3_to_json(s));
  CHECK(s2.omega == s.omega);
  CHECK(s2.re_omega == s.re_omega);
  CHECK(s2.im_omega == s.im_omega);  // recomputed, must agree
  CHECK(s2.metric.matrix() == s.metric.matrix());

  auto d = random_spin7();
  auto d2 = spin7_from_json(spin7_to_json(d));
  CHECK(d2.p == d.p);
  CHECK(d2.q == d.q);
  CHECK(d2.r == d.r);
  CHECK(d2.eta == d.eta);
  CHECK(d2.theta == d.theta);
  CHECK(spin7::assemble_phi(d2) == spin7::assemble_phi(d));

  auto jp = random_jet();
  auto jp2 = jet_from_json(jet_to_json(jp));
  CHECK(jp2.d_omega == jp.d_omega);
  CHECK(jp2.dq == jp.dq);
  auto r1 = spin7::torsion_residuals(jp);
  auto r2 = spin7::torsion_residuals(jp2);
  CHECK(r1.res_d == r2.res_d);
}

TEST_CASE("malformed payloads raise data errors") {
  CHECK_THROWS_AS(form_from_json(json{{"dim", 6}}), malformed_input);
  CHECK_THROWS_AS(scalar_from_json(json{{"num", 1}, {"den", 0}}),
                  malformed_input);
  json bad = form_to_json(su3::standard_omega());
  bad["terms"][0]["idx"] = json::array({1, 9});
  CHECK_THROWS_AS(form_from_json(bad), malformed_input);
  CHECK_THROWS_AS(load_file("/nonexistent/nowhere.json"), malformed_input);
}

TEST_CASE("lattice and grid field payloads") {
  topo::IntersectionLattice L;
  L.rank = 3;
  L.Q.assign(3, std::vector<mpq_class>(3, 0));
  L.Q[0][0] = mpq_class(1, 3);
  L.Q[1][1] = -1;
  L.Q[2][2] = -1;
  L.labels = {"E", "D1", "D2"};
  auto L2 = lattice_from_json(lattice_to_json(L));
  CHECK(L2.rank == 3);
  CHECK(L2.Q[0][0] == mpq_class(1, 3));
  CHECK(L2.labels == L.labels);

  grid::GridChart c{6, 8, 1.0, {1, 2}};
  grid::GridField f = grid::make_field(
      c, 1, [](const std::array<double, 8>& x, Mask m) {
        return std::sin(x[0] + double(m));
      });
  auto f2 = gridfield_from_json(gridfield_to_json(f));
  CHECK(f2.data() == f.data());

  std::ostringstream os;
  gridfield_to_csv(f, os);
  CHECK(os.str().substr(0, 22) == "point,component,value\n");
}

TEST_CASE("torsion report payload carries norms and optional components") {
  reseed(52);
  auto tr = spin7::torsion_residuals(random_jet());
  json lite = torsion_report_to_json(tr, false);
  CHECK(lite.contains("norms"));
  CHECK(!lite.contains("res_b"));
  json full = torsion_report_to_json(tr, true);
  CHECK(full.contains("res_b"));
  CHECK(form_from_json(full["res_b"]) == tr.res_b);
}
