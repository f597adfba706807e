#include <doctest.h>

#include <random>

#include "cayley/models.hpp"
#include "test_support.hpp"

using namespace cayley;
using namespace cayley::geom;

namespace {

std::array<double, 6> random_link_point(std::mt19937_64& g) {
  std::normal_distribution<double> nd;
  std::array<double, 6> x{};
  double n = 0;
  do {
    for (auto& v : x) v = nd(g);
    n = 0;
    for (auto v : x) n += v * v;
  } while (n < 1e-3);
  n = std::sqrt(n);
  for (auto& v : x) v /= n;
  return x;
}

}  // namespace

TEST_CASE("round link structure: residuals vanish at sample points") {
  SasakiEinsteinModel m;
  std::mt19937_64 g(5);
  double worst = 0;
  for (int i = 0; i < 120; ++i) {
    auto r = se_structure_check(m, random_link_point(g));
    worst = std::max({worst, r.r1, r.r2, r.r3});
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("perturbed and swapped structures fail loudly") {
  std::array<double, 6> x{1, 0, 0, 0, 0, 0};
  SasakiEinsteinModel pm;
  pm.eta_scale = 1.1;
  auto rp = se_structure_check(pm, x);
  CHECK(rp.r1 > 0.01);  // ~ 2 delta |w1|

  SasakiEinsteinModel sm;
  sm.swap23 = true;
  auto rs = se_structure_check(sm, x);
  CHECK(rs.r2 > 0.01);
  CHECK(rs.r3 > 0.01);
}

TEST_CASE("chart domain guards") {
  SasakiEinsteinModel m;
  std::array<double, 6> tiny{1e-3, 0, 0, 0, 0, 0};
  CHECK_THROWS_AS(m.eval(tiny), patch_domain);
  std::array<double, 6> far{3, 0, 0, 0, 0, 0};
  CHECK_THROWS_AS(m.eval(far), patch_domain);
}

TEST_CASE("cone closure and the flat slice") {
  SasakiEinsteinModel m;
  std::mt19937_64 g(6);
  double worst = 0;
  for (int i = 0; i < 40; ++i) {
    auto x = random_link_point(g);
    double r = 0.8 + 0.4 * (i % 5) / 4.0;
    auto ce = cone_structure(m, x, r);
    worst = std::max({worst, ce.d_omega_norm, ce.d_re_norm, ce.d_im_norm});
  }
  CHECK(worst <= 1e-9);

  // broken input leaves visible residuals
  SasakiEinsteinModel pm;
  pm.eta_scale = 1.2;
  auto ce = cone_structure(pm, {1, 0, 0, 0, 0, 0}, 1.0);
  CHECK(ce.d_omega_norm + ce.d_re_norm + ce.d_im_norm > 0.01);

  // the unit slice is the flat model: passes make_su3 with a tiny
  // Monge-Ampere defect and the euclidean metric
  auto x = random_link_point(g);
  auto c1 = cone_structure(m, x, 1.0);
  auto s = su3::make_su3(c1.omega_c, c1.re_c);
  CHECK(std::fabs(s.monge_ampere_defect().to_double()) <= 1e-10);
  double metric_err = 0;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      metric_err = std::max(metric_err,
                            std::fabs(s.metric.matrix()(i, j).to_double() -
                                      (i == j ? 1.0 : 0.0)));
  CHECK(metric_err <= 1e-10);
}

TEST_CASE("fibration model metric") {
  AT2CModel unit{Scalar(1), Scalar(1), Scalar(1), Scalar(0)};
  Metric g = at2c_metric(unit, Mat::identity(6));
  CHECK(g.matrix() == Mat::identity(8));

  // vertical block scales by eps^2; horizontal by (p0 q0)^{1/2}
  AT2CModel m{Scalar(1, 2), Scalar(4), Scalar(1), Scalar(0)};
  Metric g2 = at2c_metric(m, Mat::identity(6));
  CHECK(g2.matrix()(6, 6) == Scalar(1, 2));            // (1/4) * p^{1/2}
  CHECK(g2.matrix()(0, 0) == Scalar(2));
  CHECK(g2.matrix()(6, 7).is_zero());

  // eps -> 0: vertical block drops, horizontal limit is the scaled cone
  AT2CModel m3{Scalar(1, 1000), Scalar(4), Scalar(1), Scalar(1, 3)};
  Metric g3 = at2c_metric(m3, Mat::identity(6));
  CHECK(g3.matrix()(6, 6).to_double() < 1e-5);
  CHECK(g3.matrix()(0, 0) == Scalar(2));

  CHECK_THROWS_AS(at2c_metric(AT2CModel{Scalar(0), Scalar(1), Scalar(1),
                                        Scalar(0)},
                              Mat::identity(6)),
                  su3::indefinite_metric);
}

TEST_CASE("volume growth exponent sits at six") {
  testsup::reseed(41);
  for (int t = 0; t < 10; ++t) {
    auto [p, q, r] = testsup::random_pqr();
    AT2CModel m{testsup::rational(1, 3).abs() + Scalar(1, 4), p, q, r};
    double e = volume_growth_exponent(m);
    CHECK(e > 5.9);
    CHECK(e < 6.1);
  }
}
