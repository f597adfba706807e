#include <doctest.h>

#include "test_support.hpp"

using namespace cayley;
using namespace cayley::su3;
using testsup::random_form;
using testsup::random_glplus;
using testsup::random_pulled_su3;
using testsup::reseed;

namespace {

Vec basis_vec(int i) {
  Vec v(6, Scalar(0));
  v[std::size_t(i)] = Scalar(1);
  return v;
}

Vec jvec(const SU3Structure& s, const Vec& x) {
  Vec r(6, Scalar(0));
  for (int i = 0; i < 6; ++i) {
    Scalar acc(0);
    for (int k = 0; k < 6; ++k) acc += s.J(i, k) * x[std::size_t(k)];
    r[std::size_t(i)] = acc;
  }
  return r;
}

/// The twelve contraction / star-table identities, checked exactly.
/// Conventions: J acts on forms by precomposition in every slot, so on a
/// 1-form (J gamma)(v) = gamma(Jv).
void check_identities(const SU3Structure& s) {
  Form om2 = wedge(s.omega, s.omega);
  for (int k = 0; k < 6; ++k) {
    Vec X = basis_vec(k);
    Form Xf = s.metric.flat(X);
    Form JXf = s.j1(Xf);
    Vec JX = jvec(s, X);

    // (1) X -| w = -J(X^flat)
    CHECK(interior(X, s.omega) == -JXf);
    // (2) X -| Im = -(JX) -| Re
    CHECK(interior(X, s.im_omega) == -interior(JX, s.re_omega));
    // (3) (X -| Re) ^ w = J(X^flat) ^ Re = X^flat ^ Im
    Form c3 = wedge(interior(X, s.re_omega), s.omega);
    CHECK(c3 == wedge(JXf, s.re_omega));
    CHECK(c3 == wedge(Xf, s.im_omega));
    // (4) (X -| Re) ^ Re = X^flat ^ w^2
    CHECK(wedge(interior(X, s.re_omega), s.re_omega) == wedge(Xf, om2));
    // (5) (X -| Re) ^ Im = -J(X^flat) ^ w^2
    CHECK(wedge(interior(X, s.re_omega), s.im_omega) == wedge(-JXf, om2));
  }

  Form gamma = random_form(6, 1);
  // (6) star g = -1/2 J(g) ^ w^2
  CHECK(s.star(gamma) == wedge(s.j1(gamma).scaled(Scalar(-1, 2)), om2));
  // (7) star w = w^2 / 2
  CHECK(s.star(s.omega) == om2.scaled(Scalar(1, 2)));
  // (8) star(X -| Re) = X^flat ^ Im
  {
    Vec X = basis_vec(1);
    CHECK(s.star(interior(X, s.re_omega)) ==
          wedge(s.metric.flat(X), s.im_omega));
  }
  // (9) star(t8 ^ w) = -t8 on the primitive (1,1) block
  {
    TypeSplit2 t = project2(random_form(6, 2), s);
    CHECK(s.star(wedge(t.p8, s.omega)) == -t.p8);
  }
  // (10) star s12 = J s12 on the 12-dimensional block (J slotwise)
  {
    TypeSplit3 t = project3(random_form(6, 3), s);
    CHECK(s.star(t.p12) == s.j(t.p12));
  }
  // (11) star(g ^ w) = -J(g) ^ w = -J(g ^ w)
  CHECK(s.star(wedge(gamma, s.omega)) == wedge(-s.j1(gamma), s.omega));
  CHECK(s.star(wedge(gamma, s.omega)) == -s.j(wedge(gamma, s.omega)));
  // (12) star Re = Im, star Im = -Re
  CHECK(s.star(s.re_omega) == s.im_omega);
  CHECK(s.star(s.im_omega) == -s.re_omega);
}

}  // namespace

TEST_CASE("standard structure and its derived data") {
  SU3Structure s = standard_su3();
  CHECK(s.im_omega == standard_im_omega());
  CHECK(s.metric.matrix() == Mat::identity(6));
  CHECK(s.lambda == Scalar(-4));
  CHECK(s.monge_ampere_defect().is_zero());
  CHECK(s.vol == Form::basis(6, {1, 2, 3, 4, 5, 6}));
  // J e1 = e2
  CHECK(s.J(1, 0) == Scalar(1));
}

TEST_CASE("identity battery on the standard and pulled-back structures") {
  reseed(10);
  check_identities(standard_su3());
  for (int t = 0; t < 25; ++t) check_identities(random_pulled_su3());
}

TEST_CASE("make_su3 rejects bad input") {
  CHECK_THROWS_AS(make_su3(standard_omega(), Form::basis(6, {1, 2, 3})),
                  not_stable);  // lambda(e123) = 0
  // incompatible pair: omega ^ re != 0
  Form bad = standard_re_omega() + Form::basis(6, {3, 4, 5});
  CHECK_THROWS_AS(make_su3(standard_omega(), bad), incompatible);
  // degenerate omega
  CHECK_THROWS_AS(make_su3(Form::basis(6, {1, 2}), standard_re_omega()),
                  incompatible);
}

TEST_CASE("make_su3 equivariance under GL+") {
  reseed(11);
  for (int t = 0; t < 10; ++t) {
    Mat A = random_glplus(6);
    SU3Structure s = make_su3(pullback(A, standard_omega()),
                              pullback(A, standard_re_omega()));
    CHECK(s.im_omega == pullback(A, standard_im_omega()));
    CHECK(s.monge_ampere_defect() == Scalar(0) * Scalar(1));
    CHECK(s.metric.matrix().is_positive_definite());
  }
}

TEST_CASE("monge-ampere normalization flag") {
  SU3Structure s = make_su3(standard_omega(),
                            standard_re_omega().scaled(Scalar(9, 4)), true);
  CHECK(s.monge_ampere_defect().is_zero());
  // scale (9/4) -> sqrt back to 3/2 applied; defect without normalize:
  SU3Structure raw = make_su3(standard_omega(),
                              standard_re_omega().scaled(Scalar(9, 4)));
  CHECK(!raw.monge_ampere_defect().is_zero());
}

TEST_CASE("hitchin dual anchors") {
  HitchinDual h = hitchin_dual(standard_re_omega());
  CHECK(h.psi_hat == standard_im_omega());
  CHECK(h.lambda == Scalar(-4));

  // degree-1 homogeneity of the dual form, quartic for lambda
  HitchinDual h2 = hitchin_dual(standard_re_omega().scaled(Scalar(2)));
  CHECK(h2.psi_hat == standard_im_omega().scaled(Scalar(2)));
  CHECK(h2.lambda == Scalar(-64));
  CHECK(h2.J == h.J);

  CHECK_THROWS_AS(hitchin_dual(Form::basis(6, {1, 2, 3})), not_stable);
}

TEST_CASE("hitchin equivariance, exact and float") {
  reseed(12);
  for (int t = 0; t < 10; ++t) {
    Mat A = random_glplus(6);
    HitchinDual h = hitchin_dual(pullback(A, standard_re_omega()));
    CHECK(h.psi_hat == pullback(A, standard_im_omega()));
    // J transforms by conjugation
    CHECK(h.J * A.inverse() == A.inverse() * standard_su3().J);
  }
  // float path with a non-square -lambda
  Mat A = Mat::identity(6);
  A(0, 0) = Scalar(1.25);
  A(2, 3) = Scalar(0.5);
  Form psi = pullback(A, standard_re_omega()).to_float();
  HitchinDual h = hitchin_dual(psi);
  Form want = pullback(A, standard_im_omega()).to_float();
  CHECK((h.psi_hat - want).max_abs() < 1e-12);
}

TEST_CASE("type projections: idempotent, orthogonal, defining equations") {
  reseed(13);
  SU3Structure s = standard_su3();
  Form om2 = wedge(s.omega, s.omega);

  // anchors
  TypeSplit2 t0 = project2(s.omega, s);
  CHECK(t0.p1 == s.omega);
  CHECK(t0.p6.is_zero());
  CHECK(t0.p8.is_zero());

  Vec e1 = basis_vec(0);
  TypeSplit2 t1 = project2(interior(e1, s.re_omega), s);
  CHECK(t1.p1.is_zero());
  CHECK(t1.p6 == interior(e1, s.re_omega));
  CHECK(t1.p8.is_zero());

  Form beta = Form::basis(6, {1, 2}) - Form::basis(6, {3, 4});
  TypeSplit2 t2 = project2(beta, s);
  CHECK(t2.p8 == beta);
  CHECK(wedge(beta, om2).is_zero());
  CHECK(wedge(beta, s.re_omega).is_zero());

  for (int t = 0; t < 15; ++t) {
    SU3Structure sr = random_pulled_su3();
    Form b = random_form(6, 2);
    TypeSplit2 ts = project2(b, sr);
    CHECK(ts.sum() == b);
    CHECK(sr.inner(ts.p1, ts.p6).is_zero());
    CHECK(sr.inner(ts.p1, ts.p8).is_zero());
    CHECK(sr.inner(ts.p6, ts.p8).is_zero());
    CHECK(wedge(ts.p8, wedge(sr.omega, sr.omega)).is_zero());
    CHECK(wedge(ts.p8, sr.re_omega).is_zero());
    // idempotent
    TypeSplit2 twice = project2(ts.p6, sr);
    CHECK(twice.p6 == ts.p6);
    CHECK(twice.p1.is_zero());
    CHECK(twice.p8.is_zero());

    Form g = random_form(6, 3);
    TypeSplit3 t3 = project3(g, sr);
    CHECK(t3.sum() == g);
    CHECK(sr.inner(t3.p6, t3.p11).is_zero());
    CHECK(sr.inner(t3.p6, t3.p12).is_zero());
    CHECK(sr.inner(t3.p11, t3.p12).is_zero());
    CHECK(wedge(t3.p12, sr.omega).is_zero());
    CHECK(wedge(t3.p12, sr.re_omega).is_zero());
    CHECK(wedge(t3.p12, sr.im_omega).is_zero());
    TypeSplit3 tw = project3(t3.p12, sr);
    CHECK(tw.p12 == t3.p12);
  }
}

TEST_CASE("hitchin linearization anchors and central differences") {
  SU3Structure s = standard_su3();
  CHECK(hitchin_linearization(s.re_omega, s) == s.im_omega);

  reseed(14);
  // rho in the 12-block maps to -star rho... with our slotwise-J star table
  // star s12 = J s12, and the derivative acts as -star there.
  for (int t = 0; t < 5; ++t) {
    TypeSplit3 t3 = project3(random_form(6, 3), s);
    CHECK(hitchin_linearization(t3.p12, s) == -s.star(t3.p12));
  }

  // central-difference oracle at h = 1e-5
  for (int t = 0; t < 8; ++t) {
    Form rho = random_form(6, 3).to_float();
    double h = 1e-5;
    Form base = standard_re_omega().to_float();
    Form up = base + rho.scaled(Scalar(h));
    Form dn = base - rho.scaled(Scalar(h));
    Form fd = (hitchin_dual(up).psi_hat - hitchin_dual(dn).psi_hat)
                  .scaled(Scalar(1.0 / (2 * h)));
    Form lin = hitchin_linearization(rho, s);
    double rel = (fd - lin).max_abs() / (1.0 + lin.max_abs());
    CHECK(rel < 1e-6);
  }
}

TEST_CASE("curl against the contraction identities") {
  SU3Structure s = standard_su3();
  CHECK(curl_from(Form(6, 2), s).is_zero());

  reseed(15);
  // vanishes on the primitive (1,1) block
  for (int t = 0; t < 10; ++t) {
    TypeSplit2 ts = project2(random_form(6, 2), s);
    CHECK(curl_from(ts.p8, s).is_zero());
  }
  // dgamma = e1 -| Re: the (4)-identity makes this star(e1^flat ^ w^2) = 2 e2
  Vec e1 = basis_vec(0);
  CHECK(curl_from(interior(e1, s.re_omega), s) == Form::basis(6, {2}, Scalar(2)));
}

TEST_CASE("torsion classes: anchors and exact round trip") {
  SU3Structure s = standard_su3();
  SU3Jet zero{Form(6, 3), Form(6, 4), Form(6, 4)};
  TorsionClasses w0 = torsion_classes(zero, s);
  CHECK(w0.w1.is_zero());
  CHECK(w0.w1h.is_zero());
  CHECK(w0.w2.is_zero());
  CHECK(w0.w2h.is_zero());
  CHECK(w0.w3.is_zero());
  CHECK(w0.w4.is_zero());
  CHECK(w0.w5.is_zero());

  // d w = 3 Re: w1 = 1, everything else zero
  SU3Jet j1{standard_re_omega().scaled(Scalar(3)),
            Form(6, 4),
            wedge(standard_omega(), standard_omega()).scaled(Scalar(-2))};
  TorsionClasses w1 = torsion_classes(j1, s);
  CHECK(w1.w1 == Scalar(1));
  CHECK(w1.w1h.is_zero());
  CHECK(w1.w3.is_zero());
  CHECK(w1.w4.is_zero());
  CHECK(w1.w5.is_zero());

  reseed(16);
  for (int t = 0; t < 10; ++t) {
    SU3Structure sr = random_pulled_su3();
    TorsionClasses in;
    in.w1 = testsup::rational();
    in.w1h = testsup::rational();
    in.w2 = project2(random_form(6, 2), sr).p8;
    in.w2h = project2(random_form(6, 2), sr).p8;
    in.w3 = project3(random_form(6, 3), sr).p12;
    in.w4 = random_form(6, 1);
    in.w5 = random_form(6, 1);
    SU3Jet jet = reconstruct_jet(in, sr);
    TorsionClasses out = torsion_classes(jet, sr);
    CHECK(out.w1 == in.w1);
    CHECK(out.w1h == in.w1h);
    CHECK(out.w2 == in.w2);
    CHECK(out.w2h == in.w2h);
    CHECK(out.w3 == in.w3);
    CHECK(out.w4 == in.w4);
    CHECK(out.w5 == in.w5);
  }
}

TEST_CASE("torsion classes: inconsistent free jets are rejected") {
  SU3Structure s = standard_su3();
  reseed(17);
  // a generic free jet breaks the shared-class constraints
  SU3Jet jet{random_form(6, 3), random_form(6, 4), random_form(6, 4)};
  CHECK_THROWS_AS(torsion_classes(jet, s), decomposition_inconsistent);
}

TEST_CASE("lemma-level star consistency of the dual pair") {
  // star Re = Im holds for every pulled-back structure, exactly
  reseed(18);
  for (int t = 0; t < 10; ++t) {
    SU3Structure s = random_pulled_su3();
    CHECK(s.star(s.re_omega) == s.im_omega);
    CHECK(s.star(s.im_omega) == -s.re_omega);
  }
}
