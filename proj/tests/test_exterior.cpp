#include <doctest.h>

#include "test_support.hpp"

using namespace cayley;
using testsup::random_form;
using testsup::random_glplus;
using testsup::random_vector;
using testsup::reseed;

TEST_CASE("scalar backends") {
  Scalar a(1, 3), b(2, 5);
  CHECK(a + b == Scalar(11, 15));
  CHECK((a * b).rational() == mpq_class(2, 15));
  CHECK((a + Scalar(0.5)).is_exact() == false);
  CHECK(Scalar(4, 9).exact_sqrt().value() == Scalar(2, 3));
  CHECK(!Scalar(2).exact_sqrt().has_value());
  CHECK(Scalar(16, 81).exact_root(4).value() == Scalar(2, 3));
  CHECK(Scalar(3, 2).pow(-2) == Scalar(4, 9));
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), backend_error);
}

TEST_CASE("wedge basics and the model volume") {
  // e1 ^ e2 wedge e3 = e123
  Form a = wedge(Form::basis(6, {1, 2}), Form::basis(6, {3}));
  CHECK(a == Form::basis(6, {1, 2, 3}));

  // brute-force trinomial: w0^3 = 6 e123456
  Form w0 = su3::standard_omega();
  Form w3 = wedge(w0, wedge(w0, w0));
  CHECK(w3 == Form::basis(6, {1, 2, 3, 4, 5, 6}, Scalar(6)));
}

TEST_CASE("wedge graded commutativity, bilinearity, associativity") {
  reseed(1);
  for (int t = 0; t < 60; ++t) {
    int ka = 1 + t % 3, kb = 1 + (t / 3) % 3;
    Form a = random_form(6, ka), b = random_form(6, kb), c = random_form(6, 1);
    Form ab = wedge(a, b), ba = wedge(b, a);
    if ((ka * kb) % 2 == 1)
      CHECK(ab == -ba);
    else
      CHECK(ab == ba);
    Form a2 = random_form(6, ka);
    CHECK(wedge(a + a2.scaled(Scalar(3)), c) ==
          wedge(a, c) + wedge(a2, c).scaled(Scalar(3)));
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
  }
}

TEST_CASE("interior product: basis case, antiderivation, nilpotency") {
  Vec e1(6, Scalar(0));
  e1[0] = Scalar(1);
  CHECK(interior(e1, Form::basis(6, {1, 2})) == Form::basis(6, {2}));

  reseed(2);
  for (int t = 0; t < 40; ++t) {
    Vec v = random_vector(6);
    Form a = random_form(6, 2), b = random_form(6, 2);
    Form lhs = interior(v, wedge(a, b));
    Form rhs = wedge(interior(v, a), b) + wedge(a, interior(v, b));
    CHECK(lhs == rhs);
    Form c = random_form(6, 3);
    CHECK(interior(v, interior(v, c)).is_zero());
  }
  // contracting a 0-form gives the zero form
  Form scalar(6, 0);
  scalar.set(0, Scalar(5));
  CHECK(interior(e1, scalar).is_zero());
}

TEST_CASE("hodge star on the standard metric") {
  Metric g = Metric::euclidean(6);
  Orientation o;
  Form one(6, 0);
  one.set(0, Scalar(1));
  CHECK(g.star(one, o) == Form::basis(6, {1, 2, 3, 4, 5, 6}));

  Form w0 = su3::standard_omega();
  CHECK(g.star(w0, o) == wedge(w0, w0).scaled(Scalar(1, 2)));
  CHECK(g.star(su3::standard_re_omega(), o) == su3::standard_im_omega());

  reseed(3);
  for (int t = 0; t < 30; ++t) {
    int k = t % 4;
    Form a = random_form(6, k), b = random_form(6, k);
    // star star = (-1)^{k(n-k)}
    Form ss = g.star(g.star(a, o), o);
    if ((k * (6 - k)) % 2 == 1)
      CHECK(ss == -a);
    else
      CHECK(ss == a);
    // a ^ *b = b ^ *a  and  a ^ *a = <a,a> vol
    CHECK(wedge(a, g.star(b, o)) == wedge(b, g.star(a, o)));
    Mask full = (Mask(1) << 6) - 1;
    CHECK(wedge(a, g.star(a, o)).coeff(full) == g.inner(a, a) * g.vol_coeff());
  }
}

TEST_CASE("hodge star on a non-standard metric via the Gram route") {
  reseed(4);
  // g = A^T A stays exact and positive definite
  Mat A = random_glplus(6, 2);
  Mat g = A.transpose() * A;
  Metric m{g};
  m.require_positive_definite();
  Orientation o;
  for (int t = 0; t < 10; ++t) {
    Form a = random_form(6, 2), b = random_form(6, 2);
    Mask full = (Mask(1) << 6) - 1;
    CHECK(wedge(a, m.star(b, o)).coeff(full) == m.inner(a, b) * m.vol_coeff());
    CHECK(wedge(a, m.star(b, o)) == wedge(b, m.star(a, o)));
    Form ss = m.star(m.star(a, o), o);
    CHECK(ss == a);
  }
}

TEST_CASE("pullback: functorial, homogeneous, det identity") {
  Form w0 = su3::standard_omega();
  Mat I = Mat::identity(6);
  CHECK(pullback(I, w0) == w0);

  // diag(c,..,c) on a k-form scales by c^k
  Mat C = I.scaled(Scalar(3, 2));
  CHECK(pullback(C, w0) == w0.scaled(Scalar(9, 4)));

  reseed(5);
  for (int t = 0; t < 20; ++t) {
    Mat A = random_glplus(6), B = random_glplus(6);
    Form a = random_form(6, 2);
    CHECK(pullback(A * B, a) == pullback(B, pullback(A, a)));

    // pullback(A, w0)^3 = det(A) * 6 vol
    Form w = pullback(A, w0);
    Form w3 = wedge(w, wedge(w, w));
    CHECK(w3 == Form::basis(6, {1, 2, 3, 4, 5, 6}, Scalar(6) * A.det()));

    // interior-product compatibility: A*(v -| a) = (A^{-1} v) -| A*(a)
    Vec v = random_vector(6);
    CHECK(pullback(A, interior(v, a)) ==
          interior(A.inverse().apply(v), pullback(A, a)));
  }
  Mat S(6);  // singular
  CHECK_THROWS_AS(pullback(S, w0), singular_matrix);
}

TEST_CASE("musical isomorphisms") {
  Metric g = Metric::euclidean(6);
  Form e1 = Form::basis(6, {1});
  Vec v = g.sharp(e1);
  CHECK(v[0] == Scalar(1));
  CHECK(g.flat(v) == e1);

  Mat d = Mat::identity(6);
  d(0, 0) = Scalar(4);
  Metric g2{d};
  CHECK(g2.sharp(e1)[0] == Scalar(1, 4));

  reseed(6);
  for (int t = 0; t < 20; ++t) {
    Mat A = random_glplus(6);
    Metric gm{A.transpose() * A};
    Form gamma = random_form(6, 1);
    CHECK(gm.flat(gm.sharp(gamma)) == gamma);
  }
}

TEST_CASE("form serialization keys are canonical") {
  Form f(6, 2);
  f.add(indices_mask({1, 2}), Scalar(1));
  f.add(indices_mask({1, 2}), Scalar(-1));
  CHECK(f.is_zero());  // zero coefficients pruned, equality is map equality
  CHECK_THROWS_AS(Form::basis(6, {1, 7}), dimension_mismatch);
}
