#include "cayley/su3.hpp"

namespace cayley::su3 {

namespace {

Vec basis_vec(int n, int i) {
  Vec v(size_t(n), Scalar(0));
  v[i] = Scalar(1);
  return v;
}

}  // namespace

Mat hitchin_K(const Form& psi, const Orientation& o) {
  if (psi.dim() != 6 || psi.degree() != 3)
    throw dimension_mismatch("hitchin_K: need a 3-form on R^6");
  int n = 6;
  Mat K(n);
  for (int j = 0; j < n; ++j) {
    Form five = wedge(interior(basis_vec(n, j), psi), psi);
    // u -| vol0 = five, vol0 = o.sign * e^{1..6}:
    // u_i = o.sign * (-1)^{i-1} * coeff(five, full \ {i})
    Mask full = (Mask(1) << n) - 1;
    for (int i = 0; i < n; ++i) {
      Scalar c = five.coeff(full ^ (Mask(1) << i));
      if (c.is_zero()) continue;
      if (i & 1) c = -c;
      if (o.sign < 0) c = -c;
      K(i, j) = c;
    }
  }
  return K;
}

Scalar hitchin_lambda(const Form& psi, const Orientation& o) {
  Mat K = hitchin_K(psi, o);
  Mat K2 = K * K;
  Scalar tr(0);
  for (int i = 0; i < 6; ++i) tr += K2(i, i);
  return tr / Scalar(6);
}

HitchinDual hitchin_dual(const Form& psi, const Orientation& o,
                         double float_stability_cutoff) {
  Mat K = hitchin_K(psi, o);
  Mat K2 = K * K;
  Scalar lambda(0);
  for (int i = 0; i < 6; ++i) lambda += K2(i, i);
  lambda /= Scalar(6);

  if (lambda.is_exact()) {
    if (lambda.sign() >= 0) throw not_stable("hitchin_dual: lambda >= 0");
  } else {
    double ns = 0;
    for (auto& [m, c] : psi.terms()) ns += c.to_double() * c.to_double();
    if (lambda.to_double() >= -float_stability_cutoff * ns)
      throw not_stable("hitchin_dual: lambda above float stability cutoff");
  }

  Scalar mu = (-lambda).sqrt();  // exact when possible, else binary64
  // Sign convention pinned at the model point: J e1 = e2 for psi = Re Omega0.
  Mat J = K.scaled(Scalar(-1) / mu);
  // psi_hat(v1,v2,v3) = -psi(J v1, v2, v3)
  Form psi_hat = apply_endo_first_slot(J, psi).scaled(Scalar(-1));
  return {std::move(J), std::move(psi_hat), lambda};
}

Form standard_omega() {
  Form w(6, 2);
  w.set(indices_mask({1, 2}), Scalar(1));
  w.set(indices_mask({3, 4}), Scalar(1));
  w.set(indices_mask({5, 6}), Scalar(1));
  return w;
}

Form standard_re_omega() {
  Form f(6, 3);
  f.set(indices_mask({1, 3, 5}), Scalar(1));
  f.set(indices_mask({1, 4, 6}), Scalar(-1));
  f.set(indices_mask({2, 3, 6}), Scalar(-1));
  f.set(indices_mask({2, 4, 5}), Scalar(-1));
  return f;
}

Form standard_im_omega() {
  Form f(6, 3);
  f.set(indices_mask({1, 3, 6}), Scalar(1));
  f.set(indices_mask({1, 4, 5}), Scalar(1));
  f.set(indices_mask({2, 3, 5}), Scalar(1));
  f.set(indices_mask({2, 4, 6}), Scalar(-1));
  return f;
}

namespace {

bool effectively_zero(const Form& f, double rel_tol, double scale) {
  if (f.is_zero()) return true;
  for (auto& [m, c] : f.terms())
    if (c.is_exact()) return false;  // exact nonzero coefficient
  return f.max_abs() <= rel_tol * scale;
}

}  // namespace

SU3Structure make_su3(const Form& omega, const Form& re_omega, bool normalize,
                      const Orientation& o) {
  if (omega.dim() != 6 || omega.degree() != 2 || re_omega.dim() != 6 ||
      re_omega.degree() != 3)
    throw dimension_mismatch("make_su3: need (6,2) and (6,3) forms");

  Form w3 = wedge(omega, wedge(omega, omega));
  if (w3.is_zero()) throw incompatible("make_su3: omega degenerate");

  // stability first: a non-stable 3-form is the more fundamental failure
  Form re = re_omega;
  HitchinDual hd = hitchin_dual(re, o);

  double scale = (1.0 + omega.max_abs()) * (1.0 + re_omega.max_abs());
  if (!effectively_zero(wedge(omega, re_omega), 1e-9, scale))
    throw incompatible("make_su3: omega ^ re_omega != 0");

  if (normalize) {
    // (1/6) w^3 = (1/4) c^2 Re ^ Im fixes c; degree-1 homogeneity.
    Mask full = (Mask(1) << 6) - 1;
    Scalar target = w3.coeff(full) / Scalar(6);
    Scalar actual = wedge(re, hd.psi_hat).coeff(full) / Scalar(4);
    if (actual.is_zero() || (target / actual).sign() <= 0)
      throw incompatible("make_su3: cannot normalize");
    Scalar c = (target / actual).sqrt();
    re = re.scaled(c);
    hd.psi_hat = hd.psi_hat.scaled(c);
    hd.lambda = hd.lambda * c.pow(4);
  }

  // g(u,v) = omega(u, Jv)
  Mat g(6);
  for (int a = 0; a < 6; ++a) {
    Vec jb(6, Scalar(0));
    for (int b = 0; b < 6; ++b) {
      Vec col(6, Scalar(0));
      for (int d = 0; d < 6; ++d) col[d] = hd.J(d, b);
      g(a, b) = omega({basis_vec(6, a), col});
    }
  }
  if (g.any_float()) {
    // symmetrize away float round-off; the exact path is symmetric already
    Mat gs(6);
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b)
        gs(a, b) = (g(a, b) + g(b, a)) * Scalar(1, 2);
    g = gs;
  }
  Mat jj = hd.J * hd.J;
  for (int i = 0; i < 6; ++i) jj(i, i) += Scalar(1);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (!jj(i, j).is_zero() && jj(i, j).abs().to_double() > 1e-9)
        throw not_stable("make_su3: J^2 != -Id");

  Metric metric{g};
  if (!g.is_positive_definite())
    throw indefinite_metric("make_su3: metric not positive definite");

  SU3Structure s;
  s.omega = omega;
  s.re_omega = re;
  s.J = hd.J;
  s.im_omega = hd.psi_hat;
  s.metric = metric;
  s.vol = w3.scaled(Scalar(1, 6));
  s.lambda = hd.lambda;
  s.orient = o;
  return s;
}

Scalar SU3Structure::monge_ampere_defect() const {
  Mask full = (Mask(1) << 6) - 1;
  Scalar lhs = wedge(omega, wedge(omega, omega)).coeff(full) / Scalar(6);
  Scalar rhs = wedge(re_omega, im_omega).coeff(full) / Scalar(4);
  return lhs - rhs;
}

SU3Structure standard_su3() {
  return make_su3(standard_omega(), standard_re_omega());
}

namespace {

/// g-orthogonal least squares projection of x onto span(basis).
/// Returns coefficients; basis must be linearly independent.
Vec gram_solve(const std::vector<Form>& basis, const Form& x,
               const SU3Structure& s) {
  int m = int(basis.size());
  Mat G(m);
  Vec rhs(size_t(m), Scalar(0));
  for (int i = 0; i < m; ++i) {
    rhs[i] = s.inner(basis[i], x);
    for (int j = 0; j < m; ++j) G(i, j) = s.inner(basis[i], basis[j]);
  }
  return G.solve(rhs);
}

Form combine(const std::vector<Form>& basis, const Vec& c) {
  Form r = Form::zero_like(basis[0]);
  for (size_t i = 0; i < basis.size(); ++i) r += basis[i].scaled(c[i]);
  return r;
}

}  // namespace

TypeSplit2 project2(const Form& beta, const SU3Structure& s) {
  TypeSplit2 t;
  t.p1 = s.omega.scaled(s.inner(beta, s.omega) / s.inner(s.omega, s.omega));
  std::vector<Form> b6;
  for (int i = 0; i < 6; ++i) b6.push_back(interior(basis_vec(6, i), s.re_omega));
  t.p6 = combine(b6, gram_solve(b6, beta, s));
  t.p8 = beta - t.p1 - t.p6;
  return t;
}

TypeSplit3 project3(const Form& gamma, const SU3Structure& s) {
  TypeSplit3 t;
  std::vector<Form> b6;
  for (int i = 0; i < 6; ++i) {
    Form ei(6, 1);
    ei.set(Mask(1) << i, Scalar(1));
    b6.push_back(wedge(ei, s.omega));
  }
  t.p6 = combine(b6, gram_solve(b6, gamma, s));
  std::vector<Form> b11{s.re_omega, s.im_omega};
  t.p11 = combine(b11, gram_solve(b11, gamma, s));
  t.p12 = gamma - t.p6 - t.p11;
  return t;
}

Form hitchin_linearization(const Form& rho, const SU3Structure& s) {
  TypeSplit3 t = project3(rho, s);
  return s.star(t.p6 + t.p11) - s.star(t.p12);
}

Form curl_from(const Form& dgamma, const SU3Structure& s) {
  return s.star(wedge(dgamma, s.re_omega));
}

Form unwedge_omega(const Form& four, const Form& omega) {
  // Invert tau -> tau ^ omega (an iso Lambda^2 -> Lambda^4 on 6-space).
  std::vector<Mask> m2, m4;
  for (Mask m = 0; m < 64; ++m) {
    if (popcount(m) == 2) m2.push_back(m);
    if (popcount(m) == 4) m4.push_back(m);
  }
  int n2 = int(m2.size());
  Mat A(n2);
  for (int j = 0; j < n2; ++j) {
    Form e(6, 2);
    e.set(m2[j], Scalar(1));
    Form w = wedge(e, omega);
    for (int i = 0; i < n2; ++i) A(i, j) = w.coeff(m4[i]);
  }
  Vec rhs(size_t(n2), Scalar(0));
  for (int i = 0; i < n2; ++i) rhs[i] = four.coeff(m4[i]);
  Vec x = A.solve(rhs);
  Form r(6, 2);
  for (int i = 0; i < n2; ++i) r.add(m2[i], x[i]);
  return r;
}

Form unwedge_omega_sq(const Form& five, const Form& omega) {
  // Solve gamma ^ omega^2 = five for the 1-form gamma (Lefschetz, metric-free).
  Form w2 = wedge(omega, omega);
  std::vector<Mask> m1, m5;
  for (Mask m = 0; m < 64; ++m) {
    if (popcount(m) == 1) m1.push_back(m);
    if (popcount(m) == 5) m5.push_back(m);
  }
  Mat A(6);
  for (int j = 0; j < 6; ++j) {
    Form e(6, 1);
    e.set(m1[j], Scalar(1));
    Form w = wedge(e, w2);
    for (int i = 0; i < 6; ++i) A(i, j) = w.coeff(m5[i]);
  }
  Vec rhs(size_t(6), Scalar(0));
  for (int i = 0; i < 6; ++i) rhs[i] = five.coeff(m5[i]);
  Vec x = A.solve(rhs);
  Form r(6, 1);
  for (int i = 0; i < 6; ++i) r.add(m1[i], x[i]);
  return r;
}

namespace {

bool forms_close(const Form& a, const Form& b, double tol) {
  Form d = a - b;
  if (d.is_zero()) return true;
  bool exact = true;
  for (auto& [m, c] : d.terms())
    if (!c.is_exact()) exact = false;
  if (exact) return false;
  double scale = std::max(1.0, std::max(a.max_abs(), b.max_abs()));
  return d.max_abs() <= tol * scale;
}

}  // namespace

TorsionClasses torsion_classes(const SU3Jet& jet, const SU3Structure& s,
                               double tol) {
  TorsionClasses w;
  // d omega = 3 w1 Re + 3 w1h Im + w3 + w4 ^ omega
  TypeSplit3 t3 = project3(jet.d_omega, s);
  w.w1 = s.inner(t3.p11, s.re_omega) / (Scalar(3) * s.inner(s.re_omega, s.re_omega));
  w.w1h = s.inner(t3.p11, s.im_omega) / (Scalar(3) * s.inner(s.im_omega, s.im_omega));
  w.w3 = t3.p12;
  // p6 = w4 ^ omega
  {
    std::vector<Mask> m1, m3;
    for (Mask m = 0; m < 64; ++m) {
      if (popcount(m) == 1) m1.push_back(m);
      if (popcount(m) == 3) m3.push_back(m);
    }
    // least squares via gram on the 6 generators e^i ^ omega
    std::vector<Form> b6;
    for (Mask m : m1) {
      Form e(6, 1);
      e.set(m, Scalar(1));
      b6.push_back(wedge(e, s.omega));
    }
    Mat G(6);
    Vec rhs(size_t(6), Scalar(0));
    for (int i = 0; i < 6; ++i) {
      rhs[i] = s.inner(b6[i], t3.p6);
      for (int j = 0; j < 6; ++j) G(i, j) = s.inner(b6[i], b6[j]);
    }
    Vec x = G.solve(rhs);
    Form w4(6, 1);
    for (int i = 0; i < 6; ++i) w4.add(m1[i], x[i]);
    w.w4 = w4;
  }

  // d Re = 2 w1h' omega^2 + w5 ^ Re + w2 ^ omega
  Form om2 = wedge(s.omega, s.omega);
  Scalar w1h_re = s.inner(jet.d_re, om2) / (Scalar(2) * s.inner(om2, om2));
  // Lambda^4_6 part: gamma ^ Re over gamma in Lambda^1
  auto split4 = [&](const Form& four, const Form& three_anchor) {
    // returns (f, gamma, tau8) with four = 2 f omega^2 + gamma ^ anchor + tau8 ^ omega
    Scalar f = s.inner(four, om2) / (Scalar(2) * s.inner(om2, om2));
    std::vector<Form> b6;
    for (int i = 0; i < 6; ++i) {
      Form e(6, 1);
      e.set(Mask(1) << i, Scalar(1));
      b6.push_back(wedge(e, three_anchor));
    }
    Vec c = gram_solve(b6, four, s);
    Form gamma(6, 1);
    for (int i = 0; i < 6; ++i) gamma.add(Mask(1) << i, c[i]);
    Form rest = four - om2.scaled(Scalar(2) * f) - combine(b6, c);
    Form tau = unwedge_omega(rest, s.omega);
    return std::tuple<Scalar, Form, Form>{f, gamma, tau};
  };

  auto [f_re, w5_re, w2] = split4(jet.d_re, s.re_omega);
  auto [f_im, w5_im, w2h] = split4(jet.d_im, s.im_omega);
  // d Im carries -2 w1 omega^2
  Scalar w1_im = -f_im;

  w.w5 = w5_re;
  w.w2 = w2;
  w.w2h = w2h;

  // shared-class consistency: w1h (d omega vs d Re), w1 (d omega vs d Im),
  // w5 (d Re vs d Im)
  bool consistent = true;
  if (w.w1.is_exact() && w1_im.is_exact() && w.w1h.is_exact() && w1h_re.is_exact()) {
    consistent = (w.w1 == w1_im) && (w.w1h == w1h_re) && forms_close(w5_re, w5_im, 0);
  } else {
    double sc = 1.0 + jet.d_re.max_abs() + jet.d_im.max_abs() + jet.d_omega.max_abs();
    consistent = std::fabs((w.w1 - w1_im).to_double()) <= tol * sc &&
                 std::fabs((w.w1h - w1h_re).to_double()) <= tol * sc &&
                 forms_close(w5_re, w5_im, tol);
  }
  if (!consistent)
    throw decomposition_inconsistent("torsion_classes: jet does not match a single class set");

  SU3Jet back = reconstruct_jet(w, s);
  if (!forms_close(back.d_omega, jet.d_omega, tol) ||
      !forms_close(back.d_re, jet.d_re, tol) ||
      !forms_close(back.d_im, jet.d_im, tol))
    throw decomposition_inconsistent("torsion_classes: reconstruction mismatch");

  return w;
}

SU3Jet reconstruct_jet(const TorsionClasses& w, const SU3Structure& s) {
  SU3Jet j;
  Form om2 = wedge(s.omega, s.omega);
  j.d_omega = s.re_omega.scaled(Scalar(3) * w.w1) +
              s.im_omega.scaled(Scalar(3) * w.w1h) + w.w3 + wedge(w.w4, s.omega);
  j.d_re = om2.scaled(Scalar(2) * w.w1h) + wedge(w.w5, s.re_omega) +
           wedge(w.w2, s.omega);
  j.d_im = om2.scaled(Scalar(-2) * w.w1) + wedge(w.w5, s.im_omega) +
           wedge(w.w2h, s.omega);
  return j;
}

}  // namespace cayley::su3
