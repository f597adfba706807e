#include "cayley/spin7.hpp"

namespace cayley::spin7 {

namespace {

Form e8basis(int i) {  // 1-based
  Form f(8, 1);
  f.set(Mask(1) << (i - 1), Scalar(1));
  return f;
}

Form drop_to6(const Form& f8) {
  Form r(6, f8.degree());
  for (auto& [m, c] : f8.terms()) r.set(m, c);
  return r;
}

double norm_of(const Form& f, const Metric& g) {
  Scalar n2 = g.inner(f, f);
  return std::sqrt(std::max(0.0, n2.to_double()));
}

}  // namespace

Spin7Data make_spin7(su3::SU3Structure s, Form eta, Form theta, Scalar p,
                     Scalar q, Scalar r) {
  if (p.sign() <= 0 || q.sign() <= 0)
    throw non_positive_pq("make_spin7: p and q must be positive");
  if (eta.dim() != 8 || theta.dim() != 8 || eta.degree() != 1 || theta.degree() != 1)
    throw dimension_mismatch("make_spin7: eta, theta must be (8,1)");
  Mask e7 = Mask(1) << 6, e8m = Mask(1) << 7;
  if (!(eta.coeff(e7) == Scalar(1)) || !eta.coeff(e8m).is_zero() ||
      !(theta.coeff(e8m) == Scalar(1)) || !theta.coeff(e7).is_zero())
    throw inconsistent_vertical_data("make_spin7: vertical normalization");
  Spin7Data d{std::move(s), std::move(eta), std::move(theta), p, q, r};
  return d;
}

Spin7Data standard_spin7() {
  return make_spin7(su3::standard_su3(), e8basis(7), e8basis(8), Scalar(1),
                    Scalar(1), Scalar(0));
}

Form assemble_phi(const Spin7Data& d) {
  Form w = d.su3.omega.lifted(8);
  Form re = d.su3.re_omega.lifted(8);
  Form im = d.su3.im_omega.lifted(8);
  Form phi = wedge(d.eta, wedge(d.theta, w));
  phi += wedge(d.eta, re.scaled(d.p));
  phi += wedge(d.theta, re.scaled(d.r) + im.scaled(d.q)).scaled(Scalar(-1));
  phi += wedge(w, w).scaled(d.p * d.q * Scalar(1, 2));
  return phi;
}

Form assemble_phi_frame(const Form& lambda, const Form& mu,
                        const su3::SU3Structure& s) {
  Form w = s.omega.lifted(8);
  Form re = s.re_omega.lifted(8);
  Form im = s.im_omega.lifted(8);
  return wedge(lambda, wedge(mu, w)) + wedge(lambda, re) - wedge(mu, im) +
         wedge(w, w).scaled(Scalar(1, 2));
}

Spin7Data with_epsilon(const Spin7Data& d, const Scalar& eps) {
  Spin7Data r = d;
  r.eta = d.eta.scaled(eps);
  r.theta = d.theta.scaled(eps);
  return r;
}

namespace {

Mat outer_sym(const Form& a, const Form& b, const Scalar& c, int n) {
  Mat m(n);
  Vec av(size_t(n), Scalar(0)), bvv(size_t(n), Scalar(0));
  for (auto& [mask, s] : a.terms()) av[mask_indices(mask)[0] - 1] = s;
  for (auto& [mask, s] : b.terms()) bvv[mask_indices(mask)[0] - 1] = s;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = c * (av[i] * bvv[j] + bvv[i] * av[j]);
  return m;
}

}  // namespace

Metric induced_metric(const Spin7Data& d) {
  // Vertical coefficients come from squaring the orthonormal coframe
  // lambda = g0 eta - l theta, mu = f theta with l = r (pq)^{-3/4}:
  //   eta^2: g0^2 = (p/q^3)^{1/2}
  //   theta^2: l^2 + f^2 = r^2 (pq)^{-3/2} + (q/p^3)^{1/2}
  //   cross: -2 g0 l = -2 r (p q^3)^{-1/2}
  const Scalar &p = d.p, &q = d.q, &r = d.r;
  Scalar c_ee = (p / q.pow(3)).sqrt();
  Scalar c_tt = r * r / ((p * q).pow(3)).sqrt() + (q / p.pow(3)).sqrt();
  Scalar c_et = -(r / (p * q.pow(3)).sqrt());
  Scalar c_h = (p * q).sqrt();

  Mat m(8);
  m = m + outer_sym(d.eta, d.eta, c_ee * Scalar(1, 2), 8);
  m = m + outer_sym(d.theta, d.theta, c_tt * Scalar(1, 2), 8);
  m = m + outer_sym(d.eta, d.theta, c_et, 8);  // -2 c eta.theta = c (full outer)
  const Mat& g6 = d.su3.metric.matrix();
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) m(i, j) += c_h * g6(i, j);
  Metric g{m};
  if (!m.is_positive_definite())
    throw su3::indefinite_metric("induced_metric: not positive definite");
  return g;
}

Metric induced_metric_frame(const Spin7Data& d) {
  const Scalar &p = d.p, &q = d.q, &r = d.r;
  // f = q^{1/4} p^{-3/4}, g0 = p^{1/4} q^{-3/4}, l = r (pq)^{-3/4}
  Scalar f = (q / p.pow(3)).root(4);
  Scalar g0 = (p / q.pow(3)).root(4);
  Scalar l = r / ((p * q).pow(3)).root(4);
  Form lambda = d.eta.scaled(g0) - d.theta.scaled(l);
  Form mu = d.theta.scaled(f);
  Mat m(8);
  m = m + outer_sym(lambda, lambda, Scalar(1, 2), 8);
  m = m + outer_sym(mu, mu, Scalar(1, 2), 8);
  Scalar c_h = (p * q).sqrt();
  const Mat& g6 = d.su3.metric.matrix();
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) m(i, j) += c_h * g6(i, j);
  return Metric{m};
}

Form cayley_volume(const Spin7Data& d) {
  Scalar det6 = d.su3.metric.matrix().det();
  Form v(8, 8);
  v.set((Mask(1) << 8) - 1, d.p * d.q * det6.sqrt());
  return v;
}

Spin7Data recover_data(const Form& phi, const Vec& X, const Vec& Y, double tol) {
  if (phi.dim() != 8 || phi.degree() != 4)
    throw dimension_mismatch("recover_data: need an (8,4) form");
  for (int i = 0; i < 6; ++i)
    if (!X[i].is_zero() || !Y[i].is_zero())
      throw not_invariant_shape("recover_data: X, Y must be vertical");
  // Covectors xi, zeta with xi(X)=1, xi(Y)=0, zeta(X)=0, zeta(Y)=1.
  Mat V(2);
  V(0, 0) = X[6]; V(1, 0) = X[7];
  V(0, 1) = Y[6]; V(1, 1) = Y[7];
  Mat Vi = V.inverse();
  Form xi(8, 1), zeta(8, 1);
  xi.add(Mask(1) << 6, Vi(0, 0));
  xi.add(Mask(1) << 7, Vi(0, 1));
  zeta.add(Mask(1) << 6, Vi(1, 0));
  zeta.add(Mask(1) << 7, Vi(1, 1));

  Form omega8 = interior(Y, interior(X, phi));
  if (!omega8.horizontal(6))
    throw not_invariant_shape("recover_data: Y -| X -| Phi not horizontal");
  Form omega6 = drop_to6(omega8);
  Form om3 = wedge(omega6, wedge(omega6, omega6));
  if (om3.is_zero()) throw not_invariant_shape("recover_data: omega degenerate");

  // B = X -| Phi = zeta ^ omega + theta_h ^ omega + p Re
  Form B = interior(X, phi);
  Form Bh8 = B - wedge(zeta, omega8);
  if (!Bh8.horizontal(6))
    throw not_invariant_shape("recover_data: vertical residue in X -| Phi");
  Form Bh = drop_to6(Bh8);
  Form theta_h = su3::unwedge_omega_sq(wedge(Bh, omega6), omega6);
  Form pre = Bh - wedge(theta_h, omega6);  // p Re

  Mask full6 = (Mask(1) << 6) - 1;
  Scalar s_vol = om3.coeff(full6) / Scalar(6);
  Scalar lam = su3::hitchin_lambda(pre);
  if (lam.is_exact() ? lam.sign() >= 0 : lam.to_double() >= 0)
    throw su3::not_stable("recover_data: primitive block not stable");
  Scalar p4 = lam / (Scalar(-4) * s_vol * s_vol);
  if (p4.sign() <= 0) throw non_positive_pq("recover_data: p^4 <= 0");
  Scalar p = p4.root(4);
  Form re6 = pre.scaled(Scalar(1) / p);

  su3::SU3Structure s = su3::make_su3(omega6, re6);

  // C = Y -| Phi = -eta ^ omega - (r Re + q Im)
  Form C = interior(Y, phi);
  Form Ch8 = C + wedge(xi, omega8);
  if (!Ch8.horizontal(6))
    throw not_invariant_shape("recover_data: vertical residue in Y -| Phi");
  Form Ch = drop_to6(Ch8);
  Form eta_h = su3::unwedge_omega_sq(wedge(Ch, omega6), omega6).scaled(Scalar(-1));
  Form Qrest = Ch + wedge(eta_h, omega6);  // -(r Re + q Im)

  Scalar W = wedge(s.re_omega, s.im_omega).coeff(full6);
  Scalar q = wedge(Qrest, s.re_omega).coeff(full6) / W;
  Scalar r = -(wedge(Qrest, s.im_omega).coeff(full6)) / W;
  if (q.sign() <= 0) throw non_positive_pq("recover_data: q <= 0");

  Form resid = Qrest + s.re_omega.scaled(r) + s.im_omega.scaled(q);
  double scale = 1.0 + Qrest.max_abs();
  if (resid.max_abs() > tol * scale)
    throw not_invariant_shape("recover_data: primitive block outside span(Re, Im)");

  Spin7Data d = make_spin7(std::move(s), xi + eta_h.lifted(8),
                           zeta + theta_h.lifted(8), p, q, r);

  Form back = assemble_phi(d);
  Form diff = back - phi;
  if (diff.max_abs() > tol * (1.0 + phi.max_abs()))
    throw not_invariant_shape("recover_data: reassembly mismatch");
  return d;
}

JetPoint zero_jet(const Spin7Data& d) {
  return JetPoint{d,          Form(6, 3), Form(6, 4), Form(6, 4), Form(6, 2),
                  Form(6, 2), Form(6, 1), Form(6, 1), Form(6, 1)};
}

TorsionReport torsion_residuals(const JetPoint& j) {
  const auto& s = j.data.su3;
  const Scalar &p = j.data.p, &q = j.data.q, &r = j.data.r;
  Form om2 = wedge(s.omega, s.omega);

  TorsionReport t;
  t.res_a = j.d_omega;
  t.res_b = wedge(j.dp, s.re_omega) + j.d_re.scaled(p) + wedge(j.d_theta, s.omega);
  t.res_c = wedge(j.dr, s.re_omega) + j.d_re.scaled(r) + wedge(j.dq, s.im_omega) +
            j.d_im.scaled(q) + wedge(j.d_eta, s.omega);
  Form dpq = j.dp.scaled(q) + j.dq.scaled(p);
  t.res_d = wedge(j.d_eta, s.re_omega).scaled(p) -
            wedge(j.d_theta, s.re_omega).scaled(r) -
            wedge(j.d_theta, s.im_omega).scaled(q) +
            wedge(dpq.scaled(Scalar(1, 2)), om2);

  Form jrp_pr = s.j1(j.dp.scaled(r) - j.dr.scaled(p));
  t.alpha_theta = (jrp_pr + j.dq.scaled(p * Scalar(1, 2)) -
                   j.dp.scaled(q * Scalar(3, 2)))
                      .scaled(Scalar(1) / (Scalar(2) * q));
  // p alpha_eta = (r + qJ) alpha_theta + J(q dp - p dq) + r dp - p dr
  Form a_eta = t.alpha_theta.scaled(r) + s.j1(t.alpha_theta).scaled(q) +
               s.j1(j.dp.scaled(q) - j.dq.scaled(p)) + j.dp.scaled(r) -
               j.dr.scaled(p);
  t.alpha_eta = a_eta.scaled(Scalar(1) / p);

  t.res36 = wedge(j.d_theta, s.im_omega).scaled(q) +
            wedge((j.dq.scaled(p) - j.dp.scaled(Scalar(3) * q)).scaled(Scalar(1, 4)) +
                      jrp_pr.scaled(Scalar(1, 2)),
                  om2);
  t.res37 = wedge(j.d_eta.scaled(p) - j.d_theta.scaled(r), s.re_omega) +
            wedge(j.d_theta, s.im_omega).scaled(q) +
            wedge(j.dq.scaled(p) - j.dp.scaled(q) + jrp_pr, om2);

  t.norms["a"] = norm_of(t.res_a, s.metric);
  t.norms["b"] = norm_of(t.res_b, s.metric);
  t.norms["c"] = norm_of(t.res_c, s.metric);
  t.norms["d"] = norm_of(t.res_d, s.metric);
  t.norms["eq36"] = norm_of(t.res36, s.metric);
  t.norms["eq37"] = norm_of(t.res37, s.metric);
  return t;
}

bool TorsionReport::all_zero(double tol) const {
  for (auto& [k, v] : norms)
    if (v > tol) return false;
  return true;
}

Scalar dphi_decomposition_defect(const JetPoint& j) {
  const auto& d = j.data;
  const Scalar &p = d.p, &q = d.q, &r = d.r;
  Form w = d.su3.omega.lifted(8), re = d.su3.re_omega.lifted(8),
       im = d.su3.im_omega.lifted(8);
  Form dw = j.d_omega.lifted(8), dre = j.d_re.lifted(8), dim_ = j.d_im.lifted(8);
  Form deta = j.d_eta.lifted(8), dtheta = j.d_theta.lifted(8);
  Form dp = j.dp.lifted(8), dq = j.dq.lifted(8), dr = j.dr.lifted(8);

  Form dphi = wedge(deta, wedge(d.theta, w)) - wedge(d.eta, wedge(dtheta, w)) +
              wedge(d.eta, wedge(d.theta, dw));
  dphi += wedge(deta, re.scaled(p)) -
          wedge(d.eta, wedge(dp, re) + dre.scaled(p));
  dphi += -wedge(dtheta, re.scaled(r) + im.scaled(q)) +
          wedge(d.theta,
                wedge(dr, re) + dre.scaled(r) + wedge(dq, im) + dim_.scaled(q));
  Form dpq8 = dp.scaled(q) + dq.scaled(p);
  dphi += wedge(dpq8.scaled(Scalar(1, 2)), wedge(w, w)) +
          wedge(dw, w).scaled(p * q);

  TorsionReport t = torsion_residuals(j);
  Form comb = wedge(d.eta, wedge(d.theta, t.res_a.lifted(8))) -
              wedge(d.eta, t.res_b.lifted(8)) +
              wedge(d.theta, t.res_c.lifted(8)) + t.res_d.lifted(8) +
              wedge(t.res_a.lifted(8), w).scaled(p * q);

  Form diff = dphi - comb;
  Scalar n2(0);
  for (auto& [m, c] : diff.terms()) n2 += c * c;
  return n2;
}

JetPoint parametrized_jet(const su3::SU3Structure& s, Scalar p, Scalar q,
                          Scalar r, const Form& dtheta8, const Form& deta8,
                          const Form& dp, const Form& dq, const Form& dr) {
  JetPoint j;
  j.data = make_spin7(s, e8basis(7), e8basis(8), p, q, r);
  j.dp = dp;
  j.dq = dq;
  j.dr = dr;
  j.d_omega = Form(6, 3);

  Form jrp_pr = s.j1(dp.scaled(r) - dr.scaled(p));
  Form alpha_theta = (jrp_pr + dq.scaled(p * Scalar(1, 2)) -
                      dp.scaled(q * Scalar(3, 2)))
                         .scaled(Scalar(1) / (Scalar(2) * q));
  Form dpq = dp.scaled(q) + dq.scaled(p);
  // shared torsion 1-form and the second connection form, both forced by the
  // closure equations: w5 = -(dp + alpha_theta)/p and
  // alpha_eta = -dr - J dq - (r + qJ) w5
  Form w5 = (dp + alpha_theta).scaled(Scalar(-1) / p);
  Form alpha_eta = -dr - s.j1(dq) - w5.scaled(r) - s.j1(w5).scaled(q);

  auto embed6 = [&](const Form& alpha) {
    // alpha |-> (J alpha#) -| Re, the Lambda^2_6 slot of the curvatures
    Vec sharp = s.metric.sharp(alpha);
    Vec jsharp(6, Scalar(0));
    for (int i = 0; i < 6; ++i) {
      Scalar acc(0);
      for (int k = 0; k < 6; ++k) acc += s.J(i, k) * sharp[k];
      jsharp[i] = acc;
    }
    return interior(jsharp, s.re_omega);
  };

  j.d_theta = embed6(alpha_theta) + dtheta8;
  j.d_eta = embed6(alpha_eta) + deta8;

  Form w2 = dtheta8.scaled(Scalar(-1) / p);
  Form w2h = (deta8.scaled(p) - dtheta8.scaled(r)).scaled(Scalar(-1) / (p * q));
  j.d_re = wedge(w5, s.re_omega) + wedge(w2, s.omega);
  j.d_im = wedge(w5, s.im_omega) + wedge(w2h, s.omega);
  (void)dpq;
  (void)jrp_pr;
  return j;
}

// ---------------------------------------------------------------------------

AbstractData abstract_data(const Spin7Data& d) {
  AbstractData a;
  a.eta = d.eta;
  a.theta = d.theta;
  a.m1 = d.su3.re_omega.scaled(d.p);
  a.m2 = d.su3.re_omega.scaled(-d.r) + d.su3.im_omega.scaled(-d.q);
  a.omega = d.su3.omega;
  return a;
}

Form abstract_quotient(const Form& m1, const Form& m2, const Form& omega) {
  Mask full6 = (Mask(1) << 6) - 1;
  Scalar w3 = wedge(omega, wedge(omega, omega)).coeff(full6);
  if (w3.is_zero())
    throw inconsistent_vertical_data("abstract_quotient: omega degenerate");
  Scalar f = wedge(m1, m2).coeff(full6);
  // literal division, then the pairing normalization 3/8 pinned by the
  // model-form equality
  Scalar c_lit = Scalar(-2) * f / w3;
  return wedge(omega, omega).scaled(c_lit * Scalar(3, 8));
}

Form abstract_phi(const AbstractData& a) {
  if (!wedge(a.omega, a.m1).is_zero() || !wedge(a.omega, a.m2).is_zero())
    throw inconsistent_vertical_data("abstract_phi: block not primitive against omega");
  Form w8 = a.omega.lifted(8);
  Form phi = wedge(a.eta, wedge(a.theta, w8));
  phi += wedge(a.eta, a.m1.lifted(8)) + wedge(a.theta, a.m2.lifted(8));
  phi += abstract_quotient(a.m1, a.m2, a.omega).lifted(8);
  return phi;
}

AbstractData abstract_basis_change(const AbstractData& t, long a, long b,
                                   long c, long d) {
  if (a * d - b * c != 1)
    throw inconsistent_vertical_data("abstract_basis_change: det != 1");
  AbstractData r = t;
  // new basis (x', y') = (a x + c y, b x + d y); A-components transform by
  // the inverse [d -b; -c a], dual components by the transpose
  r.eta = t.eta.scaled(Scalar(d)) + t.theta.scaled(Scalar(-b));
  r.theta = t.eta.scaled(Scalar(-c)) + t.theta.scaled(Scalar(a));
  r.m1 = t.m1.scaled(Scalar(a)) + t.m2.scaled(Scalar(c));
  r.m2 = t.m1.scaled(Scalar(b)) + t.m2.scaled(Scalar(d));
  return r;
}

AbstractJet abstract_jet(const JetPoint& j) {
  AbstractJet a;
  a.data = abstract_data(j.data);
  a.d_eta = j.d_eta;
  a.d_theta = j.d_theta;
  const auto& s = j.data.su3;
  a.d_m1 = wedge(j.dp, s.re_omega) + j.d_re.scaled(j.data.p);
  a.d_m2 = (wedge(j.dr, s.re_omega) + j.d_re.scaled(j.data.r) +
            wedge(j.dq, s.im_omega) + j.d_im.scaled(j.data.q))
               .scaled(Scalar(-1));
  a.d_omega = j.d_omega;
  a.d_quot = (j.dp.scaled(j.data.q) + j.dq.scaled(j.data.p)).scaled(Scalar(1, 2));
  return a;
}

AbstractReport abstract_torsion_residuals(const AbstractJet& j) {
  const Form& w = j.data.omega;
  AbstractReport r;
  r.res1_x = j.d_m1 + wedge(j.d_theta, w);
  r.res1_y = j.d_m2 - wedge(j.d_eta, w);
  Mask full6 = (Mask(1) << 6) - 1;
  Scalar w3 = wedge(w, wedge(w, w)).coeff(full6);
  Scalar c = Scalar(-2) * wedge(j.data.m1, j.data.m2).coeff(full6) / w3 *
             Scalar(3, 8);
  r.res2 = wedge(j.d_eta, j.data.m1) + wedge(j.d_theta, j.data.m2) +
           wedge(j.d_quot, wedge(w, w)) + wedge(j.d_omega, w).scaled(Scalar(2) * c);
  return r;
}

// ---------------------------------------------------------------------------

Form g2_assemble(const G2Data& d) {
  if (d.p.sign() <= 0) throw non_positive_pq("g2_assemble: p <= 0");
  if (d.theta.dim() != 7 || d.theta.degree() != 1)
    throw dimension_mismatch("g2_assemble: theta must be (7,1)");
  return wedge(d.theta, d.su3.omega.lifted(7)) +
         d.su3.re_omega.lifted(7).scaled(d.p.pow(3));
}

G2Report g2_torsion_residuals(const G2Jet& j) {
  const auto& s = j.data.su3;
  const Scalar& p = j.data.p;
  Form om2 = wedge(s.omega, s.omega);
  G2Report r;
  r.res_a = j.d_omega;
  r.res_b = wedge(j.dp, s.re_omega).scaled(Scalar(3) * p * p) +
            j.d_re.scaled(p.pow(3)) + wedge(j.d_theta, s.omega);
  r.res_c = wedge(j.dp, s.im_omega) + j.d_im.scaled(p);
  r.res_d = wedge(j.dp, om2).scaled(Scalar(2) * p.pow(3)) -
            wedge(j.d_theta, s.im_omega).scaled(p);
  r.norms["a"] = norm_of(r.res_a, s.metric);
  r.norms["b"] = norm_of(r.res_b, s.metric);
  r.norms["c"] = norm_of(r.res_c, s.metric);
  r.norms["d"] = norm_of(r.res_d, s.metric);
  return r;
}

bool G2Report::all_zero(double tol) const {
  for (auto& [k, v] : norms)
    if (v > tol) return false;
  return true;
}

JetPoint g2_jet_to_spin7(const G2Jet& j) {
  JetPoint r;
  const Scalar& p = j.data.p;
  r.data = make_spin7(j.data.su3, e8basis(7), e8basis(8), p.pow(3), p, Scalar(0));
  r.d_omega = j.d_omega;
  r.d_re = j.d_re;
  r.d_im = j.d_im;
  r.d_eta = Form(6, 2);
  r.d_theta = j.d_theta;
  r.dp = j.dp.scaled(Scalar(3) * p * p);  // d(p^3)
  r.dq = j.dp;
  r.dr = Form(6, 1);
  return r;
}

// ---------------------------------------------------------------------------

LinBackward lin_change_forward(const LinForward& v, const Scalar& p0,
                               const Scalar& q0, const Scalar& r0) {
  if (p0.sign() <= 0 || q0.sign() <= 0)
    throw degenerate_constants("lin_change: p0, q0 must be positive");
  LinBackward b;
  b.P = -(v.h + Scalar(3) * v.f) / (Scalar(4) * q0);
  b.Q = -(Scalar(3) * v.h + v.f) / (Scalar(4) * p0);
  b.S = (v.g - v.t) * Scalar(1, 2);
  b.R = -((r0 / (Scalar(4) * q0)) * (v.h + Scalar(3) * v.f) +
          (v.g + v.t) * Scalar(1, 2)) /
        p0;
  b.eta = (v.xi2 + v.xi1.scaled(r0 / q0)).scaled(Scalar(1) / p0);
  b.theta = v.xi1.scaled(Scalar(1) / q0);
  return b;
}

LinForward lin_change_backward(const LinBackward& v, const Scalar& p0,
                               const Scalar& q0, const Scalar& r0) {
  if (p0.sign() <= 0 || q0.sign() <= 0)
    throw degenerate_constants("lin_change: p0, q0 must be positive");
  LinForward f;
  f.f = (p0 * v.Q - Scalar(3) * q0 * v.P) * Scalar(1, 2);
  f.h = (q0 * v.P - Scalar(3) * p0 * v.Q) * Scalar(1, 2);
  f.g = r0 * v.P - p0 * v.R + v.S;
  f.t = r0 * v.P - p0 * v.R - v.S;
  f.xi1 = v.theta.scaled(q0);
  f.xi2 = v.eta.scaled(p0) - v.theta.scaled(r0);
  return f;
}

FramePair rotate_frame(const FramePair& f, const Scalar& cos_t,
                       const Scalar& sin_t) {
  // (lambda, mu) rotates by +t while the complex volume form rotates by -t;
  // the relative sign is what keeps the assembled 4-form fixed.
  FramePair r;
  r.lambda = f.lambda.scaled(cos_t) - f.mu.scaled(sin_t);
  r.mu = f.lambda.scaled(sin_t) + f.mu.scaled(cos_t);
  r.re = f.re.scaled(cos_t) + f.im.scaled(sin_t);
  r.im = f.re.scaled(-sin_t) + f.im.scaled(cos_t);
  return r;
}

}  // namespace cayley::spin7
