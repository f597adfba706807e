#pragma once

#include <map>
#include <string>

#include "cayley/su3.hpp"

namespace cayley::spin7 {

struct not_invariant_shape : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct non_positive_pq : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct inconsistent_vertical_data : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct degenerate_constants : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invariant data behind a T^2-invariant Cayley form: a horizontal
/// SU(3)-structure, connection 1-forms eta, theta on the 8-space
/// (eta(X)=theta(Y)=1, eta(Y)=theta(X)=0 for the vertical pair X=e7*, Y=e8*),
/// and fiber-metric functions p>0, q>0, r.
struct Spin7Data {
  su3::SU3Structure su3;
  Form eta, theta;  // (8,1)
  Scalar p, q, r;
};

Spin7Data make_spin7(su3::SU3Structure s, Form eta, Form theta, Scalar p,
                     Scalar q, Scalar r);
Spin7Data standard_spin7();

/// Phi = eta^theta^w + eta^(p Re) - theta^(r Re + q Im) + (pq/2) w^2.
Form assemble_phi(const Spin7Data& d);

/// Phi from an orthonormal vertical coframe pair:
/// lambda^mu^w + lambda^Re - mu^Im + (1/2) w^2.
Form assemble_phi_frame(const Form& lambda, const Form& mu,
                        const su3::SU3Structure& s);

/// The helper substitution eta -> eps eta, theta -> eps theta.
Spin7Data with_epsilon(const Spin7Data& d, const Scalar& eps);

/// g_Phi = p^{1/2}q^{-3/2} eta^2 + (r^2(pq)^{3/2}+q^{1/2}p^{-3/2}) theta^2
///         - 2rp eta.theta + (pq)^{1/2} g. Exact whenever the square roots
///         are perfect rational squares.
Metric induced_metric(const Spin7Data& d);

/// Same metric from the coframe route: lambda^2 + mu^2 + (pq)^{1/2} g with
/// lambda = g0 eta - l theta, mu = f theta, f = q^{1/4}p^{-3/4},
/// g0 = p^{1/4}q^{-3/4}, l = r (pq)^{3/4}.
Metric induced_metric_frame(const Spin7Data& d);

/// Volume form of g_Phi: pq sqrt(det g6) e^{1..8} (exact route).
Form cayley_volume(const Spin7Data& d);

/// Invert assemble_phi given the vertical pair (X, Y). The interesting
/// failure modes are detected algebraically along the way.
Spin7Data recover_data(const Form& phi, const Vec& X, const Vec& Y,
                       double tol = 1e-10);

/// Pointwise jet: values plus formal first derivatives, all horizontal.
struct JetPoint {
  Spin7Data data;
  Form d_omega;           // (6,3)
  Form d_re, d_im;        // (6,4)
  Form d_eta, d_theta;    // (6,2)
  Form dp, dq, dr;        // (6,1)
};

JetPoint zero_jet(const Spin7Data& d);

/// Residuals of the four closure equations:
///   (a) d w = 0
///   (b) d(p Re) + d theta ^ w = 0
///   (c) d(r Re) + d(q Im) + d eta ^ w = 0
///   (d) d eta ^ p Re - d theta ^ (r Re + q Im) + (1/2) d(pq) ^ w^2 = 0
/// together with the connection 1-form extractions and the two corollary
/// residuals.
struct TorsionReport {
  Form res_a;             // (6,3)
  Form res_b, res_c;      // (6,4)
  Form res_d;             // (6,5)
  Form alpha_eta, alpha_theta;  // (6,1), closed-form expressions
  Form res36, res37;      // (6,5)
  std::map<std::string, double> norms;
  bool all_zero(double tol = 0) const;
};

TorsionReport torsion_residuals(const JetPoint& j);

/// || dPhi - (eta^theta^dw - eta^res_b + theta^res_c + res_d + pq dw^w) ||^2,
/// with dPhi expanded formally from the product expression. Identically zero.
Scalar dphi_decomposition_defect(const JetPoint& j);

/// Jets built from the closed-form parametrization: free primitive (1,1)
/// curvature parts and free dp, dq, dr; everything else determined. The
/// (a)-(d) residuals vanish identically on these.
JetPoint parametrized_jet(const su3::SU3Structure& s, Scalar p, Scalar q,
                          Scalar r, const Form& dtheta8, const Form& deta8,
                          const Form& dp, const Form& dq, const Form& dr);

// ---------------------------------------------------------------------------
// Basis-free formulation: the connection as an R^2-valued 1-form A, the
// 3-form block as an (R^2)*-valued form, and omega carrying the
// vertical-volume weight.

struct AbstractData {
  Form eta, theta;  // components of A (8,1)
  Form m1, m2;      // components of the 3-form block (6,3)
  Form omega;       // (6,2); carried with weight -omega (x (x* ^ y*))
};

AbstractData abstract_data(const Spin7Data& d);

/// Quotient term: the unique multiple of omega^2 matching the paired square
/// of the 3-form block. The pairing normalization is pinned by equality with
/// the explicit Cayley form.
Form abstract_quotient(const Form& m1, const Form& m2, const Form& omega);

Form abstract_phi(const AbstractData& a);

/// Unimodular change of the Lie-algebra basis: [a b; c d] with det 1.
AbstractData abstract_basis_change(const AbstractData& t, long a, long b,
                                   long c, long d);

struct AbstractJet {
  AbstractData data;
  Form d_eta, d_theta;  // (6,2)
  Form d_m1, d_m2;      // (6,4)
  Form d_omega;         // (6,3)
  Form d_quot;          // (6,1): jet of the quotient coefficient
};

AbstractJet abstract_jet(const JetPoint& j);

/// The two structure residuals: (d mho + dA -| omega_breve) as the pair
/// (x*, y*) of 4-forms and the single 5-form equation.
struct AbstractReport {
  Form res1_x, res1_y;  // (6,4)
  Form res2;            // (6,5)
};
AbstractReport abstract_torsion_residuals(const AbstractJet& j);

// ---------------------------------------------------------------------------
// G2 analogue on a 7-space: phi = theta ^ w + p^3 Re.

struct G2Data {
  su3::SU3Structure su3;
  Form theta;  // (7,1)
  Scalar p;
};

Form g2_assemble(const G2Data& d);

struct G2Jet {
  G2Data data;
  Form d_omega;   // (6,3)
  Form d_re, d_im;  // (6,4)
  Form d_theta;   // (6,2)
  Form dp;        // (6,1)
};

/// Residuals of
///   (a) d w = 0
///   (b) d(p^3 Re) + d theta ^ w = 0
///   (c) d(p Im) = 0
///   (d) 2 p^3 dp ^ w^2 - d theta ^ p Im = 0
struct G2Report {
  Form res_a, res_b, res_c, res_d;
  std::map<std::string, double> norms;
  bool all_zero(double tol = 0) const;
};
G2Report g2_torsion_residuals(const G2Jet& j);

/// The matching Spin(7) jet under (p, q, r) = (p^3, p, 0) with flat eta.
JetPoint g2_jet_to_spin7(const G2Jet& j);

// ---------------------------------------------------------------------------
// Linear change of variables used when regrouping the linearized system into
// Dirac form.

struct LinForward {
  Scalar f, g, h, t;
  Form xi1, xi2;  // (6,1)
};
struct LinBackward {
  Scalar P, Q, R, S;
  Form eta, theta;  // (6,1)
};

LinBackward lin_change_forward(const LinForward& v, const Scalar& p0,
                               const Scalar& q0, const Scalar& r0);
LinForward lin_change_backward(const LinBackward& v, const Scalar& p0,
                               const Scalar& q0, const Scalar& r0);

// ---------------------------------------------------------------------------
// The vertical-frame U(1) redundancy: rotates (lambda, mu) and
// (Re, Im) together, leaving the assembled 4-form unchanged.
struct FramePair {
  Form lambda, mu;  // (8,1)
  Form re, im;      // (6,3)
};
FramePair rotate_frame(const FramePair& f, const Scalar& cos_t,
                       const Scalar& sin_t);

}  // namespace cayley::spin7
