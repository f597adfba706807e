#pragma once

#include "cayley/hodge.hpp"

namespace cayley::su3 {

struct not_stable : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct incompatible : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct indefinite_metric : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct decomposition_inconsistent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Result of the duality map on stable 3-forms: the almost complex structure
/// J, the conjugate form psi_hat (so that psi + i psi_hat is (3,0) for J),
/// and the quartic invariant lambda (negative on the stable orbit).
struct HitchinDual {
  Mat J;
  Form psi_hat;
  Scalar lambda;
};

/// lambda(psi) = (1/6) tr(K^2) where K(v) is the vector with
/// K(v) -| vol0 = (v -| psi) ^ psi and vol0 the oriented basis volume.
Scalar hitchin_lambda(const Form& psi, const Orientation& o = {});
Mat hitchin_K(const Form& psi, const Orientation& o = {});

/// Duality map on stable 3-forms. Signs are pinned so that the standard
/// pair maps Re to Im with J e1 = e2. Stays exact whenever -lambda is a
/// perfect rational square, otherwise switches to the float backend.
HitchinDual hitchin_dual(const Form& psi, const Orientation& o = {},
                         double float_stability_cutoff = 1e-12);

struct SU3Structure {
  Form omega;     // (6,2)
  Form re_omega;  // (6,3)
  // derived
  Mat J;
  Form im_omega;
  Metric metric;
  Form vol;          // omega^3 / 6
  Scalar lambda;     // Hitchin invariant of re_omega
  Orientation orient;

  Scalar monge_ampere_defect() const;  // (1/6) w^3 - (1/4) Re^Im, coefficient
  Form star(const Form& a) const { return metric.star(a, orient); }
  Scalar inner(const Form& a, const Form& b) const { return metric.inner(a, b); }
  /// J on a 1-form: (J g)(v) = g(Jv).
  Form j1(const Form& gamma) const { return apply_endo_all_slots(J, gamma); }
  Form j(const Form& a) const { return apply_endo_all_slots(J, a); }
};

/// Build the structure from (omega, re_omega). Does not rescale; the
/// Monge-Ampere defect is reported and `normalize` scales re_omega to
/// enforce it (degree-1 homogeneity of the duality map makes this sound).
SU3Structure make_su3(const Form& omega, const Form& re_omega,
                      bool normalize = false, const Orientation& o = {});

/// The model pair on R^6: omega0 = e12+e34+e56,
/// Omega0 = (e1+ie2)^(e3+ie4)^(e5+ie6).
SU3Structure standard_su3();
Form standard_omega();
Form standard_re_omega();
Form standard_im_omega();

/// Irreducible pieces of a 2-form: (f*omega, X -| Re, primitive (1,1)).
struct TypeSplit2 {
  Form p1, p6, p8;
  Form sum() const { return p1 + p6 + p8; }
};
/// Irreducible pieces of a 3-form: (gamma ^ omega part, span{Re,Im}, rest).
struct TypeSplit3 {
  Form p6, p11, p12;
  Form sum() const { return p6 + p11 + p12; }
};

TypeSplit2 project2(const Form& beta, const SU3Structure& s);
TypeSplit3 project3(const Form& gamma, const SU3Structure& s);

/// Derivative of the duality map at re_omega in direction rho:
/// star(rho_6 + rho_{1+1}) - star(rho_12).
Form hitchin_linearization(const Form& rho, const SU3Structure& s);

/// curl from a given d(gamma): star(dgamma ^ Re).
Form curl_from(const Form& dgamma, const SU3Structure& s);

/// Lefschetz inversions on a 6-space (metric-free):
/// solve tau ^ omega = four, resp. gamma ^ omega^2 = five.
Form unwedge_omega(const Form& four, const Form& omega);
Form unwedge_omega_sq(const Form& five, const Form& omega);

/// Intrinsic torsion data of a jet (d omega, d Re, d Im):
///   d omega = 3 w1 Re + 3 w1h Im + w3 + w4 ^ omega
///   d Re    = 2 w1h omega^2 + w5 ^ Re + w2 ^ omega
///   d Im    = -2 w1 omega^2 + w5 ^ Im + w2h ^ omega
struct TorsionClasses {
  Scalar w1, w1h;
  Form w2, w2h;  // primitive (1,1)
  Form w3;       // in the 12-dim 3-form component
  Form w4, w5;   // 1-forms
};

struct SU3Jet {
  Form d_omega;  // (6,3)
  Form d_re;     // (6,4)
  Form d_im;     // (6,4)
};

/// Extract the classes; the jet is free, so the shared classes are
/// over-determined. Throws decomposition_inconsistent when the three
/// equations cannot be satisfied by a single class set (exactly on the
/// rational backend, beyond `tol` on floats).
TorsionClasses torsion_classes(const SU3Jet& jet, const SU3Structure& s,
                               double tol = 1e-10);

/// Reassemble the jet a class set encodes (the three displayed equations).
SU3Jet reconstruct_jet(const TorsionClasses& w, const SU3Structure& s);

}  // namespace cayley::su3
