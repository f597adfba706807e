#pragma once

#include "cayley/su3.hpp"

namespace cayley::geom {

struct patch_domain : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The round 5-sphere structure in ambient homogeneous coordinates on
/// R^6 \ {0} = C^3 \ {0} (pairs (1,2), (3,4), (5,6) are the complex axes):
/// all forms are scale-invariant representatives of forms on the link, with
/// closed-form exterior derivatives. Perturbation knobs deliberately break
/// the structure equations for negative tests.
struct SasakiEinsteinModel {
  double eta_scale = 1.0;  // eta |-> (1+delta) eta, with d eta scaled too
  bool swap23 = false;     // swap omega_2 and omega_3
  double degenerate_margin = 1e-2;
  double patch_halfwidth = 0.5;  // accepted band |r-1| < halfwidth

  struct Eval {
    Form eta;                // (6,1)
    Form w1, w2, w3;         // (6,2)
    Form deta;               // (6,2)
    Form dw2, dw3;           // (6,3)
  };
  Eval eval(const std::array<double, 6>& x) const;
};

struct SEResiduals {
  double r1;  // || d eta - 2 w1 ||
  double r2;  // || d w2 + 3 eta ^ w3 ||
  double r3;  // || d w3 - 3 eta ^ w2 ||
};

SEResiduals se_structure_check(const SasakiEinsteinModel& m,
                               const std::array<double, 6>& x);

/// Cone forms at radius r over the link point x/|x|:
///   w_C = r dr ^ eta + r^2 w1,  Omega_C = r^2 (dr + i r eta) ^ (w2 + i w3),
/// plus the norms of d w_C, d Re Omega_C, d Im Omega_C computed from the
/// model's analytic derivatives.
struct ConeEval {
  Form omega_c;          // (6,2)
  Form re_c, im_c;       // (6,3)
  double d_omega_norm;
  double d_re_norm, d_im_norm;
};

ConeEval cone_structure(const SasakiEinsteinModel& m,
                        const std::array<double, 6>& x, double r);

/// Asymptotic fibration model: constant fiber data over a metric cone.
struct AT2CModel {
  Scalar eps, p0, q0, r0;
  void validate() const;
};

/// Model metric at a point, in the adapted coframe (e7, e8 vertical,
/// horizontal block the cone metric scaled by (p0 q0)^{1/2}).
Metric at2c_metric(const AT2CModel& m, const Mat& cone_metric6);

/// Analytic ball-volume integration V(R) over the fit window, then the
/// log-log slope. The fibers contribute a constant factor.
double volume_growth_exponent(const AT2CModel& m, double r_lo = 10.0,
                              double r_hi = 1000.0, int samples = 24);

}  // namespace cayley::geom
