#pragma once

#include <array>
#include <functional>
#include <vector>

#include "cayley/su3.hpp"

namespace cayley::grid {

struct chart_mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct not_invariant : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Periodic box [0,L)^n sampled with N points per active axis. Fields are
/// constant along inactive axes (derivatives there vanish identically), so
/// storage is dense only over the active ones.
struct GridChart {
  int dim = 6;                 // ambient exterior-algebra dimension (6 or 8)
  int N = 16;                  // points per active axis, even, >= 4
  double L = 1.0;              // period
  std::vector<int> active;     // 1-based axis ids, sorted

  double h() const { return L / N; }
  std::size_t npoints() const;
  bool operator==(const GridChart& o) const {
    return dim == o.dim && N == o.N && L == o.L && active == o.active;
  }
};

/// Component order for degree-k forms on an n-space: masks ascending.
const std::vector<Mask>& component_masks(int dim, int deg);
int component_rank(int dim, int deg, Mask m);

class GridField {
 public:
  GridField() = default;
  GridField(GridChart chart, int deg);

  const GridChart& chart() const { return chart_; }
  int degree() const { return deg_; }
  int ncomp() const { return int(component_masks(chart_.dim, deg_).size()); }
  std::size_t npoints() const { return chart_.npoints(); }

  double& at(std::size_t pt, int comp) { return a_[pt * ncomp_ + comp]; }
  double at(std::size_t pt, int comp) const { return a_[pt * ncomp_ + comp]; }

  std::vector<double>& data() { return a_; }
  const std::vector<double>& data() const { return a_; }

  /// Coordinates of grid point `pt` (zeros on inactive axes).
  std::array<double, 8> coords(std::size_t pt) const;

  Form form_at(std::size_t pt) const;
  void set_form_at(std::size_t pt, const Form& f);

  GridField operator+(const GridField& o) const;
  GridField operator-(const GridField& o) const;
  GridField scaled(double c) const;

  /// Round every value to a fixed-point lattice (multiples of 2^-bits).
  /// Central differences of such fields are exact in binary64, which makes
  /// stencil-commutator statements bit-exact.
  GridField quantized(int bits = 30) const;

 private:
  GridChart chart_;
  int deg_ = 0;
  int ncomp_ = 1;
  std::vector<double> a_;
};

using PointFn = std::function<double(const std::array<double, 8>&, Mask)>;
GridField make_field(const GridChart& chart, int deg, const PointFn& fn);

/// Second-order central-difference exterior derivative.
GridField fd_d(const GridField& f);
/// Codifferential for the euclidean metric: -star d star (even ambient dim).
GridField fd_dstar(const GridField& f);

/// Deterministic fixed-tree reductions.
double l2_norm(const GridField& f);
double max_abs(const GridField& f);
double inner(const GridField& a, const GridField& b);

/// A constant-coefficient pointwise linear map between form degrees.
class PointwiseOp {
 public:
  PointwiseOp() = default;
  /// Build from the action on basis forms.
  static PointwiseOp from_action(int dim, int deg_in, int deg_out,
                                 const std::function<Form(const Form&)>& act);
  GridField apply(const GridField& f) const;
  int deg_in() const { return deg_in_; }
  int deg_out() const { return deg_out_; }

 private:
  int dim_ = 6, deg_in_ = 0, deg_out_ = 0;
  std::vector<double> m_;  // row-major ncomp_out x ncomp_in
};

/// Constant-coefficient wedge by a fixed form.
PointwiseOp wedge_by(int dim, int deg_in, const Form& fixed, bool on_left);

struct SpinorField {
  GridField f, g, gamma;  // 0-, 0-, 1-form slots
};

/// Dirac operator of a constant structure on the flat torus:
/// (f, g, gamma) -> (d* gamma, -d* J gamma, curl gamma + df - J dg).
SpinorField dirac_flat(const SpinorField& in, const su3::SU3Structure& s);

/// Slotwise Hodge Laplacian d*d + dd*.
SpinorField laplacian(const SpinorField& in);

double spinor_l2(const SpinorField& s);
SpinorField spinor_sub(const SpinorField& a, const SpinorField& b);

/// Least-squares slope of log(err) vs log(h).
double fit_order(const std::vector<double>& hs, const std::vector<double>& errs);

// ---------------------------------------------------------------------------
// T^2-invariant Cayley-form fields on T^8 = T^2 x T^6 (constant along e7, e8).

struct Spin7Fields {
  GridChart chart;     // dim 8, active axes within 1..6
  GridField omega;     // (8,2) horizontal
  GridField re, im;    // (8,3) horizontal
  GridField eta_h, theta_h;  // (8,1) horizontal parts of the connection
  GridField p, q, r;   // (8,0)
};

struct ClosureReport {
  double dphi_norm;         // || fd_d Phi ||
  double grouped_defect;    // || fd_d Phi - vertical-type regrouping ||
  double pointwise_defect;  // grouped residuals vs pointwise-jet residuals
  double res_b_norm, res_c_norm, res_d_norm;
};

/// Assemble Phi per point, apply fd_d, and compare against the regrouping by
/// vertical type (exact up to round-off) and against the jet-level residual
/// expressions (second-order in h).
ClosureReport spin7_closure(const Spin7Fields& f);

/// Residual of the first-order equation d rho = -(1/p0) dtheta1 ^ omega0 for
/// the explicit linear-coefficient ansatz rho = (1/4) X -| F on the torus,
/// with dtheta1 a constant primitive (1,1) form. The ansatz is linear rather
/// than periodic, so the stencil is evaluated on interior points only.
double first_order_ansatz_residual(int N, const su3::SU3Structure& s,
                                   const Form& dtheta1, const Scalar& p0);

}  // namespace cayley::grid
