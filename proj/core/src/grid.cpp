#include "cayley/grid.hpp"

#include <cmath>
#include <map>

namespace cayley::grid {

namespace {

struct CompTable {
  std::vector<Mask> masks;
  std::map<Mask, int> rank;
};

const CompTable& comp_table(int dim, int deg) {
  static std::map<std::pair<int, int>, CompTable> cache;
  auto key = std::make_pair(dim, deg);
  auto it = cache.find(key);
  if (it == cache.end()) {
    CompTable t;
    for (Mask m = 0; m < (Mask(1) << dim); ++m)
      if (popcount(m) == deg) {
        t.rank[m] = int(t.masks.size());
        t.masks.push_back(m);
      }
    it = cache.emplace(key, std::move(t)).first;
  }
  return it->second;
}

// fixed-tree pairwise reduction, bit-reproducible regardless of chunking
double tree_sum(const double* a, std::size_t n) {
  if (n == 0) return 0.0;
  if (n == 1) return a[0];
  std::size_t half = n / 2;
  return tree_sum(a, half) + tree_sum(a + half, n - half);
}

}  // namespace

const std::vector<Mask>& component_masks(int dim, int deg) {
  return comp_table(dim, deg).masks;
}

int component_rank(int dim, int deg, Mask m) {
  return comp_table(dim, deg).rank.at(m);
}

std::size_t GridChart::npoints() const {
  std::size_t n = 1;
  for (std::size_t i = 0; i < active.size(); ++i) n *= std::size_t(N);
  return n;
}

GridField::GridField(GridChart chart, int deg)
    : chart_(std::move(chart)), deg_(deg) {
  if (chart_.N < 4 || chart_.N % 2 != 0)
    throw chart_mismatch("GridChart: N must be even and >= 4");
  for (int a : chart_.active)
    if (a < 1 || a > chart_.dim) throw chart_mismatch("GridChart: bad axis");
  ncomp_ = int(component_masks(chart_.dim, deg_).size());
  a_.assign(npoints() * std::size_t(ncomp_), 0.0);
}

std::array<double, 8> GridField::coords(std::size_t pt) const {
  std::array<double, 8> x{};
  double h = chart_.h();
  std::size_t rem = pt;
  for (int k = int(chart_.active.size()) - 1; k >= 0; --k) {
    std::size_t idx = rem % std::size_t(chart_.N);
    rem /= std::size_t(chart_.N);
    x[std::size_t(chart_.active[std::size_t(k)] - 1)] = double(idx) * h;
  }
  return x;
}

Form GridField::form_at(std::size_t pt) const {
  Form f(chart_.dim, deg_);
  const auto& masks = component_masks(chart_.dim, deg_);
  for (int c = 0; c < ncomp_; ++c) {
    double v = at(pt, c);
    if (v != 0.0) f.add(masks[std::size_t(c)], Scalar(v));
  }
  return f;
}

void GridField::set_form_at(std::size_t pt, const Form& f) {
  for (int c = 0; c < ncomp_; ++c) at(pt, c) = 0.0;
  for (auto& [m, s] : f.terms())
    at(pt, component_rank(chart_.dim, deg_, m)) = s.to_double();
}

GridField GridField::operator+(const GridField& o) const {
  GridField r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

GridField GridField::operator-(const GridField& o) const {
  GridField r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

GridField GridField::scaled(double c) const {
  GridField r = *this;
  for (auto& v : r.a_) v *= c;
  return r;
}

GridField GridField::quantized(int bits) const {
  GridField r = *this;
  double s = std::ldexp(1.0, bits);
  for (auto& v : r.a_) v = std::nearbyint(v * s) / s;
  return r;
}

GridField make_field(const GridChart& chart, int deg, const PointFn& fn) {
  GridField f(chart, deg);
  const auto& masks = component_masks(chart.dim, deg);
  for (std::size_t pt = 0; pt < f.npoints(); ++pt) {
    auto x = f.coords(pt);
    for (int c = 0; c < f.ncomp(); ++c)
      f.at(pt, c) = fn(x, masks[std::size_t(c)]);
  }
  return f;
}

namespace {

/// Index of the point shifted by dir along the k-th active axis.
std::size_t shifted(const GridChart& c, std::size_t pt, int k, int dir) {
  std::size_t stride = 1;
  for (int j = int(c.active.size()) - 1; j > k; --j) stride *= std::size_t(c.N);
  std::size_t idx = (pt / stride) % std::size_t(c.N);
  std::size_t base = pt - idx * stride;
  std::size_t ni =
      (idx + std::size_t(c.N) + std::size_t(c.N + dir)) % std::size_t(c.N);
  return base + ni * stride;
}

}  // namespace

GridField fd_d(const GridField& f) {
  const GridChart& c = f.chart();
  GridField out(c, f.degree() + 1);
  const auto& in_masks = component_masks(c.dim, f.degree());
  double inv2h = 1.0 / (2.0 * c.h());
  for (std::size_t k = 0; k < c.active.size(); ++k) {
    int axis = c.active[k];
    Mask am = Mask(1) << (axis - 1);
    for (int ci = 0; ci < f.ncomp(); ++ci) {
      Mask m = in_masks[std::size_t(ci)];
      if (m & am) continue;
      int sign = wedge_sign(am, m);
      int co = component_rank(c.dim, f.degree() + 1, am | m);
      for (std::size_t pt = 0; pt < f.npoints(); ++pt) {
        double dv = (f.at(shifted(c, pt, int(k), +1), ci) -
                     f.at(shifted(c, pt, int(k), -1), ci)) *
                    inv2h;
        out.at(pt, co) += sign > 0 ? dv : -dv;
      }
    }
  }
  return out;
}

namespace {

struct StarTable {
  std::vector<int> comp;
  std::vector<double> sign;
};

const StarTable& star_table(int dim, int deg) {
  static std::map<std::pair<int, int>, StarTable> cache;
  auto key = std::make_pair(dim, deg);
  auto it = cache.find(key);
  if (it == cache.end()) {
    StarTable t;
    const auto& masks = component_masks(dim, deg);
    Mask full = (Mask(1) << dim) - 1;
    for (Mask m : masks) {
      Mask mc = full ^ m;
      t.comp.push_back(component_rank(dim, dim - deg, mc));
      t.sign.push_back(double(wedge_sign(m, mc)));
    }
    it = cache.emplace(key, std::move(t)).first;
  }
  return it->second;
}

GridField star_euclid(const GridField& f) {
  const GridChart& c = f.chart();
  GridField out(c, c.dim - f.degree());
  const auto& t = star_table(c.dim, f.degree());
  for (std::size_t pt = 0; pt < f.npoints(); ++pt)
    for (int ci = 0; ci < f.ncomp(); ++ci)
      out.at(pt, t.comp[std::size_t(ci)]) =
          t.sign[std::size_t(ci)] * f.at(pt, ci);
  return out;
}

}  // namespace

GridField fd_dstar(const GridField& f) {
  // d* = -star d star on even-dimensional spaces
  return star_euclid(fd_d(star_euclid(f))).scaled(-1.0);
}

double inner(const GridField& a, const GridField& b) {
  std::vector<double> prods(a.data().size());
  for (std::size_t i = 0; i < prods.size(); ++i)
    prods[i] = a.data()[i] * b.data()[i];
  return tree_sum(prods.data(), prods.size()) / double(a.npoints());
}

double l2_norm(const GridField& f) { return std::sqrt(inner(f, f)); }

double max_abs(const GridField& f) {
  double m = 0;
  for (double v : f.data()) m = std::max(m, std::fabs(v));
  return m;
}

PointwiseOp PointwiseOp::from_action(
    int dim, int deg_in, int deg_out,
    const std::function<Form(const Form&)>& act) {
  PointwiseOp op;
  op.dim_ = dim;
  op.deg_in_ = deg_in;
  op.deg_out_ = deg_out;
  const auto& mi = component_masks(dim, deg_in);
  const auto& mo = component_masks(dim, deg_out);
  op.m_.assign(mi.size() * mo.size(), 0.0);
  for (std::size_t j = 0; j < mi.size(); ++j) {
    Form e(dim, deg_in);
    e.set(mi[j], Scalar(1));
    Form out = act(e);
    if (out.dim() != dim || out.degree() != deg_out)
      throw chart_mismatch("PointwiseOp: action has wrong shape");
    for (auto& [m, c] : out.terms())
      op.m_[std::size_t(component_rank(dim, deg_out, m)) * mi.size() + j] =
          c.to_double();
  }
  (void)mo;
  return op;
}

GridField PointwiseOp::apply(const GridField& f) const {
  if (f.degree() != deg_in_ || f.chart().dim != dim_)
    throw chart_mismatch("PointwiseOp: shape mismatch");
  GridField out(f.chart(), deg_out_);
  std::size_t ni = component_masks(dim_, deg_in_).size();
  std::size_t no = component_masks(dim_, deg_out_).size();
  for (std::size_t pt = 0; pt < f.npoints(); ++pt)
    for (std::size_t r = 0; r < no; ++r) {
      double acc = 0;
      for (std::size_t c = 0; c < ni; ++c)
        acc += m_[r * ni + c] * f.at(pt, int(c));
      out.at(pt, int(r)) = acc;
    }
  return out;
}

PointwiseOp wedge_by(int dim, int deg_in, const Form& fixed, bool on_left) {
  return PointwiseOp::from_action(
      dim, deg_in, deg_in + fixed.degree(), [&](const Form& e) {
        return on_left ? wedge(fixed, e) : wedge(e, fixed);
      });
}

SpinorField dirac_flat(const SpinorField& in, const su3::SU3Structure& s) {
  if (!(in.f.chart() == in.g.chart()) || !(in.f.chart() == in.gamma.chart()))
    throw chart_mismatch("dirac_flat: charts differ");
  if (in.f.chart().dim != 6) throw chart_mismatch("dirac_flat: need dim 6");
  PointwiseOp j1 =
      PointwiseOp::from_action(6, 1, 1, [&](const Form& e) { return s.j1(e); });
  PointwiseOp curl = PointwiseOp::from_action(
      6, 2, 1, [&](const Form& e) { return su3::curl_from(e, s); });
  // The middle slot uses the opposite J-orientation on 1-forms; the sign is
  // pinned by the operator squaring to the Hodge Laplacian on the flat torus.
  SpinorField out;
  out.f = fd_dstar(in.gamma);
  out.g = fd_dstar(j1.apply(in.gamma));
  out.gamma = curl.apply(fd_d(in.gamma)) + fd_d(in.f) - j1.apply(fd_d(in.g));
  return out;
}

SpinorField laplacian(const SpinorField& in) {
  auto lap = [](const GridField& u) {
    GridField a = fd_dstar(fd_d(u));
    if (u.degree() > 0) return a + fd_d(fd_dstar(u));
    return a;
  };
  return SpinorField{lap(in.f), lap(in.g), lap(in.gamma)};
}

double spinor_l2(const SpinorField& s) {
  double a = l2_norm(s.f), b = l2_norm(s.g), c = l2_norm(s.gamma);
  return std::sqrt(a * a + b * b + c * c);
}

SpinorField spinor_sub(const SpinorField& a, const SpinorField& b) {
  return SpinorField{a.f - b.f, a.g - b.g, a.gamma - b.gamma};
}

double fit_order(const std::vector<double>& hs, const std::vector<double>& errs) {
  int n = int(hs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    double x = std::log(hs[std::size_t(i)]);
    double y = std::log(errs[std::size_t(i)]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// ---------------------------------------------------------------------------

namespace {

GridField pointwise_mul(const GridField& scalar, const GridField& f) {
  GridField out = f;
  for (std::size_t pt = 0; pt < f.npoints(); ++pt) {
    double s = scalar.at(pt, 0);
    for (int c = 0; c < f.ncomp(); ++c) out.at(pt, c) = s * f.at(pt, c);
  }
  return out;
}

GridField pointwise_wedge(const GridField& a, const GridField& b) {
  const GridChart& c = a.chart();
  GridField out(c, a.degree() + b.degree());
  const auto& ma = component_masks(c.dim, a.degree());
  const auto& mb = component_masks(c.dim, b.degree());
  struct Entry {
    int ia, ib, io;
    double sign;
  };
  std::vector<Entry> tab;
  for (std::size_t i = 0; i < ma.size(); ++i)
    for (std::size_t j = 0; j < mb.size(); ++j) {
      if (ma[i] & mb[j]) continue;
      tab.push_back({int(i), int(j),
                     component_rank(c.dim, out.degree(), ma[i] | mb[j]),
                     double(wedge_sign(ma[i], mb[j]))});
    }
  for (std::size_t pt = 0; pt < a.npoints(); ++pt)
    for (const auto& e : tab)
      out.at(pt, e.io) += e.sign * a.at(pt, e.ia) * b.at(pt, e.ib);
  return out;
}

}  // namespace

ClosureReport spin7_closure(const Spin7Fields& f) {
  const GridChart& c = f.chart;
  if (c.dim != 8) throw chart_mismatch("spin7_closure: need dim 8 chart");
  for (int a : c.active)
    if (a > 6) throw not_invariant("spin7_closure: fields must be T^2-invariant");

  Form e7(8, 1), e8(8, 1);
  e7.set(Mask(1) << 6, Scalar(1));
  e8.set(Mask(1) << 7, Scalar(1));

  GridField pre = pointwise_mul(f.p, f.re);
  GridField Bh = pointwise_wedge(f.theta_h, f.omega) + pre;
  GridField Ch = pointwise_wedge(f.eta_h, f.omega) + pointwise_mul(f.r, f.re) +
                 pointwise_mul(f.q, f.im);
  GridField pq(c, 0);
  for (std::size_t pt = 0; pt < pq.npoints(); ++pt)
    pq.at(pt, 0) = f.p.at(pt, 0) * f.q.at(pt, 0);
  GridField Dh =
      pointwise_wedge(f.eta_h, pointwise_wedge(f.theta_h, f.omega)) +
      pointwise_wedge(f.eta_h, pre) -
      pointwise_wedge(f.theta_h,
                      pointwise_mul(f.r, f.re) + pointwise_mul(f.q, f.im)) +
      pointwise_mul(pq, pointwise_wedge(f.omega, f.omega)).scaled(0.5);

  PointwiseOp we78_2 = wedge_by(8, 2, wedge(e7, e8), true);
  PointwiseOp we78_3 = wedge_by(8, 3, wedge(e7, e8), true);
  PointwiseOp we7_3 = wedge_by(8, 3, e7, true);
  PointwiseOp we8_3 = wedge_by(8, 3, e8, true);
  PointwiseOp we7_4 = wedge_by(8, 4, e7, true);
  PointwiseOp we8_4 = wedge_by(8, 4, e8, true);

  GridField phi =
      we78_2.apply(f.omega) + we7_3.apply(Bh) - we8_3.apply(Ch) + Dh;

  GridField dphi = fd_d(phi);
  GridField rho_a = fd_d(f.omega);
  GridField rho_b = fd_d(Bh);
  GridField rho_c = fd_d(Ch);
  GridField rho_d = fd_d(Dh);

  GridField comb =
      we78_3.apply(rho_a) - we7_4.apply(rho_b) + we8_4.apply(rho_c) + rho_d;

  ClosureReport rep;
  rep.dphi_norm = l2_norm(dphi);
  rep.grouped_defect = l2_norm(dphi - comb);

  GridField dp = fd_d(f.p), dq = fd_d(f.q), dr = fd_d(f.r);
  GridField d_re = fd_d(f.re), d_im = fd_d(f.im);
  GridField d_eta = fd_d(f.eta_h), d_theta = fd_d(f.theta_h);

  GridField Rb = pointwise_wedge(dp, f.re) + pointwise_mul(f.p, d_re) +
                 pointwise_wedge(d_theta, f.omega);
  GridField Rc = pointwise_wedge(dr, f.re) + pointwise_mul(f.r, d_re) +
                 pointwise_wedge(dq, f.im) + pointwise_mul(f.q, d_im) +
                 pointwise_wedge(d_eta, f.omega);
  GridField dpq = pointwise_mul(f.q, dp) + pointwise_mul(f.p, dq);
  GridField Rd =
      pointwise_mul(f.p, pointwise_wedge(d_eta, f.re)) -
      pointwise_mul(f.r, pointwise_wedge(d_theta, f.re)) -
      pointwise_mul(f.q, pointwise_wedge(d_theta, f.im)) +
      pointwise_wedge(dpq, pointwise_wedge(f.omega, f.omega)).scaled(0.5);

  // grouped rho_b = d(theta_h^w + p Re) differs from the jet-level Rb by the
  // product-rule remainder; both agree to O(h^2)
  GridField gb = Rb - pointwise_wedge(f.theta_h, rho_a);
  GridField gc = Rc - pointwise_wedge(f.eta_h, rho_a);
  double defect = std::max(l2_norm(rho_b - gb), l2_norm(rho_c - gc));
  rep.pointwise_defect = defect;
  rep.res_b_norm = l2_norm(Rb);
  rep.res_c_norm = l2_norm(Rc);
  rep.res_d_norm = l2_norm(Rd);
  (void)Rd;
  return rep;
}

double first_order_ansatz_residual(int N, const su3::SU3Structure& s,
                                   const Form& dtheta1, const Scalar& p0) {
  GridChart c{6, N, 1.0, {1, 2, 3}};
  Form F = wedge(dtheta1, s.omega).scaled(Scalar(-1) / p0).to_float();

  // Linear ansatz adapted to the active axes: every 4-index tuple on a
  // 6-space meets {1,2,3}, so each term c e^J of F is matched by the
  // primitive (sign) c x_a e^{J \ a} with a = min(J cap {1,2,3}).
  struct Term {
    int axis;       // 1-based coordinate the coefficient is linear in
    int comp;       // component rank of e^{J \ a}
    double coeff;   // sign-adjusted coefficient
  };
  std::vector<Term> terms;
  for (auto& [mJ, cJ] : F.terms()) {
    int a = 0;
    for (int i = 1; i <= 3; ++i)
      if (mJ & (Mask(1) << (i - 1))) {
        a = i;
        break;
      }
    Mask rest = mJ ^ (Mask(1) << (a - 1));
    double sgn = double(wedge_sign(Mask(1) << (a - 1), rest));
    terms.push_back({a, component_rank(6, 3, rest), sgn * cJ.to_double()});
  }
  GridField rho(c, 3);
  for (std::size_t pt = 0; pt < rho.npoints(); ++pt) {
    auto x = rho.coords(pt);
    for (const auto& t : terms)
      rho.at(pt, t.comp) += t.coeff * x[std::size_t(t.axis - 1)];
  }
  GridField drho = fd_d(rho);

  // the linear ansatz is not periodic, so skip stencil points that wrap
  double worst = 0;
  const auto& masks = component_masks(6, 4);
  GridField probe(c, 0);
  for (std::size_t pt = 0; pt < drho.npoints(); ++pt) {
    auto x = probe.coords(pt);
    bool interior_pt = true;
    for (int k = 0; k < 3; ++k) {
      double xi = x[std::size_t(k)];
      if (xi < 0.5 * c.h() || xi > c.L - 1.5 * c.h()) interior_pt = false;
    }
    if (!interior_pt) continue;
    for (int ci = 0; ci < drho.ncomp(); ++ci) {
      double want = F.coeff(masks[std::size_t(ci)]).to_double();
      worst = std::max(worst, std::fabs(drho.at(pt, ci) - want));
    }
  }
  return worst;
}

}  // namespace cayley::grid
