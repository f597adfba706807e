#include "cayley/hodge.hpp"

namespace cayley {

Metric::Metric(Mat g) : g_(std::move(g)) {
  if (!g_.is_symmetric()) throw not_positive_definite("Metric: not symmetric");
  ginv_ = g_.inverse();
}

void Metric::require_positive_definite(double float_floor) const {
  if (!g_.is_positive_definite(float_floor))
    throw not_positive_definite("Metric: not positive definite");
}

Scalar Metric::inner(const Form& a, const Form& b) const {
  if (a.dim() != dim() || b.dim() != dim() || a.degree() != b.degree())
    throw dimension_mismatch("Metric::inner: shape mismatch");
  Scalar total(0);
  for (auto& [ma, ca] : a.terms()) {
    auto ia = mask_indices(ma);
    for (auto& [mb, cb] : b.terms()) {
      auto ib = mask_indices(mb);
      int k = a.degree();
      Mat m(k);
      for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) m(r, c) = ginv_(ia[r] - 1, ib[c] - 1);
      total += ca * cb * m.det();
    }
  }
  return total;
}

Scalar Metric::vol_coeff() const {
  Scalar d = g_.det();
  if (d.sign() <= 0) throw not_positive_definite("Metric: det <= 0");
  return d.sqrt();
}

Form Metric::volume_form(const Orientation& o) const {
  int n = dim();
  Form v(n, n);
  Scalar c = vol_coeff();
  if (o.sign < 0) c = -c;
  v.set((Mask(1) << n) - 1, c);
  return v;
}

Form Metric::star(const Form& a, const Orientation& o) const {
  if (a.dim() != dim()) throw dimension_mismatch("star: dim mismatch");
  int n = dim(), k = a.degree();
  Form r(n, n - k);
  if (k > n) return Form(n, 0);
  Scalar s = vol_coeff();
  if (o.sign < 0) s = -s;
  Mask full = (Mask(1) << n) - 1;
  // e^K ^ star(a) = <e^K, a> vol  for all K  =>
  // star(a) = sum_K <e^K, a> sign(K, K^c) s e^{K^c}
  for (Mask K = 0; K <= full; ++K) {
    if (popcount(K) != k) continue;
    Form ek(n, k);
    ek.set(K, Scalar(1));
    Scalar c = inner(ek, a);
    if (c.is_zero()) continue;
    Mask Kc = full ^ K;
    Scalar v = c * s;
    if (wedge_sign(K, Kc) < 0) v = -v;
    r.add(Kc, v);
  }
  return r;
}

Vec Metric::sharp(const Form& gamma) const {
  if (gamma.degree() != 1) throw dimension_mismatch("sharp: need a 1-form");
  require_positive_definite();
  Vec comp(size_t(dim()), Scalar(0));
  for (auto& [m, c] : gamma.terms()) comp[mask_indices(m)[0] - 1] = c;
  return ginv_.apply(comp);
}

Form Metric::flat(const Vec& v) const {
  if (int(v.size()) != dim()) throw dimension_mismatch("flat: dim mismatch");
  require_positive_definite();
  Vec comp = g_.apply(v);
  Form f(dim(), 1);
  for (int i = 0; i < dim(); ++i) f.add(Mask(1) << i, comp[i]);
  return f;
}

}  // namespace cayley
