#include "cayley/form.hpp"

#include <bit>
#include <sstream>

namespace cayley {

int popcount(Mask m) { return std::popcount(m); }

std::vector<int> mask_indices(Mask m) {
  std::vector<int> v;
  for (int i = 1; m; ++i, m >>= 1)
    if (m & 1u) v.push_back(i);
  return v;
}

Mask indices_mask(const std::vector<int>& idx) {
  Mask m = 0;
  for (int i : idx) m |= Mask(1) << (i - 1);
  return m;
}

int wedge_sign(Mask a, Mask b) {
  // parity of #{(i,j) : i in a, j in b, j < i}
  int inv = 0;
  for (Mask t = a; t;) {
    Mask low = t & (~t + 1);
    inv += std::popcount(b & (low - 1));
    t ^= low;
  }
  return (inv & 1) ? -1 : 1;
}

Form::Form(int dim, int deg) : dim_(dim), deg_(deg) {
  if (dim < 0 || dim > 8) throw dimension_mismatch("Form: dim must be in [0,8]");
  // degrees above dim are allowed as necessarily-zero forms (wedge overflow)
  if (deg < 0 || deg > 16) throw dimension_mismatch("Form: degree out of range");
}

Form Form::basis(int dim, std::initializer_list<int> idx, Scalar c) {
  Form f(dim, int(idx.size()));
  f.set(indices_mask(std::vector<int>(idx)), c);
  return f;
}

Scalar Form::coeff(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

Scalar Form::coeff(std::initializer_list<int> idx) const {
  return coeff(indices_mask(std::vector<int>(idx)));
}

void Form::set(Mask m, const Scalar& c) {
  if (popcount(m) != deg_ || (m >> dim_) != 0)
    throw dimension_mismatch("Form: bad index tuple");
  if (c.is_zero())
    terms_.erase(m);
  else
    terms_[m] = c;
}

void Form::add(Mask m, const Scalar& c) {
  if (popcount(m) != deg_ || (m >> dim_) != 0)
    throw dimension_mismatch("Form: bad index tuple");
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Form Form::operator-() const {
  Form r(dim_, deg_);
  for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Form Form::operator+(const Form& o) const {
  if (dim_ != o.dim_ || deg_ != o.deg_)
    throw dimension_mismatch("Form: + shape mismatch");
  Form r = *this;
  for (auto& [m, c] : o.terms_) r.add(m, c);
  return r;
}

Form& Form::operator+=(const Form& o) {
  *this = *this + o;
  return *this;
}

Form Form::operator-(const Form& o) const { return *this + (-o); }

Form Form::scaled(const Scalar& c) const {
  Form r(dim_, deg_);
  if (c.is_zero()) return r;
  for (auto& [m, x] : terms_) {
    Scalar v = x * c;
    if (!v.is_zero()) r.terms_.emplace(m, v);
  }
  return r;
}

Form Form::lifted(int new_dim) const {
  if (new_dim < dim_) throw dimension_mismatch("Form: lift to smaller dim");
  Form r(new_dim, deg_);
  r.terms_ = terms_;
  return r;
}

bool Form::horizontal(int max_index) const {
  Mask allowed = (Mask(1) << max_index) - 1;
  for (auto& [m, c] : terms_)
    if (m & ~allowed) return false;
  return true;
}

Form Form::to_float() const {
  Form r(dim_, deg_);
  for (auto& [m, c] : terms_) {
    double v = c.to_double();
    if (v != 0.0) r.terms_.emplace(m, Scalar(v));
  }
  return r;
}

double Form::max_abs() const {
  double mx = 0;
  for (auto& [m, c] : terms_) mx = std::max(mx, std::fabs(c.to_double()));
  return mx;
}

double Form::frob_norm() const {
  double s = 0;
  for (auto& [m, c] : terms_) {
    double v = c.to_double();
    s += v * v;
  }
  return std::sqrt(s);
}

Scalar Form::operator()(const std::vector<Vec>& vectors) const {
  if (int(vectors.size()) != deg_)
    throw dimension_mismatch("Form: wrong number of vectors");
  Scalar total(0);
  for (auto& [m, c] : terms_) {
    auto idx = mask_indices(m);
    // det of the k x k matrix [ vectors[col][idx[row]-1] ]
    int k = deg_;
    Mat d(k);
    for (int r = 0; r < k; ++r)
      for (int col = 0; col < k; ++col) d(r, col) = vectors[col][idx[r] - 1];
    total += c * d.det();
  }
  return total;
}

std::string Form::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")e^{";
    for (int i : mask_indices(m)) os << i;
    os << "}";
  }
  return os.str();
}

Form wedge(const Form& a, const Form& b) {
  if (a.dim() != b.dim()) throw dimension_mismatch("wedge: dim mismatch");
  int deg = a.degree() + b.degree();
  Form r(a.dim(), deg);  // empty (zero) when deg > dim
  if (deg > a.dim()) return r;
  for (auto& [ma, ca] : a.terms())
    for (auto& [mb, cb] : b.terms()) {
      if (ma & mb) continue;
      Scalar c = ca * cb;
      if (wedge_sign(ma, mb) < 0) c = -c;
      r.add(ma | mb, c);
    }
  return r;
}

Form wedge(const Form& a, const Form& b, const Form& c) {
  return wedge(wedge(a, b), c);
}

Form interior(const Vec& v, const Form& a) {
  if (int(v.size()) != a.dim()) throw dimension_mismatch("interior: dim mismatch");
  if (a.degree() == 0) return Form(a.dim(), 0);
  Form r(a.dim(), a.degree() - 1);
  for (auto& [m, c] : a.terms()) {
    int pos = 0;  // number of indices below the current one
    for (Mask t = m; t;) {
      Mask low = t & (~t + 1);
      int i = std::countr_zero(low);  // 0-based index
      if (!v[i].is_zero()) {
        Scalar s = v[i] * c;
        if (pos & 1) s = -s;
        r.add(m ^ low, s);
      }
      t ^= low;
      ++pos;
    }
  }
  return r;
}

Form pullback(const Mat& A, const Form& a) {
  if (A.n() != a.dim()) throw dimension_mismatch("pullback: dim mismatch");
  if (A.det().is_zero()) throw singular_matrix("pullback: singular matrix");
  // A*(e^i) = sum_j A(i,j) e^j; extend multiplicatively over index tuples.
  int n = a.dim();
  std::vector<Form> rows;
  rows.reserve(n);
  for (int i = 0; i < n; ++i) {
    Form f(n, 1);
    for (int j = 0; j < n; ++j) f.add(Mask(1) << j, A(i, j));
    rows.push_back(f);
  }
  Form r(n, a.degree());
  for (auto& [m, c] : a.terms()) {
    Form prod(n, 0);
    prod.set(0, Scalar(1));
    for (int i : mask_indices(m)) prod = wedge(prod, rows[i - 1]);
    r += prod.scaled(c);
  }
  return r;
}

Form apply_endo_all_slots(const Mat& J, const Form& a) {
  // (Ja)(v1..vk) = a(Jv1..Jvk) is the pullback by J.
  if (J.n() != a.dim()) throw dimension_mismatch("apply_endo: dim mismatch");
  int n = a.dim();
  std::vector<Form> rows;
  for (int i = 0; i < n; ++i) {
    Form f(n, 1);
    for (int j = 0; j < n; ++j) f.add(Mask(1) << j, J(i, j));
    rows.push_back(f);
  }
  Form r(n, a.degree());
  for (auto& [m, c] : a.terms()) {
    Form prod(n, 0);
    prod.set(0, Scalar(1));
    for (int i : mask_indices(m)) prod = wedge(prod, rows[i - 1]);
    r += prod.scaled(c);
  }
  return r;
}

Form apply_endo_first_slot(const Mat& J, const Form& a) {
  int n = a.dim(), k = a.degree();
  if (k == 0) return a;
  Form r(n, k);
  // coefficient on sorted tuple (a1<..<ak): sum_d J(d,a1) a(e_d, e_{a2}, ..)
  // computed by contracting J e_{a1} into a against the remaining tuple.
  for (Mask m = 0; m < (Mask(1) << n); ++m) {
    if (popcount(m) != k) continue;
    auto idx = mask_indices(m);
    Vec jfirst(size_t(n), Scalar(0));
    for (int d = 0; d < n; ++d) jfirst[d] = J(d, idx[0] - 1);
    Form contracted = interior(jfirst, a);
    // evaluate contracted on the remaining basis vectors e_{a2}..e_{ak}
    Mask rest = m ^ (Mask(1) << (idx[0] - 1));
    Scalar c = contracted.coeff(rest);
    if (!c.is_zero()) r.add(m, c);
  }
  return r;
}

}  // namespace cayley
