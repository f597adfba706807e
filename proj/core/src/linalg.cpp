#include "cayley/linalg.hpp"

#include <cmath>

namespace cayley {

Mat Mat::transpose() const {
  Mat r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  Mat r(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      if ((*this)(i, k).is_zero()) continue;
      for (int j = 0; j < n_; ++j) r(i, j) += (*this)(i, k) * o(k, j);
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  Mat r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r(i, j) = (*this)(i, j) + o(i, j);
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  Mat r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r(i, j) = (*this)(i, j) - o(i, j);
  return r;
}

Mat Mat::scaled(const Scalar& c) const {
  Mat r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r(i, j) = (*this)(i, j) * c;
  return r;
}

Vec Mat::apply(const Vec& v) const {
  Vec r(n_, Scalar(0));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

namespace {

// Fraction-free-ish elimination; works for exact and float entries alike.
struct LU {
  Mat m;
  Scalar det;
  bool singular = false;
};

LU eliminate(Mat m) {
  int n = m.n();
  Scalar det(1);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    if (m(c, c).is_zero()) {
      for (int r = c + 1; r < n; ++r)
        if (!m(r, c).is_zero()) { piv = r; break; }
      if (piv < 0) return {m, Scalar(0), true};
      for (int j = 0; j < n; ++j) std::swap(m(c, j), m(piv, j));
      det = -det;
    }
    det *= m(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      Scalar f = m(r, c) / m(c, c);
      for (int j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return {m, det, false};
}

}  // namespace

Scalar Mat::det() const {
  auto lu = eliminate(*this);
  return lu.singular ? Scalar(0) : lu.det;
}

Mat Mat::inverse() const {
  int n = n_;
  Mat aug(*this);
  Mat inv = Mat::identity(n);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (!aug(r, c).is_zero()) { piv = r; break; }
    if (piv < 0) throw backend_error("Mat: singular matrix");
    if (piv != c)
      for (int j = 0; j < n; ++j) {
        std::swap(aug(c, j), aug(piv, j));
        std::swap(inv(c, j), inv(piv, j));
      }
    Scalar p = aug(c, c);
    for (int j = 0; j < n; ++j) {
      aug(c, j) /= p;
      inv(c, j) /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || aug(r, c).is_zero()) continue;
      Scalar f = aug(r, c);
      for (int j = 0; j < n; ++j) {
        aug(r, j) -= f * aug(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

Vec Mat::solve(const Vec& rhs) const {
  return inverse().apply(rhs);
}

bool Mat::is_symmetric() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (!((*this)(i, j) == (*this)(j, i))) return false;
  return true;
}

bool Mat::any_float() const {
  for (const auto& s : a_)
    if (!s.is_exact()) return true;
  return false;
}

Mat Mat::to_float() const {
  Mat r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r(i, j) = Scalar((*this)(i, j).to_double());
  return r;
}

double Mat::min_eigenvalue() const {
  int n = n_;
  std::vector<double> a(size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[size_t(i) * n + j] = (*this)(i, j).to_double();
  auto at = [&](int i, int j) -> double& { return a[size_t(i) * n + j]; };
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
    if (off < 1e-30) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::fabs(at(p, q)) < 1e-300) continue;
        double theta = (at(q, q) - at(p, p)) / (2 * at(p, q));
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::fabs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
  }
  double mn = at(0, 0);
  for (int i = 1; i < n; ++i) mn = std::min(mn, at(i, i));
  return mn;
}

bool Mat::is_positive_definite(double float_floor) const {
  if (!any_float()) {
    // leading principal minors, exact
    for (int k = 1; k <= n_; ++k) {
      Mat sub(k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub(i, j) = (*this)(i, j);
      if (sub.det().sign() <= 0) return false;
    }
    return true;
  }
  return min_eigenvalue() > float_floor;
}

Scalar dot(const Vec& a, const Vec& b) {
  Scalar s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace cayley
