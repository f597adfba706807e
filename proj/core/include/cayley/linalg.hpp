#pragma once

#include <vector>

#include "cayley/scalar.hpp"

namespace cayley {

using Vec = std::vector<Scalar>;

/// Dense square matrix over Scalar. Small (n <= 8); all solves are exact
/// Gaussian elimination when the entries are exact.
class Mat {
 public:
  Mat() : n_(0) {}
  explicit Mat(int n) : n_(n), a_(size_t(n) * n, Scalar(0)) {}
  static Mat identity(int n) {
    Mat m(n);
    for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
  }

  int n() const { return n_; }
  Scalar& operator()(int i, int j) { return a_[size_t(i) * n_ + j]; }
  const Scalar& operator()(int i, int j) const { return a_[size_t(i) * n_ + j]; }

  Mat transpose() const;
  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(const Scalar& c) const;
  Vec apply(const Vec& v) const;

  Scalar det() const;
  Mat inverse() const;        // throws backend_error when singular
  Vec solve(const Vec& rhs) const;

  bool is_symmetric() const;
  /// Positive definiteness: exact backend checks leading principal minors;
  /// float backend uses a Jacobi eigenvalue floor.
  bool is_positive_definite(double float_floor = 1e-12) const;
  /// Smallest eigenvalue by cyclic Jacobi (symmetric matrices, float path).
  double min_eigenvalue() const;

  bool any_float() const;
  Mat to_float() const;

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.n_ == b.n_ && a.a_ == b.a_;
  }

 private:
  int n_;
  std::vector<Scalar> a_;
};

Scalar dot(const Vec& a, const Vec& b);

}  // namespace cayley
