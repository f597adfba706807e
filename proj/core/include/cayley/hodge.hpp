#pragma once

#include "cayley/form.hpp"

namespace cayley {

struct not_positive_definite : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Orientation relative to the standard basis volume e^{1..n}.
struct Orientation {
  int sign = +1;
  Orientation reversed() const { return {-sign}; }
};

/// Symmetric metric on an n-dimensional space, with the machinery the Hodge
/// star needs: the star is computed via the Gram matrix induced on Lambda^k,
/// so non-standard metrics work uniformly.
class Metric {
 public:
  Metric() = default;
  explicit Metric(Mat g);
  static Metric euclidean(int n) { return Metric(Mat::identity(n)); }

  int dim() const { return g_.n(); }
  const Mat& matrix() const { return g_; }
  const Mat& inverse_matrix() const { return ginv_; }

  void require_positive_definite(double float_floor = 1e-12) const;

  /// <a,b> on Lambda^k: det of the g^{-1} minor ((i_a, j_b)).
  Scalar inner(const Form& a, const Form& b) const;
  Scalar norm_sq(const Form& a) const { return inner(a, a); }

  /// sqrt(det g): exact when a perfect square, binary64 otherwise.
  Scalar vol_coeff() const;
  Form volume_form(const Orientation& o) const;

  Form star(const Form& a, const Orientation& o) const;

  Vec sharp(const Form& gamma) const;   // 1-form -> vector
  Form flat(const Vec& v) const;        // vector -> 1-form

 private:
  Mat g_, ginv_;
};

}  // namespace cayley
