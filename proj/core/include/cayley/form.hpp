#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <vector>

#include "cayley/linalg.hpp"
#include "cayley/scalar.hpp"

namespace cayley {

struct dimension_mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct singular_matrix : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Index subsets of {1..n} are bitmasks: bit (i-1) set means index i present.
using Mask = std::uint32_t;

int popcount(Mask m);
std::vector<int> mask_indices(Mask m);          // ascending 1-based indices
Mask indices_mask(const std::vector<int>& idx); // inverse

/// Sign of e^a ^ e^b for disjoint masks a, b (merge-inversion parity).
int wedge_sign(Mask a, Mask b);

/// Homogeneous exterior form of degree k on an n-dimensional space.
/// Coefficients are stored sparsely on strictly increasing index tuples
/// (canonical bitmask keys); zero coefficients are pruned, so equality is
/// plain map comparison.
class Form {
 public:
  Form() : dim_(0), deg_(0) {}
  Form(int dim, int deg);

  static Form basis(int dim, std::initializer_list<int> idx, Scalar c = Scalar(1));
  static Form zero_like(const Form& f) { return Form(f.dim_, f.deg_); }

  int dim() const { return dim_; }
  int degree() const { return deg_; }
  bool is_zero() const { return terms_.empty(); }

  const std::map<Mask, Scalar>& terms() const { return terms_; }
  Scalar coeff(Mask m) const;
  Scalar coeff(std::initializer_list<int> idx) const;
  void set(Mask m, const Scalar& c);
  void add(Mask m, const Scalar& c);

  Form operator-() const;
  Form operator+(const Form& o) const;
  Form operator-(const Form& o) const;
  Form scaled(const Scalar& c) const;
  Form& operator+=(const Form& o);

  friend bool operator==(const Form& a, const Form& b) {
    return a.dim_ == b.dim_ && a.deg_ == b.deg_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

  /// Reinterpret on a larger ambient space (same index tuples).
  Form lifted(int new_dim) const;
  /// True when no index above `max_index` appears.
  bool horizontal(int max_index) const;

  Form to_float() const;
  double max_abs() const;
  /// Euclidean coefficient norm (sqrt of sum of squares, as double).
  double frob_norm() const;

  /// Evaluate on degree() vectors.
  Scalar operator()(const std::vector<Vec>& vectors) const;

  std::string str() const;

 private:
  int dim_, deg_;
  std::map<Mask, Scalar> terms_;
};

Form wedge(const Form& a, const Form& b);
Form wedge(const Form& a, const Form& b, const Form& c);

/// Interior product v -| a. Contracting a 0-form yields the zero form.
Form interior(const Vec& v, const Form& a);

/// Pullback by the linear map A: (A*a)(v1..vk) = a(Av1, .., Avk).
/// Functorial: pullback(AB) = pullback(B) o pullback(A).
Form pullback(const Mat& A, const Form& a);

/// J acting on a k-form by precomposition with J in every slot:
/// (J a)(v1..vk) = a(Jv1, .., Jvk).
Form apply_endo_all_slots(const Mat& J, const Form& a);

/// a with J applied in the first slot only: (v1..vk) -> a(Jv1, v2, .., vk).
/// Well-defined as a form only for special (J, a); used by the Hitchin dual.
Form apply_endo_first_slot(const Mat& J, const Form& a);

}  // namespace cayley
