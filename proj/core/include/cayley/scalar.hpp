#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace cayley {

struct backend_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two-backend scalar: exact rational (GMP) or binary64.
/// Arithmetic on two exact values stays exact; anything touching a float
/// value yields a float. Exact is the default for pointwise identity work,
/// float for grid work.
class Scalar {
 public:
  Scalar() : exact_(true), q_(0) {}
  Scalar(int v) : exact_(true), q_(v) {}
  Scalar(long v) : exact_(true), q_(mpz_class(v)) {}
  Scalar(long num, long den) : exact_(true), q_(mpz_class(num), mpz_class(den)) {
    q_.canonicalize();
  }
  explicit Scalar(double v) : exact_(false), d_(v) {}
  explicit Scalar(const mpq_class& q) : exact_(true), q_(q) { q_.canonicalize(); }

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return Scalar(1); }

  bool is_exact() const { return exact_; }
  bool is_zero() const { return exact_ ? sgn(q_) == 0 : d_ == 0.0; }
  int sign() const { return exact_ ? sgn(q_) : (d_ > 0) - (d_ < 0); }

  const mpq_class& rational() const {
    if (!exact_) throw backend_error("Scalar: rational() on float value");
    return q_;
  }
  double to_double() const { return exact_ ? q_.get_d() : d_; }
  Scalar to_float() const { return Scalar(to_double()); }

  Scalar operator-() const {
    return exact_ ? Scalar(mpq_class(-q_)) : Scalar(-d_);
  }
  Scalar& operator+=(const Scalar& o) { return bin(o, Op::Add); }
  Scalar& operator-=(const Scalar& o) { return bin(o, Op::Sub); }
  Scalar& operator*=(const Scalar& o) { return bin(o, Op::Mul); }
  Scalar& operator/=(const Scalar& o) { return bin(o, Op::Div); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) return a.q_ == b.q_;
    return a.to_double() == b.to_double();
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar abs() const {
    return exact_ ? Scalar(mpq_class(::abs(q_))) : Scalar(std::fabs(d_));
  }

  /// Exact square root when the value is a perfect rational square;
  /// std::nullopt otherwise (caller decides whether to fall back to float).
  std::optional<Scalar> exact_sqrt() const { return exact_root(2); }

  /// Exact k-th root of a nonnegative rational, if it exists.
  std::optional<Scalar> exact_root(unsigned k) const;

  /// Square root with automatic backend: exact when possible, else binary64.
  Scalar sqrt() const {
    if (sign() < 0) throw backend_error("Scalar: sqrt of negative value");
    if (exact_) {
      if (auto r = exact_sqrt()) return *r;
    }
    return Scalar(std::sqrt(to_double()));
  }
  Scalar root(unsigned k) const {
    if (sign() < 0) throw backend_error("Scalar: root of negative value");
    if (exact_) {
      if (auto r = exact_root(k)) return *r;
    }
    return Scalar(std::pow(to_double(), 1.0 / double(k)));
  }

  Scalar pow(long e) const;

  std::string str() const;

 private:
  enum class Op { Add, Sub, Mul, Div };
  Scalar& bin(const Scalar& o, Op op);

  bool exact_;
  mpq_class q_;
  double d_ = 0.0;
};

inline Scalar frac(long n, long d) { return Scalar(n, d); }

}  // namespace cayley
