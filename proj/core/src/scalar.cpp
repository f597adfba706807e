#include "cayley/scalar.hpp"

#include <sstream>

namespace cayley {

Scalar& Scalar::bin(const Scalar& o, Op op) {
  if (exact_ && o.exact_) {
    switch (op) {
      case Op::Add: q_ += o.q_; break;
      case Op::Sub: q_ -= o.q_; break;
      case Op::Mul: q_ *= o.q_; break;
      case Op::Div:
        if (sgn(o.q_) == 0) throw backend_error("Scalar: exact division by zero");
        q_ /= o.q_;
        break;
    }
    return *this;
  }
  double a = to_double(), b = o.to_double();
  exact_ = false;
  switch (op) {
    case Op::Add: d_ = a + b; break;
    case Op::Sub: d_ = a - b; break;
    case Op::Mul: d_ = a * b; break;
    case Op::Div: d_ = a / b; break;
  }
  q_ = 0;
  return *this;
}

std::optional<Scalar> Scalar::exact_root(unsigned k) const {
  if (!exact_ || k == 0) return std::nullopt;
  if (sgn(q_) == 0) return Scalar(0);
  if (sgn(q_) < 0) return std::nullopt;
  mpz_class num = q_.get_num(), den = q_.get_den();
  mpz_class rn, rd;
  int exact_n = mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k);
  int exact_d = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k);
  if (!exact_n || !exact_d) return std::nullopt;
  return Scalar(mpq_class(rn, rd));
}

Scalar Scalar::pow(long e) const {
  if (e == 0) return Scalar(1);
  if (!exact_) return Scalar(std::pow(d_, double(e)));
  bool neg = e < 0;
  unsigned long u = neg ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num().get_mpz_t(), u);
  mpz_pow_ui(d.get_mpz_t(), q_.get_den().get_mpz_t(), u);
  mpq_class r(n, d);
  r.canonicalize();
  if (neg) {
    if (sgn(r) == 0) throw backend_error("Scalar: negative power of zero");
    r = 1 / r;
  }
  return Scalar(r);
}

std::string Scalar::str() const {
  if (exact_) {
    std::ostringstream os;
    os << q_;
    return os.str();
  }
  std::ostringstream os;
  os.precision(17);
  os << d_;
  return os.str();
}

}  // namespace cayley
