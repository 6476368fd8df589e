#pragma once

#include <concepts>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace tlh {

using Integer = mpz_class;
using Rational = mpq_class;

template <class R>
concept GoldenCoordinate = std::same_as<R, Integer> || std::same_as<R, Rational>;

/// Element a + b*phi of Z[phi] or Q(phi), with phi^2 = phi + 1.
///
/// phi plays the role of the decoration symbol gamma and of the root gamma1;
/// the conjugate root gamma2 is 1 - phi. Division is only available over the
/// rationals: 1 - 2*phi (the difference of the two roots) has norm -5, so it
/// is not a unit of Z[phi].
template <GoldenCoordinate R>
class Golden {
 public:
  Golden() = default;
  Golden(long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  Golden(R a, R b) : a_(std::move(a)), b_(std::move(b)) { canonicalize(); }

  static Golden phi() { return Golden(R(0), R(1)); }
  static Golden gamma1() { return phi(); }
  static Golden gamma2() { return Golden(R(1), R(-1)); }

  const R& a() const { return a_; }
  const R& b() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  /// Image under the Galois involution phi -> 1 - phi.
  Golden conjugate() const { return Golden(R(a_ + b_), R(-b_)); }

  /// x * conjugate(x) = a^2 + ab - b^2.
  R norm() const { return R(a_ * a_ + a_ * b_ - b_ * b_); }

  Golden inverse() const
    requires std::same_as<R, Rational>
  {
    if (is_zero()) throw std::domain_error("golden: division by zero");
    const R n = norm();
    Golden c = conjugate();
    return Golden(R(c.a_ / n), R(c.b_ / n));
  }

  Golden& operator+=(const Golden& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  Golden& operator-=(const Golden& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  Golden& operator*=(const Golden& o) {
    // (a + b phi)(c + d phi) = (ac + bd) + (ad + bc + bd) phi
    R bd = b_ * o.b_;
    R na = a_ * o.a_ + bd;
    R nb = a_ * o.b_ + b_ * o.a_ + bd;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
  }
  Golden& operator/=(const Golden& o)
    requires std::same_as<R, Rational>
  {
    return *this *= o.inverse();
  }

  friend Golden operator+(Golden x, const Golden& y) { return x += y; }
  friend Golden operator-(Golden x, const Golden& y) { return x -= y; }
  friend Golden operator*(Golden x, const Golden& y) { return x *= y; }
  friend Golden operator/(Golden x, const Golden& y)
    requires std::same_as<R, Rational>
  {
    return x /= y;
  }
  Golden operator-() const { return Golden(R(-a_), R(-b_)); }

  friend bool operator==(const Golden& x, const Golden& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

  std::string to_string() const;

 private:
  void canonicalize() {
    if constexpr (std::same_as<R, Rational>) {
      a_.canonicalize();
      b_.canonicalize();
    }
  }

  R a_{0};
  R b_{0};
};

using GoldenInt = Golden<Integer>;
using GoldenRat = Golden<Rational>;

GoldenRat to_rational(const GoldenInt& x);

/// Lowers a rational golden scalar to Z[phi]; throws if a coordinate is not integral.
GoldenInt to_integer(const GoldenRat& x);

/// gamma^r = F(r-1) + F(r) gamma with F(0) = 0, F(1) = 1 (so F(-1) = 1).
/// The a-coordinate weighs the undecorated strand, the b-coordinate the
/// singly decorated one.
GoldenInt fib_reduce(int r);

template <GoldenCoordinate R>
std::ostream& operator<<(std::ostream& os, const Golden<R>& x) {
  return os << x.to_string();
}

extern template class Golden<Integer>;
extern template class Golden<Rational>;

}  // namespace tlh
