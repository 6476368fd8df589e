#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tlh/golden.hpp"

namespace tlh {

/// Laurent polynomial in v with coefficients in a golden ring.
///
/// Terms are kept in a sorted map from exponent to nonzero coefficient, so
/// the zero polynomial is the empty map and equality is structural.
template <class C>
class Laurent {
 public:
  using Coefficient = C;
  using TermMap = std::map<int, C>;

  Laurent() = default;
  Laurent(long c) { add_term(0, C(c)); }  // NOLINT(google-explicit-constructor)
  Laurent(C c) { add_term(0, std::move(c)); }  // NOLINT(google-explicit-constructor)

  static Laurent monomial(int exponent, C c = C(1)) {
    Laurent p;
    p.add_term(exponent, std::move(c));
    return p;
  }
  static Laurent v() { return monomial(1); }
  /// [2] = v + v^-1, the loop value.
  static Laurent delta() { return monomial(1) + monomial(-1); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  int min_exponent() const { return terms_.begin()->first; }
  int max_exponent() const { return terms_.rbegin()->first; }

  /// Coefficient of v^e (zero when absent).
  C coefficient(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C() : it->second;
  }

  /// Returns the constant scalar if the polynomial has no v-dependence.
  std::optional<C> as_constant() const {
    if (terms_.empty()) return C();
    if (terms_.size() == 1 && terms_.begin()->first == 0) return terms_.begin()->second;
    return std::nullopt;
  }

  void add_term(int exponent, const C& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  friend Laurent operator+(Laurent x, const Laurent& y) { return x += y; }
  friend Laurent operator-(Laurent x, const Laurent& y) { return x -= y; }
  friend Laurent operator*(const Laurent& x, const Laurent& y) {
    Laurent out;
    for (const auto& [e1, c1] : x.terms_)
      for (const auto& [e2, c2] : y.terms_) out.add_term(e1 + e2, c1 * c2);
    return out;
  }
  Laurent operator-() const {
    Laurent out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }

  Laurent scaled(const C& s) const {
    Laurent out;
    if (s.is_zero()) return out;
    for (const auto& [e, c] : terms_) out.add_term(e, c * s);
    return out;
  }

  /// Multiplication by v^k.
  Laurent shifted(int k) const {
    Laurent out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
    return out;
  }

  /// Exact quotient by [2] = v + v^-1, or nullopt if [2] does not divide.
  /// Works over any coefficient ring because v^2 + 1 is monic.
  std::optional<Laurent> divide_by_delta() const {
    if (is_zero()) return Laurent();
    // this = v^lo * A(v); [2] = v^-1 (v^2 + 1). Divide A by v^2 + 1.
    const int lo = min_exponent();
    const int deg = max_exponent() - lo;
    if (deg < 2) return std::nullopt;
    std::vector<C> rem(deg + 1);
    for (const auto& [e, c] : terms_) rem[e - lo] = c;
    std::vector<C> q(deg - 1);
    for (int i = deg; i >= 2; --i) {
      q[i - 2] = rem[i];
      rem[i - 2] -= rem[i];
      rem[i] = C();
    }
    if (!rem[0].is_zero() || !rem[1].is_zero()) return std::nullopt;
    Laurent out;
    for (int i = 0; i < deg - 1; ++i) out.add_term(lo + i + 1, q[i]);
    return out;
  }

  /// Exact quotient in the Laurent ring over a field; throws if not exact.
  Laurent exact_divide(const Laurent& d) const
    requires requires(C x) { x / x; }
  {
    if (d.is_zero()) throw std::domain_error("laurent: division by zero");
    if (is_zero()) return Laurent();
    const int shift = min_exponent() - d.min_exponent();
    const int na = max_exponent() - min_exponent();
    const int nd = d.max_exponent() - d.min_exponent();
    if (na < nd) throw std::domain_error("laurent: inexact division");
    std::vector<C> rem(na + 1), div(nd + 1);
    for (const auto& [e, c] : terms_) rem[e - min_exponent()] = c;
    for (const auto& [e, c] : d.terms_) div[e - d.min_exponent()] = c;
    const C lead_inv = C(1) / div[nd];
    Laurent q;
    for (int i = na; i >= nd; --i) {
      if (rem[i].is_zero()) continue;
      C f = rem[i] * lead_inv;
      for (int j = 0; j <= nd; ++j) rem[i - nd + j] -= f * div[j];
      q.add_term(shift + i - nd, f);
    }
    for (const auto& c : rem)
      if (!c.is_zero()) throw std::domain_error("laurent: inexact division");
    return q;
  }

  friend bool operator==(const Laurent& x, const Laurent& y) { return x.terms_ == y.terms_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!s.empty()) s += " + ";
      s += "(" + it->second.to_string() + ")";
      if (it->first != 0) s += "v^" + std::to_string(it->first);
    }
    return s;
  }

 private:
  TermMap terms_;
};

using LaurentInt = Laurent<GoldenInt>;
using LaurentRat = Laurent<GoldenRat>;

LaurentRat to_rational(const LaurentInt& p);

template <class C>
std::ostream& operator<<(std::ostream& os, const Laurent<C>& p) {
  return os << p.to_string();
}

}  // namespace tlh
