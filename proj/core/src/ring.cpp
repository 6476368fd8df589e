#include <stdexcept>
#include <string>

#include "tlh/golden.hpp"
#include "tlh/laurent.hpp"

namespace tlh {

template <GoldenCoordinate R>
std::string Golden<R>::to_string() const {
  if (sgn(b_) == 0) return a_.get_str();
  std::string s;
  if (sgn(a_) != 0) s = a_.get_str() + (sgn(b_) > 0 ? "+" : "-");
  else if (sgn(b_) < 0) s = "-";
  R mag = abs(b_);
  if (mag != 1) s += mag.get_str() + "*";
  return s + "phi";
}

template class Golden<Integer>;
template class Golden<Rational>;

GoldenRat to_rational(const GoldenInt& x) { return GoldenRat(Rational(x.a()), Rational(x.b())); }

GoldenInt to_integer(const GoldenRat& x) {
  if (x.a().get_den() != 1 || x.b().get_den() != 1)
    throw std::domain_error("golden: non-integral coordinate " + x.to_string());
  return GoldenInt(Integer(x.a().get_num()), Integer(x.b().get_num()));
}

GoldenInt fib_reduce(int r) {
  if (r < 0) throw std::invalid_argument("fib_reduce: negative decoration count");
  // (F(r-1), F(r)) starting from (F(-1), F(0)) = (1, 0)
  Integer prev = 1, cur = 0;
  for (int i = 0; i < r; ++i) {
    Integer next = prev + cur;
    prev = cur;
    cur = next;
  }
  return GoldenInt(prev, cur);
}

LaurentRat to_rational(const LaurentInt& p) {
  LaurentRat out;
  for (const auto& [e, c] : p.terms()) out.add_term(e, to_rational(c));
  return out;
}

}  // namespace tlh
