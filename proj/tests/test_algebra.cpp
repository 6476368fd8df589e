#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "oracle.hpp"
#include "tlh/algebra.hpp"

using namespace tlh;
using test::half;
using test::tangle;
using test::U;

namespace {

Element dyad(const HalfDiagram& a, const HalfDiagram& b, bool bullet, Coeff c = Coeff(1)) {
  return Element::basis(dyadic_join({a, b, bullet}), c);
}

const HalfDiagram& hb() {
  static const HalfDiagram h = half(3, {{1, 2, true}});
  return h;
}
const HalfDiagram& h() {
  static const HalfDiagram x = half(3, {{2, 3, false}});
  return x;
}

Element word(const std::string& s, int m) { return evaluate_word(parse_word(s), m); }

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("reduction examples") {
    const DecoratedTangle u1 = generator_U(1, 3).tangle();
    DecoratedTangle t = u1;
    t.add_loop(2);
    CHECK(reduce(t) == U(1, 3).scaled(Coeff::delta()));

    t = u1;
    t.add_loop(1);
    CHECK(reduce(t).is_zero());

    // propagating edge with three decorations next to caps {2,3}
    t = tangle(3, {{"N2", "N3", 0}, {"S2", "S3", 0}, {"N1", "S1", 3}});
    CHECK(reduce(t) == U(2, 3) + dyad(h(), h(), true, Coeff(2)));

    t = u1;
    t.add_loop(0);
    t.add_loop(0);
    CHECK(reduce(t) == U(1, 3).scaled(Coeff::delta() * Coeff::delta()));
  }

  TEST_CASE("reduction agrees with the oracle rules") {
    std::mt19937_64 rng(test::kSeed);
    for (int m = 2; m <= 5; ++m) {
      const auto basis = enumerate_diagrams(m);
      for (int s = 0; s < 300; ++s) {
        DecoratedTangle t = basis[rng() % basis.size()].tangle();
        for (int f = 0, n = 1 + static_cast<int>(rng() % 3); f < n; ++f) t = concat(t, basis[rng() % basis.size()].tangle());
        const Element e = reduce(t);
        CHECK(oracle::from_element(e) == oracle::evaluate(oracle::from_tangle(t)));
        CHECK(reduce_by_rewriting(t, rng) == e);
      }
    }
  }

  TEST_CASE("products of basis diagrams agree with the oracle") {
    for (int m = 2; m <= 4; ++m) {
      const auto basis = enumerate_diagrams(m);
      for (const Diagram& x : basis)
        for (const Diagram& y : basis)
          CHECK(oracle::from_element(multiply(x, y)) == oracle::multiply(oracle::from_diagram(x), oracle::from_diagram(y)));
    }
    std::mt19937_64 rng(test::kSeed + 1);
    for (int m = 5; m <= 7; ++m) {
      const auto basis = enumerate_diagrams(m);
      for (int s = 0; s < 300; ++s) {
        const Diagram& x = basis[rng() % basis.size()];
        const Diagram& y = basis[rng() % basis.size()];
        CHECK(oracle::from_element(multiply(x, y)) == oracle::multiply(oracle::from_diagram(x), oracle::from_diagram(y)));
      }
    }
  }

  TEST_CASE("products of elements agree with the oracle") {
    std::mt19937_64 rng(test::kSeed + 2);
    const auto basis = enumerate_diagrams(4);
    auto random_element = [&] {
      Element x(4);
      for (int t = 0; t < 3; ++t)
        x.add(basis[rng() % basis.size()], Coeff::monomial(static_cast<int>(rng() % 5) - 2, GoldenInt(static_cast<long>(rng() % 7) - 3)));
      return x;
    };
    for (int s = 0; s < 100; ++s) {
      const Element x = random_element(), y = random_element();
      CHECK(oracle::from_element(multiply(x, y)) == oracle::multiply(oracle::from_element(x), oracle::from_element(y), 4));
    }
  }

  TEST_CASE("generator relations") {
    CHECK(multiply(U(1, 5), U(3, 5)) == multiply(U(3, 5), U(1, 5)));
    CHECK(multiply(multiply(U(2, 4), U(3, 4)), U(2, 4)) == U(2, 4));
    CHECK(multiply(U(1, 3), U(1, 3)) == U(1, 3).scaled(Coeff::delta()));
    CHECK(word("U1 U2 U1", 3) == dyad(hb(), hb(), false) + dyad(hb(), hb(), true));
    CHECK(word("U1 U2 U1 U2 U1", 3) == word("U1 U2 U1", 3).scaled(Coeff(3)) - U(1, 3));
    CHECK_THROWS_AS(multiply(U(1, 3), U(1, 4)), StrandMismatch);
  }

  TEST_CASE("special elements") {
    const SpecialElements s = special_elements(3);
    CHECK(s.epsilon == dyad(hb(), hb(), true) - dyad(hb(), hb(), false));
    CHECK(multiply(s.epsilon, s.beta) == U(1, 3));
    CHECK(multiply(s.zeta, s.alpha) == U(2, 3));
    CHECK(multiply(U(2, 3), s.epsilon) == multiply(s.zeta, U(1, 3)));
    CHECK(s.alpha == word("U1 U2", 3) - Element::identity(3));
    CHECK(s.zeta == word("U2 U1 U2", 3) - U(2, 3).scaled(Coeff(2)));
    for (int m = 4; m <= 6; ++m) {
      const SpecialElements t = special_elements(m);
      CHECK(multiply(t.epsilon, t.beta) == U(1, m));
      CHECK(multiply(t.zeta, t.alpha) == U(2, m));
    }
  }

  TEST_CASE("presentation") {
    for (int m = 3; m <= 7; ++m) {
      const PresentationReport r = verify_presentation(m);
      CHECK_MESSAGE(r.ok(), "m = ", m);
      CHECK(r.checks.size() >= 4);
    }
    std::vector<Element> bad;
    for (int i = 1; i < 4; ++i) bad.push_back(U(i, 4));
    bad[0] = bad[0].scaled(Coeff(-1));
    CHECK_FALSE(verify_presentation(bad).ok());
    CHECK_FALSE(verify_presentation(bad).failures().empty());
    bad[0] = U(1, 4).scaled(Coeff(2));
    CHECK_FALSE(verify_presentation(bad).ok());
  }

  TEST_CASE("star") {
    const HalfDiagram hb3 = hb(), h3 = h();
    CHECK(star(dyadic_join({hb3, h3, true})) == dyadic_join({h3, hb3, true}));
    std::mt19937_64 rng(test::kSeed + 3);
    for (int m = 2; m <= 5; ++m) {
      const auto basis = enumerate_diagrams(m);
      for (const Diagram& d : basis) CHECK(star(star(d)) == d);
      for (int s = 0; s < 200; ++s) {
        const Diagram& x = basis[rng() % basis.size()];
        const Diagram& y = basis[rng() % basis.size()];
        CHECK(star(multiply(x, y)) == multiply(Element::basis(star(y)), Element::basis(star(x))));
      }
    }
  }

  TEST_CASE("words") {
    CHECK(Letter::parse("U3") == Letter::u(3));
    CHECK(Letter::parse("E2") == Letter::u(2));
    CHECK(Letter::parse("beta").kind == Letter::Kind::beta);
    CHECK(Letter::parse("alpha").starred().kind == Letter::Kind::beta);
    CHECK_THROWS(Letter::parse("U0"));
    CHECK_THROWS(Letter::parse("gamma"));
    CHECK(to_string(GeneratorWord{}) == "1");
    CHECK(parse_word("U1,U2 beta").size() == 3);
    CHECK(word("epsilon beta", 3) == U(1, 3));
    CHECK(evaluate_word({}, 4) == Element::identity(4));
  }

  TEST_CASE("factorization examples") {
    CHECK(factorize(generator_U(1, 3)) == GeneratorWord{Letter::u(1)});
    CHECK(factorize(dyadic_join({hb(), h(), true})) == GeneratorWord{Letter::u(1), Letter::u(2)});
    CHECK(factorize(dyadic_join({hb(), hb(), true})) == GeneratorWord{Letter::u(1), Letter{Letter::Kind::beta, 0}});
    CHECK(factorize(Diagram::identity(5)).empty());
  }

  TEST_CASE("factorization round trip") {
    for (int m = 1; m <= 6; ++m)
      for (const Diagram& d : enumerate_diagrams(m)) {
        const Element e = evaluate_word(factorize(d), m);
        CHECK(e.as_diagram() == std::optional<Diagram>(d));
      }
  }

  TEST_CASE("positivity") {
    const PositivityReport r = positivity_check(3);
    CHECK(r.ok());
    CHECK(r.products == 81);
    CHECK(delta_power_form(Coeff::delta()) == std::optional<std::pair<Integer, int>>({Integer(1), 1}));
    CHECK(delta_power_form(Coeff(3) * Coeff::delta() * Coeff::delta()) == std::optional<std::pair<Integer, int>>({Integer(3), 2}));
    CHECK_FALSE(delta_power_form(Coeff(-1)).has_value());
    CHECK_FALSE(delta_power_form(Coeff(GoldenInt::phi())).has_value());
    CHECK_FALSE(delta_power_form(Coeff::v()).has_value());
    CHECK(positivity_check(4).ok());
  }
}
