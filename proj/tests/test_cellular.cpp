#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "oracle.hpp"
#include "tlh/cellular.hpp"

using namespace tlh;
using test::half;
using test::U;
using Kind = CellLabel::Kind;

namespace {

LaurentRat rat(const oracle::Poly& p) {
  LaurentRat out;
  for (const auto& [e, c] : p) out.add_term(e, GoldenRat(Rational(c.a), Rational(c.b)));
  return out;
}

oracle::Poly scale(const oracle::Poly& p, oracle::Gold g) { return oracle::times(p, oracle::constant(g)); }

// Oracle form of C(lambda, s, t) as a raw combination.
oracle::Combination cell(const CellLabel& l, const HalfDiagram& s, const HalfDiagram& t) {
  oracle::Combination out;
  out[oracle::key_of(oracle::join(s, t, false))] = oracle::constant({1, 0});
  if (l.kind == Kind::zero || l.kind == Kind::middle) return out;
  const oracle::Gold gamma = l.kind == Kind::plain ? oracle::Gold{0, 1} : oracle::Gold{1, -1};
  out[oracle::key_of(oracle::join(s, t, false))] = oracle::constant(oracle::Gold{0, 0} - gamma);
  out[oracle::key_of(oracle::join(s, t, true))] = oracle::constant({1, 0});
  return out;
}

oracle::Poly lookup(const oracle::Combination& c, const oracle::Key& k) {
  auto it = c.find(k);
  return it == c.end() ? oracle::Poly{} : it->second;
}

// Coefficient of C(lambda, s, t) in x, assuming x has no component on the
// partner label at the same cells (checked).
oracle::Poly cell_coefficient(const oracle::Combination& x, const CellLabel& l, const HalfDiagram& s, const HalfDiagram& t) {
  const oracle::Poly plain = lookup(x, oracle::key_of(oracle::join(s, t, false)));
  if (l.kind == Kind::zero || l.kind == Kind::middle) return plain;
  const oracle::Poly dotted = lookup(x, oracle::key_of(oracle::join(s, t, true)));
  const oracle::Gold gamma = l.kind == Kind::plain ? oracle::Gold{0, 1} : oracle::Gold{1, -1};
  // D coefficient must be -gamma times the D* coefficient
  oracle::Poly residue = plain;
  for (const auto& [e, c] : scale(dotted, gamma)) oracle::add_to(residue, e, c);
  CHECK_MESSAGE(residue.empty(), "component on the partner label");
  return dotted;
}

oracle::Combination element_combination(const Element& x) { return oracle::from_element(x); }

RingMatrix oracle_gram(const CellLabel& l, int m) {
  const auto tab = cell_tableaux(l, m);
  const HalfDiagram& e = tab.front();
  RingMatrix g(tab.size(), tab.size());
  for (std::size_t i = 0; i < tab.size(); ++i)
    for (std::size_t j = 0; j < tab.size(); ++j)
      g.at(i, j) = rat(cell_coefficient(oracle::multiply(cell(l, e, tab[i]), cell(l, tab[j], e), m), l, e, e));
  return g;
}

RingMatrix oracle_action(const Element& a, const CellLabel& l, std::size_t t) {
  const int m = a.strands();
  const auto tab = cell_tableaux(l, m);
  RingMatrix r(tab.size(), tab.size());
  const auto ax = element_combination(a);
  for (std::size_t s = 0; s < tab.size(); ++s) {
    const auto product = oracle::multiply(ax, cell(l, tab[s], tab[t]), m);
    for (std::size_t s2 = 0; s2 < tab.size(); ++s2) r.at(s2, s) = rat(cell_coefficient(product, l, tab[s2], tab[t]));
  }
  return r;
}

LaurentRat v(int e) { return LaurentRat::monomial(e); }
LaurentRat c(long a, long b) { return LaurentRat(GoldenRat(Rational(a), Rational(b))); }

}  // namespace

TEST_SUITE("cellular") {
  TEST_CASE("label poset") {
    const auto p2 = lambda_poset(3);
    CHECK(p2 == std::vector<CellLabel>{CellLabel::zero(), CellLabel::plain(1), CellLabel::bullet(1)});
    CHECK(precedes(CellLabel::plain(1), CellLabel::zero()));
    CHECK(precedes(CellLabel::bullet(1), CellLabel::zero()));
    CHECK_FALSE(precedes(CellLabel::plain(1), CellLabel::bullet(1)));
    CHECK_FALSE(precedes(CellLabel::bullet(1), CellLabel::plain(1)));

    const auto p3 = lambda_poset(4);
    CHECK(p3 == std::vector<CellLabel>{CellLabel::zero(), CellLabel::plain(1), CellLabel::bullet(1), CellLabel::middle(4)});
    CHECK(precedes(CellLabel::middle(4), CellLabel::plain(1)));
    CHECK(precedes(CellLabel::middle(4), CellLabel::bullet(1)));
    CHECK(lambda_poset(5).size() == 5);
    CHECK_FALSE(label_exists(CellLabel::bullet(2), 4));
    CHECK_FALSE(label_exists(CellLabel::middle(5), 5));
  }

  TEST_CASE("label selectors") {
    CHECK(CellLabel::parse("0", 4) == CellLabel::zero());
    CHECK(CellLabel::parse("1b", 4) == CellLabel::bullet(1));
    CHECK(CellLabel::parse("2", 4) == CellLabel::middle(4));
    CHECK(CellLabel::parse("mid", 6) == CellLabel::middle(6));
    CHECK(CellLabel::parse("2", 5) == CellLabel::plain(2));
    CHECK(CellLabel::bullet(2).to_string() == "2b");
    CHECK_THROWS(CellLabel::parse("3", 5));
    CHECK_THROWS(CellLabel::parse("2b", 4));
    CHECK_THROWS(CellLabel::parse("mid", 5));
    CHECK_THROWS(CellLabel::parse("x", 5));
  }

  TEST_CASE("cell sizes") {
    for (int m = 1; m <= 9; ++m)
      for (const CellLabel& l : lambda_poset(m))
        CHECK(cell_tableaux(l, m).size() == (l.k == 0 ? 1 : binomial(m, l.k) - 1));
  }

  TEST_CASE("cell basis examples") {
    const HalfDiagram hb = half(3, {{1, 2, true}}), h = half(3, {{2, 3, false}});
    CHECK(cell_basis(CellLabel::plain(1), hb, h) ==
          Element::basis(dyadic_join({hb, h, true})) - Element::basis(dyadic_join({hb, h, false}), Coeff(GoldenInt::phi())));
    CHECK(cell_basis(CellLabel::zero(), HalfDiagram(3), HalfDiagram(3)) == Element::identity(3));
    const auto mids = cell_tableaux(CellLabel::middle(4), 4);
    for (const auto& a : mids)
      for (const auto& b : mids) CHECK(cell_basis(CellLabel::middle(4), a, b) == Element::basis(dyadic_join({a, b, false})));
    CHECK_THROWS(cell_basis(CellLabel::plain(1), hb, HalfDiagram(3)));
  }

  TEST_CASE("expansion in the cell basis") {
    const HalfDiagram hb = half(3, {{1, 2, true}}), h = half(3, {{2, 3, false}});
    const CellExpansion e = expand_in_cell_basis(Element::basis(dyadic_join({hb, h, false})));
    const GoldenRat inv = (GoldenRat::gamma2() - GoldenRat::gamma1()).inverse();
    REQUIRE(e.size() == 2);
    CHECK(e.at({CellLabel::plain(1), hb, h}) == LaurentRat(inv));
    CHECK(e.at({CellLabel::bullet(1), hb, h}) == LaurentRat(-inv));

    const CellExpansion id = expand_in_cell_basis(Element::identity(3));
    REQUIRE(id.size() == 1);
    CHECK(id.begin()->first.label == CellLabel::zero());
    CHECK(id.begin()->second == LaurentRat(1));

    std::mt19937_64 rng(test::kSeed);
    for (int m = 2; m <= 5; ++m) {
      const auto basis = enumerate_diagrams(m);
      for (int s = 0; s < 50; ++s) {
        Element x(m);
        for (int t = 0; t < 4; ++t) x.add(basis[rng() % basis.size()], Coeff::monomial(static_cast<int>(rng() % 3), GoldenInt(1 + static_cast<long>(rng() % 4))));
        CHECK(resum(expand_in_cell_basis(x), m) == to_rational(x));
      }
    }
  }

  TEST_CASE("action matrices") {
    const CellLabel one = CellLabel::plain(1);
    CHECK(cell_action_matrix(Element::identity(3), one) == RingMatrix::identity(2));
    const RingMatrix u1 = cell_action_matrix(U(1, 3), one);
    CHECK(u1 == cell_action_matrix_for(U(1, 3), one, 0));
    CHECK(u1 == cell_action_matrix_for(U(1, 3), one, 1));
    CHECK(u1.rows() == 2);
    const RingMatrix z = cell_action_matrix(U(1, 3), CellLabel::zero());
    CHECK(z.rows() == 1);
    CHECK(z.is_zero());
  }

  TEST_CASE("action matrices agree with the oracle") {
    for (int m = 3; m <= 5; ++m)
      for (const CellLabel& l : lambda_poset(m))
        for (int i = 1; i < m; ++i) {
          const Element a = U(i, m);
          const std::size_t n = cell_tableaux(l, m).size();
          for (std::size_t t = 0; t < n && t < 3; ++t) CHECK(oracle_action(a, l, t) == cell_action_matrix_for(a, l, t));
        }
  }

  TEST_CASE("cellular axioms") {
    const std::size_t sizes[] = {0, 0, 0, 9, 44, 195};
    for (int m = 3; m <= 5; ++m) {
      const AxiomReport r = verify_cellular_axioms(m);
      CHECK_MESSAGE(r.ok(), "m = ", m);
      CHECK(r.cell_basis_size == sizes[m]);
      CHECK(r.rank == sizes[m]);
      CHECK(r.diagram_count == sizes[m]);
    }
    CHECK_THROWS_AS(verify_cellular_axioms(7), ResourceCapExceeded);
  }

  TEST_CASE("gram matrix on three strands") {
    const RingMatrix g = gram_matrix(CellLabel::plain(1), 3);
    REQUIRE(g.rows() == 2);
    const LaurentRat two = v(1) + v(-1);
    const LaurentRat diag = two * c(1, -2);
    const LaurentRat off = c(1, -2) * c(1, -1);
    CHECK(off == c(3, -1));
    const auto tab = cell_tableaux(CellLabel::plain(1), 3);
    CHECK(g.at(0, 0) == diag);
    CHECK(g.at(1, 1) == diag);
    CHECK(g.at(0, 1) == off);
    CHECK(g.at(1, 0) == off);
    CHECK(v(-1) * g.at(0, 0) == (LaurentRat(1) + v(-2)) * c(1, -2));
    const LaurentRat det = c(1, -2) * c(1, -2) * (two * two - c(1, -1) * c(1, -1));
    CHECK(g.determinant() == det);
    CHECK(det == v(2).scaled(GoldenRat(5)) + c(0, 5) + v(-2).scaled(GoldenRat(5)));
  }

  TEST_CASE("gram matrices agree with the oracle") {
    for (int m = 2; m <= 5; ++m)
      for (const CellLabel& l : lambda_poset(m)) CHECK(oracle_gram(l, m) == gram_matrix(l, m));
  }

  TEST_CASE("semisimplicity") {
    CHECK(gram_diagonal_leading(CellLabel::plain(2)) == GoldenRat(1) - GoldenRat::gamma1() * GoldenRat(2));
    CHECK(gram_diagonal_leading(CellLabel::bullet(1)) == GoldenRat(1) - GoldenRat::gamma2() * GoldenRat(2));
    CHECK(gram_diagonal_leading(CellLabel::zero()) == GoldenRat(1));
    for (int m = 2; m <= 5; ++m) {
      const SemisimplicityReport r = semisimplicity_check(m);
      CHECK_MESSAGE(r.ok(), "m = ", m);
      for (const GramRecord& g : r.records) {
        CHECK_FALSE(g.determinant.is_zero());
        CHECK(g.symmetric);
        CHECK(g.almost_orthogonal);
      }
    }
  }

  TEST_CASE("determinant") {
    RingMatrix a(2, 2);
    a.at(0, 0) = v(1);
    a.at(0, 1) = c(0, 1);
    a.at(1, 0) = c(2, 0);
    a.at(1, 1) = v(-1);
    CHECK(a.determinant() == LaurentRat(1) - c(0, 2));
    CHECK(RingMatrix::identity(4).determinant() == LaurentRat(1));
    CHECK((a * RingMatrix::identity(2)) == a);
    CHECK((a * a).determinant() == a.determinant() * a.determinant());
  }

  TEST_CASE("branching labels") {
    CHECK(label_minus_one(CellLabel::plain(2), 6) == CellLabel::plain(1));
    CHECK(label_minus_one(CellLabel::bullet(2), 6) == CellLabel::bullet(1));
    bool guard = true;
    label_minus_one(CellLabel::bullet(2), 7, &guard);
    CHECK_FALSE(guard);
    for (int m = 2; m <= 9; ++m) CHECK(branching_dimension_identity_failures(m).empty());
  }

  TEST_CASE("branching examples") {
    const BranchingReport one = branching_report(CellLabel::plain(1), 4);
    CHECK(one.ok());
    CHECK(one.dim == 3);
    REQUIRE(one.factors.size() == 2);
    CHECK(one.factors[0].label == CellLabel::zero());
    CHECK(one.factors[0].dim == 1);
    CHECK(one.factors[1].label == CellLabel::plain(1));
    CHECK(one.factors[1].dim == 2);

    const BranchingReport mid = branching_report(CellLabel::middle(4), 4);
    CHECK(mid.ok());
    CHECK(mid.dim == 5);
    REQUIRE(mid.factors.size() == 3);
    CHECK(mid.factors[0].dim == 1);
    CHECK(mid.direct_sum);
    std::set<CellLabel> labels;
    for (const auto& f : mid.factors) labels.insert(f.label);
    CHECK(labels == std::set<CellLabel>{CellLabel::zero(), CellLabel::plain(1), CellLabel::bullet(1)});

    const BranchingReport b2 = branching_report(CellLabel::bullet(2), 6);
    CHECK(b2.ok());
    CHECK(b2.dim == 14);
    REQUIRE(b2.factors.size() == 3);
    CHECK(b2.factors[0].dim == 1);
    labels.clear();
    for (const auto& f : b2.factors) labels.insert(f.label);
    CHECK(labels == std::set<CellLabel>{CellLabel::zero(), CellLabel::bullet(1), CellLabel::bullet(2)});
  }

  TEST_CASE("branching for every label") {
    for (int m = 4; m <= 7; ++m)
      for (const CellLabel& l : lambda_poset(m)) {
        if (l.kind == Kind::zero) continue;
        const BranchingReport r = branching_report(l, m);
        CHECK_MESSAGE(r.ok(), "m = ", m, " label ", l.to_string());
        CHECK(r.block_triangular);
        CHECK(r.blocks_match);
        CHECK(r.dims_ok);
        CHECK_FALSE(r.guard_hit);
      }
  }
}
