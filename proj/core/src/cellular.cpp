#include "tlh/cellular.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace tlh {

namespace {

const GoldenRat& inverse_root_difference() {
  static const GoldenRat x = GoldenRat(1) / (GoldenRat::gamma2() - GoldenRat::gamma1());
  return x;
}

template <class Map, class Key>
void accumulate(Map& map, const Key& key, const LaurentRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = map.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) map.erase(it);
  }
}

std::map<HalfDiagram, std::size_t> index_of(const std::vector<HalfDiagram>& v) {
  std::map<HalfDiagram, std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.emplace(v[i], i);
  return out;
}

std::string key_string(const CellKey& key) {
  return "C(" + key.label.to_string() + ", " + key.top.to_string() + ", " + key.bottom.to_string() + ")";
}

}  // namespace

// ---------------------------------------------------------------------------
// Labels

CellLabel CellLabel::parse(const std::string& s, int m) {
  CellLabel l;
  if (s == "0") {
    l = zero();
  } else if (s == "mid") {
    l = middle(m);
  } else {
    std::string digits = s;
    const bool b = !digits.empty() && digits.back() == 'b';
    if (b) digits.pop_back();
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw std::invalid_argument("bad cell label '" + s + "'");
    const int k = std::stoi(digits);
    if (!b && 2 * k == m) l = middle(m);
    else l = b ? bullet(k) : plain(k);
  }
  if (!label_exists(l, m)) throw std::invalid_argument("cell label '" + s + "' does not exist for " + std::to_string(m) + " strands");
  return l;
}

std::string CellLabel::to_string() const {
  switch (kind) {
    case Kind::zero:
      return "0";
    case Kind::plain:
      return std::to_string(k);
    case Kind::bullet:
      return std::to_string(k) + "b";
    case Kind::middle:
      return "mid";
  }
  return "?";
}

bool label_exists(const CellLabel& l, int m) {
  switch (l.kind) {
    case CellLabel::Kind::zero:
      return l.k == 0 && m >= 1;
    case CellLabel::Kind::plain:
    case CellLabel::Kind::bullet:
      return l.k >= 1 && 2 * l.k < m;
    case CellLabel::Kind::middle:
      return m >= 2 && m % 2 == 0 && 2 * l.k == m;
  }
  return false;
}

std::vector<CellLabel> lambda_poset(int m) {
  if (m < 1) throw std::domain_error("lambda_poset: needs m >= 1");
  std::vector<CellLabel> out{CellLabel::zero()};
  for (int k = 1; 2 * k < m; ++k) {
    out.push_back(CellLabel::plain(k));
    out.push_back(CellLabel::bullet(k));
  }
  if (m % 2 == 0) out.push_back(CellLabel::middle(m));
  return out;
}

bool precedes(const CellLabel& a, const CellLabel& b) { return a.k > b.k; }

std::vector<HalfDiagram> cell_tableaux(const CellLabel& l, int m) {
  if (!label_exists(l, m)) throw std::invalid_argument("cell_tableaux: label " + l.to_string() + " does not exist");
  return enumerate_half(m, l.k);
}

// ---------------------------------------------------------------------------
// Cell basis

Element cell_basis(const CellLabel& l, const HalfDiagram& d1, const HalfDiagram& d2) {
  const int m = d1.points();
  if (d2.points() != m) throw std::invalid_argument("cell_basis: half-diagrams on different point counts");
  if (!label_exists(l, m)) throw std::invalid_argument("cell_basis: label " + l.to_string() + " does not exist");
  for (const HalfDiagram* d : {&d1, &d2})
    if (d->pair_count() != l.k || d->structural_error() || !d->admissible())
      throw std::invalid_argument("cell_basis: " + d->to_string() + " is not in M(" + l.to_string() + ")");
  const Diagram plain = dyadic_join({d1, d2, false});
  if (l.kind == CellLabel::Kind::zero || l.kind == CellLabel::Kind::middle) return Element::basis(plain);
  const GoldenInt gamma = l.kind == CellLabel::Kind::plain ? GoldenInt::gamma1() : GoldenInt::gamma2();
  return Element::basis(dyadic_join({d1, d2, true})) - Element::basis(plain, Coeff(gamma));
}

CellExpansion expand_in_cell_basis(const Element& x) {
  const int m = x.strands();
  CellExpansion out;
  const GoldenRat& inv = inverse_root_difference();
  for (const auto& [d, c] : x.terms()) {
    const LaurentRat rc = to_rational(c);
    const DyadicForm& f = d.dyadic();
    const int k = f.level();
    if (k == 0) {
      accumulate(out, CellKey{CellLabel::zero(), f.top, f.bottom}, rc);
    } else if (2 * k == m) {
      accumulate(out, CellKey{CellLabel::middle(m), f.top, f.bottom}, rc);
    } else {
      const CellKey p{CellLabel::plain(k), f.top, f.bottom};
      const CellKey b{CellLabel::bullet(k), f.top, f.bottom};
      if (!f.bullet) {
        accumulate(out, p, rc.scaled(inv));
        accumulate(out, b, -rc.scaled(inv));
      } else {
        accumulate(out, p, rc.scaled(GoldenRat::gamma2() * inv));
        accumulate(out, b, -rc.scaled(GoldenRat::gamma1() * inv));
      }
    }
  }
  return out;
}

RationalCombination resum(const CellExpansion& e, int m) {
  RationalCombination out;
  for (const auto& [key, c] : e) {
    const Element basis = cell_basis(key.label, key.top, key.bottom);
    if (basis.strands() != m) throw StrandMismatch("resum: strand count mismatch");
    for (const auto& [d, x] : basis.terms()) accumulate(out, d, c * to_rational(x));
  }
  return out;
}

RationalCombination to_rational(const Element& x) {
  RationalCombination out;
  for (const auto& [d, c] : x.terms()) out.emplace(d, to_rational(c));
  return out;
}

// ---------------------------------------------------------------------------
// Matrices

RingMatrix RingMatrix::identity(std::size_t n) {
  RingMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out.at(i, i) = LaurentRat(1);
  return out;
}

bool RingMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const LaurentRat& x) { return x.is_zero(); });
}

bool RingMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (!(at(i, j) == at(j, i))) return false;
  return true;
}

RingMatrix RingMatrix::block(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  RingMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out.at(i, j) = at(rows[i], cols[j]);
  return out;
}

LaurentRat RingMatrix::determinant() const {
  if (rows_ != cols_) throw std::domain_error("determinant: matrix is not square");
  const std::size_t n = rows_;
  if (n == 0) return LaurentRat(1);
  RingMatrix a = *this;
  LaurentRat prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k).is_zero()) {
      std::size_t r = k + 1;
      while (r < n && a.at(r, k).is_zero()) ++r;
      if (r == n) return LaurentRat();
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(r, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)).exact_divide(prev);
      a.at(i, k) = LaurentRat();
    }
    prev = a.at(k, k);
  }
  return negate ? -a.at(n - 1, n - 1) : a.at(n - 1, n - 1);
}

RingMatrix operator*(const RingMatrix& x, const RingMatrix& y) {
  if (x.cols_ != y.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  RingMatrix out(x.rows_, y.cols_);
  for (std::size_t i = 0; i < x.rows_; ++i)
    for (std::size_t k = 0; k < x.cols_; ++k) {
      const LaurentRat& a = x.at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < y.cols_; ++j)
        if (!y.at(k, j).is_zero()) out.at(i, j) += a * y.at(k, j);
    }
  return out;
}

std::string RingMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j);
    os << "]\n";
  }
  return os.str();
}

std::size_t rank(const std::vector<std::map<std::size_t, GoldenRat>>& rows) {
  std::map<std::size_t, std::map<std::size_t, GoldenRat>> pivots;  // leading column -> row with leading 1
  for (auto cur : rows) {
    while (!cur.empty()) {
      const auto [col, lead] = *cur.begin();
      auto it = pivots.find(col);
      if (it == pivots.end()) {
        const GoldenRat inv = GoldenRat(1) / lead;
        for (auto& [c, v] : cur) v *= inv;
        pivots.emplace(col, std::move(cur));
        break;
      }
      for (const auto& [c, v] : it->second) {
        GoldenRat& slot = cur[c];
        slot -= lead * v;
        if (slot.is_zero()) cur.erase(c);
      }
    }
  }
  return pivots.size();
}

// ---------------------------------------------------------------------------
// Action matrices

RingMatrix cell_action_matrix_for(const Element& a, const CellLabel& l, std::size_t t) {
  const int m = a.strands();
  const std::vector<HalfDiagram> tableaux = cell_tableaux(l, m);
  if (t >= tableaux.size()) throw std::out_of_range("cell_action_matrix: tableau index out of range");
  const auto index = index_of(tableaux);
  RingMatrix out(tableaux.size(), tableaux.size());
  for (std::size_t s = 0; s < tableaux.size(); ++s) {
    const Element product = multiply(a, cell_basis(l, tableaux[s], tableaux[t]));
    for (const auto& [key, c] : expand_in_cell_basis(product)) {
      if (precedes(key.label, l)) continue;
      if (key.label == l && key.bottom == tableaux[t]) {
        out.at(index.at(key.top), s) = c;
        continue;
      }
      throw CellularViolation("a . C(" + l.to_string() + ", " + tableaux[s].to_string() + ", " + tableaux[t].to_string() +
                              ") has a component on " + key_string(key));
    }
  }
  return out;
}

RingMatrix cell_action_matrix(const Element& a, const CellLabel& l) {
  const std::size_t n = cell_tableaux(l, a.strands()).size();
  const RingMatrix first = cell_action_matrix_for(a, l, 0);
  for (std::size_t t = 1; t < n; ++t)
    if (!(cell_action_matrix_for(a, l, t) == first))
      throw IndependenceViolation("action coefficients for label " + l.to_string() + " depend on T (T index " +
                                  std::to_string(t) + ")");
  return first;
}

AxiomReport verify_cellular_axioms(int m, int cap) {
  if (m > cap)
    throw ResourceCapExceeded("verify_cellular_axioms: m = " + std::to_string(m) + " exceeds cap " + std::to_string(cap));
  AxiomReport report;
  report.m = m;
  const std::vector<Diagram> diagrams = enumerate_diagrams(m);
  report.diagram_count = diagrams.size();
  std::map<Diagram, std::size_t> column;
  for (std::size_t i = 0; i < diagrams.size(); ++i) column.emplace(diagrams[i], i);

  std::vector<std::map<std::size_t, GoldenRat>> rows;
  for (const CellLabel& l : lambda_poset(m)) {
    const auto tableaux = cell_tableaux(l, m);
    for (const auto& s : tableaux) {
      for (const auto& t : tableaux) {
        const Element c = cell_basis(l, s, t);
        std::map<std::size_t, GoldenRat> row;
        for (const auto& [d, x] : c.terms()) {
          auto constant = x.as_constant();
          if (!constant) {
            report.failures.push_back("axiom 1: C(" + l.to_string() + ") has a non-constant coefficient");
            continue;
          }
          row.emplace(column.at(d), to_rational(*constant));
        }
        rows.push_back(std::move(row));
        ++report.star_checks;
        if (!(star(c) == cell_basis(l, t, s)))
          report.failures.push_back("axiom 2: star C(" + l.to_string() + ", " + s.to_string() + ", " + t.to_string() +
                                    ") != C(" + l.to_string() + ", " + t.to_string() + ", " + s.to_string() + ")");
      }
    }
  }
  report.cell_basis_size = rows.size();
  report.rank = rank(rows);
  if (report.cell_basis_size != report.diagram_count)
    report.failures.push_back("axiom 1: " + std::to_string(report.cell_basis_size) + " cell basis elements for " +
                              std::to_string(report.diagram_count) + " diagrams");
  if (report.rank != report.cell_basis_size)
    report.failures.push_back("axiom 1: rank " + std::to_string(report.rank) + " < " + std::to_string(report.cell_basis_size));

  std::vector<std::pair<std::string, Element>> actors{{"1", Element::identity(m)}};
  for (int i = 1; i < m; ++i) actors.emplace_back("U" + std::to_string(i), Element::basis(generator_U(i, m)));
  for (const auto& [name, a] : actors) {
    for (const CellLabel& l : lambda_poset(m)) {
      try {
        const RingMatrix r = cell_action_matrix(a, l);
        report.action_checks += r.rows();
        if (name == "1" && !(r == RingMatrix::identity(r.rows())))
          report.failures.push_back("axiom 3: identity does not act as the identity on W(" + l.to_string() + ")");
      } catch (const std::logic_error& e) {
        report.failures.push_back("axiom 3: " + name + ": " + e.what());
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Gram forms

RingMatrix gram_matrix(const CellLabel& l, int m) {
  const std::vector<HalfDiagram> tableaux = cell_tableaux(l, m);
  const std::size_t n = tableaux.size();
  auto compute = [&](std::size_t e1, std::size_t e2) {
    const CellKey target{l, tableaux[e1], tableaux[e2]};
    RingMatrix g(n, n);
    for (std::size_t p = 0; p < n; ++p) {
      const Element left = cell_basis(l, tableaux[e1], tableaux[p]);
      for (std::size_t q = 0; q < n; ++q) {
        const Element product = multiply(left, cell_basis(l, tableaux[q], tableaux[e2]));
        for (const auto& [key, c] : expand_in_cell_basis(product)) {
          if (precedes(key.label, l)) continue;
          if (key == target) {
            g.at(p, q) = c;
            continue;
          }
          throw CellularViolation("C(e1, d1) C(d2, e2) has a component on " + key_string(key));
        }
      }
    }
    return g;
  };

  std::vector<std::pair<std::size_t, std::size_t>> choices;
  if (n <= 6) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) choices.emplace_back(i, j);
  } else {
    choices = {{0, 0}, {n - 1, 0}, {n / 2, n - 1}};
  }
  const RingMatrix first = compute(choices[0].first, choices[0].second);
  for (std::size_t c = 1; c < choices.size(); ++c)
    if (!(compute(choices[c].first, choices[c].second) == first))
      throw IndependenceViolation("Gram matrix for label " + l.to_string() + " depends on (e1, e2)");
  return first;
}

GoldenRat gram_diagonal_leading(const CellLabel& l) {
  switch (l.kind) {
    case CellLabel::Kind::plain:
      return GoldenRat(1) - GoldenRat(2) * GoldenRat::gamma1();
    case CellLabel::Kind::bullet:
      return GoldenRat(1) - GoldenRat(2) * GoldenRat::gamma2();
    default:
      return GoldenRat(1);
  }
}

GramRecord gram_record(const CellLabel& l, int m) {
  GramRecord rec;
  rec.label = l;
  RingMatrix g;
  try {
    g = gram_matrix(l, m);
  } catch (const std::logic_error& e) {
    rec.issues.push_back(e.what());
    return rec;
  }
  rec.dim = g.rows();
  rec.symmetric = g.is_symmetric();
  if (!rec.symmetric) rec.issues.push_back("Gram matrix is not symmetric");
  rec.determinant = g.determinant();
  if (rec.determinant.is_zero()) rec.issues.push_back("Gram determinant is zero");

  rec.almost_orthogonal = true;
  const GoldenRat leading = gram_diagonal_leading(l);
  for (std::size_t p = 0; p < rec.dim; ++p) {
    for (std::size_t q = 0; q < rec.dim; ++q) {
      const LaurentRat& x = g.at(p, q);
      const bool degree_ok = x.is_zero() || x.max_exponent() <= l.k;
      const GoldenRat expected = p == q ? leading : GoldenRat();
      if (!degree_ok || !(x.coefficient(l.k) == expected)) {
        rec.almost_orthogonal = false;
        rec.issues.push_back("entry (" + std::to_string(p) + ", " + std::to_string(q) + ") = " + x.to_string() +
                             " breaks almost-orthogonality");
      }
    }
  }
  return rec;
}

bool SemisimplicityReport::ok() const {
  return std::all_of(records.begin(), records.end(), [](const GramRecord& r) { return r.ok(); });
}

SemisimplicityReport semisimplicity_check(int m, int cap) {
  if (m > cap)
    throw ResourceCapExceeded("semisimplicity_check: m = " + std::to_string(m) + " exceeds cap " + std::to_string(cap));
  SemisimplicityReport report;
  report.m = m;
  for (const CellLabel& l : lambda_poset(m)) report.records.push_back(gram_record(l, m));
  return report;
}

// ---------------------------------------------------------------------------
// Branching

CellLabel label_minus_one(const CellLabel& l, int m, bool* guard_hit) {
  if (guard_hit) *guard_hit = false;
  if (!(l.kind == CellLabel::Kind::plain || l.kind == CellLabel::Kind::bullet) || !label_exists(l, m))
    throw std::domain_error("label_minus_one: needs 0 < |lambda| < m / 2");
  const int n = m - 1;  // Coxeter index of the algebra that owns l
  const int i = l.k;
  if (i == 1) return CellLabel::zero();
  if (l.kind == CellLabel::Kind::bullet) {
    if (2 * (i - 1) != n) return CellLabel::bullet(i - 1);
    if (guard_hit) *guard_hit = true;
  }
  return 2 * (i - 1) == m - 1 ? CellLabel::middle(m - 1) : CellLabel::plain(i - 1);
}

namespace {

// The label for m - 1 strands carrying the same k and kind as l.
CellLabel same_label_below(const CellLabel& l, int m) {
  if (l.kind == CellLabel::Kind::zero) return l;
  if (2 * l.k == m - 1) return CellLabel::middle(m - 1);
  return l;
}

HalfDiagram drop_east_point(const HalfDiagram& h) {
  std::vector<HalfDiagram::Pair> pairs;
  for (const auto& p : h.pairs())
    if (p.b != h.points()) pairs.push_back(p);
  return HalfDiagram::from_pairs(h.points() - 1, pairs);
}

// Index in pairs() of the pair ending at the easternmost point.
int east_pair(const HalfDiagram& h) {
  for (int t = 0; t < h.pair_count(); ++t)
    if (h.pairs()[t].b == h.points()) return t;
  throw std::logic_error("east_pair: easternmost point is free");
}

struct Block {
  CellLabel label;
  std::vector<std::size_t> columns;  // positions in the new basis
};

}  // namespace

BranchingReport branching_report(const CellLabel& l, int m) {
  if (m < 4) throw std::domain_error("branching_report: needs m >= 4");
  if (!label_exists(l, m)) throw std::invalid_argument("branching_report: label " + l.to_string() + " does not exist");
  BranchingReport report;
  report.m = m;
  report.label = l;
  const std::vector<HalfDiagram> tableaux = cell_tableaux(l, m);
  const std::size_t dim = tableaux.size();
  report.dim = dim;
  const auto index = index_of(tableaux);

  // New basis vectors as columns of P, in old coordinates; blocks top first.
  RingMatrix P(dim, dim), Pinv(dim, dim);
  std::vector<Block> blocks;
  std::size_t next = 0;
  auto add_block = [&](CellLabel label, const std::vector<std::pair<std::size_t, std::size_t>>& by_factor_index) {
    // by_factor_index: (index in the factor's tableaux, old basis index); unit vectors
    Block b{label, {}};
    auto sorted = by_factor_index;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& [fi, old] : sorted) {
      P.at(old, next) = LaurentRat(1);
      Pinv.at(next, old) = LaurentRat(1);
      b.columns.push_back(next++);
    }
    blocks.push_back(std::move(b));
  };
  auto locate = [&](const CellLabel& f, const HalfDiagram& h) -> std::optional<std::size_t> {
    const auto fac = cell_tableaux(f, m - 1);
    auto it = std::find(fac.begin(), fac.end(), h);
    if (it == fac.end()) return std::nullopt;
    return static_cast<std::size_t>(it - fac.begin());
  };

  if (l.kind == CellLabel::Kind::zero) {
    report.expected_factors = {CellLabel::zero()};
    add_block(CellLabel::zero(), {{0, 0}});
  } else if (l.kind == CellLabel::Kind::middle) {
    const int kb = (m - 2) / 2;
    report.expected_factors = {CellLabel::zero(), CellLabel::plain(kb), CellLabel::bullet(kb)};
    const HalfDiagram inadmissible = excluded_half(m - 1, kb);
    std::optional<std::size_t> d0;
    std::vector<std::pair<std::size_t, std::pair<std::size_t, std::size_t>>> orbits;  // factor index, (d, d*)
    for (std::size_t s = 0; s < dim; ++s) {
      const HalfDiagram& h = tableaux[s];
      const HalfDiagram image = drop_east_point(h);
      if (image == inadmissible) {
        if (d0) report.issues.push_back("more than one half-diagram restricts to the inadmissible one");
        d0 = s;
        continue;
      }
      if (h.decorated_at(m)) continue;  // visited from its undecorated partner
      auto partner = index.find(h.with_decoration(east_pair(h), true));
      auto fi = locate(CellLabel::plain(kb), image);
      if (partner == index.end() || !fi) {
        report.issues.push_back("no orbit partner or factor image for " + h.to_string());
        continue;
      }
      orbits.push_back({*fi, {s, partner->second}});
    }
    if (!d0) report.issues.push_back("no half-diagram restricts to the inadmissible one");
    if (!report.issues.empty()) return report;
    add_block(CellLabel::zero(), {{0, *d0}});
    std::sort(orbits.begin(), orbits.end());
    const GoldenRat g1 = GoldenRat::gamma1(), g2 = GoldenRat::gamma2();
    const GoldenRat inv = inverse_root_difference();  // 1 / (gamma2 - gamma1)
    Block b1{CellLabel::plain(kb), {}}, b2{CellLabel::bullet(kb), {}};
    const std::size_t half = orbits.size();
    for (std::size_t o = 0; o < half; ++o) {
      const auto [d, db] = orbits[o].second;
      const std::size_t c1 = next + o, c2 = next + half + o;
      // d_i = d* - gamma_i d
      P.at(db, c1) = LaurentRat(1);
      P.at(d, c1) = LaurentRat(-g1);
      P.at(db, c2) = LaurentRat(1);
      P.at(d, c2) = LaurentRat(-g2);
      // d = (d_1 - d_2) / (g2 - g1), d* = (g2 d_1 - g1 d_2) / (g2 - g1)
      Pinv.at(c1, d) = LaurentRat(inv);
      Pinv.at(c2, d) = LaurentRat(-inv);
      Pinv.at(c1, db) = LaurentRat(g2 * inv);
      Pinv.at(c2, db) = LaurentRat(-g1 * inv);
      b1.columns.push_back(c1);
      b2.columns.push_back(c2);
    }
    next += 2 * half;
    blocks.push_back(std::move(b1));
    blocks.push_back(std::move(b2));
  } else {
    const CellLabel sub_label = same_label_below(l, m);
    const CellLabel quot_label = label_minus_one(l, m, &report.guard_hit);
    if (l.k == 1) report.expected_factors = {CellLabel::zero(), sub_label};
    else report.expected_factors = {CellLabel::zero(), quot_label, sub_label};
    std::vector<std::pair<std::size_t, std::size_t>> top, quot, sub;
    const std::optional<HalfDiagram> inadmissible =
        l.k >= 2 ? std::optional<HalfDiagram>(excluded_half(m - 1, l.k - 1)) : std::nullopt;
    for (std::size_t s = 0; s < dim; ++s) {
      const HalfDiagram& h = tableaux[s];
      const HalfDiagram image = drop_east_point(h);
      if (h.is_free(m)) {
        if (auto fi = locate(sub_label, image)) sub.emplace_back(*fi, s);
        else report.issues.push_back("submodule image of " + h.to_string() + " not in M(" + sub_label.to_string() + ")");
      } else if (inadmissible && image == *inadmissible) {
        top.emplace_back(0, s);
      } else if (auto fi = locate(quot_label, image)) {
        quot.emplace_back(*fi, s);
      } else {
        report.issues.push_back("quotient image of " + h.to_string() + " not in M(" + quot_label.to_string() + ")");
      }
    }
    if (inadmissible && top.size() != 1)
      report.issues.push_back(std::to_string(top.size()) + " half-diagrams restrict to the inadmissible one");
    if (!report.issues.empty()) return report;
    if (!top.empty()) add_block(CellLabel::zero(), top);
    add_block(quot_label, quot);
    add_block(sub_label, sub);
  }

  for (const Block& b : blocks) report.factors.push_back({b.label, b.columns.size()});
  if (!(Pinv * P == RingMatrix::identity(dim))) report.issues.push_back("basis change is not invertible as built");

  // Multiplicities against the expected factor list for this label.
  std::vector<CellLabel> found;
  for (const auto& f : report.factors) found.push_back(f.label);
  auto expected = report.expected_factors;
  std::sort(found.begin(), found.end());
  std::sort(expected.begin(), expected.end());
  if (found != expected) report.issues.push_back("composition factors differ from the expected list");

  // Dimensions.
  report.dims_ok = true;
  std::size_t total = 0;
  for (const auto& f : report.factors) {
    total += f.dim;
    const std::size_t formula = f.label.k == 0 ? 1 : binomial(m - 1, f.label.k) - 1;
    if (f.dim != formula || f.dim != cell_tableaux(f.label, m - 1).size()) report.dims_ok = false;
  }
  const std::size_t own = l.k == 0 ? 1 : binomial(m, l.k) - 1;
  if (total != dim || own != dim) report.dims_ok = false;
  if (!report.dims_ok) report.issues.push_back("dimension identity fails");

  // Restricted actions in the new basis.
  report.block_triangular = true;
  report.blocks_match = true;
  for (int i = 1; i <= m - 2; ++i) {
    const RingMatrix a = cell_action_matrix_for(Element::basis(generator_U(i, m)), l, 0);
    const RingMatrix changed = Pinv * a * P;
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
      for (std::size_t bj = bi + 1; bj < blocks.size(); ++bj)
        if (!changed.block(blocks[bi].columns, blocks[bj].columns).is_zero()) report.block_triangular = false;
      const RingMatrix factor =
          cell_action_matrix_for(Element::basis(generator_U(i, m - 1)), blocks[bi].label, 0);
      if (!(changed.block(blocks[bi].columns, blocks[bi].columns) == factor)) {
        report.blocks_match = false;
        report.issues.push_back("U" + std::to_string(i) + " block for " + blocks[bi].label.to_string() +
                                " differs from the factor module action");
      }
    }
    if (l.kind == CellLabel::Kind::middle && !changed.block(blocks[2].columns, blocks[1].columns).is_zero())
      report.direct_sum = false;
  }
  if (!report.block_triangular) report.issues.push_back("restricted action is not block lower triangular");
  if (!report.direct_sum) report.issues.push_back("middle split is not a direct sum");
  if (report.guard_hit) report.issues.push_back("the i - 1 = n/2 guard of lambda - 1 was triggered");
  return report;
}

std::vector<std::string> branching_dimension_identity_failures(int m) {
  std::vector<std::string> out;
  for (int k = 1; 2 * k < m; ++k) {
    const std::uint64_t lhs = binomial(m, k) - 1;
    const std::uint64_t rhs = 1 + (binomial(m - 1, k - 1) - 1) + (binomial(m - 1, k) - 1);
    if (lhs != rhs) out.push_back("k = " + std::to_string(k) + ": " + std::to_string(lhs) + " != " + std::to_string(rhs));
  }
  if (m % 2 == 0) {
    const std::uint64_t lhs = binomial(m, m / 2) - 1;
    const std::uint64_t rhs = 1 + 2 * (binomial(m - 1, (m - 2) / 2) - 1);
    if (lhs != rhs) out.push_back("middle: " + std::to_string(lhs) + " != " + std::to_string(rhs));
  }
  return out;
}

}  // namespace tlh
