#include "tlh/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace tlh {

// ---------------------------------------------------------------------------
// Element

Element Element::identity(int m) { return basis(Diagram::identity(m)); }

Element Element::basis(const Diagram& d, const Coeff& c) {
  Element e(d.strands());
  e.add(d, c);
  return e;
}

Coeff Element::coefficient(const Diagram& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? Coeff() : it->second;
}

void Element::add(const Diagram& d, const Coeff& c) {
  if (d.strands() != m_)
    throw StrandMismatch("element: diagram on " + std::to_string(d.strands()) + " strands added to element on " +
                         std::to_string(m_));
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<std::pair<Diagram, Coeff>> Element::single_term() const {
  if (terms_.size() != 1) return std::nullopt;
  return *terms_.begin();
}

std::optional<Diagram> Element::as_diagram() const {
  auto t = single_term();
  if (!t || !(t->second == Coeff(1))) return std::nullopt;
  return t->first;
}

void Element::check_strands(const Element& o) const {
  if (o.m_ != m_)
    throw StrandMismatch("element: strand counts " + std::to_string(m_) + " and " + std::to_string(o.m_) + " differ");
}

Element& Element::operator+=(const Element& o) {
  check_strands(o);
  for (const auto& [d, c] : o.terms_) add(d, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  check_strands(o);
  for (const auto& [d, c] : o.terms_) add(d, -c);
  return *this;
}

Element Element::operator-() const { return scaled(Coeff(-1)); }

Element Element::scaled(const Coeff& c) const {
  Element out(m_);
  if (c.is_zero()) return out;
  for (const auto& [d, x] : terms_) out.add(d, x * c);
  return out;
}

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    const DyadicForm& f = d.dyadic();
    os << "(" << c << ")|" << f.top.to_string() << "><" << f.bottom.to_string() << "|" << (f.bullet ? "*" : "");
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Reduction and multiplication

Element reduce(const DecoratedTangle& t) {
  if (t.n_top() != t.n_bottom()) throw std::invalid_argument("reduce: tangle is not square");
  if (auto report = validate(t); !report.ok()) throw ExposureViolation("reduce: " + report.to_string());

  Coeff scalar(1);
  for (int r : t.loops()) {
    const GoldenInt f = fib_reduce(r);
    // gamma^r on a loop: F(r-1) [2] from the undecorated part, 0 from the singly decorated part
    if (f.a() == 0) return Element(t.n_top());
    scalar = scalar * Coeff::delta().scaled(GoldenInt(f.a(), Integer(0)));
  }

  DecoratedTangle base = t;
  base.clear_loops();
  std::vector<int> heavy;  // arcs (by lower id) with r >= 2
  for (int i = 0; i < base.node_count(); ++i)
    if (base.partner(i) > i && base.decorations(i) >= 2) heavy.push_back(i);

  Element out(t.n_top());
  const std::uint32_t combos = 1u << heavy.size();
  for (std::uint32_t mask = 0; mask < combos; ++mask) {
    DecoratedTangle cur = base;
    Integer weight = 1;
    for (std::size_t h = 0; h < heavy.size(); ++h) {
      const GoldenInt f = fib_reduce(t.decorations(heavy[h]));
      const bool decorated = (mask >> h) & 1u;
      weight *= decorated ? f.b() : f.a();
      cur.set_decorations(heavy[h], decorated ? 1 : 0);
    }
    if (weight == 0) continue;
    if (auto adm = is_h_admissible(cur); !adm) throw ClosureViolation("reduce: product left the basis: " + adm.reason);
    out.add(Diagram(std::move(cur)), scalar.scaled(GoldenInt(weight, Integer(0))));
  }
  return out;
}

Element multiply(const Diagram& x, const Diagram& y) {
  if (x.strands() != y.strands())
    throw StrandMismatch("multiply: strand counts " + std::to_string(x.strands()) + " and " +
                         std::to_string(y.strands()) + " differ");
  return reduce(concat(x.tangle(), y.tangle()));
}

Element multiply(const Element& x, const Element& y) {
  if (x.strands() != y.strands())
    throw StrandMismatch("multiply: strand counts " + std::to_string(x.strands()) + " and " +
                         std::to_string(y.strands()) + " differ");
  Element out(x.strands());
  for (const auto& [dx, cx] : x.terms())
    for (const auto& [dy, cy] : y.terms()) out += multiply(dx, dy).scaled(cx * cy);
  return out;
}

Diagram star(const Diagram& d) { return Diagram(flip(d.tangle())); }

Element star(const Element& x) {
  Element out(x.strands());
  for (const auto& [d, c] : x.terms()) out.add(star(d), c);
  return out;
}

SpecialElements special_elements(int m) {
  if (m < 3) throw std::domain_error("special_elements: needs m >= 3");
  const Element u1 = Element::basis(generator_U(1, m));
  const Element u2 = Element::basis(generator_U(2, m));
  const Element one = Element::identity(m);
  const Element u12 = multiply(u1, u2);
  const Element u21 = multiply(u2, u1);
  return {
      u12 - one,
      u21 - one,
      multiply(u12, u1) - u1.scaled(Coeff(2)),
      multiply(u21, u2) - u2.scaled(Coeff(2)),
  };
}

// ---------------------------------------------------------------------------
// Presentation

bool PresentationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.pass; });
}

std::vector<std::string> PresentationReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.pass) out.push_back(c.name);
  return out;
}

PresentationReport verify_presentation(const std::vector<Element>& gens) {
  if (gens.size() < 2) throw std::domain_error("verify_presentation: needs at least two generators");
  const int m = gens.front().strands();
  const int n = static_cast<int>(gens.size());
  PresentationReport report{m, {}};
  auto E = [&](int i) -> const Element& { return gens[i - 1]; };
  auto name = [](int i) { return "E" + std::to_string(i); };
  const Coeff delta = Coeff::delta();

  for (int i = 1; i <= n; ++i)
    report.checks.push_back({name(i) + "^2 = [2]" + name(i), multiply(E(i), E(i)) == E(i).scaled(delta)});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j)
      report.checks.push_back({name(i) + name(j) + " = " + name(j) + name(i), multiply(E(i), E(j)) == multiply(E(j), E(i))});
  for (int i = 2; i <= n; ++i) {
    for (int j : {i - 1, i + 1}) {
      if (j < 2 || j > n) continue;
      report.checks.push_back(
          {name(i) + name(j) + name(i) + " = " + name(i), multiply(multiply(E(i), E(j)), E(i)) == E(i)});
    }
  }
  for (auto [i, j] : {std::pair{1, 2}, std::pair{2, 1}}) {
    const Element eje = multiply(multiply(E(i), E(j)), E(i));
    const Element lhs = multiply(multiply(eje, E(j)), E(i));
    const std::string w = name(i) + name(j) + name(i);
    report.checks.push_back({w + name(j) + name(i) + " = 3" + w + " - " + name(i), lhs == eje.scaled(Coeff(3)) - E(i)});
  }

  const Element one = Element::identity(m);
  const Element e12 = multiply(E(1), E(2));
  const Element e21 = multiply(E(2), E(1));
  const Element alpha = e12 - one;
  const Element beta = e21 - one;
  const Element eps = multiply(e12, E(1)) - E(1).scaled(Coeff(2));
  const Element zeta = multiply(e21, E(2)) - E(2).scaled(Coeff(2));
  report.checks.push_back({"eps beta = E1", multiply(eps, beta) == E(1)});
  report.checks.push_back({"zeta alpha = E2", multiply(zeta, alpha) == E(2)});
  report.checks.push_back({"E2 eps = zeta E1", multiply(E(2), eps) == multiply(zeta, E(1))});
  return report;
}

PresentationReport verify_presentation(int m) {
  if (m < 3) throw std::domain_error("verify_presentation: needs m >= 3");
  std::vector<Element> gens;
  for (int i = 1; i < m; ++i) gens.push_back(Element::basis(generator_U(i, m)));
  return verify_presentation(gens);
}

// ---------------------------------------------------------------------------
// Positivity

std::optional<std::pair<Integer, int>> delta_power_form(const Coeff& c) {
  if (c.is_zero()) return std::nullopt;
  Coeff rest = c;
  int k = 0;
  while (auto q = rest.divide_by_delta()) {
    rest = std::move(*q);
    ++k;
  }
  auto constant = rest.as_constant();
  if (!constant || !constant->is_rational() || sgn(constant->a()) <= 0) return std::nullopt;
  return std::pair{constant->a(), k};
}

PositivityReport positivity_check(int m, int cap) {
  if (m > cap) throw ResourceCapExceeded("positivity_check: m = " + std::to_string(m) + " exceeds cap " + std::to_string(cap));
  const std::vector<Diagram> basis = enumerate_diagrams(m);
  PositivityReport report{m, 0, 0, {}};
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Element p = multiply(basis[i], basis[j]);
      ++report.products;
      const int bound = std::max(basis[i].level(), basis[j].level());
      for (const auto& [d, c] : p.terms()) {
        ++report.coefficients;
        auto form = delta_power_form(c);
        if (!form) {
          report.violations.push_back({i, j, "coefficient " + c.to_string() + " is not c[2]^k with c > 0"});
        } else if (form->second > bound) {
          report.violations.push_back({i, j, "coefficient " + c.to_string() + " has [2]-power " +
                                                 std::to_string(form->second) + " > " + std::to_string(bound)});
        }
      }
    }
  }
  return report;
}

}  // namespace tlh
