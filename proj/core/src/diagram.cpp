#include "tlh/diagram.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace tlh {

// ---------------------------------------------------------------------------
// HalfDiagram

HalfDiagram::HalfDiagram(int points) : points_(points), partner_(points, 0) {
  if (points < 0) throw std::invalid_argument("half-diagram: negative point count");
}

HalfDiagram HalfDiagram::from_pairs(int points, const std::vector<Pair>& pairs) {
  HalfDiagram h(points);
  for (Pair p : pairs) {
    if (p.a > p.b) std::swap(p.a, p.b);
    if (p.a < 1 || p.b > points || p.a == p.b) throw std::invalid_argument("half-diagram: pair out of range");
    if (h.partner_[p.a - 1] != 0 || h.partner_[p.b - 1] != 0)
      throw std::invalid_argument("half-diagram: point used twice");
    h.partner_[p.a - 1] = p.b;
    h.partner_[p.b - 1] = p.a;
    h.pairs_.push_back(p);
  }
  std::sort(h.pairs_.begin(), h.pairs_.end(), [](const Pair& x, const Pair& y) { return x.a < y.a; });
  if (auto err = h.structural_error()) throw std::invalid_argument("half-diagram: " + *err);
  return h;
}

bool HalfDiagram::decorated_at(int i) const {
  const int p = partner(i);
  if (p == 0) return false;
  const int a = std::min(i, p);
  for (const Pair& q : pairs_)
    if (q.a == a) return q.decorated;
  return false;
}

std::vector<int> HalfDiagram::free_points() const {
  std::vector<int> out;
  for (int i = 1; i <= points_; ++i)
    if (is_free(i)) out.push_back(i);
  return out;
}

bool HalfDiagram::exposed(const Pair& p) const {
  for (const Pair& q : pairs_)
    if (q.a < p.a && p.b < q.b) return false;
  for (int i = 1; i < p.a; ++i)
    if (is_free(i)) return false;
  return true;
}

std::optional<std::string> HalfDiagram::structural_error() const {
  for (const Pair& p : pairs_) {
    for (const Pair& q : pairs_)
      if (p.a < q.a && q.a < p.b && p.b < q.b)
        return "pairs {" + std::to_string(p.a) + "," + std::to_string(p.b) + "} and {" + std::to_string(q.a) + "," +
               std::to_string(q.b) + "} cross";
    for (int i = p.a + 1; i < p.b; ++i)
      if (is_free(i)) return "pair {" + std::to_string(p.a) + "," + std::to_string(p.b) + "} encloses a free point";
    if (p.decorated && !exposed(p))
      return "pair {" + std::to_string(p.a) + "," + std::to_string(p.b) + "} is decorated but not west-exposed";
  }
  return std::nullopt;
}

bool HalfDiagram::admissible() const {
  if (pairs_.empty()) return true;
  for (const Pair& p : pairs_) {
    if (p.a == 1 && p.b == 2 && p.decorated) return true;
    if (p.a > 1 && p.b == p.a + 1 && !p.decorated) return true;
  }
  return false;
}

std::uint32_t HalfDiagram::decoration_mask() const {
  std::uint32_t mask = 0;
  for (std::size_t t = 0; t < pairs_.size(); ++t)
    if (pairs_[t].decorated) mask |= 1u << t;
  return mask;
}

HalfDiagram HalfDiagram::with_decoration(int pair_index, bool decorated) const {
  std::vector<Pair> ps = pairs_;
  ps.at(pair_index).decorated = decorated;
  return from_pairs(points_, ps);
}

std::strong_ordering operator<=>(const HalfDiagram& x, const HalfDiagram& y) {
  if (auto c = x.points_ <=> y.points_; c != 0) return c;
  if (auto c = x.pair_count() <=> y.pair_count(); c != 0) return c;
  for (std::size_t t = 0; t < x.pairs_.size(); ++t) {
    if (auto c = x.pairs_[t].a <=> y.pairs_[t].a; c != 0) return c;
    if (auto c = x.pairs_[t].b <=> y.pairs_[t].b; c != 0) return c;
  }
  return x.decoration_mask() <=> y.decoration_mask();
}

std::string HalfDiagram::to_string() const {
  std::string s = "[";
  for (int i = 1; i <= points_; ++i) {
    if (i > 1) s += " ";
    if (is_free(i)) {
      s += "|";
    } else {
      s += std::to_string(partner(i));
      if (decorated_at(i)) s += "*";
    }
  }
  return s + "]";
}

// ---------------------------------------------------------------------------
// Admissibility and dyadic form

namespace {

HalfDiagram face_half(const DecoratedTangle& t, Face face) {
  const int width = face == Face::north ? t.n_top() : t.n_bottom();
  std::vector<HalfDiagram::Pair> pairs;
  for (const Arc& a : t.arcs()) {
    if (a.from.face != face || a.to.face != face) continue;
    pairs.push_back({std::min(a.from.index, a.to.index), std::max(a.from.index, a.to.index), a.decorations > 0});
  }
  return HalfDiagram::from_pairs(width, pairs);
}

}  // namespace

Admissibility is_h_admissible(const DecoratedTangle& t) {
  if (t.n_top() != t.n_bottom()) return {false, "not square"};
  if (!t.loops().empty()) return {false, "contains loops"};
  if (auto report = validate(t); !report.ok()) return {false, report.to_string()};
  bool all_propagating = true;
  bool any_decorated = false;
  for (const Arc& a : t.arcs()) {
    if (a.decorations > 1) return {false, "clause (iii): arc " + a.from.to_string() + "-" + a.to.to_string() +
                                              " carries more than one decoration"};
    all_propagating = all_propagating && a.propagating();
    any_decorated = any_decorated || a.decorations > 0;
  }
  if (all_propagating && any_decorated) return {false, "clause (i): decorated edge with all edges propagating"};
  if (!face_half(t, Face::north).admissible()) return {false, "clause (ii): north face"};
  if (!face_half(t, Face::south).admissible()) return {false, "clause (ii): south face"};
  return {};
}

DyadicForm dyadic_split(const DecoratedTangle& t) {
  if (t.n_top() != t.n_bottom()) throw std::invalid_argument("dyadic_split: tangle is not square");
  DyadicForm f{face_half(t, Face::north), face_half(t, Face::south), false};
  const auto stubs = f.top.free_points();
  if (!stubs.empty()) f.bullet = t.decorations(t.id({Face::north, stubs.front()})) > 0;
  return f;
}

DyadicForm dyadic_split(const Diagram& d) { return d.dyadic(); }

DecoratedTangle join_tangle(const DyadicForm& f) {
  const int m = f.top.points();
  if (f.bottom.points() != m) throw std::invalid_argument("dyadic_join: faces have different widths");
  if (f.top.free_count() != f.bottom.free_count())
    throw std::invalid_argument("dyadic_join: free-point counts differ");
  if (f.bullet && f.top.free_count() == 0) throw std::invalid_argument("dyadic_join: bullet without propagating edge");
  DecoratedTangle t(m, m);
  for (const auto& p : f.top.pairs()) t.connect({Face::north, p.a}, {Face::north, p.b}, p.decorated ? 1 : 0);
  for (const auto& p : f.bottom.pairs()) t.connect({Face::south, p.a}, {Face::south, p.b}, p.decorated ? 1 : 0);
  const auto up = f.top.free_points();
  const auto down = f.bottom.free_points();
  for (std::size_t i = 0; i < up.size(); ++i)
    t.connect({Face::north, up[i]}, {Face::south, down[i]}, (i == 0 && f.bullet) ? 1 : 0);
  return t;
}

Diagram dyadic_join(const DyadicForm& f) { return Diagram(join_tangle(f)); }

Diagram::Diagram(DecoratedTangle t) {
  if (auto adm = is_h_admissible(t); !adm) throw std::invalid_argument("not H-admissible: " + adm.reason);
  form_ = dyadic_split(t);
  tangle_ = std::move(t);
}

Diagram Diagram::identity(int m) { return Diagram(DecoratedTangle::identity(m)); }

// ---------------------------------------------------------------------------
// Enumeration

namespace {

using Matching = std::vector<std::pair<int, int>>;

// Non-crossing perfect matchings of points lo..hi (inclusive).
std::vector<Matching> perfect_matchings(int lo, int hi) {
  if (lo > hi) return {Matching{}};
  std::vector<Matching> out;
  for (int j = lo + 1; j <= hi; j += 2) {
    for (const Matching& inner : perfect_matchings(lo + 1, j - 1)) {
      for (const Matching& rest : perfect_matchings(j + 1, hi)) {
        Matching mt{{lo, j}};
        mt.insert(mt.end(), inner.begin(), inner.end());
        mt.insert(mt.end(), rest.begin(), rest.end());
        out.push_back(std::move(mt));
      }
    }
  }
  return out;
}

// Partial matchings of points i..m with `left` pairs and no enclosed free point.
void partial_matchings(int i, int m, int left, Matching& cur, std::vector<Matching>& out) {
  const int remaining = m - i + 1;
  if (2 * left > remaining) return;
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  if (remaining - 1 >= 2 * left) partial_matchings(i + 1, m, left, cur, out);
  for (int j = i + 1; j <= m && (j - i + 1) / 2 <= left; j += 2) {
    for (const Matching& inner : perfect_matchings(i + 1, j - 1)) {
      const std::size_t mark = cur.size();
      cur.emplace_back(i, j);
      cur.insert(cur.end(), inner.begin(), inner.end());
      partial_matchings(j + 1, m, left - (j - i + 1) / 2, cur, out);
      cur.resize(mark);
    }
  }
}

void check_half_args(int m, int k) {
  if (m < 0 || k < 0 || 2 * k > m) throw std::domain_error("half-diagram enumeration needs 0 <= k <= m/2");
}

}  // namespace

std::vector<HalfDiagram> enumerate_generalized_half(int m, int k) {
  check_half_args(m, k);
  std::vector<Matching> matchings;
  Matching cur;
  partial_matchings(1, m, k, cur, matchings);
  std::vector<HalfDiagram> out;
  for (const Matching& mt : matchings) {
    std::vector<HalfDiagram::Pair> pairs;
    for (auto [a, b] : mt) pairs.push_back({a, b, false});
    const HalfDiagram plain = HalfDiagram::from_pairs(m, pairs);
    std::vector<int> decorable;
    for (int t = 0; t < plain.pair_count(); ++t)
      if (plain.exposed(plain.pairs()[t])) decorable.push_back(t);
    // Subsets of the exposed pairs, west to east.
    for (std::uint32_t mask = 0; mask < (1u << decorable.size()); ++mask) {
      std::vector<HalfDiagram::Pair> ps = plain.pairs();
      for (std::size_t s = 0; s < decorable.size(); ++s) ps[decorable[s]].decorated = (mask >> s) & 1u;
      out.push_back(HalfDiagram::from_pairs(m, ps));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<HalfDiagram> enumerate_half(int m, int k) {
  std::vector<HalfDiagram> out = enumerate_generalized_half(m, k);
  std::erase_if(out, [](const HalfDiagram& h) { return !h.admissible(); });
  return out;
}

HalfDiagram excluded_half(int m, int k) {
  check_half_args(m, k);
  if (k == 0) throw std::domain_error("excluded_half: needs k >= 1");
  std::vector<HalfDiagram::Pair> pairs;
  for (int t = 0; t < k; ++t) pairs.push_back({2 * t + 1, 2 * t + 2, t > 0});
  return HalfDiagram::from_pairs(m, pairs);
}

std::vector<Diagram> enumerate_diagrams(int m, int cap) {
  if (m < 1) throw std::domain_error("enumerate_diagrams: needs m >= 1");
  if (m > cap) throw ResourceCapExceeded("enumerate_diagrams: m = " + std::to_string(m) + " exceeds cap " +
                                         std::to_string(cap));
  std::vector<Diagram> out;
  out.push_back(Diagram::identity(m));
  for (int k = 1; 2 * k <= m; ++k) {
    const auto halves = enumerate_half(m, k);
    const bool has_propagating = 2 * k < m;
    for (const HalfDiagram& top : halves) {
      for (const HalfDiagram& bottom : halves) {
        for (int bullet = 0; bullet <= (has_propagating ? 1 : 0); ++bullet) {
          DyadicForm f{top, bottom, bullet == 1};
          DecoratedTangle t = join_tangle(f);
          if (has_propagating) {
            const int stub = top.free_points().front();
            if (!west_exposed(t, t.id({Face::north, stub})))
              throw std::logic_error("enumerate_diagrams: leftmost propagating edge not west-exposed");
          }
          out.emplace_back(std::move(t));
        }
      }
    }
  }
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t basis_size_formula(int m) {
  return binomial(2 * m, m) - (std::uint64_t{1} << (m + 1)) + static_cast<std::uint64_t>(m) + 2;
}

std::uint64_t basis_size_from_cells(int m) {
  std::uint64_t total = 1;
  for (int k = 1; 2 * k <= m; ++k) {
    const std::uint64_t cell = binomial(m, k) - 1;
    const std::uint64_t labels = 2 * k < m ? 2 : 1;  // plain and bullet, or the middle label alone
    total += labels * cell * cell;
  }
  return total;
}

Diagram generator_U(int i, int m) {
  if (i < 1 || i > m - 1)
    throw std::out_of_range("generator_U: index " + std::to_string(i) + " outside 1.." + std::to_string(m - 1));
  DecoratedTangle t(m, m);
  const int dec = i == 1 ? 1 : 0;
  t.connect({Face::north, i}, {Face::north, i + 1}, dec);
  t.connect({Face::south, i}, {Face::south, i + 1}, dec);
  for (int j = 1; j <= m; ++j)
    if (j != i && j != i + 1) t.connect({Face::north, j}, {Face::south, j});
  return Diagram(std::move(t));
}

}  // namespace tlh
