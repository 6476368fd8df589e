#include <algorithm>
#include <cctype>
#include <sstream>

#include "tlh/algebra.hpp"

namespace tlh {

// ---------------------------------------------------------------------------
// Letters and words

Letter Letter::parse(const std::string& raw) {
  std::string s;
  for (char c : raw) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "alpha") return {Kind::alpha, 0};
  if (s == "beta") return {Kind::beta, 0};
  if (s == "zeta") return {Kind::zeta, 0};
  if (s == "epsilon" || s == "eps") return {Kind::epsilon, 0};
  if (s.size() >= 2 && (s[0] == 'u' || s[0] == 'e') &&
      s.size() <= 6 && std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    const int i = std::stoi(s.substr(1));
    if (i >= 1) return u(i);
  }
  throw std::invalid_argument("unknown generator letter '" + raw + "'");
}

Letter Letter::starred() const {
  switch (kind) {
    case Kind::alpha:
      return {Kind::beta, 0};
    case Kind::beta:
      return {Kind::alpha, 0};
    default:
      return *this;
  }
}

std::string Letter::to_string() const {
  switch (kind) {
    case Kind::U:
      return "U" + std::to_string(index);
    case Kind::alpha:
      return "alpha";
    case Kind::beta:
      return "beta";
    case Kind::zeta:
      return "zeta";
    case Kind::epsilon:
      return "epsilon";
  }
  return "?";
}

std::string to_string(const GeneratorWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (const Letter& l : w) {
    if (!s.empty()) s += " ";
    s += l.to_string();
  }
  return s;
}

GeneratorWord parse_word(const std::string& s) {
  std::string cleaned = s;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream is(cleaned);
  GeneratorWord w;
  for (std::string tok; is >> tok;)
    if (tok != "1") w.push_back(Letter::parse(tok));
  return w;
}

Element evaluate_word(const GeneratorWord& w, int m) {
  std::optional<SpecialElements> special;
  auto element_of = [&](const Letter& l) -> Element {
    if (l.kind == Letter::Kind::U) {
      if (l.index < 1 || l.index > m - 1)
        throw std::invalid_argument("evaluate_word: letter " + l.to_string() + " invalid for " + std::to_string(m) +
                                    " strands");
      return Element::basis(generator_U(l.index, m));
    }
    if (m < 3) throw std::invalid_argument("evaluate_word: " + l.to_string() + " needs at least 3 strands");
    if (!special) special = special_elements(m);
    switch (l.kind) {
      case Letter::Kind::alpha:
        return special->alpha;
      case Letter::Kind::beta:
        return special->beta;
      case Letter::Kind::zeta:
        return special->zeta;
      default:
        return special->epsilon;
    }
  };
  Element acc = Element::identity(m);
  for (const Letter& l : w) acc = multiply(acc, element_of(l));
  return acc;
}

// ---------------------------------------------------------------------------
// Factorization
//
// A diagram is first flattened (every cap joins adjacent nodes) by peeling
// off U_i factors on both faces. The flat diagram is then w1 * D0 * w2 where
// D0 is a seed fixed by the position of the leftmost propagating edge and its
// decoration, w1 rebuilds the north face from D0's by left multiplications
// with known single-diagram effects, and w2 is the starred word doing the
// same for the south face.

namespace {

class MoveBuilder {
 public:
  explicit MoveBuilder(Diagram start) : cur_(std::move(start)) {}

  // cur = letters * cur, which must be a single diagram with coefficient 1.
  void apply(const GeneratorWord& letters, const char* move) {
    const Element e = multiply(evaluate_word(letters, cur_.strands()), Element::basis(cur_));
    auto d = e.as_diagram();
    if (!d)
      throw std::logic_error(std::string("factorize: move '") + move + "' (" + to_string(letters) +
                             ") did not give a single diagram: " + e.to_string());
    cur_ = std::move(*d);
    moves_.push_back(letters);
  }

  const Diagram& current() const { return cur_; }
  const HalfDiagram& top() const { return cur_.dyadic().top; }

  // Later moves multiply on the left of earlier ones.
  GeneratorWord word() const {
    GeneratorWord w;
    for (auto it = moves_.rbegin(); it != moves_.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
    return w;
  }

 private:
  Diagram cur_;
  std::vector<GeneratorWord> moves_;
};

bool cap_at(const HalfDiagram& h, int i) { return i + 1 <= h.points() && h.partner(i) == i + 1; }

void expect(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("factorize: precondition failed: ") + what);
}

// d = U_{i1} ... U_{it} * flat, where flat has only adjacent north caps.
std::pair<GeneratorWord, Diagram> unnest_north(const Diagram& d) {
  GeneratorWord prefix;
  Diagram cur = d;
  for (;;) {
    const HalfDiagram& top = cur.dyadic().top;
    std::optional<HalfDiagram::Pair> inner, outer;
    for (const auto& p : top.pairs()) {
      if (p.b != p.a + 1 || p.decorated) continue;
      for (const auto& q : top.pairs())
        if (q.a < p.a && p.b < q.b && (!outer || q.b - q.a < outer->b - outer->a)) outer = q;
      if (outer) {
        inner = p;
        break;
      }
    }
    if (!inner) break;
    std::vector<HalfDiagram::Pair> pairs;
    for (const auto& p : top.pairs())
      if (!(p == *inner) && !(p == *outer)) pairs.push_back(p);
    pairs.push_back({outer->a, inner->a, outer->decorated});
    pairs.push_back({inner->b, outer->b, false});
    Diagram reduced = dyadic_join({HalfDiagram::from_pairs(top.points(), pairs), cur.dyadic().bottom, cur.dyadic().bullet});
    const Element check = multiply(generator_U(inner->a, cur.strands()), reduced);
    if (check.as_diagram() != std::optional<Diagram>(cur))
      throw std::logic_error("factorize: un-nesting step failed at U" + std::to_string(inner->a));
    prefix.push_back(Letter::u(inner->a));
    cur = std::move(reduced);
  }
  return {prefix, cur};
}

// Places the caps west of the leftmost propagating edge (or all caps when
// there is none). `bits[t]` is the target decoration of cap t = {2t-1, 2t},
// t = 1..s. On entry the face is {1,2} decorated, later caps undecorated,
// and (with a propagating edge) that edge at node 3.
void arrange_west_block(MoveBuilder& mb, int s, const std::vector<bool>& bits, bool has_propagating) {
  int t0 = 0;  // first undecorated target cap after {1,2}, used to clear the {1,2} decoration
  if (!bits[1]) {
    for (int t = 2; t <= s && t0 == 0; ++t)
      if (!bits[t]) t0 = t;
    if (t0 == 0) {
      expect(has_propagating, "admissible face without an undecorated cap");
      t0 = s + 1;  // borrow the first cap east of the propagating edge
    }
  }
  const int span = std::max(s, t0);

  if (has_propagating) {
    for (int pos = 3; pos < 2 * span + 1; pos += 2) {
      expect(mb.top().is_free(pos) && cap_at(mb.top(), pos + 1) && !mb.top().decorated_at(pos + 1),
             "propagating edge followed by an undecorated cap");
      mb.apply({Letter::u(pos)}, "propagating edge east");
    }
  }

  std::vector<bool> pattern(span + 1, false);
  for (int t = 2; t <= span; ++t) {
    if (bits[1]) pattern[t] = t <= s && bits[t];
    else pattern[t] = (t >= 3 && t <= t0) || (t > t0 && t <= s && bits[t]);
  }
  for (int t = span; t >= 2; --t) {
    if (!pattern[t]) continue;
    expect(mb.top().decorated_at(1) && !mb.top().decorated_at(3), "{1,2} decorated and {3,4} undecorated");
    mb.apply({{Letter::Kind::alpha, 0}}, "decorate {3,4}");
    for (int j = 2; j < t; ++j) {
      const int i = 2 * j - 1;
      mb.apply({Letter::u(i), Letter::u(i + 1)}, "exchange decorated and undecorated caps");
    }
  }
  if (!bits[1]) {
    expect(mb.top().decorated_at(1) && cap_at(mb.top(), 3) && !mb.top().decorated_at(3),
           "{1,2} decorated and {3,4} undecorated");
    mb.apply({Letter::u(3), {Letter::Kind::zeta, 0}}, "remove decoration on {1,2}");
    for (int t = 3; t <= t0; ++t) {
      const int i = 2 * t - 3;
      mb.apply({Letter::u(i + 2), Letter::u(i + 1)}, "move decoration west");
    }
  }
  if (has_propagating && span > s) {
    const int p = 2 * s + 1;
    expect(cap_at(mb.top(), p) && !mb.top().decorated_at(p) && mb.top().is_free(p + 2),
           "undecorated cap followed by the propagating edge");
    mb.apply({Letter::u(p + 1)}, "propagating edge west");
  }
}

// Reorders caps and propagating stubs east of the leftmost stub q1.
void arrange_east(MoveBuilder& mb, const HalfDiagram& target, int q1) {
  const int m = target.points();
  for (int guard = 0; guard < m * m * m; ++guard) {
    const HalfDiagram& cur = mb.top();
    int x = q1 + 1;
    while (x <= m) {
      const bool want_free = target.is_free(x);
      const bool have_free = cur.is_free(x);
      if (want_free == have_free) {
        x += want_free ? 1 : 2;
        continue;
      }
      break;
    }
    if (x > m) return;
    if (target.is_free(x)) {
      int y = x;
      while (!cur.is_free(y)) y += 2;
      mb.apply({Letter::u(y - 1)}, "propagating edge west");
    } else {
      int z = x;
      while (cur.is_free(z)) ++z;
      mb.apply({Letter::u(z - 1)}, "propagating edge east");
    }
  }
  throw std::logic_error("factorize: east rearrangement did not converge");
}

// w with w * start = the diagram with north face `target`, south face and
// bullet of `start`. `start` must be a seed diagram for `target`.
GeneratorWord north_word(const Diagram& start, const HalfDiagram& target) {
  MoveBuilder mb(start);
  const auto stubs = target.free_points();
  auto bits_for = [&](int s) {
    std::vector<bool> bits(s + 1, false);
    for (int t = 1; t <= s; ++t) {
      expect(cap_at(target, 2 * t - 1), "flat face");
      bits[t] = target.decorated_at(2 * t - 1);
    }
    return bits;
  };
  if (stubs.empty()) {
    const int r = target.points() / 2;
    arrange_west_block(mb, r, bits_for(r), false);
  } else {
    const int q1 = stubs.front();
    if (q1 > 1) {
      const int s = (q1 - 1) / 2;
      arrange_west_block(mb, s, bits_for(s), true);
    }
    arrange_east(mb, target, q1);
  }
  if (!(mb.top() == target)) throw std::logic_error("factorize: north face not reached");
  return mb.word();
}

GeneratorWord starred(const GeneratorWord& w) {
  GeneratorWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->starred());
  return out;
}

// Words for the eight non-identity diagrams on three strands.
const std::vector<GeneratorWord>& seed_words() {
  using K = Letter::Kind;
  static const std::vector<GeneratorWord> words = {
      {Letter::u(1)},
      {Letter::u(2)},
      {Letter::u(1), Letter::u(2)},
      {Letter::u(2), Letter::u(1)},
      {Letter::u(1), {K::beta, 0}},
      {Letter::u(2), {K::alpha, 0}},
      {Letter::u(1), {K::zeta, 0}},
      {Letter::u(2), {K::epsilon, 0}},
  };
  return words;
}

// Seed word for a flat diagram with r caps per face.
GeneratorWord seed_word(const Diagram& flat) {
  const int m = flat.strands();
  const int r = flat.level();
  GeneratorWord w;
  if (flat.propagating_count() == 0) {
    for (int i = 1; i < m; i += 2) w.push_back(Letter::u(i));
    return w;
  }
  const DyadicForm& f = flat.dyadic();
  const bool north1 = f.top.is_free(1);
  const bool south1 = f.bottom.is_free(1);
  std::optional<GeneratorWord> chosen;
  for (const GeneratorWord& g : seed_words()) {
    auto d = evaluate_word(g, m).as_diagram();
    if (!d) throw std::logic_error("factorize: seed monomial " + to_string(g) + " is not a single diagram");
    const DyadicForm& gf = d->dyadic();
    if (gf.top.is_free(1) == north1 && gf.bottom.is_free(1) == south1 && gf.bullet == f.bullet) {
      if (chosen) throw std::logic_error("factorize: seed diagram not unique");
      chosen = g;
    }
  }
  if (!chosen) throw std::logic_error("factorize: no seed diagram");
  w = *chosen;
  for (int i = 4; i <= 2 * r; i += 2) w.push_back(Letter::u(i));
  return w;
}

}  // namespace

GeneratorWord factorize(const Diagram& d) {
  const int m = d.strands();
  if (d.level() == 0) return {};

  auto [north_prefix, half_flat] = unnest_north(d);
  auto [south_prefix_starred, flat_starred] = unnest_north(star(half_flat));
  const Diagram flat = star(flat_starred);

  const GeneratorWord seed = seed_word(flat);
  auto seed_diagram = evaluate_word(seed, m).as_diagram();
  if (!seed_diagram) throw std::logic_error("factorize: seed word is not a single diagram");

  const GeneratorWord w1 = north_word(*seed_diagram, flat.dyadic().top);
  const GeneratorWord w2 = starred(north_word(star(*seed_diagram), flat.dyadic().bottom));

  GeneratorWord word = north_prefix;
  word.insert(word.end(), w1.begin(), w1.end());
  word.insert(word.end(), seed.begin(), seed.end());
  word.insert(word.end(), w2.begin(), w2.end());
  const GeneratorWord south = starred(south_prefix_starred);
  word.insert(word.end(), south.begin(), south.end());

  if (evaluate_word(word, m) != Element::basis(d))
    throw std::logic_error("factorize: word " + to_string(word) + " does not evaluate to the diagram");
  return word;
}

}  // namespace tlh
