#include "tlh/io.hpp"

#include <limits>

namespace tlh {

namespace {

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Json rational_json(const Rational& q) {
  if (q.get_den() == 1) return integer_json(q.get_num());
  return q.get_str();
}

Integer integer_from(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) == 0) return z;
  }
  throw ParseError("expected an integer, got " + j.dump());
}

Rational rational_from(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    Rational q;
    if (q.set_str(j.get<std::string>(), 10) == 0 && q.get_den() != 0) {
      q.canonicalize();
      return q;
    }
  }
  throw ParseError("expected a rational, got " + j.dump());
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

int int_field(const Json& j, const char* name) {
  const Json& f = field(j, name);
  if (!f.is_number_integer()) throw ParseError(std::string("field \"") + name + "\" is not an integer");
  const long v = f.get<long>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw ParseError(std::string("field \"") + name + "\" out of range");
  return static_cast<int>(v);
}

template <class C, class Coord>
Laurent<C> laurent_from(const Json& j, Coord (*coord)(const Json&)) {
  if (!j.is_array()) throw ParseError("Laurent polynomial must be an array of [e, a, b]");
  Laurent<C> p;
  bool first = true;
  long last = 0;
  for (const Json& t : j) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer())
      throw ParseError("Laurent term must be [e, a, b], got " + t.dump());
    const long e = t[0].get<long>();
    if (!first && e <= last) throw ParseError("Laurent exponents must be strictly increasing");
    first = false;
    last = e;
    C c(coord(t[1]), coord(t[2]));
    if (c.is_zero()) throw ParseError("Laurent term with zero coefficient");
    p.add_term(static_cast<int>(e), c);
  }
  return p;
}

template <class C>
Json laurent_json(const Laurent<C>& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json s = to_json(c);
    out.push_back(Json::array({e, s[0], s[1]}));
  }
  return out;
}

}  // namespace

Json to_json(const GoldenInt& x) { return Json::array({integer_json(x.a()), integer_json(x.b())}); }
Json to_json(const GoldenRat& x) { return Json::array({rational_json(x.a()), rational_json(x.b())}); }

GoldenInt golden_int_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("golden scalar must be [a, b]");
  return GoldenInt(integer_from(j[0]), integer_from(j[1]));
}

GoldenRat golden_rat_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("golden scalar must be [a, b]");
  return GoldenRat(rational_from(j[0]), rational_from(j[1]));
}

Json to_json(const LaurentInt& p) { return laurent_json(p); }
Json to_json(const LaurentRat& p) { return laurent_json(p); }
LaurentInt laurent_int_from_json(const Json& j) { return laurent_from<GoldenInt>(j, &integer_from); }
LaurentRat laurent_rat_from_json(const Json& j) { return laurent_from<GoldenRat>(j, &rational_from); }

Json to_json(const DecoratedTangle& t) {
  Json arcs = Json::array();
  for (const Arc& a : t.arcs()) arcs.push_back({{"from", a.from.to_string()}, {"to", a.to.to_string()}, {"dec", a.decorations}});
  return {{"n_top", t.n_top()}, {"n_bottom", t.n_bottom()}, {"arcs", arcs}, {"loops", t.loops()}};
}

DecoratedTangle tangle_from_json(const Json& j) {
  const int top = int_field(j, "n_top");
  const int bottom = int_field(j, "n_bottom");
  if (top < 0 || bottom < 0) throw ParseError("face widths must be nonnegative");
  DecoratedTangle t(top, bottom);
  const Json& arcs = field(j, "arcs");
  if (!arcs.is_array()) throw ParseError("\"arcs\" must be an array");
  try {
    for (const Json& a : arcs) {
      const Json& from = field(a, "from");
      const Json& to = field(a, "to");
      if (!from.is_string() || !to.is_string()) throw ParseError("arc endpoints must be strings like \"N3\"");
      const int dec = a.contains("dec") ? int_field(a, "dec") : 0;
      t.connect(NodeRef::parse(from.get<std::string>()), NodeRef::parse(to.get<std::string>()), dec);
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad arc: ") + e.what());
  }
  if (j.contains("loops")) {
    const Json& loops = j.at("loops");
    if (!loops.is_array()) throw ParseError("\"loops\" must be an array");
    for (const Json& l : loops) {
      if (!l.is_number_integer()) throw ParseError("loop decoration count must be an integer");
      t.add_loop(l.get<int>());
    }
  }
  return t;
}

Json to_json(const HalfDiagram& h) {
  Json arcs = Json::array();
  for (const auto& p : h.pairs()) arcs.push_back({{"from", p.a}, {"to", p.b}, {"dec", p.decorated ? 1 : 0}});
  return {{"points", h.points()}, {"arcs", arcs}};
}

HalfDiagram half_from_json(const Json& j) {
  const int points = int_field(j, "points");
  const Json& arcs = field(j, "arcs");
  if (!arcs.is_array()) throw ParseError("\"arcs\" must be an array");
  std::vector<HalfDiagram::Pair> pairs;
  for (const Json& a : arcs) {
    const int x = int_field(a, "from"), y = int_field(a, "to");
    const int dec = a.contains("dec") ? int_field(a, "dec") : 0;
    if (dec != 0 && dec != 1) throw ParseError("half-diagram decorations must be 0 or 1");
    pairs.push_back({std::min(x, y), std::max(x, y), dec == 1});
  }
  try {
    return HalfDiagram::from_pairs(points, pairs);
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad half-diagram: ") + e.what());
  }
}

Json to_json(const DyadicForm& f) { return {{"d1", to_json(f.top)}, {"d2", to_json(f.bottom)}, {"bullet", f.bullet}}; }

DyadicForm dyadic_from_json(const Json& j) {
  const Json& b = field(j, "bullet");
  if (!b.is_boolean()) throw ParseError("\"bullet\" must be a boolean");
  return {half_from_json(field(j, "d1")), half_from_json(field(j, "d2")), b.get<bool>()};
}

Json to_json(const Diagram& d) { return to_json(d.tangle()); }

Diagram diagram_from_json(const Json& j) {
  try {
    if (j.is_object() && j.contains("d1")) return dyadic_join(dyadic_from_json(j));
    DecoratedTangle t = tangle_from_json(j);
    if (!t.loops().empty()) throw ParseError("a basis diagram has no loops");
    return Diagram(std::move(t));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("not a basis diagram: ") + e.what());
  }
}

Json to_json(const Element& x) {
  Json terms = Json::array();
  for (const auto& [d, c] : x.terms()) terms.push_back({{"diagram", to_json(d)}, {"coeff", to_json(c)}});
  return {{"m", x.strands()}, {"terms", terms}};
}

Element element_from_json(const Json& j) {
  if (j.is_object() && !j.contains("terms")) return Element::basis(diagram_from_json(j));
  const int m = int_field(j, "m");
  if (m < 0) throw ParseError("\"m\" must be nonnegative");
  Element x(m);
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw ParseError("\"terms\" must be an array");
  for (const Json& t : terms) {
    const Diagram d = diagram_from_json(field(t, "diagram"));
    if (d.strands() != m) throw ParseError("term diagram has " + std::to_string(d.strands()) + " strands, expected " + std::to_string(m));
    x.add(d, laurent_int_from_json(field(t, "coeff")));
  }
  return x;
}

Json to_json(const GeneratorWord& w) {
  Json out = Json::array();
  for (const Letter& l : w) out.push_back(l.to_string());
  return out;
}

Json to_json(const CellLabel& l) { return l.to_string(); }

Json to_json(const RingMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace tlh
