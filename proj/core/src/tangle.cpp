#include "tlh/tangle.hpp"

#include <algorithm>
#include <sstream>

namespace tlh {

NodeRef NodeRef::parse(const std::string& s) {
  if (s.size() < 2 || (s[0] != 'N' && s[0] != 'S'))
    throw std::invalid_argument("bad node reference '" + s + "'");
  std::size_t used = 0;
  int index = 0;
  try {
    index = std::stoi(s.substr(1), &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad node reference '" + s + "'");
  }
  if (used != s.size() - 1 || index < 1) throw std::invalid_argument("bad node reference '" + s + "'");
  return {s[0] == 'N' ? Face::north : Face::south, index};
}

DecoratedTangle::DecoratedTangle(int n_top, int n_bottom)
    : n_top_(n_top), n_bottom_(n_bottom), partner_(n_top + n_bottom, -1), decorations_(n_top + n_bottom, 0) {
  if (n_top < 0 || n_bottom < 0) throw std::invalid_argument("tangle: negative face width");
}

DecoratedTangle DecoratedTangle::identity(int m) {
  DecoratedTangle t(m, m);
  for (int i = 0; i < m; ++i) t.connect_ids(i, m + i);
  return t;
}

int DecoratedTangle::id(NodeRef r) const {
  const int width = r.face == Face::north ? n_top_ : n_bottom_;
  if (r.index < 1 || r.index > width) throw std::out_of_range("tangle: node " + r.to_string() + " out of range");
  return r.face == Face::north ? r.index - 1 : n_top_ + r.index - 1;
}

NodeRef DecoratedTangle::ref(int id) const {
  if (id < n_top_) return {Face::north, id + 1};
  return {Face::south, id - n_top_ + 1};
}

int DecoratedTangle::linear_position(int id) const {
  if (id < n_top_) return id;
  return n_top_ + n_bottom_ - 1 - (id - n_top_);
}

void DecoratedTangle::connect_ids(int a, int b, int decorations) {
  if (a == b) throw std::invalid_argument("tangle: arc endpoints coincide");
  if (partner_[a] != -1 || partner_[b] != -1) throw std::invalid_argument("tangle: node already matched");
  partner_[a] = b;
  partner_[b] = a;
  decorations_[a] = decorations_[b] = decorations;
}

void DecoratedTangle::connect(NodeRef a, NodeRef b, int decorations) { connect_ids(id(a), id(b), decorations); }

void DecoratedTangle::set_decorations(int id, int decorations) {
  const int p = partner_[id];
  if (p < 0) throw std::invalid_argument("tangle: node is unmatched");
  decorations_[id] = decorations_[p] = decorations;
}

void DecoratedTangle::add_loop(int decorations) {
  loops_.insert(std::upper_bound(loops_.begin(), loops_.end(), decorations), decorations);
}

std::vector<Arc> DecoratedTangle::arcs() const {
  std::vector<std::pair<int, int>> order;  // (linear position, id)
  for (int i = 0; i < node_count(); ++i) {
    const int p = partner_[i];
    if (p < 0) continue;
    if (linear_position(i) < linear_position(p)) order.emplace_back(linear_position(i), i);
  }
  std::sort(order.begin(), order.end());
  std::vector<Arc> out;
  out.reserve(order.size());
  for (const auto& [pos, i] : order) out.push_back({ref(i), ref(partner_[i]), decorations_[i]});
  return out;
}

namespace {

// Arcs as (lo, hi) linear positions with the id at lo.
struct Span {
  int lo;
  int hi;
  int id;
};

std::vector<Span> spans(const DecoratedTangle& t) {
  std::vector<Span> out;
  for (int i = 0; i < t.node_count(); ++i) {
    const int p = t.partner(i);
    if (p < 0) continue;
    const int a = t.linear_position(i), b = t.linear_position(p);
    if (a < b) out.push_back({a, b, i});
  }
  return out;
}

}  // namespace

bool west_exposed(const DecoratedTangle& t, int id) {
  const int p = t.partner(id);
  if (p < 0) throw std::invalid_argument("west_exposed: node is unmatched");
  const int a = std::min(t.linear_position(id), t.linear_position(p));
  const int b = std::max(t.linear_position(id), t.linear_position(p));
  for (const Span& s : spans(t))
    if (s.lo < a && b < s.hi) return false;
  return true;
}

bool west_exposed(const DecoratedTangle& t, const Arc& arc) { return west_exposed(t, t.id(arc.from)); }

ValidationReport validate(const DecoratedTangle& t) {
  ValidationReport report;
  for (int i = 0; i < t.node_count(); ++i)
    if (t.partner(i) < 0)
      report.violations.push_back({ViolationKind::unmatched_node, "node " + t.ref(i).to_string() + " is unmatched"});
  for (int d : t.loops())
    if (d < 0) report.violations.push_back({ViolationKind::negative_decoration, "loop with negative decoration"});

  const std::vector<Span> all = spans(t);
  auto name = [&](const Span& s) {
    return t.ref(s.id).to_string() + "-" + t.ref(t.partner(s.id)).to_string();
  };
  for (std::size_t x = 0; x < all.size(); ++x) {
    for (std::size_t y = x + 1; y < all.size(); ++y) {
      const Span& p = all[x].lo < all[y].lo ? all[x] : all[y];
      const Span& q = all[x].lo < all[y].lo ? all[y] : all[x];
      if (p.lo < q.lo && q.lo < p.hi && p.hi < q.hi)
        report.violations.push_back({ViolationKind::crossing, "arcs " + name(p) + " and " + name(q) + " cross"});
    }
  }
  for (const Span& s : all) {
    const int d = t.decorations(s.id);
    if (d < 0) {
      report.violations.push_back({ViolationKind::negative_decoration, "arc " + name(s) + " has negative decoration"});
    } else if (d > 0 && !west_exposed(t, s.id)) {
      report.violations.push_back(
          {ViolationKind::decorated_unexposed, "arc " + name(s) + " is decorated but not exposed to the west face"});
    }
  }
  return report;
}

std::string ValidationReport::to_string() const {
  if (ok()) return "valid";
  std::string s;
  for (const auto& v : violations) {
    if (!s.empty()) s += "; ";
    s += v.detail;
  }
  return s;
}

DecoratedTangle concat(const DecoratedTangle& upper, const DecoratedTangle& lower) {
  if (upper.n_bottom() != lower.n_top())
    throw WidthMismatch("concat: upper south width " + std::to_string(upper.n_bottom()) +
                        " differs from lower north width " + std::to_string(lower.n_top()));
  const int top = upper.n_top(), seam = upper.n_bottom(), bottom = lower.n_bottom();
  DecoratedTangle out(top, bottom);
  std::vector<char> seam_seen(seam, 0);

  // Walk from `node` on side `in_upper`; returns the terminal result id.
  auto walk = [&](bool in_upper, int node, int& dec) {
    for (;;) {
      const DecoratedTangle& side = in_upper ? upper : lower;
      const int p = side.partner(node);
      dec += side.decorations(node);
      if (in_upper) {
        if (p < top) return p;
        const int j = p - top;
        seam_seen[j] = 1;
        in_upper = false;
        node = j;
      } else {
        if (p >= seam) return top + (p - seam);
        seam_seen[p] = 1;
        in_upper = true;
        node = top + p;
      }
    }
  };

  for (int i = 0; i < top; ++i) {
    if (out.partner(i) >= 0) continue;
    int dec = 0;
    const int end = walk(true, i, dec);
    out.connect_ids(i, end, dec);
  }
  for (int j = 0; j < bottom; ++j) {
    const int rid = top + j;
    if (out.partner(rid) >= 0) continue;
    int dec = 0;
    const int end = walk(false, seam + j, dec);
    out.connect_ids(rid, end, dec);
  }
  for (int j = 0; j < seam; ++j) {
    if (seam_seen[j]) continue;
    // Closed path through the seam: alternate upper/lower arcs until back at j.
    int dec = 0;
    int node = j;
    do {
      seam_seen[node] = 1;
      const int p = lower.partner(node);
      dec += lower.decorations(node);
      seam_seen[p] = 1;
      const int q = upper.partner(top + p);
      dec += upper.decorations(top + p);
      node = q - top;
    } while (node != j);
    out.add_loop(dec);
  }
  for (int d : upper.loops()) out.add_loop(d);
  for (int d : lower.loops()) out.add_loop(d);
  return out;
}

DecoratedTangle flip(const DecoratedTangle& t) {
  DecoratedTangle out(t.n_bottom(), t.n_top());
  auto mirror = [](NodeRef r) { return NodeRef{r.face == Face::north ? Face::south : Face::north, r.index}; };
  for (const Arc& a : t.arcs()) out.connect(mirror(a.from), mirror(a.to), a.decorations);
  for (int d : t.loops()) out.add_loop(d);
  return out;
}

std::string render_ascii(const DecoratedTangle& t) {
  // Each arc gets a letter; its decorations are drawn as '*' at both ends.
  std::vector<std::string> label(t.node_count());
  char next = 'a';
  for (const Arc& a : t.arcs()) {
    std::string s(1, next);
    s += std::string(a.decorations, '*');
    label[t.id(a.from)] = label[t.id(a.to)] = s;
    next = next == 'z' ? 'A' : static_cast<char>(next + 1);
  }
  std::size_t width = 3;
  for (const auto& s : label) width = std::max(width, s.size() + 1);
  auto row = [&](const std::string& head, int count, int offset, bool numbers) {
    std::ostringstream os;
    os << head;
    for (int i = 0; i < count; ++i) {
      std::string cell = numbers ? std::to_string(i + 1) : (label[offset + i].empty() ? "." : label[offset + i]);
      os << cell << std::string(width - cell.size(), ' ');
    }
    return os.str();
  };
  std::ostringstream os;
  os << row("N  ", t.n_top(), 0, true) << "\n";
  os << row("   ", t.n_top(), 0, false) << "\n";
  os << row("   ", t.n_bottom(), t.n_top(), false) << "\n";
  os << row("S  ", t.n_bottom(), t.n_top(), true) << "\n";
  if (!t.loops().empty()) {
    os << "loops:";
    for (int d : t.loops()) os << " o" << std::string(d, '*');
    os << "\n";
  }
  return os.str();
}

}  // namespace tlh
