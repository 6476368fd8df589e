#include <vector>

#include "tlh/algebra.hpp"

namespace tlh {

namespace {

struct Term {
  Coeff coeff;
  DecoratedTangle tangle;
};

// One applicable rewrite site: a loop (by index) or an arc (by lower node id).
struct Site {
  bool loop;
  int where;
};

std::vector<Site> sites(const DecoratedTangle& t) {
  std::vector<Site> out;
  for (std::size_t i = 0; i < t.loops().size(); ++i) out.push_back({true, static_cast<int>(i)});
  for (int i = 0; i < t.node_count(); ++i)
    if (t.partner(i) > i && t.decorations(i) >= 2) out.push_back({false, i});
  return out;
}

}  // namespace

Element reduce_by_rewriting(const DecoratedTangle& t, std::mt19937_64& rng) {
  if (t.n_top() != t.n_bottom()) throw std::invalid_argument("reduce_by_rewriting: tangle is not square");
  std::vector<Term> pending{{Coeff(1), t}};
  Element out(t.n_top());
  while (!pending.empty()) {
    std::uniform_int_distribution<std::size_t> pick_term(0, pending.size() - 1);
    const std::size_t ti = pick_term(rng);
    Term term = std::move(pending[ti]);
    pending[ti] = std::move(pending.back());
    pending.pop_back();

    const std::vector<Site> options = sites(term.tangle);
    if (options.empty()) {
      if (auto adm = is_h_admissible(term.tangle); !adm)
        throw ClosureViolation("reduce_by_rewriting: normal form left the basis: " + adm.reason);
      out.add(Diagram(std::move(term.tangle)), term.coeff);
      continue;
    }
    std::uniform_int_distribution<std::size_t> pick_site(0, options.size() - 1);
    const Site site = options[pick_site(rng)];
    if (site.loop) {
      const int r = term.tangle.loops()[site.where];
      DecoratedTangle base = term.tangle;
      base.remove_loop(site.where);
      if (r == 0) {
        pending.push_back({term.coeff * Coeff::delta(), std::move(base)});
      } else if (r >= 2) {
        DecoratedTangle minus_one = base;
        minus_one.add_loop(r - 1);
        base.add_loop(r - 2);
        pending.push_back({term.coeff, std::move(minus_one)});
        pending.push_back({term.coeff, std::move(base)});
      }
      // r == 1: the term vanishes
    } else {
      const int r = term.tangle.decorations(site.where);
      DecoratedTangle minus_two = term.tangle;
      minus_two.set_decorations(site.where, r - 2);
      term.tangle.set_decorations(site.where, r - 1);
      pending.push_back({term.coeff, std::move(minus_two)});
      pending.push_back({term.coeff, std::move(term.tangle)});
    }
  }
  return out;
}

}  // namespace tlh
