#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tlh/tangle.hpp"

namespace tlh {

// Admissibility clauses for a loop-free square tangle:
//   (i)   if every edge propagates, no edge is decorated;
//   (ii)  if there are caps, the north face has a decorated cap {1,2} or an
//         undecorated cap {i,i+1} with i > 1, and likewise the south face;
//   (iii) every edge carries at most one decoration.
// Decorated edges must also be west-exposed.

/// One face of a diagram after its propagating edges are removed: a
/// non-crossing partial matching of `points` nodes, with 0/1 decoration per
/// pair. Unmatched points are the stubs of propagating edges.
class HalfDiagram {
 public:
  struct Pair {
    int a;  // 1-based, a < b
    int b;
    bool decorated;
    friend bool operator==(const Pair&, const Pair&) = default;
  };

  HalfDiagram() = default;
  explicit HalfDiagram(int points);

  /// Builds from pairs; throws std::invalid_argument if the result is not a
  /// well-formed half-diagram (see structural_error()).
  static HalfDiagram from_pairs(int points, const std::vector<Pair>& pairs);

  int points() const { return points_; }
  int pair_count() const { return static_cast<int>(pairs_.size()); }
  int free_count() const { return points_ - 2 * pair_count(); }
  const std::vector<Pair>& pairs() const { return pairs_; }
  /// Partner of point i (1-based), or 0 if i is free.
  int partner(int i) const { return partner_[i - 1]; }
  bool is_free(int i) const { return partner_[i - 1] == 0; }
  bool decorated_at(int i) const;
  std::vector<int> free_points() const;

  /// A pair may carry a decoration iff it is not nested in another pair and
  /// no free point lies west of it.
  bool exposed(const Pair& p) const;

  /// Planarity, no enclosed free point, decorations only on exposed pairs.
  std::optional<std::string> structural_error() const;

  /// Per-face form of admissibility clause (ii): with pairs present, either
  /// {1,2} is decorated or some {i,i+1} with i > 1 is undecorated.
  bool admissible() const;

  /// Decoration bitmask over pairs() (bit t set iff pair t decorated).
  std::uint32_t decoration_mask() const;

  HalfDiagram with_decoration(int pair_index, bool decorated) const;

  /// Canonical order: (pair count, sorted pair list, decoration mask).
  friend std::strong_ordering operator<=>(const HalfDiagram& x, const HalfDiagram& y);
  friend bool operator==(const HalfDiagram& x, const HalfDiagram& y) { return (x <=> y) == 0; }

  std::string to_string() const;

 private:
  int points_ = 0;
  std::vector<Pair> pairs_;   // sorted by a
  std::vector<int> partner_;  // per point, 0 if free
};

/// |d1><d2| (bullet = false) or |d1><d2|* (bullet = true).
struct DyadicForm {
  HalfDiagram top;
  HalfDiagram bottom;
  bool bullet = false;

  int level() const { return top.pair_count(); }
  friend auto operator<=>(const DyadicForm&, const DyadicForm&) = default;
};

struct Admissibility {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
};

/// Loop-free square tangle satisfying clauses (i)-(iii) and west-exposure.
Admissibility is_h_admissible(const DecoratedTangle& t);

/// Basis element of the diagram algebra. Always admissible; carries its
/// dyadic form, which defines the canonical order.
class Diagram {
 public:
  Diagram() = default;
  /// Throws std::invalid_argument if `t` is not H-admissible.
  explicit Diagram(DecoratedTangle t);

  static Diagram identity(int m);

  int strands() const { return tangle_.n_top(); }
  const DecoratedTangle& tangle() const { return tangle_; }
  const DyadicForm& dyadic() const { return form_; }
  int level() const { return form_.level(); }
  int propagating_count() const { return strands() - 2 * level(); }

  friend std::strong_ordering operator<=>(const Diagram& x, const Diagram& y) { return x.form_ <=> y.form_; }
  friend bool operator==(const Diagram& x, const Diagram& y) { return x.form_ == y.form_; }

 private:
  DecoratedTangle tangle_;
  DyadicForm form_;
};

/// Splits an admissible tangle into its faces and bullet flag.
DyadicForm dyadic_split(const DecoratedTangle& t);
DyadicForm dyadic_split(const Diagram& d);
/// Joins free points west to east; throws on free-count mismatch or an
/// inadmissible result.
Diagram dyadic_join(const DyadicForm& f);
DecoratedTangle join_tangle(const DyadicForm& f);

/// All half-diagrams with k pairs on m points, clause (ii) dropped. Size C(m,k).
std::vector<HalfDiagram> enumerate_generalized_half(int m, int k);
/// Admissible half-diagrams: C(m,k) - 1 for k > 0, 1 for k = 0.
std::vector<HalfDiagram> enumerate_half(int m, int k);

/// The one generalized half-diagram excluded by clause (ii): undecorated {1,2}
/// and decorated {3,4},...,{2k-1,2k}. Requires k >= 1, 2k <= m.
HalfDiagram excluded_half(int m, int k);

inline constexpr int kDefaultEnumerationCap = 9;

class ResourceCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// All H-admissible diagrams on m strands, in canonical order.
std::vector<Diagram> enumerate_diagrams(int m, int cap = kDefaultEnumerationCap);

/// Closed form C(2m, m) - 2^(m+1) + m + 2 for the basis size on m strands.
std::uint64_t basis_size_formula(int m);
/// 1 + sum over labels with |lambda| > 0 of (C(m, |lambda|) - 1)^2.
std::uint64_t basis_size_from_cells(int m);
std::uint64_t binomial(int n, int k);

/// U_i on m strands: caps {i,i+1} on both faces, decorated iff i = 1.
Diagram generator_U(int i, int m);

}  // namespace tlh
