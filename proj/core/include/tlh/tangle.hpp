#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace tlh {

enum class Face { north, south };

/// A boundary node, 1-based from the west end of its face.
struct NodeRef {
  Face face = Face::north;
  int index = 1;

  friend auto operator<=>(const NodeRef&, const NodeRef&) = default;
  std::string to_string() const { return (face == Face::north ? "N" : "S") + std::to_string(index); }
  static NodeRef parse(const std::string& s);
};

struct Arc {
  NodeRef from;
  NodeRef to;
  int decorations = 0;

  bool propagating() const { return from.face != to.face; }
  friend bool operator==(const Arc&, const Arc&) = default;
};

class WidthMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raw morphism n_top -> n_bottom: a matching of boundary nodes with a
/// decoration count on every arc, plus free loops.
///
/// Nodes are addressed internally by id: north i is i-1, south j is
/// n_top + j - 1. Both endpoints of an arc carry its decoration count.
class DecoratedTangle {
 public:
  DecoratedTangle() = default;
  DecoratedTangle(int n_top, int n_bottom);

  static DecoratedTangle identity(int m);

  int n_top() const { return n_top_; }
  int n_bottom() const { return n_bottom_; }
  int node_count() const { return n_top_ + n_bottom_; }

  int id(NodeRef r) const;
  NodeRef ref(int id) const;
  /// Position in the west-cut linearization N1..N_top, S_bottom..S1.
  int linear_position(int id) const;
  int linear_position(NodeRef r) const { return linear_position(id(r)); }

  /// Partner id, or -1 while the node is unmatched.
  int partner(int id) const { return partner_[id]; }
  int decorations(int id) const { return decorations_[id]; }
  const std::vector<int>& loops() const { return loops_; }

  void connect(NodeRef a, NodeRef b, int decorations = 0);
  void connect_ids(int a, int b, int decorations = 0);
  void set_decorations(int id, int decorations);
  void add_loop(int decorations);
  void remove_loop(std::size_t index) { loops_.erase(loops_.begin() + static_cast<std::ptrdiff_t>(index)); }
  void clear_loops() { loops_.clear(); }

  /// Arcs in order of their westmost endpoint in the linearization.
  std::vector<Arc> arcs() const;

  friend bool operator==(const DecoratedTangle&, const DecoratedTangle&) = default;

 private:
  int n_top_ = 0;
  int n_bottom_ = 0;
  std::vector<int> partner_;
  std::vector<int> decorations_;
  std::vector<int> loops_;  // sorted decoration counts
};

enum class ViolationKind { unmatched_node, crossing, decorated_unexposed, negative_decoration };

struct Violation {
  ViolationKind kind;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

/// Every violated structural invariant of a decorated tangle.
ValidationReport validate(const DecoratedTangle& t);

/// True iff the arc through node `id` is not nested inside another arc of
/// the west-cut linearization.
bool west_exposed(const DecoratedTangle& t, int id);
bool west_exposed(const DecoratedTangle& t, const Arc& arc);

/// Vertical composition with `upper` on top: upper's south face is glued to
/// lower's north face. Decorations add along composite arcs; closed paths
/// through the seam become loops.
DecoratedTangle concat(const DecoratedTangle& upper, const DecoratedTangle& lower);

/// Reflection in the east-west line.
DecoratedTangle flip(const DecoratedTangle& t);

/// Columns are nodes; '*' marks decorations.
std::string render_ascii(const DecoratedTangle& t);

}  // namespace tlh
