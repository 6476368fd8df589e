#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tlh/diagram.hpp"
#include "tlh/laurent.hpp"

namespace tlh {

using Coeff = LaurentInt;

class StrandMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A reduced product left the admissible basis.
class ClosureViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A decoration sits on an arc that is not exposed to the west face.
class ExposureViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Linear combination of basis diagrams over Z[phi][v, v^-1].
class Element {
 public:
  using TermMap = std::map<Diagram, Coeff>;

  explicit Element(int m = 0) : m_(m) {}
  static Element identity(int m);
  static Element basis(const Diagram& d, const Coeff& c = Coeff(1));

  int strands() const { return m_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Coeff coefficient(const Diagram& d) const;

  void add(const Diagram& d, const Coeff& c);

  /// The unique term, if there is exactly one.
  std::optional<std::pair<Diagram, Coeff>> single_term() const;
  /// True iff the element is exactly 1 * d for a single diagram d.
  std::optional<Diagram> as_diagram() const;

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  friend Element operator+(Element x, const Element& y) { return x += y; }
  friend Element operator-(Element x, const Element& y) { return x -= y; }
  Element operator-() const;
  Element scaled(const Coeff& c) const;

  friend bool operator==(const Element& x, const Element& y) { return x.m_ == y.m_ && x.terms_ == y.terms_; }

  std::string to_string() const;

 private:
  void check_strands(const Element& o) const;

  int m_;
  TermMap terms_;
};

/// Rewrites a square tangle into the admissible basis: a loop with r
/// decorations contributes F(r-1) [2]; an arc with r decorations becomes
/// F(r-1) (undecorated) + F(r) (decorated).
Element reduce(const DecoratedTangle& t);

/// Independent rewriting route: applies the three local rules (remove an
/// undecorated loop, kill a singly decorated loop, lower an r >= 2 count to
/// r-1 and r-2) one at a time in an order drawn from `rng`.
Element reduce_by_rewriting(const DecoratedTangle& t, std::mt19937_64& rng);

Element multiply(const Diagram& x, const Diagram& y);
Element multiply(const Element& x, const Element& y);

Diagram star(const Diagram& d);
Element star(const Element& x);

struct SpecialElements {
  Element alpha;    // U1 U2 - 1
  Element beta;     // U2 U1 - 1
  Element epsilon;  // U1 U2 U1 - 2 U1
  Element zeta;     // U2 U1 U2 - 2 U2
};

SpecialElements special_elements(int m);

// ---------------------------------------------------------------------------
// Presentation

struct RelationCheck {
  std::string name;
  bool pass = false;
};

struct PresentationReport {
  int m = 0;
  std::vector<RelationCheck> checks;
  bool ok() const;
  std::vector<std::string> failures() const;
};

/// Checks the defining relations of TL(H_{m-1}) on U_1..U_{m-1}, together
/// with eps beta = U1, zeta alpha = U2 and U2 eps = zeta U1.
PresentationReport verify_presentation(int m);
/// Same checks for arbitrary images of the generators E_1..E_n (index i-1).
PresentationReport verify_presentation(const std::vector<Element>& generators);

// ---------------------------------------------------------------------------
// Generator words

struct Letter {
  enum class Kind { U, alpha, beta, zeta, epsilon };
  Kind kind = Kind::U;
  int index = 0;  // for U only

  static Letter u(int i) { return {Kind::U, i}; }
  static Letter parse(const std::string& s);
  Letter starred() const;
  std::string to_string() const;
  friend bool operator==(const Letter&, const Letter&) = default;
};

using GeneratorWord = std::vector<Letter>;

std::string to_string(const GeneratorWord& w);
GeneratorWord parse_word(const std::string& s);

/// Left-to-right product; the empty word is the identity.
Element evaluate_word(const GeneratorWord& w, int m);

/// A word in U_i, alpha, beta, zeta, epsilon evaluating to exactly 1 * d.
GeneratorWord factorize(const Diagram& d);

// ---------------------------------------------------------------------------
// Positivity

struct PositivityViolation {
  std::size_t left = 0;
  std::size_t right = 0;
  std::string detail;
};

struct PositivityReport {
  int m = 0;
  std::size_t products = 0;
  std::size_t coefficients = 0;
  std::vector<PositivityViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Writes c [2]^k with c a positive integer, if possible.
std::optional<std::pair<Integer, int>> delta_power_form(const Coeff& c);

inline constexpr int kDefaultProductCap = 5;

/// Every product of two basis diagrams has coefficients c [2]^k with c > 0
/// and k <= max of the two levels.
PositivityReport positivity_check(int m, int cap = kDefaultProductCap);

}  // namespace tlh
