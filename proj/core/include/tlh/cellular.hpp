#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tlh/algebra.hpp"

namespace tlh {

/// Cell label for the algebra on m strands. k = |lambda|; zero has k = 0 and
/// middle (m even only) has k = m / 2.
struct CellLabel {
  enum class Kind { zero, plain, bullet, middle };
  Kind kind = Kind::zero;
  int k = 0;

  static CellLabel zero() { return {Kind::zero, 0}; }
  static CellLabel plain(int k) { return {Kind::plain, k}; }
  static CellLabel bullet(int k) { return {Kind::bullet, k}; }
  static CellLabel middle(int m) { return {Kind::middle, m / 2}; }

  /// Selectors "0", "k", "kb", "mid"; throws std::invalid_argument if the
  /// label does not exist for m strands.
  static CellLabel parse(const std::string& s, int m);
  /// Selector form, e.g. "2b".
  std::string to_string() const;

  friend auto operator<=>(const CellLabel&, const CellLabel&) = default;
};

bool label_exists(const CellLabel& l, int m);

/// Labels for m strands in order zero, 1, 1b, 2, 2b, ..., middle.
std::vector<CellLabel> lambda_poset(int m);

/// Strict order: a < b iff |a| > |b|.
bool precedes(const CellLabel& a, const CellLabel& b);

/// M(lambda): admissible half-diagrams with |lambda| pairs.
std::vector<HalfDiagram> cell_tableaux(const CellLabel& l, int m);

class IndependenceViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A product has a component that is neither in the expected cell nor in a
/// strictly lower one.
class CellularViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// C(lambda, d1, d2): |d1><d2|* - gamma1 |d1><d2| for plain labels, with
/// gamma2 for bullet labels, |d1><d2| for zero and middle.
Element cell_basis(const CellLabel& l, const HalfDiagram& d1, const HalfDiagram& d2);

struct CellKey {
  CellLabel label;
  HalfDiagram top;
  HalfDiagram bottom;
  friend auto operator<=>(const CellKey&, const CellKey&) = default;
  friend bool operator==(const CellKey&, const CellKey&) = default;
};

using CellExpansion = std::map<CellKey, LaurentRat>;
using RationalCombination = std::map<Diagram, LaurentRat>;

CellExpansion expand_in_cell_basis(const Element& x);
/// Sums the cell basis elements back into diagrams.
RationalCombination resum(const CellExpansion& e, int m);
RationalCombination to_rational(const Element& x);

class RingMatrix {
 public:
  RingMatrix() = default;
  RingMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RingMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  LaurentRat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const LaurentRat& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  bool is_symmetric() const;
  /// Submatrix of the given rows and columns.
  RingMatrix block(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  /// Fraction-free (Bareiss) elimination; every division is exact.
  LaurentRat determinant() const;

  friend RingMatrix operator*(const RingMatrix& x, const RingMatrix& y);
  friend bool operator==(const RingMatrix&, const RingMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<LaurentRat> data_;
};

/// Rank over Q(phi) of sparse rows (column index -> value).
std::size_t rank(const std::vector<std::map<std::size_t, GoldenRat>>& rows);

/// [r_a(S', S)] for a . C(lambda, S, T) with T the t-th tableau.
RingMatrix cell_action_matrix_for(const Element& a, const CellLabel& l, std::size_t t);
/// Same, computed for every T and required to be identical.
RingMatrix cell_action_matrix(const Element& a, const CellLabel& l);

inline constexpr int kDefaultCellularCap = 6;

struct AxiomReport {
  int m = 0;
  std::size_t cell_basis_size = 0;
  std::size_t diagram_count = 0;
  std::size_t rank = 0;
  std::size_t star_checks = 0;
  std::size_t action_checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Axiom 1 by rank, axiom 2 exhaustively, axiom 3 for every U_i, label and T.
AxiomReport verify_cellular_axioms(int m, int cap = kDefaultCellularCap);

/// Gram matrix of the form on W(lambda), checked against several (e1, e2).
RingMatrix gram_matrix(const CellLabel& l, int m);

struct GramRecord {
  CellLabel label;
  std::size_t dim = 0;
  LaurentRat determinant;
  bool symmetric = false;
  bool almost_orthogonal = false;
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
};

struct SemisimplicityReport {
  int m = 0;
  std::vector<GramRecord> records;
  bool ok() const;
};

/// Expected v^|lambda| coefficient of a diagonal Gram entry.
GoldenRat gram_diagonal_leading(const CellLabel& l);

GramRecord gram_record(const CellLabel& l, int m);
SemisimplicityReport semisimplicity_check(int m, int cap = kDefaultCellularCap);

// ---------------------------------------------------------------------------
// Branching along the embedding that adds a vertical strand on the east.

/// lambda - 1 as a label for m - 1 strands, defined for 0 < |lambda| < m / 2.
/// `guard_hit` is set when the bullet clause is refused because i - 1 equals
/// half the Coxeter index.
CellLabel label_minus_one(const CellLabel& l, int m, bool* guard_hit = nullptr);

struct BranchingFactor {
  CellLabel label;  // label for m - 1 strands
  std::size_t dim = 0;
};

struct BranchingReport {
  int m = 0;
  CellLabel label;
  std::size_t dim = 0;
  /// Filtration blocks in basis order, top first.
  std::vector<BranchingFactor> factors;
  std::vector<CellLabel> expected_factors;
  bool block_triangular = false;
  bool blocks_match = false;
  bool direct_sum = true;  // meaningful for middle only
  bool dims_ok = false;
  bool guard_hit = false;
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
};

inline constexpr int kDefaultBranchingCap = 7;

BranchingReport branching_report(const CellLabel& l, int m);

/// C(m,k) - 1 = 1 + (C(m-1,k-1) - 1) + (C(m-1,k) - 1) and the middle split.
std::vector<std::string> branching_dimension_identity_failures(int m);

}  // namespace tlh
