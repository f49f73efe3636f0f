#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "barbridge/chain.hpp"
#include "barbridge/complex.hpp"
#include "barbridge/field.hpp"
#include "barbridge/sparse.hpp"

namespace barbridge {

using BarId = std::uint32_t;

struct Bar {
  BarId id = 0;
  Grade birth = 0;
  Grade death = 0;  // scale size + 1 encodes infinity
  int dim = 0;

  bool alive_at(Grade l) const noexcept { return birth <= l && l < death; }
  friend bool operator==(const Bar&, const Bar&) = default;
};

struct BarTerm {
  Scalar coefficient;
  BarId bar;
  friend bool operator==(const BarTerm&, const BarTerm&) = default;
};

// A class written in the bars alive at `at`; terms sorted by bar id.
struct BarRepresentation {
  Grade at = 0;
  std::vector<BarTerm> terms;

  bool empty() const noexcept { return terms.empty(); }
  Scalar coefficient(BarId bar) const noexcept;
  friend bool operator==(const BarRepresentation&, const BarRepresentation&) = default;
};

// How simplices of equal grade are ordered into columns.
enum class TieOrder { lexicographic, reverse_lexicographic };

class ChangeMatrix;

// Reduced persistent homology in one degree, with the interval decomposition
// induced by the reduction: a finite bar is represented by the boundary that
// kills it, an infinite bar by the cycle recorded in the basis matrix.
class PersistenceResult {
 public:
  std::shared_ptr<const GradedComplex> complex_ptr() const noexcept { return complex_; }
  const GradedComplex& complex() const noexcept { return *complex_; }
  int degree() const noexcept { return degree_; }
  const FieldSpec& field() const noexcept { return field_; }
  Grade infinity() const noexcept { return complex_->scale().infinity(); }

  // Bars sorted by (birth, death); Bar::id is the position in this list.
  const std::vector<Bar>& bars() const noexcept { return bars_; }
  const Bar& bar(BarId id) const;
  const Chain& representative(BarId id) const;

  // Throws InputError when l is outside 1..N.
  std::vector<BarId> bars_alive_at(Grade l) const;

  // Coefficients of [z] in the bars alive at l; empty iff z bounds in X^l.
  // Throws InputError when z is not a cycle or uses simplices above grade l.
  BarRepresentation bar_representation(const Chain& z, Grade l) const;
  bool is_boundary(const Chain& z, Grade l) const { return bar_representation(z, l).empty(); }

  // Class written back as a chain: sum of coefficient * representative.
  Chain chain_of(const BarRepresentation& rep) const;

  // Same homology, new interval decomposition: representative c becomes
  // sum_r L[r, c] * representative r. L must be a change over every bar of
  // this result (see global_pattern).
  PersistenceResult with_change(const ChangeMatrix& l) const;

 private:
  friend PersistenceResult compute_persistence(std::shared_ptr<const GradedComplex>, int,
                                               const FieldSpec&, TieOrder);

  // Sparse vector over the degree-k columns <-> chain.
  Chain to_chain(const SparseVector& v) const;
  SparseVector to_vector(const Chain& c) const;
  std::vector<Scalar> original_coordinates(const Chain& z, Grade l) const;

  std::shared_ptr<const GradedComplex> complex_;
  int degree_ = 0;
  FieldSpec field_;
  TieOrder order_ = TieOrder::lexicographic;

  // Column order of the degree-k simplices: positions into complex simplices(k).
  std::vector<std::size_t> k_order_;
  std::vector<Index> k_index_;  // inverse of k_order_
  std::vector<Grade> k_grade_;  // grade per column
  std::vector<std::size_t> k1_order_;
  std::vector<Grade> k1_grade_;

  Reduction low_;   // boundary matrix of degree k (rows: k-1 simplices or augmentation)
  Reduction high_;  // boundary matrix of degree k+1 (rows: k-simplices in column order)

  // Echelon basis of the cycle space: one vector per pivot row (by column
  // index of a degree-k simplex), tagged with the bar it represents or
  // the grade at which it becomes a boundary.
  struct BasisVector {
    SparseVector v;
    std::optional<BarId> bar;
    Grade bounded_at = 0;
  };
  std::vector<std::optional<BasisVector>> echelon_;

  std::vector<Bar> bars_;
  std::vector<Chain> representatives_;

  // Optional change applied on top of the reduction's decomposition.
  std::shared_ptr<const ChangeMatrix> change_;
};

// Throws InputError when the complex stores no simplices of dimension k+1
// while max_dim < k+1.
PersistenceResult compute_persistence(std::shared_ptr<const GradedComplex> complex, int k,
                                      const FieldSpec& field,
                                      TieOrder order = TieOrder::lexicographic);
PersistenceResult compute_persistence(const GradedComplex& complex, int k,
                                      const FieldSpec& field,
                                      TieOrder order = TieOrder::lexicographic);

// (birth, death) of a class from its representation: max birth, max death.
// Throws InputError for the empty representation.
std::pair<Grade, Grade> class_birth_death(const PersistenceResult& result,
                                          const BarRepresentation& rep);

struct TerminalClass {
  Grade psi;
  Chain cycle;
};

// psi = death - 1 (clamped to N for infinite bars) and the stored representative.
TerminalClass terminal_class(const PersistenceResult& result, BarId bar);

}  // namespace barbridge
