#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "barbridge/field.hpp"

namespace barbridge {

using Index = std::uint32_t;

struct Entry {
  Index index;
  Scalar value;
  friend bool operator==(const Entry&, const Entry&) = default;
};

// Sparse vector over a prime field: entries sorted by index, no stored zeros.
class SparseVector {
 public:
  SparseVector() = default;

  // Sorts, merges duplicate indices and drops zeros.
  static SparseVector from_entries(std::vector<Entry> entries, const FieldSpec& field);
  static SparseVector unit(Index i) { return SparseVector({Entry{i, 1}}); }

  bool empty() const noexcept { return entries_.empty(); }
  std::size_t nnz() const noexcept { return entries_.size(); }
  std::span<const Entry> entries() const noexcept { return entries_; }

  // Largest index with a nonzero entry.
  std::optional<Index> low() const noexcept {
    if (entries_.empty()) return std::nullopt;
    return entries_.back().index;
  }
  Scalar at(Index i) const noexcept;

  // this += c * x
  void axpy(Scalar c, const SparseVector& x, const FieldSpec& field);
  SparseVector scaled(Scalar c, const FieldSpec& field) const;

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  explicit SparseVector(std::vector<Entry> sorted) : entries_(std::move(sorted)) {}
  std::vector<Entry> entries_;
};

// Column-major sparse matrix.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(Index rows, Index cols);
  // Throws InputError when a column holds a row index out of range.
  SparseMatrix(Index rows, std::vector<SparseVector> columns);

  static SparseMatrix identity(Index n);

  Index rows() const noexcept { return rows_; }
  Index cols() const noexcept { return static_cast<Index>(columns_.size()); }
  const SparseVector& column(Index j) const { return columns_[j]; }
  std::span<const SparseVector> columns() const noexcept { return columns_; }
  Scalar at(Index r, Index c) const { return columns_[c].at(r); }

  SparseVector multiply(const SparseVector& x, const FieldSpec& field) const;
  SparseMatrix multiply(const SparseMatrix& other, const FieldSpec& field) const;

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  Index rows_ = 0;
  std::vector<SparseVector> columns_;
};

// R = D * V with V unit upper-triangular and the nonzero columns of R having
// pairwise distinct lows. pivot_column[row] names the column of R whose low is
// that row, if any.
struct Reduction {
  SparseMatrix r;
  SparseMatrix v;
  std::vector<std::optional<Index>> pivot_column;
};

// Standard left-to-right column reduction, no clearing. GF(2) runs on a
// bit-packed pivot column; other primes use generic sparse arithmetic.
Reduction reduce_with_basis(const SparseMatrix& d, const FieldSpec& field);

// Same reduction; with track_basis == false the returned v is empty.
Reduction reduce(const SparseMatrix& d, const FieldSpec& field, bool track_basis);

// Generic-arithmetic reduction regardless of the field. Exposed so the GF(2)
// fast path can be checked against it.
Reduction reduce_generic(const SparseMatrix& d, const FieldSpec& field, bool track_basis);

struct AffineSolutionSet {
  SparseVector particular;
  std::vector<SparseVector> kernel_basis;
};

// Full solution set of A x = b, or nullopt when inconsistent. b's indices must
// lie below A.rows().
std::optional<AffineSolutionSet> solve(const SparseMatrix& a, const SparseVector& b,
                                       const FieldSpec& field);

// Solve against an existing reduction of A; only the particular solution.
std::optional<SparseVector> solve_particular(const Reduction& reduction, const SparseVector& b,
                                             const FieldSpec& field);

}  // namespace barbridge
