#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "barbridge/chain.hpp"

namespace barbridge {

// Grade indices run 1..N; N+1 stands for infinity.
using Grade = std::uint32_t;

class ParameterScale {
 public:
  ParameterScale() = default;
  // Throws InputError unless values are finite and strictly increasing.
  explicit ParameterScale(std::vector<double> values);
  // Sorted distinct values of an arbitrary list.
  static ParameterScale from_unsorted(std::vector<double> values);

  Grade size() const noexcept { return static_cast<Grade>(values_.size()); }
  Grade infinity() const noexcept { return size() + 1; }
  const std::vector<double>& values() const noexcept { return values_; }

  // Value at grade g in 1..N; infinity grade maps to +inf.
  double value(Grade g) const;
  // Grade whose value equals v exactly; nullopt if absent.
  std::optional<Grade> grade_of(double v) const;
  // Largest grade whose value is <= v; 0 when v lies below every value.
  Grade floor_grade(double v) const;

  friend bool operator==(const ParameterScale&, const ParameterScale&) = default;

 private:
  std::vector<double> values_;
};

struct GradedSimplex {
  Simplex simplex;
  Grade grade;
};

// Filtered simplicial complex on vertices 0..vertex_count-1, stored up to
// max_dim. Simplices of each dimension are kept sorted lexicographically.
class GradedComplex {
 public:
  GradedComplex() = default;

  // Validates grades (1..N), duplicates, dimension cap and face closure.
  static GradedComplex from_simplices(ParameterScale scale, std::uint32_t vertex_count,
                                      int max_dim, std::vector<GradedSimplex> simplices);

  const ParameterScale& scale() const noexcept { return scale_; }
  std::uint32_t vertex_count() const noexcept { return vertex_count_; }
  int max_dim() const noexcept { return max_dim_; }

  std::span<const GradedSimplex> simplices(int dim) const;
  std::size_t size() const noexcept;
  std::optional<Grade> grade_of(const Simplex& s) const;
  // Position of s inside simplices(s.dim()).
  std::optional<std::size_t> position_of(const Simplex& s) const;

  // Simplices of grade <= g, same scale.
  GradedComplex truncated(Grade g) const;
  // Same simplices, capped at a lower dimension.
  GradedComplex capped(int max_dim) const;

  // Largest grade of any simplex in c; throws InputError if some simplex of c
  // is missing. Returns 0 for the zero chain.
  Grade chain_grade(const Chain& c) const;

 private:
  ParameterScale scale_;
  std::uint32_t vertex_count_ = 0;
  int max_dim_ = 0;
  std::vector<std::vector<GradedSimplex>> by_dim_;
};

// Symmetric, non-negative, zero-diagonal n x n matrix (row-major).
class DissimilarityMatrix {
 public:
  DissimilarityMatrix() = default;
  // Throws InputError on bad shape, asymmetry, negative or non-finite entries,
  // or a nonzero diagonal.
  DissimilarityMatrix(std::size_t n, std::vector<double> entries);

  std::size_t size() const noexcept { return n_; }
  double at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  const std::vector<double>& entries() const noexcept { return entries_; }

  DissimilarityMatrix scaled(double lambda) const;
  // Deterministic tie-break: adds k * eps to the k-th upper-triangular entry,
  // with eps small enough to preserve every strict inequality.
  DissimilarityMatrix jittered() const;
  bool has_ties() const;

 private:
  std::size_t n_ = 0;
  std::vector<double> entries_;
};

// n landmarks (rows) by m witnesses (columns), non-negative finite entries.
class CrossDissimilarityMatrix {
 public:
  CrossDissimilarityMatrix() = default;
  CrossDissimilarityMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  const std::vector<double>& entries() const noexcept { return entries_; }

  CrossDissimilarityMatrix transposed() const;
  // Adds k * eps to the k-th entry in row-major order.
  CrossDissimilarityMatrix jittered() const;
  bool has_ties() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> entries_;
};

using PointCloud = std::vector<std::vector<double>>;

DissimilarityMatrix euclidean_distances(const PointCloud& points);
CrossDissimilarityMatrix euclidean_cross_distances(const PointCloud& landmarks,
                                                   const PointCloud& witnesses);

// Vietoris-Rips style filtration. Vertices enter at grade 1; the scale is the
// sorted distinct off-diagonal values (or {0} with fewer than two points).
GradedComplex clique_complex(const DissimilarityMatrix& m, int max_dim);

// Dowker/witness filtration on the row indices. A simplex enters at
// min over columns of max over its rows; the scale is the sorted distinct
// entries of B.
GradedComplex witness_complex(const CrossDissimilarityMatrix& b, int max_dim);

// Z^psi intersected with Y^l for every l, graded by Y. Throws InputError when
// the vertex sets differ or when some simplex of Z^psi never appears in Y.
GradedComplex intersection_filtration(const GradedComplex& z, Grade psi, const GradedComplex& y);

struct CrossComplex {
  // Single-grade complex; landmark p is vertex p, witness q is vertex n + q.
  GradedComplex complex;
  std::size_t landmarks = 0;
  std::size_t witnesses = 0;
  double eps = 0;

  bool is_witness(Vertex v) const noexcept { return v >= landmarks; }
  Vertex landmark_vertex(std::size_t p) const noexcept { return static_cast<Vertex>(p); }
  Vertex witness_vertex(std::size_t q) const noexcept {
    return static_cast<Vertex>(landmarks + q);
  }
};

// Both one-sided witness complexes at eps, glued along every biclique of the
// relation B[p,q] <= eps. Only vertices with at least one relation appear.
CrossComplex cross_complex_at(const CrossDissimilarityMatrix& b, double eps, int max_dim);

}  // namespace barbridge
