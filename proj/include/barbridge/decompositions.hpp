#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "barbridge/persistence.hpp"

namespace barbridge {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 16;

// Bars ordered by (birth desc, death desc) together with the off-diagonal
// positions (row, col) where beta_r <= beta_c < delta_r <= delta_c. In this
// order every allowed position lies strictly below the diagonal.
class AdmissiblePattern {
 public:
  // Throws AssumptionViolation when two bars share a (birth, death) pair.
  explicit AdmissiblePattern(std::vector<Bar> bars);

  std::size_t size() const noexcept { return bars_.size(); }
  const std::vector<Bar>& bars() const noexcept { return bars_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& allowed() const noexcept {
    return allowed_;
  }
  bool is_allowed(std::size_t r, std::size_t c) const;
  std::optional<std::size_t> position(BarId id) const;

 private:
  std::vector<Bar> bars_;
  std::vector<std::pair<std::size_t, std::size_t>> allowed_;
};

std::shared_ptr<const AdmissiblePattern> admissible_pattern(std::span<const Bar> bars);
// Pattern over the bars alive at l.
std::shared_ptr<const AdmissiblePattern> pattern_at(const PersistenceResult& result, Grade l);
// Pattern over every bar of the result (a change of the whole decomposition).
std::shared_ptr<const AdmissiblePattern> global_pattern(const PersistenceResult& result);

// Invertible matrix supported on the diagonal and the allowed positions.
class ChangeMatrix {
 public:
  // off[i] is the entry at pattern.allowed()[i]. Throws InputError on a zero
  // diagonal entry or a size mismatch.
  ChangeMatrix(std::shared_ptr<const AdmissiblePattern> pattern, std::vector<Scalar> diagonal,
               std::vector<Scalar> off, const FieldSpec& field);
  static ChangeMatrix identity(std::shared_ptr<const AdmissiblePattern> pattern,
                               const FieldSpec& field);

  const AdmissiblePattern& pattern() const noexcept { return *pattern_; }
  std::shared_ptr<const AdmissiblePattern> pattern_ptr() const noexcept { return pattern_; }
  const FieldSpec& field() const noexcept { return field_; }
  Scalar at(std::size_t r, std::size_t c) const;
  const std::vector<Scalar>& diagonal() const noexcept { return diagonal_; }
  const std::vector<Scalar>& off_diagonal() const noexcept { return off_; }

  // L * x, with x indexed by pattern position.
  std::vector<Scalar> apply(const std::vector<Scalar>& x) const;
  // Solves L' y = b where L' keeps only the rows and columns in positions
  // (increasing). Forward substitution: L' is lower triangular.
  std::vector<Scalar> solve_restricted(const std::vector<std::size_t>& positions,
                                       const std::vector<Scalar>& b) const;
  std::vector<std::vector<Scalar>> dense() const;

  friend bool operator==(const ChangeMatrix& a, const ChangeMatrix& b) {
    return a.diagonal_ == b.diagonal_ && a.off_ == b.off_;
  }

 private:
  std::shared_ptr<const AdmissiblePattern> pattern_;
  FieldSpec field_;
  std::vector<Scalar> diagonal_;
  std::vector<Scalar> off_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> by_column_;  // (row, off index)
};

// Lazily walks every change matrix of a pattern: a base-p counter over the
// allowed positions (least significant first), then a base-(p-1) counter
// over the diagonal. The first member is the identity.
class ChangeEnumerator {
 public:
  ChangeEnumerator(std::shared_ptr<const AdmissiblePattern> pattern, const FieldSpec& field,
                   std::uint64_t cap = kDefaultEnumerationCap);

  std::optional<ChangeMatrix> next();
  // (p-1)^m * p^|allowed|, or nullopt when it does not fit in 64 bits.
  std::optional<std::uint64_t> total() const noexcept { return total_; }
  std::uint64_t produced() const noexcept { return produced_; }
  // Set once the cap stopped the walk before the last member.
  bool truncated() const noexcept { return truncated_; }

 private:
  bool advance();

  std::shared_ptr<const AdmissiblePattern> pattern_;
  FieldSpec field_;
  std::uint64_t cap_;
  std::optional<std::uint64_t> total_;
  std::uint64_t produced_ = 0;
  bool truncated_ = false;
  bool exhausted_ = false;
  std::vector<Scalar> diagonal_;
  std::vector<Scalar> off_;
};

ChangeMatrix random_change(std::shared_ptr<const AdmissiblePattern> pattern,
                           const FieldSpec& field, std::mt19937_64& rng);

struct TerminalClassSet {
  Grade psi = 0;
  std::vector<Chain> classes;
  std::vector<BarRepresentation> representations;  // of each class at psi
  bool truncated = false;
};

// Every class [B^psi L e_tau] for L in the change family at psi. Only column
// tau of L matters, so the walk runs over that column's free entries.
// psi defaults to the terminal parameter of the bar.
TerminalClassSet alternate_terminal_classes(const PersistenceResult& result, BarId bar,
                                            std::optional<Grade> psi = std::nullopt,
                                            std::uint64_t cap = kDefaultEnumerationCap);

// Yields L * rep for every change L of the pattern; rep's bars must all be
// in the pattern.
class BarRepresentationStream {
 public:
  BarRepresentationStream(BarRepresentation rep, std::shared_ptr<const AdmissiblePattern> pattern,
                          const FieldSpec& field, std::uint64_t cap = kDefaultEnumerationCap);

  std::optional<BarRepresentation> next();
  bool truncated() const noexcept { return changes_.truncated(); }
  const ChangeEnumerator& enumerator() const noexcept { return changes_; }

 private:
  BarRepresentation rep_;
  ChangeEnumerator changes_;
};

BarRepresentationStream alternate_bar_representations(
    const BarRepresentation& rep, std::shared_ptr<const AdmissiblePattern> pattern,
    const FieldSpec& field, std::uint64_t cap = kDefaultEnumerationCap);

// Applies a change to a representation directly.
BarRepresentation transform(const BarRepresentation& rep, const ChangeMatrix& l);

}  // namespace barbridge
