#include "barbridge/sparse.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "barbridge/error.hpp"

namespace barbridge {

SparseVector SparseVector::from_entries(std::vector<Entry> entries, const FieldSpec& field) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.index < b.index; });
  std::vector<Entry> merged;
  merged.reserve(entries.size());
  for (const Entry& e : entries) {
    Scalar v = field.reduce(e.value);
    if (!merged.empty() && merged.back().index == e.index) {
      merged.back().value = field.add(merged.back().value, v);
      if (merged.back().value == 0) merged.pop_back();
    } else if (v != 0) {
      merged.push_back({e.index, v});
    }
  }
  return SparseVector(std::move(merged));
}

Scalar SparseVector::at(Index i) const noexcept {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, Index idx) { return e.index < idx; });
  return (it != entries_.end() && it->index == i) ? it->value : 0;
}

void SparseVector::axpy(Scalar c, const SparseVector& x, const FieldSpec& field) {
  if (c == 0 || x.empty()) return;
  std::vector<Entry> out;
  out.reserve(entries_.size() + x.entries_.size());
  auto a = entries_.begin(), ae = entries_.end();
  auto b = x.entries_.begin(), be = x.entries_.end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && a->index < b->index)) {
      out.push_back(*a++);
    } else if (a == ae || b->index < a->index) {
      out.push_back({b->index, field.mul(c, b->value)});
      ++b;
    } else {
      Scalar v = field.add(a->value, field.mul(c, b->value));
      if (v != 0) out.push_back({a->index, v});
      ++a;
      ++b;
    }
  }
  entries_ = std::move(out);
}

SparseVector SparseVector::scaled(Scalar c, const FieldSpec& field) const {
  if (c == 0) return {};
  std::vector<Entry> out(entries_);
  for (Entry& e : out) e.value = field.mul(e.value, c);
  return SparseVector(std::move(out));
}

SparseMatrix::SparseMatrix(Index rows, Index cols) : rows_(rows), columns_(cols) {}

SparseMatrix::SparseMatrix(Index rows, std::vector<SparseVector> columns)
    : rows_(rows), columns_(std::move(columns)) {
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    auto low = columns_[j].low();
    if (low && *low >= rows_)
      throw InputError("column " + std::to_string(j) + " has row index " +
                       std::to_string(*low) + " outside " + std::to_string(rows_) + " rows");
  }
}

SparseMatrix SparseMatrix::identity(Index n) {
  std::vector<SparseVector> cols;
  cols.reserve(n);
  for (Index i = 0; i < n; ++i) cols.push_back(SparseVector::unit(i));
  return SparseMatrix(n, std::move(cols));
}

SparseVector SparseMatrix::multiply(const SparseVector& x, const FieldSpec& field) const {
  SparseVector out;
  for (const Entry& e : x.entries()) {
    if (e.index >= cols())
      throw InputError("vector index " + std::to_string(e.index) + " exceeds column count");
    out.axpy(e.value, columns_[e.index], field);
  }
  return out;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& other, const FieldSpec& field) const {
  if (other.rows() != cols())
    throw InputError("matrix product shape mismatch: " + std::to_string(cols()) + " vs " +
                     std::to_string(other.rows()));
  std::vector<SparseVector> out;
  out.reserve(other.cols());
  for (const SparseVector& c : other.columns_) out.push_back(multiply(c, field));
  return SparseMatrix(rows_, std::move(out));
}

namespace {

// Dense bit-packed GF(2) column with a cached upper bound on its low.
class BitColumn {
 public:
  explicit BitColumn(Index length) : words_((length + 63) / 64, 0) {}

  void load(const SparseVector& v) {
    for (const Entry& e : v.entries()) flip(e.index);
  }
  void flip(Index i) {
    words_[i >> 6] ^= (std::uint64_t{1} << (i & 63));
    top_ = std::max<std::int64_t>(top_, i >> 6);
  }
  void add(const SparseVector& v) {
    for (const Entry& e : v.entries()) flip(e.index);
  }
  std::optional<Index> low() {
    while (top_ >= 0 && words_[top_] == 0) --top_;
    if (top_ < 0) return std::nullopt;
    return static_cast<Index>(top_ * 64 + 63 - std::countl_zero(words_[top_]));
  }
  // Drains the column into a sparse vector; leaves it zeroed.
  SparseVector take(const FieldSpec& field) {
    std::vector<Entry> out;
    for (std::int64_t w = 0; w <= top_; ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = std::countr_zero(bits);
        out.push_back({static_cast<Index>(w * 64 + b), 1});
        bits &= bits - 1;
      }
      words_[w] = 0;
    }
    top_ = -1;
    return SparseVector::from_entries(std::move(out), field);
  }

 private:
  std::vector<std::uint64_t> words_;
  std::int64_t top_ = -1;
};

Reduction reduce_gf2(const SparseMatrix& d, const FieldSpec& field, bool track_basis) {
  const Index n = d.cols();
  std::vector<SparseVector> r_cols(n), v_cols(track_basis ? n : 0);
  std::vector<std::optional<Index>> pivot(d.rows());
  BitColumn work(d.rows());
  BitColumn basis(n);
  for (Index j = 0; j < n; ++j) {
    work.load(d.column(j));
    if (track_basis) basis.flip(j);
    while (auto low = work.low()) {
      auto p = pivot[*low];
      if (!p) break;
      work.add(r_cols[*p]);
      if (track_basis) basis.add(v_cols[*p]);
    }
    r_cols[j] = work.take(field);
    if (track_basis) v_cols[j] = basis.take(field);
    if (auto low = r_cols[j].low()) pivot[*low] = j;
  }
  return {SparseMatrix(d.rows(), std::move(r_cols)),
          track_basis ? SparseMatrix(n, std::move(v_cols)) : SparseMatrix(),
          std::move(pivot)};
}

}  // namespace

Reduction reduce_generic(const SparseMatrix& d, const FieldSpec& field, bool track_basis) {
  const Index n = d.cols();
  std::vector<SparseVector> r_cols(n), v_cols(track_basis ? n : 0);
  std::vector<std::optional<Index>> pivot(d.rows());
  for (Index j = 0; j < n; ++j) {
    SparseVector work = d.column(j);
    SparseVector basis = track_basis ? SparseVector::unit(j) : SparseVector();
    while (auto low = work.low()) {
      auto p = pivot[*low];
      if (!p) break;
      const SparseVector& pc = r_cols[*p];
      Scalar c = field.neg(field.div(work.at(*low), pc.at(*low)));
      work.axpy(c, pc, field);
      if (track_basis) basis.axpy(c, v_cols[*p], field);
    }
    if (auto low = work.low()) pivot[*low] = j;
    r_cols[j] = std::move(work);
    if (track_basis) v_cols[j] = std::move(basis);
  }
  return {SparseMatrix(d.rows(), std::move(r_cols)),
          track_basis ? SparseMatrix(n, std::move(v_cols)) : SparseMatrix(),
          std::move(pivot)};
}

Reduction reduce(const SparseMatrix& d, const FieldSpec& field, bool track_basis) {
  if (field.is_gf2()) return reduce_gf2(d, field, track_basis);
  return reduce_generic(d, field, track_basis);
}

Reduction reduce_with_basis(const SparseMatrix& d, const FieldSpec& field) {
  return reduce(d, field, true);
}

std::optional<SparseVector> solve_particular(const Reduction& reduction, const SparseVector& b,
                                             const FieldSpec& field) {
  const SparseMatrix& r = reduction.r;
  if (auto low = b.low(); low && *low >= r.rows())
    throw InputError("right-hand side longer than the matrix has rows");
  SparseVector residual = b;
  SparseVector x;
  while (auto low = residual.low()) {
    auto p = reduction.pivot_column[*low];
    if (!p) return std::nullopt;
    const SparseVector& pc = r.column(*p);
    Scalar c = field.div(residual.at(*low), pc.at(*low));
    residual.axpy(field.neg(c), pc, field);
    x.axpy(c, reduction.v.column(*p), field);
  }
  return x;
}

std::optional<AffineSolutionSet> solve(const SparseMatrix& a, const SparseVector& b,
                                       const FieldSpec& field) {
  Reduction red = reduce_with_basis(a, field);
  auto particular = solve_particular(red, b, field);
  if (!particular) return std::nullopt;
  AffineSolutionSet out{std::move(*particular), {}};
  for (Index j = 0; j < a.cols(); ++j)
    if (red.r.column(j).empty()) out.kernel_basis.push_back(red.v.column(j));
  return out;
}

}  // namespace barbridge
