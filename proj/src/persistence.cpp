#include "barbridge/persistence.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

#include "barbridge/decompositions.hpp"
#include "barbridge/error.hpp"
#include "barbridge/parallel.hpp"

namespace barbridge {

Scalar BarRepresentation::coefficient(BarId bar) const noexcept {
  for (const BarTerm& t : terms)
    if (t.bar == bar) return t.coefficient;
  return 0;
}

namespace {

// Column order of the simplices of one dimension: by grade, ties by the
// requested vertex order.
std::vector<std::size_t> column_order(std::span<const GradedSimplex> simplices, TieOrder order) {
  std::vector<std::size_t> idx(simplices.size());
  std::iota(idx.begin(), idx.end(), 0);
  // simplices are stored lexicographically, so a stable sort by grade keeps
  // lexicographic ties; reversing first gives the reverse order.
  if (order == TieOrder::reverse_lexicographic) std::reverse(idx.begin(), idx.end());
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return simplices[a].grade < simplices[b].grade;
  });
  return idx;
}

std::vector<Index> inverse(const std::vector<std::size_t>& order) {
  std::vector<Index> inv(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) inv[order[i]] = static_cast<Index>(i);
  return inv;
}

SparseMatrix boundary_matrix(const GradedComplex& x, int dim,
                             const std::vector<std::size_t>& col_order,
                             const std::vector<Index>& row_index, Index rows,
                             const FieldSpec& field) {
  auto simplices = x.simplices(dim);
  std::vector<SparseVector> cols;
  cols.reserve(col_order.size());
  for (std::size_t pos : col_order) {
    const Simplex& s = simplices[pos].simplex;
    std::vector<Entry> entries;
    if (dim == 0) {
      entries.push_back({0, 1});
    } else {
      for (std::size_t i = 0; i <= static_cast<std::size_t>(dim); ++i) {
        auto face = x.position_of(s.facet(i));
        Scalar sign = (i % 2 == 0) ? 1 : field.neg(1);
        entries.push_back({row_index[*face], sign});
      }
    }
    cols.push_back(SparseVector::from_entries(std::move(entries), field));
  }
  return SparseMatrix(rows, std::move(cols));
}

}  // namespace

PersistenceResult compute_persistence(std::shared_ptr<const GradedComplex> complex, int k,
                                      const FieldSpec& field, TieOrder order) {
  if (!complex) throw InputError("no complex given");
  if (k < 0) throw InputError("homology degree must be non-negative");
  if (complex->max_dim() < k + 1)
    throw InputError("degree " + std::to_string(k) + " needs simplices up to dimension " +
                     std::to_string(k + 1) + ", complex is capped at " +
                     std::to_string(complex->max_dim()));
  PersistenceResult res;
  res.complex_ = complex;
  res.degree_ = k;
  res.field_ = field;
  res.order_ = order;
  const GradedComplex& x = *complex;
  const Grade inf = x.scale().infinity();

  auto ks = x.simplices(k);
  auto k1s = x.simplices(k + 1);
  res.k_order_ = column_order(ks, order);
  res.k_index_ = inverse(res.k_order_);
  for (std::size_t pos : res.k_order_) res.k_grade_.push_back(ks[pos].grade);
  res.k1_order_ = column_order(k1s, order);
  for (std::size_t pos : res.k1_order_) res.k1_grade_.push_back(k1s[pos].grade);

  SparseMatrix d_low, d_high;
  if (k == 0) {
    d_low = boundary_matrix(x, 0, res.k_order_, {}, 1, field);
  } else {
    auto lower = column_order(x.simplices(k - 1), order);
    d_low = boundary_matrix(x, k, res.k_order_, inverse(lower),
                            static_cast<Index>(lower.size()), field);
  }
  d_high = boundary_matrix(x, k + 1, res.k1_order_, res.k_index_,
                           static_cast<Index>(ks.size()), field);

  parallel_for(2, [&](std::size_t task) {
    if (task == 0)
      res.low_ = reduce(d_low, field, true);
    else
      res.high_ = reduce(d_high, field, false);
  });

  const Index n = static_cast<Index>(ks.size());
  res.echelon_.assign(n, std::nullopt);

  struct Pending {
    Grade birth, death;
    Index pivot;
  };
  std::vector<Pending> pending;
  for (Index j = 0; j < res.high_.r.cols(); ++j) {
    const SparseVector& col = res.high_.r.column(j);
    auto low = col.low();
    if (!low) continue;
    Grade birth = res.k_grade_[*low], death = res.k1_grade_[j];
    res.echelon_[*low] = PersistenceResult::BasisVector{col, std::nullopt, death};
    if (birth < death) pending.push_back({birth, death, *low});
  }
  for (Index i = 0; i < n; ++i) {
    if (!res.low_.r.column(i).empty() || res.echelon_[i]) continue;
    res.echelon_[i] = PersistenceResult::BasisVector{res.low_.v.column(i), std::nullopt, inf};
    pending.push_back({res.k_grade_[i], inf, i});
  }
  std::sort(pending.begin(), pending.end(), [](const Pending& a, const Pending& b) {
    return std::tie(a.birth, a.death, a.pivot) < std::tie(b.birth, b.death, b.pivot);
  });
  for (const Pending& p : pending) {
    BarId id = static_cast<BarId>(res.bars_.size());
    res.bars_.push_back({id, p.birth, p.death, k});
    res.echelon_[p.pivot]->bar = id;
    res.representatives_.push_back(res.to_chain(res.echelon_[p.pivot]->v));
  }
  return res;
}

PersistenceResult compute_persistence(const GradedComplex& complex, int k, const FieldSpec& field,
                                      TieOrder order) {
  return compute_persistence(std::make_shared<const GradedComplex>(complex), k, field, order);
}

const Bar& PersistenceResult::bar(BarId id) const {
  if (id >= bars_.size()) throw InputError("no bar with id " + std::to_string(id));
  return bars_[id];
}

const Chain& PersistenceResult::representative(BarId id) const {
  if (id >= bars_.size()) throw InputError("no bar with id " + std::to_string(id));
  return representatives_[id];
}

std::vector<BarId> PersistenceResult::bars_alive_at(Grade l) const {
  if (l < 1 || l > complex_->scale().size())
    throw InputError("grade " + std::to_string(l) + " outside scale 1.." +
                     std::to_string(complex_->scale().size()));
  std::vector<BarId> out;
  for (const Bar& b : bars_)
    if (b.alive_at(l)) out.push_back(b.id);
  return out;
}

Chain PersistenceResult::to_chain(const SparseVector& v) const {
  Chain c;
  auto ks = complex_->simplices(degree_);
  for (const Entry& e : v.entries()) c.add(ks[k_order_[e.index]].simplex, e.value, field_);
  return c;
}

SparseVector PersistenceResult::to_vector(const Chain& c) const {
  std::vector<Entry> entries;
  for (const auto& [s, v] : c.terms()) {
    if (s.dim() != degree_)
      throw InputError("chain has a " + std::to_string(s.dim()) + "-simplex " + s.to_string() +
                       " in degree " + std::to_string(degree_));
    auto pos = complex_->position_of(s);
    if (!pos) throw InputError("simplex " + s.to_string() + " is not in the complex");
    entries.push_back({k_index_[*pos], v});
  }
  return SparseVector::from_entries(std::move(entries), field_);
}

std::vector<Scalar> PersistenceResult::original_coordinates(const Chain& z, Grade l) const {
  if (l < 1 || l > complex_->scale().size())
    throw InputError("grade " + std::to_string(l) + " outside scale 1.." +
                     std::to_string(complex_->scale().size()));
  SparseVector residual = to_vector(z);
  for (const Entry& e : residual.entries())
    if (k_grade_[e.index] > l)
      throw InputError("chain uses a simplex of grade " + std::to_string(k_grade_[e.index]) +
                       " above " + std::to_string(l));
  if (!is_cycle(z, field_)) throw InputError("chain is not a cycle");
  std::vector<Scalar> coords(bars_.size(), 0);
  while (auto low = residual.low()) {
    const auto& basis = echelon_[*low];
    if (!basis) throw InputError("chain is not a cycle");
    Scalar c = field_.div(residual.at(*low), basis->v.at(*low));
    residual.axpy(field_.neg(c), basis->v, field_);
    if (basis->bar && basis->bounded_at > l) coords[*basis->bar] = c;
  }
  return coords;
}

BarRepresentation PersistenceResult::bar_representation(const Chain& z, Grade l) const {
  std::vector<Scalar> coords = original_coordinates(z, l);
  BarRepresentation rep{l, {}};
  if (!change_) {
    for (BarId id = 0; id < coords.size(); ++id)
      if (coords[id]) rep.terms.push_back({coords[id], id});
    return rep;
  }
  const AdmissiblePattern& pat = change_->pattern();
  std::vector<std::size_t> positions;
  for (std::size_t i = 0; i < pat.size(); ++i)
    if (pat.bars()[i].alive_at(l)) positions.push_back(i);
  std::vector<Scalar> b;
  for (std::size_t p : positions) b.push_back(coords[pat.bars()[p].id]);
  std::vector<Scalar> y = change_->solve_restricted(positions, b);
  for (std::size_t i = 0; i < positions.size(); ++i)
    if (y[i]) rep.terms.push_back({y[i], pat.bars()[positions[i]].id});
  std::sort(rep.terms.begin(), rep.terms.end(),
            [](const BarTerm& a, const BarTerm& b) { return a.bar < b.bar; });
  return rep;
}

Chain PersistenceResult::chain_of(const BarRepresentation& rep) const {
  Chain c;
  for (const BarTerm& t : rep.terms) c.axpy(t.coefficient, representative(t.bar), field_);
  return c;
}

PersistenceResult PersistenceResult::with_change(const ChangeMatrix& l) const {
  if (change_) throw InputError("decomposition already carries a change");
  const AdmissiblePattern& pat = l.pattern();
  if (pat.size() != bars_.size())
    throw InputError("change must cover every bar of the decomposition");
  PersistenceResult out = *this;
  for (std::size_t c = 0; c < pat.size(); ++c) {
    Chain rep;
    for (std::size_t r = 0; r < pat.size(); ++r)
      if (Scalar v = l.at(r, c)) rep.axpy(v, representatives_[pat.bars()[r].id], field_);
    out.representatives_[pat.bars()[c].id] = std::move(rep);
  }
  out.change_ = std::make_shared<const ChangeMatrix>(l);
  return out;
}

std::pair<Grade, Grade> class_birth_death(const PersistenceResult& result,
                                          const BarRepresentation& rep) {
  if (rep.empty()) throw InputError("the zero class has no birth or death");
  Grade birth = 0, death = 0;
  for (const BarTerm& t : rep.terms) {
    const Bar& b = result.bar(t.bar);
    birth = std::max(birth, b.birth);
    death = std::max(death, b.death);
  }
  return {birth, death};
}

TerminalClass terminal_class(const PersistenceResult& result, BarId bar) {
  const Bar& b = result.bar(bar);
  Grade psi = b.death == result.infinity() ? result.complex().scale().size() : b.death - 1;
  return {psi, result.representative(bar)};
}

}  // namespace barbridge
