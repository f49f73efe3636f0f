#include "barbridge/decompositions.hpp"

#include <algorithm>
#include <string>

#include "barbridge/error.hpp"

namespace barbridge {

namespace {

std::string describe(const Bar& b) {
  return "#" + std::to_string(b.id) + " [" + std::to_string(b.birth) + "," +
         std::to_string(b.death) + ")";
}

// a^e, or nullopt on overflow.
std::optional<std::uint64_t> checked_power(std::uint64_t a, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (a != 0 && r > UINT64_MAX / a) return std::nullopt;
    r *= a;
  }
  return r;
}

}  // namespace

AdmissiblePattern::AdmissiblePattern(std::vector<Bar> bars) : bars_(std::move(bars)) {
  std::sort(bars_.begin(), bars_.end(), [](const Bar& a, const Bar& b) {
    if (a.birth != b.birth) return a.birth > b.birth;
    if (a.death != b.death) return a.death > b.death;
    return a.id < b.id;
  });
  for (std::size_t i = 1; i < bars_.size(); ++i)
    if (bars_[i].birth == bars_[i - 1].birth && bars_[i].death == bars_[i - 1].death)
      throw AssumptionViolation("bars " + describe(bars_[i - 1]) + " and " + describe(bars_[i]) +
                                " share a birth-death pair");
  for (std::size_t c = 0; c < bars_.size(); ++c)
    for (std::size_t r = 0; r < bars_.size(); ++r)
      if (is_allowed(r, c)) allowed_.emplace_back(r, c);
}

bool AdmissiblePattern::is_allowed(std::size_t r, std::size_t c) const {
  if (r == c) return false;
  const Bar& a = bars_[r];
  const Bar& b = bars_[c];
  return a.birth <= b.birth && b.birth < a.death && a.death <= b.death;
}

std::optional<std::size_t> AdmissiblePattern::position(BarId id) const {
  for (std::size_t i = 0; i < bars_.size(); ++i)
    if (bars_[i].id == id) return i;
  return std::nullopt;
}

std::shared_ptr<const AdmissiblePattern> admissible_pattern(std::span<const Bar> bars) {
  return std::make_shared<const AdmissiblePattern>(std::vector<Bar>(bars.begin(), bars.end()));
}

std::shared_ptr<const AdmissiblePattern> pattern_at(const PersistenceResult& result, Grade l) {
  std::vector<Bar> alive;
  for (BarId id : result.bars_alive_at(l)) alive.push_back(result.bar(id));
  return std::make_shared<const AdmissiblePattern>(std::move(alive));
}

std::shared_ptr<const AdmissiblePattern> global_pattern(const PersistenceResult& result) {
  return admissible_pattern(result.bars());
}

ChangeMatrix::ChangeMatrix(std::shared_ptr<const AdmissiblePattern> pattern,
                           std::vector<Scalar> diagonal, std::vector<Scalar> off,
                           const FieldSpec& field)
    : pattern_(std::move(pattern)),
      field_(field),
      diagonal_(std::move(diagonal)),
      off_(std::move(off)) {
  if (diagonal_.size() != pattern_->size() || off_.size() != pattern_->allowed().size())
    throw InputError("change matrix entries do not match its pattern");
  for (Scalar& d : diagonal_) {
    d = field_.reduce(d);
    if (d == 0) throw InputError("change matrix needs a nonzero diagonal");
  }
  for (Scalar& v : off_) v = field_.reduce(v);
  by_column_.resize(pattern_->size());
  for (std::size_t i = 0; i < off_.size(); ++i) {
    auto [r, c] = pattern_->allowed()[i];
    by_column_[c].emplace_back(r, i);
  }
}

ChangeMatrix ChangeMatrix::identity(std::shared_ptr<const AdmissiblePattern> pattern,
                                    const FieldSpec& field) {
  std::size_t m = pattern->size(), a = pattern->allowed().size();
  return ChangeMatrix(std::move(pattern), std::vector<Scalar>(m, 1), std::vector<Scalar>(a, 0),
                      field);
}

Scalar ChangeMatrix::at(std::size_t r, std::size_t c) const {
  if (r == c) return diagonal_[c];
  for (auto [row, i] : by_column_[c])
    if (row == r) return off_[i];
  return 0;
}

std::vector<Scalar> ChangeMatrix::apply(const std::vector<Scalar>& x) const {
  if (x.size() != diagonal_.size()) throw InputError("vector length does not match the change");
  std::vector<Scalar> y(x.size(), 0);
  for (std::size_t c = 0; c < x.size(); ++c) {
    if (!x[c]) continue;
    y[c] = field_.add(y[c], field_.mul(diagonal_[c], x[c]));
    for (auto [r, i] : by_column_[c]) y[r] = field_.add(y[r], field_.mul(off_[i], x[c]));
  }
  return y;
}

std::vector<Scalar> ChangeMatrix::solve_restricted(const std::vector<std::size_t>& positions,
                                                   const std::vector<Scalar>& b) const {
  // Allowed positions have row > col, so solve top to bottom.
  std::vector<Scalar> y(positions.size(), 0);
  for (std::size_t i = 0; i < positions.size(); ++i) {
    Scalar acc = b[i];
    for (std::size_t j = 0; j < i; ++j)
      if (y[j]) acc = field_.sub(acc, field_.mul(at(positions[i], positions[j]), y[j]));
    y[i] = field_.div(acc, diagonal_[positions[i]]);
  }
  return y;
}

std::vector<std::vector<Scalar>> ChangeMatrix::dense() const {
  std::size_t m = diagonal_.size();
  std::vector<std::vector<Scalar>> out(m, std::vector<Scalar>(m, 0));
  for (std::size_t c = 0; c < m; ++c) {
    out[c][c] = diagonal_[c];
    for (auto [r, i] : by_column_[c]) out[r][c] = off_[i];
  }
  return out;
}

ChangeEnumerator::ChangeEnumerator(std::shared_ptr<const AdmissiblePattern> pattern,
                                   const FieldSpec& field, std::uint64_t cap)
    : pattern_(std::move(pattern)),
      field_(field),
      cap_(cap),
      diagonal_(pattern_->size(), 1),
      off_(pattern_->allowed().size(), 0) {
  if (cap_ == 0) throw InputError("enumeration cap must be at least 1");
  std::uint64_t p = field_.characteristic();
  auto a = checked_power(p - 1, pattern_->size());
  auto b = checked_power(p, pattern_->allowed().size());
  if (a && b && (*b == 0 || *a <= UINT64_MAX / *b)) total_ = *a * *b;
}

bool ChangeEnumerator::advance() {
  const Scalar p = field_.characteristic();
  for (Scalar& v : off_) {
    if (++v < p) return true;
    v = 0;
  }
  for (Scalar& d : diagonal_) {
    if (++d < p) return true;
    d = 1;
  }
  return false;
}

std::optional<ChangeMatrix> ChangeEnumerator::next() {
  if (exhausted_) return std::nullopt;
  if (produced_ == cap_) {
    exhausted_ = true;
    truncated_ = !total_ || *total_ > cap_;
    return std::nullopt;
  }
  ChangeMatrix out(pattern_, diagonal_, off_, field_);
  ++produced_;
  if (!advance()) exhausted_ = true;
  return out;
}

ChangeMatrix random_change(std::shared_ptr<const AdmissiblePattern> pattern,
                           const FieldSpec& field, std::mt19937_64& rng) {
  const std::uint64_t p = field.characteristic();
  std::vector<Scalar> diag(pattern->size()), off(pattern->allowed().size());
  for (Scalar& d : diag) d = static_cast<Scalar>(1 + rng() % (p - 1));
  for (Scalar& v : off) v = static_cast<Scalar>(rng() % p);
  return ChangeMatrix(std::move(pattern), std::move(diag), std::move(off), field);
}

TerminalClassSet alternate_terminal_classes(const PersistenceResult& result, BarId bar,
                                            std::optional<Grade> psi, std::uint64_t cap) {
  if (cap == 0) throw InputError("enumeration cap must be at least 1");
  const Bar& tau = result.bar(bar);
  TerminalClassSet out;
  out.psi = psi ? *psi : terminal_class(result, bar).psi;
  if (!tau.alive_at(out.psi))
    throw InputError("bar " + describe(tau) + " is not alive at psi = " + std::to_string(out.psi));
  auto pattern = pattern_at(result, out.psi);
  const std::size_t c = *pattern->position(bar);
  std::vector<std::size_t> free_rows;
  for (auto [r, col] : pattern->allowed())
    if (col == c) free_rows.push_back(r);

  const FieldSpec& field = result.field();
  const Scalar p = field.characteristic();
  Scalar diag = 1;
  std::vector<Scalar> entries(free_rows.size(), 0);
  for (std::uint64_t produced = 0;; ++produced) {
    if (produced == cap) {
      out.truncated = true;
      break;
    }
    BarRepresentation rep{out.psi, {}};
    rep.terms.push_back({diag, bar});
    for (std::size_t i = 0; i < free_rows.size(); ++i)
      if (entries[i]) rep.terms.push_back({entries[i], pattern->bars()[free_rows[i]].id});
    std::sort(rep.terms.begin(), rep.terms.end(),
              [](const BarTerm& a, const BarTerm& b) { return a.bar < b.bar; });
    out.classes.push_back(result.chain_of(rep));
    out.representations.push_back(std::move(rep));

    bool carried = true;
    for (Scalar& v : entries) {
      if (++v < p) {
        carried = false;
        break;
      }
      v = 0;
    }
    if (carried && ++diag == p) break;
  }
  return out;
}

BarRepresentationStream::BarRepresentationStream(BarRepresentation rep,
                                                 std::shared_ptr<const AdmissiblePattern> pattern,
                                                 const FieldSpec& field, std::uint64_t cap)
    : rep_(std::move(rep)), changes_(pattern, field, cap) {
  for (const BarTerm& t : rep_.terms)
    if (!pattern->position(t.bar))
      throw InputError("bar #" + std::to_string(t.bar) + " of the representation is not alive");
}

std::optional<BarRepresentation> BarRepresentationStream::next() {
  auto l = changes_.next();
  if (!l) return std::nullopt;
  return transform(rep_, *l);
}

BarRepresentationStream alternate_bar_representations(
    const BarRepresentation& rep, std::shared_ptr<const AdmissiblePattern> pattern,
    const FieldSpec& field, std::uint64_t cap) {
  return BarRepresentationStream(rep, std::move(pattern), field, cap);
}

BarRepresentation transform(const BarRepresentation& rep, const ChangeMatrix& l) {
  const AdmissiblePattern& pat = l.pattern();
  std::vector<Scalar> x(pat.size(), 0);
  for (const BarTerm& t : rep.terms) {
    auto pos = pat.position(t.bar);
    if (!pos) throw InputError("bar #" + std::to_string(t.bar) + " is not in the pattern");
    x[*pos] = t.coefficient;
  }
  std::vector<Scalar> y = l.apply(x);
  BarRepresentation out{rep.at, {}};
  for (std::size_t i = 0; i < y.size(); ++i)
    if (y[i]) out.terms.push_back({y[i], pat.bars()[i].id});
  std::sort(out.terms.begin(), out.terms.end(),
            [](const BarTerm& a, const BarTerm& b) { return a.bar < b.bar; });
  return out;
}

}  // namespace barbridge
