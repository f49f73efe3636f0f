#pragma once

// Dense linear algebra over GF(p), written independently of the library's
// sparse reduction, plus chain-complex helpers built on it. Only test code
// uses this.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "barbridge/chain.hpp"
#include "barbridge/complex.hpp"

namespace oracle {

using barbridge::Chain;
using barbridge::Grade;
using barbridge::GradedComplex;
using barbridge::Simplex;
using Vec = std::vector<std::uint32_t>;

inline std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(std::uint64_t(a) * b % p);
}

inline std::uint32_t inverse(std::uint32_t a, std::uint32_t p) {
  std::uint32_t r = 1, e = p - 2, b = a % p;
  while (e) {
    if (e & 1) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1;
  }
  return r;
}

// Row space in reduced row echelon form; vectors share one length.
class RowSpace {
 public:
  RowSpace(std::size_t length, std::uint32_t p) : n_(length), p_(p) {}

  std::size_t dim() const { return rows_.size(); }
  std::size_t length() const { return n_; }

  // Canonical representative of v modulo the span.
  Vec reduce(Vec v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      std::uint32_t c = v[pivots_[i]];
      if (!c) continue;
      for (std::size_t j = 0; j < n_; ++j)
        v[j] = (v[j] + p_ - mulmod(c, rows_[i][j], p_)) % p_;
    }
    return v;
  }

  bool contains(const Vec& v) const {
    Vec r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](std::uint32_t x) { return x == 0; });
  }

  // Returns true if v enlarged the span.
  bool add(Vec v) {
    v = reduce(std::move(v));
    std::size_t piv = 0;
    while (piv < n_ && v[piv] == 0) ++piv;
    if (piv == n_) return false;
    std::uint32_t inv = inverse(v[piv], p_);
    for (auto& x : v) x = mulmod(x, inv, p_);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      std::uint32_t c = rows_[i][piv];
      if (!c) continue;
      for (std::size_t j = 0; j < n_; ++j)
        rows_[i][j] = (rows_[i][j] + p_ - mulmod(c, v[j], p_)) % p_;
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
  }

  const std::vector<Vec>& rows() const { return rows_; }

 private:
  std::size_t n_;
  std::uint32_t p_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

inline std::size_t rank_of(const std::vector<Vec>& vectors, std::size_t length, std::uint32_t p) {
  RowSpace s(length, p);
  for (const Vec& v : vectors) s.add(v);
  return s.dim();
}

// Basis of {x : sum_i x_i * columns[i] = 0}.
inline std::vector<Vec> nullspace(const std::vector<Vec>& columns, std::size_t rows,
                                  std::uint32_t p) {
  // Row-reduce the augmented [columns^T | I] and keep identity parts of zero rows.
  const std::size_t m = columns.size();
  std::vector<Vec> aug(m, Vec(rows + m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    std::copy(columns[i].begin(), columns[i].end(), aug[i].begin());
    aug[i][rows + i] = 1;
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < rows && r < m; ++c) {
    std::size_t piv = r;
    while (piv < m && aug[piv][c] == 0) ++piv;
    if (piv == m) continue;
    std::swap(aug[r], aug[piv]);
    std::uint32_t inv = inverse(aug[r][c], p);
    for (auto& x : aug[r]) x = mulmod(x, inv, p);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || aug[i][c] == 0) continue;
      std::uint32_t f = aug[i][c];
      for (std::size_t j = 0; j < rows + m; ++j)
        aug[i][j] = (aug[i][j] + p - mulmod(f, aug[r][j], p)) % p;
    }
    ++r;
  }
  std::vector<Vec> out;
  for (std::size_t i = r; i < m; ++i) out.emplace_back(aug[i].begin() + rows, aug[i].end());
  return out;
}

// Solves sum_i x_i * columns[i] = b; returns one solution or nothing.
inline std::optional<Vec> solve(const std::vector<Vec>& columns, const Vec& b, std::uint32_t p) {
  std::vector<Vec> cols = columns;
  Vec neg(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) neg[i] = (p - b[i] % p) % p;
  cols.push_back(neg);
  for (const Vec& k : nullspace(cols, b.size(), p)) {
    if (k.back() == 0) continue;
    std::uint32_t inv = inverse(k.back(), p);
    Vec x(columns.size());
    for (std::size_t i = 0; i < columns.size(); ++i) x[i] = mulmod(k[i], inv, p);
    return x;
  }
  return std::nullopt;
}

// Chains of one dimension as dense vectors over a fixed simplex list.
class ChainSpace {
 public:
  explicit ChainSpace(std::vector<Simplex> simplices) : list_(std::move(simplices)) {
    for (std::size_t i = 0; i < list_.size(); ++i) index_[list_[i]] = i;
  }
  std::size_t size() const { return list_.size(); }
  const std::vector<Simplex>& simplices() const { return list_; }
  bool has(const Simplex& s) const { return index_.count(s) > 0; }
  std::size_t index(const Simplex& s) const { return index_.at(s); }

  Vec to_vec(const Chain& c) const {
    Vec v(list_.size(), 0);
    for (const auto& [s, x] : c.terms()) v[index_.at(s)] = x;
    return v;
  }
  Chain to_chain(const Vec& v, const barbridge::FieldSpec& f) const {
    Chain c;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i]) c.add(list_[i], v[i], f);
    return c;
  }

 private:
  std::vector<Simplex> list_;
  std::map<Simplex, std::size_t> index_;
};

inline std::vector<Simplex> simplices_up_to(const GradedComplex& x, int dim, Grade g) {
  std::vector<Simplex> out;
  if (dim < 0 || dim > x.max_dim()) return out;
  for (const auto& gs : x.simplices(dim))
    if (gs.grade <= g) out.push_back(gs.simplex);
  return out;
}

// Boundary of one simplex written into a dense vector over `target`; signs
// (-1)^i for dropping vertex i. A vertex maps to the augmentation row when
// target is the one-element space {augmentation}.
inline Vec boundary_column(const Simplex& s, const ChainSpace& target, std::uint32_t p) {
  Vec v(target.size(), 0);
  if (s.dim() == 0) {
    if (target.size() == 1) v[0] = 1;
    return v;
  }
  const auto& vs = s.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    std::vector<barbridge::Vertex> f;
    for (std::size_t j = 0; j < vs.size(); ++j)
      if (j != i) f.push_back(vs[j]);
    std::size_t at = target.index(Simplex(f));
    v[at] = (v[at] + (i % 2 == 0 ? 1 : p - 1)) % p;
  }
  return v;
}

// Boundary columns of the dim-simplices of x with grade <= g, written over
// the chain space of `rows` (which must contain all their facets).
inline std::vector<Vec> boundary_columns(const GradedComplex& x, int dim, Grade g,
                                         const ChainSpace& rows, std::uint32_t p) {
  std::vector<Vec> out;
  for (const Simplex& s : simplices_up_to(x, dim, g)) out.push_back(boundary_column(s, rows, p));
  return out;
}

// Space receiving boundaries of dim-simplices: (dim-1)-simplices of x, or the
// single augmentation coordinate for dim 0.
inline ChainSpace facet_space(const GradedComplex& x, int dim) {
  if (dim == 0) return ChainSpace({Simplex{0}});
  return ChainSpace(simplices_up_to(x, dim - 1, x.scale().infinity()));
}

// Reduced cycles Z_k and boundaries B_k of x at grade g, as vectors over all
// k-simplices of x.
struct CyclesBoundaries {
  std::vector<Vec> cycles;  // basis
  RowSpace boundaries;
};

inline CyclesBoundaries cycles_boundaries(const GradedComplex& x, int k, Grade g,
                                          const ChainSpace& kspace, std::uint32_t p) {
  const ChainSpace lower = facet_space(x, k);
  std::vector<Simplex> ks = simplices_up_to(x, k, g);
  std::vector<Vec> cols;
  for (const Simplex& s : ks) cols.push_back(boundary_column(s, lower, p));
  CyclesBoundaries out{{}, RowSpace(kspace.size(), p)};
  for (const Vec& n : nullspace(cols, lower.size(), p)) {
    Vec v(kspace.size(), 0);
    for (std::size_t i = 0; i < ks.size(); ++i) v[kspace.index(ks[i])] = n[i];
    out.cycles.push_back(std::move(v));
  }
  for (const Vec& c : boundary_columns(x, k + 1, g, kspace, p)) out.boundaries.add(c);
  return out;
}

// Persistent Betti number: rank of H_k(X^i) -> H_k(X^j) for i <= j (0 if i = 0).
inline std::size_t persistent_betti(const GradedComplex& x, int k, Grade i, Grade j,
                                    std::uint32_t p) {
  if (i == 0) return 0;
  ChainSpace kspace(simplices_up_to(x, k, x.scale().infinity()));
  auto zi = cycles_boundaries(x, k, i, kspace, p);
  RowSpace bj(kspace.size(), p);
  if (j <= x.scale().size())
    for (const Vec& c : boundary_columns(x, k + 1, j, kspace, p)) bj.add(c);
  std::size_t before = bj.dim();
  for (const Vec& z : zi.cycles) bj.add(z);
  return bj.dim() - before;
}

// Multiset of (birth, death) grades by inclusion-exclusion of persistent
// Betti numbers; death N+1 is infinity.
inline std::map<std::pair<Grade, Grade>, long> barcode(const GradedComplex& x, int k,
                                                       std::uint32_t p) {
  const Grade n = x.scale().size();
  std::vector<std::vector<long>> beta(n + 2, std::vector<long>(n + 2, 0));
  for (Grade i = 1; i <= n; ++i)
    for (Grade j = i; j <= n; ++j) beta[i][j] = static_cast<long>(persistent_betti(x, k, i, j, p));
  auto b = [&](Grade i, Grade j) -> long { return (i == 0 || j > n) ? 0 : beta[i][j]; };
  std::map<std::pair<Grade, Grade>, long> out;
  for (Grade s = 1; s <= n; ++s)
    for (Grade d = s + 1; d <= n + 1; ++d) {
      long m = b(s, d - 1) - b(s - 1, d - 1) - b(s, d) + b(s - 1, d);
      if (m) out[{s, d}] = m;
    }
  return out;
}

// Every element of the affine set base + span(dirs) over GF(p), mapped through f.
template <class F>
std::set<Vec> enumerate_affine(const Vec& base, const std::vector<Vec>& dirs, std::uint32_t p,
                               F&& f) {
  std::set<Vec> out;
  std::vector<std::uint32_t> digit(dirs.size(), 0);
  while (true) {
    Vec v = base;
    for (std::size_t i = 0; i < dirs.size(); ++i)
      if (digit[i])
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = (v[j] + mulmod(digit[i], dirs[i][j], p)) % p;
    out.insert(f(v));
    std::size_t i = 0;
    while (i < digit.size() && ++digit[i] == p) digit[i++] = 0;
    if (i == digit.size()) break;
  }
  return out;
}

// Random filtered complex on n vertices up to dimension max_dim (all
// vertices at grade 1, scale 1..levels).
inline GradedComplex random_complex(std::mt19937_64& rng, std::uint32_t n, int max_dim,
                                    Grade levels, double density) {
  std::vector<double> values;
  for (Grade g = 1; g <= levels; ++g) values.push_back(g);
  std::map<Simplex, Grade> grade;
  for (barbridge::Vertex v = 0; v < n; ++v) grade[Simplex{v}] = 1;
  std::uniform_real_distribution<double> coin(0, 1);
  std::uniform_int_distribution<Grade> level(1, levels);
  for (int d = 1; d <= max_dim; ++d) {
    std::vector<barbridge::Vertex> pick(d + 1);
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + d + 1, true);
    do {
      std::vector<barbridge::Vertex> vs;
      for (std::uint32_t i = 0; i < n; ++i)
        if (mask[i]) vs.push_back(i);
      Simplex s(vs);
      Grade g = level(rng);
      bool faces = true;
      for (std::size_t i = 0; i < vs.size() && faces; ++i) {
        auto it = grade.find(s.facet(i));
        if (it == grade.end()) faces = false;
        else g = std::max(g, it->second);
      }
      if (faces && coin(rng) < density) grade[s] = g;
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  std::vector<barbridge::GradedSimplex> list;
  for (const auto& [s, g] : grade) list.push_back({s, g});
  return GradedComplex::from_simplices(barbridge::ParameterScale(values), n, max_dim,
                                       std::move(list));
}

}  // namespace oracle

namespace oracle {

using Matrix = std::vector<std::vector<std::uint32_t>>;

inline bool invertible(const Matrix& m, std::uint32_t p) {
  return rank_of(m, m.size(), p) == m.size();
}

// Restrictions to grade psi of all automorphisms of the interval module
// sum_i I[birth_i, death_i) on grades 1..n over GF(p), found by brute force
// over every invertible matrix at every grade. Matrices are indexed by the
// bars alive at psi in the order given.
inline std::set<Matrix> module_automorphisms_at(const std::vector<std::pair<Grade, Grade>>& bars,
                                                Grade n, Grade psi, std::uint32_t p) {
  std::vector<std::vector<std::size_t>> alive(n + 2);
  for (Grade l = 1; l <= n; ++l)
    for (std::size_t i = 0; i < bars.size(); ++i)
      if (bars[i].first <= l && l < bars[i].second) alive[l].push_back(i);

  auto candidates = [&](Grade l) {
    const std::size_t m = alive[l].size();
    std::vector<Matrix> out;
    std::vector<std::uint32_t> digits(m * m, 0);
    while (true) {
      Matrix a(m, std::vector<std::uint32_t>(m));
      for (std::size_t i = 0; i < m * m; ++i) a[i / m][i % m] = digits[i];
      if (invertible(a, p)) out.push_back(a);
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
      if (i == digits.size()) break;
    }
    return out;
  };
  // Structure map from l to l+1 commutes: iota(L_l e_j) == L_{l+1} iota(e_j).
  auto consistent = [&](Grade l, const Matrix& a, const Matrix& b) {
    const auto& from = alive[l];
    const auto& to = alive[l + 1];
    for (std::size_t j = 0; j < from.size(); ++j) {
      auto tj = std::find(to.begin(), to.end(), from[j]);
      for (std::size_t r = 0; r < to.size(); ++r) {
        auto fr = std::find(from.begin(), from.end(), to[r]);
        std::uint32_t lhs = fr == from.end() ? 0 : a[fr - from.begin()][j];
        std::uint32_t rhs = tj == to.end() ? 0 : b[r][tj - to.begin()];
        if (lhs != rhs) return false;
      }
    }
    return true;
  };

  std::vector<std::vector<Matrix>> cand(n + 2);
  for (Grade l = 1; l <= n; ++l) cand[l] = candidates(l);
  std::vector<std::set<Matrix>> fwd(n + 2), bwd(n + 2);
  fwd[1] = std::set<Matrix>(cand[1].begin(), cand[1].end());
  for (Grade l = 1; l < n; ++l)
    for (const Matrix& b : cand[l + 1])
      for (const Matrix& a : fwd[l])
        if (consistent(l, a, b)) {
          fwd[l + 1].insert(b);
          break;
        }
  bwd[n] = std::set<Matrix>(cand[n].begin(), cand[n].end());
  for (Grade l = n - 1; l >= 1; --l)
    for (const Matrix& a : cand[l])
      for (const Matrix& b : bwd[l + 1])
        if (consistent(l, a, b)) {
          bwd[l].insert(a);
          break;
        }
  std::set<Matrix> out;
  for (const Matrix& a : fwd[psi])
    if (bwd[psi].count(a)) out.insert(a);
  return out;
}

}  // namespace oracle
