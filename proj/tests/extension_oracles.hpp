#pragma once

// Brute-force restriction and extension sets computed straight from their
// definitions with the dense oracle: a restriction at l is a class of
// Z^psi ∩ Y^l that maps to [tau] in Z^psi; an extension at l is its image in Y^l.

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "barbridge/extension.hpp"
#include "oracles.hpp"

namespace oracle {

// base + span(dirs) with dirs reduced to a basis modulo `space`; the elements
// are returned as canonical representatives modulo `space`.
inline std::set<Vec> classes_of(const Vec& base, const std::vector<Vec>& dirs,
                                const RowSpace& space, std::uint32_t p) {
  RowSpace span(space.length(), p);
  for (const Vec& d : dirs) span.add(space.reduce(d));
  return enumerate_affine(space.reduce(base), span.rows(), p,
                          [&](const Vec& v) { return space.reduce(v); });
}

inline std::size_t class_dimension(const std::vector<Vec>& dirs, const RowSpace& space,
                                   std::uint32_t p) {
  RowSpace span(space.length(), p);
  for (const Vec& d : dirs) span.add(space.reduce(d));
  return span.dim();
}

struct BruteLevel {
  bool exists = false;       // some restriction exists at this grade
  std::set<Vec> restrictions;  // modulo boundaries of Z^psi ∩ Y^l
  std::set<Vec> extensions;    // modulo boundaries of Y^l
};

class BruteExtension {
 public:
  // Every k-simplex of Y indexes the dense chains.
  BruteExtension(const GradedComplex& z, Grade psi, const GradedComplex& y, const Chain& tau,
                 int k, std::uint32_t p)
      : z_(z), y_(y), psi_(psi), k_(k), p_(p),
        kspace_(simplices_up_to(y, k, y.scale().infinity())) {
    tau_ = kspace_.to_vec(tau);
  }

  // Largest class dimension met while enumerating; callers skip instances
  // whose sets would be too large to list.
  std::size_t max_dimension() const { return max_dim_; }

  BruteLevel level(Grade l) {
    // Simplices of Z^psi that are in Y^l.
    auto in_aux = [&](const Simplex& s) {
      auto gz = z_.grade_of(s);
      auto gy = y_.grade_of(s);
      return gz && *gz <= psi_ && gy && *gy <= l;
    };
    std::vector<Simplex> ks, k1s;
    for (const auto& gs : z_.simplices(k_))
      if (in_aux(gs.simplex)) ks.push_back(gs.simplex);
    if (k_ + 1 <= z_.max_dim())
      for (const auto& gs : z_.simplices(k_ + 1))
        if (in_aux(gs.simplex)) k1s.push_back(gs.simplex);

    ChainSpace lower = k_ == 0 ? ChainSpace({Simplex{0}})
                               : ChainSpace(simplices_up_to(y_, k_ - 1, y_.scale().infinity()));
    std::vector<Vec> cols;
    for (const Simplex& s : ks) cols.push_back(boundary_column(s, lower, p_));
    std::vector<Vec> cycles;
    for (const Vec& n : nullspace(cols, lower.size(), p_)) {
      Vec v(kspace_.size(), 0);
      for (std::size_t i = 0; i < ks.size(); ++i) v[kspace_.index(ks[i])] = n[i];
      cycles.push_back(std::move(v));
    }

    RowSpace bz(kspace_.size(), p_);
    for (const auto& c : boundary_columns(z_, k_ + 1, psi_, kspace_, p_)) bz.add(c);
    RowSpace baux(kspace_.size(), p_);
    for (const Simplex& s : k1s) baux.add(boundary_column(s, kspace_, p_));
    RowSpace by(kspace_.size(), p_);
    for (const auto& c : boundary_columns(y_, k_ + 1, l, kspace_, p_)) by.add(c);

    // Solve sum a_i cycle_i == tau modulo B(Z^psi).
    std::vector<Vec> reduced;
    for (const Vec& c : cycles) reduced.push_back(bz.reduce(c));
    BruteLevel out;
    auto a = solve(reduced, bz.reduce(tau_), p_);
    if (!a) return out;
    out.exists = true;
    Vec base(kspace_.size(), 0);
    for (std::size_t i = 0; i < cycles.size(); ++i)
      for (std::size_t j = 0; j < base.size(); ++j)
        base[j] = (base[j] + mulmod((*a)[i], cycles[i][j], p_)) % p_;
    std::vector<Vec> dirs;
    for (const Vec& n : nullspace(reduced, kspace_.size(), p_)) {
      Vec d(kspace_.size(), 0);
      for (std::size_t i = 0; i < cycles.size(); ++i)
        for (std::size_t j = 0; j < d.size(); ++j)
          d[j] = (d[j] + mulmod(n[i], cycles[i][j], p_)) % p_;
      dirs.push_back(std::move(d));
    }
    max_dim_ = std::max({max_dim_, class_dimension(dirs, baux, p_), class_dimension(dirs, by, p_)});
    if (max_dim_ > 14) return out;
    out.restrictions = classes_of(base, dirs, baux, p_);
    out.extensions = classes_of(base, dirs, by, p_);
    return out;
  }

  // Members of a computed set reduced modulo boundaries of Y^target.
  std::set<Vec> pushed(const Chain& baseline, const std::vector<Chain>& offsets, Grade target) {
    RowSpace by(kspace_.size(), p_);
    for (const auto& c : boundary_columns(y_, k_ + 1, target, kspace_, p_)) by.add(c);
    std::vector<Vec> dirs;
    for (const Chain& o : offsets) dirs.push_back(kspace_.to_vec(o));
    return classes_of(kspace_.to_vec(baseline), dirs, by, p_);
  }

  // Members of a computed restriction set reduced modulo boundaries of the
  // auxiliary complex at l.
  std::set<Vec> restricted(const Chain& baseline, const std::vector<Chain>& offsets, Grade l) {
    RowSpace baux(kspace_.size(), p_);
    if (k_ + 1 <= z_.max_dim())
      for (const auto& gs : z_.simplices(k_ + 1)) {
        auto gy = y_.grade_of(gs.simplex);
        if (gs.grade <= psi_ && gy && *gy <= l) baux.add(boundary_column(gs.simplex, kspace_, p_));
      }
    std::vector<Vec> dirs;
    for (const Chain& o : offsets) dirs.push_back(kspace_.to_vec(o));
    return classes_of(kspace_.to_vec(baseline), dirs, baux, p_);
  }

 private:
  const GradedComplex& z_;
  const GradedComplex& y_;
  Grade psi_;
  int k_;
  std::uint32_t p_;
  ChainSpace kspace_;
  Vec tau_;
  std::size_t max_dim_ = 0;
};

// Random pair (Z, Y) on a shared vertex set with Y complete at its top grade.
inline std::pair<GradedComplex, GradedComplex> random_pair(std::mt19937_64& rng,
                                                           std::uint32_t n) {
  GradedComplex z = random_complex(rng, n, 2, 2 + rng() % 3, 0.7);
  GradedComplex partial = random_complex(rng, n, 2, 2 + rng() % 4, 0.6);
  const Grade top = partial.scale().size() + 1;
  std::vector<double> values;
  for (Grade g = 1; g <= top; ++g) values.push_back(g);
  std::vector<barbridge::GradedSimplex> list;
  std::vector<bool> mask(n);
  for (int d = 0; d <= 2; ++d) {
    std::fill(mask.begin(), mask.end(), false);
    std::fill(mask.begin(), mask.begin() + d + 1, true);
    do {
      std::vector<barbridge::Vertex> vs;
      for (std::uint32_t i = 0; i < n; ++i)
        if (mask[i]) vs.push_back(i);
      Simplex s(vs);
      auto g = partial.grade_of(s);
      list.push_back({s, g ? *g : top});
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  GradedComplex y = GradedComplex::from_simplices(barbridge::ParameterScale(values), n, 2,
                                                  std::move(list));
  return {std::move(z), std::move(y)};
}

}  // namespace oracle
