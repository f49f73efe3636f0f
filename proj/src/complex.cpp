#include "barbridge/complex.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "barbridge/error.hpp"

namespace barbridge {

ParameterScale::ParameterScale(std::vector<double> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) throw InputError("parameter values must be finite");
    if (i && !(values_[i - 1] < values_[i]))
      throw InputError("parameter values must be strictly increasing");
  }
}

ParameterScale ParameterScale::from_unsorted(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return ParameterScale(std::move(values));
}

double ParameterScale::value(Grade g) const {
  if (g == infinity()) return std::numeric_limits<double>::infinity();
  if (g < 1 || g > size())
    throw InputError("grade " + std::to_string(g) + " outside scale 1.." + std::to_string(size()));
  return values_[g - 1];
}

std::optional<Grade> ParameterScale::grade_of(double v) const {
  auto it = std::lower_bound(values_.begin(), values_.end(), v);
  if (it == values_.end() || *it != v) return std::nullopt;
  return static_cast<Grade>(it - values_.begin()) + 1;
}

Grade ParameterScale::floor_grade(double v) const {
  return static_cast<Grade>(std::upper_bound(values_.begin(), values_.end(), v) -
                            values_.begin());
}

namespace {

bool simplex_less(const GradedSimplex& a, const GradedSimplex& b) {
  return a.simplex < b.simplex;
}

}  // namespace

GradedComplex GradedComplex::from_simplices(ParameterScale scale, std::uint32_t vertex_count,
                                            int max_dim, std::vector<GradedSimplex> simplices) {
  if (max_dim < 0) throw InputError("max_dim must be non-negative");
  GradedComplex out;
  out.scale_ = std::move(scale);
  out.vertex_count_ = vertex_count;
  out.max_dim_ = max_dim;
  out.by_dim_.assign(max_dim + 1, {});
  for (GradedSimplex& gs : simplices) {
    int d = gs.simplex.dim();
    if (d > max_dim)
      throw InputError("simplex " + gs.simplex.to_string() + " exceeds max_dim " +
                       std::to_string(max_dim));
    if (gs.grade < 1 || gs.grade > out.scale_.size())
      throw InputError("simplex " + gs.simplex.to_string() + " has grade " +
                       std::to_string(gs.grade) + " outside the scale");
    if (gs.simplex.vertices().back() >= vertex_count)
      throw InputError("simplex " + gs.simplex.to_string() + " uses a vertex beyond " +
                       std::to_string(vertex_count));
    out.by_dim_[d].push_back(std::move(gs));
  }
  for (auto& level : out.by_dim_) {
    std::sort(level.begin(), level.end(), simplex_less);
    for (std::size_t i = 1; i < level.size(); ++i)
      if (level[i - 1].simplex == level[i].simplex)
        throw InputError("duplicate simplex " + level[i].simplex.to_string());
  }
  for (int d = 1; d <= max_dim; ++d)
    for (const GradedSimplex& gs : out.by_dim_[d])
      for (std::size_t i = 0; i <= static_cast<std::size_t>(d); ++i) {
        Simplex f = gs.simplex.facet(i);
        auto g = out.grade_of(f);
        if (!g)
          throw InputError("face " + f.to_string() + " of " + gs.simplex.to_string() +
                           " is missing");
        if (*g > gs.grade)
          throw InputError("face " + f.to_string() + " enters after its coface " +
                           gs.simplex.to_string());
      }
  return out;
}

std::span<const GradedSimplex> GradedComplex::simplices(int dim) const {
  if (dim < 0 || dim > max_dim_) return {};
  return by_dim_[dim];
}

std::size_t GradedComplex::size() const noexcept {
  std::size_t n = 0;
  for (const auto& level : by_dim_) n += level.size();
  return n;
}

std::optional<std::size_t> GradedComplex::position_of(const Simplex& s) const {
  int d = s.dim();
  if (d < 0 || d > max_dim_) return std::nullopt;
  const auto& level = by_dim_[d];
  auto it = std::lower_bound(level.begin(), level.end(), s,
                             [](const GradedSimplex& a, const Simplex& b) { return a.simplex < b; });
  if (it == level.end() || it->simplex != s) return std::nullopt;
  return static_cast<std::size_t>(it - level.begin());
}

std::optional<Grade> GradedComplex::grade_of(const Simplex& s) const {
  auto pos = position_of(s);
  if (!pos) return std::nullopt;
  return by_dim_[s.dim()][*pos].grade;
}

GradedComplex GradedComplex::truncated(Grade g) const {
  GradedComplex out = *this;
  for (auto& level : out.by_dim_)
    std::erase_if(level, [g](const GradedSimplex& gs) { return gs.grade > g; });
  return out;
}

GradedComplex GradedComplex::capped(int max_dim) const {
  if (max_dim < 0) throw InputError("max_dim must be non-negative");
  GradedComplex out = *this;
  out.max_dim_ = max_dim;
  out.by_dim_.resize(max_dim + 1);
  return out;
}

Grade GradedComplex::chain_grade(const Chain& c) const {
  Grade g = 0;
  for (const auto& [s, v] : c.terms()) {
    auto sg = grade_of(s);
    if (!sg) throw InputError("simplex " + s.to_string() + " is not in the complex");
    g = std::max(g, *sg);
  }
  return g;
}

namespace {

void check_entries(const std::vector<double>& entries) {
  for (double x : entries)
    if (!std::isfinite(x) || x < 0)
      throw InputError("matrix entries must be finite and non-negative");
}

// Smallest positive gap between distinct values, or a fallback when all
// values coincide.
double min_gap(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] > values[i - 1]) gap = std::min(gap, values[i] - values[i - 1]);
  if (std::isinf(gap)) gap = values.empty() || values.back() == 0 ? 1.0 : values.back();
  return gap;
}

bool has_duplicates(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  return std::adjacent_find(values.begin(), values.end()) != values.end();
}

}  // namespace

DissimilarityMatrix::DissimilarityMatrix(std::size_t n, std::vector<double> entries)
    : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n * n)
    throw InputError("dissimilarity matrix needs " + std::to_string(n * n) + " entries, got " +
                     std::to_string(entries_.size()));
  check_entries(entries_);
  for (std::size_t i = 0; i < n; ++i) {
    if (at(i, i) != 0) throw InputError("dissimilarity matrix must have a zero diagonal");
    for (std::size_t j = i + 1; j < n; ++j)
      if (at(i, j) != at(j, i))
        throw InputError("dissimilarity matrix is not symmetric at (" + std::to_string(i) +
                         "," + std::to_string(j) + ")");
  }
}

DissimilarityMatrix DissimilarityMatrix::scaled(double lambda) const {
  std::vector<double> e = entries_;
  for (double& x : e) x *= lambda;
  return DissimilarityMatrix(n_, std::move(e));
}

bool DissimilarityMatrix::has_ties() const {
  std::vector<double> upper;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) upper.push_back(at(i, j));
  return has_duplicates(std::move(upper));
}

DissimilarityMatrix DissimilarityMatrix::jittered() const {
  std::vector<double> upper;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) upper.push_back(at(i, j));
  double eps = min_gap(upper) / static_cast<double>(upper.size() + 1);
  std::vector<double> e = entries_;
  std::size_t k = 0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) {
      ++k;
      e[i * n_ + j] = e[j * n_ + i] = at(i, j) + static_cast<double>(k) * eps;
    }
  return DissimilarityMatrix(n_, std::move(e));
}

CrossDissimilarityMatrix::CrossDissimilarityMatrix(std::size_t rows, std::size_t cols,
                                                   std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols)
    throw InputError("cross matrix needs " + std::to_string(rows * cols) + " entries, got " +
                     std::to_string(entries_.size()));
  check_entries(entries_);
}

CrossDissimilarityMatrix CrossDissimilarityMatrix::transposed() const {
  std::vector<double> t(entries_.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t[c * rows_ + r] = at(r, c);
  return CrossDissimilarityMatrix(cols_, rows_, std::move(t));
}

bool CrossDissimilarityMatrix::has_ties() const { return has_duplicates(entries_); }

CrossDissimilarityMatrix CrossDissimilarityMatrix::jittered() const {
  double eps = min_gap(entries_) / static_cast<double>(entries_.size() + 1);
  std::vector<double> e = entries_;
  for (std::size_t k = 0; k < e.size(); ++k) e[k] += static_cast<double>(k + 1) * eps;
  return CrossDissimilarityMatrix(rows_, cols_, std::move(e));
}

namespace {

double distance(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw InputError("points have different dimensions");
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

}  // namespace

DissimilarityMatrix euclidean_distances(const PointCloud& points) {
  std::size_t n = points.size();
  std::vector<double> e(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e[i * n + j] = e[j * n + i] = distance(points[i], points[j]);
  return DissimilarityMatrix(n, std::move(e));
}

CrossDissimilarityMatrix euclidean_cross_distances(const PointCloud& landmarks,
                                                   const PointCloud& witnesses) {
  std::vector<double> e;
  e.reserve(landmarks.size() * witnesses.size());
  for (const auto& p : landmarks)
    for (const auto& q : witnesses) e.push_back(distance(p, q));
  return CrossDissimilarityMatrix(landmarks.size(), witnesses.size(), std::move(e));
}

GradedComplex clique_complex(const DissimilarityMatrix& m, int max_dim) {
  if (max_dim < 0) throw InputError("max_dim must be non-negative");
  const std::size_t n = m.size();
  std::vector<double> off;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) off.push_back(m.at(i, j));
  ParameterScale scale = off.empty() ? ParameterScale({0.0}) : ParameterScale::from_unsorted(off);

  std::vector<Grade> edge_grade(n * n, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) edge_grade[i * n + j] = *scale.grade_of(m.at(i, j));

  std::vector<GradedSimplex> out;
  std::vector<Vertex> current;
  std::function<void(std::size_t, Grade)> grow = [&](std::size_t next, Grade g) {
    out.push_back({Simplex(current), g});
    if (static_cast<int>(current.size()) > max_dim) return;
    for (std::size_t v = next; v < n; ++v) {
      Grade h = g;
      for (Vertex u : current) h = std::max(h, edge_grade[u * n + v]);
      current.push_back(static_cast<Vertex>(v));
      grow(v + 1, h);
      current.pop_back();
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    current.assign(1, static_cast<Vertex>(v));
    grow(v + 1, 1);
  }
  return GradedComplex::from_simplices(std::move(scale), static_cast<std::uint32_t>(n), max_dim,
                                       std::move(out));
}

GradedComplex witness_complex(const CrossDissimilarityMatrix& b, int max_dim) {
  if (max_dim < 0) throw InputError("max_dim must be non-negative");
  const std::size_t n = b.rows(), m = b.cols();
  if (m == 0 && n > 0) throw InputError("witness complex needs at least one witness column");
  ParameterScale scale =
      b.entries().empty() ? ParameterScale({0.0}) : ParameterScale::from_unsorted(b.entries());

  std::vector<GradedSimplex> out;
  std::vector<Vertex> current;
  // worst[c] = max over current rows of B[r, c]
  std::function<void(std::size_t, const std::vector<double>&)> grow =
      [&](std::size_t next, const std::vector<double>& worst) {
        double v = *std::min_element(worst.begin(), worst.end());
        out.push_back({Simplex(current), *scale.grade_of(v)});
        if (static_cast<int>(current.size()) > max_dim) return;
        std::vector<double> w(m);
        for (std::size_t r = next; r < n; ++r) {
          for (std::size_t c = 0; c < m; ++c) w[c] = std::max(worst[c], b.at(r, c));
          current.push_back(static_cast<Vertex>(r));
          grow(r + 1, w);
          current.pop_back();
        }
      };
  std::vector<double> row(m);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < m; ++c) row[c] = b.at(r, c);
    current.assign(1, static_cast<Vertex>(r));
    grow(r + 1, row);
  }
  return GradedComplex::from_simplices(std::move(scale), static_cast<std::uint32_t>(n), max_dim,
                                       std::move(out));
}

GradedComplex intersection_filtration(const GradedComplex& z, Grade psi, const GradedComplex& y) {
  if (z.vertex_count() != y.vertex_count())
    throw InputError("complexes live on different vertex sets (" +
                     std::to_string(z.vertex_count()) + " vs " +
                     std::to_string(y.vertex_count()) + " vertices)");
  if (psi < 1 || psi > z.scale().size())
    throw InputError("psi = " + std::to_string(psi) + " outside the scale of Z");
  int max_dim = std::min(z.max_dim(), y.max_dim());
  std::vector<GradedSimplex> out;
  for (int d = 0; d <= max_dim; ++d)
    for (const GradedSimplex& gs : z.simplices(d)) {
      if (gs.grade > psi) continue;
      auto g = y.grade_of(gs.simplex);
      if (!g)
        throw InputError("simplex " + gs.simplex.to_string() +
                         " of Z^psi never enters Y; Y must end in the full simplex");
      out.push_back({gs.simplex, *g});
    }
  return GradedComplex::from_simplices(y.scale(), y.vertex_count(), max_dim, std::move(out));
}

CrossComplex cross_complex_at(const CrossDissimilarityMatrix& b, double eps, int max_dim) {
  if (max_dim < 0) throw InputError("max_dim must be non-negative");
  if (!(eps >= 0)) throw InputError("eps must be non-negative");
  const std::size_t n = b.rows(), m = b.cols();
  const std::size_t max_size = static_cast<std::size_t>(max_dim) + 1;
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(m));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < m; ++q) rel[p][q] = b.at(p, q) <= eps;

  CrossComplex cc;
  cc.landmarks = n;
  cc.witnesses = m;
  cc.eps = eps;
  std::vector<GradedSimplex> out;

  // Landmark part first: sp with its common witnesses, then every subset of
  // those witnesses (including none) completes a simplex.
  std::vector<Vertex> sp, sq;
  std::function<void(const std::vector<std::size_t>&, std::size_t)> grow_q =
      [&](const std::vector<std::size_t>& pool, std::size_t next) {
        for (std::size_t i = next; i < pool.size(); ++i) {
          if (sp.size() + sq.size() >= max_size) return;
          sq.push_back(static_cast<Vertex>(n + pool[i]));
          std::vector<Vertex> all = sp;
          all.insert(all.end(), sq.begin(), sq.end());
          out.push_back({Simplex(std::move(all)), 1});
          grow_q(pool, i + 1);
          sq.pop_back();
        }
      };
  std::function<void(std::size_t, const std::vector<std::size_t>&)> grow_p =
      [&](std::size_t next, const std::vector<std::size_t>& common) {
        out.push_back({Simplex(sp), 1});
        grow_q(common, 0);
        if (sp.size() >= max_size) return;
        for (std::size_t p = next; p < n; ++p) {
          std::vector<std::size_t> c;
          for (std::size_t q : common)
            if (rel[p][q]) c.push_back(q);
          if (c.empty()) continue;
          sp.push_back(static_cast<Vertex>(p));
          grow_p(p + 1, c);
          sp.pop_back();
        }
      };
  std::vector<std::size_t> all_q(m);
  for (std::size_t q = 0; q < m; ++q) all_q[q] = q;
  for (std::size_t p = 0; p < n; ++p) {
    std::vector<std::size_t> c;
    for (std::size_t q : all_q)
      if (rel[p][q]) c.push_back(q);
    if (c.empty()) continue;
    sp.assign(1, static_cast<Vertex>(p));
    grow_p(p + 1, c);
  }
  sp.clear();

  // Pure witness simplices: sets of witnesses sharing a landmark.
  std::function<void(std::size_t, const std::vector<std::size_t>&)> grow_pure_q =
      [&](std::size_t next, const std::vector<std::size_t>& common) {
        out.push_back({Simplex(sq), 1});
        if (sq.size() >= max_size) return;
        for (std::size_t q = next; q < m; ++q) {
          std::vector<std::size_t> c;
          for (std::size_t p : common)
            if (rel[p][q]) c.push_back(p);
          if (c.empty()) continue;
          sq.push_back(static_cast<Vertex>(n + q));
          grow_pure_q(q + 1, c);
          sq.pop_back();
        }
      };
  for (std::size_t q = 0; q < m; ++q) {
    std::vector<std::size_t> c;
    for (std::size_t p = 0; p < n; ++p)
      if (rel[p][q]) c.push_back(p);
    if (c.empty()) continue;
    sq.assign(1, static_cast<Vertex>(n + q));
    grow_pure_q(q + 1, c);
  }

  cc.complex = GradedComplex::from_simplices(ParameterScale({eps}),
                                             static_cast<std::uint32_t>(n + m), max_dim,
                                             std::move(out));
  return cc;
}

}  // namespace barbridge
