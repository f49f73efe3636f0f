#include "barbridge/chain.hpp"

#include <algorithm>

#include "barbridge/error.hpp"

namespace barbridge {

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw InputError("a simplex needs at least one vertex");
  for (std::size_t i = 1; i < vertices_.size(); ++i)
    if (vertices_[i - 1] >= vertices_[i])
      throw InputError("simplex vertices must be strictly increasing: " + to_string());
}

Simplex Simplex::facet(std::size_t i) const {
  std::vector<Vertex> out;
  out.reserve(vertices_.size() - 1);
  for (std::size_t j = 0; j < vertices_.size(); ++j)
    if (j != i) out.push_back(vertices_[j]);
  return Simplex(std::move(out), Unchecked{});
}

bool Simplex::contains(const Simplex& face) const {
  return std::includes(vertices_.begin(), vertices_.end(), face.vertices_.begin(),
                       face.vertices_.end());
}

std::string Simplex::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(vertices_[i]);
  }
  return s + "]";
}

void Chain::add(const Simplex& s, Scalar c, const FieldSpec& field) {
  c = field.reduce(c);
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (!inserted) {
    it->second = field.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

void Chain::axpy(Scalar c, const Chain& other, const FieldSpec& field) {
  if (c == 0) return;
  for (const auto& [s, v] : other.terms_) add(s, field.mul(c, v), field);
}

Chain Chain::scaled(Scalar c, const FieldSpec& field) const {
  Chain out;
  out.axpy(c, *this, field);
  return out;
}

Scalar Chain::coefficient(const Simplex& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? 0 : it->second;
}

std::optional<int> Chain::dim() const {
  if (terms_.empty()) return std::nullopt;
  int d = terms_.begin()->first.dim();
  if (terms_.rbegin()->first.dim() != d) throw InputError("chain mixes simplex dimensions");
  return d;
}

Chain add(const Chain& a, const Chain& b, const FieldSpec& field) {
  Chain out = a;
  out.axpy(1, b, field);
  return out;
}

Chain subtract(const Chain& a, const Chain& b, const FieldSpec& field) {
  Chain out = a;
  out.axpy(field.neg(1), b, field);
  return out;
}

Chain boundary(const Chain& c, const FieldSpec& field) {
  Chain out;
  for (const auto& [s, v] : c.terms()) {
    if (s.dim() == 0) continue;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(s.dim()); ++i)
      out.add(s.facet(i), (i % 2 == 0) ? v : field.neg(v), field);
  }
  return out;
}

Scalar augmentation(const Chain& c, const FieldSpec& field) {
  Scalar sum = 0;
  for (const auto& [s, v] : c.terms())
    if (s.dim() == 0) sum = field.add(sum, v);
  return sum;
}

bool is_cycle(const Chain& c, const FieldSpec& field) {
  auto d = c.dim();
  if (!d) return true;
  if (*d == 0) return augmentation(c, field) == 0;
  return boundary(c, field).empty();
}

Chain relabel(const Chain& c, const std::vector<Vertex>& map, const FieldSpec& field) {
  Chain out;
  for (const auto& [s, v] : c.terms()) {
    std::vector<Vertex> vs;
    vs.reserve(s.vertices().size());
    for (Vertex x : s.vertices()) {
      if (x >= map.size()) throw InputError("vertex " + std::to_string(x) + " has no image");
      vs.push_back(map[x]);
    }
    // Insertion sort, counting transpositions for the sign.
    bool odd = false;
    for (std::size_t i = 1; i < vs.size(); ++i)
      for (std::size_t j = i; j > 0 && vs[j - 1] > vs[j]; --j) {
        std::swap(vs[j - 1], vs[j]);
        odd = !odd;
      }
    out.add(Simplex(std::move(vs)), odd ? field.neg(v) : v, field);
  }
  return out;
}

}  // namespace barbridge
