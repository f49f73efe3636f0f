#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "barbridge/field.hpp"

namespace barbridge {

using Vertex = std::uint32_t;

// A nonempty, strictly increasing list of vertex ids.
class Simplex {
 public:
  Simplex() = default;
  // Throws InputError unless the list is nonempty and strictly increasing.
  explicit Simplex(std::vector<Vertex> vertices);
  Simplex(std::initializer_list<Vertex> vertices) : Simplex(std::vector<Vertex>(vertices)) {}

  int dim() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }

  // Facet obtained by dropping vertex i; sign of that term is (-1)^i.
  Simplex facet(std::size_t i) const;
  bool contains(const Simplex& face) const;

  std::string to_string() const;

  // Order by dimension, then lexicographically.
  friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
    if (auto c = a.vertices_.size() <=> b.vertices_.size(); c != 0) return c;
    return a.vertices_ <=> b.vertices_;
  }
  friend bool operator==(const Simplex&, const Simplex&) = default;

 private:
  struct Unchecked {};
  Simplex(std::vector<Vertex> vertices, Unchecked) : vertices_(std::move(vertices)) {}
  std::vector<Vertex> vertices_;
};

// Formal sum of simplices with coefficients in a prime field. Zero
// coefficients are never stored.
class Chain {
 public:
  using Terms = std::map<Simplex, Scalar>;

  Chain() = default;
  Chain(const Simplex& s, Scalar c, const FieldSpec& field) { add(s, c, field); }

  void add(const Simplex& s, Scalar c, const FieldSpec& field);
  // this += c * other
  void axpy(Scalar c, const Chain& other, const FieldSpec& field);
  Chain scaled(Scalar c, const FieldSpec& field) const;

  Scalar coefficient(const Simplex& s) const;
  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  // Common dimension of all terms; nullopt for the zero chain. Throws
  // InputError on mixed dimensions.
  std::optional<int> dim() const;

  friend bool operator==(const Chain&, const Chain&) = default;

 private:
  Terms terms_;
};

Chain add(const Chain& a, const Chain& b, const FieldSpec& field);
Chain subtract(const Chain& a, const Chain& b, const FieldSpec& field);

// Simplicial boundary with alternating signs. Vertices have zero boundary
// here; the augmentation is reported separately.
Chain boundary(const Chain& c, const FieldSpec& field);

// Sum of the coefficients of the vertices in c.
Scalar augmentation(const Chain& c, const FieldSpec& field);

// Cycle in reduced homology: zero boundary and, in degree 0, zero augmentation.
bool is_cycle(const Chain& c, const FieldSpec& field);

// Relabel vertices through map (vertex v -> map[v]); the relabelled vertex
// lists are re-sorted, flipping signs for odd permutations.
Chain relabel(const Chain& c, const std::vector<Vertex>& map, const FieldSpec& field);

}  // namespace barbridge
