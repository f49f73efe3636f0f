#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "barbridge/dowker.hpp"
#include "barbridge/error.hpp"
#include "oracles.hpp"

using namespace barbridge;

namespace {

CrossDissimilarityMatrix hex() { return CrossDissimilarityMatrix(3, 3, {0, 1, 9, 9, 0, 1, 1, 9, 0}); }

Chain triangle(Vertex a, Vertex b, Vertex c, const FieldSpec& f) {
  Chain z;
  z.add({a, b}, 1, f);
  z.add({b, c}, 1, f);
  z.add({a, c}, f.neg(1), f);
  return z;
}

CrossDissimilarityMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::vector<double> v(rows * cols);
  std::iota(v.begin(), v.end(), 1.0);
  std::shuffle(v.begin(), v.end(), rng);
  return CrossDissimilarityMatrix(rows, cols, std::move(v));
}

std::vector<std::pair<double, double>> values(const PersistenceResult& r) {
  std::vector<std::pair<double, double>> out;
  const auto& s = r.complex().scale();
  for (const Bar& b : r.bars())
    out.push_back({s.value(b.birth), b.death == r.infinity() ? -1.0 : s.value(b.death)});
  std::sort(out.begin(), out.end());
  return out;
}

bool unique_deaths(const PersistenceResult& r) {
  std::set<Grade> d;
  for (const Bar& b : r.bars())
    if (!d.insert(b.death).second) return false;
  return true;
}

}  // namespace

TEST_CASE("barcode check on the hexagon relation") {
  FieldSpec f;
  auto c = dowker_barcode_check(hex(), 1, f);
  CHECK(c.equal);
  using V = std::vector<std::pair<double, double>>;
  CHECK(values(c.landmark_side) == V{{1, 9}});
  CHECK(values(c.witness_side) == V{{1, 9}});
  auto pairs = dowker_bar_correspondence(c.landmark_side, c.witness_side);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0] == std::pair<BarId, BarId>{0, 0});
}

TEST_CASE("barcode check on random and symmetric matrices") {
  std::mt19937_64 rng(71);
  int checked = 0;
  for (int t = 0; t < 120; ++t) {
    const int k = t % 2;
    FieldSpec f(t % 3 == 0 ? 3 : 2);
    auto b = random_matrix(rng, 6, 9);
    auto c = dowker_barcode_check(b, k, f);
    CHECK(c.equal);
    checked += c.equal;
    if (t % 10 == 0) {
      // The landmark side against the dense oracle.
      auto expect = oracle::barcode(c.landmark_side.complex(), k, f.characteristic());
      std::map<std::pair<Grade, Grade>, long> got;
      for (const Bar& bar : c.landmark_side.bars()) ++got[{bar.birth, bar.death}];
      CHECK(got == expect);
    }
  }
  CHECK(checked >= 100);

  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 4 + rng() % 3;
    std::vector<double> v(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) v[i * n + j] = v[j * n + i] = 1 + rng() % 20;
    auto c = dowker_barcode_check(CrossDissimilarityMatrix(n, n, v), 1, FieldSpec());
    CHECK(c.equal);
  }
}

TEST_CASE("bar correspondence errors") {
  FieldSpec f;
  // Two identical empty triangles on disjoint vertex sets.
  std::vector<GradedSimplex> list;
  for (Vertex v = 0; v < 6; ++v) list.push_back({{v}, 1});
  for (Vertex a : {Vertex(0), Vertex(3)}) {
    list.push_back({{a, Vertex(a + 1)}, 1});
    list.push_back({{Vertex(a + 1), Vertex(a + 2)}, 1});
    list.push_back({{a, Vertex(a + 2)}, 1});
  }
  auto twins = compute_persistence(
      GradedComplex::from_simplices(ParameterScale({1.0}), 6, 2, std::move(list)), 1, f);
  REQUIRE(twins.bars().size() == 2);
  CHECK_THROWS_AS(dowker_bar_correspondence(twins, twins), AssumptionViolation);

  auto h = dowker_barcode_check(hex(), 1, f);
  // In degree 0 the three landmarks give two equal bars [0, 1).
  auto zero = dowker_barcode_check(hex(), 0, f);
  CHECK_THROWS_AS(dowker_bar_correspondence(zero.landmark_side, zero.witness_side),
                  AssumptionViolation);
  auto none = dowker_barcode_check(CrossDissimilarityMatrix(2, 2, {0, 1, 1, 0}), 1, f);
  CHECK(dowker_bar_correspondence(none.landmark_side, none.witness_side).empty());
  CHECK_THROWS_AS(dowker_bar_correspondence(h.landmark_side, none.witness_side), InputError);
}

TEST_CASE("dual of the hexagon triangle") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    CAPTURE(p);
    FieldSpec f(p);
    Chain z = triangle(0, 1, 2, f);
    auto r = dowker_dual_cycle(hex(), 1.0, z, 1, f);
    CHECK(r.eps == 1.0);
    CHECK(r.input == z);
    CHECK(verify_dual(r, 3, f));
    // The dual is the triangle on Q, traversed in some orientation.
    REQUIRE(r.dual.size() == 3);
    CHECK(is_cycle(r.dual, f));
    for (const auto& [s, v] : r.dual.terms()) CHECK(s.vertices().back() < 3);
    CHECK(r.certificate.size() == 6);
    for (const auto& [s, v] : r.certificate.terms()) {
      CHECK(s.dim() == 2);
      bool mixed = s.vertices().front() < 3 && s.vertices().back() >= 3;
      CHECK(mixed);
    }
  }
}

TEST_CASE("dual input validation") {
  FieldSpec f;
  Chain edge(Simplex({0, 1}), 1, f);
  CHECK_THROWS_AS(dowker_dual_cycle(hex(), 1.0, edge, 1, f), InputError);
  CHECK_THROWS_AS(dowker_dual_cycle(hex(), 0.5, triangle(0, 1, 2, f), 1, f), InputError);
  CHECK_THROWS_AS(dowker_dual_cycle(hex(), 1.0, triangle(0, 1, 3, f), 1, f), InputError);
  CHECK_THROWS_AS(dowker_dual_cycle(hex(), 1.0, triangle(0, 1, 2, f), 0, f), InputError);
  CHECK(dowker_dual_cycles(hex(), 1.0, {}, 1, f).empty());
}

TEST_CASE("duals of boundaries bound") {
  FieldSpec f;
  auto b = hex();
  auto witness_side = compute_persistence(witness_complex(b.transposed(), 2), 1, f);
  auto landmark_side = compute_persistence(witness_complex(b, 2), 1, f);
  Chain z = triangle(0, 1, 2, f);
  CHECK(landmark_side.is_boundary(z, *landmark_side.complex().scale().grade_of(9.0)));
  auto r = dowker_dual_cycle(b, 9.0, z, 1, f);
  CHECK(verify_dual(r, 3, f));
  CHECK(witness_side.is_boundary(r.dual, *witness_side.complex().scale().grade_of(9.0)));
}

TEST_CASE("duality round trips and class consistency") {
  std::mt19937_64 rng(73);
  int consistent = 0;
  for (int t = 0; t < 60; ++t) {
    const int k = t % 3 == 0 ? 0 : 1;
    FieldSpec f(t % 2 ? 3 : 2);
    auto b = random_matrix(rng, 5 + rng() % 2, 6 + rng() % 3);
    auto check = dowker_barcode_check(b, k, f);
    const auto& lp = check.landmark_side;
    const auto& lq = check.witness_side;
    const auto& scale = lp.complex().scale();
    const bool unique = f.is_gf2() && unique_deaths(lp) && unique_deaths(lq);
    for (const Bar& bar : lp.bars()) {
      // Dualize every bar's representative at a grade where it is alive.
      const Grade at = bar.birth + rng() % (bar.death - bar.birth);
      const double eps = scale.value(at);
      const Chain& z = lp.representative(bar.id);
      auto r = dowker_dual_cycle(b, eps, z, k, f);
      REQUIRE(verify_dual(r, b.rows(), f));

      auto back = dowker_dual_cycle(b.transposed(), eps, r.dual, k, f);
      REQUIRE(verify_dual(back, b.cols(), f));
      CHECK(lp.is_boundary(subtract(back.dual, z, f), at));

      const Grade at_q = lq.complex().scale().floor_grade(eps);
      auto rep_p = lp.bar_representation(z, at);
      auto rep_q = lq.bar_representation(r.dual, at_q);
      REQUIRE_FALSE(rep_q.empty());
      if (!unique) continue;
      auto [bp, dp] = class_birth_death(lp, rep_p);
      auto [bq, dq] = class_birth_death(lq, rep_q);
      CHECK(scale.value(bp) == lq.complex().scale().value(bq));
      const bool inf_p = dp == lp.infinity(), inf_q = dq == lq.infinity();
      CHECK(inf_p == inf_q);
      if (!inf_p && !inf_q) CHECK(scale.value(dp) == lq.complex().scale().value(dq));
      ++consistent;
    }
  }
  CHECK(consistent > 20);
}

TEST_CASE("symmetric relations dualize to homologous mirrors") {
  std::mt19937_64 rng(79);
  FieldSpec f;
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 5;
    std::vector<double> v(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) v[i * n + j] = v[j * n + i] = 1 + rng() % 30;
    CrossDissimilarityMatrix b(n, n, v);
    auto side = compute_persistence(witness_complex(b, 2), 1, f);
    for (const Bar& bar : side.bars()) {
      const double eps = side.complex().scale().value(bar.birth);
      const Chain& z = side.representative(bar.id);
      auto r = dowker_dual_cycle(b, eps, z, 1, f);
      CHECK(verify_dual(r, n, f));
      CHECK(side.is_boundary(subtract(r.dual, z, f), bar.birth));
    }
  }
}
