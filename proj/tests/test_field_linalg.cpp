#include <doctest.h>

#include <random>

#include "barbridge/error.hpp"
#include "barbridge/field.hpp"
#include "barbridge/sparse.hpp"
#include "oracles.hpp"

using namespace barbridge;

namespace {

SparseVector vec(std::vector<Entry> e, const FieldSpec& f) {
  return SparseVector::from_entries(std::move(e), f);
}

SparseMatrix random_matrix(std::mt19937_64& rng, Index rows, Index cols, double density,
                           const FieldSpec& f) {
  std::uniform_real_distribution<double> coin(0, 1);
  std::vector<SparseVector> c;
  for (Index j = 0; j < cols; ++j) {
    std::vector<Entry> e;
    for (Index i = 0; i < rows; ++i)
      if (coin(rng) < density)
        e.push_back({i, static_cast<Scalar>(1 + rng() % (f.characteristic() - 1))});
    c.push_back(vec(std::move(e), f));
  }
  return SparseMatrix(rows, std::move(c));
}

void check_reduction(const SparseMatrix& d, const Reduction& red, const FieldSpec& f) {
  CHECK(red.r == d.multiply(red.v, f));
  std::vector<bool> seen(d.rows(), false);
  for (Index j = 0; j < red.r.cols(); ++j) {
    auto low = red.r.column(j).low();
    if (!low) continue;
    CHECK_FALSE(seen[*low]);
    seen[*low] = true;
    CHECK(red.pivot_column[*low] == j);
  }
  for (Index j = 0; j < red.v.cols(); ++j) {
    CHECK(red.v.at(j, j) == 1);
    CHECK(red.v.column(j).low() == j);
  }
}

}  // namespace

TEST_CASE("fields") {
  CHECK(is_prime(2));
  CHECK(is_prime(65521));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK_THROWS_AS(FieldSpec(4), InputError);
  CHECK_THROWS_AS(FieldSpec(65537), InputError);
  FieldSpec f(7);
  for (Scalar a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK(f.reduce(-1) == 6);
  CHECK(f.sub(2, 5) == 4);
  CHECK(f.neg(0) == 0);
}

TEST_CASE("sparse vectors merge and drop zeros") {
  FieldSpec f(3);
  auto v = vec({{4, 1}, {1, 2}, {4, 2}, {2, 0}}, f);
  CHECK(v.nnz() == 1);
  CHECK(v.at(1) == 2);
  CHECK(v.low() == 1);
  v.axpy(1, vec({{1, 1}, {7, 1}}, f), f);
  CHECK(v == vec({{7, 1}}, f));
  CHECK_THROWS_AS(SparseMatrix(3, {vec({{3, 1}}, f)}), InputError);
}

TEST_CASE("reduction of a zero matrix") {
  FieldSpec f;
  SparseMatrix d(3, 4);
  auto red = reduce_with_basis(d, f);
  CHECK(red.r == d);
  CHECK(red.v == SparseMatrix::identity(4));
}

TEST_CASE("reduction of a single edge boundary") {
  FieldSpec f;
  SparseMatrix d(2, {vec({{0, 1}, {1, 1}}, f)});
  auto red = reduce_with_basis(d, f);
  CHECK(red.r == d);
  CHECK(red.v == SparseMatrix::identity(1));
}

TEST_CASE("filled triangle: one edge column cancels into the cycle") {
  FieldSpec f;
  // Rows: augmentation, a, b, c, ab, ac, bc. Columns: a, b, c, ab, ac, bc, abc.
  std::vector<SparseVector> cols = {
      vec({{0, 1}}, f),         vec({{0, 1}}, f),         vec({{0, 1}}, f),
      vec({{1, 1}, {2, 1}}, f), vec({{1, 1}, {3, 1}}, f), vec({{2, 1}, {3, 1}}, f),
      vec({{4, 1}, {5, 1}, {6, 1}}, f)};
  SparseMatrix d(7, cols);
  auto red = reduce_with_basis(d, f);
  check_reduction(d, red, f);
  CHECK(red.r.column(5).empty());
  CHECK(red.v.column(5) == vec({{3, 1}, {4, 1}, {5, 1}}, f));
  int zero_edges = 0;
  for (Index j = 3; j < 6; ++j) zero_edges += red.r.column(j).empty();
  CHECK(zero_edges == 1);
}

TEST_CASE("reduction invariants on random matrices") {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 3u, 5u, 7919u}) {
    FieldSpec f(p);
    for (int t = 0; t < 40; ++t) {
      auto d = random_matrix(rng, 1 + rng() % 12, 1 + rng() % 14, 0.3, f);
      auto red = reduce_with_basis(d, f);
      check_reduction(d, red, f);
      auto generic = reduce_generic(d, f, true);
      CHECK(generic.r == red.r);
      CHECK(generic.v == red.v);
      auto light = reduce(d, f, false);
      CHECK(light.r == red.r);
      CHECK(light.v.cols() == 0);
    }
  }
}

TEST_CASE("solve examples") {
  FieldSpec f;
  auto s = solve(SparseMatrix::identity(2), vec({{0, 1}}, f), f);
  REQUIRE(s);
  CHECK(s->particular == vec({{0, 1}}, f));
  CHECK(s->kernel_basis.empty());

  SparseMatrix row(1, {vec({{0, 1}}, f), vec({{0, 1}}, f)});
  s = solve(row, vec({{0, 1}}, f), f);
  REQUIRE(s);
  CHECK(s->particular == vec({{0, 1}}, f));
  REQUIRE(s->kernel_basis.size() == 1);
  CHECK(s->kernel_basis[0] == vec({{0, 1}, {1, 1}}, f));

  CHECK_FALSE(solve(SparseMatrix(1, 1), vec({{0, 1}}, f), f));
  CHECK_THROWS_AS(solve(SparseMatrix(1, 1), vec({{3, 1}}, f), f), InputError);
}

TEST_CASE("solve: every member satisfies the system, round trip, oracle agreement") {
  std::mt19937_64 rng(5);
  for (std::uint32_t p : {2u, 3u}) {
    FieldSpec f(p);
    for (int t = 0; t < 60; ++t) {
      Index rows = 1 + rng() % 8, cols = 1 + rng() % 9;
      auto a = random_matrix(rng, rows, cols, 0.35, f);
      std::vector<Entry> xe;
      for (Index j = 0; j < cols; ++j) xe.push_back({j, static_cast<Scalar>(rng() % p)});
      auto x = vec(xe, f);
      auto b = a.multiply(x, f);
      auto s = solve(a, b, f);
      REQUIRE(s);
      CHECK(s->kernel_basis.size() <= 10);

      std::vector<oracle::Vec> dense_cols;
      for (Index j = 0; j < cols; ++j) {
        oracle::Vec c(rows, 0);
        for (const Entry& e : a.column(j).entries()) c[e.index] = e.value;
        dense_cols.push_back(c);
      }
      CHECK(s->kernel_basis.size() == oracle::nullspace(dense_cols, rows, p).size());

      oracle::Vec base(cols, 0);
      for (const Entry& e : s->particular.entries()) base[e.index] = e.value;
      std::vector<oracle::Vec> dirs;
      for (const auto& k : s->kernel_basis) {
        oracle::Vec d(cols, 0);
        for (const Entry& e : k.entries()) d[e.index] = e.value;
        dirs.push_back(d);
      }
      CHECK(oracle::rank_of(dirs, cols, p) == dirs.size());
      oracle::Vec want(cols, 0);
      for (const Entry& e : x.entries()) want[e.index] = e.value;
      bool found = false;
      auto members = oracle::enumerate_affine(base, dirs, p, [&](const oracle::Vec& v) {
        std::vector<Entry> ve;
        for (Index j = 0; j < cols; ++j) ve.push_back({j, v[j]});
        CHECK(a.multiply(vec(ve, f), f) == b);
        found = found || v == want;
        return v;
      });
      CHECK(found);

      // Random right-hand sides: consistency agrees with the dense oracle.
      std::vector<Entry> be;
      for (Index i = 0; i < rows; ++i) be.push_back({i, static_cast<Scalar>(rng() % p)});
      auto rb = vec(be, f);
      oracle::Vec db(rows, 0);
      for (const Entry& e : rb.entries()) db[e.index] = e.value;
      CHECK(solve(a, rb, f).has_value() == oracle::solve(dense_cols, db, p).has_value());
    }
  }
}
