#include <catch2/catch_amalgamated.hpp>

#include "chow/linalg.hpp"

using namespace chow;

namespace {

RationalVec V(std::vector<int> xs) {
  RationalVec v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

RationalMatrix M(std::vector<std::vector<int>> rows) {
  RationalMatrix m;
  for (auto& r : rows) m.push_back(V(r));
  return m;
}

}  // namespace

TEST_CASE("echelon span tracks rank incrementally", "[linalg]") {
  EchelonSpan span(3);
  CHECK(span.rank() == 0);
  CHECK(span.add(V({1, 2, 3})));
  CHECK(span.add(V({0, 1, 1})));
  CHECK_FALSE(span.add(V({1, 3, 4})));  // sum of the first two
  CHECK(span.rank() == 2);
  CHECK(span.contains(V({2, 5, 7})));
  CHECK_FALSE(span.contains(V({0, 0, 1})));
  CHECK(span.add(V({0, 0, 1})));
  CHECK(span.rank() == 3);
  CHECK_FALSE(span.add(V({5, -7, 2})));  // full space now
}

TEST_CASE("echelon span residual is linear in the input", "[linalg]") {
  EchelonSpan span(3);
  span.add(V({1, 0, 2}));
  RationalVec a = V({3, 1, 4}), b = V({0, 2, -1});
  RationalVec ra = span.reduce(a), rb = span.reduce(b);
  RationalVec sum(3);
  for (int i = 0; i < 3; ++i) sum[i] = a[i] + b[i];
  RationalVec rsum = span.reduce(sum);
  for (int i = 0; i < 3; ++i) CHECK(rsum[i] == ra[i] + rb[i]);
  CHECK(EchelonSpan::is_zero(span.reduce(V({2, 0, 4}))));
}

TEST_CASE("zero dimensional span", "[linalg]") {
  EchelonSpan span(0);
  CHECK_FALSE(span.add(RationalVec{}));
  CHECK(span.rank() == 0);
  CHECK_THROWS_AS(span.add(V({1})), ArgumentError);
}

TEST_CASE("row reduction finds pivots and rank", "[linalg]") {
  RationalMatrix m = M({{1, 2, 1}, {2, 4, 3}, {3, 6, 4}});
  auto pivots = row_reduce(m);
  CHECK(pivots == std::vector<int>{0, 2});
  CHECK(matrix_rank(M({{1, 2, 1}, {2, 4, 3}, {3, 6, 4}})) == 2);
  CHECK(matrix_rank(M({{0, 0}, {0, 0}})) == 0);
  CHECK(matrix_rank(RationalMatrix{}) == 0);
  // reduced form has unit pivots and zeros above them
  CHECK(m[0][0] == 1);
  CHECK(m[0][2] == 0);
  CHECK(m[1][2] == 1);
}

TEST_CASE("reduction is exact where floating point would drift", "[linalg]") {
  RationalMatrix m;
  // Hilbert-style matrix, notoriously ill conditioned but full rank
  for (int i = 0; i < 6; ++i) {
    RationalVec row;
    for (int j = 0; j < 6; ++j) row.push_back(make_rational(1, i + j + 1));
    m.push_back(row);
  }
  CHECK(matrix_rank(m) == 6);
}

TEST_CASE("canonical nullspace has unit at each free column", "[linalg]") {
  // x + 2y + z = 0 with pivot at column 0
  auto basis = nullspace(M({{1, 2, 1}}), 3);
  REQUIRE(basis.size() == 2);
  CHECK(basis[0] == V({-2, 1, 0}));
  CHECK(basis[1] == V({-1, 0, 1}));
}

TEST_CASE("nullspace of an empty matrix is everything", "[linalg]") {
  auto basis = nullspace(RationalMatrix{}, 2);
  REQUIRE(basis.size() == 2);
  CHECK(basis[0] == V({1, 0}));
  CHECK(basis[1] == V({0, 1}));
  CHECK(nullspace(RationalMatrix{}, 0).empty());
}

TEST_CASE("nullspace vectors are killed by the matrix", "[linalg]") {
  RationalMatrix a = M({{1, 2, 3, 4}, {2, 4, 6, 8}, {1, 0, 1, 0}});
  auto basis = nullspace(a, 4);
  CHECK(basis.size() == 2);  // rank 2
  for (const auto& v : basis) {
    for (const auto& row : a) {
      Rational dot(0);
      for (int j = 0; j < 4; ++j) dot += row[static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(j)];
      CHECK(dot == 0);
    }
  }
}

TEST_CASE("unique solve", "[linalg]") {
  auto x = solve_unique(M({{2, 0}, {0, 3}, {2, 3}}), V({4, 6, 10}));
  REQUIRE(x.has_value());
  CHECK(*x == V({2, 2}));
  // inconsistent right-hand side
  CHECK_FALSE(solve_unique(M({{1, 0}, {0, 1}, {1, 1}}), V({1, 1, 3})).has_value());
  // rank-deficient system has no unique answer to report
  CHECK_THROWS_AS(solve_unique(M({{1, 1}, {2, 2}}), V({1, 2})), ConsistencyError);
  CHECK_THROWS_AS(solve_unique(M({{1, 0}}), V({1, 2})), ArgumentError);
}
