#include <catch2/catch_amalgamated.hpp>

#include <thread>
#include <vector>

#include "chow/graded_poly.hpp"

using namespace chow;

namespace {

const std::vector<int> kTwoGens{1, 2};  // c_1, c_2

GradedPolynomial c(int i, const std::vector<int>& profile) {
  return GradedPolynomial::generator(profile, i - 1);
}

}  // namespace

TEST_CASE("polynomial terms stay normalized", "[algebra]") {
  GradedPolynomial p = GradedPolynomial::monomial(kTwoGens, {1, 0}, 2);
  GradedPolynomial q = GradedPolynomial::monomial(kTwoGens, {1, 0}, -2);
  CHECK((p + q).is_zero());
  CHECK((p + q).terms().empty());
  CHECK(GradedPolynomial::constant(kTwoGens, 0).is_zero());
  CHECK((p * Rational(0)).is_zero());
}

TEST_CASE("polynomial construction validates input", "[algebra]") {
  CHECK_THROWS_AS(GradedPolynomial({1, 0, 2}), ArgumentError);
  CHECK_THROWS_AS(GradedPolynomial::monomial(kTwoGens, {1}, 1), ArgumentError);
  CHECK_THROWS_AS(GradedPolynomial::monomial(kTwoGens, {-1, 0}, 1), ArgumentError);
  CHECK_THROWS_AS(GradedPolynomial::generator(kTwoGens, 2), ArgumentError);
}

TEST_CASE("profile mismatch is rejected", "[algebra]") {
  GradedPolynomial a = GradedPolynomial::one(kTwoGens);
  GradedPolynomial b = GradedPolynomial::one({1, 1});
  CHECK_THROWS_AS(a + b, ProfileError);
  CHECK_THROWS_AS(a * b, ProfileError);
}

TEST_CASE("polynomial arithmetic identities", "[algebra]") {
  GradedPolynomial c1 = c(1, kTwoGens), c2 = c(2, kTwoGens);
  GradedPolynomial a = c1 * c1 - c2 * Rational(3);
  GradedPolynomial b = c1 * c2 + GradedPolynomial::one(kTwoGens);
  CHECK(a * b == b * a);
  CHECK((a + b) * a == a * a + b * a);
  CHECK(a - a == GradedPolynomial::zero(kTwoGens));
  CHECK(a * GradedPolynomial::one(kTwoGens) == a);
  CHECK(-(-a) == a);
  CHECK(a.pow(3) == a * a * a);
  CHECK(a.pow(0) == GradedPolynomial::one(kTwoGens));
}

TEST_CASE("graded degree bookkeeping", "[algebra]") {
  GradedPolynomial c1 = c(1, kTwoGens), c2 = c(2, kTwoGens);
  GradedPolynomial h = c1 * c1 + c2 * Rational(5);  // both terms degree 2
  CHECK(h.is_homogeneous());
  CHECK(h.homogeneous_degree() == 2);
  GradedPolynomial mixed = c1 + c2;
  CHECK_FALSE(mixed.is_homogeneous());
  CHECK(mixed.homogeneous_degree() == std::nullopt);
  CHECK(mixed.homogeneous_part(2) == c2);
  CHECK(GradedPolynomial::zero(kTwoGens).is_homogeneous());
  CHECK(GradedPolynomial::zero(kTwoGens).homogeneous_degree() == std::nullopt);
  CHECK(mixed.is_homogeneous_of_degree(1) == false);
  CHECK(GradedPolynomial::zero(kTwoGens).is_homogeneous_of_degree(7));
}

TEST_CASE("weighted monomial enumeration", "[algebra]") {
  // degree 4 over degrees (1,2): e1 + 2 e2 = 4
  auto exps = homogeneous_exponents(kTwoGens, 4);
  std::vector<ExponentVec> want{{0, 2}, {2, 1}, {4, 0}};
  CHECK(exps == want);
  CHECK(homogeneous_exponents(kTwoGens, 0) == std::vector<ExponentVec>{{0, 0}});
  CHECK(homogeneous_exponents(kTwoGens, -1).empty());
  CHECK(homogeneous_exponents({}, 0) == std::vector<ExponentVec>{{}});
  CHECK(homogeneous_exponents({}, 3).empty());
}

TEST_CASE("substitution and evaluation", "[algebra]") {
  GradedPolynomial c1 = c(1, kTwoGens), c2 = c(2, kTwoGens);
  GradedPolynomial f = c1 * c1 - c2;
  // c_1 -> c_1 + c_1, c_2 -> c_2 gives 4c_1^2 - c_2
  auto g = f.substitute({c1 + c1, c2}, kTwoGens);
  CHECK(g == c1 * c1 * Rational(4) - c2);
  CHECK(f.evaluate({Rational(3), Rational(2)}) == Rational(7));
  CHECK_THROWS_AS(f.evaluate({Rational(1)}), ArgumentError);
  CHECK_THROWS_AS(f.substitute({c1}, kTwoGens), ArgumentError);
}

TEST_CASE("integer content extraction", "[algebra]") {
  GradedPolynomial c1 = c(1, kTwoGens), c2 = c(2, kTwoGens);
  GradedPolynomial f = c1 * c1 * make_rational(4, 6) + c2 * make_rational(-2, 9);
  GradedPolynomial prim = f.make_primitive();
  CHECK(prim == c1 * c1 * Rational(3) - c2);
  CHECK(GradedPolynomial::zero(kTwoGens).make_primitive().is_zero());
  // sign of the leading data is preserved
  CHECK((-f).make_primitive() == -(f.make_primitive()));
}

TEST_CASE("series constructor enforces homogeneous coefficients", "[algebra]") {
  GradedPolynomial c1 = c(1, kTwoGens), c2 = c(2, kTwoGens);
  CHECK_THROWS_AS(TruncatedSeries(1, {GradedPolynomial::one(kTwoGens), c2}),
                  ArgumentError);
  CHECK_THROWS_AS(TruncatedSeries(0, {}), ArgumentError);
  TruncatedSeries s(2, {GradedPolynomial::one(kTwoGens), c1, c2});
  CHECK(s.coeff(1) == c1);
  CHECK(s.coeff(9).is_zero());  // beyond the order
}

TEST_CASE("series inverse multiplies back to one", "[algebra]") {
  const int order = 12;
  for (int k = 0; k <= 3; ++k) {
    std::vector<int> profile;
    for (int i = 1; i <= k + 1; ++i) profile.push_back(i);
    std::vector<GradedPolynomial> coeffs;
    coeffs.push_back(GradedPolynomial::one(profile));
    for (int j = 1; j <= order; ++j) {
      if (j <= k + 1)
        coeffs.push_back(GradedPolynomial::generator(profile, j - 1));
      else
        coeffs.push_back(GradedPolynomial::zero(profile));
    }
    TruncatedSeries cs(order, coeffs);
    TruncatedSeries ps = series_inverse(cs, order);
    CHECK(truncated_mul(cs, ps, order) == TruncatedSeries::one(profile, order));
    CHECK(truncated_mul(ps, cs, order) == TruncatedSeries::one(profile, order));
  }
}

TEST_CASE("series with non-unit constant term has no inverse", "[algebra]") {
  GradedPolynomial two = GradedPolynomial::constant(kTwoGens, 2);
  TruncatedSeries s(1, {two, c(1, kTwoGens)});
  CHECK_THROWS_AS(series_inverse(s, 3), NonInvertibleError);
  TruncatedSeries z(1, {GradedPolynomial::zero(kTwoGens), c(1, kTwoGens)});
  CHECK_THROWS_AS(series_inverse(z, 3), NonInvertibleError);
}

TEST_CASE("inverse series coefficients, small cases frozen by hand", "[algebra]") {
  // k = 1: generators c_1, c_2
  PClassTable table(1);
  GradedPolynomial c1 = c(1, kTwoGens), c2 = c(2, kTwoGens);
  CHECK(table.p(0) == GradedPolynomial::one(kTwoGens));
  CHECK(table.p(1) == -c1);
  CHECK(table.p(2) == c1 * c1 - c2);
  CHECK(table.p(3) == -(c1 * c1 * c1) + c1 * c2 * Rational(2));
  CHECK(table.p(4) == c1.pow(4) - c1 * c1 * c2 * Rational(3) + c2 * c2);
  // k = 2: generators c_1, c_2, c_3
  std::vector<int> three{1, 2, 3};
  PClassTable t3(2);
  GradedPolynomial d1 = c(1, three), d2 = c(2, three), d3 = c(3, three);
  CHECK(t3.p(3) == -(d1 * d1 * d1) + d1 * d2 * Rational(2) - d3);
  CHECK(t3.p(0) == GradedPolynomial::one(three));
}

TEST_CASE("p_class convenience agrees with the table", "[algebra]") {
  PClassTable table(2);
  for (int j = 0; j <= 8; ++j) CHECK(p_class(j, 2) == table.p(j));
  CHECK_THROWS_AS(p_class(-1, 2), ArgumentError);
  CHECK_THROWS_AS(p_class(0, -1), ArgumentError);
}

TEST_CASE("each inverse coefficient is homogeneous of its degree", "[algebra]") {
  PClassTable table(3);
  for (int j = 0; j <= 10; ++j) {
    CHECK(table.p(j).is_homogeneous_of_degree(j));
    CHECK_FALSE(table.p(j).is_zero());
  }
}

TEST_CASE("memo table is safe under concurrent reads", "[algebra]") {
  PClassTable table(2);
  GradedPolynomial want = p_class(14, 2);
  std::vector<std::thread> threads;
  std::vector<GradedPolynomial> got(4);
  for (int t = 0; t < 4; ++t)
    threads.emplace_back([&table, &got, t] { got[static_cast<std::size_t>(t)] = table.p(14); });
  for (auto& th : threads) th.join();
  for (const auto& g : got) CHECK(g == want);
}
