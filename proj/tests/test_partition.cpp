#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "chow/partition.hpp"

using namespace chow;

namespace {
Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }
}  // namespace

TEST_CASE("partition validation", "[partition]") {
  CHECK_NOTHROW(P({3, 2, 2, 1}));
  CHECK_NOTHROW(Partition());
  CHECK_THROWS_AS(P({2, 3}), ArgumentError);
  CHECK_THROWS_AS(P({1, 0}), ArgumentError);
  CHECK_THROWS_AS(P({-1}), ArgumentError);
}

TEST_CASE("partition accessors", "[partition]") {
  Partition lam = P({3, 1});
  CHECK(lam.size() == 4);
  CHECK(lam.length() == 2);
  CHECK(lam.part(0) == 3);
  CHECK(lam.part(1) == 1);
  CHECK(lam.part(2) == 0);
  CHECK(lam.part(-1) == 0);
  CHECK(Partition().size() == 0);
  CHECK(Partition().empty());
}

TEST_CASE("box membership", "[partition]") {
  CHECK(P({2, 1}).fits_box(2, 2));
  CHECK_FALSE(P({3, 1}).fits_box(2, 2));
  CHECK_FALSE(P({2, 1, 1}).fits_box(2, 2));
  CHECK(Partition().fits_box(0, 0));
  CHECK(Partition::box(2, 3) == P({3, 3}));
  CHECK(Partition::box(2, 0) == Partition());
}

TEST_CASE("canonical order lists larger first parts first", "[partition]") {
  PartitionCanonicalLess less;
  CHECK(less(P({2}), P({1, 1})));
  CHECK_FALSE(less(P({1, 1}), P({2})));
  CHECK(less(P({1}), P({2})));  // smaller total size first
  CHECK(less(P({2, 1}), P({1, 1, 1})));
  CHECK_FALSE(less(P({2}), P({2})));
}

TEST_CASE("box enumeration in canonical order", "[partition]") {
  auto d2 = partitions_in_box(2, 2, 2);
  REQUIRE(d2.size() == 2);
  CHECK(d2[0] == P({2}));
  CHECK(d2[1] == P({1, 1}));

  auto d3 = partitions_in_box(3, 2, 3);
  REQUIRE(d3.size() == 2);
  CHECK(d3[0] == P({3}));
  CHECK(d3[1] == P({2, 1}));

  CHECK(partitions_in_box(0, 2, 2) == std::vector<Partition>{Partition()});
  CHECK(partitions_in_box(5, 2, 2).empty());
  CHECK(partitions_in_box(-1, 2, 2).empty());
  CHECK(partitions_in_box(0, 0, 0) == std::vector<Partition>{Partition()});
  CHECK(partitions_in_box(1, 0, 0).empty());
}

TEST_CASE("box enumeration is sorted and duplicate free", "[partition]") {
  PartitionCanonicalLess less;
  for (int rows = 0; rows <= 4; ++rows) {
    for (int cols = 0; cols <= 4; ++cols) {
      for (int n = 0; n <= rows * cols; ++n) {
        auto list = partitions_in_box(n, rows, cols);
        CHECK(std::is_sorted(list.begin(), list.end(), less));
        CHECK(std::adjacent_find(list.begin(), list.end()) == list.end());
        for (const auto& lam : list) {
          CHECK(lam.size() == n);
          CHECK(lam.fits_box(rows, cols));
        }
      }
    }
  }
}

TEST_CASE("total count over all degrees is a binomial coefficient", "[partition]") {
  // partitions inside a rows x cols box are counted by C(rows+cols, rows)
  for (int rows = 0; rows <= 5; ++rows) {
    for (int cols = 0; cols <= 5; ++cols) {
      long total = 0;
      for (int n = 0; n <= rows * cols; ++n)
        total += static_cast<long>(partitions_in_box(n, rows, cols).size());
      CHECK(Integer(total) == binomial(rows + cols, rows));
    }
  }
}

TEST_CASE("conjugate transposes the diagram", "[partition]") {
  CHECK(conjugate(P({3, 1})) == P({2, 1, 1}));
  CHECK(conjugate(P({2, 2})) == P({2, 2}));
  CHECK(conjugate(Partition()) == Partition());
  CHECK(conjugate(conjugate(P({4, 2, 1}))) == P({4, 2, 1}));
}

TEST_CASE("box complement", "[partition]") {
  CHECK(box_complement(P({2, 1}), 2, 3) == P({2, 1}));
  CHECK(box_complement(Partition(), 2, 2) == P({2, 2}));
  CHECK(box_complement(P({2, 2}), 2, 2) == Partition());
  CHECK_THROWS_AS(box_complement(P({3}), 2, 2), ArgumentError);
  // complement is an involution and sizes add to the box area
  for (int n = 0; n <= 6; ++n) {
    for (const auto& lam : partitions_in_box(n, 2, 3)) {
      Partition mu = box_complement(lam, 2, 3);
      CHECK(lam.size() + mu.size() == 6);
      CHECK(box_complement(mu, 2, 3) == lam);
    }
  }
}

TEST_CASE("bounded part counting", "[partition]") {
  // partitions of 6 with parts <= 2: (2,2,2), (2,2,1,1), (2,1^4), (1^6)
  CHECK(count_partitions_max_part(6, 2) == 4);
  CHECK(count_partitions_max_part(0, 3) == 1);
  CHECK(count_partitions_max_part(4, 0) == 0);
  CHECK(count_partitions_max_part(5, 1) == 1);
  // agrees with unrestricted partition numbers when the bound is large
  CHECK(count_partitions_max_part(10, 10) == 42);
  CHECK_THROWS_AS(count_partitions_max_part(-1, 2), ArgumentError);
}

TEST_CASE("binomial coefficients", "[partition]") {
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 5) == 1);
  CHECK(binomial(4, 7) == 0);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(60, 30) == Integer("118264581564861424"));
}
