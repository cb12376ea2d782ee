#include <doctest.h>

#include "convex_count/closed_form.hpp"
#include "convex_count/production.hpp"

#include <stdexcept>

using namespace convex_count;
using namespace convex_count::closed_form;
using production::GraphClass;
using production::GraphClassSpec;

namespace {
std::vector<BigInt> row(BigInt (*f)(int, int), int n, int j_max) {
  std::vector<BigInt> out;
  for (int j = 1; j <= j_max; ++j) out.push_back(f(n, j));
  return out;
}
}  // namespace

TEST_CASE("k-angulation entries") {
  CHECK(kangulation_entry(3, 3, 3) == 1);
  CHECK(kangulation_entry(3, 3, 1) == 2);
  CHECK(kangulation_entry(3, 3, 2) == 2);
  const std::vector<BigInt> catalan{1, 2, 5, 14, 42, 132};
  for (int r = 1; r <= 6; ++r) {
    BigInt sum = 0;
    for (int j = 1; j <= r; ++j) sum += kangulation_entry(3, r, j);
    CHECK(sum == catalan[static_cast<std::size_t>(r - 1)]);
  }
  CHECK(kangulation_entry(4, 4, 1) == 30);
  CHECK(kangulation_entry(4, 4, 2) == 18);
  CHECK(kangulation_entry(3, 3, 0) == 0);
  CHECK(kangulation_entry(3, 3, 4) == 0);
}

TEST_CASE("geometric entries") {
  CHECK(row(geometric_entry, 4, 3) == std::vector<BigInt>{24, 16, 8});
  CHECK(geometric_entry(2, 1) == 2);
  CHECK(row(geometric_entry, 5, 4) == std::vector<BigInt>{176, 112, 48, 16});
  CHECK(row(geometric_entry, 7, 6) == std::vector<BigInt>{12608, 7744, 3328, 1152, 320, 64});
  for (int n = 3; n <= 14; ++n) CHECK(geometric_entry(n, n - 1) == pow2(static_cast<unsigned>(n - 1)));
  CHECK(geometric_entry(4, 4) == 0);
  CHECK(geometric_entry(4, 0) == 0);
}

TEST_CASE("connected entries") {
  CHECK(row(connected_entry, 5, 4) == std::vector<BigInt>{105, 41, 9, 1});
  CHECK(connected_entry(2, 1) == 1);
  CHECK(row(connected_entry, 4, 3) == std::vector<BigInt>{16, 6, 1});
  CHECK(row(connected_entry, 6, 5) == std::vector<BigInt>{768, 306, 75, 12, 1});
  CHECK(connected_entry(5, 5) == 0);
}

TEST_CASE("partition entries") {
  CHECK(row(partition_entry, 3, 4) == std::vector<BigInt>{2, 2, 0, 1});
  CHECK(row(partition_entry, 4, 5) == std::vector<BigInt>{6, 4, 3, 0, 1});
  CHECK(row(partition_entry, 1, 2) == std::vector<BigInt>{0, 1});
  const std::vector<BigInt> catalan{1, 2, 5, 14, 42, 132};
  for (int n = 1; n <= 6; ++n) {
    BigInt sum = 0;
    for (int j = 1; j <= n + 1; ++j) sum += partition_entry(n, j);
    CHECK(sum == catalan[static_cast<std::size_t>(n - 1)]);
  }
  for (int n = 2; n <= 14; ++n) {
    CHECK(partition_entry(n, n + 1) == 1);
    CHECK(partition_entry(n, n) == 0);
  }
  CHECK(partition_entry(3, 5) == 0);
}

TEST_CASE("closed forms agree with matrix powers up to level 12") {
  for (const auto& spec : {GraphClassSpec::geometric(), GraphClassSpec::connected(), GraphClassSpec::partition(),
                           GraphClassSpec::k_angulation(3), GraphClassSpec::k_angulation(4),
                           GraphClassSpec::k_angulation(6)}) {
    for (const auto& l : production::count_sequence(spec, 12)) {
      const auto cf = closed_form_vector(spec, l.level, static_cast<int>(l.vector.entries.size()));
      CHECK(cf.entries == l.vector.entries);
      CHECK(cf.level == l.level);
    }
  }
}

TEST_CASE("evaluate_entry dispatch") {
  const auto r = evaluate_entry(GraphClass::Connected, 5, 2);
  CHECK(r.value == 41);
  CHECK(r.cls == GraphClass::Connected);
  CHECK(evaluate_entry(GraphClass::KAngulation, 3, 1, 4).value == 7);
  CHECK_THROWS_AS(evaluate_entry(GraphClass::RelationMatrix, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(closed_form_vector(GraphClassSpec::relation({1, 4}), 3, 5), std::invalid_argument);
}

TEST_CASE("lemma identity") {
  CHECK(lemma1_check(1, 1, 2));
  const auto [lhs, rhs] = lemma1_sides(1, 1, 2);
  CHECK(lhs == 1);
  CHECK(rhs == 1);
  for (int m = 0; m <= 5; ++m)
    for (int n = 0; n <= 5; ++n) CHECK(lemma1_check(0, m, n));
  for (int t = 0; t <= 12; ++t)
    for (int m = 0; m <= 12; ++m)
      for (int n = 0; n <= 12; ++n) REQUIRE(lemma1_check(t, m, n));
}
