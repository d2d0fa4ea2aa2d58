#include <doctest.h>

#include <random>

#include "rootfan/linalg.hpp"

using namespace rootfan;

TEST_CASE("rational arithmetic stays reduced") {
  Rational a(6, -4);
  CHECK(a.num() == -3);
  CHECK(a.den() == 2);
  CHECK((a + Rational(3, 2)).is_zero());
  CHECK(Rational(1, 3) * Rational(3, 7) == Rational(1, 7));
  CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(5, 1).is_integer());
}

TEST_CASE("rational parse and print") {
  CHECK(Rational::parse("-7/21") == Rational(-1, 3));
  CHECK(Rational::parse("12") == Rational(12));
  CHECK(Rational(-1, 3).str() == "-1/3");
  CHECK(Rational(4).str() == "4");
  CHECK_THROWS_AS(Rational::parse("1/0"), std::exception);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
}

TEST_CASE("rational overflow is detected") {
  Rational big(INT64_MAX / 2 + 1);
  CHECK_THROWS_AS(big * Rational(2), ArithmeticOverflow);
  CHECK_THROWS_AS(big + big, ArithmeticOverflow);
}

TEST_CASE("primitive and content") {
  CHECK(content(IntVec{4, -6, 10}) == 2);
  CHECK(primitive(IntVec{4, -6, 10}) == IntVec{2, -3, 5});
  CHECK(primitive(IntVec{0, 0}) == IntVec{0, 0});
  CHECK(primitive_direction(RatVec{Rational(1, 2), Rational(-1, 3)}) == IntVec{3, -2});
}

TEST_CASE("inverse times matrix is identity") {
  std::mt19937 gen(7);
  std::uniform_int_distribution<int> d(-4, 4);
  int tested = 0;
  while (tested < 20) {
    RatMat m(4, RatVec(4));
    for (auto& row : m)
      for (auto& x : row) x = d(gen);
    auto inv = inverse(m);
    if (determinant(m).is_zero()) {
      CHECK_FALSE(inv.has_value());
      continue;
    }
    REQUIRE(inv.has_value());
    CHECK(mat_mul(m, *inv) == to_rational(identity_matrix(4)));
    CHECK(determinant(m) * determinant(*inv) == Rational(1));
    ++tested;
  }
}

TEST_CASE("integer determinant and rank") {
  IntMat cartan_a3{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  CHECK(determinant(cartan_a3) == 4);
  std::vector<IntVec> v{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  CHECK(rank_of(v, 3) == 2);
  IntEchelon e(3);
  CHECK(e.add({1, 0, 0}));
  CHECK_FALSE(e.add({-3, 0, 0}));
  CHECK(e.in_span({5, 0, 0}));
  CHECK_FALSE(e.in_span({0, 1, 0}));
}

TEST_CASE("kernel basis is orthogonal to rows") {
  std::vector<IntVec> rows{{1, 1, 1, 1}, {1, -1, 0, 2}};
  auto k = kernel_basis(rows, 4);
  CHECK(k.size() == 2);
  for (const auto& v : k)
    for (const auto& r : rows) CHECK(dot(v, r) == 0);
}

TEST_CASE("solve distinguishes the three outcomes") {
  std::vector<RatVec> rows{{1, 1}, {1, -1}};
  RatVec rhs{3, 1};
  auto r = solve(rows, rhs, 2);
  CHECK(r.status == SolveStatus::Unique);
  CHECK(r.solution == RatVec{2, 1});
  std::vector<RatVec> dep{{1, 1}, {2, 2}};
  CHECK(solve(dep, RatVec{1, 3}, 2).status == SolveStatus::Inconsistent);
  CHECK(solve(dep, RatVec{1, 2}, 2).status == SolveStatus::Underdetermined);
}

TEST_CASE("lattice containment and index") {
  std::vector<RatVec> z2{{1, 0}, {0, 1}};
  std::vector<RatVec> sub{{2, 0}, {1, 3}};
  RatLattice big(z2, 2), small(sub, 2);
  CHECK(big.contains_lattice(small));
  CHECK_FALSE(small.contains_lattice(big));
  CHECK(big.index_of(small) == 6);
  std::vector<RatVec> halves{{Rational(1, 2), Rational(1, 2)}, {1, 0}};
  RatLattice h(halves, 2);
  CHECK(h.contains(RatVec{Rational(1, 2), Rational(-1, 2)}));
  CHECK(h.index_of(big) == 2);
  CHECK(RatLattice(std::vector<RatVec>{{0, 1}, {1, 1}}, 2) == big);
}

TEST_CASE("hermite basis is canonical") {
  std::vector<IntVec> a{{2, 4}, {0, 6}}, b{{2, -2}, {2, 4}};
  CHECK(hermite_basis(a, 2) == hermite_basis(b, 2));
}
