#include <doctest.h>

#include <set>

#include "rootfan/errors.hpp"
#include "rootfan/rootsys.hpp"
#include "rootfan/weyl.hpp"

using namespace rootfan;

namespace {

RootSystem sys(char t, int n) { return RootSystem(RootSystemSpec::single(t, n)); }

}  // namespace

TEST_CASE("spec parsing") {
  auto s = RootSystemSpec::parse("b3 x g2");
  CHECK(s.str() == "B3xG2");
  CHECK(s.rank() == 5);
  CHECK(RootSystemSpec::parse("A2*A1").str() == "A2xA1");
  CHECK_THROWS_AS(RootSystemSpec::parse("D2"), ArgumentError);
  CHECK_THROWS_AS(RootSystemSpec::parse("E9"), ArgumentError);
  CHECK_THROWS_AS(RootSystemSpec::parse("F5"), ArgumentError);
  CHECK_THROWS_AS(RootSystemSpec::parse("B1"), ArgumentError);
  CHECK_THROWS_AS(RootSystemSpec::parse(""), ArgumentError);
  CHECK_THROWS_AS(RootSystemSpec::parse("A"), ArgumentError);
}

TEST_CASE("Cartan matrices, Bourbaki labels") {
  CHECK(cartan_matrix({'B', 2}) == IntMat{{2, -1}, {-2, 2}});
  CHECK(cartan_matrix({'C', 2}) == IntMat{{2, -2}, {-1, 2}});
  CHECK(cartan_matrix({'G', 2}) == IntMat{{2, -3}, {-1, 2}});
  auto d4 = cartan_matrix({'D', 4});
  CHECK(d4[1] == IntVec{-1, 2, -1, -1});
  auto e6 = cartan_matrix({'E', 6});
  CHECK(e6[1][3] == -1);
  CHECK(e6[0][2] == -1);
}

TEST_CASE("Gram matrices") {
  auto a2 = sys('A', 2);
  CHECK(a2.gram() == RatMat{{Rational(2, 3), Rational(1, 3)}, {Rational(1, 3), Rational(2, 3)}});
  auto b2 = sys('B', 2);
  CHECK(b2.gram() == RatMat{{2, 1}, {1, 1}});
  CHECK(b2.squared_length(0) == 4);
  CHECK(b2.squared_length(1) == 2);
  auto g2 = sys('G', 2);
  CHECK(g2.squared_length(1) == 6);
}

TEST_CASE("root counts") {
  struct Row { char t; int n; std::size_t count; };
  for (auto r : {Row{'A', 1, 2}, Row{'A', 4, 20}, Row{'B', 3, 18}, Row{'C', 4, 32}, Row{'D', 4, 24},
                 Row{'D', 6, 60}, Row{'E', 6, 72}, Row{'E', 7, 126}, Row{'E', 8, 240}, Row{'F', 4, 48},
                 Row{'G', 2, 12}}) {
    CAPTURE(r.t);
    CAPTURE(r.n);
    CHECK(sys(r.t, r.n).all_roots().size() == r.count);
    CHECK(expected_root_count({r.t, r.n}) == r.count);
  }
}

TEST_CASE("roots are closed under simple reflections and negation") {
  for (auto spec : {"B4", "G2", "F4", "E6", "A2xC3"}) {
    RootSystem rs(RootSystemSpec::parse(spec));
    const auto& roots = rs.all_roots();
    std::set<IntVec> set(roots.begin(), roots.end());
    for (const auto& r : roots) {
      CHECK(set.count(negated(r)));
      for (std::size_t i = 0; i < rs.rank(); ++i) CHECK(set.count(apply_simple_reflection(rs, i, r)));
    }
  }
}

TEST_CASE("determinant of the Cartan matrix is the fundamental group order") {
  struct Row { char t; int n; std::int64_t order; };
  for (auto r : {Row{'A', 1, 2}, Row{'A', 5, 6}, Row{'B', 3, 2}, Row{'C', 5, 2}, Row{'D', 4, 4}, Row{'D', 5, 4},
                 Row{'E', 6, 3}, Row{'E', 7, 2}, Row{'E', 8, 1}, Row{'F', 4, 1}, Row{'G', 2, 1}}) {
    CAPTURE(r.t);
    CHECK(fundamental_group_order({r.t, r.n}) == r.order);
    CHECK(determinant(cartan_matrix({r.t, r.n})) == r.order);
  }
}

TEST_CASE("products are block diagonal") {
  RootSystem rs(RootSystemSpec::parse("B3xG2"));
  CHECK(rs.rank() == 5);
  CHECK(rs.all_roots().size() == 30);
  CHECK(rs.component_of(3) == 1);
  CHECK(rs.component_offset(1) == 3);
  CHECK(rs.component_nodes(1) == IndexSet::from_indices({3, 4}));
  CHECK(rs.gram()[0][4].is_zero());
}

TEST_CASE("support of a coefficient vector") {
  CHECK(support_of(IntVec{0, -2, 0, -1}) == IndexSet::from_indices({1, 3}));
  CHECK(IndexSet::from_indices({0, 2}).str() == "{1,3}");
}
