#include <doctest.h>

#include "rootfan/weyl.hpp"

using namespace rootfan;

namespace {

RootSystem sys(char t, int n) { return RootSystem(RootSystemSpec::single(t, n)); }

}  // namespace

TEST_CASE("Weyl group orders") {
  struct Row { char t; int n; std::int64_t order; };
  for (auto r : {Row{'A', 1, 2}, Row{'A', 4, 120}, Row{'B', 3, 48}, Row{'C', 4, 384}, Row{'D', 4, 192},
                 Row{'D', 5, 1920}, Row{'E', 6, 51840}, Row{'E', 7, 2903040}, Row{'E', 8, 696729600},
                 Row{'F', 4, 1152}, Row{'G', 2, 12}}) {
    CAPTURE(r.t);
    CAPTURE(r.n);
    CHECK(weyl_order(sys(r.t, r.n)) == r.order);
  }
}

TEST_CASE("orbits of fundamental weights") {
  CHECK(orbit(sys('A', 3), IndexSet::all(3), unit_vector(3, 0)).size() == 4);
  CHECK(orbit(sys('A', 3), IndexSet::all(3), unit_vector(3, 1)).size() == 6);
  CHECK(orbit(sys('B', 3), IndexSet::all(3), unit_vector(3, 0)).size() == 6);
  CHECK(orbit(sys('B', 3), IndexSet::all(3), unit_vector(3, 2)).size() == 8);
  CHECK(orbit(sys('D', 4), IndexSet::all(4), unit_vector(4, 0)).size() == 8);
  CHECK(orbit(sys('G', 2), IndexSet::all(2), IntVec{1, 1}).size() == 12);
  CHECK(orbit(sys('E', 6), IndexSet::all(6), unit_vector(6, 0)).size() == 27);
  CHECK(orbit(sys('E', 7), IndexSet::all(7), unit_vector(7, 6)).size() == 56);
}

TEST_CASE("orbit size equals coset count") {
  for (auto [t, n] : {std::pair{'A', 4}, {'B', 4}, {'C', 3}, {'D', 4}, {'F', 4}, {'G', 2}}) {
    auto rs = sys(t, n);
    for (std::uint32_t bits = 1; bits < (1u << n); ++bits) {
      IndexSet s(bits);
      IntVec lam(n, 0);
      for (auto i : s.indices()) lam[i] = -1;
      CAPTURE(s.str());
      CHECK(static_cast<std::int64_t>(orbit(rs, IndexSet::all(n), lam).size()) == coset_count(rs, s));
    }
  }
}

TEST_CASE("parabolic orders") {
  auto rs = sys('E', 6);
  CHECK(parabolic_order(rs, IndexSet::all(6).complement(6)) == 1);
  CHECK(parabolic_order(rs, IndexSet::from_indices({0, 2, 3, 4, 5})) == 720);  // A5
  CHECK(parabolic_order(rs, IndexSet::from_indices({1, 2, 3, 4, 5})) == 1920);  // D5
}

TEST_CASE("words reach their points") {
  auto rs = sys('B', 3);
  IntVec v{0, -1, 0};
  for (const auto& p : orbit_with_words(rs, IndexSet::all(3), v)) CHECK(apply_word(rs, p.word, v) == p.point);
}

TEST_CASE("reflections are involutions preserving the form") {
  auto rs = sys('F', 4);
  IntVec x{1, -2, 3, 1}, y{0, 1, -1, 2};
  for (std::size_t i = 0; i < 4; ++i) {
    auto sx = apply_simple_reflection(rs, i, x);
    CHECK(apply_simple_reflection(rs, i, sx) == x);
    CHECK(rs.inner_product(sx, apply_simple_reflection(rs, i, y)) == rs.inner_product(x, y));
  }
  CHECK(apply_simple_reflection(rs, 2, rs.simple_root(2)) == negated(rs.simple_root(2)));
}

TEST_CASE("anti-dominant representative") {
  auto rs = sys('A', 3);
  auto p = to_antidominant(rs, IntVec{1, 0, 0});
  CHECK(p.point == IntVec{0, 0, -1});
  CHECK(apply_word(rs, p.word, IntVec{1, 0, 0}) == p.point);
  auto m = element_matrix(rs, p.word);
  CHECK(mat_vec(m, IntVec{1, 0, 0}) == p.point);
  CHECK(std::abs(determinant(m)) == 1);
}
