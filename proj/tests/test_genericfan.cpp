#include <doctest.h>

#include <set>

#include "rootfan/errors.hpp"
#include "rootfan/genericfan.hpp"
#include "rootfan/weyl.hpp"

using namespace rootfan;

namespace {

std::shared_ptr<const RootSystem> sys(const char* spec) {
  return std::make_shared<const RootSystem>(RootSystemSpec::parse(spec));
}

GenericFan fan(const char* spec, std::vector<int> support0) {
  return build_sigma(sys(spec), IndexSet::from_indices(support0));
}

}  // namespace

TEST_CASE("projective line") {
  auto gf = fan("A1", {0});
  CHECK(gf.prim == std::vector<IntVec>{{-1}});
  CHECK(gf.max_cone_count == 2);
  auto r = classify(gf);
  CHECK(r.smooth);
  CHECK(r.gorenstein_fano);
}

TEST_CASE("hexagon fan") {
  auto gf = fan("A2", {0, 1});
  CHECK(gf.max_cone_count == 6);
  CHECK(gf.prim == std::vector<IntVec>{{-1, 0}, {0, -1}});
  CHECK(gf.facet_normals.size() == 2);
  auto r = classify(gf, {.oracle = true});
  CHECK(r.smooth);
  CHECK(r.normal.has_value());
  CHECK(r.normal->phi == RatVec{1, 1});
}

TEST_CASE("baricenter and prim of A3 middle node") {
  auto gf = fan("A3", {1});
  CHECK(baricenter(gf) == IntVec{0, -2, 0});
  CHECK(gf.j_lambda == IndexSet::from_indices({0, 2}));
  CHECK(gf.prim.size() == 4);
  CHECK(gf.max_cone_count == 6);
  auto r = classify(gf);
  CHECK(r.q_gorenstein_fano);
  CHECK_FALSE(r.smooth);
}

TEST_CASE("absent normal") {
  auto gf = fan("A4", {1});
  auto r = classify(gf, {.oracle = true});
  CHECK_FALSE(r.normal.has_value());
  CHECK_FALSE(r.q_gorenstein_fano);
  CHECK_FALSE(r.fano);
}

TEST_CASE("supports must meet every component") {
  CHECK_THROWS_AS(fan("B3xG2", {0}), ArgumentError);
  CHECK_THROWS_AS(fan("A3", {}), ArgumentError);
  CHECK_NOTHROW(fan("B3xG2", {2, 4}));
}

TEST_CASE("products classify componentwise") {
  auto prod = classify(fan("A2xG2", {0, 3}));
  auto a = classify(fan("A2", {0}));
  auto g = classify(fan("G2", {1}));
  CHECK(prod.q_gorenstein_fano == (a.q_gorenstein_fano && g.q_gorenstein_fano));
  CHECK(prod.smooth == (a.smooth && g.smooth));
  auto bad = classify(fan("A4xA1", {1, 4}));
  CHECK_FALSE(bad.q_gorenstein_fano);
}

TEST_CASE("structural laws on all supports of small systems") {
  for (auto spec : {"A3", "A4", "B3", "B4", "C3", "C4", "D4", "G2", "F4", "A2xB2"}) {
    auto rs = sys(spec);
    const std::size_t n = rs->rank();
    for (std::uint32_t bits = 1; bits < (1u << n); ++bits) {
      IndexSet s(bits);
      bool meets = true;
      for (std::size_t c = 0; c < rs->spec().components.size(); ++c)
        meets = meets && !(s & rs->component_nodes(c)).empty();
      if (!meets) continue;
      CAPTURE(spec);
      CAPTURE(s.str());
      auto gf = build_sigma(rs, s);
      CHECK_NOTHROW(verify_structure(gf));
      CHECK(gf.max_cone_count == coset_count(*rs, s));
      CHECK(gf.stabilizer == s.complement(n));

      // prim is the W_lambda orbit of the J_lambda fundamental weights
      std::set<IntVec> expect;
      for (auto j : gf.j_lambda.indices())
        for (auto& v : orbit(*rs, gf.stabilizer, negated(unit_vector(n, j)))) expect.insert(v);
      CHECK(std::vector<IntVec>(expect.begin(), expect.end()) == gf.prim);

      auto plain = classify(gf);
      auto checked = classify(gf, {.oracle = true});
      CHECK(plain.q_gorenstein_fano == checked.q_gorenstein_fano);
      CHECK(plain.gorenstein_fano == checked.gorenstein_fano);
      CHECK(plain.smooth == checked.smooth);
      CHECK(plain.baricenter_support == s);
      CHECK(plain.interior_normal_route == plain.q_gorenstein_fano);
      if (checked.global_route) CHECK(*checked.global_route == checked.q_gorenstein_fano);
      if (plain.smooth) CHECK(plain.prim_count == n);
      if (plain.gorenstein_fano) CHECK(plain.q_gorenstein_fano);
      CHECK(plain.fano == (plain.smooth && plain.gorenstein_fano));
    }
  }
}
