#include <doctest.h>

#include "rootfan/assoc.hpp"

using namespace rootfan;

namespace {

std::shared_ptr<const RootSystem> sys(const char* spec) {
  return std::make_shared<const RootSystem>(RootSystemSpec::parse(spec));
}

}  // namespace

TEST_CASE("a root system identifies as itself") {
  for (auto spec : {"A1", "A4", "B2", "B4", "D4", "D5", "E6", "F4", "G2", "A1xB3"}) {
    auto rs = sys(spec);
    auto set = identify_type(rs->all_roots(), Form(rs->gram()));
    CAPTURE(spec);
    CHECK(set.type_string() == std::string(spec));
    CHECK(set.vectors.size() == rs->all_roots().size());
  }
}

TEST_CASE("roots of C3 span the lines of B3") {
  // 2e_i is not primitive in the weight lattice of C3; halving the long roots gives B3
  auto rs = sys("C3");
  auto set = identify_type(rs->all_roots(), Form(rs->gram()));
  CHECK(set.type_string() == "B3");
  CHECK(set.vectors.size() == 18);
}

TEST_CASE("long roots of B3 form D3") {
  auto rs = sys("B3");
  std::vector<IntVec> longs;
  for (const auto& r : rs->all_roots())
    if (rs->inner_product(r, r) == Rational(4)) longs.push_back(r);
  CHECK(longs.size() == 12);
  CHECK(identify_type(longs, Form(rs->gram())).type_string() == "A3");
}

TEST_CASE("non root sets are rejected") {
  auto f = Form::euclidean(2);
  std::vector<IntVec> bad{{1, 0}, {-1, 0}, {1, 1}, {-1, -1}};
  CHECK_THROWS_AS(check_root_set(bad, f), InvariantViolation);
}

TEST_CASE("reflection closure") {
  auto rs = sys("A2");
  Form f(rs->gram());
  CHECK(reflection_closure({rs->simple_root(0)}, f).size() == 2);
  CHECK(reflection_closure({rs->simple_root(0), rs->simple_root(1)}, f).size() == 6);
}

TEST_CASE("diagram automorphisms") {
  struct Row { const char* spec; std::size_t count; };
  for (auto r : {Row{"A1", 1}, Row{"A3", 2}, Row{"B3", 1}, Row{"D4", 6}, Row{"D5", 2}, Row{"E6", 2}, Row{"E7", 1},
                 Row{"F4", 1}, Row{"A1xA1", 2}, Row{"A2xA2", 8}, Row{"A1xA1xA1", 6}}) {
    CAPTURE(r.spec);
    CHECK(diagram_automorphisms(sys(r.spec)->cartan()).size() == r.count);
  }
}

TEST_CASE("weight lattice against own roots") {
  struct Row { const char* spec; LatticeRelation rel; std::int64_t index; };
  for (auto r : {Row{"A3", LatticeRelation::WeightLattice, 4}, Row{"D4", LatticeRelation::WeightLattice, 4},
                 Row{"E6", LatticeRelation::WeightLattice, 3}, Row{"G2", LatticeRelation::Both, 1},
                 Row{"F4", LatticeRelation::Both, 1}}) {
    auto rs = sys(r.spec);
    Form f(rs->gram());
    auto cmp = compare_lattices(identify_type(rs->all_roots(), f), f);
    CAPTURE(r.spec);
    CHECK(cmp.relation == r.rel);
    CHECK(cmp.index_over_root_lattice == r.index);
    CHECK(cmp.index_in_weight_lattice == 1);
  }
}

TEST_CASE("lattice relation strings") {
  CHECK(to_string(LatticeRelation::RootLattice) == "Lambda_R'");
  CHECK(to_string(LatticeRelation::WeightLattice) == "Lambda_P'");
  CHECK(to_string(LatticeRelation::Both) == "Lambda_R'=Lambda_P'");
  CHECK(to_string(LatticeRelation::StrictlyBetween) == "strictly_between");
}

TEST_CASE("minimal pairs of G2") {
  auto rs = sys("G2");
  auto m1 = minimal_pair(build_sigma(rs, IndexSet(1)));
  CHECK(m1.type_string() == "A2");
  CHECK(m1.support == IndexSet::all(2));
  CHECK(m1.lattice.relation == LatticeRelation::RootLattice);
  CHECK(m1.rebuild_ok);
  auto m2 = minimal_pair(build_sigma(rs, IndexSet(2)));
  CHECK(m2.type_string() == "A2");
  CHECK(m2.lattice.relation == LatticeRelation::WeightLattice);
  CHECK(m2.weyl_order == 6);
}

TEST_CASE("type A fans are their own minimal pair") {
  for (auto spec : {"A2", "A3", "A4"}) {
    auto rs = sys(spec);
    for (std::uint32_t bits = 1; bits < (1u << rs->rank()); ++bits) {
      auto mp = minimal_pair(build_sigma(rs, IndexSet(bits)));
      CAPTURE(spec);
      CAPTURE(IndexSet(bits).str());
      CHECK(mp.same_pair);
      CHECK(mp.support == IndexSet(bits));
      CHECK(mp.rebuild_ok);
    }
  }
}

TEST_CASE("regularity of small fans") {
  auto a1 = regularity(build_sigma(sys("A1"), IndexSet(1)));
  CHECK(a1.aut_order == 2);
  CHECK(a1.lattice_regular);
  auto hex = regularity(build_sigma(sys("A2"), IndexSet(3)));
  CHECK(hex.aut_order == 12);
  CHECK(hex.flag_count == 12);
  CHECK(hex.lattice_regular);
  auto a3 = regularity(build_sigma(sys("A3"), IndexSet(1)));
  CHECK(a3.aut_order == a3.flag_count);
  CHECK_THROWS_AS(regularity(build_sigma(sys("A7"), IndexSet(1))), CapacityError);
}

TEST_CASE("hexagon polytope") {
  auto p = polytope_of_fan(build_sigma(sys("A2"), IndexSet(3)));
  CHECK(p.vertices.size() == 6);
  CHECK(p.regular);
}

TEST_CASE("star of a ray") {
  auto gf = build_sigma(sys("A3"), IndexSet(7));
  auto sp = star_projection(gf, IntVec{0, -1, 0});
  CHECK(sp.consistent);
  CHECK(sp.levi.type_string() == "A1xA1");
  CHECK(sp.cone_count == 4);
}

TEST_CASE("non convex chamber unions are rejected") {
  auto rs = sys("A2");
  // two chambers sharing only the origin
  std::vector<Word> words{{}, {0, 1, 0}};
  CHECK_THROWS_AS(analyze_chamber_union(*rs, words), ArgumentError);
}
