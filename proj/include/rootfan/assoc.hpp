// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rootfan/genericfan.hpp"

namespace rootfan {

/// A crystallographic root set inside the ambient weight lattice, with a
/// chosen base and identified type. `base` is ordered component by
/// component, Bourbaki labels within each component, so base[k] is node k of
/// RootSystem(spec).
struct RootSet {
  std::vector<IntVec> vectors;  // primitive, sorted
  std::vector<IntVec> base;
  IntMat cartan;
  RootSystemSpec spec;          // empty components for the empty root set

  std::size_t rank() const { return base.size(); }
  std::string type_string() const;
};

/// Lexicographic positivity: first functional decides, later ones break ties.
using Positivity = std::vector<RatVec>;

/// Base extraction, Cartan matrix and catalog matching. Throws
/// InvariantViolation when the input is not a crystallographic root set.
RootSet identify_type(std::vector<IntVec> roots, const Form& form, const Positivity& positivity = {});

/// Cartan-preserving permutations of the nodes (all diagram automorphisms,
/// including swaps of isomorphic components).
std::vector<std::vector<std::size_t>> diagram_automorphisms(const IntMat& cartan);

/// Closure of lines under negation and the reflections they define.
std::vector<IntVec> reflection_closure(std::vector<IntVec> vectors, const Form& form);

/// Checks the root-set axioms; throws InvariantViolation.
void check_root_set(const std::vector<IntVec>& vectors, const Form& form);

RootSet phi_of_fan(const GenericFan& gf);

enum class LatticeRelation { RootLattice, WeightLattice, Both, StrictlyBetween };
std::string to_string(LatticeRelation r);

struct LatticeComparison {
  LatticeRelation relation = LatticeRelation::Both;
  std::int64_t index_over_root_lattice = 1;    // [Lambda : Lambda_R']
  std::int64_t index_in_weight_lattice = 1;    // [Lambda_P' : Lambda]
  std::vector<RatVec> basis_in_base;           // Z-basis of Lambda in base coordinates
};

/// Fundamental weights of a root set in ambient coordinates.
std::vector<RatVec> fundamental_weights(const RootSet& rs, const Form& form);

/// Compares the ambient lattice (integer vectors) with the root and weight
/// lattices of the root set; throws InvariantViolation unless
/// Lambda_R' <= Lambda <= Lambda_P'.
LatticeComparison compare_lattices(const RootSet& roots, const Form& form);

struct MinimalPair {
  RootSet roots;
  IndexSet support;
  LatticeComparison lattice;
  bool same_pair = false;
  bool rebuild_ok = false;
  std::int64_t weyl_order = 0;
  std::vector<std::string> diagnostics;

  std::string type_string() const { return roots.type_string(); }
};

MinimalPair minimal_pair(const GenericFan& gf);

constexpr std::size_t kRegularityMaxRank = 6;

std::int64_t aut_order(const GenericFan& gf);
std::int64_t flag_count(const GenericFan& gf);
bool is_lattice_regular(const GenericFan& gf);

struct RegularityData {
  std::int64_t aut_order = 0;
  std::int64_t flag_count = 0;
  bool lattice_regular = false;
  std::int64_t diagram_symmetries = 0;  // lattice-preserving ones fixing the support
};
RegularityData regularity(const GenericFan& gf);
RegularityData regularity(const GenericFan& gf, const MinimalPair& mp);

struct PolytopeData {
  std::vector<IntVec> vertices;          // W . Prim, sorted
  bool regular = false;
  std::int64_t dual_scale = 0;           // 0 when no dual is emitted
  std::vector<IntVec> dual_vertices;     // functionals scaled by dual_scale
};
PolytopeData polytope_of_fan(const GenericFan& gf);

struct StarProjection {
  std::size_t cone_count = 0;                 // maximal cones containing the ray
  std::vector<IntVec> projected_normals;      // facet normals of the projected fan, ambient lines
  std::vector<IntVec> levi_roots;             // roots of Phi orthogonal to the ray
  RootSet levi;
  bool consistent = false;
};
/// Star of a ray of sigma projected along the ray. Ranks <= 4.
StarProjection star_projection(const GenericFan& gf, const IntVec& ray);

struct ChamberUnion {
  std::vector<IntVec> rays;        // primitive, sorted
  std::vector<IntVec> normals;     // primitive, sorted
  RootSet roots;
  LatticeComparison lattice;
};
/// A cone given as a union of Weyl chambers w.C; throws ArgumentError when the
/// union is not convex.
ChamberUnion analyze_chamber_union(const RootSystem& rs, const std::vector<Word>& words);

}  // namespace rootfan
