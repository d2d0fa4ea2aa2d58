// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rootfan/index_set.hpp"
#include "rootfan/polyhedral.hpp"
#include "rootfan/rootsys.hpp"
#include "rootfan/weyl.hpp"

namespace rootfan {

/// The fan of W-translates of the cone sigma attached to an anti-dominant
/// weight with the given support. Only sigma is stored.
struct GenericFan {
  std::shared_ptr<const RootSystem> rs;
  IndexSet support;
  IndexSet stabilizer;                            // generators of W_lambda
  std::vector<std::vector<IntVec>> generator_orbits;  // W_lambda . (-omega_i)
  std::vector<IntVec> facet_normals;              // primitive, sorted
  std::vector<IntVec> prim;                       // sorted
  IndexSet j_lambda;
  std::int64_t max_cone_count = 0;

  std::size_t rank() const { return rs->rank(); }
  Form form() const { return Form(rs->gram()); }
  /// -sum of omega_i over the support.
  IntVec lambda() const;
  std::vector<IntVec> generators() const;
};

GenericFan build_sigma(std::shared_ptr<const RootSystem> rs, IndexSet support);

struct NormalData {
  IntVec direction;  // primitive direction of n_lambda
  RatVec x;          // exact vector with (x, p) = -1 on prim
  RatVec phi;        // phi_j = (x, omega_j)
  bool hyperplane_ok = true;
};

HullKind prim_hull_kind(const GenericFan& gf);
std::optional<NormalData> normal_functional(const GenericFan& gf);

struct ClassifyOptions {
  bool oracle = false;
};

struct ClassificationReport {
  bool q_gorenstein_fano = false;
  bool gorenstein_fano = false;
  bool smooth = false;
  bool fano = false;
  IndexSet j_lambda;
  std::size_t prim_count = 0;
  std::int64_t max_cone_count = 0;
  HullKind hull = HullKind::FullDim;
  std::optional<NormalData> normal;
  IndexSet baricenter_support;
  bool interior_normal_route = false;  // -n_lambda strictly inside sigma
  std::optional<bool> global_route;    // phi > -1 off sigma, when the oracle ran
  std::vector<std::string> diagnostics;
};

/// Oracle checks run only up to this rank.
constexpr std::size_t kOracleMaxRank = 4;

ClassificationReport classify(const GenericFan& gf, const ClassifyOptions& opts = {});

IntVec baricenter(const GenericFan& gf);
bool aff_hull_directions_check(const GenericFan& gf);

/// Checks the structural laws of sigma; throws InvariantViolation naming the
/// failed law.
void verify_structure(const GenericFan& gf);

/// Independent recomputation of the facets and rays of sigma by double
/// description and brute-force extremality; throws InvariantViolation on
/// disagreement. Intended for small ranks.
void oracle_check_cone(const GenericFan& gf);

/// phi(v) > -1 on W.prim \ prim, given the hyperplane exists.
bool global_fano_condition(const GenericFan& gf, const NormalData& nd);

}  // namespace rootfan
