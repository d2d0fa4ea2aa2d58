// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rootfan/errors.hpp"
#include "rootfan/index_set.hpp"
#include "rootfan/linalg.hpp"

namespace rootfan {

struct Component {
  char type = 'A';
  int rank = 1;

  std::string str() const { return std::string(1, type) + std::to_string(rank); }
  friend bool operator==(const Component&, const Component&) = default;
  friend auto operator<=>(const Component&, const Component&) = default;
};

/// Ordered product of irreducible types, e.g. "B3xG2".
struct RootSystemSpec {
  std::vector<Component> components;

  /// Accepts "A2", "B3xG2", "b3 x g2" and "A2*A1".
  static RootSystemSpec parse(const std::string& text);
  static RootSystemSpec single(char type, int rank);

  std::size_t rank() const;
  std::string str() const;
  /// Throws ArgumentError on an inadmissible (type, rank) pair.
  void validate() const;

  friend bool operator==(const RootSystemSpec&, const RootSystemSpec&) = default;
};

/// Cartan matrix of one irreducible component, Bourbaki labeling.
IntMat cartan_matrix(Component c);

/// Immutable root-system data in fundamental-weight coordinates.
///
/// Weights are vectors of ω-coordinates. The simple root α_j has ω-coordinates
/// equal to column j of the Cartan matrix. The form is normalized per
/// component so that short roots have squared length 2.
class RootSystem {
 public:
  explicit RootSystem(RootSystemSpec spec);

  const RootSystemSpec& spec() const { return spec_; }
  std::size_t rank() const { return n_; }
  std::string name() const { return spec_.str(); }

  const IntMat& cartan() const { return cartan_; }
  /// G_ij = (ω_i, ω_j).
  const RatMat& gram() const { return gram_; }
  /// Inverse of the Gram matrix, i.e. the form on functionals.
  const RatMat& gram_inverse() const { return gram_inv_; }
  /// (α_i, α_i) / 2.
  std::int64_t half_length(std::size_t i) const { return half_len_.at(i); }
  std::int64_t squared_length(std::size_t i) const { return 2 * half_len_.at(i); }

  IntVec simple_root(std::size_t i) const;
  IntVec fundamental_weight(std::size_t i) const { return unit_vector(n_, i); }

  Rational inner_product(std::span<const std::int64_t> x, std::span<const std::int64_t> y) const;
  Rational inner_product(std::span<const Rational> x, std::span<const Rational> y) const;

  /// Sorted list of all roots (ω-coordinates).
  const std::vector<IntVec>& all_roots() const { return roots_; }

  /// Component index containing node i, and the node range of each component.
  std::size_t component_of(std::size_t i) const { return comp_of_.at(i); }
  std::size_t component_offset(std::size_t c) const { return offsets_.at(c); }
  IndexSet component_nodes(std::size_t c) const;

 private:
  RootSystemSpec spec_;
  std::size_t n_ = 0;
  IntMat cartan_;
  std::vector<std::int64_t> half_len_;
  RatMat gram_;
  RatMat gram_inv_;
  std::vector<IntVec> roots_;
  std::vector<std::size_t> comp_of_;
  std::vector<std::size_t> offsets_;
};

/// Number of roots of an irreducible type.
std::size_t expected_root_count(Component c);
/// |Λ_P / Λ_R| for an irreducible type.
std::int64_t fundamental_group_order(Component c);

/// Turns an anti-dominant (or any) coefficient vector into its support.
IndexSet support_of(std::span<const std::int64_t> coeffs);

}  // namespace rootfan
