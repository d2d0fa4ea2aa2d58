// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "rootfan/rational.hpp"

namespace rootfan {

// ---- integer vectors --------------------------------------------------------

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b);
bool is_zero(std::span<const std::int64_t> v);
std::int64_t content(std::span<const std::int64_t> v);  // gcd of entries, 0 for zero vector
IntVec primitive(IntVec v);                             // divide by content, direction kept
IntVec negated(IntVec v);
IntVec add(std::span<const std::int64_t> a, std::span<const std::int64_t> b);
IntVec sub(std::span<const std::int64_t> a, std::span<const std::int64_t> b);
IntVec scaled(std::span<const std::int64_t> a, std::int64_t k);
IntVec unit_vector(std::size_t n, std::size_t i, std::int64_t value = 1);
std::string to_string(std::span<const std::int64_t> v);

// ---- rational vectors -------------------------------------------------------

RatVec to_rational(std::span<const std::int64_t> v);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);
bool is_zero(std::span<const Rational> v);
std::int64_t common_denominator(std::span<const Rational> v);
/// Positive multiple of v with coprime integer entries (zero stays zero).
IntVec primitive_direction(std::span<const Rational> v);
std::string to_string(std::span<const Rational> v);

RatMat to_rational(const IntMat& m);
RatVec mat_vec(const RatMat& m, std::span<const Rational> v);
IntVec mat_vec(const IntMat& m, std::span<const std::int64_t> v);
RatMat mat_mul(const RatMat& a, const RatMat& b);
IntMat mat_mul(const IntMat& a, const IntMat& b);
RatMat transpose(const RatMat& m);
IntMat transpose(const IntMat& m);
IntMat identity_matrix(std::size_t n);

/// Inverse of a square rational matrix; nullopt when singular.
std::optional<RatMat> inverse(const RatMat& m);
Rational determinant(const RatMat& m);
std::int64_t determinant(const IntMat& m);

// ---- incremental rank -------------------------------------------------------

/// Fraction-free row echelon form over the integers. Feed vectors one at a
/// time; `add` reports whether the rank went up.
class IntEchelon {
 public:
  explicit IntEchelon(std::size_t dim) : dim_(dim) {}

  bool add(IntVec v);
  bool in_span(IntVec v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }

 private:
  IntVec reduce(IntVec v) const;

  std::size_t dim_;
  std::vector<IntVec> rows_;
  std::vector<std::size_t> pivots_;
};

std::size_t rank_of(std::span<const IntVec> vectors, std::size_t dim);
std::size_t rank_of(std::span<const RatVec> vectors, std::size_t dim);

/// Basis of {x : a.x = 0 for all rows a} as primitive integer vectors.
std::vector<IntVec> kernel_basis(std::span<const IntVec> rows, std::size_t dim);

// ---- linear systems ---------------------------------------------------------

enum class SolveStatus { Unique, Inconsistent, Underdetermined };

struct SolveResult {
  SolveStatus status;
  RatVec solution;  // set only when Unique
};

/// Solves rows . x = rhs exactly (any number of rows).
SolveResult solve(std::span<const RatVec> rows, std::span<const Rational> rhs, std::size_t dim);

// ---- lattices ---------------------------------------------------------------

/// Row-style Hermite normal form of the lattice spanned by the given integer
/// generators: upper-triangular basis, positive pivots, entries above each
/// pivot reduced into [0, pivot).
IntMat hermite_basis(std::span<const IntVec> generators, std::size_t dim);

/// Lattice spanned by rational vectors, stored as (integer HNF basis) / denominator.
class RatLattice {
 public:
  RatLattice() = default;
  RatLattice(std::span<const RatVec> generators, std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return basis_.size(); }
  bool contains(std::span<const Rational> v) const;
  bool contains_lattice(const RatLattice& other) const;
  bool operator==(const RatLattice& other) const;
  /// Index [this : sub]; requires sub to be a full-rank sublattice.
  std::int64_t index_of(const RatLattice& sub) const;
  /// Basis rows as rational vectors (in HNF).
  std::vector<RatVec> basis() const;

 private:
  std::size_t dim_ = 0;
  std::int64_t denom_ = 1;
  IntMat basis_;
};

}  // namespace rootfan
