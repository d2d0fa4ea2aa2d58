// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rootfan/errors.hpp"
#include "rootfan/linalg.hpp"

namespace rootfan {

/// Cone input that the kernels cannot handle as given (lower-dimensional,
/// not pointed, zero generators).
class DegenerateCone : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

/// A symmetric positive definite form on the ambient space. Normals are
/// vectors; they act on vectors through the form. Internally every normal is
/// turned into an integer functional so that pairings with lattice vectors
/// are plain dot products.
class Form {
 public:
  explicit Form(RatMat gram);
  static Form euclidean(std::size_t n);

  std::size_t dim() const { return gram_.size(); }
  const RatMat& gram() const { return gram_; }

  Rational pair(std::span<const std::int64_t> x, std::span<const std::int64_t> y) const;
  Rational pair(std::span<const Rational> x, std::span<const Rational> y) const;
  /// Primitive integer direction of G h.
  IntVec functional(std::span<const std::int64_t> h) const;
  /// Primitive integer direction of G^{-1} f.
  IntVec normal_of(std::span<const std::int64_t> f) const;
  /// G^{-1} f exactly.
  RatVec vector_of(std::span<const Rational> f) const;

 private:
  RatMat gram_;
  RatMat inv_;
};

/// Extreme rays of {x : c.x <= 0 for every constraint c}. Throws DegenerateCone
/// when the constraints do not cut out a pointed cone.
std::vector<IntVec> extreme_rays(std::span<const IntVec> constraints, std::size_t dim);

/// Irredundant outward normals of cone(generators), primitive, sorted.
std::vector<IntVec> dd_facets(std::span<const IntVec> generators, const Form& form);
/// Extreme rays of {v : (h, v) <= 0}, primitive, sorted.
std::vector<IntVec> dd_rays(std::span<const IntVec> normals, const Form& form);

/// Generators whose tight normals have rank n-1, primitive, deduplicated, sorted.
std::vector<IntVec> extreme_among(std::span<const IntVec> generators, std::span<const IntVec> normals,
                                  const Form& form);

/// Independent membership test: v in cone(generators), computed in the
/// linear span of the generators.
bool in_cone(std::span<const IntVec> generators, std::span<const std::int64_t> v);

enum class HullKind { FullDim, ThroughOrigin, LowerDim, Hyperplane };

struct AffineHull {
  HullKind kind = HullKind::FullDim;
  RatVec x;    // Hyperplane only: (x, p) = -1 on all points
  RatVec phi;  // Hyperplane only: phi_j = (x, e_j)
};

AffineHull affine_hull_normal(std::span<const IntVec> points, const Form& form);

bool cone_contains(std::span<const IntVec> normals, const Form& form, std::span<const std::int64_t> v,
                   bool strict = false);
bool cone_contains(std::span<const IntVec> normals, const Form& form, std::span<const Rational> v,
                   bool strict = false);

struct FaceLatticeSummary {
  std::vector<std::int64_t> faces_by_dim;  // index = dimension, 0..n
  std::int64_t flag_count = 0;
};

constexpr std::size_t kFaceLatticeMaxRank = 6;

/// Face lattice of a full-dimensional pointed cone given by its rays and
/// facet normals. Throws CapacityError above kFaceLatticeMaxRank.
FaceLatticeSummary face_lattice(std::span<const IntVec> rays, std::span<const IntVec> normals, const Form& form);

}  // namespace rootfan
