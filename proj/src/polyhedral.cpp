// SPDX-License-Identifier: Apache-2.0
#include "rootfan/polyhedral.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rootfan {

namespace {

using Bits = std::vector<std::uint64_t>;

void set_bit(Bits& b, std::size_t i) { b[i / 64] |= (std::uint64_t{1} << (i % 64)); }

Bits intersect(const Bits& a, const Bits& b) {
  Bits r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] & b[k];
  return r;
}

bool subset(const Bits& a, const Bits& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] & ~b[k]) return false;
  return true;
}

std::size_t popcount(const Bits& a) {
  std::size_t c = 0;
  for (auto w : a) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

struct DDRay {
  IntVec v;
  Bits tight;
};

void reject_zero(std::span<const IntVec> vs, const char* what) {
  for (const auto& v : vs)
    if (is_zero(v)) throw DegenerateCone(std::string(what) + ": zero vector in input");
}

std::vector<IntVec> sorted_unique(std::vector<IntVec> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

Form::Form(RatMat gram) : gram_(std::move(gram)) {
  auto inv = inverse(gram_);
  if (!inv) throw ArgumentError("Form: singular Gram matrix");
  inv_ = std::move(*inv);
}

Form Form::euclidean(std::size_t n) { return Form(to_rational(identity_matrix(n))); }

Rational Form::pair(std::span<const std::int64_t> x, std::span<const std::int64_t> y) const {
  auto xr = to_rational(x);
  auto yr = to_rational(y);
  return pair(xr, yr);
}

Rational Form::pair(std::span<const Rational> x, std::span<const Rational> y) const {
  auto gy = mat_vec(gram_, y);
  return dot(x, gy);
}

IntVec Form::functional(std::span<const std::int64_t> h) const {
  auto hr = to_rational(h);
  return primitive_direction(mat_vec(gram_, hr));
}

IntVec Form::normal_of(std::span<const std::int64_t> f) const {
  auto fr = to_rational(f);
  return primitive_direction(mat_vec(inv_, fr));
}

RatVec Form::vector_of(std::span<const Rational> f) const { return mat_vec(inv_, f); }

std::vector<IntVec> extreme_rays(std::span<const IntVec> constraints, std::size_t dim) {
  const std::size_t m = constraints.size();
  const std::size_t words = (m + 63) / 64;

  // Start from a simplicial cone on n independent constraints.
  IntEchelon ech(dim);
  std::vector<std::size_t> basis;
  std::vector<bool> used(m, false);
  for (std::size_t i = 0; i < m && basis.size() < dim; ++i) {
    if (ech.add(constraints[i])) {
      basis.push_back(i);
      used[i] = true;
    }
  }
  if (basis.size() < dim) throw DegenerateCone("constraints do not cut out a pointed cone");

  RatMat b;
  for (auto i : basis) b.push_back(to_rational(constraints[i]));
  auto binv = inverse(b);
  std::vector<DDRay> rays;
  for (std::size_t k = 0; k < dim; ++k) {
    RatVec col(dim);
    for (std::size_t r = 0; r < dim; ++r) col[r] = -(*binv)[r][k];
    DDRay ray{primitive_direction(col), Bits(words, 0)};
    for (std::size_t q = 0; q < dim; ++q)
      if (q != k) set_bit(ray.tight, basis[q]);
    rays.push_back(std::move(ray));
  }

  for (std::size_t ci = 0; ci < m; ++ci) {
    if (used[ci]) continue;
    const auto& c = constraints[ci];
    std::vector<DDRay> pos, neg, zero;
    std::vector<std::int64_t> pos_s, neg_s;
    for (auto& r : rays) {
      std::int64_t s = dot(c, r.v);
      if (s > 0) {
        pos.push_back(std::move(r));
        pos_s.push_back(s);
      } else if (s < 0) {
        neg.push_back(std::move(r));
        neg_s.push_back(s);
      } else {
        set_bit(r.tight, ci);
        zero.push_back(std::move(r));
      }
    }
    if (pos.empty()) {
      rays.clear();
      for (auto& r : neg) rays.push_back(std::move(r));
      for (auto& r : zero) rays.push_back(std::move(r));
      continue;
    }
    std::vector<DDRay> next;
    for (auto& r : neg) next.push_back(r);
    for (auto& r : zero) next.push_back(r);
    // All current rays, for the combinatorial adjacency test.
    std::vector<const Bits*> all;
    for (auto& r : pos) all.push_back(&r.tight);
    for (auto& r : neg) all.push_back(&r.tight);
    for (auto& r : zero) all.push_back(&r.tight);
    for (std::size_t p = 0; p < pos.size(); ++p) {
      for (std::size_t q = 0; q < neg.size(); ++q) {
        Bits common = intersect(pos[p].tight, neg[q].tight);
        if (popcount(common) + 2 < dim) continue;
        bool adjacent = true;
        for (const Bits* t : all) {
          if (t == &pos[p].tight || t == &neg[q].tight) continue;
          if (subset(common, *t)) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        // pos_s * neg - neg_s * pos lies on c.x = 0
        IntVec v(dim);
        for (std::size_t k = 0; k < dim; ++k)
          v[k] = detail::checked_sub(detail::checked_mul(pos_s[p], neg[q].v[k]),
                                     detail::checked_mul(neg_s[q], pos[p].v[k]));
        DDRay nr{primitive(std::move(v)), std::move(common)};
        set_bit(nr.tight, ci);
        next.push_back(std::move(nr));
      }
    }
    rays = std::move(next);
  }

  std::vector<IntVec> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.v));
  return sorted_unique(std::move(out));
}

std::vector<IntVec> dd_facets(std::span<const IntVec> generators, const Form& form) {
  if (generators.empty()) throw DegenerateCone("dd_facets: no generators");
  reject_zero(generators, "dd_facets");
  if (rank_of(generators, form.dim()) < form.dim()) throw DegenerateCone("dd_facets: cone is not full-dimensional");
  std::vector<IntVec> normals;
  for (const auto& f : extreme_rays(generators, form.dim())) normals.push_back(form.normal_of(f));
  return sorted_unique(std::move(normals));
}

std::vector<IntVec> dd_rays(std::span<const IntVec> normals, const Form& form) {
  reject_zero(normals, "dd_rays");
  if (normals.size() < form.dim()) throw DegenerateCone("dd_rays: fewer half-spaces than the dimension");
  std::vector<IntVec> constraints;
  for (const auto& h : normals) constraints.push_back(form.functional(h));
  return extreme_rays(constraints, form.dim());
}

std::vector<IntVec> extreme_among(std::span<const IntVec> generators, std::span<const IntVec> normals,
                                  const Form& form) {
  reject_zero(generators, "extreme_among");
  const std::size_t n = form.dim();
  std::vector<IntVec> fs;
  for (const auto& h : normals) fs.push_back(form.functional(h));
  std::vector<IntVec> out;
  for (const auto& g : generators) {
    IntEchelon ech(n);
    for (const auto& f : fs)
      if (dot(f, g) == 0) ech.add(f);
    if (ech.rank() + 1 == n) out.push_back(primitive(g));
  }
  return sorted_unique(std::move(out));
}

bool in_cone(std::span<const IntVec> generators, std::span<const std::int64_t> v) {
  if (generators.empty()) return is_zero(v);
  const std::size_t n = v.size();
  IntEchelon ech(n);
  std::vector<RatVec> basis;
  for (const auto& g : generators)
    if (ech.add(g)) basis.push_back(to_rational(g));
  const std::size_t k = basis.size();
  if (k == 0) return is_zero(v);
  if (!ech.in_span(IntVec(v.begin(), v.end()))) return false;

  // Coordinates with respect to the chosen basis: solve sum c_b b = x.
  std::vector<RatVec> rows(n, RatVec(k));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t b = 0; b < k; ++b) rows[r][b] = basis[b][r];
  auto coords = [&](std::span<const std::int64_t> x) {
    auto rhs = to_rational(x);
    auto res = solve(rows, rhs, k);
    if (res.status != SolveStatus::Unique) throw InvariantViolation("in_cone: span coordinates not unique");
    return primitive_direction(res.solution);
  };
  std::vector<IntVec> local;
  for (const auto& g : generators) local.push_back(coords(g));
  IntVec target = coords(v);
  if (is_zero(target)) return true;
  // {f : f.g <= 0} is pointed because the local generators span k dims.
  for (const auto& f : extreme_rays(local, k))
    if (dot(f, target) > 0) return false;
  return true;
}

AffineHull affine_hull_normal(std::span<const IntVec> points, const Form& form) {
  const std::size_t n = form.dim();
  if (points.empty()) throw ArgumentError("affine_hull_normal: no points");
  std::vector<IntVec> diffs;
  for (const auto& p : points) diffs.push_back(sub(p, points.front()));
  const std::size_t affine_dim = rank_of(diffs, n);
  AffineHull out;
  if (affine_dim == n) {
    out.kind = HullKind::FullDim;
    return out;
  }
  std::vector<RatVec> rows;
  for (const auto& p : points) rows.push_back(to_rational(p));
  RatVec rhs(points.size(), Rational(-1));
  auto res = solve(rows, rhs, n);
  switch (res.status) {
    case SolveStatus::Inconsistent:
      out.kind = HullKind::ThroughOrigin;
      return out;
    case SolveStatus::Underdetermined:
      out.kind = HullKind::LowerDim;
      return out;
    case SolveStatus::Unique:
      break;
  }
  out.kind = HullKind::Hyperplane;
  out.phi = res.solution;
  out.x = form.vector_of(out.phi);
  return out;
}

bool cone_contains(std::span<const IntVec> normals, const Form& form, std::span<const std::int64_t> v, bool strict) {
  auto vr = to_rational(v);
  return cone_contains(normals, form, vr, strict);
}

bool cone_contains(std::span<const IntVec> normals, const Form& form, std::span<const Rational> v, bool strict) {
  for (const auto& h : normals) {
    auto f = to_rational(form.functional(h));
    int s = dot(f, v).sign();
    if (s > 0 || (strict && s == 0)) return false;
  }
  return true;
}

FaceLatticeSummary face_lattice(std::span<const IntVec> rays, std::span<const IntVec> normals, const Form& form) {
  const std::size_t n = form.dim();
  if (n > kFaceLatticeMaxRank) throw CapacityError("face_lattice: rank above " + std::to_string(kFaceLatticeMaxRank));
  if (rank_of(rays, n) < n) throw DegenerateCone("face_lattice: cone is not full-dimensional");
  const std::size_t r = rays.size();

  // tight[h] = rays on the facet hyperplane of normal h
  std::vector<std::vector<bool>> tight;
  for (const auto& h : normals) {
    auto f = form.functional(h);
    std::vector<bool> t(r);
    for (std::size_t i = 0; i < r; ++i) t[i] = dot(f, rays[i]) == 0;
    tight.push_back(std::move(t));
  }
  auto face_rank = [&](const std::vector<bool>& face) {
    std::vector<IntVec> vs;
    for (std::size_t i = 0; i < r; ++i)
      if (face[i]) vs.push_back(rays[i]);
    return rank_of(vs, n);
  };

  FaceLatticeSummary out;
  out.faces_by_dim.assign(n + 1, 0);
  out.faces_by_dim[0] = 1;
  // flags[F] = number of maximal chains from 0 up to F
  std::map<std::vector<bool>, std::int64_t> level;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<bool> f(r, false);
    f[i] = true;
    level[f] = 1;
  }
  out.faces_by_dim[1] = static_cast<std::int64_t>(level.size());
  if (n == 1) {
    out.flag_count = level.begin()->second;
    return out;
  }
  // Build downward links once: children of each face by dimension.
  std::vector<std::set<std::vector<bool>>> by_dim(n + 1);
  by_dim[n].insert(std::vector<bool>(r, true));
  for (std::size_t d = n; d >= 2; --d) {
    for (const auto& face : by_dim[d]) {
      for (const auto& t : tight) {
        std::vector<bool> g(r);
        bool nonempty = false;
        for (std::size_t i = 0; i < r; ++i) {
          g[i] = face[i] && t[i];
          nonempty = nonempty || g[i];
        }
        if (!nonempty || g == face) continue;
        if (face_rank(g) == d - 1) by_dim[d - 1].insert(std::move(g));
      }
    }
  }
  for (std::size_t d = 2; d <= n; ++d) {
    std::map<std::vector<bool>, std::int64_t> up;
    for (const auto& face : by_dim[d]) {
      std::int64_t total = 0;
      for (const auto& [child, count] : level) {
        bool inside = true;
        for (std::size_t i = 0; i < r && inside; ++i)
          if (child[i] && !face[i]) inside = false;
        if (inside) total = detail::checked_add(total, count);
      }
      up[face] = total;
    }
    out.faces_by_dim[d] = static_cast<std::int64_t>(up.size());
    level = std::move(up);
  }
  out.flag_count = level.begin()->second;
  return out;
}

}  // namespace rootfan
