// SPDX-License-Identifier: Apache-2.0
#include "rootfan/genericfan.hpp"

#include <algorithm>
#include <set>

namespace rootfan {

namespace {

std::vector<IntVec> functionals(const Form& form, std::span<const IntVec> normals) {
  std::vector<IntVec> fs;
  fs.reserve(normals.size());
  for (const auto& h : normals) fs.push_back(form.functional(h));
  return fs;
}

// rank of the functionals vanishing at g, stopping once it reaches `target`
std::size_t tight_rank(std::span<const IntVec> fs, std::span<const std::int64_t> g, std::size_t dim,
                       std::size_t target) {
  IntEchelon ech(dim);
  for (const auto& f : fs) {
    if (dot(f, g) == 0) ech.add(f);
    if (ech.rank() >= target) break;
  }
  return ech.rank();
}

bool is_facet_normal(const IntVec& f, std::span<const IntVec> gens, std::size_t n) {
  IntEchelon ech(n);
  for (const auto& g : gens) {
    std::int64_t s = dot(f, g);
    if (s > 0) return false;
    if (s == 0 && ech.rank() + 1 < n) ech.add(g);
  }
  return ech.rank() + 1 == n;
}

std::vector<IntVec> sorted_unique(std::vector<IntVec> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool is_a_odd_middle(const RootSystem& rs, IndexSet support) {
  const auto& spec = rs.spec();
  if (spec.components.size() != 1 || spec.components[0].type != 'A') return false;
  int n = spec.components[0].rank;
  if (n % 2 == 0 || n < 3) return false;
  return support == IndexSet(1u << ((n + 1) / 2 - 1));
}

}  // namespace

IntVec GenericFan::lambda() const {
  IntVec l(rank(), 0);
  for (auto i : support.indices()) l[i] = -1;
  return l;
}

std::vector<IntVec> GenericFan::generators() const {
  std::vector<IntVec> all;
  for (const auto& o : generator_orbits) all.insert(all.end(), o.begin(), o.end());
  return sorted_unique(std::move(all));
}

GenericFan build_sigma(std::shared_ptr<const RootSystem> rs, IndexSet support) {
  if (!rs) throw ArgumentError("build_sigma: null root system");
  const std::size_t n = rs->rank();
  if (support.empty()) throw ArgumentError("support must be non-empty");
  if (!support.subset_of(IndexSet::all(n))) throw ArgumentError("support index out of range");
  for (std::size_t c = 0; c < rs->spec().components.size(); ++c)
    if ((support & rs->component_nodes(c)).empty())
      throw ArgumentError("support " + support.str() + " misses component " + rs->spec().components[c].str() +
                          "; classify each component separately");

  GenericFan gf;
  gf.rs = rs;
  gf.support = support;
  gf.stabilizer = support.complement(n);
  for (std::size_t i = 0; i < n; ++i) gf.generator_orbits.push_back(orbit(*rs, gf.stabilizer, negated(rs->fundamental_weight(i))));

  const Form form = gf.form();
  const auto gens = gf.generators();

  // sigma is W_lambda-stable, so a candidate orbit is accepted or rejected as
  // a whole; test the simple root representative.
  std::vector<IntVec> normals;
  for (auto i : support.indices()) {
    IntVec a = rs->simple_root(i);
    if (!is_facet_normal(form.functional(a), gens, n)) continue;
    for (auto& h : orbit(*rs, gf.stabilizer, a)) normals.push_back(primitive(std::move(h)));
  }
  gf.facet_normals = sorted_unique(std::move(normals));

  // Extremality is W_lambda-equivariant: test -omega_i only.
  const auto fs = functionals(form, gf.facet_normals);
  std::vector<IntVec> prim;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec g = negated(rs->fundamental_weight(i));
    if (tight_rank(fs, g, n, n - 1) == n - 1) {
      gf.j_lambda.insert(i);
      prim.insert(prim.end(), gf.generator_orbits[i].begin(), gf.generator_orbits[i].end());
    }
  }
  gf.prim = sorted_unique(std::move(prim));
  gf.max_cone_count = coset_count(*rs, support);
  return gf;
}

HullKind prim_hull_kind(const GenericFan& gf) { return affine_hull_normal(gf.prim, gf.form()).kind; }

std::optional<NormalData> normal_functional(const GenericFan& gf) {
  auto hull = affine_hull_normal(gf.prim, gf.form());
  if (hull.kind != HullKind::Hyperplane) return std::nullopt;
  NormalData nd;
  nd.direction = primitive_direction(hull.x);
  nd.x = std::move(hull.x);
  nd.phi = std::move(hull.phi);
  return nd;
}

IntVec baricenter(const GenericFan& gf) {
  IntVec b(gf.rank(), 0);
  for (const auto& p : gf.prim) b = add(b, p);
  return b;
}

bool aff_hull_directions_check(const GenericFan& gf) {
  const std::size_t n = gf.rank();
  if (gf.j_lambda.empty() || gf.prim.empty()) return false;
  const std::size_t k = gf.j_lambda.indices().front();
  const IntVec base = negated(gf.rs->fundamental_weight(k));
  std::vector<IntVec> lhs;
  for (const auto& p : gf.prim) lhs.push_back(sub(p, base));
  std::vector<IntVec> rhs;
  for (auto i : gf.stabilizer.indices()) rhs.push_back(gf.rs->simple_root(i));
  for (auto i : gf.j_lambda.indices()) rhs.push_back(sub(gf.rs->fundamental_weight(i), gf.rs->fundamental_weight(k)));
  std::vector<IntVec> both = lhs;
  both.insert(both.end(), rhs.begin(), rhs.end());
  const std::size_t r = rank_of(both, n);
  return rank_of(lhs, n) == r && rank_of(rhs, n) == r;
}

bool global_fano_condition(const GenericFan& gf, const NormalData& nd) {
  const RootSystem& rs = *gf.rs;
  const std::set<IntVec> own(gf.prim.begin(), gf.prim.end());
  const IndexSet all = IndexSet::all(rs.rank());
  for (auto j : gf.j_lambda.indices()) {
    for (const auto& v : orbit(rs, all, negated(rs.fundamental_weight(j)))) {
      if (own.count(v)) continue;
      auto vr = to_rational(v);
      if (dot(nd.phi, vr) <= Rational(-1)) return false;
    }
  }
  return true;
}

void verify_structure(const GenericFan& gf) {
  const RootSystem& rs = *gf.rs;
  const std::size_t n = rs.rank();
  const Form form = gf.form();
  auto fail = [&](const std::string& law) {
    throw InvariantViolation(law + " fails for (" + rs.name() + ", " + gf.support.str() + ")");
  };

  // cone count: |W.lambda| = |W| / |W_lambda|, by orbit when small enough
  if (gf.max_cone_count != coset_count(rs, gf.support)) fail("cone count |W|/|W_lambda|");
  if (gf.max_cone_count <= 200000 &&
      static_cast<std::int64_t>(orbit(rs, IndexSet::all(n), gf.lambda()).size()) != gf.max_cone_count)
    fail("orbit-stabilizer cone count");

  // facet normals lie on lines W_lambda . alpha_i with i in the support
  std::set<IntVec> candidates;
  for (auto i : gf.support.indices())
    for (auto& h : orbit(rs, gf.stabilizer, rs.simple_root(i))) candidates.insert(primitive(std::move(h)));
  const auto gens = gf.generators();
  std::vector<IntVec> filtered;
  for (const auto& h : candidates)
    if (is_facet_normal(form.functional(h), gens, n)) filtered.push_back(h);
  if (filtered != gf.facet_normals) fail("facet normals = filtered W_lambda-translates of simple roots");
  for (const auto& h : gf.facet_normals)
    if (!candidates.count(h)) fail("facet hyperplane law");

  // Prim = union of W_lambda-orbits of -omega_j over J_lambda, checked on every generator
  if (extreme_among(gens, gf.facet_normals, form) != gf.prim) fail("Prim = W_lambda . J_lambda");
  for (auto j : gf.stabilizer.indices()) {
    std::vector<IntVec> moved;
    for (const auto& p : gf.prim) moved.push_back(apply_simple_reflection(rs, j, p));
    if (sorted_unique(std::move(moved)) != gf.prim) fail("W_lambda-stability of Prim");
  }

  if (support_of(baricenter(gf)) != gf.support) fail("baricenter support = support of lambda");
  if (!cone_contains(gf.facet_normals, form, gf.lambda(), true)) fail("lambda interior to sigma");
  if (!cone_contains(gf.facet_normals, form, baricenter(gf), true)) fail("baricenter interior to sigma");
  for (std::size_t i = 0; i < n; ++i) {
    bool inside = cone_contains(gf.facet_normals, form, negated(rs.fundamental_weight(i)), true);
    if (inside != (gf.support == IndexSet(1u << i))) fail("-omega_i interior iff support = {i}");
  }
  if (!aff_hull_directions_check(gf)) fail("affine hull of Prim");
}

void oracle_check_cone(const GenericFan& gf) {
  const std::size_t n = gf.rank();
  const Form form = gf.form();
  auto fail = [&](const std::string& what) {
    throw InvariantViolation("oracle mismatch (" + what + ") for (" + gf.rs->name() + ", " + gf.support.str() + ")");
  };
  const auto gens = gf.generators();
  if (dd_facets(gens, form) != gf.facet_normals) fail("double description facets");
  if (dd_rays(gf.facet_normals, form) != gf.prim) fail("double description rays");

  std::vector<IntVec> brute;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    std::vector<IntVec> others;
    for (std::size_t m = 0; m < gens.size(); ++m)
      if (m != k) others.push_back(gens[m]);
    if (!in_cone(others, gens[k])) brute.push_back(gens[k]);
  }
  if (brute != gf.prim) fail("brute-force extremality");
  (void)n;
}

ClassificationReport classify(const GenericFan& gf, const ClassifyOptions& opts) {
  const RootSystem& rs = *gf.rs;
  const std::size_t n = rs.rank();
  const Form form = gf.form();
  ClassificationReport r;
  r.j_lambda = gf.j_lambda;
  r.prim_count = gf.prim.size();
  r.max_cone_count = gf.max_cone_count;

  auto hull = affine_hull_normal(gf.prim, form);
  r.hull = hull.kind;
  if (hull.kind == HullKind::Hyperplane) {
    NormalData nd;
    nd.direction = primitive_direction(hull.x);
    nd.x = hull.x;
    nd.phi = hull.phi;
    r.normal = std::move(nd);
  }

  if (r.normal) {
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
      auto c = r.normal->direction[i];
      ok = ok && (gf.support.contains(i) ? c > 0 : c == 0);
    }
    r.q_gorenstein_fano = ok;
  }
  if (r.q_gorenstein_fano)
    r.gorenstein_fano = std::all_of(r.normal->phi.begin(), r.normal->phi.end(), [](const Rational& q) { return q.is_integer(); });
  if (gf.prim.size() == n) {
    auto d = determinant(IntMat(gf.prim.begin(), gf.prim.end()));
    r.smooth = d == 1 || d == -1;
  }
  r.fano = r.smooth && r.gorenstein_fano;
  r.baricenter_support = support_of(baricenter(gf));

  if (r.normal) {
    RatVec minus_x;
    for (const auto& q : r.normal->x) minus_x.push_back(-q);
    r.interior_normal_route = cone_contains(gf.facet_normals, form, minus_x, true);
  }
  if (r.interior_normal_route != r.q_gorenstein_fano)
    throw InvariantViolation("support-positivity and interior-normal criteria disagree for (" + rs.name() + ", " +
                             gf.support.str() + ")");

  if (opts.oracle) {
    if (n <= kOracleMaxRank) {
      oracle_check_cone(gf);
      r.global_route = r.normal && global_fano_condition(gf, *r.normal);
      if (*r.global_route != r.q_gorenstein_fano)
        throw InvariantViolation("global support-function criterion disagrees for (" + rs.name() + ", " +
                                 gf.support.str() + ")");
      r.diagnostics.push_back("oracle: double description, brute-force extremality and global criterion agree");
    } else {
      r.diagnostics.push_back("oracle: skipped above rank " + std::to_string(kOracleMaxRank));
    }
  }

  if (rs.spec().components.size() > 1) {
    bool q = true, g = true, s = true;
    for (std::size_t c = 0; c < rs.spec().components.size(); ++c) {
      auto sub = std::make_shared<const RootSystem>(RootSystemSpec{{rs.spec().components[c]}});
      IndexSet local((gf.support & rs.component_nodes(c)).bits() >> rs.component_offset(c));
      auto part = classify(build_sigma(sub, local), {});
      q = q && part.q_gorenstein_fano;
      g = g && part.gorenstein_fano;
      s = s && part.smooth;
    }
    if (q != r.q_gorenstein_fano || g != r.gorenstein_fano || s != r.smooth)
      throw InvariantViolation("product classification differs from component-wise conjunction for " + rs.name());
  }

  if (is_a_odd_middle(rs, gf.support) && r.q_gorenstein_fano) {
    r.diagnostics.push_back(std::string("A_{2s-1} middle node: support function is ") +
                            (r.gorenstein_fano ? "integral (Gorenstein)" : "not integral") +
                            "; the reference value (-3j+1)/(2j-1) is inconsistent with <n,v> = -1 and is not used");
  }
  return r;
}

}  // namespace rootfan
