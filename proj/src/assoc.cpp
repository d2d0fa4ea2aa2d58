// SPDX-License-Identifier: Apache-2.0
#include "rootfan/assoc.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace rootfan {

namespace {

std::vector<IntVec> sorted_unique(std::vector<IntVec> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// s_beta(v) as a primitive direction
IntVec reflect_line(const Form& form, const IntVec& beta, const IntVec& v) {
  Rational c = Rational(2) * form.pair(v, beta) / form.pair(beta, beta);
  RatVec out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = Rational(v[k]) - c * Rational(beta[k]);
  return primitive_direction(out);
}

// 2 (x, y) / (y, y)
Rational cartan_pairing(const Form& form, const IntVec& x, const IntVec& y) {
  return Rational(2) * form.pair(x, y) / form.pair(y, y);
}

int compare_key(const std::vector<Rational>& key) {
  for (const auto& k : key)
    if (!k.is_zero()) return k.sign();
  return 0;
}

std::vector<Rational> positivity_key(const Positivity& pos, const IntVec& v) {
  std::vector<Rational> key;
  auto vr = to_rational(v);
  for (const auto& f : pos) key.push_back(dot(f, vr));
  return key;
}

std::vector<Component> catalog_for_rank(int m) {
  std::vector<Component> out{{'A', m}};
  if (m >= 2) out.push_back({'B', m});
  if (m >= 3) out.push_back({'C', m});
  if (m >= 4) out.push_back({'D', m});
  if (m >= 6 && m <= 8) out.push_back({'E', m});
  if (m == 4) out.push_back({'F', 4});
  if (m == 2) out.push_back({'G', 2});
  return out;
}

// Permutation perm with sub[perm[k]][perm[l]] == cat[k][l], identity tried first.
bool match_cartan(const IntMat& sub, const IntMat& cat, std::vector<std::size_t>& perm) {
  const std::size_t m = cat.size();
  perm.assign(m, 0);
  std::vector<bool> used(m, false);
  std::function<bool(std::size_t)> go = [&](std::size_t k) {
    if (k == m) return true;
    for (std::size_t c = 0; c < m; ++c) {
      if (used[c]) continue;
      bool ok = sub[c][c] == cat[k][k];
      for (std::size_t l = 0; l < k && ok; ++l) ok = sub[perm[l]][c] == cat[l][k] && sub[c][perm[l]] == cat[k][l];
      if (!ok) continue;
      used[c] = true;
      perm[k] = c;
      if (go(k + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  return go(0);
}

IntMat cartan_of(const std::vector<IntVec>& base, const Form& form) {
  const std::size_t m = base.size();
  IntMat a(m, IntVec(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Rational c = cartan_pairing(form, base[j], base[i]);
      if (!c.is_integer()) throw InvariantViolation("root set: non-integral Cartan entry");
      a[i][j] = c.num();
    }
  return a;
}

Positivity fan_positivity(const GenericFan& gf) {
  const RootSystem& rs = *gf.rs;
  const std::size_t n = rs.rank();
  auto b = to_rational(baricenter(gf));
  RatVec p0 = mat_vec(rs.gram(), b);
  for (auto& q : p0) q = -q;
  RatVec rho(n, Rational(1));
  RatVec p1 = mat_vec(rs.gram(), rho);
  return {p0, p1};
}

IntVec ambient_from_weights(const std::vector<RatVec>& omegas, const IntVec& coords) {
  const std::size_t n = omegas.front().size();
  RatVec v(n);
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (coords[k] != 0)
      for (std::size_t r = 0; r < n; ++r) v[r] += Rational(coords[k]) * omegas[k][r];
  return primitive_direction(v);
}

std::string prim_listing(const std::vector<IntVec>& vs) {
  std::string s = "{";
  for (std::size_t k = 0; k < vs.size(); ++k) s += (k ? "," : "") + to_string(vs[k]);
  return s + "}";
}

std::vector<std::size_t> sorted_indices(IndexSet s) { return s.indices(); }

}  // namespace

std::string RootSet::type_string() const {
  if (spec.components.empty()) return "empty";
  return spec.str();
}

std::vector<IntVec> reflection_closure(std::vector<IntVec> vectors, const Form& form) {
  std::set<IntVec> seen;
  std::deque<IntVec> work;
  for (auto& v : vectors) {
    for (auto w : {primitive(v), negated(primitive(v))})
      if (seen.insert(w).second) work.push_back(w);
  }
  while (!work.empty()) {
    IntVec v = work.front();
    work.pop_front();
    std::vector<IntVec> current(seen.begin(), seen.end());
    for (const auto& beta : current) {
      for (auto w : {reflect_line(form, beta, v), reflect_line(form, v, beta)})
        if (seen.insert(w).second) work.push_back(w);
    }
  }
  return {seen.begin(), seen.end()};
}

void check_root_set(const std::vector<IntVec>& vectors, const Form& form) {
  const std::set<IntVec> set(vectors.begin(), vectors.end());
  for (const auto& v : vectors) {
    if (is_zero(v)) throw InvariantViolation("root set: zero vector");
    if (!set.count(negated(v))) throw InvariantViolation("root set: not closed under negation");
    if (content(v) != 1) throw InvariantViolation("root set: non-primitive vector");
  }
  for (const auto& b : vectors)
    for (const auto& g : vectors) {
      if (!cartan_pairing(form, b, g).is_integer()) throw InvariantViolation("root set: Cartan integrality");
      if (!set.count(reflect_line(form, g, b))) throw InvariantViolation("root set: not closed under reflections");
    }
}

std::vector<std::vector<std::size_t>> diagram_automorphisms(const IntMat& cartan) {
  const std::size_t m = cartan.size();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> perm(m);
  std::vector<bool> used(m, false);
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == m) {
      out.push_back(perm);
      return;
    }
    for (std::size_t c = 0; c < m; ++c) {
      if (used[c]) continue;
      bool ok = cartan[c][c] == cartan[k][k];
      for (std::size_t l = 0; l < k && ok; ++l) ok = cartan[perm[l]][c] == cartan[l][k] && cartan[c][perm[l]] == cartan[k][l];
      if (!ok) continue;
      used[c] = true;
      perm[k] = c;
      go(k + 1);
      used[c] = false;
    }
  };
  go(0);
  return out;
}

RootSet identify_type(std::vector<IntVec> roots, const Form& form, const Positivity& positivity) {
  RootSet out;
  for (auto& r : roots) r = primitive(std::move(r));
  out.vectors = sorted_unique(std::move(roots));
  if (out.vectors.empty()) return out;
  const std::size_t n = form.dim();

  Positivity pos = positivity;
  std::int64_t big = 0;
  for (const auto& v : out.vectors)
    for (auto c : v) big = std::max(big, c < 0 ? -c : c);
  RatVec generic(n);
  Rational t(1 + 2 * big), power(1);
  for (std::size_t k = 0; k < n; ++k) {
    generic[k] = power;
    power *= t;
  }
  pos.push_back(generic);

  std::vector<IntVec> positive;
  for (const auto& v : out.vectors) {
    int s = compare_key(positivity_key(pos, v));
    if (s == 0) throw InvariantViolation("root set: positivity functional vanishes on a root");
    if (s > 0) positive.push_back(v);
  }

  // beta is simple iff s_beta makes exactly one positive root negative
  std::vector<IntVec> simple;
  for (const auto& beta : positive) {
    int flipped = 0;
    for (const auto& g : positive)
      if (compare_key(positivity_key(pos, reflect_line(form, beta, g))) < 0) ++flipped;
    if (flipped == 1) simple.push_back(beta);
  }
  if (simple.size() != rank_of(out.vectors, n)) throw InvariantViolation("root set: base size differs from rank");

  // deterministic node order: descending by pairing with the fundamental weights
  std::sort(simple.begin(), simple.end(), [&](const IntVec& a, const IntVec& b) {
    return mat_vec(form.gram(), to_rational(a)) > mat_vec(form.gram(), to_rational(b));
  });
  const IntMat a = cartan_of(simple, form);
  const std::size_t m = simple.size();

  std::vector<int> comp(m, -1);
  int ncomp = 0;
  for (std::size_t s = 0; s < m; ++s) {
    if (comp[s] >= 0) continue;
    std::deque<std::size_t> q{s};
    comp[s] = ncomp;
    while (!q.empty()) {
      auto u = q.front();
      q.pop_front();
      for (std::size_t v = 0; v < m; ++v)
        if (comp[v] < 0 && a[u][v] != 0) {
          comp[v] = ncomp;
          q.push_back(v);
        }
    }
    ++ncomp;
  }

  for (int c = 0; c < ncomp; ++c) {
    std::vector<std::size_t> nodes;
    for (std::size_t s = 0; s < m; ++s)
      if (comp[s] == c) nodes.push_back(s);
    const int r = static_cast<int>(nodes.size());
    IntMat sub(nodes.size(), IntVec(nodes.size()));
    for (std::size_t i = 0; i < nodes.size(); ++i)
      for (std::size_t j = 0; j < nodes.size(); ++j) sub[i][j] = a[nodes[i]][nodes[j]];
    bool found = false;
    for (const auto& cand : catalog_for_rank(r)) {
      std::vector<std::size_t> perm;
      if (!match_cartan(sub, cartan_matrix(cand), perm)) continue;
      out.spec.components.push_back(cand);
      for (auto p : perm) out.base.push_back(simple[nodes[p]]);
      found = true;
      break;
    }
    if (!found) throw InvariantViolation("root set: Cartan matrix matches no irreducible type");
  }
  out.cartan = cartan_of(out.base, form);

  std::size_t expected = 0;
  for (const auto& c : out.spec.components) expected += expected_root_count(c);
  if (expected != out.vectors.size()) throw InvariantViolation("root set: root count does not match identified type");
  return out;
}

RootSet phi_of_fan(const GenericFan& gf) {
  const RootSystem& rs = *gf.rs;
  const std::size_t n = rs.rank();
  const Form form = gf.form();
  const IndexSet all = IndexSet::all(n);
  std::set<IntVec> lines;
  for (const auto& h : gf.facet_normals)
    for (const auto& seed : {h, negated(h)})
      for (auto& v : orbit(rs, all, seed)) lines.insert(primitive(std::move(v)));
  std::vector<IntVec> vectors(lines.begin(), lines.end());
  check_root_set(vectors, form);

  if (n <= kOracleMaxRank) {
    for (const auto& h : dd_facets(gf.prim, form))
      if (!lines.count(h)) throw InvariantViolation("associated root set misses a facet normal of sigma");
    std::vector<IntVec> moved;
    for (const auto& p : gf.prim) moved.push_back(apply_simple_reflection(rs, 0, p));
    for (const auto& h : dd_facets(moved, form))
      if (!lines.count(h)) throw InvariantViolation("associated root set misses a facet normal of a translate");
  }
  return identify_type(std::move(vectors), form, fan_positivity(gf));
}

std::string to_string(LatticeRelation r) {
  switch (r) {
    case LatticeRelation::RootLattice: return "Lambda_R'";
    case LatticeRelation::WeightLattice: return "Lambda_P'";
    case LatticeRelation::Both: return "Lambda_R'=Lambda_P'";
    case LatticeRelation::StrictlyBetween: return "strictly_between";
  }
  return "unknown";
}

std::vector<RatVec> fundamental_weights(const RootSet& roots, const Form& form) {
  const std::size_t m = roots.rank();
  const std::size_t n = form.dim();
  auto ainv = inverse(to_rational(roots.cartan));
  if (!ainv) throw InvariantViolation("root set: singular Cartan matrix");
  std::vector<RatVec> out;
  for (std::size_t k = 0; k < m; ++k) {
    RatVec w(n);
    for (std::size_t j = 0; j < m; ++j) {
      // A' c = e_k with A'_{jm} = <alpha_m, alpha_j^vee>
      Rational c = (*ainv)[j][k];
      if (c.is_zero()) continue;
      for (std::size_t r = 0; r < n; ++r) w[r] += c * Rational(roots.base[j][r]);
    }
    out.push_back(std::move(w));
  }
  return out;
}

LatticeComparison compare_lattices(const RootSet& roots, const Form& form) {
  const std::size_t n = form.dim();
  if (roots.rank() != n) throw ArgumentError("compare_lattices: root set is not of full rank");
  std::vector<RatVec> base;
  for (const auto& b : roots.base) base.push_back(to_rational(b));
  std::vector<RatVec> units;
  for (std::size_t i = 0; i < n; ++i) units.push_back(to_rational(unit_vector(n, i)));
  RatLattice lr(base, n), lp(fundamental_weights(roots, form), n), l(units, n);
  if (!l.contains_lattice(lr) || !lp.contains_lattice(l))
    throw InvariantViolation("lattice sandwich Lambda_R' <= Lambda <= Lambda_P' fails");
  LatticeComparison out;
  bool eq_r = l == lr, eq_p = l == lp;
  out.relation = eq_r && eq_p ? LatticeRelation::Both
                 : eq_r      ? LatticeRelation::RootLattice
                 : eq_p      ? LatticeRelation::WeightLattice
                             : LatticeRelation::StrictlyBetween;
  out.index_over_root_lattice = l.index_of(lr);
  out.index_in_weight_lattice = lp.index_of(l);

  // coordinates of the unit vectors in the base
  std::vector<RatVec> rows(n, RatVec(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) rows[r][k] = Rational(roots.base[k][r]);
  std::vector<RatVec> coords;
  for (std::size_t i = 0; i < n; ++i) {
    auto res = solve(rows, units[i], n);
    if (res.status != SolveStatus::Unique) throw InvariantViolation("base does not span the ambient space");
    coords.push_back(res.solution);
  }
  out.basis_in_base = RatLattice(coords, n).basis();
  return out;
}

MinimalPair minimal_pair(const GenericFan& gf) {
  const RootSystem& rs = *gf.rs;
  const std::size_t n = rs.rank();
  const Form form = gf.form();
  MinimalPair mp;
  mp.roots = phi_of_fan(gf);

  std::set<IntVec> own;
  for (const auto& r : rs.all_roots()) own.insert(primitive(r));
  mp.same_pair = std::vector<IntVec>(own.begin(), own.end()) == mp.roots.vectors;

  const IntVec b = baricenter(gf);
  auto support_from_base = [&](const std::vector<IntVec>& base) {
    IndexSet s;
    for (std::size_t k = 0; k < base.size(); ++k) {
      Rational p = form.pair(base[k], b);
      if (p > Rational(0)) throw InvariantViolation("baricenter not anti-dominant for the associated base");
      if (!p.is_zero()) s.insert(k);
    }
    return s;
  };
  mp.support = support_from_base(mp.roots.base);

  if (!mp.same_pair) {
    // canonical labeling: smallest support under diagram automorphisms
    auto autos = diagram_automorphisms(mp.roots.cartan);
    std::vector<std::size_t> best_perm;
    std::vector<std::size_t> best;
    for (const auto& g : autos) {
      IndexSet img;
      for (auto i : mp.support.indices()) img.insert(g[i]);
      auto idx = sorted_indices(img);
      if (best_perm.empty() || idx < best) {
        best = idx;
        best_perm = g;
      }
    }
    std::vector<IntVec> relabeled(mp.roots.base.size());
    for (std::size_t i = 0; i < relabeled.size(); ++i) relabeled[best_perm[i]] = mp.roots.base[i];
    mp.roots.base = std::move(relabeled);
    mp.roots.cartan = cartan_of(mp.roots.base, form);
    mp.support = support_from_base(mp.roots.base);
  }

  auto prs = std::make_shared<const RootSystem>(mp.roots.spec);
  mp.weyl_order = weyl_order(*prs);
  const std::int64_t stab = parabolic_order(*prs, mp.support.complement(n));
  const bool count_ok = mp.weyl_order % stab == 0 && mp.weyl_order / stab == gf.max_cone_count;
  if (!count_ok)
    mp.diagnostics.push_back("minimal pair: |W'|/|W'_mu| = " + std::to_string(mp.weyl_order / stab) +
                             " differs from the cone count " + std::to_string(gf.max_cone_count));

  auto omegas = fundamental_weights(mp.roots, form);
  auto rebuilt = build_sigma(prs, mp.support);
  std::vector<IntVec> mapped;
  for (const auto& p : rebuilt.prim) mapped.push_back(ambient_from_weights(omegas, p));
  mapped = sorted_unique(std::move(mapped));
  mp.rebuild_ok = count_ok && mapped == gf.prim;
  if (mapped != gf.prim)
    mp.diagnostics.push_back("minimal pair: rebuilt Prim " + prim_listing(mapped) + " differs from Prim " +
                             prim_listing(gf.prim));

  mp.lattice = compare_lattices(mp.roots, form);

  const auto& comps = rs.spec().components;
  if (comps.size() == 1 && (comps[0].type == 'B' || comps[0].type == 'C') && comps[0].rank >= 3 &&
      gf.support == IndexSet(0b10) && !mp.same_pair) {
    mp.diagnostics.push_back("minimal pair: every facet normal is a long root, so the associated system is " +
                             mp.roots.type_string() + " rather than the ambient system listed in the reference table");
  }
  return mp;
}

RegularityData regularity(const GenericFan& gf, const MinimalPair& mp) {
  const std::size_t n = gf.rank();
  if (n > kRegularityMaxRank)
    throw CapacityError("regularity computations are capped at rank " + std::to_string(kRegularityMaxRank));
  RegularityData out;

  RatMat basis(n, RatVec(n));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t r = 0; r < n; ++r) basis[r][k] = Rational(mp.roots.base[k][r]);
  auto binv = inverse(basis);
  if (!binv) throw InvariantViolation("associated base is singular");

  std::int64_t count = 0;
  for (const auto& g : diagram_automorphisms(mp.roots.cartan)) {
    IndexSet img;
    for (auto i : mp.support.indices()) img.insert(g[i]);
    if (img != mp.support) continue;
    RatMat image(n, RatVec(n));
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t r = 0; r < n; ++r) image[r][k] = Rational(mp.roots.base[g[k]][r]);
    RatMat m = mat_mul(image, *binv);
    bool integral = true;
    for (const auto& row : m)
      for (const auto& q : row) integral = integral && q.is_integer();
    if (!integral) continue;
    Rational d = determinant(m);
    if (d == Rational(1) || d == Rational(-1)) ++count;
  }
  out.diagram_symmetries = count;
  out.aut_order = detail::checked_mul(mp.weyl_order, count);

  const Form form = gf.form();
  auto fl = face_lattice(gf.prim, gf.facet_normals, form);
  out.flag_count = detail::checked_mul(gf.max_cone_count, fl.flag_count);
  out.lattice_regular = out.aut_order == out.flag_count;
  return out;
}

RegularityData regularity(const GenericFan& gf) { return regularity(gf, minimal_pair(gf)); }

std::int64_t aut_order(const GenericFan& gf) { return regularity(gf).aut_order; }

std::int64_t flag_count(const GenericFan& gf) {
  if (gf.rank() > kRegularityMaxRank)
    throw CapacityError("regularity computations are capped at rank " + std::to_string(kRegularityMaxRank));
  auto fl = face_lattice(gf.prim, gf.facet_normals, gf.form());
  return detail::checked_mul(gf.max_cone_count, fl.flag_count);
}

bool is_lattice_regular(const GenericFan& gf) { return regularity(gf).lattice_regular; }

PolytopeData polytope_of_fan(const GenericFan& gf) {
  const RootSystem& rs = *gf.rs;
  const std::size_t n = rs.rank();
  if (n > kRegularityMaxRank)
    throw CapacityError("polytope computations are capped at rank " + std::to_string(kRegularityMaxRank));
  PolytopeData out;
  const IndexSet all = IndexSet::all(n);
  std::vector<IntVec> verts;
  for (auto j : gf.j_lambda.indices())
    for (auto& v : orbit(rs, all, negated(rs.fundamental_weight(j)))) verts.push_back(std::move(v));
  out.vertices = sorted_unique(std::move(verts));
  out.regular = is_lattice_regular(gf);

  auto nd = normal_functional(gf);
  if (!nd) return out;
  std::int64_t s = common_denominator(nd->phi);
  IntVec f(n);
  for (std::size_t k = 0; k < n; ++k) f[k] = (nd->phi[k] * Rational(s)).num();
  // W acts on functionals by f -> f o w^{-1}; for s_i: f - (f . alpha_i) e_i
  std::set<IntVec> seen{f};
  std::deque<IntVec> q{f};
  while (!q.empty()) {
    IntVec cur = q.front();
    q.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t c = dot(cur, rs.simple_root(i));
      if (c == 0) continue;
      IntVec nxt = cur;
      nxt[i] -= c;
      if (seen.insert(nxt).second) q.push_back(std::move(nxt));
    }
  }
  out.dual_scale = s;
  out.dual_vertices.assign(seen.begin(), seen.end());
  return out;
}

StarProjection star_projection(const GenericFan& gf, const IntVec& ray) {
  const RootSystem& rs = *gf.rs;
  const std::size_t n = rs.rank();
  if (n > kOracleMaxRank) throw CapacityError("star projection is capped at rank " + std::to_string(kOracleMaxRank));
  if (!std::binary_search(gf.prim.begin(), gf.prim.end(), ray)) throw ArgumentError("star_projection: ray not in Prim");
  const Form form = gf.form();
  StarProjection out;
  const RootSet phi = phi_of_fan(gf);
  for (const auto& beta : phi.vectors)
    if (form.pair(beta, ray).is_zero()) out.levi_roots.push_back(beta);

  const IntVec fr = form.functional(ray);
  std::vector<IntVec> perp_rows{fr};
  const auto basis = kernel_basis(perp_rows, n);  // n-1 vectors spanning ray^perp
  const std::size_t m = basis.size();

  std::vector<RatVec> rows(n, RatVec(m));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < m; ++k) rows[r][k] = Rational(basis[k][r]);
  RatMat local_gram(m, RatVec(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) local_gram[i][j] = form.pair(basis[i], basis[j]);
  const Rational rr = form.pair(ray, ray);

  auto project = [&](const IntVec& v) {
    Rational c = form.pair(v, ray) / rr;
    RatVec p(n);
    for (std::size_t k = 0; k < n; ++k) p[k] = Rational(v[k]) - c * Rational(ray[k]);
    auto res = solve(rows, p, m);
    if (res.status != SolveStatus::Unique) throw InvariantViolation("star projection: coordinates not unique");
    return primitive_direction(res.solution);
  };

  std::set<IntVec> normals;
  for (const auto& cone : orbit_with_words(rs, IndexSet::all(n), gf.lambda())) {
    std::vector<IntVec> rays;
    for (const auto& p : gf.prim) rays.push_back(apply_word(rs, cone.word, p));
    if (std::find(rays.begin(), rays.end(), ray) == rays.end()) continue;
    ++out.cone_count;
    if (m == 0) continue;
    std::vector<IntVec> local;
    for (const auto& v : rays)
      if (v != ray) local.push_back(project(v));
    local = sorted_unique(std::move(local));
    for (const auto& h : dd_facets(local, Form(local_gram))) {
      RatVec amb(n);
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t r = 0; r < n; ++r) amb[r] += Rational(h[k]) * Rational(basis[k][r]);
      normals.insert(primitive_direction(amb));
    }
  }
  out.projected_normals.assign(normals.begin(), normals.end());
  out.consistent = out.projected_normals == out.levi_roots;
  if (!out.levi_roots.empty()) out.levi = identify_type(out.levi_roots, form);
  return out;
}

ChamberUnion analyze_chamber_union(const RootSystem& rs, const std::vector<Word>& words) {
  const std::size_t n = rs.rank();
  if (words.empty()) throw ArgumentError("chamber union: no chambers");
  const Form form(rs.gram());
  std::vector<IntVec> gens;
  std::set<IntVec> centers;
  const IntVec rho(n, -1);
  for (const auto& w : words) {
    for (std::size_t i = 0; i < n; ++i) gens.push_back(apply_word(rs, w, negated(rs.fundamental_weight(i))));
    centers.insert(apply_word(rs, w, rho));
  }
  gens = sorted_unique(std::move(gens));
  ChamberUnion out;
  out.normals = dd_facets(gens, form);
  for (const auto& c : orbit(rs, IndexSet::all(n), rho))
    if (cone_contains(out.normals, form, c, true) && !centers.count(c))
      throw ArgumentError("chamber union is not convex");
  out.rays = extreme_among(gens, out.normals, form);

  auto vectors = reflection_closure(out.normals, form);
  check_root_set(vectors, form);
  IntVec b(n, 0);
  for (const auto& r : out.rays) b = add(b, r);
  RatVec p0 = mat_vec(rs.gram(), to_rational(b));
  for (auto& q : p0) q = -q;
  out.roots = identify_type(std::move(vectors), form, {p0});
  out.lattice = compare_lattices(out.roots, form);
  return out;
}

}  // namespace rootfan
