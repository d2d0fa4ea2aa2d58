// SPDX-License-Identifier: Apache-2.0
#include "rootfan/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>

namespace rootfan {

namespace {

struct VecHash {
  std::size_t operator()(const IntVec& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

void check_index(const RootSystem& rs, std::size_t i) {
  if (i >= rs.rank()) throw ArgumentError("reflection index " + std::to_string(i + 1) + " out of range");
}

}  // namespace

IntVec apply_simple_reflection(const RootSystem& rs, std::size_t i, IntVec v) {
  check_index(rs, i);
  if (v.size() != rs.rank()) throw ArgumentError("weight dimension mismatch");
  const std::int64_t c = v[i];
  if (c == 0) return v;
  const auto& a = rs.cartan();
  for (std::size_t k = 0; k < v.size(); ++k)
    if (a[k][i] != 0) v[k] = detail::checked_sub(v[k], detail::checked_mul(c, a[k][i]));
  return v;
}

RatVec apply_simple_reflection(const RootSystem& rs, std::size_t i, RatVec v) {
  check_index(rs, i);
  if (v.size() != rs.rank()) throw ArgumentError("weight dimension mismatch");
  const Rational c = v[i];
  if (c.is_zero()) return v;
  const auto& a = rs.cartan();
  for (std::size_t k = 0; k < v.size(); ++k)
    if (a[k][i] != 0) v[k] -= c * Rational(a[k][i]);
  return v;
}

IntVec apply_word(const RootSystem& rs, const Word& w, IntVec v) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) v = apply_simple_reflection(rs, static_cast<std::size_t>(*it), std::move(v));
  return v;
}

std::vector<IntVec> orbit(const RootSystem& rs, IndexSet gens, const IntVec& v) {
  if (v.size() != rs.rank()) throw ArgumentError("weight dimension mismatch");
  const auto idx = gens.indices();
  std::unordered_set<IntVec, VecHash> seen{v};
  std::vector<IntVec> points{v};
  for (std::size_t head = 0; head < points.size(); ++head) {
    for (auto i : idx) {
      if (points[head][i] == 0) continue;
      IntVec nxt = apply_simple_reflection(rs, i, points[head]);
      if (seen.insert(nxt).second) points.push_back(std::move(nxt));
    }
  }
  std::sort(points.begin(), points.end());
  return points;
}

std::vector<OrbitPoint> orbit_with_words(const RootSystem& rs, IndexSet gens, const IntVec& v) {
  if (v.size() != rs.rank()) throw ArgumentError("weight dimension mismatch");
  const auto idx = gens.indices();
  std::map<IntVec, Word> seen{{v, {}}};
  std::deque<IntVec> frontier{v};
  while (!frontier.empty()) {
    IntVec cur = std::move(frontier.front());
    frontier.pop_front();
    const Word base = seen[cur];
    for (auto i : idx) {
      if (cur[i] == 0) continue;
      IntVec nxt = apply_simple_reflection(rs, i, cur);
      if (seen.count(nxt)) continue;
      Word w{static_cast<int>(i)};
      w.insert(w.end(), base.begin(), base.end());
      seen.emplace(nxt, std::move(w));
      frontier.push_back(std::move(nxt));
    }
  }
  std::vector<OrbitPoint> out;
  out.reserve(seen.size());
  for (auto& [p, w] : seen) out.push_back({p, w});
  return out;
}

std::int64_t parabolic_order(const RootSystem& rs, IndexSet gens) {
  // |W_J| = |W_J . ω_j| * |W_{J \ j}|; ω_j is dominant so its stabilizer in
  // W_J is the parabolic on J \ {j}.
  std::int64_t order = 1;
  IndexSet rest = gens;
  while (!rest.empty()) {
    auto idx = rest.indices();
    std::size_t j = idx.back();
    order = detail::checked_mul(order, static_cast<std::int64_t>(orbit(rs, rest, rs.fundamental_weight(j)).size()));
    rest.erase(j);
  }
  return order;
}

std::int64_t weyl_order(const RootSystem& rs) { return parabolic_order(rs, IndexSet::all(rs.rank())); }

std::int64_t coset_count(const RootSystem& rs, IndexSet support) {
  if (support.empty()) throw ArgumentError("coset_count: empty support");
  std::int64_t w = weyl_order(rs);
  std::int64_t s = parabolic_order(rs, support.complement(rs.rank()));
  if (w % s != 0) throw InvariantViolation("parabolic order does not divide |W|");
  return w / s;
}

IntMat element_matrix(const RootSystem& rs, const Word& w) {
  const std::size_t n = rs.rank();
  IntMat m(n, IntVec(n));
  for (std::size_t k = 0; k < n; ++k) {
    IntVec col = apply_word(rs, w, rs.fundamental_weight(k));
    for (std::size_t r = 0; r < n; ++r) m[r][k] = col[r];
  }
  return m;
}

OrbitPoint to_antidominant(const RootSystem& rs, IntVec v) {
  // Reflect positive coordinates away; each step lowers the height pairing,
  // so this terminates.
  Word w;
  for (;;) {
    std::size_t i = 0;
    while (i < v.size() && v[i] <= 0) ++i;
    if (i == v.size()) break;
    v = apply_simple_reflection(rs, i, std::move(v));
    w.insert(w.begin(), static_cast<int>(i));
  }
  return {std::move(v), std::move(w)};
}

}  // namespace rootfan
