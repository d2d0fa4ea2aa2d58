// SPDX-License-Identifier: Apache-2.0
#include "rootfan/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>

namespace rootfan {

namespace {

constexpr std::size_t kMaxTotalRank = 24;

void link(IntMat& a, std::size_t i, std::size_t j) {
  a[i][j] = -1;
  a[j][i] = -1;
}

std::vector<std::int64_t> half_lengths(Component c) {
  auto n = static_cast<std::size_t>(c.rank);
  std::vector<std::int64_t> d(n, 1);
  switch (c.type) {
    case 'B':
      std::fill(d.begin(), d.end() - 1, 2);
      break;
    case 'C':
      d[n - 1] = 2;
      break;
    case 'F':
      d = {2, 2, 1, 1};
      break;
    case 'G':
      d = {1, 3};
      break;
    default:
      break;
  }
  return d;
}

}  // namespace

RootSystemSpec RootSystemSpec::single(char type, int rank) {
  RootSystemSpec s;
  s.components.push_back({static_cast<char>(std::toupper(static_cast<unsigned char>(type))), rank});
  s.validate();
  return s;
}

RootSystemSpec RootSystemSpec::parse(const std::string& text) {
  RootSystemSpec s;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  while (i < text.size()) {
    char t = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])));
    if (t < 'A' || t > 'G') throw ArgumentError("bad root system type in '" + text + "'");
    ++i;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i || i - start > 3) throw ArgumentError("missing rank in '" + text + "'");
    s.components.push_back({t, std::stoi(text.substr(start, i - start))});
    skip();
    if (i < text.size()) {
      if (text[i] != 'x' && text[i] != 'X' && text[i] != '*')
        throw ArgumentError("unexpected character in '" + text + "'");
      ++i;
      skip();
      if (i == text.size()) throw ArgumentError("dangling product in '" + text + "'");
    }
  }
  if (s.components.empty()) throw ArgumentError("empty root system type");
  s.validate();
  return s;
}

std::size_t RootSystemSpec::rank() const {
  std::size_t n = 0;
  for (const auto& c : components) n += static_cast<std::size_t>(c.rank);
  return n;
}

std::string RootSystemSpec::str() const {
  std::string out;
  for (std::size_t k = 0; k < components.size(); ++k) {
    if (k) out += "x";
    out += components[k].str();
  }
  return out;
}

void RootSystemSpec::validate() const {
  if (components.empty()) throw ArgumentError("root system has no components");
  for (const auto& c : components) {
    bool ok = false;
    switch (c.type) {
      case 'A': ok = c.rank >= 1; break;
      case 'B': ok = c.rank >= 2; break;
      case 'C': ok = c.rank >= 2; break;
      case 'D': ok = c.rank >= 3; break;
      case 'E': ok = c.rank >= 6 && c.rank <= 8; break;
      case 'F': ok = c.rank == 4; break;
      case 'G': ok = c.rank == 2; break;
      default: break;
    }
    if (!ok) throw ArgumentError("inadmissible root system " + c.str());
  }
  if (rank() > kMaxTotalRank)
    throw ArgumentError("total rank " + std::to_string(rank()) + " exceeds " + std::to_string(kMaxTotalRank));
}

IntMat cartan_matrix(Component c) {
  auto n = static_cast<std::size_t>(c.rank);
  IntMat a(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = 2;
  switch (c.type) {
    case 'A':
      for (std::size_t i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      break;
    case 'B':
      for (std::size_t i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      a[n - 1][n - 2] = -2;
      break;
    case 'C':
      for (std::size_t i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      a[n - 2][n - 1] = -2;
      break;
    case 'D':
      for (std::size_t i = 0; i + 2 < n; ++i) link(a, i, i + 1);
      link(a, n - 3, n - 1);
      break;
    case 'E':
      link(a, 0, 2);
      link(a, 2, 3);
      link(a, 1, 3);
      for (std::size_t i = 3; i + 1 < n; ++i) link(a, i, i + 1);
      break;
    case 'F':
      link(a, 0, 1);
      a[1][2] = -1;
      a[2][1] = -2;
      link(a, 2, 3);
      break;
    case 'G':
      a[0][1] = -3;
      a[1][0] = -1;
      break;
    default:
      throw ArgumentError("unknown type");
  }
  return a;
}

std::size_t expected_root_count(Component c) {
  auto n = static_cast<std::size_t>(c.rank);
  switch (c.type) {
    case 'A': return n * (n + 1);
    case 'B':
    case 'C': return 2 * n * n;
    case 'D': return 2 * n * (n - 1);
    case 'E': return n == 6 ? 72 : n == 7 ? 126 : 240;
    case 'F': return 48;
    case 'G': return 12;
    default: return 0;
  }
}

std::int64_t fundamental_group_order(Component c) {
  switch (c.type) {
    case 'A': return c.rank + 1;
    case 'B':
    case 'C': return 2;
    case 'D': return 4;
    case 'E': return c.rank == 6 ? 3 : c.rank == 7 ? 2 : 1;
    default: return 1;
  }
}

RootSystem::RootSystem(RootSystemSpec spec) : spec_(std::move(spec)) {
  spec_.validate();
  n_ = spec_.rank();
  cartan_.assign(n_, IntVec(n_, 0));
  half_len_.assign(n_, 1);
  comp_of_.assign(n_, 0);
  std::size_t off = 0;
  for (std::size_t k = 0; k < spec_.components.size(); ++k) {
    const auto& c = spec_.components[k];
    auto block = cartan_matrix(c);
    auto d = half_lengths(c);
    offsets_.push_back(off);
    for (std::size_t i = 0; i < block.size(); ++i) {
      comp_of_[off + i] = k;
      half_len_[off + i] = d[i];
      for (std::size_t j = 0; j < block.size(); ++j) cartan_[off + i][off + j] = block[i][j];
    }
    off += block.size();
  }

  // (ω_i, α_j) = δ_ij d_j, and α_j is column j of A, so G·A = D.
  auto a_inv = inverse(to_rational(cartan_));
  if (!a_inv) throw InvariantViolation("singular Cartan matrix");
  gram_.assign(n_, RatVec(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) gram_[i][j] = Rational(half_len_[i]) * (*a_inv)[i][j];
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (gram_[i][j] != gram_[j][i]) throw InvariantViolation("Gram matrix not symmetric");
  gram_inv_ = *inverse(gram_);

  std::set<IntVec> seen;
  std::deque<IntVec> queue;
  for (std::size_t i = 0; i < n_; ++i) {
    auto a = simple_root(i);
    if (seen.insert(a).second) queue.push_back(a);
  }
  while (!queue.empty()) {
    IntVec v = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < n_; ++i) {
      if (v[i] == 0) continue;
      IntVec w = v;
      for (std::size_t k = 0; k < n_; ++k) w[k] -= v[i] * cartan_[k][i];
      if (seen.insert(w).second) queue.push_back(std::move(w));
    }
  }
  roots_.assign(seen.begin(), seen.end());
  std::size_t expected = 0;
  for (const auto& c : spec_.components) expected += expected_root_count(c);
  if (roots_.size() != expected) throw InvariantViolation("root count mismatch for " + spec_.str());
}

IntVec RootSystem::simple_root(std::size_t i) const {
  if (i >= n_) throw ArgumentError("simple root index out of range");
  IntVec a(n_);
  for (std::size_t k = 0; k < n_; ++k) a[k] = cartan_[k][i];
  return a;
}

Rational RootSystem::inner_product(std::span<const std::int64_t> x, std::span<const std::int64_t> y) const {
  if (x.size() != n_ || y.size() != n_) throw ArgumentError("inner_product: dimension mismatch");
  Rational s;
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i] == 0) continue;
    Rational row;
    for (std::size_t j = 0; j < n_; ++j)
      if (y[j] != 0) row += gram_[i][j] * Rational(y[j]);
    s += Rational(x[i]) * row;
  }
  return s;
}

Rational RootSystem::inner_product(std::span<const Rational> x, std::span<const Rational> y) const {
  if (x.size() != n_ || y.size() != n_) throw ArgumentError("inner_product: dimension mismatch");
  Rational s;
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    Rational row;
    for (std::size_t j = 0; j < n_; ++j)
      if (!y[j].is_zero()) row += gram_[i][j] * y[j];
    s += x[i] * row;
  }
  return s;
}

IndexSet RootSystem::component_nodes(std::size_t c) const {
  IndexSet s;
  auto off = offsets_.at(c);
  for (int i = 0; i < spec_.components[c].rank; ++i) s.insert(off + static_cast<std::size_t>(i));
  return s;
}

IndexSet support_of(std::span<const std::int64_t> coeffs) {
  IndexSet s;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) s.insert(i);
  return s;
}

}  // namespace rootfan
