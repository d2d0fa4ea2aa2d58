// SPDX-License-Identifier: Apache-2.0
#include "rootfan/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <sstream>

namespace rootfan {

using detail::checked_add;
using detail::checked_mul;
using detail::checked_sub;

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  assert(a.size() == b.size());
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

bool is_zero(std::span<const std::int64_t> v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

std::int64_t content(std::span<const std::int64_t> v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  return g;
}

IntVec primitive(IntVec v) {
  std::int64_t g = content(v);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

IntVec negated(IntVec v) {
  for (auto& x : v) x = checked_sub(0, x);
  return v;
}

IntVec add(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

IntVec sub(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
  return r;
}

IntVec scaled(std::span<const std::int64_t> a, std::int64_t k) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(a[i], k);
  return r;
}

IntVec unit_vector(std::size_t n, std::size_t i, std::int64_t value) {
  IntVec v(n, 0);
  v[i] = value;
  return v;
}

std::string to_string(std::span<const std::int64_t> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

RatVec to_rational(std::span<const std::int64_t> v) { return RatVec(v.begin(), v.end()); }

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  assert(a.size() == b.size());
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

std::int64_t common_denominator(std::span<const Rational> v) {
  std::int64_t l = 1;
  for (const auto& x : v) l = checked_mul(l / std::gcd(l, x.den()), x.den());
  return l;
}

IntVec primitive_direction(std::span<const Rational> v) {
  std::int64_t l = common_denominator(v);
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = checked_mul(v[i].num(), l / v[i].den());
  return primitive(std::move(r));
}

std::string to_string(std::span<const Rational> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

RatMat to_rational(const IntMat& m) {
  RatMat r;
  r.reserve(m.size());
  for (const auto& row : m) r.push_back(to_rational(row));
  return r;
}

RatVec mat_vec(const RatMat& m, std::span<const Rational> v) {
  RatVec r;
  r.reserve(m.size());
  for (const auto& row : m) r.push_back(dot(row, v));
  return r;
}

IntVec mat_vec(const IntMat& m, std::span<const std::int64_t> v) {
  IntVec r;
  r.reserve(m.size());
  for (const auto& row : m) r.push_back(dot(row, v));
  return r;
}

RatMat transpose(const RatMat& m) {
  if (m.empty()) return {};
  RatMat t(m[0].size(), RatVec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

IntMat transpose(const IntMat& m) {
  if (m.empty()) return {};
  IntMat t(m[0].size(), IntVec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
  RatMat bt = transpose(b);
  RatMat r(a.size(), RatVec(bt.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < bt.size(); ++j) r[i][j] = dot(a[i], bt[j]);
  return r;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  IntMat bt = transpose(b);
  IntMat r(a.size(), IntVec(bt.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < bt.size(); ++j) r[i][j] = dot(a[i], bt[j]);
  return r;
}

IntMat identity_matrix(std::size_t n) {
  IntMat m(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

std::optional<RatMat> inverse(const RatMat& m) {
  const std::size_t n = m.size();
  RatMat a = m;
  RatMat inv(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Rational piv = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= piv;
      inv[c][j] /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      Rational f = a[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

Rational determinant(const RatMat& m) {
  const std::size_t n = m.size();
  RatMat a = m;
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

std::int64_t determinant(const IntMat& m) {
  Rational d = determinant(to_rational(m));
  assert(d.is_integer());
  return d.num();
}

// ---- IntEchelon ---------------------------------------------------------------

IntVec IntEchelon::reduce(IntVec v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if (v[p] == 0) continue;
    const IntVec& row = rows_[r];
    std::int64_t g = std::gcd(row[p], v[p]);
    std::int64_t fv = row[p] / g;
    std::int64_t fr = v[p] / g;
    for (std::size_t j = 0; j < dim_; ++j) v[j] = checked_sub(checked_mul(fv, v[j]), checked_mul(fr, row[j]));
    v = primitive(std::move(v));
  }
  return v;
}

bool IntEchelon::add(IntVec v) {
  if (rows_.size() == dim_) return false;
  v = reduce(primitive(std::move(v)));
  auto it = std::find_if(v.begin(), v.end(), [](std::int64_t x) { return x != 0; });
  if (it == v.end()) return false;
  pivots_.push_back(static_cast<std::size_t>(it - v.begin()));
  rows_.push_back(std::move(v));
  return true;
}

bool IntEchelon::in_span(IntVec v) const {
  if (rows_.size() == dim_) return true;
  return is_zero(reduce(primitive(std::move(v))));
}

std::size_t rank_of(std::span<const IntVec> vectors, std::size_t dim) {
  IntEchelon e(dim);
  for (const auto& v : vectors) {
    e.add(v);
    if (e.rank() == dim) break;
  }
  return e.rank();
}

std::size_t rank_of(std::span<const RatVec> vectors, std::size_t dim) {
  IntEchelon e(dim);
  for (const auto& v : vectors) {
    e.add(primitive_direction(v));
    if (e.rank() == dim) break;
  }
  return e.rank();
}

std::vector<IntVec> kernel_basis(std::span<const IntVec> rows, std::size_t dim) {
  // Reduced row echelon form over the rationals, then read off free columns.
  RatMat a;
  for (const auto& r : rows) a.push_back(to_rational(r));
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t c = 0; c < dim && row < a.size(); ++c) {
    std::size_t p = row;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    Rational piv = a[row][c];
    for (auto& x : a[row]) x /= piv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][c].is_zero()) continue;
      Rational f = a[r][c];
      for (std::size_t j = 0; j < dim; ++j) a[r][j] -= f * a[row][j];
    }
    pivot_cols.push_back(c);
    ++row;
  }
  std::vector<IntVec> basis;
  for (std::size_t f = 0; f < dim; ++f) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), f) != pivot_cols.end()) continue;
    RatVec v(dim);
    v[f] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -a[r][f];
    basis.push_back(primitive_direction(v));
  }
  return basis;
}

// ---- solve ------------------------------------------------------------------

SolveResult solve(std::span<const RatVec> rows, std::span<const Rational> rhs, std::size_t dim) {
  assert(rows.size() == rhs.size());
  // Incremental reduced echelon form of the augmented rows.
  std::vector<RatVec> basis;
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    RatVec v(rows[i].begin(), rows[i].end());
    v.push_back(rhs[i]);
    for (std::size_t r = 0; r < basis.size(); ++r) {
      const Rational f = v[pivots[r]];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j <= dim; ++j)
        if (!basis[r][j].is_zero()) v[j] -= f * basis[r][j];
    }
    std::size_t p = 0;
    while (p < dim && v[p].is_zero()) ++p;
    if (p == dim) {
      if (!v[dim].is_zero()) return {SolveStatus::Inconsistent, {}};
      continue;
    }
    Rational piv = v[p];
    for (auto& x : v) x /= piv;
    for (auto& b : basis) {
      const Rational f = b[p];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j <= dim; ++j) b[j] -= f * v[j];
    }
    basis.push_back(std::move(v));
    pivots.push_back(p);
  }
  if (basis.size() < dim) return {SolveStatus::Underdetermined, {}};
  RatVec x(dim);
  for (std::size_t r = 0; r < basis.size(); ++r) x[pivots[r]] = basis[r][dim];
  return {SolveStatus::Unique, std::move(x)};
}

// ---- Hermite normal form ----------------------------------------------------

IntMat hermite_basis(std::span<const IntVec> generators, std::size_t dim) {
  IntMat a(generators.begin(), generators.end());
  std::size_t row = 0;
  for (std::size_t c = 0; c < dim && row < a.size(); ++c) {
    // Euclid on column c among rows >= row.
    while (true) {
      std::size_t best = a.size();
      for (std::size_t r = row; r < a.size(); ++r)
        if (a[r][c] != 0 && (best == a.size() || std::llabs(a[r][c]) < std::llabs(a[best][c]))) best = r;
      if (best == a.size()) break;
      std::swap(a[row], a[best]);
      bool done = true;
      for (std::size_t r = row + 1; r < a.size(); ++r) {
        if (a[r][c] == 0) continue;
        std::int64_t q = a[r][c] / a[row][c];
        for (std::size_t j = 0; j < dim; ++j) a[r][j] = checked_sub(a[r][j], checked_mul(q, a[row][j]));
        if (a[r][c] != 0) done = false;
      }
      if (done) break;
    }
    if (a[row][c] == 0) continue;
    if (a[row][c] < 0)
      for (auto& x : a[row]) x = checked_sub(0, x);
    for (std::size_t r = 0; r < row; ++r) {
      std::int64_t q = a[r][c] / a[row][c];
      if (a[r][c] - q * a[row][c] < 0) --q;
      if (q != 0)
        for (std::size_t j = 0; j < dim; ++j) a[r][j] = checked_sub(a[r][j], checked_mul(q, a[row][j]));
    }
    ++row;
  }
  a.resize(row);
  return a;
}

namespace {

std::size_t pivot_of(const IntVec& v) {
  std::size_t p = 0;
  while (p < v.size() && v[p] == 0) ++p;
  return p;
}

}  // namespace

RatLattice::RatLattice(std::span<const RatVec> generators, std::size_t dim) : dim_(dim) {
  for (const auto& g : generators) denom_ = checked_mul(denom_ / std::gcd(denom_, common_denominator(g)),
                                                        common_denominator(g));
  IntMat ints;
  for (const auto& g : generators) {
    IntVec v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = checked_mul(g[i].num(), denom_ / g[i].den());
    ints.push_back(std::move(v));
  }
  basis_ = hermite_basis(ints, dim);
}

bool RatLattice::contains(std::span<const Rational> v) const {
  IntVec x(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    Rational s = v[i] * Rational(denom_);
    if (!s.is_integer()) return false;
    x[i] = s.num();
  }
  for (const auto& row : basis_) {
    std::size_t p = pivot_of(row);
    if (x[p] % row[p] != 0) return false;
    std::int64_t q = x[p] / row[p];
    for (std::size_t j = 0; j < dim_; ++j) x[j] = checked_sub(x[j], checked_mul(q, row[j]));
  }
  return is_zero(x);
}

bool RatLattice::contains_lattice(const RatLattice& other) const {
  for (const auto& b : other.basis())
    if (!contains(b)) return false;
  return true;
}

bool RatLattice::operator==(const RatLattice& other) const {
  return dim_ == other.dim_ && contains_lattice(other) && other.contains_lattice(*this);
}

std::int64_t RatLattice::index_of(const RatLattice& sub) const {
  if (rank() != dim_ || sub.rank() != dim_) throw std::invalid_argument("index_of needs full-rank lattices");
  Rational covol_this = 1, covol_sub = 1;
  for (std::size_t i = 0; i < dim_; ++i) {
    covol_this *= Rational(basis_[i][pivot_of(basis_[i])], denom_);
    covol_sub *= Rational(sub.basis_[i][pivot_of(sub.basis_[i])], sub.denom_);
  }
  Rational idx = covol_sub / covol_this;
  if (!idx.is_integer()) throw std::invalid_argument("index_of: not a sublattice");
  return idx.num();
}

std::vector<RatVec> RatLattice::basis() const {
  std::vector<RatVec> out;
  for (const auto& row : basis_) {
    RatVec v;
    for (auto x : row) v.emplace_back(x, denom_);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace rootfan
