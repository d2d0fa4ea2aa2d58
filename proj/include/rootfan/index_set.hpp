// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace rootfan {

/// Subset of {0, ..., 31}; node sets of Dynkin diagrams and weight supports.
/// Indices are 0-based internally and printed 1-based.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint32_t bits) : bits_(bits) {}

  static IndexSet all(std::size_t n) { return IndexSet(n >= 32 ? ~0u : ((1u << n) - 1u)); }
  static IndexSet from_indices(const std::vector<int>& idx) {
    IndexSet s;
    for (int i : idx) s.insert(static_cast<std::size_t>(i));
    return s;
  }

  bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }
  void insert(std::size_t i) { bits_ |= (1u << i); }
  void erase(std::size_t i) { bits_ &= ~(1u << i); }
  bool empty() const { return bits_ == 0; }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  std::uint32_t bits() const { return bits_; }

  IndexSet complement(std::size_t n) const { return IndexSet(~bits_ & all(n).bits_); }
  IndexSet operator&(IndexSet o) const { return IndexSet(bits_ & o.bits_); }
  IndexSet operator|(IndexSet o) const { return IndexSet(bits_ | o.bits_); }
  bool subset_of(IndexSet o) const { return (bits_ & ~o.bits_) == 0; }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::uint32_t b = bits_; b; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
  }

  /// 1-based listing, e.g. "{1,3}".
  std::string str() const {
    std::string s = "{";
    bool first = true;
    for (auto i : indices()) {
      if (!first) s += ",";
      s += std::to_string(i + 1);
      first = false;
    }
    return s + "}";
  }

  friend bool operator==(IndexSet a, IndexSet b) = default;
  friend auto operator<=>(IndexSet a, IndexSet b) = default;

 private:
  std::uint32_t bits_ = 0;
};

}  // namespace rootfan
