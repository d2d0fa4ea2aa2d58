// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "rootfan/index_set.hpp"
#include "rootfan/rootsys.hpp"

namespace rootfan {

using Word = std::vector<int>;  // simple-reflection indices, 0-based, leftmost applied last

/// s_i(v) = v - v_i * alpha_i.
IntVec apply_simple_reflection(const RootSystem& rs, std::size_t i, IntVec v);
RatVec apply_simple_reflection(const RootSystem& rs, std::size_t i, RatVec v);
IntVec apply_word(const RootSystem& rs, const Word& w, IntVec v);

/// Sorted orbit of v under the parabolic subgroup generated by `gens`.
std::vector<IntVec> orbit(const RootSystem& rs, IndexSet gens, const IntVec& v);

struct OrbitPoint {
  IntVec point;
  Word word;  // point = word . v, of minimal length
};
/// Orbit with a shortest word reaching each point; sorted by point.
std::vector<OrbitPoint> orbit_with_words(const RootSystem& rs, IndexSet gens, const IntVec& v);

/// |W_I|.
std::int64_t parabolic_order(const RootSystem& rs, IndexSet gens);
std::int64_t weyl_order(const RootSystem& rs);
/// |W| / |W_{complement of support}|.
std::int64_t coset_count(const RootSystem& rs, IndexSet support);

/// Matrix of the element in the ω-basis; column k is w(ω_k).
IntMat element_matrix(const RootSystem& rs, const Word& w);

/// Representative of the W-orbit of v lying in the anti-dominant chamber,
/// with a word moving v there.
OrbitPoint to_antidominant(const RootSystem& rs, IntVec v);

}  // namespace rootfan
