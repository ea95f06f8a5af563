// Copyright 2026 The pigame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PIGAME_COALITION_HPP
#define PIGAME_COALITION_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace pigame {

/// Zero-based player index.
using Player = std::size_t;

/// Largest player count a Coalition mask can address.
inline constexpr std::size_t kMaxPlayers = 30;

/// A set of players stored as a bitmask (bit i set <=> player i is a member).
/// Ordering is by mask value, which is also the enumeration order used by
/// every exhaustive scan in the library.
class Coalition {
 public:
  using Mask = std::uint32_t;

  constexpr Coalition() = default;
  constexpr explicit Coalition(Mask mask) : mask_(mask) {}

  static constexpr Coalition singleton(Player i) { return Coalition(Mask{1} << i); }
  static constexpr Coalition grand(std::size_t n) { return Coalition((Mask{1} << n) - 1); }
  static Coalition of(std::initializer_list<Player> members) {
    Coalition s;
    for (const auto i : members) s = s.with(i);
    return s;
  }

  constexpr Mask mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(mask_)); }
  constexpr bool contains(Player i) const { return (mask_ >> i) & 1U; }
  constexpr bool subset_of(Coalition other) const { return (mask_ & ~other.mask_) == 0; }

  constexpr Coalition with(Player i) const { return Coalition(mask_ | (Mask{1} << i)); }
  constexpr Coalition without(Player i) const { return Coalition(mask_ & ~(Mask{1} << i)); }
  constexpr Coalition complement(std::size_t n) const { return Coalition(grand(n).mask_ & ~mask_); }

  friend constexpr Coalition operator|(Coalition a, Coalition b) { return Coalition(a.mask_ | b.mask_); }
  friend constexpr Coalition operator&(Coalition a, Coalition b) { return Coalition(a.mask_ & b.mask_); }
  friend constexpr Coalition operator-(Coalition a, Coalition b) { return Coalition(a.mask_ & ~b.mask_); }

  friend constexpr auto operator<=>(Coalition, Coalition) = default;

  std::vector<Player> members() const {
    std::vector<Player> out;
    for (Mask m = mask_; m != 0; m &= m - 1) out.push_back(static_cast<Player>(std::countr_zero(m)));
    return out;
  }

 private:
  Mask mask_ = 0;
};

/// "{1,2}" with one-based player labels.
std::string to_string(Coalition s);

}  // namespace pigame

#endif  // PIGAME_COALITION_HPP
