// Copyright 2026 The hanabi-adhoc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HANABI_KNOWLEDGE_HPP_
#define HANABI_KNOWLEDGE_HPP_

#include <bit>
#include <cstdint>

#include "hanabi/types.hpp"

namespace hanabi {

// Hint-derived constraints on one hidden card. Bit i of color_mask means
// color i is still possible; bit r-1 of rank_mask means rank r is still
// possible. The hinted flags record direct positive hints, as opposed to
// masks narrowed purely by negative information.
struct CardKnowledge {
  uint8_t color_mask = 0x1F;
  uint8_t rank_mask = 0x1F;
  bool color_hinted = false;
  bool rank_hinted = false;

  bool ColorPossible(Color c) const { return color_mask >> static_cast<int>(c) & 1; }
  bool RankPossible(int rank) const { return rank_mask >> (rank - 1) & 1; }
  bool Possible(Card card) const { return ColorPossible(card.color) && RankPossible(card.rank); }

  bool ColorKnown() const { return std::popcount(color_mask) == 1; }
  bool RankKnown() const { return std::popcount(rank_mask) == 1; }
  bool FullyKnown() const { return ColorKnown() && RankKnown(); }

  // Valid only when the corresponding *Known() holds.
  Color KnownColor() const { return static_cast<Color>(std::countr_zero(color_mask)); }
  int KnownRank() const { return std::countr_zero(rank_mask) + 1; }
  Card KnownCard() const { return Card(KnownColor(), KnownRank()); }

  void ApplyColorHint(Color c, bool matches) {
    if (matches) {
      color_mask = static_cast<uint8_t>(1u << static_cast<int>(c));
      color_hinted = true;
    } else {
      color_mask &= static_cast<uint8_t>(~(1u << static_cast<int>(c)));
    }
  }

  void ApplyRankHint(int rank, bool matches) {
    if (matches) {
      rank_mask = static_cast<uint8_t>(1u << (rank - 1));
      rank_hinted = true;
    } else {
      rank_mask &= static_cast<uint8_t>(~(1u << (rank - 1)));
    }
  }

  bool operator==(const CardKnowledge&) const = default;
};

}  // namespace hanabi

#endif  // HANABI_KNOWLEDGE_HPP_
