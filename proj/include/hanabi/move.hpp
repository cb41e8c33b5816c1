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

#ifndef HANABI_MOVE_HPP_
#define HANABI_MOVE_HPP_

#include <string>

#include "hanabi/types.hpp"

namespace hanabi {

// Declaration order matches the canonical action layout below.
enum class MoveType : int8_t { kDiscard = 0, kPlay = 1, kHintColor = 2, kHintRank = 3 };

struct Move {
  MoveType type = MoveType::kPlay;
  int8_t slot = -1;    // play/discard
  int8_t target = -1;  // hints: absolute seat index
  Color color = Color::kRed;
  int8_t rank = -1;

  static Move Discard(int slot) {
    Move m;
    m.type = MoveType::kDiscard;
    m.slot = static_cast<int8_t>(slot);
    return m;
  }
  static Move Play(int slot) {
    Move m;
    m.type = MoveType::kPlay;
    m.slot = static_cast<int8_t>(slot);
    return m;
  }
  static Move HintColor(int target, Color c) {
    Move m;
    m.type = MoveType::kHintColor;
    m.target = static_cast<int8_t>(target);
    m.color = c;
    return m;
  }
  static Move HintRank(int target, int rank) {
    Move m;
    m.type = MoveType::kHintRank;
    m.target = static_cast<int8_t>(target);
    m.rank = static_cast<int8_t>(rank);
    return m;
  }

  bool IsHint() const { return type == MoveType::kHintColor || type == MoveType::kHintRank; }

  std::string ToString() const {
    switch (type) {
      case MoveType::kDiscard: return "Discard(" + std::to_string(slot) + ")";
      case MoveType::kPlay: return "Play(" + std::to_string(slot) + ")";
      case MoveType::kHintColor:
        return "HintColor(" + std::to_string(target) + "," +
               std::string(1, kColorChars[static_cast<int>(color)]) + ")";
      case MoveType::kHintRank:
        return "HintRank(" + std::to_string(target) + "," + std::to_string(rank) + ")";
    }
    return "?";
  }

  bool operator==(const Move&) const = default;
};

// Canonical action layout for a (num_players, hand_size) configuration:
//   [0, H)        Discard(slot)
//   [H, 2H)       Play(slot)
//   then one 10-wide block per other player in seating-offset order:
//   5 color hints (R, Y, G, B, W) followed by 5 rank hints (1..5).
// Total size 2H + 10(P-1).
inline constexpr int ActionSpaceSize(int num_players, int hand_size) {
  return 2 * hand_size + 10 * (num_players - 1);
}

inline int ActionIndex(const Move& move, int actor, int num_players, int hand_size) {
  switch (move.type) {
    case MoveType::kDiscard:
      if (move.slot < 0 || move.slot >= hand_size)
        throw EncodingError("discard slot out of range: " + move.ToString());
      return move.slot;
    case MoveType::kPlay:
      if (move.slot < 0 || move.slot >= hand_size)
        throw EncodingError("play slot out of range: " + move.ToString());
      return hand_size + move.slot;
    case MoveType::kHintColor:
    case MoveType::kHintRank: {
      const int offset = (move.target - actor + num_players) % num_players;
      if (move.target < 0 || move.target >= num_players || offset == 0)
        throw EncodingError("bad hint target: " + move.ToString());
      const int base = 2 * hand_size + 10 * (offset - 1);
      if (move.type == MoveType::kHintColor) return base + static_cast<int>(move.color);
      if (move.rank < 1 || move.rank > kNumRanks)
        throw EncodingError("bad hint rank: " + move.ToString());
      return base + kNumColors + (move.rank - 1);
    }
  }
  throw EncodingError("malformed move");
}

inline Move MoveFromActionIndex(int index, int actor, int num_players, int hand_size) {
  if (index < 0 || index >= ActionSpaceSize(num_players, hand_size))
    throw EncodingError("action index out of range: " + std::to_string(index));
  if (index < hand_size) return Move::Discard(index);
  if (index < 2 * hand_size) return Move::Play(index - hand_size);
  const int hint = index - 2 * hand_size;
  const int offset = hint / 10 + 1;
  const int within = hint % 10;
  const int target = (actor + offset) % num_players;
  if (within < kNumColors) return Move::HintColor(target, static_cast<Color>(within));
  return Move::HintRank(target, within - kNumColors + 1);
}

}  // namespace hanabi

#endif  // HANABI_MOVE_HPP_
