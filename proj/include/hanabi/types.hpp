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

#ifndef HANABI_TYPES_HPP_
#define HANABI_TYPES_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hanabi {

inline constexpr int kNumColors = 5;
inline constexpr int kNumRanks = 5;
inline constexpr int kNumIdentities = kNumColors * kNumRanks;
inline constexpr int kDeckCards = 50;
inline constexpr int kMaxInfoTokens = 8;
inline constexpr int kMaxLifeTokens = 3;
inline constexpr int kMaxScore = 25;
inline constexpr int kMinPlayers = 2;
inline constexpr int kMaxPlayers = 5;

enum class Color : int8_t { kRed = 0, kYellow = 1, kGreen = 2, kBlue = 3, kWhite = 4 };

inline constexpr std::array<char, kNumColors> kColorChars = {'R', 'Y', 'G', 'B', 'W'};

// Copies per identity: three 1s, two each of 2-4, one 5.
inline constexpr int RankMultiplicity(int rank) {
  return rank == 1 ? 3 : rank == 5 ? 1 : 2;
}

// 5 cards in hand for 2-3 players, 4 for 4-5 players.
inline constexpr int HandSizeForPlayers(int num_players) {
  return num_players <= 3 ? 5 : 4;
}

struct Card {
  Color color;
  int8_t rank;  // 1..5

  constexpr Card(Color c, int r) : color(c), rank(static_cast<int8_t>(r)) {}
  constexpr Card() : color(Color::kRed), rank(1) {}

  // Dense index in [0, 25): color-major, rank-minor.
  constexpr int Index() const {
    return static_cast<int>(color) * kNumRanks + (rank - 1);
  }
  constexpr int Multiplicity() const { return RankMultiplicity(rank); }

  std::string ToString() const {
    return std::string(1, kColorChars[static_cast<int>(color)]) + std::to_string(rank);
  }

  auto operator<=>(const Card&) const = default;
};

inline constexpr Card CardFromIndex(int index) {
  return Card(static_cast<Color>(index / kNumRanks), index % kNumRanks + 1);
}

enum class TerminalStatus { kOngoing, kPerfect, kDeckExhausted, kLivesExhausted };

inline const char* TerminalStatusName(TerminalStatus s) {
  switch (s) {
    case TerminalStatus::kOngoing: return "ongoing";
    case TerminalStatus::kPerfect: return "perfect";
    case TerminalStatus::kDeckExhausted: return "deck_exhausted";
    case TerminalStatus::kLivesExhausted: return "lives_exhausted";
  }
  return "unknown";
}

// Error taxonomy. Everything user- or data-triggerable throws one of these;
// internal invariant breaks use assertions instead.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidConfigError : Error { using Error::Error; };
struct TerminalStateError : Error { using Error::Error; };
struct NotYourTurnError : Error { using Error::Error; };
struct IllegalMoveError : Error { using Error::Error; };
struct NoCardError : Error { using Error::Error; };
struct EncodingError : Error { using Error::Error; };
struct ProtocolViolationError : Error { using Error::Error; };
struct CorruptRecordError : Error { using Error::Error; };
struct InvalidInputError : Error { using Error::Error; };
struct InvalidMatrixError : Error { using Error::Error; };
struct UndefinedCorrelationError : Error { using Error::Error; };
struct IncompatibleAgentsError : Error { using Error::Error; };
struct AlignmentError : Error { using Error::Error; };
struct IncompleteTableError : Error { using Error::Error; };
struct UnknownAgentError : Error { using Error::Error; };

}  // namespace hanabi

#endif  // HANABI_TYPES_HPP_
