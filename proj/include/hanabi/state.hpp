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

#ifndef HANABI_STATE_HPP_
#define HANABI_STATE_HPP_

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "hanabi/knowledge.hpp"
#include "hanabi/move.hpp"
#include "hanabi/rng.hpp"
#include "hanabi/types.hpp"

namespace hanabi {

struct HandSlot {
  Card card;
  CardKnowledge knowledge;
};

// Resolved effect of one applied move, kept in the state history.
struct Event {
  enum class Type { kPlaySuccess, kPlayFail, kDiscard, kHint };
  Type type = Type::kHint;
  std::optional<Card> card;          // the played or discarded card
  std::optional<Card> drawn;         // replacement card, if the deck had one
  std::vector<int> touched_slots;    // slots matching a hint
  bool completed_stack = false;      // rank-5 play that refunded a token
};

struct HistoryItem {
  int player;
  Move move;
  Event event;
};

// Full referee view. Plain value type: copy freely, no hidden sharing.
struct GameState {
  int num_players = 0;
  int hand_size = 0;
  uint64_t seed = 0;
  std::vector<Card> deck;  // back() is the next card drawn
  std::vector<std::vector<HandSlot>> hands;
  std::array<int, kNumColors> fireworks{};
  int info_tokens = kMaxInfoTokens;
  int life_tokens = kMaxLifeTokens;
  std::array<int, kNumIdentities> discard_counts{};
  int current_player = 0;
  // Set to num_players the moment the last card is drawn; each subsequent
  // turn decrements it and the game ends at zero. Everyone, including the
  // player who drew the last card, gets exactly one more turn.
  std::optional<int> turns_remaining_after_empty;
  std::vector<HistoryItem> history;

  int DeckSize() const { return static_cast<int>(deck.size()); }
};

// A player's partial view. The viewer's own card identities are absent.
struct VisibleSlot {
  std::optional<Card> card;  // nullopt for the viewer's own slots
  CardKnowledge knowledge;
};

struct Observation {
  int viewer = 0;
  int num_players = 0;
  int hand_size = 0;
  std::vector<std::vector<VisibleSlot>> hands;  // indexed by absolute seat
  std::array<int, kNumColors> fireworks{};
  int info_tokens = 0;
  int life_tokens = 0;
  std::array<int, kNumIdentities> discard_counts{};
  int deck_size = 0;
  int current_player = 0;
  std::optional<int> turns_remaining_after_empty;
  std::vector<Move> legal_moves;  // exact when viewer == current_player, else empty

  const std::vector<VisibleSlot>& Hand(int player) const { return hands[player]; }
  int OwnHandSize() const { return static_cast<int>(hands[viewer].size()); }
  int ActionSpace() const { return ActionSpaceSize(num_players, hand_size); }
};

inline TerminalStatus Terminal(const GameState& state) {
  int total = 0;
  for (int h : state.fireworks) total += h;
  if (total == kMaxScore) return TerminalStatus::kPerfect;
  if (state.life_tokens == 0) return TerminalStatus::kLivesExhausted;
  if (state.turns_remaining_after_empty && *state.turns_remaining_after_empty == 0)
    return TerminalStatus::kDeckExhausted;
  return TerminalStatus::kOngoing;
}

// 0 after a bomb-out, otherwise the sum of stack heights. Callable mid-game.
inline int Score(const GameState& state) {
  if (Terminal(state) == TerminalStatus::kLivesExhausted) return 0;
  int total = 0;
  for (int h : state.fireworks) total += h;
  return total;
}

inline GameState NewGame(int num_players, uint64_t seed) {
  if (num_players < kMinPlayers || num_players > kMaxPlayers)
    throw InvalidConfigError("num_players must be in [2,5], got " + std::to_string(num_players));
  GameState state;
  state.num_players = num_players;
  state.hand_size = HandSizeForPlayers(num_players);
  state.seed = seed;

  state.deck.reserve(kDeckCards);
  for (int i = 0; i < kNumIdentities; ++i) {
    const Card card = CardFromIndex(i);
    for (int copy = 0; copy < card.Multiplicity(); ++copy) state.deck.push_back(card);
  }
  Rng rng(seed);
  rng.Shuffle(state.deck);

  state.hands.resize(num_players);
  for (int p = 0; p < num_players; ++p) {
    for (int k = 0; k < state.hand_size; ++k) {
      state.hands[p].push_back(HandSlot{state.deck.back(), CardKnowledge{}});
      state.deck.pop_back();
    }
  }
  return state;
}

namespace internal {

inline int CountMatches(const std::vector<HandSlot>& hand, const Move& hint) {
  int n = 0;
  for (const HandSlot& slot : hand) {
    if (hint.type == MoveType::kHintColor ? slot.card.color == hint.color
                                          : slot.card.rank == hint.rank)
      ++n;
  }
  return n;
}

// Empty string means legal, otherwise the violated rule.
inline std::string LegalityViolation(const GameState& state, const Move& move) {
  const auto& hand = state.hands[state.current_player];
  switch (move.type) {
    case MoveType::kPlay:
      if (move.slot < 0 || move.slot >= static_cast<int>(hand.size()))
        return "play slot is empty";
      return "";
    case MoveType::kDiscard:
      if (move.slot < 0 || move.slot >= static_cast<int>(hand.size()))
        return "discard slot is empty";
      if (state.info_tokens >= kMaxInfoTokens)
        return "cannot discard at full information tokens";
      return "";
    case MoveType::kHintColor:
    case MoveType::kHintRank:
      if (state.info_tokens < 1) return "no information token available";
      if (move.target < 0 || move.target >= state.num_players)
        return "hint target out of range";
      if (move.target == state.current_player) return "cannot hint yourself";
      if (move.type == MoveType::kHintRank && (move.rank < 1 || move.rank > kNumRanks))
        return "hint rank out of range";
      if (CountMatches(state.hands[move.target], move) == 0)
        return "hint matches no card in target hand";
      return "";
  }
  return "malformed move";
}

}  // namespace internal

// Moves for `player`, ordered by canonical action index. Throws if the game
// is over or it is not this player's turn.
inline std::vector<Move> LegalMoves(const GameState& state, int player) {
  if (Terminal(state) != TerminalStatus::kOngoing)
    throw TerminalStateError("game is over");
  if (player != state.current_player)
    throw NotYourTurnError("player " + std::to_string(player) + " is not to move");

  std::vector<Move> moves;
  const int hand_cards = static_cast<int>(state.hands[player].size());
  if (state.info_tokens < kMaxInfoTokens) {
    for (int s = 0; s < hand_cards; ++s) moves.push_back(Move::Discard(s));
  }
  for (int s = 0; s < hand_cards; ++s) moves.push_back(Move::Play(s));
  if (state.info_tokens >= 1) {
    for (int offset = 1; offset < state.num_players; ++offset) {
      const int target = (player + offset) % state.num_players;
      for (int c = 0; c < kNumColors; ++c) {
        const Move hint = Move::HintColor(target, static_cast<Color>(c));
        if (internal::CountMatches(state.hands[target], hint) > 0) moves.push_back(hint);
      }
      for (int r = 1; r <= kNumRanks; ++r) {
        const Move hint = Move::HintRank(target, r);
        if (internal::CountMatches(state.hands[target], hint) > 0) moves.push_back(hint);
      }
    }
  }
  return moves;
}

// Applies one legal move and returns the successor state plus the resolved
// effect. The input state is never mutated; illegal moves throw.
inline std::pair<GameState, Event> ApplyMove(const GameState& state, const Move& move) {
  if (Terminal(state) != TerminalStatus::kOngoing)
    throw TerminalStateError("game is over");
  if (const std::string violation = internal::LegalityViolation(state, move);
      !violation.empty())
    throw IllegalMoveError(violation + ": " + move.ToString());

  GameState next = state;
  Event event;
  const int actor = next.current_player;
  auto& hand = next.hands[actor];

  auto remove_slot = [&hand](int slot) {
    Card card = hand[slot].card;
    hand.erase(hand.begin() + slot);  // remaining cards shift left
    return card;
  };
  auto draw = [&next, &hand, &event]() {
    if (next.deck.empty()) return;
    event.drawn = next.deck.back();
    hand.push_back(HandSlot{next.deck.back(), CardKnowledge{}});  // newest on the right
    next.deck.pop_back();
  };

  switch (move.type) {
    case MoveType::kPlay: {
      const Card card = remove_slot(move.slot);
      event.card = card;
      auto& stack = next.fireworks[static_cast<int>(card.color)];
      if (card.rank == stack + 1) {
        ++stack;
        event.type = Event::Type::kPlaySuccess;
        if (card.rank == kNumRanks && next.info_tokens < kMaxInfoTokens) {
          ++next.info_tokens;
          event.completed_stack = true;
        }
      } else {
        ++next.discard_counts[card.Index()];
        --next.life_tokens;
        event.type = Event::Type::kPlayFail;
      }
      draw();
      break;
    }
    case MoveType::kDiscard: {
      const Card card = remove_slot(move.slot);
      event.card = card;
      ++next.discard_counts[card.Index()];
      ++next.info_tokens;
      event.type = Event::Type::kDiscard;
      draw();
      break;
    }
    case MoveType::kHintColor:
    case MoveType::kHintRank: {
      --next.info_tokens;
      event.type = Event::Type::kHint;
      auto& target_hand = next.hands[move.target];
      for (int s = 0; s < static_cast<int>(target_hand.size()); ++s) {
        const bool matches = move.type == MoveType::kHintColor
                                 ? target_hand[s].card.color == move.color
                                 : target_hand[s].card.rank == move.rank;
        if (move.type == MoveType::kHintColor)
          target_hand[s].knowledge.ApplyColorHint(move.color, matches);
        else
          target_hand[s].knowledge.ApplyRankHint(move.rank, matches);
        if (matches) event.touched_slots.push_back(s);
      }
      break;
    }
  }

  if (next.deck.empty()) {
    if (!next.turns_remaining_after_empty)
      next.turns_remaining_after_empty = next.num_players;
    else
      --*next.turns_remaining_after_empty;
  }
  next.current_player = (actor + 1) % next.num_players;
  next.history.push_back(HistoryItem{actor, move, event});
  return {std::move(next), std::move(event)};
}

inline Observation Observe(const GameState& state, int viewer) {
  if (viewer < 0 || viewer >= state.num_players)
    throw InvalidConfigError("viewer out of range");
  Observation obs;
  obs.viewer = viewer;
  obs.num_players = state.num_players;
  obs.hand_size = state.hand_size;
  obs.fireworks = state.fireworks;
  obs.info_tokens = state.info_tokens;
  obs.life_tokens = state.life_tokens;
  obs.discard_counts = state.discard_counts;
  obs.deck_size = state.DeckSize();
  obs.current_player = state.current_player;
  obs.turns_remaining_after_empty = state.turns_remaining_after_empty;

  obs.hands.resize(state.num_players);
  for (int p = 0; p < state.num_players; ++p) {
    for (const HandSlot& slot : state.hands[p]) {
      VisibleSlot v;
      if (p != viewer) v.card = slot.card;
      v.knowledge = slot.knowledge;
      obs.hands[p].push_back(v);
    }
  }
  if (viewer == state.current_player && Terminal(state) == TerminalStatus::kOngoing)
    obs.legal_moves = LegalMoves(state, viewer);
  return obs;
}

}  // namespace hanabi

#endif  // HANABI_STATE_HPP_
