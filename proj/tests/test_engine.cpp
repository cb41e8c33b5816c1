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

#include <algorithm>
#include <array>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "hanabi/state.hpp"

using namespace hanabi;

namespace {

// Full-multiset audit: deck + hands + discard + cards implied by the stacks
// must always equal the 50-card deck composition.
std::array<int, kNumIdentities> CountAllZones(const GameState& state) {
  std::array<int, kNumIdentities> counts{};
  for (const Card& c : state.deck) ++counts[c.Index()];
  for (const auto& hand : state.hands)
    for (const HandSlot& slot : hand) ++counts[slot.card.Index()];
  for (int i = 0; i < kNumIdentities; ++i) counts[i] += state.discard_counts[i];
  for (int c = 0; c < kNumColors; ++c)
    for (int r = 1; r <= state.fireworks[c]; ++r)
      ++counts[Card(static_cast<Color>(c), r).Index()];
  return counts;
}

bool ConservationHolds(const GameState& state) {
  const auto counts = CountAllZones(state);
  for (int i = 0; i < kNumIdentities; ++i)
    if (counts[i] != CardFromIndex(i).Multiplicity()) return false;
  return true;
}

// A small hand-built 2-player state for targeted cases. Deck contents are
// arbitrary but conservation-consistent is not required by the ops under
// test here.
GameState ForgeTwoPlayerState(std::vector<Card> hand0, std::vector<Card> hand1,
                              int info_tokens = kMaxInfoTokens) {
  GameState state;
  state.num_players = 2;
  state.hand_size = 5;
  state.seed = 0;
  state.hands.resize(2);
  for (Card c : hand0) state.hands[0].push_back({c, CardKnowledge{}});
  for (Card c : hand1) state.hands[1].push_back({c, CardKnowledge{}});
  state.info_tokens = info_tokens;
  state.deck = {Card(Color::kBlue, 3), Card(Color::kYellow, 2)};
  return state;
}

}  // namespace

TEST_CASE("deck composition is three 1s, two 2-4s, one 5 per color") {
  const GameState state = NewGame(2, 1);
  REQUIRE(ConservationHolds(state));
  int total = 0;
  for (int i = 0; i < kNumIdentities; ++i) total += CardFromIndex(i).Multiplicity();
  REQUIRE(total == kDeckCards);
  REQUIRE(RankMultiplicity(1) == 3);
  REQUIRE(RankMultiplicity(3) == 2);
  REQUIRE(RankMultiplicity(5) == 1);
}

TEST_CASE("new_game deals per player count") {
  const GameState two = NewGame(2, 42);
  REQUIRE(two.hands[0].size() == 5);
  REQUIRE(two.hands[1].size() == 5);
  REQUIRE(two.DeckSize() == 40);
  REQUIRE(two.info_tokens == 8);
  REQUIRE(two.life_tokens == 3);
  REQUIRE(two.current_player == 0);
  for (int h : two.fireworks) REQUIRE(h == 0);

  const GameState four = NewGame(4, 42);
  REQUIRE(four.hands[0].size() == 4);
  REQUIRE(four.DeckSize() == 34);

  REQUIRE_THROWS_AS(NewGame(1, 0), InvalidConfigError);
  REQUIRE_THROWS_AS(NewGame(6, 0), InvalidConfigError);
}

TEST_CASE("new_game with the same seed deals identically") {
  const GameState a = NewGame(2, 777);
  const GameState b = NewGame(2, 777);
  REQUIRE(a.deck == b.deck);
  for (int p = 0; p < 2; ++p)
    for (size_t s = 0; s < a.hands[p].size(); ++s)
      REQUIRE(a.hands[p][s].card == b.hands[p][s].card);
  const GameState c = NewGame(2, 778);
  REQUIRE(a.deck != c.deck);
}

TEST_CASE("legal moves at game start have no discards and five plays") {
  const GameState state = NewGame(2, 3);
  const std::vector<Move> moves = LegalMoves(state, 0);
  int plays = 0, discards = 0, hints = 0;
  for (const Move& m : moves) {
    if (m.type == MoveType::kPlay) ++plays;
    if (m.type == MoveType::kDiscard) ++discards;
    if (m.IsHint()) ++hints;
  }
  REQUIRE(plays == 5);
  REQUIRE(discards == 0);  // tokens are full
  REQUIRE(hints > 0);
  REQUIRE_THROWS_AS(LegalMoves(state, 1), NotYourTurnError);
}

TEST_CASE("no hints are legal without information tokens") {
  GameState state = ForgeTwoPlayerState({Card(Color::kRed, 1)}, {Card(Color::kRed, 1)},
                                        /*info_tokens=*/0);
  for (const Move& m : LegalMoves(state, 0)) REQUIRE_FALSE(m.IsHint());
}

TEST_CASE("hint color options match exactly the colors present") {
  // Opponent holds {R1, R3, G4, W1, W2}: color hints must be exactly {R,G,W}.
  GameState state = ForgeTwoPlayerState(
      {Card(Color::kBlue, 1), Card(Color::kBlue, 2), Card(Color::kBlue, 3),
       Card(Color::kYellow, 1), Card(Color::kYellow, 2)},
      {Card(Color::kRed, 1), Card(Color::kRed, 3), Card(Color::kGreen, 4),
       Card(Color::kWhite, 1), Card(Color::kWhite, 2)});
  std::set<Color> colors;
  for (const Move& m : LegalMoves(state, 0))
    if (m.type == MoveType::kHintColor) colors.insert(m.color);
  REQUIRE(colors == std::set<Color>{Color::kRed, Color::kGreen, Color::kWhite});
}

TEST_CASE("playing a matching card stacks it without losing a life") {
  GameState state = ForgeTwoPlayerState({Card(Color::kRed, 1), Card(Color::kGreen, 2)},
                                        {Card(Color::kBlue, 1), Card(Color::kBlue, 2)});
  const auto [next, event] = ApplyMove(state, Move::Play(0));
  REQUIRE(event.type == Event::Type::kPlaySuccess);
  REQUIRE(next.fireworks[static_cast<int>(Color::kRed)] == 1);
  REQUIRE(next.life_tokens == 3);
  // Drew from the deck: hand refilled, new card appended on the right.
  REQUIRE(next.hands[0].size() == 2);
  REQUIRE(next.hands[0][0].card == Card(Color::kGreen, 2));
  REQUIRE(next.current_player == 1);
}

TEST_CASE("misplaying costs a life and discards the card") {
  GameState state = ForgeTwoPlayerState({Card(Color::kRed, 3), Card(Color::kGreen, 2)},
                                        {Card(Color::kBlue, 1), Card(Color::kBlue, 2)});
  const auto [next, event] = ApplyMove(state, Move::Play(0));
  REQUIRE(event.type == Event::Type::kPlayFail);
  REQUIRE(next.life_tokens == 2);
  REQUIRE(next.fireworks[static_cast<int>(Color::kRed)] == 0);
  REQUIRE(next.discard_counts[Card(Color::kRed, 3).Index()] == 1);
}

TEST_CASE("completing a five-stack refunds an information token, capped") {
  GameState state = ForgeTwoPlayerState({Card(Color::kRed, 5), Card(Color::kGreen, 2)},
                                        {Card(Color::kBlue, 1), Card(Color::kBlue, 2)},
                                        /*info_tokens=*/4);
  state.fireworks[static_cast<int>(Color::kRed)] = 4;
  const auto [next, event] = ApplyMove(state, Move::Play(0));
  REQUIRE(event.type == Event::Type::kPlaySuccess);
  REQUIRE(event.completed_stack);
  REQUIRE(next.info_tokens == 5);

  GameState full = ForgeTwoPlayerState({Card(Color::kRed, 5)}, {Card(Color::kBlue, 1)});
  full.fireworks[static_cast<int>(Color::kRed)] = 4;
  const auto [next2, event2] = ApplyMove(full, Move::Play(0));
  REQUIRE(next2.info_tokens == kMaxInfoTokens);
  REQUIRE_FALSE(event2.completed_stack);
}

TEST_CASE("discarding regains a token and is illegal at full tokens") {
  GameState state = ForgeTwoPlayerState({Card(Color::kRed, 1)}, {Card(Color::kBlue, 1)},
                                        /*info_tokens=*/7);
  const auto [next, event] = ApplyMove(state, Move::Discard(0));
  REQUIRE(event.type == Event::Type::kDiscard);
  REQUIRE(next.info_tokens == 8);
  REQUIRE(next.discard_counts[Card(Color::kRed, 1).Index()] == 1);
  REQUIRE_THROWS_AS(ApplyMove(next, Move::Discard(0)), IllegalMoveError);
}

TEST_CASE("rank hints mark matching slots positively and the rest negatively") {
  GameState state = ForgeTwoPlayerState(
      {Card(Color::kRed, 2)},
      {Card(Color::kRed, 1), Card(Color::kGreen, 3), Card(Color::kWhite, 1)});
  const auto [next, event] = ApplyMove(state, Move::HintRank(1, 1));
  REQUIRE(event.touched_slots == std::vector<int>{0, 2});
  REQUIRE(next.info_tokens == 7);
  const auto& hand = next.hands[1];
  REQUIRE(hand[0].knowledge.rank_hinted);
  REQUIRE(hand[0].knowledge.RankKnown());
  REQUIRE(hand[0].knowledge.KnownRank() == 1);
  REQUIRE(hand[2].knowledge.RankKnown());
  REQUIRE_FALSE(hand[1].knowledge.rank_hinted);
  REQUIRE_FALSE(hand[1].knowledge.RankPossible(1));
  REQUIRE(hand[1].knowledge.RankPossible(3));
}

TEST_CASE("hints must touch a card and cannot target yourself") {
  GameState state = ForgeTwoPlayerState({Card(Color::kRed, 1)}, {Card(Color::kBlue, 1)});
  REQUIRE_THROWS_AS(ApplyMove(state, Move::HintColor(1, Color::kRed)), IllegalMoveError);
  REQUIRE_THROWS_AS(ApplyMove(state, Move::HintColor(0, Color::kRed)), IllegalMoveError);
  REQUIRE_NOTHROW(ApplyMove(state, Move::HintColor(1, Color::kBlue)));
}

TEST_CASE("apply_move leaves the input state untouched on error") {
  const GameState state = ForgeTwoPlayerState({Card(Color::kRed, 1)}, {Card(Color::kBlue, 1)});
  const GameState before = state;
  REQUIRE_THROWS_AS(ApplyMove(state, Move::Discard(0)), IllegalMoveError);  // tokens full
  REQUIRE(state.info_tokens == before.info_tokens);
  REQUIRE(state.hands[0].size() == before.hands[0].size());
}

TEST_CASE("terminal status detection") {
  GameState state = NewGame(2, 5);
  REQUIRE(Terminal(state) == TerminalStatus::kOngoing);

  GameState perfect = state;
  perfect.fireworks = {5, 5, 5, 5, 5};
  REQUIRE(Terminal(perfect) == TerminalStatus::kPerfect);
  REQUIRE(Score(perfect) == 25);

  GameState dead = state;
  dead.life_tokens = 0;
  REQUIRE(Terminal(dead) == TerminalStatus::kLivesExhausted);
  REQUIRE(Score(dead) == 0);

  GameState partial = state;
  partial.fireworks = {3, 0, 1, 0, 0};
  REQUIRE(Score(partial) == 4);
}

TEST_CASE("last round gives every player exactly one more turn") {
  // Two cards left in the forged deck; force play-downs until it empties.
  GameState state = ForgeTwoPlayerState(
      {Card(Color::kRed, 1), Card(Color::kRed, 2)},
      {Card(Color::kYellow, 1), Card(Color::kGreen, 1)});
  REQUIRE(state.DeckSize() == 2);
  state = ApplyMove(state, Move::Play(0)).first;  // p0 draws, deck = 1
  REQUIRE_FALSE(state.turns_remaining_after_empty.has_value());
  state = ApplyMove(state, Move::Play(0)).first;  // p1 draws last card
  REQUIRE(state.turns_remaining_after_empty == 2);
  REQUIRE(Terminal(state) == TerminalStatus::kOngoing);
  state = ApplyMove(state, Move::Play(0)).first;  // p0 final turn
  REQUIRE(state.turns_remaining_after_empty == 1);
  REQUIRE(Terminal(state) == TerminalStatus::kOngoing);
  state = ApplyMove(state, Move::Play(0)).first;  // p1 final turn
  REQUIRE(state.turns_remaining_after_empty == 0);
  REQUIRE(Terminal(state) == TerminalStatus::kDeckExhausted);
  REQUIRE_THROWS_AS(ApplyMove(state, Move::Play(0)), TerminalStateError);
  REQUIRE_THROWS_AS(LegalMoves(state, state.current_player), TerminalStateError);
}

TEST_CASE("action index layout matches the canonical basis") {
  // 2 players, hand size 5.
  REQUIRE(ActionIndex(Move::Discard(0), 0, 2, 5) == 0);
  REQUIRE(ActionIndex(Move::Play(0), 0, 2, 5) == 5);
  REQUIRE(ActionIndex(Move::HintColor(1, Color::kRed), 0, 2, 5) == 10);
  REQUIRE(ActionIndex(Move::HintRank(1, 5), 0, 2, 5) == 19);
  REQUIRE(ActionSpaceSize(2, 5) == 20);
  REQUIRE(ActionSpaceSize(3, 5) == 30);
  REQUIRE(ActionSpaceSize(5, 4) == 48);
  // Encoding is relative to the actor's seat.
  REQUIRE(ActionIndex(Move::HintRank(0, 5), 1, 2, 5) == 19);
  REQUIRE_THROWS_AS(ActionIndex(Move::HintColor(0, Color::kRed), 0, 2, 5), EncodingError);
  REQUIRE_THROWS_AS(ActionIndex(Move::Play(5), 0, 2, 5), EncodingError);
}

TEST_CASE("action index round-trips over the whole space") {
  for (int players = 2; players <= 5; ++players) {
    const int hand = HandSizeForPlayers(players);
    for (int actor = 0; actor < players; ++actor) {
      for (int index = 0; index < ActionSpaceSize(players, hand); ++index) {
        const Move move = MoveFromActionIndex(index, actor, players, hand);
        REQUIRE(ActionIndex(move, actor, players, hand) == index);
      }
    }
    REQUIRE_THROWS_AS(MoveFromActionIndex(ActionSpaceSize(players, hand), 0, players, hand),
                      EncodingError);
  }
}

TEST_CASE("observations hide own cards and expose legal moves for the actor") {
  const GameState state = NewGame(3, 11);
  const Observation mine = Observe(state, 0);
  REQUIRE(mine.viewer == 0);
  for (const VisibleSlot& slot : mine.hands[0]) REQUIRE_FALSE(slot.card.has_value());
  for (const VisibleSlot& slot : mine.hands[1]) REQUIRE(slot.card.has_value());
  REQUIRE(mine.legal_moves == LegalMoves(state, 0));

  const Observation theirs = Observe(state, 1);
  REQUIRE(theirs.legal_moves.empty());  // not their turn
  for (const VisibleSlot& slot : theirs.hands[1]) REQUIRE_FALSE(slot.card.has_value());
}

TEST_CASE("random legal play preserves conservation, token bounds, termination") {
  std::mt19937_64 fuzz(2024);
  for (int game = 0; game < 200; ++game) {
    const int players = 2 + static_cast<int>(fuzz() % 4);
    GameState state = NewGame(players, fuzz());
    const int turn_bound = players * (50 + 8 + 3 + players);
    int turns = 0;
    while (Terminal(state) == TerminalStatus::kOngoing) {
      const std::vector<Move> moves = LegalMoves(state, state.current_player);
      REQUIRE_FALSE(moves.empty());
      state = ApplyMove(state, moves[fuzz() % moves.size()]).first;
      REQUIRE(ConservationHolds(state));
      REQUIRE(state.info_tokens >= 0);
      REQUIRE(state.info_tokens <= kMaxInfoTokens);
      REQUIRE(state.life_tokens >= 0);
      REQUIRE(state.life_tokens <= kMaxLifeTokens);
      REQUIRE(++turns <= turn_bound);
    }
    REQUIRE(Score(state) >= 0);
    REQUIRE(Score(state) <= kMaxScore);
  }
}

TEST_CASE("hint knowledge never excludes the true identity") {
  std::mt19937_64 fuzz(99);
  for (int game = 0; game < 40; ++game) {
    GameState state = NewGame(2 + static_cast<int>(fuzz() % 4), fuzz());
    while (Terminal(state) == TerminalStatus::kOngoing) {
      const std::vector<Move> moves = LegalMoves(state, state.current_player);
      state = ApplyMove(state, moves[fuzz() % moves.size()]).first;
      for (const auto& hand : state.hands)
        for (const HandSlot& slot : hand) REQUIRE(slot.knowledge.Possible(slot.card));
    }
  }
}
