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

#ifndef HANABI_ENCODING_HPP_
#define HANABI_ENCODING_HPP_

#include <string>

#include <json.hpp>

#include "hanabi/rng.hpp"
#include "hanabi/state.hpp"

namespace hanabi {

// Canonical observation encoding: the wire format of the external-agent
// protocol and the byte source for state digests. Keys are emitted in
// sorted order, so the serialized form is deterministic.
inline nlohmann::json CanonicalObservationJson(const Observation& obs) {
  nlohmann::json j;
  j["viewer"] = obs.viewer;
  j["num_players"] = obs.num_players;
  j["hand_size"] = obs.hand_size;
  j["current_player"] = obs.current_player;
  j["deck_size"] = obs.deck_size;
  j["info_tokens"] = obs.info_tokens;
  j["life_tokens"] = obs.life_tokens;
  j["fireworks"] = obs.fireworks;
  if (obs.turns_remaining_after_empty)
    j["turns_remaining"] = *obs.turns_remaining_after_empty;
  else
    j["turns_remaining"] = nullptr;

  nlohmann::json discard = nlohmann::json::array();
  for (int i = 0; i < kNumIdentities; ++i)
    for (int k = 0; k < obs.discard_counts[i]; ++k) discard.push_back(CardFromIndex(i).ToString());
  j["discard"] = std::move(discard);

  nlohmann::json hands = nlohmann::json::array();
  for (int p = 0; p < obs.num_players; ++p) {
    nlohmann::json hand = nlohmann::json::array();
    for (const VisibleSlot& slot : obs.hands[p]) {
      nlohmann::json s;
      s["card"] = slot.card ? nlohmann::json(slot.card->ToString()) : nlohmann::json(nullptr);
      s["color_mask"] = slot.knowledge.color_mask;
      s["rank_mask"] = slot.knowledge.rank_mask;
      s["color_hinted"] = slot.knowledge.color_hinted;
      s["rank_hinted"] = slot.knowledge.rank_hinted;
      hand.push_back(std::move(s));
    }
    hands.push_back(std::move(hand));
  }
  j["hands"] = std::move(hands);

  nlohmann::json legal = nlohmann::json::array();
  for (const Move& m : obs.legal_moves)
    legal.push_back(ActionIndex(m, obs.viewer, obs.num_players, obs.hand_size));
  j["legal_actions"] = std::move(legal);
  return j;
}

// 64-bit digest of the canonical encoding; seeds the per-state rng used by
// the behavioral-difference queries.
inline uint64_t ObservationDigest(const Observation& obs) {
  return Fnv1a64(CanonicalObservationJson(obs).dump());
}

}  // namespace hanabi

#endif  // HANABI_ENCODING_HPP_
