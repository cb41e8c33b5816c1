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

#ifndef HANABI_BELIEF_HPP_
#define HANABI_BELIEF_HPP_

#include <array>
#include <string>

#include "hanabi/state.hpp"
#include "hanabi/types.hpp"

namespace hanabi {

// Which cards are deducted from the candidate multiset for a hidden slot.
// kInternal reasons from hint knowledge against the full deck composition;
// kOuter additionally deducts everything observable: stacked cards, the
// discard pile, and cards visible in the other players' hands.
enum class BeliefMode { kInternal, kOuter };

inline const char* BeliefModeName(BeliefMode mode) {
  return mode == BeliefMode::kInternal ? "internal" : "outer";
}

inline BeliefMode BeliefModeFromName(const std::string& name) {
  if (name == "internal") return BeliefMode::kInternal;
  if (name == "outer") return BeliefMode::kOuter;
  throw InvalidConfigError("unknown belief mode: " + name);
}

// Candidate identities for one hidden slot, weighted by remaining copies.
struct IdentityDistribution {
  std::array<int, kNumIdentities> weights{};
  int total = 0;

  int WeightOf(Card card) const { return weights[card.Index()]; }
};

// True if identity `card` can never score given public zones only: it is at
// or below its stack, or some rank between the stack height and the card has
// every copy in the discard pile.
inline bool IdentityUseless(Card card, const std::array<int, kNumColors>& fireworks,
                            const std::array<int, kNumIdentities>& discard_counts) {
  const int height = fireworks[static_cast<int>(card.color)];
  if (card.rank <= height) return true;
  for (int rank = height + 1; rank < card.rank; ++rank) {
    const Card prerequisite(card.color, rank);
    if (discard_counts[prerequisite.Index()] >= prerequisite.Multiplicity()) return true;
  }
  return false;
}

// Last remaining copy of a still-useful identity.
inline bool IdentityCritical(Card card, const std::array<int, kNumColors>& fireworks,
                             const std::array<int, kNumIdentities>& discard_counts) {
  if (IdentityUseless(card, fireworks, discard_counts)) return false;
  return card.Multiplicity() - discard_counts[card.Index()] == 1;
}

inline IdentityDistribution CandidateCounts(const Observation& obs, int slot,
                                            BeliefMode mode) {
  if (slot < 0 || slot >= obs.OwnHandSize())
    throw NoCardError("no card in slot " + std::to_string(slot));
  const CardKnowledge& knowledge = obs.hands[obs.viewer][slot].knowledge;

  std::array<int, kNumIdentities> seen{};
  if (mode == BeliefMode::kOuter) {
    for (int i = 0; i < kNumIdentities; ++i) seen[i] = obs.discard_counts[i];
    for (int c = 0; c < kNumColors; ++c) {
      for (int rank = 1; rank <= obs.fireworks[c]; ++rank)
        ++seen[Card(static_cast<Color>(c), rank).Index()];
    }
    for (int p = 0; p < obs.num_players; ++p) {
      if (p == obs.viewer) continue;
      for (const VisibleSlot& v : obs.hands[p]) ++seen[v.card->Index()];
    }
  }

  IdentityDistribution dist;
  for (int i = 0; i < kNumIdentities; ++i) {
    const Card card = CardFromIndex(i);
    if (!knowledge.Possible(card)) continue;
    const int remaining = card.Multiplicity() - seen[i];
    dist.weights[i] = remaining;
    dist.total += remaining;
  }
  return dist;
}

inline int PlayableWeight(const IdentityDistribution& dist,
                          const std::array<int, kNumColors>& fireworks) {
  int weight = 0;
  for (int c = 0; c < kNumColors; ++c) {
    if (fireworks[c] < kNumRanks)
      weight += dist.WeightOf(Card(static_cast<Color>(c), fireworks[c] + 1));
  }
  return weight;
}

inline int UselessWeight(const IdentityDistribution& dist,
                         const std::array<int, kNumColors>& fireworks,
                         const std::array<int, kNumIdentities>& discard_counts) {
  int weight = 0;
  for (int i = 0; i < kNumIdentities; ++i) {
    if (dist.weights[i] > 0 && IdentityUseless(CardFromIndex(i), fireworks, discard_counts))
      weight += dist.weights[i];
  }
  return weight;
}

// Probability the slot's card is playable right now.
inline double PlayabilityProbability(const Observation& obs, int slot, BeliefMode mode) {
  const IdentityDistribution dist = CandidateCounts(obs, slot, mode);
  return static_cast<double>(PlayableWeight(dist, obs.fireworks)) / dist.total;
}

// Probability the slot's card can never score.
inline double UselessnessProbability(const Observation& obs, int slot, BeliefMode mode) {
  const IdentityDistribution dist = CandidateCounts(obs, slot, mode);
  return static_cast<double>(UselessWeight(dist, obs.fireworks, obs.discard_counts)) /
         dist.total;
}

// Integer-exact forms of probability == 1, used by the certainty rules.
inline bool SurelyPlayable(const Observation& obs, int slot, BeliefMode mode) {
  const IdentityDistribution dist = CandidateCounts(obs, slot, mode);
  return dist.total > 0 && PlayableWeight(dist, obs.fireworks) == dist.total;
}

inline bool SurelyUseless(const Observation& obs, int slot, BeliefMode mode) {
  const IdentityDistribution dist = CandidateCounts(obs, slot, mode);
  return dist.total > 0 &&
         UselessWeight(dist, obs.fireworks, obs.discard_counts) == dist.total;
}

}  // namespace hanabi

#endif  // HANABI_BELIEF_HPP_
