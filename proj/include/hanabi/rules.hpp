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

#ifndef HANABI_RULES_HPP_
#define HANABI_RULES_HPP_

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "hanabi/belief.hpp"
#include "hanabi/rng.hpp"
#include "hanabi/state.hpp"

namespace hanabi {

enum class RuleKind {
  kPlaySafeCard,
  kOsawaDiscard,
  kTellPlayableCard,
  kTellDispensable,
  kPlayProbablySafeCard,
  kDiscardOldestFirst,
  kTellPlayableCardOuter,
  kTellUnknown,
  kPlayIfCertain,
  kHailMary,
  kTellAnyoneAboutUsefulCard,
  kTellAnyoneAboutUselessCard,
  kDiscardProbablyUselessCard,
  kTellMostInformation,
  kTellRandomly,
  kDiscardRandomly,
};

inline constexpr int kNumRuleKinds = 16;

inline const char* RuleKindName(RuleKind kind) {
  switch (kind) {
    case RuleKind::kPlaySafeCard: return "PlaySafeCard";
    case RuleKind::kOsawaDiscard: return "OsawaDiscard";
    case RuleKind::kTellPlayableCard: return "TellPlayableCard";
    case RuleKind::kTellDispensable: return "TellDispensable";
    case RuleKind::kPlayProbablySafeCard: return "PlayProbablySafeCard";
    case RuleKind::kDiscardOldestFirst: return "DiscardOldestFirst";
    case RuleKind::kTellPlayableCardOuter: return "TellPlayableCardOuter";
    case RuleKind::kTellUnknown: return "TellUnknown";
    case RuleKind::kPlayIfCertain: return "PlayIfCertain";
    case RuleKind::kHailMary: return "HailMary";
    case RuleKind::kTellAnyoneAboutUsefulCard: return "TellAnyoneAboutUsefulCard";
    case RuleKind::kTellAnyoneAboutUselessCard: return "TellAnyoneAboutUselessCard";
    case RuleKind::kDiscardProbablyUselessCard: return "DiscardProbablyUselessCard";
    case RuleKind::kTellMostInformation: return "TellMostInformation";
    case RuleKind::kTellRandomly: return "TellRandomly";
    case RuleKind::kDiscardRandomly: return "DiscardRandomly";
  }
  return "?";
}

inline bool RuleKindThresholded(RuleKind kind) {
  return kind == RuleKind::kPlayProbablySafeCard ||
         kind == RuleKind::kDiscardProbablyUselessCard;
}

inline bool RuleKindDeterministic(RuleKind kind) {
  return kind != RuleKind::kTellRandomly && kind != RuleKind::kDiscardRandomly;
}

// Card-targeted tell rules, the ones steered by a HintPolicy.
inline bool RuleKindTells(RuleKind kind) {
  return kind == RuleKind::kTellPlayableCard || kind == RuleKind::kTellPlayableCardOuter ||
         kind == RuleKind::kTellAnyoneAboutUsefulCard ||
         kind == RuleKind::kTellAnyoneAboutUselessCard || kind == RuleKind::kTellDispensable;
}

// How a card-targeted tell rule picks between the color and the rank hint.
//   kCompleteness: end with the most completely identified card, color on tie.
//   kPlayability:  maximize the target's post-hint playability certainty
//                  (public-zone belief), then completeness, then color.
//   kRandomDimension: a fair coin between the admissible dimensions.
enum class HintPolicy { kCompleteness, kPlayability, kRandomDimension };

// One trigger->move primitive. `mode` is inherited from the owning agent.
// min_lives / max_info are optional composition-level trigger conditions
// (the classic IfRule wrappers): a guarded rule only fires while
// life_tokens >= min_lives and info_tokens <= max_info.
struct Rule {
  RuleKind kind = RuleKind::kPlaySafeCard;
  std::optional<double> threshold;
  BeliefMode mode = BeliefMode::kOuter;
  int min_lives = 0;
  int max_info = kMaxInfoTokens;
  HintPolicy policy = HintPolicy::kCompleteness;

  bool IsDeterministic() const {
    if (!RuleKindDeterministic(kind)) return false;
    return policy != HintPolicy::kRandomDimension || !RuleKindTells(kind);
  }
  bool Guarded() const { return min_lives > 0 || max_info < kMaxInfoTokens; }

  // Stable identifier of the primitive, e.g. "PlayProbablySafeCard(0.6)".
  // Composition guards are not part of the primitive's identity.
  std::string BaseName() const {
    std::string name = RuleKindName(kind);
    if (threshold) {
      std::string t = std::to_string(*threshold);
      while (t.size() > 3 && t.back() == '0') t.pop_back();
      if (t.back() == '.') t.push_back('0');
      name += "(" + t + ")";
    }
    return name;
  }

  // Full identifier including guards, e.g. "PlayProbablySafeCard(0.6)@lives>1".
  std::string Name() const {
    std::string name = BaseName();
    if (min_lives > 0) name += "@lives>" + std::to_string(min_lives - 1);
    if (max_info < kMaxInfoTokens) name += "@info<" + std::to_string(max_info + 1);
    return name;
  }
};

inline Rule MakeRule(RuleKind kind, std::optional<double> threshold = std::nullopt,
                     BeliefMode mode = BeliefMode::kOuter) {
  if (RuleKindThresholded(kind) != threshold.has_value())
    throw InvalidConfigError(std::string(RuleKindName(kind)) +
                             (threshold ? " takes no threshold" : " requires a threshold"));
  if (threshold && (*threshold < 0.0 || *threshold > 1.0))
    throw InvalidConfigError("rule threshold must be in [0,1]");
  return Rule{kind, threshold, mode};
}

inline Rule ParseRule(const std::string& text, BeliefMode mode = BeliefMode::kOuter) {
  std::string base = text;
  int min_lives = 0;
  int max_info = kMaxInfoTokens;
  while (true) {
    const auto at = base.rfind('@');
    if (at == std::string::npos) break;
    const std::string guard = base.substr(at + 1);
    base = base.substr(0, at);
    try {
      if (guard.rfind("lives>", 0) == 0)
        min_lives = std::stoi(guard.substr(6)) + 1;
      else if (guard.rfind("info<", 0) == 0)
        max_info = std::stoi(guard.substr(5)) - 1;
      else
        throw std::invalid_argument(guard);
    } catch (const std::exception&) {
      throw InvalidConfigError("malformed rule guard: " + text);
    }
  }

  std::string name = base;
  std::optional<double> threshold;
  if (const auto open = base.find('('); open != std::string::npos) {
    if (base.back() != ')') throw InvalidConfigError("malformed rule string: " + text);
    name = base.substr(0, open);
    const std::string arg = base.substr(open + 1, base.size() - open - 2);
    try {
      size_t used = 0;
      threshold = std::stod(arg, &used);
      if (used != arg.size()) throw std::invalid_argument(arg);
    } catch (const std::exception&) {
      throw InvalidConfigError("malformed rule threshold: " + text);
    }
  }
  for (int k = 0; k < kNumRuleKinds; ++k) {
    const RuleKind kind = static_cast<RuleKind>(k);
    if (name == RuleKindName(kind)) {
      Rule rule = MakeRule(kind, threshold, mode);
      rule.min_lives = min_lives;
      rule.max_info = max_info;
      return rule;
    }
  }
  throw InvalidConfigError("unknown rule: " + text);
}

// The deterministic rule instances of the shipped agent set, in table order.
// The two random primitives are excluded (no single action to compare with).
inline std::vector<Rule> DeterministicPaperRules(BeliefMode mode = BeliefMode::kOuter) {
  return {
      MakeRule(RuleKind::kPlaySafeCard, std::nullopt, mode),
      MakeRule(RuleKind::kOsawaDiscard, std::nullopt, mode),
      MakeRule(RuleKind::kTellPlayableCard, std::nullopt, mode),
      MakeRule(RuleKind::kTellDispensable, std::nullopt, mode),
      MakeRule(RuleKind::kPlayProbablySafeCard, 0.25, mode),
      MakeRule(RuleKind::kDiscardOldestFirst, std::nullopt, mode),
      MakeRule(RuleKind::kTellPlayableCardOuter, std::nullopt, mode),
      MakeRule(RuleKind::kTellUnknown, std::nullopt, mode),
      MakeRule(RuleKind::kPlayIfCertain, std::nullopt, mode),
      MakeRule(RuleKind::kHailMary, std::nullopt, mode),
      MakeRule(RuleKind::kPlayProbablySafeCard, 0.6, mode),
      MakeRule(RuleKind::kTellAnyoneAboutUsefulCard, std::nullopt, mode),
      MakeRule(RuleKind::kDiscardProbablyUselessCard, 0.99, mode),
      MakeRule(RuleKind::kTellAnyoneAboutUselessCard, std::nullopt, mode),
      MakeRule(RuleKind::kTellMostInformation, std::nullopt, mode),
      MakeRule(RuleKind::kDiscardProbablyUselessCard, 0.0, mode),
  };
}

namespace internal {

inline std::vector<Move> LegalHints(const Observation& obs) {
  std::vector<Move> hints;
  for (const Move& m : obs.legal_moves)
    if (m.IsHint()) hints.push_back(m);
  return hints;
}

inline std::vector<Move> LegalDiscards(const Observation& obs) {
  std::vector<Move> discards;
  for (const Move& m : obs.legal_moves)
    if (m.type == MoveType::kDiscard) discards.push_back(m);
  return discards;
}

// Knowledge of the target's whole hand after a hypothetical hint.
inline std::vector<CardKnowledge> SimulateHint(const Observation& obs, const Move& hint) {
  const auto& hand = obs.hands[hint.target];
  std::vector<CardKnowledge> after;
  after.reserve(hand.size());
  for (const VisibleSlot& slot : hand) {
    CardKnowledge k = slot.knowledge;
    if (hint.type == MoveType::kHintColor)
      k.ApplyColorHint(hint.color, slot.card->color == hint.color);
    else
      k.ApplyRankHint(hint.rank, slot.card->rank == hint.rank);
    after.push_back(k);
  }
  return after;
}

// A hint is "new information" when it changes some mask bit or hinted flag
// anywhere in the target's hand.
inline bool HintAddsInformation(const Observation& obs, const Move& hint) {
  const std::vector<CardKnowledge> after = SimulateHint(obs, hint);
  const auto& hand = obs.hands[hint.target];
  for (size_t s = 0; s < hand.size(); ++s)
    if (!(after[s] == hand[s].knowledge)) return true;
  return false;
}

inline int NewlyInformedSlots(const Observation& obs, const Move& hint) {
  const std::vector<CardKnowledge> after = SimulateHint(obs, hint);
  const auto& hand = obs.hands[hint.target];
  int informed = 0;
  for (size_t s = 0; s < hand.size(); ++s)
    if (!(after[s] == hand[s].knowledge)) ++informed;
  return informed;
}

// Playability of a hidden card under `knowledge` as the target player will
// see it, counting public zones only (stacks + discard pile).
inline double PublicPlayability(const Observation& obs, const CardKnowledge& knowledge) {
  int total = 0;
  int playable = 0;
  for (int i = 0; i < kNumIdentities; ++i) {
    const Card card = CardFromIndex(i);
    if (!knowledge.Possible(card)) continue;
    int remaining = card.Multiplicity() - obs.discard_counts[i];
    if (obs.fireworks[static_cast<int>(card.color)] >= card.rank) --remaining;
    if (remaining <= 0) continue;
    total += remaining;
    if (card.rank == obs.fireworks[static_cast<int>(card.color)] + 1) playable += remaining;
  }
  return total > 0 ? static_cast<double>(playable) / total : 0.0;
}

// Picks the color or rank hint for one specific card of another player,
// ranked by the rule's hint policy. `require_new` demands the hint change
// the target's knowledge; `require_complete` additionally demands the card
// end fully identified.
inline std::optional<Move> ChooseHintForCard(const Observation& obs, int target, int slot,
                                             bool require_new, bool require_complete,
                                             HintPolicy policy, Rng& rng) {
  const Card card = *obs.hands[target][slot].card;
  const Move options[2] = {Move::HintColor(target, card.color),
                           Move::HintRank(target, card.rank)};
  std::vector<Move> admissible;
  for (const Move& hint : options) {
    const bool adds = HintAddsInformation(obs, hint);
    if (require_new && !adds) continue;
    if (require_complete) {
      const CardKnowledge after = SimulateHint(obs, hint)[slot];
      if (!(after.FullyKnown() && adds)) continue;
    }
    admissible.push_back(hint);
  }
  if (admissible.empty()) return std::nullopt;
  if (policy == HintPolicy::kRandomDimension)
    return admissible[rng.UniformInt(static_cast<int>(admissible.size()))];
  std::optional<Move> best;
  double best_playability = -1.0;
  int best_completeness = -1;
  for (const Move& hint : admissible) {
    const CardKnowledge after = SimulateHint(obs, hint)[slot];
    const int completeness = (after.ColorKnown() ? 1 : 0) + (after.RankKnown() ? 1 : 0);
    const double playability =
        policy == HintPolicy::kPlayability ? PublicPlayability(obs, after) : 0.0;
    if (playability > best_playability ||
        (playability == best_playability && completeness > best_completeness)) {
      best_playability = playability;
      best_completeness = completeness;
      best = hint;
    }
  }
  return best;
}

// Scans other players' cards in the canonical candidate order: slot index
// first, then seating offset. Returns the hint for the first card for which
// `wants(target, slot, card)` holds and an admissible hint exists.
template <typename Predicate>
std::optional<Move> FirstCardHint(const Observation& obs, bool require_new,
                                  bool require_complete, HintPolicy policy, Rng& rng,
                                  Predicate wants) {
  if (LegalHints(obs).empty()) return std::nullopt;
  size_t max_cards = 0;
  for (int p = 0; p < obs.num_players; ++p)
    if (p != obs.viewer) max_cards = std::max(max_cards, obs.hands[p].size());
  for (size_t slot = 0; slot < max_cards; ++slot) {
    for (int offset = 1; offset < obs.num_players; ++offset) {
      const int target = (obs.viewer + offset) % obs.num_players;
      if (slot >= obs.hands[target].size()) continue;
      const Card card = *obs.hands[target][slot].card;
      if (!wants(target, static_cast<int>(slot), card)) continue;
      if (auto hint = ChooseHintForCard(obs, target, static_cast<int>(slot), require_new,
                                        require_complete, policy, rng))
        return hint;
    }
  }
  return std::nullopt;
}

inline bool CardPlayableNow(const Observation& obs, Card card) {
  return card.rank == obs.fireworks[static_cast<int>(card.color)] + 1;
}

// Slot with the highest playability probability, ties to the lowest slot.
inline std::pair<int, double> BestPlayabilitySlot(const Observation& obs, BeliefMode mode) {
  int best_slot = 0;
  double best = -1.0;
  for (int s = 0; s < obs.OwnHandSize(); ++s) {
    const double p = PlayabilityProbability(obs, s, mode);
    if (p > best) {
      best = p;
      best_slot = s;
    }
  }
  return {best_slot, best};
}

inline std::pair<int, double> BestUselessnessSlot(const Observation& obs, BeliefMode mode) {
  int best_slot = 0;
  double best = -1.0;
  for (int s = 0; s < obs.OwnHandSize(); ++s) {
    const double p = UselessnessProbability(obs, s, mode);
    if (p > best) {
      best = p;
      best_slot = s;
    }
  }
  return {best_slot, best};
}

}  // namespace internal

// Returns the rule's move when it triggers on this observation, or nothing.
// Deterministic rules never touch `rng`; the random rules and tell rules
// under the random-dimension policy draw at most one uniform index from it.
inline std::optional<Move> EvaluateRule(const Rule& rule, const Observation& obs, Rng& rng) {
  using namespace internal;
  if (obs.life_tokens < rule.min_lives || obs.info_tokens > rule.max_info)
    return std::nullopt;
  const BeliefMode mode = rule.mode;
  switch (rule.kind) {
    case RuleKind::kPlaySafeCard:
      for (int s = 0; s < obs.OwnHandSize(); ++s)
        if (SurelyPlayable(obs, s, mode)) return Move::Play(s);
      return std::nullopt;

    case RuleKind::kPlayIfCertain:
      for (int s = 0; s < obs.OwnHandSize(); ++s) {
        const CardKnowledge& k = obs.hands[obs.viewer][s].knowledge;
        if (k.FullyKnown() && CardPlayableNow(obs, k.KnownCard())) return Move::Play(s);
      }
      return std::nullopt;

    case RuleKind::kPlayProbablySafeCard: {
      // A probabilistic play never risks the last life: below certainty the
      // rule stands down once a single misplay would end the game.
      const double threshold = obs.life_tokens > 1 ? *rule.threshold : 1.0;
      const auto [slot, p] = BestPlayabilitySlot(obs, mode);
      if (p >= threshold) return Move::Play(slot);
      return std::nullopt;
    }

    case RuleKind::kHailMary: {
      if (obs.deck_size != 0 || obs.life_tokens <= 1) return std::nullopt;
      const auto [slot, p] = BestPlayabilitySlot(obs, mode);
      (void)p;  // threshold 0.0: any best slot qualifies
      return Move::Play(slot);
    }

    case RuleKind::kOsawaDiscard: {
      if (LegalDiscards(obs).empty()) return std::nullopt;
      for (int s = 0; s < obs.OwnHandSize(); ++s)
        if (SurelyUseless(obs, s, mode)) return Move::Discard(s);
      return std::nullopt;
    }

    case RuleKind::kDiscardOldestFirst:
      if (LegalDiscards(obs).empty()) return std::nullopt;
      return Move::Discard(0);

    case RuleKind::kDiscardProbablyUselessCard: {
      if (LegalDiscards(obs).empty()) return std::nullopt;
      const auto [slot, p] = BestUselessnessSlot(obs, mode);
      if (p >= *rule.threshold) return Move::Discard(slot);
      return std::nullopt;
    }

    case RuleKind::kDiscardRandomly: {
      const std::vector<Move> discards = LegalDiscards(obs);
      if (discards.empty()) return std::nullopt;
      return discards[rng.UniformInt(static_cast<int>(discards.size()))];
    }

    case RuleKind::kTellPlayableCard:
      return FirstCardHint(obs, /*require_new=*/false, /*require_complete=*/false,
                           rule.policy, rng,
                           [&](int, int, Card card) { return CardPlayableNow(obs, card); });

    case RuleKind::kTellPlayableCardOuter:
    case RuleKind::kTellAnyoneAboutUsefulCard:
      return FirstCardHint(obs, /*require_new=*/true, /*require_complete=*/false,
                           rule.policy, rng,
                           [&](int, int, Card card) { return CardPlayableNow(obs, card); });

    case RuleKind::kTellAnyoneAboutUselessCard:
      return FirstCardHint(obs, /*require_new=*/true, /*require_complete=*/false,
                           rule.policy, rng,
                           [&](int, int, Card card) {
                             return IdentityUseless(card, obs.fireworks, obs.discard_counts);
                           });

    case RuleKind::kTellDispensable:
      return FirstCardHint(obs, /*require_new=*/true, /*require_complete=*/true,
                           rule.policy, rng,
                           [&](int, int, Card card) {
                             return IdentityCritical(card, obs.fireworks, obs.discard_counts);
                           });

    case RuleKind::kTellUnknown:
      for (const Move& hint : LegalHints(obs))
        if (HintAddsInformation(obs, hint)) return hint;
      return std::nullopt;

    case RuleKind::kTellMostInformation: {
      std::optional<Move> best;
      int best_informed = 0;
      for (const Move& hint : LegalHints(obs)) {
        const int informed = NewlyInformedSlots(obs, hint);
        if (informed > best_informed) {
          best_informed = informed;
          best = hint;
        }
      }
      return best;
    }

    case RuleKind::kTellRandomly: {
      const std::vector<Move> hints = LegalHints(obs);
      if (hints.empty()) return std::nullopt;
      return hints[rng.UniformInt(static_cast<int>(hints.size()))];
    }
  }
  return std::nullopt;
}

// True iff EvaluateRule would produce a move. Deterministic for every rule,
// including the random ones (their trigger is availability, not the sample).
inline bool RuleTriggers(const Rule& rule, const Observation& obs) {
  if (obs.life_tokens < rule.min_lives || obs.info_tokens > rule.max_info) return false;
  switch (rule.kind) {
    case RuleKind::kTellRandomly:
      return !internal::LegalHints(obs).empty();
    case RuleKind::kDiscardRandomly:
      return !internal::LegalDiscards(obs).empty();
    default: {
      Rng unused(0);
      return EvaluateRule(rule, obs, unused).has_value();
    }
  }
}

}  // namespace hanabi

#endif  // HANABI_RULES_HPP_
