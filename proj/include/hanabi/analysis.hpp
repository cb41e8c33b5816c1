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

#ifndef HANABI_ANALYSIS_HPP_
#define HANABI_ANALYSIS_HPP_

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include <json.hpp>

#include "hanabi/agent.hpp"
#include "hanabi/encoding.hpp"
#include "hanabi/harness.hpp"
#include "hanabi/record.hpp"

namespace hanabi {

// ---------------------------------------------------------------------------
// Outcome categorization.

enum class OutcomeClass { kFailure = 0, kSuccess = 1, kSynergy = 2 };

inline const char* OutcomeClassName(OutcomeClass c) {
  switch (c) {
    case OutcomeClass::kFailure: return "Failure";
    case OutcomeClass::kSuccess: return "Success";
    case OutcomeClass::kSynergy: return "Synergy";
  }
  return "?";
}

// Failure: adhoc below both self-play means. Synergy: above both. Success:
// anything in between, boundaries included.
inline OutcomeClass ClassifyOutcome(double adhoc, double self1, double self2) {
  if (!std::isfinite(adhoc) || !std::isfinite(self1) || !std::isfinite(self2))
    throw InvalidInputError("outcome classification requires finite scores");
  const double lo = std::min(self1, self2);
  const double hi = std::max(self1, self2);
  if (adhoc < lo) return OutcomeClass::kFailure;
  if (adhoc > hi) return OutcomeClass::kSynergy;
  return OutcomeClass::kSuccess;
}

// ---------------------------------------------------------------------------
// State sampling.

struct SampledState {
  Observation obs;
  int game_index;  // position in the source record list
  int turn_index;
};

struct StateSample {
  std::vector<SampledState> states;
  int N() const { return static_cast<int>(states.size()); }
};

// Replays records and emits the acting player's observation at every
// decision point, uniformly subsampled to max_states. Records marked
// invalid are skipped; unreplayable ones raise CorruptRecordError.
inline StateSample SampleStates(const std::vector<GameRecord>& records, int max_states,
                                uint64_t seed) {
  if (max_states < 1) throw InvalidConfigError("max_states must be >= 1");

  long long total = 0;
  for (const GameRecord& r : records)
    if (r.valid) total += static_cast<long long>(r.moves.size());

  // Choose which global decision indices to keep before replaying anything.
  std::vector<long long> picked(total);
  std::iota(picked.begin(), picked.end(), 0ll);
  if (total > max_states) {
    Rng rng(SplitMix64(seed ^ 0x73616d706c657273ull));
    for (int i = 0; i < max_states; ++i) {
      const int j = i + rng.UniformInt(static_cast<int>(picked.size() - i));
      std::swap(picked[i], picked[j]);
    }
    picked.resize(max_states);
    std::sort(picked.begin(), picked.end());
  }

  StateSample sample;
  sample.states.reserve(picked.size());
  size_t next = 0;
  long long cursor = 0;
  for (size_t g = 0; g < records.size() && next < picked.size(); ++g) {
    const GameRecord& record = records[g];
    if (!record.valid) continue;
    const long long first = cursor;
    const long long last = cursor + static_cast<long long>(record.moves.size());
    cursor = last;
    if (next < picked.size() && picked[next] >= last) continue;  // nothing sampled here

    GameState state = NewGame(record.num_players, record.seed);
    for (size_t t = 0; t < record.moves.size(); ++t) {
      const RecordedMove& rm = record.moves[t];
      if (rm.player != state.current_player)
        throw CorruptRecordError("player mismatch in game " + std::to_string(g));
      if (next < picked.size() && picked[next] == first + static_cast<long long>(t)) {
        sample.states.push_back(
            {Observe(state, state.current_player), static_cast<int>(g), static_cast<int>(t)});
        ++next;
      }
      Move move;
      try {
        move = MoveFromActionIndex(rm.action_index, rm.player, state.num_players,
                                   state.hand_size);
        state = ApplyMove(state, move).first;
      } catch (const Error& e) {
        throw CorruptRecordError("game " + std::to_string(g) + ": " + e.what());
      }
    }
  }
  return sample;
}

// ---------------------------------------------------------------------------
// Behavioral difference.

struct BdResult {
  long long bd = 0;  // L1 distance between one-hot action choices, = 2 * disagreements
  long long disagreements = 0;
  double normalized = 0.0;  // disagreements / N
};

namespace internal {

inline void CheckUniformConfiguration(const StateSample& sample) {
  for (const SampledState& s : sample.states) {
    if (s.obs.num_players != sample.states.front().obs.num_players ||
        s.obs.hand_size != sample.states.front().obs.hand_size)
      throw IncompatibleAgentsError("sample mixes action-space configurations");
  }
}

// One action per (agent, state): random rules draw from an rng seeded by the
// state digest, so the choice is a pure function of the pair.
inline int ChosenAction(Agent& agent, const Observation& obs, uint64_t digest) {
  Rng rng(digest);
  const Move move = agent.Decide(obs, rng);
  return ActionIndex(move, obs.viewer, obs.num_players, obs.hand_size);
}

}  // namespace internal

inline BdResult BehavioralDifference(Agent& a, Agent& b, const StateSample& sample) {
  internal::CheckUniformConfiguration(sample);
  BdResult result;
  for (const SampledState& s : sample.states) {
    const uint64_t digest = ObservationDigest(s.obs);
    if (internal::ChosenAction(a, s.obs, digest) != internal::ChosenAction(b, s.obs, digest))
      ++result.disagreements;
  }
  result.bd = 2 * result.disagreements;
  result.normalized = sample.N() > 0
                          ? static_cast<double>(result.disagreements) / sample.N()
                          : 0.0;
  return result;
}

struct DistanceMatrix {
  std::vector<std::string> ids;
  std::vector<std::vector<double>> d;

  explicit DistanceMatrix(std::vector<std::string> agent_ids = {})
      : ids(std::move(agent_ids)), d(ids.size(), std::vector<double>(ids.size(), 0.0)) {}
};

inline DistanceMatrix BdMatrix(const std::vector<Agent*>& agents,
                               const std::vector<std::string>& ids,
                               const StateSample& sample) {
  if (agents.size() < 2) throw InvalidConfigError("bd matrix needs at least 2 agents");
  if (agents.size() != ids.size()) throw AlignmentError("agent/id count mismatch");
  DistanceMatrix matrix(ids);
  for (size_t i = 0; i < agents.size(); ++i) {
    for (size_t j = i + 1; j < agents.size(); ++j) {
      const BdResult r = BehavioralDifference(*agents[i], *agents[j], sample);
      matrix.d[i][j] = static_cast<double>(r.bd);
      matrix.d[j][i] = static_cast<double>(r.bd);
    }
  }
  return matrix;
}

// raw bd -> disagreement fraction, given the sample size it was measured on.
inline DistanceMatrix NormalizeBdMatrix(const DistanceMatrix& matrix, int sample_size) {
  if (sample_size < 1) throw InvalidConfigError("sample size must be >= 1");
  DistanceMatrix out(matrix.ids);
  for (size_t i = 0; i < matrix.ids.size(); ++i)
    for (size_t j = 0; j < matrix.ids.size(); ++j)
      out.d[i][j] = matrix.d[i][j] / (2.0 * sample_size);
  return out;
}

// ---------------------------------------------------------------------------
// Agglomerative clustering.

enum class Linkage { kSingle, kComplete, kAverage };

inline const char* LinkageName(Linkage l) {
  switch (l) {
    case Linkage::kSingle: return "single";
    case Linkage::kComplete: return "complete";
    case Linkage::kAverage: return "average";
  }
  return "?";
}

inline Linkage LinkageFromName(const std::string& name) {
  if (name == "single") return Linkage::kSingle;
  if (name == "complete") return Linkage::kComplete;
  if (name == "average") return Linkage::kAverage;
  throw InvalidConfigError("unknown linkage: " + name);
}

// Merge list in scipy convention: leaves are clusters 0..n-1, the k-th merge
// creates cluster n+k.
struct Dendrogram {
  struct Merge {
    int a;
    int b;
    double height;
  };
  std::vector<std::string> leaf_ids;
  std::vector<Merge> merges;
};

inline void ValidateDistanceMatrix(const DistanceMatrix& matrix) {
  const size_t n = matrix.ids.size();
  if (matrix.d.size() != n) throw InvalidMatrixError("distance matrix is not square");
  for (size_t i = 0; i < n; ++i) {
    if (matrix.d[i].size() != n) throw InvalidMatrixError("distance matrix is not square");
    if (std::abs(matrix.d[i][i]) > 1e-12) throw InvalidMatrixError("nonzero diagonal");
    for (size_t j = 0; j < n; ++j) {
      if (matrix.d[i][j] < 0) throw InvalidMatrixError("negative distance");
      if (std::abs(matrix.d[i][j] - matrix.d[j][i]) > 1e-9)
        throw InvalidMatrixError("asymmetric distance matrix");
    }
  }
}

inline Dendrogram HierarchicalCluster(const DistanceMatrix& matrix, Linkage linkage) {
  ValidateDistanceMatrix(matrix);
  const int n = static_cast<int>(matrix.ids.size());
  if (n < 2) throw InvalidMatrixError("clustering needs at least 2 ids");

  struct Cluster {
    int id;
    std::vector<int> members;
  };
  std::vector<Cluster> active;
  for (int i = 0; i < n; ++i) active.push_back({i, {i}});

  auto cluster_distance = [&](const Cluster& x, const Cluster& y) {
    double best = linkage == Linkage::kComplete ? 0.0
                  : linkage == Linkage::kSingle
                      ? std::numeric_limits<double>::infinity()
                      : 0.0;
    double sum = 0.0;
    for (int a : x.members) {
      for (int b : y.members) {
        const double d = matrix.d[a][b];
        switch (linkage) {
          case Linkage::kSingle: best = std::min(best, d); break;
          case Linkage::kComplete: best = std::max(best, d); break;
          case Linkage::kAverage: sum += d; break;
        }
      }
    }
    if (linkage == Linkage::kAverage)
      return sum / (static_cast<double>(x.members.size()) * y.members.size());
    return best;
  };

  Dendrogram dendrogram;
  dendrogram.leaf_ids = matrix.ids;
  int next_id = n;
  while (active.size() > 1) {
    size_t best_i = 0, best_j = 1;
    double best_d = std::numeric_limits<double>::infinity();
    // Active clusters are kept in ascending id order, so scanning i<j with a
    // strict improvement test breaks ties toward the lowest (i, j) id pair.
    for (size_t i = 0; i + 1 < active.size(); ++i) {
      for (size_t j = i + 1; j < active.size(); ++j) {
        const double d = cluster_distance(active[i], active[j]);
        if (d < best_d) {
          best_d = d;
          best_i = i;
          best_j = j;
        }
      }
    }
    Cluster merged;
    merged.id = next_id++;
    merged.members = active[best_i].members;
    merged.members.insert(merged.members.end(), active[best_j].members.begin(),
                          active[best_j].members.end());
    dendrogram.merges.push_back({active[best_i].id, active[best_j].id, best_d});
    active.erase(active.begin() + best_j);
    active.erase(active.begin() + best_i);
    active.push_back(std::move(merged));
  }
  return dendrogram;
}

// ---------------------------------------------------------------------------
// Correlation.

inline double Pearson(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2)
    throw InvalidInputError("pearson needs two equal-length series of size >= 2");
  for (double v : xs)
    if (!std::isfinite(v)) throw InvalidInputError("non-finite value in xs");
  for (double v : ys)
    if (!std::isfinite(v)) throw InvalidInputError("non-finite value in ys");
  const double n = static_cast<double>(xs.size());
  const double mean_x = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double mean_y = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mean_x;
    const double dy = ys[i] - mean_y;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0)
    throw UndefinedCorrelationError("zero variance in correlation input");
  return sxy / std::sqrt(sxx * syy);
}

struct BdAdhocPoint {
  std::string a;
  std::string b;
  double bd;
  double adhoc;
};

struct BdVsAdhocResult {
  std::vector<BdAdhocPoint> points;
  double r = 0.0;
};

// One point per unordered agent pair: (bd, ad-hoc mean score).
inline BdVsAdhocResult BdVsAdhoc(const TableView& table, const DistanceMatrix& matrix) {
  if (table.ids != matrix.ids)
    throw AlignmentError("table and distance matrix list different agents");
  BdVsAdhocResult result;
  std::vector<double> bds, scores;
  for (size_t i = 0; i < table.ids.size(); ++i) {
    for (size_t j = i + 1; j < table.ids.size(); ++j) {
      result.points.push_back({table.ids[i], table.ids[j], matrix.d[i][j], table.means[i][j]});
      bds.push_back(matrix.d[i][j]);
      scores.push_back(table.means[i][j]);
    }
  }
  result.r = Pearson(bds, scores);
  return result;
}

// ---------------------------------------------------------------------------
// Rule-trigger similarity.

struct RuleSimilarityResult {
  double fraction = 0.0;
  int states_used = 0;  // may fall short of the cap; callers should report it
  int cap = 0;
};

// Over the first `per_rule_cap` sampled states where the rule triggers, the
// fraction where the agent picks exactly the rule's move.
inline RuleSimilarityResult RuleTriggerSimilarity(const Rule& rule, Agent& agent,
                                                  const StateSample& sample,
                                                  int per_rule_cap) {
  if (!rule.IsDeterministic())
    throw InvalidInputError("rule-trigger similarity is defined for deterministic rules only");
  if (per_rule_cap < 1) throw InvalidConfigError("per_rule_cap must be >= 1");
  RuleSimilarityResult result;
  result.cap = per_rule_cap;
  int matches = 0;
  for (const SampledState& s : sample.states) {
    if (result.states_used >= per_rule_cap) break;
    if (!RuleTriggers(rule, s.obs)) continue;
    Rng rule_rng(0);  // deterministic rules never draw
    const Move rule_move = *EvaluateRule(rule, s.obs, rule_rng);
    const uint64_t digest = ObservationDigest(s.obs);
    Rng agent_rng(digest);
    if (agent.Decide(s.obs, agent_rng) == rule_move) ++matches;
    ++result.states_used;
  }
  result.fraction = result.states_used > 0
                        ? static_cast<double>(matches) / result.states_used
                        : 0.0;
  return result;
}

// ---------------------------------------------------------------------------
// Outcome table.

struct OutcomeCounts {
  // group label -> counts indexed by OutcomeClass
  std::map<std::string, std::array<int, 3>> by_group;
};

// Classifies every off-diagonal pair against the two self-play diagonal
// entries, aggregated by group labels (pairs across groups get "g1+g2").
inline OutcomeCounts OutcomeTable(const TableView& table,
                                  const std::map<std::string, std::string>& agent_groups) {
  const size_t n = table.ids.size();
  for (size_t i = 0; i < n; ++i)
    if (table.counts[i][i] <= 0)
      throw IncompleteTableError("missing self-play cell for " + table.ids[i]);
  OutcomeCounts counts;
  auto group_of = [&](const std::string& id) {
    const auto it = agent_groups.find(id);
    return it == agent_groups.end() ? std::string("all") : it->second;
  };
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      const OutcomeClass c =
          ClassifyOutcome(table.means[i][j], table.means[i][i], table.means[j][j]);
      const std::string gi = group_of(table.ids[i]);
      const std::string gj = group_of(table.ids[j]);
      const std::string label =
          gi == gj ? gi : std::min(gi, gj) + "+" + std::max(gi, gj);
      ++counts.by_group[label][static_cast<int>(c)];
    }
  }
  return counts;
}

inline TableView ToTableView(const PairwiseTable& table) {
  TableView view;
  view.ids = table.ids;
  for (size_t i = 0; i < table.ids.size(); ++i) {
    std::vector<double> means;
    std::vector<int> counts;
    for (size_t j = 0; j < table.ids.size(); ++j) {
      means.push_back(table.cells[i][j].mean);
      counts.push_back(table.cells[i][j].n);
    }
    view.means.push_back(std::move(means));
    view.counts.push_back(std::move(counts));
  }
  return view;
}

// ---------------------------------------------------------------------------
// File exports.

inline void WriteDistanceMatrixCsv(const DistanceMatrix& matrix, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidConfigError("cannot write matrix: " + path);
  out << "agent";
  for (const std::string& id : matrix.ids) out << "," << id;
  out << "\n";
  char cell[48];
  for (size_t i = 0; i < matrix.ids.size(); ++i) {
    out << matrix.ids[i];
    for (size_t j = 0; j < matrix.ids.size(); ++j) {
      std::snprintf(cell, sizeof cell, ",%.10g", matrix.d[i][j]);
      out << cell;
    }
    out << "\n";
  }
}

inline DistanceMatrix LoadDistanceMatrixCsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidConfigError("cannot open matrix: " + path);
  std::string line;
  if (!std::getline(in, line)) throw CorruptRecordError("empty matrix file: " + path);
  std::vector<std::string> header = SplitCsvLine(line);
  DistanceMatrix matrix(std::vector<std::string>(header.begin() + 1, header.end()));
  size_t row = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (row >= matrix.ids.size()) throw CorruptRecordError("extra matrix row in " + path);
    const std::vector<std::string> fields = SplitCsvLine(line);
    if (fields.size() != matrix.ids.size() + 1)
      throw CorruptRecordError("ragged matrix row in " + path);
    for (size_t j = 1; j < fields.size(); ++j) matrix.d[row][j - 1] = std::stod(fields[j]);
    ++row;
  }
  if (row != matrix.ids.size()) throw CorruptRecordError("matrix row count mismatch in " + path);
  return matrix;
}

inline void WriteDendrogramJson(const Dendrogram& dendrogram, Linkage linkage,
                                const std::string& path) {
  nlohmann::json j;
  j["linkage"] = LinkageName(linkage);
  j["leaves"] = dendrogram.leaf_ids;
  nlohmann::json merges = nlohmann::json::array();
  for (const auto& m : dendrogram.merges) merges.push_back({m.a, m.b, m.height});
  j["merges"] = std::move(merges);
  std::ofstream out(path);
  if (!out) throw InvalidConfigError("cannot write dendrogram: " + path);
  out << j.dump(2) << "\n";
}

inline void WriteScatterCsv(const BdVsAdhocResult& result, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidConfigError("cannot write scatter: " + path);
  out << "a,b,bd,adhoc\n";
  char buf[96];
  for (const BdAdhocPoint& p : result.points) {
    std::snprintf(buf, sizeof buf, "%.10g,%.10g", p.bd, p.adhoc);
    out << p.a << "," << p.b << "," << buf << "\n";
  }
}

inline void WriteOutcomeJson(const OutcomeCounts& counts, const std::string& path) {
  nlohmann::json groups;
  for (const auto& [label, c] : counts.by_group) {
    groups[label] = {{"Failure", c[0]}, {"Success", c[1]}, {"Synergy", c[2]}};
  }
  nlohmann::json j;
  j["groups"] = std::move(groups);
  std::ofstream out(path);
  if (!out) throw InvalidConfigError("cannot write outcomes: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace hanabi

#endif  // HANABI_ANALYSIS_HPP_
