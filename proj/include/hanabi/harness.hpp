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

#ifndef HANABI_HARNESS_HPP_
#define HANABI_HARNESS_HPP_

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <memory>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hanabi/agent.hpp"
#include "hanabi/record.hpp"

namespace hanabi {

using AgentFactory = std::function<std::unique_ptr<Agent>()>;

struct ScoreSummary {
  int n = 0;  // scored games; invalid games are excluded, not zeroed
  double mean = 0.0;
  double std_dev = 0.0;
  std::array<int, kMaxScore + 1> histogram{};
  int invalid = 0;

  void Add(int score) {
    ++n;
    ++histogram[score];
    sum_ += score;
    sum_sq_ += static_cast<double>(score) * score;
    Refresh();
  }

  void Merge(const ScoreSummary& other) {
    n += other.n;
    invalid += other.invalid;
    sum_ += other.sum_;
    sum_sq_ += other.sum_sq_;
    for (int s = 0; s <= kMaxScore; ++s) histogram[s] += other.histogram[s];
    Refresh();
  }

 private:
  void Refresh() {
    mean = n > 0 ? sum_ / n : 0.0;
    std_dev = n > 1 ? std::sqrt(std::max(0.0, (sum_sq_ - n * mean * mean) / (n - 1))) : 0.0;
  }
  double sum_ = 0.0;
  double sum_sq_ = 0.0;
};

// Symmetric by construction: cell[i][j] merges both seat orders.
struct PairwiseTable {
  std::vector<std::string> ids;
  std::vector<std::vector<ScoreSummary>> cells;

  explicit PairwiseTable(std::vector<std::string> agent_ids = {})
      : ids(std::move(agent_ids)),
        cells(ids.size(), std::vector<ScoreSummary>(ids.size())) {}
};

// Plays one game to the end with the given seat order. Agent decisions that
// need randomness draw from a per-game stream derived from the deal seed, so
// a (seats, seed) pair is fully deterministic. A protocol violation from an
// external agent aborts the game and marks the record invalid.
inline GameRecord PlayGame(const std::vector<Agent*>& seats, uint64_t seed) {
  GameRecord record;
  record.seed = seed;
  record.num_players = static_cast<int>(seats.size());
  for (Agent* agent : seats) record.agents.push_back(agent->Id());

  GameState state = NewGame(record.num_players, seed);
  Rng move_rng(SplitMix64(seed ^ 0x6d6f766572756e73ull));
  while (Terminal(state) == TerminalStatus::kOngoing) {
    const int actor = state.current_player;
    const Observation obs = Observe(state, actor);
    Move move;
    try {
      move = seats[actor]->Decide(obs, move_rng);
    } catch (const ProtocolViolationError& e) {
      record.valid = false;
      record.violation = e.what();
      record.score = 0;
      record.terminal = TerminalStatus::kOngoing;
      return record;
    }
    record.moves.push_back(
        {actor, ActionIndex(move, actor, state.num_players, state.hand_size)});
    state = ApplyMove(state, move).first;
  }
  record.score = Score(state);
  record.terminal = Terminal(state);
  return record;
}

// n games with seeds base_seed..base_seed+n-1, alternating seat order each
// game. Seats alternate in a canonical order keyed by agent id, so
// RunPairing(a, b) and RunPairing(b, a) produce the same games. Each worker
// thread builds its own agent instances; scores reduce by game index, so the
// summary is independent of jobs.
inline ScoreSummary RunPairing(const AgentFactory& a, const AgentFactory& b, int n_games,
                               uint64_t base_seed, int jobs = 1,
                               std::vector<GameRecord>* records_out = nullptr,
                               bool fix_seat_order = false) {
  if (n_games < 1) throw InvalidConfigError("n_games must be >= 1");
  jobs = std::max(1, std::min(jobs, n_games));

  std::vector<GameRecord> records(n_games);
  auto run_range = [&](int worker) {
    std::unique_ptr<Agent> first = a();
    std::unique_ptr<Agent> second = b();
    const bool canonical = fix_seat_order || first->Id() <= second->Id();
    for (int g = worker; g < n_games; g += jobs) {
      const bool swap = !fix_seat_order && (g % 2 == 1);
      Agent* seat0 = (canonical != swap) ? first.get() : second.get();
      Agent* seat1 = (canonical != swap) ? second.get() : first.get();
      records[g] = PlayGame({seat0, seat1}, base_seed + g);
    }
  };
  if (jobs == 1) {
    run_range(0);
  } else {
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) workers.emplace_back(run_range, w);
    for (std::thread& t : workers) t.join();
  }

  ScoreSummary summary;
  for (GameRecord& record : records) {
    if (record.valid)
      summary.Add(record.score);
    else
      ++summary.invalid;
    if (records_out) records_out->push_back(std::move(record));
  }
  return summary;
}

// All diagonal (self-play) and upper-triangle pairings. Self-play cells use
// two independent instances of the agent. Per-cell seeds derive from
// (base_seed, i, j), so the table is reproducible cell by cell.
inline PairwiseTable RunTournament(const std::vector<std::string>& ids,
                                   const std::vector<AgentFactory>& factories, int n_games,
                                   uint64_t base_seed, int jobs = 1) {
  if (ids.size() < 2) throw InvalidConfigError("tournament needs at least 2 agents");
  PairwiseTable table(ids);
  for (size_t i = 0; i < ids.size(); ++i) {
    for (size_t j = i; j < ids.size(); ++j) {
      const uint64_t pair_seed = SplitMix64(SplitMix64(base_seed ^ (i + 1)) ^ ((j + 1) << 20));
      ScoreSummary cell = RunPairing(factories[i], factories[j], n_games, pair_seed, jobs);
      table.cells[i][j] = cell;
      table.cells[j][i] = cell;
    }
  }
  return table;
}

inline void WriteTableCsv(const PairwiseTable& table, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidConfigError("cannot write table: " + path);
  out << "agent";
  for (const std::string& id : table.ids) out << "," << id;
  out << "\n";
  char cell[64];
  for (size_t i = 0; i < table.ids.size(); ++i) {
    out << table.ids[i];
    for (size_t j = 0; j < table.ids.size(); ++j) {
      const ScoreSummary& s = table.cells[i][j];
      std::snprintf(cell, sizeof cell, ",%.4f;%.4f;%d", s.mean, s.std_dev, s.n);
      out << cell;
    }
    out << "\n";
  }
}

// Minimal table view parsed back from CSV; enough for classification and
// correlation runs.
struct TableView {
  std::vector<std::string> ids;
  std::vector<std::vector<double>> means;
  std::vector<std::vector<int>> counts;
};

inline std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> fields;
  size_t start = 0;
  while (true) {
    const size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

inline TableView LoadTableCsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidConfigError("cannot open table: " + path);
  std::string line;
  if (!std::getline(in, line)) throw CorruptRecordError("empty table file: " + path);
  TableView view;
  const std::vector<std::string> header = SplitCsvLine(line);
  view.ids.assign(header.begin() + 1, header.end());
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> fields = SplitCsvLine(line);
    if (fields.size() != view.ids.size() + 1)
      throw CorruptRecordError("ragged table row in " + path);
    std::vector<double> row_means;
    std::vector<int> row_counts;
    for (size_t j = 1; j < fields.size(); ++j) {
      double mean = 0.0, stddev = 0.0;
      int n = 0;
      if (std::sscanf(fields[j].c_str(), "%lf;%lf;%d", &mean, &stddev, &n) != 3)
        throw CorruptRecordError("bad table cell '" + fields[j] + "' in " + path);
      row_means.push_back(mean);
      row_counts.push_back(n);
    }
    view.means.push_back(std::move(row_means));
    view.counts.push_back(std::move(row_counts));
  }
  if (view.means.size() != view.ids.size())
    throw CorruptRecordError("table row count mismatch in " + path);
  return view;
}

inline void WriteSummaryJson(const PairwiseTable& table, uint64_t base_seed, int n_games,
                             const std::string& path) {
  nlohmann::json j;
  j["agents"] = table.ids;
  j["base_seed"] = base_seed;
  j["games_per_pairing"] = n_games;
  nlohmann::json cells = nlohmann::json::array();
  for (size_t i = 0; i < table.ids.size(); ++i) {
    for (size_t k = i; k < table.ids.size(); ++k) {
      const ScoreSummary& s = table.cells[i][k];
      nlohmann::json cell;
      cell["a"] = table.ids[i];
      cell["b"] = table.ids[k];
      cell["n"] = s.n;
      cell["invalid"] = s.invalid;
      cell["mean"] = s.mean;
      cell["std_dev"] = s.std_dev;
      cell["histogram"] = s.histogram;
      cells.push_back(std::move(cell));
    }
  }
  j["cells"] = std::move(cells);
  std::ofstream out(path);
  if (!out) throw InvalidConfigError("cannot write summary: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace hanabi

#endif  // HANABI_HARNESS_HPP_
