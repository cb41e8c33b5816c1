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

#ifndef HANABI_RECORD_HPP_
#define HANABI_RECORD_HPP_

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hanabi/state.hpp"

namespace hanabi {

inline constexpr int kRecordSchemaVersion = 1;

struct RecordedMove {
  int player;
  int action_index;
};

// One game per JSON line. A record plus the named rng recipe is enough to
// replay the game bit-exactly; no card identities are stored.
struct GameRecord {
  int schema_version = kRecordSchemaVersion;
  std::string rng = kRngId;
  uint64_t seed = 0;
  int num_players = 0;
  std::vector<std::string> agents;
  std::vector<RecordedMove> moves;
  int score = 0;
  TerminalStatus terminal = TerminalStatus::kOngoing;
  bool valid = true;          // false when an external agent violated protocol
  std::string violation;
};

inline std::string ToJsonLine(const GameRecord& record) {
  nlohmann::json j;
  j["schema_version"] = record.schema_version;
  j["rng"] = record.rng;
  j["seed"] = record.seed;
  j["num_players"] = record.num_players;
  j["agents"] = record.agents;
  nlohmann::json moves = nlohmann::json::array();
  for (const RecordedMove& m : record.moves)
    moves.push_back({{"player", m.player}, {"action_index", m.action_index}});
  j["moves"] = std::move(moves);
  j["score"] = record.score;
  j["terminal"] = TerminalStatusName(record.terminal);
  if (!record.valid) {
    j["valid"] = false;
    j["violation"] = record.violation;
  }
  return j.dump();
}

inline TerminalStatus TerminalStatusFromName(const std::string& name) {
  for (TerminalStatus s : {TerminalStatus::kOngoing, TerminalStatus::kPerfect,
                           TerminalStatus::kDeckExhausted, TerminalStatus::kLivesExhausted})
    if (name == TerminalStatusName(s)) return s;
  throw CorruptRecordError("unknown terminal status: " + name);
}

inline GameRecord RecordFromJsonLine(const std::string& line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw CorruptRecordError(std::string("unparseable record line: ") + e.what());
  }
  try {
    GameRecord record;
    record.schema_version = j.at("schema_version").get<int>();
    if (record.schema_version != kRecordSchemaVersion)
      throw CorruptRecordError("unsupported schema_version");
    record.rng = j.value("rng", kRngId);
    record.seed = j.at("seed").get<uint64_t>();
    record.num_players = j.at("num_players").get<int>();
    record.agents = j.at("agents").get<std::vector<std::string>>();
    for (const auto& m : j.at("moves"))
      record.moves.push_back(
          {m.at("player").get<int>(), m.at("action_index").get<int>()});
    record.score = j.at("score").get<int>();
    record.terminal = TerminalStatusFromName(j.at("terminal").get<std::string>());
    record.valid = j.value("valid", true);
    record.violation = j.value("violation", std::string());
    return record;
  } catch (const nlohmann::json::exception& e) {
    throw CorruptRecordError(std::string("bad record fields: ") + e.what());
  }
}

inline void WriteRecords(const std::string& path, const std::vector<GameRecord>& records) {
  std::ofstream out(path);
  if (!out) throw InvalidConfigError("cannot write records file: " + path);
  for (const GameRecord& r : records) out << ToJsonLine(r) << "\n";
}

inline std::vector<GameRecord> ReadRecords(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidConfigError("cannot open records file: " + path);
  std::vector<GameRecord> records;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      records.push_back(RecordFromJsonLine(line));
    } catch (const CorruptRecordError& e) {
      throw CorruptRecordError(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return records;
}

// Replays a record from its seed, checking legality of every move and the
// stored score/terminal status. Returns the final state.
inline GameState ReplayRecord(const GameRecord& record) {
  if (record.rng != kRngId)
    throw CorruptRecordError("record requires rng '" + record.rng + "', this build has '" +
                             kRngId + "'");
  if (!record.valid) throw CorruptRecordError("record is marked invalid: " + record.violation);
  GameState state = NewGame(record.num_players, record.seed);
  for (size_t i = 0; i < record.moves.size(); ++i) {
    const RecordedMove& rm = record.moves[i];
    const std::string where = "move " + std::to_string(i) + " of seed " +
                              std::to_string(record.seed);
    if (rm.player != state.current_player)
      throw CorruptRecordError("player mismatch at " + where);
    Move move;
    try {
      move = MoveFromActionIndex(rm.action_index, rm.player, state.num_players,
                                 state.hand_size);
    } catch (const EncodingError& e) {
      throw CorruptRecordError(std::string(e.what()) + " at " + where);
    }
    try {
      state = ApplyMove(state, move).first;
    } catch (const Error& e) {
      throw CorruptRecordError(std::string(e.what()) + " at " + where);
    }
  }
  if (Terminal(state) != record.terminal)
    throw CorruptRecordError("terminal status mismatch for seed " + std::to_string(record.seed));
  if (Score(state) != record.score)
    throw CorruptRecordError("score mismatch for seed " + std::to_string(record.seed) +
                             ": replayed " + std::to_string(Score(state)) + ", stored " +
                             std::to_string(record.score));
  return state;
}

}  // namespace hanabi

#endif  // HANABI_RECORD_HPP_
