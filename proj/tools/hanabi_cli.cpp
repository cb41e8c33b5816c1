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

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hanabi/analysis.hpp"
#include "hanabi/external_agent.hpp"
#include "hanabi/harness.hpp"

namespace {

using namespace hanabi;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

AgentFactory FactoryFor(const std::string& token) {
  return [token] { return MakeAgent(token); };
}

// Builtin names form the rule-based group; everything else is external.
std::map<std::string, std::string> GroupsFor(const std::vector<std::string>& ids) {
  std::map<std::string, std::string> groups;
  const auto& builtin = BuiltinAgentNames();
  for (const std::string& id : ids) {
    const bool rule_based = std::find(builtin.begin(), builtin.end(), id) != builtin.end();
    groups[id] = rule_based ? "rule-based" : "external";
  }
  return groups;
}

// Resolving a token early surfaces unknown-agent typos as usage errors.
void ValidateAgentTokens(const std::vector<std::string>& tokens) {
  for (const std::string& token : tokens) {
    if (IsExternalAgentToken(token)) continue;  // command spawns lazily
    MakeAgent(token);
  }
}

int EffectiveJobs(int jobs, const std::vector<std::string>& tokens) {
  for (const std::string& token : tokens)
    if (IsExternalAgentToken(token)) return 1;  // one in-flight request per handle
  return jobs;
}

std::vector<GameRecord> LoadAllRecords(const std::vector<std::string>& paths) {
  std::vector<GameRecord> records;
  for (const std::string& path : paths) {
    std::vector<GameRecord> part = ReadRecords(path);
    records.insert(records.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
  }
  return records;
}

// Pools an even share of states from each agent's self-play games.
StateSample PooledSelfPlaySample(const std::vector<std::string>& agents, int games,
                                 int max_states, uint64_t seed) {
  StateSample pooled;
  const int share = std::max(1, max_states / static_cast<int>(agents.size()));
  for (size_t i = 0; i < agents.size(); ++i) {
    const uint64_t agent_seed = SplitMix64(seed ^ (0xA11CE + i));
    std::vector<GameRecord> records;
    RunPairing(FactoryFor(agents[i]), FactoryFor(agents[i]), games, agent_seed, 1, &records);
    StateSample part = SampleStates(records, share, SplitMix64(agent_seed ^ 0xBD));
    pooled.states.insert(pooled.states.end(), std::make_move_iterator(part.states.begin()),
                         std::make_move_iterator(part.states.end()));
  }
  return pooled;
}

int RunSim(const std::vector<std::string>& agents, int games, uint64_t seed,
           const std::string& out, int jobs, bool fix_seat_order) {
  ValidateAgentTokens(agents);
  jobs = EffectiveJobs(jobs, agents);
  std::vector<GameRecord> records;
  if (agents.size() == 2) {
    RunPairing(FactoryFor(agents[0]), FactoryFor(agents[1]), games, seed, jobs, &records,
               fix_seat_order);
  } else {
    std::vector<std::unique_ptr<Agent>> seats;
    for (const std::string& token : agents) seats.push_back(MakeAgent(token));
    std::vector<Agent*> raw;
    for (auto& s : seats) raw.push_back(s.get());
    for (int g = 0; g < games; ++g) records.push_back(PlayGame(raw, seed + g));
  }
  WriteRecords(out, records);
  int invalid = 0;
  for (const GameRecord& r : records)
    if (!r.valid) ++invalid;
  std::printf("wrote %zu records to %s (%d invalid)\n", records.size(), out.c_str(), invalid);
  return kExitOk;
}

int RunTournamentCmd(const std::vector<std::string>& agents, int games, uint64_t seed,
                     const std::string& out, const std::string& summary, int jobs) {
  ValidateAgentTokens(agents);
  jobs = EffectiveJobs(jobs, agents);
  std::vector<AgentFactory> factories;
  for (const std::string& token : agents) factories.push_back(FactoryFor(token));
  const PairwiseTable table = RunTournament(agents, factories, games, seed, jobs);
  WriteTableCsv(table, out);
  if (!summary.empty()) WriteSummaryJson(table, seed, games, summary);
  std::printf("wrote %zux%zu pairwise table to %s\n", agents.size(), agents.size(),
              out.c_str());
  return kExitOk;
}

int RunClassify(const std::string& table_path, const std::string& out,
                const std::string& format) {
  const TableView table = LoadTableCsv(table_path);
  const OutcomeCounts counts = OutcomeTable(table, GroupsFor(table.ids));
  if (format == "json") {
    WriteOutcomeJson(counts, out);
  } else {
    std::ofstream file(out);
    file << "group,failure,success,synergy\n";
    for (const auto& [label, c] : counts.by_group)
      file << label << "," << c[0] << "," << c[1] << "," << c[2] << "\n";
  }
  for (const auto& [label, c] : counts.by_group)
    std::printf("%s: Failure %d, Success %d, Synergy %d\n", label.c_str(), c[0], c[1], c[2]);
  return kExitOk;
}

int RunBd(const std::vector<std::string>& agents, const std::vector<std::string>& record_paths,
          int games, int max_states, uint64_t seed, const std::string& out,
          const std::string& normalized_out) {
  ValidateAgentTokens(agents);
  const StateSample sample =
      record_paths.empty()
          ? PooledSelfPlaySample(agents, games, max_states, seed)
          : SampleStates(LoadAllRecords(record_paths), max_states, seed);
  std::vector<std::unique_ptr<Agent>> instances;
  std::vector<Agent*> raw;
  for (const std::string& token : agents) {
    instances.push_back(MakeAgent(token));
    raw.push_back(instances.back().get());
  }
  const DistanceMatrix matrix = BdMatrix(raw, agents, sample);
  WriteDistanceMatrixCsv(matrix, out);
  if (!normalized_out.empty())
    WriteDistanceMatrixCsv(NormalizeBdMatrix(matrix, sample.N()), normalized_out);
  std::printf("bd matrix over %d states written to %s\n", sample.N(), out.c_str());
  return kExitOk;
}

int RunCluster(const std::string& matrix_path, const std::string& linkage_name,
               const std::string& out) {
  const DistanceMatrix matrix = LoadDistanceMatrixCsv(matrix_path);
  const Linkage linkage = LinkageFromName(linkage_name);
  const Dendrogram dendro = HierarchicalCluster(matrix, linkage);
  WriteDendrogramJson(dendro, linkage, out);
  std::printf("dendrogram (%s linkage, %zu merges) written to %s\n", linkage_name.c_str(),
              dendro.merges.size(), out.c_str());
  return kExitOk;
}

int RunCorr(const std::string& table_path, const std::string& matrix_path,
            const std::string& out, const std::string& format) {
  const TableView table = LoadTableCsv(table_path);
  const DistanceMatrix matrix = LoadDistanceMatrixCsv(matrix_path);
  const BdVsAdhocResult result = BdVsAdhoc(table, matrix);
  if (format == "json") {
    nlohmann::json j;
    j["r"] = result.r;
    nlohmann::json points = nlohmann::json::array();
    for (const BdAdhocPoint& p : result.points)
      points.push_back({{"a", p.a}, {"b", p.b}, {"bd", p.bd}, {"adhoc", p.adhoc}});
    j["points"] = std::move(points);
    std::ofstream file(out);
    file << j.dump(2) << "\n";
  } else {
    WriteScatterCsv(result, out);
  }
  std::printf("pearson r = %.6f over %zu pairs; points written to %s\n", result.r,
              result.points.size(), out.c_str());
  return kExitOk;
}

int RunRulesim(const std::string& agent_token, const std::vector<std::string>& record_paths,
               const std::vector<std::string>& rule_names, int games, int cap,
               int max_states, uint64_t seed, const std::string& out) {
  ValidateAgentTokens({agent_token});
  const StateSample sample =
      record_paths.empty()
          ? PooledSelfPlaySample({agent_token}, games, max_states, seed)
          : SampleStates(LoadAllRecords(record_paths), max_states, seed);
  std::vector<Rule> rules;
  if (rule_names.empty()) {
    rules = DeterministicPaperRules();
  } else {
    for (const std::string& name : rule_names) rules.push_back(ParseRule(name));
  }
  auto agent = MakeAgent(agent_token);
  std::ofstream file(out);
  if (!file) throw InvalidConfigError("cannot write " + out);
  file << "rule,similarity,states_used,cap\n";
  for (const Rule& rule : rules) {
    const RuleSimilarityResult r = RuleTriggerSimilarity(rule, *agent, sample, cap);
    char line[160];
    std::snprintf(line, sizeof line, "%s,%.6f,%d,%d", rule.BaseName().c_str(), r.fraction,
                  r.states_used, r.cap);
    file << line << "\n";
    if (r.states_used < r.cap)
      std::fprintf(stderr, "warning: %s triggered on only %d of %d requested states\n",
                   rule.BaseName().c_str(), r.states_used, r.cap);
  }
  std::printf("rule similarities for %s written to %s\n", agent_token.c_str(), out.c_str());
  return kExitOk;
}

int RunReplay(const std::vector<std::string>& record_paths) {
  long long games = 0;
  for (const std::string& path : record_paths) {
    for (const GameRecord& record : ReadRecords(path)) {
      if (!record.valid) continue;  // flagged games carry no replayable transcript
      ReplayRecord(record);
      ++games;
    }
  }
  std::printf("replayed %lld games bit-exactly\n", games);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hanabi referee, rule-based agents, and ad-hoc cooperation analysis"};
  app.require_subcommand(1);

  std::vector<std::string> agents;
  std::vector<std::string> records;
  std::vector<std::string> rules;
  std::string out, summary, table_path, matrix_path, normalized_out, agent_token;
  std::string linkage = "average";
  std::string format = "json";
  int games = 1000;
  int jobs = 1;
  int max_states = 1000;
  int cap = 1000;
  uint64_t seed = 1;
  bool fix_seat_order = false;

  CLI::App* sim = app.add_subcommand("sim", "Play games with a fixed agent list");
  sim->add_option("--agents", agents, "Comma-separated agent tokens (seat order)")
      ->required()
      ->delimiter(',');
  sim->add_option("--games", games, "Number of games");
  sim->add_option("--seed", seed, "Base seed; game g uses seed+g");
  sim->add_option("--out", out, "Output records JSONL")->required();
  sim->add_option("--jobs", jobs, "Worker threads");
  sim->add_flag("--fix-seat-order", fix_seat_order, "Disable seat alternation");

  CLI::App* tournament = app.add_subcommand("tournament", "All pairings incl. self-play");
  tournament->add_option("--agents", agents, "Agent tokens")->required()->delimiter(',');
  tournament->add_option("--games", games, "Games per pairing");
  tournament->add_option("--seed", seed, "Base seed");
  tournament->add_option("--out", out, "Output table CSV")->required();
  tournament->add_option("--summary", summary, "Optional summary JSON");
  tournament->add_option("--jobs", jobs, "Worker threads");

  CLI::App* classify = app.add_subcommand("classify", "Outcome counts from a table CSV");
  classify->add_option("--table", table_path, "Pairwise table CSV")->required();
  classify->add_option("--out", out, "Output file")->required();
  classify->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* bd = app.add_subcommand("bd", "Behavioral-difference matrix");
  bd->add_option("--agents", agents, "Agent tokens")->required()->delimiter(',');
  bd->add_option("--records", records, "Sample states from these JSONL files")
      ->delimiter(',');
  bd->add_option("--games", games, "Self-play games per agent when sampling fresh");
  bd->add_option("--max-states", max_states, "Sample size cap");
  bd->add_option("--seed", seed, "Sampling seed");
  bd->add_option("--out", out, "Output raw-BD CSV")->required();
  bd->add_option("--normalized-out", normalized_out, "Optional normalized-BD CSV");

  CLI::App* cluster = app.add_subcommand("cluster", "Agglomerative clustering of a matrix");
  cluster->add_option("--matrix", matrix_path, "Distance matrix CSV")->required();
  cluster->add_option("--linkage", linkage, "single, complete, or average")
      ->check(CLI::IsMember({"single", "complete", "average"}));
  cluster->add_option("--out", out, "Output dendrogram JSON")->required();

  CLI::App* corr = app.add_subcommand("corr", "Correlate BD with ad-hoc means");
  corr->add_option("--table", table_path, "Pairwise table CSV")->required();
  corr->add_option("--matrix", matrix_path, "BD matrix CSV")->required();
  corr->add_option("--out", out, "Output scatter file")->required();
  corr->add_option("--format", format, "csv or json")->check(CLI::IsMember({"json", "csv"}));

  CLI::App* rulesim = app.add_subcommand("rulesim", "Rule-trigger similarity of an agent");
  rulesim->add_option("--agent", agent_token, "Agent token")->required();
  rulesim->add_option("--records", records, "Sample states from these JSONL files")
      ->delimiter(',');
  rulesim->add_option("--rules", rules, "Rule names (default: the 16 deterministic rules)")
      ->delimiter(',');
  rulesim->add_option("--games", games, "Self-play games when sampling fresh");
  rulesim->add_option("--cap", cap, "Triggering states per rule");
  rulesim->add_option("--max-states", max_states, "Sample size cap");
  rulesim->add_option("--seed", seed, "Sampling seed");
  rulesim->add_option("--out", out, "Output CSV")->required();

  CLI::App* replay = app.add_subcommand("replay", "Verify records replay bit-exactly");
  replay->add_option("--records", records, "Records JSONL files")->required()->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  // corr defaults to csv scatter output unless asked otherwise.
  if (corr->parsed() && format == "json" && corr->get_option("--format")->empty())
    format = "csv";

  try {
    if (sim->parsed()) return RunSim(agents, games, seed, out, jobs, fix_seat_order);
    if (tournament->parsed())
      return RunTournamentCmd(agents, games, seed, out, summary, jobs);
    if (classify->parsed()) return RunClassify(table_path, out, format);
    if (bd->parsed())
      return RunBd(agents, records, games, max_states, seed, out, normalized_out);
    if (cluster->parsed()) return RunCluster(matrix_path, linkage, out);
    if (corr->parsed()) return RunCorr(table_path, matrix_path, out, format);
    if (rulesim->parsed())
      return RunRulesim(agent_token, records, rules, games, cap, max_states, seed, out);
    if (replay->parsed()) return RunReplay(records);
  } catch (const UnknownAgentError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidConfigError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
