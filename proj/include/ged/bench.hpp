#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ged/cost_model.hpp"
#include "ged/graph.hpp"
#include "ged/solver.hpp"

namespace ged {

struct PairCase {
  std::string id;
  LabeledGraph g1;
  LabeledGraph g2;
  std::optional<double> true_ged;
  std::optional<int> applied_edits;
  // GED of the mapping that tracks node identity through the applied edits;
  // an upper bound on true_ged.
  std::optional<double> generating_cost;
};

struct GeneratorParams {
  std::uint64_t seed = 7;
  int count = 10;
  int min_nodes = 5;
  int max_nodes = 8;
  int min_edits = 0;
  int max_edits = 4;
  double edge_probability = 0.35;
  std::vector<std::string> alphabet = {"1", "2", "3", "4"};
  // Pairs whose padded order fits are labeled with the exact oracle.
  std::size_t oracle_budget = 9;
};

/// The fixed 100-pair case3 corpus used for accuracy and ablation checks:
/// 5 to 8 nodes, at most two edits, seed 2024.
GeneratorParams standard_corpus_params();

/// Random labeled graph pairs with known edit provenance. Edits are drawn as
/// edge add/remove (60%), node add/remove (20%) and relabel (20%); node
/// counts stay within [min_nodes, max_nodes] and g2's nodes are shuffled.
/// Fully determined by params.seed.
std::vector<PairCase> generate_pairs(const GeneratorParams& params,
                                     const CostModel& cm);

struct BenchRow {
  std::string id;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::optional<double> true_ged;
  double estimated_ged = 0.0;
  std::optional<double> abs_err;
  bool exact_match = false;
  int rounds = 0;
  double wall_ms = 0.0;
  std::optional<std::string> error;
};

struct BenchReport {
  std::vector<BenchRow> rows;  // in case order
  double mae = 0.0;
  double si = 0.0;
  std::size_t scored = 0;  // rows with a true GED and no error
  std::size_t failures = 0;
  double total_ms = 0.0;
};

inline constexpr double kExactMatchTol = 1e-9;

/// Solves every case on `workers` threads. Per-pair results do not depend on
/// the worker count. Solver errors are kept in the row and excluded from the
/// aggregates.
BenchReport run_bench(const std::vector<PairCase>& cases, const CostModel& cm,
                      const SolverConfig& cfg, int workers = 1);

/// MAE and SI over the rows (recomputes the aggregates of a report).
void summarize(BenchReport& report);

/// CSV with header id,n1,n2,true_ged,estimated_ged,abs_err,exact_match,
/// rounds,wall_ms. With `timing` off, wall_ms is written as 0 so the file
/// is byte-stable.
std::string bench_csv(const BenchReport& report, bool timing = true);
nlohmann::json bench_summary(const BenchReport& report, bool timing = true);

/// Corpus on disk: manifest.json plus one graph file per side.
void save_corpus(const std::filesystem::path& dir,
                 const std::vector<PairCase>& cases,
                 const std::string& cost_name);
struct Corpus {
  std::vector<PairCase> cases;
  std::string cost_name;
};
Corpus load_corpus(const std::filesystem::path& dir);

/// Formats a double with the shortest round-trip representation.
std::string format_number(double x);

}  // namespace ged
