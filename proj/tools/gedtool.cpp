// gedtool: estimate, exact, gen and bench subcommands.
//
// Exit codes: 0 ok, 2 input error, 3 solver error, 4 oracle budget refusal.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ged/bench.hpp"
#include "ged/cost_model.hpp"
#include "ged/edit_path.hpp"
#include "ged/error.hpp"
#include "ged/graph.hpp"
#include "ged/solver.hpp"

namespace {

enum class LogLevel { off, info, trace };

LogLevel log_level() {
  const char* env = std::getenv("GED_LOG");
  if (!env) return LogLevel::off;
  const std::string v = env;
  if (v == "info") return LogLevel::info;
  if (v == "trace") return LogLevel::trace;
  return LogLevel::off;
}

ged::CostModel resolve_cost(const std::string& spec) {
  if (spec.rfind("file:", 0) == 0) return ged::CostModel::load_file(spec.substr(5));
  return ged::CostModel::builtin(ged::parse_cost_setting(spec));
}

void add_solver_flags(CLI::App* cmd, ged::SolverConfig& cfg) {
  cmd->add_option("--mu", cfg.mu, "weight of the node-cost term")->capture_default_str();
  cmd->add_option("--alpha", cfg.alpha, "Adam step size")->capture_default_str();
  cmd->add_option("--lambda-step", cfg.lambda_step, "regularizer increment per round")
      ->capture_default_str();
  cmd->add_option("--max-rounds", cfg.lambda_max_rounds, "cap on outer rounds")
      ->capture_default_str();
  cmd->add_option("--patience", cfg.patience, "rounds without improvement before stopping")
      ->capture_default_str();
  cmd->add_option("--inner-iters", cfg.inner_max_iters, "Adam iterations per round")
      ->capture_default_str();
  cmd->add_option("--inner-tol", cfg.inner_tol, "inner convergence tolerance")
      ->capture_default_str();
  cmd->add_option("--sigma-cap", cfg.sigma_cap, "penalty coefficient cap")->capture_default_str();
  cmd->add_flag("--no-regularizer", [&cfg](std::int64_t) { cfg.enable_regularizer = false; },
                "keep lambda at 0 and round the doubly stochastic solution");
  cmd->add_flag("--no-inverse-relabel",
                [&cfg](std::int64_t) { cfg.enable_inverse_relabel = false; },
                "do not recenter the problem after each round");
}

void log_report(const ged::SolveReport& r) {
  const LogLevel level = log_level();
  if (level == LogLevel::off) return;
  std::cerr << "estimated_ged=" << r.estimated_ged << " rounds=" << r.trace.size()
            << " stop=" << ged::to_string(r.reason) << '\n';
  if (level != LogLevel::trace) return;
  for (std::size_t k = 0; k < r.trace.size(); ++k) {
    const auto& t = r.trace[k];
    std::cerr << "  round " << k << " lambda=" << t.lambda << " sigma=" << t.sigma
              << " iters=" << t.inner_iterations << " candidate=" << t.candidate_ged
              << " objective=" << t.objective << '\n';
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ged::InputError("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph edit distance estimation"};
  app.require_subcommand(1);

  std::string g1_path, g2_path, cost = "case1";
  ged::SolverConfig cfg;

  auto* estimate = app.add_subcommand("estimate", "estimate GED with the relaxed solver");
  estimate->add_option("g1", g1_path, "source graph JSON")->required();
  estimate->add_option("g2", g2_path, "target graph JSON")->required();
  estimate->add_option("--cost", cost, "case1|case2|case3|file:PATH")->capture_default_str();
  add_solver_flags(estimate, cfg);

  std::size_t budget = ged::kDefaultNodeBudget;
  auto* exact = app.add_subcommand("exact", "exact GED by exhaustive enumeration");
  exact->add_option("g1", g1_path, "source graph JSON")->required();
  exact->add_option("g2", g2_path, "target graph JSON")->required();
  exact->add_option("--cost", cost, "case1|case2|case3|file:PATH")->capture_default_str();
  exact->add_option("--budget", budget, "largest padded order to enumerate")
      ->capture_default_str();

  ged::GeneratorParams gen_params;
  std::string out_dir;
  std::string alphabet = "1,2,3,4";
  auto* gen = app.add_subcommand("gen", "generate a synthetic pair corpus");
  gen->add_option("--seed", gen_params.seed)->capture_default_str();
  gen->add_option("--count", gen_params.count)->capture_default_str();
  gen->add_option("--min-nodes", gen_params.min_nodes)->capture_default_str();
  gen->add_option("--max-nodes", gen_params.max_nodes)->capture_default_str();
  gen->add_option("--min-edits", gen_params.min_edits)->capture_default_str();
  gen->add_option("--max-edits", gen_params.max_edits)->capture_default_str();
  gen->add_option("--edge-prob", gen_params.edge_probability)->capture_default_str();
  gen->add_option("--alphabet", alphabet, "comma separated node labels")->capture_default_str();
  gen->add_option("--budget", gen_params.oracle_budget, "oracle budget for true GED")
      ->capture_default_str();
  gen->add_option("--cost", cost, "case1|case2|case3|file:PATH")->capture_default_str();
  gen->add_option("--out", out_dir, "output directory")->required();

  std::string corpus_dir, out_prefix = "bench";
  int workers = 1;
  bool deterministic = false;
  auto* bench = app.add_subcommand("bench", "run the solver over a corpus");
  bench->add_option("corpus", corpus_dir, "directory written by gen")->required();
  bench->add_option("--cost", cost, "case1|case2|case3|file:PATH")->capture_default_str();
  bench->add_option("--workers", workers)->capture_default_str();
  bench->add_option("--out", out_prefix, "writes PREFIX.csv and PREFIX.json")
      ->capture_default_str();
  bench->add_option("--budget", budget, "oracle budget when truths must be recomputed")
      ->capture_default_str();
  bench->add_flag("--deterministic", deterministic, "write zero timings for byte-stable output");
  add_solver_flags(bench, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const ged::CostModel cm = resolve_cost(cost);
    if (estimate->parsed()) {
      const auto g1 = ged::load_graph_file(g1_path);
      const auto g2 = ged::load_graph_file(g2_path);
      ged::SolveReport report;
      try {
        report = ged::estimate_ged(g1, g2, cm, cfg);
      } catch (const ged::SolverError& e) {
        std::cerr << "solver error: " << e.what() << '\n';
        return 3;
      }
      log_report(report);
      std::cout << ged::to_json(report).dump(2) << '\n';
    } else if (exact->parsed()) {
      const auto g1 = ged::load_graph_file(g1_path);
      const auto g2 = ged::load_graph_file(g2_path);
      const auto pair = ged::pad_pair(g1, g2);
      const auto res = ged::exact_ged(pair, cm, budget);
      nlohmann::json doc = {
          {"ged", res.ged},
          {"mapping", res.optimal_mapping.mapping()},
          {"edit_path", ged::to_json(ged::extract_edit_path(pair, res.optimal_mapping, cm))}};
      std::cout << doc.dump(2) << '\n';
    } else if (gen->parsed()) {
      gen_params.alphabet.clear();
      std::stringstream ss(alphabet);
      for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) gen_params.alphabet.push_back(item);
      const auto cases = ged::generate_pairs(gen_params, cm);
      ged::save_corpus(out_dir, cases, cost);
      std::cout << "wrote " << cases.size() << " pairs to " << out_dir << '\n';
    } else if (bench->parsed()) {
      ged::Corpus corpus = ged::load_corpus(corpus_dir);
      if (corpus.cost_name != cost) {
        // Stored truths were computed under another cost model.
        for (auto& pc : corpus.cases) {
          const auto pair = ged::pad_pair(pc.g1, pc.g2);
          pc.true_ged.reset();
          if (pair.order() <= budget) pc.true_ged = ged::exact_ged(pair, cm, budget).ged;
        }
      }
      cfg.validate();
      auto report = ged::run_bench(corpus.cases, cm, cfg, workers);
      const bool timing = !deterministic;
      write_file(out_prefix + ".csv", ged::bench_csv(report, timing));
      const auto summary = ged::bench_summary(report, timing);
      write_file(out_prefix + ".json", summary.dump(2) + "\n");
      std::cout << summary.dump() << '\n';
    }
  } catch (const ged::BudgetError& e) {
    std::cerr << e.what() << '\n';
    return 4;
  } catch (const ged::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const ged::SolverError& e) {
    std::cerr << "solver error: " << e.what() << '\n';
    return 3;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
