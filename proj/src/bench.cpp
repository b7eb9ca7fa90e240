#include "ged/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "ged/edit_path.hpp"
#include "ged/error.hpp"

namespace ged {

namespace {

// Draws built directly on the engine output, which the standard pins down,
// so corpora are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  int between(int lo, int hi) { return lo + static_cast<int>(index(static_cast<std::size_t>(hi - lo + 1))); }
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

struct WorkGraph {
  std::vector<std::string> labels;
  std::set<Edge> edges;
  std::vector<long> origin;  // index in g1, or -1 for inserted nodes

  std::size_t order() const { return labels.size(); }
  bool complete() const { return edges.size() == order() * (order() - 1) / 2; }
};

bool apply_random_edit(WorkGraph& g, Rng& rng, const GeneratorParams& params) {
  const double r = rng.unit();
  const std::size_t n = g.order();
  const auto max_n = static_cast<std::size_t>(params.max_nodes);
  const auto min_n = static_cast<std::size_t>(std::max(params.min_nodes, 0));
  if (r < 0.6) {
    if (rng.unit() < 0.5) {
      if (n < 2 || g.complete()) return false;
      while (true) {
        std::size_t a = rng.index(n), b = rng.index(n);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        if (g.edges.insert({a, b}).second) return true;
      }
    }
    if (g.edges.empty()) return false;
    auto it = g.edges.begin();
    std::advance(it, static_cast<long>(rng.index(g.edges.size())));
    g.edges.erase(it);
    return true;
  }
  if (r < 0.8) {
    if (rng.unit() < 0.5) {
      if (n >= max_n) return false;
      g.labels.push_back(params.alphabet[rng.index(params.alphabet.size())]);
      g.origin.push_back(-1);
      return true;
    }
    if (n <= min_n || n == 0) return false;
    const std::size_t victim = rng.index(n);
    std::set<Edge> kept;
    for (auto [a, b] : g.edges) {
      if (a == victim || b == victim) continue;
      kept.insert({a > victim ? a - 1 : a, b > victim ? b - 1 : b});
    }
    g.edges = std::move(kept);
    g.labels.erase(g.labels.begin() + static_cast<long>(victim));
    g.origin.erase(g.origin.begin() + static_cast<long>(victim));
    return true;
  }
  if (n == 0 || params.alphabet.size() < 2) return false;
  const std::size_t node = rng.index(n);
  std::string next;
  do {
    next = params.alphabet[rng.index(params.alphabet.size())];
  } while (next == g.labels[node]);
  g.labels[node] = next;
  return true;
}

// Random relabeling of node indices, so g2 carries no index alignment with g1.
void shuffle_nodes(WorkGraph& g, Rng& rng) {
  const std::size_t n = g.order();
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(pos[i - 1], pos[rng.index(i)]);
  WorkGraph out;
  out.labels.resize(n);
  out.origin.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.labels[pos[i]] = g.labels[i];
    out.origin[pos[i]] = g.origin[i];
  }
  for (auto [a, b] : g.edges) out.edges.insert(std::minmax(pos[a], pos[b]));
  g = std::move(out);
}

// Identity-tracking mapping over the padded pair: surviving nodes map to
// themselves, deleted g1 nodes pair up with inserted g2 nodes and the rest
// with dummies.
Permutation generating_mapping(std::size_t n1, const WorkGraph& g2) {
  const std::size_t n = std::max(n1, g2.order());
  std::vector<std::size_t> map(n, n);
  std::vector<char> used(n, 0);
  std::vector<std::size_t> inserted;
  for (std::size_t j = 0; j < g2.order(); ++j) {
    if (g2.origin[j] >= 0) {
      map[static_cast<std::size_t>(g2.origin[j])] = j;
      used[j] = 1;
    } else {
      inserted.push_back(j);
    }
  }
  for (std::size_t j = g2.order(); j < n; ++j) inserted.push_back(j);  // g2 dummies
  std::size_t next = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (map[i] == n) map[i] = inserted[next++];
  return Permutation(std::move(map));
}

}  // namespace

GeneratorParams standard_corpus_params() {
  GeneratorParams p;
  p.seed = 2024;
  p.count = 100;
  p.min_nodes = 5;
  p.max_nodes = 8;
  p.min_edits = 0;
  p.max_edits = 2;
  return p;
}

std::vector<PairCase> generate_pairs(const GeneratorParams& params,
                                     const CostModel& cm) {
  if (params.count < 0 || params.min_nodes < 0 || params.max_nodes < params.min_nodes ||
      params.min_edits < 0 || params.max_edits < params.min_edits ||
      params.alphabet.empty() || params.edge_probability < 0 ||
      params.edge_probability > 1)
    throw InputError("generate_pairs: infeasible parameters");

  Rng rng(params.seed);
  std::vector<PairCase> cases;
  cases.reserve(static_cast<std::size_t>(params.count));
  for (int c = 0; c < params.count; ++c) {
    const auto n = static_cast<std::size_t>(rng.between(params.min_nodes, params.max_nodes));
    WorkGraph g;
    for (std::size_t i = 0; i < n; ++i) {
      g.labels.push_back(params.alphabet[rng.index(params.alphabet.size())]);
      g.origin.push_back(static_cast<long>(i));
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (rng.unit() < params.edge_probability) g.edges.insert({i, j});
    const WorkGraph original = g;

    const int k = rng.between(params.min_edits, params.max_edits);
    int applied = 0;
    for (int attempt = 0; applied < k && attempt < 100 * (k + 1); ++attempt)
      if (apply_random_edit(g, rng, params)) ++applied;
    shuffle_nodes(g, rng);

    PairCase pc;
    char id[32];
    std::snprintf(id, sizeof id, "pair-%04d", c);
    pc.id = id;
    pc.g1 = LabeledGraph(original.labels, {original.edges.begin(), original.edges.end()});
    pc.g2 = LabeledGraph(g.labels, {g.edges.begin(), g.edges.end()});
    pc.applied_edits = applied;
    const GraphPair pair = pad_pair(pc.g1, pc.g2);
    pc.generating_cost = ged_under_mapping(pair, generating_mapping(n, g), cm);
    if (pair.order() <= params.oracle_budget)
      pc.true_ged = exact_ged(pair, cm, params.oracle_budget).ged;
    cases.push_back(std::move(pc));
  }
  return cases;
}

BenchReport run_bench(const std::vector<PairCase>& cases, const CostModel& cm,
                      const SolverConfig& cfg, int workers) {
  using clock = std::chrono::steady_clock;
  BenchReport report;
  report.rows.resize(cases.size());
  std::atomic<std::size_t> next{0};
  const auto t0 = clock::now();

  auto work = [&] {
    for (std::size_t k = next++; k < cases.size(); k = next++) {
      const PairCase& pc = cases[k];
      BenchRow& row = report.rows[k];
      row.id = pc.id;
      row.n1 = pc.g1.order();
      row.n2 = pc.g2.order();
      row.true_ged = pc.true_ged;
      const auto start = clock::now();
      try {
        const SolveReport sr = estimate_ged(pc.g1, pc.g2, cm, cfg);
        row.estimated_ged = sr.estimated_ged;
        row.rounds = static_cast<int>(sr.trace.size());
      } catch (const std::exception& e) {
        row.error = e.what();
      }
      row.wall_ms = std::chrono::duration<double, std::milli>(clock::now() - start).count();
    }
  };

  const int threads = std::max(1, std::min<int>(workers, static_cast<int>(cases.size())));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  report.total_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
  summarize(report);
  return report;
}

void summarize(BenchReport& report) {
  report.scored = 0;
  report.failures = 0;
  double abs_sum = 0.0;
  std::size_t exact = 0;
  for (BenchRow& row : report.rows) {
    if (row.error) {
      ++report.failures;
      row.abs_err.reset();
      row.exact_match = false;
      continue;
    }
    if (!row.true_ged) continue;
    const double err = std::abs(row.estimated_ged - *row.true_ged);
    row.abs_err = err;
    row.exact_match = err <= kExactMatchTol;
    abs_sum += err;
    exact += row.exact_match ? 1 : 0;
    ++report.scored;
  }
  report.mae = report.scored ? abs_sum / static_cast<double>(report.scored) : 0.0;
  report.si = report.scored ? static_cast<double>(exact) / static_cast<double>(report.scored) : 0.0;
}

std::string format_number(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::string bench_csv(const BenchReport& report, bool timing) {
  std::ostringstream out;
  out << "id,n1,n2,true_ged,estimated_ged,abs_err,exact_match,rounds,wall_ms\n";
  for (const BenchRow& row : report.rows) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.3f", timing ? row.wall_ms : 0.0);
    out << row.id << ',' << row.n1 << ',' << row.n2 << ','
        << (row.true_ged ? format_number(*row.true_ged) : "") << ','
        << (row.error ? "" : format_number(row.estimated_ged)) << ','
        << (row.abs_err ? format_number(*row.abs_err) : "") << ','
        << (row.exact_match ? 1 : 0) << ',' << row.rounds << ',' << ms << '\n';
  }
  return out.str();
}

nlohmann::json bench_summary(const BenchReport& report, bool timing) {
  return {{"mae", report.mae},
          {"si", report.si},
          {"pairs", report.rows.size()},
          {"scored", report.scored},
          {"failures", report.failures},
          {"total_ms", timing ? report.total_ms : 0.0}};
}

void save_corpus(const std::filesystem::path& dir,
                 const std::vector<PairCase>& cases,
                 const std::string& cost_name) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  auto write = [](const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path.string());
    out << text;
  };
  nlohmann::json entries = nlohmann::json::array();
  for (const PairCase& pc : cases) {
    nlohmann::json e = {{"id", pc.id}, {"g1", pc.id + ".g1.json"}, {"g2", pc.id + ".g2.json"}};
    if (pc.true_ged) e["true_ged"] = *pc.true_ged;
    if (pc.applied_edits) e["applied_edits"] = *pc.applied_edits;
    if (pc.generating_cost) e["generating_cost"] = *pc.generating_cost;
    write(dir / (pc.id + ".g1.json"), save_graph(pc.g1));
    write(dir / (pc.id + ".g2.json"), save_graph(pc.g2));
    entries.push_back(std::move(e));
  }
  nlohmann::json manifest = {{"cost", cost_name}, {"cases", std::move(entries)}};
  write(dir / "manifest.json", manifest.dump(2) + "\n");
}

Corpus load_corpus(const std::filesystem::path& dir) {
  const auto manifest_path = dir / "manifest.json";
  std::ifstream in(manifest_path);
  if (!in) throw InputError("corpus: missing " + manifest_path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("corpus manifest: " + std::string(e.what()));
  }
  if (!doc.is_object() || !doc.contains("cases") || !doc["cases"].is_array())
    throw InputError("corpus manifest: expected an object with a \"cases\" array");
  Corpus corpus;
  if (doc.contains("cost") && doc["cost"].is_string())
    corpus.cost_name = doc["cost"].get<std::string>();
  for (std::size_t k = 0; k < doc["cases"].size(); ++k) {
    const auto& e = doc["cases"][k];
    const std::string where = "corpus manifest cases[" + std::to_string(k) + "]";
    if (!e.is_object() || !e.contains("id") || !e.contains("g1") || !e.contains("g2") ||
        !e["id"].is_string() || !e["g1"].is_string() || !e["g2"].is_string())
      throw InputError(where + ": expected id, g1 and g2 strings");
    PairCase pc;
    pc.id = e["id"].get<std::string>();
    pc.g1 = load_graph_file((dir / e["g1"].get<std::string>()).string());
    pc.g2 = load_graph_file((dir / e["g2"].get<std::string>()).string());
    if (e.contains("true_ged") && e["true_ged"].is_number()) pc.true_ged = e["true_ged"].get<double>();
    if (e.contains("applied_edits") && e["applied_edits"].is_number_integer())
      pc.applied_edits = e["applied_edits"].get<int>();
    if (e.contains("generating_cost") && e["generating_cost"].is_number())
      pc.generating_cost = e["generating_cost"].get<double>();
    corpus.cases.push_back(std::move(pc));
  }
  return corpus;
}

}  // namespace ged
