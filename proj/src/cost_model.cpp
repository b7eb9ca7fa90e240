#include "ged/cost_model.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "json.hpp"

#include "ged/error.hpp"

namespace ged {

using nlohmann::json;

CostSetting parse_cost_setting(const std::string& name) {
  if (name == "case1") return CostSetting::case1;
  if (name == "case2") return CostSetting::case2;
  if (name == "case3") return CostSetting::case3;
  throw InputError("unknown cost setting: " + name);
}

namespace detail {

double LabelTable::at(const std::string& label, const char* what) const {
  if (auto it = by_label.find(label); it != by_label.end()) return it->second;
  if (fallback) return *fallback;
  throw InputError(std::string("no ") + what + " cost for label \"" + label +
                   "\" and no default");
}

}  // namespace detail

double PairCosts::insert(const std::string& label) const {
  return tables_.insert.at(label, "insertion");
}

double PairCosts::remove(const std::string& label) const {
  return tables_.remove.at(label, "deletion");
}

double PairCosts::substitute(const std::string& from,
                             const std::string& to) const {
  if (from == to) return 0.0;
  if (tables_.nearest_neighbor) {
    const long long a = ids_.at(from);
    const long long b = ids_.at(to);
    const auto gap = nearest_gap_.find(a);
    // Ties count as nearest.
    return (gap != nearest_gap_.end() && std::llabs(b - a) <= gap->second) ? 1.0 : 2.0;
  }
  if (auto it = tables_.substitute.find({from, to}); it != tables_.substitute.end())
    return it->second;
  return tables_.substitute_default;
}

CostModel::CostModel(double insert, double remove, double substitute,
                     double edge_cost_squared) {
  if (insert < 0 || remove < 0 || substitute < 0)
    throw InputError("node costs must be non-negative");
  if (!(edge_cost_squared > 0) || !std::isfinite(edge_cost_squared))
    throw InputError("edge_cost_squared must be positive");
  tables_.insert.fallback = insert;
  tables_.remove.fallback = remove;
  tables_.substitute_default = substitute;
  tables_.edge_cost_sq = edge_cost_squared;
}

CostModel CostModel::builtin(CostSetting setting) {
  switch (setting) {
    case CostSetting::case1:
      return CostModel(3.0, 1.0, 0.0, 2.0);
    case CostSetting::case2: {
      CostModel cm(3.0, 1.0, 0.0, 2.0);
      cm.tables_.nearest_neighbor = true;
      return cm;
    }
    case CostSetting::case3:
      return CostModel(1.0, 1.0, 0.0, 1.0);
  }
  throw InputError("unknown cost setting");
}

double CostModel::kappa() const { return std::sqrt(tables_.edge_cost_sq); }

namespace {

double read_cost(const json& v, const std::string& where) {
  if (!v.is_number()) throw InputError(where + ": cost must be a number");
  const double c = v.get<double>();
  if (!std::isfinite(c) || c < 0)
    throw InputError(where + ": cost must be finite and non-negative");
  return c;
}

detail::LabelTable read_table(const json& doc, const char* key) {
  detail::LabelTable t;
  if (!doc.contains(key)) {
    throw InputError(std::string("cost file: missing \"") + key + "\"");
  }
  const json& v = doc[key];
  if (v.is_number()) {
    t.fallback = read_cost(v, key);
    return t;
  }
  if (!v.is_object())
    throw InputError(std::string(key) + ": expected a number or an object");
  for (const auto& [label, cost] : v.items()) {
    const double c = read_cost(cost, std::string(key) + "." + label);
    if (label == "default")
      t.fallback = c;
    else
      t.by_label[label] = c;
  }
  return t;
}

}  // namespace

CostModel CostModel::parse(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("cost file: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("cost file: top level must be an object");
  if (!doc.contains("edge_cost_squared"))
    throw InputError("cost file: missing \"edge_cost_squared\"");
  const double k2 = read_cost(doc["edge_cost_squared"], "edge_cost_squared");
  if (!(k2 > 0)) throw InputError("edge_cost_squared must be positive");

  CostModel cm;
  cm.tables_.edge_cost_sq = k2;
  cm.tables_.insert = read_table(doc, "node_insert");
  cm.tables_.remove = read_table(doc, "node_delete");
  if (doc.contains("node_substitute")) {
    const json& sub = doc["node_substitute"];
    if (sub.is_number()) {
      cm.tables_.substitute_default = read_cost(sub, "node_substitute");
    } else if (sub.is_object()) {
      if (sub.contains("default"))
        cm.tables_.substitute_default = read_cost(sub["default"], "node_substitute.default");
      if (sub.contains("pairs")) {
        const json& pairs = sub["pairs"];
        if (!pairs.is_array()) throw InputError("node_substitute.pairs must be an array");
        for (std::size_t k = 0; k < pairs.size(); ++k) {
          const json& p = pairs[k];
          const std::string where = "node_substitute.pairs[" + std::to_string(k) + "]";
          if (!p.is_array() || p.size() != 3 || !p[0].is_string() || !p[1].is_string())
            throw InputError(where + ": expected [from, to, cost]");
          const auto from = p[0].get<std::string>();
          const auto to = p[1].get<std::string>();
          const double c = read_cost(p[2], where);
          if (from == to && c != 0.0)
            throw InputError(where + ": substituting a label by itself must cost 0");
          cm.tables_.substitute[{from, to}] = c;
        }
      }
    } else {
      throw InputError("node_substitute: expected a number or an object");
    }
  }
  return cm;
}

CostModel CostModel::load(std::istream& in) {
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

CostModel CostModel::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open cost file: " + path);
  try {
    return load(in);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

PairCosts CostModel::for_pair(const GraphPair& pair) const {
  PairCosts pc;
  pc.tables_ = tables_;
  if (!tables_.nearest_neighbor) return pc;

  std::set<long long> universe;
  auto add = [&](const LabeledGraph& g) {
    for (std::size_t i = 0; i < g.real_order(); ++i) {
      const std::string& s = g.label(i);
      long long id = 0;
      const char* end = s.data() + s.size();
      auto [ptr, ec] = std::from_chars(s.data(), end, id);
      if (ec != std::errc() || ptr != end || s.empty())
        throw InputError("label \"" + s + "\" is not an integer id (required by case2)");
      pc.ids_[s] = id;
      universe.insert(id);
    }
  };
  add(pair.g1);
  add(pair.g2);
  for (long long x : universe) {
    long long best = std::numeric_limits<long long>::max();
    auto it = universe.find(x);
    if (it != universe.begin()) best = std::min(best, x - *std::prev(it));
    if (std::next(it) != universe.end()) best = std::min(best, *std::next(it) - x);
    pc.nearest_gap_[x] = best;
  }
  return pc;
}

Matrix build_cost_matrix(const GraphPair& pair, const CostModel& cm) {
  if (pair.g1.order() != pair.g2.order())
    throw InputError("build_cost_matrix: pair is not padded to a common order");
  const PairCosts costs = cm.for_pair(pair);
  const std::size_t n = pair.order();
  Matrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const bool di = pair.g1.is_dummy(i), dj = pair.g2.is_dummy(j);
      if (di && dj) throw InputError("build_cost_matrix: both graphs carry dummies");
      if (di)
        d(i, j) = costs.insert(pair.g2.label(j));
      else if (dj)
        d(i, j) = costs.remove(pair.g1.label(i));
      else
        d(i, j) = costs.substitute(pair.g1.label(i), pair.g2.label(j));
    }
  }
  return d;
}

}  // namespace ged
