#pragma once

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "ged/graph.hpp"
#include "ged/matrix.hpp"

namespace ged {

enum class CostSetting { case1, case2, case3 };

CostSetting parse_cost_setting(const std::string& name);

namespace detail {

struct LabelTable {
  std::map<std::string, double> by_label;
  std::optional<double> fallback;

  double at(const std::string& label, const char* what) const;
};

struct CostTables {
  LabelTable insert;
  LabelTable remove;
  std::map<std::pair<std::string, std::string>, double> substitute;
  double substitute_default = 0.0;
  double edge_cost_sq = 1.0;
  // Substitution priced by label-ID distance (built-in case2).
  bool nearest_neighbor = false;
};

}  // namespace detail

/// Node edit costs resolved against the label universe of one graph pair.
class PairCosts {
 public:
  double insert(const std::string& label) const;
  double remove(const std::string& label) const;
  /// Zero for equal labels.
  double substitute(const std::string& from, const std::string& to) const;
  double edge_cost_squared() const { return tables_.edge_cost_sq; }

 private:
  friend class CostModel;
  detail::CostTables tables_;
  // case2: numeric id of every label in the pair, and per id the smallest
  // distance to a different id of the pair.
  std::map<std::string, long long> ids_;
  std::map<long long, long long> nearest_gap_;
};

/// Edit-cost semantics. Node costs are table driven (built-in case1/case3 and
/// cost files) or follow the label-ID nearest-neighbor rule of case2. Edge
/// insertion and deletion share a single cost κ².
class CostModel {
 public:
  /// Uniform model: every label costs the same.
  CostModel(double insert, double remove, double substitute,
            double edge_cost_squared);

  static CostModel builtin(CostSetting setting);
  /// Cost JSON; throws InputError on negative costs, a missing or
  /// non-positive edge_cost_squared, or a nonzero self-substitution.
  static CostModel load(std::istream& in);
  static CostModel load_file(const std::string& path);
  static CostModel parse(const std::string& text);

  double edge_cost_squared() const { return tables_.edge_cost_sq; }
  double kappa() const;

  /// Binds the model to the labels of a pair. Under case2 every real label
  /// must parse as a base-10 integer, otherwise InputError.
  PairCosts for_pair(const GraphPair& pair) const;

 private:
  CostModel() = default;
  detail::CostTables tables_;
};

/// d_ij per node pair: insertion when i is a g1 dummy, deletion when j is a
/// g2 dummy, substitution when labels differ, else 0.
Matrix build_cost_matrix(const GraphPair& pair, const CostModel& cm);

}  // namespace ged
