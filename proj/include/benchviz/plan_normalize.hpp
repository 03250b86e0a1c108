#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "benchviz/error.hpp"
#include "benchviz/lenient_json.hpp"
#include "benchviz/plan_types.hpp"

namespace benchviz {

enum class OperatorClass {
  FullScan,
  IndexScan,
  IndexLookup,
  Sort,
  Aggregate,
  NestedLoopJoin,
  HashJoin,
  MergeJoin,
  Materialize,
  Limit,
  Distinct,
  Gather,
  SubqueryScan,
  Other,
};

inline constexpr std::array<OperatorClass, 14> kAllOperatorClasses = {
    OperatorClass::FullScan,       OperatorClass::IndexScan, OperatorClass::IndexLookup, OperatorClass::Sort,
    OperatorClass::Aggregate,      OperatorClass::NestedLoopJoin, OperatorClass::HashJoin, OperatorClass::MergeJoin,
    OperatorClass::Materialize,    OperatorClass::Limit,     OperatorClass::Distinct,    OperatorClass::Gather,
    OperatorClass::SubqueryScan,   OperatorClass::Other};

constexpr std::string_view to_string(OperatorClass c) noexcept {
  switch (c) {
    case OperatorClass::FullScan: return "FullScan";
    case OperatorClass::IndexScan: return "IndexScan";
    case OperatorClass::IndexLookup: return "IndexLookup";
    case OperatorClass::Sort: return "Sort";
    case OperatorClass::Aggregate: return "Aggregate";
    case OperatorClass::NestedLoopJoin: return "NestedLoopJoin";
    case OperatorClass::HashJoin: return "HashJoin";
    case OperatorClass::MergeJoin: return "MergeJoin";
    case OperatorClass::Materialize: return "Materialize";
    case OperatorClass::Limit: return "Limit";
    case OperatorClass::Distinct: return "Distinct";
    case OperatorClass::Gather: return "Gather";
    case OperatorClass::SubqueryScan: return "SubqueryScan";
    case OperatorClass::Other: return "Other";
  }
  return "Other";
}

inline OperatorClass operator_class_from_string(std::string_view s) {
  for (auto c : kAllOperatorClasses) {
    if (to_string(c) == s) return c;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown operator class '" + std::string(s) + "'");
}

enum class Terminology { Canonical, PostgresStyle, MySQLStyle, MariaDBStyle };

inline constexpr std::array<Terminology, 4> kAllTerminologies = {
    Terminology::Canonical, Terminology::PostgresStyle, Terminology::MySQLStyle, Terminology::MariaDBStyle};

constexpr std::string_view to_string(Terminology t) noexcept {
  switch (t) {
    case Terminology::Canonical: return "canonical";
    case Terminology::PostgresStyle: return "postgres";
    case Terminology::MySQLStyle: return "mysql";
    case Terminology::MariaDBStyle: return "mariadb";
  }
  return "canonical";
}

inline Terminology terminology_from_string(std::string_view s) {
  for (auto t : kAllTerminologies) {
    if (to_string(t) == s) return t;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown terminology '" + std::string(s) + "'");
}

enum class MetricKindPlan { Cost, Rows };

constexpr std::string_view to_string(MetricKindPlan m) noexcept {
  return m == MetricKindPlan::Cost ? "cost" : "rows";
}

inline MetricKindPlan plan_metric_from_string(std::string_view s) {
  if (s == "cost") return MetricKindPlan::Cost;
  if (s == "rows") return MetricKindPlan::Rows;
  throw Error(ErrorCode::InvalidArgument, "unknown plan metric '" + std::string(s) + "'");
}

namespace detail {

struct OperatorTables {
  std::unordered_map<std::string, OperatorClass> by_key;  // "<dialect>\x1f<label>"
  std::map<OperatorClass, std::array<std::string_view, 4>> style_names;

  static std::string key(Dialect d, std::string_view label) {
    std::string k(to_string(d));
    k.push_back('\x1f');
    k.append(label);
    return k;
  }
};

inline const OperatorTables& operator_tables() {
  static const OperatorTables tables = [] {
    OperatorTables t;
#define BENCHVIZ_OPERATOR(dialect, label, cls) \
  t.by_key.emplace(OperatorTables::key(Dialect::dialect, label), OperatorClass::cls);
#define BENCHVIZ_STYLE(cls, canonical, postgres, mysql, mariadb) \
  t.style_names[OperatorClass::cls] = {canonical, postgres, mysql, mariadb};
#include "benchviz/data/operator_map.inc"
#undef BENCHVIZ_OPERATOR
#undef BENCHVIZ_STYLE
    return t;
  }();
  return tables;
}

}  // namespace detail

/// Maps a dialect-native operator label to its canonical class. Total:
/// labels missing from the table map to Other.
inline OperatorClass classify(std::string_view raw_op_name, Dialect dialect) {
  const auto& tables = detail::operator_tables();
  if (auto it = tables.by_key.find(detail::OperatorTables::key(dialect, raw_op_name)); it != tables.by_key.end()) {
    return it->second;
  }
  if (raw_op_name.ends_with(')')) {
    if (auto open = raw_op_name.rfind(" ("); open != std::string_view::npos) {
      auto base = raw_op_name.substr(0, open);
      if (auto it = tables.by_key.find(detail::OperatorTables::key(dialect, base)); it != tables.by_key.end()) {
        return it->second;
      }
    }
  }
  return OperatorClass::Other;
}

/// Label for `op_class` under `term`; nullopt for Other.
inline std::optional<std::string_view> style_name(OperatorClass op_class, Terminology term) {
  const auto& names = detail::operator_tables().style_names;
  auto it = names.find(op_class);
  if (it == names.end()) return std::nullopt;
  return it->second[static_cast<std::size_t>(term)];
}

/// Dialect-independent plan node. `cost` keeps the dialect's own units and
/// meaning; `self_cost` is the node's exclusive share (see normalize()).
struct PlanNode {
  OperatorClass op_class = OperatorClass::Other;
  std::string display_name;
  std::string raw_op_name;
  Dialect dialect = Dialect::Postgres;
  std::optional<double> cost;
  std::optional<double> self_cost;
  std::optional<double> rows;
  std::optional<std::string> relation;
  std::optional<std::string> condition;
  std::map<std::string, std::string> extras;
  std::vector<PlanNode> children;

  friend bool operator==(const PlanNode&, const PlanNode&) = default;
};

/// PostgreSQL reports cumulative costs (a node's total includes its
/// inputs); MySQL and MariaDB report per-operator figures.
constexpr bool has_cumulative_costs(Dialect d) noexcept { return d == Dialect::Postgres; }

inline std::string display_label(const PlanNode& node, Terminology term) {
  if (auto name = style_name(node.op_class, term)) return std::string(*name);
  return node.raw_op_name;
}

/// Classifies every node and derives exclusive costs. For cumulative
/// dialects self_cost = max(0, cost - sum of children's costs), with absent
/// child costs counted as 0; otherwise self_cost = cost.
inline PlanNode normalize(const RawPlanNode& raw, Dialect dialect) {
  PlanNode node;
  node.op_class = classify(raw.raw_op_name, dialect);
  node.raw_op_name = raw.raw_op_name;
  node.dialect = dialect;
  node.cost = raw.cost;
  node.rows = raw.rows;
  node.relation = raw.relation;
  node.condition = raw.condition;
  node.extras = raw.extras;
  node.display_name = display_label(node, Terminology::Canonical);
  node.children.reserve(raw.children.size());
  for (const auto& child : raw.children) node.children.push_back(normalize(child, dialect));

  if (raw.cost) {
    if (has_cumulative_costs(dialect)) {
      double inputs = 0.0;
      for (const auto& child : raw.children) inputs += child.cost.value_or(0.0);
      node.self_cost = std::max(0.0, *raw.cost - inputs);
    } else {
      node.self_cost = raw.cost;
    }
  }
  return node;
}

/// Rewrites display names only; classes and shape are untouched.
inline PlanNode render_terminology(PlanNode tree, Terminology term) {
  tree.display_name = display_label(tree, term);
  for (auto& child : tree.children) child = render_terminology(std::move(child), term);
  return tree;
}

struct MetricShare {
  std::string label;
  double pct = 0.0;

  friend bool operator==(const MetricShare&, const MetricShare&) = default;
};

/// Share of the chosen metric per display label, as percentages of the
/// tree total, largest first (ties by label). Cost uses self_cost so that
/// cumulative dialects are not double counted. Nodes without the metric
/// contribute 0 to their label's group.
inline std::vector<MetricShare> metric_percentages(const PlanNode& tree, MetricKindPlan metric) {
  std::map<std::string, double> groups;
  bool any = false;
  double total = 0.0;

  std::vector<const PlanNode*> pending{&tree};
  while (!pending.empty()) {
    const PlanNode* node = pending.back();
    pending.pop_back();
    const auto& value = metric == MetricKindPlan::Cost ? node->self_cost : node->rows;
    double contribution = 0.0;
    if (value) {
      any = true;
      contribution = *value;
    }
    groups[node->display_name] += contribution;
    for (const auto& child : node->children) pending.push_back(&child);
  }

  // Summing the group totals keeps every share at or below 100.
  for (const auto& [label, sum] : groups) total += sum;
  if (!any) {
    throw Error(ErrorCode::MetricUnavailable, "no plan node carries " + std::string(to_string(metric)));
  }
  if (!(total > 0.0) || !std::isfinite(total)) {
    throw Error(ErrorCode::MetricUnavailable, "total " + std::string(to_string(metric)) + " of the plan is zero");
  }

  std::vector<MetricShare> shares;
  shares.reserve(groups.size());
  for (const auto& [label, sum] : groups) shares.push_back({label, 100.0 * (sum / total)});
  std::stable_sort(shares.begin(), shares.end(), [](const MetricShare& a, const MetricShare& b) {
    if (a.pct != b.pct) return a.pct > b.pct;
    return a.label < b.label;
  });
  return shares;
}

// Hierarchy document -----------------------------------------------------

namespace detail {

inline constexpr std::string_view kRawNameKey = "rawOpName";

inline JsonValue optional_number(const std::optional<double>& v) { return v ? JsonValue(*v) : JsonValue(nullptr); }
inline JsonValue optional_text(const std::optional<std::string>& v) { return v ? JsonValue(*v) : JsonValue(nullptr); }

}  // namespace detail

/// Tree document in the shape tree-layout renderers consume. The native
/// operator label travels in `attrs.extra.rawOpName`.
inline JsonValue hierarchy_document(const PlanNode& node) {
  JsonValue extra = JsonValue::object();
  extra[std::string(detail::kRawNameKey)] = node.raw_op_name;
  for (const auto& [key, value] : node.extras) {
    if (key != detail::kRawNameKey) extra[key] = value;
  }

  JsonValue attrs = JsonValue::object();
  attrs["cost"] = detail::optional_number(node.cost);
  attrs["selfCost"] = detail::optional_number(node.self_cost);
  attrs["rows"] = detail::optional_number(node.rows);
  attrs["relation"] = detail::optional_text(node.relation);
  attrs["condition"] = detail::optional_text(node.condition);
  attrs["extra"] = std::move(extra);

  JsonValue children = JsonValue::array();
  for (const auto& child : node.children) children.push_back(hierarchy_document(child));

  JsonValue doc = JsonValue::object();
  doc["name"] = node.display_name;
  doc["opClass"] = std::string(to_string(node.op_class));
  doc["dialect"] = std::string(to_string(node.dialect));
  doc["attrs"] = std::move(attrs);
  doc["children"] = std::move(children);
  return doc;
}

inline std::string dump_json(const JsonValue& value, int indent = -1) {
  return value.dump(indent, ' ', false, JsonValue::error_handler_t::replace);
}

inline std::string to_hierarchy_json(const PlanNode& tree, int indent = -1) {
  return dump_json(hierarchy_document(tree), indent);
}

namespace detail {

inline const JsonValue& require(const JsonValue& obj, std::string_view key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw Error(ErrorCode::JsonError, "hierarchy node missing \"" + std::string(key) + "\"");
  return *it;
}

inline std::optional<double> read_optional_number(const JsonValue& v) {
  if (v.is_null()) return std::nullopt;
  if (!v.is_number()) throw Error(ErrorCode::JsonError, "expected number or null");
  return v.get<double>();
}

inline std::optional<std::string> read_optional_text(const JsonValue& v) {
  if (v.is_null()) return std::nullopt;
  if (!v.is_string()) throw Error(ErrorCode::JsonError, "expected string or null");
  return v.get<std::string>();
}

inline PlanNode plan_node_from_document(const JsonValue& doc, int depth = 0) {
  if (depth > 512 || !doc.is_object()) throw Error(ErrorCode::JsonError, "hierarchy node is not an object");
  PlanNode node;
  node.display_name = require(doc, "name").get<std::string>();
  node.op_class = operator_class_from_string(require(doc, "opClass").get<std::string>());
  node.dialect = dialect_from_string(require(doc, "dialect").get<std::string>());
  const auto& attrs = require(doc, "attrs");
  node.cost = read_optional_number(require(attrs, "cost"));
  node.self_cost = read_optional_number(require(attrs, "selfCost"));
  node.rows = read_optional_number(require(attrs, "rows"));
  node.relation = read_optional_text(require(attrs, "relation"));
  node.condition = read_optional_text(require(attrs, "condition"));
  for (const auto& [key, value] : require(attrs, "extra").items()) {
    if (key == kRawNameKey) node.raw_op_name = value.get<std::string>();
    else node.extras[key] = value.get<std::string>();
  }
  for (const auto& child : require(doc, "children")) node.children.push_back(plan_node_from_document(child, depth + 1));
  return node;
}

}  // namespace detail

/// Inverse of to_hierarchy_json.
inline PlanNode parse_hierarchy_json(std::string_view text) {
  try {
    return detail::plan_node_from_document(JsonValue::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::JsonError, e.what());
  }
}

}  // namespace benchviz
