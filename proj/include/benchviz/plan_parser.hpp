#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "benchviz/detail/text.hpp"
#include "benchviz/error.hpp"
#include "benchviz/lenient_json.hpp"
#include "benchviz/plan_types.hpp"

namespace benchviz {

namespace detail {

inline std::optional<JsonValue> try_read_json(std::string_view text, DuplicateKeys dups = DuplicateKeys::LastWins) {
  try {
    return read_lenient_json(text, dups);
  } catch (const Error&) {
    return std::nullopt;
  }
}

inline const JsonValue* member(const JsonValue& obj, std::string_view key) {
  if (!obj.is_object()) return nullptr;
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

inline std::string json_scalar_text(const JsonValue& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (const auto& item : v) {
      if (!out.empty()) out += ", ";
      out += json_scalar_text(item);
    }
    return out;
  }
  return v.dump(-1, ' ', false, JsonValue::error_handler_t::replace);
}

// Planner numbers arrive as JSON numbers (PostgreSQL) or quoted decimals
// (MySQL cost_info). Anything else is a structure error.
inline std::optional<double> plan_number(const JsonValue* v, std::string_view key) {
  if (v == nullptr || v->is_null()) return std::nullopt;
  std::optional<double> value;
  if (v->is_number()) {
    value = v->get<double>();
  } else if (v->is_string()) {
    const auto& s = v->get_ref<const std::string&>();
    value = parse_plain_decimal(s);
  }
  if (!value || !std::isfinite(*value) || *value < 0.0) {
    throw Error(ErrorCode::PlanStructureError, "'" + std::string(key) + "' is not a non-negative number");
  }
  return value;
}

// (cost=0.00..172517.37 rows=5916843 width=25)
struct CostAnnotation {
  double total = 0.0;
  double rows = 0.0;
  std::string_view startup_text;
  std::string_view width_text;
  std::size_t begin = 0;  // offset of '('
};

inline std::optional<CostAnnotation> find_cost_annotation(std::string_view line) {
  std::size_t from = 0;
  while ((from = line.find("(cost=", from)) != std::string_view::npos) {
    CostAnnotation a;
    a.begin = from;
    Cursor c(line.substr(from + 6));
    auto range = c.token(")");
    auto dots = range.find("..");
    from += 6;
    if (dots == std::string_view::npos) continue;
    a.startup_text = range.substr(0, dots);
    auto total = parse_plain_decimal(range.substr(dots + 2));
    if (!parse_plain_decimal(a.startup_text) || !total || !c.consume("rows=")) continue;
    auto rows = parse_plain_decimal(c.token(")"));
    if (!rows || !c.consume("width=")) continue;
    a.width_text = c.token(")");
    if (!parse_plain_decimal(a.width_text) || !c.consume(")")) continue;
    a.total = *total;
    a.rows = *rows;
    return a;
  }
  return std::nullopt;
}

inline const JsonValue* postgres_plan_root(const JsonValue& doc) {
  const JsonValue* top = &doc;
  if (doc.is_array()) {
    if (doc.empty() || !doc.front().is_object()) return nullptr;
    top = &doc.front();
  }
  return member(*top, "Plan");
}

inline const JsonValue* query_block_of(const JsonValue& doc) {
  const auto* qb = member(doc, "query_block");
  return qb != nullptr && qb->is_object() ? qb : nullptr;
}

}  // namespace detail

/// Identifies which DBMS produced an EXPLAIN capture. PostgreSQL is checked
/// first (JSON `Plan` key or text cost annotations), then MySQL (a
/// `query_block` with a `cost_info` object), then MariaDB (any other
/// `query_block`).
inline Dialect detect_dialect(std::string_view text) {
  if (detail::trim(text).empty()) throw Error(ErrorCode::UnknownDialect, "empty plan capture");
  auto doc = detail::try_read_json(text);
  if (doc && detail::postgres_plan_root(*doc) != nullptr) return Dialect::Postgres;
  if (!doc) {
    for (auto line : detail::split_lines(text)) {
      if (detail::find_cost_annotation(line)) return Dialect::Postgres;
    }
  }
  if (doc) {
    if (const auto* qb = detail::query_block_of(*doc)) {
      const auto* cost_info = detail::member(*qb, "cost_info");
      if (cost_info != nullptr && cost_info->is_object()) return Dialect::MySQL;
      return Dialect::MariaDB;
    }
  }
  throw Error(ErrorCode::UnknownDialect, "capture matches no supported EXPLAIN format");
}

namespace detail {

// Condition-bearing keys, in the order the first present one becomes the
// node's `condition`; the rest stay in extras.
inline constexpr std::array<std::string_view, 7> kPostgresConditionKeys = {
    "Filter", "Index Cond", "Hash Cond", "Merge Cond", "Join Filter", "Recheck Cond", "TID Cond"};

// Moves the highest-priority condition key out of extras into `condition`.
inline void promote_condition(RawPlanNode& node) {
  if (node.condition) return;
  for (auto cond_key : kPostgresConditionKeys) {
    if (auto it = node.extras.find(std::string(cond_key)); it != node.extras.end()) {
      node.condition = std::move(it->second);
      node.extras.erase(it);
      return;
    }
  }
}

inline void promote_conditions(RawPlanNode& node) {
  promote_condition(node);
  for (auto& child : node.children) promote_conditions(child);
}

inline RawPlanNode postgres_json_node(const JsonValue& plan, int depth = 0) {
  if (depth > 256) throw Error(ErrorCode::PlanStructureError, "plan nested too deeply");
  if (!plan.is_object()) throw Error(ErrorCode::PlanStructureError, "plan node is not an object");
  const auto* type = member(plan, "Node Type");
  if (type == nullptr || !type->is_string() || type->get_ref<const std::string&>().empty()) {
    throw Error(ErrorCode::PlanStructureError, "plan node without \"Node Type\"");
  }

  RawPlanNode node;
  node.raw_op_name = type->get<std::string>();
  std::string qualifiers;
  for (auto key : {"Strategy", "Join Type"}) {
    if (const auto* q = member(plan, key); q != nullptr && q->is_string()) {
      if (!qualifiers.empty()) qualifiers += ", ";
      qualifiers += q->get<std::string>();
    }
  }
  if (!qualifiers.empty()) node.raw_op_name += " (" + qualifiers + ")";

  node.cost = plan_number(member(plan, "Total Cost"), "Total Cost");
  node.rows = plan_number(member(plan, "Plan Rows"), "Plan Rows");

  for (const auto& [key, value] : plan.items()) {
    if (key == "Node Type" || key == "Strategy" || key == "Join Type" || key == "Total Cost" ||
        key == "Plan Rows" || key == "Plans") {
      continue;
    }
    if (key == "Relation Name" && value.is_string()) {
      node.relation = value.get<std::string>();
      continue;
    }
    if (key == "Index Name" && value.is_string() && member(plan, "Relation Name") == nullptr) {
      node.relation = value.get<std::string>();
      continue;
    }
    node.extras[key] = json_scalar_text(value);
  }
  promote_condition(node);

  if (const auto* plans = member(plan, "Plans")) {
    if (!plans->is_array()) throw Error(ErrorCode::PlanStructureError, "\"Plans\" is not an array");
    for (const auto& child : *plans) node.children.push_back(postgres_json_node(child, depth + 1));
  }
  return node;
}

// Rewrites text-format operator labels to the Node Type + qualifier form the
// JSON format produces, so both formats of one plan yield the same names.
inline void postgres_text_label(std::string_view label, RawPlanNode& node) {
  auto take_prefix = [&](std::string_view prefix) {
    if (label.starts_with(prefix)) {
      label.remove_prefix(prefix.size());
      return true;
    }
    return false;
  };
  if (take_prefix("Parallel ")) node.extras["Parallel Aware"] = "true";
  if (take_prefix("Partial ")) node.extras["Partial Mode"] = "Partial";
  else if (take_prefix("Finalize ")) node.extras["Partial Mode"] = "Finalize";

  static constexpr std::array<std::pair<std::string_view, std::string_view>, 4> aggregates = {{
      {"HashAggregate", "Aggregate (Hashed)"},
      {"GroupAggregate", "Aggregate (Sorted)"},
      {"MixedAggregate", "Aggregate (Mixed)"},
      {"Aggregate", "Aggregate (Plain)"},
  }};
  for (auto [text_name, json_name] : aggregates) {
    if (label == text_name) {
      node.raw_op_name = json_name;
      return;
    }
  }

  // "Hash Join" / "Hash Left Join" / "Nested Loop" / "Nested Loop Semi Join" ...
  static constexpr std::array<std::pair<std::string_view, std::string_view>, 3> joins = {{
      {"Hash", "Hash Join"}, {"Merge", "Merge Join"}, {"Nested Loop", "Nested Loop"}}};
  for (auto [head, json_name] : joins) {
    if (!label.starts_with(head)) continue;
    auto rest = trim(label.substr(head.size()));
    if (head == "Nested Loop" && rest.empty()) {
      node.raw_op_name = "Nested Loop (Inner)";
      return;
    }
    if (rest == "Join") {
      node.raw_op_name = std::string(json_name) + " (Inner)";
      return;
    }
    if (rest.ends_with(" Join")) {
      auto kind = rest.substr(0, rest.size() - 5);
      if (kind.find(' ') == std::string_view::npos && !kind.empty()) {
        node.raw_op_name = std::string(json_name) + " (" + std::string(kind) + ")";
        return;
      }
    }
  }

  // "Index Scan using idx on tbl alias", "Seq Scan on lineitem", "Bitmap Index Scan on idx"
  std::string_view op = label;
  if (auto using_at = op.find(" using "); using_at != std::string_view::npos) {
    auto rest = op.substr(using_at + 7);
    op = op.substr(0, using_at);
    auto on_at = rest.find(" on ");
    node.extras["Index Name"] = std::string(rest.substr(0, on_at));
    if (on_at != std::string_view::npos) {
      Cursor c(rest.substr(on_at + 4));
      node.relation = std::string(c.token());
      if (auto alias = c.token(); !alias.empty()) node.extras["Alias"] = std::string(alias);
    }
  } else if (auto on_at = op.find(" on "); on_at != std::string_view::npos) {
    Cursor c(op.substr(on_at + 4));
    op = op.substr(0, on_at);
    node.relation = std::string(c.token());
    if (auto alias = c.token(); !alias.empty()) node.extras["Alias"] = std::string(alias);
  }
  node.raw_op_name = std::string(trim(op));
}

inline RawPlanNode postgres_text_node(std::string_view body, const CostAnnotation& cost) {
  RawPlanNode node;
  postgres_text_label(trim(body.substr(0, cost.begin)), node);
  if (node.raw_op_name.empty()) throw Error(ErrorCode::PlanStructureError, "plan line without operator name");
  node.cost = cost.total;
  node.rows = cost.rows;
  node.extras["Startup Cost"] = std::string(cost.startup_text);
  node.extras["Plan Width"] = std::string(cost.width_text);
  return node;
}

inline std::size_t indent_of(std::string_view line) {
  std::size_t i = 0;
  while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
  return i;
}

inline RawPlanNode postgres_text_plan(std::string_view text) {
  const auto lines = split_lines(text);

  struct Frame {
    RawPlanNode* node;
    std::size_t indent;                        // column of "->" (root: text column)
    std::optional<std::size_t> child_indent;   // column shared by all child arrows
  };

  RawPlanNode root;
  std::vector<Frame> stack;
  RawPlanNode* last = nullptr;
  std::size_t root_col = 0;

  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto line = lines[i];
    const auto trimmed = trim(line);
    if (trimmed.empty()) continue;
    const std::size_t col = indent_of(line);

    if (stack.empty()) {
      if (trimmed.starts_with("->")) continue;
      auto cost = find_cost_annotation(trimmed);
      if (!cost) continue;
      root = postgres_text_node(trimmed, *cost);
      root_col = col;
      stack.push_back({&root, col, std::nullopt});
      last = &root;
      continue;
    }

    if (trimmed.starts_with("->")) {
      auto body = trim(trimmed.substr(2));
      auto cost = find_cost_annotation(body);
      if (!cost) throw Error(ErrorCode::PlanStructureError, "operator line without cost annotation", i + 1);
      while (!stack.empty() && stack.back().indent >= col) stack.pop_back();
      if (stack.empty()) throw Error(ErrorCode::PlanStructureError, "operator indented left of the root", i + 1);
      auto& parent = stack.back();
      if (parent.child_indent && *parent.child_indent != col) {
        throw Error(ErrorCode::PlanStructureError, "sibling operators at different indentation", i + 1);
      }
      parent.child_indent = col;
      parent.node->children.push_back(postgres_text_node(body, *cost));
      last = &parent.node->children.back();
      stack.push_back({last, col, std::nullopt});
      continue;
    }

    // Footer ("Planning Time: ...", "(6 rows)") sits at or left of the root.
    if (col <= root_col) break;

    // Detail line of the most recent operator, e.g. "Filter: (...)".
    if (auto colon = trimmed.find(": "); colon != std::string_view::npos) {
      last->extras[std::string(trimmed.substr(0, colon))] = std::string(trim(trimmed.substr(colon + 2)));
    }
  }
  if (stack.empty()) throw Error(ErrorCode::PlanStructureError, "no plan operator with a cost annotation found");
  promote_conditions(root);
  return root;
}

}  // namespace detail

/// Parses PostgreSQL `EXPLAIN (FORMAT JSON)` output or classic text output.
inline RawPlanNode parse_postgres_plan(std::string_view text) {
  if (auto doc = detail::try_read_json(text)) {
    const auto* plan = detail::postgres_plan_root(*doc);
    if (plan == nullptr) throw Error(ErrorCode::PlanStructureError, "JSON capture has no \"Plan\" object");
    return detail::postgres_json_node(*plan);
  }
  return detail::postgres_text_plan(text);
}

namespace detail {

struct UnnestRules {
  Dialect dialect;
  std::vector<std::string_view> wrappers;
  std::string_view rows_key;
};

inline const UnnestRules& mysql_rules() {
  static const UnnestRules rules{
      Dialect::MySQL,
      {"ordering_operation", "grouping_operation", "duplicates_removal", "buffer_result", "windowing"},
      "rows_examined_per_scan"};
  return rules;
}

inline const UnnestRules& mariadb_rules() {
  static const UnnestRules rules{
      Dialect::MariaDB,
      {"read_sorted_file", "filesort", "temporary_table", "duplicate_removal", "window_functions_computation"},
      "rows"};
  return rules;
}

inline bool is_subquery_list_key(std::string_view key) {
  return key == "attached_subqueries" || key == "optimized_away_subqueries" || key == "subqueries";
}

// One operator-bearing construct found while scanning an object, plus the
// label of the join that attaches it to whatever precedes it.
struct JoinStep {
  RawPlanNode node;
  std::string join_name = "nested_loop";
  std::map<std::string, std::string> join_extras;
  std::optional<std::string> join_condition;
};

class Unnester {
 public:
  explicit Unnester(const UnnestRules& rules) : rules_(rules) {}

  RawPlanNode query_block(const JsonValue& qb) {
    if (!qb.is_object()) throw Error(ErrorCode::PlanStructureError, "\"query_block\" is not an object");
    auto node = contents(qb);
    if (!node) {
      if (const auto* msg = member(qb, "message"); msg != nullptr && msg->is_string()) {
        RawPlanNode leaf;
        leaf.raw_op_name = msg->get<std::string>();
        return leaf;
      }
      throw Error(ErrorCode::PlanStructureError, "query_block contains no table or operation");
    }
    return std::move(*node);
  }

 private:
  // Combines all operator constructs of `obj` into one node: a single
  // construct stands alone, k constructs form a left-deep chain of k-1 joins.
  std::optional<RawPlanNode> contents(const JsonValue& obj) {
    if (++depth_ > 256) throw Error(ErrorCode::PlanStructureError, "plan nested too deeply");
    auto steps = steps_of(obj);
    std::optional<RawPlanNode> result;
    if (!steps.empty()) result = chain(std::move(steps));
    if (result) attach_subqueries(obj, *result);
    --depth_;
    return result;
  }

  RawPlanNode chain(std::vector<JoinStep> steps) {
    RawPlanNode acc = std::move(steps.front().node);
    for (std::size_t i = 1; i < steps.size(); ++i) {
      RawPlanNode join;
      join.raw_op_name = steps[i].join_name;
      join.extras = std::move(steps[i].join_extras);
      join.condition = std::move(steps[i].join_condition);
      join.children.push_back(std::move(acc));
      join.children.push_back(std::move(steps[i].node));
      acc = std::move(join);
    }
    return acc;
  }

  std::vector<JoinStep> steps_of(const JsonValue& obj) {
    std::vector<JoinStep> steps;
    for (const auto& [key, value] : obj.items()) {
      if (key == "table") {
        steps.push_back({table(value), "nested_loop", {}, std::nullopt});
      } else if (key == "nested_loop") {
        if (!value.is_array() || value.empty()) {
          throw Error(ErrorCode::PlanStructureError, "\"nested_loop\" must be a non-empty array");
        }
        std::vector<JoinStep> inner;
        for (const auto& element : value) {
          auto element_steps = steps_of(element);
          if (element_steps.empty()) {
            throw Error(ErrorCode::PlanStructureError, "\"nested_loop\" entry without a table");
          }
          for (auto& s : element_steps) inner.push_back(std::move(s));
        }
        steps.push_back({chain(std::move(inner)), "nested_loop", {}, std::nullopt});
      } else if (key == "block-nl-join" && rules_.dialect == Dialect::MariaDB) {
        auto inner = steps_of(value);
        if (inner.empty()) throw Error(ErrorCode::PlanStructureError, "\"block-nl-join\" without a table");
        auto node = chain(std::move(inner));
        JoinStep step{std::move(node), "block-nl-join", {}, std::nullopt};
        for (const auto& [k, v] : value.items()) {
          if (k == "attached_condition" && v.is_string()) step.join_condition = v.get<std::string>();
          else if (!v.is_object() && !v.is_array()) step.join_extras[k] = json_scalar_text(v);
        }
        steps.push_back(std::move(step));
      } else if (key == "union_result") {
        steps.push_back({union_result(value), "nested_loop", {}, std::nullopt});
      } else if (is_wrapper(key)) {
        steps.push_back({wrapper(key, value), "nested_loop", {}, std::nullopt});
      }
    }
    return steps;
  }

  bool is_wrapper(std::string_view key) const {
    for (auto w : rules_.wrappers) {
      if (w == key) return true;
    }
    return false;
  }

  static void scalar_extras(const JsonValue& obj, RawPlanNode& node) {
    for (const auto& [key, value] : obj.items()) {
      if (!value.is_object() && !(value.is_array() && !value.empty() && value.front().is_object())) {
        node.extras[key] = json_scalar_text(value);
      }
    }
  }

  static void cost_info_extras(const JsonValue* cost_info, RawPlanNode& node) {
    if (cost_info == nullptr || !cost_info->is_object()) return;
    for (const auto& [key, value] : cost_info->items()) node.extras["cost_info." + key] = json_scalar_text(value);
  }

  RawPlanNode wrapper(const std::string& key, const JsonValue& value) {
    if (!value.is_object()) throw Error(ErrorCode::PlanStructureError, "\"" + key + "\" is not an object");
    RawPlanNode node;
    node.raw_op_name = key;
    scalar_extras(value, node);
    const auto* cost_info = member(value, "cost_info");
    cost_info_extras(cost_info, node);
    if (cost_info != nullptr) node.cost = plan_number(member(*cost_info, "sort_cost"), "sort_cost");
    auto inner = contents(value);
    if (!inner) throw Error(ErrorCode::PlanStructureError, "\"" + key + "\" wraps no table or operation");
    node.children.push_back(std::move(*inner));
    return node;
  }

  RawPlanNode union_result(const JsonValue& value) {
    if (!value.is_object()) throw Error(ErrorCode::PlanStructureError, "\"union_result\" is not an object");
    RawPlanNode node;
    node.raw_op_name = "union_result";
    scalar_extras(value, node);
    if (const auto* specs = member(value, "query_specifications"); specs != nullptr && specs->is_array()) {
      for (const auto& spec : *specs) {
        const auto* qb = member(spec, "query_block");
        if (qb == nullptr) throw Error(ErrorCode::PlanStructureError, "union member without \"query_block\"");
        node.children.push_back(query_block(*qb));
      }
    }
    return node;
  }

  RawPlanNode table(const JsonValue& value) {
    if (!value.is_object()) throw Error(ErrorCode::PlanStructureError, "\"table\" is not an object");
    RawPlanNode node;
    const auto* access = member(value, "access_type");
    node.raw_op_name = access != nullptr && access->is_string() ? access->get<std::string>() : "table";
    if (const auto* name = member(value, "table_name"); name != nullptr && name->is_string()) {
      node.relation = name->get<std::string>();
    }
    if (const auto* cond = member(value, "attached_condition"); cond != nullptr && cond->is_string()) {
      node.condition = cond->get<std::string>();
    }
    node.rows = plan_number(member(value, rules_.rows_key), rules_.rows_key);

    const auto* cost_info = member(value, "cost_info");
    if (cost_info != nullptr && cost_info->is_object()) {
      auto read = plan_number(member(*cost_info, "read_cost"), "read_cost");
      auto eval = plan_number(member(*cost_info, "eval_cost"), "eval_cost");
      if (read && eval) node.cost = *read + *eval;
      else if (read) node.cost = read;
      else if (eval) node.cost = eval;
    } else if (rules_.dialect == Dialect::MariaDB) {
      node.cost = plan_number(member(value, "cost"), "cost");
    }

    for (const auto& [key, v] : value.items()) {
      if (key == "access_type" || key == "table_name" || key == "attached_condition" || key == rules_.rows_key ||
          (key == "cost" && rules_.dialect == Dialect::MariaDB)) {
        continue;
      }
      if (!v.is_object() && !(v.is_array() && !v.empty() && v.front().is_object())) {
        node.extras[key] = json_scalar_text(v);
      }
    }
    cost_info_extras(cost_info, node);

    if (const auto* mat = member(value, "materialized_from_subquery")) {
      const auto* qb = member(*mat, "query_block");
      if (qb == nullptr) throw Error(ErrorCode::PlanStructureError, "materialized subquery without \"query_block\"");
      node.children.push_back(query_block(*qb));
    }
    attach_subqueries(value, node);
    return node;
  }

  void attach_subqueries(const JsonValue& obj, RawPlanNode& owner) {
    for (const auto& [key, value] : obj.items()) {
      if (!is_subquery_list_key(key) || !value.is_array()) continue;
      for (const auto& sub : value) {
        const auto* qb = member(sub, "query_block");
        if (qb == nullptr) throw Error(ErrorCode::PlanStructureError, "subquery without \"query_block\"");
        owner.children.push_back(query_block(*qb));
      }
    }
  }

  const UnnestRules& rules_;
  int depth_ = 0;
};

inline RawPlanNode unnest_capture(std::string_view text, const UnnestRules& rules, DuplicateKeys dups) {
  auto doc = read_lenient_json(text, dups);
  const auto* qb = query_block_of(doc);
  if (qb == nullptr) throw Error(ErrorCode::PlanStructureError, "capture has no \"query_block\" object");
  Unnester unnester(rules);
  auto root = unnester.query_block(*qb);
  if (!root.cost) {
    if (const auto* cost_info = member(*qb, "cost_info"); cost_info != nullptr && cost_info->is_object()) {
      root.cost = plan_number(member(*cost_info, "query_cost"), "query_cost");
    } else if (rules.dialect == Dialect::MariaDB) {
      root.cost = plan_number(member(*qb, "cost"), "cost");
    }
  }
  return root;
}

}  // namespace detail

/// Parses MySQL `EXPLAIN FORMAT=JSON`. Wrapper operations become nodes in
/// outer-to-inner order, a `nested_loop` array of k tables becomes a
/// left-deep chain of k-1 `nested_loop` joins, each table a leaf labelled
/// by its access type.
inline RawPlanNode parse_mysql_plan(std::string_view text) {
  return detail::unnest_capture(text, detail::mysql_rules(), DuplicateKeys::LastWins);
}

/// Parses MariaDB `EXPLAIN`/`ANALYZE FORMAT=JSON`. Same unnesting as MySQL,
/// except that repeated `table` keys in one object are kept and read as the
/// join order, and `filesort`/`read_sorted_file`/`temporary_table` wrap.
inline RawPlanNode parse_mariadb_plan(std::string_view text) {
  return detail::unnest_capture(text, detail::mariadb_rules(), DuplicateKeys::KeepAll);
}

inline RawPlanNode parse_plan(std::string_view text, Dialect dialect) {
  switch (dialect) {
    case Dialect::Postgres: return parse_postgres_plan(text);
    case Dialect::MySQL: return parse_mysql_plan(text);
    case Dialect::MariaDB: return parse_mariadb_plan(text);
  }
  throw Error(ErrorCode::UnknownDialect, "unsupported dialect");
}

}  // namespace benchviz
