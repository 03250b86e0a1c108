#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "benchviz/error.hpp"

namespace benchviz {

enum class Dialect { Postgres, MySQL, MariaDB };

constexpr std::string_view to_string(Dialect d) noexcept {
  switch (d) {
    case Dialect::Postgres: return "postgres";
    case Dialect::MySQL: return "mysql";
    case Dialect::MariaDB: return "mariadb";
  }
  return "postgres";
}

inline Dialect dialect_from_string(std::string_view s) {
  if (s == "postgres") return Dialect::Postgres;
  if (s == "mysql") return Dialect::MySQL;
  if (s == "mariadb") return Dialect::MariaDB;
  throw Error(ErrorCode::InvalidArgument, "unknown dialect '" + std::string(s) + "'");
}

/// Operator tree as read from one dialect's EXPLAIN output, before any
/// terminology mapping. `cost` is in the dialect's own planner units.
struct RawPlanNode {
  std::string raw_op_name;
  std::optional<double> cost;
  std::optional<double> rows;
  std::optional<std::string> relation;
  std::optional<std::string> condition;
  std::map<std::string, std::string> extras;
  std::vector<RawPlanNode> children;

  friend bool operator==(const RawPlanNode&, const RawPlanNode&) = default;
};

template <typename Node>
std::size_t count_nodes(const Node& node) {
  std::size_t n = 1;
  for (const auto& child : node.children) n += count_nodes(child);
  return n;
}

}  // namespace benchviz
