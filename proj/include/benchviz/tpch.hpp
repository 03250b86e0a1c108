#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "benchviz/detail/text.hpp"
#include "benchviz/error.hpp"

namespace benchviz {

inline constexpr int kMinQueryNo = 1;
inline constexpr int kMaxQueryNo = 22;

struct QueryResult {
  int query_no = 0;
  double duration_ms = 0.0;
  std::optional<std::string> plan_source;

  friend bool operator==(const QueryResult&, const QueryResult&) = default;
};

/// Per-query results, sorted by query number, at most one entry per query.
struct TpchRun {
  std::vector<QueryResult> results;

  const QueryResult* find(int query_no) const noexcept {
    auto it = std::lower_bound(results.begin(), results.end(), query_no,
                               [](const QueryResult& r, int q) { return r.query_no < q; });
    return it != results.end() && it->query_no == query_no ? &*it : nullptr;
  }

  friend bool operator==(const TpchRun&, const TpchRun&) = default;
};

namespace detail {

// "-- Query 7", "--query 07:", "Q7", "Q07 shipping" -> 7.
inline std::optional<std::string_view> match_query_header(std::string_view line) {
  std::string_view rest;
  if (line.starts_with("--")) {
    rest = trim_left(line.substr(2));
    if (!istarts_with(rest, "query")) return std::nullopt;
    rest = trim_left(rest.substr(5));
  } else if (line.starts_with('Q')) {
    rest = line.substr(1);
  } else {
    return std::nullopt;
  }
  std::size_t n = 0;
  while (n < rest.size() && is_digit(rest[n])) ++n;
  if (n == 0) return std::nullopt;
  if (n < rest.size() && (std::isalnum(static_cast<unsigned char>(rest[n])) || rest[n] == '_')) return std::nullopt;
  return rest.substr(0, n);
}

inline bool is_plan_marker(std::string_view line) {
  if (!line.starts_with("--")) return false;
  auto rest = trim_left(line.substr(2));
  return istarts_with(rest, "plan") || istarts_with(rest, "explain");
}

// psql: "Time: 5123.440 ms (00:05.123)".
// mysql: "4 rows in set (3.20 sec)", "Empty set (0.01 sec)", "Query OK, 0 rows affected (0.02 sec)".
inline std::optional<double> match_time_line(std::string_view line, std::size_t line_no) {
  auto bad = [&](std::string_view tok) {
    return Error(ErrorCode::NumericOverflow, "duration '" + std::string(tok) + "' is not a non-negative decimal",
                 line_no);
  };
  if (line.starts_with("Time:")) {
    Cursor c(line.substr(5));
    auto tok = c.token();
    if (!c.consume("ms")) return std::nullopt;
    auto ms = parse_plain_decimal(tok);
    if (!ms) throw bad(tok);
    return ms;
  }
  const bool mysql_status = line.find(" in set") != std::string_view::npos || line.starts_with("Empty set") ||
                            line.starts_with("Query OK");
  if (!mysql_status || !line.ends_with("sec)")) return std::nullopt;
  auto open = line.rfind('(');
  if (open == std::string_view::npos) return std::nullopt;
  Cursor c(line.substr(open + 1));
  auto tok = c.token();
  if (!c.consume("sec)")) return std::nullopt;
  auto ms = parse_decimal_times_1000(tok);
  if (!ms) throw bad(tok);
  return ms;
}

inline std::string join_plan_lines(const std::vector<std::string_view>& lines) {
  std::size_t first = 0, last = lines.size();
  while (first < last && trim(lines[first]).empty()) ++first;
  while (last > first && trim(lines[last - 1]).empty()) --last;
  std::string out;
  for (std::size_t i = first; i < last; ++i) {
    out.append(lines[i]);
    out.push_back('\n');
  }
  return out;
}

}  // namespace detail

/// Parses a TPC-H result capture into per-query durations.
///
/// A block starts at a `-- Query <N>` or `Q<N>` header and runs to the next
/// header. Its duration is the sum of the psql `Time: <x> ms` and mysql
/// `(<x> sec)` lines it contains; result tables and other lines are skipped.
/// A `-- Plan` (or `-- EXPLAIN`) comment inside a block starts an inline
/// plan capture that ends at the next `--` comment or header; time lines
/// inside it belong to the EXPLAIN statement and are not counted.
/// Blocks without any time line are dropped.
inline TpchRun parse_tpch(std::string_view text) {
  using namespace detail;

  struct Block {
    int query_no = 0;
    std::size_t header_line = 0;
    std::optional<double> duration_ms;
    std::vector<std::string_view> plan_lines;
  };
  std::vector<Block> blocks;
  bool in_plan = false;

  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const auto raw = lines[i];
    const auto line = trim(raw);

    if (auto q = match_query_header(line)) {
      auto n = parse_unsigned(*q);
      if (!n || *n < kMinQueryNo || *n > kMaxQueryNo) {
        throw Error(ErrorCode::MalformedInput, "query number " + std::string(*q) + " outside 1..22", line_no);
      }
      blocks.push_back(Block{static_cast<int>(*n), line_no, std::nullopt, {}});
      in_plan = false;
      continue;
    }
    if (blocks.empty()) continue;
    auto& block = blocks.back();

    if (is_plan_marker(line)) {
      in_plan = true;
      continue;
    }
    if (line.starts_with("--")) {
      in_plan = false;
      continue;
    }
    auto ms = match_time_line(line, line_no);
    if (in_plan) {
      if (!ms) block.plan_lines.push_back(raw);
      continue;
    }
    if (ms) block.duration_ms = block.duration_ms.value_or(0.0) + *ms;
  }

  TpchRun run;
  for (auto& block : blocks) {
    if (!block.duration_ms) continue;
    QueryResult result{block.query_no, *block.duration_ms, std::nullopt};
    auto plan = join_plan_lines(block.plan_lines);
    if (!plan.empty()) result.plan_source = std::move(plan);

    auto it = std::lower_bound(run.results.begin(), run.results.end(), result.query_no,
                               [](const QueryResult& r, int q) { return r.query_no < q; });
    if (it != run.results.end() && it->query_no == result.query_no) {
      if (it->duration_ms != result.duration_ms) {
        throw Error(ErrorCode::DuplicateQuery,
                    "query " + std::to_string(result.query_no) + " appears twice with different durations",
                    block.header_line);
      }
      if (!it->plan_source) it->plan_source = std::move(result.plan_source);
      continue;
    }
    run.results.insert(it, std::move(result));
  }
  if (run.results.empty()) throw Error(ErrorCode::MalformedInput, "no TPC-H query block with a timing line found");
  return run;
}

/// Returns `run` with `plan_text` attached to `query_no`, replacing any
/// earlier capture.
inline TpchRun attach_plan(TpchRun run, int query_no, std::string plan_text) {
  auto it = std::find_if(run.results.begin(), run.results.end(),
                         [&](const QueryResult& r) { return r.query_no == query_no; });
  if (it == run.results.end()) {
    throw Error(ErrorCode::UnknownQuery, "query " + std::to_string(query_no) + " is not in this run");
  }
  it->plan_source = std::move(plan_text);
  return run;
}

}  // namespace benchviz
