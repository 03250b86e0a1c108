#pragma once

// Random input builders shared by the unit tests and the acceptance runner.
// Every builder also returns the facts the output must satisfy, computed
// from the generator's own bookkeeping rather than from library code.

#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

namespace benchviz::testkit {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

inline std::string cents_text(std::int64_t cents) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%lld.%02lld", static_cast<long long>(cents / 100),
                static_cast<long long>(cents % 100));
  return buf;
}

inline std::string quoted(const std::string& s) { return "\"" + s + "\""; }

// ---------------------------------------------------------------------------
// PostgreSQL plans

struct PgNode {
  std::string node_type;  // JSON "Node Type"
  std::string text_label; // label as printed by text EXPLAIN
  std::string qualifier_key, qualifier;
  std::string relation;
  std::int64_t cost_cents = 0;  // cumulative total cost
  std::int64_t rows = 0;
  std::vector<PgNode> children;
};

struct GeneratedPlan {
  std::string text;
  std::size_t node_count = 0;
  std::size_t table_count = 0;
};

inline std::size_t pg_count(const PgNode& n) {
  std::size_t c = 1;
  for (const auto& ch : n.children) c += pg_count(ch);
  return c;
}

// Costs are cumulative: a node's total is its children's totals plus a
// non-negative own share, as PostgreSQL reports them.
inline PgNode random_pg_tree(Rng& rng, int depth = 0) {
  struct Kind {
    const char* type;
    const char* text;
    const char* qkey;
    const char* q;
    bool scan;
  };
  static const Kind kinds[] = {
      {"Seq Scan", "Seq Scan", "", "", true},
      {"Index Scan", "Index Scan", "", "", true},
      {"Bitmap Heap Scan", "Bitmap Heap Scan", "", "", true},
      {"Sort", "Sort", "", "", false},
      {"Aggregate", "HashAggregate", "Strategy", "Hashed", false},
      {"Aggregate", "GroupAggregate", "Strategy", "Sorted", false},
      {"Hash Join", "Hash Join", "Join Type", "Inner", false},
      {"Hash Join", "Hash Left Join", "Join Type", "Left", false},
      {"Nested Loop", "Nested Loop", "Join Type", "Inner", false},
      {"Merge Join", "Merge Join", "Join Type", "Inner", false},
      {"Hash", "Hash", "", "", false},
      {"Materialize", "Materialize", "", "", false},
      {"Limit", "Limit", "", "", false},
      {"Unique", "Unique", "", "", false},
      {"Gather", "Gather", "", "", false},
      {"Frobnicate", "Frobnicate", "", "", false},
  };
  const int n_kinds = static_cast<int>(std::size(kinds));
  const bool leaf = depth >= 5 || coin(rng, depth == 0 ? 0.1 : 0.4);
  const Kind& k = leaf ? kinds[uniform_int(rng, 0, 2)] : kinds[uniform_int(rng, 3, n_kinds - 1)];

  PgNode n;
  n.node_type = k.type;
  n.text_label = k.text;
  n.qualifier_key = k.qkey;
  n.qualifier = k.q;
  n.rows = uniform_int(rng, 0, 1000000);
  if (k.scan) n.relation = "t" + std::to_string(uniform_int(rng, 1, 99));
  if (!leaf) {
    const int kids = uniform_int(rng, 1, 3);
    for (int i = 0; i < kids; ++i) n.children.push_back(random_pg_tree(rng, depth + 1));
  }
  std::int64_t inputs = 0;
  for (const auto& ch : n.children) inputs += ch.cost_cents;
  n.cost_cents = inputs + uniform_int(rng, 0, 100000);
  return n;
}

inline void pg_json(const PgNode& n, std::string& out) {
  out += "{\"Node Type\": " + quoted(n.node_type);
  if (!n.qualifier_key.empty()) out += ", " + quoted(n.qualifier_key) + ": " + quoted(n.qualifier);
  if (!n.relation.empty()) out += ", \"Relation Name\": " + quoted(n.relation);
  out += ", \"Startup Cost\": 0.00, \"Total Cost\": " + cents_text(n.cost_cents);
  out += ", \"Plan Rows\": " + std::to_string(n.rows) + ", \"Plan Width\": 8";
  if (!n.children.empty()) {
    out += ", \"Plans\": [";
    for (std::size_t i = 0; i < n.children.size(); ++i) {
      if (i) out += ", ";
      pg_json(n.children[i], out);
    }
    out += "]";
  }
  out += "}";
}

inline void pg_text(const PgNode& n, std::size_t arrow_col, bool root, std::string& out) {
  std::string label = n.text_label;
  if (!n.relation.empty()) label += " on " + n.relation;
  const std::string annotation =
      "  (cost=0.00.." + cents_text(n.cost_cents) + " rows=" + std::to_string(n.rows) + " width=8)";
  if (root) {
    out += " " + label + annotation + "\n";
  } else {
    out += std::string(arrow_col, ' ') + "->  " + label + annotation + "\n";
  }
  const std::size_t body_col = root ? 1 : arrow_col + 4;
  if (n.children.size() > 1) out += std::string(body_col + 2, ' ') + "Hash Cond: (a.x = b.x)\n";
  const std::size_t child_col = root ? 3 : arrow_col + 6;
  for (const auto& ch : n.children) pg_text(ch, child_col, false, out);
}

inline GeneratedPlan random_postgres_plan(Rng& rng, bool text_format) {
  PgNode root = random_pg_tree(rng);
  GeneratedPlan g;
  g.node_count = pg_count(root);
  if (text_format) {
    g.text = "                QUERY PLAN\n------------------------------------------\n";
    pg_text(root, 0, true, g.text);
    g.text += "(" + std::to_string(g.node_count) + " rows)\n";
  } else {
    g.text = "[\n  {\n    \"Plan\": ";
    pg_json(root, g.text);
    g.text += ",\n    \"Planning Time\": 0.123\n  }\n]\n";
  }
  return g;
}

/// Cumulative-cost tree returned without serialization, for cost-bound checks.
inline PgNode random_cumulative_tree(Rng& rng) { return random_pg_tree(rng); }

// ---------------------------------------------------------------------------
// MySQL / MariaDB plans
//
// A query block holds a chain of wrapper objects around a body. The body is
// a single table, a nested_loop array (MySQL and MariaDB), or a run of
// sibling "table" keys optionally followed by a block-nl-join (MariaDB). Each
// table may own a materialized subquery with its own query block.
// Expected node count: tables + wrappers + (k-1) joins for every k-way body.

class UnnestPlanBuilder {
 public:
  UnnestPlanBuilder(Rng& rng, bool mariadb) : rng_(rng), mariadb_(mariadb) {}

  GeneratedPlan build() {
    GeneratedPlan g;
    std::string qb = query_block(0, g, /*top=*/true);
    g.text = (coin(rng_) ? std::string("EXPLAIN FORMAT=JSON SELECT ...\n") : std::string()) + "{\n\"query_block\": " + qb +
             maybe_comma() + "\n}\n" + (coin(rng_) ? "1 row in set (0.00 sec)\n" : "");
    return g;
  }

 private:
  std::string maybe_comma() { return coin(rng_, 0.2) ? "," : ""; }

  std::string cost_text() { return "\"" + cents_text(uniform_int(rng_, 0, 500000)) + "\""; }

  std::string table(int depth, GeneratedPlan& g) {
    static const char* access[] = {"ALL", "index", "range", "ref", "eq_ref", "const", "fulltext", "weird_access"};
    g.node_count += 1;
    g.table_count += 1;
    std::string t = "{\"table_name\": \"t" + std::to_string(uniform_int(rng_, 1, 99)) + "\"";
    if (coin(rng_, 0.95)) t += ", \"access_type\": \"" + std::string(access[uniform_int(rng_, 0, 7)]) + "\"";
    t += mariadb_ ? ", \"rows\": " : ", \"rows_examined_per_scan\": ";
    t += std::to_string(uniform_int(rng_, 0, 100000));
    if (mariadb_) {
      if (coin(rng_)) t += ", \"cost\": " + cents_text(uniform_int(rng_, 0, 10000));
    } else if (coin(rng_, 0.9)) {
      t += ", \"cost_info\": {\"read_cost\": " + cost_text() + ", \"eval_cost\": " + cost_text() + "}";
    }
    if (coin(rng_, 0.3)) t += ", \"attached_condition\": \"(x > 1)\"";
    if (depth < 2 && coin(rng_, 0.15)) {
      t += ", \"materialized_from_subquery\": {\"using_temporary_table\": true, \"query_block\": " +
           query_block(depth + 1, g, false) + "}";
    }
    return t + maybe_comma() + "}";
  }

  // Returns the members of an object holding the body (no braces).
  std::string body(int depth, GeneratedPlan& g) {
    const int shape = uniform_int(rng_, 0, mariadb_ ? 3 : 1);
    if (shape == 0) return "\"table\": " + table(depth, g);
    if (shape == 1) {
      const int k = uniform_int(rng_, 1, 5);
      g.node_count += static_cast<std::size_t>(k - 1);
      std::string arr = "\"nested_loop\": [";
      for (int i = 0; i < k; ++i) {
        if (i) arr += ", ";
        arr += "{\"table\": " + table(depth, g) + "}";
      }
      return arr + maybe_comma() + "]";
    }
    // MariaDB sibling tables, shape 3 adds a block-nl-join at the end.
    const int k = uniform_int(rng_, 2, 4);
    std::string members;
    for (int i = 0; i < k; ++i) {
      if (i) members += ", ";
      members += "\"table\": " + table(depth, g);
    }
    int steps = k;
    if (shape == 3) {
      members += ", \"block-nl-join\": {\"table\": " + table(depth, g) +
                 ", \"buffer_type\": \"flat\", \"join_type\": \"BNL\"}";
      steps += 1;
    }
    g.node_count += static_cast<std::size_t>(steps - 1);
    return members;
  }

  std::string query_block(int depth, GeneratedPlan& g, bool top) {
    static const char* mysql_wrappers[] = {"ordering_operation", "grouping_operation", "duplicates_removal",
                                           "buffer_result", "windowing"};
    static const char* maria_wrappers[] = {"read_sorted_file", "filesort", "temporary_table", "duplicate_removal",
                                           "window_functions_computation"};
    const int wrappers = uniform_int(rng_, 0, 3);
    g.node_count += static_cast<std::size_t>(wrappers);

    std::string inner = body(depth, g);
    for (int i = 0; i < wrappers; ++i) {
      const std::string key = mariadb_ ? maria_wrappers[uniform_int(rng_, 0, 4)] : mysql_wrappers[uniform_int(rng_, 0, 4)];
      std::string extra = coin(rng_) ? "\"using_filesort\": true, " : "";
      if (!mariadb_ && coin(rng_, 0.3)) extra += "\"cost_info\": {\"sort_cost\": " + cost_text() + "}, ";
      inner = "\"" + key + "\": {" + extra + inner + maybe_comma() + "}";
    }
    std::string head = "{\"select_id\": " + std::to_string(depth + 1) + ", ";
    if (!mariadb_) head += "\"cost_info\": {\"query_cost\": " + cost_text() + "}, ";
    else if (top && coin(rng_)) head += "\"cost\": " + cents_text(uniform_int(rng_, 0, 10000)) + ", ";
    return head + inner + maybe_comma() + "}";
  }

  Rng& rng_;
  bool mariadb_;
};

inline GeneratedPlan random_mysql_plan(Rng& rng) { return UnnestPlanBuilder(rng, false).build(); }
inline GeneratedPlan random_mariadb_plan(Rng& rng) { return UnnestPlanBuilder(rng, true).build(); }

// ---------------------------------------------------------------------------
// sysbench logs

struct ExpectedSample {
  std::int64_t t;
  std::int64_t tps_cents, qps_cents, lat_cents, err_cents;
};

struct GeneratedLog {
  std::string text;
  std::vector<ExpectedSample> samples;
};

inline std::string sysbench_line(const ExpectedSample& s, int threads = 8) {
  return "[ " + std::to_string(s.t) + "s ] thds: " + std::to_string(threads) + " tps: " + cents_text(s.tps_cents) +
         " qps: " + cents_text(s.qps_cents) + " (r/w/o: " + cents_text(s.qps_cents * 7 / 10) + "/" +
         cents_text(s.qps_cents * 2 / 10) + "/" + cents_text(s.qps_cents / 10) +
         ") lat (ms,95%): " + cents_text(s.lat_cents) + " err/s: " + cents_text(s.err_cents) +
         " reconn/s: 0.00";
}

inline const char* kSysbenchBanner =
    "sysbench 1.0.20 (using bundled LuaJIT 2.1.0-beta2)\n"
    "\n"
    "Running the test with following options:\n"
    "Number of threads: 8\n"
    "Report intermediate results every 1 second(s)\n"
    "Initializing random number generator from current time\n"
    "\n"
    "Initializing worker threads...\n"
    "\n"
    "Threads started!\n"
    "\n";

inline GeneratedLog random_sysbench_log(Rng& rng, int n_samples, bool with_banner = true) {
  GeneratedLog log;
  if (with_banner) log.text = kSysbenchBanner;
  std::int64_t t = 0;
  for (int i = 0; i < n_samples; ++i) {
    t += uniform_int(rng, 1, 3);
    ExpectedSample s{t, uniform_int(rng, 0, 500000), uniform_int(rng, 0, 9000000), uniform_int(rng, 1, 20000),
                     coin(rng, 0.1) ? uniform_int(rng, 1, 500) : 0};
    log.samples.push_back(s);
    log.text += sysbench_line(s) + "\n";
  }
  return log;
}

}  // namespace benchviz::testkit
