#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "benchviz/detail/text.hpp"
#include "benchviz/error.hpp"

namespace benchviz {

// Fields sysbench reports per interval that the charts do not plot.
struct SampleExtras {
  std::int64_t threads = 0;
  double reads_per_s = 0.0;
  double writes_per_s = 0.0;
  double other_per_s = 0.0;
  double reconnects_per_s = 0.0;

  friend bool operator==(const SampleExtras&, const SampleExtras&) = default;
};

/// One intermediate report line. `latency` is the percentile latency printed
/// on the line (see SysbenchRun::latency_percentile), in milliseconds.
struct MetricSample {
  std::int64_t t = 0;
  double tps = 0.0;
  double qps = 0.0;
  double latency = 0.0;
  double errors_per_s = 0.0;
  std::optional<SampleExtras> extras;

  friend bool operator==(const MetricSample&, const MetricSample&) = default;
};

struct SysbenchSummary {
  std::int64_t total_transactions = 0;
  std::int64_t total_queries = 0;
  double avg_tps = 0.0;
  double avg_qps = 0.0;
  double avg_latency = 0.0;
  double total_time = 0.0;

  friend bool operator==(const SysbenchSummary&, const SysbenchSummary&) = default;
};

struct SysbenchRun {
  std::vector<MetricSample> samples;
  std::optional<SysbenchSummary> summary;
  // Percentile of the per-interval latency column, e.g. 95 for "lat (ms,95%)".
  std::optional<double> latency_percentile;

  friend bool operator==(const SysbenchRun&, const SysbenchRun&) = default;
};

namespace detail {

inline double sysbench_number(std::string_view token, std::size_t line_no) {
  auto value = parse_plain_decimal(token);
  if (!value) {
    throw Error(ErrorCode::NumericOverflow,
                "metric token '" + std::string(token) + "' is not a finite non-negative decimal", line_no);
  }
  return *value;
}

struct IntervalFields {
  std::string_view t, threads, tps, qps, reads, writes, other, percentile, latency, errors, reconnects;
};

// Structural match of an intermediate report line; numbers are left as raw
// tokens so a line with a bad number is still recognized as a report line.
inline std::optional<IntervalFields> match_interval_line(std::string_view line) {
  Cursor c(line);
  IntervalFields f;
  if (!c.consume("[")) return std::nullopt;
  f.t = c.token("]");
  if (f.t.size() < 2 || f.t.back() != 's') return std::nullopt;
  f.t.remove_suffix(1);
  if (!c.consume("]") || !c.consume("thds:")) return std::nullopt;
  f.threads = c.token();
  if (!c.consume("tps:")) return std::nullopt;
  f.tps = c.token();
  if (!c.consume("qps:")) return std::nullopt;
  f.qps = c.token();
  if (!c.consume("(r/w/o:")) return std::nullopt;
  f.reads = c.token("/)");
  if (!c.consume("/")) return std::nullopt;
  f.writes = c.token("/)");
  if (!c.consume("/")) return std::nullopt;
  f.other = c.token(")");
  if (!c.consume(")") || !c.consume("lat") || !c.consume("(ms,")) return std::nullopt;
  f.percentile = c.token("%");
  if (!c.consume("%):")) return std::nullopt;
  f.latency = c.token();
  if (!c.consume("err/s:")) return std::nullopt;
  f.errors = c.token();
  if (!c.consume("reconn/s:")) return std::nullopt;
  f.reconnects = c.token();
  if (!c.at_end()) return std::nullopt;
  return f;
}

// "107379 (1789.42 per sec.)" -> count and rate.
inline std::optional<std::pair<std::int64_t, double>> match_count_rate(std::string_view rest, std::size_t line_no) {
  Cursor c(rest);
  auto count_tok = c.token("(");
  if (!c.consume("(")) return std::nullopt;
  auto rate_tok = c.token();
  if (!c.consume("per") || !c.consume("sec.)")) return std::nullopt;
  auto count = parse_unsigned(count_tok);
  if (!count) {
    throw Error(ErrorCode::NumericOverflow, "count '" + std::string(count_tok) + "' is not a non-negative integer",
                line_no);
  }
  return std::pair{*count, sysbench_number(rate_tok, line_no)};
}

}  // namespace detail

/// Parses captured sysbench stdout. Intermediate report lines become samples
/// in file order; the `SQL statistics` / `General statistics` /
/// `Latency (ms)` blocks become the summary when transactions, queries,
/// total time and average latency are all found. Every other line is skipped.
inline SysbenchRun parse_sysbench(std::string_view text) {
  using namespace detail;
  SysbenchRun run;

  std::pair<std::int64_t, double> transactions{}, queries{};
  bool have_transactions = false, have_queries = false;
  std::optional<double> total_time, avg_latency;
  bool in_latency_block = false;

  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const auto line = trim(lines[i]);
    if (line.empty()) continue;

    if (auto f = match_interval_line(line)) {
      auto t = parse_unsigned(f->t);
      if (!t || *t == 0) throw Error(ErrorCode::MalformedInput, "interval time must be a positive integer", line_no);
      if (!run.samples.empty() && *t <= run.samples.back().t) {
        throw Error(ErrorCode::MalformedInput,
                    "interval time " + std::to_string(*t) + "s does not follow " +
                        std::to_string(run.samples.back().t) + "s",
                    line_no);
      }
      auto threads = parse_unsigned(f->threads);
      if (!threads) throw Error(ErrorCode::NumericOverflow, "thread count is not an integer", line_no);

      MetricSample s;
      s.t = *t;
      s.tps = sysbench_number(f->tps, line_no);
      s.qps = sysbench_number(f->qps, line_no);
      s.latency = sysbench_number(f->latency, line_no);
      s.errors_per_s = sysbench_number(f->errors, line_no);
      s.extras = SampleExtras{*threads, sysbench_number(f->reads, line_no), sysbench_number(f->writes, line_no),
                              sysbench_number(f->other, line_no), sysbench_number(f->reconnects, line_no)};
      double percentile = sysbench_number(f->percentile, line_no);
      if (!run.latency_percentile) run.latency_percentile = percentile;
      run.samples.push_back(std::move(s));
      continue;
    }

    if (line == "Latency (ms):") {
      in_latency_block = true;
      continue;
    }
    if (line == "SQL statistics:" || line == "General statistics:" || line == "Threads fairness:") {
      in_latency_block = false;
      continue;
    }

    if (line.starts_with("transactions:")) {
      if (auto m = match_count_rate(line.substr(13), line_no)) {
        transactions = *m;
        have_transactions = true;
      }
    } else if (line.starts_with("queries:")) {
      if (auto m = match_count_rate(line.substr(8), line_no)) {
        queries = *m;
        have_queries = true;
      }
    } else if (line.starts_with("total time:")) {
      auto tok = trim(line.substr(11));
      if (tok.ends_with('s')) tok.remove_suffix(1);
      total_time = sysbench_number(tok, line_no);
    } else if (in_latency_block && line.starts_with("avg:")) {
      avg_latency = sysbench_number(trim(line.substr(4)), line_no);
    }
  }

  if (have_transactions && have_queries && total_time && avg_latency) {
    run.summary = SysbenchSummary{transactions.first, queries.first, transactions.second,
                                  queries.second,     *avg_latency,  *total_time};
  }
  if (run.samples.empty() && !run.summary) {
    throw Error(ErrorCode::MalformedInput, "no sysbench interval reports or final report found");
  }
  return run;
}

}  // namespace benchviz
