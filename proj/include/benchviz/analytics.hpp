#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "benchviz/error.hpp"
#include "benchviz/sysbench.hpp"
#include "benchviz/tpch.hpp"

namespace benchviz {

enum class MetricKindOltp { TPS, QPS, Latency };

constexpr std::string_view to_string(MetricKindOltp m) noexcept {
  switch (m) {
    case MetricKindOltp::TPS: return "tps";
    case MetricKindOltp::QPS: return "qps";
    case MetricKindOltp::Latency: return "latency";
  }
  return "tps";
}

inline MetricKindOltp oltp_metric_from_string(std::string_view s) {
  if (s == "tps") return MetricKindOltp::TPS;
  if (s == "qps") return MetricKindOltp::QPS;
  if (s == "latency") return MetricKindOltp::Latency;
  throw Error(ErrorCode::InvalidArgument, "unknown metric '" + std::string(s) + "'");
}

inline double metric_value(const MetricSample& s, MetricKindOltp m) noexcept {
  switch (m) {
    case MetricKindOltp::TPS: return s.tps;
    case MetricKindOltp::QPS: return s.qps;
    case MetricKindOltp::Latency: return s.latency;
  }
  return s.tps;
}

struct WindowAverages {
  double tps_avg = 0.0;
  double qps_avg = 0.0;
  double latency_avg = 0.0;
  std::size_t sample_count = 0;
  double t_from = 0.0;
  double t_to = 0.0;

  friend bool operator==(const WindowAverages&, const WindowAverages&) = default;
};

/// Unweighted means over the samples with t_from <= t <= t_to.
inline WindowAverages window_average(const SysbenchRun& run, double t_from, double t_to) {
  if (!(t_from <= t_to)) throw Error(ErrorCode::InvalidArgument, "window start is after window end");
  const auto& samples = run.samples;
  auto first = std::lower_bound(samples.begin(), samples.end(), t_from,
                                [](const MetricSample& s, double t) { return static_cast<double>(s.t) < t; });
  auto last = std::upper_bound(first, samples.end(), t_to,
                               [](double t, const MetricSample& s) { return t < static_cast<double>(s.t); });
  if (first == last) throw Error(ErrorCode::EmptyWindow, "no samples in the selected window");

  WindowAverages out;
  out.t_from = t_from;
  out.t_to = t_to;
  double tps = 0.0, qps = 0.0, latency = 0.0;
  for (auto it = first; it != last; ++it) {
    tps += it->tps;
    qps += it->qps;
    latency += it->latency;
  }
  out.sample_count = static_cast<std::size_t>(last - first);
  const auto n = static_cast<double>(out.sample_count);
  out.tps_avg = tps / n;
  out.qps_avg = qps / n;
  out.latency_avg = latency / n;
  return out;
}

inline WindowAverages full_average(const SysbenchRun& run) {
  if (run.samples.empty()) throw Error(ErrorCode::EmptyWindow, "run has no samples");
  return window_average(run, static_cast<double>(run.samples.front().t), static_cast<double>(run.samples.back().t));
}

struct ComparisonCell {
  std::string run;
  std::optional<double> duration_ms;

  friend bool operator==(const ComparisonCell&, const ComparisonCell&) = default;
};

/// Per-query durations of several runs; every per_query row is aligned
/// with `runs`, and a run lacking the query has an empty cell.
struct TpchComparison {
  std::vector<std::string> runs;
  std::map<int, std::vector<ComparisonCell>> per_query;

  friend bool operator==(const TpchComparison&, const TpchComparison&) = default;
};

inline TpchComparison build_comparison(const std::vector<std::pair<std::string, TpchRun>>& runs) {
  if (runs.empty()) throw Error(ErrorCode::InvalidArgument, "comparison needs at least one run");
  TpchComparison out;
  std::set<std::string> names;
  std::set<int> queries;
  for (const auto& [name, run] : runs) {
    if (!names.insert(name).second) throw Error(ErrorCode::DuplicateRunName, "run name '" + name + "' used twice");
    out.runs.push_back(name);
    for (const auto& r : run.results) queries.insert(r.query_no);
  }
  for (int q : queries) {
    auto& row = out.per_query[q];
    for (const auto& [name, run] : runs) {
      std::optional<double> duration;
      for (const auto& r : run.results) {
        if (r.query_no == q) {
          duration = r.duration_ms;
          break;
        }
      }
      row.push_back({name, duration});
    }
  }
  return out;
}

}  // namespace benchviz
