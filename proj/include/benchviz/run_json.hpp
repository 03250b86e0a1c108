#pragma once

// JSON forms shared by the CLI, the HTTP API and session snapshots.

#include <string>

#include "benchviz/analytics.hpp"
#include "benchviz/lenient_json.hpp"
#include "benchviz/sysbench.hpp"
#include "benchviz/tpch.hpp"

namespace benchviz {

inline JsonValue to_json(const MetricSample& s) {
  JsonValue j = JsonValue::object();
  j["t"] = s.t;
  j["tps"] = s.tps;
  j["qps"] = s.qps;
  j["latency"] = s.latency;
  j["errorsPerS"] = s.errors_per_s;
  if (s.extras) {
    j["threads"] = s.extras->threads;
    j["readsPerS"] = s.extras->reads_per_s;
    j["writesPerS"] = s.extras->writes_per_s;
    j["otherPerS"] = s.extras->other_per_s;
    j["reconnectsPerS"] = s.extras->reconnects_per_s;
  }
  return j;
}

inline JsonValue to_json(const SysbenchRun& run) {
  JsonValue j = JsonValue::object();
  j["kind"] = "sysbench";
  j["latencyPercentile"] = run.latency_percentile ? JsonValue(*run.latency_percentile) : JsonValue(nullptr);
  JsonValue samples = JsonValue::array();
  for (const auto& s : run.samples) samples.push_back(to_json(s));
  j["samples"] = std::move(samples);
  if (run.summary) {
    const auto& s = *run.summary;
    j["summary"] = {{"totalTransactions", s.total_transactions},
                    {"totalQueries", s.total_queries},
                    {"avgTps", s.avg_tps},
                    {"avgQps", s.avg_qps},
                    {"avgLatency", s.avg_latency},
                    {"totalTime", s.total_time}};
  } else {
    j["summary"] = nullptr;
  }
  return j;
}

inline JsonValue to_json(const TpchRun& run) {
  JsonValue j = JsonValue::object();
  j["kind"] = "tpch";
  JsonValue results = JsonValue::array();
  for (const auto& r : run.results) {
    JsonValue item = JsonValue::object();
    item["query"] = r.query_no;
    item["durationMs"] = r.duration_ms;
    item["plan"] = r.plan_source ? JsonValue(*r.plan_source) : JsonValue(nullptr);
    results.push_back(std::move(item));
  }
  j["results"] = std::move(results);
  return j;
}

inline JsonValue to_json(const WindowAverages& w) {
  JsonValue j = JsonValue::object();
  j["from"] = w.t_from;
  j["to"] = w.t_to;
  j["sampleCount"] = w.sample_count;
  j["tps"] = w.tps_avg;
  j["qps"] = w.qps_avg;
  j["latency"] = w.latency_avg;
  return j;
}

inline JsonValue to_json(const TpchComparison& c) {
  JsonValue j = JsonValue::object();
  j["runs"] = c.runs;
  JsonValue queries = JsonValue::array();
  for (const auto& [q, cells] : c.per_query) {
    JsonValue row = JsonValue::array();
    for (const auto& cell : cells) {
      row.push_back({{"run", cell.run},
                     {"durationMs", cell.duration_ms ? JsonValue(*cell.duration_ms) : JsonValue(nullptr)}});
    }
    queries.push_back({{"query", q}, {"durations", std::move(row)}});
  }
  j["queries"] = std::move(queries);
  return j;
}

// Readers for snapshot reload. They trust the shape written above.

inline SysbenchRun sysbench_run_from_json(const JsonValue& j) {
  SysbenchRun run;
  if (!j.at("latencyPercentile").is_null()) run.latency_percentile = j.at("latencyPercentile").get<double>();
  for (const auto& s : j.at("samples")) {
    MetricSample m;
    m.t = s.at("t").get<std::int64_t>();
    m.tps = s.at("tps").get<double>();
    m.qps = s.at("qps").get<double>();
    m.latency = s.at("latency").get<double>();
    m.errors_per_s = s.at("errorsPerS").get<double>();
    if (s.contains("threads")) {
      m.extras = SampleExtras{s.at("threads").get<std::int64_t>(), s.at("readsPerS").get<double>(),
                              s.at("writesPerS").get<double>(), s.at("otherPerS").get<double>(),
                              s.at("reconnectsPerS").get<double>()};
    }
    run.samples.push_back(std::move(m));
  }
  if (const auto& s = j.at("summary"); !s.is_null()) {
    run.summary = SysbenchSummary{s.at("totalTransactions").get<std::int64_t>(),
                                  s.at("totalQueries").get<std::int64_t>(),
                                  s.at("avgTps").get<double>(),
                                  s.at("avgQps").get<double>(),
                                  s.at("avgLatency").get<double>(),
                                  s.at("totalTime").get<double>()};
  }
  return run;
}

inline TpchRun tpch_run_from_json(const JsonValue& j) {
  TpchRun run;
  for (const auto& r : j.at("results")) {
    QueryResult q;
    q.query_no = r.at("query").get<int>();
    q.duration_ms = r.at("durationMs").get<double>();
    if (!r.at("plan").is_null()) q.plan_source = r.at("plan").get<std::string>();
    run.results.push_back(std::move(q));
  }
  std::sort(run.results.begin(), run.results.end(),
            [](const QueryResult& a, const QueryResult& b) { return a.query_no < b.query_no; });
  return run;
}

}  // namespace benchviz
