#pragma once

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <random>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "benchviz/analytics.hpp"
#include "benchviz/detail/text.hpp"
#include "benchviz/error.hpp"
#include "benchviz/plan_view.hpp"
#include "benchviz/run_json.hpp"
#include "benchviz/sysbench.hpp"
#include "benchviz/tpch.hpp"

namespace benchviz {

enum class RunKind { Sysbench, Tpch };

constexpr std::string_view to_string(RunKind k) noexcept { return k == RunKind::Sysbench ? "sysbench" : "tpch"; }

inline RunKind run_kind_from_string(std::string_view s) {
  if (s == "sysbench") return RunKind::Sysbench;
  if (s == "tpch") return RunKind::Tpch;
  throw Error(ErrorCode::InvalidArgument, "unknown run kind '" + std::string(s) + "'");
}

using Clock = std::chrono::system_clock;

struct RunRecord {
  std::string id;
  std::string display_name;
  RunKind kind = RunKind::Sysbench;
  std::variant<SysbenchRun, TpchRun> payload;
  Clock::time_point uploaded_at;
};

/// Registry entry without the parsed payload.
struct RunSummary {
  std::string id;
  std::string display_name;
  RunKind kind = RunKind::Sysbench;
  Clock::time_point uploaded_at;
  std::size_t item_count = 0;  // samples or query results

  friend bool operator==(const RunSummary&, const RunSummary&) = default;
};

inline std::string format_timestamp(Clock::time_point tp) {
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(tp.time_since_epoch()).count();
  const std::time_t secs = static_cast<std::time_t>(ms / 1000);
  std::tm utc{};
  gmtime_r(&secs, &utc);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02d.%03dZ", utc.tm_year + 1900, utc.tm_mon + 1,
                utc.tm_mday, utc.tm_hour, utc.tm_min, utc.tm_sec, static_cast<int>(ms % 1000));
  return buf;
}

inline JsonValue to_json(const RunSummary& s) {
  JsonValue j = JsonValue::object();
  j["id"] = s.id;
  j["name"] = s.display_name;
  j["kind"] = std::string(to_string(s.kind));
  j["uploadedAt"] = format_timestamp(s.uploaded_at);
  j[s.kind == RunKind::Sysbench ? "sampleCount" : "queryCount"] = s.item_count;
  return j;
}

/// In-memory registry of uploaded runs.
///
/// Mutations are serialized behind an exclusive lock; reads share the lock
/// only long enough to copy a record pointer. Records are immutable once
/// published, so parsing and analytics always run outside the lock.
class Session {
 public:
  Session() : rng_(std::random_device{}()) {}

  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  std::shared_ptr<const RunRecord> upload_run(RunKind kind, std::string display_name, std::string_view file_bytes,
                                              std::string_view filename = {}) {
    if (detail::trim(display_name).empty()) display_name = std::string(filename);
    if (detail::trim(display_name).empty()) throw Error(ErrorCode::InvalidArgument, "run name is empty");
    if (file_bytes.empty()) throw Error(ErrorCode::InvalidArgument, "uploaded file is empty");

    auto record = std::make_shared<RunRecord>();
    record->display_name = std::move(display_name);
    record->kind = kind;
    record->uploaded_at = std::chrono::time_point_cast<std::chrono::milliseconds>(Clock::now());
    try {
      if (kind == RunKind::Sysbench) record->payload = parse_sysbench(file_bytes);
      else record->payload = parse_tpch(file_bytes);
    } catch (const Error& e) {
      throw Error(ErrorCode::ParserError, e);
    }

    std::unique_lock lock(mutex_);
    ensure_name_free(kind, record->display_name, {});
    record->id = next_id();
    runs_.push_back(record);
    return record;
  }

  RunSummary rename_run(const std::string& id, std::string new_name) {
    if (detail::trim(new_name).empty()) throw Error(ErrorCode::InvalidArgument, "run name is empty");
    std::unique_lock lock(mutex_);
    auto it = find_locked(id);
    ensure_name_free((*it)->kind, new_name, id);
    auto updated = std::make_shared<RunRecord>(**it);
    updated->display_name = std::move(new_name);
    *it = updated;
    return summarize(*updated);
  }

  void delete_run(const std::string& id) {
    std::unique_lock lock(mutex_);
    runs_.erase(find_locked(id));
  }

  /// Summaries in upload order.
  std::vector<RunSummary> list_runs() const {
    std::shared_lock lock(mutex_);
    std::vector<RunSummary> out;
    out.reserve(runs_.size());
    for (const auto& r : runs_) out.push_back(summarize(*r));
    return out;
  }

  std::shared_ptr<const RunRecord> get(const std::string& id) const {
    std::shared_lock lock(mutex_);
    for (const auto& r : runs_) {
      if (r->id == id) return r;
    }
    throw Error(ErrorCode::UnknownRun, "no run with id '" + id + "'");
  }

  std::vector<std::pair<std::int64_t, double>> get_timeseries(const std::string& id, MetricKindOltp metric) const {
    const auto record = get(id);
    const auto& run = sysbench_payload(*record);
    std::vector<std::pair<std::int64_t, double>> series;
    series.reserve(run.samples.size());
    for (const auto& s : run.samples) series.emplace_back(s.t, metric_value(s, metric));
    return series;
  }

  WindowAverages get_window_average(const std::string& id, double t_from, double t_to) const {
    const auto record = get(id);
    return window_average(sysbench_payload(*record), t_from, t_to);
  }

  WindowAverages get_full_average(const std::string& id) const {
    const auto record = get(id);
    return full_average(sysbench_payload(*record));
  }

  TpchComparison get_tpch_comparison(const std::vector<std::string>& ids) const {
    if (ids.empty()) throw Error(ErrorCode::InvalidArgument, "no run ids given");
    std::vector<std::shared_ptr<const RunRecord>> records;
    for (const auto& id : ids) records.push_back(get(id));
    std::vector<std::pair<std::string, TpchRun>> runs;
    for (const auto& r : records) runs.emplace_back(r->display_name, tpch_payload(*r));
    return build_comparison(runs);
  }

  void attach_plan(const std::string& id, int query_no, std::string plan_text) {
    if (detail::trim(plan_text).empty()) throw Error(ErrorCode::InvalidArgument, "plan body is empty");
    std::unique_lock lock(mutex_);
    auto it = find_locked(id);
    auto updated = std::make_shared<RunRecord>(**it);
    updated->payload = benchviz::attach_plan(tpch_payload(*updated), query_no, std::move(plan_text));
    *it = updated;
  }

  PlanView get_plan(const std::string& id, int query_no, Terminology term, MetricKindPlan metric) const {
    const auto record = get(id);
    const auto* result = tpch_payload(*record).find(query_no);
    if (result == nullptr) throw Error(ErrorCode::UnknownQuery, "query " + std::to_string(query_no) + " not in run");
    if (!result->plan_source) {
      throw Error(ErrorCode::NoPlanAttached, "query " + std::to_string(query_no) + " has no attached plan");
    }
    try {
      return explain_plan(*result->plan_source, std::nullopt, term, metric);
    } catch (const Error& e) {
      throw Error(ErrorCode::ParserError, e);
    }
  }

  static RunSummary summarize(const RunRecord& r) {
    std::size_t count = std::visit(
        [](const auto& run) {
          if constexpr (std::is_same_v<std::decay_t<decltype(run)>, SysbenchRun>) return run.samples.size();
          else return run.results.size();
        },
        r.payload);
    return {r.id, r.display_name, r.kind, r.uploaded_at, count};
  }

  // Snapshots --------------------------------------------------------------

  JsonValue snapshot() const {
    std::shared_lock lock(mutex_);
    JsonValue runs = JsonValue::array();
    for (const auto& r : runs_) {
      JsonValue item = JsonValue::object();
      item["id"] = r->id;
      item["name"] = r->display_name;
      item["kind"] = std::string(to_string(r->kind));
      item["uploadedAtMs"] =
          std::chrono::duration_cast<std::chrono::milliseconds>(r->uploaded_at.time_since_epoch()).count();
      item["payload"] = std::visit([](const auto& run) { return to_json(run); }, r->payload);
      runs.push_back(std::move(item));
    }
    return JsonValue{{"version", 1}, {"runs", std::move(runs)}};
  }

  /// Replaces the registry with a snapshot's contents.
  void restore(const JsonValue& snap) {
    std::vector<std::shared_ptr<const RunRecord>> loaded;
    try {
      for (const auto& item : snap.at("runs")) {
        auto r = std::make_shared<RunRecord>();
        r->id = item.at("id").get<std::string>();
        r->display_name = item.at("name").get<std::string>();
        r->kind = run_kind_from_string(item.at("kind").get<std::string>());
        r->uploaded_at = Clock::time_point(std::chrono::milliseconds(item.at("uploadedAtMs").get<std::int64_t>()));
        if (r->kind == RunKind::Sysbench) r->payload = sysbench_run_from_json(item.at("payload"));
        else r->payload = tpch_run_from_json(item.at("payload"));
        loaded.push_back(std::move(r));
      }
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::JsonError, std::string("invalid session snapshot: ") + e.what());
    }
    std::unique_lock lock(mutex_);
    runs_ = std::move(loaded);
  }

  void save_snapshot(const std::filesystem::path& path) const {
    const auto text = dump_json(snapshot(), 2);
    auto tmp = path;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write snapshot " + tmp.string());
      out << text << '\n';
    }
    std::filesystem::rename(tmp, path);
  }

  /// Loads `path` when it exists; returns whether anything was loaded.
  bool load_snapshot(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::stringstream buf;
    buf << in.rdbuf();
    JsonValue snap;
    try {
      snap = JsonValue::parse(buf.str());
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::JsonError, std::string("invalid session snapshot: ") + e.what());
    }
    restore(snap);
    return true;
  }

 private:
  using RecordList = std::vector<std::shared_ptr<const RunRecord>>;

  static const SysbenchRun& sysbench_payload(const RunRecord& r) {
    if (r.kind != RunKind::Sysbench) throw Error(ErrorCode::WrongKind, "run '" + r.id + "' is not a sysbench run");
    return std::get<SysbenchRun>(r.payload);
  }

  static const TpchRun& tpch_payload(const RunRecord& r) {
    if (r.kind != RunKind::Tpch) throw Error(ErrorCode::WrongKind, "run '" + r.id + "' is not a TPC-H run");
    return std::get<TpchRun>(r.payload);
  }

  RecordList::iterator find_locked(const std::string& id) {
    auto it = std::find_if(runs_.begin(), runs_.end(), [&](const auto& r) { return r->id == id; });
    if (it == runs_.end()) throw Error(ErrorCode::UnknownRun, "no run with id '" + id + "'");
    return it;
  }

  void ensure_name_free(RunKind kind, const std::string& name, const std::string& except_id) const {
    for (const auto& r : runs_) {
      if (r->kind == kind && r->display_name == name && r->id != except_id) {
        throw Error(ErrorCode::NameTaken, "a " + std::string(to_string(kind)) + " run named '" + name + "' exists");
      }
    }
  }

  std::string next_id() {
    for (;;) {
      char buf[17];
      std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(rng_()));
      std::string id(buf);
      if (std::none_of(runs_.begin(), runs_.end(), [&](const auto& r) { return r->id == id; })) return id;
    }
  }

  mutable std::shared_mutex mutex_;
  RecordList runs_;
  std::mt19937_64 rng_;
};

}  // namespace benchviz
