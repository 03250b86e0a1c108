#pragma once

#include <charconv>
#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include <httplib.h>

#include "benchviz/error.hpp"
#include "benchviz/session.hpp"

namespace benchviz {

inline int http_status(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UnknownRun:
    case ErrorCode::UnknownQuery:
    case ErrorCode::NoPlanAttached: return 404;
    case ErrorCode::NameTaken:
    case ErrorCode::DuplicateRunName: return 409;
    case ErrorCode::EmptyWindow:
    case ErrorCode::MetricUnavailable: return 422;
    default: return 400;
  }
}

inline JsonValue error_body(const Error& e) {
  JsonValue err = JsonValue::object();
  err["code"] = std::string(to_string(e.code()));
  if (e.cause()) err["cause"] = std::string(to_string(*e.cause()));
  err["message"] = e.what();
  return JsonValue{{"error", std::move(err)}};
}

namespace detail {

inline void send_json(httplib::Response& res, const JsonValue& body, int status = 200) {
  res.status = status;
  res.set_content(dump_json(body), "application/json");
}

inline double query_number(const httplib::Request& req, const std::string& key) {
  const auto text = req.get_param_value(key);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw Error(ErrorCode::InvalidArgument, "query parameter '" + key + "' is not a number");
  }
  return value;
}

inline int path_query_no(const std::string& text) {
  auto n = parse_unsigned(text);
  if (!n || *n > kMaxQueryNo) throw Error(ErrorCode::UnknownQuery, "query " + text + " does not exist");
  return static_cast<int>(*n);
}

inline std::vector<std::string> split_ids(std::string_view csv) {
  std::vector<std::string> ids;
  std::size_t start = 0;
  while (start <= csv.size()) {
    auto comma = csv.find(',', start);
    if (comma == std::string_view::npos) comma = csv.size();
    auto id = trim(csv.substr(start, comma - start));
    if (!id.empty()) ids.emplace_back(id);
    start = comma + 1;
  }
  return ids;
}

// Wraps a handler so every benchviz::Error becomes a JSON error response.
template <typename Handler>
httplib::Server::Handler guarded(Handler handler) {
  return [handler](const httplib::Request& req, httplib::Response& res) {
    try {
      handler(req, res);
    } catch (const Error& e) {
      send_json(res, error_body(e), http_status(e.code()));
    } catch (const nlohmann::json::exception& e) {
      send_json(res, error_body(Error(ErrorCode::JsonError, e.what())), 400);
    }
  };
}

}  // namespace detail

/// Registers the v1 API on `server`. `session` must outlive the server.
inline void install_routes(httplib::Server& server, Session& session) {
  using detail::guarded;
  using detail::send_json;
  using httplib::Request;
  using httplib::Response;

  server.Post("/v1/runs", guarded([&session](const Request& req, Response& res) {
    if (!req.has_param("kind")) throw Error(ErrorCode::InvalidArgument, "missing 'kind' query parameter");
    const auto kind = run_kind_from_string(req.get_param_value("kind"));
    std::string name = req.get_param_value("name");
    std::string filename;
    std::string content;
    if (req.is_multipart_form_data()) {
      if (!req.has_file("file")) throw Error(ErrorCode::InvalidArgument, "multipart body has no 'file' part");
      const auto file = req.get_file_value("file");
      filename = file.filename;
      content = file.content;
      if (req.has_file("name")) name = req.get_file_value("name").content;
    } else {
      content = req.body;
    }
    auto record = session.upload_run(kind, name, content, filename);
    send_json(res, to_json(Session::summarize(*record)), 201);
  }));

  server.Get("/v1/runs", guarded([&session](const Request&, Response& res) {
    JsonValue list = JsonValue::array();
    for (const auto& s : session.list_runs()) list.push_back(to_json(s));
    send_json(res, list);
  }));

  server.Patch(R"(/v1/runs/([^/]+))", guarded([&session](const Request& req, Response& res) {
    const auto body = JsonValue::parse(req.body);
    if (!body.is_object() || !body.contains("name") || !body["name"].is_string()) {
      throw Error(ErrorCode::InvalidArgument, "body must be {\"name\": string}");
    }
    send_json(res, to_json(session.rename_run(req.matches[1], body["name"].get<std::string>())));
  }));

  server.Delete(R"(/v1/runs/([^/]+))", guarded([&session](const Request& req, Response& res) {
    session.delete_run(req.matches[1]);
    res.status = 204;
  }));

  server.Get(R"(/v1/runs/([^/]+)/timeseries)", guarded([&session](const Request& req, Response& res) {
    const auto metric = oltp_metric_from_string(req.has_param("metric") ? req.get_param_value("metric") : "tps");
    JsonValue points = JsonValue::array();
    for (const auto& [t, v] : session.get_timeseries(req.matches[1], metric)) {
      points.push_back({{"t", t}, {"value", v}});
    }
    send_json(res, JsonValue{{"metric", std::string(to_string(metric))}, {"points", std::move(points)}});
  }));

  server.Get(R"(/v1/runs/([^/]+)/average)", guarded([&session](const Request& req, Response& res) {
    const std::string id = req.matches[1];
    if (!req.has_param("from") && !req.has_param("to")) {
      send_json(res, to_json(session.get_full_average(id)));
      return;
    }
    const double from = detail::query_number(req, "from");
    const double to = detail::query_number(req, "to");
    send_json(res, to_json(session.get_window_average(id, from, to)));
  }));

  server.Get("/v1/tpch/comparison", guarded([&session](const Request& req, Response& res) {
    send_json(res, to_json(session.get_tpch_comparison(detail::split_ids(req.get_param_value("ids")))));
  }));

  server.Post(R"(/v1/runs/([^/]+)/queries/([^/]+)/plan)", guarded([&session](const Request& req, Response& res) {
    session.attach_plan(req.matches[1], detail::path_query_no(req.matches[2]), req.body);
    res.status = 204;
  }));

  server.Get(R"(/v1/runs/([^/]+)/queries/([^/]+)/plan)", guarded([&session](const Request& req, Response& res) {
    const auto term =
        terminology_from_string(req.has_param("terminology") ? req.get_param_value("terminology") : "canonical");
    const auto metric = plan_metric_from_string(req.has_param("metric") ? req.get_param_value("metric") : "cost");
    send_json(res, to_json(session.get_plan(req.matches[1], detail::path_query_no(req.matches[2]), term, metric)));
  }));
}

}  // namespace benchviz
