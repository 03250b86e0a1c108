// Command-line front end: parse result files, render plans, compare TPC-H
// runs, and serve the HTTP API.

#include <atomic>
#include <csignal>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <pthread.h>

#include <CLI11.hpp>

#include "benchviz/analytics.hpp"
#include "benchviz/http_api.hpp"
#include "benchviz/plan_view.hpp"
#include "benchviz/run_json.hpp"
#include "benchviz/session.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

int fail(std::string_view code, std::string message) {
  for (auto& c : message) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  std::cerr << "benchviz: error[" << code << "]: " << message << '\n';
  return kExitFailure;
}

int fail(const benchviz::Error& e) { return fail(benchviz::to_string(e.code()), e.what()); }

int usage(std::string message) {
  std::cerr << "benchviz: error[Usage]: " << message << '\n';
  return kExitUsage;
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int emit(const benchviz::JsonValue& doc, const std::string& out_path) {
  const auto text = benchviz::dump_json(doc, 2) + "\n";
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text)) return fail("IoError", "cannot write " + out_path);
  return kExitOk;
}

struct ParseOptions {
  std::string kind;
  std::string input;
  std::string out;
};

int cmd_parse(const ParseOptions& opt) {
  auto text = read_file(opt.input);
  if (!text) return fail("IoError", "cannot read " + opt.input);
  try {
    if (opt.kind == "sysbench") return emit(benchviz::to_json(benchviz::parse_sysbench(*text)), opt.out);
    return emit(benchviz::to_json(benchviz::parse_tpch(*text)), opt.out);
  } catch (const benchviz::Error& e) {
    return fail(e);
  }
}

struct PlanOptions {
  std::string input;
  std::string dialect = "auto";
  std::string terminology = "canonical";
  std::string metric = "cost";
};

int cmd_plan(const PlanOptions& opt) {
  auto text = read_file(opt.input);
  if (!text) return fail("IoError", "cannot read " + opt.input);
  try {
    std::optional<benchviz::Dialect> dialect;
    if (opt.dialect != "auto") dialect = benchviz::dialect_from_string(opt.dialect);
    auto view = benchviz::explain_plan(*text, dialect, benchviz::terminology_from_string(opt.terminology),
                                       benchviz::plan_metric_from_string(opt.metric));
    return emit(benchviz::to_json(view), "");
  } catch (const benchviz::Error& e) {
    return fail(e);
  }
}

struct CompareOptions {
  std::string kind = "tpch";
  std::vector<std::string> inputs;
};

int cmd_compare(const CompareOptions& opt) {
  if (opt.kind != "tpch") return usage("compare supports --kind tpch only");
  std::vector<std::pair<std::string, benchviz::TpchRun>> runs;
  for (const auto& path : opt.inputs) {
    auto text = read_file(path);
    if (!text) return fail("IoError", "cannot read " + path);
    try {
      runs.emplace_back(std::filesystem::path(path).filename().string(), benchviz::parse_tpch(*text));
    } catch (const benchviz::Error& e) {
      if (e.code() == benchviz::ErrorCode::MalformedInput) {
        try {
          benchviz::parse_sysbench(*text);
          return usage(path + " is a sysbench result; compare needs TPC-H results only");
        } catch (const benchviz::Error&) {
        }
      }
      return fail(e);
    }
  }
  try {
    return emit(benchviz::to_json(benchviz::build_comparison(runs)), "");
  } catch (const benchviz::Error& e) {
    return fail(e);
  }
}

struct ServeOptions {
  std::string host = "0.0.0.0";
  int port = 8080;
  std::string snapshot;
  std::string static_dir;
};

int cmd_serve(const ServeOptions& opt) {
  benchviz::Session session;
  if (!opt.snapshot.empty()) {
    try {
      if (session.load_snapshot(opt.snapshot)) {
        std::cerr << "benchviz: loaded " << session.list_runs().size() << " runs from " << opt.snapshot << '\n';
      }
    } catch (const benchviz::Error& e) {
      return fail(e);
    }
  }

  httplib::Server server;
  benchviz::install_routes(server, session);
  if (!opt.static_dir.empty() && !server.set_mount_point("/", opt.static_dir)) {
    return usage("static directory " + opt.static_dir + " does not exist");
  }
  if (!server.bind_to_port(opt.host, opt.port)) {
    return fail("BindError", "cannot listen on " + opt.host + ":" + std::to_string(opt.port));
  }

  // Signals are taken synchronously on a dedicated thread; every other
  // thread (including the server's workers) inherits the blocked mask.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);
  std::atomic<bool> signalled{false};
  std::thread waiter([&] {
    int sig = 0;
    sigwait(&signals, &sig);
    signalled = true;
    server.stop();
  });

  std::cerr << "benchviz: serving on " << opt.host << ":" << opt.port << '\n';
  server.listen_after_bind();

  if (!signalled) pthread_kill(waiter.native_handle(), SIGTERM);
  waiter.join();

  if (!opt.snapshot.empty()) {
    try {
      session.save_snapshot(opt.snapshot);
    } catch (const std::exception& e) {
      return fail("IoError", e.what());
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Benchmark result and EXPLAIN plan analytics"};
  app.require_subcommand(1, 1);

  ParseOptions parse_opt;
  auto* parse = app.add_subcommand("parse", "Parse a sysbench or TPC-H result file to JSON");
  parse->add_option("--kind", parse_opt.kind, "Result kind")
      ->required()
      ->check(CLI::IsMember({"sysbench", "tpch"}));
  parse->add_option("input", parse_opt.input, "Result file")->required();
  parse->add_option("--out", parse_opt.out, "Output path (default stdout)");

  PlanOptions plan_opt;
  auto* plan = app.add_subcommand("plan", "Render an EXPLAIN capture as a hierarchy document");
  plan->add_option("input", plan_opt.input, "EXPLAIN capture")->required();
  plan->add_option("--dialect", plan_opt.dialect, "Source DBMS")
      ->check(CLI::IsMember({"auto", "postgres", "mysql", "mariadb"}));
  plan->add_option("--terminology", plan_opt.terminology, "Operator naming")
      ->check(CLI::IsMember({"canonical", "postgres", "mysql", "mariadb"}));
  plan->add_option("--metric", plan_opt.metric, "Percentage metric")->check(CLI::IsMember({"cost", "rows"}));

  CompareOptions compare_opt;
  auto* compare = app.add_subcommand("compare", "Compare per-query durations of TPC-H runs");
  compare->add_option("--kind", compare_opt.kind, "Result kind");
  compare->add_option("inputs", compare_opt.inputs, "TPC-H result files")->required();

  ServeOptions serve_opt;
  auto* serve = app.add_subcommand("serve", "Serve the HTTP API");
  serve->add_option("--host", serve_opt.host, "Listen address");
  serve->add_option("--port", serve_opt.port, "Listen port")->envname("BENCHVIZ_PORT")->check(CLI::Range(0, 65535));
  serve->add_option("--snapshot", serve_opt.snapshot, "Session snapshot file")->envname("BENCHVIZ_SNAPSHOT");
  serve->add_option("--static", serve_opt.static_dir, "Dashboard bundle directory served at /");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*parse) return cmd_parse(parse_opt);
  if (*plan) return cmd_plan(plan_opt);
  if (*compare) return cmd_compare(compare_opt);
  return cmd_serve(serve_opt);
}
