#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "benchviz/plan_normalize.hpp"
#include "benchviz/plan_parser.hpp"

namespace benchviz {

/// A rendered plan plus its metric breakdown. `percentages` is empty when
/// the tree has no usable value for the requested metric.
struct PlanView {
  PlanNode tree;
  std::optional<std::vector<MetricShare>> percentages;
};

/// Full plan pipeline: dialect detection (when `dialect` is empty), the
/// dialect parser, normalization, and relabelling in `term`.
inline PlanView explain_plan(std::string_view capture, std::optional<Dialect> dialect, Terminology term,
                             MetricKindPlan metric) {
  const Dialect d = dialect ? *dialect : detect_dialect(capture);
  PlanView view{render_terminology(normalize(parse_plan(capture, d), d), term), std::nullopt};
  try {
    view.percentages = metric_percentages(view.tree, metric);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::MetricUnavailable) throw;
  }
  return view;
}

/// {"tree": <hierarchy>, "percentages": [...] | null}; a null breakdown is
/// flagged with "percentagesError": "MetricUnavailable".
inline JsonValue to_json(const PlanView& view) {
  JsonValue j = JsonValue::object();
  j["tree"] = hierarchy_document(view.tree);
  if (view.percentages) {
    JsonValue shares = JsonValue::array();
    for (const auto& s : *view.percentages) shares.push_back({{"label", s.label}, {"pct", s.pct}});
    j["percentages"] = std::move(shares);
  } else {
    j["percentages"] = nullptr;
    j["percentagesError"] = std::string(to_string(ErrorCode::MetricUnavailable));
  }
  return j;
}

}  // namespace benchviz
