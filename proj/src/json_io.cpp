#include "roc/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace roc {

namespace {

using json = nlohmann::ordered_json;

json number_or_null(const std::optional<double>& v) {
  if (v) return *v;
  return nullptr;
}

void dump_value(const json& j, std::string& out, int indent, int depth) {
  auto pad = [&](int d) { out.append(static_cast<std::size_t>(indent * d), ' '); };
  switch (j.type()) {
    case json::value_t::null:
      out += "null";
      break;
    case json::value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      break;
    case json::value_t::number_integer:
      out += std::to_string(j.get<long long>());
      break;
    case json::value_t::number_unsigned:
      out += std::to_string(j.get<unsigned long long>());
      break;
    case json::value_t::number_float: {
      double v = j.get<double>();
      if (std::isfinite(v)) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        out += buf;
      } else {
        out += "null";  // JSON has no inf/nan
      }
      break;
    }
    case json::value_t::string: {
      // nlohmann's own escaping via a one-element dump
      out += json(j.get<std::string>()).dump();
      break;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        break;
      }
      out += "[\n";
      bool first = true;
      for (const auto& item : j) {
        if (!first) out += ",\n";
        first = false;
        pad(depth + 1);
        dump_value(item, out, indent, depth + 1);
      }
      out += '\n';
      pad(depth);
      out += ']';
      break;
    }
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        break;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        pad(depth + 1);
        out += json(it.key()).dump();
        out += ": ";
        dump_value(it.value(), out, indent, depth + 1);
      }
      out += '\n';
      pad(depth);
      out += '}';
      break;
    }
    default:
      out += "null";
      break;
  }
}

}  // namespace

json test_result_to_json(const TestResult& t) {
  json j;
  j["statistic"] = t.statistic;
  j["p_value"] = t.p_value;
  j["null_kind"] = (t.null_kind == NullKind::Weak) ? "weak" : "strong";
  j["reference"] = t.reference_distribution;
  return j;
}

json fit_report_to_json(const FitReport& report) {
  json j;
  j["method"] = curve_method_name(report.method);
  j["n0"] = report.n0;
  j["n1"] = report.n1;

  json params;
  params["alpha"] = number_or_null(report.alpha);
  params["beta0"] = number_or_null(report.beta0);
  params["beta1"] = number_or_null(report.beta1);
  j["params"] = params;

  j["auc"] = report.auc;
  j["level"] = report.curve.level;

  json curve = json::array();
  bool banded = report.curve.has_band();
  for (std::size_t i = 0; i < report.curve.points.size(); ++i) {
    json pt;
    pt["fpr"] = report.curve.points[i].fpr;
    pt["tpr"] = report.curve.points[i].tpr;
    if (banded) {
      pt["lo"] = report.curve.band[i].lower;
      pt["hi"] = report.curve.band[i].upper;
    } else {
      pt["lo"] = nullptr;
      pt["hi"] = nullptr;
    }
    curve.push_back(pt);
  }
  j["curve"] = curve;

  json tests;
  tests["weak"] = report.weak ? test_result_to_json(*report.weak) : json(nullptr);
  tests["strong"] = report.strong ? test_result_to_json(*report.strong) : json(nullptr);
  j["tests"] = tests;

  j["warnings"] = report.warnings;
  return j;
}

json error_to_json(const std::string& kind, const std::string& message) {
  json j;
  j["error"] = kind;
  j["message"] = message;
  return j;
}

std::string dump_json(const json& j, int indent) {
  std::string out;
  dump_value(j, out, indent, 0);
  out += '\n';
  return out;
}

}  // namespace roc
