#include "regpair/report.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace regpair {

void RunConfig::validate() const {
  if (grid < 16 || (grid & (grid - 1)) != 0)
    throw Error("grid must be a power of two >= 16");
  if (trunc_m > dim_n - 32)
    throw Error("need M <= N - 32, got M = " + std::to_string(trunc_m) +
                ", N = " + std::to_string(dim_n));
  if (format != "json" && format != "csv")
    throw Error("format must be json or csv");
}

namespace {

double deviation(cplx a, cplx b) { return std::abs(a / b - 1.0); }

using clock_type = std::chrono::steady_clock;

double ms_since(clock_type::time_point t0) {
  return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

}  // namespace

PairingReport run_pairing(const SteinbergSymbol& symbol, const RunConfig& config,
                          const std::string& f_text, const std::string& g_text,
                          const std::string& loop_text) {
  config.validate();
  PairingReport report;
  report.f_text = f_text;
  report.g_text = g_text;
  report.loop_text = loop_text;
  report.config = config;

  for (Method m : config.methods) {
    MethodReport mr;
    mr.method = m;
    const auto t0 = clock_type::now();
    switch (m) {
      case Method::closed_form: {
        RegulatorValue v = regulator_fourier(symbol);
        mr.value = v.value;
        mr.diagnostics = v.diagnostics;
        break;
      }
      case Method::contour_integral: {
        RegulatorValue v = regulator_integral(symbol);
        mr.value = v.value;
        mr.diagnostics = v.diagnostics;
        break;
      }
      case Method::operator_determinant: {
        DeterminantResult d = steinberg_operator_determinant(
            symbol.p, symbol.q, config.dim_n, config.trunc_m);
        mr.value = d.value;
        mr.convergence_history = d.convergence_history;
        mr.diagnostics["inner_n"] = d.inner;
        mr.diagnostics["outer_m"] = d.outer;
        if (d.convergence_history.size() >= 2) {
          const auto& h = d.convergence_history;
          mr.diagnostics["last_step_delta"] =
              std::abs(h[h.size() - 1].second - h[h.size() - 2].second);
        }
        break;
      }
    }
    mr.wall_ms = ms_since(t0);
    report.methods.push_back(std::move(mr));
  }

  auto find = [&](Method m) -> const MethodReport* {
    for (const auto& mr : report.methods)
      if (mr.method == m) return &mr;
    return nullptr;
  };
  const MethodReport* closed = find(Method::closed_form);
  const MethodReport* integral = find(Method::contour_integral);
  const MethodReport* oper = find(Method::operator_determinant);

  bool ok = true;
  if (closed && integral) {
    const double d = deviation(closed->value, integral->value);
    report.deviations["closed_vs_integral"] = d;
    ok = ok && d <= config.tol_analytic;
  }
  if (closed && oper) {
    const double d = deviation(oper->value, closed->value);
    report.deviations["operator_vs_closed"] = d;
    ok = ok && d <= config.tol_operator;
  }
  if (integral && oper && !closed) {
    const double d = deviation(oper->value, integral->value);
    report.deviations["operator_vs_integral"] = d;
    ok = ok && d <= config.tol_operator;
  }
  report.pass = ok;
  return report;
}

namespace {

nlohmann::json complex_json(cplx z) {
  return {{"re", z.real()}, {"im", z.imag()}};
}

nlohmann::json config_json(const RunConfig& c) {
  nlohmann::json methods = nlohmann::json::array();
  for (Method m : c.methods) methods.push_back(method_name(m));
  return {{"grid", c.grid},       {"dim_n", c.dim_n},
          {"trunc_m", c.trunc_m}, {"tol_analytic", c.tol_analytic},
          {"tol_operator", c.tol_operator}, {"methods", methods},
          {"format", c.format},   {"seed", c.seed}};
}

}  // namespace

std::string report_to_json(const PairingReport& report) {
  nlohmann::json j;
  j["schema"] = report.schema;
  j["inputs"] = {{"f", report.f_text}, {"g", report.g_text}, {"loop", report.loop_text}};
  j["config"] = config_json(report.config);
  nlohmann::json methods = nlohmann::json::object();
  for (const auto& mr : report.methods) {
    nlohmann::json m;
    m["value"] = complex_json(mr.value);
    m["wall_ms"] = mr.wall_ms;
    m["diagnostics"] = mr.diagnostics;
    if (!mr.convergence_history.empty()) {
      nlohmann::json h = nlohmann::json::array();
      for (const auto& [mi, v] : mr.convergence_history)
        h.push_back({{"m", mi}, {"value", complex_json(v)}});
      m["convergence_history"] = h;
    }
    methods[method_name(mr.method)] = m;
  }
  j["methods"] = methods;
  j["deviations"] = report.deviations;
  j["pass"] = report.pass;
  return j.dump(2);
}

std::string report_to_csv(const PairingReport& report) {
  std::ostringstream out;
  out.precision(17);
  out << "method,re,im,wall_ms\n";
  for (const auto& mr : report.methods)
    out << method_name(mr.method) << "," << mr.value.real() << ","
        << mr.value.imag() << "," << mr.wall_ms << "\n";
  for (const auto& [k, v] : report.deviations)
    out << "deviation_" << k << "," << v << ",,\n";
  out << "pass," << (report.pass ? 1 : 0) << ",,\n";
  return out.str();
}

std::string error_to_json(const std::string& kind, const std::string& message) {
  nlohmann::json j;
  j["schema"] = "v1";
  j["error"] = {{"kind", kind}, {"message", message}};
  j["pass"] = false;
  return j.dump(2);
}

}  // namespace regpair
