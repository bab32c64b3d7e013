#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "regpair/regulator.hpp"
#include "regpair/toeplitz.hpp"

namespace regpair {

struct RunConfig {
  std::size_t grid = 4096;
  int dim_n = 512;    // internal Toeplitz dimension N
  int trunc_m = 64;   // outer truncation M
  double tol_analytic = 1e-9;
  double tol_operator = 1e-4;
  std::vector<Method> methods = {Method::closed_form, Method::contour_integral,
                                 Method::operator_determinant};
  std::string format = "json";
  std::uint64_t seed = 20240901;

  void validate() const;  // grid power of two, M <= N - 32
};

struct MethodReport {
  Method method;
  cplx value;
  double wall_ms = 0.0;
  std::map<std::string, double> diagnostics;
  std::vector<std::pair<int, cplx>> convergence_history;
};

/// Cross-validated pairing report.  Deviations are multiplicative,
/// |v1/v2 - 1|, since values live in C^x.
struct PairingReport {
  std::string schema = "v1";
  std::string f_text, g_text, loop_text;
  RunConfig config;
  std::vector<MethodReport> methods;
  std::map<std::string, double> deviations;
  bool pass = false;
};

/// Runs every configured method on the symbol and cross-checks.
PairingReport run_pairing(const SteinbergSymbol& symbol, const RunConfig& config,
                          const std::string& f_text, const std::string& g_text,
                          const std::string& loop_text);

std::string report_to_json(const PairingReport& report);
std::string report_to_csv(const PairingReport& report);

/// Well-formed JSON error object for failure paths.
std::string error_to_json(const std::string& kind, const std::string& message);

}  // namespace regpair
