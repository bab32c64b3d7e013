// regpair: regulator pairings of Steinberg symbols on the circle, evaluated
// by closed form, contour integral, and Toeplitz determinants.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "regpair/parser.hpp"
#include "regpair/report.hpp"
#include "regpair/selftest.hpp"

namespace {

using namespace regpair;

constexpr int kExitOk = 0;
constexpr int kExitTolerance = 1;
constexpr int kExitInput = 2;

std::vector<Method> parse_methods(const std::string& spec) {
  std::vector<Method> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "closed")
      out.push_back(Method::closed_form);
    else if (item == "integral")
      out.push_back(Method::contour_integral);
    else if (item == "operator")
      out.push_back(Method::operator_determinant);
    else
      throw Error("unknown method '" + item + "' (closed, integral, operator)");
  }
  if (out.empty()) throw Error("empty method list");
  return out;
}

void emit_report(const PairingReport& report) {
  if (report.config.format == "csv")
    std::cout << report_to_csv(report);
  else
    std::cout << report_to_json(report) << "\n";
}

int cmd_pair(const std::string& f_text, const std::string& g_text,
             const std::string& loop_text, const RunConfig& cfg) {
  const RationalFunction f = parse_rational(f_text);
  const RationalFunction g = parse_rational(g_text);
  const Loop gamma = parse_loop(loop_text);
  SteinbergSymbol symbol{compose(f, gamma, cfg.grid), compose(g, gamma, cfg.grid)};
  const PairingReport report = run_pairing(symbol, cfg, f_text, g_text, loop_text);
  emit_report(report);
  return report.pass ? kExitOk : kExitTolerance;
}

int cmd_symbol(const std::string& p_text, const std::string& q_text,
               const RunConfig& cfg) {
  SteinbergSymbol symbol{parse_fourier_function(p_text, cfg.grid),
                         parse_fourier_function(q_text, cfg.grid)};
  const PairingReport report = run_pairing(symbol, cfg, p_text, q_text, "");
  emit_report(report);
  return report.pass ? kExitOk : kExitTolerance;
}

int cmd_tame(const std::string& f_text, const std::string& g_text,
             const std::string& point_text, const RunConfig& cfg) {
  const cplx tau = tame_symbol(parse_rational(f_text), parse_rational(g_text),
                               parse_point(point_text));
  if (cfg.format == "csv") {
    std::printf("%.17g,%.17g\n", tau.real(), tau.imag());
  } else {
    nlohmann::json j = {{"schema", "v1"},
                        {"inputs", {{"f", f_text}, {"g", g_text}, {"point", point_text}}},
                        {"value", {{"re", tau.real()}, {"im", tau.imag()}}}};
    std::cout << j.dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_mahler(const std::string& poly_text, const RunConfig& cfg) {
  const MahlerResult r = mahler_measure(parse_rational(poly_text), cfg.grid);
  if (cfg.format == "csv") {
    std::printf("%.17g,%.17g\n", r.value, r.regulator_log_abs);
  } else {
    nlohmann::json j = {{"schema", "v1"},
                        {"inputs", {{"poly", poly_text}}},
                        {"value", r.value},
                        {"regulator_log_abs", r.regulator_log_abs},
                        {"deviation", std::abs(r.value - r.regulator_log_abs)}};
    std::cout << j.dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_converge(const std::string& f_text, const std::string& g_text,
                 const std::string& loop_text, const std::vector<int>& m_list,
                 const RunConfig& cfg) {
  const RationalFunction f = parse_rational(f_text);
  const RationalFunction g = parse_rational(g_text);
  const Loop gamma = parse_loop(loop_text);
  SteinbergSymbol symbol{compose(f, gamma, cfg.grid), compose(g, gamma, cfg.grid)};
  const cplx oracle = regulator_fourier(symbol).value;
  std::printf("m,re,im,dev_vs_closed\n");
  for (int m : m_list) {
    const DeterminantResult d =
        steinberg_operator_determinant(symbol.p, symbol.q, cfg.dim_n, m);
    std::printf("%d,%.17g,%.17g,%.6g\n", m, d.value.real(), d.value.imag(),
                std::abs(d.value / oracle - 1.0));
  }
  return kExitOk;
}

int cmd_selftest(const RunConfig& cfg) {
  const auto results = selftest::run_all(cfg);
  if (cfg.format == "csv") {
    std::printf("id,pass,worst\n");
    for (const auto& r : results)
      std::printf("%s,%d,%.6g\n", r.id.c_str(), r.pass ? 1 : 0, r.worst);
  } else {
    std::cout << selftest::summarize(results);
  }
  return selftest::all_passed(results) ? kExitOk : kExitTolerance;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regulator pairings of Steinberg symbols on the circle"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string methods_spec = "closed,integral,operator";
  app.add_option("--grid", cfg.grid, "sample grid size (power of two)");
  app.add_option("--dim-n", cfg.dim_n, "internal Toeplitz dimension N");
  app.add_option("--trunc-m", cfg.trunc_m, "outer truncation M");
  app.add_option("--methods", methods_spec, "subset of closed,integral,operator");
  app.add_option("--format", cfg.format, "json or csv");
  app.add_option("--seed", cfg.seed, "RNG seed for property suites");
  app.add_option("--tol-analytic", cfg.tol_analytic, "closed-vs-integral tolerance");
  app.add_option("--tol-operator", cfg.tol_operator, "operator-vs-closed tolerance");

  std::string f_text, g_text, loop_text, p_text, q_text, point_text, poly_text;
  std::vector<int> m_list = {8, 16, 32, 64};

  CLI::App* pair = app.add_subcommand("pair", "pair a rational symbol with a loop");
  pair->add_option("f", f_text, "rational expression")->required();
  pair->add_option("g", g_text, "rational expression")->required();
  pair->add_option("loop", loop_text, "loop literal")->required();

  CLI::App* symbol = app.add_subcommand("symbol", "pair circle functions given as Fourier literals");
  symbol->add_option("p", p_text, "fourier(k:re,im; ...)")->required();
  symbol->add_option("q", q_text, "fourier(k:re,im; ...)")->required();

  CLI::App* tame = app.add_subcommand("tame", "tame symbol at a point");
  tame->add_option("f", f_text, "rational expression")->required();
  tame->add_option("g", g_text, "rational expression")->required();
  tame->add_option("point", point_text, "re[,im] or inf")->required();

  CLI::App* mahler = app.add_subcommand("mahler", "logarithmic Mahler measure");
  mahler->add_option("poly", poly_text, "polynomial expression")->required();

  CLI::App* converge = app.add_subcommand("converge", "operator determinant truncation sweep");
  converge->add_option("f", f_text, "rational expression")->required();
  converge->add_option("g", g_text, "rational expression")->required();
  converge->add_option("loop", loop_text, "loop literal")->required();
  converge->add_option("--m-list", m_list, "outer truncations to sweep");

  CLI::App* selftest_cmd = app.add_subcommand("selftest", "run every property suite");

  // global flags may appear after the subcommand
  for (CLI::App* sub : {pair, symbol, tame, mahler, converge, selftest_cmd})
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.methods = parse_methods(methods_spec);
    if (pair->parsed()) return cmd_pair(f_text, g_text, loop_text, cfg);
    if (symbol->parsed()) return cmd_symbol(p_text, q_text, cfg);
    if (tame->parsed()) return cmd_tame(f_text, g_text, point_text, cfg);
    if (mahler->parsed()) return cmd_mahler(poly_text, cfg);
    if (converge->parsed()) return cmd_converge(f_text, g_text, loop_text, m_list, cfg);
    if (selftest_cmd->parsed()) return cmd_selftest(cfg);
  } catch (const ParseError& e) {
    std::cout << error_to_json("parse_error", e.what()) << "\n";
    std::cerr << e.what() << "\n";
    return kExitInput;
  } catch (const DivisorCollision& e) {
    std::cout << error_to_json("divisor_collision", e.what()) << "\n";
    std::cerr << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    std::cout << error_to_json("input_error", e.what()) << "\n";
    std::cerr << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
