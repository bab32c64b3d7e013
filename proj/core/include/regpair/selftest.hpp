#pragma once

#include <random>
#include <string>
#include <vector>

#include "regpair/report.hpp"

namespace regpair::selftest {

struct PropertyResult {
  std::string id;
  bool pass = false;
  double worst = 0.0;  // worst observed deviation for the suite
  std::string note;
};

/// Random periodic log: a trigonometric polynomial of the given bandwidth
/// with coefficients shrinking like 1/(1+|k|).
CircleFunction random_log(std::mt19937_64& rng, std::size_t grid, int bandwidth,
                          double amplitude);

/// Random nowhere-vanishing symbol z^m e^a with |m| <= max_winding.
CircleFunction random_symbol(std::mt19937_64& rng, std::size_t grid,
                             int max_winding, int bandwidth, double amplitude);

/// The fixed 20-case symbol suite used for the operator-vs-closed-form
/// comparison: three pinned cases plus seeded random pairs with windings
/// in {-2..2} and bandwidth <= 8.
std::vector<std::pair<CircleFunction, CircleFunction>> standard_symbol_suite(
    std::size_t grid, std::uint64_t seed);

/// Runs every property suite of every module; deterministic given the
/// config seed.  Results are sorted by id.
std::vector<PropertyResult> run_all(const RunConfig& config);

/// One line per property: "PASS <id> worst=<dev>".
std::string summarize(const std::vector<PropertyResult>& results);

bool all_passed(const std::vector<PropertyResult>& results);

}  // namespace regpair::selftest
