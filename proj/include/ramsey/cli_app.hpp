#pragma once

#include "ramsey/profiles.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ramsey {

struct RunConfig {
  enum class Output { pretty, json, csv };
  Output output = Output::pretty;
  int precision_bits = 256;
  std::uint64_t cap_profile_nodes = 100'000'000ULL;
  int cap_oracle_n = 7;
  std::uint64_t cap_subset_cost = 2'000'000'000ULL;
  std::uint64_t seed = 0;

  EnumerationLimits enum_limits() const { return EnumerationLimits{cap_profile_nodes}; }
};

// Exit status: 0 success, 1 domain/regime error, 2 usage error,
// 3 resource guard. Results go to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
  double ms = 0.0;
};

// The identity suite behind `verify`. Checks whose name does not contain
// `only_filter` are skipped (empty filter runs everything). max_k bounds
// the Bonferroni no-improvement sweep (5..max_k).
std::vector<VerifyCheck> run_verify_suite(const std::string& only_filter, int max_k,
                                          const EnumerationLimits& limits,
                                          std::ostream* progress);

}  // namespace ramsey
