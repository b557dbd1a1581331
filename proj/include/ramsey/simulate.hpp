#pragma once

#include "ramsey/numeric.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace ramsey {

struct SimConfig {
  int n = 0;
  int k = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  int workers = 1;
  // guard on samples * C(n,k) subset tests
  std::uint64_t max_subset_cost = 2'000'000'000ULL;
};

// Empirical distribution of X plus exact power-sum accumulators. The
// histogram and the power sums are integers, so the report is bit-exact
// for a given (n, k, samples, seed) no matter how many workers ran.
struct SimulationReport {
  int n = 0;
  int k = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  int workers = 1;
  std::map<long, std::uint64_t> histogram;
  std::array<BigInt, 6> power_sums;  // sum of X^r for r = 0..5
  double elapsed_seconds = 0.0;

  double empirical_mean() const;
  // (1/S) sum (x - mean)^m, computed exactly from the power sums
  double empirical_central(int m) const;
  BigRational empirical_central_exact(int m) const;
  BigRational empirical_p_zero() const;
};

// Number of monochromatic k-subsets under the given coloring (one bit per
// edge, lexicographic pair order, bit e of word e/64).
long sample_count(int n, int k, std::span<const std::uint64_t> coloring_words);

SimulationReport run_simulation(const SimConfig& cfg);

enum class FitModel { delaporte, poisson, normal };

std::string fit_model_name(FitModel m);
FitModel fit_model_from_name(const std::string& name);

struct FitReport {
  FitModel model = FitModel::poisson;
  std::map<std::string, double> params;
  bool mom_infeasible = false;  // method-of-moments left the domain
  double chi_square = 0.0;
  int dof = 0;
  double log_likelihood = 0.0;
  std::string binning;
};

// Method-of-moments fits against the empirical histogram, with chi-square
// (bins merged to >= 5 expected counts) and log-likelihood. A Delaporte
// system that yields alpha <= 0, beta <= 0 or lambda < 0 is reported as
// infeasible rather than failing.
std::vector<FitReport> fit_and_compare(const SimulationReport& rep,
                                       const std::vector<FitModel>& models);

}  // namespace ramsey
