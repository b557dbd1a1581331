#include "ramsey/simulate.hpp"

#include "ramsey/distributions.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/philox.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

namespace ramsey {

namespace {

int edge_index(int u, int v, int n) {
  // lexicographic pairs (u,v), u < v
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}

inline bool edge_bit(std::span<const std::uint64_t> words, int e) {
  return (words[static_cast<size_t>(e) >> 6] >> (e & 63)) & 1;
}

bool next_combination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  int i = k - 1;
  while (i >= 0 && idx[i] == n - k + i) --i;
  if (i < 0) return false;
  ++idx[i];
  for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

// Chunks are merged into the report in index order; all sums are exact
// integers, so the merged result is independent of worker scheduling.
struct ChunkStats {
  std::map<long, std::uint64_t> histogram;
  std::array<BigInt, 6> power_sums;
  ChunkStats() { power_sums.fill(BigInt(0)); }
};

struct SubsetMasks {
  // one mask per k-subset when the table fits in memory; otherwise the
  // per-edge walk below is used (identical counts)
  std::vector<std::uint64_t> words;
  int words_per_mask = 0;
  bool available = false;
};

SubsetMasks build_masks(int n, int k) {
  SubsetMasks m;
  const int edges = n * (n - 1) / 2;
  m.words_per_mask = (edges + 63) / 64;
  const double table_bytes =
      static_cast<double>(m.words_per_mask) * 8.0 * binomial(n, k).convert_to<double>();
  if (table_bytes > 256.0 * 1024 * 1024) return m;  // fall back to edge walk
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  do {
    std::vector<std::uint64_t> mask(m.words_per_mask, 0);
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        int e = edge_index(idx[i], idx[j], n);
        mask[e >> 6] |= 1ULL << (e & 63);
      }
    m.words.insert(m.words.end(), mask.begin(), mask.end());
  } while (next_combination(idx, n));
  m.available = true;
  return m;
}

long count_with_masks(std::span<const std::uint64_t> coloring, const SubsetMasks& masks) {
  long count = 0;
  const int w = masks.words_per_mask;
  for (size_t off = 0; off < masks.words.size(); off += w) {
    bool all_zero = true, all_one = true;
    for (int i = 0; i < w && (all_zero || all_one); ++i) {
      std::uint64_t mk = masks.words[off + i];
      std::uint64_t bits = coloring[i] & mk;
      all_zero &= bits == 0;
      all_one &= bits == mk;
    }
    count += all_zero | all_one;
  }
  return count;
}

}  // namespace

long sample_count(int n, int k, std::span<const std::uint64_t> coloring_words) {
  if (n < k || k < 2) throw DomainError("sample_count requires n >= k >= 2");
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  long count = 0;
  do {
    const bool color = edge_bit(coloring_words, edge_index(idx[0], idx[1], n));
    bool mono = true;
    for (int i = 0; i < k && mono; ++i) {
      for (int j = i + 1; j < k; ++j) {
        if (i == 0 && j == 1) continue;
        if (edge_bit(coloring_words, edge_index(idx[i], idx[j], n)) != color) {
          mono = false;
          break;
        }
      }
    }
    count += mono;
  } while (next_combination(idx, n));
  return count;
}

double SimulationReport::empirical_mean() const {
  return BigFloat(BigFloat(power_sums[1]) / BigFloat(samples)).convert_to<double>();
}

BigRational SimulationReport::empirical_central_exact(int m) const {
  if (m < 1 || m > 5) throw DomainError("central accumulators cover orders 1..5");
  // E[(X-mean)^m] = sum_j C(m,j) (-1)^(m-j) S_j/S * (S_1/S)^(m-j)
  const BigRational mean(power_sums[1], power_sums[0]);
  BigRational total = 0;
  BigRational mean_pow = 1;  // mean^(m-j) built from j=m downwards
  for (int j = m; j >= 0; --j) {
    BigRational term = BigRational(binomial(m, j)) * BigRational(power_sums[j], power_sums[0]) *
                       mean_pow;
    if ((m - j) % 2 == 1) term = -term;
    total += term;
    mean_pow *= mean;
  }
  return total;
}

double SimulationReport::empirical_central(int m) const {
  return to_bigfloat(empirical_central_exact(m)).convert_to<double>();
}

BigRational SimulationReport::empirical_p_zero() const {
  auto it = histogram.find(0);
  if (it == histogram.end()) return BigRational(0);
  return BigRational(it->second, samples);
}

SimulationReport run_simulation(const SimConfig& cfg) {
  if (cfg.samples < 1) throw DomainError("need at least one sample");
  if (cfg.n < cfg.k || cfg.k < 2) throw DomainError("need n >= k >= 2");
  if (cfg.workers < 1 || cfg.workers > 256) throw DomainError("workers must be in 1..256");
  const BigInt subsets = binomial(cfg.n, cfg.k);
  if (subsets * cfg.samples > cfg.max_subset_cost) {
    throw ResourceError("simulation cost " + to_decimal_string(subsets * cfg.samples) +
                        " subset tests exceeds cap " + std::to_string(cfg.max_subset_cost));
  }
  const auto t0 = std::chrono::steady_clock::now();

  const int edges = cfg.n * (cfg.n - 1) / 2;
  const int words = (edges + 63) / 64;
  const int blocks = (words + 1) / 2;

  SubsetMasks masks = build_masks(cfg.n, cfg.k);

  const std::uint64_t chunk_size = 16384;
  const std::uint64_t num_chunks = (cfg.samples + chunk_size - 1) / chunk_size;
  std::vector<ChunkStats> chunks(num_chunks);

  auto process_chunk = [&](std::uint64_t ci) {
    ChunkStats& st = chunks[ci];
    std::vector<std::uint64_t> coloring(words);
    const std::uint64_t lo = ci * chunk_size;
    const std::uint64_t hi = std::min(cfg.samples, lo + chunk_size);
    for (std::uint64_t s = lo; s < hi; ++s) {
      for (int b = 0; b < blocks; ++b) {
        auto w = Philox4x32::words(cfg.seed, s, static_cast<std::uint32_t>(b));
        coloring[2 * b] = w[0];
        if (2 * b + 1 < words) coloring[2 * b + 1] = w[1];
      }
      long x = masks.available ? count_with_masks(coloring, masks)
                               : sample_count(cfg.n, cfg.k, coloring);
      ++st.histogram[x];
      BigInt p = 1;
      for (int r = 0; r <= 5; ++r) {
        st.power_sums[r] += p;
        p *= x;
      }
    }
  };

  if (cfg.workers == 1) {
    for (std::uint64_t ci = 0; ci < num_chunks; ++ci) process_chunk(ci);
  } else {
    std::vector<std::thread> pool;
    std::atomic<std::uint64_t> next{0};
    for (int w = 0; w < cfg.workers; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          std::uint64_t ci = next.fetch_add(1);
          if (ci >= num_chunks) return;
          process_chunk(ci);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  SimulationReport rep;
  rep.n = cfg.n;
  rep.k = cfg.k;
  rep.samples = cfg.samples;
  rep.seed = cfg.seed;
  rep.workers = cfg.workers;
  for (auto& b : rep.power_sums) b = 0;
  // merge in chunk order (integer sums are order-independent anyway)
  for (std::uint64_t ci = 0; ci < num_chunks; ++ci) {
    for (const auto& [v, c] : chunks[ci].histogram) rep.histogram[v] += c;
    for (int r = 0; r <= 5; ++r) rep.power_sums[r] += chunks[ci].power_sums[r];
  }
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::string fit_model_name(FitModel m) {
  switch (m) {
    case FitModel::delaporte:
      return "delaporte";
    case FitModel::poisson:
      return "poisson";
    case FitModel::normal:
      return "normal";
  }
  return "?";
}

FitModel fit_model_from_name(const std::string& name) {
  if (name == "delaporte") return FitModel::delaporte;
  if (name == "poisson") return FitModel::poisson;
  if (name == "normal") return FitModel::normal;
  throw DomainError("unknown fit model '" + name + "'");
}

namespace {

// model pmf over 0..jmax inclusive
std::vector<double> model_pmf(const FitReport& fit, long jmax) {
  std::vector<double> pmf(jmax + 1, 0.0);
  if (fit.model == FitModel::poisson) {
    const double lambda = fit.params.at("lambda");
    double p = std::exp(-lambda);
    for (long j = 0; j <= jmax; ++j) {
      pmf[j] = p;
      p *= lambda / (j + 1);
    }
  } else if (fit.model == FitModel::delaporte) {
    DelaporteParams dp{BigFloat(fit.params.at("lambda")), BigFloat(fit.params.at("alpha")),
                       BigFloat(fit.params.at("beta"))};
    PmfVector v = delaporte_pmf_vector(dp, jmax);
    for (long j = 0; j <= jmax; ++j) pmf[j] = v.probabilities[j].convert_to<double>();
  } else {
    // normal discretized to integers via erf differences
    const double mu = fit.params.at("mean");
    const double sigma = std::sqrt(fit.params.at("variance"));
    auto cdf = [&](double x) { return 0.5 * (1 + std::erf((x - mu) / (sigma * std::sqrt(2.0)))); };
    for (long j = 0; j <= jmax; ++j) pmf[j] = cdf(j + 0.5) - cdf(j - 0.5);
  }
  return pmf;
}

}  // namespace

std::vector<FitReport> fit_and_compare(const SimulationReport& rep,
                                       const std::vector<FitModel>& models) {
  if (rep.histogram.size() < 2)
    throw DomainError("histogram is degenerate (single value); nothing to fit");
  const double mean = rep.empirical_mean();
  const double var = rep.empirical_central(2);
  const double m3 = rep.empirical_central(3);
  const long jmax = rep.histogram.rbegin()->first;

  std::vector<FitReport> out;
  for (FitModel model : models) {
    FitReport fit;
    fit.model = model;
    if (model == FitModel::poisson) {
      fit.params["lambda"] = mean;
    } else if (model == FitModel::normal) {
      fit.params["mean"] = mean;
      fit.params["variance"] = var;
    } else {
      // solve mean/variance/3rd central: sigma2-mu = a b^2,
      // (m3 - sigma2)/(sigma2 - mu) = 2(1+b)
      const double excess = var - mean;
      double beta = excess > 0 ? (m3 - var) / (2 * excess) - 1 : -1;
      double alpha = beta > 0 ? excess / (beta * beta) : -1;
      double lambda = alpha > 0 ? mean - alpha * beta : -1;
      fit.params["beta"] = beta;
      fit.params["alpha"] = alpha;
      fit.params["lambda"] = lambda;
      if (excess <= 0 || beta <= 0 || alpha <= 0 || lambda < 0) {
        fit.mom_infeasible = true;
        fit.binning = "method-of-moments infeasible; no goodness-of-fit computed";
        out.push_back(fit);
        continue;
      }
    }

    std::vector<double> pmf = model_pmf(fit, jmax);
    // greedy binning: expected count >= 5 per bin
    const double S = static_cast<double>(rep.samples);
    std::vector<double> exp_bins;
    std::vector<double> obs_bins;
    double ec = 0, oc = 0;
    double tail_p = 1.0;
    for (long j = 0; j <= jmax; ++j) {
      double pj = pmf[j];
      tail_p -= pj;
      ec += S * pj;
      auto it = rep.histogram.find(j);
      oc += it == rep.histogram.end() ? 0.0 : static_cast<double>(it->second);
      if (ec >= 5.0) {
        exp_bins.push_back(ec);
        obs_bins.push_back(oc);
        ec = oc = 0;
      }
    }
    // everything past jmax goes to the final bin
    ec += S * std::max(tail_p, 0.0);
    if (!exp_bins.empty() && ec < 5.0) {
      exp_bins.back() += ec;
      obs_bins.back() += oc;
    } else {
      exp_bins.push_back(ec);
      obs_bins.push_back(oc);
    }
    double chi2 = 0;
    for (size_t b = 0; b < exp_bins.size(); ++b) {
      if (exp_bins[b] <= 0) continue;
      const double d = obs_bins[b] - exp_bins[b];
      chi2 += d * d / exp_bins[b];
    }
    fit.chi_square = chi2;
    fit.dof = static_cast<int>(exp_bins.size()) - 1 - static_cast<int>(fit.params.size());
    double ll = 0;
    for (const auto& [v, c] : rep.histogram) {
      double pj = v <= jmax ? pmf[v] : 0.0;
      ll += c * std::log(std::max(pj, 1e-300));
    }
    fit.log_likelihood = ll;
    fit.binning = std::to_string(exp_bins.size()) + " bins, >=5 expected counts each";
    out.push_back(fit);
  }
  return out;
}

}  // namespace ramsey
