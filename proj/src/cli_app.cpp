#include "ramsey/cli_app.hpp"

#include "ramsey/bounds.hpp"
#include "ramsey/distributions.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/json_io.hpp"
#include "ramsey/moments.hpp"
#include "ramsey/oracle.hpp"
#include "ramsey/simulate.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <memory>
#include <ostream>

#ifdef __unix__
#include <unistd.h>
#endif

namespace ramsey {

namespace {

using Output = RunConfig::Output;

Output effective_output(const RunConfig& cfg, bool json_flag, bool csv_flag) {
  if (csv_flag) return Output::csv;
  if (json_flag) return Output::json;
  return cfg.output;
}

std::string pretty_rational(const BigRational& q) {
  if (denominator(q) == 1) return to_decimal_string(numerator(q));
  return to_decimal_string(numerator(q)) + "/" + to_decimal_string(denominator(q));
}

bool use_color() {
#ifdef __unix__
  return isatty(fileno(stdout)) && std::getenv("NO_COLOR") == nullptr;
#else
  return false;
#endif
}

void cmd_moments(std::ostream& out, const RunConfig& cfg, Output mode, int k, int r,
                 const std::string& basis, const std::vector<long>& eval_n) {
  RawMomentResult res = raw_moment_with_stats(k, r, cfg.enum_limits());
  RationalPolynomial poly = res.poly;
  if (basis_from_name(basis) == Basis::falling_factorial)
    poly = poly.converted(Basis::falling_factorial);

  if (mode == Output::json) {
    Json j{{"k", k},
           {"r", r},
           {"basis", basis_name(poly.basis())},
           {"profile_count", res.profile_count},
           {"elapsed_ms", res.elapsed_ms},
           {"polynomial", polynomial_to_json(poly)}};
    if (!eval_n.empty()) {
      Json evals = Json::array();
      for (long n : eval_n) {
        Json e = rational_to_json(poly.eval(BigInt(n)));
        e["n"] = n;
        evals.push_back(e);
      }
      j["evaluations"] = evals;
    }
    out << j.dump(2) << "\n";
    return;
  }
  if (mode == Output::csv) {
    if (eval_n.empty()) {
      out << "degree,numerator,denominator\n";
      for (const auto& [deg, c] : poly.coefficients())
        out << deg << "," << numerator(c) << "," << denominator(c) << "\n";
    } else {
      out << "n,numerator,denominator\n";
      for (long n : eval_n) {
        BigRational v = poly.eval(BigInt(n));
        out << n << "," << numerator(v) << "," << denominator(v) << "\n";
      }
    }
    return;
  }
  out << "E[X^" << r << "] for k=" << k << " (" << res.profile_count << " profiles, "
      << res.elapsed_ms << " ms):\n  " << poly.to_string() << "\n";
  for (long n : eval_n)
    out << "  at n=" << n << ": " << pretty_rational(poly.eval(BigInt(n))) << "\n";
}

void cmd_central(std::ostream& out, const RunConfig& cfg, Output mode, int k, int m,
                 bool leading_only, const std::vector<long>& eval_n) {
  RationalPolynomial poly = central_moment(k, m, cfg.enum_limits());
  auto lead = poly.leading_term();

  Json j{{"k", k}, {"m", m}};
  if (lead) {
    Json lt = rational_to_json(lead->second);
    lt["degree"] = lead->first;
    j["leading"] = lt;
  } else {
    j["leading"] = nullptr;
  }
  bool have_ref = m >= 2 && m <= 5;
  if (have_ref) {
    auto [ref_deg, ref_coeff] = leading_central_reference(k, m);
    Json ref = rational_to_json(ref_coeff);
    ref["degree"] = ref_deg;
    j["reference"] = ref;
    j["matches_reference"] = lead && lead->first == ref_deg && lead->second == ref_coeff;
  }
  if (!leading_only) j["polynomial"] = polynomial_to_json(poly);

  if (mode == Output::json) {
    if (!eval_n.empty()) {
      Json evals = Json::array();
      for (long n : eval_n) {
        Json e = rational_to_json(poly.eval(BigInt(n)));
        e["n"] = n;
        evals.push_back(e);
      }
      j["evaluations"] = evals;
    }
    out << j.dump(2) << "\n";
    return;
  }
  if (mode == Output::csv) {
    out << "degree,numerator,denominator\n";
    for (const auto& [deg, c] : poly.coefficients())
      out << deg << "," << numerator(c) << "," << denominator(c) << "\n";
    return;
  }
  out << "E[(X-mu)^" << m << "] for k=" << k << ":\n";
  if (!leading_only) out << "  " << poly.to_string() << "\n";
  if (lead) {
    out << "  leading term: degree " << lead->first << ", coefficient "
        << pretty_rational(lead->second) << "\n";
    if (have_ref) {
      auto [ref_deg, ref_coeff] = leading_central_reference(k, m);
      out << "  closed-form leading term: degree " << ref_deg << ", coefficient "
          << pretty_rational(ref_coeff)
          << (lead->first == ref_deg && lead->second == ref_coeff ? " (matches)"
                                                                  : " (MISMATCH)")
          << "\n";
    }
  } else {
    out << "  zero polynomial\n";
  }
  for (long n : eval_n)
    out << "  at n=" << n << ": " << pretty_rational(poly.eval(BigInt(n))) << "\n";
}

void cmd_oracle(std::ostream& out, const RunConfig& cfg, Output mode, int n, int k, int max_r) {
  OracleOptions opts;
  opts.max_n = cfg.cap_oracle_n;
  ExactDistribution d = exact_distribution(n, k, opts);
  if (mode == Output::json) {
    out << oracle_to_json(d, max_r).dump(2) << "\n";
    return;
  }
  if (mode == Output::csv) {
    out << "value,count\n";
    for (const auto& [v, c] : d.counts) out << v << "," << c << "\n";
    return;
  }
  out << "exact distribution of X at n=" << n << ", k=" << k << " (denominator 2^"
      << n * (n - 1) / 2 << "):\n";
  for (const auto& [v, c] : d.counts) out << "  X=" << v << ": " << c << "\n";
  out << "  P(X=0) = " << pretty_rational(oracle_p_zero(d)) << "\n";
  for (int r = 1; r <= max_r; ++r)
    out << "  E[X^" << r << "] = " << pretty_rational(oracle_moment(d, r)) << "\n";
}

DelaporteParams make_params(double lambda, double alpha, double beta) {
  DelaporteParams p{BigFloat(lambda), BigFloat(alpha), BigFloat(beta)};
  p.validate();
  return p;
}

void cmd_dist(std::ostream& out, Output mode, const std::string& what, const std::string& model,
              double lambda, double alpha, double beta, long max_j, double t) {
  Json j{{"what", what}, {"model", model}};
  Json params = Json::object();

  if (what == "pmf") {
    PmfVector v;
    if (model == "poisson") {
      if (lambda < 0) throw DomainError("poisson requires --lambda >= 0");
      v = poisson_pmf_vector(BigFloat(lambda), max_j);
      params["lambda"] = lambda;
    } else if (model == "negbin") {
      v = negbin_pmf_vector(BigFloat(alpha), BigFloat(beta), max_j);
      params["alpha"] = alpha;
      params["beta"] = beta;
    } else {
      DelaporteParams p = make_params(lambda, alpha, beta);
      BigFloat cut = p.mean() + 20 * sqrt(p.variance());
      if (cut > 5'000'000) {
        // the adaptive table would be enormous; evaluate the requested
        // prefix by direct convolution instead
        v.truncation_bound = max_j + 1;
        v.probabilities.resize(max_j + 1);
        for (long i = 0; i <= max_j; ++i) v.probabilities[i] = delaporte_pmf(p, i);
        v.tail_mass_bound = 1;  // nothing summed past max_j
      } else {
        v = delaporte_pmf_vector(p, max_j);
      }
      params["lambda"] = lambda;
      params["alpha"] = alpha;
      params["beta"] = beta;
    }
    if (mode == Output::json) {
      Json values = Json::array();
      for (long i = 0; i <= max_j && i < v.truncation_bound; ++i)
        values.push_back(Json{{"j", i}, {"p", format_bigfloat(v.probabilities[i])}});
      j["params"] = params;
      j["values"] = values;
      j["truncation_bound"] = v.truncation_bound;
      j["tail_mass_bound"] = format_bigfloat(v.tail_mass_bound);
      out << j.dump(2) << "\n";
    } else if (mode == Output::csv) {
      out << "j,probability\n";
      for (long i = 0; i <= max_j && i < v.truncation_bound; ++i)
        out << i << "," << v.probabilities[i].str(17) << "\n";
    } else {
      out << model << " pmf:\n";
      for (long i = 0; i <= max_j && i < v.truncation_bound; ++i)
        out << "  P(X=" << i << ") = " << v.probabilities[i].str(17) << "\n";
      out << "  truncation bound " << v.truncation_bound << ", tail mass bound "
          << v.tail_mass_bound.str(6) << "\n";
    }
    return;
  }

  if (what == "mgf") {
    BigFloat value;
    if (model == "poisson") {
      if (lambda < 0) throw DomainError("poisson requires --lambda >= 0");
      value = poisson_mgf(BigFloat(lambda), BigFloat(t));
      params["lambda"] = lambda;
    } else if (model == "negbin") {
      DelaporteParams p{BigFloat(0), BigFloat(alpha), BigFloat(beta)};
      p.validate();
      value = delaporte_mgf(p, BigFloat(t));
      params["alpha"] = alpha;
      params["beta"] = beta;
    } else {
      DelaporteParams p = make_params(lambda, alpha, beta);
      value = delaporte_mgf(p, BigFloat(t));
      params["lambda"] = lambda;
      params["alpha"] = alpha;
      params["beta"] = beta;
    }
    if (mode == Output::json) {
      j["params"] = params;
      j["t"] = t;
      j["value"] = format_bigfloat(value);
      out << j.dump(2) << "\n";
    } else {
      out << model << " mgf at t=" << t << ": " << value.str(17) << "\n";
    }
    return;
  }

  // moments
  Json m = Json::object();
  if (model == "poisson") {
    if (lambda < 0) throw DomainError("poisson requires --lambda >= 0");
    BigFloat l(lambda);
    m["mean"] = format_bigfloat(l);
    m["variance"] = format_bigfloat(l);
    Json fm = Json::array();
    for (int s = 0; s <= 4; ++s) fm.push_back(format_bigfloat(poisson_factorial_moment(l, s)));
    m["factorial"] = fm;
    params["lambda"] = lambda;
  } else if (model == "negbin") {
    BigFloat a(alpha), b(beta);
    if (a <= 0 || b <= 0) throw DomainError("negbin requires --alpha > 0 and --beta > 0");
    m["mean"] = format_bigfloat(a * b);
    m["variance"] = format_bigfloat(a * b * (1 + b));
    params["alpha"] = alpha;
    params["beta"] = beta;
  } else {
    DelaporteParams p = make_params(lambda, alpha, beta);
    m["mean"] = format_bigfloat(p.mean());
    m["variance"] = format_bigfloat(p.variance());
    m["central3"] = format_bigfloat(delaporte_central_moment(p, 3));
    m["central4"] = format_bigfloat(delaporte_central_moment(p, 4));
    m["poisson_gap"] = format_bigfloat(delaporte_poisson_gap(p));
    Json fm = Json::array();
    for (int s = 0; s <= 4; ++s) fm.push_back(format_bigfloat(delaporte_factorial_moment(p, s)));
    m["factorial"] = fm;
    params["lambda"] = lambda;
    params["alpha"] = alpha;
    params["beta"] = beta;
  }
  if (mode == Output::json) {
    j["params"] = params;
    j["moments"] = m;
    out << j.dump(2) << "\n";
  } else {
    out << model << " moments:\n";
    for (const auto& [key, val] : m.items()) out << "  " << key << " = " << val.dump() << "\n";
  }
}

void cmd_fit(std::ostream& out, Output mode, int k, long n, const std::string& regime) {
  if (regime == "small") {
    BigRational rate = poisson_rate_smalln_exact(n, k);
    if (mode == Output::json) {
      Json j{{"regime", "small"}, {"k", k}, {"n", n}, {"model", "poisson"}};
      j["lambda"] = rational_to_json(rate);
      j["lambda_value"] = format_bigfloat(to_bigfloat(rate));
      out << j.dump(2) << "\n";
    } else {
      out << "small-n Poisson fit for k=" << k << ", n=" << n << ":\n  lambda = "
          << pretty_rational(rate) << " = " << to_bigfloat(rate).str(17) << "\n";
    }
    return;
  }
  DelaporteParams p = fit_bign(n, k);
  if (mode == Output::json) {
    Json j{{"regime", "big"}, {"k", k}, {"n", n}, {"model", "delaporte"}};
    j["lambda"] = format_bigfloat(p.lambda);
    j["alpha"] = format_bigfloat(p.alpha);
    j["beta"] = format_bigfloat(p.beta);
    j["mean"] = format_bigfloat(p.mean());
    j["poisson_gap"] = format_bigfloat(delaporte_poisson_gap(p));
    out << j.dump(2) << "\n";
  } else {
    out << "big-n Delaporte fit for k=" << k << ", n=" << n << ":\n";
    out << "  alpha = " << p.alpha.str(17) << "\n";
    out << "  beta  = " << p.beta.str(17) << "\n";
    out << "  lambda = " << p.lambda.str(17) << "\n";
    out << "  mean = " << p.mean().str(17) << ", poisson gap alpha*beta^2 = "
        << delaporte_poisson_gap(p).str(17) << "\n";
  }
}

void cmd_bounds(std::ostream& out, const RunConfig& cfg, Output mode, int k,
                const std::vector<int>& ms, bool chebyshev, long n) {
  int max_order = 1;
  for (int m : ms) {
    if (m < 1 || m % 2 == 0) throw DomainError("Bonferroni orders must be odd (got m=" +
                                               std::to_string(m) + ")");
    max_order = std::max(max_order, m);
  }
  MomentTable table = compute_moment_table(k, max_order, cfg.enum_limits());
  std::vector<BoundReport> reports;
  for (int m : ms) reports.push_back(bonferroni_threshold(table, m));
  ErdosCheck erdos = erdos_asymptotic_check(k);
  BigInt upper = ramsey_upper_bound(k);

  if (mode == Output::json) {
    Json j{{"k", k}, {"upper_bound", to_decimal_string(upper)}};
    j["erdos"] = Json{{"threshold_n", erdos.threshold_n},
                      {"reference", erdos.reference},
                      {"ratio", erdos.ratio}};
    Json rs = Json::array();
    for (const auto& r : reports) rs.push_back(bound_report_to_json(r));
    j["reports"] = rs;
    if (chebyshev) {
      ChebyshevReport cr = chebyshev_ratio(k, n, cfg.enum_limits());
      VarMeanReport vr = var_mean_ratio(k, n, cfg.enum_limits());
      j["chebyshev"] = Json{{"n", n},
                            {"exact_ratio", rational_to_json(cr.exact_ratio)},
                            {"reference", cr.reference}};
      j["var_mean"] = Json{{"n", n},
                           {"exact_ratio", rational_to_json(vr.exact_ratio)},
                           {"reference", vr.reference},
                           {"super_poisson", vr.super_poisson}};
    }
    out << j.dump(2) << "\n";
    return;
  }
  out << "bounds for k=" << k << ":\n";
  out << "  R(" << k << "," << k << ") <= C(2k,k) = " << upper << "\n";
  out << "  first-moment threshold n=" << erdos.threshold_n << " vs reference k*2^(k/2)/(sqrt2 e) = "
      << erdos.reference << " (ratio " << erdos.ratio << ")\n";
  for (const auto& r : reports) {
    out << "  m=" << r.m << ": ";
    if (r.threshold_n) {
      out << "largest n with positive partial sum = " << *r.threshold_n << " -> "
          << r.implied_bound << "\n";
      out << "      certificate: sum(" << *r.threshold_n << ") = "
          << pretty_rational(r.certificate_at_threshold) << ", sum(" << *r.threshold_n + 1
          << ") = " << pretty_rational(r.certificate_after) << "\n";
    } else {
      out << "no positive partial sum found (scanned to " << r.scan_limit << ")\n";
    }
    if (r.m >= 3) {
      out << "      improves over m=1: " << (r.improves_over_m1 ? "yes" : "no") << "\n";
    }
  }
  if (chebyshev) {
    ChebyshevReport cr = chebyshev_ratio(k, n, cfg.enum_limits());
    VarMeanReport vr = var_mean_ratio(k, n, cfg.enum_limits());
    out << "  Chebyshev Var/E^2 at n=" << n << ": " << pretty_rational(cr.exact_ratio)
        << " (reference k^6/(2n^3) = " << cr.reference << ")\n";
    out << "  Var/E at n=" << n << ": " << pretty_rational(vr.exact_ratio) << " (reference "
        << vr.reference << ", " << (vr.super_poisson ? "super" : "sub") << "-Poisson)\n";
  }
}

void cmd_simulate(std::ostream& out, const RunConfig& cfg, Output mode, int n, int k,
                  std::uint64_t samples, std::uint64_t seed, int workers,
                  const std::vector<std::string>& fit_names) {
  SimConfig sc;
  sc.n = n;
  sc.k = k;
  sc.samples = samples;
  sc.seed = seed;
  sc.workers = workers;
  sc.max_subset_cost = cfg.cap_subset_cost;
  SimulationReport rep = run_simulation(sc);
  std::vector<FitModel> models;
  for (const auto& name : fit_names) models.push_back(fit_model_from_name(name));
  std::vector<FitReport> fits;
  if (!models.empty()) fits = fit_and_compare(rep, models);

  if (mode == Output::json) {
    out << simulation_to_json(rep, fits).dump(2) << "\n";
    return;
  }
  if (mode == Output::csv) {
    out << "value,count\n";
    for (const auto& [v, c] : rep.histogram) out << v << "," << c << "\n";
    return;
  }
  out << "simulation n=" << n << " k=" << k << " samples=" << samples << " seed=" << seed
      << " workers=" << workers << " (philox4x32-10, " << rep.elapsed_seconds << " s):\n";
  out << "  empirical mean = " << rep.empirical_mean() << "\n";
  for (int m = 2; m <= 5; ++m)
    out << "  empirical central m=" << m << " = " << rep.empirical_central(m) << "\n";
  out << "  P(X=0) = " << pretty_rational(rep.empirical_p_zero()) << "\n";
  if (rep.histogram.size() <= 60) {
    for (const auto& [v, c] : rep.histogram) out << "  X=" << v << ": " << c << "\n";
  } else {
    out << "  (" << rep.histogram.size() << " distinct values; use --output csv for the full "
        << "histogram)\n";
  }
  for (const auto& f : fits) {
    out << "  fit " << fit_model_name(f.model) << ":";
    for (const auto& [key, val] : f.params) out << " " << key << "=" << format_double(val);
    if (f.mom_infeasible) {
      out << " -- method-of-moments infeasible\n";
    } else {
      out << " chi2=" << f.chi_square << " dof=" << f.dof << " loglik=" << f.log_likelihood
          << " (" << f.binning << ")\n";
    }
  }
}

int cmd_verify(std::ostream& out, std::ostream& err, const RunConfig& cfg, Output mode,
               const std::string& only, int max_k, bool cap_explicit) {
  EnumerationLimits limits = cfg.enum_limits();
  if (!cap_explicit) {
    // the k=7,8 fifth-moment enumerations need a few billion nodes
    limits.max_nodes = std::max<std::uint64_t>(limits.max_nodes, 16'000'000'000ULL);
  }
  auto t0 = std::chrono::steady_clock::now();
  std::vector<VerifyCheck> checks =
      run_verify_suite(only, max_k, limits, mode == Output::json ? nullptr : &err);
  double total_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  bool all_pass = true;
  for (const auto& c : checks) all_pass &= c.pass;

  if (mode == Output::json) {
    Json arr = Json::array();
    for (const auto& c : checks)
      arr.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}, {"ms", c.ms}});
    out << Json{{"checks", arr}, {"all_pass", all_pass}, {"elapsed_ms", total_ms}}.dump(2)
        << "\n";
  } else {
    const bool color = use_color();
    const char* green = color ? "\033[32m" : "";
    const char* red = color ? "\033[31m" : "";
    const char* reset = color ? "\033[0m" : "";
    for (const auto& c : checks) {
      if (c.pass) {
        out << green << "[PASS]" << reset << " " << c.name << " (" << c.ms << " ms)\n";
      } else {
        out << red << "[FAIL]" << reset << " " << c.name << ": " << c.detail << "\n";
      }
    }
    out << (all_pass ? "all checks passed" : "SOME CHECKS FAILED") << " ("
        << checks.size() << " checks, " << total_ms / 1000.0 << " s)\n";
  }
  if (total_ms > 5 * 60 * 1000) {
    err << "warning: verify took " << total_ms / 1000.0 << " s (soft budget is 300 s)\n";
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact and empirical moment calculus for monochromatic k-clique counts\n"
               "in uniformly random 2-edge-colorings of K_n"};
  app.name("ramsey");

  RunConfig cfg;
  std::string output_name = "pretty";
  app.add_option("--output", output_name, "output format for results")
      ->check(CLI::IsMember({"pretty", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--precision", cfg.precision_bits,
                 "working precision of floating-point computations, in bits (>= 64)")
      ->check(CLI::Range(64, 65536))
      ->capture_default_str();
  auto* cap_nodes_opt =
      app.add_option("--cap-profile-nodes", cfg.cap_profile_nodes,
                     "budget of visited nodes for overlap-profile enumeration")
          ->check(CLI::PositiveNumber)
          ->capture_default_str();
  app.add_option("--cap-oracle-n", cfg.cap_oracle_n,
                 "largest n the exhaustive oracle may enumerate (n=8 costs 2^28 colorings)")
      ->check(CLI::Range(2, 8))
      ->capture_default_str();
  app.add_option("--cap-subset-cost", cfg.cap_subset_cost,
                 "budget of samples * C(n,k) subset tests for the simulator")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "default RNG seed for the simulator")
      ->capture_default_str();
  app.set_config("--config", "", "read options from a key=value file");
  app.require_subcommand(1);

  int rc = 0;

  // subcommand callbacks fire at the end of parsing, after the global
  // options above have been filled in
  auto apply_global = [&cfg, &output_name] {
    set_float_precision_bits(cfg.precision_bits);
    cfg.output = output_name == "json"  ? Output::json
                 : output_name == "csv" ? Output::csv
                                        : Output::pretty;
  };

  // ---- moments ----
  {
    auto* sub = app.add_subcommand("moments", "exact raw moment E[X^r] as a polynomial in n");
    auto k = std::make_shared<int>(3);
    auto r = std::make_shared<int>(1);
    auto basis = std::make_shared<std::string>("monomial");
    auto eval_n = std::make_shared<std::vector<long>>();
    auto jf = std::make_shared<bool>(false);
    auto cf = std::make_shared<bool>(false);
    sub->add_option("--k", *k, "clique size")->required();
    sub->add_option("--r", *r, "moment order")->required();
    sub->add_option("--basis", *basis, "coefficient basis: monomial or ff")
        ->check(CLI::IsMember({"monomial", "ff", "falling_factorial"}));
    sub->add_option("--eval-n", *eval_n, "also evaluate the polynomial at these n");
    sub->add_flag("--json", *jf, "shortcut for --output json");
    sub->add_flag("--csv", *cf, "shortcut for --output csv");
    sub->callback([&, k, r, basis, eval_n, jf, cf] {
      apply_global();
      cmd_moments(out, cfg, effective_output(cfg, *jf, *cf), *k, *r, *basis, *eval_n);
    });
  }

  // ---- central ----
  {
    auto* sub = app.add_subcommand("central", "exact central moment E[(X-mu)^m]");
    auto k = std::make_shared<int>(3);
    auto m = std::make_shared<int>(2);
    auto leading = std::make_shared<bool>(false);
    auto eval_n = std::make_shared<std::vector<long>>();
    auto jf = std::make_shared<bool>(false);
    auto cf = std::make_shared<bool>(false);
    sub->add_option("--k", *k, "clique size")->required();
    sub->add_option("--m", *m, "central moment order")->required();
    sub->add_flag("--leading", *leading, "print only the leading term");
    sub->add_option("--eval-n", *eval_n, "also evaluate the polynomial at these n");
    sub->add_flag("--json", *jf, "shortcut for --output json");
    sub->add_flag("--csv", *cf, "shortcut for --output csv");
    sub->callback([&, k, m, leading, eval_n, jf, cf] {
      apply_global();
      cmd_central(out, cfg, effective_output(cfg, *jf, *cf), *k, *m, *leading, *eval_n);
    });
  }

  // ---- oracle ----
  {
    auto* sub = app.add_subcommand("oracle",
                                   "ground-truth distribution of X by exhaustive enumeration");
    auto n = std::make_shared<int>(0);
    auto k = std::make_shared<int>(0);
    auto max_r = std::make_shared<int>(4);
    auto jf = std::make_shared<bool>(false);
    sub->add_option("--n", *n, "host graph order")->required();
    sub->add_option("--k", *k, "clique size")->required();
    sub->add_option("--max-r", *max_r, "report moments up to this order");
    sub->add_flag("--json", *jf, "shortcut for --output json");
    sub->callback([&, n, k, max_r, jf] {
      apply_global();
      cmd_oracle(out, cfg, effective_output(cfg, *jf, false), *n, *k, *max_r);
    });
  }

  // ---- dist ----
  {
    auto* sub = app.add_subcommand("dist", "Poisson / negative binomial / Delaporte models");
    auto what = std::make_shared<std::string>();
    auto model = std::make_shared<std::string>();
    auto lambda = std::make_shared<double>(0.0);
    auto alpha = std::make_shared<double>(0.0);
    auto beta = std::make_shared<double>(0.0);
    auto max_j = std::make_shared<long>(20);
    auto t = std::make_shared<double>(0.1);
    auto jf = std::make_shared<bool>(false);
    auto cf = std::make_shared<bool>(false);
    sub->add_option("what", *what, "pmf, mgf, or moments")
        ->required()
        ->check(CLI::IsMember({"pmf", "mgf", "moments"}));
    sub->add_option("model", *model, "delaporte, poisson, or negbin")
        ->required()
        ->check(CLI::IsMember({"delaporte", "poisson", "negbin"}));
    sub->add_option("--lambda", *lambda, "Poisson component mean");
    sub->add_option("--alpha", *alpha, "negative binomial shape");
    sub->add_option("--beta", *beta, "negative binomial scale");
    sub->add_option("--max-j", *max_j, "largest pmf index to print");
    sub->add_option("--t", *t, "mgf argument");
    sub->add_flag("--json", *jf, "shortcut for --output json");
    sub->add_flag("--csv", *cf, "shortcut for --output csv");
    sub->callback([&, what, model, lambda, alpha, beta, max_j, t, jf, cf] {
      apply_global();
      cmd_dist(out, effective_output(cfg, *jf, *cf), *what, *model, *lambda, *alpha, *beta,
               *max_j, *t);
    });
  }

  // ---- fit ----
  {
    auto* sub = app.add_subcommand("fit", "parameter fits for the distribution of X");
    auto k = std::make_shared<int>(0);
    auto n = std::make_shared<long>(0);
    auto regime = std::make_shared<std::string>("big");
    auto jf = std::make_shared<bool>(false);
    sub->add_option("--k", *k, "clique size")->required();
    sub->add_option("--n", *n, "host graph order")->required();
    sub->add_option("--regime", *regime, "big (Delaporte) or small (Poisson)")
        ->check(CLI::IsMember({"big", "small"}));
    sub->add_flag("--json", *jf, "shortcut for --output json");
    sub->callback([&, k, n, regime, jf] {
      apply_global();
      cmd_fit(out, effective_output(cfg, *jf, false), *k, *n, *regime);
    });
  }

  // ---- bounds ----
  {
    auto* sub = app.add_subcommand("bounds", "Ramsey bound machinery");
    auto k = std::make_shared<int>(0);
    auto ms = std::make_shared<std::vector<int>>(std::vector<int>{1, 3, 5});
    auto chebyshev = std::make_shared<bool>(false);
    auto n = std::make_shared<long>(0);
    auto jf = std::make_shared<bool>(false);
    sub->add_option("--k", *k, "clique size")->required();
    sub->add_option("--m", *ms, "odd Bonferroni truncation orders")->delimiter(',');
    sub->add_flag("--chebyshev", *chebyshev, "also report Var/E^2 and Var/E at --n");
    sub->add_option("--n", *n, "evaluation point for --chebyshev");
    sub->add_flag("--json", *jf, "shortcut for --output json");
    sub->callback([&, k, ms, chebyshev, n, jf] {
      apply_global();
      if (*chebyshev && *n == 0) throw DomainError("--chebyshev requires --n");
      cmd_bounds(out, cfg, effective_output(cfg, *jf, false), *k, *ms, *chebyshev, *n);
    });
  }

  // ---- simulate ----
  {
    auto* sub = app.add_subcommand("simulate", "Monte Carlo sampling of random colorings");
    auto n = std::make_shared<int>(0);
    auto k = std::make_shared<int>(0);
    auto samples = std::make_shared<std::uint64_t>(0);
    auto workers = std::make_shared<int>(1);
    auto fits = std::make_shared<std::vector<std::string>>();
    auto jf = std::make_shared<bool>(false);
    auto cf = std::make_shared<bool>(false);
    sub->add_option("--n", *n, "host graph order")->required();
    sub->add_option("--k", *k, "clique size")->required();
    sub->add_option("--samples", *samples, "number of random colorings")->required();
    sub->add_option("--seed", cfg.seed, "RNG seed (overrides the global --seed)");
    sub->add_option("--workers", *workers, "worker threads (results are identical for any count)");
    sub->add_option("--fit", *fits, "models to fit: delaporte, poisson, normal")
        ->delimiter(',');
    sub->add_flag("--json", *jf, "shortcut for --output json");
    sub->add_flag("--csv", *cf, "shortcut for --output csv");
    sub->callback([&, n, k, samples, workers, fits, jf, cf] {
      apply_global();
      cmd_simulate(out, cfg, effective_output(cfg, *jf, *cf), *n, *k, *samples, cfg.seed,
                   *workers, *fits);
    });
  }

  // ---- verify ----
  {
    auto* sub = app.add_subcommand("verify", "run the cross-module identity suite");
    auto only = std::make_shared<std::string>();
    auto max_k = std::make_shared<int>(8);
    auto jf = std::make_shared<bool>(false);
    sub->add_option("--only", *only, "run only checks whose name contains this substring");
    sub->add_option("--max-k", *max_k, "largest k for the Bonferroni no-improvement sweep")
        ->check(CLI::Range(5, 12));
    sub->add_flag("--json", *jf, "shortcut for --output json");
    sub->callback([&, only, max_k, jf] {
      apply_global();
      rc = cmd_verify(out, err, cfg, effective_output(cfg, *jf, false), *only, *max_k,
                      cap_nodes_opt->count() > 0);
    });
  }

  // let the global options (--output, --precision, --cap-*) appear after
  // the subcommand name as well
  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    // CLI11's vector overload consumes arguments back to front
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}

}  // namespace ramsey
