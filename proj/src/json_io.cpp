#include "ramsey/json_io.hpp"

#include "ramsey/errors.hpp"

#include <cstdio>

namespace ramsey {

Json rational_to_json(const BigRational& q) {
  return Json{{"numerator", to_decimal_string(numerator(q))},
              {"denominator", to_decimal_string(denominator(q))}};
}

BigRational rational_from_json(const Json& j) {
  BigInt num = bigint_from_decimal(j.at("numerator").get<std::string>());
  BigInt den = bigint_from_decimal(j.at("denominator").get<std::string>());
  if (den <= 0) throw DomainError("denominator must be positive");
  return BigRational(num, den);
}

Json polynomial_to_json(const RationalPolynomial& p) {
  Json arr = Json::array();
  const std::string basis = basis_name(p.basis());
  for (const auto& [deg, c] : p.coefficients()) {
    arr.push_back(Json{{"degree", deg},
                       {"numerator", to_decimal_string(numerator(c))},
                       {"denominator", to_decimal_string(denominator(c))},
                       {"basis", basis}});
  }
  return arr;
}

RationalPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("polynomial JSON must be an array");
  RationalPolynomial p;
  bool first = true;
  for (const auto& entry : j) {
    Basis b = basis_from_name(entry.at("basis").get<std::string>());
    if (first) {
      p = RationalPolynomial(b);
      first = false;
    } else if (b != p.basis()) {
      throw DomainError("polynomial JSON mixes bases");
    }
    int deg = entry.at("degree").get<int>();
    BigInt num = bigint_from_decimal(entry.at("numerator").get<std::string>());
    BigInt den = bigint_from_decimal(entry.at("denominator").get<std::string>());
    if (den <= 0) throw DomainError("denominator must be positive");
    p.set_coeff(deg, p.coeff(deg) + BigRational(num, den));
  }
  return p;
}

Json oracle_to_json(const ExactDistribution& d, int max_r) {
  Json counts = Json::object();
  for (const auto& [v, c] : d.counts) counts[std::to_string(v)] = to_decimal_string(c);
  Json moments = Json::array();
  for (int r = 0; r <= max_r; ++r) {
    BigRational m = oracle_moment(d, r);
    Json entry = rational_to_json(m);
    entry["r"] = r;
    moments.push_back(entry);
  }
  return Json{{"n", d.n},
              {"k", d.k},
              {"denominator", to_decimal_string(d.denominator)},
              {"counts", counts},
              {"moments", moments}};
}

Json bound_report_to_json(const BoundReport& r) {
  Json j{{"k", r.k},
         {"method", bound_method_name(r.method)},
         {"m", r.m},
         {"implied_bound", r.implied_bound},
         {"scan_limit", r.scan_limit},
         {"sign_changes", r.sign_changes}};
  if (r.threshold_n) {
    j["threshold_n"] = *r.threshold_n;
    j["certificate"] = Json{{"at_threshold", rational_to_json(r.certificate_at_threshold)},
                            {"after_threshold", rational_to_json(r.certificate_after)}};
  } else {
    j["threshold_n"] = nullptr;
  }
  if (r.m >= 3) {
    j["improves_over_m1"] = r.improves_over_m1;
    if (r.m1_threshold) j["m1_threshold"] = *r.m1_threshold;
  }
  return j;
}

Json fit_report_to_json(const FitReport& r) {
  Json params = Json::object();
  for (const auto& [name, v] : r.params) params[name] = v;
  Json j{{"model", fit_model_name(r.model)},
         {"params", params},
         {"mom_infeasible", r.mom_infeasible}};
  if (!r.mom_infeasible) {
    j["chi_square"] = r.chi_square;
    j["dof"] = r.dof;
    j["log_likelihood"] = r.log_likelihood;
  }
  j["binning"] = r.binning;
  return j;
}

Json simulation_to_json(const SimulationReport& r, const std::vector<FitReport>& fits) {
  Json hist = Json::object();
  for (const auto& [v, c] : r.histogram) hist[std::to_string(v)] = c;
  Json moments{{"mean", r.empirical_mean()}};
  for (int m = 2; m <= 5; ++m) moments["central" + std::to_string(m)] = r.empirical_central(m);
  Json j{{"n", r.n},
         {"k", r.k},
         {"samples", r.samples},
         {"seed", r.seed},
         {"workers", r.workers},
         {"rng", "philox4x32-10"},
         {"histogram", hist},
         {"moments", moments},
         {"elapsed_seconds", r.elapsed_seconds}};
  if (!fits.empty()) {
    Json fj = Json::array();
    for (const auto& f : fits) fj.push_back(fit_report_to_json(f));
    j["fits"] = fj;
  }
  return j;
}

Json pmf_vector_to_json(const PmfVector& v) {
  Json probs = Json::array();
  for (const auto& p : v.probabilities) probs.push_back(format_bigfloat(p));
  return Json{{"probabilities", probs},
              {"truncation_bound", v.truncation_bound},
              {"tail_mass_bound", format_bigfloat(v.tail_mass_bound)}};
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_bigfloat(const BigFloat& v) { return v.str(25); }

}  // namespace ramsey
