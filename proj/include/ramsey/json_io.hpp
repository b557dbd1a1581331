#pragma once

#include "ramsey/bounds.hpp"
#include "ramsey/distributions.hpp"
#include "ramsey/moments.hpp"
#include "ramsey/oracle.hpp"
#include "ramsey/polynomial.hpp"
#include "ramsey/simulate.hpp"

#include <json.hpp>

namespace ramsey {

using Json = nlohmann::json;

// Rationals travel as decimal-string pairs; they routinely overflow
// 64-bit integers.
Json rational_to_json(const BigRational& q);
BigRational rational_from_json(const Json& j);

Json polynomial_to_json(const RationalPolynomial& p);
RationalPolynomial polynomial_from_json(const Json& j);

Json oracle_to_json(const ExactDistribution& d, int max_r);
Json bound_report_to_json(const BoundReport& r);
Json simulation_to_json(const SimulationReport& r, const std::vector<FitReport>& fits);
Json fit_report_to_json(const FitReport& r);
Json pmf_vector_to_json(const PmfVector& v);

// 17 significant digits: enough to round-trip an IEEE double.
std::string format_double(double v);
std::string format_bigfloat(const BigFloat& v);

}  // namespace ramsey
