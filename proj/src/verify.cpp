#include "ramsey/bounds.hpp"
#include "ramsey/cli_app.hpp"
#include "ramsey/distributions.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/moments.hpp"
#include "ramsey/oracle.hpp"

#include <chrono>
#include <functional>
#include <sstream>

namespace ramsey {

namespace {

struct Sink {
  std::vector<VerifyCheck>& out;
  const std::string& filter;
  const EnumerationLimits& limits;
  std::ostream* progress;

  void run(const std::string& name, const std::function<std::string()>& body) {
    if (!filter.empty() && name.find(filter) == std::string::npos) return;
    if (progress) *progress << "verify: " << name << "..." << std::endl;
    VerifyCheck c;
    c.name = name;
    auto t0 = std::chrono::steady_clock::now();
    try {
      std::string problem = body();
      c.pass = problem.empty();
      c.detail = problem;
    } catch (const std::exception& e) {
      c.pass = false;
      c.detail = std::string("exception: ") + e.what();
    }
    c.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
               .count();
    out.push_back(c);
  }
};

std::string check_oracle_engine(int n, int k, int rmax, const EnumerationLimits& limits) {
  ExactDistribution d = exact_distribution(n, k);
  for (int r = 1; r <= rmax; ++r) {
    BigRational engine = raw_moment(k, r, limits).eval(BigInt(n));
    BigRational oracle = oracle_moment(d, r);
    if (engine != oracle) {
      std::ostringstream os;
      os << "r=" << r << ": engine " << engine << " vs oracle " << oracle;
      return os.str();
    }
  }
  return {};
}

// the two fully written-out second-moment displays
RationalPolynomial display_k3() {
  RationalPolynomial p(Basis::monomial);
  BigRational q8(2, 8), q32(2, 32);
  p += falling_factorial_poly(6).scaled(q8 * q8 / BigRational(36));
  p += falling_factorial_poly(5).scaled(q8 * q8 / BigRational(4));
  p += falling_factorial_poly(4).scaled(q32 / BigRational(2));
  p += falling_factorial_poly(3).scaled(q8 / BigRational(6));
  return p;
}

RationalPolynomial display_k4() {
  RationalPolynomial p(Basis::monomial);
  BigRational q64(2, 64);
  p += falling_factorial_poly(8).scaled(q64 * q64 / BigRational(576));
  p += falling_factorial_poly(7).scaled(q64 * q64 / BigRational(36));
  p += falling_factorial_poly(6).scaled(BigRational(2, 2048) / BigRational(8));
  p += falling_factorial_poly(5).scaled(BigRational(2, 512) / BigRational(6));
  p += falling_factorial_poly(4).scaled(q64 / BigRational(24));
  return p;
}

std::string check_second_moment(int k, const EnumerationLimits& limits) {
  RationalPolynomial engine = raw_moment(k, 2, limits);
  RationalPolynomial general = second_moment_reference(k);
  if (engine != general) return "enumeration disagrees with the general-k sum";
  RationalPolynomial display = k == 3 ? display_k3() : display_k4();
  if (engine != display) return "enumeration disagrees with the written-out display";
  return {};
}

std::string check_leading_terms(int k, const EnumerationLimits& limits) {
  MomentTable t = compute_moment_table(k, 5, limits);
  for (int m = 2; m <= 5; ++m) {
    auto [want_deg, want_coeff] = leading_central_reference(k, m);
    auto lead = t.central[m].leading_term();
    if (!lead) return "central moment m=" + std::to_string(m) + " is zero";
    if (lead->first != want_deg || lead->second != want_coeff) {
      std::ostringstream os;
      os << "m=" << m << ": got degree " << lead->first << " coeff " << lead->second
         << ", want degree " << want_deg << " coeff " << want_coeff;
      return os.str();
    }
  }
  return {};
}

std::string check_delaporte_convolution() {
  for (double lambda : {0.5, 1.0, 2.0}) {
    for (double alpha : {0.75, 2.0, 5.0}) {
      for (double beta : {0.25, 0.5, 2.0}) {
        DelaporteParams p{BigFloat(lambda), BigFloat(alpha), BigFloat(beta)};
        PmfVector table = delaporte_pmf_vector(p, 40);
        for (long j = 0; j <= 40; ++j) {
          BigFloat direct = delaporte_pmf(p, j);
          BigFloat diff = abs(direct - table.probabilities[j]);
          if (diff > BigFloat("1e-50")) {
            std::ostringstream os;
            os << "(lambda,alpha,beta)=(" << lambda << "," << alpha << "," << beta
               << ") j=" << j << ": |convolution - recurrence| = " << diff.str(5);
            return os.str();
          }
        }
      }
    }
  }
  return {};
}

std::string check_delaporte_p0() {
  for (double lambda : {0.5, 1.0, 2.0}) {
    for (double alpha : {0.75, 2.0, 5.0}) {
      for (double beta : {0.25, 0.5, 2.0}) {
        DelaporteParams p{BigFloat(lambda), BigFloat(alpha), BigFloat(beta)};
        BigFloat closed = exp(-p.lambda) / pow(1 + p.beta, p.alpha);
        BigFloat direct = delaporte_pmf(p, 0);
        if (abs(closed - direct) > BigFloat("1e-60") * closed) {
          return "P(D=0) closed form mismatch at lambda=" + std::to_string(lambda);
        }
      }
    }
  }
  return {};
}

std::string check_poisson_series() {
  for (double lv : {0.5, 2.0, 10.0}) {
    BigFloat lambda(lv);
    BigFloat target = exp(-lambda);
    BigFloat sum = 0, term = 1;
    long s = 0;
    while (abs(term) > BigFloat("1e-40") || s <= 2 * lv + 4) {
      sum += term;
      ++s;
      term *= -lambda / s;
    }
    if (abs(sum - target) > BigFloat("1e-10")) {
      return "lambda=" + std::to_string(lv) + ": |sum - e^-lambda| = " +
             BigFloat(abs(sum - target)).str(5);
    }
  }
  return {};
}

std::string check_bracketing(const EnumerationLimits& limits) {
  struct Case {
    int n, k;
  };
  for (Case c : {Case{3, 3}, Case{5, 3}, Case{6, 3}, Case{6, 4}}) {
    ExactDistribution d = exact_distribution(c.n, c.k);
    BigRational p0 = oracle_p_zero(d);
    MomentTable t = compute_moment_table(c.k, 5, limits);
    for (int m = 0; m <= 5; ++m) {
      BigRational sum = bonferroni_sum(t, c.n, m);
      bool ok = (m % 2 == 1) ? (sum <= p0) : (sum >= p0);
      if (!ok) {
        std::ostringstream os;
        os << "(n=" << c.n << ",k=" << c.k << ") m=" << m << ": sum " << sum
           << " fails to bracket P0 " << p0;
        return os.str();
      }
    }
  }
  return {};
}

std::string check_no_improvement(int k, const EnumerationLimits& limits) {
  MomentTable t = compute_moment_table(k, 5, limits);
  BoundReport r1 = bonferroni_threshold(t, 1);
  std::ostringstream os;
  for (int m : {3, 5}) {
    BoundReport rm = bonferroni_threshold(t, m);
    if (rm.improves_over_m1) {
      os << "m=" << m << " threshold "
         << (rm.threshold_n ? std::to_string(*rm.threshold_n) : "none")
         << " improves over m=1 threshold "
         << (r1.threshold_n ? std::to_string(*r1.threshold_n) : "none");
      return os.str();
    }
  }
  return {};
}

}  // namespace

std::vector<VerifyCheck> run_verify_suite(const std::string& only_filter, int max_k,
                                          const EnumerationLimits& limits,
                                          std::ostream* progress) {
  std::vector<VerifyCheck> out;
  Sink sink{out, only_filter, limits, progress};

  sink.run("stirling-duality", [&] {
    const StirlingTable& st = StirlingTable::shared(12);
    for (int m = 0; m <= 12; ++m) {
      for (int i = 0; i <= m; ++i) {
        BigInt acc = 0;
        for (int j = i; j <= m; ++j) acc += st.first_kind_signed(m, j) * st.second_kind(j, i);
        if (acc != (m == i ? 1 : 0)) return std::string("duality fails at (") +
                                            std::to_string(m) + "," + std::to_string(i) + ")";
      }
    }
    return std::string{};
  });

  sink.run("oracle-engine-5-3", [&] { return check_oracle_engine(5, 3, 5, limits); });
  sink.run("oracle-engine-6-3", [&] { return check_oracle_engine(6, 3, 5, limits); });
  sink.run("oracle-engine-6-4", [&] { return check_oracle_engine(6, 4, 5, limits); });
  sink.run("second-moment-k3", [&] { return check_second_moment(3, limits); });
  sink.run("second-moment-k4", [&] { return check_second_moment(4, limits); });
  sink.run("leading-terms-k4", [&] { return check_leading_terms(4, limits); });
  sink.run("leading-terms-k5", [&] { return check_leading_terms(5, limits); });
  sink.run("delaporte-convolution", [&] { return check_delaporte_convolution(); });
  sink.run("delaporte-p0", [&] { return check_delaporte_p0(); });
  sink.run("poisson-series", [&] { return check_poisson_series(); });
  sink.run("bonferroni-bracketing", [&] { return check_bracketing(limits); });
  for (int k = 5; k <= max_k; ++k) {
    sink.run("bonferroni-no-improvement-k" + std::to_string(k),
             [&, k] { return check_no_improvement(k, limits); });
  }
  return out;
}

}  // namespace ramsey
