#include "gfs/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "gfs/rng.hpp"
#include "gfs/serialize.hpp"

namespace gfs {

namespace {

double log_binomial(unsigned n, unsigned k) {
  return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

// ln of the epsilon-inequality left side without the e^{gamma} slack:
// (e/eps)^eps dm^{1-eps} |G|^eps.
double log_lhs(double eps, double log_dm, double log_order) {
  return eps * (1.0 - std::log(eps)) + (1.0 - eps) * log_dm + eps * log_order;
}

}  // namespace

RateReport compute_rates(const ConditionReport& condition, double max_log_dim,
                         double beta_fraction, double forced_epsilon) {
  if (!condition.condition_holds)
    throw std::invalid_argument("compute_rates: base condition fails for " +
                                condition.group_name);
  if (beta_fraction <= 0.0 || beta_fraction >= 1.0)
    throw std::invalid_argument("compute_rates: beta_fraction must lie in (0,1)");
  if (forced_epsilon < 0.0 || forced_epsilon > 0.5)
    throw std::invalid_argument("compute_rates: epsilon override must lie in (0, 1/2]");
  if (!condition.c.has_value())
    throw std::invalid_argument("compute_rates: c undefined (Delta covers everything)");

  RateReport r;
  r.base_name = condition.group_name;
  r.mu_id = condition.mu_id;
  r.c = *condition.c;
  r.gamma_tight = condition.gamma;

  const double log_dm = std::log(static_cast<double>(condition.delta_mass));
  const double log_order = condition.log_group_order;
  const double exp_log_dim = condition.exp_log_dim;
  const double ln_c = std::min(std::log(r.c), 700.0);  // +inf c saturates

  // Largest admissible gamma for a given epsilon (strictness margin applied
  // at the end): Gamma(eps) = E ln d - ln[(e/eps)^eps dm^{1-eps} |G|^eps].
  auto Gamma = [&](double eps) { return exp_log_dim - log_lhs(eps, log_dm, log_order); };

  const double eps_min = 1e-6, eps_max = 0.5;
  double eps;
  if (forced_epsilon > 0.0) {
    eps = forced_epsilon;
  } else {
    // a(eps) = min{Gamma(eps)/2, eps ln c}/4; the first branch decreases, the
    // second increases, so the maximum sits at the crossing (or a boundary).
    auto diff = [&](double e) { return Gamma(e) / 2.0 - e * ln_c; };
    if (diff(eps_max) >= 0.0) {
      eps = eps_max;
    } else if (diff(eps_min) <= 0.0) {
      eps = eps_min;
    } else {
      double lo = eps_min, hi = eps_max;
      for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (diff(mid) > 0.0 ? lo : hi) = mid;
      }
      eps = 0.5 * (lo + hi);
    }
  }

  r.epsilon = eps;
  r.gamma = Gamma(eps) * (1.0 - 1e-9);  // keep the inequality strict
  r.a = std::min(r.gamma / 2.0, eps * ln_c) / 4.0;

  r.M = max_log_dim;
  r.w = exp_log_dim / r.M;
  r.beta = beta_fraction * exp_log_dim;
  r.alpha = std::sqrt(r.w) - r.beta / (r.M * std::sqrt(r.w));
  r.feasible = r.gamma > 0.0 && r.a > 0.0 && r.alpha > 0.0 && r.epsilon >= 1e-6 &&
               r.beta < r.M * r.w;
  return r;
}

RateReport compute_rates(const CharacterTable& table, ElemId mu, double beta_fraction,
                         double forced_epsilon) {
  const ConditionReport condition = condition_check(table, mu);
  double max_dim = 1.0;
  for (const IrrepRow& row : table.irreps()) max_dim = std::max(max_dim, double(row.dim));
  return compute_rates(condition, std::log(max_dim), beta_fraction, forced_epsilon);
}

RateReport compute_rates(const Spectrum& spec, const ConditionReport& condition,
                         double beta_fraction, double forced_epsilon) {
  return compute_rates(condition, spec.max_log_dim(), beta_fraction, forced_epsilon);
}

std::string RateReport::to_json() const {
  JsonWriter w_;
  w_.begin_object();
  w_.field("base", base_name);
  w_.field("mu_id", static_cast<long long>(mu_id));
  if (std::isinf(c))
    w_.field("c", std::string("inf"));
  else
    w_.field("c", c);
  w_.field("gamma", gamma);
  w_.field("gamma_tight", gamma_tight);
  w_.field("epsilon", epsilon);
  w_.field("a", a);
  w_.field("M", M);
  w_.field("w", w);
  w_.field("alpha", alpha);
  w_.field("beta", beta);
  w_.field("feasible", feasible);
  w_.end_object();
  return w_.str() + "\n";
}

LambdaReport lambda_mass(const ConditionReport& condition, unsigned n, double epsilon) {
  if (n < 1) throw std::invalid_argument("lambda_mass: n must be >= 1");
  if (epsilon <= 0.0 || epsilon > 1.0)
    throw std::invalid_argument("lambda_mass: epsilon must lie in (0,1]");
  LambdaReport rep;
  rep.n = n;
  rep.epsilon = epsilon;
  rep.s = static_cast<unsigned>(std::ceil(epsilon * n - 1e-12));

  const double dm = static_cast<double>(condition.delta_mass);
  const double order = std::exp(condition.log_group_order);
  const double rest = order - dm;  // sum of d^2 outside Delta

  // Fewer than s non-Delta slots: j = 0 .. s-1.
  double mass = 0.0, prob = 0.0;
  for (unsigned j = 0; j < rep.s && j <= n; ++j) {
    mass += std::exp(log_binomial(n, j) + j * std::log(std::max(rest, 1e-300)) +
                     (n - j) * std::log(dm));
    prob += std::exp(log_binomial(n, j) + j * std::log(std::max(rest / order, 1e-300)) +
                     (n - j) * std::log(dm / order));
  }
  rep.exact_lambda_mass = mass;
  rep.log_exact_lambda_mass = mass > 0.0 ? std::log(mass) : -std::numeric_limits<double>::infinity();
  rep.plancherel_lambda_prob = std::min(prob, 1.0);

  rep.log_binomial_bound = log_binomial(n, rep.s) + rep.s * condition.log_group_order +
                           (n - rep.s) * std::log(dm);
  rep.binomial_bound = std::exp(rep.log_binomial_bound);
  return rep;
}

std::string LambdaReport::to_json() const {
  JsonWriter w;
  w.begin_object();
  w.field("n", static_cast<long long>(n));
  w.field("epsilon", epsilon);
  w.field("s", static_cast<long long>(s));
  w.field("exact_lambda_mass", exact_lambda_mass);
  w.field("binomial_bound", binomial_bound);
  w.field("log_exact_lambda_mass", log_exact_lambda_mass);
  w.field("log_binomial_bound", log_binomial_bound);
  w.field("plancherel_lambda_prob", plancherel_lambda_prob);
  w.end_object();
  return w.str() + "\n";
}

namespace {

void enumerate_multisets(unsigned remaining, std::size_t next, std::vector<unsigned>& counts,
                         const std::function<void(const std::vector<unsigned>&)>& visit) {
  if (next + 1 == counts.size()) {
    counts[next] = remaining;
    visit(counts);
    return;
  }
  for (unsigned take = 0; take <= remaining; ++take) {
    counts[next] = take;
    enumerate_multisets(remaining - take, next + 1, counts, visit);
  }
}

}  // namespace

double nonlambda_character_bound_check(const CharacterTable& table, ElemId mu, unsigned n,
                                       double epsilon) {
  if (n > 10) throw std::invalid_argument("nonlambda check: enumeration guarded at n <= 10");
  const ConditionReport condition = condition_check(table, mu);
  if (!condition.c.has_value())
    throw std::invalid_argument("nonlambda check: c undefined");
  const double c_inv = std::isinf(*condition.c) ? 0.0 : 1.0 / *condition.c;
  const double target = std::pow(c_inv, epsilon * n);

  const int mu_class = table.group().class_of(mu);
  std::vector<double> normalized(table.size());
  std::vector<bool> in_delta(table.size());
  for (std::size_t r = 0; r < table.size(); ++r) {
    normalized[r] = std::abs(table.normalized(r, mu_class));
    in_delta[r] = normalized[r] >= 1.0 - 1e-8;
  }

  double worst = 0.0;
  std::vector<unsigned> counts(table.size(), 0);
  enumerate_multisets(n, 0, counts, [&](const std::vector<unsigned>& mult) {
    unsigned outside = 0;
    double product = 1.0;
    for (std::size_t r = 0; r < mult.size(); ++r) {
      if (!in_delta[r]) outside += mult[r];
      product *= std::pow(normalized[r], static_cast<double>(mult[r]));
    }
    // Lambda members (fewer than epsilon*n non-Delta factors) are excluded.
    if (static_cast<double>(outside) < epsilon * n - 1e-12) return;
    if (product > target * (1.0 + 1e-9))
      throw std::runtime_error("nonlambda check: character bound violated");
    worst = std::max(worst, product);
  });
  return worst;
}

MultiplicityCheck multiplicity_bound_check(const CharacterTable& table, std::size_t rho,
                                           std::size_t tau) {
  const FiniteGroup& G = table.group();
  cplx acc = 0.0;
  for (std::size_t c = 0; c < G.classes().size(); ++c) {
    const double size = static_cast<double>(G.classes()[c].member_ids.size());
    acc += size * std::norm(table.value(rho, c)) * std::conj(table.value(tau, c));
  }
  acc /= static_cast<double>(G.order());
  const long long m = std::llround(acc.real());
  if (std::abs(acc.imag()) > 1e-6 || std::abs(acc.real() - static_cast<double>(m)) > 1e-6)
    throw std::runtime_error("multiplicity_bound_check: non-integer multiplicity");
  MultiplicityCheck out;
  out.multiplicity = m;
  out.dim_tau = table.row(tau).dim;
  if (out.multiplicity > out.dim_tau)
    throw std::runtime_error("multiplicity_bound_check: dimension bound violated");
  return out;
}

PlancherelTailReport plancherel_dimension_mc(const CharacterTable& table, unsigned n,
                                             double beta_fraction, int trials,
                                             std::uint64_t seed, int k) {
  const PlancherelDistribution planch = PlancherelDistribution::from_table(table);
  const double exp_log_dim = planch.expected_log_dim();
  if (exp_log_dim <= 0.0)
    throw std::invalid_argument("plancherel_dimension_mc: abelian base, no admissible beta");
  if (beta_fraction <= 0.0 || beta_fraction >= 1.0)
    throw std::invalid_argument("plancherel_dimension_mc: beta_fraction must lie in (0,1)");

  double max_dim = 1.0;
  for (int d : planch.dims) max_dim = std::max(max_dim, static_cast<double>(d));
  const double M = std::log(max_dim);
  const double w = exp_log_dim / M;
  const double beta = beta_fraction * exp_log_dim;
  const double alpha = std::sqrt(w) - beta / (M * std::sqrt(w));

  std::vector<double> cumulative(planch.probabilities.size());
  std::partial_sum(planch.probabilities.begin(), planch.probabilities.end(), cumulative.begin());
  std::vector<double> log_dims;
  for (int d : planch.dims) log_dims.push_back(std::log(static_cast<double>(d)));

  const double threshold = beta * n;
  long long hits = 0;
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    double acc = 0.0;
    for (unsigned i = 0; i < n; ++i) {
      const double u = rng.unit();
      std::size_t idx = 0;
      while (idx + 1 < cumulative.size() && u > cumulative[idx]) ++idx;
      acc += log_dims[idx];
    }
    if (acc > threshold) ++hits;
  }

  PlancherelTailReport rep;
  rep.n = n;
  rep.beta = beta;
  rep.alpha = alpha;
  rep.k = k;
  rep.trials = trials;
  rep.seed = seed;
  rep.empirical = static_cast<double>(hits) / static_cast<double>(trials);
  rep.bound = 1.0 - 2.0 * k * std::exp(-alpha * alpha * n / 4.0);
  rep.stderr_ = std::sqrt(std::max(rep.empirical * (1.0 - rep.empirical), 1e-12) /
                          static_cast<double>(trials));
  return rep;
}

std::string PlancherelTailReport::to_csv_row() const {
  return std::to_string(n) + "," + format_real(bound) + "," + format_real(empirical) + "," +
         format_real(stderr_);
}

TheoremBounds theorem_bound_assembly(const RateReport& rates, unsigned n) {
  if (!rates.feasible) throw std::invalid_argument("theorem_bound_assembly: infeasible rates");
  TheoremBounds b;
  b.tv_bound = 2.0 * std::exp(-rates.gamma * n / 2.0) + 10.0 * std::exp(-rates.a * n);
  b.failure_prob_bound =
      std::exp(-rates.a * n) + 4.0 * std::exp(-rates.alpha * rates.alpha * n / 4.0);
  return b;
}

unsigned tv_bound_crossing(const RateReport& rates, double threshold, unsigned limit) {
  for (unsigned n = 1; n <= limit; ++n)
    if (theorem_bound_assembly(rates, n).tv_bound < threshold) return n;
  return 0;
}

}  // namespace gfs
