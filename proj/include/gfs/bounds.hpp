#pragma once

#include <string>
#include <vector>

#include "gfs/condition.hpp"

namespace gfs {

// All rate constants of the decay analysis for one base group and involution.
//
// gamma_tight is the largest exponent with delta_mass = e^{-gamma} e^{E ln d};
// the reported gamma is the (smaller) value actually used by the epsilon
// inequality below, chosen jointly with epsilon to maximize
// a = min{gamma/2, epsilon ln c}/4. See compute_rates.
struct RateReport {
  std::string base_name;
  ElemId mu_id = 0;
  double c = 0.0;           // 1 / max non-Delta normalized character; may be +inf
  double gamma = 0.0;       // rate exponent used downstream
  double gamma_tight = 0.0; // exp_log_dim - ln(delta_mass)
  double epsilon = 0.0;
  double a = 0.0;           // min{gamma/2, epsilon ln c}/4
  double M = 0.0;           // ln max dim
  double w = 0.0;           // (E ln d)/M
  double alpha = 0.0;       // sqrt(w) - beta/(M sqrt(w))
  double beta = 0.0;        // beta_fraction * E ln d
  bool feasible = false;

  std::string to_json() const;
};

// Requires the base condition to hold. epsilon is located by bisection on
// (0, 1/2]; for each epsilon the largest admissible gamma is
//   Gamma(eps) = E ln d - ln[(e/eps)^eps delta_mass^{1-eps} |G|^eps],
// and the pair maximizing a = min{Gamma(eps)/2, eps ln c}/4 is returned.
// forced_epsilon > 0 skips the search and uses the given value.
RateReport compute_rates(const ConditionReport& condition, double max_log_dim,
                         double beta_fraction, double forced_epsilon = 0.0);
RateReport compute_rates(const CharacterTable& table, ElemId mu, double beta_fraction,
                         double forced_epsilon = 0.0);
RateReport compute_rates(const Spectrum& spec, const ConditionReport& condition,
                         double beta_fraction, double forced_epsilon = 0.0);

struct LambdaReport {
  unsigned n = 0;
  double epsilon = 0.0;
  unsigned s = 0;                    // ceil(epsilon n)
  double exact_lambda_mass = 0.0;    // sum over Lambda of d^2, combinatorial
  double binomial_bound = 0.0;       // C(n,s) |G|^s delta_mass^{n-s}
  double log_exact_lambda_mass = 0.0;
  double log_binomial_bound = 0.0;
  double plancherel_lambda_prob = 0.0;

  std::string to_json() const;
};

// Lambda = irreps of G^n with more than (1-epsilon)n tensor factors in
// Delta, i.e. fewer than ceil(epsilon n) factors outside it. Mass and
// probability are exact binomial convolutions; the bound is the s-slot
// overcount for comparison.
LambdaReport lambda_mass(const ConditionReport& condition, unsigned n, double epsilon);

// Enumerates irreps of G^n outside Lambda by factor-type multiset and
// returns the largest normalized character modulus found at [mu]^n; it must
// be <= c^{-epsilon n}.
double nonlambda_character_bound_check(const CharacterTable& table, ElemId mu, unsigned n,
                                       double epsilon);

// Multiplicity of tau in rho (x) rho^*, with the dimension bound it obeys.
struct MultiplicityCheck {
  long long multiplicity = 0;
  long long dim_tau = 0;
};
MultiplicityCheck multiplicity_bound_check(const CharacterTable& table, std::size_t rho,
                                           std::size_t tau);

struct PlancherelTailReport {
  unsigned n = 0;
  double beta = 0.0;
  double alpha = 0.0;
  int k = 2;
  int trials = 0;
  std::uint64_t seed = 0;
  double empirical = 0.0;   // Pr[ sum ln d_i > beta n ]
  double bound = 0.0;       // 1 - 2k e^{-alpha^2 n / 4}
  double stderr_ = 0.0;

  std::string to_csv_row() const;
};

// Monte-Carlo check of the dimension concentration: n i.i.d. Plancherel
// factors per trial; empirical Pr[d > e^{beta n}] compared against
// 1 - 2k e^{-alpha^2 n/4}. Rejects abelian groups (E ln d = 0 leaves no
// admissible beta).
PlancherelTailReport plancherel_dimension_mc(const CharacterTable& table, unsigned n,
                                             double beta_fraction, int trials,
                                             std::uint64_t seed, int k = 2);

struct TheoremBounds {
  double tv_bound = 0.0;            // 2 e^{-gamma n/2} + 10 e^{-a n}
  double failure_prob_bound = 0.0;  // e^{-a n} + 4 e^{-alpha^2 n/4}
};
TheoremBounds theorem_bound_assembly(const RateReport& rates, unsigned n);

// Smallest n with tv_bound < threshold (searches n <= limit; 0 if none).
unsigned tv_bound_crossing(const RateReport& rates, double threshold, unsigned limit = 1000000);

}  // namespace gfs
