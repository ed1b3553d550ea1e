#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gfs/condition.hpp"
#include "gfs/irreps.hpp"
#include "gfs/rng.hpp"

namespace gfs {

// Weighted unit vectors {(b, a_b)} resolving the identity:
// sum_b a_b |b><b| = 1. Columns of `vectors` are the b's.
struct Frame {
  Eigen::MatrixXcd vectors;
  std::vector<double> weights;

  Eigen::Index dim() const { return vectors.rows(); }
  Eigen::Index size() const { return vectors.cols(); }
  // Throws when completeness (1e-9) or unit norms (1e-12) fail.
  void validate(double tol_complete = 1e-9, double tol_unit = 1e-12) const;
};

enum class FramePolicy { StandardBasis, RandomUnitaryBasis, RandomTightFrame };

// StandardBasis: identity columns, unit weights. RandomUnitaryBasis: Haar-ish
// unitary columns (QR of a Gaussian matrix with a fixed phase convention).
// RandomTightFrame: overcomplete_factor * dim Gaussian vectors whitened into
// an exact tight frame; weights carry the normalization.
Frame make_frame(FramePolicy policy, Eigen::Index dim, Rng& rng, int overcomplete_factor = 2);

struct SamplingDistribution {
  std::vector<std::string> support;
  std::vector<double> probabilities;
  double total() const;
  std::string to_csv() const;  // one row per support point
};

// |H|^-1 sum_{h in H} rho(h); Hermitian idempotent.
Eigen::MatrixXcd subgroup_projector(const UnitaryIrrep& rho, const Subgroup& H);

// Exact integer rank of the subgroup projector, (1/|H|) sum_h chi(h).
long long subgroup_projector_rank(const CharacterTable& table, std::size_t irrep,
                                  const Subgroup& H);

// Weak-sampling distribution P_H(rho) = (d |H| / |G|) rk Pi_H^rho over the
// irrep names. Sums to 1 exactly in integer arithmetic.
SamplingDistribution weak_distribution(const CharacterTable& table, const Subgroup& H);

// rank (rho(1)+rho(m))/2 = (d + chi(m))/2 for an involution m; exact integer.
long long involution_rank(const CharacterTable& table, std::size_t irrep, ElemId m);
Eigen::MatrixXcd involution_projector(const UnitaryIrrep& rho, ElemId m);

// t^n with t = sum_rho d_rho |chi_rho(mu)| / |G|: the exact L1 distance
// between the weak distributions of H = {1, m} (m in the diagonal class) and
// the trivial subgroup over the n-th power, factorized over tensor factors.
// The conventional total-variation distance is half of this.
double exact_weak_l1_power(const CharacterTable& table, ElemId mu, unsigned n);
double exact_weak_l1_power(const Spectrum& spec, unsigned n);

// Fixed points of conjugation by g = |C_g|, the centralizer size.
long long conjugation_fixed_points(const FiniteGroup& G, ElemId g);

// Lemma-3-style bound chain for the factorized L1: (|C_mu|/|G|)^{n/2}.
double weak_l1_centralizer_bound(const FiniteGroup& G, ElemId mu, unsigned n);

// Strong-sampling conditional P_{H,rho}(b) = a_b ||Pi_H b||^2 / rk Pi_H.
// Requires rk > 0.
SamplingDistribution strong_conditional(const Frame& frame, const UnitaryIrrep& rho,
                                        const Subgroup& H);

struct ExpVarCheck {
  double exact_expectation = 0.0;   // class average of ||Pi_m b||^2
  double closed_form = 0.0;         // (||b||^2 / 2)(1 + chi([m])/d)
  double exact_variance = 0.0;
  double variance_bound = 0.0;      // (1/4) sum_sigma (chi_sigma([m])/d_sigma) ||Pi_sigma (b (x) b*)||^2
};

// Exact first and second moments of ||Pi_m b||^2 over a class of involutions,
// with the closed forms they must match.
ExpVarCheck expvar_class_check(const CharacterTable& table,
                               const std::vector<UnitaryIrrep>& irreps, std::size_t rho_index,
                               std::size_t class_index, const Eigen::VectorXcd& b);

struct FrameBoundCheck {
  double lhs = 0.0;     // sum_b a_b ||Pi_L (b (x) b*)||^2
  double dim_L = 0.0;
};
FrameBoundCheck frame_projection_bound_check(const Frame& frame, const Eigen::MatrixXcd& PiL);

// ---- Empirical strong sampling over G^n ------------------------------------

struct StrongTvOptions {
  unsigned n = 1;
  int trials = 100;
  std::uint64_t seed = 1;
  FramePolicy policy = FramePolicy::StandardBasis;
  bool control_trivial_subgroup = false;  // H = {1}: P equals N identically
  Eigen::Index dim_cap = 4096;            // guard for d_{rho_vec}
};

struct StrongTvTrial {
  std::uint64_t seed = 0;
  std::vector<int> rho_indices;  // per-factor irrep index
  long long dim = 0;
  long long rank = 0;
  double l1 = 0.0;
};

struct StrongTvResult {
  StrongTvOptions options;
  std::vector<StrongTvTrial> trials;
  double min = 0.0, median = 0.0, mean = 0.0, max = 0.0;

  std::string trials_csv() const;
};

// Samples m uniformly from [mu]^n and rho_vec by exact weak sampling for
// H = {1, m}, then evaluates ||P - N||_1 exactly on the chosen frame. States
// and operators stay factorized; only length-d_{rho_vec} vectors are formed.
StrongTvResult empirical_strong_tv(const CharacterTable& table,
                                   const std::vector<UnitaryIrrep>& irreps, ElemId mu,
                                   const StrongTvOptions& options);

}  // namespace gfs
