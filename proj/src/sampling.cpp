#include "gfs/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "gfs/linalg.hpp"
#include "gfs/serialize.hpp"

namespace gfs {

void Frame::validate(double tol_complete, double tol_unit) const {
  if (static_cast<std::size_t>(size()) != weights.size())
    throw std::invalid_argument("frame: weight count != vector count");
  Eigen::MatrixXcd resolution = Eigen::MatrixXcd::Zero(dim(), dim());
  for (Eigen::Index j = 0; j < size(); ++j) {
    if (weights[j] <= 0.0) throw std::invalid_argument("frame: weights must be positive");
    const double norm = vectors.col(j).norm();
    if (std::abs(norm - 1.0) > tol_unit)
      throw std::invalid_argument("frame: vector " + std::to_string(j) + " is not unit");
    resolution += weights[j] * (vectors.col(j) * vectors.col(j).adjoint());
  }
  const double residual =
      (resolution - Eigen::MatrixXcd::Identity(dim(), dim())).cwiseAbs().maxCoeff();
  if (residual > tol_complete)
    throw std::invalid_argument("frame: completeness residual " + std::to_string(residual));
}

namespace {

Eigen::MatrixXcd gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  Eigen::MatrixXcd M(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) M(i, j) = cplx(rng.normal(), rng.normal());
  return M;
}

Eigen::MatrixXcd haar_unitary(Eigen::Index d, Rng& rng) {
  const Eigen::MatrixXcd Z = gaussian_matrix(d, d, rng);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(Z);
  Eigen::MatrixXcd Q = qr.householderQ();
  const Eigen::MatrixXcd R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < d; ++j) {
    const cplx r = R(j, j);
    if (std::abs(r) > 0) Q.col(j) *= r / std::abs(r);
  }
  return Q;
}

}  // namespace

Frame make_frame(FramePolicy policy, Eigen::Index dim, Rng& rng, int overcomplete_factor) {
  Frame f;
  switch (policy) {
    case FramePolicy::StandardBasis:
      f.vectors = Eigen::MatrixXcd::Identity(dim, dim);
      f.weights.assign(static_cast<std::size_t>(dim), 1.0);
      break;
    case FramePolicy::RandomUnitaryBasis:
      f.vectors = haar_unitary(dim, rng);
      f.weights.assign(static_cast<std::size_t>(dim), 1.0);
      break;
    case FramePolicy::RandomTightFrame: {
      const Eigen::Index count = dim * std::max(overcomplete_factor, 1);
      const Eigen::MatrixXcd V = gaussian_matrix(dim, count, rng);
      // Whiten: S^{-1/2} V resolves the identity exactly; unit-normalize the
      // columns and move the norms into the weights.
      const Eigen::MatrixXcd S = V * V.adjoint();
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(S);
      if (es.info() != Eigen::Success || es.eigenvalues().minCoeff() <= 0.0)
        throw std::runtime_error("make_frame: singular frame operator");
      const Eigen::MatrixXcd Sinvhalf =
          es.eigenvectors() *
          es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
          es.eigenvectors().adjoint();
      const Eigen::MatrixXcd U = Sinvhalf * V;
      f.vectors.resize(dim, count);
      f.weights.resize(static_cast<std::size_t>(count));
      for (Eigen::Index j = 0; j < count; ++j) {
        const double norm = U.col(j).norm();
        f.vectors.col(j) = U.col(j) / norm;
        f.weights[static_cast<std::size_t>(j)] = norm * norm;
      }
      break;
    }
  }
  return f;
}

double SamplingDistribution::total() const {
  return std::accumulate(probabilities.begin(), probabilities.end(), 0.0);
}

std::string SamplingDistribution::to_csv() const {
  CsvWriter csv({"support", "probability"});
  for (std::size_t i = 0; i < support.size(); ++i)
    csv.row({support[i], format_real(probabilities[i])});
  return csv.str();
}

Eigen::MatrixXcd subgroup_projector(const UnitaryIrrep& rho, const Subgroup& H) {
  Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(rho.dim, rho.dim);
  for (ElemId h : H.member_ids()) P += rho.at(h);
  return P / static_cast<double>(H.size());
}

long long subgroup_projector_rank(const CharacterTable& table, std::size_t irrep,
                                  const Subgroup& H) {
  cplx acc = 0.0;
  for (ElemId h : H.member_ids()) acc += table.value_at_element(irrep, h);
  const double rank = acc.real() / static_cast<double>(H.size());
  const long long r = std::llround(rank);
  if (std::abs(acc.imag()) > 1e-6 || std::abs(rank - static_cast<double>(r)) > 1e-6)
    throw std::runtime_error("subgroup projector rank is not an integer: corrupted characters");
  return r;
}

SamplingDistribution weak_distribution(const CharacterTable& table, const Subgroup& H) {
  const long long order = static_cast<long long>(table.group().order());
  const long long h = static_cast<long long>(H.size());
  SamplingDistribution dist;
  long long mass = 0;  // sum d |H| rk, must equal |G| exactly
  for (std::size_t r = 0; r < table.size(); ++r) {
    const long long rank = subgroup_projector_rank(table, r, H);
    const long long numer = static_cast<long long>(table.row(r).dim) * h * rank;
    mass += numer;
    dist.support.push_back(table.row(r).label);
    dist.probabilities.push_back(static_cast<double>(numer) / static_cast<double>(order));
  }
  if (mass != order)
    throw std::runtime_error("weak_distribution: probabilities do not sum to 1 exactly");
  return dist;
}

long long involution_rank(const CharacterTable& table, std::size_t irrep, ElemId m) {
  const FiniteGroup& G = table.group();
  if (m == G.identity() || G.mul(m, m) != G.identity())
    throw std::invalid_argument("involution_rank: m is not an involution");
  const cplx chi = table.value_at_element(irrep, m);
  const int d = table.row(irrep).dim;
  // chi(m) is an integer for an involution (difference of +-1 eigenvalue
  // counts); (d + chi)/2 must land on an integer.
  const long long chi_int = std::llround(chi.real());
  if (std::abs(chi.imag()) > 1e-6 || std::abs(chi.real() - static_cast<double>(chi_int)) > 1e-6 ||
      (d + chi_int) % 2 != 0)
    throw std::runtime_error("involution_rank: corrupted character data");
  return (d + chi_int) / 2;
}

Eigen::MatrixXcd involution_projector(const UnitaryIrrep& rho, ElemId m) {
  return 0.5 * (Eigen::MatrixXcd::Identity(rho.dim, rho.dim) + rho.at(m));
}

double exact_weak_l1_power(const CharacterTable& table, ElemId mu, unsigned n) {
  return exact_weak_l1_power(spectrum_at(table, mu), n);
}

double exact_weak_l1_power(const Spectrum& spec, unsigned n) {
  double t = 0.0;
  for (const SpectralLine& l : spec.lines)
    t += static_cast<double>(l.count) * static_cast<double>(l.dim) * std::abs(l.chi_mu);
  t /= std::exp(spec.log_order);
  return std::pow(t, static_cast<double>(n));
}

long long conjugation_fixed_points(const FiniteGroup& G, ElemId g) {
  return static_cast<long long>(G.centralizer_size(g));
}

double weak_l1_centralizer_bound(const FiniteGroup& G, ElemId mu, unsigned n) {
  const double ratio =
      static_cast<double>(G.centralizer_size(mu)) / static_cast<double>(G.order());
  return std::pow(ratio, static_cast<double>(n) / 2.0);
}

SamplingDistribution strong_conditional(const Frame& frame, const UnitaryIrrep& rho,
                                        const Subgroup& H) {
  const Eigen::MatrixXcd P = subgroup_projector(rho, H);
  const double rank = std::round(P.trace().real());
  if (rank < 0.5)
    throw std::invalid_argument("strong_conditional: zero-rank projector, conditional undefined");
  SamplingDistribution dist;
  for (Eigen::Index j = 0; j < frame.size(); ++j) {
    dist.support.push_back("b" + std::to_string(j));
    dist.probabilities.push_back(frame.weights[static_cast<std::size_t>(j)] *
                                 (P * frame.vectors.col(j)).squaredNorm() / rank);
  }
  return dist;
}

ExpVarCheck expvar_class_check(const CharacterTable& table,
                               const std::vector<UnitaryIrrep>& irreps, std::size_t rho_index,
                               std::size_t class_index, const Eigen::VectorXcd& b) {
  const FiniteGroup& G = table.group();
  const ConjugacyClass& cls = G.classes()[class_index];
  for (ElemId m : cls.member_ids)
    if (m == G.identity() || G.mul(m, m) != G.identity())
      throw std::invalid_argument("expvar_class_check: class contains a non-involution");

  const UnitaryIrrep& rho = irreps[rho_index];
  ExpVarCheck out;

  // Exact moments by enumerating the class. ||Pi_m b||^2 = (||b||^2 + <b, rho(m) b>)/2.
  double sum = 0.0, sum_sq = 0.0;
  for (ElemId m : cls.member_ids) {
    const double quad = (b.squaredNorm() + (b.dot(rho.at(m) * b)).real()) / 2.0;
    sum += quad;
    sum_sq += quad * quad;
  }
  const double k = static_cast<double>(cls.member_ids.size());
  out.exact_expectation = sum / k;
  out.exact_variance = sum_sq / k - out.exact_expectation * out.exact_expectation;

  const double d = table.row(rho_index).dim;
  out.closed_form =
      0.5 * b.squaredNorm() * (1.0 + table.value(rho_index, class_index).real() / d);

  // Variance bound: (1/4) sum_sigma (chi_sigma([m])/d_sigma) ||Pi_sigma (b (x) b*)||^2
  // with sigma running over the decomposition of rho (x) rho*.
  std::vector<Eigen::MatrixXcd> rho_rho_star(G.order());
  for (std::size_t g = 0; g < G.order(); ++g)
    rho_rho_star[g] = kron(rho.at(static_cast<ElemId>(g)), rho.at(static_cast<ElemId>(g)).conjugate());
  Eigen::VectorXcd bb(b.size() * b.size());
  for (Eigen::Index i = 0; i < b.size(); ++i)
    for (Eigen::Index j = 0; j < b.size(); ++j) bb(i * b.size() + j) = b(i) * std::conj(b(j));
  double bound = 0.0;
  for (std::size_t s = 0; s < table.size(); ++s) {
    const Eigen::MatrixXcd Pi = isotypic_projector(table, table.row(s).label, rho_rho_star);
    bound += (table.value(s, class_index).real() / table.row(s).dim) * (Pi * bb).squaredNorm();
  }
  out.variance_bound = bound / 4.0;
  return out;
}

FrameBoundCheck frame_projection_bound_check(const Frame& frame, const Eigen::MatrixXcd& PiL) {
  FrameBoundCheck out;
  out.dim_L = std::round(PiL.trace().real());
  for (Eigen::Index j = 0; j < frame.size(); ++j) {
    const auto b = frame.vectors.col(j);
    Eigen::VectorXcd bb(b.size() * b.size());
    for (Eigen::Index p = 0; p < b.size(); ++p)
      for (Eigen::Index q = 0; q < b.size(); ++q) bb(p * b.size() + q) = b(p) * std::conj(b(q));
    out.lhs += frame.weights[static_cast<std::size_t>(j)] * (PiL * bb).squaredNorm();
  }
  return out;
}

// ---- empirical strong sampling ---------------------------------------------

namespace {

// Weak sampling of rho_vec for H = {1, m}: P(rho_vec) factorizes as
// Plancherel on the first n-1 factors and a tilted Plancherel on the last,
// P(rho_n | prefix) = Planch(rho_n) (1 + T chi_{rho_n}(mu)/d_{rho_n}) with
// T the product of the prefix normalized characters at mu. Exact because the
// per-factor expectation of the normalized character vanishes off the
// identity.
std::vector<int> sample_weak_power(const CharacterTable& table, int mu_class, unsigned n,
                                   bool control, Rng& rng) {
  const std::size_t r = table.size();
  std::vector<double> planch(r), tilt(r);
  const double order = static_cast<double>(table.group().order());
  for (std::size_t i = 0; i < r; ++i) {
    planch[i] = static_cast<double>(table.row(i).dim) * table.row(i).dim / order;
    tilt[i] = table.value(i, mu_class).real() / table.row(i).dim;
  }

  auto draw = [&rng](const std::vector<double>& p) {
    double u = rng.unit() * std::accumulate(p.begin(), p.end(), 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      u -= p[i];
      if (u <= 0.0) return static_cast<int>(i);
    }
    return static_cast<int>(p.size() - 1);
  };

  std::vector<int> rho(n);
  double T = 1.0;
  for (unsigned i = 0; i + 1 < n; ++i) {
    rho[i] = draw(planch);
    T *= tilt[static_cast<std::size_t>(rho[i])];
  }
  if (control) {
    rho[n - 1] = draw(planch);
  } else {
    std::vector<double> last(r);
    for (std::size_t i = 0; i < r; ++i) last[i] = std::max(planch[i] * (1.0 + T * tilt[i]), 0.0);
    rho[n - 1] = draw(last);
  }
  return rho;
}

}  // namespace

std::string StrongTvResult::trials_csv() const {
  CsvWriter csv({"trial", "seed", "n", "dim", "rank", "l1"});
  for (std::size_t i = 0; i < trials.size(); ++i) {
    const StrongTvTrial& t = trials[i];
    csv.row({std::to_string(i), std::to_string(t.seed), std::to_string(options.n),
             std::to_string(t.dim), std::to_string(t.rank), format_real(t.l1)});
  }
  return csv.str();
}

StrongTvResult empirical_strong_tv(const CharacterTable& table,
                                   const std::vector<UnitaryIrrep>& irreps, ElemId mu,
                                   const StrongTvOptions& options) {
  const FiniteGroup& G = table.group();
  if (mu == G.identity() || G.mul(mu, mu) != G.identity())
    throw std::invalid_argument("empirical_strong_tv: mu is not an involution");
  if (options.n < 1) throw std::invalid_argument("empirical_strong_tv: n must be >= 1");
  const int mu_class = G.class_of(mu);
  const auto& class_members = G.classes()[static_cast<std::size_t>(mu_class)].member_ids;

  StrongTvResult result;
  result.options = options;

  for (int trial = 0; trial < options.trials; ++trial) {
    Rng rng(Rng::mix(options.seed, static_cast<std::uint64_t>(trial)));
    StrongTvTrial rec;
    rec.seed = Rng::mix(options.seed, static_cast<std::uint64_t>(trial));

    // m uniform over [mu]^n = [mu] x ... x [mu].
    std::vector<ElemId> m(options.n);
    for (unsigned i = 0; i < options.n; ++i)
      m[i] = class_members[rng.below(class_members.size())];

    rec.rho_indices = sample_weak_power(table, mu_class, options.n,
                                        options.control_trivial_subgroup, rng);

    long long dim = 1;
    double chi_product = 1.0;
    std::vector<const Eigen::MatrixXcd*> factors;
    for (unsigned i = 0; i < options.n; ++i) {
      const int r = rec.rho_indices[i];
      dim *= irreps[static_cast<std::size_t>(r)].dim;
      chi_product *= table.value(static_cast<std::size_t>(r), mu_class).real();
      factors.push_back(&irreps[static_cast<std::size_t>(r)].at(m[i]));
      if (dim > options.dim_cap)
        throw std::invalid_argument("empirical_strong_tv: sampled dimension exceeds cap");
    }
    rec.dim = dim;

    double l1 = 0.0;
    if (options.control_trivial_subgroup) {
      rec.rank = dim;  // Pi = identity, P(b) = a_b/d = N(b)
      l1 = 0.0;
    } else {
      const long long rank = (dim + std::llround(chi_product)) / 2;
      rec.rank = rank;
      if (rank == 0) {
        // Zero weak-sampling probability; kept only as a defensive branch.
        l1 = 2.0;
      } else if (options.policy == FramePolicy::StandardBasis) {
        // Diagonal fast path: ||Pi e_j||^2 = (1 + Re M_jj)/2 with
        // M = (x) rho_i(m_i); M_jj is the product of factor diagonals.
        for (long long j = 0; j < dim; ++j) {
          long long idx = j;
          std::vector<Eigen::Index> digits(options.n);
          for (unsigned i = options.n; i-- > 0;) {
            digits[i] = idx % irreps[static_cast<std::size_t>(rec.rho_indices[i])].dim;
            idx /= irreps[static_cast<std::size_t>(rec.rho_indices[i])].dim;
          }
          cplx mjj = 1.0;
          for (unsigned i = 0; i < options.n; ++i) mjj *= (*factors[i])(digits[i], digits[i]);
          const double quad = (1.0 + mjj.real()) / 2.0;
          l1 += std::abs(quad / static_cast<double>(rank) - 1.0 / static_cast<double>(dim));
        }
      } else {
        const Frame frame = make_frame(options.policy, dim, rng);
        for (Eigen::Index j = 0; j < frame.size(); ++j) {
          const Eigen::VectorXcd mb = tensor_apply(factors, frame.vectors.col(j));
          const double quad = (1.0 + frame.vectors.col(j).dot(mb).real()) / 2.0;
          l1 += frame.weights[static_cast<std::size_t>(j)] *
                std::abs(quad / static_cast<double>(rank) - 1.0 / static_cast<double>(dim));
        }
      }
    }
    rec.l1 = l1;
    result.trials.push_back(std::move(rec));
  }

  std::vector<double> l1s;
  for (const StrongTvTrial& t : result.trials) l1s.push_back(t.l1);
  std::sort(l1s.begin(), l1s.end());
  result.min = l1s.front();
  result.max = l1s.back();
  result.median = l1s.size() % 2 == 1
                      ? l1s[l1s.size() / 2]
                      : 0.5 * (l1s[l1s.size() / 2 - 1] + l1s[l1s.size() / 2]);
  result.mean = std::accumulate(l1s.begin(), l1s.end(), 0.0) / static_cast<double>(l1s.size());
  return result;
}

}  // namespace gfs
