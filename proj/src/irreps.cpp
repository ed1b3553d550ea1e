#include "gfs/irreps.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gfs/rng.hpp"

namespace gfs {

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::MatrixXcd regular_isotypic_projector(const CharacterTable& table, std::size_t row) {
  const FiniteGroup& G = table.group();
  const std::size_t n = G.order();
  const double d = table.row(row).dim;
  Eigen::MatrixXcd P(n, n);
  // P_{k,h} = (d/|G|) conj(chi(k h^-1)) for the left regular action.
  for (std::size_t h = 0; h < n; ++h) {
    const ElemId hinv = G.inv(static_cast<ElemId>(h));
    for (std::size_t k = 0; k < n; ++k) {
      const ElemId g = G.mul(static_cast<ElemId>(k), hinv);
      P(k, h) = d / static_cast<double>(n) * std::conj(table.value_at_element(row, g));
    }
  }
  return P;
}

// Random Hermitian element of the commutant of the left regular action:
// T = sum_g c_g R(g) with R(g) e_h = e_{hg} and c_g = c_{g^-1} real.
Eigen::MatrixXd commutant_element(const FiniteGroup& G, Rng& rng) {
  const std::size_t n = G.order();
  std::vector<double> c(n, 0.0);
  for (std::size_t g = 0; g < n; ++g) {
    const double u = rng.symmetric_unit();
    c[g] += u;
    c[G.inv(static_cast<ElemId>(g))] += u;
  }
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) T(G.mul(static_cast<ElemId>(h), static_cast<ElemId>(g)), h) += c[g];
  return T;
}

UnitaryIrrep extract_from_regular(const CharacterTable& table, std::size_t row,
                                  const IrrepOptions& opts, Rng& rng) {
  const FiniteGroup& G = table.group();
  const std::size_t n = G.order();
  const int d = table.row(row).dim;

  const Eigen::MatrixXcd P = regular_isotypic_projector(table, row);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> pe(P);
  if (pe.info() != Eigen::Success)
    throw std::runtime_error("unitary_irreps: isotypic eigendecomposition failed");
  std::vector<Eigen::Index> image_cols;
  for (Eigen::Index i = 0; i < pe.eigenvalues().size(); ++i)
    if (pe.eigenvalues()(i) > 0.5) image_cols.push_back(i);
  if (static_cast<int>(image_cols.size()) != d * d)
    throw std::runtime_error("unitary_irreps: isotypic rank != d^2");
  Eigen::MatrixXcd B(n, d * d);
  for (std::size_t i = 0; i < image_cols.size(); ++i) B.col(i) = pe.eigenvectors().col(image_cols[i]);

  // Split the d copies of tau with a commutant element; each eigenvalue
  // cluster of size d spans one irreducible copy.
  std::string failure;
  for (int attempt = 0; attempt < opts.max_retries; ++attempt) {
    const Eigen::MatrixXd T = commutant_element(G, rng);
    Eigen::MatrixXcd Tt = B.adjoint() * T.cast<cplx>() * B;
    Tt = 0.5 * (Tt + Tt.adjoint().eval());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> te(Tt);
    if (te.info() != Eigen::Success) {
      failure = "commutant eigendecomposition failed";
      continue;
    }
    const Eigen::VectorXd ev = te.eigenvalues();
    // Greedy clustering: split at the d-1 widest gaps of the sorted spectrum.
    std::vector<std::pair<double, int>> gaps;
    for (int i = 0; i + 1 < d * d; ++i) gaps.push_back({ev(i + 1) - ev(i), i});
    std::sort(gaps.begin(), gaps.end(), std::greater<>());
    std::vector<int> cuts;
    for (int i = 0; i + 1 < d; ++i) cuts.push_back(gaps[i].second);
    std::sort(cuts.begin(), cuts.end());
    bool sizes_ok = true;
    int prev = -1;
    for (int i = 0; i < d; ++i) {
      const int end = i + 1 < d ? cuts[i] : d * d - 1;
      if (end - prev != d) sizes_ok = false;
      prev = end;
    }
    if (!sizes_ok || (d > 1 && gaps[d - 2].first < 1e-7)) {
      failure = "commutant spectrum did not split into d clusters";
      continue;
    }

    Eigen::MatrixXcd W(n, d);
    for (int i = 0; i < d; ++i) W.col(i) = B * te.eigenvectors().col(i);

    UnitaryIrrep rho;
    rho.label = table.row(row).label;
    rho.dim = d;
    rho.mats.resize(n);
    Eigen::MatrixXcd LW(n, d);
    for (std::size_t g = 0; g < n; ++g) {
      for (std::size_t h = 0; h < n; ++h)
        LW.row(G.mul(static_cast<ElemId>(g), static_cast<ElemId>(h))) = W.row(h);
      rho.mats[g] = W.adjoint() * LW;
    }

    if (unitarity_residual(rho) > opts.unitary_tol) {
      failure = "extracted matrices not unitary";
      continue;
    }
    if (trace_residual(table, rho) > opts.trace_tol) {
      failure = "extracted traces do not match characters";
      continue;
    }
    return rho;
  }
  throw std::runtime_error("unitary_irreps(" + G.name() + ", " + table.row(row).label +
                           "): " + failure);
}

// chi values of a candidate, per class, for matching explicit constructions
// against table rows.
int match_row(const CharacterTable& table, const UnitaryIrrep& rho, double tol) {
  const FiniteGroup& G = table.group();
  for (std::size_t r = 0; r < table.size(); ++r) {
    if (table.row(r).dim != rho.dim) continue;
    bool ok = true;
    for (std::size_t c = 0; c < G.classes().size() && ok; ++c) {
      const ElemId rep = G.classes()[c].representative_id;
      if (std::abs(rho.at(rep).trace() - table.value(r, c)) > tol) ok = false;
    }
    if (ok) return static_cast<int>(r);
  }
  return -1;
}

std::vector<UnitaryIrrep> dihedral_irreps(const CharacterTable& table) {
  const FiniteGroup& G = table.group();
  const unsigned k = G.family_parameter();
  const std::size_t n = G.order();
  std::vector<UnitaryIrrep> out;

  auto add_one_dim = [&](const std::function<cplx(ElemId)>& chi) {
    UnitaryIrrep rho;
    rho.dim = 1;
    rho.mats.resize(n);
    for (std::size_t g = 0; g < n; ++g) {
      rho.mats[g].resize(1, 1);
      rho.mats[g](0, 0) = chi(static_cast<ElemId>(g));
    }
    out.push_back(std::move(rho));
  };

  add_one_dim([](ElemId) { return cplx(1.0); });
  add_one_dim([k](ElemId g) { return g < k ? cplx(1.0) : cplx(-1.0); });
  if (k % 2 == 0) {
    // k even: flip ids are k+i with k+i = i (mod 2), so parity of the id
    // gives the rotation exponent's parity in both halves.
    add_one_dim([](ElemId g) { return cplx(g % 2 == 0 ? 1.0 : -1.0); });
    add_one_dim([k](ElemId g) {
      const double sign = g % 2 == 0 ? 1.0 : -1.0;
      return cplx(g < k ? sign : -sign);
    });
  }

  const unsigned two_dim_count = k % 2 == 0 ? k / 2 - 1 : (k - 1) / 2;
  for (unsigned m = 1; m <= two_dim_count; ++m) {
    UnitaryIrrep rho;
    rho.dim = 2;
    rho.mats.resize(n);
    for (unsigned i = 0; i < k; ++i) {
      const cplx w = std::polar(1.0, 2.0 * kPi * m * i / k);
      Eigen::MatrixXcd rot(2, 2), flip(2, 2);
      rot << w, 0.0, 0.0, std::conj(w);
      flip << 0.0, w, std::conj(w), 0.0;
      rho.mats[i] = rot;       // r^i
      rho.mats[k + i] = flip;  // r^i F
    }
    out.push_back(std::move(rho));
  }
  return out;
}

std::vector<UnitaryIrrep> abelian_irreps(const CharacterTable& table) {
  const FiniteGroup& G = table.group();
  std::vector<UnitaryIrrep> out;
  for (std::size_t r = 0; r < table.size(); ++r) {
    UnitaryIrrep rho;
    rho.label = table.row(r).label;
    rho.dim = 1;
    rho.mats.resize(G.order());
    for (std::size_t g = 0; g < G.order(); ++g) {
      cplx z = table.value_at_element(r, static_cast<ElemId>(g));
      z /= std::abs(z);  // snap to the unit circle
      rho.mats[g].resize(1, 1);
      rho.mats[g](0, 0) = z;
    }
    out.push_back(std::move(rho));
  }
  return out;
}

}  // namespace

std::vector<UnitaryIrrep> unitary_irreps(const CharacterTable& table, const IrrepOptions& opts) {
  const FiniteGroup& G = table.group();
  if (G.order() > opts.max_order)
    throw std::invalid_argument("unitary_irreps: order " + std::to_string(G.order()) +
                                " exceeds matrix-extraction guard " +
                                std::to_string(opts.max_order));

  std::vector<UnitaryIrrep> out;
  if (G.is_abelian()) {
    out = abelian_irreps(table);
  } else if (G.family() == FiniteGroup::Family::Dihedral) {
    out = dihedral_irreps(table);
    for (UnitaryIrrep& rho : out) {
      const int r = match_row(table, rho, opts.trace_tol);
      if (r < 0) throw std::runtime_error("unitary_irreps: dihedral row match failed");
      rho.label = table.row(static_cast<std::size_t>(r)).label;
    }
    std::sort(out.begin(), out.end(),
              [&](const UnitaryIrrep& a, const UnitaryIrrep& b) {
                return table.index_of(a.label) < table.index_of(b.label);
              });
  } else {
    Rng rng(Rng::mix(opts.seed, G.order()));
    for (std::size_t r = 0; r < table.size(); ++r) {
      if (table.row(r).dim == 1) {
        UnitaryIrrep rho;
        rho.label = table.row(r).label;
        rho.dim = 1;
        rho.mats.resize(G.order());
        for (std::size_t g = 0; g < G.order(); ++g) {
          cplx z = table.value_at_element(r, static_cast<ElemId>(g));
          z /= std::abs(z);
          rho.mats[g].resize(1, 1);
          rho.mats[g](0, 0) = z;
        }
        out.push_back(std::move(rho));
      } else {
        out.push_back(extract_from_regular(table, r, opts, rng));
      }
    }
  }

  if (out.size() != table.size())
    throw std::runtime_error("unitary_irreps: produced " + std::to_string(out.size()) +
                             " irreps for " + std::to_string(table.size()) + " rows");
  return out;
}

Eigen::MatrixXcd isotypic_projector(const CharacterTable& table, const std::string& tau,
                                    const std::function<Eigen::MatrixXcd(ElemId)>& rep,
                                    Eigen::Index rep_dim) {
  const FiniteGroup& G = table.group();
  const std::size_t row = static_cast<std::size_t>(table.index_of(tau));
  const double d = table.row(row).dim;
  Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(rep_dim, rep_dim);
  for (std::size_t g = 0; g < G.order(); ++g)
    P += std::conj(table.value_at_element(row, static_cast<ElemId>(g))) *
         rep(static_cast<ElemId>(g));
  return P * (d / static_cast<double>(G.order()));
}

Eigen::MatrixXcd isotypic_projector(const CharacterTable& table, const std::string& tau,
                                    const std::vector<Eigen::MatrixXcd>& rep) {
  if (rep.size() != table.group().order())
    throw std::invalid_argument("isotypic_projector: need one matrix per element");
  return isotypic_projector(
      table, tau, [&rep](ElemId g) { return rep[g]; }, rep.front().rows());
}

double unitarity_residual(const UnitaryIrrep& rho) {
  double worst = 0.0;
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(rho.dim, rho.dim);
  for (const Eigen::MatrixXcd& m : rho.mats)
    worst = std::max(worst, (m * m.adjoint() - id).cwiseAbs().maxCoeff());
  return worst;
}

double homomorphism_residual(const FiniteGroup& G, const UnitaryIrrep& rho, int random_pairs,
                             std::uint64_t seed) {
  double worst = 0.0;
  auto check = [&](ElemId a, ElemId b) {
    const double r = (rho.at(G.mul(a, b)) - rho.at(a) * rho.at(b)).cwiseAbs().maxCoeff();
    worst = std::max(worst, r);
  };
  if (G.order() <= 64) {
    for (ElemId a = 0; a < G.order(); ++a)
      for (ElemId b = 0; b < G.order(); ++b) check(a, b);
  } else {
    Rng rng(seed);
    for (int i = 0; i < random_pairs; ++i)
      check(static_cast<ElemId>(rng.below(G.order())), static_cast<ElemId>(rng.below(G.order())));
  }
  return worst;
}

double trace_residual(const CharacterTable& table, const UnitaryIrrep& rho) {
  const FiniteGroup& G = table.group();
  const std::size_t row = static_cast<std::size_t>(table.index_of(rho.label));
  double worst = 0.0;
  for (std::size_t g = 0; g < G.order(); ++g)
    worst = std::max(worst, std::abs(rho.at(static_cast<ElemId>(g)).trace() -
                                     table.value_at_element(row, static_cast<ElemId>(g))));
  return worst;
}

}  // namespace gfs
