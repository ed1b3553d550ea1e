#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "gfs/character_table.hpp"
#include "gfs/group.hpp"

namespace gfs {

struct IrrepOptions {
  std::size_t max_order = 256;   // guard for regular-representation extraction
  double unitary_tol = 1e-10;
  double trace_tol = 1e-8;
  int max_retries = 5;
  std::uint64_t seed = 0x1beefULL;
};

// Explicit unitary matrices for one irreducible representation, one matrix
// per element id of the group.
struct UnitaryIrrep {
  std::string label;
  int dim = 0;
  std::vector<Eigen::MatrixXcd> mats;

  const Eigen::MatrixXcd& at(ElemId g) const { return mats[g]; }
};

// One UnitaryIrrep per character-table row, labels matching the table.
//
// Generic route: decompose the left regular representation. The isotypic
// projector for tau is formed from the (already known) characters; the
// multiplicity space is split with a random Hermitian element of the
// commutant (a symmetric combination of right translations), whose
// eigenspaces are single irreducible copies. Dihedral and abelian groups use
// exact closed-form matrices instead.
std::vector<UnitaryIrrep> unitary_irreps(const CharacterTable& table,
                                         const IrrepOptions& opts = {});

// (d_tau/|G|) sum_g conj(chi_tau(g)) rep(g) for a unitary action given
// elementwise. Idempotent, Hermitian, commutes with the action; the
// projectors over all tau sum to the identity.
Eigen::MatrixXcd isotypic_projector(const CharacterTable& table, const std::string& tau,
                                    const std::function<Eigen::MatrixXcd(ElemId)>& rep,
                                    Eigen::Index rep_dim);
Eigen::MatrixXcd isotypic_projector(const CharacterTable& table, const std::string& tau,
                                    const std::vector<Eigen::MatrixXcd>& rep);

// Validation helpers (largest residuals over the indicated checks).
double unitarity_residual(const UnitaryIrrep& rho);
double homomorphism_residual(const FiniteGroup& G, const UnitaryIrrep& rho,
                             int random_pairs = 1000, std::uint64_t seed = 7);
double trace_residual(const CharacterTable& table, const UnitaryIrrep& rho);

}  // namespace gfs
