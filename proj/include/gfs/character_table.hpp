#pragma once

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gfs/group.hpp"

namespace gfs {

using cplx = std::complex<double>;

struct CharTableOptions {
  // Membership-style comparisons (|x| = 1, orthogonality residuals).
  double tol = 1e-8;
  int max_retries = 5;
  std::uint64_t seed = 0x5eed5eed5eedULL;
};

struct IrrepRow {
  std::string label;          // "<dim><letter>", e.g. "1a", "2a", "3b"
  int dim = 0;
  Eigen::VectorXcd values;    // one entry per conjugacy class
};

// Complete complex character table of a finite group. Rows are sorted by
// (dimension, rounded character vector) so labels are stable across runs.
// The table keeps its own copy of the group, so it stays valid after the
// group object passed in goes away.
class CharacterTable {
 public:
  CharacterTable(const FiniteGroup& G, std::vector<IrrepRow> rows);

  const FiniteGroup& group() const { return *group_; }
  const std::vector<IrrepRow>& irreps() const { return rows_; }
  std::size_t size() const { return rows_.size(); }
  const IrrepRow& row(std::size_t i) const { return rows_[i]; }
  int index_of(const std::string& label) const;

  cplx value(std::size_t irrep, std::size_t cls) const { return rows_[irrep].values(cls); }
  cplx value_at_element(std::size_t irrep, ElemId g) const {
    return rows_[irrep].values(group_->class_of(g));
  }

  // chi(g)/d; modulus <= 1 for genuine characters.
  cplx normalized(std::size_t irrep, std::size_t cls) const;
  cplx normalized_at_element(std::size_t irrep, ElemId g) const;

  std::string trivial_label() const;

  // <chi_a, chi_b> = (1/|G|) sum_g chi_a(g) conj(chi_b(g)).
  cplx inner_product(std::size_t a, std::size_t b) const;

  // Largest residuals of the two orthogonality relations; used by tests.
  double row_orthogonality_residual() const;
  double column_orthogonality_residual() const;

  std::string to_json() const;

 private:
  std::shared_ptr<const FiniteGroup> group_;
  std::vector<IrrepRow> rows_;
};

// Burnside/Dixon-style computation: simultaneous eigenvectors of the class-sum
// matrices, obtained from a random real combination; retried with fresh
// randomness on degeneracy. Exact for the purposes of this library up to
// double precision; every invariant is re-verified before returning.
CharacterTable character_table(const FiniteGroup& G, const CharTableOptions& opts = {});

cplx normalized_character(const CharacterTable& table, std::size_t irrep, std::size_t cls);

}  // namespace gfs
