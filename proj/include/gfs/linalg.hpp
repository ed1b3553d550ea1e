#pragma once

#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "gfs/character_table.hpp"

namespace gfs {

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B) {
  Eigen::MatrixXcd out(A.rows() * B.rows(), A.cols() * B.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      out.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
  return out;
}

// Swap operator on C^d (x) C^d: e_i (x) e_j -> e_j (x) e_i.
inline Eigen::MatrixXcd swap_operator(Eigen::Index d) {
  Eigen::MatrixXcd S = Eigen::MatrixXcd::Zero(d * d, d * d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) S(i * d + j, j * d + i) = 1.0;
  return S;
}

// Applies (F_1 (x) F_2 (x) ... (x) F_n) to v without forming the product,
// one mode at a time. v has length prod(dim F_i).
Eigen::VectorXcd tensor_apply(const std::vector<const Eigen::MatrixXcd*>& factors,
                              Eigen::VectorXcd v);

// Rank by singular-value count above threshold (0.5 suits projectors, whose
// spectra sit at 0 and 1).
Eigen::Index numeric_rank(const Eigen::MatrixXcd& M, double threshold = 0.5);

}  // namespace gfs
