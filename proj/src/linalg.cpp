#include "gfs/linalg.hpp"

#include <stdexcept>

namespace gfs {

Eigen::VectorXcd tensor_apply(const std::vector<const Eigen::MatrixXcd*>& factors,
                              Eigen::VectorXcd v) {
  Eigen::Index total = 1;
  for (const Eigen::MatrixXcd* f : factors) total *= f->rows();
  if (total != v.size()) throw std::invalid_argument("tensor_apply: dimension mismatch");

  // Mode-i product: reshape v as (left, d_i, right), contract d_i with F_i.
  Eigen::Index left = 1;
  for (const Eigen::MatrixXcd* f : factors) {
    const Eigen::Index d = f->rows();
    const Eigen::Index right = total / (left * d);
    Eigen::VectorXcd next(total);
    for (Eigen::Index l = 0; l < left; ++l)
      for (Eigen::Index r = 0; r < right; ++r) {
        for (Eigen::Index a = 0; a < d; ++a) {
          cplx acc = 0.0;
          for (Eigen::Index b = 0; b < d; ++b) acc += (*f)(a, b) * v((l * d + b) * right + r);
          next((l * d + a) * right + r) = acc;
        }
      }
    v.swap(next);
    left *= d;
  }
  return v;
}

Eigen::Index numeric_rank(const Eigen::MatrixXcd& M, double threshold) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > threshold) ++rank;
  return rank;
}

}  // namespace gfs
