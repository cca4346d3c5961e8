#pragma once

#include <Eigen/Dense>

#include "mclink/common.hpp"

namespace mclink {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

/// Inverse of a Hermitian positive-definite matrix via Cholesky. Returns false
/// when the factorization fails (matrix not positive definite). `cond`, when
/// requested, receives the Frobenius condition estimate ||A||_F * ||A^-1||_F.
inline bool hermitian_inverse(const CMat& a, CMat& inv, double* cond = nullptr) {
    Eigen::LLT<CMat> llt(a);
    if (llt.info() != Eigen::Success) return false;
    inv = llt.solve(CMat::Identity(a.rows(), a.cols()));
    if (cond) *cond = a.norm() * inv.norm();
    return true;
}

} // namespace mclink
