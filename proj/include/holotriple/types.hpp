#pragma once

#include <complex>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace holo {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using Mat2 = Eigen::Matrix2cd;
using Vec3 = Eigen::Vector3d;
using SpMat = Eigen::SparseMatrix<cd>;

inline constexpr cd im{0.0, 1.0};

}  // namespace holo
