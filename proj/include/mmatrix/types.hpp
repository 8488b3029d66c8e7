#pragma once

#include <Eigen/Core>

namespace mmatrix {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<int>;
using IntVector = Vector<int>;

}  // namespace mmatrix
