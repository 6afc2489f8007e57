#pragma once

#include <Eigen/Dense>

#include "jfrt/matrix.hpp"

namespace jfrt::detail {

using EigenComplex = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic>;
using EigenReal = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic>;

inline EigenComplex to_eigen(const ComplexMatrix& m) {
  EigenComplex out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c);
  return out;
}

inline EigenReal to_eigen_real(const ComplexMatrix& m) {
  EigenReal out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c).real();
  return out;
}

template <typename Derived>
ComplexMatrix from_eigen(const Eigen::MatrixBase<Derived>& m) {
  ComplexMatrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      out(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = cplx(m(r, c));
  return out;
}

}  // namespace jfrt::detail
