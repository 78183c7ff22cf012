#pragma once

#include <random>

#include "weakhopf/exactla.hpp"

namespace testsupport {

using weakhopf::Mat;
using weakhopf::Scalar;

// Small random rational entries; roughly `zero_bias` of them are zero.
inline Mat random_mat(std::mt19937& rng, std::size_t rows, std::size_t cols, int range = 3, double zero_bias = 0.3) {
  std::uniform_int_distribution<int> num(-range, range), den(1, 3);
  std::bernoulli_distribution zero(zero_bias);
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (!zero(rng)) {
        m(i, j) = Scalar(num(rng), den(rng));
        m(i, j).canonicalize();
      }
  return m;
}

// Matrix product by the textbook triple loop, used as an oracle.
inline Mat naive_product(const Mat& a, const Mat& b) {
  Mat out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Scalar s = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      out(i, j) = s;
    }
  return out;
}

// Rank by counting nonzero rows after naive forward elimination; an oracle
// independent from the library's reduced row echelon routine.
inline std::size_t naive_rank(Mat m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      Scalar f = m(i, c) / m(r, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace testsupport
