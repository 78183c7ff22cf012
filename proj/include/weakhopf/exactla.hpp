#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace weakhopf {

// Exact rational scalar. mpq_class keeps values canonical after every
// arithmetic operation; parse_scalar canonicalizes its input.
using Scalar = mpq_class;

Scalar parse_scalar(std::string_view text);
std::string format_scalar(const Scalar& s);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class NoExactFactorization : public Error {
 public:
  using Error::Error;
};

class NotIdempotent : public Error {
 public:
  using Error::Error;
};

// Dense matrix of a linear map cols-dim -> rows-dim, row-major.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols);
  Mat(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Mat identity(std::size_t n);
  static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
  static Mat from_ints(std::initializer_list<std::initializer_list<long>> rows);
  static Mat column(const std::vector<Scalar>& v);
  static Mat row(const std::vector<Scalar>& v);
  // Standard basis vector e_i of k^n as an n x 1 matrix.
  static Mat basis_vector(std::size_t n, std::size_t i);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<Scalar>& entries() const { return data_; }

  bool is_zero() const;
  bool is_identity() const;

  // Matrix product: (*this) after rhs.
  Mat operator*(const Mat& rhs) const;
  Mat operator+(const Mat& rhs) const;
  Mat operator-(const Mat& rhs) const;
  Mat scaled(const Scalar& s) const;
  Mat transpose() const;

  Mat col_block(std::size_t first, std::size_t count) const;
  Mat row_block(std::size_t first, std::size_t count) const;

  friend bool operator==(const Mat& a, const Mat& b);
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

std::ostream& operator<<(std::ostream& os, const Mat& m);

Mat hstack(const std::vector<Mat>& blocks);
Mat vstack(const std::vector<Mat>& blocks);

struct EntryDiff {
  std::size_t row;
  std::size_t col;
  Scalar lhs;
  Scalar rhs;
};

// First entry (row-major) where a and b differ. Throws ShapeError on shape mismatch.
std::optional<EntryDiff> first_difference(const Mat& a, const Mat& b);
std::string describe(const EntryDiff& d);

struct Rref {
  Mat reduced;
  std::vector<std::size_t> pivot_cols;
};

Rref rref(Mat m);
std::size_t rank(const Mat& m);

// Basis of the null space as columns, in reduced column echelon form.
Mat kernel(const Mat& m);

// Basis of the column space as columns, in reduced column echelon form.
Mat column_space(const Mat& m);

// The unique u with through * u = target. `through` must have full column rank.
Mat solve_factor(const Mat& through, const Mat& target);

Mat kron(const Mat& a, const Mat& b);
Mat kron_all(const std::vector<Mat>& factors);

struct Splitting {
  Mat retraction;  // rank x n
  Mat section;     // n x rank
};

Splitting split_idempotent(const Mat& e);

// The base braiding V(x)W -> W(x)V for dim V = dim_a, dim W = dim_b.
// Symmetric base: the swap permutation, its own inverse up to reordering of arguments.
Mat braid(std::size_t dim_a, std::size_t dim_b);
Mat braid_inverse(std::size_t dim_a, std::size_t dim_b);

// Computes (I_left (x) op (x) I_right) * m without forming the Kronecker product.
Mat apply_on_factor(const Mat& op, std::size_t left, std::size_t right, const Mat& m);

// Reorders the tensor factors indexing the rows of m. dims lists the factor
// dimensions in the current order; order[k] is the old position of the factor
// that ends up in position k.
Mat permute_row_factors(const Mat& m, const std::vector<std::size_t>& dims,
                        const std::vector<std::size_t>& order);

// Row-major flattening of a square or rectangular matrix to a column vector,
// matching the V (x) W* basis ordering (row index major).
Mat vec(const Mat& m);
Mat unvec(const Mat& v, std::size_t rows, std::size_t cols);

// An action H (x) A -> A stored as an a x (h*a) matrix splits into one a x a
// block per basis element of H.
Mat action_block(const Mat& action, std::size_t h_index, std::size_t carrier);
std::size_t product(const std::vector<std::size_t>& dims);

}  // namespace weakhopf
