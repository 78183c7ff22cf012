#include "weakhopf/exactla.hpp"

#include <sstream>
#include <utility>

namespace weakhopf {

Scalar parse_scalar(std::string_view text) {
  std::string s(text);
  auto first = s.find_first_not_of(" \t");
  auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos) throw Error("empty scalar literal");
  s = s.substr(first, last - first + 1);
  if (s.front() == '+') s.erase(0, 1);
  auto slash = s.find('/');
  auto valid_int = [](const std::string& part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && part[0] == '-') i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw Error("malformed scalar literal '" + std::string(text) + "'");
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw Error("zero denominator in scalar literal '" + std::string(text) + "'");
  Scalar q(n, d);
  q.canonicalize();
  return q;
}

std::string format_scalar(const Scalar& s) {
  if (s.get_den() == 1) return s.get_num().get_str();
  return s.get_num().get_str() + "/" + s.get_den().get_str();
}

Mat::Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Mat::Mat(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  for (auto& x : data_) x.canonicalize();
  if (data_.size() != rows * cols)
    throw ShapeError("entry count " + std::to_string(data_.size()) + " does not match shape " +
                     std::to_string(rows) + "x" + std::to_string(cols));
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_ints(std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Mat m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw ShapeError("ragged matrix literal");
    std::size_t j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

Mat Mat::column(const std::vector<Scalar>& v) { return Mat(v.size(), 1, v); }
Mat Mat::row(const std::vector<Scalar>& v) { return Mat(1, v.size(), v); }

Mat Mat::basis_vector(std::size_t n, std::size_t i) {
  Mat m(n, 1);
  m(i, 0) = 1;
  return m;
}

bool Mat::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

bool Mat::is_identity() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

Mat Mat::operator*(const Mat& rhs) const {
  if (cols_ != rhs.rows_)
    throw ShapeError("cannot compose " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                     " after " + std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
  Mat out(rows_, rhs.cols_);
  Scalar tmp;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Scalar& b = rhs(k, j);
        if (sgn(b) == 0) continue;
        tmp = a * b;
        out(i, j) += tmp;
      }
    }
  }
  return out;
}

Mat Mat::operator+(const Mat& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeError("sum of differently shaped matrices");
  Mat out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

Mat Mat::operator-(const Mat& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw ShapeError("difference of differently shaped matrices");
  Mat out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

Mat Mat::scaled(const Scalar& s) const {
  Mat out = *this;
  for (auto& x : out.data_) x *= s;
  return out;
}

Mat Mat::transpose() const {
  Mat out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Mat Mat::col_block(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw ShapeError("column block out of range");
  Mat out(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) out(i, j) = (*this)(i, first + j);
  return out;
}

Mat Mat::row_block(std::size_t first, std::size_t count) const {
  if (first + count > rows_) throw ShapeError("row block out of range");
  Mat out(count, cols_);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(first + i, j);
  return out;
}

bool operator==(const Mat& a, const Mat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::ostream& operator<<(std::ostream& os, const Mat& m) {
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << " ";
      os << format_scalar(m(i, j));
    }
  }
  return os << "] (" << m.rows() << "x" << m.cols() << ")";
}

Mat hstack(const std::vector<Mat>& blocks) {
  if (blocks.empty()) return Mat();
  std::size_t r = blocks.front().rows(), c = 0;
  for (const auto& b : blocks) {
    if (b.rows() != r) throw ShapeError("hstack of blocks with different row counts");
    c += b.cols();
  }
  Mat out(r, c);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, off + j) = b(i, j);
    off += b.cols();
  }
  return out;
}

Mat vstack(const std::vector<Mat>& blocks) {
  if (blocks.empty()) return Mat();
  std::size_t c = blocks.front().cols(), r = 0;
  for (const auto& b : blocks) {
    if (b.cols() != c) throw ShapeError("vstack of blocks with different column counts");
    r += b.rows();
  }
  Mat out(r, c);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < c; ++j) out(off + i, j) = b(i, j);
    off += b.rows();
  }
  return out;
}

std::optional<EntryDiff> first_difference(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("comparing " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " with " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return EntryDiff{i, j, a(i, j), b(i, j)};
  return std::nullopt;
}

std::string describe(const EntryDiff& d) {
  std::ostringstream os;
  os << "entry (" << d.row << ", " << d.col << "): " << format_scalar(d.lhs) << " vs "
     << format_scalar(d.rhs);
  return os.str();
}

Rref rref(Mat m) {
  Rref out;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  std::vector<std::size_t> support;
  Scalar factor, tmp;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
    support.clear();
    Scalar inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols; ++j) {
      if (sgn(m(r, j)) == 0) continue;
      m(r, j) *= inv;
      support.push_back(j);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      factor = m(i, c);
      for (std::size_t j : support) {
        tmp = factor * m(r, j);
        m(i, j) -= tmp;
      }
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Mat& m) { return rref(m).pivot_cols.size(); }

namespace {

// Rows 0..k-1 of the reduced form, i.e. the nonzero rows.
Mat leading_rows(const Rref& r) { return r.reduced.row_block(0, r.pivot_cols.size()); }

}  // namespace

Mat column_space(const Mat& m) {
  if (m.cols() == 0) return Mat(m.rows(), 0);
  return leading_rows(rref(m.transpose())).transpose();
}

Mat kernel(const Mat& m) {
  const std::size_t n = m.cols();
  Rref r = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto c : r.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat basis(n, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t f = free_cols[k];
    basis(f, k) = 1;
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) basis(r.pivot_cols[i], k) = -r.reduced(i, f);
  }
  if (free_cols.empty()) return basis;
  return leading_rows(rref(basis.transpose())).transpose();
}

Mat solve_factor(const Mat& through, const Mat& target) {
  if (through.rows() != target.rows())
    throw ShapeError("solve_factor: row counts differ (" + std::to_string(through.rows()) + " vs " +
                     std::to_string(target.rows()) + ")");
  const std::size_t k = through.cols();
  Rref r = rref(hstack({through, target}));
  std::size_t lead = 0;
  for (auto c : r.pivot_cols) {
    if (c >= k) throw NoExactFactorization("target is not in the image of the factoring map");
    ++lead;
  }
  if (lead != k) throw ShapeError("solve_factor: factoring map lacks full column rank");
  Mat u(k, target.cols());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < target.cols(); ++j) u(i, j) = r.reduced(i, k + j);
  return u;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& x = a(i, j);
      if (sgn(x) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const Scalar& y = b(k, l);
          if (sgn(y) == 0) continue;
          out(i * b.rows() + k, j * b.cols() + l) = x * y;
        }
    }
  return out;
}

Mat kron_all(const std::vector<Mat>& factors) {
  Mat out = Mat::identity(1);
  for (const auto& f : factors) out = kron(out, f);
  return out;
}

Splitting split_idempotent(const Mat& e) {
  if (!e.square()) throw NotIdempotent("idempotent must be square");
  if (e * e != e) throw NotIdempotent("matrix is not idempotent");
  Mat section = column_space(e);
  Mat retraction = solve_factor(section, e);
  return {retraction, section};
}

Mat braid(std::size_t dim_a, std::size_t dim_b) {
  const std::size_t n = dim_a * dim_b;
  Mat p(n, n);
  for (std::size_t i = 0; i < dim_a; ++i)
    for (std::size_t j = 0; j < dim_b; ++j) p(j * dim_a + i, i * dim_b + j) = 1;
  return p;
}

Mat braid_inverse(std::size_t dim_a, std::size_t dim_b) { return braid(dim_b, dim_a); }

Mat apply_on_factor(const Mat& op, std::size_t left, std::size_t right, const Mat& m) {
  const std::size_t in = op.cols(), out_dim = op.rows();
  if (m.rows() != left * in * right)
    throw ShapeError("apply_on_factor: operand has " + std::to_string(m.rows()) + " rows, expected " +
                     std::to_string(left * in * right));
  Mat out(left * out_dim * right, m.cols());
  const std::size_t cols = m.cols();
  Scalar tmp;
  for (std::size_t l = 0; l < left; ++l)
    for (std::size_t j = 0; j < in; ++j)
      for (std::size_t r = 0; r < right; ++r) {
        const std::size_t src = (l * in + j) * right + r;
        bool any = false;
        for (std::size_t c = 0; c < cols; ++c)
          if (sgn(m(src, c)) != 0) {
            any = true;
            break;
          }
        if (!any) continue;
        for (std::size_t i = 0; i < out_dim; ++i) {
          const Scalar& a = op(i, j);
          if (sgn(a) == 0) continue;
          const std::size_t dst = (l * out_dim + i) * right + r;
          for (std::size_t c = 0; c < cols; ++c) {
            const Scalar& b = m(src, c);
            if (sgn(b) == 0) continue;
            tmp = a * b;
            out(dst, c) += tmp;
          }
        }
      }
  return out;
}

std::size_t product(const std::vector<std::size_t>& dims) {
  std::size_t p = 1;
  for (auto d : dims) p *= d;
  return p;
}

Mat permute_row_factors(const Mat& m, const std::vector<std::size_t>& dims,
                        const std::vector<std::size_t>& order) {
  const std::size_t n = dims.size();
  if (order.size() != n) throw ShapeError("permutation length mismatch");
  if (m.rows() != product(dims)) throw ShapeError("permute_row_factors: row count mismatch");
  std::vector<std::size_t> new_dims(n);
  for (std::size_t k = 0; k < n; ++k) new_dims[k] = dims[order[k]];
  // stride of each old factor within the new ordering
  std::vector<std::size_t> new_stride(n);
  std::size_t s = 1;
  for (std::size_t k = n; k-- > 0;) {
    new_stride[order[k]] = s;
    s *= new_dims[k];
  }
  Mat out(m.rows(), m.cols());
  std::vector<std::size_t> idx(n, 0);
  for (std::size_t row = 0; row < m.rows(); ++row) {
    std::size_t dst = 0;
    for (std::size_t f = 0; f < n; ++f) dst += idx[f] * new_stride[f];
    for (std::size_t c = 0; c < m.cols(); ++c) out(dst, c) = m(row, c);
    for (std::size_t f = n; f-- > 0;) {
      if (++idx[f] < dims[f]) break;
      idx[f] = 0;
    }
  }
  return out;
}

Mat vec(const Mat& m) { return Mat(m.rows() * m.cols(), 1, m.entries()); }

Mat unvec(const Mat& v, std::size_t rows, std::size_t cols) {
  if (v.cols() != 1 || v.rows() != rows * cols) throw ShapeError("unvec: wrong length");
  return Mat(rows, cols, v.entries());
}

Mat action_block(const Mat& action, std::size_t h_index, std::size_t carrier) {
  return action.col_block(h_index * carrier, carrier);
}

}  // namespace weakhopf
