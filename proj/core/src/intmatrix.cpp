#include "frs/intmatrix.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

#include "frs/error.hpp"

namespace frs {

Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw ArithmeticOverflow("integer overflow in addition");
  }
  return out;
}

Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw ArithmeticOverflow("integer overflow in multiplication");
  }
  return out;
}

Int mod(Int a, Int n) {
  Int r = a % n;
  return r < 0 ? r + n : r;
}

Int gcd(Int a, Int b) { return std::gcd(a, b); }

Int lcm(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / std::gcd(a, b), b);
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, Int fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw std::invalid_argument("ragged initializer for IntMatrix");
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("IntMatrix shape mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      Int a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        out(i, j) = checked_add(out(i, j), checked_mul(a, rhs(k, j)));
      }
    }
  }
  return out;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t j, Int k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    (*this)(i, c) = checked_add((*this)(i, c), checked_mul(k, (*this)(j, c)));
  }
}

void IntMatrix::add_col_multiple(std::size_t i, std::size_t j, Int k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    (*this)(r, i) = checked_add((*this)(r, i), checked_mul(k, (*this)(r, j)));
  }
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ',';
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ',';
      os << (*this)(r, c);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace {

struct SmithState {
  IntMatrix a;
  IntMatrix left;
  IntMatrix left_inv;
  IntMatrix right;

  // Row operations are mirrored on left and, inversely, on left_inv.
  void swap_rows(std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    left.swap_rows(i, j);
    left_inv.swap_cols(i, j);
  }
  void add_row_multiple(std::size_t i, std::size_t j, Int k) {
    a.add_row_multiple(i, j, k);
    left.add_row_multiple(i, j, k);
    left_inv.add_col_multiple(j, i, -k);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
    for (std::size_t c = 0; c < left.cols(); ++c) left(i, c) = -left(i, c);
    for (std::size_t r = 0; r < left_inv.rows(); ++r) left_inv(r, i) = -left_inv(r, i);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    right.swap_cols(i, j);
  }
  void add_col_multiple(std::size_t i, std::size_t j, Int k) {
    a.add_col_multiple(i, j, k);
    right.add_col_multiple(i, j, k);
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
  const std::size_t rows = input.rows();
  const std::size_t cols = input.cols();
  SmithState s{input, IntMatrix::identity(rows), IntMatrix::identity(rows),
               IntMatrix::identity(cols)};

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // Pivot: smallest nonzero magnitude in the trailing block, first in
      // row-major order on ties.
      std::size_t pi = rows, pj = cols;
      Int best = 0;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          Int v = std::llabs(s.a(i, j));
          if (v != 0 && (best == 0 || v < best)) {
            best = v;
            pi = i;
            pj = j;
          }
        }
      }
      if (best == 0) {
        return SmithForm{std::move(s.left), std::move(s.left_inv), std::move(s.a),
                         std::move(s.right)};
      }
      s.swap_rows(t, pi);
      s.swap_cols(t, pj);

      bool clean = true;
      const Int p = s.a(t, t);
      for (std::size_t i = t + 1; i < rows; ++i) {
        Int q = s.a(i, t) / p;
        s.add_row_multiple(i, t, -q);
        if (s.a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        Int q = s.a(t, j) / p;
        s.add_col_multiple(j, t, -q);
        if (s.a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divides_all = true;
      for (std::size_t i = t + 1; i < rows && divides_all; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (s.a(i, j) % p != 0) {
            s.add_row_multiple(t, i, 1);
            divides_all = false;
            break;
          }
        }
      }
      if (divides_all) break;
    }
    if (s.a(t, t) < 0) s.negate_row(t);
  }
  return SmithForm{std::move(s.left), std::move(s.left_inv), std::move(s.a),
                   std::move(s.right)};
}

}  // namespace frs
