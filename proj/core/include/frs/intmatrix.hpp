#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace frs {

using Int = std::int64_t;

// Overflow-checked helpers; throw ArithmeticOverflow.
Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);
Int mod(Int a, Int n);  // result in [0, n)
Int gcd(Int a, Int b);
Int lcm(Int a, Int b);

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, Int fill = 0);
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<Int>& data() const noexcept { return data_; }

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  // row_i += k * row_j
  void add_row_multiple(std::size_t i, std::size_t j, Int k);
  // col_i += k * col_j
  void add_col_multiple(std::size_t i, std::size_t j, Int k);

  std::string to_string() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// left * input * right = diagonal, with left and right unimodular and the
/// nonzero diagonal entries d_1 | d_2 | ... nonnegative.
struct SmithForm {
  IntMatrix left;
  IntMatrix left_inverse;
  IntMatrix diagonal;
  IntMatrix right;
};

SmithForm smith_normal_form(const IntMatrix& input);

}  // namespace frs
