#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace eqk {

using Int = mpz_class;
using Vec = std::vector<Int>;

// Small helpers over GMP integers.
Int ipow(const Int& base, unsigned long exponent);
Int floor_mod(const Int& a, const Int& m);  // m > 0, result in [0, m)
Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);
bool is_prime(const Int& p);
// Returns the prime p when n = p^k for some k >= 1, otherwise 0.
Int prime_of_prime_power(const Int& n);
std::string to_string(const Int& v);

/// Dense row-major integer matrix with arbitrary precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const Vec& entries);
  static IntMatrix column_vector(const Vec& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec column(std::size_t c) const;
  Vec row(std::size_t r) const;
  void set_column(std::size_t c, const Vec& v);

  IntMatrix operator*(const IntMatrix& rhs) const;
  Vec operator*(const Vec& v) const;
  IntMatrix operator+(const IntMatrix& rhs) const;
  IntMatrix operator-(const IntMatrix& rhs) const;
  IntMatrix operator-() const;
  IntMatrix scaled(const Int& c) const;
  bool operator==(const IntMatrix& rhs) const = default;

  IntMatrix transpose() const;
  IntMatrix select_rows(const std::vector<std::size_t>& idx) const;
  IntMatrix select_cols(const std::vector<std::size_t>& idx) const;
  IntMatrix row_range(std::size_t first, std::size_t count) const;
  IntMatrix col_range(std::size_t first, std::size_t count) const;

  static IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b);
  static IntMatrix vconcat(const IntMatrix& a, const IntMatrix& b);
  static IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);

  bool is_zero() const;
  // Exact determinant (fraction-free Bareiss elimination); square only.
  Int determinant() const;

  // Elementary operations used by the normal form routines.
  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void add_row_multiple(std::size_t target, std::size_t source, const Int& c);  // row_t += c*row_s
  void add_col_multiple(std::size_t target, std::size_t source, const Int& c);  // col_t += c*col_s
  void negate_row(std::size_t i);
  void negate_col(std::size_t i);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// D = U * A * V with U, V unimodular and D diagonal in a divisibility chain.
struct SmithForm {
  IntMatrix U, U_inverse;
  IntMatrix D;
  IntMatrix V, V_inverse;
  std::size_t rank = 0;

  Vec invariant_factors() const;  // the nonzero diagonal entries
};

SmithForm smith_normal_form(const IntMatrix& a);

// Columns form a Z-basis of {x : A x = 0}.
IntMatrix integer_kernel(const IntMatrix& a);

// Some integer solution of A x = b, if one exists.
std::optional<Vec> solve_integer(const IntMatrix& a, const Vec& b);

}  // namespace eqk
