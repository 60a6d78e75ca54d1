#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace latrat {

using Int = mpz_class;

enum class ErrorCode {
  DimensionMismatch,
  NotSquare,
  GroupMismatch,
  NotSaturated,
  NotStable,
  NotUnimodular,
  InvalidArgument,
  Unsupported,
  Precondition,
  NotExact,
  Parse,
};

class LatticeError : public std::runtime_error {
 public:
  LatticeError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> init);

  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t rows, std::size_t cols) {
    return IntMatrix(rows, cols);
  }
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows,
                             std::size_t cols_if_empty = 0);
  static IntMatrix diagonal(const std::vector<Int>& d);
  static IntMatrix permutation(const std::vector<std::size_t>& image);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  std::span<Int> row(std::size_t r) {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const Int> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::vector<Int> row_vector(std::size_t r) const;
  std::vector<Int> col_vector(std::size_t c) const;
  const std::vector<Int>& data() const noexcept { return data_; }

  IntMatrix transpose() const;
  IntMatrix select_rows(std::size_t begin, std::size_t end) const;
  IntMatrix select_cols(std::size_t begin, std::size_t end) const;
  IntMatrix submatrix(std::size_t r0, std::size_t r1, std::size_t c0,
                      std::size_t c1) const;
  void set_block(std::size_t r0, std::size_t c0, const IntMatrix& block);
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  bool is_zero() const;
  bool is_identity() const;
  bool is_permutation() const;

  IntMatrix operator*(const IntMatrix& other) const;
  IntMatrix operator+(const IntMatrix& other) const;
  IntMatrix operator-(const IntMatrix& other) const;
  IntMatrix operator-() const;
  IntMatrix scaled(const Int& s) const;
  std::vector<Int> apply(std::span<const Int> column) const;
  bool operator==(const IntMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom);
IntMatrix hstack(const IntMatrix& left, const IntMatrix& right);
IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);
IntMatrix power(const IntMatrix& m, unsigned long e);

/// Finite(ly generated) abelian group Z^free_rank ⊕ ⊕ Z/d_i with d_1 | d_2 | ...
struct AbelianInvariants {
  std::vector<Int> torsion;
  std::size_t free_rank = 0;

  bool is_trivial() const { return torsion.empty() && free_rank == 0; }
  Int order() const;  // 0 when infinite
  std::string to_string() const;
  bool operator==(const AbelianInvariants&) const = default;

  static AbelianInvariants cyclic(long d);
  static AbelianInvariants from_divisors(std::vector<Int> divisors,
                                         std::size_t free_rank = 0);
};

AbelianInvariants direct_sum(const AbelianInvariants& a,
                             const AbelianInvariants& b);

struct SNFResult {
  IntMatrix s;
  IntMatrix u;
  IntMatrix v;
  std::vector<Int> diagonal() const;
};

struct HNFResult {
  IntMatrix h;
  IntMatrix u;
  std::size_t rank = 0;
};

/// u * m * v = s with s diagonal, d_1 | d_2 | ..., non-negative, zeros last.
SNFResult snf(const IntMatrix& m);
/// Diagonal of the Smith form only (no transforms).
std::vector<Int> elementary_divisors(const IntMatrix& m);

/// Row-style Hermite normal form: u * m = h, u unimodular.
HNFResult hnf(const IntMatrix& m);
/// Nonzero rows of the HNF: canonical basis of the row lattice.
IntMatrix row_lattice_basis(const IntMatrix& m);

Int det(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);

/// Rows form a saturated Z-basis of {x : x * m = 0}.
IntMatrix kernel_basis(const IntMatrix& m);

/// Z^cols / rowspace(m).
AbelianInvariants cokernel_invariants(const IntMatrix& m);

/// Coordinates c with c * basis = y (row-wise), if they exist and are
/// integral. basis must have full row rank.
std::optional<IntMatrix> solve_left(const IntMatrix& basis, const IntMatrix& y);

/// True when the rows are independent and span a direct summand of Z^cols.
bool is_saturated(const IntMatrix& basis);

/// Basis of (Q-span of rows) ∩ Z^cols.
IntMatrix saturate(const IntMatrix& rows);

/// Rows to append to a saturated basis so the whole is unimodular. Unit
/// vectors on the non-pivot coordinates of the echelon form when possible.
IntMatrix complete_basis(const IntMatrix& saturated);

bool is_unimodular(const IntMatrix& m);
IntMatrix inverse_unimodular(const IntMatrix& m);

}  // namespace latrat
