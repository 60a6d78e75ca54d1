#include "latrat/exactla.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace latrat {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
  rows_ = init.size();
  cols_ = rows_ ? init.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : init) {
    if (r.size() != cols_)
      throw LatticeError(ErrorCode::DimensionMismatch, "ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows,
                               std::size_t cols_if_empty) {
  std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw LatticeError(ErrorCode::DimensionMismatch, "ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Int>& d) {
  IntMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

IntMatrix IntMatrix::permutation(const std::vector<std::size_t>& image) {
  IntMatrix m(image.size(), image.size());
  for (std::size_t j = 0; j < image.size(); ++j) m(image[j], j) = 1;
  return m;
}

std::vector<Int> IntMatrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return {s.begin(), s.end()};
}

std::vector<Int> IntMatrix::col_vector(std::size_t c) const {
  std::vector<Int> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, c);
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::select_rows(std::size_t begin, std::size_t end) const {
  return submatrix(begin, end, 0, cols_);
}

IntMatrix IntMatrix::select_cols(std::size_t begin, std::size_t end) const {
  return submatrix(0, rows_, begin, end);
}

IntMatrix IntMatrix::submatrix(std::size_t r0, std::size_t r1, std::size_t c0,
                               std::size_t c1) const {
  if (r1 < r0 || c1 < c0 || r1 > rows_ || c1 > cols_)
    throw LatticeError(ErrorCode::DimensionMismatch, "submatrix out of range");
  IntMatrix s(r1 - r0, c1 - c0);
  for (std::size_t i = r0; i < r1; ++i)
    for (std::size_t j = c0; j < c1; ++j) s(i - r0, j - c0) = (*this)(i, j);
  return s;
}

void IntMatrix::set_block(std::size_t r0, std::size_t c0,
                          const IntMatrix& block) {
  if (r0 + block.rows() > rows_ || c0 + block.cols() > cols_)
    throw LatticeError(ErrorCode::DimensionMismatch, "block out of range");
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j)
      (*this)(r0 + i, c0 + j) = block(i, j);
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j)
    mpz_swap((*this)(a, j).get_mpz_t(), (*this)(b, j).get_mpz_t());
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i)
    mpz_swap((*this)(i, a).get_mpz_t(), (*this)(i, b).get_mpz_t());
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Int& v) { return sgn(v) == 0; });
}

bool IntMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool IntMatrix::is_permutation() const {
  if (!is_square()) return false;
  std::vector<int> seen(rows_, 0);
  for (std::size_t j = 0; j < cols_; ++j) {
    int ones = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Int& v = (*this)(i, j);
      if (v == 1) {
        ++ones;
        ++seen[i];
      } else if (sgn(v) != 0) {
        return false;
      }
    }
    if (ones != 1) return false;
  }
  return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_)
    throw LatticeError(ErrorCode::DimensionMismatch, "matrix product shape");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const Int& b = other(k, j);
        if (sgn(b) == 0) continue;
        mpz_addmul(out(i, j).get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      }
    }
  }
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw LatticeError(ErrorCode::DimensionMismatch, "matrix sum shape");
  IntMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw LatticeError(ErrorCode::DimensionMismatch, "matrix difference shape");
  IntMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= other.data_[i];
  return out;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix out = *this;
  for (auto& v : out.data_) v = -v;
  return out;
}

IntMatrix IntMatrix::scaled(const Int& s) const {
  IntMatrix out = *this;
  for (auto& v : out.data_) v *= s;
  return out;
}

std::vector<Int> IntMatrix::apply(std::span<const Int> column) const {
  if (column.size() != cols_)
    throw LatticeError(ErrorCode::DimensionMismatch, "apply shape");
  std::vector<Int> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      mpz_addmul(out[i].get_mpz_t(), (*this)(i, j).get_mpz_t(),
                 column[j].get_mpz_t());
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom) {
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  if (top.cols() != bottom.cols())
    throw LatticeError(ErrorCode::DimensionMismatch, "vstack width");
  IntMatrix out(top.rows() + bottom.rows(), top.cols());
  out.set_block(0, 0, top);
  out.set_block(top.rows(), 0, bottom);
  return out;
}

IntMatrix hstack(const IntMatrix& left, const IntMatrix& right) {
  if (left.rows() != right.rows())
    throw LatticeError(ErrorCode::DimensionMismatch, "hstack height");
  IntMatrix out(left.rows(), left.cols() + right.cols());
  out.set_block(0, 0, left);
  out.set_block(0, left.cols(), right);
  return out;
}

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

IntMatrix power(const IntMatrix& m, unsigned long e) {
  if (!m.is_square()) throw LatticeError(ErrorCode::NotSquare, "power");
  IntMatrix result = IntMatrix::identity(m.rows());
  IntMatrix base = m;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

// ---------------------------------------------------------------------------
// AbelianInvariants

Int AbelianInvariants::order() const {
  if (free_rank) return 0;
  Int o = 1;
  for (const auto& d : torsion) o *= d;
  return o;
}

std::string AbelianInvariants::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& d : torsion) {
    os << (first ? "" : " + ") << "Z/" << d;
    first = false;
  }
  if (free_rank) os << (first ? "" : " + ") << "Z^" << free_rank;
  return os.str();
}

AbelianInvariants AbelianInvariants::cyclic(long d) {
  return from_divisors({Int(d)});
}

AbelianInvariants AbelianInvariants::from_divisors(std::vector<Int> divisors,
                                                   std::size_t free_rank) {
  // Normalize an arbitrary list of cyclic orders into the divisibility chain.
  IntMatrix d = IntMatrix::diagonal(divisors);
  AbelianInvariants out;
  out.free_rank = free_rank;
  for (auto& e : elementary_divisors(d)) {
    if (sgn(e) == 0)
      ++out.free_rank;
    else if (e != 1)
      out.torsion.push_back(e);
  }
  return out;
}

AbelianInvariants direct_sum(const AbelianInvariants& a,
                             const AbelianInvariants& b) {
  std::vector<Int> all = a.torsion;
  all.insert(all.end(), b.torsion.begin(), b.torsion.end());
  return AbelianInvariants::from_divisors(std::move(all),
                                          a.free_rank + b.free_rank);
}

// ---------------------------------------------------------------------------
// Row operations

namespace {

// row_dst -= q * row_src over columns [from, cols)
void row_submul(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q,
                std::size_t from = 0) {
  for (std::size_t j = from; j < m.cols(); ++j) {
    const Int& s = m(src, j);
    if (sgn(s) == 0) continue;
    mpz_submul(m(dst, j).get_mpz_t(), q.get_mpz_t(), s.get_mpz_t());
  }
}

void col_submul(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q,
                std::size_t from = 0) {
  for (std::size_t i = from; i < m.rows(); ++i) {
    const Int& s = m(i, src);
    if (sgn(s) == 0) continue;
    mpz_submul(m(i, dst).get_mpz_t(), q.get_mpz_t(), s.get_mpz_t());
  }
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) mpz_neg(m(r, j).get_mpz_t(), m(r, j).get_mpz_t());
}

// Row echelon form by gcd elimination with minimal-|pivot| selection. Pivots
// are made positive; with reduce_above, entries above a pivot land in
// [0, pivot). Returns rank; transform accumulates the same row operations.
std::size_t echelon(IntMatrix& h, IntMatrix* transform, bool reduce_above,
                    std::vector<std::size_t>* pivot_cols = nullptr) {
  const std::size_t rows = h.rows();
  const std::size_t cols = h.cols();
  std::size_t r = 0;
  Int q;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (sgn(h(i, c)) == 0) continue;
        if (best == rows ||
            mpz_cmpabs(h(i, c).get_mpz_t(), h(best, c).get_mpz_t()) < 0)
          best = i;
      }
      if (best == rows) break;
      h.swap_rows(r, best);
      if (transform) transform->swap_rows(r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (sgn(h(i, c)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
        row_submul(h, i, r, q, c);
        if (transform) row_submul(*transform, i, r, q);
        if (sgn(h(i, c)) != 0) clean = false;
      }
      if (clean) break;
    }
    if (sgn(h(r, c)) == 0) continue;
    if (sgn(h(r, c)) < 0) {
      negate_row(h, r);
      if (transform) negate_row(*transform, r);
    }
    if (reduce_above) {
      for (std::size_t i = 0; i < r; ++i) {
        if (sgn(h(i, c)) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
        if (sgn(q) == 0) continue;
        row_submul(h, i, r, q, c);
        if (transform) row_submul(*transform, i, r, q);
      }
    }
    if (pivot_cols) pivot_cols->push_back(c);
    ++r;
  }
  return r;
}

SNFResult smith(const IntMatrix& m, bool transforms) {
  SNFResult out;
  out.s = m;
  IntMatrix& s = out.s;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (transforms) {
    out.u = IntMatrix::identity(rows);
    out.v = IntMatrix::identity(cols);
  }
  Int q, rem;
  const std::size_t diag = std::min(rows, cols);
  for (std::size_t t = 0; t < diag; ++t) {
    while (true) {
      // Pivot: entry of minimal absolute value in the trailing block.
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (sgn(s(i, j)) == 0) continue;
          if (bi == rows || mpz_cmpabs(s(i, j).get_mpz_t(),
                                       s(bi, bj).get_mpz_t()) < 0) {
            bi = i;
            bj = j;
          }
        }
      if (bi == rows) {
        // trailing block is zero
        goto finish;
      }
      s.swap_rows(t, bi);
      s.swap_cols(t, bj);
      if (transforms) {
        out.u.swap_rows(t, bi);
        out.v.swap_cols(t, bj);
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(s(i, t)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), s(i, t).get_mpz_t(), s(t, t).get_mpz_t());
        row_submul(s, i, t, q, t);
        if (transforms) row_submul(out.u, i, t, q);
        if (sgn(s(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(s(t, j)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), s(t, j).get_mpz_t(), s(t, t).get_mpz_t());
        col_submul(s, j, t, q, t);
        if (transforms) col_submul(out.v, j, t, q);
        if (sgn(s(t, j)) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility of the trailing block by the pivot.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (sgn(s(i, j)) == 0) continue;
          if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
        }
      if (bad == rows) break;
      // row_t += row_bad, then re-reduce
      Int minus_one = -1;
      row_submul(s, t, bad, minus_one, t);
      if (transforms) row_submul(out.u, t, bad, minus_one);
    }
    if (sgn(s(t, t)) < 0) {
      negate_row(s, t);
      if (transforms) negate_row(out.u, t);
    }
  }
finish:
  return out;
}

}  // namespace

std::vector<Int> SNFResult::diagonal() const {
  std::vector<Int> d;
  for (std::size_t i = 0; i < std::min(s.rows(), s.cols()); ++i)
    d.push_back(s(i, i));
  return d;
}

SNFResult snf(const IntMatrix& m) { return smith(m, true); }

std::vector<Int> elementary_divisors(const IntMatrix& m) {
  // Compress tall inputs through their HNF first; the Smith form only needs a
  // basis of the row lattice.
  if (m.rows() > m.cols()) {
    IntMatrix b = row_lattice_basis(m);
    auto d = smith(b, false).diagonal();
    d.resize(std::min(m.rows(), m.cols()), Int(0));
    return d;
  }
  return smith(m, false).diagonal();
}

HNFResult hnf(const IntMatrix& m) {
  HNFResult out;
  out.h = m;
  out.u = IntMatrix::identity(m.rows());
  out.rank = echelon(out.h, &out.u, true);
  return out;
}

IntMatrix row_lattice_basis(const IntMatrix& m) {
  IntMatrix h = m;
  std::size_t r = echelon(h, nullptr, true);
  return h.select_rows(0, r);
}

Int det(const IntMatrix& m) {
  if (!m.is_square())
    throw LatticeError(ErrorCode::NotSquare, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && sgn(a(piv, k)) == 0) ++piv;
      if (piv == n) return 0;
      a.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Bareiss: a_ij = (a_kk a_ij - a_ik a_kj) / prev
        mpz_mul(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), a(k, k).get_mpz_t());
        mpz_submul(a(i, j).get_mpz_t(), a(i, k).get_mpz_t(),
                   a(k, j).get_mpz_t());
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(),
                     prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  Int d = a(n - 1, n - 1);
  return sign > 0 ? d : Int(-d);
}

std::size_t rank(const IntMatrix& m) {
  IntMatrix h = m;
  return echelon(h, nullptr, false);
}

IntMatrix kernel_basis(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return IntMatrix(0, 0);
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(n);
  std::size_t r = echelon(h, &u, false);
  IntMatrix k = u.select_rows(r, n);
  if (k.rows() == 0) return IntMatrix(0, n);
  return row_lattice_basis(k);
}

AbelianInvariants cokernel_invariants(const IntMatrix& m) {
  AbelianInvariants out;
  if (m.rows() == 0) {
    out.free_rank = m.cols();
    return out;
  }
  auto d = elementary_divisors(m);
  std::size_t nonzero = 0;
  std::vector<Int> tors;
  for (auto& e : d) {
    if (sgn(e) == 0) continue;
    ++nonzero;
    if (e != 1) tors.push_back(e);
  }
  out.torsion = std::move(tors);
  out.free_rank = m.cols() - nonzero;
  return out;
}

std::optional<IntMatrix> solve_left(const IntMatrix& basis, const IntMatrix& y) {
  if (y.rows() == 0) return IntMatrix(0, basis.rows());
  if (basis.cols() != y.cols())
    throw LatticeError(ErrorCode::DimensionMismatch, "solve_left width");
  const std::size_t k = basis.rows();
  if (k == 0) {
    if (y.is_zero()) return IntMatrix(y.rows(), 0);
    return std::nullopt;
  }
  IntMatrix h = basis;
  IntMatrix u = IntMatrix::identity(k);
  std::vector<std::size_t> pivots;
  std::size_t r = echelon(h, &u, false, &pivots);
  if (r != k)
    throw LatticeError(ErrorCode::InvalidArgument,
                       "solve_left basis is not of full row rank");
  IntMatrix coords(y.rows(), k);
  Int q;
  for (std::size_t row = 0; row < y.rows(); ++row) {
    std::vector<Int> rest = y.row_vector(row);
    std::vector<Int> c(k);
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t pc = pivots[i];
      if (!mpz_divisible_p(rest[pc].get_mpz_t(), h(i, pc).get_mpz_t()))
        return std::nullopt;
      mpz_divexact(q.get_mpz_t(), rest[pc].get_mpz_t(), h(i, pc).get_mpz_t());
      c[i] = q;
      if (sgn(q) == 0) continue;
      for (std::size_t j = pc; j < h.cols(); ++j)
        mpz_submul(rest[j].get_mpz_t(), q.get_mpz_t(), h(i, j).get_mpz_t());
    }
    for (const auto& v : rest)
      if (sgn(v) != 0) return std::nullopt;
    for (std::size_t j = 0; j < k; ++j) {
      Int acc = 0;
      for (std::size_t i = 0; i < k; ++i)
        mpz_addmul(acc.get_mpz_t(), c[i].get_mpz_t(), u(i, j).get_mpz_t());
      coords(row, j) = acc;
    }
  }
  return coords;
}

bool is_saturated(const IntMatrix& basis) {
  if (basis.rows() == 0) return true;
  if (basis.rows() > basis.cols()) return false;
  auto d = elementary_divisors(basis);
  return std::all_of(d.begin(), d.end(), [](const Int& e) { return e == 1; });
}

IntMatrix saturate(const IntMatrix& rows) {
  const std::size_t n = rows.cols();
  if (rows.rows() == 0) return IntMatrix(0, n);
  IntMatrix orth = kernel_basis(rows.transpose());  // y with rows * y^T = 0
  if (orth.rows() == 0) return IntMatrix::identity(n);
  return kernel_basis(orth.transpose());
}

IntMatrix complete_basis(const IntMatrix& saturated) {
  const std::size_t k = saturated.rows();
  const std::size_t n = saturated.cols();
  if (k == 0) return IntMatrix::identity(n);
  IntMatrix h = saturated;
  std::vector<std::size_t> pivots;
  std::size_t r = echelon(h, nullptr, false, &pivots);
  if (r != k)
    throw LatticeError(ErrorCode::NotSaturated, "basis rows are dependent");
  bool unit_pivots = true;
  for (std::size_t i = 0; i < k; ++i)
    if (h(i, pivots[i]) != 1) unit_pivots = false;
  if (unit_pivots) {
    // Unit vectors on the non-pivot coordinates complete the basis.
    IntMatrix comp(n - k, n);
    std::size_t next = 0;
    std::size_t pi = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (pi < k && pivots[pi] == j) {
        ++pi;
        continue;
      }
      comp(next++, j) = 1;
    }
    return comp;
  }
  SNFResult f = snf(saturated);
  for (std::size_t i = 0; i < k; ++i)
    if (f.s(i, i) != 1)
      throw LatticeError(ErrorCode::NotSaturated,
                         "sublattice basis is not saturated");
  IntMatrix w = inverse_unimodular(f.v);
  return w.select_rows(k, n);
}

bool is_unimodular(const IntMatrix& m) {
  if (!m.is_square()) return false;
  Int d = det(m);
  return d == 1 || d == -1;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  if (!m.is_square()) throw LatticeError(ErrorCode::NotSquare, "inverse");
  HNFResult r = hnf(m);
  if (!r.h.is_identity())
    throw LatticeError(ErrorCode::NotUnimodular, "matrix is not unimodular");
  return r.u;
}

}  // namespace latrat
