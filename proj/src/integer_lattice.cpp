#include "mtcm/integer_lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

#include "mtcm/error.hpp"

namespace mtcm {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer addition overflow");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer subtraction overflow");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer multiplication overflow");
  return r;
}

Int checked_neg(Int a) {
  if (a == std::numeric_limits<Int>::min()) fail(ErrorCode::Overflow, "integer negation overflow");
  return -a;
}

namespace {

Int checked_abs(Int a) { return a < 0 ? checked_neg(a) : a; }

// Quotient rounded toward negative infinity; divisor must be nonzero.
Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// row[dst] -= q * row[src]
void row_sub(IntMatrix& m, std::size_t dst, std::size_t src, Int q) {
  if (q == 0) return;
  for (std::size_t k = 0; k < m.cols(); ++k)
    m(dst, k) = checked_sub(m(dst, k), checked_mul(q, m(src, k)));
}

// col[dst] -= q * col[src]
void col_sub(IntMatrix& m, std::size_t dst, std::size_t src, Int q) {
  if (q == 0) return;
  for (std::size_t k = 0; k < m.rows(); ++k)
    m(k, dst) = checked_sub(m(k, dst), checked_mul(q, m(k, src)));
}

void negate_row(IntMatrix& m, std::size_t i) {
  for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = checked_neg(m(i, k));
}

void negate_col(IntMatrix& m, std::size_t j) {
  for (std::size_t k = 0; k < m.rows(); ++k) m(k, j) = checked_neg(m(k, j));
}

void require_same_length(std::size_t a, std::size_t b) {
  if (a != b)
    fail(ErrorCode::LengthMismatch,
         "vector lengths " + std::to_string(a) + " and " + std::to_string(b) + " differ");
}

}  // namespace

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require_same_length(rows[i].size(), cols);
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVector IntMatrix::row_vector(std::size_t i) const {
  auto r = row(i);
  return IntVector(r.begin(), r.end());
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<IntVector> IntMatrix::to_rows() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row_vector(i));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntVector IntMatrix::operator*(std::span<const Int> v) const {
  require_same_length(v.size(), cols_);
  IntVector out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out[i] = checked_add(out[i], checked_mul((*this)(i, j), v[j]));
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  require_same_length(a.cols(), b.rows());
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) = checked_add(out(i, j), checked_mul(aik, b(k, j)));
    }
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

IntegerLattice IntegerLattice::zero(std::size_t ambient_rank) {
  return hnf_canonical(IntMatrix(0, ambient_rank));
}

IntegerLattice IntegerLattice::full(std::size_t ambient_rank) {
  return hnf_canonical(IntMatrix::identity(ambient_rank));
}

IntegerLattice hnf_canonical(const IntMatrix& rows) {
  IntMatrix m = rows;
  const std::size_t nrows = m.rows();
  const std::size_t ncols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t j = 0; j < ncols && r < nrows; ++j) {
    bool have_pivot = false;
    for (;;) {
      std::size_t best = nrows;
      for (std::size_t i = r; i < nrows; ++i)
        if (m(i, j) != 0 && (best == nrows || checked_abs(m(i, j)) < checked_abs(m(best, j))))
          best = i;
      if (best == nrows) break;
      have_pivot = true;
      m.swap_rows(r, best);
      bool cleared = true;
      for (std::size_t i = r + 1; i < nrows; ++i) {
        if (m(i, j) == 0) continue;
        row_sub(m, i, r, m(i, j) / m(r, j));
        if (m(i, j) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (!have_pivot) continue;
    if (m(r, j) < 0) negate_row(m, r);
    for (std::size_t i = 0; i < r; ++i) row_sub(m, i, r, floor_div(m(i, j), m(r, j)));
    pivots.push_back(j);
    ++r;
  }

  IntMatrix basis(r, ncols);
  for (std::size_t i = 0; i < r; ++i)
    std::copy(m.row(i).begin(), m.row(i).end(), basis.row(i).begin());
  return IntegerLattice(std::move(basis), std::move(pivots));
}

IntegerLattice hnf_canonical(const std::vector<IntVector>& rows, std::size_t ambient_rank) {
  return hnf_canonical(IntMatrix::from_rows(rows, ambient_rank));
}

std::size_t rank(const IntegerLattice& lattice) { return lattice.rank(); }

SmithForm smith_form(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix v = IntMatrix::identity(n);
  IntMatrix vinv = IntMatrix::identity(n);
  std::vector<Int> diagonal;

  // Column operations on `a` are mirrored into V (right) and V^-1 (left).
  auto col_swap = [&](std::size_t x, std::size_t y) {
    a.swap_cols(x, y);
    v.swap_cols(x, y);
    vinv.swap_rows(x, y);
  };
  auto col_reduce = [&](std::size_t dst, std::size_t src, Int q) {
    col_sub(a, dst, src, q);
    col_sub(v, dst, src, q);
    row_sub(vinv, src, dst, checked_neg(q));
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    bool any = false;
    for (;;) {
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a(i, j) != 0 && (bi == m || checked_abs(a(i, j)) < checked_abs(a(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == m) break;
      any = true;
      a.swap_rows(t, bi);
      col_swap(t, bj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        row_sub(a, i, t, a(i, t) / a(t, t));
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        col_reduce(j, t, a(t, j) / a(t, t));
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the remaining block; otherwise fold the offending row in.
      std::size_t bad_row = m;
      for (std::size_t i = t + 1; i < m && bad_row == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (bad_row == m) break;
      for (std::size_t k = 0; k < n; ++k) a(t, k) = checked_add(a(t, k), a(bad_row, k));
    }
    if (!any) break;
    if (a(t, t) < 0) {
      negate_col(a, t);
      negate_col(v, t);
      negate_row(vinv, t);
    }
    diagonal.push_back(a(t, t));
  }
  return SmithForm{std::move(diagonal), std::move(v), std::move(vinv)};
}

IntegerLattice saturate(const IntegerLattice& lattice) {
  const SmithForm snf = smith_form(lattice.basis());
  const std::size_t r = snf.diagonal.size();
  IntMatrix rows(r, lattice.ambient_rank());
  for (std::size_t i = 0; i < r; ++i)
    std::copy(snf.v_inverse.row(i).begin(), snf.v_inverse.row(i).end(), rows.row(i).begin());
  return hnf_canonical(rows);
}

bool is_saturated(const IntegerLattice& lattice) {
  const auto d = elementary_divisors(lattice);
  return std::all_of(d.begin(), d.end(), [](Int x) { return x == 1; });
}

std::vector<Int> elementary_divisors(const IntegerLattice& lattice) {
  return smith_form(lattice.basis()).diagonal;
}

bool lattice_equal(const IntegerLattice& a, const IntegerLattice& b) {
  if (a.ambient_rank() != b.ambient_rank())
    fail(ErrorCode::RankMismatch, "ambient ranks " + std::to_string(a.ambient_rank()) +
                                      " and " + std::to_string(b.ambient_rank()) + " differ");
  return a == b;
}

bool lattice_contains(const IntegerLattice& lattice, std::span<const Int> v) {
  if (v.size() != lattice.ambient_rank())
    fail(ErrorCode::RankMismatch, "vector of length " + std::to_string(v.size()) +
                                      " tested against ambient rank " +
                                      std::to_string(lattice.ambient_rank()));
  IntVector rest(v.begin(), v.end());
  const IntMatrix& b = lattice.basis();
  for (std::size_t i = 0; i < lattice.rank(); ++i) {
    const std::size_t p = lattice.pivots()[i];
    if (rest[p] % b(i, p) != 0) return false;
    const Int q = rest[p] / b(i, p);
    for (std::size_t k = 0; k < rest.size(); ++k)
      rest[k] = checked_sub(rest[k], checked_mul(q, b(i, k)));
  }
  return std::all_of(rest.begin(), rest.end(), [](Int x) { return x == 0; });
}

Int pair(std::span<const Int> chi, std::span<const Int> gamma) {
  require_same_length(chi.size(), gamma.size());
  Int s = 0;
  for (std::size_t i = 0; i < chi.size(); ++i) s = checked_add(s, checked_mul(chi[i], gamma[i]));
  return s;
}

IntegerLattice annihilator(const IntegerLattice& lattice) {
  const std::size_t n = lattice.ambient_rank();
  const SmithForm snf = smith_form(lattice.basis());
  const std::size_t r = snf.diagonal.size();
  IntMatrix rows(n - r, n);
  for (std::size_t j = r; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) rows(j - r, k) = snf.v(k, j);
  return hnf_canonical(rows);
}

LatticeMap::LatticeMap(std::size_t source_rank, std::size_t target_rank, IntMatrix matrix)
    : matrix_(std::move(matrix)) {
  if (matrix_.cols() != source_rank || matrix_.rows() != target_rank)
    fail(ErrorCode::LengthMismatch, "lattice map matrix is " + std::to_string(matrix_.rows()) +
                                        "x" + std::to_string(matrix_.cols()) + ", expected " +
                                        std::to_string(target_rank) + "x" +
                                        std::to_string(source_rank));
}

IntVector LatticeMap::apply(std::span<const Int> v) const { return matrix_ * v; }

LatticeMap LatticeMap::dual() const {
  return LatticeMap(target_rank(), source_rank(), matrix_.transpose());
}

IntegerLattice LatticeMap::image() const { return hnf_canonical(matrix_.transpose()); }

LatticeMap compose(const LatticeMap& outer, const LatticeMap& inner) {
  require_same_length(outer.source_rank(), inner.target_rank());
  return LatticeMap(inner.source_rank(), outer.target_rank(), outer.matrix_ * inner.matrix_);
}

}  // namespace mtcm
