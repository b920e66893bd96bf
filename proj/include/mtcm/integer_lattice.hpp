#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mtcm {

using Int = std::int64_t;
using IntVector = std::vector<Int>;

// Overflow-checked arithmetic; throws Error(Overflow) instead of wrapping.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int checked_neg(Int a);

// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Int operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const Int> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<Int> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  IntVector row_vector(std::size_t i) const;
  IntVector column(std::size_t j) const;
  std::vector<IntVector> to_rows() const;

  IntMatrix transpose() const;
  IntVector operator*(std::span<const Int> v) const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

// A sublattice of Z^N held by its canonical row-style Hermite basis:
// pivots strictly increase to the right, are positive, and the entries
// above each pivot lie in [0, pivot). Equal lattices have identical bases.
class IntegerLattice {
 public:
  static IntegerLattice zero(std::size_t ambient_rank);
  static IntegerLattice full(std::size_t ambient_rank);

  std::size_t ambient_rank() const { return basis_.cols(); }
  std::size_t rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  friend bool operator==(const IntegerLattice& a, const IntegerLattice& b) {
    return a.basis_ == b.basis_;
  }

 private:
  friend IntegerLattice hnf_canonical(const IntMatrix& rows);
  IntegerLattice(IntMatrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  IntMatrix basis_;
  std::vector<std::size_t> pivots_;
};

IntegerLattice hnf_canonical(const IntMatrix& rows);
IntegerLattice hnf_canonical(const std::vector<IntVector>& rows, std::size_t ambient_rank);

std::size_t rank(const IntegerLattice& lattice);
IntegerLattice saturate(const IntegerLattice& lattice);
bool is_saturated(const IntegerLattice& lattice);
bool lattice_equal(const IntegerLattice& a, const IntegerLattice& b);
bool lattice_contains(const IntegerLattice& lattice, std::span<const Int> v);
Int pair(std::span<const Int> chi, std::span<const Int> gamma);
IntegerLattice annihilator(const IntegerLattice& lattice);

// Smith form D = U * A * V with V unimodular. Only what the lattice code
// consumes is kept: the positive diagonal (each entry dividing the next),
// V, and V^-1.
struct SmithForm {
  std::vector<Int> diagonal;
  IntMatrix v;
  IntMatrix v_inverse;
};

SmithForm smith_form(const IntMatrix& a);

// Elementary divisors of L inside its saturation (all 1 iff L is saturated).
std::vector<Int> elementary_divisors(const IntegerLattice& lattice);

// Homomorphism Z^source -> Z^target; column j is the image of basis vector j.
class LatticeMap {
 public:
  LatticeMap(std::size_t source_rank, std::size_t target_rank, IntMatrix matrix);

  std::size_t source_rank() const { return matrix_.cols(); }
  std::size_t target_rank() const { return matrix_.rows(); }
  const IntMatrix& matrix() const { return matrix_; }

  IntVector apply(std::span<const Int> v) const;
  // Pullback on characters: the transpose.
  LatticeMap dual() const;
  IntegerLattice image() const;

  friend LatticeMap compose(const LatticeMap& outer, const LatticeMap& inner);
  friend bool operator==(const LatticeMap&, const LatticeMap&) = default;

 private:
  IntMatrix matrix_;
};

}  // namespace mtcm
