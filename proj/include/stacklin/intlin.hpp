#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace stacklin {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Dense row-major integer matrix acting on column vectors.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVec>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<IntVec>& columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVec row(std::size_t i) const;
  IntVec column(std::size_t j) const;
  std::vector<IntVec> row_vectors() const;
  std::vector<IntVec> column_vectors() const;

  IntMatrix transpose() const;
  IntVec apply(const IntVec& x) const;
  IntMatrix operator*(const IntMatrix& other) const;
  bool operator==(const IntMatrix& other) const;
  std::string to_string() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row dst += factor * row src
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& factor);
  // col dst += factor * col src
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

// left * a * right == diagonal, with left and right unimodular and
// diagonal entries d_0 | d_1 | ... | d_{rank-1}, all positive.
struct SmithForm {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;
  std::size_t rank = 0;

  IntVec invariants() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

// Row-style Hermite normal form of the row lattice; zero rows dropped.
IntMatrix hermite_normal_form(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);
Int determinant(const IntMatrix& a);

// Rows form the canonical (Hermite) basis of {x : a x = 0}.
IntMatrix kernel_basis(const IntMatrix& a);

// Some integer x with a x = b, if one exists.
std::optional<IntVec> solve_integer(const IntMatrix& a, const IntVec& b);

Int floor_div(const Int& a, const Int& b);
Int dot(const IntVec& a, const IntVec& b);
IntVec add(const IntVec& a, const IntVec& b);
IntVec subtract(const IntVec& a, const IntVec& b);
IntVec scale(const IntVec& a, const Int& k);
IntVec unit_vector(std::size_t n, std::size_t i);
bool is_zero(const IntVec& v);
RatVec to_rational(const IntVec& v);
// Smallest positive integer multiple of v, divided by the gcd of its entries.
IntVec primitive_integer(const RatVec& v);
std::size_t rational_rank(const std::vector<IntVec>& vectors, std::size_t ambient);
std::string to_string(const IntVec& v);
std::string to_string(const RatVec& v);

// A sublattice of Z^ambient stored through its Hermite basis, so equal
// lattices have identical representations.
class Lattice {
 public:
  explicit Lattice(std::size_t ambient = 0);
  Lattice(const std::vector<IntVec>& generators, std::size_t ambient);

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t rank() const noexcept { return basis_.rows(); }
  const IntMatrix& basis() const noexcept { return basis_; }
  std::vector<IntVec> basis_vectors() const { return basis_.row_vectors(); }

  bool contains(const IntVec& v) const;
  bool contains(const Lattice& other) const;
  bool rationally_contains(const Lattice& other) const;
  // Coordinates of v in the stored basis, if v lies in the lattice.
  std::optional<IntVec> coordinates(const IntVec& v) const;
  Lattice sum(const Lattice& other) const;
  Lattice saturation() const;
  bool operator==(const Lattice& other) const { return ambient_ == other.ambient_ && basis_ == other.basis_; }
  std::string to_string() const;

 private:
  std::size_t ambient_ = 0;
  IntMatrix basis_;
};

}  // namespace stacklin
