#include "stacklin/intlin.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "stacklin/errors.hpp"

namespace stacklin {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) fail_computation("DimensionMismatch", "row length differs from column count");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVec>& columns, std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) fail_computation("DimensionMismatch", "column length differs from row count");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntVec IntMatrix::row(std::size_t i) const {
  return IntVec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVec IntMatrix::column(std::size_t j) const {
  IntVec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<IntVec> IntMatrix::row_vectors() const {
  std::vector<IntVec> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

std::vector<IntVec> IntMatrix::column_vectors() const {
  std::vector<IntVec> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntVec IntMatrix::apply(const IntVec& x) const {
  if (x.size() != cols_) fail_computation("DimensionMismatch", "vector length differs from column count");
  IntVec y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (x[j] != 0) y[i] += (*this)(i, j) * x[j];
  return y;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) fail_computation("DimensionMismatch", "matrix product shapes differ");
  IntMatrix p(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) p(i, j) += a * other(k, j);
    }
  return p;
}

bool IntMatrix::operator==(const IntMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) out << ',';
    out << stacklin::to_string(row(i));
  }
  out << ']';
  return out.str();
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j)
    if ((*this)(src, j) != 0) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i)
    if ((*this)(i, src) != 0) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

IntVec SmithForm::invariants() const {
  IntVec out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(diagonal(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SmithForm f{IntMatrix::identity(m), a, IntMatrix::identity(n), 0};
  IntMatrix& d = f.diagonal;

  // Moves the entry of least absolute value in the trailing block to (t, t).
  auto bring_pivot = [&](std::size_t t) {
    bool found = false;
    std::size_t bi = 0, bj = 0;
    Int best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (d(i, j) == 0) continue;
        Int v = abs(d(i, j));
        if (!found || v < best) {
          found = true;
          best = v;
          bi = i;
          bj = j;
        }
      }
    if (!found) return false;
    d.swap_rows(t, bi);
    f.left.swap_rows(t, bi);
    d.swap_cols(t, bj);
    f.right.swap_cols(t, bj);
    return true;
  };

  std::size_t t = 0;
  while (t < m && t < n && bring_pivot(t)) {
    for (;;) {
      bool remainder = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        Int q = d(i, t) / d(t, t);
        d.add_row_multiple(i, t, -q);
        f.left.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) remainder = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Int q = d(t, j) / d(t, t);
        d.add_col_multiple(j, t, -q);
        f.right.add_col_multiple(j, t, -q);
        if (d(t, j) != 0) remainder = true;
      }
      if (remainder) {
        bring_pivot(t);
        continue;
      }
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.add_row_multiple(t, i, 1);
            f.left.add_row_multiple(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      f.left.negate_row(t);
    }
    ++t;
  }
  f.rank = t;
  return f;
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

IntMatrix hermite_normal_form(const IntMatrix& a) {
  IntMatrix h = a;
  const std::size_t m = h.rows();
  const std::size_t n = h.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    bool pivot = false;
    for (;;) {
      bool found = false;
      std::size_t bi = 0;
      Int best;
      for (std::size_t i = r; i < m; ++i) {
        if (h(i, c) == 0) continue;
        Int v = abs(h(i, c));
        if (!found || v < best) {
          found = true;
          best = v;
          bi = i;
        }
      }
      if (!found) break;
      pivot = true;
      h.swap_rows(r, bi);
      bool clean = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (h(i, c) == 0) continue;
        Int q = h(i, c) / h(r, c);
        h.add_row_multiple(i, r, -q);
        if (h(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (!pivot) continue;
    if (h(r, c) < 0) h.negate_row(r);
    for (std::size_t i = 0; i < r; ++i) h.add_row_multiple(i, r, -floor_div(h(i, c), h(r, c)));
    ++r;
  }
  IntMatrix out(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = h(i, j);
  return out;
}

std::size_t rank(const IntMatrix& a) { return hermite_normal_form(a).rows(); }

Int determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) fail_computation("DimensionMismatch", "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  // Fraction-free Bareiss elimination.
  IntMatrix m = a;
  Int sign = 1;
  Int previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
        m(i, j) = v;
      }
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntMatrix kernel_basis(const IntMatrix& a) {
  SmithForm f = smith_normal_form(a);
  std::vector<IntVec> gens;
  for (std::size_t j = f.rank; j < a.cols(); ++j) gens.push_back(f.right.column(j));
  return hermite_normal_form(IntMatrix::from_rows(gens, a.cols()));
}

std::optional<IntVec> solve_integer(const IntMatrix& a, const IntVec& b) {
  if (b.size() != a.rows()) fail_computation("DimensionMismatch", "right-hand side length differs from row count");
  SmithForm f = smith_normal_form(a);
  IntVec c = f.left.apply(b);
  IntVec y(a.cols());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < f.rank) {
      const Int& d = f.diagonal(i, i);
      if (c[i] % d != 0) return std::nullopt;
      y[i] = c[i] / d;
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return f.right.apply(y);
}

Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) fail_computation("DimensionMismatch", "dot product of vectors of different length");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVec add(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) fail_computation("DimensionMismatch", "sum of vectors of different length");
  IntVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

IntVec subtract(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) fail_computation("DimensionMismatch", "difference of vectors of different length");
  IntVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

IntVec scale(const IntVec& a, const Int& k) {
  IntVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] * k;
  return c;
}

IntVec unit_vector(std::size_t n, std::size_t i) {
  IntVec e(n);
  e[i] = 1;
  return e;
}

bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

RatVec to_rational(const IntVec& v) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i];
  return r;
}

IntVec primitive_integer(const RatVec& v) {
  Int denom = 1;
  for (const auto& x : v) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), x.get_den_mpz_t());
  IntVec out(v.size());
  Int g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rat scaled = v[i] * denom;
    out[i] = scaled.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g > 1)
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

std::size_t rational_rank(const std::vector<IntVec>& vectors, std::size_t ambient) {
  return rank(IntMatrix::from_rows(vectors, ambient));
}

std::string to_string(const IntVec& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i].get_str();
  out << ')';
  return out.str();
}

std::string to_string(const RatVec& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i].get_str();
  out << ')';
  return out.str();
}

Lattice::Lattice(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

Lattice::Lattice(const std::vector<IntVec>& generators, std::size_t ambient)
    : ambient_(ambient), basis_(hermite_normal_form(IntMatrix::from_rows(generators, ambient))) {}

std::optional<IntVec> Lattice::coordinates(const IntVec& v) const {
  if (v.size() != ambient_) fail_computation("DimensionMismatch", "vector outside the ambient lattice");
  return solve_integer(basis_.transpose(), v);
}

bool Lattice::contains(const IntVec& v) const { return coordinates(v).has_value(); }

bool Lattice::contains(const Lattice& other) const {
  for (std::size_t i = 0; i < other.rank(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

bool Lattice::rationally_contains(const Lattice& other) const { return sum(other).rank() == rank(); }

Lattice Lattice::sum(const Lattice& other) const {
  std::vector<IntVec> gens = basis_vectors();
  for (auto& v : other.basis_vectors()) gens.push_back(std::move(v));
  return Lattice(gens, ambient_);
}

Lattice Lattice::saturation() const {
  IntMatrix normals = kernel_basis(basis_);
  return Lattice(kernel_basis(normals).row_vectors(), ambient_);
}

std::string Lattice::to_string() const { return basis_.to_string(); }

}  // namespace stacklin
