#include "stacklin/abelian_group.hpp"

#include <sstream>
#include <utility>

#include "stacklin/errors.hpp"

namespace stacklin {

AbelianGroup::AbelianGroup(std::size_t free_rank, IntVec torsion, IntMatrix projection)
    : free_rank_(free_rank), torsion_(std::move(torsion)), projection_(std::move(projection)) {
  if (projection_.rows() != coordinates())
    fail_computation("DimensionMismatch", "projection rows differ from group coordinates");
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2) fail_computation("InvalidGroup", "invariant factor below 2");
    if (i > 0 && torsion_[i] % torsion_[i - 1] != 0)
      fail_computation("InvalidGroup", "invariant factors do not form a divisibility chain");
  }
  for (std::size_t i = 0; i < torsion_.size(); ++i)
    for (std::size_t j = 0; j < projection_.cols(); ++j) {
      Int& x = projection_(free_rank_ + i, j);
      mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), torsion_[i].get_mpz_t());
    }
}

IntVec AbelianGroup::reduce(IntVec element) const {
  if (element.size() != coordinates()) fail_computation("DimensionMismatch", "group element of wrong length");
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    Int& x = element[free_rank_ + i];
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), torsion_[i].get_mpz_t());
  }
  return element;
}

IntVec AbelianGroup::project(const IntVec& ambient_vector) const { return reduce(projection_.apply(ambient_vector)); }

IntVec AbelianGroup::image_of_basis(std::size_t i) const { return reduce(projection_.column(i)); }

IntVec AbelianGroup::add(const IntVec& a, const IntVec& b) const { return reduce(stacklin::add(a, b)); }

IntVec AbelianGroup::subtract(const IntVec& a, const IntVec& b) const { return reduce(stacklin::subtract(a, b)); }

IntVec AbelianGroup::negate(const IntVec& a) const { return reduce(scale(a, -1)); }

IntVec AbelianGroup::multiply(const IntVec& a, const Int& k) const { return reduce(scale(a, k)); }

bool AbelianGroup::is_zero(const IntVec& element) const { return stacklin::is_zero(reduce(element)); }

bool AbelianGroup::isomorphic_to(const AbelianGroup& other) const {
  return free_rank_ == other.free_rank_ && torsion_ == other.torsion_;
}

Int AbelianGroup::order() const {
  if (free_rank_ != 0) fail_computation("InfiniteGroup", "order of a group with a free part");
  Int n = 1;
  for (const auto& d : torsion_) n *= d;
  return n;
}

IntMatrix AbelianGroup::relations() const {
  IntMatrix r(coordinates(), torsion_.size());
  for (std::size_t i = 0; i < torsion_.size(); ++i) r(free_rank_ + i, i) = torsion_[i];
  return r;
}

std::optional<IntVec> AbelianGroup::preimage(const IntVec& element) const {
  const std::size_t k = ambient();
  IntMatrix system(coordinates(), k + torsion_.size());
  for (std::size_t i = 0; i < coordinates(); ++i)
    for (std::size_t j = 0; j < k; ++j) system(i, j) = projection_(i, j);
  for (std::size_t i = 0; i < torsion_.size(); ++i) system(free_rank_ + i, k + i) = torsion_[i];
  auto sol = solve_integer(system, element);
  if (!sol) return std::nullopt;
  sol->resize(k);
  return sol;
}

AbelianGroup AbelianGroup::after(const IntMatrix& map) const {
  return AbelianGroup(free_rank_, torsion_, projection_ * map);
}

AbelianGroup AbelianGroup::flip_free_coordinate(std::size_t i) const {
  IntMatrix p = projection_;
  p.negate_row(i);
  return AbelianGroup(free_rank_, torsion_, std::move(p));
}

bool AbelianGroup::is_element(const IntVec& element) const {
  return element.size() == coordinates() && reduce(element) == element;
}

std::string AbelianGroup::describe() const {
  if (is_trivial()) return "0";
  std::ostringstream out;
  bool first = true;
  if (free_rank_ > 0) {
    out << "Z";
    if (free_rank_ > 1) out << "^" << free_rank_;
    first = false;
  }
  for (const auto& d : torsion_) {
    out << (first ? "" : " + ") << "Z/" << d.get_str();
    first = false;
  }
  return out.str();
}

AbelianGroup cokernel_presentation(const IntMatrix& a) {
  const std::size_t k = a.rows();
  // Canonical generators of the image lattice, as columns.
  IntMatrix image = hermite_normal_form(a.transpose()).transpose();
  SmithForm f = smith_normal_form(image);

  std::vector<IntVec> free_rows;
  for (std::size_t i = f.rank; i < k; ++i) free_rows.push_back(f.left.row(i));
  IntMatrix free_block = hermite_normal_form(IntMatrix::from_rows(free_rows, k));

  IntVec torsion;
  std::vector<IntVec> torsion_rows;
  for (std::size_t i = 0; i < f.rank; ++i) {
    const Int& d = f.diagonal(i, i);
    if (d == 1) continue;
    torsion.push_back(d);
    IntVec row = f.left.row(i);
    // Use the free coordinates to clear what they can at their pivot columns.
    for (std::size_t r = 0; r < free_block.rows(); ++r) {
      std::size_t p = 0;
      while (free_block(r, p) == 0) ++p;
      const Int& pivot = free_block(r, p);
      Int g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), pivot.get_mpz_t(), d.get_mpz_t());
      Int target;
      mpz_fdiv_r(target.get_mpz_t(), row[p].get_mpz_t(), g.get_mpz_t());
      Int c = s * ((target - row[p]) / g);
      for (std::size_t j = 0; j < k; ++j) row[j] += c * free_block(r, j);
    }
    for (auto& x : row) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
    torsion_rows.push_back(std::move(row));
  }

  IntMatrix projection(free_block.rows() + torsion.size(), k);
  for (std::size_t i = 0; i < free_block.rows(); ++i)
    for (std::size_t j = 0; j < k; ++j) projection(i, j) = free_block(i, j);
  for (std::size_t i = 0; i < torsion_rows.size(); ++i)
    for (std::size_t j = 0; j < k; ++j) projection(free_block.rows() + i, j) = torsion_rows[i][j];
  return AbelianGroup(free_block.rows(), std::move(torsion), std::move(projection));
}

AbelianGroup quotient_by(const AbelianGroup& g, const std::vector<IntVec>& elements) {
  std::vector<IntVec> columns = g.relations().column_vectors();
  for (const auto& e : elements) columns.push_back(e);
  return cokernel_presentation(IntMatrix::from_columns(columns, g.coordinates()));
}

bool generates(const AbelianGroup& g, const std::vector<IntVec>& elements) {
  return quotient_by(g, elements).is_trivial();
}

Lattice kernel_of_map(const AbelianGroup& g, const std::vector<IntVec>& images) {
  const std::size_t k = images.size();
  std::vector<IntVec> columns = images;
  for (auto& c : g.relations().column_vectors()) columns.push_back(std::move(c));
  IntMatrix kernel = kernel_basis(IntMatrix::from_columns(columns, g.coordinates()));
  std::vector<IntVec> gens;
  for (std::size_t i = 0; i < kernel.rows(); ++i) {
    IntVec v = kernel.row(i);
    v.resize(k);
    gens.push_back(std::move(v));
  }
  return Lattice(gens, k);
}

}  // namespace stacklin
