#include "liesc/subspace.hpp"

#include <cassert>

namespace liesc {

Subspace Subspace::zero(FieldSpec f, std::size_t ambient) {
  return Subspace(f, ambient, Matrix(f, 0, ambient), {});
}

Subspace Subspace::full(FieldSpec f, std::size_t ambient) {
  std::vector<std::size_t> piv(ambient);
  for (std::size_t i = 0; i < ambient; ++i) piv[i] = i;
  return Subspace(f, ambient, Matrix::identity(f, ambient), piv);
}

Subspace Subspace::row_space(const Matrix& m) {
  std::vector<std::size_t> piv;
  Matrix e = m.rref(&piv);
  Matrix basis(m.field(), piv.size(), m.cols());
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) basis.at(i, j) = e.at(i, j);
  return Subspace(m.field(), m.cols(), std::move(basis), std::move(piv));
}

Subspace Subspace::span(FieldSpec f, std::size_t ambient, const std::vector<Vec>& gens) {
  return row_space(Matrix::from_rows(f, ambient, gens));
}

Vec Subspace::reduce(Vec v) const {
  if (v.size() != ambient_) throw DimensionMismatch("reduce: ambient mismatch");
  for (std::size_t i = 0; i < dim(); ++i) {
    const Scalar c = v[pivots_[i]];  // copy: the loop below overwrites v[pivot]
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j) v[j] = v[j] - c * basis_.at(i, j);
  }
  return v;
}

bool Subspace::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& o) const {
  for (std::size_t i = 0; i < o.dim(); ++i)
    if (!contains(o.basis_row(i))) return false;
  return true;
}

Vec Subspace::coordinates(const Vec& member) const {
  if (!contains(member)) throw DimensionMismatch("coordinates of a non-member");
  Vec c;
  c.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) c.push_back(member[pivots_[i]]);
  return c;
}

Matrix Subspace::reduction_matrix() const {
  Matrix r = Matrix::identity(f_, ambient_);
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < ambient_; ++j)
      r.at(j, pivots_[i]) = r.at(j, pivots_[i]) - basis_.at(i, j);
  return r;
}

std::vector<std::size_t> Subspace::complement_coords() const {
  std::vector<bool> is_pivot(ambient_, false);
  for (std::size_t c : pivots_) is_pivot[c] = true;
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < ambient_; ++j)
    if (!is_pivot[j]) out.push_back(j);
  return out;
}

Subspace Subspace::sum(const Subspace& o) const {
  if (ambient_ != o.ambient_ || !(f_ == o.f_))
    throw DimensionMismatch("sum of subspaces of different spaces");
  return row_space(Matrix::vstack(basis_, o.basis_));
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (ambient_ != o.ambient_ || !(f_ == o.f_))
    throw DimensionMismatch("intersection of subspaces of different spaces");
  // Zassenhaus: rref of [A|A; B|0]; rows with zero left half carry the
  // intersection in the right half.
  std::size_t n = ambient_;
  Matrix big(f_, dim() + o.dim(), 2 * n);
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      big.at(i, j) = basis_.at(i, j);
      big.at(i, n + j) = basis_.at(i, j);
    }
  for (std::size_t i = 0; i < o.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) big.at(dim() + i, j) = o.basis_.at(i, j);
  Matrix e = big.rref();
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < e.rows(); ++i) {
    bool left_zero = true;
    for (std::size_t j = 0; j < n && left_zero; ++j)
      if (!e.at(i, j).is_zero()) left_zero = false;
    if (!left_zero) continue;
    Vec right;
    right.reserve(n);
    for (std::size_t j = 0; j < n; ++j) right.push_back(e.at(i, n + j));
    if (!vec_is_zero(right)) rows.push_back(right);
  }
  Subspace result = span(f_, n, rows);
  assert(result.dim() + sum(o).dim() == dim() + o.dim());
  return result;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && f_ == o.f_ && basis_ == o.basis_;
}

int Subspace::compare(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim() ? -1 : 1;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.ambient_; ++j)
      if (int c = Scalar::compare(a.basis_.at(i, j), b.basis_.at(i, j))) return c;
  return 0;
}

std::string Subspace::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (i) s += ';';
    s += vec_str(basis_row(i));
  }
  return s;
}

}  // namespace liesc
