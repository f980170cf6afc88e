#include "liesc/lie_algebra.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

#include "liesc/errors.hpp"

namespace liesc {

Vec unit_vec(FieldSpec f, std::size_t n, std::size_t i) {
  Vec v = vec_zero(f, n);
  v[i] = Scalar::one(f);
  return v;
}

static std::size_t tri_index(std::size_t n, std::size_t i, std::size_t j) {
  // position of (i, j), i < j, in row-by-row lower-triangle order
  assert(i < j && j < n);
  (void)n;
  return j * (j - 1) / 2 + i;
}

StructureTable::StructureTable(FieldSpec f, std::size_t dim) : f_(f), n_(dim) {
  if (dim == 0) throw DimensionMismatch("structure table needs dim >= 1");
  e_.assign(n_ * (n_ - 1) / 2, vec_zero(f_, n_));
}

Vec& StructureTable::at(std::size_t i, std::size_t j) {
  if (!(i < j && j < n_)) throw DimensionMismatch("structure entry needs i < j < dim");
  return e_[tri_index(n_, i, j)];
}

const Vec& StructureTable::at(std::size_t i, std::size_t j) const {
  if (!(i < j && j < n_)) throw DimensionMismatch("structure entry needs i < j < dim");
  return e_[tri_index(n_, i, j)];
}

void StructureTable::set(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
  if (!(c.field() == f_)) throw FieldMismatch("structure constant field");
  at(i, j)[k] = c;
}

const Vec& LieAlgebra::entry(std::size_t i, std::size_t j) const {
  return table_[tri_index(n_, i, j)];
}

Vec LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw DimensionMismatch("basis index out of range");
  if (i == j) return vec_zero(f_, n_);
  if (i < j) return entry(i, j);
  return vec_scale(Scalar::zero(f_) - Scalar::one(f_), entry(j, i));
}

LieAlgebra LieAlgebra::create(const StructureTable& t, std::vector<std::string> names) {
  const FieldSpec f = t.field();
  const std::size_t n = t.dim();
  if (names.empty()) {
    for (std::size_t i = 0; i < n; ++i) names.push_back("b" + std::to_string(i + 1));
  }
  if (names.size() != n) throw DimensionMismatch("basis name count != dim");

  std::vector<Vec> table;
  table.reserve(n * (n - 1) / 2);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      const Vec& v = t.at(i, j);
      if (v.size() != n) throw DimensionMismatch("structure entry has wrong length");
      table.push_back(v);
    }

  LieAlgebra L(f, n, std::move(table), std::move(names));

  // Jacobi on basis triples; bilinearity extends it to the whole algebra
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec d = L.bracket(L.basis_bracket(i, j), unit_vec(f, n, k));
        d = vec_add(d, L.bracket(L.basis_bracket(j, k), unit_vec(f, n, i)));
        d = vec_add(d, L.bracket(L.basis_bracket(k, i), unit_vec(f, n, j)));
        if (!vec_is_zero(d)) throw JacobiViolation(i, j, k, vec_str(d));
      }
  return L;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != n_ || y.size() != n_) throw DimensionMismatch("bracket operand length");
  Vec out = vec_zero(f_, n_);
  for (std::size_t j = 1; j < n_; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      // [e_i, e_j] contributes with coefficient x_i y_j - x_j y_i
      const Scalar c = x[i] * y[j] - x[j] * y[i];
      if (c.is_zero()) continue;
      const Vec& e = entry(i, j);
      for (std::size_t k = 0; k < n_; ++k)
        if (!e[k].is_zero()) out[k] = out[k] + c * e[k];
    }
  return out;
}

Matrix LieAlgebra::adjoint(const Vec& x) const {
  if (x.size() != n_) throw DimensionMismatch("adjoint operand length");
  Matrix m = Matrix(f_, n_, n_);
  for (std::size_t j = 0; j < n_; ++j) {
    Vec col = bracket(unit_vec(f_, n_, j), x);
    for (std::size_t i = 0; i < n_; ++i) m.at(i, j) = col[i];
  }
  return m;
}

Subspace LieAlgebra::bracket_span(const Subspace& a, const Subspace& b) const {
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t s = 0; s < b.dim(); ++s)
      rows.push_back(bracket(a.basis_row(r), b.basis_row(s)));
  return Subspace::span(f_, n_, rows);
}

bool LieAlgebra::is_subalgebra(const Subspace& s) const {
  return s.contains(bracket_span(s, s));
}

bool LieAlgebra::is_ideal(const Subspace& s) const {
  return s.contains(bracket_span(full_space(), s));
}

bool LieAlgebra::is_ideal_of(const Subspace& s, const Subspace& ambient) const {
  return ambient.contains(s) && s.contains(bracket_span(ambient, s));
}

Subspace LieAlgebra::generated_subalgebra(const std::vector<Vec>& gens) const {
  Subspace s = Subspace::span(f_, n_, gens);
  for (;;) {
    Subspace next = s.sum(bracket_span(s, s));
    if (next.dim() == s.dim()) return s;
    s = next;
  }
}

Subspace LieAlgebra::ideal_closure(const std::vector<Vec>& seed) const {
  Subspace s = Subspace::span(f_, n_, seed);
  for (;;) {
    Subspace next = s.sum(bracket_span(full_space(), s));
    if (next.dim() == s.dim()) return s;
    s = next;
  }
}

Subspace LieAlgebra::centralizer(const Subspace& s) const {
  if (s.dim() == 0) return full_space();
  std::vector<Matrix> blocks;
  for (std::size_t r = 0; r < s.dim(); ++r) blocks.push_back(adjoint(s.basis_row(r)));
  Matrix stacked = Matrix::vstack(blocks);
  return Subspace::row_space(stacked.kernel());
}

Subspace LieAlgebra::center() const { return centralizer(full_space()); }

Subspace LieAlgebra::normalizer_in(const Subspace& ambient, const Subspace& s) const {
  if (s.dim() == 0) return ambient;
  const Matrix red = s.reduction_matrix();
  std::vector<Matrix> blocks;
  for (std::size_t r = 0; r < s.dim(); ++r)
    blocks.push_back(red * adjoint(s.basis_row(r)));
  Matrix stacked = Matrix::vstack(blocks);
  return ambient.intersect(Subspace::row_space(stacked.kernel()));
}

Subspace LieAlgebra::normalizer(const Subspace& s) const {
  return normalizer_in(full_space(), s);
}

QuotientResult LieAlgebra::quotient(const Subspace& ideal) const {
  if (!is_ideal(ideal)) throw NotAnIdeal("quotient needs an ideal");
  const std::size_t d = ideal.dim();
  const std::size_t q = n_ - d;
  const std::vector<std::size_t> comp = ideal.complement_coords();
  assert(comp.size() == q);

  // project = rows of the reduction matrix picked at complement coordinates
  const Matrix red = ideal.reduction_matrix();
  Matrix proj = Matrix(f_, q, n_);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t c = 0; c < n_; ++c) proj.at(a, c) = red.at(comp[a], c);

  if (q == 0) throw DimensionMismatch("quotient by the whole algebra is not represented");
  StructureTable t(f_, q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = a + 1; b < q; ++b)
      t.at(a, b) = proj.apply(bracket(unit_vec(f_, n_, comp[a]), unit_vec(f_, n_, comp[b])));

  std::vector<std::string> names;
  for (std::size_t a = 0; a < q; ++a) names.push_back(names_[comp[a]]);
  LieAlgebra Q = LieAlgebra::create(t, std::move(names));

  // the projection must carry brackets to brackets on every basis pair
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) {
      Vec lhs = proj.apply(basis_bracket(i, j));
      Vec rhs = Q.bracket(proj.apply(unit_vec(f_, n_, i)), proj.apply(unit_vec(f_, n_, j)));
      if (vec_compare(lhs, rhs) != 0)
        throw std::logic_error("quotient projection failed to preserve brackets");
    }

  return QuotientResult{std::move(Q), std::move(proj), ideal};
}

RestrictionResult LieAlgebra::restrict_to(const Subspace& s) const {
  if (!is_subalgebra(s)) throw NotASubalgebra("restriction needs a subalgebra");
  const std::size_t d = s.dim();
  if (d == 0) throw DimensionMismatch("zero subalgebra is not represented");
  StructureTable t(f_, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b)
      t.at(a, b) = s.coordinates(bracket(s.basis_row(a), s.basis_row(b)));
  LieAlgebra R = LieAlgebra::create(t);
  return RestrictionResult{std::move(R), s.basis()};
}

bool LieAlgebra::operator==(const LieAlgebra& o) const {
  if (!(f_ == o.f_) || n_ != o.n_ || names_ != o.names_) return false;
  for (std::size_t idx = 0; idx < table_.size(); ++idx)
    if (vec_compare(table_[idx], o.table_[idx]) != 0) return false;
  return true;
}

}  // namespace liesc
