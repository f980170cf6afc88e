#pragma once
// Subspaces of F^n kept in canonical reduced-echelon form, so structural
// equality of the basis matrix is subspace equality. Sum stacks bases;
// intersection is Zassenhaus on the doubled matrix.

#include <cstddef>
#include <string>
#include <vector>

#include "liesc/matrix.hpp"

namespace liesc {

class Subspace {
 public:
  static Subspace zero(FieldSpec f, std::size_t ambient);
  static Subspace full(FieldSpec f, std::size_t ambient);
  static Subspace span(FieldSpec f, std::size_t ambient, const std::vector<Vec>& gens);
  static Subspace row_space(const Matrix& m);

  FieldSpec field() const { return f_; }
  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient_dim() const { return ambient_; }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }
  const Matrix& basis() const { return basis_; }
  Vec basis_row(std::size_t i) const { return basis_.row(i); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // v minus its projection onto the subspace; zero exactly for members
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& o) const;
  // coefficients of a member vector in the canonical basis (= pivot coords)
  Vec coordinates(const Vec& member) const;
  // square matrix R with R*v = reduce(v); kernel of R is exactly this space
  Matrix reduction_matrix() const;
  std::vector<std::size_t> complement_coords() const;  // non-pivot columns

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;

  bool operator==(const Subspace& o) const;
  // deterministic total order: by dimension, then basis entries
  static int compare(const Subspace& a, const Subspace& b);
  bool operator<(const Subspace& o) const { return compare(*this, o) < 0; }

  // basis vectors joined by ';' ("0" for the zero space)
  std::string str() const;

 private:
  Subspace(FieldSpec f, std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots)
      : f_(f), ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  FieldSpec f_;
  std::size_t ambient_;
  Matrix basis_;  // dim x ambient, RREF, no zero rows
  std::vector<std::size_t> pivots_;
};

}  // namespace liesc
