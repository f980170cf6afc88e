#pragma once
// Finite-dimensional Lie algebras presented by structure constants on an
// ordered basis. Only the lower triangle i < j is stored; [e_j,e_i] is the
// negation and [e_i,e_i] = 0 by construction, so the bracket is alternating
// in every characteristic. Validation checks the Jacobi identity on all
// basis triples.
//
// Adjoint convention: adjoint(x) is the matrix of y |-> [y, x], so column j
// holds [e_j, x] and adjoint(x).apply(y) == bracket(y, x).

#include <cstddef>
#include <string>
#include <vector>

#include "liesc/subspace.hpp"

namespace liesc {

Vec unit_vec(FieldSpec f, std::size_t n, std::size_t i);

// mutable staging area for structure constants, indexed by basis pair i < j
class StructureTable {
 public:
  StructureTable(FieldSpec f, std::size_t dim);
  FieldSpec field() const { return f_; }
  std::size_t dim() const { return n_; }
  Vec& at(std::size_t i, std::size_t j);
  const Vec& at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, std::size_t k, const Scalar& c);

 private:
  FieldSpec f_;
  std::size_t n_;
  std::vector<Vec> e_;
};

struct QuotientResult;
struct RestrictionResult;

class LieAlgebra {
 public:
  // validates the table (Jacobi on all basis triples) and freezes it
  static LieAlgebra create(const StructureTable& t,
                           std::vector<std::string> names = {});

  FieldSpec field() const { return f_; }
  std::size_t dim() const { return n_; }
  const std::vector<std::string>& names() const { return names_; }

  Vec basis_bracket(std::size_t i, std::size_t j) const;  // any i, j
  Vec bracket(const Vec& x, const Vec& y) const;
  Matrix adjoint(const Vec& x) const;

  Subspace full_space() const { return Subspace::full(f_, n_); }
  Subspace zero_space() const { return Subspace::zero(f_, n_); }

  // span of all [a, b] with a, b running over the given bases
  Subspace bracket_span(const Subspace& a, const Subspace& b) const;
  Subspace derived_subalgebra(const Subspace& s) const { return bracket_span(s, s); }

  bool is_subalgebra(const Subspace& s) const;
  bool is_ideal(const Subspace& s) const;          // ideal of L
  bool is_ideal_of(const Subspace& s, const Subspace& ambient) const;

  Subspace generated_subalgebra(const std::vector<Vec>& gens) const;
  Subspace ideal_closure(const std::vector<Vec>& seed) const;

  Subspace center() const;
  Subspace centralizer(const Subspace& s) const;
  // elements of ambient moving s into itself; ambient defaults to L
  Subspace normalizer(const Subspace& s) const;
  Subspace normalizer_in(const Subspace& ambient, const Subspace& s) const;

  QuotientResult quotient(const Subspace& ideal) const;      // NotAnIdeal
  RestrictionResult restrict_to(const Subspace& s) const;    // NotASubalgebra

  bool operator==(const LieAlgebra& o) const;

 private:
  LieAlgebra(FieldSpec f, std::size_t n, std::vector<Vec> table,
             std::vector<std::string> names)
      : f_(f), n_(n), table_(std::move(table)), names_(std::move(names)) {}

  const Vec& entry(std::size_t i, std::size_t j) const;  // i < j

  FieldSpec f_;
  std::size_t n_;
  std::vector<Vec> table_;  // flattened i < j entries
  std::vector<std::string> names_;
};

struct QuotientResult {
  LieAlgebra algebra;
  // projection onto the quotient coordinates: maps a vector of L to its
  // image; ideal vectors map to zero
  Matrix projection;
  Subspace ideal;
};

struct RestrictionResult {
  LieAlgebra algebra;
  Matrix basis;  // rows are the subalgebra's canonical basis inside L
};

}  // namespace liesc
