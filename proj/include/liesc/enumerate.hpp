#pragma once
// Exhaustive finite-field enumeration: subspaces by canonical echelon form,
// projective point lists, subalgebra/ideal lattices. Everything is emitted in
// a fixed deterministic order and guarded by counting estimates against caps.

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "liesc/lie_algebra.hpp"

namespace liesc {

struct ScanCaps {
  unsigned long max_subspaces = 500000;
  unsigned long max_pairs = 10000000;
  unsigned long max_elements = 1000000;
};

// number of k-dim subspaces of GF(q)^n
mpz_class gaussian_binomial(long q, std::size_t n, std::size_t k);
// total number of subspaces of GF(q)^n
mpz_class galois_number(long q, std::size_t n);

// all subspaces of GF(p)^n, ordered by dimension, then pivot columns, then
// free entries; the zero and full spaces are included
std::vector<Subspace> enumerate_subspaces(FieldSpec f, std::size_t n,
                                          const ScanCaps& caps);
// all subspaces of the given ambient space, as subspaces of the big space
std::vector<Subspace> subspaces_of(const Subspace& ambient, const ScanCaps& caps);

// nonzero vectors with first nonzero coordinate 1, one per line, lex order
std::vector<Vec> projective_points(FieldSpec f, std::size_t n, const ScanCaps& caps);
std::vector<Vec> projective_points_of(const Subspace& s, const ScanCaps& caps);

std::vector<Subspace> enumerate_subalgebras(const LieAlgebra& L, const ScanCaps& caps);
std::vector<Subspace> maximal_subalgebras(const LieAlgebra& L, const ScanCaps& caps);
std::vector<Subspace> enumerate_ideals(const LieAlgebra& L, const ScanCaps& caps);
// ideals of the subalgebra s, listed as subspaces of L
std::vector<Subspace> enumerate_ideals_of(const LieAlgebra& L, const Subspace& s,
                                          const ScanCaps& caps);

}  // namespace liesc
