#pragma once
// Nil-on-L tests, nil(S), triangulability and Fitting decompositions.
// "S is nil on L" means every element of S has nilpotent adjoint action on
// L; the certificate is the Engel chain L = V0 > V1 > ... with
// V_{k+1} = span{[v,s]}, which reaches 0 exactly in the nil case.

#include <cstddef>
#include <vector>

#include "liesc/enumerate.hpp"
#include "liesc/lie_algebra.hpp"

namespace liesc {

struct NilCertificate {
  bool nil;
  // descending chain starting at the full space; ends with 0 when nil,
  // otherwise ends with the nonzero subspace where the descent stalls
  std::vector<Subspace> chain;
};

// throws NotASubalgebra
NilCertificate is_nil_on(const LieAlgebra& l, const Subspace& s);

struct TriangResult {
  bool triangulable;
  NilCertificate cert;  // Engel chain for the derived subalgebra of s
};

// triangulable over the closure <=> every element of s^2 acts nilpotently,
// decided as is_nil_on(l, derived(s)) without leaving the base field
TriangResult is_triangulable_on(const LieAlgebra& l, const Subspace& s);

// basis of the (non-unital) associative matrix algebra generated by gens
std::vector<Matrix> associative_closure(const std::vector<Matrix>& gens);

// Over Q: the set {x in s : ad x nilpotent} computed as the preimage of the
// radical of the associative hull of ad(s), where the radical comes from the
// trace-form kernel. The set is a subspace exactly when s is triangulable on
// l or when s = L is solvable; each returned basis vector is re-verified
// with (ad x)^dim = 0. Unsupported over finite fields.
Subspace ad_nilpotent_subspace(const LieAlgebra& l, const Subspace& s);

// nil(S): unique maximal ideal of S that is nil on L.
// exact path, finite fields: sum of all nil ideals from the lattice of S
Subspace nil_ideal_exact(const LieAlgebra& l, const Subspace& s,
                         const ScanCaps& caps = {});
// fast path, any field, s triangulable on l only (else NotTriangulable):
// elementwise span over finite fields, trace-radical preimage over Q
Subspace nil_ideal_fast(const LieAlgebra& l, const Subspace& s,
                        const ScanCaps& caps = {});
// dispatch: finite field -> exact; Q and triangulable -> fast; else
// Unsupported (no complete algorithm for that case)
Subspace nil_ideal(const LieAlgebra& l, const Subspace& s,
                   const ScanCaps& caps = {});
// sound lower bound on nil(S) over any field: sum of the ideals of S
// generated by single nilpotent basis vectors that test nil on L
Subspace nil_ideal_bound(const LieAlgebra& l, const Subspace& s);

struct FittingResult {
  Subspace null_component;  // L0: joint generalized kernel of ad(h)
  Subspace one_component;   // L1: sum of the stable images
};

// relative to a nilpotent subalgebra h (else NotNilpotent); asserts
// L = L0 + L1 directly, h-invariance of both parts, and h inside L0
FittingResult fitting_decomposition(const LieAlgebra& l, const Subspace& h);

// all projective representatives x of s with (ad x)^dim = 0; finite fields
// only, capped by |field|^dim(s) <= max_elements
std::vector<Vec> ad_nilpotent_elements(const LieAlgebra& l, const Subspace& s,
                                       const ScanCaps& caps = {});

}  // namespace liesc
