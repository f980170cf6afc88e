#include "liesc/triang.hpp"

#include <stdexcept>

#include "liesc/errors.hpp"
#include "liesc/series.hpp"

namespace liesc {

namespace {

Vec flatten(const Matrix& m) {
  Vec out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.at(i, j));
  return out;
}

bool ad_is_nilpotent(const LieAlgebra& l, const Vec& x) {
  return l.adjoint(x).pow(l.dim()).is_zero();
}

// smallest ideal of the subalgebra s containing seed
Subspace ideal_closure_in(const LieAlgebra& l, const Subspace& s, const Vec& seed) {
  Subspace cur = Subspace::span(l.field(), l.dim(), {seed});
  for (;;) {
    Subspace next = cur.sum(l.bracket_span(cur, s));
    if (next.dim() == cur.dim()) return cur;
    cur = next;
  }
}

}  // namespace

NilCertificate is_nil_on(const LieAlgebra& l, const Subspace& s) {
  if (!l.is_subalgebra(s)) throw NotASubalgebra("is_nil_on needs a subalgebra");
  NilCertificate cert;
  Subspace cur = l.full_space();
  cert.chain.push_back(cur);
  while (cur.dim() > 0) {
    Subspace next = l.bracket_span(cur, s);
    if (next.dim() == cur.dim()) {
      cert.nil = false;
      return cert;
    }
    cert.chain.push_back(next);
    cur = next;
  }
  cert.nil = true;
  return cert;
}

TriangResult is_triangulable_on(const LieAlgebra& l, const Subspace& s) {
  if (!l.is_subalgebra(s))
    throw NotASubalgebra("triangulability needs a subalgebra");
  Subspace der = l.derived_subalgebra(s);
  TriangResult r{false, is_nil_on(l, der)};
  r.triangulable = r.cert.nil;
  if (r.triangulable && !is_nilpotent_on(l, der))
    throw std::logic_error("triangulable subalgebra with non-nilpotent derived subalgebra");
  return r;
}

std::vector<Matrix> associative_closure(const std::vector<Matrix>& gens) {
  if (gens.empty()) return {};
  FieldSpec f = gens.front().field();
  std::size_t n = gens.front().rows();
  Subspace span = Subspace::zero(f, n * n);
  std::vector<Matrix> basis;
  std::vector<Matrix> queue;
  auto add = [&](const Matrix& m) {
    Vec v = flatten(m);
    if (span.contains(v)) return;
    span = span.sum(Subspace::span(f, n * n, {v}));
    basis.push_back(m);
    queue.push_back(m);
  };
  for (const Matrix& g : gens) add(g);
  while (!queue.empty()) {
    Matrix b = queue.back();
    queue.pop_back();
    for (const Matrix& g : gens) {
      add(g * b);
      add(b * g);
    }
  }
  return basis;
}

Subspace ad_nilpotent_subspace(const LieAlgebra& l, const Subspace& s) {
  FieldSpec f = l.field();
  if (f.is_gf())
    throw Unsupported("trace-radical computation needs characteristic 0");
  std::size_t n = l.dim();
  if (s.dim() == 0) return l.zero_space();

  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < s.dim(); ++i) ads.push_back(l.adjoint(s.basis_row(i)));
  std::vector<Matrix> alg = associative_closure(ads);

  // Dixon: over Q the radical of a matrix algebra is the trace-form kernel
  std::size_t m = alg.size();
  Matrix gram(f, m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) gram.at(i, j) = (alg[i] * alg[j]).trace();
  Matrix rad_coords = gram.kernel();

  std::vector<Vec> rad_gens;
  for (std::size_t r = 0; r < rad_coords.rows(); ++r) {
    Matrix acc(f, n, n);
    for (std::size_t i = 0; i < m; ++i) {
      if (rad_coords.at(r, i).is_zero()) continue;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          acc.at(a, b) = acc.at(a, b) + rad_coords.at(r, i) * alg[i].at(a, b);
    }
    rad_gens.push_back(flatten(acc));
  }
  Subspace radical = Subspace::span(f, n * n, rad_gens);

  // x ranges over s; condition: flatten(ad x) falls in the radical
  Matrix phi(f, n * n, s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    Vec col = flatten(l.adjoint(s.basis_row(i)));
    for (std::size_t r = 0; r < n * n; ++r) phi.at(r, i) = col[r];
  }
  Matrix cond = radical.reduction_matrix() * phi;
  Matrix coord_basis = cond.kernel();

  std::vector<Vec> gens;
  for (std::size_t r = 0; r < coord_basis.rows(); ++r) {
    Vec x = vec_zero(f, n);
    for (std::size_t i = 0; i < s.dim(); ++i)
      x = vec_add(x, vec_scale(coord_basis.at(r, i), s.basis_row(i)));
    gens.push_back(x);
  }
  Subspace out = Subspace::span(f, n, gens);
  for (std::size_t i = 0; i < out.dim(); ++i)
    if (!ad_is_nilpotent(l, out.basis_row(i)))
      throw std::logic_error("trace radical produced a non-nilpotent element");
  return out;
}

Subspace nil_ideal_exact(const LieAlgebra& l, const Subspace& s, const ScanCaps& caps) {
  if (!l.field().is_gf())
    throw Unsupported("exact nil(S) enumerates the ideal lattice, finite fields only");
  if (!l.is_subalgebra(s)) throw NotASubalgebra("nil(S) needs a subalgebra");
  Subspace acc = l.zero_space();
  for (const Subspace& sub : subspaces_of(s, caps)) {
    if (!l.is_ideal_of(sub, s)) continue;
    if (is_nil_on(l, sub).nil) acc = acc.sum(sub);
  }
  if (!is_nil_on(l, acc).nil)
    throw std::logic_error("sum of nil ideals is not nil");
  if (!l.is_ideal_of(acc, s))
    throw std::logic_error("sum of nil ideals is not an ideal");
  return acc;
}

Subspace nil_ideal_fast(const LieAlgebra& l, const Subspace& s, const ScanCaps& caps) {
  TriangResult tri = is_triangulable_on(l, s);
  if (!tri.triangulable)
    throw NotTriangulable("nil(S) fast path needs S triangulable on L");
  Subspace nil = l.zero_space();
  if (l.field().is_gf()) {
    for (const Vec& x : projective_points_of(s, caps))
      if (ad_is_nilpotent(l, x))
        nil = nil.sum(Subspace::span(l.field(), l.dim(), {x}));
    // the ad-nilpotent elements of a triangulable subalgebra form a subspace
    for (const Vec& x : projective_points_of(nil, caps))
      if (!ad_is_nilpotent(l, x))
        throw std::logic_error("ad-nilpotent set failed to be a subspace");
  } else {
    nil = ad_nilpotent_subspace(l, s);
  }
  if (!nil.contains(l.derived_subalgebra(s)))
    throw std::logic_error("nil(S) misses the derived subalgebra of a triangulable S");
  if (!l.is_ideal_of(nil, s))
    throw std::logic_error("nil(S) fast path produced a non-ideal");
  return nil;
}

Subspace nil_ideal(const LieAlgebra& l, const Subspace& s, const ScanCaps& caps) {
  if (l.field().is_gf()) return nil_ideal_exact(l, s, caps);
  if (is_triangulable_on(l, s).triangulable) return nil_ideal_fast(l, s, caps);
  throw Unsupported("nil(S) over Q is only computed for triangulable S");
}

Subspace nil_ideal_bound(const LieAlgebra& l, const Subspace& s) {
  if (!l.is_subalgebra(s)) throw NotASubalgebra("nil(S) needs a subalgebra");
  Subspace acc = l.zero_space();
  for (std::size_t i = 0; i < s.dim(); ++i) {
    Vec x = s.basis_row(i);
    if (!ad_is_nilpotent(l, x)) continue;
    Subspace closure = ideal_closure_in(l, s, x);
    if (is_nil_on(l, closure).nil) acc = acc.sum(closure);
  }
  if (!is_nil_on(l, acc).nil)
    throw std::logic_error("sum of nil ideals is not nil");
  return acc;
}

FittingResult fitting_decomposition(const LieAlgebra& l, const Subspace& h) {
  if (!is_nilpotent_on(l, h))
    throw NotNilpotent("Fitting decomposition needs a nilpotent subalgebra");
  std::size_t n = l.dim();
  Subspace null_part = l.full_space();
  Subspace one_part = l.zero_space();
  for (std::size_t i = 0; i < h.dim(); ++i) {
    Matrix p = l.adjoint(h.basis_row(i)).pow(n);
    null_part = null_part.intersect(Subspace::row_space(p.kernel()));
    one_part = one_part.sum(Subspace::row_space(p.transpose()));
  }
  bool ok = null_part.dim() + one_part.dim() == n &&
            null_part.intersect(one_part).is_zero() && null_part.contains(h);
  for (std::size_t i = 0; ok && i < h.dim(); ++i) {
    Vec x = h.basis_row(i);
    for (std::size_t j = 0; ok && j < null_part.dim(); ++j)
      ok = null_part.contains(l.bracket(null_part.basis_row(j), x));
    for (std::size_t j = 0; ok && j < one_part.dim(); ++j)
      ok = one_part.contains(l.bracket(one_part.basis_row(j), x));
  }
  if (!ok) throw std::logic_error("Fitting decomposition verification failed");
  return FittingResult{null_part, one_part};
}

std::vector<Vec> ad_nilpotent_elements(const LieAlgebra& l, const Subspace& s,
                                       const ScanCaps& caps) {
  FieldSpec f = l.field();
  if (!f.is_gf())
    throw Unsupported("elementwise ad-nilpotency scans need a finite field");
  mpz_class count;
  mpz_ui_pow_ui(count.get_mpz_t(), static_cast<unsigned long>(f.p),
                static_cast<unsigned long>(s.dim()));
  if (count > caps.max_elements)
    throw CapExceeded("max_elements", count.get_str());
  std::vector<Vec> out;
  for (const Vec& x : projective_points_of(s, caps))
    if (ad_is_nilpotent(l, x)) out.push_back(x);
  return out;
}

}  // namespace liesc
