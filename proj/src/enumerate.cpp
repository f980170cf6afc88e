#include "liesc/enumerate.hpp"

#include <algorithm>

#include "liesc/errors.hpp"

namespace liesc {

mpz_class gaussian_binomial(long q, std::size_t n, std::size_t k) {
  if (k > n) return 0;
  mpz_class num = 1, den = 1;
  const mpz_class Q(q);
  for (std::size_t i = 0; i < k; ++i) {
    mpz_class qa, qb;
    mpz_pow_ui(qa.get_mpz_t(), Q.get_mpz_t(), static_cast<unsigned long>(n - i));
    mpz_pow_ui(qb.get_mpz_t(), Q.get_mpz_t(), static_cast<unsigned long>(i + 1));
    num *= qa - 1;
    den *= qb - 1;
  }
  return num / den;  // exact
}

mpz_class galois_number(long q, std::size_t n) {
  mpz_class total = 0;
  for (std::size_t k = 0; k <= n; ++k) total += gaussian_binomial(q, n, k);
  return total;
}

static void require_gf(FieldSpec f, const char* what) {
  if (!f.is_gf())
    throw Unsupported(std::string(what) + " needs a finite field, not Q");
}

// all strictly increasing pivot-column tuples, lexicographic
static void pivot_sets(std::size_t n, std::size_t k,
                       std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur(k);
  if (k == 0) {
    out.push_back({});
    return;
  }
  // odometer over combinations
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (cur[i] + (k - i) < n) break;
      if (i == 0) return;
    }
    if (cur[i] + (k - i) >= n) return;
    ++cur[i];
    for (std::size_t j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
}

std::vector<Subspace> enumerate_subspaces(FieldSpec f, std::size_t n,
                                          const ScanCaps& caps) {
  require_gf(f, "subspace enumeration");
  const mpz_class estimate = galois_number(f.p, n);
  if (estimate > caps.max_subspaces)
    throw CapExceeded("max_subspaces", estimate.get_str());

  const long p = f.p;
  std::vector<Subspace> out;
  out.reserve(estimate.get_ui());
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<std::vector<std::size_t>> sets;
    pivot_sets(n, k, sets);
    for (const auto& piv : sets) {
      // free positions: (row r, col c) with c not a pivot and c > piv[r]
      std::vector<std::pair<std::size_t, std::size_t>> free_pos;
      std::vector<bool> is_piv(n, false);
      for (std::size_t c : piv) is_piv[c] = true;
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = piv[r] + 1; c < n; ++c)
          if (!is_piv[c]) free_pos.emplace_back(r, c);

      std::vector<long> digits(free_pos.size(), 0);
      for (;;) {
        Matrix m(f, k, n);
        for (std::size_t r = 0; r < k; ++r) m.at(r, piv[r]) = Scalar::one(f);
        for (std::size_t t = 0; t < free_pos.size(); ++t)
          m.at(free_pos[t].first, free_pos[t].second) = Scalar::of(f, digits[t]);
        out.push_back(Subspace::row_space(m));

        std::size_t t = digits.size();
        while (t > 0 && digits[t - 1] == p - 1) digits[--t] = 0;
        if (t == 0) break;
        ++digits[t - 1];
      }
    }
  }
  return out;
}

std::vector<Subspace> subspaces_of(const Subspace& ambient, const ScanCaps& caps) {
  const FieldSpec f = ambient.field();
  require_gf(f, "subspace enumeration");
  const std::size_t d = ambient.dim();
  std::vector<Subspace> out;
  for (const Subspace& small : enumerate_subspaces(f, d, caps)) {
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < small.dim(); ++r) {
      const Vec coords = small.basis_row(r);
      Vec v = vec_zero(f, ambient.ambient_dim());
      for (std::size_t i = 0; i < d; ++i)
        v = vec_add(v, vec_scale(coords[i], ambient.basis_row(i)));
      rows.push_back(v);
    }
    out.push_back(Subspace::span(f, ambient.ambient_dim(), rows));
  }
  return out;
}

std::vector<Vec> projective_points(FieldSpec f, std::size_t n, const ScanCaps& caps) {
  require_gf(f, "projective point enumeration");
  const long p = f.p;
  mpz_class count;
  mpz_ui_pow_ui(count.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(n));
  count = (count - 1) / (p - 1);
  if (count > caps.max_elements)
    throw CapExceeded("max_elements", count.get_str());

  // first nonzero coordinate is pinned to 1; later coordinates run freely in
  // lex order (earliest coordinate most significant)
  std::vector<Vec> out;
  out.reserve(count.get_ui());
  for (std::size_t lead = 0; lead < n; ++lead) {
    const std::size_t tail = n - lead - 1;
    std::vector<long> digits(tail, 0);
    for (;;) {
      Vec v = vec_zero(f, n);
      v[lead] = Scalar::one(f);
      for (std::size_t t = 0; t < tail; ++t)
        v[lead + 1 + t] = Scalar::of(f, digits[t]);
      out.push_back(v);
      std::size_t t = tail;
      while (t > 0 && digits[t - 1] == p - 1) digits[--t] = 0;
      if (t == 0) break;
      ++digits[t - 1];
    }
  }
  return out;
}

std::vector<Vec> projective_points_of(const Subspace& s, const ScanCaps& caps) {
  const FieldSpec f = s.field();
  std::vector<Vec> out;
  for (const Vec& coords : projective_points(f, s.dim(), caps)) {
    Vec v = vec_zero(f, s.ambient_dim());
    for (std::size_t i = 0; i < s.dim(); ++i)
      v = vec_add(v, vec_scale(coords[i], s.basis_row(i)));
    out.push_back(v);
  }
  return out;
}

std::vector<Subspace> enumerate_subalgebras(const LieAlgebra& L, const ScanCaps& caps) {
  std::vector<Subspace> out;
  for (Subspace& s : enumerate_subspaces(L.field(), L.dim(), caps))
    if (L.is_subalgebra(s)) out.push_back(std::move(s));
  return out;
}

std::vector<Subspace> maximal_subalgebras(const LieAlgebra& L, const ScanCaps& caps) {
  const std::vector<Subspace> all = enumerate_subalgebras(L, caps);
  std::vector<Subspace> out;
  for (const Subspace& s : all) {
    if (s.is_full()) continue;
    bool covered = false;
    for (const Subspace& t : all) {
      if (t.is_full() || t.dim() <= s.dim()) continue;
      if (t.contains(s)) {
        covered = true;
        break;
      }
    }
    if (!covered) out.push_back(s);
  }
  return out;
}

std::vector<Subspace> enumerate_ideals(const LieAlgebra& L, const ScanCaps& caps) {
  std::vector<Subspace> out;
  for (Subspace& s : enumerate_subspaces(L.field(), L.dim(), caps))
    if (L.is_ideal(s)) out.push_back(std::move(s));
  return out;
}

std::vector<Subspace> enumerate_ideals_of(const LieAlgebra& L, const Subspace& s,
                                          const ScanCaps& caps) {
  std::vector<Subspace> out;
  for (Subspace& cand : subspaces_of(s, caps))
    if (L.is_ideal_of(cand, s)) out.push_back(std::move(cand));
  return out;
}

}  // namespace liesc
