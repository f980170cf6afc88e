// Exact arithmetic and subspace algebra. Expected values here were fixed by
// hand or by the brute-force oracles in this file, never by the code under
// test.
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "liesc/matrix.hpp"
#include "liesc/rng.hpp"
#include "liesc/subspace.hpp"

using namespace liesc;

namespace {

Vec vec_of(FieldSpec f, std::vector<long> entries) {
  Vec v;
  for (long e : entries) v.push_back(Scalar::of(f, e));
  return v;
}

Matrix mat_of(FieldSpec f, std::size_t cols, std::vector<std::vector<long>> rows) {
  std::vector<Vec> vr;
  for (auto& r : rows) vr.push_back(vec_of(f, r));
  return Matrix::from_rows(f, cols, vr);
}

Matrix random_matrix(FieldSpec f, std::size_t r, std::size_t c, Rng& rng) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      long v = f.is_gf() ? rng.below(f.p) : rng.below(7) - 3;
      m.at(i, j) = Scalar::of(f, v);
    }
  return m;
}

// all p^n coordinate vectors, lexicographic
std::vector<Vec> all_vectors(FieldSpec f, std::size_t n) {
  std::vector<Vec> out;
  std::vector<long> idx(n, 0);
  while (true) {
    Vec v;
    for (long x : idx) v.push_back(Scalar::of(f, x));
    out.push_back(v);
    std::size_t k = n;
    while (k > 0 && ++idx[k - 1] == f.p) idx[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

}  // namespace

TEST_CASE("GF(p) scalar arithmetic") {
  FieldSpec f7 = FieldSpec::gf(7);
  CHECK(Scalar::of(f7, 3) * Scalar::of(f7, 5) == Scalar::one(f7));
  CHECK(Scalar::of(f7, 3).inverse() == Scalar::of(f7, 5));
  CHECK(Scalar::of(f7, -1) == Scalar::of(f7, 6));
  CHECK((Scalar::of(f7, 4) + Scalar::of(f7, 5)).residue() == 2);
  FieldSpec f2 = FieldSpec::gf(2);
  CHECK(-Scalar::one(f2) == Scalar::one(f2));
  CHECK_THROWS_AS(Scalar::of(f7, 1, 2), FieldMismatch);
  CHECK_THROWS_AS(Scalar::zero(f7).inverse(), DivisionByZero);
  CHECK_THROWS_AS((void)FieldSpec::gf(6), NonPrimeModulus);
  CHECK_THROWS_AS((void)FieldSpec::gf(1), NonPrimeModulus);
  CHECK_THROWS_AS(Scalar::one(f7) + Scalar::one(f2), FieldMismatch);
}

TEST_CASE("rational scalars canonicalize to lowest terms") {
  FieldSpec q = FieldSpec::rationals();
  CHECK(Scalar::of(q, 2, 4).str() == "1/2");
  CHECK(Scalar::of(q, 1, -3).str() == "-1/3");
  CHECK(Scalar::of(q, -6, -3).str() == "2");
  CHECK(Scalar::of(q, 0, 5) == Scalar::zero(q));
  CHECK((Scalar::of(q, 1, 3) + Scalar::of(q, 1, 6)).str() == "1/2");
  CHECK(Scalar::of(q, 1, 3).inverse().str() == "3");
}

TEST_CASE("rref golden values") {
  FieldSpec q = FieldSpec::rationals();
  Matrix id = Matrix::identity(q, 3);
  CHECK(id.rref() == id);
  CHECK(id.rank() == 3);

  Matrix m = mat_of(q, 2, {{2, 4}, {1, 2}});
  CHECK(m.rref() == mat_of(q, 2, {{1, 2}, {0, 0}}));
  CHECK(m.rank() == 1);

  FieldSpec f2 = FieldSpec::gf(2);
  Matrix m2 = mat_of(f2, 2, {{1, 1}, {1, 1}});
  CHECK(m2.rref() == mat_of(f2, 2, {{1, 1}, {0, 0}}));
  CHECK(m2.rank() == 1);
}

TEST_CASE("kernel golden values") {
  FieldSpec q = FieldSpec::rationals();
  Matrix z(q, 2, 2);
  CHECK(Subspace::row_space(z.kernel()) == Subspace::full(q, 2));

  FieldSpec f5 = FieldSpec::gf(5);
  CHECK(Matrix::identity(f5, 3).kernel().rows() == 0);

  Matrix n = mat_of(q, 2, {{0, 1}, {0, 0}});
  Subspace k = Subspace::row_space(n.kernel());
  CHECK(k.dim() == 1);
  CHECK(k.contains(vec_of(q, {1, 0})));
}

TEST_CASE("rank-nullity on random matrices") {
  for (FieldSpec f : {FieldSpec::gf(2), FieldSpec::gf(5), FieldSpec::rationals()}) {
    Rng rng(12345);
    for (int t = 0; t < 60; ++t) {
      std::size_t r = 1 + t % 5, c = 1 + (t / 5) % 5;
      Matrix m = random_matrix(f, r, c, rng);
      CHECK(m.rank() + m.kernel().rows() == c);
      // kernel rows really are killed by m
      Matrix k = m.kernel();
      for (std::size_t i = 0; i < k.rows(); ++i)
        CHECK(vec_is_zero(m.apply(k.row(i))));
      // rref is idempotent
      CHECK(m.rref() == m.rref().rref());
    }
  }
}

TEST_CASE("canonical basis is independent of the generating set") {
  for (FieldSpec f : {FieldSpec::gf(3), FieldSpec::rationals()}) {
    Rng rng(777);
    for (int t = 0; t < 40; ++t) {
      Matrix m = random_matrix(f, 3, 4, rng);
      Subspace s = Subspace::row_space(m);
      // random invertible row mixing preserves the row space
      Matrix g = random_matrix(f, 3, 3, rng);
      while (g.rank() < 3) g = random_matrix(f, 3, 3, rng);
      CHECK(Subspace::row_space(g * m) == s);
      // pivot columns of other rows are zeroed and pivots are 1
      for (std::size_t i = 0; i < s.dim(); ++i) {
        CHECK(s.basis().at(i, s.pivots()[i]).is_one());
        for (std::size_t i2 = 0; i2 < s.dim(); ++i2)
          if (i2 != i) CHECK(s.basis().at(i2, s.pivots()[i]).is_zero());
      }
    }
  }
}

TEST_CASE("sum and intersection golden values") {
  FieldSpec q = FieldSpec::rationals();
  Subspace a = Subspace::span(q, 2, {vec_of(q, {1, 0})});
  Subspace b = Subspace::span(q, 2, {vec_of(q, {0, 1})});
  CHECK(a.sum(b) == Subspace::full(q, 2));
  CHECK(a.intersect(b).is_zero());
  CHECK(a.sum(a) == a);
  CHECK(a.intersect(a) == a);
}

TEST_CASE("intersection over GF(3)^3 against exhaustive membership") {
  FieldSpec f3 = FieldSpec::gf(3);
  Subspace a = Subspace::span(f3, 3, {vec_of(f3, {1, 1, 0}), vec_of(f3, {0, 0, 1})});
  Subspace b = Subspace::span(f3, 3, {vec_of(f3, {1, 1, 1})});
  // oracle: scan all 27 vectors and span the common members
  std::vector<Vec> common;
  for (const Vec& v : all_vectors(f3, 3))
    if (a.contains(v) && b.contains(v)) common.push_back(v);
  Subspace oracle = Subspace::span(f3, 3, common);
  CHECK(a.intersect(b) == oracle);
  CHECK(a.intersect(b) == b);
}

TEST_CASE("zassenhaus intersection equals exhaustive intersection on GF(2)^4") {
  FieldSpec f2 = FieldSpec::gf(2);
  Rng rng(999);
  std::vector<Vec> all = all_vectors(f2, 4);
  for (int t = 0; t < 50; ++t) {
    Subspace a = Subspace::row_space(random_matrix(f2, 2 + t % 3, 4, rng));
    Subspace b = Subspace::row_space(random_matrix(f2, 2 + (t + 1) % 3, 4, rng));
    std::vector<Vec> common;
    for (const Vec& v : all)
      if (a.contains(v) && b.contains(v)) common.push_back(v);
    CHECK(a.intersect(b) == Subspace::span(f2, 4, common));
  }
}

TEST_CASE("dimension formula holds for random subspace pairs") {
  for (FieldSpec f : {FieldSpec::gf(2), FieldSpec::gf(3), FieldSpec::gf(5),
                      FieldSpec::rationals()}) {
    Rng rng(4242);
    for (int t = 0; t < 250; ++t) {
      std::size_t n = 1 + t % 5;
      Subspace a = Subspace::row_space(random_matrix(f, 1 + t % 4, n, rng));
      Subspace b = Subspace::row_space(random_matrix(f, 1 + (t + 2) % 4, n, rng));
      CHECK(a.sum(b).dim() + a.intersect(b).dim() == a.dim() + b.dim());
      CHECK(a.sum(b).contains(a));
      CHECK(a.contains(a.intersect(b)));
    }
  }
}

TEST_CASE("reduce, coordinates and reduction matrix agree") {
  FieldSpec q = FieldSpec::rationals();
  Subspace s = Subspace::span(q, 3, {vec_of(q, {1, 2, 0}), vec_of(q, {0, 0, 1})});
  Vec member = vec_of(q, {2, 4, 5});
  CHECK(s.contains(member));
  Vec coords = s.coordinates(member);
  CHECK(coords == vec_of(q, {2, 5}));
  Vec outside = vec_of(q, {0, 1, 0});
  CHECK(!s.contains(outside));
  Matrix r = s.reduction_matrix();
  CHECK(vec_is_zero(r.apply(member)));
  CHECK(r.apply(outside) == s.reduce(outside));
  CHECK(Subspace::row_space(r.kernel()) == s);
  // edge cases: zero and full spaces
  CHECK(Subspace::zero(q, 3).reduce(member) == member);
  CHECK(vec_is_zero(Subspace::full(q, 3).reduce(member)));
}

TEST_CASE("subspace ordering is a strict total order on distinct spaces") {
  FieldSpec f2 = FieldSpec::gf(2);
  std::vector<Subspace> lines;
  for (const Vec& v : all_vectors(f2, 3))
    if (!vec_is_zero(v)) {
      Subspace s = Subspace::span(f2, 3, {v});
      if (std::find(lines.begin(), lines.end(), s) == lines.end()) lines.push_back(s);
    }
  CHECK(lines.size() == 7);
  std::sort(lines.begin(), lines.end());
  for (std::size_t i = 1; i < lines.size(); ++i)
    CHECK(Subspace::compare(lines[i - 1], lines[i]) < 0);
}
