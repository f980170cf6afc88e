#include <doctest.h>

#include "liesc/catalog.hpp"
#include "liesc/errors.hpp"
#include "liesc/lie_algebra.hpp"
#include "liesc/series.hpp"

using namespace liesc;

namespace {

Vec vec(FieldSpec f, std::vector<long> entries) {
  Vec v;
  for (long e : entries) v.push_back(Scalar::of(f, e));
  return v;
}

Subspace span_of(FieldSpec f, std::size_t n, std::vector<std::vector<long>> rows) {
  std::vector<Vec> vs;
  for (auto& r : rows) {
    REQUIRE(r.size() == n);
    vs.push_back(vec(f, r));
  }
  return Subspace::span(f, n, vs);
}

}  // namespace

TEST_CASE("heisenberg bracket and adjoint") {
  FieldSpec f = FieldSpec::rationals();
  LieAlgebra h = heisenberg(f);
  REQUIRE(h.dim() == 3);

  // [a,b] = c and anticommutativity
  CHECK(h.basis_bracket(0, 1) == vec(f, {0, 0, 1}));
  CHECK(h.basis_bracket(1, 0) == vec(f, {0, 0, -1}));
  CHECK(h.basis_bracket(0, 0) == vec(f, {0, 0, 0}));
  CHECK(h.basis_bracket(0, 2) == vec(f, {0, 0, 0}));

  // [2a + b, 3b] = 6c
  Vec x = vec(f, {2, 1, 0});
  Vec y = vec(f, {0, 3, 0});
  CHECK(h.bracket(x, y) == vec(f, {0, 0, 6}));
  CHECK(h.bracket(y, x) == vec(f, {0, 0, -6}));

  // ad a sends b to -c (column convention: column j is [e_j, a])
  Matrix ad_a = h.adjoint(vec(f, {1, 0, 0}));
  CHECK(ad_a.at(2, 1) == -Scalar::one(f));
  CHECK(ad_a.apply(vec(f, {0, 1, 0})) == vec(f, {0, 0, -1}));
}

TEST_CASE("heisenberg structural subspaces") {
  FieldSpec f = FieldSpec::rationals();
  LieAlgebra h = heisenberg(f);
  Subspace fc = span_of(f, 3, {{0, 0, 1}});

  CHECK(h.center() == fc);
  CHECK(h.derived_subalgebra(h.full_space()) == fc);
  CHECK(h.centralizer(h.full_space()) == fc);
  // [a, b] = c escapes Fa, so b is not in the normalizer of Fa
  CHECK(h.normalizer(span_of(f, 3, {{1, 0, 0}})) ==
        span_of(f, 3, {{1, 0, 0}, {0, 0, 1}}));

  // Fa is a subalgebra but not an ideal; its ideal closure adds c
  Subspace fa = span_of(f, 3, {{1, 0, 0}});
  CHECK(h.is_subalgebra(fa));
  CHECK(!h.is_ideal(fa));
  CHECK(h.ideal_closure({vec(f, {1, 0, 0})}) == span_of(f, 3, {{1, 0, 0}, {0, 0, 1}}));

  // a and b together generate everything
  CHECK(h.generated_subalgebra({vec(f, {1, 0, 0}), vec(f, {0, 1, 0})}) ==
        h.full_space());

  SeriesChain ds = derived_series(h, h.full_space());
  REQUIRE(ds.terms.size() == 3);
  CHECK(ds.terms[0].dim() == 3);
  CHECK(ds.terms[1].dim() == 1);
  CHECK(ds.terms[2].dim() == 0);
  CHECK(ds.reached_zero);

  SeriesChain lcs = lower_central_series(h, h.full_space());
  CHECK(lcs.reached_zero);
  CHECK(is_nilpotent(h));
  CHECK(is_solvable(h));
  CHECK(!is_abelian(h));
}

TEST_CASE("sl2 over Q") {
  FieldSpec f = FieldSpec::rationals();
  LieAlgebra l = sl2(f);

  // basis order e, f, h with [e,f] = h, [h,e] = 2e, [h,f] = -2f
  CHECK(l.basis_bracket(0, 1) == vec(f, {0, 0, 1}));
  CHECK(l.basis_bracket(2, 0) == vec(f, {2, 0, 0}));
  CHECK(l.basis_bracket(2, 1) == vec(f, {0, -2, 0}));

  CHECK(l.center() == l.zero_space());
  CHECK(l.derived_subalgebra(l.full_space()) == l.full_space());
  CHECK(!is_solvable(l));
  CHECK(!is_nilpotent(l));

  Subspace fe = span_of(f, 3, {{1, 0, 0}});
  CHECK(l.centralizer(fe) == fe);
  CHECK(l.normalizer(fe) == span_of(f, 3, {{1, 0, 0}, {0, 0, 1}}));
  CHECK(l.ideal_closure({vec(f, {1, 0, 0})}) == l.full_space());
}

TEST_CASE("sl2 over GF(2) degenerates to a nilpotent algebra") {
  FieldSpec f = FieldSpec::gf(2);
  LieAlgebra l = sl2(f);
  // 2e and 2f vanish, leaving only [e,f] = h with h central
  CHECK(l.center() == span_of(f, 3, {{0, 0, 1}}));
  CHECK(l.derived_subalgebra(l.full_space()) == span_of(f, 3, {{0, 0, 1}}));
  CHECK(is_nilpotent(l));
}

TEST_CASE("jacobi violation is rejected with the offending triple") {
  FieldSpec f = FieldSpec::rationals();
  StructureTable t(f, 3);
  // [e1,e2] = e1 and [e1,e3] = e3 break Jacobi on (e1,e2,e3)
  t.set(0, 1, 0, Scalar::one(f));
  t.set(0, 2, 2, Scalar::one(f));
  try {
    LieAlgebra::create(t);
    FAIL("expected JacobiViolation");
  } catch (const JacobiViolation& e) {
    CHECK(e.i == 0);
    CHECK(e.j == 1);
    CHECK(e.k == 2);
  }
}

TEST_CASE("field mismatch in table entries is rejected") {
  StructureTable t(FieldSpec::gf(3), 2);
  CHECK_THROWS_AS(t.set(0, 1, 0, Scalar::of(FieldSpec::rationals(), 1)),
                  FieldMismatch);
}

TEST_CASE("quotient of heisenberg by its center") {
  FieldSpec f = FieldSpec::rationals();
  LieAlgebra h = heisenberg(f);
  QuotientResult q = h.quotient(h.center());
  CHECK(q.algebra.dim() == 2);
  CHECK(is_abelian(q.algebra));
  CHECK(q.algebra.names() == std::vector<std::string>{"a", "b"});
  // the projection kills exactly the ideal
  CHECK(q.projection.apply(vec(f, {0, 0, 5})) == vec(f, {0, 0}));
  CHECK(q.projection.apply(vec(f, {1, 2, 3})) == vec(f, {1, 2}));

  CHECK_THROWS_AS(h.quotient(span_of(f, 3, {{1, 0, 0}})), NotAnIdeal);
}

TEST_CASE("restriction to a subalgebra") {
  FieldSpec f = FieldSpec::rationals();
  LieAlgebra l = sl2(f);
  // span{e, h} is a 2-dim solvable subalgebra
  Subspace s = span_of(f, 3, {{1, 0, 0}, {0, 0, 1}});
  RestrictionResult r = l.restrict_to(s);
  CHECK(r.algebra.dim() == 2);
  CHECK(is_solvable(r.algebra));
  CHECK(!is_abelian(r.algebra));
  // restriction brackets match ambient brackets through the basis rows
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Vec inside = r.algebra.basis_bracket(i, j);
      Vec outside = l.bracket(r.basis.row(i), r.basis.row(j));
      CHECK(r.basis.transpose().apply(inside) == outside);
    }

  // span{e, f} is not closed under the bracket
  CHECK_THROWS_AS(l.restrict_to(span_of(f, 3, {{1, 0, 0}, {0, 1, 0}})),
                  NotASubalgebra);
}

TEST_CASE("series on a subalgebra stays inside it") {
  FieldSpec f = FieldSpec::rationals();
  LieAlgebra l = sl2(f);
  Subspace s = Subspace::span(f, 3, {vec(f, {1, 0, 0}), vec(f, {0, 0, 1})});
  CHECK(is_solvable_on(l, s));
  CHECK(is_strongly_solvable_on(l, s));
  CHECK(!is_nilpotent_on(l, s));
  CHECK(is_abelian_on(l, Subspace::span(f, 3, {vec(f, {1, 0, 0})})));
}

TEST_CASE("derived and lower central series differ on the almost abelian algebra") {
  FieldSpec f = FieldSpec::rationals();
  LieAlgebra l = almost_abelian(3, f);
  SeriesChain ds = derived_series(l, l.full_space());
  CHECK(ds.reached_zero);
  CHECK(ds.terms[1].dim() == 2);
  SeriesChain lcs = lower_central_series(l, l.full_space());
  CHECK(!lcs.reached_zero);
  CHECK(lcs.last().dim() == 2);
  CHECK(is_solvable(l));
  CHECK(!is_nilpotent(l));
}

TEST_CASE("equality distinguishes names and constants") {
  FieldSpec f = FieldSpec::rationals();
  LieAlgebra a = heisenberg(f);
  LieAlgebra b = heisenberg(f);
  CHECK(a == b);
  CHECK(!(a == abelian_algebra(f, 3)));
  CHECK(!(a == heisenberg(FieldSpec::gf(5))));
}
