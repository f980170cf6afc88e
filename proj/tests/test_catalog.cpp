#include <doctest.h>

#include "liesc/catalog.hpp"
#include "liesc/errors.hpp"
#include "liesc/series.hpp"

using namespace liesc;

TEST_CASE("every default entry validates and rebuilds identically") {
  std::vector<CatalogEntry> entries = default_entries();
  CHECK(entries.size() >= 20);
  for (const CatalogEntry& e : entries) {
    CAPTURE(e.name);
    // create() already ran Jacobi validation; rebuild from the echoed params
    CatalogEntry again = build_entry(e.name, e.params);
    CHECK(again.algebra == e.algebra);
    CHECK(again.params == e.params);
  }
}

TEST_CASE("catalog names cover the builders") {
  const auto& names = catalog_names();
  for (const std::string& n : names) {
    CAPTURE(n);
    CatalogEntry e = build_entry(n, {});
    CHECK(e.algebra.dim() >= 3);
    CHECK(!e.expectations.empty());
  }
  CHECK_THROWS_AS(build_entry("nonsense", {}), BadParameter);
}

TEST_CASE("builder parameter validation") {
  FieldSpec q = FieldSpec::rationals();
  FieldSpec g3 = FieldSpec::gf(3);

  CHECK_THROWS_AS(gein_family1(Scalar::one(q), q), AlphaEqualsOne);
  CHECK_THROWS_AS(gein_family1(Scalar::of(g3, 1), q), FieldMismatch);
  CHECK_THROWS_AS(almost_abelian(1, q), BadParameter);
  CHECK_THROWS_AS(witt(4), BadP);
  CHECK_THROWS_AS(witt(3), BadP);
  CHECK_THROWS_AS(build_entry("thm31_typeI", {{"field", "Q"}}), CharMismatch);
  CHECK_THROWS_AS(build_entry("thm31_typeII", {{"alpha", "2"}}), BadParameter);
  CHECK_THROWS_AS(build_entry("heisenberg", {{"n", "4"}}), BadParameter);
}

TEST_CASE("stitzinger builder demands an irreducible action") {
  FieldSpec g3 = FieldSpec::gf(3);
  // t^2 + 1 is irreducible mod 3: builds fine
  LieAlgebra l = stitzinger_min_nonabelian(
      companion_matrix(g3, {Scalar::one(g3), Scalar::zero(g3)}), g3);
  CHECK(l.dim() == 3);
  CHECK(is_solvable(l));
  CHECK(!is_nilpotent(l));

  // t^2 - 1 splits: rejected, over GF(3) and over Q
  CHECK_THROWS_AS(
      stitzinger_min_nonabelian(
          companion_matrix(g3, {-Scalar::one(g3), Scalar::zero(g3)}), g3),
      ReducibleAction);
  FieldSpec q = FieldSpec::rationals();
  CHECK_THROWS_AS(
      stitzinger_min_nonabelian(
          companion_matrix(q, {-Scalar::one(q), Scalar::zero(q)}), q),
      ReducibleAction);
  // the identity action is reducible in dimension 2
  Matrix id(q, 2, 2);
  id.at(0, 0) = Scalar::one(q);
  id.at(1, 1) = Scalar::one(q);
  CHECK_THROWS_AS(stitzinger_min_nonabelian(id, q), ReducibleAction);
}

TEST_CASE("action irreducibility over Q beyond cubics is refused") {
  FieldSpec q = FieldSpec::rationals();
  // t^4 + 1: no rational root, but degree 4 root-free does not imply
  // irreducible, so the check refuses to answer
  Matrix m = companion_matrix(
      q, {Scalar::one(q), Scalar::zero(q), Scalar::zero(q), Scalar::zero(q)});
  CHECK_THROWS_AS(action_is_irreducible(m), Unsupported);
}

TEST_CASE("semidirect families have the advertised dimensions") {
  FieldSpec g3 = FieldSpec::gf(3);
  CHECK(thm31_typeI_default(3, Scalar::one(g3), g3).dim() == 3 + 1 + 1);
  CHECK(thm31_typeII_default(3, g3).dim() == 3 + 3);
  CHECK(ev_type_a(3, Scalar::one(g3), g3).dim() == 5);
  CHECK(ev_type_b(3, g3).dim() == 6);
  CHECK(witt(5).dim() == 5);

  FieldSpec g5 = FieldSpec::gf(5);
  CHECK(thm31_typeII_default(5, g5).dim() == 5 + 3);
  CHECK_THROWS_AS(thm31_typeII_default(5, g3), CharMismatch);
}

TEST_CASE("witt algebra brackets") {
  LieAlgebra w = witt(5);
  FieldSpec f = w.field();
  // slot k holds w_{k-1}; [w_i, w_j] = (j - i) w_{i+j} inside range
  // [w_{-1}, w_1] = 2 w_0
  Vec b = w.basis_bracket(0, 2);
  CHECK(b[1] == Scalar::of(f, 2));
  // [w_1, w_2] = w_3
  b = w.basis_bracket(2, 3);
  CHECK(b[4] == Scalar::one(f));
  // [w_2, w_3] = w_5 is out of range (max index p - 2 = 3)
  CHECK(w.basis_bracket(3, 4) == Vec(5, Scalar::zero(f)));
  CHECK(!is_solvable(w));
  CHECK(w.derived_subalgebra(w.full_space()) == w.full_space());
}

TEST_CASE("cross product algebra is sl2-like but not isomorphic over Q") {
  FieldSpec q = FieldSpec::rationals();
  LieAlgebra l = cross_product(q);
  CHECK(l.derived_subalgebra(l.full_space()) == l.full_space());
  CHECK(l.center() == l.zero_space());
  CHECK(!is_solvable(l));
}

TEST_CASE("thm31 type II default realizes the commutation relation") {
  FieldSpec g3 = FieldSpec::gf(3);
  LieAlgebra l = thm31_typeII_default(3, g3);
  // layout a0 a1 a2 c s x; [s, x] = c
  CHECK(l.basis_bracket(4, 5)[3] == Scalar::one(g3));
  // [a_i, c] = a_i since rho_c is the identity on A
  for (std::size_t i = 0; i < 3; ++i) {
    Vec b = l.basis_bracket(i, 3);
    CHECK(b[i] == Scalar::one(g3));
  }
  CHECK(is_solvable(l));
}

TEST_CASE("ev tables and gein families are solvable") {
  FieldSpec g3 = FieldSpec::gf(3);
  CHECK(is_solvable(ev_type_a(3, Scalar::one(g3), g3)));
  CHECK(is_solvable(ev_type_b(3, g3)));
  FieldSpec q = FieldSpec::rationals();
  CHECK(is_solvable(gein_family1(Scalar::of(q, 2), q)));
  CHECK(is_solvable(gein_family2(q)));
  CHECK(is_solvable(build_entry("stitzinger_min_nonabelian", {}).algebra));
}
