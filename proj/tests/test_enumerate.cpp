#include <doctest.h>

#include <set>

#include "liesc/catalog.hpp"
#include "liesc/enumerate.hpp"
#include "liesc/errors.hpp"

using namespace liesc;

TEST_CASE("gaussian binomials and galois numbers") {
  CHECK(gaussian_binomial(2, 3, 1) == 7);
  CHECK(gaussian_binomial(2, 3, 2) == 7);
  CHECK(gaussian_binomial(2, 4, 2) == 35);
  CHECK(gaussian_binomial(3, 4, 2) == 130);
  CHECK(gaussian_binomial(2, 3, 0) == 1);
  CHECK(gaussian_binomial(2, 3, 3) == 1);
  // G_n(q) = total number of subspaces of F_q^n
  CHECK(galois_number(2, 3) == 16);
  CHECK(galois_number(2, 4) == 67);
  CHECK(galois_number(3, 3) == 28);
}

TEST_CASE("subspace enumeration matches the galois number") {
  FieldSpec f = FieldSpec::gf(2);
  ScanCaps caps;
  std::vector<Subspace> subs = enumerate_subspaces(f, 3, caps);
  CHECK(subs.size() == 16);
  // all distinct, all inside F_2^3
  std::set<std::string> seen;
  std::size_t zero_count = 0, full_count = 0;
  for (const Subspace& s : subs) {
    seen.insert(s.str());
    if (s.dim() == 0) ++zero_count;
    if (s.dim() == 3) ++full_count;
  }
  CHECK(seen.size() == 16);
  CHECK(zero_count == 1);
  CHECK(full_count == 1);

  std::vector<Subspace> g3 = enumerate_subspaces(FieldSpec::gf(3), 3, caps);
  CHECK(g3.size() == 28);
}

TEST_CASE("enumeration respects the subspace cap") {
  ScanCaps caps;
  caps.max_subspaces = 10;
  try {
    enumerate_subspaces(FieldSpec::gf(2), 3, caps);
    FAIL("expected CapExceeded");
  } catch (const CapExceeded& e) {
    CHECK(e.estimate == "16");
    CHECK(e.what_cap == "max_subspaces");
  }
  CHECK_THROWS_AS(enumerate_subspaces(FieldSpec::rationals(), 2, caps),
                  Unsupported);
}

TEST_CASE("projective points") {
  ScanCaps caps;
  std::vector<Vec> pts = projective_points(FieldSpec::gf(2), 3, caps);
  CHECK(pts.size() == 7);
  std::vector<Vec> pts3 = projective_points(FieldSpec::gf(3), 2, caps);
  CHECK(pts3.size() == 4);
  // each point is normalized: first nonzero coordinate is 1
  for (const Vec& v : pts3) {
    std::size_t lead = 0;
    while (lead < v.size() && v[lead].is_zero()) ++lead;
    REQUIRE(lead < v.size());
    CHECK(v[lead] == Scalar::one(FieldSpec::gf(3)));
  }
}

TEST_CASE("subspaces of a fixed ambient subspace") {
  FieldSpec f = FieldSpec::gf(2);
  ScanCaps caps;
  Vec a{Scalar::one(f), Scalar::zero(f), Scalar::zero(f)};
  Vec c{Scalar::zero(f), Scalar::zero(f), Scalar::one(f)};
  Subspace amb = Subspace::span(f, 3, {a, c});
  std::vector<Subspace> subs = subspaces_of(amb, caps);
  CHECK(subs.size() == 5);  // G_2(2)
  for (const Subspace& s : subs) CHECK(amb.contains(s));
}

TEST_CASE("heisenberg over GF(2): subalgebras and ideals") {
  FieldSpec f = FieldSpec::gf(2);
  LieAlgebra h = heisenberg(f);
  ScanCaps caps;

  std::vector<Subspace> ideals = enumerate_ideals(h, caps);
  // 0, Fc, the three 2-dim subspaces containing c = L^2, and L itself;
  // 1-dim ideals must be central so only Fc qualifies
  CHECK(ideals.size() == 6);
  for (const Subspace& s : ideals) {
    if (s.dim() == 1) CHECK(s == h.center());
    if (s.dim() == 2) CHECK(s.contains(h.center()));
  }

  std::vector<Subspace> subs = enumerate_subalgebras(h, caps);
  // every subspace containing L^2 = Fc is a subalgebra (8 of them: the
  // subspace lattice of L/Fc plus Fc itself appears inside that count);
  // 1-dim spans are always subalgebras (7); zero and nothing else
  // total: dim 0: 1, dim 1: 7, dim 2: 3 (those containing c), dim 3: 1
  CHECK(subs.size() == 12);

  std::vector<Subspace> maxi = maximal_subalgebras(h, caps);
  CHECK(maxi.size() == 3);
  for (const Subspace& s : maxi) {
    CHECK(s.dim() == 2);
    CHECK(s.contains(h.center()));
  }
}

TEST_CASE("sl2 over GF(3) has no proper nonzero ideals") {
  LieAlgebra l = sl2(FieldSpec::gf(3));
  ScanCaps caps;
  std::vector<Subspace> ideals = enumerate_ideals(l, caps);
  CHECK(ideals.size() == 2);
}

TEST_CASE("ideals inside a subalgebra") {
  FieldSpec f = FieldSpec::gf(2);
  LieAlgebra h = heisenberg(f);
  ScanCaps caps;
  Vec a{Scalar::one(f), Scalar::zero(f), Scalar::zero(f)};
  Vec c{Scalar::zero(f), Scalar::zero(f), Scalar::one(f)};
  Subspace s = Subspace::span(f, 3, {a, c});
  // s is abelian, so every subspace of s is an ideal of s
  std::vector<Subspace> ideals = enumerate_ideals_of(h, s, caps);
  CHECK(ideals.size() == 5);
}
