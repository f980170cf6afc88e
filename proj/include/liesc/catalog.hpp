#pragma once
// Named algebra constructors with their expected-property tables. Every
// builder returns a validated LieAlgebra; rebuilding with equal parameters is
// deterministic. Action matrices use the right-module convention
// [a, b] = rho(b) * a throughout.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "liesc/lie_algebra.hpp"

namespace liesc {

LieAlgebra heisenberg(FieldSpec f);              // basis a,b,c; [a,b]=c
LieAlgebra sl2(FieldSpec f);                     // basis e,f,h
LieAlgebra abelian_algebra(FieldSpec f, std::size_t n);
LieAlgebra almost_abelian(std::size_t n, FieldSpec f);  // dim n >= 2
LieAlgebra gein_family1(const Scalar& alpha, FieldSpec f);  // AlphaEqualsOne
LieAlgebra gein_family2(FieldSpec f);
LieAlgebra stitzinger_min_nonabelian(const Matrix& action, FieldSpec f);

// semidirect sums A + B with A abelian, shaped like the two solvable
// phi-free minimal non-strongly-solvable types
struct TypeIData {
  Matrix x_on_m;               // action of x on M inside B
  std::vector<Matrix> rho_m;   // action of each M basis vector on A
  Matrix rho_x;                // action of x on A
};
LieAlgebra thm31_typeI(std::size_t a_dim, const TypeIData& d, FieldSpec f);
struct TypeIIData {
  Matrix rho_s;  // rho of the Heisenberg generators on A; rho(c) is derived
  Matrix rho_x;  // as the commutator [rho_x, rho_s]
};
LieAlgebra thm31_typeII(std::size_t a_dim, const TypeIIData& d, FieldSpec f);
// the concrete instances exposed on the command line: A = F^p with the
// cyclic-shift/diagonal action (type I, M one-dimensional) and the
// truncated-shift action (type II)
LieAlgebra thm31_typeI_default(long p, const Scalar& alpha, FieldSpec f);
LieAlgebra thm31_typeII_default(long p, FieldSpec f);

LieAlgebra ev_type_a(long p, const Scalar& alpha, FieldSpec f);  // dim p+2
LieAlgebra ev_type_b(long p, FieldSpec f);                       // dim p+3
LieAlgebra cross_product(FieldSpec f);
LieAlgebra witt(long p);  // truncated W(1;1) over GF(p), p >= 5

// companion matrix of t^m + c_{m-1} t^{m-1} + ... + c_0, low_coeffs = c_0..
Matrix companion_matrix(FieldSpec f, const std::vector<Scalar>& low_coeffs);
// no proper nonzero invariant subspace; complete over GF(p) by exhaustive
// subspace scan, over Q decided through rational roots for degree <= 3
bool action_is_irreducible(const Matrix& m, Subspace* witness = nullptr);

enum class Enforce { assert_eq, report_only };
struct Expectation {
  std::string property;
  bool expected = false;
  Enforce enforce = Enforce::report_only;
};

struct CatalogEntry {
  std::string name;
  std::map<std::string, std::string> params;
  LieAlgebra algebra;
  std::vector<Expectation> expectations;
};

const std::vector<std::string>& catalog_names();
// builds one entry from command-line style string parameters; unknown names
// and malformed values throw BadParameter, builders add their own errors
CatalogEntry build_entry(const std::string& name,
                         const std::map<std::string, std::string>& params);
// every catalog name instantiated over its default field grid
std::vector<CatalogEntry> default_entries();

}  // namespace liesc
