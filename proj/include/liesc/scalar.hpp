#pragma once
// Exact field arithmetic: GF(p) for prime p, and Q with arbitrary-precision
// rationals (GMP). No floating point anywhere; equality is exact.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

#include "liesc/errors.hpp"

namespace liesc {

struct FieldSpec {
  long p = 0;  // 0 encodes Q, otherwise a prime modulus

  static FieldSpec rationals() { return FieldSpec{0}; }
  static FieldSpec gf(long p);  // throws NonPrimeModulus unless p is prime

  bool is_gf() const { return p != 0; }
  long characteristic() const { return p; }
  std::string str() const { return p ? "GF(" + std::to_string(p) + ")" : "Q"; }
  bool operator==(const FieldSpec&) const = default;
};

class Scalar {
 public:
  static Scalar zero(FieldSpec f);
  static Scalar one(FieldSpec f);
  // integer n, or the fraction n/d (d must be 1 over GF(p))
  static Scalar of(FieldSpec f, long n, long d = 1);
  static Scalar of_rational(const mpq_class& q);

  FieldSpec field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws DivisionByZero
  Scalar operator-() const;
  Scalar inverse() const;
  bool operator==(const Scalar& o) const;

  // canonical text: GF residue 0..p-1, or lowest-terms "n" / "n/d" with d > 0
  std::string str() const;

  // total order used only for deterministic output and container keys:
  // GF by residue, Q by value
  static int compare(const Scalar& a, const Scalar& b);

  long residue() const;            // GF only
  const mpq_class& rational() const;  // Q only

 private:
  struct GFElem {
    long p;
    long r;  // 0 <= r < p
  };
  std::variant<GFElem, mpq_class> v_;

  explicit Scalar(GFElem e) : v_(e) {}
  explicit Scalar(mpq_class q) : v_(std::move(q)) {}
  const GFElem* gf() const { return std::get_if<GFElem>(&v_); }
  void check_same_field(const Scalar& o) const;
};

bool is_prime(long p);

// "Q" or "GF(<p>)"; throws BadParameter / NonPrimeModulus
FieldSpec parse_field(const std::string& s);
// integer token, or "a/b" over Q; integers reduce mod p over GF(p); throws
// BadParameter on malformed input, FieldMismatch for fractions over GF(p)
Scalar parse_scalar(FieldSpec f, const std::string& token);

}  // namespace liesc
