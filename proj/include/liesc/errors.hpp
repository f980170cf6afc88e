#pragma once
// Error types thrown across the library. Everything derives from Error so the
// CLI can map failures to one diagnostic line and an exit code.

#include <cstddef>
#include <stdexcept>
#include <string>

namespace liesc {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  // short stable tag used in machine-readable diagnostics, e.g. "jacobi"
  virtual std::string tag() const { return "error"; }
};

struct FieldMismatch : Error {
  explicit FieldMismatch(const std::string& what) : Error(what) {}
  std::string tag() const override { return "field_mismatch"; }
};

struct NonPrimeModulus : Error {
  explicit NonPrimeModulus(long p)
      : Error("modulus " + std::to_string(p) + " is not prime") {}
  std::string tag() const override { return "non_prime_modulus"; }
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero scalar") {}
  std::string tag() const override { return "division_by_zero"; }
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
  std::string tag() const override { return "dimension_mismatch"; }
};

// Jacobi defect on a basis triple, reported with the offending indices.
struct JacobiViolation : Error {
  std::size_t i, j, k;
  JacobiViolation(std::size_t i_, std::size_t j_, std::size_t k_,
                  const std::string& defect)
      : Error("Jacobi identity fails on basis triple (" + std::to_string(i_) +
              "," + std::to_string(j_) + "," + std::to_string(k_) +
              "), defect " + defect),
        i(i_), j(j_), k(k_) {}
  std::string tag() const override { return "jacobi"; }
};

struct NotASubalgebra : Error {
  explicit NotASubalgebra(const std::string& what) : Error(what) {}
  std::string tag() const override { return "not_a_subalgebra"; }
};

struct NotAnIdeal : Error {
  explicit NotAnIdeal(const std::string& what) : Error(what) {}
  std::string tag() const override { return "not_an_ideal"; }
};

struct NotTriangulable : Error {
  explicit NotTriangulable(const std::string& m) : Error(m) {}
  std::string tag() const override { return "not_triangulable"; }
};

struct NotNilpotent : Error {
  explicit NotNilpotent(const std::string& what) : Error(what) {}
  std::string tag() const override { return "not_nilpotent"; }
};

// Raised when an enumeration would exceed a configured cap; carries the
// estimate so callers can report how far over budget the request was.
struct CapExceeded : Error {
  std::string what_cap;
  std::string estimate;
  CapExceeded(const std::string& cap, const std::string& est)
      : Error("cap " + cap + " exceeded, estimate " + est),
        what_cap(cap), estimate(est) {}
  std::string tag() const override { return "cap_exceeded"; }
};

// Operation is not available for this field (typically Q where completeness
// would need an infinite enumeration).
struct Unsupported : Error {
  explicit Unsupported(const std::string& what) : Error(what) {}
  std::string tag() const override { return "unsupported"; }
};

struct ParseError : Error {
  std::size_t line;
  ParseError(std::size_t line_, const std::string& what)
      : Error("line " + std::to_string(line_) + ": " + what), line(line_) {}
  std::string tag() const override { return "parse"; }
};

struct UnknownProperty : Error {
  explicit UnknownProperty(const std::string& name)
      : Error("unknown property: " + name) {}
  std::string tag() const override { return "unknown_property"; }
};

struct ReducibleAction : Error {
  explicit ReducibleAction(const std::string& what) : Error(what) {}
  std::string tag() const override { return "reducible_action"; }
};

struct BadParameter : Error {
  explicit BadParameter(const std::string& what) : Error(what) {}
  std::string tag() const override { return "bad_parameter"; }
};

// catalog builders reject parameter combinations that break a construction
struct AlphaEqualsOne : BadParameter {
  AlphaEqualsOne() : BadParameter("alpha = 1 collapses the construction") {}
  std::string tag() const override { return "alpha_equals_one"; }
};

struct CharMismatch : BadParameter {
  explicit CharMismatch(const std::string& what) : BadParameter(what) {}
  std::string tag() const override { return "char_mismatch"; }
};

struct BadP : BadParameter {
  explicit BadP(const std::string& what) : BadParameter(what) {}
  std::string tag() const override { return "bad_p"; }
};

}  // namespace liesc
