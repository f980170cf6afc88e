#include "liesc/scalar.hpp"

namespace liesc {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::gf(long p) {
  if (!is_prime(p)) throw NonPrimeModulus(p);
  return FieldSpec{p};
}

namespace {
long mod(long x, long p) {
  long r = x % p;
  return r < 0 ? r + p : r;
}

// extended Euclid; p prime and 0 < r < p
long mod_inverse(long r, long p) {
  long a = r, b = p, x0 = 1, x1 = 0;
  while (b) {
    long q = a / b;
    a -= q * b; std::swap(a, b);
    x0 -= q * x1; std::swap(x0, x1);
  }
  return mod(x0, p);
}
}  // namespace

Scalar Scalar::zero(FieldSpec f) {
  if (f.is_gf()) return Scalar(GFElem{f.p, 0});
  return Scalar(mpq_class(0));
}

Scalar Scalar::one(FieldSpec f) {
  if (f.is_gf()) return Scalar(GFElem{f.p, 1 % f.p});
  return Scalar(mpq_class(1));
}

Scalar Scalar::of(FieldSpec f, long n, long d) {
  if (d == 0) throw DivisionByZero();
  if (f.is_gf()) {
    if (d != 1 && d != -1)
      throw FieldMismatch("fractional coefficient over " + f.str());
    return Scalar(GFElem{f.p, mod(d == 1 ? n : -n, f.p)});
  }
  mpq_class q(n, d);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::of_rational(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return Scalar(c);
}

FieldSpec Scalar::field() const {
  if (const GFElem* e = gf()) return FieldSpec{e->p};
  return FieldSpec::rationals();
}

bool Scalar::is_zero() const {
  if (const GFElem* e = gf()) return e->r == 0;
  return std::get<mpq_class>(v_) == 0;
}

bool Scalar::is_one() const {
  if (const GFElem* e = gf()) return e->r == 1 % e->p;
  return std::get<mpq_class>(v_) == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (!(field() == o.field()))
    throw FieldMismatch("mixed scalars: " + field().str() + " vs " + o.field().str());
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  if (const GFElem* e = gf()) return Scalar(GFElem{e->p, mod(e->r + o.gf()->r, e->p)});
  return Scalar(mpq_class(std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_)));
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  if (const GFElem* e = gf()) return Scalar(GFElem{e->p, mod(e->r - o.gf()->r, e->p)});
  return Scalar(mpq_class(std::get<mpq_class>(v_) - std::get<mpq_class>(o.v_)));
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  if (const GFElem* e = gf()) return Scalar(GFElem{e->p, mod(e->r * o.gf()->r, e->p)});
  return Scalar(mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_)));
}

Scalar Scalar::operator-() const {
  if (const GFElem* e = gf()) return Scalar(GFElem{e->p, mod(-e->r, e->p)});
  return Scalar(mpq_class(-std::get<mpq_class>(v_)));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (const GFElem* e = gf()) return Scalar(GFElem{e->p, mod_inverse(e->r, e->p)});
  return Scalar(mpq_class(1 / std::get<mpq_class>(v_)));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  if (!(field() == o.field())) return false;
  if (const GFElem* e = gf()) return e->r == o.gf()->r;
  return std::get<mpq_class>(v_) == std::get<mpq_class>(o.v_);
}

std::string Scalar::str() const {
  if (const GFElem* e = gf()) return std::to_string(e->r);
  return std::get<mpq_class>(v_).get_str();
}

int Scalar::compare(const Scalar& a, const Scalar& b) {
  if (const GFElem* e = a.gf()) {
    long d = e->r - b.gf()->r;
    return d < 0 ? -1 : d > 0 ? 1 : 0;
  }
  return cmp(std::get<mpq_class>(a.v_), std::get<mpq_class>(b.v_));
}

long Scalar::residue() const { return gf()->r; }

const mpq_class& Scalar::rational() const { return std::get<mpq_class>(v_); }

FieldSpec parse_field(const std::string& s) {
  if (s == "Q") return FieldSpec::rationals();
  if (s.rfind("GF(", 0) == 0 && s.size() > 4 && s.back() == ')') {
    const std::string num = s.substr(3, s.size() - 4);
    if (num.find_first_not_of("0123456789") != std::string::npos)
      throw BadParameter("bad field: " + s);
    try {
      return FieldSpec::gf(std::stol(num));
    } catch (const std::out_of_range&) {
      throw BadParameter("modulus out of range: " + s);
    }
  }
  throw BadParameter("bad field: " + s + " (expected Q or GF(p))");
}

Scalar parse_scalar(FieldSpec f, const std::string& token) {
  if (token.empty()) throw BadParameter("empty coefficient");
  // reject forms GMP would silently accept (whitespace, hex prefixes)
  if (token.find_first_not_of("-/0123456789") != std::string::npos)
    throw BadParameter("bad coefficient: " + token);
  const auto slash = token.find('/');
  try {
    if (slash == std::string::npos) {
      mpz_class n(token);
      if (!f.is_gf()) return Scalar::of_rational(mpq_class(n));
      mpz_class r = n % f.p;
      if (r < 0) r += f.p;
      return Scalar::of(f, r.get_si());
    }
    if (f.is_gf())
      throw FieldMismatch("fractions are not allowed over " + f.str() +
                          ", use integer residues");
    mpq_class q(token);
    if (q.get_den() == 0) throw BadParameter("zero denominator: " + token);
    q.canonicalize();
    return Scalar::of_rational(q);
  } catch (const std::invalid_argument&) {
    throw BadParameter("bad coefficient: " + token);
  }
}

}  // namespace liesc
