#include "liesc/matrix.hpp"

#include <algorithm>

namespace liesc {

Vec vec_zero(FieldSpec f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  Vec r;
  r.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] + b[i]);
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  Vec r;
  r.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] - b[i]);
  return r;
}

Vec vec_scale(const Scalar& c, const Vec& v) {
  Vec r;
  r.reserve(v.size());
  for (const Scalar& x : v) r.push_back(c * x);
  return r;
}

bool vec_is_zero(const Vec& v) {
  for (const Scalar& x : v)
    if (!x.is_zero()) return false;
  return true;
}

std::string vec_str(const Vec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i].str();
  }
  return s;
}

int vec_compare(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (int c = Scalar::compare(a[i], b[i])) return c;
  return 0;
}

Matrix::Matrix(FieldSpec f, std::size_t rows, std::size_t cols)
    : f_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(FieldSpec f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(FieldSpec f, std::size_t cols, const std::vector<Vec>& rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionMismatch("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom) {
  if (top.cols_ != bottom.cols_) throw DimensionMismatch("vstack column mismatch");
  Matrix m(top.f_, top.rows_ + bottom.rows_, top.cols_);
  for (std::size_t i = 0; i < top.rows_; ++i)
    for (std::size_t j = 0; j < top.cols_; ++j) m.at(i, j) = top.at(i, j);
  for (std::size_t i = 0; i < bottom.rows_; ++i)
    for (std::size_t j = 0; j < top.cols_; ++j) m.at(top.rows_ + i, j) = bottom.at(i, j);
  return m;
}

Matrix Matrix::vstack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) throw DimensionMismatch("vstack needs at least one block");
  Matrix m = blocks[0];
  for (std::size_t b = 1; b < blocks.size(); ++b) m = vstack(m, blocks[b]);
  return m;
}

Vec Matrix::row(std::size_t i) const {
  Vec r;
  r.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r.push_back(at(i, j));
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Matrix m(f_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& x = at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        m.at(i, j) = m.at(i, j) + x * o.at(k, j);
    }
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape");
  Matrix m(f_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix diff shape");
  Matrix m(f_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
  return m;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix apply shape");
  Vec r = vec_zero(f_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) r[i] = r[i] + at(i, j) * v[j];
  return r;
}

Matrix Matrix::pow(std::size_t k) const {
  if (rows_ != cols_) throw DimensionMismatch("pow of non-square matrix");
  Matrix result = identity(f_, rows_);
  Matrix base = *this;
  while (k) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

Matrix Matrix::transpose() const {
  Matrix m(f_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

bool Matrix::is_zero() const {
  for (const Scalar& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && f_ == o.f_ && a_ == o.a_;
}

Scalar Matrix::trace() const {
  if (rows_ != cols_) throw DimensionMismatch("trace of non-square matrix");
  Scalar t = Scalar::zero(f_);
  for (std::size_t i = 0; i < rows_; ++i) t = t + at(i, i);
  return t;
}

Matrix Matrix::rref(std::vector<std::size_t>* pivots) const {
  Matrix m = *this;
  if (pivots) pivots->clear();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t sel = r;
    while (sel < rows_ && m.at(sel, c).is_zero()) ++sel;
    if (sel == rows_) continue;
    if (sel != r)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(sel, j), m.at(r, j));
    Scalar inv = m.at(r, c).inverse();
    for (std::size_t j = c; j < cols_; ++j) m.at(r, j) = inv * m.at(r, j);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Scalar factor = m.at(i, c);
      for (std::size_t j = c; j < cols_; ++j)
        m.at(i, j) = m.at(i, j) - factor * m.at(r, j);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return m;
}

std::size_t Matrix::rank() const {
  std::vector<std::size_t> piv;
  rref(&piv);
  return piv.size();
}

Matrix Matrix::kernel() const {
  std::vector<std::size_t> piv;
  Matrix e = rref(&piv);
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : piv) is_pivot[c] = true;
  std::vector<Vec> rows;
  for (std::size_t fcol = 0; fcol < cols_; ++fcol) {
    if (is_pivot[fcol]) continue;
    Vec v = vec_zero(f_, cols_);
    v[fcol] = Scalar::one(f_);
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -e.at(i, fcol);
    rows.push_back(v);
  }
  return from_rows(f_, cols_, rows);
}

std::string Matrix::str() const {
  std::string s;
  for (std::size_t i = 0; i < rows_; ++i) {
    s += i ? ";" : "";
    s += vec_str(row(i));
  }
  return s;
}

std::vector<Scalar> char_poly(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("char_poly needs a square matrix");
  const FieldSpec f = m.field();
  const std::size_t n = m.rows();
  const Scalar zero = Scalar::zero(f), one = Scalar::one(f);

  // Berkowitz: fold in one principal row/column at a time. coeffs holds the
  // char poly of the leading r x r block, highest degree first.
  std::vector<Scalar> coeffs{one};
  for (std::size_t r = 1; r <= n; ++r) {
    // leading column of the Toeplitz factor:
    // (1, -a_rr, -R C, -R A C, ..., -R A^{r-2} C)
    std::vector<Scalar> v;
    v.push_back(one);
    v.push_back(zero - m.at(r - 1, r - 1));
    Vec w;
    for (std::size_t i = 0; i < r - 1; ++i) w.push_back(m.at(i, r - 1));
    for (std::size_t step = 0; step + 2 <= r; ++step) {
      Scalar s = zero;
      for (std::size_t i = 0; i < r - 1; ++i) s = s + m.at(r - 1, i) * w[i];
      v.push_back(zero - s);
      if (step + 3 <= r) {
        Vec next(r - 1, zero);
        for (std::size_t i = 0; i < r - 1; ++i)
          for (std::size_t j = 0; j < r - 1; ++j)
            next[i] = next[i] + m.at(i, j) * w[j];
        w = next;
      }
    }
    std::vector<Scalar> out(r + 1, zero);
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = 0; j < coeffs.size(); ++j)
        if (i + j <= r) out[i + j] = out[i + j] + v[i] * coeffs[j];
    coeffs = std::move(out);
  }
  std::reverse(coeffs.begin(), coeffs.end());
  return coeffs;
}

// divisors of |z|, ascending; bails out past trial bound
static std::vector<mpz_class> divisors(const mpz_class& z) {
  mpz_class a = abs(z);
  if (a == 0) throw DimensionMismatch("divisors of zero");
  if (a > mpz_class("1000000000000"))
    throw CapExceeded("rational_root_bound", a.get_str());
  std::vector<mpz_class> low, high;
  for (mpz_class i = 1; i * i <= a; ++i) {
    if (a % i == 0) {
      low.push_back(i);
      if (i * i != a) high.push_back(a / i);
    }
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

std::vector<Scalar> rational_roots(const std::vector<Scalar>& coeffs) {
  if (coeffs.empty()) throw DimensionMismatch("empty polynomial");
  const FieldSpec f = coeffs[0].field();
  if (f.is_gf()) throw FieldMismatch("rational_roots is defined over Q only");

  std::vector<Scalar> c = coeffs;
  while (!c.empty() && c.back().is_zero()) c.pop_back();
  if (c.empty()) throw DimensionMismatch("zero polynomial has every root");

  std::vector<Scalar> roots;
  std::size_t low = 0;
  while (low < c.size() && c[low].is_zero()) ++low;
  if (low > 0) roots.push_back(Scalar::zero(f));
  if (c.size() - low > 1) {
    // clear denominators of c[low..]
    mpz_class lcm = 1;
    for (std::size_t i = low; i < c.size(); ++i) {
      mpz_class den = c[i].rational().get_den();
      lcm = lcm / gcd(lcm, den) * den;
    }
    mpq_class s0 = c[low].rational() * mpq_class(lcm);
    mpq_class sn = c.back().rational() * mpq_class(lcm);
    const mpz_class b0 = s0.get_num();
    const mpz_class bn = sn.get_num();
    for (const mpz_class& num : divisors(b0))
      for (const mpz_class& den : divisors(bn)) {
        if (gcd(num, den) != 1) continue;
        for (int sign = 0; sign < 2; ++sign) {
          mpq_class cand(sign ? -num : num, den);
          cand.canonicalize();
          // Horner on the full polynomial
          Scalar x = Scalar::of_rational(cand);
          Scalar acc = Scalar::zero(f);
          for (std::size_t i = c.size(); i > 0; --i) acc = acc * x + c[i - 1];
          if (acc.is_zero()) roots.push_back(x);
        }
      }
  }
  std::sort(roots.begin(), roots.end(),
            [](const Scalar& a, const Scalar& b) { return Scalar::compare(a, b) < 0; });
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace liesc
