#include "thp/linalg.hpp"

#include <boost/multiprecision/miller_rabin.hpp>
#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace thp {

namespace {

void require_same_field(const FieldSpec& a, const FieldSpec& b,
                        const char* what) {
  if (a != b)
    throw DomainError(std::string(what) + ": operands over different fields (" +
                      a.to_string() + " vs " + b.to_string() + ")");
}

void require(bool cond, const char* msg) {
  if (!cond) throw DomainError(msg);
}

}  // namespace

// ---------------------------------------------------------------------------
// Matrix
// ---------------------------------------------------------------------------

Matrix::Matrix(std::size_t rows, std::size_t cols, const FieldSpec& f)
    : rows_(rows), cols_(cols), field_(f), e_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(std::size_t n, const FieldSpec& f) {
  Matrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::diagonal(const std::vector<Scalar>& entries) {
  require(!entries.empty(), "diagonal: empty entry list");
  Matrix m(entries.size(), entries.size(), entries.front().field());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    require_same_field(m.field(), entries[i].field(), "diagonal");
    m.at(i, i) = entries[i];
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  require(!rows.empty() && !rows.front().empty(), "from_rows: empty matrix");
  Matrix m(rows.size(), rows.front().size(), rows.front().front().field());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == m.cols(), "from_rows: ragged row list");
    for (std::size_t j = 0; j < m.cols(); ++j) {
      require_same_field(m.field(), rows[i][j].field(), "from_rows");
      m.at(i, j) = rows[i][j];
    }
  }
  return m;
}

Scalar& Matrix::at(std::size_t i, std::size_t j) {
  require(i < rows_ && j < cols_, "matrix index out of range");
  return e_[i * cols_ + j];
}

const Scalar& Matrix::at(std::size_t i, std::size_t j) const {
  require(i < rows_ && j < cols_, "matrix index out of range");
  return e_[i * cols_ + j];
}

bool Matrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  require_same_field(field_, rhs.field_, "matrix addition");
  require(rows_ == rhs.rows_ && cols_ == rhs.cols_,
          "matrix addition: shape mismatch");
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += rhs.e_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  require_same_field(field_, rhs.field_, "matrix subtraction");
  require(rows_ == rhs.rows_ && cols_ == rhs.cols_,
          "matrix subtraction: shape mismatch");
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= rhs.e_[k];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a.field_, b.field_, "matrix multiplication");
  require(a.cols_ == b.rows_, "matrix multiplication: shape mismatch");
  Matrix c(a.rows_, b.cols_, a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

Matrix operator*(const Scalar& c, const Matrix& m) {
  require_same_field(c.field(), m.field_, "scalar-matrix multiplication");
  Matrix out = m;
  for (Scalar& s : out.e_) s *= c;
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  require_same_field(a.field_, b.field_, "matrix comparison");
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  return a.e_ == b.e_;
}

// ---------------------------------------------------------------------------
// Vector
// ---------------------------------------------------------------------------

Vector::Vector(std::size_t dim, const FieldSpec& f)
    : field_(f), e_(dim, Scalar::zero(f)) {}

Vector Vector::unit(std::size_t dim, std::size_t i, const FieldSpec& f) {
  Vector v(dim, f);
  v.at(i) = Scalar::one(f);
  return v;
}

Scalar& Vector::at(std::size_t i) {
  require(i < e_.size(), "vector index out of range");
  return e_[i];
}

const Scalar& Vector::at(std::size_t i) const {
  require(i < e_.size(), "vector index out of range");
  return e_[i];
}

bool Vector::is_zero() const {
  return std::all_of(e_.begin(), e_.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

Vector& Vector::operator+=(const Vector& rhs) {
  require_same_field(field_, rhs.field_, "vector addition");
  require(dim() == rhs.dim(), "vector addition: dimension mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += rhs.e_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& rhs) {
  require_same_field(field_, rhs.field_, "vector subtraction");
  require(dim() == rhs.dim(), "vector subtraction: dimension mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= rhs.e_[i];
  return *this;
}

Vector operator*(const Scalar& c, const Vector& v) {
  require_same_field(c.field(), v.field_, "scalar-vector multiplication");
  Vector out = v;
  for (Scalar& s : out.e_) s *= c;
  return out;
}

Vector operator*(const Matrix& m, const Vector& v) {
  require_same_field(m.field(), v.field_, "matrix-vector multiplication");
  require(m.cols() == v.dim(), "matrix-vector multiplication: shape mismatch");
  Vector out(m.rows(), v.field_);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out.at(i) += m.at(i, j) * v.at(j);
  return out;
}

bool operator==(const Vector& a, const Vector& b) {
  require_same_field(a.field_, b.field_, "vector comparison");
  if (a.dim() != b.dim()) return false;
  return a.e_ == b.e_;
}

Matrix hstack(const Matrix& m, const Matrix& n) {
  require_same_field(m.field(), n.field(), "hstack");
  require(m.rows() == n.rows(), "hstack: row count mismatch");
  Matrix out(m.rows(), m.cols() + n.cols(), m.field());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j);
    for (std::size_t j = 0; j < n.cols(); ++j)
      out.at(i, m.cols() + j) = n.at(i, j);
  }
  return out;
}

Vector column(const Matrix& m, std::size_t j) {
  require(j < m.cols(), "column index out of range");
  Vector v(m.rows(), m.field());
  for (std::size_t i = 0; i < m.rows(); ++i) v.at(i) = m.at(i, j);
  return v;
}

Matrix from_columns(const std::vector<Vector>& cols) {
  require(!cols.empty(), "from_columns: empty column list");
  Matrix m(cols.front().dim(), cols.size(), cols.front().field());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    require(cols[j].dim() == m.rows(), "from_columns: dimension mismatch");
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, j) = cols[j].at(i);
  }
  return m;
}

Scalar trace(const Matrix& m) {
  require(m.is_square(), "trace of a non-square matrix");
  Scalar t = Scalar::zero(m.field());
  for (std::size_t i = 0; i < m.rows(); ++i) t += m.at(i, i);
  return t;
}

// ---------------------------------------------------------------------------
// Elimination: reduced row echelon form, rank, inverse
// ---------------------------------------------------------------------------

namespace {

// In-place reduced row echelon form with deterministic (first nonzero)
// pivoting; returns the pivot column indices.
std::vector<std::size_t> rref(Matrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a.at(p, col).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < a.cols(); ++j)
        std::swap(a.at(p, j), a.at(row, j));
    const Scalar inv = a.at(row, col).inverse();
    for (std::size_t j = col; j < a.cols(); ++j) a.at(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a.at(i, col).is_zero()) continue;
      const Scalar f = a.at(i, col);
      for (std::size_t j = col; j < a.cols(); ++j)
        a.at(i, j) -= f * a.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Pivot preference for exact elimination: fewer bits in the rational, i.e.
// structurally simpler entries first.  Over a prime field all nonzero
// entries weigh the same, so the first one found wins.
std::size_t pivot_weight(const Scalar& s) {
  if (s.field().is_prime()) return 0;
  const Rational& q = s.rational_value();
  return msb(abs(numerator(q)) + 1) + msb(denominator(q) + 1);
}

}  // namespace

std::size_t rank(const Matrix& m) {
  Matrix copy = m;
  return rref(copy).size();
}

std::optional<Matrix> try_inverse(const Matrix& m) {
  require(m.is_square(), "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix a = m;
  Matrix inv = Matrix::identity(n, m.field());
  // Column swaps permute the unknowns; col_of[k] remembers which original
  // column sits at position k so the rows of the result can be unscrambled.
  std::vector<std::size_t> col_of(n);
  for (std::size_t k = 0; k < n; ++k) col_of[k] = k;

  for (std::size_t step = 0; step < n; ++step) {
    // Full pivoting over the untouched block, preferring simple entries.
    std::size_t best_i = n, best_j = n, best_w = 0;
    for (std::size_t i = step; i < n; ++i)
      for (std::size_t j = step; j < n; ++j) {
        if (a.at(i, j).is_zero()) continue;
        const std::size_t w = pivot_weight(a.at(i, j));
        if (best_i == n || w < best_w) {
          best_i = i;
          best_j = j;
          best_w = w;
        }
      }
    if (best_i == n) return std::nullopt;  // singular
    if (best_i != step)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.at(best_i, j), a.at(step, j));
        std::swap(inv.at(best_i, j), inv.at(step, j));
      }
    if (best_j != step) {
      for (std::size_t i = 0; i < n; ++i) std::swap(a.at(i, best_j), a.at(i, step));
      std::swap(col_of[best_j], col_of[step]);
    }
    const Scalar pivot_inv = a.at(step, step).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a.at(step, j) *= pivot_inv;
      inv.at(step, j) *= pivot_inv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == step || a.at(i, step).is_zero()) continue;
      const Scalar f = a.at(i, step);
      for (std::size_t j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(step, j);
        inv.at(i, j) -= f * inv.at(step, j);
      }
    }
  }
  // Solved (m with permuted columns) * x = I; undo the column permutation.
  Matrix out(n, n, m.field());
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) out.at(col_of[k], j) = inv.at(k, j);
  return out;
}

Matrix inverse(const Matrix& m) {
  auto inv = try_inverse(m);
  if (!inv) throw DomainError("matrix is singular");
  return *inv;
}

// ---------------------------------------------------------------------------
// Polynomial
// ---------------------------------------------------------------------------

Polynomial::Polynomial(std::vector<Scalar> coefficients, const FieldSpec& f)
    : field_(f), c_(std::move(coefficients)) {
  for (const Scalar& s : c_) require_same_field(field_, s.field(), "polynomial");
  trim();
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::constant(const Scalar& c) {
  return Polynomial({c}, c.field());
}

Polynomial Polynomial::x(const FieldSpec& f) {
  return Polynomial({Scalar::zero(f), Scalar::one(f)}, f);
}

Scalar Polynomial::coefficient(std::size_t k) const {
  return k < c_.size() ? c_[k] : Scalar::zero(field_);
}

Scalar Polynomial::leading_coefficient() const {
  if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
  return c_.back();
}

Scalar Polynomial::operator()(const Scalar& x) const {
  require_same_field(field_, x.field(), "polynomial evaluation");
  Scalar acc = Scalar::zero(field_);
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

Matrix Polynomial::operator()(const Matrix& m) const {
  require_same_field(field_, m.field(), "polynomial evaluation");
  require(m.is_square(), "polynomial evaluation at a non-square matrix");
  Matrix acc(m.rows(), m.rows(), field_);
  const Matrix id = Matrix::identity(m.rows(), field_);
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * m + c_[k] * id;
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  require_same_field(field_, rhs.field_, "polynomial addition");
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), Scalar::zero(field_));
  for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] += rhs.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  require_same_field(field_, rhs.field_, "polynomial subtraction");
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), Scalar::zero(field_));
  for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] -= rhs.c_[k];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_field(a.field_, b.field_, "polynomial multiplication");
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
  std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar::zero(a.field_));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(c), a.field_);
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  require_same_field(a.field_, b.field_, "polynomial comparison");
  return a.c_ == b.c_;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& num,
                                                     const Polynomial& den) {
  require_same_field(num.field_, den.field_, "polynomial division");
  if (den.is_zero()) throw DomainError("polynomial division by zero");
  Polynomial q(num.field_), r = num;
  const Scalar lead_inv = den.leading_coefficient().inverse();
  while (!r.is_zero() && r.degree() >= den.degree()) {
    const std::size_t shift = r.degree() - den.degree();
    const Scalar f = r.leading_coefficient() * lead_inv;
    std::vector<Scalar> term(shift + 1, Scalar::zero(num.field_));
    term[shift] = f;
    const Polynomial t(std::move(term), num.field_);
    q += t;
    r -= t * den;
  }
  return {q, r};
}

Polynomial Polynomial::monic() const {
  if (is_zero()) throw DomainError("monic form of the zero polynomial");
  const Scalar inv = leading_coefficient().inverse();
  std::vector<Scalar> c = c_;
  for (Scalar& s : c) s *= inv;
  return Polynomial(std::move(c), field_);
}

// ---------------------------------------------------------------------------
// Characteristic and minimal polynomials
// ---------------------------------------------------------------------------

Polynomial char_poly(const Matrix& m) {
  require(m.is_square(), "characteristic polynomial of a non-square matrix");
  const FieldSpec& f = m.field();
  const std::size_t n = m.rows();
  // Berkowitz recurrence: grow the leading principal block one row/column at
  // a time; the new coefficient vector is a banded (Toeplitz) combination of
  // the previous one, built from the border row R, border column S and the
  // current corner entry.  Entirely division-free.
  std::vector<Scalar> c{Scalar::one(f)};  // coefficients, highest power first
  for (std::size_t r = 1; r <= n; ++r) {
    std::vector<Scalar> q(r + 1, Scalar::zero(f));
    q[0] = Scalar::one(f);
    q[1] = -m.at(r - 1, r - 1);
    std::vector<Scalar> t(r - 1, Scalar::zero(f));  // runs through M^k S
    for (std::size_t i = 0; i + 1 < r; ++i) t[i] = m.at(i, r - 1);
    for (std::size_t k = 2; k <= r; ++k) {
      Scalar dot = Scalar::zero(f);
      for (std::size_t i = 0; i + 1 < r; ++i) dot += m.at(r - 1, i) * t[i];
      q[k] = -dot;
      if (k < r) {
        std::vector<Scalar> next(r - 1, Scalar::zero(f));
        for (std::size_t i = 0; i + 1 < r; ++i)
          for (std::size_t j = 0; j + 1 < r; ++j)
            next[i] += m.at(i, j) * t[j];
        t = std::move(next);
      }
    }
    std::vector<Scalar> cn(r + 1, Scalar::zero(f));
    for (std::size_t i = 0; i <= r; ++i) {
      const std::size_t j_lo = i > r ? i - r : 0;
      const std::size_t j_hi = std::min(i, c.size() - 1);
      for (std::size_t j = j_lo; j <= j_hi; ++j) cn[i] += q[i - j] * c[j];
    }
    c = std::move(cn);
  }
  std::reverse(c.begin(), c.end());
  return Polynomial(std::move(c), f);
}

Polynomial min_poly(const Matrix& m) {
  require(m.is_square(), "minimal polynomial of a non-square matrix");
  const FieldSpec& f = m.field();
  const std::size_t n = m.rows();
  const std::size_t nn = n * n;

  const auto vectorize = [&](const Matrix& a) {
    std::vector<Scalar> v;
    v.reserve(nn);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v.push_back(a.at(i, j));
    return v;
  };

  // Echelon rows over F^(n*n), each remembering how it was formed from the
  // raw powers so the first dependence yields the (monic) coefficients.
  std::vector<std::vector<Scalar>> rows, combos;
  std::vector<std::size_t> pivots;

  Matrix power = Matrix::identity(n, f);
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<Scalar> v = vectorize(power);
    std::vector<Scalar> combo(k + 1, Scalar::zero(f));
    combo[k] = Scalar::one(f);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Scalar factor = v[pivots[r]];
      if (factor.is_zero()) continue;
      for (std::size_t i = 0; i < nn; ++i) v[i] -= factor * rows[r][i];
      for (std::size_t i = 0; i < combos[r].size(); ++i)
        combo[i] -= factor * combos[r][i];
    }
    std::size_t piv = 0;
    while (piv < nn && v[piv].is_zero()) ++piv;
    if (piv == nn) return Polynomial(std::move(combo), f);
    const Scalar inv = v[piv].inverse();
    for (Scalar& s : v) s *= inv;
    for (Scalar& s : combo) s *= inv;
    rows.push_back(std::move(v));
    combos.push_back(std::move(combo));
    pivots.push_back(piv);
    power = power * m;
  }
  // Cayley-Hamilton guarantees a dependence by k = n.
  throw StructuralError("no linear dependence among matrix powers found");
}

// ---------------------------------------------------------------------------
// Root finding
// ---------------------------------------------------------------------------

namespace {

constexpr std::uint64_t kTrialDivisionBound = 1'000'000;
constexpr std::size_t kMaxDivisors = 200'000;
constexpr std::size_t kMaxCandidateChecks = 5'000'000;
constexpr std::size_t kMaxPrimeScan = 1'000'000;

// Factors n (> 0) into primes.  Trial division first; surviving cofactors go
// through Miller-Rabin and Pollard-Brent rho with a bounded budget, so
// adversarial inputs fail loudly instead of spinning forever.
void factor_into(Integer n, std::map<Integer, std::size_t>& out);

Integer pollard_brent(const Integer& n) {
  // Brent's cycle variant with batched products; deterministic parameter
  // sweep keeps the whole library reproducible.
  for (unsigned c = 1; c <= 8; ++c) {
    Integer y = 2, r = 1, q = 1, g = 1, x = 0, ys = 0;
    const Integer cc(c);
    std::size_t budget = std::size_t(1) << 21;
    while (g == 1 && budget > 0) {
      x = y;
      for (Integer i = 0; i < r; ++i) y = (y * y + cc) % n;
      Integer k = 0;
      while (k < r && g == 1 && budget > 0) {
        ys = y;
        const Integer limit = std::min(Integer(128), Integer(r - k));
        for (Integer i = 0; i < limit; ++i) {
          y = (y * y + cc) % n;
          Integer diff = x > y ? x - y : y - x;
          if (diff == 0) diff = 1;
          q = (q * diff) % n;
          if (budget > 0) --budget;
        }
        g = gcd(q, n);
        k += 128;
      }
      r *= 2;
    }
    if (g == n) {
      // Backtrack one step at a time.
      g = 1;
      while (g == 1) {
        ys = (ys * ys + cc) % n;
        Integer diff = x > ys ? x - ys : ys - x;
        if (diff == 0) break;
        g = gcd(diff, n);
      }
    }
    if (g > 1 && g < n) return g;
  }
  throw UnsupportedError(
      "cannot factor an integer constant of the cleared polynomial within "
      "the internal budget");
}

void factor_into(Integer n, std::map<Integer, std::size_t>& out) {
  for (Integer d : {Integer(2), Integer(3)}) {
    while (n % d == 0) {
      ++out[d];
      n /= d;
    }
  }
  Integer d = 5;
  while (d * d <= n && d <= kTrialDivisionBound) {
    while (n % d == 0) {
      ++out[d];
      n /= d;
    }
    d += 2;
    while (n % d == 0) {
      ++out[d];
      n /= d;
    }
    d += 4;
  }
  if (n == 1) return;
  if (d * d > n) {
    ++out[n];
    return;
  }
  std::vector<Integer> pending{n};
  while (!pending.empty()) {
    Integer c = pending.back();
    pending.pop_back();
    // No factor below the trial bound remains, so anything under its square
    // is prime outright.
    if (c <= Integer(kTrialDivisionBound) * Integer(kTrialDivisionBound) ||
        boost::multiprecision::miller_rabin_test(c, 32)) {
      ++out[c];
      continue;
    }
    const Integer g = pollard_brent(c);
    pending.push_back(g);
    pending.push_back(c / g);
  }
}

std::vector<Integer> sorted_divisors(const Integer& n) {
  std::map<Integer, std::size_t> factors;
  factor_into(n, factors);
  std::vector<Integer> divisors{1};
  for (const auto& [p, e] : factors) {
    const std::size_t base = divisors.size();
    if (base * (e + 1) > kMaxDivisors)
      throw UnsupportedError(
          "too many divisor candidates while enumerating rational roots");
    Integer pk = 1;
    for (std::size_t k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divisors.push_back(divisors[i] * pk);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

// G(p/q) * q^deg for an integer-coefficient polynomial, exact.
Integer eval_scaled(const std::vector<Integer>& g, const Integer& p,
                    const Integer& q) {
  Integer acc = g.back();
  Integer qpow = 1;
  for (std::size_t k = g.size() - 1; k-- > 0;) {
    qpow *= q;
    acc = acc * p + g[k] * qpow;
  }
  return acc;
}

// Exact division of g by (q*x - p) given that p/q is a root; integer by the
// Gauss lemma since g is primitive and gcd(p, q) = 1.
std::vector<Integer> deflate(const std::vector<Integer>& g, const Integer& p,
                             const Integer& q) {
  const std::size_t n = g.size() - 1;
  std::vector<Integer> h(n);
  Integer carry = g[n];
  for (std::size_t k = n; k-- > 0;) {
    Integer quot, rem;
    divide_qr(carry, q, quot, rem);
    if (rem != 0) throw StructuralError("inexact deflation by a verified root");
    h[k] = quot;
    carry = g[k] + p * quot;
  }
  if (carry != 0) throw StructuralError("nonzero remainder deflating a root");
  return h;
}

RootsReport rational_roots(const Polynomial& poly) {
  const FieldSpec f = poly.field();
  RootsReport report;

  // Split off x^k first so the cleared polynomial has a nonzero constant.
  std::size_t zero_mult = 0;
  while (poly.coefficient(zero_mult).is_zero()) ++zero_mult;
  if (zero_mult > 0)
    report.roots.emplace_back(Scalar::zero(f), zero_mult);

  // Clear denominators and content: primitive integer coefficients.
  std::vector<Rational> qc;
  for (std::size_t k = zero_mult; k <= poly.degree(); ++k)
    qc.push_back(poly.coefficient(k).rational_value());
  Integer lcm_den = 1;
  for (const Rational& r : qc) lcm_den = lcm(lcm_den, denominator(r));
  std::vector<Integer> g;
  g.reserve(qc.size());
  for (const Rational& r : qc)
    g.push_back(numerator(r) * (lcm_den / denominator(r)));
  Integer content = 0;
  for (const Integer& v : g) content = gcd(content, v);
  for (Integer& v : g) v /= content;

  std::vector<std::pair<Rational, std::size_t>> found;
  const auto record = [&](const Integer& num, const Integer& den,
                          std::size_t mult) {
    Rational r(num);
    r /= Rational(den);
    found.emplace_back(r, mult);
  };

  if (g.size() >= 3) {  // degree >= 2: enumerate candidates
    const Integer a0 = abs(g.front());
    const Integer an = abs(g.back());
    const Integer f1 = eval_scaled(g, 1, 1);
    const Integer fm1 = eval_scaled(g, -1, 1);
    // Cauchy bound: every root satisfies |p/q| <= 1 + max|g_i| / |g_n|.
    Integer max_abs = 0;
    for (const Integer& v : g) max_abs = std::max(max_abs, Integer(abs(v)));
    const Integer bound_num = an + max_abs;  // |p| * an <= q * (an + max)

    const std::vector<Integer> ps = sorted_divisors(a0);
    const std::vector<Integer> qs = sorted_divisors(an);
    if (ps.size() * qs.size() > kMaxCandidateChecks)
      throw UnsupportedError(
          "too many rational-root candidates; refusing to enumerate");

    for (const Integer& q : qs) {
      if (g.size() <= 2) break;
      for (const Integer& p : ps) {
        if (g.size() <= 2) break;
        if (gcd(p, q) != 1) continue;
        if (p * an > q * bound_num) break;  // ps ascending: all later fail too
        for (int sign = 0; sign < 2; ++sign) {
          const Integer ps_signed = sign == 0 ? p : -p;
          // A root p/q forces (q - p) | G(1) and (q + p) | G(-1).
          const Integer d1 = q - ps_signed;
          if (f1 != 0 && d1 != 0 && f1 % d1 != 0) continue;
          const Integer dm1 = q + ps_signed;
          if (fm1 != 0 && dm1 != 0 && fm1 % dm1 != 0) continue;
          std::size_t mult = 0;
          while (g.size() >= 2 && eval_scaled(g, ps_signed, q) == 0) {
            g = deflate(g, ps_signed, q);
            ++mult;
          }
          if (mult > 0) record(ps_signed, q, mult);
        }
      }
    }
  }
  if (g.size() == 2) {  // linear leftover: read its root directly
    record(-g[0], g[1], 1);
    g = {g[1]};
  }

  for (const auto& [r, mult] : found) {
    Scalar root = Scalar::of_rational(numerator(r), denominator(r));
    report.roots.emplace_back(root, mult);
  }
  std::sort(report.roots.begin(), report.roots.end(),
            [](const auto& a, const auto& b) {
              return canonical_less(a.first, b.first);
            });
  std::size_t total = 0;
  for (const auto& rm : report.roots) total += rm.second;
  report.splits = total == poly.degree();
  return report;
}

RootsReport prime_roots(const Polynomial& poly) {
  const FieldSpec f = poly.field();
  if (f.characteristic() > kMaxPrimeScan)
    throw UnsupportedError("root search over " + f.to_string() +
                           " exceeds the exhaustive-scan limit of 10^6");
  RootsReport report;
  std::vector<Scalar> g = poly.coefficients();
  for (std::uint64_t r = 0; r < f.characteristic() && g.size() > 1; ++r) {
    const Scalar x = Scalar::of_integer(Integer(r), f);
    std::size_t mult = 0;
    while (g.size() > 1) {
      // Synthetic division: g = (X - x) h + g(x).
      const std::size_t n = g.size() - 1;
      std::vector<Scalar> h(n, Scalar::zero(f));
      h[n - 1] = g[n];
      for (std::size_t k = n - 1; k >= 1; --k) h[k - 1] = g[k] + x * h[k];
      const Scalar rem = g[0] + x * h[0];
      if (!rem.is_zero()) break;
      g = std::move(h);
      ++mult;
    }
    if (mult > 0) report.roots.emplace_back(x, mult);
  }
  std::size_t total = 0;
  for (const auto& rm : report.roots) total += rm.second;
  report.splits = total == poly.degree();
  return report;
}

}  // namespace

RootsReport roots_in_field(const Polynomial& p) {
  if (p.is_zero())
    throw DomainError("roots_in_field: the zero polynomial has every root");
  return p.field().is_rational() ? rational_roots(p) : prime_roots(p);
}

// ---------------------------------------------------------------------------
// Shape predicates
// ---------------------------------------------------------------------------

ShapeFlags shape_of(const Matrix& m) {
  require(m.is_square(), "shape classification of a non-square matrix");
  const std::size_t n = m.rows();
  ShapeFlags s;
  bool below_sub_zero = true;   // entries with i > j + 1
  bool above_diag_zero = true;  // entries with j > i
  bool below_diag_zero = true;  // entries with i > j
  bool above_super_zero = true; // entries with j > i + 1
  bool sub_nonzero = true;      // entries with i == j + 1
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const bool zero = m.at(i, j).is_zero();
      if (i > j + 1 && !zero) below_sub_zero = false;
      if (j > i && !zero) above_diag_zero = false;
      if (i > j && !zero) below_diag_zero = false;
      if (j > i + 1 && !zero) above_super_zero = false;
      if (i == j + 1 && zero) sub_nonzero = false;
    }
  bool super_nonzero = true;  // entries with j == i + 1
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (m.at(i, i + 1).is_zero()) super_nonzero = false;

  s.hessenberg = below_sub_zero && sub_nonzero;
  s.lower_bidiagonal = above_diag_zero && below_sub_zero && sub_nonzero;
  s.upper_bidiagonal = below_diag_zero && above_super_zero && super_nonzero;
  s.diagonal = above_diag_zero && below_diag_zero;
  s.upper_triangular = below_diag_zero;
  return s;
}

// ---------------------------------------------------------------------------
// Subspace
// ---------------------------------------------------------------------------

Subspace Subspace::zero(std::size_t ambient_dim, const FieldSpec& f) {
  return Subspace(ambient_dim, Matrix(ambient_dim, 0, f));
}

Subspace Subspace::full(std::size_t ambient_dim, const FieldSpec& f) {
  return Subspace(ambient_dim, Matrix::identity(ambient_dim, f));
}

Subspace Subspace::span_of_columns(const Matrix& m) {
  Matrix rows = m.transpose();
  const std::vector<std::size_t> pivots = rref(rows);
  Matrix basis(m.rows(), pivots.size(), m.field());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t i = 0; i < m.rows(); ++i) basis.at(i, r) = rows.at(r, i);
  return Subspace(m.rows(), std::move(basis));
}

Subspace Subspace::span(const Vector& v) {
  Matrix m(v.dim(), 1, v.field());
  for (std::size_t i = 0; i < v.dim(); ++i) m.at(i, 0) = v.at(i);
  return span_of_columns(m);
}

Subspace Subspace::kernel(const Matrix& m) {
  Matrix r = m;
  const std::vector<std::size_t> pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), m.field());
    v.at(free) = Scalar::one(m.field());
    for (std::size_t pr = 0; pr < pivots.size(); ++pr)
      v.at(pivots[pr]) = -r.at(pr, free);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return zero(m.cols(), m.field());
  return span_of_columns(from_columns(basis));
}

Subspace Subspace::eigenspace(const Matrix& m, const Scalar& lambda) {
  require(m.is_square(), "eigenspace of a non-square matrix");
  return kernel(m - lambda * Matrix::identity(m.rows(), m.field()));
}

bool Subspace::contains(const Vector& v) const {
  require(v.dim() == ambient_, "containment: ambient dimension mismatch");
  // Pivot rows carry a lone 1 across the echelon basis, so coordinates can
  // be read off directly.
  Vector w = v;
  for (std::size_t j = 0; j < basis_.cols(); ++j) {
    std::size_t piv = 0;
    while (piv < ambient_ && basis_.at(piv, j).is_zero()) ++piv;
    const Scalar c = w.at(piv);
    if (c.is_zero()) continue;
    for (std::size_t i = 0; i < ambient_; ++i) w.at(i) -= c * basis_.at(i, j);
  }
  return w.is_zero();
}

bool Subspace::contains(const Subspace& other) const {
  require(other.ambient_ == ambient_, "containment: ambient dimension mismatch");
  for (std::size_t j = 0; j < other.basis_.cols(); ++j)
    if (!contains(column(other.basis_, j))) return false;
  return true;
}

Subspace Subspace::image_under(const Matrix& m) const {
  require(m.cols() == ambient_, "image: shape mismatch");
  if (dim() == 0) return zero(m.rows(), m.field());
  return span_of_columns(m * basis_);
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  require(a.ambient_ == b.ambient_, "subspace sum: ambient dimension mismatch");
  if (a.dim() == 0) return b;
  if (b.dim() == 0) return a;
  return Subspace::span_of_columns(hstack(a.basis_, b.basis_));
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  require(a.ambient_ == b.ambient_,
          "subspace intersection: ambient dimension mismatch");
  if (a.dim() == 0 || b.dim() == 0)
    return Subspace::zero(a.ambient_, a.field());
  // Solve A u = -B w: kernel columns of [A | B] split into (u; w), and the
  // intersection is spanned by the A u parts.
  const Subspace k = Subspace::kernel(hstack(a.basis_, b.basis_));
  if (k.dim() == 0) return Subspace::zero(a.ambient_, a.field());
  std::vector<Vector> gens;
  for (std::size_t j = 0; j < k.dim(); ++j) {
    Vector u(a.dim(), a.field());
    for (std::size_t i = 0; i < a.dim(); ++i) u.at(i) = k.basis().at(i, j);
    gens.push_back(a.basis_ * u);
  }
  return Subspace::span_of_columns(from_columns(gens));
}

bool operator==(const Subspace& a, const Subspace& b) {
  require(a.ambient_ == b.ambient_,
          "subspace comparison: ambient dimension mismatch");
  return a.basis_ == b.basis_;
}

}  // namespace thp
