#include "heartproof/gf.hpp"

#include <sstream>
#include <utility>

#include "heartproof/error.hpp"

namespace heartproof::gf {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % small == 0) return n == small;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::optional<std::uint64_t> sqrt_mod_p(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  if (p == 2) return a;
  if (powmod(a, (p - 1) / 2, p) != 1) return std::nullopt;

  std::uint64_t q = p - 1;
  unsigned s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::uint64_t z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;

  std::uint64_t m = s;
  std::uint64_t c = powmod(z, q, p);
  std::uint64_t t = powmod(a, q, p);
  std::uint64_t r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0;
    std::uint64_t t2 = t;
    while (t2 != 1) {
      t2 = mulmod(t2, t2, p);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + 1 < m - i; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return std::min(r, p - r);
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 3 || p >= (1u << 31) || !is_prime(p)) {
    throw Error(ErrorCode::InvalidField,
                "modulus " + std::to_string(p) + " is not an odd prime below 2^31");
  }
}

Elem PrimeField::inv(Elem a) const {
  if (a % p_ == 0) throw Error(ErrorCode::ZeroInverse, "inverse of 0 in F_" + std::to_string(p_));
  return pow(a, p_ - 2);
}

Matrix::Matrix(const PrimeField& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

Matrix::Matrix(const PrimeField& field, std::size_t rows, std::size_t cols,
               std::vector<Elem> entries)
    : field_(field), rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows * cols) throw std::invalid_argument("matrix entry count mismatch");
  for (auto& e : a_) e %= field_.p();
}

Matrix Matrix::identity(const PrimeField& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const PrimeField& field,
                         const std::vector<std::vector<std::int64_t>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows.front().size() : 0;
  Matrix m(field, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = field.reduce(rows[i][j]);
  }
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  Matrix out(field_, rows_, rhs.cols_);
  const std::uint64_t p = field_.p();
  std::vector<std::uint64_t> acc(rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint64_t a = (*this)(i, k);
      if (a == 0) continue;
      const Elem* r = rhs.a_.data() + k * rhs.cols_;
      for (std::size_t j = 0; j < rhs.cols_; ++j) acc[j] = (acc[j] + a * r[j]) % p;
    }
    for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) = static_cast<Elem>(acc[j]);
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix sum mismatch");
  Matrix out(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = field_.add(a_[i], rhs.a_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix difference mismatch");
  Matrix out(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = field_.sub(a_[i], rhs.a_[i]);
  return out;
}

Matrix Matrix::scaled(Elem c) const {
  Matrix out(*this);
  for (auto& e : out.a_) e = field_.mul(e, c);
  return out;
}

Vec Matrix::apply(std::span<const Elem> v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  Vec out(rows_, 0);
  const std::uint64_t p = field_.p();
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc = (acc + static_cast<std::uint64_t>((*this)(i, j)) * v[j]) % p;
    out[i] = static_cast<Elem>(acc);
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Elem Matrix::trace() const {
  Elem t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t = field_.add(t, (*this)(i, i));
  return t;
}

bool Matrix::is_zero() const {
  for (auto e : a_)
    if (e != 0) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

bool Matrix::operator==(const Matrix& rhs) const {
  return field_ == rhs.field_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
    os << '\n';
  }
  return os.str();
}

Echelon row_reduce(Matrix m) {
  const PrimeField& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && m(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(r, j));
    Elem inv = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Elem factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

std::vector<Vec> kernel_basis(const Matrix& m) {
  const PrimeField& f = m.field();
  Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = f.neg(e.reduced(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = row_reduce(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

Elem determinant(Matrix m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  const PrimeField& f = m.field();
  const std::size_t n = m.rows();
  Elem det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && m(sel, c) == 0) ++sel;
    if (sel == n) return 0;
    if (sel != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(sel, j), m(c, j));
      det = f.neg(det);
    }
    det = f.mul(det, m(c, c));
    Elem inv = f.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      Elem factor = f.mul(m(i, c), inv);
      for (std::size_t j = c; j < n; ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(c, j)));
    }
  }
  return det;
}

std::optional<Vec> solve(const Matrix& m, std::span<const Elem> b) {
  if (b.size() != m.rows()) throw std::invalid_argument("right-hand side length mismatch");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i] % m.field().p();
  }
  Echelon e = row_reduce(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols(), 0);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, m.cols());
  return x;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  const PrimeField& f = a.field();
  Matrix out(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Elem x = a(i, j);
      if (x == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = f.mul(x, b(k, l));
    }
  return out;
}

Matrix power(const Matrix& m, std::uint64_t e) {
  Matrix result = Matrix::identity(m.field(), m.rows());
  Matrix base = m;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Matrix matrix_from_rows(const PrimeField& field, const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  return m;
}

SubspaceBasis::SubspaceBasis(const PrimeField& field, std::size_t dim) : field_(field), dim_(dim) {}

std::size_t SubspaceBasis::reduce(Vec& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Elem c = v[pivots_[i]];
    if (c == 0) continue;
    const Vec& r = rows_[i];
    for (std::size_t j = 0; j < dim_; ++j) v[j] = field_.sub(v[j], field_.mul(c, r[j]));
  }
  for (std::size_t j = 0; j < dim_; ++j)
    if (v[j] != 0) return j;
  return dim_;
}

bool SubspaceBasis::insert(Vec v) {
  std::size_t piv = reduce(v);
  if (piv == dim_) return false;
  Elem inv = field_.inv(v[piv]);
  for (auto& x : v) x = field_.mul(x, inv);
  // Keep the stored rows fully reduced so reduce() needs one pass.
  for (auto& r : rows_) {
    Elem c = r[piv];
    if (c == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) r[j] = field_.sub(r[j], field_.mul(c, v[j]));
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

bool SubspaceBasis::contains(Vec v) const { return reduce(v) == dim_; }

}  // namespace heartproof::gf
