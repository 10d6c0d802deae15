#pragma once

/**
 * @file gf.hpp
 * @brief Prime-field arithmetic and dense linear algebra over F_p.
 *
 * Elements are canonical residues in [0, p). Matrices are row-major and act
 * on column vectors, so the image of a product of group elements is the
 * product of the images in the same order.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace heartproof::gf {

using Elem = std::uint32_t;
using Vec = std::vector<Elem>;

bool is_prime(std::uint64_t n);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

/// Square root modulo an odd prime (Tonelli-Shanks). When a root exists the
/// smaller of the two representatives r and p - r is returned.
std::optional<std::uint64_t> sqrt_mod_p(std::uint64_t a, std::uint64_t p);

/// The field F_p for an odd prime p below 2^31.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const noexcept { return p_; }

  Elem reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }
  Elem add(Elem a, Elem b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const noexcept {
    return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Elem pow(Elem a, std::uint64_t e) const noexcept {
    return static_cast<Elem>(powmod(a, e, p_));
  }
  /// Throws ZeroInverse for a = 0.
  Elem inv(Elem a) const;

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

inline Elem field_inv(Elem a, const PrimeField& f) { return f.inv(a); }

class Matrix {
 public:
  Matrix(const PrimeField& field, std::size_t rows, std::size_t cols);
  Matrix(const PrimeField& field, std::size_t rows, std::size_t cols,
         std::vector<Elem> entries);

  static Matrix identity(const PrimeField& field, std::size_t n);
  /// Entries are reduced mod p; rows must all have equal length.
  static Matrix from_rows(const PrimeField& field,
                          const std::vector<std::vector<std::int64_t>>& rows);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Elem operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  std::span<const Elem> row(std::size_t r) const {
    return {a_.data() + r * cols_, cols_};
  }
  const std::vector<Elem>& entries() const noexcept { return a_; }

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(Elem c) const;
  Vec apply(std::span<const Elem> v) const;
  Matrix transpose() const;
  Elem trace() const;
  bool is_zero() const;
  bool is_identity() const;

  bool operator==(const Matrix& rhs) const;

  std::string to_string() const;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> a_;
};

/// Reduced row echelon form with the list of pivot columns.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

Echelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);
/// Basis of the right null space {v : M v = 0}; dim = cols - rank.
std::vector<Vec> kernel_basis(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
Elem determinant(Matrix m);
/// One solution of M x = b, if any.
std::optional<Vec> solve(const Matrix& m, std::span<const Elem> b);
Matrix kronecker(const Matrix& a, const Matrix& b);
Matrix power(const Matrix& m, std::uint64_t e);
/// Rows are the given vectors.
Matrix matrix_from_rows(const PrimeField& field, const std::vector<Vec>& rows,
                        std::size_t cols);

/// Row-echelon basis of a subspace with incremental membership tests.
class SubspaceBasis {
 public:
  SubspaceBasis(const PrimeField& field, std::size_t dim);

  /// Adds v if it is not already in the span; returns true when added.
  bool insert(Vec v);
  bool contains(Vec v) const;
  std::size_t dimension() const noexcept { return rows_.size(); }
  std::size_t ambient_dimension() const noexcept { return dim_; }
  /// The stored echelonized rows.
  const std::vector<Vec>& rows() const noexcept { return rows_; }

 private:
  /// Reduces v against the stored rows in place; returns the pivot or dim_.
  std::size_t reduce(Vec& v) const;

  PrimeField field_;
  std::size_t dim_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace heartproof::gf
