#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stingray/ffield.hpp"
#include "stingray/fpoly.hpp"

namespace stingray::mat {

using ff::Elt;
using ff::FieldSpec;
using poly::DensePoly;
using Vec = std::vector<Elt>;

/// Row-major matrix over GF(q). Vectors are rows and act on the right: v -> v*m.
class DenseMatrix {
 public:
  DenseMatrix(FieldSpec field, std::size_t rows, std::size_t cols);
  DenseMatrix(const DenseMatrix& o);
  DenseMatrix(DenseMatrix&& o) noexcept;
  DenseMatrix& operator=(const DenseMatrix& o);
  DenseMatrix& operator=(DenseMatrix&& o) noexcept;

  static DenseMatrix identity(const FieldSpec& field, std::size_t d);
  static DenseMatrix from_rows(const FieldSpec& field, const std::vector<Vec>& rows);
  static DenseMatrix diagonal(const FieldSpec& field, const Vec& diag);
  /// Companion matrix of a monic polynomial: rows e_1, ..., e_{n-1}, then -c_0 ... -c_{n-1}.
  static DenseMatrix companion(const DensePoly& f);
  static DenseMatrix block_diag(const DenseMatrix& a, const DenseMatrix& b);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Elt at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Elt v);
  Vec row(std::size_t i) const;
  const std::vector<Elt>& data() const { return a_; }

  DenseMatrix operator*(const DenseMatrix& o) const;
  DenseMatrix operator+(const DenseMatrix& o) const;
  DenseMatrix operator-(const DenseMatrix& o) const;
  bool operator==(const DenseMatrix& o) const;
  bool operator!=(const DenseMatrix& o) const { return !(*this == o); }
  /// Strict weak order on (dims, entries); for use as a set/map key.
  bool operator<(const DenseMatrix& o) const;

  DenseMatrix transpose() const;
  DenseMatrix scaled(Elt s) const;
  /// Entrywise x -> x^(p^k).
  DenseMatrix frobenius(unsigned k) const;
  bool is_identity() const;

  std::size_t rank() const;
  Elt det() const;
  /// Cached after the first call.
  bool is_invertible() const;
  DenseMatrix inverse() const;
  /// Negative exponents use the inverse.
  DenseMatrix pow(const BigInt& e) const;
  DenseMatrix pow(std::int64_t e) const { return pow(BigInt(e)); }

  std::string to_string() const;

 private:
  FieldSpec field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elt> a_;
  // -1 unknown, 0 singular, 1 invertible. Racing writers store the same value.
  mutable std::atomic<int> invertible_{-1};
};

/// v * m
Vec vec_mul(const Vec& v, const DenseMatrix& m);
DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);
/// f(m) by Horner's rule.
DenseMatrix eval(const DensePoly& f, const DenseMatrix& m);

/// Row space in reduced row echelon form.
class Subspace {
 public:
  /// Zero subspace of F^d.
  Subspace(FieldSpec field, std::size_t ambient_dim);
  static Subspace span(const FieldSpec& field, std::size_t ambient_dim, const std::vector<Vec>& vectors);
  static Subspace full(const FieldSpec& field, std::size_t ambient_dim);

  const FieldSpec& field() const { return field_; }
  std::size_t ambient_dim() const { return d_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  DenseMatrix basis_matrix() const;

  /// v minus its projection along the pivots; zero iff v lies in the subspace.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& s) const;
  /// Adds v; returns false if v was already in the span.
  bool insert(const Vec& v);
  /// Coordinates of v with respect to basis(); v must lie in the subspace.
  Vec coordinates(const Vec& v) const;

  /// {v : v . s = 0 for all s in this subspace}
  Subspace annihilator() const;

  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  FieldSpec field_;
  std::size_t d_;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

/// Left null space {v : v*m = 0}.
Subspace kernel(const DenseMatrix& m);
/// Row space {v*m}.
Subspace image(const DenseMatrix& m);

/// Hessenberg reduction plus the standard recurrence. Errors: NotSquare.
DensePoly char_poly(const DenseMatrix& m);
/// lcm of the local minimal polynomials of the unit vectors. Errors: NotSquare.
DensePoly min_poly(const DenseMatrix& m);
/// Exact multiplicative order. A bound_hint that is a known multiple of the
/// order is used to descend directly. Errors: Singular, NotSquare.
BigInt matrix_order(const DenseMatrix& m, const std::optional<BigInt>& bound_hint = std::nullopt);
/// Action of m on an invariant subspace in the echelon basis of s.
/// Errors: NotInvariant, DimensionMismatch.
DenseMatrix restrict(const DenseMatrix& m, const Subspace& s);

}  // namespace stingray::mat
