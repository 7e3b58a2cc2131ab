#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stingray/ffield.hpp"

namespace stingray::poly {

using ff::Elt;
using ff::FieldSpec;

/// Polynomial over GF(q) with ascending coefficients and no trailing zeros.
class DensePoly {
 public:
  explicit DensePoly(FieldSpec field);
  DensePoly(FieldSpec field, std::vector<Elt> coeffs);

  static DensePoly constant(const FieldSpec& field, Elt c);
  static DensePoly monomial(const FieldSpec& field, unsigned degree, Elt c = 1);
  /// t - c
  static DensePoly linear(const FieldSpec& field, Elt c);

  const FieldSpec& field() const { return field_; }
  const std::vector<Elt>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  Elt leading() const { return c_.empty() ? 0 : c_.back(); }
  Elt operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

  Elt eval(Elt x) const;
  DensePoly monic() const;
  DensePoly derivative() const;
  DensePoly scaled(Elt s) const;

  DensePoly operator+(const DensePoly& o) const;
  DensePoly operator-(const DensePoly& o) const;
  DensePoly operator*(const DensePoly& o) const;
  DensePoly operator-() const;
  bool operator==(const DensePoly& o) const;
  bool operator!=(const DensePoly& o) const { return !(*this == o); }

  /// Space-separated ascending coefficient encodings; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void trim();
  FieldSpec field_;
  std::vector<Elt> c_;
};

/// Canonical order: degree, then coefficient encodings from c_0 upward.
bool canonical_less(const DensePoly& a, const DensePoly& b);

/// Errors: FieldMismatch, DivisionByZero.
std::pair<DensePoly, DensePoly> divmod(const DensePoly& a, const DensePoly& b);
DensePoly operator/(const DensePoly& a, const DensePoly& b);
DensePoly operator%(const DensePoly& a, const DensePoly& b);

/// Monic gcd; gcd(0, 0) = 0.
DensePoly gcd(const DensePoly& a, const DensePoly& b);
DensePoly lcm(const DensePoly& a, const DensePoly& b);
DensePoly pow(const DensePoly& base, unsigned e);
/// base^e mod m
DensePoly powmod(const DensePoly& base, const BigInt& e, const DensePoly& m);

/// Rabin's test. Errors: ZeroPolynomial (also for constants).
bool is_irreducible(const DensePoly& f);

struct Factorization {
  ff::FqElem unit;
  std::vector<std::pair<DensePoly, unsigned>> factors;  // canonical order

  DensePoly product() const;
};

constexpr std::uint64_t kDefaultFactorSeed = 0xC0FFEE;

/// Squarefree, distinct-degree and Cantor-Zassenhaus equal-degree splitting.
/// The result does not depend on the seed. Errors: ZeroPolynomial.
Factorization factor(const DensePoly& f, std::uint64_t seed = kDefaultFactorSeed);

/// Distinct roots in the base field, ascending by encoding.
std::vector<Elt> roots(const DensePoly& f);

/// (t^r - 1)/(t - 1). Errors: CharacteristicDividesR, InvalidArgument (r not prime).
DensePoly cyclotomic_quotient(unsigned r, const FieldSpec& field);

}  // namespace stingray::poly
