#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stingray/numtheory.hpp"

namespace stingray::ff {

/// Raw element of GF(p^a): the integer sum c_i p^i of its coefficient vector
/// with respect to the field's modulus. Only meaningful together with the
/// FieldSpec that produced it.
using Elt = std::uint64_t;

struct FieldData;

/// The finite field GF(p^a) = F_p[x]/(modulus). A cheap, immutable handle;
/// copies share the same tables. Two specs are interoperable iff they agree on
/// (p, a, modulus).
class FieldSpec {
 public:
  std::uint64_t characteristic() const;
  unsigned degree() const;
  std::uint64_t order() const;  // q = p^a
  /// Ascending coefficients of the monic modulus (length a+1); empty if a == 1.
  const std::vector<std::uint64_t>& modulus() const;

  bool operator==(const FieldSpec& other) const;
  bool operator!=(const FieldSpec& other) const { return !(*this == other); }

  bool contains(Elt x) const { return x < order(); }
  Elt zero() const { return 0; }
  Elt one() const { return 1; }
  /// Image of an integer in the prime subfield.
  Elt from_int(std::int64_t v) const;
  /// Encoding of the class of x in F_p[x]/(modulus), i.e. p. Requires a > 1.
  Elt generator_x() const;

  Elt add(Elt x, Elt y) const;
  Elt sub(Elt x, Elt y) const;
  Elt neg(Elt x) const;
  Elt mul(Elt x, Elt y) const;
  Elt inv(Elt x) const;
  Elt div(Elt x, Elt y) const { return mul(x, inv(y)); }
  Elt pow(Elt x, std::uint64_t e) const;
  Elt pow(Elt x, const BigInt& e) const;
  /// x^(p^k)
  Elt frobenius(Elt x, unsigned k = 1) const;

  std::vector<std::uint64_t> coeffs(Elt x) const;
  Elt from_coeffs(std::span<const std::uint64_t> c) const;

  /// Multiplicative order; throws DivisionByZero for 0.
  std::uint64_t element_order(Elt x) const;
  /// Smallest-encoding generator of the multiplicative group.
  Elt primitive_element() const;
  /// Prime factorization of q - 1.
  const std::vector<std::pair<std::uint64_t, unsigned>>& unit_group_factors() const;

  /// "GF(p)" or "GF(p^a)".
  std::string name() const;

 private:
  friend FieldSpec make_field(std::uint64_t, unsigned, std::optional<std::vector<std::uint64_t>>);
  explicit FieldSpec(std::shared_ptr<const FieldData> d) : d_(std::move(d)) {}
  std::shared_ptr<const FieldData> d_;
};

/// Validates p (prime, < 2^31), a >= 1 and q = p^a < 2^62. Without an explicit
/// modulus (a > 1) the lexicographically smallest monic irreducible of degree a
/// is chosen, comparing ascending coefficient lists c_0, c_1, ... as integers.
/// Errors: NotPrime, ReducibleModulus, DegreeMismatch, FieldTooLarge.
FieldSpec make_field(std::uint64_t p, unsigned a = 1,
                     std::optional<std::vector<std::uint64_t>> modulus = std::nullopt);

/// GF(q) from q alone; CompositeQ if q is not a prime power.
FieldSpec make_field_of_order(std::uint64_t q);

/// Field element bound to its field; all binary operations check that both
/// operands live in interoperable fields (FieldMismatch otherwise).
class FqElem {
 public:
  FqElem(FieldSpec field, Elt value);
  static FqElem from_coeffs(const FieldSpec& field, std::span<const std::uint64_t> c);

  const FieldSpec& field() const { return field_; }
  Elt encode() const { return value_; }
  std::vector<std::uint64_t> coeffs() const { return field_.coeffs(value_); }
  bool is_zero() const { return value_ == 0; }

  FqElem operator+(const FqElem& o) const;
  FqElem operator-(const FqElem& o) const;
  FqElem operator*(const FqElem& o) const;
  FqElem operator/(const FqElem& o) const;
  FqElem operator-() const;
  bool operator==(const FqElem& o) const;
  bool operator!=(const FqElem& o) const { return !(*this == o); }

  FqElem inv() const;
  FqElem pow(std::uint64_t e) const;
  FqElem pow(const BigInt& e) const;
  FqElem frobenius(unsigned k = 1) const;
  std::uint64_t order() const;

 private:
  void check_same(const FqElem& o) const;
  FieldSpec field_;
  Elt value_;
};

/// Fixed field embedding GF(p^a) -> GF(p^b), a | b, sending x to the
/// smallest-encoding root of the source modulus in the target.
class Embedding {
 public:
  Embedding(FieldSpec source, FieldSpec target);

  const FieldSpec& source() const { return source_; }
  const FieldSpec& target() const { return target_; }
  Elt image_of_generator() const { return alpha_; }
  Elt operator()(Elt x) const;

 private:
  FieldSpec source_;
  FieldSpec target_;
  Elt alpha_ = 0;
  std::vector<Elt> alpha_powers_;
};

/// Cached per (source, target) pair. NoEmbedding if p differs or a does not
/// divide b.
const Embedding& embedding(const FieldSpec& source, const FieldSpec& target);
FqElem embed(const FqElem& x, const FieldSpec& target);

/// GF(q^k) as an extension of the prime field of `base`.
FieldSpec extension_field(const FieldSpec& base, unsigned k);

}  // namespace stingray::ff
