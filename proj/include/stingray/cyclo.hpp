#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace stingray::cyclo {

/// Element sum b_i zeta^i of Z[zeta_r], r an odd prime, kept normalized with
/// b_0 = 0 so that (b_1, ..., b_{r-1}) are coordinates in a Z-basis.
///
/// Labeling of roots: when values come from actual matrices, zeta stands for the
/// smallest-encoding generator of the order-r subgroup of the splitting field
/// (see classify::eigenvalue_multiplicities). Everything built on top of this
/// class is invariant under the Galois action, so the choice is harmless.
class CyclotomicInt {
 public:
  /// coeffs has length r (b_0, ..., b_{r-1}). Errors: InvalidArgument.
  CyclotomicInt(unsigned r, std::vector<std::int64_t> coeffs);

  static CyclotomicInt zero(unsigned r);
  /// n * 1
  static CyclotomicInt integer(unsigned r, std::int64_t n);
  static CyclotomicInt zeta_power(unsigned r, unsigned k);
  /// sum c_i zeta^i for a multiplicity vector of length r.
  static CyclotomicInt from_multiplicities(unsigned r, const std::vector<std::uint64_t>& mults);
  /// b5 = zeta + zeta^4 (r = 5)
  static CyclotomicInt b5();
  /// c13 = zeta + zeta^-1 + zeta^5 + zeta^-5 (r = 13)
  static CyclotomicInt c13();

  unsigned r() const { return r_; }
  const std::vector<std::int64_t>& coeffs() const { return b_; }

  bool is_rational() const;
  /// Errors: NotRational.
  std::int64_t rational_value() const;

  CyclotomicInt operator+(const CyclotomicInt& o) const;
  CyclotomicInt operator-(const CyclotomicInt& o) const;
  CyclotomicInt operator*(const CyclotomicInt& o) const;
  CyclotomicInt operator-() const;
  CyclotomicInt scalar_mul(std::int64_t k) const;
  bool operator==(const CyclotomicInt& o) const { return r_ == o.r_ && b_ == o.b_; }
  bool operator!=(const CyclotomicInt& o) const { return !(*this == o); }

  /// zeta^i -> zeta^(ik). Errors: NonUnit.
  CyclotomicInt galois(std::int64_t k) const;

  /// Integer if rational, else "b0,b1,...".
  std::string to_string() const;

 private:
  void check_r(const CyclotomicInt& o) const;
  void normalize();
  unsigned r_;
  std::vector<std::int64_t> b_;
};

struct MultiplicitySolution {
  unsigned r = 0;
  unsigned d = 0;
  std::vector<std::uint64_t> mults;  // c_0 .. c_{r-1}

  CyclotomicInt brauer_value() const { return CyclotomicInt::from_multiplicities(r, mults); }
  std::string to_string() const;
};

/// The unique nonnegative (c_0, ..., c_{r-1}) with sum d and sum c_i zeta^i = chi.
/// Errors: NoSolution, MismatchedR.
MultiplicitySolution solve_multiplicities(const CyclotomicInt& chi, unsigned d, unsigned r);

enum class Verdict { Stingray, Type2I, Type2II, Inconsistent, Other };
std::string to_string(Verdict v);

/// Character criteria for d even and r in {d/2 + 1, d + 1}. Errors: UnsupportedR.
Verdict stingray_criterion(unsigned r, unsigned d, const CyclotomicInt& chi);

/// chi(g^j) for the j in one class, with the class size.
struct PowerClass {
  CyclotomicInt value;
  unsigned size;
};

/// Groups j = 1..r-1 by the value galois(chi, j).
std::vector<PowerClass> power_classes(const CyclotomicInt& chi);

/// (d + sum size * value) / r, asserted rational. Sizes must sum to r - 1.
/// Errors: NotRational, MismatchedR, InvalidArgument.
boost::rational<std::int64_t> trivial_multiplicity(const std::vector<PowerClass>& classes, unsigned d,
                                                   unsigned r);

}  // namespace stingray::cyclo
