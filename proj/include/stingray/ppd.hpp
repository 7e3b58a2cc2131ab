#pragma once

#include <vector>

#include "stingray/numtheory.hpp"

namespace stingray::ppd {

/// Least e >= 1 with q^e = 1 mod r, by factoring r - 1 and descending.
/// Errors: NotCoprime, InvalidArgument (r not prime).
BigInt multiplicative_order(const BigInt& r, const BigInt& q);

struct PpdResult {
  BigInt q;
  unsigned e = 0;
  std::vector<BigInt> primes;  // ascending
  bool exists = false;
  /// False if some prime was only certified probabilistically.
  bool certain = true;
};

/// All primes r with o_r(q) = e. Only Phi_e(q) is factored, since every
/// e-ppd prime divides it. Errors: CompositeQ, TooLarge (q^e >= 2^512),
/// InvalidArgument (e < 2).
PpdResult primitive_prime_divisors(const BigInt& q, unsigned e);

/// o_r(q) == e. Errors: CompositeQ, InvalidArgument (r not prime).
bool is_eppd_prime(const BigInt& r, const BigInt& q, unsigned e);

}  // namespace stingray::ppd
