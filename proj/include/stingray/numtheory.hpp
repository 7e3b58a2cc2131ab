#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace stingray {

using BigInt = boost::multiprecision::cpp_int;

namespace nt {

/// Prime-power factorization of a positive integer. `certain` is false when a
/// cofactor above the deterministic Miller-Rabin range was declared prime by
/// the probabilistic test.
struct IntFactorization {
  std::vector<std::pair<BigInt, unsigned>> factors;  // ascending primes
  bool certain = true;

  BigInt value() const;
  std::vector<BigInt> primes() const;
};

bool is_prime(std::uint64_t n);

/// Miller-Rabin. Deterministic below 3.317e24 (bases 2..41); above that 64
/// seeded random bases are used and *certain is set to false.
bool is_prime(const BigInt& n, bool* certain = nullptr);

/// Trial division to 1e6, then Pollard-Brent rho; results memoized.
IntFactorization factor(const BigInt& n);
std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n);

BigInt ipow(const BigInt& base, unsigned exp);
BigInt powmod(BigInt base, BigInt exp, const BigInt& mod);
std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t mod);
BigInt gcd(BigInt a, BigInt b);
BigInt lcm(const BigInt& a, const BigInt& b);

/// (p, a) with q = p^a, p prime; nullopt if q is not a prime power.
std::optional<std::pair<BigInt, unsigned>> prime_power_decompose(const BigInt& q);

/// Value of the n-th cyclotomic polynomial at x.
BigInt cyclotomic_value(unsigned n, const BigInt& x);

std::vector<unsigned> divisors(unsigned n);
std::vector<unsigned> prime_divisors(unsigned n);

/// All primes below `limit`, cached after the first call for a given bound.
const std::vector<std::uint32_t>& small_primes(std::uint32_t limit = 1000000);

std::string to_string(const BigInt& v);

}  // namespace nt
}  // namespace stingray
