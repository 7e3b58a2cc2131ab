#include "stingray/ppd.hpp"

#include "stingray/error.hpp"

namespace stingray::ppd {

namespace {

void require_prime_power(const BigInt& q) {
  require(nt::prime_power_decompose(q).has_value(), ErrorCode::CompositeQ,
          nt::to_string(q) + " is not a prime power");
}

// r | q^e - 1 and r divides no q^(e/l) - 1 for primes l | e.
bool order_is(const BigInt& r, const BigInt& q, unsigned e) {
  if (nt::powmod(q, BigInt(e), r) != 1 % r) return false;
  for (unsigned l : nt::prime_divisors(e)) {
    if (nt::powmod(q, BigInt(e / l), r) == 1 % r) return false;
  }
  return true;
}

}  // namespace

BigInt multiplicative_order(const BigInt& r, const BigInt& q) {
  require(nt::is_prime(r), ErrorCode::InvalidArgument, nt::to_string(r) + " is not prime");
  require(q % r != 0, ErrorCode::NotCoprime, "q is divisible by r");
  BigInt n = r - 1;
  for (const auto& [l, k] : nt::factor(r - 1).factors) {
    for (unsigned i = 0; i < k; ++i) {
      if (nt::powmod(q, n / l, r) != 1) break;
      n /= l;
    }
  }
  return n;
}

PpdResult primitive_prime_divisors(const BigInt& q, unsigned e) {
  require(e >= 2, ErrorCode::InvalidArgument, "e must be at least 2");
  require(q >= 2, ErrorCode::CompositeQ, "q must be at least 2");
  require(nt::ipow(q, e) < (BigInt(1) << 512), ErrorCode::TooLarge, "q^e exceeds 2^512");
  require_prime_power(q);
  PpdResult out;
  out.q = q;
  out.e = e;
  const auto fac = nt::factor(nt::cyclotomic_value(e, q));
  out.certain = fac.certain;
  for (const auto& [r, k] : fac.factors) {
    if (order_is(r, q, e)) out.primes.push_back(r);
  }
  out.exists = !out.primes.empty();
  return out;
}

bool is_eppd_prime(const BigInt& r, const BigInt& q, unsigned e) {
  require(e >= 1, ErrorCode::InvalidArgument, "e must be positive");
  require(nt::is_prime(r), ErrorCode::InvalidArgument, nt::to_string(r) + " is not prime");
  require_prime_power(q);
  if (q % r == 0) return false;
  return order_is(r, q, e);
}

}  // namespace stingray::ppd
