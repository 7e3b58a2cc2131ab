#include "stingray/numtheory.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>

#include "stingray/error.hpp"

namespace stingray::nt {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr std::uint32_t kTrialBound = 1000000;

// Bases 2..41 make Miller-Rabin deterministic below this bound.
const BigInt kDeterministicBound("3317044064679887385961981");

bool fits_u64(const BigInt& n) { return n >= 0 && msb(n) < 64; }

u64 mod_small(const BigInt& n, u64 m) {
  const auto* limbs = n.backend().limbs();
  const std::size_t size = n.backend().size();
  u128 rem = 0;
  for (std::size_t i = size; i-- > 0;) {
    rem = ((rem << 64) | static_cast<u64>(limbs[i])) % m;
  }
  return static_cast<u64>(rem);
}

bool miller_rabin_u64(u64 n, u64 a) {
  if (a % n == 0) return true;
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  u64 x = powmod_u64(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = mulmod_u64(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

bool miller_rabin_big(const BigInt& n, const BigInt& a) {
  BigInt nm1 = n - 1;
  BigInt d = nm1;
  unsigned s = 0;
  while (!bit_test(d, 0)) {
    d >>= 1;
    ++s;
  }
  BigInt x = powmod(a % n, d, n);
  if (x == 0 || x == 1 || x == nm1) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = (x * x) % n;
    if (x == nm1) return true;
  }
  return false;
}

u64 pollard_brent_u64(u64 n, u64 c) {
  if (n % 2 == 0) return 2;
  auto f = [&](u64 x) { return static_cast<u64>((static_cast<u128>(mulmod_u64(x, x, n)) + c) % n); };
  u64 y = 2, x = 2, q = 1, g = 1, ys = 2;
  u64 r = 1;
  constexpr u64 m = 128;
  do {
    x = y;
    for (u64 i = 0; i < r; ++i) y = f(y);
    u64 k = 0;
    do {
      ys = y;
      for (u64 i = 0; i < std::min(m, r - k); ++i) {
        y = f(y);
        q = mulmod_u64(q, x > y ? x - y : y - x, n);
      }
      g = std::gcd(q, n);
      k += m;
    } while (k < r && g == 1);
    r <<= 1;
  } while (g == 1);
  if (g == n) {
    do {
      ys = f(ys);
      g = std::gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g;
}

BigInt pollard_brent_big(const BigInt& n, const BigInt& c) {
  auto f = [&](const BigInt& x) { return (x * x + c) % n; };
  BigInt y = 2, x = 2, q = 1, g = 1, ys = 2;
  unsigned long r = 1;
  constexpr unsigned long m = 128;
  do {
    x = y;
    for (unsigned long i = 0; i < r; ++i) y = f(y);
    unsigned long k = 0;
    do {
      ys = y;
      for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
        y = f(y);
        q = (q * (x > y ? BigInt(x - y) : BigInt(y - x))) % n;
      }
      g = gcd(q, n);
      k += m;
    } while (k < r && g == 1);
    r <<= 1;
  } while (g == 1);
  if (g == n) {
    do {
      ys = f(ys);
      g = gcd(x > ys ? BigInt(x - ys) : BigInt(ys - x), n);
    } while (g == 1);
  }
  return g;
}

// Splits a cofactor with no prime divisor below kTrialBound.
void split_large(const BigInt& n, std::vector<BigInt>& out, bool& certain) {
  if (n == 1) return;
  bool sure = true;
  if (is_prime(n, &sure)) {
    certain = certain && sure;
    out.push_back(n);
    return;
  }
  BigInt d;
  for (unsigned c = 1;; ++c) {
    if (fits_u64(n)) {
      d = BigInt(pollard_brent_u64(static_cast<u64>(n), c));
    } else {
      d = pollard_brent_big(n, BigInt(c));
    }
    if (d != n && d != 1) break;
  }
  split_large(d, out, certain);
  split_large(n / d, out, certain);
}

IntFactorization factor_uncached(BigInt n) {
  IntFactorization result;
  std::map<BigInt, unsigned> acc;
  for (std::uint32_t p : small_primes(kTrialBound)) {
    if (BigInt(p) * p > n) break;
    if (mod_small(n, p) != 0) continue;
    unsigned k = 0;
    while (mod_small(n, p) == 0) {
      n /= p;
      ++k;
    }
    acc[BigInt(p)] += k;
  }
  if (n > 1) {
    std::vector<BigInt> large;
    split_large(n, large, result.certain);
    for (auto& q : large) acc[q] += 1;
  }
  for (auto& [p, k] : acc) result.factors.emplace_back(p, k);
  return result;
}

}  // namespace

BigInt IntFactorization::value() const {
  BigInt v = 1;
  for (const auto& [p, k] : factors) v *= ipow(p, k);
  return v;
}

std::vector<BigInt> IntFactorization::primes() const {
  std::vector<BigInt> out;
  for (const auto& f : factors) out.push_back(f.first);
  return out;
}

u64 mulmod_u64(u64 a, u64 b, u64 mod) { return static_cast<u64>((u128)a * b % mod); }

u64 powmod_u64(u64 base, u64 exp, u64 mod) {
  u64 result = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) result = mulmod_u64(result, base, mod);
    base = mulmod_u64(base, base, mod);
    exp >>= 1;
  }
  return result;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (!miller_rabin_u64(n, a)) return false;
  }
  return true;
}

bool is_prime(const BigInt& n, bool* certain) {
  if (certain) *certain = true;
  if (n < 2) return false;
  if (fits_u64(n)) return is_prime(static_cast<u64>(n));
  for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u}) {
    if (mod_small(n, p) == 0) return false;
  }
  for (unsigned a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u}) {
    if (!miller_rabin_big(n, BigInt(a))) return false;
  }
  if (n < kDeterministicBound) return true;
  std::mt19937_64 rng(0x5EEDull ^ mod_small(n, 0xFFFFFFFBull));
  const BigInt span = n - 3;
  for (int round = 0; round < 64; ++round) {
    BigInt a = 0;
    for (int w = 0; w < 9; ++w) a = (a << 64) | BigInt(rng());
    a = a % span + 2;
    if (!miller_rabin_big(n, a)) return false;
  }
  if (certain) *certain = false;
  return true;
}

IntFactorization factor(const BigInt& n) {
  require(n >= 1, ErrorCode::InvalidArgument, "factor: n must be positive");
  static std::mutex mu;
  static std::map<BigInt, IntFactorization> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  IntFactorization f = factor_uncached(n);
  std::lock_guard lock(mu);
  cache.emplace(n, f);
  return f;
}

std::vector<std::pair<u64, unsigned>> factor_u64(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  if (n <= 1) return out;
  for (auto& [p, k] : factor(BigInt(n)).factors) out.emplace_back(static_cast<u64>(p), k);
  return out;
}

BigInt ipow(const BigInt& base, unsigned exp) { return boost::multiprecision::pow(base, exp); }

BigInt powmod(BigInt base, BigInt exp, const BigInt& mod) {
  return boost::multiprecision::powm(base % mod, exp, mod);
}

BigInt gcd(BigInt a, BigInt b) { return boost::multiprecision::gcd(a, b); }

BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

std::optional<std::pair<BigInt, unsigned>> prime_power_decompose(const BigInt& q) {
  if (q < 2) return std::nullopt;
  const unsigned bits = static_cast<unsigned>(msb(q)) + 1;
  for (unsigned a = bits; a > 0; --a) {
    // integer a-th root by bisection on the bit length
    BigInt lo = 1, hi = BigInt(1) << (bits / a + 1);
    while (lo < hi) {
      BigInt mid = (lo + hi + 1) / 2;
      if (ipow(mid, a) <= q) lo = mid; else hi = mid - 1;
    }
    if (ipow(lo, a) == q && is_prime(lo)) return std::make_pair(lo, a);
  }
  return std::nullopt;
}

BigInt cyclotomic_value(unsigned n, const BigInt& x) {
  // Phi_n(x) = prod_{d | n} (x^d - 1)^{mu(n/d)}
  BigInt num = 1, den = 1;
  for (unsigned d : divisors(n)) {
    unsigned m = n / d;
    int mu = 1;
    for (unsigned p : prime_divisors(m)) {
      if ((m / p) % p == 0) { mu = 0; break; }
      mu = -mu;
    }
    if (mu == 1) num *= ipow(x, d) - 1;
    if (mu == -1) den *= ipow(x, d) - 1;
  }
  return num / den;
}

std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    if (d * d != n) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

const std::vector<std::uint32_t>& small_primes(std::uint32_t limit) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::vector<std::uint32_t>> tables;
  std::lock_guard lock(mu);
  auto& primes = tables[limit];
  if (primes.empty() && limit > 2) {
    std::vector<bool> composite(limit, false);
    for (std::uint32_t i = 2; i < limit; ++i) {
      if (composite[i]) continue;
      primes.push_back(i);
      for (std::uint64_t j = std::uint64_t(i) * i; j < limit; j += i) composite[j] = true;
    }
  }
  return primes;
}

std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace stingray::nt
