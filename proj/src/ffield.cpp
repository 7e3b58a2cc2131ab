#include "stingray/ffield.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "stingray/error.hpp"
#include "stingray/fpoly.hpp"

namespace stingray::ff {

namespace {

// Log/exp tables are built for extension fields up to this size.
constexpr std::uint64_t kTableLimit = 1ull << 20;

}  // namespace

struct FieldData {
  std::uint64_t p = 0;
  unsigned a = 1;
  std::uint64_t q = 0;
  std::vector<std::uint64_t> modulus;  // ascending, monic; empty when a == 1
  std::vector<std::uint64_t> ppow;     // p^0 .. p^a
  std::vector<std::pair<std::uint64_t, unsigned>> unit_factors;
  Elt primitive = 0;
  std::vector<std::uint32_t> log;  // log[x] for x != 0
  std::vector<std::uint32_t> exp;  // exp[i] = primitive^i, i < q-1

  bool tables() const { return !exp.empty(); }

  std::vector<std::uint64_t> digits(Elt x) const {
    std::vector<std::uint64_t> d(a);
    for (unsigned i = 0; i < a; ++i) {
      d[i] = x % p;
      x /= p;
    }
    return d;
  }

  Elt undigits(const std::vector<std::uint64_t>& d) const {
    Elt x = 0;
    for (unsigned i = a; i-- > 0;) x = x * p + (i < d.size() ? d[i] : 0);
    return x;
  }

  Elt add(Elt x, Elt y) const {
    if (a == 1) {
      Elt s = x + y;
      return s >= p ? s - p : s;
    }
    if (p == 2) return x ^ y;
    Elt out = 0;
    for (unsigned i = 0; i < a; ++i) {
      std::uint64_t s = x % p + y % p;
      if (s >= p) s -= p;
      out += s * ppow[i];
      x /= p;
      y /= p;
    }
    return out;
  }

  Elt neg(Elt x) const {
    if (a == 1) return x == 0 ? 0 : p - x;
    if (p == 2) return x;
    Elt out = 0;
    for (unsigned i = 0; i < a; ++i) {
      std::uint64_t c = x % p;
      out += (c == 0 ? 0 : p - c) * ppow[i];
      x /= p;
    }
    return out;
  }

  Elt mul_slow(Elt x, Elt y) const {
    if (x == 0 || y == 0) return 0;
    if (p == 2) {
      // carry-less product, then reduction by the modulus bit pattern
      unsigned __int128 prod = 0;
      for (unsigned i = 0; i < a; ++i) {
        if ((y >> i) & 1) prod ^= static_cast<unsigned __int128>(x) << i;
      }
      unsigned __int128 mod = 0;
      for (unsigned i = 0; i <= a; ++i) {
        if (modulus[i]) mod |= static_cast<unsigned __int128>(1) << i;
      }
      for (int i = 2 * static_cast<int>(a) - 2; i >= static_cast<int>(a); --i) {
        if ((prod >> i) & 1) prod ^= mod << (i - a);
      }
      return static_cast<Elt>(prod);
    }
    auto dx = digits(x), dy = digits(y);
    std::vector<std::uint64_t> prod(2 * a - 1, 0);
    for (unsigned i = 0; i < a; ++i) {
      if (dx[i] == 0) continue;
      for (unsigned j = 0; j < a; ++j) prod[i + j] = (prod[i + j] + dx[i] * dy[j]) % p;
    }
    for (unsigned k = 2 * a - 1; k-- > a;) {
      std::uint64_t c = prod[k];
      if (c == 0) continue;
      prod[k] = 0;
      for (unsigned i = 0; i < a; ++i) {
        prod[k - a + i] = (prod[k - a + i] + c * (p - modulus[i])) % p;
      }
    }
    prod.resize(a);
    return undigits(prod);
  }

  Elt mul(Elt x, Elt y) const {
    if (a == 1) return x * y % p;
    if (x == 0 || y == 0) return 0;
    if (tables()) {
      std::uint64_t s = std::uint64_t(log[x]) + log[y];
      if (s >= q - 1) s -= q - 1;
      return exp[s];
    }
    return mul_slow(x, y);
  }

  Elt pow(Elt x, std::uint64_t e) const {
    Elt result = 1;
    while (e) {
      if (e & 1) result = mul(result, x);
      x = mul(x, x);
      e >>= 1;
    }
    return result;
  }

  Elt inv(Elt x) const {
    require(x != 0, ErrorCode::DivisionByZero, "inverse of zero");
    if (a == 1) return nt::powmod_u64(x, p - 2, p);
    if (tables()) return exp[log[x] == 0 ? 0 : q - 1 - log[x]];
    return pow(x, q - 2);
  }

  std::uint64_t order_of(Elt x) const {
    require(x != 0, ErrorCode::DivisionByZero, "order of zero");
    std::uint64_t n = q - 1;
    for (auto [l, k] : unit_factors) {
      for (unsigned i = 0; i < k; ++i) {
        if (pow(x, n / l) != 1) break;
        n /= l;
      }
    }
    return n;
  }
};

namespace {

using Key = std::tuple<std::uint64_t, unsigned, std::vector<std::uint64_t>>;

std::mutex g_field_mu;
std::map<Key, std::shared_ptr<const FieldData>>& field_cache() {
  static std::map<Key, std::shared_ptr<const FieldData>> cache;
  return cache;
}

std::map<std::pair<std::uint64_t, unsigned>, std::vector<std::uint64_t>>& default_moduli() {
  static std::map<std::pair<std::uint64_t, unsigned>, std::vector<std::uint64_t>> cache;
  return cache;
}

// Lexicographically smallest monic irreducible of degree a: the tuple
// (c_0, ..., c_{a-1}) is enumerated with c_0 most significant.
std::vector<std::uint64_t> smallest_irreducible(std::uint64_t p, unsigned a) {
  FieldSpec prime = make_field(p, 1);
  std::vector<std::uint64_t> c(a + 1, 0);
  c[a] = 1;
  c[0] = 1;  // c_0 = 0 gives a multiple of t
  for (;;) {
    poly::DensePoly f(prime, c);
    if (poly::is_irreducible(f)) return c;
    unsigned i = a;
    do {
      --i;
      if (++c[i] < p) break;
      c[i] = 0;
    } while (i > 0);
    require(c[0] != 0 || i > 0, ErrorCode::InvalidArgument, "no irreducible found");
  }
}

std::shared_ptr<FieldData> build(std::uint64_t p, unsigned a, std::vector<std::uint64_t> modulus) {
  auto d = std::make_shared<FieldData>();
  d->p = p;
  d->a = a;
  d->modulus = std::move(modulus);
  d->ppow.resize(a + 1);
  d->ppow[0] = 1;
  for (unsigned i = 1; i <= a; ++i) d->ppow[i] = d->ppow[i - 1] * p;
  d->q = d->ppow[a];
  d->unit_factors = nt::factor_u64(d->q - 1);
  for (Elt g = 1; g < d->q; ++g) {
    if (d->order_of(g) == d->q - 1) {
      d->primitive = g;
      break;
    }
  }
  if (a > 1 && d->q <= kTableLimit) {
    d->exp.resize(d->q - 1);
    d->log.assign(d->q, 0);
    Elt x = 1;
    for (std::uint64_t i = 0; i + 1 < d->q; ++i) {
      d->exp[i] = static_cast<std::uint32_t>(x);
      d->log[x] = static_cast<std::uint32_t>(i);
      x = d->mul_slow(x, d->primitive);
    }
  }
  return d;
}

}  // namespace

// ---- FieldSpec ----

std::uint64_t FieldSpec::characteristic() const { return d_->p; }
unsigned FieldSpec::degree() const { return d_->a; }
std::uint64_t FieldSpec::order() const { return d_->q; }
const std::vector<std::uint64_t>& FieldSpec::modulus() const { return d_->modulus; }

bool FieldSpec::operator==(const FieldSpec& other) const {
  if (d_ == other.d_) return true;
  return d_->p == other.d_->p && d_->a == other.d_->a && d_->modulus == other.d_->modulus;
}

Elt FieldSpec::from_int(std::int64_t v) const {
  const auto p = static_cast<std::int64_t>(d_->p);
  std::int64_t r = v % p;
  return static_cast<Elt>(r < 0 ? r + p : r);
}

Elt FieldSpec::generator_x() const {
  require(d_->a > 1, ErrorCode::InvalidArgument, "prime field has no polynomial generator");
  return d_->p;
}

Elt FieldSpec::add(Elt x, Elt y) const { return d_->add(x, y); }
Elt FieldSpec::sub(Elt x, Elt y) const { return d_->add(x, d_->neg(y)); }
Elt FieldSpec::neg(Elt x) const { return d_->neg(x); }
Elt FieldSpec::mul(Elt x, Elt y) const { return d_->mul(x, y); }
Elt FieldSpec::inv(Elt x) const { return d_->inv(x); }
Elt FieldSpec::pow(Elt x, std::uint64_t e) const { return d_->pow(x, e); }

Elt FieldSpec::pow(Elt x, const BigInt& e) const {
  require(e >= 0, ErrorCode::InvalidArgument, "negative exponent");
  if (e == 0) return 1;
  if (x == 0) return 0;
  return d_->pow(x, static_cast<std::uint64_t>(e % (d_->q - 1)));
}

Elt FieldSpec::frobenius(Elt x, unsigned k) const {
  k %= d_->a;
  for (unsigned i = 0; i < k; ++i) x = d_->pow(x, d_->p);
  return x;
}

std::vector<std::uint64_t> FieldSpec::coeffs(Elt x) const { return d_->digits(x); }

Elt FieldSpec::from_coeffs(std::span<const std::uint64_t> c) const {
  require(c.size() <= d_->a, ErrorCode::DegreeMismatch, "too many coefficients");
  Elt x = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    require(c[i] < d_->p, ErrorCode::InvalidArgument, "coefficient out of range");
    x += c[i] * d_->ppow[i];
  }
  return x;
}

std::uint64_t FieldSpec::element_order(Elt x) const { return d_->order_of(x); }
Elt FieldSpec::primitive_element() const { return d_->primitive; }

const std::vector<std::pair<std::uint64_t, unsigned>>& FieldSpec::unit_group_factors() const {
  return d_->unit_factors;
}

std::string FieldSpec::name() const {
  if (d_->a == 1) return "GF(" + std::to_string(d_->p) + ")";
  return "GF(" + std::to_string(d_->p) + "^" + std::to_string(d_->a) + ")";
}

FieldSpec make_field(std::uint64_t p, unsigned a, std::optional<std::vector<std::uint64_t>> modulus) {
  require(p < (1ull << 31), ErrorCode::FieldTooLarge, "characteristic must be below 2^31");
  require(nt::is_prime(p), ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  require(a >= 1, ErrorCode::DegreeMismatch, "extension degree must be positive");
  {
    BigInt q = nt::ipow(BigInt(p), a);
    require(q < (BigInt(1) << 62), ErrorCode::FieldTooLarge, "field order must be below 2^62");
  }
  std::vector<std::uint64_t> mod;
  if (a > 1) {
    if (modulus) {
      mod = *modulus;
      while (!mod.empty() && mod.back() == 0) mod.pop_back();
      require(mod.size() == a + 1, ErrorCode::DegreeMismatch, "modulus degree differs from a");
      require(mod.back() == 1, ErrorCode::ReducibleModulus, "modulus must be monic");
      for (auto c : mod) require(c < p, ErrorCode::InvalidArgument, "modulus coefficient out of range");
      poly::DensePoly f(make_field(p, 1), mod);
      require(poly::is_irreducible(f), ErrorCode::ReducibleModulus, "modulus is reducible");
    } else {
      std::optional<std::vector<std::uint64_t>> cached;
      {
        std::lock_guard lock(g_field_mu);
        auto it = default_moduli().find({p, a});
        if (it != default_moduli().end()) cached = it->second;
      }
      if (cached) {
        mod = *cached;
      } else {
        mod = smallest_irreducible(p, a);
        std::lock_guard lock(g_field_mu);
        default_moduli()[{p, a}] = mod;
      }
    }
  } else if (modulus && !modulus->empty()) {
    // A degree-one modulus t - c carries no information; only accept t + 0.
    std::vector<std::uint64_t> m = *modulus;
    require(m.size() == 2 && m[1] == 1, ErrorCode::DegreeMismatch, "modulus degree differs from a");
  }

  Key key{p, a, mod};
  {
    std::lock_guard lock(g_field_mu);
    auto it = field_cache().find(key);
    if (it != field_cache().end()) return FieldSpec(it->second);
  }
  auto data = build(p, a, mod);
  std::lock_guard lock(g_field_mu);
  auto [it, inserted] = field_cache().emplace(key, std::move(data));
  return FieldSpec(it->second);
}

FieldSpec make_field_of_order(std::uint64_t q) {
  auto pa = nt::prime_power_decompose(BigInt(q));
  require(pa.has_value(), ErrorCode::CompositeQ, std::to_string(q) + " is not a prime power");
  return make_field(static_cast<std::uint64_t>(pa->first), pa->second);
}

FieldSpec extension_field(const FieldSpec& base, unsigned k) {
  require(k >= 1, ErrorCode::InvalidArgument, "extension degree must be positive");
  return make_field(base.characteristic(), base.degree() * k);
}

// ---- FqElem ----

FqElem::FqElem(FieldSpec field, Elt value) : field_(std::move(field)), value_(value) {
  require(field_.contains(value_), ErrorCode::InvalidArgument, "encoding out of range");
}

FqElem FqElem::from_coeffs(const FieldSpec& field, std::span<const std::uint64_t> c) {
  return FqElem(field, field.from_coeffs(c));
}

void FqElem::check_same(const FqElem& o) const {
  require(field_ == o.field_, ErrorCode::FieldMismatch, field_.name() + " vs " + o.field_.name());
}

FqElem FqElem::operator+(const FqElem& o) const {
  check_same(o);
  return {field_, field_.add(value_, o.value_)};
}
FqElem FqElem::operator-(const FqElem& o) const {
  check_same(o);
  return {field_, field_.sub(value_, o.value_)};
}
FqElem FqElem::operator*(const FqElem& o) const {
  check_same(o);
  return {field_, field_.mul(value_, o.value_)};
}
FqElem FqElem::operator/(const FqElem& o) const {
  check_same(o);
  return {field_, field_.div(value_, o.value_)};
}
FqElem FqElem::operator-() const { return {field_, field_.neg(value_)}; }
bool FqElem::operator==(const FqElem& o) const { return field_ == o.field_ && value_ == o.value_; }
FqElem FqElem::inv() const { return {field_, field_.inv(value_)}; }
FqElem FqElem::pow(std::uint64_t e) const { return {field_, field_.pow(value_, e)}; }
FqElem FqElem::pow(const BigInt& e) const { return {field_, field_.pow(value_, e)}; }
FqElem FqElem::frobenius(unsigned k) const { return {field_, field_.frobenius(value_, k)}; }
std::uint64_t FqElem::order() const { return field_.element_order(value_); }

// ---- embeddings ----

Embedding::Embedding(FieldSpec source, FieldSpec target)
    : source_(std::move(source)), target_(std::move(target)) {
  require(source_.characteristic() == target_.characteristic(), ErrorCode::NoEmbedding,
          "characteristics differ");
  require(target_.degree() % source_.degree() == 0, ErrorCode::NoEmbedding,
          source_.name() + " does not embed in " + target_.name());
  const unsigned a = source_.degree();
  if (a == 1) return;
  std::vector<Elt> mod(source_.modulus().begin(), source_.modulus().end());
  auto rs = poly::roots(poly::DensePoly(target_, mod));
  require(!rs.empty(), ErrorCode::NoEmbedding, "modulus has no root in target");
  alpha_ = rs.front();
  alpha_powers_.resize(a);
  alpha_powers_[0] = 1;
  for (unsigned i = 1; i < a; ++i) alpha_powers_[i] = target_.mul(alpha_powers_[i - 1], alpha_);
}

Elt Embedding::operator()(Elt x) const {
  require(source_.contains(x), ErrorCode::InvalidArgument, "encoding out of range");
  if (source_.degree() == 1) return x;
  const auto c = source_.coeffs(x);
  Elt y = 0;
  for (unsigned i = 0; i < c.size(); ++i) {
    if (c[i] != 0) y = target_.add(y, target_.mul(c[i], alpha_powers_[i]));
  }
  return y;
}

const Embedding& embedding(const FieldSpec& source, const FieldSpec& target) {
  using EKey = std::pair<Key, Key>;
  static std::mutex mu;
  static std::map<EKey, std::unique_ptr<Embedding>> cache;
  EKey key{{source.characteristic(), source.degree(), source.modulus()},
           {target.characteristic(), target.degree(), target.modulus()}};
  {
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto e = std::make_unique<Embedding>(source, target);
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.emplace(key, std::move(e));
  return *it->second;
}

FqElem embed(const FqElem& x, const FieldSpec& target) {
  return FqElem(target, embedding(x.field(), target)(x.encode()));
}

}  // namespace stingray::ff
