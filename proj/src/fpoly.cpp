#include "stingray/fpoly.hpp"

#include <algorithm>

#include "stingray/error.hpp"
#include "stingray/random.hpp"

namespace stingray::poly {

namespace {

void check_same(const DensePoly& a, const DensePoly& b) {
  require(a.field() == b.field(), ErrorCode::FieldMismatch,
          a.field().name() + " vs " + b.field().name());
}

DensePoly t_poly(const FieldSpec& f) { return DensePoly::monomial(f, 1); }

DensePoly mulmod(const DensePoly& a, const DensePoly& b, const DensePoly& m) { return (a * b) % m; }

// x^(q^k) mod m for the base field order q, applied k times to x.
DensePoly frob_power(DensePoly x, unsigned k, const DensePoly& m) {
  const BigInt q = x.field().order();
  for (unsigned i = 0; i < k; ++i) x = powmod(x, q, m);
  return x;
}

// p-th root of a polynomial whose exponents are all multiples of p.
DensePoly pth_root(const DensePoly& f) {
  const FieldSpec& F = f.field();
  const std::uint64_t p = F.characteristic();
  std::vector<Elt> c(f.degree() / p + 1, 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = F.frobenius(f[i * p], F.degree() - 1);  // inverse Frobenius
  }
  return DensePoly(F, c);
}

void squarefree(const DensePoly& f, unsigned scale, std::vector<std::pair<DensePoly, unsigned>>& out) {
  if (f.degree() < 1) return;
  DensePoly c = gcd(f, f.derivative());
  DensePoly w = f / c;
  unsigned i = 1;
  while (w.degree() > 0) {
    DensePoly y = gcd(w, c);
    DensePoly z = w / y;
    if (z.degree() > 0) out.emplace_back(z.monic(), i * scale);
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) {
    squarefree(pth_root(c).monic(), scale * static_cast<unsigned>(f.field().characteristic()), out);
  }
}

// f squarefree monic -> (product of its irreducible factors of degree k, k)
std::vector<std::pair<DensePoly, unsigned>> distinct_degree(DensePoly f) {
  std::vector<std::pair<DensePoly, unsigned>> out;
  const DensePoly t = t_poly(f.field());
  DensePoly h = t % f;
  for (unsigned k = 1; f.degree() >= 2 * static_cast<int>(k); ++k) {
    h = powmod(h, BigInt(f.field().order()), f);
    DensePoly g = gcd(h - t, f);
    if (g.degree() > 0) {
      out.emplace_back(g, k);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, static_cast<unsigned>(f.degree()));
  return out;
}

DensePoly random_poly(const FieldSpec& F, int below_degree, Rng& rng) {
  std::vector<Elt> c(below_degree);
  for (auto& x : c) x = below(rng, F.order());
  return DensePoly(F, c);
}

// f monic squarefree, all irreducible factors of degree k.
void equal_degree(const DensePoly& f, unsigned k, Rng& rng, std::vector<DensePoly>& out) {
  const int n = f.degree();
  if (n <= 0) return;
  if (n == static_cast<int>(k)) {
    out.push_back(f);
    return;
  }
  const FieldSpec& F = f.field();
  const BigInt qk = nt::ipow(BigInt(F.order()), k);
  const bool even = F.characteristic() == 2;
  for (;;) {
    DensePoly a = random_poly(F, n, rng);
    if (a.degree() < 1) continue;
    DensePoly b(F);
    if (even) {
      // trace from GF(2^m) to GF(2), m = a*k
      const unsigned m = F.degree() * k;
      DensePoly term = a % f;
      b = term;
      for (unsigned i = 1; i < m; ++i) {
        term = mulmod(term, term, f);
        b = b + term;
      }
    } else {
      b = powmod(a, (qk - 1) / 2, f) - DensePoly::constant(F, 1);
    }
    DensePoly g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < n) {
      equal_degree(g, k, rng, out);
      equal_degree(f / g, k, rng, out);
      return;
    }
  }
}

}  // namespace

// ---- DensePoly ----

DensePoly::DensePoly(FieldSpec field) : field_(std::move(field)) {}

DensePoly::DensePoly(FieldSpec field, std::vector<Elt> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  for (Elt x : c_) require(field_.contains(x), ErrorCode::InvalidArgument, "coefficient out of range");
  trim();
}

DensePoly DensePoly::constant(const FieldSpec& field, Elt c) { return DensePoly(field, {c}); }

DensePoly DensePoly::monomial(const FieldSpec& field, unsigned degree, Elt c) {
  std::vector<Elt> v(degree + 1, 0);
  v[degree] = c;
  return DensePoly(field, std::move(v));
}

DensePoly DensePoly::linear(const FieldSpec& field, Elt c) {
  return DensePoly(field, {field.neg(c), 1});
}

void DensePoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Elt DensePoly::eval(Elt x) const {
  Elt y = 0;
  for (std::size_t i = c_.size(); i-- > 0;) y = field_.add(field_.mul(y, x), c_[i]);
  return y;
}

DensePoly DensePoly::monic() const {
  if (is_zero() || leading() == 1) return *this;
  return scaled(field_.inv(leading()));
}

DensePoly DensePoly::derivative() const {
  std::vector<Elt> d;
  for (std::size_t i = 1; i < c_.size(); ++i) {
    d.push_back(field_.mul(field_.from_int(static_cast<std::int64_t>(i % field_.characteristic())), c_[i]));
  }
  return DensePoly(field_, std::move(d));
}

DensePoly DensePoly::scaled(Elt s) const {
  std::vector<Elt> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_.mul(c_[i], s);
  return DensePoly(field_, std::move(v));
}

DensePoly DensePoly::operator+(const DensePoly& o) const {
  check_same(*this, o);
  std::vector<Elt> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_.add((*this)[i], o[i]);
  return DensePoly(field_, std::move(v));
}

DensePoly DensePoly::operator-(const DensePoly& o) const {
  check_same(*this, o);
  std::vector<Elt> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_.sub((*this)[i], o[i]);
  return DensePoly(field_, std::move(v));
}

DensePoly DensePoly::operator*(const DensePoly& o) const {
  check_same(*this, o);
  if (is_zero() || o.is_zero()) return DensePoly(field_);
  std::vector<Elt> v(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      v[i + j] = field_.add(v[i + j], field_.mul(c_[i], o.c_[j]));
    }
  }
  return DensePoly(field_, std::move(v));
}

DensePoly DensePoly::operator-() const { return DensePoly(field_) - *this; }

bool DensePoly::operator==(const DensePoly& o) const { return field_ == o.field_ && c_ == o.c_; }

std::string DensePoly::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(c_[i]);
  }
  return s;
}

bool canonical_less(const DensePoly& a, const DensePoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.coeffs() < b.coeffs();
}

// ---- division and friends ----

std::pair<DensePoly, DensePoly> divmod(const DensePoly& a, const DensePoly& b) {
  check_same(a, b);
  require(!b.is_zero(), ErrorCode::DivisionByZero, "polynomial division by zero");
  const FieldSpec& F = a.field();
  if (a.degree() < b.degree()) return {DensePoly(F), a};
  std::vector<Elt> r = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  const Elt lead_inv = F.inv(b.leading());
  std::vector<Elt> quo(a.degree() - db + 1, 0);
  for (int k = a.degree(); k >= db; --k) {
    Elt c = r[k];
    if (c == 0) continue;
    c = F.mul(c, lead_inv);
    quo[k - db] = c;
    for (int i = 0; i <= db; ++i) r[k - db + i] = F.sub(r[k - db + i], F.mul(c, bc[i]));
  }
  r.resize(db);
  return {DensePoly(F, std::move(quo)), DensePoly(F, std::move(r))};
}

DensePoly operator/(const DensePoly& a, const DensePoly& b) { return divmod(a, b).first; }
DensePoly operator%(const DensePoly& a, const DensePoly& b) { return divmod(a, b).second; }

DensePoly gcd(const DensePoly& a, const DensePoly& b) {
  check_same(a, b);
  DensePoly x = a, y = b;
  while (!y.is_zero()) {
    DensePoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

DensePoly lcm(const DensePoly& a, const DensePoly& b) {
  if (a.is_zero() || b.is_zero()) return DensePoly(a.field());
  return (a / gcd(a, b) * b).monic();
}

DensePoly pow(const DensePoly& base, unsigned e) {
  DensePoly result = DensePoly::constant(base.field(), 1);
  DensePoly b = base;
  while (e) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return result;
}

DensePoly powmod(const DensePoly& base, const BigInt& e, const DensePoly& m) {
  require(e >= 0, ErrorCode::InvalidArgument, "negative exponent");
  DensePoly result = DensePoly::constant(base.field(), 1) % m;
  if (e == 0) return result;
  DensePoly b = base % m;
  const auto top = static_cast<long>(msb(e));
  for (long i = top; i >= 0; --i) {
    result = mulmod(result, result, m);
    if (bit_test(e, static_cast<unsigned>(i))) result = mulmod(result, b, m);
  }
  return result;
}

bool is_irreducible(const DensePoly& f) {
  require(f.degree() >= 1, ErrorCode::ZeroPolynomial, "irreducibility of a constant");
  const DensePoly g = f.monic();
  const unsigned n = static_cast<unsigned>(g.degree());
  if (n == 1) return true;
  const DensePoly t = t_poly(g.field());
  if (frob_power(t, n, g) != t % g) return false;
  for (unsigned l : nt::prime_divisors(n)) {
    DensePoly h = frob_power(t, n / l, g);
    if (gcd(h - t, g).degree() != 0) return false;
  }
  return true;
}

// ---- factorization ----

DensePoly Factorization::product() const {
  DensePoly acc = DensePoly::constant(unit.field(), unit.encode());
  for (const auto& [f, m] : factors) acc = acc * pow(f, m);
  return acc;
}

Factorization factor(const DensePoly& f, std::uint64_t seed) {
  require(!f.is_zero(), ErrorCode::ZeroPolynomial, "factor of zero polynomial");
  const FieldSpec& F = f.field();
  Factorization out{ff::FqElem(F, f.leading()), {}};
  if (f.degree() == 0) return out;
  Rng rng(seed);
  std::vector<std::pair<DensePoly, unsigned>> parts;
  squarefree(f.monic(), 1, parts);
  for (const auto& [part, mult] : parts) {
    for (const auto& [block, k] : distinct_degree(part)) {
      std::vector<DensePoly> irr;
      equal_degree(block.monic(), k, rng, irr);
      for (auto& g : irr) out.factors.emplace_back(g.monic(), mult);
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& x, const auto& y) { return canonical_less(x.first, y.first); });
  // Squarefree parts are pairwise coprime except across p-th-root levels.
  std::vector<std::pair<DensePoly, unsigned>> merged;
  for (auto& fm : out.factors) {
    if (!merged.empty() && merged.back().first == fm.first) {
      merged.back().second += fm.second;
    } else {
      merged.push_back(std::move(fm));
    }
  }
  out.factors = std::move(merged);
  return out;
}

std::vector<Elt> roots(const DensePoly& f) {
  require(!f.is_zero(), ErrorCode::ZeroPolynomial, "roots of zero polynomial");
  std::vector<Elt> out;
  if (f.degree() < 1) return out;
  const FieldSpec& F = f.field();
  const DensePoly g = f.monic();
  const DensePoly t = t_poly(F);
  DensePoly split = gcd(powmod(t, BigInt(F.order()), g) - t, g);
  if (split.degree() < 1) return out;
  Rng rng(kDefaultSeed);
  std::vector<DensePoly> lin;
  equal_degree(split, 1, rng, lin);
  for (const auto& l : lin) out.push_back(F.neg(l[0]));
  std::sort(out.begin(), out.end());
  return out;
}

DensePoly cyclotomic_quotient(unsigned r, const FieldSpec& field) {
  require(nt::is_prime(std::uint64_t{r}), ErrorCode::InvalidArgument, std::to_string(r) + " is not prime");
  require(r != field.characteristic(), ErrorCode::CharacteristicDividesR,
          "r equals the characteristic");
  return DensePoly(field, std::vector<Elt>(r, 1));
}

}  // namespace stingray::poly
