#include "stingray/cyclo.hpp"

#include <numeric>

#include "stingray/error.hpp"
#include "stingray/numtheory.hpp"

namespace stingray::cyclo {

namespace {

void require_odd_prime(unsigned r) {
  require(r >= 3 && nt::is_prime(std::uint64_t{r}), ErrorCode::InvalidArgument,
          std::to_string(r) + " is not an odd prime");
}

}  // namespace

CyclotomicInt::CyclotomicInt(unsigned r, std::vector<std::int64_t> coeffs) : r_(r), b_(std::move(coeffs)) {
  require_odd_prime(r);
  require(b_.size() == r, ErrorCode::InvalidArgument, "expected " + std::to_string(r) + " coefficients");
  normalize();
}

void CyclotomicInt::normalize() {
  const std::int64_t b0 = b_[0];
  if (b0 == 0) return;
  for (auto& x : b_) x -= b0;
}

void CyclotomicInt::check_r(const CyclotomicInt& o) const {
  require(r_ == o.r_, ErrorCode::MismatchedR, std::to_string(r_) + " vs " + std::to_string(o.r_));
}

CyclotomicInt CyclotomicInt::zero(unsigned r) { return CyclotomicInt(r, std::vector<std::int64_t>(r, 0)); }

CyclotomicInt CyclotomicInt::integer(unsigned r, std::int64_t n) {
  std::vector<std::int64_t> b(r, 0);
  b[0] = n;
  return CyclotomicInt(r, std::move(b));
}

CyclotomicInt CyclotomicInt::zeta_power(unsigned r, unsigned k) {
  std::vector<std::int64_t> b(r, 0);
  b[k % r] = 1;
  return CyclotomicInt(r, std::move(b));
}

CyclotomicInt CyclotomicInt::from_multiplicities(unsigned r, const std::vector<std::uint64_t>& mults) {
  require(mults.size() == r, ErrorCode::MismatchedR, "multiplicity vector length");
  std::vector<std::int64_t> b(mults.begin(), mults.end());
  return CyclotomicInt(r, std::move(b));
}

CyclotomicInt CyclotomicInt::b5() { return zeta_power(5, 1) + zeta_power(5, 4); }

CyclotomicInt CyclotomicInt::c13() {
  return zeta_power(13, 1) + zeta_power(13, 12) + zeta_power(13, 5) + zeta_power(13, 8);
}

bool CyclotomicInt::is_rational() const {
  for (unsigned i = 2; i < r_; ++i)
    if (b_[i] != b_[1]) return false;
  return true;
}

std::int64_t CyclotomicInt::rational_value() const {
  require(is_rational(), ErrorCode::NotRational, to_string() + " is not rational");
  return -b_[1];
}

CyclotomicInt CyclotomicInt::operator+(const CyclotomicInt& o) const {
  check_r(o);
  std::vector<std::int64_t> b(r_);
  for (unsigned i = 0; i < r_; ++i) b[i] = b_[i] + o.b_[i];
  return CyclotomicInt(r_, std::move(b));
}

CyclotomicInt CyclotomicInt::operator-(const CyclotomicInt& o) const { return *this + (-o); }

CyclotomicInt CyclotomicInt::operator*(const CyclotomicInt& o) const {
  check_r(o);
  std::vector<std::int64_t> b(r_, 0);
  for (unsigned i = 0; i < r_; ++i)
    for (unsigned j = 0; j < r_; ++j) b[(i + j) % r_] += b_[i] * o.b_[j];
  return CyclotomicInt(r_, std::move(b));
}

CyclotomicInt CyclotomicInt::operator-() const { return scalar_mul(-1); }

CyclotomicInt CyclotomicInt::scalar_mul(std::int64_t k) const {
  std::vector<std::int64_t> b(r_);
  for (unsigned i = 0; i < r_; ++i) b[i] = b_[i] * k;
  return CyclotomicInt(r_, std::move(b));
}

CyclotomicInt CyclotomicInt::galois(std::int64_t k) const {
  const std::int64_t r = r_;
  const std::int64_t km = ((k % r) + r) % r;
  require(km != 0, ErrorCode::NonUnit, std::to_string(k) + " is not a unit mod " + std::to_string(r_));
  std::vector<std::int64_t> b(r_, 0);
  for (std::int64_t i = 0; i < r; ++i) b[(i * km) % r] += b_[i];
  return CyclotomicInt(r_, std::move(b));
}

std::string CyclotomicInt::to_string() const {
  if (is_rational()) return std::to_string(-b_[1]);
  std::string s;
  for (unsigned i = 0; i < r_; ++i) {
    if (i) s += ',';
    s += std::to_string(b_[i]);
  }
  return s;
}

std::string MultiplicitySolution::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < mults.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(mults[i]);
  }
  return s + ")";
}

MultiplicitySolution solve_multiplicities(const CyclotomicInt& chi, unsigned d, unsigned r) {
  require(chi.r() == r, ErrorCode::MismatchedR, "character lives in a different cyclotomic ring");
  require(d >= 1, ErrorCode::InvalidArgument, "dimension must be positive");
  const auto& b = chi.coeffs();
  const std::int64_t sum = std::accumulate(b.begin(), b.end(), std::int64_t{0});
  const std::int64_t num = static_cast<std::int64_t>(d) - sum;
  require(num % static_cast<std::int64_t>(r) == 0, ErrorCode::NoSolution,
          "d - sum(b) is not divisible by r");
  const std::int64_t c0 = num / static_cast<std::int64_t>(r);
  MultiplicitySolution out{r, d, std::vector<std::uint64_t>(r)};
  for (unsigned i = 0; i < r; ++i) {
    const std::int64_t c = b[i] + c0;
    require(c >= 0, ErrorCode::NoSolution, "negative multiplicity");
    out.mults[i] = static_cast<std::uint64_t>(c);
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Stingray: return "STINGRAY";
    case Verdict::Type2I: return "TYPE_2I";
    case Verdict::Type2II: return "TYPE_2II";
    case Verdict::Inconsistent: return "INCONSISTENT";
    case Verdict::Other: return "OTHER";
  }
  return "?";
}

Verdict stingray_criterion(unsigned r, unsigned d, const CyclotomicInt& chi) {
  require(chi.r() == r, ErrorCode::MismatchedR, "character lives in a different cyclotomic ring");
  const bool half = d % 2 == 0 && r == d / 2 + 1;
  const bool full = d % 2 == 0 && r == d + 1;
  require(half || full, ErrorCode::UnsupportedR,
          "criterion needs d even and r = d/2+1 or r = d+1; use solve_multiplicities");
  const auto h = static_cast<std::int64_t>(d / 2);
  if (half) {
    if (!chi.is_rational()) return Verdict::Inconsistent;
    const std::int64_t v = chi.rational_value();
    if (v == h - 1) return Verdict::Stingray;
    if (v == -2) return Verdict::Type2II;
    return Verdict::Inconsistent;
  }
  if (chi.is_rational() && chi.rational_value() == -1) return Verdict::Type2I;
  MultiplicitySolution sol;
  try {
    sol = solve_multiplicities(chi, d, r);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NoSolution) return Verdict::Inconsistent;
    throw;
  }
  bool stingray = sol.mults[0] == static_cast<std::uint64_t>(h);
  bool doubled = sol.mults[0] == 0;
  for (unsigned i = 1; i < r; ++i) {
    if (sol.mults[i] > 1) stingray = false;
    if (sol.mults[i] != 0 && sol.mults[i] != 2) doubled = false;
  }
  if (stingray) return Verdict::Stingray;
  if (doubled) return Verdict::Type2II;
  return Verdict::Other;
}

std::vector<PowerClass> power_classes(const CyclotomicInt& chi) {
  std::vector<PowerClass> out;
  for (unsigned j = 1; j < chi.r(); ++j) {
    CyclotomicInt v = chi.galois(j);
    bool found = false;
    for (auto& c : out) {
      if (c.value == v) {
        ++c.size;
        found = true;
        break;
      }
    }
    if (!found) out.push_back({std::move(v), 1});
  }
  return out;
}

boost::rational<std::int64_t> trivial_multiplicity(const std::vector<PowerClass>& classes, unsigned d,
                                                   unsigned r) {
  unsigned total = 0;
  CyclotomicInt acc = CyclotomicInt::integer(r, d);
  for (const auto& c : classes) {
    require(c.value.r() == r, ErrorCode::MismatchedR, "class value lives in a different ring");
    total += c.size;
    acc = acc + c.value.scalar_mul(c.size);
  }
  require(total == r - 1, ErrorCode::InvalidArgument, "class sizes must sum to r - 1");
  return {acc.rational_value(), static_cast<std::int64_t>(r)};
}

}  // namespace stingray::cyclo
