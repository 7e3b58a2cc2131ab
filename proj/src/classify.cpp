#include "stingray/classify.hpp"

#include "stingray/error.hpp"
#include "stingray/ppd.hpp"

namespace stingray::classify {

namespace {

using poly::DensePoly;

bool is_t_minus_one(const DensePoly& f) {
  return f.degree() == 1 && f[1] == 1 && f[0] == f.field().neg(1);
}

}  // namespace

std::string ElementClassification::tag_string() const {
  switch (tag) {
    case Tag::Stingray: return "STINGRAY(" + std::to_string(e) + ")";
    case Tag::PpdGeneral: return "PPD_GENERAL(" + std::to_string(e) + "," + std::to_string(blocks) + ")";
    case Tag::Type2I: return "TYPE_2I";
    case Tag::Type2II: return "TYPE_2II";
    case Tag::NotPpd: return "NOT_PPD";
  }
  return "?";
}

std::string ElementClassification::report() const {
  std::string b;
  for (const auto& [deg, mult] : irreducible_blocks) {
    if (!b.empty()) b += ',';
    b += std::to_string(deg) + "^" + std::to_string(mult);
  }
  if (b.empty()) b = "-";
  std::string s = "tag=" + tag_string() + " d=" + std::to_string(d) + " q=" + std::to_string(q) +
                  " order=" + nt::to_string(order) + " semisimple=" + (semisimple ? "1" : "0") +
                  " fixed_dim=" + std::to_string(fixed_dim) + " blocks=" + b + " ppd=" + (ppd ? "1" : "0");
  if (!diagnostics.empty()) s += " note=" + diagnostics;
  return s;
}

ElementClassification classify_element(const DenseMatrix& g, unsigned e) {
  require(g.is_square(), ErrorCode::NotSquare, "classify needs a square matrix");
  require(g.is_invertible(), ErrorCode::Singular, "classify needs an invertible matrix");
  const auto& F = g.field();
  const unsigned d = static_cast<unsigned>(g.rows());
  require(e >= 1 && e <= d, ErrorCode::InvalidArgument, "e must lie in 1..d");

  ElementClassification c;
  c.d = d;
  c.q = F.order();
  c.e = e;
  const auto mp = mat::min_poly(g);
  const auto cp = poly::factor(mat::char_poly(g));
  const auto mpf = poly::factor(mp);
  c.semisimple = true;
  for (const auto& [f, m] : mpf.factors) c.semisimple = c.semisimple && m == 1;
  c.fixed_dim = static_cast<unsigned>(mat::kernel(g - DenseMatrix::identity(F, d)).dim());
  c.order = mat::matrix_order(g);

  unsigned one_mult = 0;
  std::vector<std::pair<DensePoly, unsigned>> others;
  for (const auto& [f, m] : cp.factors) {
    if (is_t_minus_one(f)) {
      one_mult = m;
    } else {
      others.emplace_back(f, m);
      c.irreducible_blocks.emplace_back(static_cast<unsigned>(f.degree()), m);
    }
  }

  const BigInt& n = c.order;
  if (n > 1 && nt::is_prime(n)) {
    c.ppd = ppd::is_eppd_prime(n, BigInt(c.q), e);
  } else if (n == 9 && c.q == 2 && e == 6) {
    c.ppd = true;  // 9 is a primitive prime-power divisor of 2^6 - 1
  } else if (n > 1) {
    c.diagnostics = "order-not-prime";
  }

  const bool stingray_shape = others.size() == 1 && others[0].second == 1 &&
                              others[0].first.degree() == static_cast<int>(e) && one_mult == d - e &&
                              c.fixed_dim == d - e;
  if (stingray_shape) {
    c.tag = Tag::Stingray;
    return c;
  }
  if (!c.ppd) return c;

  if (2 * e == d && one_mult == 0) {
    if (others.size() == 2 && others[0].second == 1 && others[1].second == 1 &&
        others[0].first.degree() == static_cast<int>(e) && others[1].first.degree() == static_cast<int>(e)) {
      c.tag = Tag::Type2I;
      return c;
    }
    if (others.size() == 1 && others[0].second == 2 && others[0].first.degree() == static_cast<int>(e) &&
        mp == others[0].first) {
      c.tag = Tag::Type2II;
      return c;
    }
  }
  unsigned t = 0;
  bool all_e = c.semisimple;
  for (const auto& [f, m] : others) {
    all_e = all_e && f.degree() == static_cast<int>(e);
    t += m;
  }
  if (all_e && t >= 2) {
    c.tag = Tag::PpdGeneral;
    c.blocks = t;
  }
  return c;
}

bool is_stingray_oracle(const DenseMatrix& g, unsigned e) {
  require(g.is_square(), ErrorCode::NotSquare, "oracle needs a square matrix");
  require(g.is_invertible(), ErrorCode::Singular, "oracle needs an invertible matrix");
  const std::size_t d = g.rows();
  const DenseMatrix h = g - DenseMatrix::identity(g.field(), d);
  const mat::Subspace F = mat::kernel(h);
  const mat::Subspace W = mat::image(h);
  if (F.dim() != d - e || W.dim() != e) return false;
  if (mat::intersect(F, W).dim() != 0) return false;
  for (const auto& v : W.basis()) {
    if (!W.contains(mat::vec_mul(v, g))) return false;
  }
  const auto m = mat::min_poly(mat::restrict(g, W));
  return m.degree() == static_cast<int>(e) && poly::is_irreducible(m);
}

DenseMatrix construct_stingray(std::uint64_t q, unsigned d, std::optional<std::uint64_t> r, bool det_one) {
  require(d >= 2 && d % 2 == 0, ErrorCode::InvalidArgument, "d must be even and at least 2");
  const ff::FieldSpec F = ff::make_field_of_order(q);
  const unsigned e = d / 2;
  std::uint64_t rr = 0;
  if (r) {
    require(*r > 2 && ppd::is_eppd_prime(BigInt(*r), BigInt(q), e), ErrorCode::InvalidArgument, std::to_string(*r) + " is not a " + std::to_string(e) + "-ppd prime");
    rr = *r;
  } else {
    require(e >= 2, ErrorCode::InvalidArgument, "give r explicitly when d = 2");
    const auto res = ppd::primitive_prime_divisors(BigInt(q), e);
    require(res.exists, ErrorCode::NoPpdPrime,
            std::to_string(q) + "^" + std::to_string(e) + "-1 has no primitive prime divisor");
    rr = static_cast<std::uint64_t>(res.primes.front());
  }
  require(rr < 100000, ErrorCode::TooLarge, "ppd prime too large for an explicit companion block");
  const auto fac = poly::factor(poly::cyclotomic_quotient(static_cast<unsigned>(rr), F));
  const DensePoly* chosen = nullptr;
  for (const auto& [f, m] : fac.factors) {
    if (f.degree() != static_cast<int>(e)) continue;
    if (det_one) {
      const ff::Elt det = e % 2 == 0 ? f[0] : F.neg(f[0]);
      if (det != 1) continue;
    }
    chosen = &f;
    break;
  }
  if (!chosen) {
    require(!det_one, ErrorCode::NoUnimodularFactor, "no factor of determinant one");
    fail(ErrorCode::InvalidArgument, "no irreducible factor of degree d/2");
  }
  return DenseMatrix::block_diag(DenseMatrix::companion(*chosen), DenseMatrix::identity(F, e));
}

ff::Elt root_of_unity(const ff::FieldSpec& field, unsigned r) {
  const std::uint64_t Q = field.order();
  require((Q - 1) % r == 0, ErrorCode::InvalidArgument, "field has no root of unity of that order");
  // r is prime, so every nontrivial power of w has order exactly r
  const ff::Elt w = field.pow(field.primitive_element(), (Q - 1) / r);
  ff::Elt best = w, x = w;
  for (unsigned i = 1; i < r; ++i) {
    best = std::min(best, x);
    x = field.mul(x, w);
  }
  return best;
}

cyclo::MultiplicitySolution eigenvalue_multiplicities(const DenseMatrix& g, unsigned r) {
  require(g.is_square(), ErrorCode::NotSquare, "needs a square matrix");
  const auto& F = g.field();
  require(nt::is_prime(std::uint64_t{r}) && r >= 3, ErrorCode::InvalidArgument, "r must be an odd prime");
  require(r != F.characteristic(), ErrorCode::CharacteristicOrder, "r equals the characteristic");
  require(g.pow(std::int64_t{r}).is_identity(), ErrorCode::OrderMismatch, "g^r is not the identity");
  const unsigned k = static_cast<unsigned>(ppd::multiplicative_order(BigInt(r), BigInt(F.order())));
  const ff::FieldSpec E = ff::extension_field(F, k);
  const auto& emb = ff::embedding(F, E);
  const auto cp = mat::char_poly(g);
  std::vector<ff::Elt> lifted;
  for (auto c : cp.coeffs()) lifted.push_back(emb(c));
  DensePoly f(E, lifted);
  const ff::Elt zeta = root_of_unity(E, r);
  cyclo::MultiplicitySolution out{r, static_cast<unsigned>(g.rows()), std::vector<std::uint64_t>(r, 0)};
  ff::Elt z = 1;
  std::uint64_t total = 0;
  for (unsigned i = 0; i < r; ++i) {
    const DensePoly lin = DensePoly::linear(E, z);
    for (;;) {
      auto [quo, rem] = poly::divmod(f, lin);
      if (!rem.is_zero()) break;
      f = quo;
      ++out.mults[i];
    }
    total += out.mults[i];
    z = E.mul(z, zeta);
  }
  require(total == g.rows(), ErrorCode::OrderMismatch, "eigenvalues are not all r-th roots of unity");
  return out;
}

cyclo::CyclotomicInt brauer_value(const DenseMatrix& g, unsigned r) {
  return eigenvalue_multiplicities(g, r).brauer_value();
}

}  // namespace stingray::classify
