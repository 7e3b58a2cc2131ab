#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stingray/cyclo.hpp"
#include "stingray/fmatrix.hpp"

namespace stingray::classify {

using mat::DenseMatrix;

enum class Tag { Stingray, PpdGeneral, Type2I, Type2II, NotPpd };

struct ElementClassification {
  unsigned d = 0;
  std::uint64_t q = 0;
  unsigned e = 0;
  BigInt order;
  bool semisimple = false;
  unsigned fixed_dim = 0;
  /// (degree, multiplicity) of the char poly factors other than t - 1.
  std::vector<std::pair<unsigned, unsigned>> irreducible_blocks;
  Tag tag = Tag::NotPpd;
  unsigned blocks = 0;  // t in PPD_GENERAL(e, t)
  /// Order is an e-ppd prime, or 9 with (q, e) = (2, 6).
  bool ppd = false;
  std::string diagnostics;

  /// STINGRAY(e), PPD_GENERAL(e,t), TYPE_2I, TYPE_2II or NOT_PPD.
  std::string tag_string() const;
  /// One line of key=value fields.
  std::string report() const;
};

/// STINGRAY(e) depends only on the shape f(t)(t-1)^(d-e) with fixed space of
/// dimension d-e. The remaining tags need the ppd condition on the order.
/// Errors: Singular, NotSquare, InvalidArgument (e outside 1..d).
ElementClassification classify_element(const DenseMatrix& g, unsigned e);

/// Direct check through F = ker(g-1) and W = im(g-1); shares no logic with
/// classify_element beyond the linear algebra primitives.
bool is_stingray_oracle(const DenseMatrix& g, unsigned e);

/// block_diag(companion(f), I_{d/2}) with f the canonical first degree-d/2
/// factor of (t^r-1)/(t-1) over GF(q). Without r the smallest (d/2)-ppd prime
/// is used. With det_one the first factor with (-1)^(d/2) f(0) = 1 is used.
/// Errors: NoPpdPrime, NoUnimodularFactor, InvalidArgument, CompositeQ.
DenseMatrix construct_stingray(std::uint64_t q, unsigned d, std::optional<std::uint64_t> r = std::nullopt,
                               bool det_one = false);

/// Multiplicities of zeta^i as eigenvalues of g over GF(q^(o_r(q))), where
/// zeta is the smallest-encoding element of order r there. Requires g^r = 1.
/// Errors: OrderMismatch, CharacteristicOrder, InvalidArgument.
cyclo::MultiplicitySolution eigenvalue_multiplicities(const DenseMatrix& g, unsigned r);

/// Brauer value of g computed from eigenvalue_multiplicities.
cyclo::CyclotomicInt brauer_value(const DenseMatrix& g, unsigned r);

/// The order-r root of unity used as zeta for the given splitting field.
ff::Elt root_of_unity(const ff::FieldSpec& field, unsigned r);

}  // namespace stingray::classify
