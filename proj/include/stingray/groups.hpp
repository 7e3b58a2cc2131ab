#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stingray/fmatrix.hpp"
#include "stingray/random.hpp"

namespace stingray::groups {

using mat::DenseMatrix;
using mat::Subspace;
using mat::Vec;
using ff::Elt;

/// Subgroup of GL_d(q) given by invertible generators of equal dimension.
struct MatrixGroup {
  ff::FieldSpec field;
  std::size_t dim = 0;
  std::vector<DenseMatrix> generators;
  std::string label;

  /// Errors: Singular, DimensionMismatch, FieldMismatch, InvalidArgument (no generators).
  MatrixGroup(ff::FieldSpec field, std::size_t dim, std::vector<DenseMatrix> generators, std::string label = "");

  MatrixGroup transposed() const;
};

// ---- permutations ----

/// Images of 0..n-1; composition is left to right: (a*b)(i) = b(a(i)).
using Perm = std::vector<unsigned>;

Perm identity_perm(unsigned n);
/// Cycles are 1-based, e.g. {{1,2,3}} for (1 2 3).
Perm perm_from_cycles(unsigned n, const std::vector<std::vector<unsigned>>& cycles);
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& a);
bool is_even(const Perm& a);

struct CycleType {
  unsigned n = 0;
  std::vector<unsigned> cycles;  // descending, including fixed points

  std::string to_string() const;  // e.g. "9.3.1.1"
};
CycleType cycle_type(const Perm& a);

// ---- deleted permutation module ----

/// Fully deleted permutation module W/(W cap D) of S_n over F_p in the basis
/// w_i = y_{i+1} - y_i (the last one dropped when p | n).
class DeletedPermModule {
 public:
  DeletedPermModule(unsigned n, std::uint64_t p);

  unsigned n() const { return n_; }
  unsigned dim() const { return d_; }
  const ff::FieldSpec& field() const { return field_; }
  /// Image of a permutation; a homomorphism for left-to-right composition.
  DenseMatrix map(const Perm& sigma) const;
  /// A_n generated by (1 2 3) and (1 2 ... n) or (2 3 ... n).
  const MatrixGroup& group() const { return group_; }
  const std::vector<Perm>& generator_perms() const { return gens_; }

 private:
  unsigned n_;
  std::uint64_t p_;
  unsigned d_;
  ff::FieldSpec field_;
  std::vector<Perm> gens_;
  MatrixGroup group_;
};

/// Errors: DegreeTooSmall (n < 5), NotPrime.
DeletedPermModule deleted_perm_module(unsigned n, std::uint64_t p);

/// Permutation matrix of sigma on F_p^n (row i is e_{sigma(i)}).
DenseMatrix perm_matrix(const ff::FieldSpec& field, const Perm& sigma);
/// Natural permutation module of S_n, generated by (1 2) and (1 2 ... n).
MatrixGroup perm_module(unsigned n, std::uint64_t p);

// ---- SL_2(q) modules ----

enum class Sl2Kind { Natural, SymCube, Twist };

struct Sl2Spec {
  Sl2Kind kind = Sl2Kind::Natural;
  unsigned s = 0, t = 0;  // Twist only

  std::string to_string() const;  // natural | symcube | twist:S,T
  /// Errors: InvalidArgument.
  static Sl2Spec parse(const std::string& text);
};

class Sl2Module {
 public:
  Sl2Module(std::uint64_t q, Sl2Spec spec);

  const ff::FieldSpec& field() const { return field_; }
  const Sl2Spec& spec() const { return spec_; }
  unsigned dim() const { return spec_.kind == Sl2Kind::Natural ? 2 : 4; }
  /// Image of a 2x2 matrix of SL_2(q).
  DenseMatrix map(const DenseMatrix& g) const;
  /// SL_2(q) in its natural representation.
  const MatrixGroup& natural() const { return natural_; }
  const MatrixGroup& group() const { return group_; }
  /// Symcube only: the alternating J with g^T J g = J for all generators.
  const std::optional<DenseMatrix>& gram() const { return gram_; }

 private:
  ff::FieldSpec field_;
  Sl2Spec spec_;
  MatrixGroup natural_;
  MatrixGroup group_;
  std::optional<DenseMatrix> gram_;
};

/// Errors: CharTooSmallForSymcube (p < 5), BadTwist (not 0 <= s < t < a), CompositeQ.
Sl2Module sl2_module(std::uint64_t q, Sl2Spec spec);

/// Image of (X,Y) -> (aX+bY, cX+dY) on cubic forms in the basis X^3, X^2Y, XY^2, Y^3.
DenseMatrix symmetric_cube(const DenseMatrix& g);

// ---- classical groups ----

enum class Classical { GL, SL, SP };
std::string to_string(Classical c);

/// Errors: OddDimensionSymplectic, InvalidArgument (d < 2), CompositeQ.
MatrixGroup classical_generators(Classical family, unsigned d, std::uint64_t q);
/// antidiag(1, ..., 1, -1, ..., -1)
DenseMatrix symplectic_gram(const ff::FieldSpec& field, unsigned d);

// ---- random elements ----

class RandomWalkState {
 public:
  static constexpr unsigned kSlots = 12;
  static constexpr unsigned kBurnIn = 50;

  RandomWalkState(const MatrixGroup& grp, std::uint64_t seed);

  DenseMatrix next();
  bool burn_in_done() const { return burn_in_done_; }

 private:
  void step();
  std::vector<DenseMatrix> slots_;
  DenseMatrix acc_;
  Rng rng_;
  bool burn_in_done_ = false;
};

/// Product replacement with accumulator.
DenseMatrix random_element(const MatrixGroup& grp, RandomWalkState& state);

// ---- submodules ----

/// Smallest invariant subspace containing the vectors. Errors: ZeroVector, DimensionMismatch.
Subspace spin(const std::vector<Vec>& vectors, const MatrixGroup& grp);

struct IrreducibilityResult {
  enum class Kind { Yes, No, Inconclusive };
  Kind kind = Kind::Inconclusive;
  std::optional<Subspace> witness;  // proper invariant subspace when No
  bool absolutely_irreducible = false;  // certified by a linear factor of nullity one
  unsigned rounds = 0;

  std::string to_string() const;  // YES | NO | INCONCLUSIVE
};

constexpr unsigned kDefaultMeataxeRounds = 64;

/// Norton's criterion with random algebra elements.
IrreducibilityResult is_irreducible(const MatrixGroup& grp, std::uint64_t seed = kDefaultSeed,
                                    unsigned max_rounds = kDefaultMeataxeRounds);

/// True iff every generator maps the subspace into itself.
bool is_invariant(const Subspace& s, const MatrixGroup& grp);

// ---- group order ----

enum class Action { Vectors, Projective };

constexpr std::uint64_t kMaxActionPoints = 1ull << 24;

/// Schreier-Sims on the action on nonzero vectors or projective points: a
/// random phase followed by a deterministic Schreier generator check. The
/// projective action returns the order of the image in PGL.
/// Errors: ActionTooLarge.
BigInt group_order(const MatrixGroup& grp, Action action = Action::Vectors, std::uint64_t seed = kDefaultSeed);

}  // namespace stingray::groups
