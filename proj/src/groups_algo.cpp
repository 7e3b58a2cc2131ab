#include <algorithm>

#include "stingray/error.hpp"
#include "stingray/groups.hpp"

namespace stingray::groups {

// ---- product replacement ----

RandomWalkState::RandomWalkState(const MatrixGroup& grp, std::uint64_t seed)
    : acc_(DenseMatrix::identity(grp.field, grp.dim)), rng_(seed) {
  for (unsigned i = 0; i < kSlots; ++i) slots_.push_back(grp.generators[i % grp.generators.size()]);
  for (unsigned i = 0; i < kBurnIn; ++i) step();
  burn_in_done_ = true;
}

void RandomWalkState::step() {
  const auto i = below(rng_, kSlots);
  auto j = below(rng_, kSlots - 1);
  if (j >= i) ++j;
  if (below(rng_, 2) == 0) {
    slots_[i] = slots_[i] * slots_[j];
  } else {
    slots_[i] = slots_[j] * slots_[i];
  }
  acc_ = acc_ * slots_[i];
}

DenseMatrix RandomWalkState::next() {
  step();
  return acc_;
}

DenseMatrix random_element(const MatrixGroup&, RandomWalkState& state) { return state.next(); }

// ---- spinning ----

Subspace spin(const std::vector<Vec>& vectors, const MatrixGroup& grp) {
  Subspace s(grp.field, grp.dim);
  std::vector<Vec> queue;
  for (const auto& v : vectors) {
    require(v.size() == grp.dim, ErrorCode::DimensionMismatch, "vector length differs from dimension");
    require(std::any_of(v.begin(), v.end(), [](Elt x) { return x != 0; }), ErrorCode::ZeroVector,
            "cannot spin the zero vector");
    if (s.insert(v)) queue.push_back(v);
  }
  for (std::size_t k = 0; k < queue.size() && s.dim() < grp.dim; ++k) {
    for (const auto& g : grp.generators) {
      Vec w = mat::vec_mul(queue[k], g);
      if (s.insert(w)) queue.push_back(std::move(w));
    }
  }
  return s;
}

bool is_invariant(const Subspace& s, const MatrixGroup& grp) {
  for (const auto& g : grp.generators) {
    for (const auto& v : s.basis()) {
      if (!s.contains(mat::vec_mul(v, g))) return false;
    }
  }
  return true;
}

// ---- meataxe ----

std::string IrreducibilityResult::to_string() const {
  switch (kind) {
    case Kind::Yes: return "YES";
    case Kind::No: return "NO";
    case Kind::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

IrreducibilityResult is_irreducible(const MatrixGroup& grp, std::uint64_t seed, unsigned max_rounds) {
  using Kind = IrreducibilityResult::Kind;
  IrreducibilityResult out;
  const auto& F = grp.field;
  const std::size_t d = grp.dim;
  if (d == 1) {
    out.kind = Kind::Yes;
    out.absolutely_irreducible = true;
    return out;
  }
  const MatrixGroup dual = grp.transposed();
  Rng rng(seed);
  std::vector<DenseMatrix> pool = grp.generators;
  const std::size_t cap = std::max<std::size_t>(16, grp.generators.size() + 4);

  for (unsigned round = 1; round <= max_rounds; ++round) {
    out.rounds = round;
    // grow the pool of words, then take a random linear combination
    const DenseMatrix fresh = pool[below(rng, pool.size())] * pool[below(rng, pool.size())];
    if (pool.size() < cap) {
      pool.push_back(fresh);
    } else {
      pool[grp.generators.size() + below(rng, cap - grp.generators.size())] = fresh;
    }
    DenseMatrix theta(F, d, d);
    for (int k = 0; k < 3; ++k) {
      const Elt c = 1 + below(rng, F.order() - 1);
      theta = theta + pool[below(rng, pool.size())].scaled(c);
    }
    const auto fac = poly::factor(mat::char_poly(theta), seed + round);
    for (const auto& [f, mult] : fac.factors) {
      const DenseMatrix N = mat::eval(f, theta);
      const Subspace ker = mat::kernel(N);
      if (ker.dim() != static_cast<std::size_t>(f.degree())) continue;

      const Subspace sub = spin({ker.basis()[0]}, grp);
      if (sub.dim() < d) {
        out.kind = Kind::No;
        out.witness = sub;
        return out;
      }
      const Subspace dker = mat::kernel(N.transpose());
      const Subspace dsub = spin({dker.basis()[0]}, dual);
      if (dsub.dim() < d) {
        Subspace w = dsub.annihilator();
        require(is_invariant(w, grp), ErrorCode::InvalidArgument, "dual witness is not invariant");
        out.kind = Kind::No;
        out.witness = std::move(w);
        return out;
      }
      out.kind = Kind::Yes;
      out.absolutely_irreducible = f.degree() == 1 && ker.dim() == 1;
      return out;
    }
  }
  out.kind = Kind::Inconclusive;
  return out;
}

}  // namespace stingray::groups
