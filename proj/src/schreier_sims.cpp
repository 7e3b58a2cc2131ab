#include <algorithm>
#include <unordered_map>

#include "stingray/error.hpp"
#include "stingray/groups.hpp"

namespace stingray::groups {

namespace {

using Points = std::vector<std::uint32_t>;  // a permutation of 0..N-1

// Enumerates the points of the action and converts generators to permutations.
class PointAction {
 public:
  PointAction(const MatrixGroup& grp, Action action) : grp_(grp), action_(action) {
    const auto& F = grp.field;
    const BigInt total = nt::ipow(BigInt(F.order()), static_cast<unsigned>(grp.dim)) - 1;
    BigInt n = action == Action::Vectors ? total : total / (F.order() - 1);
    require(n <= kMaxActionPoints, ErrorCode::ActionTooLarge,
            nt::to_string(n) + " points exceed the desk-scale cap of 2^24");
    n_ = static_cast<std::uint32_t>(n);
    if (action == Action::Projective) {
      // normalized vectors: first nonzero coordinate equal to one
      index_.reserve(n_);
      for (std::uint64_t code = 1; code <= static_cast<std::uint64_t>(total); ++code) {
        Vec v = decode(code);
        if (leading(v) == 1) {
          index_.emplace(code, static_cast<std::uint32_t>(codes_.size()));
          codes_.push_back(code);
        }
      }
    }
  }

  std::uint32_t size() const { return n_; }

  Points perm_of(const DenseMatrix& g) const {
    Points out(n_);
    for (std::uint32_t i = 0; i < n_; ++i) out[i] = point_of(mat::vec_mul(vector_of(i), g));
    return out;
  }

 private:
  Vec decode(std::uint64_t code) const {
    const std::uint64_t q = grp_.field.order();
    Vec v(grp_.dim);
    for (auto& x : v) {
      x = code % q;
      code /= q;
    }
    return v;
  }

  std::uint64_t encode(const Vec& v) const {
    const std::uint64_t q = grp_.field.order();
    std::uint64_t code = 0;
    for (std::size_t i = v.size(); i-- > 0;) code = code * q + v[i];
    return code;
  }

  static Elt leading(const Vec& v) {
    for (Elt x : v)
      if (x != 0) return x;
    return 0;
  }

  Vec vector_of(std::uint32_t i) const {
    return decode(action_ == Action::Vectors ? std::uint64_t{i} + 1 : codes_[i]);
  }

  std::uint32_t point_of(Vec v) const {
    if (action_ == Action::Vectors) return static_cast<std::uint32_t>(encode(v) - 1);
    const Elt inv = grp_.field.inv(leading(v));
    for (auto& x : v) x = grp_.field.mul(x, inv);
    return index_.at(encode(v));
  }

  const MatrixGroup& grp_;
  Action action_;
  std::uint32_t n_ = 0;
  std::vector<std::uint64_t> codes_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
};

Points mul(const Points& a, const Points& b) {
  Points c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
  return c;
}

Points inv(const Points& a) {
  Points b(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) b[a[i]] = static_cast<std::uint32_t>(i);
  return b;
}

bool is_id(const Points& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != i) return false;
  return true;
}

class StabChain {
 public:
  explicit StabChain(std::uint32_t n) : n_(n) {}

  // Residue of h after stripping through levels from `start`, and the level
  // where it stopped (levels() if it went through all of them).
  std::pair<Points, std::size_t> sift(Points h, std::size_t start) const {
    for (std::size_t i = start; i < levels_.size(); ++i) {
      const Level& L = levels_[i];
      std::uint32_t x = h[L.base];
      if (L.sv[x] == kNone) return {std::move(h), i};
      while (x != L.base) {
        const auto& gi = L.inverses[static_cast<std::size_t>(L.sv[x])];
        h = mul(h, gi);
        x = gi[x];
      }
    }
    return {std::move(h), levels_.size()};
  }

  // h fixes the bases of levels below `level` and is not the identity.
  void add(const Points& h, std::size_t level) {
    if (level == levels_.size()) {
      std::uint32_t b = 0;
      while (h[b] == b) ++b;
      levels_.push_back(Level{b, {}, {}, std::vector<std::int32_t>(n_, kNone), {}});
    }
    for (std::size_t i = 0; i <= level; ++i) {
      levels_[i].gens.push_back(h);
      levels_[i].inverses.push_back(inv(h));
      rebuild_orbit(levels_[i]);
    }
  }

  // Deterministic Schreier generator test; returns false after adding a new generator.
  bool verify_once() {
    for (std::size_t i = levels_.size(); i-- > 0;) {
      const Level& L = levels_[i];
      for (std::uint32_t x : L.orbit) {
        const Points ux = transversal(L, x);
        for (std::size_t s = 0; s < L.gens.size(); ++s) {
          const std::uint32_t y = L.gens[s][x];
          if (L.sv[y] == static_cast<std::int32_t>(s) && L.inverses[s][y] == x) continue;  // tree edge
          Points g = mul(mul(ux, L.gens[s]), inv(transversal(L, y)));
          auto [res, lvl] = sift(std::move(g), i + 1);
          if (!is_id(res)) {
            add(res, lvl);
            return false;
          }
        }
      }
    }
    return true;
  }

  BigInt order() const {
    BigInt o = 1;
    for (const auto& L : levels_) o *= L.orbit.size();
    return o;
  }

  std::size_t levels() const { return levels_.size(); }

 private:
  static constexpr std::int32_t kNone = -1;
  static constexpr std::int32_t kRoot = -2;

  struct Level {
    std::uint32_t base;
    std::vector<Points> gens;
    std::vector<Points> inverses;
    std::vector<std::int32_t> sv;  // generator index reaching each orbit point
    std::vector<std::uint32_t> orbit;
  };

  void rebuild_orbit(Level& L) const {
    std::fill(L.sv.begin(), L.sv.end(), kNone);
    L.orbit.assign(1, L.base);
    L.sv[L.base] = kRoot;
    for (std::size_t k = 0; k < L.orbit.size(); ++k) {
      const std::uint32_t x = L.orbit[k];
      for (std::size_t s = 0; s < L.gens.size(); ++s) {
        const std::uint32_t y = L.gens[s][x];
        if (L.sv[y] != kNone) continue;
        L.sv[y] = static_cast<std::int32_t>(s);
        L.orbit.push_back(y);
      }
    }
  }

  // u with base^u = x
  Points transversal(const Level& L, std::uint32_t x) const {
    std::vector<std::size_t> path;
    while (x != L.base) {
      const auto s = static_cast<std::size_t>(L.sv[x]);
      path.push_back(s);
      x = L.inverses[s][x];
    }
    Points u(n_);
    for (std::uint32_t i = 0; i < n_; ++i) u[i] = i;
    for (std::size_t k = path.size(); k-- > 0;) u = mul(u, L.gens[path[k]]);
    return u;
  }

  std::uint32_t n_;
  std::vector<Level> levels_;
};

}  // namespace

BigInt group_order(const MatrixGroup& grp, Action action, std::uint64_t seed) {
  const PointAction act(grp, action);
  const std::uint32_t n = act.size();
  std::vector<Points> gens;
  for (const auto& g : grp.generators) {
    Points p = act.perm_of(g);
    if (!is_id(p)) gens.push_back(std::move(p));
  }
  if (gens.empty()) return 1;

  StabChain chain(n);
  for (const auto& g : gens) {
    auto [res, lvl] = chain.sift(g, 0);
    if (!is_id(res)) chain.add(res, lvl);
  }

  // random phase: product replacement on permutations
  Rng rng(seed);
  std::vector<Points> slots;
  for (std::size_t i = 0; i < 10; ++i) slots.push_back(gens[i % gens.size()]);
  Points acc(n);
  for (std::uint32_t i = 0; i < n; ++i) acc[i] = i;
  auto step = [&] {
    const auto i = below(rng, slots.size());
    auto j = below(rng, slots.size() - 1);
    if (j >= i) ++j;
    slots[i] = mul(slots[i], slots[j]);
    acc = mul(acc, slots[i]);
  };
  for (int i = 0; i < 50; ++i) step();
  constexpr int kQuiet = 25;
  for (int quiet = 0; quiet < kQuiet;) {
    step();
    auto [res, lvl] = chain.sift(acc, 0);
    if (is_id(res)) {
      ++quiet;
    } else {
      chain.add(res, lvl);
      quiet = 0;
    }
  }

  while (!chain.verify_once()) {
  }
  return chain.order();
}

}  // namespace stingray::groups
