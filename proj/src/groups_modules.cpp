#include <algorithm>
#include <numeric>

#include "stingray/error.hpp"
#include "stingray/groups.hpp"

namespace stingray::groups {

MatrixGroup::MatrixGroup(ff::FieldSpec f, std::size_t d, std::vector<DenseMatrix> gens, std::string lbl)
    : field(std::move(f)), dim(d), generators(std::move(gens)), label(std::move(lbl)) {
  require(!generators.empty(), ErrorCode::InvalidArgument, "a group needs at least one generator");
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& g = generators[i];
    require(g.field() == field, ErrorCode::FieldMismatch, "generator " + std::to_string(i) + " field");
    require(g.rows() == dim && g.cols() == dim, ErrorCode::DimensionMismatch,
            "generator " + std::to_string(i) + " dimension");
    require(g.is_invertible(), ErrorCode::Singular, "generator " + std::to_string(i) + " is singular");
  }
}

MatrixGroup MatrixGroup::transposed() const {
  std::vector<DenseMatrix> t;
  for (const auto& g : generators) t.push_back(g.transpose());
  return MatrixGroup(field, dim, std::move(t), label + " (transposed)");
}

// ---- permutations ----

Perm identity_perm(unsigned n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

Perm perm_from_cycles(unsigned n, const std::vector<std::vector<unsigned>>& cycles) {
  Perm p = identity_perm(n);
  std::vector<bool> seen(n, false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      require(c[i] >= 1 && c[i] <= n, ErrorCode::InvalidArgument, "cycle entry out of range");
      require(!seen[c[i] - 1], ErrorCode::InvalidArgument, "cycles are not disjoint");
      seen[c[i] - 1] = true;
      p[c[i] - 1] = c[(i + 1) % c.size()] - 1;
    }
  }
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  require(a.size() == b.size(), ErrorCode::DimensionMismatch, "permutation degrees differ");
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
  return c;
}

Perm inverse(const Perm& a) {
  Perm b(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) b[a[i]] = static_cast<unsigned>(i);
  return b;
}

std::string CycleType::to_string() const {
  std::string s;
  for (auto c : cycles) {
    if (!s.empty()) s += '.';
    s += std::to_string(c);
  }
  return s;
}

CycleType cycle_type(const Perm& a) {
  CycleType t{static_cast<unsigned>(a.size()), {}};
  std::vector<bool> seen(a.size(), false);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (seen[i]) continue;
    unsigned len = 0;
    for (std::size_t j = i; !seen[j]; j = a[j]) {
      seen[j] = true;
      ++len;
    }
    t.cycles.push_back(len);
  }
  std::sort(t.cycles.rbegin(), t.cycles.rend());
  return t;
}

bool is_even(const Perm& a) {
  unsigned odd_cycles = 0;
  for (auto c : cycle_type(a).cycles) odd_cycles += (c % 2 == 0);
  return odd_cycles % 2 == 0;
}

DenseMatrix perm_matrix(const ff::FieldSpec& field, const Perm& sigma) {
  DenseMatrix m(field, sigma.size(), sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) m.set(i, sigma[i], 1);
  return m;
}

MatrixGroup perm_module(unsigned n, std::uint64_t p) {
  require(n >= 2, ErrorCode::DegreeTooSmall, "n must be at least 2");
  const auto F = ff::make_field(p);
  std::vector<unsigned> all(n);
  std::iota(all.begin(), all.end(), 1u);
  return MatrixGroup(F, n,
                     {perm_matrix(F, perm_from_cycles(n, {{1, 2}})), perm_matrix(F, perm_from_cycles(n, {all}))},
                     "S" + std::to_string(n) + " permutation module over GF(" + std::to_string(p) + ")");
}

// ---- deleted permutation module ----

namespace {

std::vector<Perm> alternating_generators(unsigned n) {
  std::vector<unsigned> cyc;
  for (unsigned i = (n % 2 == 1 ? 1 : 2); i <= n; ++i) cyc.push_back(i);
  return {perm_from_cycles(n, {{1, 2, 3}}), perm_from_cycles(n, {cyc})};
}

MatrixGroup placeholder_group(const ff::FieldSpec& F) {
  return MatrixGroup(F, 1, {DenseMatrix::identity(F, 1)});
}

}  // namespace

DeletedPermModule::DeletedPermModule(unsigned n, std::uint64_t p)
    : n_(n), p_(p), d_(0), field_(ff::make_field(p)), group_(placeholder_group(field_)) {
  require(n >= 5, ErrorCode::DegreeTooSmall, "deleted permutation module needs n >= 5");
  d_ = n % p == 0 ? n - 2 : n - 1;
  gens_ = alternating_generators(n);
  std::vector<DenseMatrix> mats;
  for (const auto& g : gens_) mats.push_back(map(g));
  group_ = MatrixGroup(field_, d_, std::move(mats),
                       "A" + std::to_string(n) + " deleted permutation module over GF(" + std::to_string(p) + ")");
}

DenseMatrix DeletedPermModule::map(const Perm& sigma) const {
  require(sigma.size() == n_, ErrorCode::DimensionMismatch, "permutation degree differs from n");
  const auto& F = field_;
  DenseMatrix m(F, d_, d_);
  for (unsigned i = 0; i < d_; ++i) {
    // w_i = y_{i+1} - y_i (0-based: y[i+1] - y[i]) maps to y_{sigma(i+1)} - y_{sigma(i)}
    Vec x(n_, 0);
    x[sigma[i + 1]] = F.add(x[sigma[i + 1]], 1);
    x[sigma[i]] = F.sub(x[sigma[i]], 1);
    // coordinates in the w-basis: c_k = -(x_0 + ... + x_k)
    Vec c(n_ - 1, 0);
    Elt run = 0;
    for (unsigned k = 0; k + 1 < n_; ++k) {
      run = F.add(run, x[k]);
      c[k] = F.neg(run);
    }
    if (d_ == n_ - 2) {
      // quotient by e = sum y_i, whose coordinates are c_k(e) = -(k+1), with c_{n-2}(e) = 1
      const Elt top = c[n_ - 2];
      for (unsigned k = 0; k + 1 < n_; ++k) {
        const Elt ek = F.neg(F.from_int(static_cast<std::int64_t>(k + 1)));
        c[k] = F.sub(c[k], F.mul(top, ek));
      }
    }
    for (unsigned j = 0; j < d_; ++j) m.set(i, j, c[j]);
  }
  return m;
}

DeletedPermModule deleted_perm_module(unsigned n, std::uint64_t p) { return DeletedPermModule(n, p); }

// ---- SL_2(q) ----

std::string Sl2Spec::to_string() const {
  switch (kind) {
    case Sl2Kind::Natural: return "natural";
    case Sl2Kind::SymCube: return "symcube";
    case Sl2Kind::Twist: return "twist:" + std::to_string(s) + "," + std::to_string(t);
  }
  return "?";
}

Sl2Spec Sl2Spec::parse(const std::string& text) {
  if (text == "natural") return {Sl2Kind::Natural, 0, 0};
  if (text == "symcube") return {Sl2Kind::SymCube, 0, 0};
  if (text.rfind("twist:", 0) == 0) {
    const auto rest = text.substr(6);
    const auto comma = rest.find(',');
    require(comma != std::string::npos, ErrorCode::InvalidArgument, "expected twist:S,T");
    try {
      return {Sl2Kind::Twist, static_cast<unsigned>(std::stoul(rest.substr(0, comma))),
              static_cast<unsigned>(std::stoul(rest.substr(comma + 1)))};
    } catch (const std::exception&) {
      fail(ErrorCode::InvalidArgument, "expected twist:S,T with integers");
    }
  }
  fail(ErrorCode::InvalidArgument, "unknown module '" + text + "'");
}

DenseMatrix symmetric_cube(const DenseMatrix& g) {
  require(g.rows() == 2 && g.cols() == 2, ErrorCode::DimensionMismatch, "symmetric cube of a 2x2 matrix");
  const auto& F = g.field();
  const Vec xr = {g.at(0, 0), g.at(0, 1)};  // X -> aX + bY
  const Vec yr = {g.at(1, 0), g.at(1, 1)};  // Y -> cX + dY
  auto times = [&](const Vec& form, const Vec& lin) {
    Vec out(form.size() + 1, 0);
    for (std::size_t j = 0; j < form.size(); ++j) {
      out[j] = F.add(out[j], F.mul(form[j], lin[0]));
      out[j + 1] = F.add(out[j + 1], F.mul(form[j], lin[1]));
    }
    return out;
  };
  DenseMatrix m(F, 4, 4);
  for (unsigned i = 0; i < 4; ++i) {
    // m_i = X^(3-i) Y^i; coefficients indexed by the power of Y
    Vec form = {1};
    for (unsigned k = 0; k < 3 - i; ++k) form = times(form, xr);
    for (unsigned k = 0; k < i; ++k) form = times(form, yr);
    for (unsigned j = 0; j < 4; ++j) m.set(i, j, form[j]);
  }
  return m;
}

namespace {

// Alternating J (up to scalar) with g^T J g = J for every generator.
DenseMatrix invariant_alternating_form(const MatrixGroup& grp) {
  const auto& F = grp.field;
  const std::size_t d = grp.dim;
  std::vector<DenseMatrix> basis;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      DenseMatrix e(F, d, d);
      e.set(i, j, 1);
      e.set(j, i, F.neg(1));
      basis.push_back(std::move(e));
    }
  }
  DenseMatrix lin(F, basis.size(), d * d * grp.generators.size());
  for (std::size_t b = 0; b < basis.size(); ++b) {
    std::size_t col = 0;
    for (const auto& g : grp.generators) {
      const DenseMatrix img = g.transpose() * basis[b] * g - basis[b];
      for (auto x : img.data()) lin.set(b, col++, x);
    }
  }
  const auto ker = mat::kernel(lin);
  require(ker.dim() >= 1, ErrorCode::InvalidArgument, "no invariant alternating form");
  DenseMatrix J(F, d, d);
  for (std::size_t b = 0; b < basis.size(); ++b) {
    const Elt c = ker.basis()[0][b];
    if (c != 0) J = J + basis[b].scaled(c);
  }
  return J;
}

}  // namespace

Sl2Module::Sl2Module(std::uint64_t q, Sl2Spec spec)
    : field_(ff::make_field_of_order(q)),
      spec_(spec),
      natural_(placeholder_group(field_)),
      group_(placeholder_group(field_)) {
  const auto& F = field_;
  if (spec_.kind == Sl2Kind::SymCube) {
    require(F.characteristic() >= 5, ErrorCode::CharTooSmallForSymcube,
            "symmetric cube needs characteristic at least 5");
  }
  if (spec_.kind == Sl2Kind::Twist) {
    require(spec_.s < spec_.t && spec_.t < F.degree(), ErrorCode::BadTwist,
            "twist needs 0 <= s < t < a with q = p^a");
  }
  const Elt w = F.primitive_element();
  const DenseMatrix x = DenseMatrix::from_rows(F, {{1, 1}, {0, 1}});
  const DenseMatrix y = DenseMatrix::from_rows(F, {{1, 0}, {w, 1}});
  std::vector<DenseMatrix> gens{x, y};
  // over prime fields x and y already generate; otherwise they can generate a
  // proper subgroup (dihedral in characteristic 2)
  if (F.degree() > 1) gens.push_back(DenseMatrix::diagonal(F, {w, F.inv(w)}));
  natural_ = MatrixGroup(F, 2, std::move(gens), "SL(2," + std::to_string(q) + ") natural");
  std::vector<DenseMatrix> imgs;
  for (const auto& g : natural_.generators) imgs.push_back(map(g));
  group_ = MatrixGroup(F, dim(), std::move(imgs), "SL(2," + std::to_string(q) + ") " + spec_.to_string());
  if (spec_.kind == Sl2Kind::SymCube) gram_ = invariant_alternating_form(group_);
}

DenseMatrix Sl2Module::map(const DenseMatrix& g) const {
  require(g.rows() == 2 && g.cols() == 2 && g.field() == field_, ErrorCode::DimensionMismatch,
          "expected a 2x2 matrix over the module field");
  switch (spec_.kind) {
    case Sl2Kind::Natural: return g;
    case Sl2Kind::SymCube: return symmetric_cube(g);
    case Sl2Kind::Twist: return mat::kron(g.frobenius(spec_.s), g.frobenius(spec_.t));
  }
  return g;
}

Sl2Module sl2_module(std::uint64_t q, Sl2Spec spec) { return Sl2Module(q, spec); }

// ---- classical groups ----

std::string to_string(Classical c) {
  switch (c) {
    case Classical::GL: return "GL";
    case Classical::SL: return "SL";
    case Classical::SP: return "SP";
  }
  return "?";
}

DenseMatrix symplectic_gram(const ff::FieldSpec& field, unsigned d) {
  require(d % 2 == 0, ErrorCode::OddDimensionSymplectic, "symplectic dimension must be even");
  DenseMatrix J(field, d, d);
  for (unsigned i = 0; i < d; ++i) J.set(i, d - 1 - i, i < d / 2 ? 1 : field.neg(1));
  return J;
}

MatrixGroup classical_generators(Classical family, unsigned d, std::uint64_t q) {
  require(d >= 2, ErrorCode::InvalidArgument, "dimension must be at least 2");
  if (family == Classical::SP) {
    require(d % 2 == 0, ErrorCode::OddDimensionSymplectic, "symplectic dimension must be even");
  }
  const auto F = ff::make_field_of_order(q);
  const Elt w = F.primitive_element();
  const std::string label = to_string(family) + "(" + std::to_string(d) + "," + std::to_string(q) + ")";
  std::vector<DenseMatrix> gens;

  if (family != Classical::SP) {
    DenseMatrix t = DenseMatrix::identity(F, d);
    t.set(0, 1, 1);
    Vec diag(d, 1);
    diag[0] = w;
    if (family == Classical::SL) diag[1] = F.inv(w);
    // signed d-cycle of determinant one
    DenseMatrix c(F, d, d);
    for (unsigned i = 0; i + 1 < d; ++i) c.set(i, i + 1, 1);
    c.set(d - 1, 0, d % 2 == 1 ? 1 : F.neg(1));
    gens = {t, DenseMatrix::diagonal(F, diag), c};
    if (q == 2) gens.erase(gens.begin() + 1);  // the diagonal generator is trivial
    return MatrixGroup(F, d, std::move(gens), label);
  }

  const DenseMatrix J = symplectic_gram(F, d);
  auto transvection = [&](const Vec& v) {
    // u -> u + (u J v^T) v
    const DenseMatrix col = DenseMatrix::from_rows(F, {v}).transpose();
    return DenseMatrix::identity(F, d) + J * col * DenseMatrix::from_rows(F, {v});
  };
  for (unsigned i = 0; i < d; ++i) {
    Vec v(d, 0);
    v[i] = 1;
    gens.push_back(transvection(v));
  }
  for (unsigned i = 0; i < d; ++i) {
    for (unsigned j = i + 1; j < d; ++j) {
      Vec v(d, 0);
      v[i] = v[j] = 1;
      gens.push_back(transvection(v));
    }
  }
  if (q > 2) {
    Vec diag(d, 1);
    diag[0] = w;
    diag[d - 1] = F.inv(w);
    gens.push_back(DenseMatrix::diagonal(F, diag));
  }
  if (d > 2) {
    // e_i -> e_{i+1} on the first half, mirrored on the second half
    const unsigned m = d / 2;
    Perm sigma(d);
    for (unsigned i = 0; i < m; ++i) {
      sigma[i] = (i + 1) % m;
      sigma[d - 1 - i] = d - 1 - (i + 1) % m;
    }
    gens.push_back(perm_matrix(F, sigma));
  }
  for (const auto& g : gens) {
    require(g * J * g.transpose() == J, ErrorCode::InvalidArgument, "generator does not preserve the form");
  }
  return MatrixGroup(F, d, std::move(gens), label);
}

}  // namespace stingray::groups
