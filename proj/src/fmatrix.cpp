#include "stingray/fmatrix.hpp"

#include <algorithm>

#include "stingray/error.hpp"

namespace stingray::mat {

namespace {

void check_field(const FieldSpec& a, const FieldSpec& b) {
  require(a == b, ErrorCode::FieldMismatch, a.name() + " vs " + b.name());
}

void require_square(const DenseMatrix& m) {
  require(m.is_square(), ErrorCode::NotSquare,
          std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " is not square");
}

// In-place Gaussian elimination to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(const FieldSpec& F, std::vector<Vec>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pr = r;
    while (pr < rows.size() && rows[pr][c] == 0) ++pr;
    if (pr == rows.size()) continue;
    std::swap(rows[r], rows[pr]);
    const Elt inv = F.inv(rows[r][c]);
    for (auto& x : rows[r]) x = F.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Elt f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::vector<Vec> to_rows(const DenseMatrix& m) {
  std::vector<Vec> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows[i] = m.row(i);
  return rows;
}

// Minimal polynomial of v under m, together with the Krylov vectors spanned.
DensePoly local_min_poly(const Vec& v, const DenseMatrix& m, std::vector<Vec>& krylov) {
  const FieldSpec& F = m.field();
  const std::size_t d = m.rows();
  struct Row {
    Vec vec;
    std::size_t pivot;
    Vec combo;  // coefficients of 1, m, m^2, ... giving vec
  };
  std::vector<Row> reduced;
  Vec w = v;
  for (std::size_t k = 0;; ++k) {
    krylov.push_back(w);
    Vec cur = w;
    Vec combo(k + 1, 0);
    combo[k] = 1;
    for (const auto& r : reduced) {
      const Elt c = cur[r.pivot];
      if (c == 0) continue;
      for (std::size_t j = 0; j < d; ++j) cur[j] = F.sub(cur[j], F.mul(c, r.vec[j]));
      for (std::size_t j = 0; j < r.combo.size(); ++j) combo[j] = F.sub(combo[j], F.mul(c, r.combo[j]));
    }
    std::size_t piv = 0;
    while (piv < d && cur[piv] == 0) ++piv;
    if (piv == d) {
      krylov.pop_back();
      return DensePoly(F, combo);
    }
    const Elt inv = F.inv(cur[piv]);
    for (auto& x : cur) x = F.mul(x, inv);
    for (auto& x : combo) x = F.mul(x, inv);
    reduced.push_back({std::move(cur), piv, std::move(combo)});
    w = vec_mul(w, m);
  }
}

}  // namespace

// ---- DenseMatrix ----

DenseMatrix::DenseMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

DenseMatrix::DenseMatrix(const DenseMatrix& o)
    : field_(o.field_), rows_(o.rows_), cols_(o.cols_), a_(o.a_), invertible_(o.invertible_.load()) {}

DenseMatrix::DenseMatrix(DenseMatrix&& o) noexcept
    : field_(o.field_), rows_(o.rows_), cols_(o.cols_), a_(std::move(o.a_)),
      invertible_(o.invertible_.load()) {}

DenseMatrix& DenseMatrix::operator=(const DenseMatrix& o) {
  field_ = o.field_;
  rows_ = o.rows_;
  cols_ = o.cols_;
  a_ = o.a_;
  invertible_.store(o.invertible_.load());
  return *this;
}

DenseMatrix& DenseMatrix::operator=(DenseMatrix&& o) noexcept {
  field_ = o.field_;
  rows_ = o.rows_;
  cols_ = o.cols_;
  a_ = std::move(o.a_);
  invertible_.store(o.invertible_.load());
  return *this;
}

DenseMatrix DenseMatrix::identity(const FieldSpec& field, std::size_t d) {
  DenseMatrix m(field, d, d);
  for (std::size_t i = 0; i < d; ++i) m.a_[i * d + i] = 1;
  m.invertible_ = 1;
  return m;
}

DenseMatrix DenseMatrix::from_rows(const FieldSpec& field, const std::vector<Vec>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows[0].size();
  DenseMatrix m(field, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == c, ErrorCode::DimensionMismatch, "ragged rows");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

DenseMatrix DenseMatrix::diagonal(const FieldSpec& field, const Vec& diag) {
  DenseMatrix m(field, diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m.set(i, i, diag[i]);
  return m;
}

DenseMatrix DenseMatrix::companion(const DensePoly& f) {
  require(f.degree() >= 1 && f.leading() == 1, ErrorCode::InvalidArgument,
          "companion matrix needs a monic polynomial of positive degree");
  const FieldSpec& F = f.field();
  const auto n = static_cast<std::size_t>(f.degree());
  DenseMatrix m(F, n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) m.a_[i * n + i + 1] = 1;
  for (std::size_t j = 0; j < n; ++j) m.a_[(n - 1) * n + j] = F.neg(f[j]);
  return m;
}

DenseMatrix DenseMatrix::block_diag(const DenseMatrix& a, const DenseMatrix& b) {
  check_field(a.field_, b.field_);
  DenseMatrix m(a.field_, a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) m.a_[i * m.cols_ + j] = a.at(i, j);
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) m.a_[(a.rows_ + i) * m.cols_ + a.cols_ + j] = b.at(i, j);
  return m;
}

void DenseMatrix::set(std::size_t i, std::size_t j, Elt v) {
  require(i < rows_ && j < cols_, ErrorCode::DimensionMismatch, "index out of range");
  require(field_.contains(v), ErrorCode::InvalidArgument, "entry out of range");
  a_[i * cols_ + j] = v;
  invertible_ = -1;
}

Vec DenseMatrix::row(std::size_t i) const {
  return Vec(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& o) const {
  check_field(field_, o.field_);
  require(cols_ == o.rows_, ErrorCode::DimensionMismatch, "product dimensions");
  DenseMatrix m(field_, rows_, o.cols_);
  const FieldSpec& F = field_;
  for (std::size_t i = 0; i < rows_; ++i) {
    Elt* out = &m.a_[i * o.cols_];
    for (std::size_t k = 0; k < cols_; ++k) {
      const Elt x = a_[i * cols_ + k];
      if (x == 0) continue;
      const Elt* in = &o.a_[k * o.cols_];
      if (x == 1) {
        for (std::size_t j = 0; j < o.cols_; ++j) out[j] = F.add(out[j], in[j]);
      } else {
        for (std::size_t j = 0; j < o.cols_; ++j) {
          if (in[j]) out[j] = F.add(out[j], F.mul(x, in[j]));
        }
      }
    }
  }
  return m;
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix& o) const {
  check_field(field_, o.field_);
  require(rows_ == o.rows_ && cols_ == o.cols_, ErrorCode::DimensionMismatch, "sum dimensions");
  DenseMatrix m(field_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = field_.add(a_[i], o.a_[i]);
  return m;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix& o) const {
  check_field(field_, o.field_);
  require(rows_ == o.rows_ && cols_ == o.cols_, ErrorCode::DimensionMismatch, "difference dimensions");
  DenseMatrix m(field_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = field_.sub(a_[i], o.a_[i]);
  return m;
}

bool DenseMatrix::operator==(const DenseMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_ && field_ == o.field_;
}

bool DenseMatrix::operator<(const DenseMatrix& o) const {
  if (rows_ != o.rows_) return rows_ < o.rows_;
  if (cols_ != o.cols_) return cols_ < o.cols_;
  return a_ < o.a_;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix m(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.a_[j * rows_ + i] = a_[i * cols_ + j];
  m.invertible_.store(invertible_.load());
  return m;
}

DenseMatrix DenseMatrix::scaled(Elt s) const {
  DenseMatrix m(field_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = field_.mul(a_[i], s);
  return m;
}

DenseMatrix DenseMatrix::frobenius(unsigned k) const {
  DenseMatrix m(field_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = field_.frobenius(a_[i], k);
  m.invertible_.store(invertible_.load());
  return m;
}

bool DenseMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (a_[i * cols_ + j] != (i == j ? 1u : 0u)) return false;
  return true;
}

std::size_t DenseMatrix::rank() const {
  auto rows = to_rows(*this);
  return rref(field_, rows, cols_).size();
}

Elt DenseMatrix::det() const {
  require_square(*this);
  const FieldSpec& F = field_;
  auto r = to_rows(*this);
  const std::size_t n = rows_;
  Elt det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && r[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(r[p], r[c]);
      det = F.neg(det);
    }
    det = F.mul(det, r[c][c]);
    const Elt inv = F.inv(r[c][c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (r[i][c] == 0) continue;
      const Elt f = F.mul(r[i][c], inv);
      for (std::size_t j = c; j < n; ++j) r[i][j] = F.sub(r[i][j], F.mul(f, r[c][j]));
    }
  }
  return det;
}

bool DenseMatrix::is_invertible() const {
  int cached = invertible_.load();
  if (cached >= 0) return cached == 1;
  const bool inv = is_square() && rank() == rows_;
  invertible_.store(inv ? 1 : 0);
  return inv;
}

DenseMatrix DenseMatrix::inverse() const {
  require_square(*this);
  const FieldSpec& F = field_;
  const std::size_t n = rows_;
  std::vector<Vec> aug(n, Vec(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = at(i, j);
    aug[i][n + i] = 1;
  }
  auto piv = rref(F, aug, 2 * n);
  const bool ok = piv.size() == n && piv.back() == n - 1;
  invertible_.store(ok ? 1 : 0);
  require(ok, ErrorCode::Singular, "matrix is singular");
  DenseMatrix m(F, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.a_[i * n + j] = aug[i][n + j];
  m.invertible_ = 1;
  return m;
}

DenseMatrix DenseMatrix::pow(const BigInt& e) const {
  require_square(*this);
  DenseMatrix base = e < 0 ? inverse() : *this;
  BigInt n = e < 0 ? BigInt(-e) : e;
  DenseMatrix result = identity(field_, rows_);
  if (n == 0) return result;
  const auto top = static_cast<long>(msb(n));
  for (long i = top; i >= 0; --i) {
    result = result * result;
    if (bit_test(n, static_cast<unsigned>(i))) result = result * base;
  }
  return result;
}

std::string DenseMatrix::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) s += ' ';
      s += std::to_string(at(i, j));
    }
    s += '\n';
  }
  return s;
}

Vec vec_mul(const Vec& v, const DenseMatrix& m) {
  require(v.size() == m.rows(), ErrorCode::DimensionMismatch, "vector length");
  const FieldSpec& F = m.field();
  Vec out(m.cols(), 0);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Elt y = m.at(k, j);
      if (y) out[j] = F.add(out[j], F.mul(v[k], y));
    }
  }
  return out;
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  check_field(a.field(), b.field());
  const FieldSpec& F = a.field();
  DenseMatrix m(F, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          m.set(i * b.rows() + k, j * b.cols() + l, F.mul(a.at(i, j), b.at(k, l)));
  return m;
}

DenseMatrix eval(const DensePoly& f, const DenseMatrix& m) {
  require_square(m);
  check_field(f.field(), m.field());
  const std::size_t n = m.rows();
  DenseMatrix acc(m.field(), n, n);
  for (int i = f.degree(); i >= 0; --i) {
    acc = acc * m;
    if (f[i] != 0) acc = acc + DenseMatrix::identity(m.field(), n).scaled(f[i]);
  }
  return acc;
}

// ---- Subspace ----

Subspace::Subspace(FieldSpec field, std::size_t ambient_dim) : field_(std::move(field)), d_(ambient_dim) {}

Subspace Subspace::span(const FieldSpec& field, std::size_t ambient_dim, const std::vector<Vec>& vectors) {
  Subspace s(field, ambient_dim);
  std::vector<Vec> rows;
  for (const auto& v : vectors) {
    require(v.size() == ambient_dim, ErrorCode::DimensionMismatch, "vector length");
    rows.push_back(v);
  }
  s.pivots_ = rref(field, rows, ambient_dim);
  s.basis_ = std::move(rows);
  return s;
}

Subspace Subspace::full(const FieldSpec& field, std::size_t ambient_dim) {
  return image(DenseMatrix::identity(field, ambient_dim));
}

DenseMatrix Subspace::basis_matrix() const {
  DenseMatrix m(field_, basis_.size(), d_);
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = 0; j < d_; ++j) m.set(i, j, basis_[i][j]);
  return m;
}

Vec Subspace::reduce(Vec v) const {
  require(v.size() == d_, ErrorCode::DimensionMismatch, "vector length");
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Elt c = v[pivots_[i]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < d_; ++j) v[j] = field_.sub(v[j], field_.mul(c, basis_[i][j]));
  }
  return v;
}

bool Subspace::contains(const Vec& v) const {
  const Vec r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](Elt x) { return x == 0; });
}

bool Subspace::contains(const Subspace& s) const {
  return std::all_of(s.basis_.begin(), s.basis_.end(), [&](const Vec& v) { return contains(v); });
}

bool Subspace::insert(const Vec& v) {
  Vec r = reduce(v);
  std::size_t piv = 0;
  while (piv < d_ && r[piv] == 0) ++piv;
  if (piv == d_) return false;
  const Elt inv = field_.inv(r[piv]);
  for (auto& x : r) x = field_.mul(x, inv);
  // clear the new pivot column from existing rows, then keep rows sorted by pivot
  for (auto& b : basis_) {
    const Elt c = b[piv];
    if (c == 0) continue;
    for (std::size_t j = 0; j < d_; ++j) b[j] = field_.sub(b[j], field_.mul(c, r[j]));
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, piv);
  basis_.insert(basis_.begin() + pos, std::move(r));
  return true;
}

Vec Subspace::coordinates(const Vec& v) const {
  Vec c(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Subspace Subspace::annihilator() const {
  // left null space of the transposed basis matrix
  DenseMatrix bt(field_, d_, basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = 0; j < d_; ++j) bt.set(j, i, basis_[i][j]);
  return kernel(bt);
}

bool Subspace::operator==(const Subspace& o) const {
  return d_ == o.d_ && basis_ == o.basis_ && field_ == o.field_;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  check_field(a.field(), b.field());
  require(a.ambient_dim() == b.ambient_dim(), ErrorCode::DimensionMismatch, "ambient dimensions");
  const std::size_t d = a.ambient_dim();
  std::vector<Vec> stacked = a.basis();
  stacked.insert(stacked.end(), b.basis().begin(), b.basis().end());
  if (stacked.empty()) return Subspace(a.field(), d);
  Subspace k = kernel(DenseMatrix::from_rows(a.field(), stacked));
  std::vector<Vec> out;
  const FieldSpec& F = a.field();
  for (const auto& x : k.basis()) {
    Vec v(d, 0);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < d; ++j) v[j] = F.add(v[j], F.mul(x[i], a.basis()[i][j]));
    }
    out.push_back(std::move(v));
  }
  return Subspace::span(F, d, out);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  check_field(a.field(), b.field());
  std::vector<Vec> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.field(), a.ambient_dim(), all);
}

Subspace kernel(const DenseMatrix& m) {
  const FieldSpec& F = m.field();
  const std::size_t r = m.rows(), c = m.cols();
  std::vector<Vec> aug(r, Vec(c + r, 0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) aug[i][j] = m.at(i, j);
    aug[i][c + i] = 1;
  }
  auto piv = rref(F, aug, c + r);
  std::vector<Vec> ker;
  for (std::size_t i = 0; i < aug.size(); ++i) {
    if (piv[i] >= c) ker.emplace_back(aug[i].begin() + static_cast<std::ptrdiff_t>(c), aug[i].end());
  }
  return Subspace::span(F, r, ker);
}

Subspace image(const DenseMatrix& m) { return Subspace::span(m.field(), m.cols(), to_rows(m)); }

// ---- polynomials of matrices ----

DensePoly char_poly(const DenseMatrix& m) {
  require_square(m);
  const FieldSpec& F = m.field();
  const std::size_t n = m.rows();
  auto H = to_rows(m);
  for (std::size_t c = 0; c + 2 < n; ++c) {
    std::size_t r = c + 1;
    while (r < n && H[r][c] == 0) ++r;
    if (r == n) continue;
    if (r != c + 1) {
      std::swap(H[r], H[c + 1]);
      for (std::size_t i = 0; i < n; ++i) std::swap(H[i][r], H[i][c + 1]);
    }
    const Elt inv = F.inv(H[c + 1][c]);
    for (std::size_t i = c + 2; i < n; ++i) {
      const Elt u = F.mul(H[i][c], inv);
      if (u == 0) continue;
      for (std::size_t j = 0; j < n; ++j) H[i][j] = F.sub(H[i][j], F.mul(u, H[c + 1][j]));
      for (std::size_t j = 0; j < n; ++j) H[j][c + 1] = F.add(H[j][c + 1], F.mul(u, H[j][i]));
    }
  }
  std::vector<DensePoly> p;
  p.push_back(DensePoly::constant(F, 1));
  for (std::size_t k = 1; k <= n; ++k) {
    DensePoly pk = DensePoly::linear(F, H[k - 1][k - 1]) * p[k - 1];
    Elt prod = 1;
    for (std::size_t i = k - 1; i >= 1; --i) {
      prod = F.mul(prod, H[i][i - 1]);
      if (prod == 0) break;
      const Elt coef = F.mul(H[i - 1][k - 1], prod);
      if (coef != 0) pk = pk - p[i - 1].scaled(coef);
    }
    p.push_back(std::move(pk));
  }
  return p[n];
}

DensePoly min_poly(const DenseMatrix& m) {
  require_square(m);
  const FieldSpec& F = m.field();
  const std::size_t n = m.rows();
  Subspace covered(F, n);
  DensePoly acc = DensePoly::constant(F, 1);
  for (std::size_t i = 0; i < n && covered.dim() < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    if (covered.contains(e)) continue;
    std::vector<Vec> krylov;
    acc = poly::lcm(acc, local_min_poly(e, m, krylov));
    for (const auto& v : krylov) covered.insert(v);
  }
  return acc;
}

BigInt matrix_order(const DenseMatrix& m, const std::optional<BigInt>& bound_hint) {
  require_square(m);
  require(m.is_invertible(), ErrorCode::Singular, "order of a singular matrix");
  if (bound_hint && *bound_hint > 0 && m.pow(*bound_hint).is_identity()) {
    BigInt n = *bound_hint;
    for (const auto& [l, k] : nt::factor(n).factors) {
      for (unsigned i = 0; i < k; ++i) {
        if (!m.pow(n / l).is_identity()) break;
        n /= l;
      }
    }
    return n;
  }
  const FieldSpec& F = m.field();
  const auto fac = poly::factor(min_poly(m));
  BigInt order = 1;
  unsigned max_mult = 1;
  for (const auto& [f, mult] : fac.factors) {
    max_mult = std::max(max_mult, mult);
    if (f.degree() == 1) {
      const Elt root = F.neg(f[0]);
      order = nt::lcm(order, BigInt(F.element_order(root)));
      continue;
    }
    // order of t modulo f divides q^deg - 1
    BigInt n = nt::ipow(BigInt(F.order()), static_cast<unsigned>(f.degree())) - 1;
    const DensePoly t = DensePoly::monomial(F, 1);
    for (const auto& [l, k] : nt::factor(n).factors) {
      for (unsigned i = 0; i < k; ++i) {
        if (!poly::powmod(t, n / l, f).is_one()) break;
        n /= l;
      }
    }
    order = nt::lcm(order, n);
  }
  BigInt pk = 1;
  while (pk < max_mult) pk *= F.characteristic();
  return order * pk;
}

DenseMatrix restrict(const DenseMatrix& m, const Subspace& s) {
  require_square(m);
  require(m.rows() == s.ambient_dim(), ErrorCode::DimensionMismatch, "subspace ambient dimension");
  check_field(m.field(), s.field());
  const std::size_t k = s.dim();
  DenseMatrix out(m.field(), k, k);
  for (std::size_t i = 0; i < k; ++i) {
    const Vec w = vec_mul(s.basis()[i], m);
    require(s.contains(w), ErrorCode::NotInvariant, "subspace is not invariant");
    const Vec c = s.coordinates(w);
    for (std::size_t j = 0; j < k; ++j) out.set(i, j, c[j]);
  }
  return out;
}

}  // namespace stingray::mat
