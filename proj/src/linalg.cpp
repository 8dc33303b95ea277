#include "idd/linalg.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace idd {

DimensionMismatch::DimensionMismatch(std::size_t expected, std::size_t got)
    : std::invalid_argument("dimension mismatch: expected " + std::to_string(expected) + ", got " +
                            std::to_string(got)) {}

RatMatrix RatMatrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  RatMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void RatMatrix::append_row(std::span<const Rational> values) {
  if (values.size() != cols_) throw DimensionMismatch(cols_, values.size());
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

Vector RatMatrix::apply(std::span<const Rational> x) const {
  if (x.size() != cols_) throw DimensionMismatch(cols_, x.size());
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    mpq_class acc = 0;
    for (std::size_t c = 0; c < cols_; ++c)
      if (!x[c].is_zero() && !(*this)(r, c).is_zero()) acc += (*this)(r, c).mpq() * x[c].mpq();
    out[r] = Rational(acc);
  }
  return out;
}

bool is_zero_vector(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

namespace {

using IntRow = std::vector<mpz_class>;

// Scale a rational row to integers and strip the content; the leading
// nonzero entry is made positive.
IntRow primitive_row(std::span<const Rational> row) {
  mpz_class lcm = 1;
  for (const auto& x : row)
    if (!x.is_zero()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.mpq().get_den_mpz_t());
  IntRow out(row.size());
  for (std::size_t c = 0; c < row.size(); ++c)
    if (!row[c].is_zero()) out[c] = row[c].mpq().get_num() * (lcm / row[c].mpq().get_den());
  return out;
}

void make_primitive(IntRow& row) {
  mpz_class g = 0;
  for (const auto& x : row)
    if (sgn(x) != 0) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      if (g == 1) break;
    }
  if (g > 1)
    for (auto& x : row)
      if (sgn(x) != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// target <- p * target - a * source, where p = source[col], a = target[col].
void eliminate(IntRow& target, const IntRow& source, std::size_t col) {
  const mpz_class p = source[col];
  const mpz_class a = target[col];
  for (std::size_t c = 0; c < target.size(); ++c) {
    if (sgn(source[c]) == 0) {
      if (sgn(target[c]) != 0) target[c] *= p;
    } else {
      target[c] = p * target[c] - a * source[c];
    }
  }
  make_primitive(target);
}

}  // namespace

Echelon rref(const RatMatrix& m) {
  std::vector<IntRow> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    IntRow row = primitive_row(m.row(r));
    bool nonzero = std::any_of(row.begin(), row.end(), [](const mpz_class& x) { return sgn(x) != 0; });
    if (nonzero) {
      make_primitive(row);
      rows.push_back(std::move(row));
    }
  }

  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t col = 0; col < m.cols() && next < rows.size(); ++col) {
    std::size_t found = next;
    while (found < rows.size() && sgn(rows[found][col]) == 0) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[next], rows[found]);
    for (std::size_t r = next + 1; r < rows.size(); ++r)
      if (sgn(rows[r][col]) != 0) eliminate(rows[r], rows[next], col);
    pivots.push_back(col);
    ++next;
  }
  rows.resize(next);

  // Back substitution, still fraction-free.
  for (std::size_t pr = pivots.size(); pr-- > 0;) {
    for (std::size_t r = 0; r < pr; ++r)
      if (sgn(rows[r][pivots[pr]]) != 0) eliminate(rows[r], rows[pr], pivots[pr]);
  }

  Echelon out{RatMatrix(pivots.size(), m.cols()), pivots};
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const mpz_class& p = rows[r][pivots[r]];
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (sgn(rows[r][c]) != 0) out.reduced(r, c) = Rational(rows[r][c], p);
  }
  return out;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& generators) {
  RatMatrix m(0, ambient_dim);
  for (const auto& g : generators) m.append_row(g);
  Echelon e = rref(m);
  Subspace s(ambient_dim);
  s.pivots_ = e.pivots;
  s.basis_.reserve(e.rank());
  for (std::size_t r = 0; r < e.rank(); ++r) {
    auto row = e.reduced.row(r);
    s.basis_.emplace_back(row.begin(), row.end());
  }
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<std::size_t> all(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) all[i] = i;
  return coordinate(ambient_dim, all);
}

Subspace Subspace::coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& coords) {
  std::vector<std::size_t> sorted = coords;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Subspace s(ambient_dim);
  for (std::size_t c : sorted) {
    if (c >= ambient_dim) throw DimensionMismatch(ambient_dim, c + 1);
    Vector v(ambient_dim);
    v[c] = 1;
    s.basis_.push_back(std::move(v));
    s.pivots_.push_back(c);
  }
  return s;
}

Vector Subspace::residual(std::span<const Rational> v) const {
  if (v.size() != ambient_dim_) throw DimensionMismatch(ambient_dim_, v.size());
  Vector out(v.begin(), v.end());
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const Rational f = out[pivots_[r]];
    if (f.is_zero()) continue;
    for (std::size_t c = 0; c < ambient_dim_; ++c)
      if (!basis_[r][c].is_zero()) out[c] -= f * basis_[r][c];
  }
  return out;
}

bool Subspace::contains(std::span<const Rational> v) const { return is_zero_vector(residual(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw DimensionMismatch(ambient_dim_, other.ambient_dim_);
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const Vector& v) { return contains(v); });
}

bool Subspace::is_coordinate() const {
  for (std::size_t r = 0; r < basis_.size(); ++r)
    for (std::size_t c = 0; c < ambient_dim_; ++c)
      if (c != pivots_[r] && !basis_[r][c].is_zero()) return false;
  return true;
}

bool Subspace::insert(std::span<const Rational> v) {
  Vector r = residual(v);
  std::size_t pivot = 0;
  while (pivot < ambient_dim_ && r[pivot].is_zero()) ++pivot;
  if (pivot == ambient_dim_) return false;
  const Rational scale = r[pivot].inverse();
  for (auto& x : r)
    if (!x.is_zero()) x *= scale;
  for (auto& row : basis_) {
    const Rational f = row[pivot];
    if (f.is_zero()) continue;
    for (std::size_t c = 0; c < ambient_dim_; ++c)
      if (!r[c].is_zero()) row[c] -= f * r[c];
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  const auto at = pos - pivots_.begin();
  pivots_.insert(pos, pivot);
  basis_.insert(basis_.begin() + at, std::move(r));
  return true;
}

Subspace kernel(const RatMatrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> gens;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.rank(); ++r)
      if (!e.reduced(r, f).is_zero()) v[e.pivots[r]] = -e.reduced(r, f);
    gens.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), gens);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch(a.ambient_dim(), b.ambient_dim());
  std::vector<Vector> gens = a.basis();
  gens.insert(gens.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), gens);
}

}  // namespace idd
