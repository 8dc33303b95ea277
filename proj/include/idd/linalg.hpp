#ifndef IDD_LINALG_HPP
#define IDD_LINALG_HPP

#include "idd/rational.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace idd {

using Vector = std::vector<Rational>;

class DimensionMismatch : public std::invalid_argument {
public:
  DimensionMismatch(std::size_t expected, std::size_t got);
};

/// Dense row-major rational matrix.
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RatMatrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Rational> values);
  Vector apply(std::span<const Rational> x) const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct Echelon {
  RatMatrix reduced;                 // nonzero rows only, pivots = 1
  std::vector<std::size_t> pivots;   // pivot column of each reduced row
  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row-echelon form. Elimination runs on primitive integer rows and
/// only divides by the pivots at the end; the pivot is the first nonzero
/// entry in column order.
Echelon rref(const RatMatrix& m);

/// Subspace of Q^n stored as its canonical RREF basis, so equality is basis identity.
class Subspace {
public:
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_dim_(ambient_dim) {}
  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& generators);
  static Subspace full(std::size_t ambient_dim);
  static Subspace coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& coords);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// v minus its projection along the pivot coordinates; zero iff v lies in the span.
  Vector residual(std::span<const Rational> v) const;
  bool contains(std::span<const Rational> v) const;
  bool contains(const Subspace& other) const;
  /// True when every basis vector is a coordinate unit vector.
  bool is_coordinate() const;
  /// Adds v to the span keeping the canonical form; false if v was already inside.
  bool insert(std::span<const Rational> v);

  friend bool operator==(const Subspace&, const Subspace&) = default;

private:
  std::size_t ambient_dim_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Canonical basis of {x : m x = 0}.
Subspace kernel(const RatMatrix& m);
Subspace sum(const Subspace& a, const Subspace& b);
inline bool equal(const Subspace& a, const Subspace& b) { return a == b; }
inline bool contains(const Subspace& s, std::span<const Rational> v) { return s.contains(v); }

bool is_zero_vector(std::span<const Rational> v);

}  // namespace idd

#endif
