#ifndef IDD_ALGEBRA_HPP
#define IDD_ALGEBRA_HPP

#include "idd/rational.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace idd {

class SpecParseError : public std::invalid_argument {
public:
  SpecParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Identifies IDD(K^k_n, m1, m2), or the truncation of IDD(K^k_inf, m1, m2)
/// to the indices k..N. Basis indices are absolute exponents e_k..e_top.
class AlgebraSpec {
public:
  enum class Extent { Finite, InfiniteWindow };

  static AlgebraSpec finite(int k, int n, int m1, int m2);
  static AlgebraSpec window(int k, int bound, int m1, int m2);
  /// Grammar: `K<k>:<n>:<m1>,<m2>` or `K<k>:inf@<N>:<m1>,<m2>`.
  static AlgebraSpec parse(std::string_view text);

  int k() const { return k_; }
  int top() const { return top_; }
  int m1() const { return m1_; }
  int m2() const { return m2_; }
  Extent extent() const { return extent_; }
  bool is_finite() const { return extent_ == Extent::Finite; }
  bool is_window() const { return extent_ == Extent::InfiniteWindow; }
  int dim() const { return top_ - k_ + 1; }
  bool contains_index(int i) const { return i >= k_ && i <= top_; }

  int rank() const;
  int level() const { return m1_ + m2_; }

  AlgebraSpec opposite() const;
  /// Same algebra with the order normalized to m1 >= m2.
  AlgebraSpec normalized() const { return m1_ >= m2_ ? *this : opposite(); }
  AlgebraSpec with_top(int top) const;

  std::string to_string() const;

  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;

private:
  AlgebraSpec(Extent extent, int k, int top, int m1, int m2)
      : extent_(extent), k_(k), top_(top), m1_(m1), m2_(m2) {}

  Extent extent_;
  int k_;
  int top_;
  int m1_;
  int m2_;
};

inline int rank(const AlgebraSpec& s) { return s.rank(); }
inline int level(const AlgebraSpec& s) { return s.level(); }

/// Scalar c with T^m(x^i) = c x^{i-m}: falling factorial for m > 0,
/// 1/((i+1)...(i+|m|)) for m < 0, 1 for m = 0.
Rational op_coeff(int i, int m);

/// Sparse vector over absolute basis indices; zero coefficients are never stored.
class Element {
public:
  Element() = default;
  static Element basis(int index, Rational coeff = 1);

  void add(int index, const Rational& coeff);
  Rational coeff(int index) const;
  const std::map<int, Rational>& terms() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }
  std::optional<int> min_index() const;
  std::optional<int> max_index() const;

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Rational& s);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Rational& s, Element a) { return a *= s; }
  friend bool operator==(const Element&, const Element&) = default;

  std::string to_string() const;

private:
  std::map<int, Rational> coords_;
};

class OutOfWindow : public std::runtime_error {
public:
  OutOfWindow(int i, int j);
  int left() const { return i_; }
  int right() const { return j_; }

private:
  int i_;
  int j_;
};

enum class ProductKind { Zero, InRange, OutOfWindow };

struct BasisProduct {
  ProductKind kind = ProductKind::Zero;
  Rational coeff;  // raw T^m1(x^i) T^m2(x^j) scalar; zero when kind == Zero
  int target = 0;  // i + j - level
};

/// e_i ⋄ e_j = coeff(i,j) e_{i+j-l}. In window mode a nonzero product that
/// lands above N is OutOfWindow, never zero.
class StructureTable {
public:
  explicit StructureTable(const AlgebraSpec& spec);

  const AlgebraSpec& spec() const { return spec_; }
  int k() const { return spec_.k(); }
  int top() const { return spec_.top(); }
  int dim() const { return spec_.dim(); }

  const BasisProduct& product(int i, int j) const { return entries_[slot(i, j)]; }
  /// Coefficient on e_{i+j-l} for in-range products, 0 otherwise.
  Rational coeff(int i, int j) const;
  bool out_of_window(int i, int j) const { return product(i, j).kind == ProductKind::OutOfWindow; }

  Element multiply(const Element& x, const Element& y) const;
  /// nullopt instead of throwing when a contributing pair leaves the window.
  std::optional<Element> try_multiply(const Element& x, const Element& y) const;

  friend bool operator==(const StructureTable& a, const StructureTable& b);

private:
  friend StructureTable opposite_table(const StructureTable& t);
  std::size_t slot(int i, int j) const;

  AlgebraSpec spec_;
  std::vector<BasisProduct> entries_;
};

StructureTable build_table(const AlgebraSpec& spec);
/// Transposed table; equals build_table(spec.opposite()).
StructureTable opposite_table(const StructureTable& t);

bool is_multiplicative_basis(const StructureTable& t);
/// Every in-window basis product is nonzero (out-of-window pairs are skipped).
bool is_strong_multiplicative(const StructureTable& t);

}  // namespace idd

#endif
