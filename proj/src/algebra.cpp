#include "idd/algebra.hpp"

#include <charconv>
#include <cstdlib>
#include <sstream>

namespace idd {

AlgebraSpec AlgebraSpec::finite(int k, int n, int m1, int m2) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  if (n < k) throw std::invalid_argument("finite spec requires n >= k");
  return AlgebraSpec(Extent::Finite, k, n, m1, m2);
}

AlgebraSpec AlgebraSpec::window(int k, int bound, int m1, int m2) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  if (bound < k) throw std::invalid_argument("window spec requires N >= k");
  return AlgebraSpec(Extent::InfiniteWindow, k, bound, m1, m2);
}

int AlgebraSpec::rank() const { return std::abs(m1_) + std::abs(m2_); }

AlgebraSpec AlgebraSpec::opposite() const { return AlgebraSpec(extent_, k_, top_, m2_, m1_); }

AlgebraSpec AlgebraSpec::with_top(int top) const {
  return is_finite() ? finite(k_, top, m1_, m2_) : window(k_, top, m1_, m2_);
}

std::string AlgebraSpec::to_string() const {
  std::ostringstream os;
  os << 'K' << k_ << ':';
  if (is_window()) os << "inf@";
  os << top_ << ':' << m1_ << ',' << m2_;
  return os.str();
}

namespace {

class SpecCursor {
public:
  explicit SpecCursor(std::string_view text) : text_(text) {}

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw SpecParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  bool consume(std::string_view word) {
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  int integer(bool allow_sign) {
    const std::size_t start = pos_;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    if (!allow_sign && first < last && *first == '-')
      throw SpecParseError("negative value not allowed", pos_);
    int value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) throw SpecParseError("expected integer", start);
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  void finish() const {
    if (pos_ != text_.size()) throw SpecParseError("trailing characters", pos_);
  }

  std::size_t position() const { return pos_; }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

AlgebraSpec AlgebraSpec::parse(std::string_view text) {
  SpecCursor cur(text);
  cur.expect('K');
  const int k = cur.integer(false);
  cur.expect(':');
  const bool infinite = cur.consume("inf@");
  const std::size_t top_pos = cur.position();
  const int top = cur.integer(false);
  cur.expect(':');
  const int m1 = cur.integer(true);
  cur.expect(',');
  const int m2 = cur.integer(true);
  cur.finish();
  if (top < k) throw SpecParseError("upper bound below k", top_pos);
  return infinite ? window(k, top, m1, m2) : finite(k, top, m1, m2);
}

Rational op_coeff(int i, int m) {
  if (m == 0) return 1;
  if (m > 0) {
    if (i < m) return 0;
    mpz_class acc = 1;
    for (int t = 0; t < m; ++t) acc *= i - t;
    return Rational(acc);
  }
  mpz_class acc = 1;
  for (int t = 1; t <= -m; ++t) acc *= i + t;
  return Rational(mpz_class(1), acc);
}

// Element ---------------------------------------------------------------

Element Element::basis(int index, Rational coeff) {
  Element e;
  e.add(index, coeff);
  return e;
}

void Element::add(int index, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = coords_.try_emplace(index, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) coords_.erase(it);
  }
}

Rational Element::coeff(int index) const {
  auto it = coords_.find(index);
  return it == coords_.end() ? Rational() : it->second;
}

std::optional<int> Element::min_index() const {
  if (coords_.empty()) return std::nullopt;
  return coords_.begin()->first;
}

std::optional<int> Element::max_index() const {
  if (coords_.empty()) return std::nullopt;
  return coords_.rbegin()->first;
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [i, c] : o.coords_) add(i, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [i, c] : o.coords_) add(i, -c);
  return *this;
}

Element& Element::operator*=(const Rational& s) {
  if (s.is_zero()) {
    coords_.clear();
    return *this;
  }
  for (auto& [i, c] : coords_) c *= s;
  return *this;
}

std::string Element::to_string() const {
  if (coords_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : coords_) {
    if (!first) os << " + ";
    first = false;
    if (!c.is_one()) os << '(' << c << ")*";
    os << "e_" << i;
  }
  return os.str();
}

// StructureTable --------------------------------------------------------

OutOfWindow::OutOfWindow(int i, int j)
    : std::runtime_error("product e_" + std::to_string(i) + " * e_" + std::to_string(j) +
                         " leaves the truncation window"),
      i_(i),
      j_(j) {}

StructureTable::StructureTable(const AlgebraSpec& spec) : spec_(spec) {
  const int d = spec.dim();
  entries_.resize(static_cast<std::size_t>(d) * d);
  const int l = spec.level();
  for (int i = spec.k(); i <= spec.top(); ++i) {
    const Rational left = op_coeff(i, spec.m1());
    for (int j = spec.k(); j <= spec.top(); ++j) {
      BasisProduct& p = entries_[slot(i, j)];
      p.target = i + j - l;
      if (left.is_zero()) continue;
      Rational c = left * op_coeff(j, spec.m2());
      if (c.is_zero() || p.target < spec.k()) continue;
      if (p.target > spec.top()) {
        if (spec.is_window()) {
          p.kind = ProductKind::OutOfWindow;
          p.coeff = std::move(c);
        }
        continue;
      }
      p.kind = ProductKind::InRange;
      p.coeff = std::move(c);
    }
  }
}

std::size_t StructureTable::slot(int i, int j) const {
  if (!spec_.contains_index(i) || !spec_.contains_index(j))
    throw std::out_of_range("basis index outside e_" + std::to_string(spec_.k()) + "..e_" +
                            std::to_string(spec_.top()));
  const int d = spec_.dim();
  return static_cast<std::size_t>(i - spec_.k()) * d + static_cast<std::size_t>(j - spec_.k());
}

Rational StructureTable::coeff(int i, int j) const {
  const BasisProduct& p = product(i, j);
  return p.kind == ProductKind::InRange ? p.coeff : Rational();
}

std::optional<Element> StructureTable::try_multiply(const Element& x, const Element& y) const {
  Element out;
  for (const auto& [i, a] : x.terms()) {
    for (const auto& [j, b] : y.terms()) {
      const BasisProduct& p = product(i, j);
      if (p.kind == ProductKind::OutOfWindow) return std::nullopt;
      if (p.kind == ProductKind::InRange) out.add(p.target, a * b * p.coeff);
    }
  }
  return out;
}

Element StructureTable::multiply(const Element& x, const Element& y) const {
  Element out;
  for (const auto& [i, a] : x.terms()) {
    for (const auto& [j, b] : y.terms()) {
      const BasisProduct& p = product(i, j);
      if (p.kind == ProductKind::OutOfWindow) throw OutOfWindow(i, j);
      if (p.kind == ProductKind::InRange) out.add(p.target, a * b * p.coeff);
    }
  }
  return out;
}

bool operator==(const StructureTable& a, const StructureTable& b) {
  if (a.spec_.k() != b.spec_.k() || a.spec_.top() != b.spec_.top() ||
      a.spec_.extent() != b.spec_.extent())
    return false;
  for (std::size_t s = 0; s < a.entries_.size(); ++s) {
    const BasisProduct& p = a.entries_[s];
    const BasisProduct& q = b.entries_[s];
    if (p.kind != q.kind) return false;
    if (p.kind != ProductKind::Zero && (p.coeff != q.coeff || p.target != q.target)) return false;
  }
  return true;
}

StructureTable build_table(const AlgebraSpec& spec) { return StructureTable(spec); }

StructureTable opposite_table(const StructureTable& t) {
  StructureTable out = t;
  out.spec_ = t.spec_.opposite();
  for (int i = t.k(); i <= t.top(); ++i)
    for (int j = t.k(); j <= t.top(); ++j) out.entries_[out.slot(i, j)] = t.product(j, i);
  return out;
}

bool is_multiplicative_basis(const StructureTable& t) {
  for (int i = t.k(); i <= t.top(); ++i)
    for (int j = t.k(); j <= t.top(); ++j) {
      auto p = t.try_multiply(Element::basis(i), Element::basis(j));
      if (p && p->terms().size() > 1) return false;
    }
  return true;
}

bool is_strong_multiplicative(const StructureTable& t) {
  for (int i = t.k(); i <= t.top(); ++i)
    for (int j = t.k(); j <= t.top(); ++j) {
      const BasisProduct& p = t.product(i, j);
      if (p.kind == ProductKind::Zero) return false;
    }
  return true;
}

}  // namespace idd
