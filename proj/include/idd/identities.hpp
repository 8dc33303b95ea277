#ifndef IDD_IDENTITIES_HPP
#define IDD_IDENTITIES_HPP

#include "idd/algebra.hpp"
#include "idd/derivations.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace idd {

class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// e_i ∗ e_j = star(i, j) e_{i+j-m} for IDD(K^k, m, 0).
class StarTable {
public:
  /// Throws PreconditionError unless m2 == 0.
  explicit StarTable(const AlgebraSpec& spec);

  const AlgebraSpec& spec() const { return spec_; }
  int m() const { return spec_.m1(); }
  int target(int i, int j) const { return i + j - m(); }
  /// False where op_coeff(i+j-m, m) vanishes (or the target leaves the basis)
  /// while the numerator does not.
  bool defined(int i, int j) const { return defined_[slot(i, j)]; }
  const Rational& coeff(int i, int j) const { return coeff_[slot(i, j)]; }

private:
  std::size_t slot(int i, int j) const;

  AlgebraSpec spec_;
  std::vector<Rational> coeff_;
  std::vector<bool> defined_;
};

struct TermValue {
  std::string term;
  Rational value;
};

struct IdentityReport {
  AlgebraSpec spec;
  std::string identity;
  long checked = 0;
  long excluded_unsafe = 0;
  long excluded_undefined_star = 0;
  bool pass = true;
  std::optional<std::vector<int>> witness;  // basis indices of the first failing tuple
  std::vector<TermValue> witness_terms;     // per-term values at the witness
};

IdentityReport check_left_commutative(const StructureTable& t, Exec exec = Exec::Parallel);
IdentityReport check_generalized_associative(const StructureTable& t, const StarTable& s,
                                             Exec exec = Exec::Parallel);
IdentityReport check_conservative(const StructureTable& t, const StarTable& s, Exec exec = Exec::Parallel);

}  // namespace idd

#endif
