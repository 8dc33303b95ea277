#ifndef IDD_CLASSIFY_HPP
#define IDD_CLASSIFY_HPP

#include "idd/algebra.hpp"
#include "idd/linalg.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace idd {

class DimensionTooLarge : public std::invalid_argument {
public:
  DimensionTooLarge(int dim, int bound);
};

class WindowTooSmall : public std::invalid_argument {
public:
  explicit WindowTooSmall(const std::string& what) : std::invalid_argument(what) {}
};

/// Coordinate conversions between sparse elements and dense vectors over e_k..e_top.
Vector to_vector(const StructureTable& t, const Element& x);
Element to_element(const StructureTable& t, const Vector& v);

bool triviality_predicate(const AlgebraSpec& spec);
bool triviality_bruteforce(const StructureTable& t);

/// Smallest-index basis pair with a nonzero in-range product.
struct ProductWitness {
  int i;
  int j;
  Rational coeff;
  int target;
};
std::optional<ProductWitness> nonzero_product(const StructureTable& t);

/// span{u ⋄ v : u in U, v in V}.
Subspace product_space(const StructureTable& t, const Subspace& u, const Subspace& v);

/// A^1 ⊇ A^2 ⊇ ... with A^t = Σ_{i+j=t} A^i ⋄ A^j, stopping at 0, at A^2 = A
/// (the chain is then constant), or after max_steps terms.
std::vector<Subspace> power_chain(const StructureTable& t, int max_steps = 0);

/// Index of the first zero term of a chain, counted from A^1.
std::optional<int> nilpotency_index(const std::vector<Subspace>& chain);

Subspace ideal_closure(const StructureTable& t, const std::vector<Element>& generators);

enum class IdealMode { Monomial, ExhaustiveSmall };

struct IdealEnumeration {
  std::vector<Subspace> ideals;      // every monomial ideal, 0 and A included, sorted by (dim, pivots)
  int proper_count = 0;              // excludes 0 and A
  bool exhaustive_checked = false;   // 2^dim coordinate-pattern scan ran and agreed
  bool monomial_certified = false;   // every ideal is provably spanned by basis vectors
};

constexpr int kExhaustiveIdealBound = 12;

IdealEnumeration enumerate_ideals(const StructureTable& t, IdealMode mode);

/// Exact test that every ideal is monomial: the diagonal part of the
/// multiplication algebra separates all coordinates.
bool ideals_are_monomial(const StructureTable& t);

enum class Verdict { Trivial, Nilpotent, Simple, PerfectNonSimple, WindowInconclusive, Discrepancy };
std::string to_string(Verdict v);

struct ClassificationWitnesses {
  std::optional<ProductWitness> nonzero_product;
  std::vector<std::vector<int>> power_chain;   // support of each A^t
  bool chain_bound_holds = true;
  std::optional<bool> perfect;                 // A ⋄ A = A
  std::vector<std::vector<int>> proper_ideals; // supports of monomial proper ideals
  std::optional<bool> exhaustive_checked;
  std::optional<bool> monomial_certified;
  std::optional<bool> ideal_shape_matches;
  int closure_probes = 0;
  int basis_closures = 0;
  std::optional<bool> closures_full;
};

struct Classification {
  AlgebraSpec spec;
  AlgebraSpec normalized;
  std::string level_case;   // position of the level relative to k and n
  Verdict predicted = Verdict::Trivial;
  Verdict verdict = Verdict::Trivial;
  std::optional<int> nilpotency_index;
  std::optional<int> proper_ideals;
  ClassificationWitnesses witnesses;
  bool oracle_agreement = true;
  std::vector<std::string> discrepancies;
  std::uint64_t seed = 0;
};

class ClassificationDiscrepancy : public std::runtime_error {
public:
  explicit ClassificationDiscrepancy(Classification report);
  const Classification& report() const { return report_; }

private:
  Classification report_;
};

constexpr std::uint64_t kDefaultSeed = 0x1DD5EEDULL;
constexpr int kClosureProbes = 50;

/// Runs the case split and every oracle; never throws on disagreement.
Classification assess(const AlgebraSpec& spec, std::uint64_t seed = kDefaultSeed,
                      int probes = kClosureProbes);
/// As assess, but a predicate/oracle conflict throws ClassificationDiscrepancy.
Classification classify(const AlgebraSpec& spec, std::uint64_t seed = kDefaultSeed);

struct ProNilpotentReport {
  AlgebraSpec spec;
  int level = 0;
  int steps_verified = 0;           // chain terms whose minimum index fits the window
  std::vector<int> min_index;       // observed minimal index of A^t, t = 1..steps_verified
  std::vector<int> expected;        // k + (t-1)(k-l)
  bool tails_full = true;           // each A^t is the full tail from its minimum in the window
  bool pass = false;
};

/// Window check of A^t = <e_{k+(t-1)(k-l)}, ...> for lev < k.
ProNilpotentReport pro_nilpotent_window_check(const StructureTable& t);

}  // namespace idd

#endif
