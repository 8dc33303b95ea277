#ifndef IDD_DERIVATIONS_HPP
#define IDD_DERIVATIONS_HPP

#include "idd/algebra.hpp"
#include "idd/linalg.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace idd {

/// Linear endomorphism of e_k..e_top. Column q holds D(e_q); entry(p, q) is the
/// coefficient of e_p in D(e_q). Vectorized row-major: slot (p-k)*d + (q-k).
class LinearMap {
public:
  LinearMap(int k, int dim) : k_(k), dim_(dim), matrix_(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim)) {}
  static LinearMap zero(const AlgebraSpec& spec) { return LinearMap(spec.k(), spec.dim()); }
  static LinearMap identity(const AlgebraSpec& spec);
  static LinearMap from_vector(int k, int dim, const Vector& v);

  int k() const { return k_; }
  int dim() const { return dim_; }
  int top() const { return k_ + dim_ - 1; }

  const Rational& entry(int p, int q) const;
  void set(int p, int q, const Rational& value);
  /// D(e_q) += value e_p.
  void add(int p, int q, const Rational& value);

  Element image(int q) const;
  Element apply(const Element& x) const;
  Vector vectorize() const;
  bool is_zero() const;

  LinearMap compose(const LinearMap& inner) const;  // this ∘ inner
  friend LinearMap operator-(const LinearMap& a, const LinearMap& b);
  friend bool operator==(const LinearMap&, const LinearMap&) = default;

private:
  std::size_t slot(int index) const;

  int k_;
  int dim_;
  RatMatrix matrix_;
};

/// [a, b] = a∘b − b∘a.
LinearMap bracket(const LinearMap& a, const LinearMap& b);

/// One row per (i, j, output index) carrying a nonzero constraint of
/// D(e_i ⋄ e_j) = D(e_i) ⋄ e_j + e_i ⋄ D(e_j); columns are vectorized maps.
RatMatrix leibniz_matrix(const StructureTable& t);

enum class Exec { Serial, Parallel };

/// Der(A) as a subspace of vectorized maps. The Leibniz system splits by the
/// degree shift p − q of its unknowns; each block is solved on its own.
Subspace derivation_kernel(const StructureTable& t, Exec exec = Exec::Parallel);

struct LeibnizCheck {
  bool ok = true;
  std::optional<std::pair<int, int>> witness;  // first failing (i, j)
  Element defect;                              // D(e_i⋄e_j) − D(e_i)⋄e_j − e_i⋄D(e_j) at the witness
};

/// Direct evaluation over every basis pair, with no matrix assembly.
LeibnizCheck check_leibniz(const StructureTable& t, const LinearMap& d);

struct NamedMap {
  std::string name;
  LinearMap map;
};

struct MapCheck {
  std::string name;
  bool leibniz_ok = true;
  std::optional<std::pair<int, int>> witness;
};

struct DerivationReport {
  AlgebraSpec spec;
  Subspace kernel;
  std::optional<std::string> family;      // registry family, nullopt when not in the registry
  std::string citation;
  int stated_dim = -1;                    // generator count of the registered statement
  std::vector<MapCheck> per_map;
  bool span_match = false;
  std::vector<std::string> discrepancies;
  std::vector<std::string> notes;
  int kernel_dim() const { return static_cast<int>(kernel.dim()); }
};

DerivationReport solve_derivations(const AlgebraSpec& spec, Exec exec = Exec::Parallel);

/// A map on the infinite algebra given by its action on each basis element.
struct FormulaMap {
  std::string name;
  std::function<Element(int)> image;
  std::optional<int> fits_below;  // smallest window top that can see this map, if it matters
};

struct FormulaCheck {
  std::string name;
  int safe_pairs = 0;
  int unsafe_pairs = 0;
  bool leibniz_ok = true;
  std::optional<std::pair<int, int>> witness;
};

/// Leibniz on every basis pair of the window whose intermediate results stay inside it.
FormulaCheck check_leibniz_window(const StructureTable& window, const FormulaMap& d);

struct InfiniteFamilyReport {
  AlgebraSpec spec;
  std::string family;
  std::string citation;
  int margin = 0;
  int interior_top = 0;
  std::vector<FormulaCheck> per_map;
  int finite_kernel_dim = 0;
  int interior_dim = 0;        // dim of the kernel projected to the interior block
  int family_interior_dim = 0; // dim of the family's maps projected the same way
  int boundary_dim = 0;        // kernel vectors invisible in the interior
  bool interior_match = false;      // no interior derivation outside the family span
  bool family_in_interior = false;  // every family map is seen by some finite derivation
  int unchecked_maps = 0;           // indexed maps with no safe pair in the window
  std::vector<std::string> discrepancies;
  std::vector<std::string> notes;
  bool pass() const;
};

constexpr int kDefaultWindowMargin = 8;

/// Checks a corollary family on IDD(K^k_inf) truncated at N: (a) Leibniz on
/// the safe region; (b) the kernel of the finite algebra K^k_N, restricted to
/// the interior block [k, N - margin], lies in the family's span restricted the
/// same way. Tail derivations supported near e_N vanish under the restriction.
InfiniteFamilyReport infinite_family_check(const AlgebraSpec& window_spec, int margin = kDefaultWindowMargin);

}  // namespace idd

#endif
