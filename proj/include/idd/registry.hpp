#ifndef IDD_REGISTRY_HPP
#define IDD_REGISTRY_HPP

#include "idd/derivations.hpp"

#include <optional>
#include <string>
#include <vector>

namespace idd {

/// A published description of Der(IDD(K^k_n, m1, m2)) for n in [n_min, n_max].
struct Statement {
  std::string family;   // scope name, e.g. "der-m1-m1"
  int k;
  int m1;
  int m2;
  int n_min;
  std::optional<int> n_max;  // nullopt: every n >= n_min
  std::string citation;
  bool covers(const AlgebraSpec& spec) const;
};

const std::vector<Statement>& derivation_statements();

struct FamilyInstance {
  Statement statement;
  std::vector<NamedMap> maps;
  int stated_dim = 0;
  std::vector<std::string> notes;
};

/// Named maps with n substituted; nullopt when the spec is not covered.
std::optional<FamilyInstance> paper_derivations(const AlgebraSpec& spec);

struct CorollaryFamily {
  std::string family;
  std::string citation;
  std::vector<FormulaMap> maps;   // infinite index families are cut to those visible in the window
  int stated_generators = 0;      // count written in the statement, -1 for "infinitely many"
  std::vector<std::string> notes;
};

/// Corollary for IDD(K^k_inf, m1, m2); the window bound limits indexed families.
std::optional<CorollaryFamily> paper_corollary(int k, int m1, int m2, int window_top);

struct CorollaryKey {
  int k;
  int m1;
  int m2;
};
const std::vector<CorollaryKey>& corollary_keys();

}  // namespace idd

#endif
