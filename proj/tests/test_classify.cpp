#include "idd/classify.hpp"

#include <doctest.h>

#include <set>

using namespace idd;

namespace {

using Support = std::set<int>;

// Products of coordinate subspaces are coordinate subspaces here, so the
// power chain can be followed on supports alone.
Support product_support(const StructureTable& t, const Support& a, const Support& b) {
  Support out;
  for (int i : a)
    for (int j : b) {
      const BasisProduct& p = t.product(i, j);
      if (p.kind == ProductKind::InRange && !p.coeff.is_zero()) out.insert(p.target);
    }
  return out;
}

std::vector<Support> support_chain(const StructureTable& t, int steps) {
  Support all;
  for (int i = t.k(); i <= t.top(); ++i) all.insert(i);
  std::vector<Support> chain{all};
  for (int s = 2; s <= steps; ++s) {
    Support next;
    for (int i = 1; i < s; ++i) {
      const Support p = product_support(t, chain[static_cast<std::size_t>(i - 1)], chain[static_cast<std::size_t>(s - i - 1)]);
      next.insert(p.begin(), p.end());
    }
    chain.push_back(next);
  }
  return chain;
}

int brute_proper_monomial_ideals(const StructureTable& t) {
  const int d = t.dim();
  int count = 0;
  for (unsigned mask = 1; mask + 1 < (1u << d); ++mask) {
    Support s;
    for (int b = 0; b < d; ++b)
      if (mask >> b & 1u) s.insert(t.k() + b);
    Support all;
    for (int i = t.k(); i <= t.top(); ++i) all.insert(i);
    const Support l = product_support(t, all, s), r = product_support(t, s, all);
    bool closed = true;
    for (int x : l) closed = closed && s.count(x);
    for (int x : r) closed = closed && s.count(x);
    count += closed;
  }
  return count;
}

Support support_of(const Subspace& s, int k) {
  Support out;
  for (auto p : s.pivots()) out.insert(k + static_cast<int>(p));
  return out;
}

}  // namespace

TEST_SUITE("classify") {

TEST_CASE("triviality criterion examples") {
  CHECK(triviality_predicate(AlgebraSpec::finite(0, 3, 4, 0)));
  CHECK(triviality_predicate(AlgebraSpec::finite(1, 3, 3, 3)));
  CHECK_FALSE(triviality_predicate(AlgebraSpec::finite(0, 3, 2, 2)));
  CHECK(triviality_predicate(AlgebraSpec::finite(2, 5, -1, -1)));
  for (const auto& s : {AlgebraSpec::finite(0, 3, 4, 0), AlgebraSpec::finite(1, 3, 3, 3), AlgebraSpec::finite(2, 5, -1, -1)})
    CHECK(triviality_bruteforce(build_table(s)));
  CHECK_FALSE(triviality_bruteforce(build_table(AlgebraSpec::finite(0, 3, 2, 2))));
  CHECK_FALSE(triviality_bruteforce(build_table(AlgebraSpec::finite(0, 0, 0, 0))));
  const StructureTable t(AlgebraSpec::finite(0, 2, 1, 0));
  CHECK_FALSE(triviality_bruteforce(t));
  const auto w = nonzero_product(t);
  REQUIRE(w);
  CHECK(w->i == 1);
  CHECK(w->j == 0);
  CHECK(w->target == 0);
}

TEST_CASE("criterion misses products killed by T^m1 on low indices") {
  // e_0 is killed by T^1 and e_1 ⋄ e_j lands on e_{j+2}, above n = 1.
  const AlgebraSpec s = AlgebraSpec::finite(0, 1, 1, -2);
  CHECK_FALSE(triviality_predicate(s));
  CHECK(triviality_bruteforce(build_table(s)));
}

TEST_CASE("power chain") {
  const StructureTable t(AlgebraSpec::finite(0, 3, 2, 2));
  const auto chain = power_chain(t);
  REQUIRE(chain.size() >= 2);
  CHECK(chain.back().is_zero());
  for (std::size_t s = 0; s < chain.size(); ++s) {
    const int top = 3 + static_cast<int>(s) * (3 - 4);
    for (int x : support_of(chain[s], 0)) CHECK(x <= top);
  }
  const auto oracle = support_chain(t, 5);
  CHECK(oracle[1] == Support{0, 1, 2});
  CHECK(oracle[2] == Support{0, 1});
  CHECK(oracle[3] == Support{0});
  CHECK(oracle[4].empty());
  CHECK(nilpotency_index(chain) == 5);

  const auto perfect = power_chain(build_table(AlgebraSpec::finite(0, 4, 2, 2)));
  CHECK(perfect.back().dim() == 5);
  CHECK_FALSE(nilpotency_index(perfect).has_value());
}

TEST_CASE("power chain agrees with the support recursion on a grid") {
  for (int k = 0; k <= 2; ++k)
    for (int n = k; n <= 6; ++n)
      for (int m1 = -2; m1 <= 3; ++m1)
        for (int m2 = -2; m2 <= m1; ++m2) {
          const StructureTable t(AlgebraSpec::finite(k, n, m1, m2));
          const auto chain = power_chain(t);
          const auto oracle = support_chain(t, static_cast<int>(chain.size()));
          for (std::size_t s = 0; s < chain.size(); ++s) {
            CHECK(chain[s].is_coordinate());
            CHECK(support_of(chain[s], k) == oracle[s]);
          }
        }
}

TEST_CASE("ideal closure") {
  CHECK(ideal_closure(build_table(AlgebraSpec::finite(0, 5, 1, 1)), {Element::basis(3)}).dim() == 6);
  const Subspace i = ideal_closure(build_table(AlgebraSpec::finite(0, 3, 2, 1)), {Element::basis(0)});
  CHECK(i.dim() == 1);
  CHECK(support_of(i, 0) == Support{0});
  CHECK(ideal_closure(build_table(AlgebraSpec::finite(0, 3, 2, 1)), {}).is_zero());
}

TEST_CASE("ideal enumeration") {
  const auto a = enumerate_ideals(build_table(AlgebraSpec::finite(0, 3, 2, 1)), IdealMode::ExhaustiveSmall);
  CHECK(a.proper_count == 3);
  CHECK(a.exhaustive_checked);
  CHECK(a.monomial_certified);
  const auto b = enumerate_ideals(build_table(AlgebraSpec::finite(1, 4, 1, 0)), IdealMode::ExhaustiveSmall);
  CHECK(b.proper_count == 3);
  for (const auto& s : b.ideals) {
    if (s.is_zero()) continue;
    const Support sup = support_of(s, 1);
    CHECK(*sup.rbegin() == 4);
    CHECK(static_cast<int>(sup.size()) == 4 - *sup.begin() + 1);
  }
  CHECK(enumerate_ideals(build_table(AlgebraSpec::finite(1, 5, 1, 1)), IdealMode::Monomial).proper_count == 0);
  CHECK_THROWS_AS(enumerate_ideals(build_table(AlgebraSpec::finite(0, 13, 1, 1)), IdealMode::ExhaustiveSmall),
                  DimensionTooLarge);
}

TEST_CASE("ideal counts match a subset scan") {
  for (int k = 0; k <= 1; ++k)
    for (int n = k + 1; n <= 6; ++n)
      for (int m1 = -2; m1 <= 2; ++m1)
        for (int m2 = -2; m2 <= m1; ++m2) {
          const StructureTable t(AlgebraSpec::finite(k, n, m1, m2));
          CHECK(enumerate_ideals(t, IdealMode::ExhaustiveSmall).proper_count == brute_proper_monomial_ideals(t));
        }
}

TEST_CASE("verdicts") {
  CHECK(classify(AlgebraSpec::finite(1, 5, 1, 1)).verdict == Verdict::Simple);
  CHECK(classify(AlgebraSpec::finite(0, 6, 1, 0)).verdict == Verdict::Simple);
  const Classification nil = classify(AlgebraSpec::finite(0, 3, 2, 2));
  CHECK(nil.verdict == Verdict::Nilpotent);
  CHECK(nil.nilpotency_index == 5);
  const Classification p = classify(AlgebraSpec::finite(2, 4, 2, 2));
  CHECK(p.verdict == Verdict::PerfectNonSimple);
  CHECK(p.proper_ideals == 2);
  const Classification q = classify(AlgebraSpec::finite(1, 6, 0, 1));
  CHECK(q.normalized == AlgebraSpec::finite(1, 6, 1, 0));
  CHECK(q.verdict == Verdict::PerfectNonSimple);
  CHECK(q.proper_ideals == 5);
  CHECK(classify(AlgebraSpec::finite(0, 3, 9, 0)).verdict == Verdict::Trivial);
}

TEST_CASE("annihilated low basis elements break the case split") {
  // T^1 kills e_0, so <e_0> is an ideal: e_0 ⋄ x = x ⋄ e_0 = 0.
  const Classification a = assess(AlgebraSpec::finite(0, 5, 1, 1));
  CHECK(a.predicted == Verdict::Simple);
  CHECK(a.verdict == Verdict::Discrepancy);
  CHECK(a.proper_ideals == 1);
  CHECK(a.witnesses.proper_ideals == std::vector<std::vector<int>>{{0}});
  // T^2 kills e_0 and e_1, giving the extra ideal <e_1> beyond the n - k tails.
  const Classification b = assess(AlgebraSpec::finite(0, 4, 2, 2));
  CHECK(b.predicted == Verdict::PerfectNonSimple);
  CHECK(b.verdict == Verdict::Discrepancy);
  CHECK(b.proper_ideals == 5);
  CHECK(b.witnesses.perfect == true);
}

TEST_CASE("high-level specs outside the case split are reported, not forced") {
  // A ⋄ A = <e_1..e_5> is a proper ideal although the level sits between k and n.
  const Classification c = assess(AlgebraSpec::finite(0, 5, 3, -1));
  CHECK(c.predicted == Verdict::Simple);
  CHECK_FALSE(c.oracle_agreement);
  CHECK(c.verdict == Verdict::Discrepancy);
  CHECK_THROWS_AS(classify(AlgebraSpec::finite(0, 5, 3, -1)), ClassificationDiscrepancy);
}

TEST_CASE("opposite algebras get the same verdict") {
  for (int m1 = -2; m1 <= 2; ++m1)
    for (int m2 = -2; m2 < m1; ++m2) {
      const auto a = assess(AlgebraSpec::finite(1, 6, m1, m2));
      const auto b = assess(AlgebraSpec::finite(1, 6, m2, m1));
      CHECK(a.verdict == b.verdict);
      CHECK(a.proper_ideals == b.proper_ideals);
    }
}

TEST_CASE("classification is deterministic for a fixed seed") {
  const auto a = assess(AlgebraSpec::finite(0, 14, 2, 1), 42);
  const auto b = assess(AlgebraSpec::finite(0, 14, 2, 1), 42);
  CHECK(a.verdict == b.verdict);
  CHECK(a.witnesses.closure_probes == b.witnesses.closure_probes);
  CHECK(a.seed == 42);
}

TEST_CASE("pro-nilpotence windows") {
  const auto r = pro_nilpotent_window_check(build_table(AlgebraSpec::window(2, 30, 0, 0)));
  CHECK(r.pass);
  REQUIRE(r.steps_verified >= 8);
  for (int t = 1; t <= 8; ++t) CHECK(r.min_index[static_cast<std::size_t>(t - 1)] == 2 + (t - 1) * 2);
  const auto s = pro_nilpotent_window_check(build_table(AlgebraSpec::window(3, 40, 1, 0)));
  CHECK(s.pass);
  for (std::size_t t = 1; t < s.min_index.size(); ++t) CHECK(s.min_index[t] - s.min_index[t - 1] == 2);
  CHECK_THROWS_AS(pro_nilpotent_window_check(build_table(AlgebraSpec::window(1, 30, 1, 0))), std::invalid_argument);
  CHECK_THROWS_AS(pro_nilpotent_window_check(build_table(AlgebraSpec::window(2, 5, 0, 0))), WindowTooSmall);
}

}
