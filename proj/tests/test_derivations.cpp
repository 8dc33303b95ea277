#include "idd/classify.hpp"
#include "idd/derivations.hpp"
#include "idd/registry.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace idd;

namespace {

// Structure constant straight from the factorial formula and its index ranges.
Rational c(int k, int n, int m1, int m2, int i, int j) {
  const int t = i + j - m1 - m2;
  if (i < k || j < k || i > n || j > n || t < k || t > n) return 0;
  return oracle::factorial_ratio(i, m1) * oracle::factorial_ratio(j, m2);
}

// dim Der = d^2 - rank of the Leibniz system, rank taken modulo a large prime.
int oracle_der_dim(int k, int n, int m1, int m2) {
  const int d = n - k + 1, l = m1 + m2;
  auto col = [&](int p, int q) { return static_cast<std::size_t>((p - k) * d + (q - k)); };
  std::vector<Vector> rows;
  for (int i = k; i <= n; ++i)
    for (int j = k; j <= n; ++j)
      for (int r = k; r <= n; ++r) {
        Vector row(static_cast<std::size_t>(d * d));
        const int t = i + j - l;
        if (t >= k && t <= n) row[col(r, t)] += c(k, n, m1, m2, i, j);
        const int p1 = r - j + l;
        if (p1 >= k && p1 <= n) row[col(p1, i)] -= c(k, n, m1, m2, p1, j);
        const int p2 = r - i + l;
        if (p2 >= k && p2 <= n) row[col(p2, j)] -= c(k, n, m1, m2, i, p2);
        if (!is_zero_vector(row)) rows.push_back(std::move(row));
      }
  return d * d - static_cast<int>(oracle::rank_mod_p(rows, 2305843009213693951ULL));
}

int der_dim(const std::string& spec) { return solve_derivations(AlgebraSpec::parse(spec)).kernel_dim(); }

const NamedMap& find(const std::vector<NamedMap>& maps, const std::string& name) {
  for (const auto& m : maps)
    if (m.name == name) return m;
  FAIL("no map named " << name);
  return maps.front();
}

}  // namespace

TEST_SUITE("derivations") {

TEST_CASE("small kernels") {
  CHECK(derivation_kernel(build_table(AlgebraSpec::parse("K0:1:0,0"))).dim() == 1);
  CHECK(derivation_kernel(build_table(AlgebraSpec::parse("K0:3:9,0"))).dim() == 16);
  CHECK(leibniz_matrix(build_table(AlgebraSpec::parse("K0:3:9,0"))).rows() == 0);
}

TEST_CASE("dimension table") {
  CHECK(der_dim("K1:10:1,0") == 1);
  CHECK(der_dim("K0:10:0,-1") == 11);
  CHECK(der_dim("K1:10:0,-1") == 12);
  CHECK(der_dim("K0:2:2,0") == 6);
  CHECK(der_dim("K1:10:2,0") == 1);
  CHECK(der_dim("K0:10:1,-1") == 1);
  CHECK(der_dim("K1:2:1,-1") == 2);
  CHECK(der_dim("K1:10:1,-1") == 3);
  CHECK(der_dim("K0:2:-1,-1") == 5);
  CHECK(der_dim("K0:4:-1,-1") == 8);
  CHECK(der_dim("K0:10:-1,-1") == 9);
  CHECK(der_dim("K1:5:-1,-1") == 12);
  CHECK(der_dim("K1:6:-1,-1") == 14);
  CHECK(der_dim("K1:7:-1,-1") == 15);
  CHECK(der_dim("K1:10:-1,-1") == 16);
  CHECK(der_dim("K0:2:0,-2") == 5);
  CHECK(der_dim("K0:3:0,-2") == 7);
  CHECK(der_dim("K0:10:0,-2") == 7);
  CHECK(der_dim("K1:4:0,-2") == 10);
  CHECK(der_dim("K1:5:0,-2") == 12);
  CHECK(der_dim("K1:7:0,-2") == 13);
  CHECK(der_dim("K1:10:0,-2") == 12);
}

TEST_CASE("dimensions the stated bases get wrong") {
  // The lowering map phi(e_i) = i e_{i-1} is not a derivation once the top is cut off.
  CHECK(derivation_kernel(build_table(AlgebraSpec::parse("K0:3:1,0"))).dim() == 1);
  CHECK(der_dim("K0:10:1,0") == 1);
  CHECK(der_dim("K0:10:2,0") == 1);
  CHECK(der_dim("K0:10:1,1") == 1);
  CHECK(der_dim("K1:10:1,1") == 1);
  // Extra derivations; checked directly below.
  CHECK(der_dim("K0:3:-1,-1") == 7);
  CHECK(der_dim("K1:4:0,-1") == 7);
  CHECK(der_dim("K1:6:0,-2") == 13);
  for (const char* text : {"K0:10:1,0", "K0:10:2,0", "K0:10:1,1", "K1:10:1,1", "K0:3:-1,-1", "K1:4:0,-1", "K1:6:0,-2"}) {
    const DerivationReport r = solve_derivations(AlgebraSpec::parse(text));
    CHECK_FALSE(r.span_match);
    CHECK_FALSE(r.discrepancies.empty());
  }
}

TEST_CASE("kernel dimension agrees with an independent modular rank") {
  for (int k = 0; k <= 1; ++k)
    for (int n = k; n <= 7; ++n)
      for (int m1 = -2; m1 <= 2; ++m1)
        for (int m2 = -2; m2 <= m1; ++m2) {
          CAPTURE(k);
          CAPTURE(n);
          CAPTURE(m1);
          CAPTURE(m2);
          CHECK(static_cast<int>(derivation_kernel(build_table(AlgebraSpec::finite(k, n, m1, m2))).dim()) ==
                oracle_der_dim(k, n, m1, m2));
        }
}

TEST_CASE("block solver, serial path and full Leibniz matrix agree") {
  for (const char* text : {"K0:6:1,0", "K1:8:-1,-1", "K1:7:0,-2", "K0:5:3,-2", "K2:6:0,0"}) {
    const StructureTable t(AlgebraSpec::parse(text));
    const Subspace par = derivation_kernel(t, Exec::Parallel);
    CHECK(par == derivation_kernel(t, Exec::Serial));
    CHECK(par == kernel(leibniz_matrix(t)));
  }
}

TEST_CASE("direct Leibniz evaluation") {
  const AlgebraSpec s = AlgebraSpec::parse("K0:8:1,0");
  const StructureTable t(s);
  LinearMap varphi = LinearMap::zero(s);
  for (int i = 0; i <= 8; ++i) varphi.set(i, i, i - 1);
  CHECK(check_leibniz(t, varphi).ok);
  const LeibnizCheck id = check_leibniz(t, LinearMap::identity(s));
  CHECK_FALSE(id.ok);
  REQUIRE(id.witness);
  CHECK_FALSE(id.defect.is_zero());
  CHECK(check_leibniz(t, LinearMap::zero(s)).ok);
}

TEST_CASE("registered maps") {
  const auto a = paper_derivations(AlgebraSpec::parse("K1:10:1,-1"));
  REQUIRE(a);
  const LinearMap& varphi = find(a->maps, "varphi").map;
  for (int i = 1; i <= 10; ++i) CHECK(varphi.entry(i, i) == Rational(i));
  const LinearMap& phi1 = find(a->maps, "phi_1").map;
  CHECK(phi1.image(1) == Element::basis(9, 10));
  CHECK(phi1.image(2) == Element::basis(10, 92));
  CHECK(find(a->maps, "phi_2").map.image(1) == Element::basis(10));

  const auto b = paper_derivations(AlgebraSpec::parse("K0:10:1,0"));
  REQUIRE(b);
  CHECK(find(b->maps, "varphi").map.image(4) == Element::basis(4, 3));
  CHECK(find(b->maps, "phi").map.image(4) == Element::basis(3, 4));

  const int n = 12;
  const auto c = paper_derivations(AlgebraSpec::finite(1, n, -1, -1));
  REQUIRE(c);
  CHECK(find(c->maps, "phi_6").map.image(1) == Element::basis(n - 6, 18 * (n - 2) * (n - 5)));
  const auto d = paper_derivations(AlgebraSpec::finite(1, n, 0, -2));
  REQUIRE(d);
  CHECK(find(d->maps, "phi_4").map.image(1) == Element::basis(n - 4, (n - 3) * (n * n - 4)));

  CHECK_FALSE(paper_derivations(AlgebraSpec::parse("K0:9:5,5")));
  const DerivationReport r = solve_derivations(AlgebraSpec::parse("K0:9:5,5"));
  CHECK_FALSE(r.family);
}

TEST_CASE("reports on theorem instances") {
  const DerivationReport r = solve_derivations(AlgebraSpec::parse("K1:10:1,-1"));
  CHECK(r.kernel_dim() == 3);
  CHECK(r.span_match);
  CHECK(r.discrepancies.empty());
  CHECK(r.family == "der-1-m1");
  const DerivationReport opp = solve_derivations(AlgebraSpec::parse("K1:10:-1,1"));
  CHECK(opp.kernel_dim() == 3);
}

TEST_CASE("the lowering map fails on finite truncations") {
  // phi(e_i) = i e_{i-1} needs the product e_n ⋄ e_1 = n e_n to survive at the top.
  const DerivationReport r = solve_derivations(AlgebraSpec::parse("K0:5:1,0"));
  CHECK(r.kernel_dim() == 1);
  CHECK_FALSE(r.span_match);
  bool flagged = false;
  for (const auto& m : r.per_map)
    if (m.name == "phi") {
      flagged = !m.leibniz_ok && m.witness.has_value();
    }
  CHECK(flagged);
  CHECK_FALSE(r.discrepancies.empty());
}

TEST_CASE("extra derivations outside a stated basis pass the direct check") {
  const AlgebraSpec s = AlgebraSpec::parse("K1:4:0,-1");
  LinearMap d = LinearMap::zero(s);
  d.set(1, 1, 1);
  d.set(3, 3, 2);
  d.set(4, 4, 1);
  CHECK(check_leibniz(build_table(s), d).ok);
  const DerivationReport r = solve_derivations(s);
  CHECK(r.kernel.contains(d.vectorize()));
  CHECK_FALSE(r.span_match);
  const auto named = paper_derivations(s);
  REQUIRE(named);
  std::vector<Vector> gens;
  for (const auto& m : named->maps) gens.push_back(m.map.vectorize());
  CHECK_FALSE(Subspace::span(static_cast<std::size_t>(s.dim() * s.dim()), gens).contains(d.vectorize()));
}

TEST_CASE("kernel maps pass the direct check and are closed under brackets") {
  for (const char* text : {"K0:6:-1,-1", "K1:8:-1,-1", "K1:9:0,-2", "K0:5:0,-1"}) {
    const AlgebraSpec s = AlgebraSpec::parse(text);
    const StructureTable t(s);
    const Subspace ker = derivation_kernel(t);
    std::vector<LinearMap> maps;
    for (const auto& v : ker.basis()) maps.push_back(LinearMap::from_vector(s.k(), s.dim(), v));
    for (const auto& m : maps) CHECK(check_leibniz(t, m).ok);
    for (std::size_t a = 0; a < maps.size(); ++a)
      for (std::size_t b = a + 1; b < maps.size(); ++b) {
        const LinearMap br = bracket(maps[a], maps[b]);
        CHECK(check_leibniz(t, br).ok);
        CHECK(ker.contains(br.vectorize()));
      }
  }
}

TEST_CASE("random maps outside the kernel fail the direct check") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> v(-3, 3);
  const AlgebraSpec s = AlgebraSpec::parse("K0:6:2,0");
  const StructureTable t(s);
  const Subspace ker = derivation_kernel(t);
  for (int trial = 0; trial < 50; ++trial) {
    Vector x(static_cast<std::size_t>(s.dim() * s.dim()));
    for (auto& e : x) e = Rational(v(rng));
    const LinearMap m = LinearMap::from_vector(s.k(), s.dim(), x);
    CHECK(check_leibniz(t, m).ok == ker.contains(x));
  }
}

TEST_CASE("corollaries on windows") {
  const InfiniteFamilyReport a = infinite_family_check(AlgebraSpec::parse("K1:inf@30:-1,-1"));
  CHECK(a.pass());
  REQUIRE(a.per_map.size() == 1);
  CHECK(a.per_map[0].leibniz_ok);
  CHECK(a.per_map[0].safe_pairs > 0);
  const InfiniteFamilyReport b = infinite_family_check(AlgebraSpec::parse("K0:inf@30:0,-1"));
  CHECK(b.pass());
  int seen = 0;
  for (const auto& m : b.per_map)
    for (int i = 0; i <= 10; ++i)
      if (m.name == "varphi_" + std::to_string(i)) {
        ++seen;
        CHECK(m.leibniz_ok);
      }
  CHECK(seen == 11);
  CHECK_THROWS_AS(infinite_family_check(AlgebraSpec::parse("K0:inf@30:0,-1"), 0), WindowTooSmall);
}

TEST_CASE("linear map algebra") {
  const AlgebraSpec s = AlgebraSpec::parse("K1:4:0,0");
  LinearMap a = LinearMap::zero(s), b = LinearMap::zero(s);
  a.set(2, 1, 1);
  b.set(3, 2, 1);
  CHECK(b.compose(a).image(1) == Element::basis(3));
  CHECK(bracket(a, a).is_zero());
  CHECK(bracket(a, b) == a.compose(b) - b.compose(a));
  CHECK(bracket(a, b).image(1) == Element::basis(3, -1));
  CHECK(LinearMap::from_vector(1, 4, a.vectorize()) == a);
}

}
