#include "idd/registry.hpp"

#include <initializer_list>
#include <utility>

namespace idd {

namespace {

// D(e_q) = c e_p
struct Entry {
  int q;
  int p;
  long c;
};

struct Table {
  std::string name;
  std::vector<Entry> entries;
};

class Builder {
public:
  explicit Builder(const AlgebraSpec& spec) : spec_(spec) {}

  LinearMap& map(const std::string& name) {
    maps_.push_back({name, LinearMap::zero(spec_)});
    return maps_.back().map;
  }

  // Indices outside the basis carry no information; they arise from formulas
  // such as i e_{i-1} at i = k.
  void put(LinearMap& m, int q, int p, const Rational& c) {
    if (c.is_zero() || !spec_.contains_index(p) || !spec_.contains_index(q)) return;
    m.add(p, q, c);
  }

  void tables(std::initializer_list<Table> ts) {
    for (const auto& t : ts) {
      LinearMap& m = map(t.name);
      for (const auto& e : t.entries) put(m, e.q, e.p, e.c);
    }
  }

  // varphi(e_i) = (i + shift) e_i
  void diagonal(const std::string& name, int shift) {
    LinearMap& m = map(name);
    for (int i = spec_.k(); i <= spec_.top(); ++i) put(m, i, i, i + shift);
  }

  // phi(e_i) = i e_{i-1}, skipping i = skip_at when given
  void lowering(const std::string& name, std::optional<int> skip_at = std::nullopt) {
    LinearMap& m = map(name);
    for (int i = spec_.k(); i <= spec_.top(); ++i)
      if (i != skip_at) put(m, i, i - 1, i);
  }

  std::vector<NamedMap> take() { return std::move(maps_); }

private:
  AlgebraSpec spec_;
  std::vector<NamedMap> maps_;
};

std::string idx(const std::string& base, int i) { return base + "_" + std::to_string(i); }

using Fill = void (*)(Builder&, int n);

struct Entry2 {
  Statement statement;
  Fill fill;
  std::vector<std::string> notes;
};

const std::vector<Entry2>& entries() {
  static const std::vector<Entry2> all = [] {
    std::vector<Entry2> v;
    auto add = [&](std::string family, int k, int m1, int m2, int lo, std::optional<int> hi, std::string cite,
                   Fill f, std::vector<std::string> notes = {}) {
      v.push_back({{std::move(family), k, m1, m2, lo, hi, std::move(cite)}, f, std::move(notes)});
    };

    // rank 1
    add("der-1-0", 0, 1, 0, 1, std::nullopt,
        "Der(IDD(K^0_n,1,0)) for n >= 1: <varphi, phi>, varphi(e_i) = (i-1)e_i, phi(e_i) = i e_{i-1}",
        [](Builder& b, int) {
          b.diagonal("varphi", -1);
          b.lowering("phi");
        });
    add("der-1-0", 1, 1, 0, 1, std::nullopt, "Der(IDD(K^1_n,1,0)) for n >= 1: <varphi>, varphi(e_i) = (i-1)e_i",
        [](Builder& b, int) { b.diagonal("varphi", -1); });
    add("der-0-m1", 0, 0, -1, 1, std::nullopt,
        "Der(IDD(K^0_n,0,-1)) for n >= 1: <varphi_i>_{0<=i<=n}, varphi_i(e_k) = (i+1+k)e_{k+i}",
        [](Builder& b, int n) {
          for (int i = 0; i <= n; ++i) {
            LinearMap& m = b.map(idx("varphi", i));
            for (int q = 0; q <= n - i; ++q) b.put(m, q, q + i, i + 1 + q);
          }
        });
    add("der-0-m1", 1, 0, -1, 3, std::nullopt,
        "Der(IDD(K^1_n,0,-1)) for n >= 3: <varphi_i, phi_1, phi_2>_{1<=i<=n}, varphi_i(e_k) = (i+k)e_{k+i-1}, "
        "phi_1(e_2) = e_{n-1}, phi_2(e_2) = e_n",
        [](Builder& b, int n) {
          for (int i = 1; i <= n; ++i) {
            LinearMap& m = b.map(idx("varphi", i));
            for (int q = 1; q <= 1 + n - i; ++q) b.put(m, q, q + i - 1, i + q);
          }
          b.tables({{"phi_1", {{2, n - 1, 1}}}, {"phi_2", {{2, n, 1}}}});
        });

    // (2, 0)
    add("der-2-0", 0, 2, 0, 2, 2, "Der(IDD(K^0_2,2,0)) = <varphi_i, phi_i, psi_i>_{0<=i<=1}",
        [](Builder& b, int) {
          for (int i = 0; i <= 1; ++i) b.tables({{idx("varphi", i), {{0, i, 1}}}});
          for (int i = 0; i <= 1; ++i) b.tables({{idx("phi", i), {{1, i, 1}}}});
          for (int i = 0; i <= 1; ++i) b.tables({{idx("psi", i), {{2, i, 1}}}});
        });
    add("der-2-0", 0, 2, 0, 3, std::nullopt,
        "Der(IDD(K^0_n,2,0)) for n >= 3: <varphi, phi>, varphi(e_i) = (i-2)e_i, phi(e_i) = i e_{i-1}",
        [](Builder& b, int) {
          b.diagonal("varphi", -2);
          b.lowering("phi");
        });
    add("der-2-0", 1, 2, 0, 2, 2, "Der(IDD(K^1_2,2,0)) = <varphi, phi>, varphi(e_1) = e_1, phi(e_2) = e_1",
        [](Builder& b, int) { b.tables({{"varphi", {{1, 1, 1}}}, {"phi", {{2, 1, 1}}}}); });
    add("der-2-0", 1, 2, 0, 3, std::nullopt, "Der(IDD(K^1_n,2,0)) for n >= 3: <varphi>, varphi(e_i) = (i-2)e_i",
        [](Builder& b, int) { b.diagonal("varphi", -2); });

    // (1, 1)
    add("der-1-1", 0, 1, 1, 1, std::nullopt,
        "Der(IDD(K^0_n,1,1)) for n >= 1: <varphi, phi>, varphi(e_i) = (i-2)e_i, phi(e_i) = i e_{i-1}",
        [](Builder& b, int) {
          b.diagonal("varphi", -2);
          b.lowering("phi");
        });
    add("der-1-1", 1, 1, 1, 2, std::nullopt,
        "Der(IDD(K^1_n,1,1)) for n >= 2: <varphi, phi>, varphi(e_i) = (i-2)e_i, phi(e_i) = (1-delta_{1,i}) i e_{i-1}",
        [](Builder& b, int) {
          b.diagonal("varphi", -2);
          b.lowering("phi", 1);
        });

    // (1, -1)
    add("der-1-m1", 0, 1, -1, 1, std::nullopt, "Der(IDD(K^0_n,1,-1)) for n >= 1: <varphi>, varphi(e_i) = i e_i",
        [](Builder& b, int) { b.diagonal("varphi", 0); });
    add("der-1-m1", 1, 1, -1, 2, 2,
        "Der(IDD(K^1_2,1,-1)) = <varphi_1, varphi_2>, varphi_2(e_1) = e_2, varphi_1(e_1) = e_1, varphi_1(e_2) = 2e_2",
        [](Builder& b, int) {
          b.tables({{"varphi_2", {{1, 2, 1}}}, {"varphi_1", {{1, 1, 1}, {2, 2, 2}}}});
        });
    add("der-1-m1", 1, 1, -1, 3, std::nullopt,
        "Der(IDD(K^1_n,1,-1)) for n >= 3: <varphi, phi_1, phi_2>, varphi(e_i) = i e_i, "
        "phi_1(e_1) = n e_{n-1}, phi_1(e_2) = (n^2-n+2)e_n, phi_2(e_1) = e_n",
        [](Builder& b, int n) {
          b.diagonal("varphi", 0);
          b.tables({{"phi_1", {{1, n - 1, n}, {2, n, static_cast<long>(n) * n - n + 2}}}, {"phi_2", {{1, n, 1}}}});
        });

    // (-1, -1)
    add("der-m1-m1", 0, -1, -1, 2, 2, "Der(IDD(K^0_2,-1,-1)) = <varphi_i, phi_j>_{0<=i<=2, 1<=j<=2}",
        [](Builder& b, int) {
          b.tables({{"varphi_0", {{0, 0, 1}, {2, 2, 2}}},
                    {"varphi_1", {{0, 1, 1}}},
                    {"varphi_2", {{0, 2, 1}}},
                    {"phi_1", {{1, 1, 1}}},
                    {"phi_2", {{1, 2, 1}}}});
        });
    add("der-m1-m1", 0, -1, -1, 3, 3, "Der(IDD(K^0_3,-1,-1)) = <varphi_i, phi_j>_{1<=i<=3, 1<=j<=3}",
        [](Builder& b, int) {
          b.tables({{"varphi_1", {{0, 1, 1}, {2, 3, 1}}},
                    {"varphi_2", {{0, 2, 1}}},
                    {"varphi_3", {{0, 3, 1}}},
                    {"phi_1", {{1, 1, 1}, {3, 3, 1}}},
                    {"phi_2", {{1, 2, 1}}},
                    {"phi_3", {{1, 3, 1}}}});
        });
    add("der-m1-m1", 0, -1, -1, 4, 4, "Der(IDD(K^0_4,-1,-1)) = <varphi_i, phi_j>_{0<=i<=4, 2<=j<=4}",
        [](Builder& b, int) {
          b.tables({{"varphi_4", {{0, 4, 1}}},
                    {"varphi_3", {{0, 3, 1}}},
                    {"varphi_2", {{0, 2, 3}, {2, 4, 2}}},
                    {"varphi_1", {{0, 1, 2}, {2, 3, 2}, {3, 4, 1}}},
                    {"varphi_0", {{0, 0, 2}, {1, 1, 3}, {2, 2, 4}, {3, 3, 5}, {4, 4, 6}}},
                    {"phi_4", {{1, 4, 1}}},
                    {"phi_3", {{1, 3, 1}}},
                    {"phi_2", {{1, 2, 3}, {3, 4, 2}}}});
        });
    add("der-m1-m1", 0, -1, -1, 5, std::nullopt,
        "Der(IDD(K^0_n,-1,-1)) for n >= 5: <varphi, phi_i, psi_j>_{0<=i<=4, 0<=j<=2}, varphi(e_i) = (i+2)e_i",
        [](Builder& b, int n) {
          b.diagonal("varphi", 2);
          const long N = n;
          b.tables({{"phi_4",
                     {{0, n - 4, 4 * (N - 1) * (N - 3)},
                      {1, n - 3, (N - 2) * (N + 5)},
                      {2, n - 2, 8 * (N - 1)},
                      {3, n - 1, 6 * (N + 1)},
                      {4, n, 4 * (N + 5)}}},
                    {"phi_3", {{0, n - 3, N - 2}, {2, n - 1, 2}, {3, n, 1}}},
                    {"phi_2", {{0, n - 2, N - 1}, {2, n, 2}}},
                    {"phi_1", {{0, n - 1, 1}}},
                    {"phi_0", {{0, n, 1}}},
                    {"psi_2", {{1, n - 2, N - 1}, {3, n, 1}}},
                    {"psi_1", {{1, n - 1, 1}}},
                    {"psi_0", {{1, n, 1}}}});
        });
    add("der-m1-m1", 1, -1, -1, 4, 4, "Der(IDD(K^1_4,-1,-1)) = <varphi_i, phi_j, psi_j>_{1<=i<=4, 2<=j<=4}",
        [](Builder& b, int) {
          b.tables({{"varphi_1", {{1, 1, 1}, {4, 4, 2}}},
                    {"varphi_2", {{1, 2, 1}}},
                    {"varphi_3", {{1, 3, 1}}},
                    {"varphi_4", {{1, 4, 1}}}});
          for (int j = 2; j <= 4; ++j) b.tables({{idx("phi", j), {{2, j, 1}}}});
          for (int j = 2; j <= 4; ++j) b.tables({{idx("psi", j), {{3, j, 1}}}});
        });
    add("der-m1-m1", 1, -1, -1, 5, 5,
        "Der(IDD(K^1_5,-1,-1)) = <varphi_i, phi_j, psi_k>_{1<=i<=5, 2<=j<=5, 3<=k<=5}", [](Builder& b, int) {
          b.tables({{"varphi_5", {{1, 5, 1}}},
                    {"varphi_4", {{1, 4, 1}}},
                    {"varphi_3", {{1, 3, 1}}},
                    {"varphi_2", {{1, 2, 3}, {4, 5, 4}}},
                    {"varphi_1", {{1, 1, 1}, {4, 4, 2}, {5, 5, 1}}},
                    {"phi_5", {{2, 5, 1}}},
                    {"phi_4", {{2, 4, 1}}},
                    {"phi_3", {{2, 3, 1}}},
                    {"phi_2", {{2, 2, 1}, {5, 5, 1}}},
                    {"psi_5", {{3, 5, 1}}},
                    {"psi_4", {{3, 4, 1}}},
                    {"psi_3", {{3, 3, 1}}}});
        });
    add("der-m1-m1", 1, -1, -1, 6, 6,
        "Der(IDD(K^1_6,-1,-1)) = <varphi_i, phi_j, psi_k>_{1<=i<=6, 2<=j<=6, 4<=k<=6}", [](Builder& b, int) {
          b.tables({{"varphi_6", {{1, 6, 1}}},
                    {"varphi_5", {{1, 5, 1}}},
                    {"varphi_4", {{1, 4, 1}}},
                    {"varphi_3", {{1, 3, 1}, {4, 6, 1}}},
                    {"varphi_2", {{1, 2, 3}, {4, 5, 4}, {5, 6, 2}}},
                    {"varphi_1", {{1, 1, 1}, {3, 3, -1}, {4, 4, 2}, {5, 5, 1}}},
                    {"phi_6", {{2, 6, 1}}},
                    {"phi_5", {{2, 5, 1}}},
                    {"phi_4", {{2, 4, 1}}},
                    {"phi_3", {{2, 3, 4}, {5, 6, 3}}},
                    {"phi_2", {{2, 2, 1}, {3, 3, 2}, {5, 5, 1}, {6, 6, 2}}},
                    {"psi_6", {{3, 6, 1}}},
                    {"psi_5", {{3, 5, 1}}},
                    {"psi_4", {{3, 4, 1}}}});
        });
    add("der-m1-m1", 1, -1, -1, 7, 7,
        "Der(IDD(K^1_7,-1,-1)) = <varphi_i, phi_j, psi_k>_{1<=i<=7, 3<=j<=7, 5<=k<=7}",
        [](Builder& b, int) {
          b.tables({{"varphi_7", {{1, 7, 1}}},
                    {"varphi_6", {{1, 6, 1}}},
                    {"varphi_5", {{1, 5, 1}}},
                    {"varphi_4", {{1, 4, 5}, {4, 7, 4}}},
                    {"varphi_3", {{1, 3, 2}, {4, 6, 2}, {5, 7, 1}}},
                    {"varphi_2", {{1, 2, 6}, {3, 4, 5}, {4, 5, -8}, {5, 6, 4}}},
                    {"varphi_1", {{1, 1, 3}, {2, 2, 4}, {3, 3, 5}, {4, 4, 2}, {5, 5, 7}, {6, 6, 8}, {7, 7, 3}}},
                    {"phi_7", {{2, 7, 1}}},
                    {"phi_6", {{2, 6, 1}}},
                    {"phi_5", {{2, 5, 1}}},
                    {"phi_4", {{2, 4, 5}, {5, 7, 3}}},
                    {"phi_3", {{2, 3, 8}, {3, 4, 15}, {5, 6, 6}, {6, 7, 12}}},
                    {"psi_7", {{3, 7, 1}}},
                    {"psi_6", {{3, 6, 1}}},
                    {"psi_5", {{3, 5, 1}}}});
        },
        {"statement header indexes phi_j over 3 <= j <= 7; the table lists phi_3..phi_7 and is used as given"});
    add("der-m1-m1", 1, -1, -1, 8, std::nullopt,
        "Der(IDD(K^1_n,-1,-1)) for n >= 8: <varphi, phi_i, psi_j, pi_k>_{0<=i<=6, 0<=j<=4, 0<=k<=2}, "
        "varphi(e_i) = (i+2)e_i",
        [](Builder& b, int n) {
          b.diagonal("varphi", 2);
          const long N = n;
          b.tables({{"phi_6",
                     {{1, n - 6, 18 * (N - 2) * (N - 5)},
                      {2, n - 5, 8 * (N - 4) * (N + 3)},
                      {3, n - 4, 3 * (N - 3) * (N + 18)},
                      {4, n - 3, 72 * (N - 2)},
                      {5, n - 2, 60 * N},
                      {6, n - 1, 48 * (N + 3)},
                      {7, n, 36 * (N + 8)}}},
                    {"phi_5", {{1, n - 5, 2 * (N - 4)}, {3, n - 3, 2 - N}, {4, n - 2, 8}, {5, n - 1, 4}}},
                    {"phi_4", {{1, n - 4, N - 3}, {4, n - 1, 4}, {5, n, 2}}},
                    {"phi_3", {{1, n - 3, N - 2}, {4, n, 4}}},
                    {"phi_2", {{1, n - 2, 1}}},
                    {"phi_1", {{1, n - 1, 1}}},
                    {"phi_0", {{1, n, 1}}},
                    {"psi_4", {{2, n - 4, 2 * (N - 3)}, {3, n - 3, 3 * (N - 2)}, {5, n - 1, -6}, {6, n, 12}}},
                    {"psi_3", {{2, n - 3, N - 2}, {5, n, 3}}},
                    {"psi_2", {{2, n - 2, 1}}},
                    {"psi_1", {{2, n - 1, 1}}},
                    {"psi_0", {{2, n, 1}}},
                    {"pi_2", {{3, n - 2, 1}}},
                    {"pi_1", {{3, n - 1, 1}}},
                    {"pi_0", {{3, n, 1}}}});
        });

    // (0, -2)
    add("der-0-m2", 0, 0, -2, 2, 2, "Der(IDD(K^0_2,0,-2)) = <varphi_i, phi_j>_{0<=i<=2, 1<=j<=2}",
        [](Builder& b, int) {
          b.tables({{"varphi_0", {{0, 0, 1}, {2, 2, 2}}},
                    {"varphi_1", {{0, 1, 1}}},
                    {"varphi_2", {{0, 2, 1}}},
                    {"phi_1", {{1, 1, 1}}},
                    {"phi_2", {{1, 2, 1}}}});
        });
    add("der-0-m2", 0, 0, -2, 3, 3, "Der(IDD(K^0_3,0,-2)) = <varphi_i, phi_j>_{0<=i<=3, 1<=j<=3}",
        [](Builder& b, int) {
          b.tables({{"varphi_3", {{0, 3, 1}}},
                    {"varphi_2", {{0, 2, 1}}},
                    {"varphi_1", {{0, 1, 3}, {2, 3, 4}}},
                    {"varphi_0", {{0, 0, 1}, {2, 2, 2}, {3, 3, 1}}},
                    {"phi_3", {{1, 3, 1}}},
                    {"phi_2", {{1, 2, 1}}},
                    {"phi_1", {{1, 1, 1}, {3, 3, 1}}}});
        });
    add("der-0-m2", 0, 0, -2, 4, std::nullopt,
        "Der(IDD(K^0_n,0,-2)) for n >= 4: <varphi, phi_i, psi_j>_{0<=i<=3, 0<=j<=1}, varphi(e_i) = (i+2)e_i",
        [](Builder& b, int n) {
          b.diagonal("varphi", 2);
          const long N = n;
          b.tables({{"phi_3",
                     {{0, n - 3, (N - 1) * (N * N - 4)},
                      {1, n - 2, N * N * (N - 1)},
                      {2, n - 1, (N + 2) * (N * N - 3 * N + 4)},
                      {3, n, (N + 1) * (N * N - 2 * N + 4)}}},
                    {"phi_2", {{0, n - 2, N * (N - 1)}, {2, n, N * N - N + 2}}},
                    {"phi_1", {{0, n - 1, 1}}},
                    {"phi_0", {{0, n, 1}}},
                    {"psi_1", {{1, n - 1, 1}}},
                    {"psi_0", {{1, n, 1}}}});
        },
        {"statement lists a pi_k generator family in its span but defines none; the table's seven maps are used"});
    add("der-0-m2", 1, 0, -2, 4, 4, "Der(IDD(K^1_4,0,-2)) = <varphi_i, phi_j, psi_j>_{1<=i<=4, 2<=j<=4}",
        [](Builder& b, int) {
          b.tables({{"varphi_1", {{1, 1, 1}, {4, 4, 2}}},
                    {"varphi_2", {{1, 2, 1}}},
                    {"varphi_3", {{1, 3, 1}}},
                    {"varphi_4", {{1, 4, 1}}}});
          for (int j = 2; j <= 4; ++j) b.tables({{idx("phi", j), {{2, j, 1}}}});
          for (int j = 2; j <= 4; ++j) b.tables({{idx("psi", j), {{3, j, 1}}}});
        });
    add("der-0-m2", 1, 0, -2, 5, 5,
        "Der(IDD(K^1_5,0,-2)) = <varphi_i, phi_j, psi_k>_{1<=i<=5, 2<=j<=5, 3<=k<=5}",
        [](Builder& b, int) {
          b.tables({{"varphi_5", {{1, 5, 1}}},
                    {"varphi_4", {{1, 4, 1}}},
                    {"varphi_3", {{1, 3, 1}}},
                    {"varphi_2", {{1, 2, 2}, {4, 5, 3}}},
                    {"varphi_1", {{1, 1, 1}, {4, 4, 2}, {5, 5, 1}}},
                    {"phi_5", {{2, 5, 1}}},
                    {"phi_4", {{2, 4, 1}}},
                    {"phi_3", {{2, 3, 1}}},
                    {"phi_2", {{2, 2, 1}, {5, 5, 1}}},
                    {"psi_5", {{3, 5, 1}}},
                    {"psi_4", {{3, 4, 1}}},
                    {"psi_3", {{3, 3, 1}}}});
        },
        {"the phi_2 row writes its second value as varphi_2(e_5) = e_5; it is read as part of phi_2"});
    add("der-0-m2", 1, 0, -2, 6, 6,
        "Der(IDD(K^1_6,0,-2)) = <varphi_i, phi_j, psi_k>_{1<=i<=6, 2<=j<=6, 4<=k<=6}",
        [](Builder& b, int) {
          b.tables({{"varphi_6", {{1, 6, 1}}},
                    {"varphi_5", {{1, 5, 1}}},
                    {"varphi_4", {{1, 4, 1}}},
                    {"varphi_3", {{1, 3, 10}, {4, 6, 13}}},
                    {"varphi_2", {{1, 2, 4}, {2, 3, 5}, {4, 5, 6}, {5, 6, 7}}},
                    {"varphi_1", {{1, 1, 1}, {3, 3, -1}, {4, 4, 2}, {5, 5, 1}}},
                    {"phi_6", {{2, 6, 1}}},
                    {"phi_5", {{2, 5, 1}}},
                    {"phi_4", {{2, 4, 1}}},
                    {"phi_3", {{2, 3, 1}}},
                    {"phi_2", {{2, 2, 1}, {3, 3, 2}, {5, 5, 1}, {6, 6, 2}}},
                    {"psi_6", {{3, 6, 1}}},
                    {"psi_5", {{3, 5, 1}}},
                    {"psi_4", {{3, 4, 1}}}});
        });
    add("der-0-m2", 1, 0, -2, 7, 7,
        "Der(IDD(K^1_7,0,-2)) = <varphi_i, phi_j, psi_k>_{1<=i<=7, 5<=j<=7, 5<=k<=7}",
        [](Builder& b, int) {
          b.tables({{"varphi_7", {{1, 7, 1}}},
                    {"varphi_6", {{1, 6, 1}}},
                    {"varphi_5", {{1, 5, 1}}},
                    {"varphi_4", {{1, 4, 5}, {4, 7, 6}}},
                    {"varphi_3", {{1, 3, 30}, {2, 4, 35}, {4, 6, 39}, {5, 7, 44}}},
                    {"varphi_2", {{1, 2, 20}, {2, 3, 25}, {3, 4, 30}, {4, 5, 30}, {5, 6, 28}, {6, 7, 40}}},
                    {"varphi_1", {{1, 1, 3}, {2, 2, 4}, {3, 3, 5}, {4, 4, 6}, {5, 5, 7}, {6, 6, 8}, {7, 7, 9}}},
                    {"phi_7", {{2, 7, 1}}},
                    {"phi_6", {{2, 6, 1}}},
                    {"phi_5", {{2, 5, 1}}},
                    {"psi_7", {{3, 7, 1}}},
                    {"psi_6", {{3, 6, 1}}},
                    {"psi_5", {{3, 5, 1}}}});
        });
    add("der-0-m2", 1, 0, -2, 8, std::nullopt,
        "Der(IDD(K^1_n,0,-2)) for n >= 8: <varphi, phi_i, psi_j, pi_k>_{0<=i<=4, 0<=j,k<=2}, varphi(e_i) = (i+2)e_i",
        [](Builder& b, int n) {
          b.diagonal("varphi", 2);
          const long N = n;
          b.tables({{"phi_4",
                     {{1, n - 4, (N - 3) * (N * N - 4)},
                      {2, n - 3, N * (N - 1) * (N - 2)},
                      {4, n - 1, (N + 2) * (N * N - 5 * N + 12)},
                      {5, n, (N + 1) * (N * N - 4 * N + 12)}}},
                    {"phi_3", {{1, n - 3, (N - 1) * (N - 2)}, {4, n, N * N - 3 * N + 8}}},
                    {"phi_2", {{1, n - 2, 1}}},
                    {"phi_1", {{1, n - 1, 1}}},
                    {"phi_0", {{1, n, 1}}},
                    {"psi_2", {{2, n - 2, 1}}},
                    {"psi_1", {{2, n - 1, 1}}},
                    {"psi_0", {{2, n, 1}}},
                    {"pi_2", {{3, n - 2, 1}}},
                    {"pi_1", {{3, n - 1, 1}}},
                    {"pi_0", {{3, n, 1}}}});
        });
    return v;
  }();
  return all;
}

}  // namespace

bool Statement::covers(const AlgebraSpec& spec) const {
  if (!spec.is_finite()) return false;
  const AlgebraSpec s = spec.normalized();
  return s.k() == k && s.m1() == m1 && s.m2() == m2 && s.top() >= n_min && (!n_max || s.top() <= *n_max);
}

const std::vector<Statement>& derivation_statements() {
  static const std::vector<Statement> all = [] {
    std::vector<Statement> v;
    for (const auto& e : entries()) v.push_back(e.statement);
    return v;
  }();
  return all;
}

std::optional<FamilyInstance> paper_derivations(const AlgebraSpec& spec) {
  for (const auto& e : entries()) {
    if (!e.statement.covers(spec)) continue;
    Builder b(spec);
    e.fill(b, spec.top());
    FamilyInstance out{e.statement, b.take(), 0, e.notes};
    out.stated_dim = static_cast<int>(out.maps.size());
    if (spec.normalized() != spec) out.notes.push_back("matched through the opposite algebra");
    return out;
  }
  return std::nullopt;
}

// Corollaries ------------------------------------------------------------------

namespace {

FormulaMap formula(std::string name, std::function<Element(int)> f) { return {std::move(name), std::move(f), {}}; }

Element term(int p, long c) {
  Element e;
  if (c != 0) e.add(p, c);
  return e;
}

// e_i -> (i + shift) e_i
FormulaMap diag(int shift) {
  return formula("varphi", [shift](int i) { return term(i, i + shift); });
}

// e_i -> i e_{i-1}; zero at skip_at and below k
FormulaMap lower(int k, std::optional<int> skip_at = std::nullopt) {
  return formula("phi", [k, skip_at](int i) { return (i == skip_at || i - 1 < k) ? Element() : term(i - 1, i); });
}

}  // namespace

const std::vector<CorollaryKey>& corollary_keys() {
  static const std::vector<CorollaryKey> keys = {{0, 1, 0},  {0, 0, -1}, {1, 0, -1},  {0, 2, 0},   {1, 2, 0},
                                                 {0, 1, 1},  {1, 1, 1},  {0, 1, -1},  {1, 1, -1},  {0, -1, -1},
                                                 {1, -1, -1}, {0, 0, -2}, {1, 0, -2}};
  return keys;
}

std::optional<CorollaryFamily> paper_corollary(int k, int m1, int m2, int window_top) {
  const std::string head = "Der(IDD(K^" + std::to_string(k) + "_inf," + std::to_string(m1) + "," + std::to_string(m2) + ")) = ";
  auto key = [&](int kk, int a, int b) { return k == kk && m1 == a && m2 == b; };
  CorollaryFamily c;
  if (key(0, 1, 0)) {
    c = {"der-1-0", head + "<varphi, phi>, varphi(e_i) = (i-1)e_i, phi(e_i) = i e_{i-1}", {diag(-1), lower(k)}, 2};
  } else if (key(0, 0, -1) || key(1, 0, -1)) {
    c.family = "der-0-m1";
    c.stated_generators = -1;
    if (k == 0) {
      c.citation = head + "<varphi_i>_{i>=0}, varphi_i(e_k) = (i+1+k)e_{k+i}";
      for (int i = 0; i <= window_top; ++i)
        c.maps.push_back(formula(idx("varphi", i), [i](int q) { return term(q + i, i + 1 + q); }));
    } else {
      c.citation = head + "<varphi_i>_{i>=1}, varphi_i(e_k) = (i+k)e_{k+i-1}";
      for (int i = 1; i <= window_top; ++i)
        c.maps.push_back(formula(idx("varphi", i), [i](int q) { return term(q + i - 1, i + q); }));
    }
  } else if (key(0, 2, 0)) {
    c = {"der-2-0", head + "<varphi, phi>, varphi(e_i) = (i-2)e_i, phi(e_i) = i e_{i-1}", {diag(-2), lower(k)}, 2};
  } else if (key(1, 2, 0)) {
    c = {"der-2-0", head + "<varphi, phi>, varphi(e_i) = (i-2)e_i", {diag(-2)}, 2};
    c.notes.push_back("statement names two generators <varphi, phi> but defines only varphi");
  } else if (key(0, 1, 1)) {
    c = {"der-1-1", head + "<varphi, phi>, varphi(e_i) = (i-2)e_i, phi(e_i) = i e_{i-1}", {diag(-2), lower(k)}, 2};
  } else if (key(1, 1, 1)) {
    c = {"der-1-1", head + "<varphi, phi>, varphi(e_i) = (i-2)e_i, phi(e_i) = (1-delta_{1,i}) i e_{i-1}",
         {diag(-2), lower(k, 1)}, 2};
  } else if (key(0, 1, -1) || key(1, 1, -1)) {
    c = {"der-1-m1", head + "<varphi>, varphi(e_i) = i e_i", {diag(0)}, 1};
  } else if (key(0, -1, -1) || key(1, -1, -1)) {
    c = {"der-m1-m1", head + "<varphi>, varphi(e_i) = (i+2)e_i", {diag(2)}, 1};
  } else if (key(0, 0, -2) || key(1, 0, -2)) {
    c = {"der-0-m2", head + "<varphi>, varphi(e_i) = (i+2)e_i", {diag(2)}, 1};
  } else {
    return std::nullopt;
  }
  return c;
}

}  // namespace idd
