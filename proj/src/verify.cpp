#include "idd/verify.hpp"

#include "idd/identities.hpp"
#include "idd/registry.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include <omp.h>

namespace idd {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Discrepancy: return "DISCREPANCY";
  }
  return "?";
}

int VerifySummary::count(Status s) const {
  return static_cast<int>(std::count_if(records.begin(), records.end(), [s](const VerifyRecord& r) { return r.status == s; }));
}

const std::vector<std::string>& verify_scopes() {
  static const std::vector<std::string> scopes = {
      "tables",    "opposite", "multiplicative", "triviality", "classification", "pro-nilpotence",
      "identities", "der-1-0", "der-0-m1",       "der-2-0",    "der-1-1",        "der-1-m1",
      "der-m1-m1", "der-0-m2", "corollaries"};
  return scopes;
}

namespace {

using Task = std::function<VerifyRecord()>;

VerifyRecord make(std::string scope, std::string instance, bool ok, std::string detail = {}, Json data = nullptr) {
  return {std::move(scope), std::move(instance), ok ? Status::Pass : Status::Fail, std::move(detail), std::move(data)};
}

// The explicit rank-1 and rank-2 tables, transcribed independently of op_coeff.
struct ExplicitTable {
  int m1;
  int m2;
  int lo0;  // lower bound on i + j for k = 0
  int lo1;  // and for k = 1
  int hi_offset;  // i + j <= n + hi_offset
  std::function<Rational(int, int)> coeff;
};

const std::vector<ExplicitTable>& explicit_tables() {
  static const std::vector<ExplicitTable> t = {
      {1, 0, 1, 2, 1, [](int i, int) { return Rational(i); }},
      {0, -1, 0, 2, -1, [](int, int j) { return Rational(1, j + 1); }},
      {2, 0, 2, 3, 2, [](int i, int) { return Rational(static_cast<long>(i) * (i - 1)); }},
      {1, 1, 2, 3, 2, [](int i, int j) { return Rational(static_cast<long>(i) * j); }},
      {1, -1, 1, 2, 0, [](int i, int j) { return Rational(i, j + 1); }},
      {-1, -1, 0, 2, -2, [](int i, int j) { return Rational(1, static_cast<long>(i + 1) * (j + 1)); }},
      {0, -2, 0, 2, -2, [](int, int j) { return Rational(1, static_cast<long>(j + 1) * (j + 2)); }},
  };
  return t;
}

void add_tables(std::vector<Task>& tasks, int n_top) {
  for (const auto& e : explicit_tables())
    for (int k = 0; k <= 1; ++k)
      tasks.push_back([e, k, n_top] {
        const std::string name = "K" + std::to_string(k) + ":n:" + std::to_string(e.m1) + "," + std::to_string(e.m2);
        const int l = e.m1 + e.m2;
        for (int n = std::max(k, 1); n <= n_top; ++n) {
          const StructureTable t = build_table(AlgebraSpec::finite(k, n, e.m1, e.m2));
          for (int i = k; i <= n; ++i)
            for (int j = k; j <= n; ++j) {
              const int s = i + j;
              const bool in = s >= (k == 0 ? e.lo0 : e.lo1) && s <= n + e.hi_offset;
              const Rational want = in ? e.coeff(i, j) : Rational();
              const BasisProduct& p = t.product(i, j);
              const Rational got = t.coeff(i, j);
              if (got != want || (!got.is_zero() && p.target != s - l))
                return make("tables", name, false,
                            "n=" + std::to_string(n) + " (e_" + std::to_string(i) + ", e_" + std::to_string(j) +
                                "): table " + got.to_string() + ", explicit " + want.to_string());
            }
        }
        return make("tables", name, true, "n=1.." + std::to_string(n_top) + " entrywise");
      });
}

template <class F>
void for_grid(int n_top, bool ordered_only, F f) {
  for (int k = 0; k <= 3; ++k)
    for (int n = k; n <= n_top; ++n)
      for (int m1 = -3; m1 <= 3; ++m1)
        for (int m2 = -3; m2 <= (ordered_only ? m1 : 3); ++m2) f(AlgebraSpec::finite(k, n, m1, m2));
}

void add_opposite(std::vector<Task>& tasks, int n_top) {
  for (int k = 0; k <= 3; ++k)
    tasks.push_back([k, n_top] {
      int count = 0;
      for (int n = k; n <= n_top; ++n)
        for (int m1 = -3; m1 <= 3; ++m1)
          for (int m2 = -3; m2 <= 3; ++m2) {
            const AlgebraSpec s = AlgebraSpec::finite(k, n, m1, m2);
            ++count;
            if (!(opposite_table(build_table(s)) == build_table(s.opposite())))
              return make("opposite", "K" + std::to_string(k), false, s.to_string() + " is not opposite to its swap");
          }
      return make("opposite", "K" + std::to_string(k), true, std::to_string(count) + " specs");
    });
}

std::pair<int, int> first_zero_product(const StructureTable& t) {
  for (int i = t.k(); i <= t.top(); ++i)
    for (int j = t.k(); j <= t.top(); ++j)
      if (t.product(i, j).kind == ProductKind::Zero) return {i, j};
  return {-1, -1};
}

void add_multiplicative(std::vector<Task>& tasks, int n_top) {
  tasks.push_back([n_top] {
    int count = 0;
    std::string bad;
    for_grid(n_top, false, [&](const AlgebraSpec& s) {
      ++count;
      if (bad.empty() && !is_multiplicative_basis(build_table(s))) bad = s.to_string();
    });
    return make("multiplicative", "finite grid", bad.empty(),
                bad.empty() ? std::to_string(count) + " specs" : bad + " has no multiplicative basis");
  });
  // A product landing below e_k is zero, so the claim fails whenever l > k.
  tasks.push_back([] {
    int count = 0;
    Json defects = Json::array();
    for (int k = 0; k <= 3; ++k)
      for (int m1 = -3; m1 <= std::min(k, 3); ++m1)
        for (int m2 = -3; m2 <= m1; ++m2) {
          const StructureTable t(AlgebraSpec::window(k, kIdentityWindow, m1, m2));
          ++count;
          if (is_strong_multiplicative(t)) continue;
          const auto w = first_zero_product(t);
          defects.push_back({{"spec", t.spec().to_string()}, {"pair", {w.first, w.second}},
                             {"target", w.first + w.second - t.spec().level()}});
        }
    VerifyRecord r = make("multiplicative", "strong, k >= m1 >= m2", true, std::to_string(count) + " windows");
    if (!defects.empty()) {
      r.status = Status::Discrepancy;
      r.detail = std::to_string(defects.size()) + " of " + std::to_string(count) +
                 " windows have a zero basis product: e_k ⋄ e_k lands below e_k when m1 + m2 > k";
      r.data = {{"zero_products", defects}};
    }
    return r;
  });
}

// The criterion ignores that T^m1 kills e_i for i < m1: a nonzero product
// needs i >= max(k, m1), j >= max(k, m2), so the smallest target can exceed n.
void add_triviality(std::vector<Task>& tasks, int n_top) {
  for (int k = 0; k <= 3; ++k)
    tasks.push_back([k, n_top] {
      int count = 0, trivial = 0;
      Json defects = Json::array();
      for (int n = k; n <= n_top; ++n)
        for (int m1 = -3; m1 <= 3; ++m1)
          for (int m2 = -3; m2 <= m1; ++m2) {
            const AlgebraSpec s = AlgebraSpec::finite(k, n, m1, m2);
            const bool p = triviality_predicate(s);
            const bool scan = triviality_bruteforce(build_table(s));
            ++count;
            trivial += scan;
            if (p != scan)
              defects.push_back({{"spec", s.to_string()},
                                 {"predicate", p},
                                 {"scan", scan},
                                 {"smallest_target", std::max(k, m1) + std::max(k, m2) - m1 - m2}});
          }
      VerifyRecord r = make("triviality", "K" + std::to_string(k), true,
                            std::to_string(count) + " specs, " + std::to_string(trivial) + " trivial");
      if (!defects.empty()) {
        r.status = Status::Discrepancy;
        r.detail += "; predicate says nontrivial but every product vanishes for " + std::to_string(defects.size()) +
                    " specs (smallest reachable target above n)";
        r.data = {{"disagreements", defects}};
      }
      return r;
    });
}

void add_classification(std::vector<Task>& tasks, int n_top, std::uint64_t seed) {
  for_grid(n_top, true, [&](const AlgebraSpec& s) {
    if (triviality_bruteforce(build_table(s))) return;
    tasks.push_back([s, seed] {
      const Classification c = assess(s, seed);
      VerifyRecord r{"classification", s.to_string(), Status::Pass, to_string(c.verdict),
                     {{"predicted", to_string(c.predicted)},
                      {"level_case", c.level_case},
                      {"nilpotency_index", c.nilpotency_index ? Json(*c.nilpotency_index) : Json(nullptr)},
                      {"proper_ideals", c.proper_ideals ? Json(*c.proper_ideals) : Json(nullptr)}}};
      if (!c.oracle_agreement) {
        r.status = Status::Discrepancy;
        r.detail = "predicted " + to_string(c.predicted) + ": " + c.discrepancies.front();
      }
      return r;
    });
  });
}

void add_pro_nilpotence(std::vector<Task>& tasks) {
  const std::vector<AlgebraSpec> specs = {
      AlgebraSpec::window(1, kProNilpotentWindow, 0, -1), AlgebraSpec::window(1, kProNilpotentWindow, -1, -1),
      AlgebraSpec::window(2, kProNilpotentWindow, 1, 0),  AlgebraSpec::window(2, kProNilpotentWindow, 0, -2),
      AlgebraSpec::window(3, kProNilpotentWindow, 1, 1),  AlgebraSpec::window(3, kProNilpotentWindow, 2, -1)};
  for (const auto& s : specs)
    tasks.push_back([s] {
      const ProNilpotentReport r = pro_nilpotent_window_check(build_table(s));
      return make("pro-nilpotence", s.to_string(), r.pass, std::to_string(r.steps_verified) + " chain terms", to_json(r));
    });
}

void add_identities(std::vector<Task>& tasks) {
  for (int m = -2; m <= 3; ++m)
    for (int k = 0; k <= 2; ++k)
      tasks.push_back([m, k] {
        const AlgebraSpec s = AlgebraSpec::window(k, kIdentityWindow, m, 0);
        const StructureTable t = build_table(s);
        const StarTable star(s);
        const IdentityReport lc = check_left_commutative(t, Exec::Serial);
        const IdentityReport ga = check_generalized_associative(t, star, Exec::Serial);
        const IdentityReport cons = check_conservative(t, star, Exec::Serial);
        const bool ok = lc.pass && ga.pass && cons.pass;
        return make("identities", s.to_string(), ok,
                    std::to_string(cons.checked) + " safe quadruples",
                    Json{{"left_commutative", to_json(lc)},
                         {"generalized_associative", to_json(ga)},
                         {"conservative", to_json(cons)}});
      });
  tasks.push_back([] {
    const AlgebraSpec s = AlgebraSpec::window(0, 25, 1, 1);
    const IdentityReport lc = check_left_commutative(build_table(s), Exec::Serial);
    return make("identities", s.to_string() + " left-commutative fails", !lc.pass && lc.witness.has_value(),
                lc.witness ? "witness found" : "no witness", to_json(lc));
  });
}

void add_derivations(std::vector<Task>& tasks, const std::string& family, int n_max) {
  for (const auto& st : derivation_statements()) {
    if (st.family != family) continue;
    const int hi = st.n_max ? std::min(*st.n_max, n_max) : n_max;
    for (int n = st.n_min; n <= hi; ++n)
      tasks.push_back([st, n] {
        const AlgebraSpec s = AlgebraSpec::finite(st.k, n, st.m1, st.m2);
        const DerivationReport r = solve_derivations(s, Exec::Serial);
        VerifyRecord rec{st.family, s.to_string(), Status::Pass, st.citation,
                         {{"kernel_dim", r.kernel_dim()},
                          {"stated_dim", r.stated_dim},
                          {"span_match", r.span_match},
                          {"discrepancies", r.discrepancies}}};
        if (!r.span_match || !r.discrepancies.empty()) {
          const bool explained = !r.discrepancies.empty();
          rec.status = explained ? Status::Discrepancy : Status::Fail;
          rec.detail = explained ? r.discrepancies.front() : "span mismatch without a witness";
        }
        return rec;
      });
  }
}

void add_corollaries(std::vector<Task>& tasks, int margin) {
  for (const auto& key : corollary_keys())
    tasks.push_back([key, margin] {
      const AlgebraSpec s = AlgebraSpec::window(key.k, kCorollaryWindow, key.m1, key.m2);
      const InfiniteFamilyReport r = infinite_family_check(s, margin);
      VerifyRecord rec{"corollaries", s.to_string(), Status::Pass, r.citation,
                       {{"finite_kernel_dim", r.finite_kernel_dim},
                        {"interior_dim", r.interior_dim},
                        {"family_interior_dim", r.family_interior_dim},
                        {"boundary_dim", r.boundary_dim},
                        {"notes", r.notes}}};
      if (!r.pass()) {
        rec.status = r.discrepancies.empty() ? Status::Fail : Status::Discrepancy;
        rec.detail = r.discrepancies.empty() ? "check failed" : r.discrepancies.front();
      }
      return rec;
    });
}

}  // namespace

VerifySummary verify_paper(const VerifyOptions& options) {
  if (options.n_max < 8) throw std::invalid_argument("--n-max must be at least 8");
  const auto& scopes = verify_scopes();
  if (options.scope != "all" && std::find(scopes.begin(), scopes.end(), options.scope) == scopes.end())
    throw std::invalid_argument("unknown scope '" + options.scope + "'");
  if (options.window_margin <= 0) throw WindowTooSmall("window margin must be positive");

  const int grid_top = std::min(options.n_max, kGridTop);
  std::vector<Task> tasks;
  for (const auto& scope : scopes) {
    if (options.scope != "all" && options.scope != scope) continue;
    if (scope == "tables") add_tables(tasks, grid_top);
    else if (scope == "opposite") add_opposite(tasks, grid_top);
    else if (scope == "multiplicative") add_multiplicative(tasks, grid_top);
    else if (scope == "triviality") add_triviality(tasks, grid_top);
    else if (scope == "classification") add_classification(tasks, grid_top, options.seed);
    else if (scope == "pro-nilpotence") add_pro_nilpotence(tasks);
    else if (scope == "identities") add_identities(tasks);
    else if (scope == "corollaries") add_corollaries(tasks, options.window_margin);
    else add_derivations(tasks, scope, options.n_max);
  }

  VerifySummary summary{options};
  summary.records.resize(tasks.size());
  const int threads = options.jobs > 0 ? options.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    try {
      summary.records[i] = tasks[i]();
    } catch (const std::exception& e) {
      summary.records[i] = {"error", "task " + std::to_string(i), Status::Fail, e.what(), nullptr};
    }
  }
  return summary;
}

Json to_json(const VerifySummary& s) {
  Json records = Json::array();
  for (const auto& r : s.records)
    records.push_back({{"scope", r.scope},
                       {"instance", r.instance},
                       {"status", to_string(r.status)},
                       {"detail", r.detail},
                       {"data", r.data}});
  return {{"config",
           {{"scope", s.options.scope},
            {"n_max", s.options.n_max},
            {"window_margin", s.options.window_margin},
            {"seed", s.options.seed}}},
          {"records", records},
          {"summary",
           {{"pass", s.count(Status::Pass)},
            {"fail", s.count(Status::Fail)},
            {"discrepancy", s.count(Status::Discrepancy)}}}};
}

}  // namespace idd
