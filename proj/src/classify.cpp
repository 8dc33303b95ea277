#include "idd/classify.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <utility>

namespace idd {

DimensionTooLarge::DimensionTooLarge(int dim, int bound)
    : std::invalid_argument("dimension " + std::to_string(dim) + " exceeds the bound " +
                            std::to_string(bound)) {}

Vector to_vector(const StructureTable& t, const Element& x) {
  Vector v(static_cast<std::size_t>(t.dim()));
  for (const auto& [i, c] : x.terms()) {
    if (i < t.k() || i > t.top()) throw std::out_of_range("element index outside the basis");
    v[static_cast<std::size_t>(i - t.k())] = c;
  }
  return v;
}

Element to_element(const StructureTable& t, const Vector& v) {
  Element x;
  for (std::size_t s = 0; s < v.size(); ++s) x.add(t.k() + static_cast<int>(s), v[s]);
  return x;
}

bool triviality_predicate(const AlgebraSpec& spec) {
  const AlgebraSpec s = spec.normalized();
  const int n = s.top();
  const int k = s.k();
  const int l = s.level();
  if (s.m1() > n) return true;
  return l > 2 * n - k || l < 2 * k - n;
}

std::optional<ProductWitness> nonzero_product(const StructureTable& t) {
  for (int i = t.k(); i <= t.top(); ++i)
    for (int j = t.k(); j <= t.top(); ++j) {
      const BasisProduct& p = t.product(i, j);
      if (p.kind == ProductKind::InRange) return ProductWitness{i, j, p.coeff, p.target};
    }
  return std::nullopt;
}

bool triviality_bruteforce(const StructureTable& t) {
  for (int i = t.k(); i <= t.top(); ++i)
    for (int j = t.k(); j <= t.top(); ++j) {
      const BasisProduct& p = t.product(i, j);
      if (p.kind == ProductKind::OutOfWindow) return false;
      if (p.kind == ProductKind::InRange && !p.coeff.is_zero()) return false;
    }
  return true;
}

namespace {

using Mask = std::uint64_t;

constexpr int kMaskBits = 64;

void require_mask_dim(const StructureTable& t) {
  if (t.dim() > kMaskBits) throw DimensionTooLarge(t.dim(), kMaskBits);
}

Mask bit(const StructureTable& t, int index) { return Mask{1} << (index - t.k()); }

Mask full_mask(int d) { return d == kMaskBits ? ~Mask{0} : (Mask{1} << d) - 1; }

std::vector<int> support(const StructureTable& t, Mask m) {
  std::vector<int> out;
  for (int s = 0; s < t.dim(); ++s)
    if (m & (Mask{1} << s)) out.push_back(t.k() + s);
  return out;
}

Subspace mask_subspace(const StructureTable& t, Mask m) {
  std::vector<std::size_t> coords;
  for (int s = 0; s < t.dim(); ++s)
    if (m & (Mask{1} << s)) coords.push_back(static_cast<std::size_t>(s));
  return Subspace::coordinate(static_cast<std::size_t>(t.dim()), coords);
}

// Products of coordinate subspaces are coordinate subspaces because the
// basis is multiplicative. Out-of-window products are dropped when
// `drop_escapes` is set (sound only when products never lower indices).
Mask mask_product(const StructureTable& t, Mask u, Mask v, bool drop_escapes) {
  Mask out = 0;
  for (int a = 0; a < t.dim(); ++a) {
    if (!(u & (Mask{1} << a))) continue;
    for (int b = 0; b < t.dim(); ++b) {
      if (!(v & (Mask{1} << b))) continue;
      const BasisProduct& p = t.product(t.k() + a, t.k() + b);
      if (p.kind == ProductKind::InRange) {
        out |= bit(t, p.target);
      } else if (p.kind == ProductKind::OutOfWindow && !drop_escapes) {
        throw OutOfWindow(t.k() + a, t.k() + b);
      }
    }
  }
  return out;
}

std::vector<Mask> mask_chain(const StructureTable& t, int max_steps, bool drop_escapes) {
  require_mask_dim(t);
  std::vector<Mask> chain{full_mask(t.dim())};
  while (static_cast<int>(chain.size()) < max_steps && chain.back() != 0) {
    const int next = static_cast<int>(chain.size()) + 1;
    Mask term = 0;
    for (int i = 1; i < next; ++i)
      term |= mask_product(t, chain[static_cast<std::size_t>(i - 1)],
                           chain[static_cast<std::size_t>(next - i - 1)], drop_escapes);
    chain.push_back(term);
    // A^2 = A forces A^t = A for every t.
    if (next == 2 && term == chain.front()) break;
  }
  return chain;
}

// reach[s]: targets of every nonzero product with e_s on either side.
std::vector<Mask> reach_masks(const StructureTable& t) {
  std::vector<Mask> reach(static_cast<std::size_t>(t.dim()), 0);
  for (int i = t.k(); i <= t.top(); ++i)
    for (int j = t.k(); j <= t.top(); ++j) {
      const BasisProduct& p = t.product(i, j);
      if (p.kind != ProductKind::InRange) continue;
      reach[static_cast<std::size_t>(i - t.k())] |= bit(t, p.target);
      reach[static_cast<std::size_t>(j - t.k())] |= bit(t, p.target);
    }
  return reach;
}

Mask mask_closure(const std::vector<Mask>& reach, Mask m) {
  Mask prev;
  do {
    prev = m;
    for (std::size_t s = 0; s < reach.size(); ++s)
      if (m & (Mask{1} << s)) m |= reach[s];
  } while (m != prev);
  return m;
}

bool mask_closed(const std::vector<Mask>& reach, Mask m) {
  for (std::size_t s = 0; s < reach.size(); ++s)
    if ((m & (Mask{1} << s)) && (reach[s] & ~m)) return false;
  return true;
}

void left_right_images(const StructureTable& t, const Vector& v, std::vector<Vector>& out) {
  const auto d = static_cast<std::size_t>(t.dim());
  for (int i = t.k(); i <= t.top(); ++i) {
    Vector left(d), right(d);
    bool left_nz = false, right_nz = false;
    for (std::size_t s = 0; s < d; ++s) {
      if (v[s].is_zero()) continue;
      const int idx = t.k() + static_cast<int>(s);
      const BasisProduct& l = t.product(i, idx);
      if (l.kind == ProductKind::InRange) {
        left[static_cast<std::size_t>(l.target - t.k())] += l.coeff * v[s];
        left_nz = true;
      }
      const BasisProduct& r = t.product(idx, i);
      if (r.kind == ProductKind::InRange) {
        right[static_cast<std::size_t>(r.target - t.k())] += r.coeff * v[s];
        right_nz = true;
      }
    }
    if (left_nz) out.push_back(std::move(left));
    if (right_nz) out.push_back(std::move(right));
  }
}

}  // namespace

Subspace product_space(const StructureTable& t, const Subspace& u, const Subspace& v) {
  const auto d = static_cast<std::size_t>(t.dim());
  Subspace out(d);
  for (const auto& a : u.basis()) {
    const Element x = to_element(t, a);
    for (const auto& b : v.basis()) out.insert(to_vector(t, t.multiply(x, to_element(t, b))));
  }
  return out;
}

std::vector<Subspace> power_chain(const StructureTable& t, int max_steps) {
  if (!t.spec().is_finite()) throw std::invalid_argument("power_chain requires a finite algebra");
  if (max_steps <= 0) max_steps = 2 * t.dim() + 4;
  std::vector<Subspace> out;
  for (Mask m : mask_chain(t, max_steps, false)) out.push_back(mask_subspace(t, m));
  return out;
}

std::optional<int> nilpotency_index(const std::vector<Subspace>& chain) {
  for (std::size_t i = 0; i < chain.size(); ++i)
    if (chain[i].is_zero()) return static_cast<int>(i) + 1;
  return std::nullopt;
}

Subspace ideal_closure(const StructureTable& t, const std::vector<Element>& generators) {
  const auto d = static_cast<std::size_t>(t.dim());
  Subspace ideal(d);
  std::vector<Vector> pending;
  for (const auto& g : generators) {
    Vector v = to_vector(t, g);
    if (ideal.insert(v)) pending.push_back(std::move(v));
  }
  std::vector<Vector> images;
  while (!pending.empty() && ideal.dim() < d) {
    Vector v = std::move(pending.back());
    pending.pop_back();
    images.clear();
    left_right_images(t, v, images);
    for (auto& w : images)
      if (ideal.insert(w)) pending.push_back(std::move(w));
  }
  return ideal;
}

bool ideals_are_monomial(const StructureTable& t) {
  // Left and right multiplications by basis elements are weighted shifts.
  // Close the span of their words (plus the identity) graded by shift, then
  // ask whether the shift-0 part, which consists of diagonal operators,
  // separates every pair of coordinates.
  const int d = t.dim();
  const auto ud = static_cast<std::size_t>(d);
  const int l = t.spec().level();
  struct Shift {
    int amount;
    Vector weights;
  };
  std::vector<Shift> generators;
  for (int i = t.k(); i <= t.top(); ++i) {
    Shift left{i - l, Vector(ud)}, right{i - l, Vector(ud)};
    bool lnz = false, rnz = false;
    for (int s = t.k(); s <= t.top(); ++s) {
      const auto pos = static_cast<std::size_t>(s - t.k());
      if (Rational c = t.coeff(i, s); !c.is_zero()) left.weights[pos] = c, lnz = true;
      if (Rational c = t.coeff(s, i); !c.is_zero()) right.weights[pos] = c, rnz = true;
    }
    if (lnz) generators.push_back(std::move(left));
    if (rnz) generators.push_back(std::move(right));
  }

  std::vector<Subspace> graded(static_cast<std::size_t>(2 * d - 1), Subspace(ud));
  auto slot = [d](int shift) { return static_cast<std::size_t>(shift + d - 1); };
  std::vector<Shift> pending{{0, Vector(ud, Rational(1))}};
  graded[slot(0)].insert(pending.front().weights);
  while (!pending.empty()) {
    Shift w = std::move(pending.back());
    pending.pop_back();
    for (const auto& g : generators) {
      const int shift = w.amount + g.amount;
      if (shift <= -d || shift >= d) continue;
      Vector v(ud);
      bool nz = false;
      for (int s = 0; s < d; ++s) {
        const int mid = s + w.amount;
        if (mid < 0 || mid >= d) continue;
        const auto us = static_cast<std::size_t>(s);
        if (w.weights[us].is_zero() || g.weights[static_cast<std::size_t>(mid)].is_zero()) continue;
        v[us] = w.weights[us] * g.weights[static_cast<std::size_t>(mid)];
        nz = true;
      }
      if (nz && graded[slot(shift)].insert(v)) pending.push_back({shift, std::move(v)});
    }
  }

  const Subspace& diagonal = graded[slot(0)];
  for (std::size_t p = 0; p < ud; ++p)
    for (std::size_t q = p + 1; q < ud; ++q) {
      bool separated = false;
      for (const auto& w : diagonal.basis())
        if (w[p] != w[q]) {
          separated = true;
          break;
        }
      if (!separated) return false;
    }
  return true;
}

IdealEnumeration enumerate_ideals(const StructureTable& t, IdealMode mode) {
  if (!t.spec().is_finite()) throw std::invalid_argument("ideal enumeration requires a finite algebra");
  require_mask_dim(t);
  const int d = t.dim();
  if (mode == IdealMode::ExhaustiveSmall && d > kExhaustiveIdealBound)
    throw DimensionTooLarge(d, kExhaustiveIdealBound);

  const auto reach = reach_masks(t);
  // Every monomial ideal is a sum of principal monomial ideals.
  std::vector<Mask> principal;
  for (int s = 0; s < d; ++s) principal.push_back(mask_closure(reach, Mask{1} << s));
  std::set<Mask> found{0};
  std::vector<Mask> frontier{0};
  while (!frontier.empty()) {
    std::vector<Mask> next;
    for (Mask base : frontier)
      for (Mask p : principal) {
        const Mask m = base | p;
        if (found.insert(m).second) next.push_back(m);
      }
    frontier = std::move(next);
  }

  IdealEnumeration out;
  if (mode == IdealMode::ExhaustiveSmall) {
    std::set<Mask> scanned;
    for (Mask m = 0; m <= full_mask(d); ++m)
      if (mask_closed(reach, m)) scanned.insert(m);
    if (scanned != found) throw std::logic_error("monomial ideal enumeration missed a pattern");
    out.exhaustive_checked = true;
  }
  std::vector<Mask> sorted(found.begin(), found.end());
  std::sort(sorted.begin(), sorted.end(), [](Mask a, Mask b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  for (Mask m : sorted) {
    out.ideals.push_back(mask_subspace(t, m));
    if (m != 0 && m != full_mask(d)) ++out.proper_count;
  }
  out.monomial_certified = ideals_are_monomial(t);
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Trivial: return "Trivial";
    case Verdict::Nilpotent: return "Nilpotent";
    case Verdict::Simple: return "Simple";
    case Verdict::PerfectNonSimple: return "PerfectNonSimple";
    case Verdict::WindowInconclusive: return "WindowInconclusive";
    case Verdict::Discrepancy: return "Discrepancy";
  }
  return "?";
}

ClassificationDiscrepancy::ClassificationDiscrepancy(Classification report)
    : std::runtime_error("classification of " + report.spec.to_string() +
                         " disagrees with its oracles"),
      report_(std::move(report)) {}

namespace {

std::string level_case(const AlgebraSpec& s) {
  const int k = s.k(), n = s.top(), l = s.level();
  if (s.is_window()) {
    if (l < k) return "lev < k";
    if (l == k) return "lev = k";
    return "k < lev";
  }
  if (l > 2 * n - k) return "lev > 2n-k";
  if (l > n) return "n < lev <= 2n-k";
  if (l == n) return "lev = n";
  if (l > k) return "k < lev < n";
  if (l == k) return "lev = k";
  if (l >= 2 * k - n) return "2k-n <= lev < k";
  return "lev < 2k-n";
}

Vector random_vector(std::mt19937_64& rng, std::size_t d) {
  std::uniform_int_distribution<int> dist(-5, 5);
  Vector v(d);
  do {
    for (auto& x : v) x = dist(rng);
  } while (is_zero_vector(v));
  return v;
}

void check_nilpotent(const StructureTable& t, Classification& c) {
  const int k = t.k(), n = t.top(), l = t.spec().level();
  const auto chain = mask_chain(t, 2 * t.dim() + 4, false);
  for (std::size_t s = 0; s < chain.size(); ++s) {
    c.witnesses.power_chain.push_back(support(t, chain[s]));
    const int step = static_cast<int>(s);  // t - 1
    Mask bound = 0;
    for (int i = k; i <= n; ++i) {
      const bool inside = l > n ? i <= n + step * (n - l) : i >= k + step * (k - l);
      if (inside) bound |= bit(t, i);
    }
    if (chain[s] & ~bound) c.witnesses.chain_bound_holds = false;
  }
  if (chain.back() == 0) c.nilpotency_index = static_cast<int>(chain.size());
  if (!c.nilpotency_index) c.discrepancies.push_back("power chain does not reach 0");
  if (!c.witnesses.chain_bound_holds)
    c.discrepancies.push_back("power chain leaves the containment bound of the nilpotency argument");
}

void check_ideals(const StructureTable& t, Classification& c, bool expect_simple) {
  const int k = t.k(), n = t.top();
  const IdealMode mode =
      t.dim() <= kExhaustiveIdealBound ? IdealMode::ExhaustiveSmall : IdealMode::Monomial;
  const IdealEnumeration e = enumerate_ideals(t, mode);
  c.witnesses.exhaustive_checked = e.exhaustive_checked;
  c.witnesses.monomial_certified = e.monomial_certified;
  for (const auto& ideal : e.ideals) {
    if (ideal.is_zero() || ideal.dim() == static_cast<std::size_t>(t.dim())) continue;
    std::vector<int> supp;
    for (std::size_t p : ideal.pivots()) supp.push_back(k + static_cast<int>(p));
    c.witnesses.proper_ideals.push_back(std::move(supp));
  }
  c.proper_ideals = e.proper_count;
  if (expect_simple) {
    if (e.proper_count != 0)
      c.discrepancies.push_back("found " + std::to_string(e.proper_count) +
                                " proper monomial ideals in the simple range");
    return;
  }
  if (e.proper_count != n - k)
    c.discrepancies.push_back("expected " + std::to_string(n - k) + " proper ideals, found " +
                              std::to_string(e.proper_count));
  // lev = n: ideals are <e_k..e_{n0}>; lev = k: ideals are <e_{n0}..e_n>.
  const bool head = t.spec().level() == n;
  bool shape = true;
  for (const auto& supp : c.witnesses.proper_ideals) {
    const bool contiguous = supp.back() - supp.front() + 1 == static_cast<int>(supp.size());
    if (!contiguous || (head ? supp.front() != k : supp.back() != n)) shape = false;
  }
  c.witnesses.ideal_shape_matches = shape;
}

}  // namespace

Classification assess(const AlgebraSpec& spec, std::uint64_t seed, int probes) {
  Classification c{spec, spec.normalized(), level_case(spec.normalized())};
  c.seed = seed;
  const AlgebraSpec& s = c.normalized;
  if (s.is_window()) {
    c.predicted = c.verdict = Verdict::WindowInconclusive;
    return c;
  }
  const StructureTable t = build_table(s);
  const int k = s.k(), n = s.top(), l = s.level();

  c.witnesses.nonzero_product = nonzero_product(t);
  const bool trivial = triviality_predicate(s);
  if (trivial != triviality_bruteforce(t))
    c.discrepancies.push_back("triviality predicate disagrees with the exhaustive product scan");

  if (trivial) {
    c.predicted = Verdict::Trivial;
  } else if (l > n || l < k) {
    c.predicted = Verdict::Nilpotent;
    check_nilpotent(t, c);
  } else if (l == n || l == k) {
    c.predicted = Verdict::PerfectNonSimple;
    const auto chain = mask_chain(t, 2, false);
    c.witnesses.perfect = chain.size() >= 2 && chain[1] == chain[0];
    if (!*c.witnesses.perfect) c.discrepancies.push_back("A ⋄ A is a proper subspace: not perfect");
    check_ideals(t, c, false);
  } else {
    c.predicted = Verdict::Simple;
    check_ideals(t, c, true);
    const auto d = static_cast<std::size_t>(t.dim());
    bool full = true;
    for (int i = k; i <= n && full; ++i) {
      full = ideal_closure(t, {Element::basis(i)}).dim() == d;
      ++c.witnesses.basis_closures;
    }
    std::mt19937_64 rng(seed);
    for (int p = 0; p < probes && full; ++p) {
      full = ideal_closure(t, {to_element(t, random_vector(rng, d))}).dim() == d;
      ++c.witnesses.closure_probes;
    }
    c.witnesses.closures_full = full;
    if (!full) c.discrepancies.push_back("an ideal closure probe stopped short of the whole algebra");
  }

  c.oracle_agreement = c.discrepancies.empty();
  c.verdict = c.oracle_agreement ? c.predicted : Verdict::Discrepancy;
  return c;
}

Classification classify(const AlgebraSpec& spec, std::uint64_t seed) {
  Classification c = assess(spec, seed);
  if (!c.oracle_agreement) throw ClassificationDiscrepancy(std::move(c));
  return c;
}

ProNilpotentReport pro_nilpotent_window_check(const StructureTable& t) {
  const AlgebraSpec& s = t.spec();
  if (!s.is_window()) throw std::invalid_argument("pro-nilpotence check needs a window spec");
  const int k = s.k(), l = s.level(), bound = s.top();
  if (l >= k) throw std::invalid_argument("pro-nilpotence check requires lev < k");
  const int gap = k - l;
  if (k + 2 * gap > bound)
    throw WindowTooSmall("window N=" + std::to_string(bound) + " holds fewer than 3 chain terms");

  ProNilpotentReport r{s, l};
  const int steps = (bound - k) / gap + 1;
  // l < k makes every product raise indices, so dropping escapes keeps the
  // in-window part of each A^t exact.
  const auto chain = mask_chain(t, steps, true);
  r.pass = true;
  for (int step = 1; step <= steps; ++step) {
    const int expected = k + (step - 1) * gap;
    const Mask m = step <= static_cast<int>(chain.size()) ? chain[static_cast<std::size_t>(step - 1)] : 0;
    const int observed = m == 0 ? -1 : k + std::countr_zero(m);
    r.expected.push_back(expected);
    r.min_index.push_back(observed);
    if (observed != expected) r.pass = false;
    if (m != 0 && m != (full_mask(t.dim()) & ~((Mask{1} << (observed - k)) - 1))) r.tails_full = false;
  }
  r.steps_verified = steps;
  return r;
}

}  // namespace idd
