#include "idd/identities.hpp"

#include <array>

namespace idd {

StarTable::StarTable(const AlgebraSpec& spec) : spec_(spec) {
  if (spec.m2() != 0)
    throw PreconditionError("star product needs m2 = 0, got " + spec.to_string());
  const auto d = static_cast<std::size_t>(spec.dim());
  coeff_.assign(d * d, Rational());
  defined_.assign(d * d, true);
  const int m = spec.m1();
  for (int i = spec.k(); i <= spec.top(); ++i)
    for (int j = spec.k(); j <= spec.top(); ++j) {
      const Rational num = op_coeff(i, m) * op_coeff(j, m);
      if (num.is_zero()) continue;
      const int t = i + j - m;
      const Rational den = t >= spec.k() ? op_coeff(t, m) : Rational();
      if (den.is_zero()) {
        defined_[slot(i, j)] = false;
        continue;
      }
      coeff_[slot(i, j)] = num / den;
    }
}

std::size_t StarTable::slot(int i, int j) const {
  if (!spec_.contains_index(i) || !spec_.contains_index(j))
    throw std::out_of_range("star index outside the basis");
  const auto d = static_cast<std::size_t>(spec_.dim());
  return static_cast<std::size_t>(i - spec_.k()) * d + static_cast<std::size_t>(j - spec_.k());
}

namespace {

// Every product of basis elements is a scalar multiple of one basis element,
// so intermediate values are monomials c e_idx.
struct Mono {
  Rational c;
  int idx = 0;
};

struct Unsafe {};
struct Undefined {};

class Eval {
public:
  explicit Eval(const StructureTable& t) : t_(t) {}

  Mono e(int i) const { return {Rational(1), i}; }

  Mono mul(const Mono& x, const Mono& y) const {
    if (x.c.is_zero() || y.c.is_zero()) return {};
    const BasisProduct& p = t_.product(x.idx, y.idx);
    switch (p.kind) {
      case ProductKind::Zero: return {};
      case ProductKind::OutOfWindow: throw Unsafe{};
      case ProductKind::InRange: break;
    }
    return {x.c * y.c * p.coeff, p.target};
  }

  Mono star(int i, int j, const StarTable& s) const {
    if (!s.defined(i, j)) throw Undefined{};
    const Rational& c = s.coeff(i, j);
    if (c.is_zero()) return {};
    if (s.target(i, j) > t_.top()) throw Unsafe{};
    return {c, s.target(i, j)};
  }

private:
  const StructureTable& t_;
};

// All terms of one identity land on the same index, so comparing coefficients suffices.
Rational value(const Mono& m) { return m.c; }

struct Tally {
  long checked = 0;
  long unsafe = 0;
  long undefined = 0;
  std::optional<std::vector<int>> witness;
  std::vector<TermValue> terms;
};

template <class Body>
IdentityReport scan(const StructureTable& t, std::string name, int arity, Exec exec, Body body) {
  const int k = t.k(), d = t.dim();
  std::vector<Tally> per_lead(static_cast<std::size_t>(d));
  auto run_lead = [&](int lead) {
    Tally& tally = per_lead[static_cast<std::size_t>(lead)];
    std::vector<int> idx(static_cast<std::size_t>(arity), k);
    idx[0] = k + lead;
    while (true) {
      try {
        std::vector<TermValue> terms;
        if (!body(idx, terms) && !tally.witness) {
          tally.witness = idx;
          tally.terms = std::move(terms);
        }
        ++tally.checked;
      } catch (const Unsafe&) {
        ++tally.unsafe;
      } catch (const Undefined&) {
        ++tally.undefined;
      }
      int pos = arity - 1;
      while (pos > 0 && idx[static_cast<std::size_t>(pos)] == t.top()) idx[static_cast<std::size_t>(pos--)] = k;
      if (pos == 0) break;
      ++idx[static_cast<std::size_t>(pos)];
    }
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int lead = 0; lead < d; ++lead) run_lead(lead);
  } else {
    for (int lead = 0; lead < d; ++lead) run_lead(lead);
  }
  IdentityReport r{t.spec(), std::move(name)};
  for (auto& tally : per_lead) {
    r.checked += tally.checked;
    r.excluded_unsafe += tally.unsafe;
    r.excluded_undefined_star += tally.undefined;
    if (tally.witness && !r.witness) {
      r.witness = tally.witness;
      r.witness_terms = std::move(tally.terms);
    }
  }
  r.pass = !r.witness;
  return r;
}

}  // namespace

IdentityReport check_left_commutative(const StructureTable& t, Exec exec) {
  const Eval ev(t);
  return scan(t, "left-commutative", 3, exec, [&](const std::vector<int>& v, std::vector<TermValue>& out) {
    const Mono a = ev.e(v[0]), b = ev.e(v[1]), x = ev.e(v[2]);
    const Mono lhs = ev.mul(a, ev.mul(b, x));
    const Mono rhs = ev.mul(b, ev.mul(a, x));
    if (value(lhs) == value(rhs)) return true;
    out = {{"a(bx)", lhs.c}, {"b(ax)", rhs.c}};
    return false;
  });
}

IdentityReport check_generalized_associative(const StructureTable& t, const StarTable& s, Exec exec) {
  if (!(s.spec() == t.spec())) throw PreconditionError("star table built for a different spec");
  const Eval ev(t);
  return scan(t, "generalized-associative", 3, exec, [&](const std::vector<int>& v, std::vector<TermValue>& out) {
    const Mono a = ev.e(v[0]), b = ev.e(v[1]), x = ev.e(v[2]);
    const Mono lhs = ev.mul(a, ev.mul(b, x));
    const Mono rhs = ev.mul(ev.star(v[0], v[1], s), x);
    if (value(lhs) == value(rhs)) return true;
    out = {{"a(bx)", lhs.c}, {"(a*b)x", rhs.c}};
    return false;
  });
}

IdentityReport check_conservative(const StructureTable& t, const StarTable& s, Exec exec) {
  if (!(s.spec() == t.spec())) throw PreconditionError("star table built for a different spec");
  const Eval ev(t);
  return scan(t, "conservative", 4, exec, [&](const std::vector<int>& v, std::vector<TermValue>& out) {
    const Mono a = ev.e(v[0]), b = ev.e(v[1]), x = ev.e(v[2]), y = ev.e(v[3]);
    const Mono ab = ev.star(v[0], v[1], s);
    const Mono xy = ev.mul(x, y), ax = ev.mul(a, x), ay = ev.mul(a, y), bx = ev.mul(b, x), by = ev.mul(b, y);
    const std::array<TermValue, 12> terms{{
        {"b(a(xy))", ev.mul(b, ev.mul(a, xy)).c},
        {"-b((ax)y)", -ev.mul(b, ev.mul(ax, y)).c},
        {"-b(x(ay))", -ev.mul(b, ev.mul(x, ay)).c},
        {"-a((bx)y)", -ev.mul(a, ev.mul(bx, y)).c},
        {"(a(bx))y", ev.mul(ev.mul(a, bx), y).c},
        {"(bx)(ay)", ev.mul(bx, ay).c},
        {"-a(x(by))", -ev.mul(a, ev.mul(x, by)).c},
        {"(ax)(by)", ev.mul(ax, by).c},
        {"x(a(by))", ev.mul(x, ev.mul(a, by)).c},
        {"(a*b)(xy)", ev.mul(ab, xy).c},
        {"-((a*b)x)y", -ev.mul(ev.mul(ab, x), y).c},
        {"-x((a*b)y)", -ev.mul(x, ev.mul(ab, y)).c},
    }};
    // LHS − RHS with RHS = −(a∗b)(xy) + ((a∗b)x)y + x((a∗b)y): the last three
    // entries above already carry the sign flip.
    Rational total;
    for (const auto& term : terms) total += term.value;
    if (total.is_zero()) return true;
    out.assign(terms.begin(), terms.end());
    return false;
  });
}

}  // namespace idd
