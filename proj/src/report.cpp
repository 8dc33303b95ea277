#include "idd/report.hpp"

#include <sstream>

namespace idd {

namespace {

Json pair_or_null(const std::optional<std::pair<int, int>>& p) {
  if (!p) return nullptr;
  return Json::array({p->first, p->second});
}

template <class T>
Json optional_or_null(const std::optional<T>& v) {
  if (!v) return nullptr;
  return Json(*v);
}

Json strings(const std::vector<std::string>& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s);
  return out;
}

}  // namespace

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const StructureTable& t) {
  Json entries = Json::array();
  for (int i = t.k(); i <= t.top(); ++i)
    for (int j = t.k(); j <= t.top(); ++j) {
      const BasisProduct& p = t.product(i, j);
      if (p.kind != ProductKind::InRange) continue;
      entries.push_back({{"i", i}, {"j", j}, {"coeff", to_json(p.coeff)}, {"target", p.target}});
    }
  Json out{{"spec", t.spec().to_string()}, {"entries", entries}};
  if (t.spec().is_window()) {
    Json escaping = Json::array();
    for (int i = t.k(); i <= t.top(); ++i)
      for (int j = t.k(); j <= t.top(); ++j)
        if (t.out_of_window(i, j)) escaping.push_back(Json::array({i, j}));
    out["out_of_window"] = escaping;
  }
  return out;
}

Json to_json(const Classification& c) {
  const auto& w = c.witnesses;
  Json wj{{"power_chain", w.power_chain},
          {"chain_bound_holds", w.chain_bound_holds},
          {"perfect", optional_or_null(w.perfect)},
          {"proper_ideals", w.proper_ideals},
          {"exhaustive_checked", optional_or_null(w.exhaustive_checked)},
          {"monomial_certified", optional_or_null(w.monomial_certified)},
          {"ideal_shape_matches", optional_or_null(w.ideal_shape_matches)},
          {"closure_probes", w.closure_probes},
          {"basis_closures", w.basis_closures},
          {"closures_full", optional_or_null(w.closures_full)}};
  if (w.nonzero_product)
    wj["nonzero_product"] = {{"i", w.nonzero_product->i},
                             {"j", w.nonzero_product->j},
                             {"coeff", to_json(w.nonzero_product->coeff)},
                             {"target", w.nonzero_product->target}};
  else
    wj["nonzero_product"] = nullptr;
  return {{"spec", c.spec.to_string()},
          {"normalized", c.normalized.to_string()},
          {"rank", c.spec.rank()},
          {"level", c.spec.level()},
          {"level_case", c.level_case},
          {"predicted", to_string(c.predicted)},
          {"verdict", to_string(c.verdict)},
          {"nilpotency_index", optional_or_null(c.nilpotency_index)},
          {"proper_ideals", optional_or_null(c.proper_ideals)},
          {"witnesses", wj},
          {"oracle_agreement", c.oracle_agreement},
          {"discrepancies", strings(c.discrepancies)},
          {"seed", c.seed}};
}

Json to_json(const DerivationReport& r) {
  Json basis = Json::array();
  for (const auto& v : r.kernel.basis()) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(to_json(x));
    basis.push_back(row);
  }
  Json per_map = Json::array();
  for (const auto& m : r.per_map)
    per_map.push_back({{"name", m.name},
                       {"citation", r.citation},
                       {"leibniz_ok", m.leibniz_ok},
                       {"witness", pair_or_null(m.witness)}});
  return {{"spec", r.spec.to_string()},
          {"kernel_dim", r.kernel_dim()},
          {"kernel_basis", basis},
          {"paper_family", optional_or_null(r.family)},
          {"citation", r.family ? Json(r.citation) : Json(nullptr)},
          {"stated_dim", r.family ? Json(r.stated_dim) : Json(nullptr)},
          {"per_map", per_map},
          {"span_match", r.span_match},
          {"discrepancies", strings(r.discrepancies)},
          {"notes", strings(r.notes)}};
}

Json to_json(const InfiniteFamilyReport& r) {
  Json per_map = Json::array();
  for (const auto& m : r.per_map)
    per_map.push_back({{"name", m.name},
                       {"safe_pairs", m.safe_pairs},
                       {"unsafe_pairs", m.unsafe_pairs},
                       {"leibniz_ok", m.leibniz_ok},
                       {"witness", pair_or_null(m.witness)}});
  return {{"spec", r.spec.to_string()},
          {"paper_family", r.family},
          {"citation", r.citation},
          {"margin", r.margin},
          {"interior_top", r.interior_top},
          {"per_map", per_map},
          {"finite_kernel_dim", r.finite_kernel_dim},
          {"interior_dim", r.interior_dim},
          {"family_interior_dim", r.family_interior_dim},
          {"boundary_dim", r.boundary_dim},
          {"interior_match", r.interior_match},
          {"family_in_interior", r.family_in_interior},
          {"unchecked_maps", r.unchecked_maps},
          {"pass", r.pass()},
          {"discrepancies", strings(r.discrepancies)},
          {"notes", strings(r.notes)}};
}

Json to_json(const IdentityReport& r) {
  Json out{{"spec", r.spec.to_string()},
           {"identity", r.identity},
           {"checked", r.checked},
           {"excluded_unsafe", r.excluded_unsafe},
           {"excluded_undefined_star", r.excluded_undefined_star},
           {"pass", r.pass}};
  if (r.witness) {
    out["witness"] = *r.witness;
    Json terms = Json::object();
    for (const auto& t : r.witness_terms) terms[t.term] = to_json(t.value);
    out["witness_terms"] = terms;
  }
  return out;
}

Json to_json(const ProNilpotentReport& r) {
  return {{"spec", r.spec.to_string()},   {"level", r.level},       {"steps_verified", r.steps_verified},
          {"min_index", r.min_index},     {"expected", r.expected}, {"tails_full", r.tails_full},
          {"pass", r.pass}};
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

namespace {

std::string scalar(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

bool flat(const Json& j) {
  if (!j.is_object()) return false;
  for (const auto& [k, v] : j.items())
    if (v.is_object() || (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array())))
      return false;
  return true;
}

bool table_like(const Json& a) {
  if (!a.is_array() || a.empty()) return false;
  for (const auto& row : a)
    if (!flat(row) || row.size() != a.front().size()) return false;
  return true;
}

void render(std::ostringstream& os, const Json& j, int depth);

void render_table(std::ostringstream& os, const Json& a) {
  os << "\n|";
  for (const auto& [k, v] : a.front().items()) os << ' ' << k << " |";
  os << "\n|";
  for (std::size_t c = 0; c < a.front().size(); ++c) os << " --- |";
  os << '\n';
  for (const auto& row : a) {
    os << '|';
    for (const auto& [k, v] : row.items()) os << ' ' << scalar(v) << " |";
    os << '\n';
  }
  os << '\n';
}

void render(std::ostringstream& os, const Json& j, int depth) {
  const std::string indent(static_cast<std::size_t>(2 * depth), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object()) {
        os << indent << "- **" << k << "**:\n";
        render(os, v, depth + 1);
      } else if (table_like(v)) {
        os << indent << "- **" << k << "**:\n";
        render_table(os, v);
      } else if (v.is_array() && !v.empty() && !v.front().is_array()) {
        os << indent << "- **" << k << "**:\n";
        for (const auto& item : v) {
          if (item.is_object()) {
            os << indent << "  -\n";
            render(os, item, depth + 2);
          } else {
            os << indent << "  - " << scalar(item) << '\n';
          }
        }
      } else {
        os << indent << "- **" << k << "**: " << (v.is_array() ? v.dump() : scalar(v)) << '\n';
      }
    }
  } else if (table_like(j)) {
    render_table(os, j);
  } else if (j.is_array()) {
    for (const auto& item : j) {
      os << indent << "-\n";
      render(os, item, depth + 1);
    }
  } else {
    os << indent << scalar(j) << '\n';
  }
}

}  // namespace

std::string render_markdown(const Json& j, const std::string& title) {
  std::ostringstream os;
  os << "# " << title << "\n\n";
  render(os, j, 0);
  return os.str();
}

}  // namespace idd
