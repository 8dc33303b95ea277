#ifndef IDD_REPORT_HPP
#define IDD_REPORT_HPP

#include "idd/classify.hpp"
#include "idd/derivations.hpp"
#include "idd/identities.hpp"

#include <json.hpp>

#include <string>

namespace idd {

using Json = nlohmann::json;  // std::map-backed objects, so keys serialize sorted

Json to_json(const Rational& r);
Json to_json(const StructureTable& t);  // nonzero in-range entries sorted by (i, j)
Json to_json(const Classification& c);
Json to_json(const DerivationReport& r);
Json to_json(const InfiniteFamilyReport& r);
Json to_json(const IdentityReport& r);
Json to_json(const ProNilpotentReport& r);

/// Canonical text: two-space indent, trailing newline.
std::string render_json(const Json& j);
/// Markdown view of a JSON document; never computed from anything but the JSON.
std::string render_markdown(const Json& j, const std::string& title);

}  // namespace idd

#endif
