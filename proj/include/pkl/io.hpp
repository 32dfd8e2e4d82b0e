#pragma once

// JSON and CSV encodings. Object keys are sorted and polynomial keys are
// exponents, so equal values always serialize to identical bytes.
//
//   polynomial       {"<exponent>": coefficient, ...}   (string when beyond int64)
//   element          "t(a,b)*w[1 2]"
//   combination      [{"element": ..., "polynomial": ...}, ...]
//   polynomial table {"kind", "datum", "l", "window": {"height", "coset"},
//                     "entries": [{"y", "x", "polynomial"}, ...]}

#include "pkl/multiplicity.hpp"
#include "pkl/orders.hpp"
#include "pkl/periodic.hpp"

#include <json.hpp>

#include <string>

namespace pkl::io {

using Json = nlohmann::json;

// Bumped whenever a cached or emitted layout changes.
inline constexpr int kFormatVersion = 1;

Json to_json(const Poly& p);
Poly poly_from_json(const Json& j);

Json to_json(const AffineWeylGroup& g, const ExtAffineElement& x);
ExtAffineElement element_from_json(const AffineWeylGroup& g, const Json& j);

template <class Tag>
Json to_json(const AffineWeylGroup& g, const Combination<Tag>& c) {
  Json arr = Json::array();
  for (const auto& [x, p] : c) arr.push_back({{"element", g.format(x)}, {"polynomial", to_json(p)}});
  return arr;
}
template <class Tag>
Combination<Tag> combination_from_json(const AffineWeylGroup& g, const Json& j) {
  Combination<Tag> c;
  if (!j.is_array()) throw InputError("expected an array of {element, polynomial}");
  for (const auto& item : j) c.add(element_from_json(g, item.at("element")), poly_from_json(item.at("polynomial")));
  return c;
}

Json to_json(const Window& w);
Window window_from_json(const Json& j);

Json to_json(const AffineWeylGroup& g, const PolynomialTable& t);
PolynomialTable polynomial_table_from_json(const AffineWeylGroup& g, const Json& j);
std::string to_csv(const AffineWeylGroup& g, const PolynomialTable& t);

Json to_json(const AffineWeylGroup& g, const MultiplicityTable& t);
MultiplicityTable multiplicity_table_from_json(const AffineWeylGroup& g, const Json& j);
std::string to_csv(const AffineWeylGroup& g, const MultiplicityTable& t);

Json to_json(const std::vector<BlockLabel>& blocks);
std::string to_csv(const std::vector<BlockLabel>& blocks);

Json hasse_to_json(const AffineWeylGroup& g, const SemiInfinitePoset& poset);

// Self-dual representatives for the on-disk cache.
Json representatives_to_json(const AffineWeylGroup& g, const std::vector<PeriodicElement>& reps);
std::vector<PeriodicElement> representatives_from_json(const AffineWeylGroup& g, const Json& j);

// Two-space indentation and a trailing newline.
std::string dump(const Json& j);

}  // namespace pkl::io
