#include "pkl/io.hpp"

#include <limits>
#include <sstream>

namespace pkl::io {

namespace {

template <class F>
auto guarded(const std::string& what, F&& f) {
  try {
    return f();
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError("malformed " + what + ": " + e.what());
  }
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n ") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void check_header(const AffineWeylGroup& g, const Json& j) {
  const RootDatum& rd = g.root_datum();
  if (j.at("datum").get<std::string>() != rd.name() || j.at("l").get<int>() != rd.l())
    throw InputError("table is for " + j.at("datum").get<std::string>() + " l=" + std::to_string(j.at("l").get<int>()) +
                     ", expected " + rd.name() + " l=" + std::to_string(rd.l()));
}

}  // namespace

Json to_json(const Poly& p) {
  Json j = Json::object();
  const BigInt lo = std::numeric_limits<std::int64_t>::min(), hi = std::numeric_limits<std::int64_t>::max();
  for (const auto& [e, c] : p.terms()) {
    if (c >= lo && c <= hi) j[std::to_string(e)] = static_cast<std::int64_t>(c);
    else j[std::to_string(e)] = to_decimal(c);
  }
  return j;
}

Poly poly_from_json(const Json& j) {
  return guarded("polynomial", [&] {
    if (j.is_string()) return Poly::parse(j.get<std::string>());
    if (!j.is_object()) throw InputError("polynomial must be an object or a string");
    Poly p;
    for (const auto& [key, value] : j.items()) {
      BigInt c = value.is_string() ? scalar_from_decimal<BigInt>(value.get<std::string>())
                                   : BigInt(value.get<std::int64_t>());
      if (c == 0) throw InputError("zero coefficient stored for exponent " + key);
      p.add_term(std::stoi(key), c);
    }
    return p;
  });
}

Json to_json(const AffineWeylGroup& g, const ExtAffineElement& x) { return g.format(x); }

ExtAffineElement element_from_json(const AffineWeylGroup& g, const Json& j) {
  if (!j.is_string()) throw InputError("element must be a string");
  return g.parse(j.get<std::string>());
}

Json to_json(const Window& w) {
  Json j{{"height", w.height}};
  j["coset"] = w.coset ? Json(*w.coset) : Json(nullptr);
  return j;
}

Window window_from_json(const Json& j) {
  return guarded("window", [&] {
    Window w{j.at("height").get<int>()};
    if (j.contains("coset") && !j.at("coset").is_null()) w.coset = j.at("coset").get<int>();
    return w;
  });
}

Json to_json(const AffineWeylGroup& g, const PolynomialTable& t) {
  Json entries = Json::array();
  for (const auto& [key, p] : t.entries)
    entries.push_back({{"y", g.format(key.first)}, {"x", g.format(key.second)}, {"polynomial", to_json(p)}});
  return {{"format_version", kFormatVersion},
          {"kind", to_string(t.kind)},
          {"datum", t.datum},
          {"l", t.l},
          {"window", to_json(t.window)},
          {"entries", std::move(entries)}};
}

PolynomialTable polynomial_table_from_json(const AffineWeylGroup& g, const Json& j) {
  return guarded("polynomial table", [&] {
    check_header(g, j);
    PolynomialTable t;
    t.kind = parse_table_kind(j.at("kind").get<std::string>());
    t.datum = j.at("datum").get<std::string>();
    t.l = j.at("l").get<int>();
    t.window = window_from_json(j.at("window"));
    for (const auto& e : j.at("entries"))
      t.entries.emplace(std::pair{element_from_json(g, e.at("y")), element_from_json(g, e.at("x"))},
                        poly_from_json(e.at("polynomial")));
    return t;
  });
}

std::string to_csv(const AffineWeylGroup& g, const PolynomialTable& t) {
  std::ostringstream out;
  out << "y,x," << to_string(t.kind) << "\n";
  for (const auto& [key, p] : t.entries)
    out << csv_quote(g.format(key.first)) << "," << csv_quote(g.format(key.second)) << "," << csv_quote(p.to_string())
        << "\n";
  return out.str();
}

Json to_json(const AffineWeylGroup& g, const MultiplicityTable& t) {
  Json entries = Json::array();
  for (const auto& [key, p] : t.entries)
    entries.push_back({{"x", g.format(key.first)}, {"y", g.format(key.second)}, {"polynomial", to_json(p)}});
  Json j{{"format_version", kFormatVersion},
         {"kind", to_string(t.kind)},
         {"datum", t.datum},
         {"l", t.l},
         {"window", to_json(t.window)},
         {"entries", std::move(entries)}};
  j["nu"] = t.nu ? Json(t.nu->to_string()) : Json(nullptr);
  return j;
}

MultiplicityTable multiplicity_table_from_json(const AffineWeylGroup& g, const Json& j) {
  return guarded("multiplicity table", [&] {
    check_header(g, j);
    MultiplicityTable t;
    t.kind = parse_multiplicity_kind(j.at("kind").get<std::string>());
    t.datum = j.at("datum").get<std::string>();
    t.l = j.at("l").get<int>();
    t.window = window_from_json(j.at("window"));
    if (j.contains("nu") && !j.at("nu").is_null()) {
      // "(a,b)" reuses the translation part of the element grammar.
      t.nu = g.parse("t" + j.at("nu").get<std::string>()).translation;
    }
    for (const auto& e : j.at("entries"))
      t.entries.emplace(std::pair{element_from_json(g, e.at("x")), element_from_json(g, e.at("y"))},
                        poly_from_json(e.at("polynomial")));
    return t;
  });
}

std::string to_csv(const AffineWeylGroup& g, const MultiplicityTable& t) {
  std::ostringstream out;
  out << "x,y," << to_string(t.kind) << "\n";
  for (const auto& [key, p] : t.entries)
    out << csv_quote(g.format(key.first)) << "," << csv_quote(g.format(key.second)) << "," << csv_quote(p.to_string())
        << "\n";
  return out.str();
}

Json to_json(const std::vector<BlockLabel>& blocks) {
  Json arr = Json::array();
  for (const auto& b : blocks) {
    Json stab = Json::array();
    for (AffineGenerator s : b.stabilizer) stab.push_back("s" + std::to_string(s));
    arr.push_back({{"representative", b.representative.to_string()},
                   {"stabilizer", std::move(stab)},
                   {"regular", b.regular},
                   {"extended_class", b.extended_class}});
  }
  return arr;
}

std::string to_csv(const std::vector<BlockLabel>& blocks) {
  std::ostringstream out;
  out << "representative,stabilizer,regular,extended_class\n";
  for (const auto& b : blocks)
    out << csv_quote(b.representative.to_string()) << "," << csv_quote(b.stabilizer_string()) << ","
        << (b.regular ? "true" : "false") << "," << b.extended_class << "\n";
  return out.str();
}

Json hasse_to_json(const AffineWeylGroup& g, const SemiInfinitePoset& poset) {
  Json nodes = Json::array(), edges = Json::array();
  for (const auto& x : poset.elements()) nodes.push_back(g.format(x));
  for (const auto& [lo, hi] : poset.hasse_edges()) edges.push_back({g.format(poset.elements()[lo]), g.format(poset.elements()[hi])});
  return {{"window", to_json(poset.window())},
          {"nodes", std::move(nodes)},
          {"edges", std::move(edges)},
          {"indeterminate_pairs", poset.indeterminate_count()}};
}

Json representatives_to_json(const AffineWeylGroup& g, const std::vector<PeriodicElement>& reps) {
  Json arr = Json::array();
  for (const auto& r : reps) arr.push_back(to_json(g, r));
  return {{"format_version", kFormatVersion},
          {"datum", g.root_datum().name()},
          {"l", g.root_datum().l()},
          {"representatives", std::move(arr)}};
}

std::vector<PeriodicElement> representatives_from_json(const AffineWeylGroup& g, const Json& j) {
  return guarded("cache file", [&] {
    if (j.at("format_version").get<int>() != kFormatVersion) throw InputError("cache format version mismatch");
    check_header(g, j);
    std::vector<PeriodicElement> reps;
    for (const auto& r : j.at("representatives")) reps.push_back(combination_from_json<PeriodicTag>(g, r));
    return reps;
  });
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace pkl::io
