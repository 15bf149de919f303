#pragma once

// JSON input of filtered complexes and JSON output of every report type.
// Levels are always written as exact strings ("3/2", "2", "inf").

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "amt/chain.hpp"
#include "amt/invariants.hpp"
#include "amt/level.hpp"
#include "amt/oracle.hpp"
#include "amt/scomplex.hpp"

namespace amt {

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace io {

using nlohmann::json;

inline Level level_from_json(const json& v, const std::string& where) {
  if (v.is_string()) return Level::parse(v.get<std::string>());
  if (v.is_number_integer()) return Level(v.get<std::int64_t>());
  throw InputError(where + ": value must be a rational or decimal string (or an integer)");
}

// { "field_char": int, "vertices": [ {"id": int, "value": str} ], "simplices": [[ids...]] }
inline FilteredComplex complex_from_json(const json& doc, std::optional<std::uint32_t> field_override = std::nullopt,
                                              std::size_t max_dimension = FilteredComplex::kDefaultMaxDimension) {
  try {
    if (!doc.is_object()) throw InputError("document must be a JSON object");
    std::uint32_t p = 0;
    if (field_override) {
      p = *field_override;
    } else {
      if (!doc.contains("field_char") || !doc["field_char"].is_number_integer())
        throw InputError("missing integer field_char");
      auto raw = doc["field_char"].get<std::int64_t>();
      if (raw < 2 || raw > Field::kMaxCharacteristic)
        throw InputError("field_char " + std::to_string(raw) + " is not a supported prime");
      p = static_cast<std::uint32_t>(raw);
    }
    Field field(p);

    if (!doc.contains("vertices") || !doc["vertices"].is_array()) throw InputError("missing vertices array");
    std::vector<VertexSpec> vertices;
    for (std::size_t i = 0; i < doc["vertices"].size(); ++i) {
      const auto& v = doc["vertices"][i];
      const std::string where = "vertices[" + std::to_string(i) + "]";
      if (!v.is_object() || !v.contains("id") || !v["id"].is_number_integer() || !v.contains("value"))
        throw InputError(where + ": expected {\"id\": int, \"value\": string}");
      vertices.push_back({v["id"].get<std::int64_t>(), level_from_json(v["value"], where)});
    }

    std::vector<std::vector<std::int64_t>> simplices;
    if (doc.contains("simplices")) {
      if (!doc["simplices"].is_array()) throw InputError("simplices must be an array");
      for (std::size_t i = 0; i < doc["simplices"].size(); ++i) {
        const auto& s = doc["simplices"][i];
        if (!s.is_array()) throw InputError("simplices[" + std::to_string(i) + "] must be an array of vertex ids");
        std::vector<std::int64_t> ids;
        for (const auto& id : s) {
          if (!id.is_number_integer()) throw InputError("simplices[" + std::to_string(i) + "]: vertex ids must be integers");
          ids.push_back(id.get<std::int64_t>());
        }
        simplices.push_back(std::move(ids));
      }
    }
    return FilteredComplex(field, std::move(vertices), simplices, max_dimension);
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
}

inline FilteredComplex parse_filtered_complex(std::string_view text, std::optional<std::uint32_t> field_override = std::nullopt,
                                              std::size_t max_dimension = FilteredComplex::kDefaultMaxDimension) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return complex_from_json(doc, field_override, max_dimension);
}

inline json to_json(const FilteredComplex& k) {
  json doc;
  doc["field_char"] = k.field().characteristic();
  doc["vertices"] = json::array();
  for (std::size_t i = 0; i < k.vertex_count(); ++i)
    doc["vertices"].push_back({{"id", k.vertex(i).id}, {"value", k.vertex(i).value.to_string()}});
  doc["simplices"] = json::array();
  for (int r = 0; r <= k.dimension(); ++r)
    for (std::size_t i = 0; i < k.count(r); ++i) {
      json ids = json::array();
      for (auto v : k.simplex(r, i)) ids.push_back(k.vertex(v).id);
      doc["simplices"].push_back(std::move(ids));
    }
  return doc;
}

inline json matrix_json(const Mat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return rows;
}

inline json bars_json(const BarList& bars) {
  json out = json::array();
  for (const auto& b : bars.bars)
    out.push_back({{"degree", b.degree},
                   {"kind", to_string(b.kind)},
                   {"left", b.left.to_string()},
                   {"right", b.right.to_string()},
                   {"multiplicity", b.multiplicity}});
  return out;
}

inline json levels_json(const std::vector<Level>& levels) {
  json out = json::array();
  for (const auto& l : levels) out.push_back(l.to_string());
  return out;
}

inline json support_json(const BarcodeSupport& s) {
  json degrees = json::array();
  for (const auto& d : s.degrees) {
    json delta = json::array(), gamma = json::array(), mu = json::array(), lambda = json::array();
    for (const auto& [ab, m] : d.delta)
      delta.push_back({{"a", ab.first.to_string()}, {"b", ab.second.to_string()}, {"multiplicity", m}});
    for (const auto& [ab, m] : d.gamma)
      gamma.push_back({{"a", ab.first.to_string()}, {"b", ab.second.to_string()}, {"multiplicity", m}});
    for (const auto& [a, m] : d.mu) mu.push_back({{"a", a.to_string()}, {"multiplicity", m}});
    for (const auto& [a, m] : d.lambda) lambda.push_back({{"a", a.to_string()}, {"multiplicity", m}});
    degrees.push_back({{"degree", d.degree}, {"delta", delta}, {"gamma", gamma}, {"mu", mu}, {"lambda", lambda}});
  }
  return {{"critical_values", levels_json(s.critical_values)}, {"degrees", degrees}};
}

inline json report_json(const Report& r) {
  return {{"claim", r.claim}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"pass", r.pass}, {"degree", r.degree},
          {"level", r.level.to_string()}};
}

inline json hodge_json(const HodgeReport& h) {
  json rows = json::array();
  for (const auto& row : h.rows)
    rows.push_back({{"degree", row.degree},
                    {"c", row.c},
                    {"beta", row.beta},
                    {"rank_out", row.rank_out},
                    {"rank_in", row.rank_in}});
  return rows;
}

inline json blocks_json(const std::vector<ChainGroup>& groups) {
  json out = json::array();
  for (const auto& g : groups)
    out.push_back({{"degree", g.degree},
                   {"minus", g.minus.size()},
                   {"homology", g.homology.size()},
                   {"plus", g.plus.size()},
                   {"dim", g.dim()}});
  return out;
}

inline json generators_json(const std::vector<ChainGroup>& groups) {
  auto label = [](const Generator& g, Block block) {
    return json{{"block", to_string(block)},   {"source", to_string(g.source)}, {"source_degree", g.source_degree},
                {"a", g.a.to_string()},        {"b", g.b.to_string()},          {"copy", g.copy}};
  };
  json out = json::array();
  for (const auto& grp : groups) {
    json gens = json::array();
    for (const auto& g : grp.minus) gens.push_back(label(g, Block::Minus));
    for (const auto& g : grp.homology) gens.push_back(label(g, Block::Homology));
    for (const auto& g : grp.plus) gens.push_back(label(g, Block::Plus));
    out.push_back({{"degree", grp.degree}, {"generators", gens}});
  }
  return out;
}

inline json pairs_json(const PersistencePairs& p) {
  json out = json::array();
  for (const auto& d : p.degrees) {
    json pairs = json::array();
    for (const auto& [b, e] : d.finite_pairs) pairs.push_back({b.to_string(), e.to_string()});
    out.push_back({{"degree", d.degree}, {"finite_pairs", pairs}, {"essential_births", levels_json(d.essential_births)}});
  }
  return out;
}

inline json crosscheck_json(const CrosscheckReport& c) {
  json degrees = json::array();
  for (const auto& d : c.degrees) {
    json oracle_only = json::array(), support_only = json::array(), births = json::array();
    for (const auto& [a, b, m] : d.only_in_oracle)
      oracle_only.push_back({{"a", a.to_string()}, {"b", b.to_string()}, {"multiplicity", m}});
    for (const auto& [a, b, m] : d.only_in_support)
      support_only.push_back({{"a", a.to_string()}, {"b", b.to_string()}, {"multiplicity", m}});
    for (const auto& [a, o, s] : d.essential_mismatches)
      births.push_back({{"a", a.to_string()}, {"oracle", o}, {"support", s}});
    degrees.push_back({{"degree", d.degree},
                       {"pairs_match", d.pairs_match},
                       {"essentials_match", d.essentials_match},
                       {"only_in_oracle", oracle_only},
                       {"only_in_support", support_only},
                       {"essential_mismatches", births}});
  }
  return {{"pass", c.pass}, {"degrees", degrees}};
}

}  // namespace io
}  // namespace amt
