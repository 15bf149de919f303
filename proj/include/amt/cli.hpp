#pragma once

// Command pipelines behind the `amt` executable. Exit codes: 0 success,
// 1 a verification or cross-check failed, 2 bad input or usage.

#include <cstdint>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "amt/chain.hpp"
#include "amt/invariants.hpp"
#include "amt/io.hpp"
#include "amt/oracle.hpp"
#include "amt/svg.hpp"

namespace amt::cli {

enum class Command { Barcodes, Complex, Verify, Oracle };
enum class Format { Json, Svg };

struct RunConfig {
  Command command = Command::Barcodes;
  std::string input;
  std::optional<std::uint32_t> field;
  std::optional<int> max_degree;
  Format format = Format::Json;
  bool witness = false;
  std::vector<std::string> thresholds;  // `complex` only; default: every vertex value and +inf
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInput = 2;

namespace detail {

using nlohmann::json;

inline json witness_json(const Invariants& inv, const BarcodeSupport& s) {
  json out = json::array();
  auto chains = [&](const Mat& reps, const Mat& coords, int r) {
    json list = json::array();
    Mat c = reps * coords;
    const FilteredComplex& k = inv.complex();
    for (std::size_t j = 0; j < c.cols(); ++j) {
      json terms = json::array();
      for (std::size_t i = 0; i < c.rows(); ++i) {
        if (!c(i, j)) continue;
        json ids = json::array();
        for (auto v : k.simplex(r, i)) ids.push_back(k.vertex(v).id);
        terms.push_back({{"simplex", ids}, {"coefficient", c(i, j)}});
      }
      list.push_back(std::move(terms));
    }
    return list;
  };
  for (const auto& d : s.degrees) {
    auto total = inv.homology(inv.whole(), d.degree);
    for (const auto& [ab, m] : d.delta) {
      auto v = inv.delta(d.degree, ab.first, ab.second, true);
      out.push_back({{"invariant", "delta"},
                     {"degree", d.degree},
                     {"a", ab.first.to_string()},
                     {"b", ab.second.to_string()},
                     {"space", "H(X)"},
                     {"basis", io::matrix_json(*v.witness_basis)},
                     {"chains", chains(total->cycle_reps(), *v.witness_basis, d.degree)}});
    }
    for (const auto& [ab, m] : d.gamma) {
      auto v = inv.gamma(d.degree, ab.first, ab.second, true);
      auto source = inv.homology(inv.sublevel(ab.first), d.degree);
      out.push_back({{"invariant", "gamma"},
                     {"degree", d.degree},
                     {"a", ab.first.to_string()},
                     {"b", ab.second.to_string()},
                     {"space", "H(X_a)"},
                     {"basis", io::matrix_json(*v.witness_basis)},
                     {"chains", chains(source->cycle_reps(), *v.witness_basis, d.degree)}});
    }
  }
  return out;
}

inline std::vector<Level> default_thresholds(const FilteredComplex& k) {
  std::vector<Level> out = k.distinct_values();
  out.push_back(Level::pos_inf());
  return out;
}

}  // namespace detail

inline int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  using nlohmann::json;
  if (config.max_degree && *config.max_degree < 0) {
    err << "error: --max-degree must be nonnegative\n";
    return kExitInput;
  }
  if (config.format == Format::Svg && config.command != Command::Barcodes) {
    err << "error: --format svg is only available for `barcodes`\n";
    return kExitInput;
  }

  std::optional<FilteredComplex> parsed;
  std::vector<Level> thresholds;
  try {
    std::ifstream in(config.input);
    if (!in) throw InputError("cannot open input file '" + config.input + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    parsed = io::parse_filtered_complex(buffer.str(), config.field);
    for (const auto& t : config.thresholds) thresholds.push_back(Level::parse(t));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  const FilteredComplex& k = *parsed;
  Invariants inv(k);
  const int top = std::min(k.dimension(), config.max_degree.value_or(k.dimension()));

  switch (config.command) {
    case Command::Barcodes: {
      auto support = inv.barcode_support(top);
      auto bars = classify_bars(support);
      if (config.format == Format::Svg) {
        out << render_svg(bars);
        return kExitOk;
      }
      json doc{{"field_char", k.field().characteristic()},
               {"critical_values", io::levels_json(support.critical_values)},
               {"bars", io::bars_json(bars)},
               {"support", io::support_json(support)}};
      if (config.witness) doc["witnesses"] = detail::witness_json(inv, support);
      out << doc.dump(2) << "\n";
      return kExitOk;
    }
    case Command::Complex: {
      auto support = inv.barcode_support(top);
      auto base = std::make_shared<const AMTComplex>(build_amt_complex(k.field(), support));
      if (thresholds.empty()) thresholds = detail::default_thresholds(k);
      json stages = json::array();
      for (const auto& t : thresholds) {
        FilteredAMTComplex stage(base, t);
        stages.push_back({{"t", t.to_string()},
                          {"blocks", io::blocks_json(stage.groups())},
                          {"hodge", io::hodge_json(hodge_report(stage))}});
      }
      json doc{{"field_char", k.field().characteristic()},
               {"blocks", io::blocks_json(base->groups())},
               {"generators", io::generators_json(base->groups())},
               {"hodge", io::hodge_json(hodge_report(*base))},
               {"stages", stages}};
      out << doc.dump(2) << "\n";
      return kExitOk;
    }
    case Command::Verify: {
      Verifier verifier(inv);
      auto support = inv.barcode_support(top);
      auto base = std::make_shared<const AMTComplex>(build_amt_complex(k.field(), support));
      json reports = json::array();
      bool pass = true;
      auto add = [&](const Report& r) {
        pass = pass && r.pass;
        reports.push_back(io::report_json(r));
      };
      const int relative_top = std::min(k.dimension() + 1, config.max_degree.value_or(k.dimension() + 1));
      for (const auto& a : support.critical_values)
        for (int r = 0; r <= relative_top; ++r) add(verifier.verify_t44_item1(r, a));
      for (const auto& t : detail::default_thresholds(k))
        for (int r = 0; r <= top; ++r) add(verifier.verify_t44_item2(r, t));
      for (const auto& t : k.distinct_values())
        for (const auto& rep : morse_dims_check(inv, support, base, t))
          if (rep.degree <= (config.max_degree ? top : relative_top)) add(rep);
      json doc{{"field_char", k.field().characteristic()}, {"pass", pass}, {"reports", reports}};
      out << doc.dump(2) << "\n";
      if (!pass) err << "verification failed\n";
      return pass ? kExitOk : kExitFailed;
    }
    case Command::Oracle: {
      auto support = inv.barcode_support(top);
      auto pairs = standard_reduction(k);
      if (config.max_degree) std::erase_if(pairs.degrees, [&](const DegreePairs& d) { return d.degree > top; });
      auto report = crosscheck(pairs, support);
      json doc{{"field_char", k.field().characteristic()},
               {"pairs", io::pairs_json(pairs)},
               {"crosscheck", io::crosscheck_json(report)},
               {"pass", report.pass}};
      out << doc.dump(2) << "\n";
      if (!report.pass) err << "cross-check failed\n";
      return report.pass ? kExitOk : kExitFailed;
    }
  }
  return kExitInput;
}

}  // namespace amt::cli
