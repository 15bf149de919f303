#pragma once

// Static SVG rendering of a bar list: one horizontal segment per unit of
// multiplicity, grouped by degree. Closed ends are solid dots, open ends
// hollow ones.

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <string>

#include "amt/invariants.hpp"

namespace amt {

inline std::string render_svg(const BarList& list) {
  constexpr double width = 640, margin = 60, row_height = 18, header = 30;
  double lo = 0, hi = 1;
  bool any = false;
  for (const auto& b : list.bars)
    for (const Level* l : {&b.left, &b.right}) {
      if (!l->is_finite()) continue;
      double v = l->to_double();
      lo = any ? std::min(lo, v) : v;
      hi = any ? std::max(hi, v) : v;
      any = true;
    }
  if (hi - lo < 1e-12) hi = lo + 1;
  auto x_of = [&](const Level& l) {
    if (!l.is_finite()) return l.kind() == Level::Kind::NegInf ? margin / 2 : width - margin / 2;
    return margin + (l.to_double() - lo) / (hi - lo) * (width - 2 * margin);
  };
  auto fmt = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return std::string(buf);
  };

  std::size_t rows = 0;
  int last_degree = -2;
  std::ostringstream body;
  for (const auto& b : list.bars) {
    if (b.degree != last_degree) {
      double y = header + static_cast<double>(rows) * row_height + row_height / 2;
      body << "  <text x=\"4\" y=\"" << fmt(y + 4) << "\" font-size=\"11\">H" << b.degree << "</text>\n";
      last_degree = b.degree;
    }
    const bool left_closed = b.kind != BarKind::Open;
    const bool right_closed = b.kind == BarKind::Closed;
    for (std::size_t copy = 0; copy < b.multiplicity; ++copy, ++rows) {
      double y = header + static_cast<double>(rows) * row_height + row_height / 2;
      double x1 = x_of(b.left), x2 = x_of(b.right);
      body << "  <line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(x2) << "\" y2=\"" << fmt(y)
           << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
      body << "  <circle cx=\"" << fmt(x1) << "\" cy=\"" << fmt(y) << "\" r=\"4\" stroke=\"black\" fill=\""
           << (left_closed ? "black" : "white") << "\"/>\n";
      body << "  <circle cx=\"" << fmt(x2) << "\" cy=\"" << fmt(y) << "\" r=\"4\" stroke=\"black\" fill=\""
           << (right_closed ? "black" : "white") << "\"/>\n";
      body << "  <title>" << to_string(b.kind) << " " << b.left.to_string() << " " << b.right.to_string()
           << "</title>\n";
    }
  }
  double height = header + static_cast<double>(rows) * row_height + 20;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
      << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "  <text x=\"" << fmt(margin) << "\" y=\"18\" font-size=\"11\">" << fmt(lo) << "</text>\n";
  out << "  <text x=\"" << fmt(width - margin) << "\" y=\"18\" font-size=\"11\" text-anchor=\"end\">" << fmt(hi)
      << "</text>\n";
  out << body.str();
  out << "</svg>\n";
  return out.str();
}

}  // namespace amt
