#include "bridgeland/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "bridgeland/error.hpp"

namespace bridgeland {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", std::abs(x) < 5e-4 ? 0.0 : x);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '-':
        // "--" is not allowed inside XML comments.
        if (!out.empty() && out.back() == '-') out += ' ';
        out += c;
        break;
      default: out += c;
    }
  }
  return out;
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

}  // namespace

std::string plot_walls(const std::vector<WallLocus>& walls, const Region& view,
                       const PlotOptions& options) {
  check_region(view);
  if (view.b_min == view.b_max) throw ValidationError("plot needs a b range of positive width");
  const double b0 = view.b_min.get_d();
  const double b1 = view.b_max.get_d();
  const double t1 = view.t_max.get_d();
  const double t0 = 0;  // the axis t = 0 is drawn even though walls start above it
  const double w = options.width;
  const double h = options.height;
  const double m = options.margin;
  auto px = [&](double b) { return m + (b - b0) / (b1 - b0) * (w - 2 * m); };
  auto py = [&](double t) { return h - m - (t - t0) / (t1 - t0) * (h - 2 * m); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w) << "\" height=\"" << num(h)
      << "\" viewBox=\"0 0 " << num(w) << ' ' << num(h) << "\">\n";
  if (!options.comment.empty()) svg << "<!-- " << escape(options.comment) << " -->\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << num(w) << "\" height=\"" << num(h)
      << "\" fill=\"white\"/>\n";
  svg << "<defs><clipPath id=\"plot\"><rect x=\"" << num(m) << "\" y=\"" << num(m)
      << "\" width=\"" << num(w - 2 * m) << "\" height=\"" << num(h - 2 * m)
      << "\"/></clipPath></defs>\n";

  // Axes and ticks.
  svg << "<g stroke=\"black\" stroke-width=\"1\">\n";
  svg << "<line x1=\"" << num(m) << "\" y1=\"" << num(py(0)) << "\" x2=\"" << num(w - m)
      << "\" y2=\"" << num(py(0)) << "\"/>\n";
  svg << "<line x1=\"" << num(m) << "\" y1=\"" << num(py(0)) << "\" x2=\"" << num(m)
      << "\" y2=\"" << num(m) << "\"/>\n";
  svg << "</g>\n<g font-family=\"sans-serif\" font-size=\"11\" fill=\"black\">\n";
  for (int i = 0; i <= 6; ++i) {
    const double b = b0 + (b1 - b0) * i / 6;
    const double t = t0 + (t1 - t0) * i / 6;
    svg << "<text x=\"" << num(px(b)) << "\" y=\"" << num(py(0) + 16)
        << "\" text-anchor=\"middle\">" << num(b) << "</text>\n";
    svg << "<text x=\"" << num(m - 6) << "\" y=\"" << num(py(t) + 4) << "\" text-anchor=\"end\">"
        << num(t) << "</text>\n";
  }
  svg << "<text x=\"" << num(w / 2) << "\" y=\"" << num(h - 10)
      << "\" text-anchor=\"middle\">b</text>\n";
  svg << "<text x=\"14\" y=\"" << num(h / 2) << "\" text-anchor=\"middle\">t</text>\n";
  svg << "</g>\n";

  svg << "<g clip-path=\"url(#plot)\" fill=\"none\" stroke-width=\"1.5\">\n";
  const double sx = (w - 2 * m) / (b1 - b0);
  const double sy = (h - 2 * m) / (t1 - t0);
  for (std::size_t i = 0; i < walls.size(); ++i) {
    const WallLocus& wall = walls[i];
    const char* color = kPalette[i % (sizeof kPalette / sizeof kPalette[0])];
    const std::string id = "wall-" + std::to_string(i);
    if (wall.kind == WallKind::VERTICAL_LINE) {
      const double x = px(wall.center.get_d());
      svg << "<line id=\"" << id << "\" x1=\"" << num(x) << "\" y1=\"" << num(py(0)) << "\" x2=\""
          << num(x) << "\" y2=\"" << num(m) << "\" stroke=\"" << color << "\"/>\n";
    } else if (wall.kind == WallKind::SEMICIRCLE) {
      const double c = wall.center.get_d();
      const double r = std::sqrt(wall.radius2.get_d());
      svg << "<path id=\"" << id << "\" d=\"M " << num(px(c - r)) << ' ' << num(py(0)) << " A "
          << num(r * sx) << ' ' << num(r * sy) << " 0 0 1 " << num(px(c + r)) << ' '
          << num(py(0)) << "\" stroke=\"" << color << "\"/>\n";
    }
  }
  svg << "</g>\n<g font-family=\"sans-serif\" font-size=\"10\">\n";
  for (std::size_t i = 0; i < walls.size(); ++i) {
    const WallLocus& wall = walls[i];
    const char* color = kPalette[i % (sizeof kPalette / sizeof kPalette[0])];
    double x = 0;
    double y = 0;
    if (wall.kind == WallKind::VERTICAL_LINE) {
      x = wall.center.get_d();
      y = t1 * 0.95;
    } else if (wall.kind == WallKind::SEMICIRCLE) {
      x = wall.center.get_d();
      y = std::sqrt(wall.radius2.get_d());
    } else {
      continue;
    }
    if (x < b0 || x > b1 || y > t1) continue;
    svg << "<text x=\"" << num(px(x) + 3) << "\" y=\"" << num(py(y) - 3) << "\" fill=\"" << color
        << "\">" << i << "</text>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace bridgeland
