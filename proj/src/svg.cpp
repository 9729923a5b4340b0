#include "vinerep/svg.hpp"

#include <algorithm>
#include <sstream>

namespace vinerep {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

// Presentation only; the core stays exact.
double approx(const Rat& r) { return r.get_d(); }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

std::string render_svg(const Vineyard& v) {
  const double width = 640, height = 480, margin = 40;
  double t0 = 0, t1 = 1, h0 = 0, h1 = 1;
  bool any = false;
  if (v.grid.size() >= 1) {
    t0 = approx(v.grid.times.front());
    t1 = approx(v.grid.times.back());
  }
  for (const Vine& vn : v.vines) {
    for (const Rat& r : vn.births) {
      double y = approx(r);
      h0 = any ? std::min(h0, y) : y;
      h1 = any ? std::max(h1, y) : y;
      any = true;
    }
    for (const Rat& r : vn.deaths) {
      double y = approx(r);
      h0 = std::min(h0, y);
      h1 = std::max(h1, y);
    }
  }
  if (t1 <= t0) t1 = t0 + 1;
  if (h1 <= h0) h1 = h0 + 1;
  auto sx = [&](double t) { return margin + (t - t0) / (t1 - t0) * (width - 2 * margin); };
  auto sy = [&](double h) { return height - margin - (h - h0) / (h1 - h0) * (height - 2 * margin); };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  os << "  <rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
  os << "  <line x1=\"" << fmt(margin) << "\" y1=\"" << fmt(height - margin) << "\" x2=\""
     << fmt(width - margin) << "\" y2=\"" << fmt(height - margin)
     << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  os << "  <line x1=\"" << fmt(margin) << "\" y1=\"" << fmt(margin) << "\" x2=\"" << fmt(margin)
     << "\" y2=\"" << fmt(height - margin) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";

  if (v.grid.size() >= 2 && !v.vines.empty()) {
    for (const CriticalEvent& ev : critical_times(v)) {
      double x = sx(approx(ev.time));
      os << "  <line x1=\"" << fmt(x) << "\" y1=\"" << fmt(margin) << "\" x2=\"" << fmt(x)
         << "\" y2=\"" << fmt(height - margin)
         << "\" stroke=\"#555555\" stroke-width=\"1\" stroke-dasharray=\"6 4\"/>\n";
    }
  }

  std::size_t color = 0;
  for (const Vine& vn : v.vines) {
    const char* c = kPalette[color++ % (sizeof(kPalette) / sizeof(kPalette[0]))];
    for (const auto* side : {&vn.births, &vn.deaths}) {
      os << "  <polyline fill=\"none\" stroke=\"" << c << "\" stroke-width=\"2\" points=\"";
      for (std::size_t s = 0; s < side->size(); ++s) {
        if (s) os << " ";
        os << fmt(sx(approx(v.grid[vn.lo + s]))) << "," << fmt(sy(approx((*side)[s])));
      }
      os << "\"/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace vinerep
