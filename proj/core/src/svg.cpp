#include "rcsep/svg.hpp"

#include <cstdio>
#include <sstream>
#include <vector>

namespace rcsep::svg {

namespace {

constexpr double kWidth = 840;
constexpr double kHeight = 620;
constexpr double kMargin = 30;

struct Bounds {
  double xlo = 0, xhi = 1, ylo = 0, yhi = 1;
  void add(double x, double y) {
    xlo = std::min(xlo, x);
    xhi = std::max(xhi, x);
    ylo = std::min(ylo, y);
    yhi = std::max(yhi, y);
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

const char* color_for(const std::string& vF, const std::string& vG) {
  if (vF == "In") return "#1b9e77";
  if (vG == "In") return "#7570b3";
  if (vF == "Unknown" || vG == "Unknown") return "#e6ab02";
  return "#999999";
}

}  // namespace

std::string render_scatter(const harness::Scenario& sc, const harness::SuiteReport& rep) {
  struct Pt {
    double x, y;
    std::string color;
  };
  std::vector<Pt> pts;
  for (const auto& row : rep.csv_rows) {
    std::istringstream is(row);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(is, cell, ',')) cells.push_back(cell);
    std::size_t ncoords = sc.space == region::Space::niemytzki ? 2 : sc.dim;
    if (cells.size() < 1 + ncoords + 3) continue;
    auto num = [](const std::string& s) {
      auto slash = s.find('/');
      if (slash == std::string::npos) return std::atof(s.c_str());
      return std::atof(s.substr(0, slash).c_str()) / std::atof(s.substr(slash + 1).c_str());
    };
    double x = num(cells[1]);
    double y = ncoords >= 2 ? num(cells[2]) : 0.0;
    const std::string& vF = cells[1 + ncoords + 1];
    const std::string& vG = cells[1 + ncoords + 2];
    pts.push_back({x, y, color_for(vF, vG)});
  }

  Bounds b;
  bool first = true;
  auto seed_bounds = [&](double x, double y, double pad) {
    if (first) {
      b = Bounds{x - pad, x + pad, y - pad, y + pad};
      first = false;
    } else {
      b.add(x - pad, y - pad);
      b.add(x + pad, y + pad);
    }
  };

  std::vector<std::string> shapes;
  if (sc.space == region::Space::niemytzki) {
    auto emit_ball = [&](const niemytzki::ClosedBall& ball, const char* stroke) {
      double cx = ball.center().x.approx();
      double cy = ball.center().y.approx();
      double r = ball.radius.approx();
      seed_bounds(cx, cy, r);
      shapes.push_back("circle|" + fmt(cx) + "|" + fmt(cy) + "|" + fmt(r) + "|" + stroke);
    };
    for (const auto& g : sc.nF) emit_ball(g, "#1b9e77");
    for (const auto& g : sc.nG) emit_ball(g, "#7570b3");
  } else {
    auto emit_box = [&](const sorgenfrey::Box& box, const char* stroke) {
      double x = box.lower.coords[0].approx();
      double w = box.widths[0].approx();
      double y = sc.dim >= 2 ? box.lower.coords[1].approx() : 0.0;
      double h = sc.dim >= 2 ? box.widths[1].approx() : 0.5;
      seed_bounds(x + w / 2, y + h / 2, std::max(w, h));
      shapes.push_back("rect|" + fmt(x) + "|" + fmt(y) + "|" + fmt(w) + "|" + fmt(h) + "|" +
                       stroke);
    };
    for (const auto& g : sc.sF) emit_box(g, "#1b9e77");
    for (const auto& g : sc.sG) emit_box(g, "#7570b3");
  }
  for (const auto& p : pts) seed_bounds(p.x, p.y, 0.05);
  if (first) seed_bounds(0, 0, 1);

  double sx = (kWidth - 2 * kMargin) / std::max(1e-9, b.xhi - b.xlo);
  double sy = (kHeight - 2 * kMargin) / std::max(1e-9, b.yhi - b.ylo);
  double s = std::min(sx, sy);
  auto mapx = [&](double x) { return kMargin + (x - b.xlo) * s; };
  auto mapy = [&](double y) { return kHeight - kMargin - (y - b.ylo) * s; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth << "\" height=\""
     << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // axis line for the half plane
  if (sc.space == region::Space::niemytzki)
    os << "<line x1=\"0\" y1=\"" << fmt(mapy(0)) << "\" x2=\"" << kWidth << "\" y2=\""
       << fmt(mapy(0)) << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  for (const auto& sh : shapes) {
    std::istringstream is(sh);
    std::string kind, a, bb, c, d, stroke;
    std::getline(is, kind, '|');
    std::getline(is, a, '|');
    std::getline(is, bb, '|');
    std::getline(is, c, '|');
    std::getline(is, d, '|');
    if (kind == "circle") {
      stroke = d;
      os << "<circle cx=\"" << fmt(mapx(std::atof(a.c_str()))) << "\" cy=\""
         << fmt(mapy(std::atof(bb.c_str()))) << "\" r=\"" << fmt(std::atof(c.c_str()) * s)
         << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1.2\"/>\n";
    } else {
      std::getline(is, stroke, '|');
      double x = std::atof(a.c_str()), y = std::atof(bb.c_str());
      double w = std::atof(c.c_str()), h = std::atof(d.c_str());
      os << "<rect x=\"" << fmt(mapx(x)) << "\" y=\"" << fmt(mapy(y + h)) << "\" width=\""
         << fmt(w * s) << "\" height=\"" << fmt(h * s) << "\" fill=\"none\" stroke=\"" << stroke
         << "\" stroke-width=\"1.2\"/>\n";
    }
  }
  for (const auto& p : pts)
    os << "<circle cx=\"" << fmt(mapx(p.x)) << "\" cy=\"" << fmt(mapy(p.y))
       << "\" r=\"2.2\" fill=\"" << p.color << "\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace rcsep::svg
