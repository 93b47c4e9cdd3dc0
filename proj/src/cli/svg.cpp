#include "conesep/svg.hpp"

#include "conesep/error.hpp"
#include "conesep/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace conesep::svg {

namespace {

constexpr double kSize = 400.0;
constexpr double kCenter = 200.0;
constexpr double kScale = 150.0;
constexpr std::array<const char*, 6> kColors{"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

// Figure coordinates: y grows upward in the plane, downward on the canvas.
std::string px(double x) { return fmt(kCenter + kScale * x); }
std::string py(double y) { return fmt(kCenter - kScale * y); }

std::string point(double r, double t) { return px(r * std::cos(t)) + "," + py(r * std::sin(t)); }

std::string sector_path(double from, double to, double r) {
  if (to - from >= 2 * std::numbers::pi - 1e-12) {
    return "M " + point(r, 0) + " A " + fmt(kScale * r) + " " + fmt(kScale * r) + " 0 1 0 " + point(r, std::numbers::pi) +
           " A " + fmt(kScale * r) + " " + fmt(kScale * r) + " 0 1 0 " + point(r, 0) + " Z";
  }
  const int large = to - from > std::numbers::pi ? 1 : 0;
  // Counterclockwise in the plane is sweep-flag 0 on the flipped canvas.
  return "M " + px(0) + "," + py(0) + " L " + point(r, from) + " A " + fmt(kScale * r) + " " + fmt(kScale * r) + " 0 " +
         std::to_string(large) + " 0 " + point(r, to) + " Z";
}

void ray_line(std::ostringstream& out, double t, const char* color, double r, const char* extra = "") {
  out << "  <line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(r * std::cos(t)) << "\" y2=\""
      << py(r * std::sin(t)) << "\" stroke=\"" << color << "\" stroke-width=\"2\"" << extra << "/>\n";
}

void draw_piece(std::ostringstream& out, const PolyCone& p, const char* color) {
  if (p.size() == 1 || !solidity(p)) {
    // A ray, or a line / ray pair that spans a 1-D subspace.
    for (Eigen::Index j = 0; j < p.size(); ++j) ray_line(out, std::atan2(p.generator(j)[1], p.generator(j)[0]), color, 1.0);
    return;
  }
  const auto [from, to] = angular_extent(p);
  out << "  <path d=\"" << sector_path(from, to, 1.0) << "\" fill=\"" << color
      << "\" fill-opacity=\"0.25\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>\n";
}

void draw_region(std::ostringstream& out, const ConeRegion& r, const char* color) {
  switch (r.kind()) {
    case RegionKind::Piece: draw_piece(out, r.cone(), color); return;
    case RegionKind::Union:
      for (const ConeRegion& c : r.children()) draw_region(out, c, color);
      return;
    case RegionKind::Boundary:
      for (const PolyCone& p : r.facet_pieces()) draw_piece(out, p, color);
      return;
    case RegionKind::Complement: {
      const auto [from, to] = angular_extent(r.cone());
      out << "  <path d=\"" << sector_path(to, from + 2 * std::numbers::pi, 1.0) << "\" fill=\"" << color
          << "\" fill-opacity=\"0.25\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>\n";
      return;
    }
  }
}

double mid_angle(const ConeRegion& r) {
  const Vector c = r.centroid();
  if (c.norm() < 1e-9) {
    const std::vector<Vector> rays = r.rays();
    return std::atan2(rays.front()[1], rays.front()[0]);
  }
  return std::atan2(c[1], c[0]);
}

void draw_body(std::ostringstream& out, const ConeRegion& r, bool origin, const char* color) {
  std::vector<Vector> pts = sample_norm_base(r, 1.0).points;
  if (origin) pts.push_back(Vector::Zero(2));
  const std::vector<Vector> hull = convex_hull(pts);
  if (hull.size() == 1) {
    out << "  <circle cx=\"" << px(hull[0][0]) << "\" cy=\"" << py(hull[0][1]) << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    return;
  }
  out << "  <polygon points=\"";
  for (std::size_t i = 0; i < hull.size(); ++i) out << (i ? " " : "") << px(hull[i][0]) << "," << py(hull[i][1]);
  out << "\" fill=\"" << color << "\" fill-opacity=\"0.12\" stroke=\"" << color
      << "\" stroke-width=\"1\" stroke-dasharray=\"4 2\"/>\n";
}

}  // namespace

std::pair<double, double> angular_extent(const PolyCone& cone) {
  std::vector<double> t;
  for (Eigen::Index j = 0; j < cone.size(); ++j) t.push_back(std::atan2(cone.generator(j)[1], cone.generator(j)[0]));
  std::sort(t.begin(), t.end());
  std::size_t gap_after = t.size() - 1;
  double gap = t.front() + 2 * std::numbers::pi - t.back();
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    if (t[i + 1] - t[i] > gap) {
      gap = t[i + 1] - t[i];
      gap_after = i;
    }
  }
  if (gap < std::numbers::pi - 1e-12) return {0.0, 2 * std::numbers::pi};
  const double from = t[(gap_after + 1) % t.size()];
  double to = t[gap_after];
  while (to < from) to += 2 * std::numbers::pi;
  return {from, to};
}

std::vector<Vector> convex_hull(std::vector<Vector> pts) {
  std::sort(pts.begin(), pts.end(), [](const Vector& a, const Vector& b) {
    return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
  });
  pts.erase(std::unique(pts.begin(), pts.end(), [](const Vector& a, const Vector& b) { return (a - b).norm() < 1e-12; }),
            pts.end());
  if (pts.size() < 3) return pts;
  auto cross = [](const Vector& o, const Vector& a, const Vector& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<Vector> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 1e-15) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 1e-15) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

std::string render(const Figure& figure) {
  for (const NamedRegion& c : figure.cones) {
    if (c.region.dim() != 2) throw ConeError(ErrorKind::DimensionNot2D, "rendering needs planar cones");
  }
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(kSize) << "\" height=\"" << fmt(kSize)
      << "\" viewBox=\"0 0 " << fmt(kSize) << " " << fmt(kSize) << "\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  out << "  <circle cx=\"" << px(0) << "\" cy=\"" << py(0) << "\" r=\"" << fmt(kScale)
      << "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\"/>\n";

  if (figure.certificate) {
    const SeparationCertificate& c = *figure.certificate;
    const double t0 = std::atan2(c.x_star[1], c.x_star[0]);
    const double phi = std::acos(std::clamp(c.alpha / c.x_star.norm(), -1.0, 1.0));
    out << "  <path d=\"" << sector_path(t0 - phi, t0 + phi, 1.2)
        << "\" fill=\"#fff3b0\" fill-opacity=\"0.6\" stroke=\"none\"/>\n";
    ray_line(out, t0 - phi, "#444444", 1.25, " stroke-dasharray=\"6 4\"");
    ray_line(out, t0 + phi, "#444444", 1.25, " stroke-dasharray=\"6 4\"");
    out << "  <text x=\"" << px(1.3 * std::cos(t0)) << "\" y=\"" << py(1.3 * std::sin(t0))
        << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">C(x*, " << fmt(c.alpha) << ")</text>\n";
  }

  for (std::size_t i = 0; i < figure.cones.size(); ++i) {
    draw_region(out, figure.cones[i].region, kColors[i % kColors.size()]);
  }
  if (figure.pair) {
    draw_body(out, figure.cones[figure.pair->first].region, false, kColors[figure.pair->first % kColors.size()]);
    draw_body(out, figure.cones[figure.pair->second].region, true, kColors[figure.pair->second % kColors.size()]);
  }
  for (std::size_t i = 0; i < figure.cones.size(); ++i) {
    const double t = mid_angle(figure.cones[i].region);
    out << "  <text x=\"" << px(1.12 * std::cos(t)) << "\" y=\"" << py(1.12 * std::sin(t))
        << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" fill=\"" << kColors[i % kColors.size()]
        << "\">" << figure.cones[i].name << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace conesep::svg
