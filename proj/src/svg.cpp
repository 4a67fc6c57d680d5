#include "tropitheta/svg.hpp"

#include <iomanip>
#include <sstream>

namespace tropitheta {

namespace {

constexpr long kCanvas = 400;
constexpr long kMargin = 20;

// Pixel = margin + scale·(p − origin), y flipped.
struct Frame {
  RatVec origin;
  Rational scale;
  Rational height;

  static Frame fit(const std::vector<RatVec>& points) {
    RatVec lo = points.at(0), hi = points.at(0);
    for (const auto& p : points)
      for (std::size_t i = 0; i < 2; ++i) {
        if (p[i] < lo[i]) lo[i] = p[i];
        if (p[i] > hi[i]) hi[i] = p[i];
      }
    Rational extent = std::max(hi[0] - lo[0], hi[1] - lo[1]);
    if (extent == 0) extent = 1;
    Frame f{lo, Rational(kCanvas) / extent, (hi[1] - lo[1]) * (Rational(kCanvas) / extent)};
    return f;
  }

  std::string coord(const Rational& value) const {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << value.get_d();
    return os.str();
  }
  std::string x(const RatVec& p) const { return coord(kMargin + scale * (p[0] - origin[0])); }
  std::string y(const RatVec& p) const { return coord(kMargin + height - scale * (p[1] - origin[1])); }
  std::string px(const RatVec& p) const { return x(p) + "," + y(p); }

  std::string header() const {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas + 2 * kMargin << "\" height=\""
       << Rational(height + 2 * kMargin).get_d() << "\" data-scale=\"" << to_string(scale) << "\" data-origin=\""
       << to_string(origin) << "\">\n";
    os << "<!-- pixel = " << kMargin << " + " << to_string(scale) << " * (p - " << to_string(origin)
       << "), y axis flipped -->\n";
    return os.str();
  }
};

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

std::string polyline(const Frame& f, const std::vector<RatVec>& pts, const char* color, bool closed) {
  std::string s = closed ? "<polygon" : "<polyline";
  s += " fill=\"none\" stroke=\"";
  s += color;
  s += "\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) s += " ";
    s += f.px(pts[i]);
  }
  return s + "\"/>\n";
}

}  // namespace

std::string svg_theta_graphs(const TropicalDescentDatum& datum, const PolarizationInfo& info) {
  require(datum.dim() == 1, ErrorKind::DimensionUnsupported, "theta graphs need n = 1");
  Cell domain = fundamental_domain(datum);
  std::vector<std::vector<RatVec>> graphs;
  std::vector<RatVec> all;
  for (const auto& b : info.reps) {
    ThetaFunction theta{datum, b, Convention::QEll};
    std::vector<RatVec> pts;
    for (const auto& piece : theta_pieces(theta, domain)) {
      const auto& v = piece.region.vertices();
      if (pts.empty()) pts.push_back({v.front()[0], theta_eval(theta, v.front())});
      pts.push_back({v.back()[0], theta_eval(theta, v.back())});
    }
    all.insert(all.end(), pts.begin(), pts.end());
    graphs.push_back(pts);
  }
  Frame f = Frame::fit(all);
  std::string s = f.header();
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    s += "<!-- theta_b, b = " + to_string(info.reps[k]) + " -->\n";
    s += polyline(f, graphs[k], kColors[k % 8], false);
  }
  return s + "</svg>\n";
}

std::string svg_image_polygon(const ImageComplex& img) {
  require(!img.vertices.empty(), ErrorKind::PreconditionViolated, "empty image");
  std::vector<RatVec> pts;
  for (const auto& v : img.vertices) pts.push_back(v.size() >= 2 ? RatVec{v[0], v[1]} : RatVec{v[0], Rational(0)});
  Frame f = Frame::fit(pts);
  std::string s = f.header();
  if (img.vertices[0].size() > 2) s += "<!-- projection onto the first two coordinates -->\n";
  s += polyline(f, pts, kColors[0], true);
  for (std::size_t i = 0; i < pts.size(); ++i)
    s += "<circle r=\"3\" fill=\"black\" cx=\"" + f.x(pts[i]) + "\" cy=\"" + f.y(pts[i]) + "\"/>\n";
  return s + "</svg>\n";
}

std::string svg_cells(const PiecewiseAffineMap& map) {
  require(map.domain.ambient() == 2, ErrorKind::DimensionUnsupported, "cell plots need n = 2");
  Frame f = Frame::fit(map.domain.vertices());
  std::string s = f.header();
  s += polyline(f, map.domain.vertices(), "black", true);
  for (std::size_t k = 0; k < map.cells.size(); ++k)
    s += polyline(f, map.cells[k].cell.vertices(), kColors[k % 8], true);
  return s + "</svg>\n";
}

}  // namespace tropitheta
