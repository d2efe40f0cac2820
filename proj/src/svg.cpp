#include "germ/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "germ/error.hpp"
#include "germ/roots.hpp"

namespace germ {

namespace {

constexpr double kPanel = 360;
constexpr double kMargin = 20;
constexpr int kSliceSamples = 241;
constexpr Precision kPlotBits = 64;
const char* const kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#9467bd", "#8c564b", "#e377c2", "#17becf", "#bcbd22"};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  std::string s(buf);
  return s == "-0.00" ? "0.00" : s;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += ch;
    }
  }
  return out;
}

// Maps a window [-wx, wx] x [-wy, wy] onto a panel whose left edge is x0.
struct Frame {
  double x0;
  double wx;
  double wy;
  double px(double x) const { return x0 + kMargin + (x + wx) / (2 * wx) * kPanel; }
  double py(double y) const { return kMargin + (wy - y) / (2 * wy) * kPanel; }
};

void axes(std::ostringstream& out, const Frame& f, const std::string& hlabel, const std::string& vlabel) {
  out << "<rect x=\"" << num(f.x0 + kMargin) << "\" y=\"" << num(kMargin) << "\" width=\"" << num(kPanel)
      << "\" height=\"" << num(kPanel) << "\" fill=\"none\" stroke=\"#999\"/>\n";
  out << "<line x1=\"" << num(f.px(-f.wx)) << "\" y1=\"" << num(f.py(0)) << "\" x2=\"" << num(f.px(f.wx))
      << "\" y2=\"" << num(f.py(0)) << "\" stroke=\"#ccc\"/>\n";
  out << "<line x1=\"" << num(f.px(0)) << "\" y1=\"" << num(f.py(-f.wy)) << "\" x2=\"" << num(f.px(0))
      << "\" y2=\"" << num(f.py(f.wy)) << "\" stroke=\"#ccc\"/>\n";
  out << "<text x=\"" << num(f.px(f.wx) - 12) << "\" y=\"" << num(f.py(0) - 4) << "\">" << hlabel << "</text>\n";
  out << "<text x=\"" << num(f.px(0) + 4) << "\" y=\"" << num(kMargin + 12) << "\">" << vlabel << "</text>\n";
}

// Real points (u, v) of Delta with u on a grid.
std::vector<std::pair<double, double>> real_slice(const Polynomial& delta, double wu, double wv) {
  std::vector<std::pair<double, double>> points;
  const auto rows = delta.coefficients_in(1);  // powers of v
  for (int k = 0; k < kSliceSamples; ++k) {
    const double u = -wu + 2 * wu * k / (kSliceSamples - 1);
    const Complex uc(std::complex<double>(u, 0), kPlotBits);
    NumericPolynomial p;
    for (const Polynomial& row : rows) p.push_back(row.evaluate({uc, Complex(kPlotBits)}));
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    if (p.size() < 2) continue;
    for (const RootCluster& c : root_clusters(p, kPlotBits)) {
      const std::complex<double> v = c.ball.center.to_std();
      if (std::abs(v.imag()) <= 1e-6 * (wv + std::abs(v.real())) && std::abs(v.real()) <= wv) {
        points.emplace_back(u, v.real());
      }
    }
  }
  return points;
}

void cerf_panel(std::ostringstream& out, const MonodromyReport& r) {
  const double rho = r.radii ? r.radii->rho.get_d() : 1.0;
  const double eta = r.radii ? r.radii->eta.get_d() : 1.0;
  const Frame f{0, rho, 2 * eta};
  axes(out, f, "u", "v");
  out << "<text x=\"" << num(kMargin) << "\" y=\"" << num(kPanel + kMargin + 16)
      << "\">Cerf diagram, real slice</text>\n";
  if (r.cerf.empty() || r.cerf.contact_count == 0) return;
  for (double s : {-1.0, 1.0}) {
    out << "<line x1=\"" << num(f.px(-rho)) << "\" y1=\"" << num(f.py(s * eta)) << "\" x2=\"" << num(f.px(rho))
        << "\" y2=\"" << num(f.py(s * eta)) << "\" stroke=\"#d62728\" stroke-dasharray=\"4 3\"/>\n";
  }
  for (const auto& [u, v] : real_slice(r.cerf.defining, rho, 2 * eta)) {
    out << "<circle cx=\"" << num(f.px(u)) << "\" cy=\"" << num(f.py(v)) << "\" r=\"1.2\" fill=\"#333\"/>\n";
  }
}

void orbit_panel(std::ostringstream& out, const MonodromyReport& r) {
  const double x0 = kPanel + 2 * kMargin;
  if (!r.carousel || r.carousel->m == 0) {
    const Frame f{x0, 1, 1};
    axes(out, f, "Re u", "Im u");
    out << "<text x=\"" << num(x0 + kMargin + 10) << "\" y=\"" << num(kMargin + kPanel / 2 - 8)
        << "\">no fibre points to follow</text>\n";
    if (!r.tangency.note.empty()) {
      out << "<text x=\"" << num(x0 + kMargin + 10) << "\" y=\"" << num(kMargin + kPanel / 2 + 10)
          << "\" font-size=\"9\">" << escape(r.tangency.note) << "</text>\n";
    }
    return;
  }
  const CarouselPermutation& c = *r.carousel;
  double extent = 0;
  for (const auto& trace : c.orbit_traces)
    for (const auto& z : trace) extent = std::max(extent, std::abs(z));
  extent = extent > 0 ? 1.2 * extent : 1.0;
  const Frame f{x0, extent, extent};
  axes(out, f, "Re u", "Im u");
  out << "<text x=\"" << num(x0 + kMargin) << "\" y=\"" << num(kPanel + kMargin + 16)
      << "\">fibre points over |v| = eta</text>\n";

  // Colour by cycle: the index of the cycle's smallest element.
  std::vector<int> colour(c.sigma.size(), -1);
  int cycles = 0;
  for (size_t k = 0; k < c.sigma.size(); ++k) {
    if (colour[k] >= 0) continue;
    for (size_t j = k; colour[j] < 0; j = static_cast<size_t>(c.sigma[j])) colour[j] = cycles;
    ++cycles;
  }
  for (size_t k = 0; k < c.orbit_traces.size(); ++k) {
    out << "<polyline fill=\"none\" stroke=\"" << kPalette[colour[k] % 8] << "\" points=\"";
    for (size_t i = 0; i < c.orbit_traces[k].size(); ++i) {
      const auto& z = c.orbit_traces[k][i];
      out << (i ? " " : "") << num(f.px(z.real())) << "," << num(f.py(z.imag()));
    }
    out << "\"/>\n";
  }
  for (size_t k = 0; k < c.base_points.size(); ++k) {
    const auto z = c.base_points[k].center.to_std();
    out << "<circle cx=\"" << num(f.px(z.real())) << "\" cy=\"" << num(f.py(z.imag())) << "\" r=\"3\" fill=\""
        << kPalette[colour[k] % 8] << "\"/>\n";
  }
  for (int k : c.fixed_points) {
    const auto z = c.base_points[k].center.to_std();
    out << "<circle cx=\"" << num(f.px(z.real())) << "\" cy=\"" << num(f.py(z.imag()))
        << "\" r=\"7\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\"/>\n";
  }
}

}  // namespace

std::string render_svg(const MonodromyReport& r) {
  std::ostringstream out;
  const double width = 2 * kPanel + 4 * kMargin;
  const double height = kPanel + 2 * kMargin + 24;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
      << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  out << "<title>" << escape(r.germ) << "</title>\n";
  cerf_panel(out, r);
  orbit_panel(out, r);
  out << "</svg>\n";
  return out.str();
}

void emit_svg(const MonodromyReport& r, const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::invalid_argument, "cannot open " + path + " for writing");
  file << render_svg(r);
  if (!file) throw Error(ErrorKind::invalid_argument, "failed writing " + path);
}

}  // namespace germ
