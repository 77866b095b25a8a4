#pragma once

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

namespace ilt {

/// Minimal scatter/line plot writer. Hermetic: no external charting
/// dependency, byte-stable output for given inputs.
class SvgPlot {
 public:
  SvgPlot(std::string title, std::string xlabel, std::string ylabel, bool logx, bool logy)
      : title_(std::move(title)),
        xlabel_(std::move(xlabel)),
        ylabel_(std::move(ylabel)),
        logx_(logx),
        logy_(logy) {}

  void add_points(const std::vector<std::pair<double, double>>& pts, const std::string& color) {
    series_.push_back({pts, color, false});
  }
  void add_line(const std::vector<std::pair<double, double>>& pts, const std::string& color) {
    series_.push_back({pts, color, true});
  }
  void annotate(const std::string& text) { annotation_ = text; }

  std::string render() const {
    const double W = 640, H = 480, ml = 70, mr = 20, mt = 40, mb = 50;
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& s : series_)
      for (auto [x, y] : s.pts) {
        double tx = tr(x, logx_), ty = tr(y, logy_);
        xmin = std::min(xmin, tx);
        xmax = std::max(xmax, tx);
        ymin = std::min(ymin, ty);
        ymax = std::max(ymax, ty);
      }
    if (xmax <= xmin) xmax = xmin + 1;
    if (ymax <= ymin) ymax = ymin + 1;
    auto px = [&](double x) { return ml + (tr(x, logx_) - xmin) / (xmax - xmin) * (W - ml - mr); };
    auto py = [&](double y) { return H - mb - (tr(y, logy_) - ymin) / (ymax - ymin) * (H - mt - mb); };

    std::ostringstream out;
    out.precision(6);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
        << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
        << title_ << "</text>\n";
    // axes
    out << "<line x1=\"" << ml << "\" y1=\"" << H - mb << "\" x2=\"" << W - mr << "\" y2=\""
        << H - mb << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << H - mb
        << "\" stroke=\"black\"/>\n";
    // tick labels at the extremes
    out << "<text x=\"" << ml << "\" y=\"" << H - mb + 18 << "\" font-size=\"11\">"
        << tick_label(xmin, logx_) << "</text>\n";
    out << "<text x=\"" << W - mr << "\" y=\"" << H - mb + 18
        << "\" text-anchor=\"end\" font-size=\"11\">" << tick_label(xmax, logx_) << "</text>\n";
    out << "<text x=\"" << ml - 6 << "\" y=\"" << H - mb << "\" text-anchor=\"end\" font-size=\"11\">"
        << tick_label(ymin, logy_) << "</text>\n";
    out << "<text x=\"" << ml - 6 << "\" y=\"" << mt + 8
        << "\" text-anchor=\"end\" font-size=\"11\">" << tick_label(ymax, logy_) << "</text>\n";
    out << "<text x=\"" << (W + ml) / 2 << "\" y=\"" << H - 10
        << "\" text-anchor=\"middle\" font-size=\"13\">" << xlabel_ << "</text>\n";
    out << "<text x=\"16\" y=\"" << H / 2
        << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 16 " << H / 2
        << ")\">" << ylabel_ << "</text>\n";
    for (const auto& s : series_) {
      if (s.is_line) {
        out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" points=\"";
        for (auto [x, y] : s.pts) out << px(x) << "," << py(y) << " ";
        out << "\"/>\n";
      } else {
        for (auto [x, y] : s.pts)
          out << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y)
              << "\" r=\"2.5\" fill=\"" << s.color << "\"/>\n";
      }
    }
    if (!annotation_.empty())
      out << "<text x=\"" << ml + 10 << "\" y=\"" << mt + 20 << "\" font-size=\"12\">"
          << annotation_ << "</text>\n";
    out << "</svg>\n";
    return out.str();
  }

 private:
  struct Series {
    std::vector<std::pair<double, double>> pts;
    std::string color;
    bool is_line;
  };

  static double tr(double v, bool log) { return log ? std::log10(v) : v; }
  static std::string tick_label(double v, bool log) {
    std::ostringstream s;
    s.precision(4);
    s << (log ? std::pow(10.0, v) : v);
    return s.str();
  }

  std::string title_, xlabel_, ylabel_;
  bool logx_, logy_;
  std::vector<Series> series_;
  std::string annotation_;
};

}  // namespace ilt
