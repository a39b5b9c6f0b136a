// Copyright 2026 The glzi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "glzi/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "glzi/error.hpp"

namespace glzi::svg {
namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 150.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 55.0;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", x);
  return buf;
}

std::ofstream open(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IOError, "cannot write " + path.string());
  return out;
}

void header(std::ofstream& out, const std::string& title, const std::string& x_label, const std::string& y_label) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" << title << "</text>\n"
      << "<text x=\"" << kLeft + (kWidth - kLeft - kRight) / 2 << "\" y=\"" << kHeight - 12
      << "\" text-anchor=\"middle\">" << x_label << "</text>\n"
      << "<text transform=\"translate(16," << kTop + (kHeight - kTop - kBottom) / 2
      << ") rotate(-90)\" text-anchor=\"middle\">" << y_label << "</text>\n";
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void pad() {
    if (!std::isfinite(lo)) lo = 0.0, hi = 1.0;
    if (hi - lo < 1e-12) lo -= 0.5, hi += 0.5;
  }
};

}  // namespace

void write_line_plot(const std::filesystem::path& path, const std::string& title, const std::string& x_label,
                     const std::string& y_label, const std::vector<Series>& series) {
  Range xr, yr;
  for (const auto& s : series) {
    for (double v : s.x) xr.add(v);
    for (std::size_t i = 0; i < s.y.size(); ++i) {
      const double e = i < s.error.size() ? s.error[i] : 0.0;
      yr.add(s.y[i] - e);
      yr.add(s.y[i] + e);
    }
  }
  xr.pad();
  yr.pad();
  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
  auto py = [&](double y) { return kTop + ph - (y - yr.lo) / (yr.hi - yr.lo) * ph; };

  auto out = open(path);
  header(out, title, x_label, y_label);
  out << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double xv = xr.lo + (xr.hi - xr.lo) * i / 4.0;
    const double yv = yr.lo + (yr.hi - yr.lo) * i / 4.0;
    out << "<text x=\"" << px(xv) << "\" y=\"" << kTop + ph + 16 << "\" text-anchor=\"middle\">" << num(xv)
        << "</text>\n";
    out << "<text x=\"" << kLeft - 6 << "\" y=\"" << py(yv) + 4 << "\" text-anchor=\"end\">" << num(yv)
        << "</text>\n";
  }
  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    const char* color = kPalette[k % std::size(kPalette)];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\""
        << (s.dashed ? " stroke-dasharray=\"6,4\"" : "") << " points=\"";
    for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i)
      if (std::isfinite(s.y[i])) out << px(s.x[i]) << ',' << py(s.y[i]) << ' ';
    out << "\"/>\n";
    for (std::size_t i = 0; i < std::min(s.x.size(), s.error.size()); ++i)
      out << "<line x1=\"" << px(s.x[i]) << "\" x2=\"" << px(s.x[i]) << "\" y1=\"" << py(s.y[i] - s.error[i])
          << "\" y2=\"" << py(s.y[i] + s.error[i]) << "\" stroke=\"" << color << "\"/>\n";
    const double ly = kTop + 14.0 + 16.0 * static_cast<double>(k);
    out << "<line x1=\"" << kWidth - kRight + 10 << "\" x2=\"" << kWidth - kRight + 30 << "\" y1=\"" << ly - 4
        << "\" y2=\"" << ly - 4 << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n"
        << "<text x=\"" << kWidth - kRight + 34 << "\" y=\"" << ly << "\" font-size=\"10\">" << s.name << "</text>\n";
  }
  out << "</svg>\n";
}

void write_heatmap(const std::filesystem::path& path, const std::string& title, const std::string& x_label,
                   const std::string& y_label, const std::vector<double>& xs, const std::vector<double>& ys,
                   const std::vector<double>& values) {
  if (values.size() != xs.size() * ys.size() || xs.empty() || ys.empty())
    throw Error(ErrorCode::DimensionMismatch, "heatmap values do not match the grid");
  Range vr;
  for (double v : values) vr.add(v);
  vr.pad();
  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  const double cw = pw / static_cast<double>(xs.size());
  const double ch = ph / static_cast<double>(ys.size());

  auto color = [&](double v) {
    // blue -> white -> red
    const double s = std::clamp((v - vr.lo) / (vr.hi - vr.lo), 0.0, 1.0);
    const int r = s < 0.5 ? static_cast<int>(255 * 2 * s) : 255;
    const int b = s > 0.5 ? static_cast<int>(255 * 2 * (1 - s)) : 255;
    const int g = static_cast<int>(255 * (1.0 - std::abs(2 * s - 1)));
    char buf[16];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
    return std::string(buf);
  };

  auto out = open(path);
  header(out, title, x_label, y_label);
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j)
      out << "<rect x=\"" << kLeft + cw * static_cast<double>(i) << "\" y=\""
          << kTop + ph - ch * static_cast<double>(j + 1) << "\" width=\"" << cw + 0.3 << "\" height=\"" << ch + 0.3
          << "\" fill=\"" << color(values[i * ys.size() + j]) << "\"/>\n";
  out << "<text x=\"" << kLeft << "\" y=\"" << kTop + ph + 16 << "\">" << num(xs.front()) << "</text>\n"
      << "<text x=\"" << kLeft + pw << "\" y=\"" << kTop + ph + 16 << "\" text-anchor=\"end\">" << num(xs.back())
      << "</text>\n"
      << "<text x=\"" << kLeft - 6 << "\" y=\"" << kTop + ph << "\" text-anchor=\"end\">" << num(ys.front())
      << "</text>\n"
      << "<text x=\"" << kLeft - 6 << "\" y=\"" << kTop + 10 << "\" text-anchor=\"end\">" << num(ys.back())
      << "</text>\n"
      << "<text x=\"" << kWidth - kRight + 10 << "\" y=\"" << kTop + 14 << "\">max " << num(vr.hi) << "</text>\n"
      << "<text x=\"" << kWidth - kRight + 10 << "\" y=\"" << kTop + 30 << "\">min " << num(vr.lo) << "</text>\n"
      << "</svg>\n";
}

}  // namespace glzi::svg
