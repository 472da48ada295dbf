/*
   Copyright 2026 the tfsde authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "tfsde/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace tfsde {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string to_csv(const OutputRecord& rec) {
  std::ostringstream out;
  for (std::size_t i = 0; i < rec.columns.size(); ++i) {
    if (i) out << ',';
    out << rec.columns[i];
  }
  out << '\n';
  for (const auto& row : rec.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << fmt17(row[i]);
    }
    out << '\n';
  }
  return out.str();
}

std::string to_json(const OutputRecord& rec) {
  nlohmann::json j;
  j["command"] = rec.command;
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : rec.params) params[k] = v;
  j["params"] = params;
  j["columns"] = rec.columns;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : rec.rows) rows.push_back(row);
  j["rows"] = rows;
  return j.dump(2) + "\n";
}

std::vector<double> parse_grid(const std::string& spec) {
  double start, stop;
  int count;
  char c1, c2;
  std::istringstream in(spec);
  if (!(in >> start >> c1 >> stop >> c2 >> count) || c1 != ':' || c2 != ':')
    throw std::domain_error("grid spec must be start:stop:count");
  if (count < 1) throw std::domain_error("grid spec: count must be >= 1");
  if (count > 1 && !(stop > start))
    throw std::domain_error("grid spec: require stop > start");
  std::vector<double> g(count);
  if (count == 1) {
    g[0] = start;
    return g;
  }
  for (int i = 0; i < count; ++i)
    g[i] = start + (stop - start) * i / (count - 1);
  return g;
}

std::string default_output_dir() {
  const char* d = std::getenv("TFSDE_OUT_DIR");
  return d ? d : "";
}

namespace {

struct Ticks {
  std::vector<double> at;
};

Ticks nice_ticks(double lo, double hi) {
  Ticks t;
  double span = hi - lo;
  if (!(span > 0)) {
    t.at = {lo};
    return t;
  }
  double raw = span / 6.0;
  double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (mag * m >= raw) {
      step = mag * m;
      break;
    }
  }
  double first = std::ceil(lo / step) * step;
  for (double v = first; v <= hi + 1e-12 * span; v += step) t.at.push_back(v);
  return t;
}

std::string fmt_tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

}  // namespace

std::string render_svg(const std::vector<SvgCurve>& curves,
                       const std::string& title, const std::string& xlabel,
                       const std::string& ylabel) {
  const double width = 960, height = 600;
  const double ml = 80, mr = 170, mt = 50, mb = 60;
  const double pw = width - ml - mr, ph = height - mt - mb;

  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const auto& c : curves) {
    for (double v : c.x) {
      xmin = std::min(xmin, v);
      xmax = std::max(xmax, v);
    }
    for (double v : c.y) {
      ymin = std::min(ymin, v);
      ymax = std::max(ymax, v);
    }
  }
  if (!(xmax > xmin)) xmax = xmin + 1;
  if (!(ymax > ymin)) ymax = ymin + 1;
  double ypad = 0.05 * (ymax - ymin);
  ymin -= ypad;
  ymax += ypad;

  auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * pw; };
  auto py = [&](double y) { return mt + (ymax - y) / (ymax - ymin) * ph; };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
    << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
    << height << "\">\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s << "<text x=\"" << width / 2 << "\" y=\"28\" text-anchor=\"middle\" "
       "font-size=\"18\" font-family=\"sans-serif\">"
    << title << "</text>\n";

  // axes
  s << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << pw
    << "\" height=\"" << ph << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (double v : nice_ticks(xmin, xmax).at) {
    double x = px(v);
    s << "<line x1=\"" << x << "\" y1=\"" << mt + ph << "\" x2=\"" << x
      << "\" y2=\"" << mt + ph + 6 << "\" stroke=\"black\"/>\n";
    s << "<text x=\"" << x << "\" y=\"" << mt + ph + 22
      << "\" text-anchor=\"middle\" font-size=\"12\" "
         "font-family=\"sans-serif\">"
      << fmt_tick(v) << "</text>\n";
  }
  for (double v : nice_ticks(ymin, ymax).at) {
    double y = py(v);
    s << "<line x1=\"" << ml - 6 << "\" y1=\"" << y << "\" x2=\"" << ml
      << "\" y2=\"" << y << "\" stroke=\"black\"/>\n";
    s << "<text x=\"" << ml - 10 << "\" y=\"" << y + 4
      << "\" text-anchor=\"end\" font-size=\"12\" "
         "font-family=\"sans-serif\">"
      << fmt_tick(v) << "</text>\n";
  }
  s << "<text x=\"" << ml + pw / 2 << "\" y=\"" << height - 14
    << "\" text-anchor=\"middle\" font-size=\"14\" "
       "font-family=\"sans-serif\">"
    << xlabel << "</text>\n";
  s << "<text x=\"20\" y=\"" << mt + ph / 2
    << "\" text-anchor=\"middle\" font-size=\"14\" "
       "font-family=\"sans-serif\" transform=\"rotate(-90 20 "
    << mt + ph / 2 << ")\">" << ylabel << "</text>\n";

  for (std::size_t ci = 0; ci < curves.size(); ++ci) {
    const auto& c = curves[ci];
    const char* color = kPalette[ci % 8];
    s << "<polyline fill=\"none\" stroke=\"" << color
      << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < c.x.size(); ++i) {
      char buf[48];
      std::snprintf(buf, sizeof(buf), "%.6g,%.6g ", px(c.x[i]), py(c.y[i]));
      s << buf;
    }
    s << "\"/>\n";
    double ly = mt + 18 + 20.0 * ci;
    s << "<line x1=\"" << ml + pw + 12 << "\" y1=\"" << ly << "\" x2=\""
      << ml + pw + 40 << "\" y2=\"" << ly << "\" stroke=\"" << color
      << "\" stroke-width=\"2\"/>\n";
    s << "<text x=\"" << ml + pw + 46 << "\" y=\"" << ly + 4
      << "\" font-size=\"12\" font-family=\"sans-serif\">" << c.label
      << "</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace tfsde
