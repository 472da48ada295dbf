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

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace tfsde {

// Tabular result of one CLI run.  Values render with 17 significant digits
// so the decimal text round-trips to the same double; the JSON mirror
// carries identical values under identical column names.
struct OutputRecord {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

std::string to_csv(const OutputRecord& rec);
std::string to_json(const OutputRecord& rec);

// "start:stop:count" -> strictly increasing uniform grid.
std::vector<double> parse_grid(const std::string& spec);

// Default output directory from TFSDE_OUT_DIR (empty = cwd).
std::string default_output_dir();

struct SvgCurve {
  std::vector<double> x;
  std::vector<double> y;
  std::string label;
};

// Minimal line plot: axes, ticks, legend and labels carried as text.
std::string render_svg(const std::vector<SvgCurve>& curves,
                       const std::string& title, const std::string& xlabel,
                       const std::string& ylabel);

}  // namespace tfsde
