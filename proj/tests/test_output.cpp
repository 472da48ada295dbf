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

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>

#include <nlohmann/json.hpp>

#include "tfsde/output.hpp"

using namespace tfsde;

TEST_SUITE_BEGIN("output");

namespace {
OutputRecord sample_record() {
  OutputRecord rec;
  rec.command = "demo";
  rec.params = {{"beta", "0.5"}, {"seed", "42"}};
  rec.columns = {"x", "value"};
  rec.rows = {{0.1, 1.0 / 3.0},
              {-2.5, 6.02214076e23},
              {1e-300, -0.28209479177387814},
              {M_PI, std::exp(1.0)}};
  return rec;
}
}  // namespace

TEST_CASE("grid parsing") {
  auto g = parse_grid("0:1:5");
  REQUIRE(g.size() == 5);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == 1.0);
  CHECK(g[1] == doctest::Approx(0.25));
  CHECK(parse_grid("2:2:1").size() == 1);
  CHECK_THROWS_AS(parse_grid("1:0:5"), std::domain_error);
  CHECK_THROWS_AS(parse_grid("1-0-5"), std::domain_error);
  CHECK_THROWS_AS(parse_grid("0:1:0"), std::domain_error);
}

TEST_CASE("csv round-trips every double exactly") {
  auto rec = sample_record();
  std::string csv = to_csv(rec);
  std::istringstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "x,value");
  for (const auto& row : rec.rows) {
    std::string line;
    REQUIRE(std::getline(in, line));
    auto comma = line.find(',');
    double a = std::strtod(line.substr(0, comma).c_str(), nullptr);
    double b = std::strtod(line.substr(comma + 1).c_str(), nullptr);
    CHECK(a == row[0]);
    CHECK(b == row[1]);
  }
}

TEST_CASE("csv and json carry identical values") {
  auto rec = sample_record();
  auto j = nlohmann::json::parse(to_json(rec));
  CHECK(j["command"] == "demo");
  CHECK(j["params"]["beta"] == "0.5");
  REQUIRE(j["rows"].size() == rec.rows.size());
  for (std::size_t i = 0; i < rec.rows.size(); ++i)
    for (std::size_t k = 0; k < rec.rows[i].size(); ++k)
      CHECK(j["rows"][i][k].get<double>() == rec.rows[i][k]);
}

TEST_CASE("rendering is deterministic") {
  auto rec = sample_record();
  CHECK(to_csv(rec) == to_csv(rec));
  CHECK(to_json(rec) == to_json(rec));
}

TEST_CASE("svg plot has the structural pieces") {
  SvgCurve c1{{0, 1, 2}, {0.5, 0.2, 0.1}, "beta=0.5"};
  SvgCurve c2{{0, 1, 2}, {0.3, 0.4, 0.0}, "beta=1"};
  std::string svg = render_svg({c1, c2}, "demo", "x", "G");
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("polyline") != std::string::npos);
  CHECK(svg.find("beta=0.5") != std::string::npos);
  CHECK(svg.find("beta=1") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(render_svg({c1, c2}, "demo", "x", "G") == svg);
}

TEST_SUITE_END();
