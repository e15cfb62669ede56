//
// minpres - presentations for transformation monoids
// Copyright (C) 2026 minpres contributors
//
// This program is free software: you can redistribute it and/or modify
// it under the terms of the GNU General Public License as published by
// the Free Software Foundation, either version 3 of the License, or
// (at your option) any later version.
//
// This program is distributed in the hope that it will be useful,
// but WITHOUT ANY WARRANTY; without even the implied warranty of
// MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
// GNU General Public License for more details.
//
// You should have received a copy of the GNU General Public License
// along with this program.  If not, see <http://www.gnu.org/licenses/>.
//

// The acceptance run: one line per criterion, PASS, FAIL or INCONCLUSIVE.
// Exits with 1 if any criterion fails and 0 otherwise.

#include <cstdio>    // for std::printf
#include <fstream>   // for std::ofstream
#include <iostream>  // for std::cerr
#include <string>    // for std::string
#include <vector>    // for std::vector

#include <CLI11.hpp>

#include "minpres/suite.hpp"

int main(int argc, char** argv) {
  using namespace minpres;
  CLI::App                 app{"minpres acceptance criteria"};
  std::vector<std::size_t> only;
  std::string              json_path;
  bool                     stretch = false, verbose = false;
  app.add_option("--only", only, "run these criteria")
      ->delimiter(',')
      ->check(CLI::Range(std::size_t(1), NUMBER_OF_CRITERIA));
  app.add_option("--json", json_path, "write every report to this file");
  app.add_flag("--stretch", stretch, "also attempt PT_7 and T_9");
  app.add_flag("-v,--verbose", verbose, "progress on stderr");
  CLI11_PARSE(app, argc, argv);

  if (only.empty()) {
    for (std::size_t i = 1; i <= NUMBER_OF_CRITERIA; ++i) {
      only.push_back(i);
    }
  }

  std::printf("tolerances: sizes exact; time limits %gs (I_n), %gs "
              "(T_n, Aizenstat), %gs (T_7), %gs (East PT_n), %gs (PT_7), "
              "%gs (small degrees), %gs (lemmas); cross-checks up to %zu "
              "elements\n",
              time_limit::in_n,
              time_limit::aizenstat,
              time_limit::tn4_large,
              time_limit::east,
              time_limit::pt8_large,
              time_limit::small_total,
              time_limit::lemmas,
              CROSS_CHECK_MAX);
  std::fflush(stdout);

  SuiteOptions opts;
  opts.stretch = stretch;
  if (verbose) {
    opts.log = [](std::string const& s) { std::cerr << "  " << s << '\n'; };
  }
  Suite       suite(opts);
  json        all = json::array();
  std::size_t fails = 0, inconclusive = 0;
  for (auto id : only) {
    auto c = suite.run(id);
    std::printf("%-12s %2zu %s: %s (%.1fs)\n",
                std::string(status_name(c.status)).c_str(),
                c.id,
                c.title.c_str(),
                c.summary.c_str(),
                c.elapsed_ms / 1000);
    std::fflush(stdout);
    fails += c.status == Status::fail;
    inconclusive += c.status == Status::inconclusive;
    json j;
    j["criterion"] = c.id;
    j["title"]     = c.title;
    j["status"]    = status_name(c.status);
    j["summary"]   = c.summary;
    j["reports"]   = json::array();
    for (auto const& r : c.reports) {
      j["reports"].push_back(r.to_json(true));
    }
    all.push_back(std::move(j));
  }
  std::printf("%zu criteria: %zu pass, %zu fail, %zu inconclusive\n",
              only.size(),
              only.size() - fails - inconclusive,
              fails,
              inconclusive);
  if (!json_path.empty()) {
    std::ofstream(json_path) << all.dump(2) << '\n';
  }
  return fails == 0 ? 0 : 1;
}
