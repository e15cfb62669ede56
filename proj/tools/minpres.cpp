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

// Command line interface: verify presentations, check lemmas, enumerate,
// measure, probe irredundancy, and search for derivations.

#include <cstdlib>     // for std::getenv, EXIT_SUCCESS
#include <exception>   // for std::exception
#include <functional>  // for std::function
#include <future>      // for std::async, std::future
#include <iomanip>     // for std::setw
#include <iostream>    // for std::cout, std::cerr
#include <optional>    // for std::optional
#include <string>      // for std::string
#include <vector>      // for std::vector

#include <CLI11.hpp>

#include "minpres/derivation.hpp"
#include "minpres/froidure_pin.hpp"
#include "minpres/io.hpp"
#include "minpres/lemmas.hpp"
#include "minpres/presets.hpp"
#include "minpres/report.hpp"
#include "minpres/suite.hpp"
#include "minpres/verification.hpp"

namespace {

  using namespace minpres;

  constexpr int EXIT_USAGE = 2;

  struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
  };

  struct Config {
    std::string              family;
    std::string              preset;
    std::vector<std::size_t> degrees;
    std::string              sn     = "moore";
    std::string              format = "text";
    std::size_t              limit     = 0;
    std::size_t              max_nodes = 0;
    std::size_t              jobs      = 1;
    bool                     timings   = false;
    bool                     verbose   = false;

    // verify
    std::string suite;
    bool        cross_check    = false;
    bool        soundness_only = false;
    bool        stretch        = false;
    // lemma
    std::string id;
    std::string witnesses;
    bool        all = false;
    // redundancy
    std::string relation;
    // derive
    std::string from;
    std::string to;
    std::size_t max_steps = 8;
    std::size_t max_len   = 80;
    // enumerate, show
    bool dump = false;
  };

  std::size_t env_size(char const* name) {
    if (auto const* v = std::getenv(name)) {
      try {
        return std::stoul(v);
      } catch (std::exception const&) {
        throw UsageError(std::string("bad value of ") + name);
      }
    }
    return 0;
  }

  std::optional<MonoidFamily> family_of(Config const& cfg) {
    if (cfg.family.empty()) {
      return std::nullopt;
    }
    try {
      return monoid_family_from_name(cfg.family);
    } catch (std::invalid_argument const& e) {
      throw UsageError(e.what());
    }
  }

  SnKind sn_of(Config const& cfg) {
    try {
      return sn_kind_from_name(cfg.sn);
    } catch (std::invalid_argument const& e) {
      throw UsageError(e.what());
    }
  }

  std::vector<std::size_t> degrees_of(Config const& cfg) {
    if (cfg.degrees.empty()) {
      throw UsageError("--n is required");
    }
    return cfg.degrees;
  }

  PresetInstance instance(Config const& cfg, std::size_t n) {
    if (cfg.preset.empty()) {
      throw UsageError("--preset is required");
    }
    try {
      auto f = family_of(cfg);
      return build_preset(preset_from_name(cfg.preset, f), n, sn_of(cfg), f);
    } catch (std::invalid_argument const& e) {
      throw UsageError(e.what());
    }
  }

  json params_of(Config const& cfg, PresetInstance const& inst) {
    json p;
    p["preset"] = cfg.preset;
    p["family"] = monoid_family_name(inst.target.family);
    p["n"]      = inst.target.degree;
    p["sn"]     = inst.target.degree <= 3 ? std::string("small") : cfg.sn;
    return p;
  }

  // Run jobs, at most cfg.jobs at a time, keeping submission order.
  std::vector<Report> run_jobs(Config const&                           cfg,
                               std::vector<std::function<Report()>> const& jobs) {
    std::vector<Report> out;
    auto const          width = std::max<std::size_t>(1, cfg.jobs);
    for (std::size_t i = 0; i < jobs.size(); i += width) {
      std::vector<std::future<Report>> batch;
      for (std::size_t j = i; j < std::min(jobs.size(), i + width); ++j) {
        batch.push_back(std::async(
            width == 1 ? std::launch::deferred : std::launch::async, jobs[j]));
      }
      for (auto& f : batch) {
        out.push_back(f.get());
      }
    }
    return out;
  }

  std::string details_text(Report const& r) {
    std::string out;
    for (auto const& [k, v] : r.details.items()) {
      if (v.is_array() && !v.empty() && v.front().is_object()) {
        continue;
      }
      if (v.is_object()) {
        continue;
      }
      out += "  " + k + ": " + (v.is_string() ? v.get<std::string>() : v.dump())
             + "\n";
    }
    return out;
  }

  int emit(Config const& cfg, std::vector<Report> const& reports) {
    Status status = Status::pass;
    for (auto const& r : reports) {
      status = combine(status, r.status);
    }
    if (cfg.format == "json") {
      if (reports.size() == 1) {
        std::cout << reports.front().to_json(cfg.timings).dump(2) << '\n';
      } else {
        auto arr = json::array();
        for (auto const& r : reports) {
          arr.push_back(r.to_json(cfg.timings));
        }
        std::cout << arr.dump(2) << '\n';
      }
    } else {
      for (auto const& r : reports) {
        std::cout << to_text_line(r) << '\n';
        if (cfg.verbose || reports.size() == 1) {
          std::cout << details_text(r);
        }
      }
    }
    return exit_code(status);
  }

  ProgressCallback progress_of(Config const& cfg) {
    if (!cfg.verbose) {
      return {};
    }
    return [](ProgressEvent const& e) {
      std::cerr << e.phase << ": " << e.count << " defined, " << e.active
                << " active, " << e.seconds << "s\n";
    };
  }

  int run_suite(Config const& cfg) {
    if (cfg.suite != "acceptance") {
      throw UsageError("unknown suite \"" + cfg.suite + "\"");
    }
    SuiteOptions o;
    o.stretch = cfg.stretch;
    if (cfg.verbose) {
      o.log = [](std::string const& s) { std::cerr << s << '\n'; };
    }
    Suite  suite(o);
    Status status = Status::pass;
    auto   arr    = json::array();
    for (std::size_t id = 1; id <= NUMBER_OF_CRITERIA; ++id) {
      auto c = suite.run(id);
      status = combine(status, c.status);
      if (cfg.format == "json") {
        json j;
        j["criterion"] = c.id;
        j["title"]     = c.title;
        j["verdict"]   = status_name(c.status);
        j["summary"]   = c.summary;
        j["checks"]    = json::array();
        for (auto const& r : c.reports) {
          j["checks"].push_back(r.to_json(cfg.timings));
        }
        arr.push_back(j);
      } else {
        std::cout << std::setw(3) << c.id << "  " << std::left
                  << std::setw(13) << status_name(c.status) << std::setw(58)
                  << c.title << std::right << c.summary << std::endl;
      }
    }
    if (cfg.format == "json") {
      std::cout << arr.dump(2) << '\n';
    }
    return exit_code(status);
  }

  int cmd_verify(Config const& cfg) {
    if (!cfg.suite.empty()) {
      return run_suite(cfg);
    }
    std::vector<std::function<Report()>> jobs;
    for (auto n : degrees_of(cfg)) {
      auto inst = instance(cfg, n);
      jobs.push_back([&cfg, inst] {
        VerifyOptions o;
        o.limit          = cfg.limit;
        o.max_nodes      = cfg.max_nodes;
        o.cross_check    = cfg.cross_check;
        o.soundness_only = cfg.soundness_only;
        o.progress       = progress_of(cfg);
        auto v           = verify_defines(inst.bound, inst.target, o);
        return make_report(v, params_of(cfg, inst));
      });
    }
    return emit(cfg, run_jobs(cfg, jobs));
  }

  std::vector<Report> lemma_matrix() {
    std::vector<Report> out;
    for (auto l : ALL_ALT_LEMMAS) {
      for (auto n :
           alt_lemma_range(l).smallest(l == AltLemma::cycles_12i ? 3 : 2)) {
        out.push_back(make_report(alt_group_lemma_check(l, n)));
      }
    }
    for (auto const& g : identity_groups()) {
      for (auto n : identity_range(g).smallest(3)) {
        out.push_back(make_report(g, n, intermediate_identity_check(g, n)));
      }
    }
    for (auto f : {MonoidFamily::in, MonoidFamily::tn, MonoidFamily::ptn}) {
      for (std::size_t n : {4, 5}) {
        out.push_back(make_report(f, n, lower_bound_witnesses(f, moore(n))));
      }
    }
    return out;
  }

  int cmd_lemma(Config const& cfg) {
    if (cfg.all) {
      return emit(cfg, lemma_matrix());
    }
    std::vector<Report> out;
    try {
      if (!cfg.witnesses.empty()) {
        auto f = monoid_family_from_name(cfg.witnesses);
        for (auto n : degrees_of(cfg)) {
          auto sp = make_sn(sn_of(cfg), n);
          out.push_back(make_report(f, n, lower_bound_witnesses(f, sp)));
        }
      } else if (!cfg.id.empty()) {
        auto groups = identity_groups();
        for (auto n : degrees_of(cfg)) {
          bool is_lemma = false;
          for (auto l : ALL_ALT_LEMMAS) {
            if (alt_lemma_name(l) == cfg.id) {
              is_lemma = true;
              out.push_back(make_report(alt_group_lemma_check(l, n)));
            }
          }
          if (std::find(groups.begin(), groups.end(), cfg.id)
              != groups.end()) {
            auto range = identity_range(cfg.id);
            if (range.admits(n) || !is_lemma) {
              out.push_back(make_report(
                  cfg.id, n, intermediate_identity_check(cfg.id, n)));
            }
          } else if (!is_lemma) {
            throw UsageError("unknown lemma \"" + cfg.id + "\"");
          }
        }
      } else {
        throw UsageError("one of --id, --witnesses, --all is required");
      }
    } catch (UsageError const&) {
      throw;
    } catch (std::invalid_argument const& e) {
      throw UsageError(e.what());
    }
    return emit(cfg, out);
  }

  int cmd_enumerate(Config const& cfg) {
    std::vector<Report> out;
    for (auto n : degrees_of(cfg)) {
      Report r;
      r.check = "enumerate";
      if (cfg.preset.empty()) {
        auto f = family_of(cfg);
        if (!f) {
          throw UsageError("--family or --preset is required");
        }
        if (n == 0 || n > MAX_DEGREE) {
          throw UsageError("degree out of range");
        }
        auto sp = sn_presentation(sn_of(cfg), n);
        auto bp = detail::composite(sp,
                                    Family::custom,
                                    *f == MonoidFamily::tn
                                        || *f == MonoidFamily::ptn,
                                    *f == MonoidFamily::in
                                        || *f == MonoidFamily::ptn,
                                    {});
        auto limit = cfg.limit != 0 ? cfg.limit : DEFAULT_FP_LIMIT;
        auto m     = froidure_pin(bp.assignment, limit, progress_of(cfg));
        r.params["family"] = monoid_family_name(*f);
        r.params["n"]      = n;
        r.details["generators"] = bp.presentation.alphabet;
        if (m.complete()) {
          r.details["size"] = m.size();
          r.status          = Status::pass;
          r.verdict         = "FINITE";
          if (cfg.dump) {
            for (std::size_t i = 0; i < m.size(); ++i) {
              r.details["elements"].push_back(
                  {to_string(m.element(i)),
                   bp.presentation.word_to_string(m.word(i))});
            }
          }
        } else {
          r.status  = Status::inconclusive;
          r.verdict = "OVERFLOW";
        }
        r.details["limit"] = limit;
      } else {
        auto inst   = instance(cfg, n);
        auto target = order_of(inst.target);
        auto limit  = cfg.limit != 0 ? cfg.limit : 4 * target;
        ToddCoxeterOptions o;
        o.max_nodes = cfg.max_nodes != 0 ? cfg.max_nodes : DEFAULT_MAX_NODES;
        o.progress  = progress_of(cfg);
        auto res    = enumerate_presentation(inst.bound.presentation, limit, o);
        r.params    = params_of(cfg, inst);
        r.details   = to_json(res);
        r.status    = res.finite() ? Status::pass : Status::inconclusive;
        r.verdict   = res.finite() ? "FINITE" : "OVERFLOW";
      }
      out.push_back(std::move(r));
    }
    return emit(cfg, out);
  }

  int cmd_length(Config const& cfg) {
    std::vector<Report> out;
    for (auto n : degrees_of(cfg)) {
      auto        inst = instance(cfg, n);
      auto const& p    = inst.bound.presentation;
      Report      r;
      r.check                       = "length";
      r.params                      = params_of(cfg, inst);
      r.details["generators"]       = p.alphabet.size();
      r.details["relations"]        = p.relations.size();
      r.details["length"]           = presentation_length(p);
      r.details["non_sn_relations"] = non_sn_relation_count(p);
      r.details["non_sn_length"]    = non_sn_length(p);
      for (auto [rank, k] : rank_profile(p, inst.bound.assignment)) {
        r.details["ranks"][std::to_string(rank)] = k;
      }
      r.status  = Status::pass;
      r.verdict = std::to_string(presentation_length(p));
      out.push_back(std::move(r));
    }
    return emit(cfg, out);
  }

  int cmd_redundancy(Config const& cfg) {
    std::vector<std::function<Report()>> jobs;
    for (auto n : degrees_of(cfg)) {
      auto                     inst = instance(cfg, n);
      std::vector<std::string> labels;
      for (auto const& r : inst.bound.presentation.relations) {
        if (cfg.relation.empty() ? !is_sn_label(r.label)
                                 : canonical_label(cfg.relation) == r.label) {
          labels.push_back(r.label);
        }
      }
      if (labels.empty()) {
        throw UsageError("no relation \"" + cfg.relation + "\"");
      }
      for (auto const& label : labels) {
        jobs.push_back([&cfg, inst, label] {
          IrredundancyOptions o;
          o.max_nodes = cfg.max_nodes;
          o.progress  = progress_of(cfg);
          auto i = irredundancy_check(
              inst.bound.presentation, inst.target, label, o);
          return make_report(i, params_of(cfg, inst));
        });
      }
    }
    return emit(cfg, run_jobs(cfg, jobs));
  }

  int cmd_derive(Config const& cfg) {
    auto const n    = degrees_of(cfg).front();
    auto       inst = instance(cfg, n);
    auto const& p   = inst.bound.presentation;
    word_type  u, v;
    try {
      u = parse_word(inst.bound, cfg.from);
      v = parse_word(inst.bound, cfg.to);
    } catch (std::invalid_argument const& e) {
      throw UsageError(e.what());
    }
    auto   d = find_elementary_sequence(p, u, v, cfg.max_steps, cfg.max_len);
    Report r;
    r.check                = "derive";
    r.params               = params_of(cfg, inst);
    r.params["from"]       = cfg.from;
    r.params["to"]         = cfg.to;
    r.params["max_steps"]  = cfg.max_steps;
    r.params["max_length"] = cfg.max_len;
    r.details["from"]      = p.word_to_string(u);
    r.details["to"]        = p.word_to_string(v);
    if (d && check_derivation(p, u, v, *d)) {
      r.status  = Status::pass;
      r.verdict = "FOUND";
      r.details["steps"] = json::array();
      for (auto const& s : *d) {
        r.details["steps"].push_back(
            {{"position", s.position},
             {"relation", relation_name(p, s.relation)},
             {"direction", s.forward ? "lhs->rhs" : "rhs->lhs"},
             {"result", p.word_to_string(s.result)}});
      }
      if (cfg.format != "json") {
        std::cout << "   " << p.word_to_string(u) << '\n';
        for (auto const& s : *d) {
          std::cout << "-> " << p.word_to_string(s.result) << "   ["
                    << relation_name(p, s.relation) << (s.forward ? "" : "'")
                    << " at " << s.position << "]\n";
        }
      }
    } else {
      r.status  = Status::inconclusive;
      r.verdict = "NOT_FOUND";
    }
    return emit(cfg, {r});
  }

  int cmd_show(Config const& cfg) {
    auto inst = instance(cfg, degrees_of(cfg).front());
    if (cfg.format == "json") {
      std::cout << to_json(inst.bound.presentation).dump(2) << '\n';
    } else {
      std::cout << to_text(inst.bound.presentation);
    }
    return EXIT_SUCCESS;
  }

  void common(CLI::App* app, Config& cfg) {
    app->add_option("--family", cfg.family, "IN, TN or PTN");
    app->add_option("--preset",
                    cfg.preset,
                    "in3, in5, tn-aizenstat, tn4, tn5, pt-east, pt8, pt9, "
                    "small; or with --family a relation count such as 4rel");
    app->add_option("--n", cfg.degrees, "degree, or a comma separated list")
        ->delimiter(',');
    app->add_option("--sn", cfg.sn, "symmetric group presentation")
        ->check(CLI::IsMember({"moore", "carmichael", "moore-reduced"}));
    app->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app->add_option("--limit", cfg.limit, "largest size reported as finite")
        ->check(CLI::PositiveNumber);
    app->add_option("--max-nodes",
                    cfg.max_nodes,
                    "Todd-Coxeter node budget (default $MINPRES_MAX_NODES)")
        ->check(CLI::PositiveNumber);
    app->add_option("--jobs", cfg.jobs, "independent jobs run at once")
        ->check(CLI::PositiveNumber);
    app->add_flag("--timings", cfg.timings, "write elapsed times in JSON");
    app->add_flag("-v,--verbose", cfg.verbose, "progress on stderr");
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minpres: presentations for transformation monoids"};
  app.require_subcommand(1);
  Config cfg;

  auto* verify = app.add_subcommand("verify", "check that a presentation "
                                              "defines its monoid");
  common(verify, cfg);
  verify->add_option("--suite", cfg.suite, "run a named suite (acceptance)");
  verify->add_flag("--cross-check", cfg.cross_check,
                   "enumerate again with another strategy");
  verify->add_flag("--soundness-only", cfg.soundness_only,
                   "skip the enumeration");
  verify->add_flag("--stretch", cfg.stretch,
                   "with --suite, attempt the largest instances");

  auto* lemma = app.add_subcommand(
      "lemma", "alternating group generators, identities, and witnesses");
  common(lemma, cfg);
  lemma->add_option("--id", cfg.id, "lemma or identity group");
  lemma->add_option("--witnesses", cfg.witnesses, "IN, TN or PTN");
  lemma->add_flag("--all", cfg.all, "the full matrix");

  auto* enumerate = app.add_subcommand(
      "enumerate", "size of a monoid from generators or a presentation");
  common(enumerate, cfg);
  enumerate->add_flag("--dump", cfg.dump, "list the elements");

  auto* length = app.add_subcommand("length", "presentation length");
  common(length, cfg);

  auto* redundancy = app.add_subcommand(
      "redundancy", "whether each relation is needed");
  common(redundancy, cfg);
  redundancy->add_option("--relation", cfg.relation, "only this label");

  auto* derive = app.add_subcommand("derive", "search for an elementary "
                                              "sequence between two words");
  common(derive, cfg);
  derive->add_option("--from", cfg.from)->required();
  derive->add_option("--to", cfg.to)->required();
  derive->add_option("--max-steps", cfg.max_steps)
      ->check(CLI::PositiveNumber);
  derive->add_option("--max-length", cfg.max_len)
      ->check(CLI::PositiveNumber);

  auto* show = app.add_subcommand("show", "print a presentation");
  common(show, cfg);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    auto code = app.exit(e);
    return code == 0 ? 0 : EXIT_USAGE;
  }

  try {
    if (cfg.max_nodes == 0) {
      cfg.max_nodes = env_size("MINPRES_MAX_NODES");
    }
    if (cfg.limit == 0) {
      cfg.limit = env_size("MINPRES_LIMIT");
    }
    if (verify->parsed()) {
      return cmd_verify(cfg);
    } else if (lemma->parsed()) {
      return cmd_lemma(cfg);
    } else if (enumerate->parsed()) {
      return cmd_enumerate(cfg);
    } else if (length->parsed()) {
      return cmd_length(cfg);
    } else if (redundancy->parsed()) {
      return cmd_redundancy(cfg);
    } else if (derive->parsed()) {
      return cmd_derive(cfg);
    } else if (show->parsed()) {
      return cmd_show(cfg);
    }
  } catch (UsageError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return EXIT_USAGE;
  } catch (std::overflow_error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(Status::inconclusive);
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(Status::fail);
  }
  return EXIT_USAGE;
}
