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

// JSON reports of checks: {check, params, verdict, details, elapsed_ms}.

#ifndef MINPRES_REPORT_HPP_
#define MINPRES_REPORT_HPP_

#include <cstddef>  // for std::size_t
#include <string>   // for std::string
#include <vector>   // for std::vector

#include <json.hpp>

#include "lemmas.hpp"
#include "todd_coxeter.hpp"
#include "verification.hpp"

namespace minpres {

  using json = nlohmann::ordered_json;

  enum class Status { pass, fail, inconclusive };

  //! Process exit code for a status: 0, 1, or 3.
  inline constexpr int exit_code(Status s) {
    switch (s) {
      case Status::pass: return 0;
      case Status::fail: return 1;
      case Status::inconclusive: return 3;
    }
    return 1;
  }

  //! The worse of two statuses; a failure outranks an inconclusive result.
  inline constexpr Status combine(Status a, Status b) {
    if (a == Status::fail || b == Status::fail) {
      return Status::fail;
    } else if (a == Status::inconclusive || b == Status::inconclusive) {
      return Status::inconclusive;
    }
    return Status::pass;
  }

  struct Report {
    std::string check;
    json        params  = json::object();
    std::string verdict;
    json        details = json::object();
    double      elapsed_ms = 0;
    Status      status     = Status::inconclusive;

    //! With \p timings false elapsed_ms is written as 0, so that equal
    //! inputs give byte-identical output.
    [[nodiscard]] json to_json(bool timings = true) const {
      json out;
      out["check"]      = check;
      out["params"]     = params;
      out["verdict"]    = verdict;
      out["details"]    = details;
      out["elapsed_ms"] = timings ? static_cast<std::size_t>(elapsed_ms) : 0;
      return out;
    }
  };

  inline json to_json(PresentedMonoidResult const& r) {
    json out;
    out["backend"] = r.backend;
    out["outcome"] = outcome_name(r.outcome);
    if (r.finite()) {
      out["size"] = r.size;
    }
    out["limit"]      = r.limit;
    out["max_active"] = r.stats.max_active;
    return out;
  }

  inline Report make_report(VerificationReport const& v, json params) {
    Report r;
    r.check      = "verify";
    r.params     = std::move(params);
    r.verdict    = verdict_name(v.verdict);
    r.elapsed_ms = v.elapsed_ms;
    r.status     = v.verdict == Verdict::verified       ? Status::pass
                   : v.verdict == Verdict::inconclusive ? Status::inconclusive
                                                        : Status::fail;
    auto& d                 = r.details;
    d["target"]             = to_string(v.spec);
    d["target_size"]        = v.target;
    d["generated"] = v.surjectivity_checked ? json(v.generated) : json(nullptr);
    d["presented"]          = v.presented ? json(*v.presented) : json(nullptr);
    d["limit"]              = v.limit;
    d["relations"]          = v.labels.size();
    d["soundness_failures"] = v.soundness_failures;
    d["outside_target"]     = v.outside_target;
    d["attempts"]           = json::array();
    for (auto const& a : v.attempts) {
      d["attempts"].push_back(to_json(a));
    }
    if (v.cross_check) {
      d["cross_check"]        = to_json(*v.cross_check);
      d["cross_check_agrees"] = v.cross_check_agrees();
    }
    return r;
  }

  inline Report make_report(AltGroupReport const& a) {
    Report r;
    r.check               = "alt-group";
    r.params["id"]        = alt_lemma_name(a.lemma);
    r.params["n"]         = a.degree;
    r.status              = a.pass() ? Status::pass : Status::fail;
    r.verdict             = a.pass() ? "PASS" : "FAIL";
    r.details["generators"] = a.generators;
    r.details["points"]     = a.points;
    r.details["size"]       = a.size;
    r.details["expected"]   = a.expected;
    r.details["all_even"]   = a.all_even;
    r.details["supported"]  = a.supported;
    r.details["transitive"] = a.transitive;
    return r;
  }

  inline Report make_report(std::string const&                group,
                            std::size_t                       n,
                            std::vector<IdentityCheck> const& checks) {
    Report r;
    r.check         = "identities";
    r.params["id"]  = group;
    r.params["n"]   = n;
    bool        ok  = true;
    std::size_t bad = 0;
    r.details["identities"] = json::array();
    for (auto const& c : checks) {
      ok = ok && c.pass();
      bad += c.pass() ? 0 : 1;
      r.details["identities"].push_back({{"statement", c.statement},
                                         {"stated", c.stated},
                                         {"computed", c.computed},
                                         {"pass", c.pass()}});
    }
    r.details["failures"] = bad;
    r.status              = ok ? Status::pass : Status::fail;
    r.verdict             = ok ? "PASS" : "FAIL";
    return r;
  }

  inline Report make_report(MonoidFamily                     family,
                            std::size_t                      n,
                            std::vector<WitnessCheck> const& checks) {
    Report r;
    r.check               = "witnesses";
    r.params["family"]    = monoid_family_name(family);
    r.params["n"]         = n;
    std::size_t passed    = 0;
    r.details["cases"]    = json::array();
    for (auto const& c : checks) {
      passed += c.pass() ? 1 : 0;
      r.details["cases"].push_back(
          {{"id", c.id},
           {"w1", c.w1},
           {"w2", c.w2},
           {"value", minpres::to_string(c.expected)},
           {"kernel", c.expected_kernel.to_string()},
           {"separation", separation_name(c.separation)},
           {"equal_values", c.equal_values},
           {"rank_ok", c.rank_ok},
           {"kernel_ok", c.kernel_ok},
           {"separated", c.separated},
           {"pass", c.pass()}});
    }
    r.details["passed"] = passed;
    r.details["total"]  = checks.size();
    bool ok  = passed == checks.size() && !checks.empty();
    r.status = ok ? Status::pass : Status::fail;
    r.verdict = ok ? "PASS" : "FAIL";
    return r;
  }

  //! An irredundancy probe passes when the relation is shown irredundant.
  inline Report make_report(IrredundancyReport const& i, json params) {
    Report r;
    r.check      = "redundancy";
    r.params     = std::move(params);
    r.params["relation"] = i.label;
    r.verdict    = redundancy_name(i.verdict);
    r.elapsed_ms = i.elapsed_ms;
    r.status     = i.verdict == Redundancy::irredundant ? Status::pass
                   : i.verdict == Redundancy::redundant ? Status::fail
                                                        : Status::inconclusive;
    r.details["certificate"] = certificate_name(i.certificate);
    r.details["target_size"] = i.target;
    r.details["reference_nodes"]   = i.reference_nodes;
    r.details["reference_backend"] = i.reference_backend;
    r.details["budget"]            = i.budget;
    r.details["size"]        = i.size ? json(*i.size) : json(nullptr);
    r.details["attempts"]    = json::array();
    for (auto const& a : i.attempts) {
      r.details["attempts"].push_back(to_json(a));
    }
    return r;
  }

  inline Report make_report(CosetInvarianceReport const& c, json params) {
    Report r;
    r.check                  = "coset-invariance";
    r.params                 = std::move(params);
    r.status                 = c.pass() ? Status::pass : Status::fail;
    r.verdict                = c.pass() ? "PASS" : "FAIL";
    r.details["words"]       = c.words;
    r.details["rank_words"]  = c.rank_words;
    r.details["classes"]     = c.classes;
    r.details["violations"]  = c.violations;
    return r;
  }

  //! One line per report: check, parameters, verdict.
  inline std::string to_text_line(Report const& r) {
    std::string out = r.check;
    for (auto const& [k, v] : r.params.items()) {
      out += ' ' + k + '=' + (v.is_string() ? v.get<std::string>() : v.dump());
    }
    return out + " : " + r.verdict;
  }

}  // namespace minpres

#endif  // MINPRES_REPORT_HPP_
