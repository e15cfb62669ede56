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

// The acceptance matrix: every presentation verified at its target
// degrees, the alternating group and identity checks, the lower bound
// witnesses, relation counts, irredundancy, and property checks.

#ifndef MINPRES_SUITE_HPP_
#define MINPRES_SUITE_HPP_

#include <chrono>      // for std::chrono
#include <cstddef>     // for std::size_t
#include <functional>  // for std::function
#include <limits>      // for std::numeric_limits
#include <map>         // for std::map
#include <random>      // for std::mt19937_64
#include <string>      // for std::string
#include <vector>      // for std::vector

#include "derivation.hpp"
#include "lemmas.hpp"
#include "presets.hpp"
#include "report.hpp"
#include "verification.hpp"

namespace minpres {

  //! Wall clock limits in seconds.
  namespace time_limit {
    inline constexpr double in_n        = 10;
    inline constexpr double aizenstat   = 60;
    inline constexpr double tn4_large   = 15 * 60;
    inline constexpr double east        = 2 * 60;
    inline constexpr double pt8_large   = 45 * 60;
    inline constexpr double small_total = 5 * 60;
    inline constexpr double lemmas      = 60;
    inline constexpr double none = std::numeric_limits<double>::infinity();
  }  // namespace time_limit

  //! Largest target for which the suite enumerates a second time with a
  //! different strategy.
  inline constexpr std::size_t CROSS_CHECK_MAX = 1'000'000;

  inline constexpr std::size_t NUMBER_OF_CRITERIA = 14;

  struct SuiteOptions {
    //! Also attempt PT_7 with eight relations and T_9 with four.
    bool        stretch         = false;
    std::size_t cross_check_max = CROSS_CHECK_MAX;
    //! Progress messages.
    std::function<void(std::string const&)> log;
  };

  struct CriterionResult {
    std::size_t         id = 0;
    std::string         title;
    Status              status = Status::inconclusive;
    std::string         summary;
    std::vector<Report> reports;
    double              elapsed_ms = 0;
  };

  inline std::string_view status_name(Status s) {
    switch (s) {
      case Status::pass: return "PASS";
      case Status::fail: return "FAIL";
      case Status::inconclusive: return "INCONCLUSIVE";
    }
    return "INCONCLUSIVE";
  }

  //! Runs criteria and keeps what later criteria depend on.
  class Suite {
   public:
    explicit Suite(SuiteOptions opts = {}) : _opts(std::move(opts)) {}

    //! The criteria, numbered 1 to NUMBER_OF_CRITERIA. The last one
    //! includes the agreement of the second enumerations made by the
    //! earlier ones, so it should be run last.
    CriterionResult run(std::size_t id) {
      auto            start = std::chrono::steady_clock::now();
      CriterionResult c;
      c.id     = id;
      c.status = Status::pass;
      if (id == 0 || id > NUMBER_OF_CRITERIA) {
        throw std::invalid_argument("no criterion " + std::to_string(id));
      }
      try {
        dispatch(c);
      } catch (std::exception const& e) {
        c.status = Status::fail;
        c.summary += (c.summary.empty() ? "" : "; ")
                     + std::string("error: ") + e.what();
      }
      c.elapsed_ms = detail::ms_since(start);
      return c;
    }

   private:
    void dispatch(CriterionResult& c) {
      switch (c.id) {
        case 1: in_three(c); break;
        case 2: in_five(c); break;
        case 3: aizenstat(c); break;
        case 4: tn_four(c); break;
        case 5: tn_five(c); break;
        case 6: east(c); break;
        case 7: pt_nine(c); break;
        case 8: pt_eight(c); break;
        case 9: small(c); break;
        case 10: lemmas(c); break;
        case 11: witnesses(c); break;
        case 12: counts(c); break;
        case 13: irredundancy(c); break;
        case 14: properties(c); break;
        default: break;
      }
    }

    struct CrossCheck {
      std::string instance;
      bool        attempted = false;
      bool        agrees    = false;
    };

    void log(std::string const& s) const {
      if (_opts.log) {
        _opts.log(s);
      }
    }

    static void fold(CriterionResult& c, Status s) {
      c.status = combine(c.status, s);
    }

    // Verify one instance; passes if VERIFIED with the expected size within
    // the time limit.
    Status verify(CriterionResult&            c,
                  Preset                      p,
                  std::size_t                 n,
                  std::uint64_t               expected,
                  double                      seconds,
                  SnKind                      kind   = SnKind::moore,
                  std::optional<MonoidFamily> family = std::nullopt) {
      auto inst = build_preset(p, n, kind, family);
      auto name = std::string(preset_name(p)) + "("
                  + to_string(inst.target) + ", "
                  + std::string(n <= 3 ? "small" : sn_kind_name(kind)) + ")";
      log("verify " + name);
      VerifyOptions o;
      o.cross_check = expected <= _opts.cross_check_max;
      auto v        = verify_defines(inst.bound, inst.target, o);
      json params;
      params["preset"] = preset_name(p);
      params["family"] = monoid_family_name(inst.target.family);
      params["n"]      = n;
      params["sn"]     = n <= 3 ? "small" : sn_kind_name(kind);
      auto r           = make_report(v, params);
      bool size_ok = v.target == expected && v.generated == expected
                     && v.presented && *v.presented == expected;
      // the cross-check is extra work, not part of the timed verification
      bool time_ok = v.elapsed_ms - v.cross_check_ms <= seconds * 1000;
      r.details["expected_size"] = expected;
      r.details["time_limit_s"]  = seconds;
      r.details["within_time"]   = time_ok;
      auto s = r.status;
      if (s == Status::pass && (!size_ok || !time_ok)) {
        s = Status::fail;
      }
      r.status = s;
      _cross.push_back({name, v.cross_check.has_value(),
                        v.cross_check_agrees()});
      c.summary += (c.summary.empty() ? "" : "; ") + name + " "
                   + std::string(verdict_name(v.verdict)) + " "
                   + (v.presented ? std::to_string(*v.presented) : "?")
                   + " in "
                   + std::to_string(static_cast<long>(v.elapsed_ms / 1000))
                   + "s";
      c.reports.push_back(std::move(r));
      fold(c, s);
      return s;
    }

    void in_three(CriterionResult& c) {
      c.title = "I_n, three relations";
      std::uint64_t sizes[] = {34, 209, 1546, 13327};
      for (std::size_t n = 3; n <= 6; ++n) {
        verify(c, Preset::in3, n, sizes[n - 3], time_limit::in_n);
      }
    }

    void in_five(CriterionResult& c) {
      c.title = "I_n, five relations";
      verify(c, Preset::in5, 4, 209, time_limit::in_n);
      verify(c, Preset::in5, 5, 1546, time_limit::in_n);
    }

    void aizenstat(CriterionResult& c) {
      c.title = "T_n, Aizenstat's relations, and a derivation";
      verify(c, Preset::tn_aizenstat, 4, 256, time_limit::aizenstat);
      verify(c, Preset::tn_aizenstat, 5, 3125, time_limit::aizenstat);
      verify(c, Preset::tn_aizenstat, 6, 46656, time_limit::aizenstat);

      std::size_t const n  = 7;
      auto              sp = moore(n);
      auto              bp = tn_aizenstat(sp);
      auto              z  = bp.presentation.letter("zeta");
      auto t = word_for_permutation(sp, cycle(n, {1, n}));
      auto u = concat({{z}, t, {z}, t});
      word_type v{z};
      log("derive zeta (1,7) zeta (1,7) = zeta");
      auto d = find_elementary_sequence(bp.presentation, u, v, 4, 80);
      Report r;
      r.check          = "derive";
      r.params["preset"] = "tn-aizenstat";
      r.params["n"]      = n;
      r.params["from"]   = "zeta (1,7) zeta (1,7)";
      r.params["to"]     = "zeta";
      bool ok = d && check_derivation(bp.presentation, u, v, *d);
      if (ok) {
        auto value = evaluate(u, bp.assignment);
        for (auto const& s : *d) {
          ok = ok && evaluate(s.result, bp.assignment) == value;
        }
        r.details["steps"] = d->size();
      }
      r.status  = ok ? Status::pass : Status::fail;
      r.verdict = ok ? "FOUND" : "NOT_FOUND";
      c.summary += std::string("; derivation ") + r.verdict;
      c.reports.push_back(r);
      fold(c, r.status);
    }

    void tn_four(CriterionResult& c) {
      c.title = "T_n, four relations";
      verify(c, Preset::tn4, 5, 3125, time_limit::none);
      verify(c,
             Preset::tn4,
             7,
             823543,
             time_limit::tn4_large,
             SnKind::carmichael);
      if (_opts.stretch) {
        auto before = c.status;
        verify(c,
               Preset::tn4,
               9,
               387420489,
               24 * 3600,
               SnKind::carmichael);
        // the larger degree is optional
        c.status = before;
      } else {
        c.summary += "; n = 9 not attempted";
      }
    }

    void tn_five(CriterionResult& c) {
      c.title = "T_n, five relations";
      verify(c, Preset::tn5, 5, 3125, time_limit::none);
      verify(c, Preset::tn5, 6, 46656, time_limit::none);
    }

    void east(CriterionResult& c) {
      c.title = "PT_n, East's relations";
      verify(c, Preset::pt_east, 4, 625, time_limit::east);
      verify(c, Preset::pt_east, 5, 7776, time_limit::east);
    }

    void pt_nine(CriterionResult& c) {
      c.title = "PT_n, nine relations";
      _pt9_ok = verify(c, Preset::pt9, 4, 625, time_limit::none)
                == Status::pass;
      _pt9_ok = verify(c, Preset::pt9, 5, 7776, time_limit::none)
                    == Status::pass
                && _pt9_ok;
    }

    void pt_eight(CriterionResult& c) {
      c.title = "PT_n, eight relations";
      bool sound = true;
      for (std::size_t n = 7; n <= 10; ++n) {
        auto bp = ptn_8rel(moore(n));
        auto f  = check_relations(bp.presentation, bp.assignment);
        Report r;
        r.check            = "soundness";
        r.params["preset"] = "pt8";
        r.params["n"]      = n;
        r.details["failures"] = f;
        r.status  = f.empty() ? Status::pass : Status::fail;
        r.verdict = f.empty() ? "PASS" : "FAIL";
        sound     = sound && f.empty();
        c.reports.push_back(r);
      }
      c.summary = std::string("relations hold for n = 7..10: ")
                  + (sound ? "yes" : "no") + "; nine relations verified for "
                  + "n = 4, 5: " + (_pt9_ok ? "yes" : "no");
      if (!sound || !_pt9_ok) {
        c.status = Status::fail;
        return;
      }
      if (_opts.stretch) {
        CriterionResult tmp;
        tmp.status = Status::pass;
        auto            s = verify(tmp,
                        Preset::pt8,
                        7,
                        2097152,
                        time_limit::pt8_large,
                        SnKind::carmichael);
        c.summary += "; " + tmp.summary;
        for (auto& r : tmp.reports) {
          c.reports.push_back(std::move(r));
        }
        c.status = s == Status::pass ? Status::pass : Status::inconclusive;
      } else {
        c.summary += "; n = 7 enumeration not attempted";
        c.status = Status::inconclusive;
      }
    }

    void small(CriterionResult& c) {
      c.title = "presentations for small degrees";
      auto start = std::chrono::steady_clock::now();
      for (std::size_t n = 1; n <= 3; ++n) {
        verify(c,
               Preset::small,
               n,
               order_of({MonoidFamily::in, n}),
               time_limit::small_total,
               SnKind::carmichael,
               MonoidFamily::in);
      }
      for (std::size_t n : {1, 2, 3, 4, 6}) {
        verify(c,
               Preset::small,
               n,
               order_of({MonoidFamily::tn, n}),
               time_limit::small_total,
               SnKind::carmichael,
               MonoidFamily::tn);
      }
      for (std::size_t n = 1; n <= 6; ++n) {
        verify(c,
               Preset::small,
               n,
               order_of({MonoidFamily::ptn, n}),
               time_limit::small_total,
               SnKind::carmichael,
               MonoidFamily::ptn);
      }
      if (detail::ms_since(start) > time_limit::small_total * 1000) {
        c.status = Status::fail;
        c.summary += "; over the time limit";
      }
    }

    void lemmas(CriterionResult& c) {
      c.title = "alternating group generators and permutation identities";
      auto        start  = std::chrono::steady_clock::now();
      std::size_t checks = 0, failed = 0;
      for (auto l : ALL_ALT_LEMMAS) {
        for (auto n : alt_lemma_range(l).smallest(
                 l == AltLemma::cycles_12i ? 3 : 2)) {
          auto r = make_report(alt_group_lemma_check(l, n));
          ++checks;
          failed += r.status == Status::pass ? 0 : 1;
          fold(c, r.status);
          c.reports.push_back(std::move(r));
        }
      }
      std::size_t identities = 0;
      for (auto const& g : identity_groups()) {
        for (auto n : identity_range(g).smallest(3)) {
          auto ids = intermediate_identity_check(g, n);
          identities += ids.size();
          auto r = make_report(g, n, ids);
          ++checks;
          failed += r.status == Status::pass ? 0 : 1;
          fold(c, r.status);
          c.reports.push_back(std::move(r));
        }
      }
      auto ms = detail::ms_since(start);
      if (ms > time_limit::lemmas * 1000) {
        fold(c, Status::fail);
      }
      c.summary = std::to_string(checks - failed) + "/"
                  + std::to_string(checks) + " checks pass, "
                  + std::to_string(identities) + " identities";
    }

    void witnesses(CriterionResult& c) {
      c.title = "lower bound witnesses";
      std::size_t passed = 0, total = 0;
      for (auto f : {MonoidFamily::in, MonoidFamily::tn, MonoidFamily::ptn}) {
        for (std::size_t n : {4, 5}) {
          auto w = lower_bound_witnesses(f, moore(n));
          auto r = make_report(f, n, w);
          passed += r.details["passed"].get<std::size_t>();
          total += w.size();
          fold(c, r.status);
          c.reports.push_back(std::move(r));
        }
      }
      // 1, 2, and 4 cases at each degree
      if (total != 2 * (1 + 2 + 4)) {
        fold(c, Status::fail);
      }
      c.summary = std::to_string(passed) + "/" + std::to_string(total)
                  + " witnesses pass";
    }

    void counts(CriterionResult& c) {
      c.title = "relation counts and ranks";
      struct Expect {
        Preset      preset;
        std::size_t total;
        // relations of rank n - 1 and n - 2; zero if not checked
        std::size_t r1;
        std::size_t r2;
      };
      std::vector<Expect> table = {{Preset::in3, 3, 2, 1},
                                   {Preset::tn4, 4, 2, 2},
                                   {Preset::pt8, 8, 4, 4},
                                   {Preset::pt_east, 12, 0, 0},
                                   {Preset::tn_aizenstat, 7, 4, 3},
                                   {Preset::in5, 5, 3, 2}};
      for (std::size_t n : {7, 8}) {
        for (auto const& e : table) {
          auto inst  = build_preset(e.preset, n, SnKind::moore);
          auto& p    = inst.bound.presentation;
          auto count = non_sn_relation_count(p);
          auto prof  = rank_profile(p, inst.bound.assignment);
          bool ok    = count == e.total;
          if (e.r1 != 0) {
            ok = ok && prof[n - 1] == e.r1 && prof[n - 2] == e.r2
                 && prof.size() == 2;
          }
          Report r;
          r.check            = "counts";
          r.params["preset"] = preset_name(e.preset);
          r.params["n"]      = n;
          r.details["non_sn_relations"] = count;
          for (auto [rank, k] : prof) {
            r.details["ranks"][std::to_string(rank)] = k;
          }
          r.status  = ok ? Status::pass : Status::fail;
          r.verdict = ok ? "PASS" : "FAIL";
          fold(c, r.status);
          c.reports.push_back(std::move(r));
        }
      }
      c.summary = "n = 7, 8";
    }

    void irredundancy(CriterionResult& c) {
      c.title = "irredundancy of each non-S_n relation";
      std::size_t proven = 0, policy = 0, total = 0;
      struct Probe {
        Preset      preset;
        std::size_t n;
        SnKind      kind;
      };
      // Over Carmichael's generators T_5 needs about an eighth of the
      // nodes it needs over Moore's.
      for (auto [p, n, kind] : {Probe{Preset::in3, 4, SnKind::moore},
                                Probe{Preset::pt9, 4, SnKind::moore},
                                Probe{Preset::tn4, 5, SnKind::carmichael}}) {
        auto inst = build_preset(p, n, kind);
        auto& pr  = inst.bound.presentation;
        for (auto const& rel : pr.relations) {
          if (is_sn_label(rel.label)) {
            continue;
          }
          log("irredundancy " + std::string(preset_name(p)) + " "
              + rel.label);
          auto i = irredundancy_check(pr, inst.target, rel.label);
          json params;
          params["preset"] = preset_name(p);
          params["n"]      = n;
          params["sn"]     = sn_kind_name(kind);
          auto r           = make_report(i, params);
          ++total;
          proven += i.certificate == Certificate::finite_size ? 1 : 0;
          policy += i.certificate == Certificate::overflow_policy ? 1 : 0;
          fold(c, r.status);
          c.reports.push_back(std::move(r));
        }
      }
      c.summary = std::to_string(proven + policy) + "/"
                  + std::to_string(total) + " irredundant ("
                  + std::to_string(proven) + " by a finite size, "
                  + std::to_string(policy) + " by overflow)";
    }

    void properties(CriterionResult& c) {
      c.title = "property checks and cross-backend agreement";
      // associativity
      {
        std::mt19937_64 rng(20260601);
        std::size_t     fails = 0;
        auto random = [&rng](std::size_t n) {
          std::vector<std::size_t> im(n);
          for (auto& x : im) {
            auto y = rng() % (n + 1);
            x      = y == n ? UNDEF : y + 1;
          }
          return PartialTransf::from_images(
              std::span<std::size_t const>(im));
        };
        for (std::size_t i = 0; i < 10'000; ++i) {
          auto n = 1 + rng() % 8;
          auto f = random(n), g = random(n), h = random(n);
          fails += (f * g) * h == f * (g * h) ? 0 : 1;
        }
        add_property(c, "associativity", fails == 0, {{"triples", 10'000},
                                                      {"failures", fails}});
      }
      // word_for_permutation round trip
      {
        std::size_t checked = 0, fails = 0;
        for (std::size_t n = 2; n <= 6; ++n) {
          std::vector<SnPresentation> sps;
          if (n <= 3) {
            sps.push_back(small_sn(n));
          } else {
            sps.push_back(moore(n));
            sps.push_back(carmichael(n));
            if (n >= 5) {
              sps.push_back(moore_reduced(n));
            }
          }
          auto all = generate_group(
              sps.front().assignment.images(), 1000).elements();
          for (auto const& sp : sps) {
            auto words = words_for_permutations(sp, all);
            for (std::size_t i = 0; i < all.size(); ++i) {
              ++checked;
              fails += evaluate(words[i], sp.assignment) == all[i] ? 0 : 1;
            }
          }
        }
        add_property(c, "word-for-permutation", fails == 0,
                     {{"permutations", checked}, {"failures", fails}});
      }
      // coset invariance
      for (auto f : {MonoidFamily::in, MonoidFamily::tn, MonoidFamily::ptn}) {
        json params;
        params["family"] = monoid_family_name(f);
        params["n"]      = 4;
        params["length"] = 8;
        auto r = make_report(coset_invariance(f, moore(4), 8), params);
        fold(c, r.status);
        c.reports.push_back(std::move(r));
      }
      // cross-backend agreement
      std::size_t attempted = 0, agreed = 0;
      json        missing = json::array();
      for (auto const& x : _cross) {
        attempted += x.attempted ? 1 : 0;
        agreed += x.agrees ? 1 : 0;
        if (!x.agrees) {
          missing.push_back(x.instance);
        }
      }
      Report r;
      r.check                  = "cross-backend";
      r.details["instances"]   = _cross.size();
      r.details["attempted"]   = attempted;
      r.details["agreed"]      = agreed;
      r.details["not_agreeing"] = missing;
      if (agreed != attempted) {
        r.status = Status::fail;
      } else if (attempted < _cross.size() || _cross.empty()) {
        r.status = Status::inconclusive;
      } else {
        r.status = Status::pass;
      }
      r.verdict = std::string(status_name(r.status));
      fold(c, r.status);
      c.reports.push_back(std::move(r));
      c.summary = "cross-backend agreement on " + std::to_string(agreed)
                  + "/" + std::to_string(_cross.size()) + " instances";
    }

    void add_property(CriterionResult& c,
                      std::string       name,
                      bool              ok,
                      json              details) {
      Report r;
      r.check   = "property";
      r.params["name"] = std::move(name);
      r.details = std::move(details);
      r.status  = ok ? Status::pass : Status::fail;
      r.verdict = ok ? "PASS" : "FAIL";
      fold(c, r.status);
      c.reports.push_back(std::move(r));
    }

    SuiteOptions            _opts;
    std::vector<CrossCheck> _cross;
    bool                    _pt9_ok = false;
  };

}  // namespace minpres

#endif  // MINPRES_SUITE_HPP_
