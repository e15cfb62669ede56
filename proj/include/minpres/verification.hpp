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

// Checks that a presentation defines a transformation monoid, that its
// relations are irredundant, and that words with equal values share the
// invariants used in lower bounds for the number of relations.

#ifndef MINPRES_VERIFICATION_HPP_
#define MINPRES_VERIFICATION_HPP_

#include <algorithm>    // for std::max, std::min
#include <chrono>       // for std::chrono
#include <cstdint>      // for std::uint64_t
#include <map>          // for std::map
#include <optional>     // for std::optional
#include <stdexcept>    // for std::invalid_argument, std::overflow_error
#include <string>       // for std::string
#include <string_view>  // for std::string_view
#include <vector>       // for std::vector

#include "builders.hpp"
#include "cycles.hpp"
#include "froidure_pin.hpp"
#include "presentation.hpp"
#include "sn.hpp"
#include "todd_coxeter.hpp"
#include "transf.hpp"

namespace minpres {

  //! One of S_n, I_n, T_n, PT_n.
  struct MonoidSpec {
    MonoidFamily family = MonoidFamily::sn;
    std::size_t  degree = 0;

    friend bool operator==(MonoidSpec const&, MonoidSpec const&) = default;
  };

  inline std::string to_string(MonoidSpec const& s) {
    return std::string(monoid_family_name(s.family)) + "_"
           + std::to_string(s.degree);
  }

  namespace detail {
    inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
      std::uint64_t r;
      if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("monoid order does not fit in 64 bits");
      }
      return r;
    }

    inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
      std::uint64_t r;
      if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("monoid order does not fit in 64 bits");
      }
      return r;
    }

    inline double ms_since(std::chrono::steady_clock::time_point t) {
      return std::chrono::duration<double, std::milli>(
                 std::chrono::steady_clock::now() - t)
          .count();
    }
  }  // namespace detail

  //! The number of elements of the monoid \p spec. Throws
  //! std::overflow_error rather than wrapping.
  inline std::uint64_t order_of(MonoidSpec const& spec) {
    auto const n = spec.degree;
    if (n < 1) {
      throw std::invalid_argument("order_of: the degree must be positive");
    }
    std::uint64_t r = 1;
    switch (spec.family) {
      case MonoidFamily::sn:
        for (std::uint64_t i = 2; i <= n; ++i) {
          r = detail::checked_mul(r, i);
        }
        return r;
      case MonoidFamily::tn:
        for (std::size_t i = 0; i < n; ++i) {
          r = detail::checked_mul(r, n);
        }
        return r;
      case MonoidFamily::ptn:
        for (std::size_t i = 0; i < n; ++i) {
          r = detail::checked_mul(r, n + 1);
        }
        return r;
      case MonoidFamily::in: {
        // sum over k of C(n, k)^2 k!, with t_k = C(n, k) * n! / (n - k)!
        std::uint64_t sum = 0;
        std::uint64_t c = 1, f = 1;
        for (std::uint64_t k = 0; k <= n; ++k) {
          sum = detail::checked_add(sum,
                                    detail::checked_mul(c, detail::checked_mul(c, f)));
          c = detail::checked_mul(c, n - k) / (k + 1);
          f = detail::checked_mul(f, k + 1);
        }
        return sum;
      }
    }
    return 0;
  }

  //! True if \p f is an element of the monoid \p spec.
  inline bool contains(MonoidSpec const& spec, PartialTransf const& f) {
    if (f.degree() != spec.degree) {
      return false;
    }
    switch (spec.family) {
      case MonoidFamily::sn: return f.is_permutation();
      case MonoidFamily::in: return f.is_partial_perm();
      case MonoidFamily::tn: return f.is_transformation();
      case MonoidFamily::ptn: return true;
    }
    return false;
  }

  //! The label of relation \p i, or "#i" (1-based) if it has none.
  inline std::string relation_name(Presentation const& p, std::size_t i) {
    auto const& l = p.relations.at(i).label;
    return l.empty() ? "#" + std::to_string(i + 1) : l;
  }

  //! Names of the relations whose sides have different values.
  inline std::vector<std::string> check_relations(Presentation const& p,
                                                  Assignment const&   asg) {
    if (asg.size() < p.alphabet.size()) {
      throw std::invalid_argument(
          "check_relations: some letters have no assigned value");
    }
    std::vector<std::string> out;
    for (std::size_t i = 0; i < p.relations.size(); ++i) {
      auto const& r = p.relations[i];
      if (evaluate(r.lhs, asg) != evaluate(r.rhs, asg)) {
        out.push_back(relation_name(p, i));
      }
    }
    return out;
  }

  inline std::vector<std::string> check_relations(BoundPresentation const& bp) {
    return check_relations(bp.presentation, bp.assignment);
  }

  enum class Verdict { verified, soundness_fail, size_mismatch, inconclusive };

  inline constexpr std::string_view verdict_name(Verdict v) {
    switch (v) {
      case Verdict::verified: return "VERIFIED";
      case Verdict::soundness_fail: return "SOUNDNESS_FAIL";
      case Verdict::size_mismatch: return "SIZE_MISMATCH";
      case Verdict::inconclusive: return "INCONCLUSIVE";
    }
    return "INCONCLUSIVE";
  }

  //! Nodes allowed in a Todd-Coxeter table when none is given; about 3GB
  //! for a presentation on 8 letters.
  inline constexpr std::size_t DEFAULT_MAX_NODES = 64'000'000;

  //! Working budget of the first, unit block, attempt as a multiple of the
  //! limit.
  inline constexpr std::size_t BLOCK_ATTEMPT_FACTOR = 40;

  //! Largest target whose generation is checked by a soundness only run.
  inline constexpr std::size_t SURJECTIVITY_CHECK_MAX = 10'000'000;

  struct VerifyOptions {
    //! Largest presented monoid reported as finite; zero means 4 times the
    //! order of the target.
    std::size_t limit = 0;
    //! Todd-Coxeter node budget; zero means DEFAULT_MAX_NODES.
    std::size_t max_nodes = 0;
    //! Enumerate a second time with a different strategy.
    bool cross_check = false;
    //! Skip the enumeration; soundness is still checked, and surjectivity
    //! too if the target has at most SURJECTIVITY_CHECK_MAX elements.
    bool soundness_only = false;
    ProgressCallback progress;
  };

  struct VerificationReport {
    MonoidSpec               spec;
    Family                   family = Family::custom;
    std::vector<std::string> labels;
    //! Relations whose two sides have different values.
    std::vector<std::string> soundness_failures;
    //! Letters whose values are not in the target monoid.
    std::vector<std::string> outside_target;
    std::uint64_t            target = 0;
    //! Size of the monoid generated by the values of the letters.
    std::size_t generated = 0;
    //! False if generation was not checked, only for soundness only runs.
    bool surjectivity_checked = true;
    //! Size of the presented monoid, if the enumeration finished.
    std::optional<std::size_t>         presented;
    std::size_t                        limit = 0;
    std::vector<PresentedMonoidResult> attempts;
    std::optional<PresentedMonoidResult> cross_check;
    Verdict                              verdict    = Verdict::inconclusive;
    double                               elapsed_ms = 0;
    //! Part of elapsed_ms spent on the cross-check.
    double                               cross_check_ms = 0;

    [[nodiscard]] bool surjective() const noexcept {
      return generated == target && outside_target.empty();
    }

    //! True if a cross-check ran and found the same finite size.
    [[nodiscard]] bool cross_check_agrees() const noexcept {
      return cross_check && cross_check->finite() && presented
             && cross_check->size == *presented;
    }
  };

  namespace detail {
    // Unit block HLT with at most half the budget, then plain HLT with the
    // full budget. Every attempt is recorded; the last result is returned.
    inline PresentedMonoidResult
    enumerate_with_fallback(Presentation const&                 p,
                            std::size_t                         limit,
                            std::size_t                         max_nodes,
                            ProgressCallback const&             progress,
                            std::vector<PresentedMonoidResult>& attempts) {
      ToddCoxeterOptions o;
      o.progress  = progress;
      o.max_nodes = std::min(max_nodes / 2, BLOCK_ATTEMPT_FACTOR * limit);
      auto r      = enumerate_presentation(p, limit, o);
      r.backend += "-blocks";
      attempts.push_back(r);
      if (r.finite()) {
        return r;
      }
      o.unit_block_limit = 0;
      o.max_nodes        = max_nodes;
      r                  = enumerate_presentation(p, limit, o);
      attempts.push_back(r);
      return r;
    }

    // HLT on the left congruence, then Felsch on the right one, both
    // without unit blocks.
    inline PresentedMonoidResult
    enumerate_other_way(Presentation const&     p,
                        std::size_t             limit,
                        std::size_t             max_nodes,
                        ProgressCallback const& progress) {
      ToddCoxeterOptions o;
      o.progress         = progress;
      o.unit_block_limit = 0;
      o.max_nodes        = max_nodes;
      o.reverse          = true;
      auto r             = enumerate_presentation(p, limit, o);
      if (r.finite()) {
        return r;
      }
      o.strategy = Strategy::felsch;
      o.reverse  = false;
      return enumerate_presentation(p, limit, o);
    }
  }  // namespace detail

  //! Decide whether \p p with the values \p asg defines the monoid \p spec.
  //!
  //! The values must satisfy every relation and generate the whole target;
  //! then the target is a quotient of the presented monoid, and the two are
  //! isomorphic exactly when the presented monoid has the same finite size.
  inline VerificationReport verify_defines(Presentation const& p,
                                           Assignment const&   asg,
                                           MonoidSpec const&   spec,
                                           VerifyOptions const& opts = {}) {
    auto               start = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.spec   = spec;
    rep.family = p.family;
    for (std::size_t i = 0; i < p.relations.size(); ++i) {
      rep.labels.push_back(relation_name(p, i));
    }
    rep.target = order_of(spec);
    rep.limit  = opts.limit != 0 ? opts.limit
                                 : detail::checked_mul(4, rep.target);
    if (asg.degree() != spec.degree) {
      throw std::invalid_argument("verify_defines: the assignment has degree "
                                  + std::to_string(asg.degree()) + ", not "
                                  + std::to_string(spec.degree));
    }
    p.validate();
    rep.soundness_failures = check_relations(p, asg);
    for (std::size_t a = 0; a < p.alphabet.size(); ++a) {
      if (!contains(spec, asg[static_cast<letter_type>(a)])) {
        rep.outside_target.push_back(p.alphabet[a]);
      }
    }
    if (!rep.soundness_failures.empty() || !rep.outside_target.empty()) {
      rep.verdict    = Verdict::soundness_fail;
      rep.elapsed_ms = detail::ms_since(start);
      return rep;
    }
    if (opts.soundness_only && rep.target > SURJECTIVITY_CHECK_MAX) {
      rep.surjectivity_checked = false;
      rep.verdict              = Verdict::inconclusive;
      rep.elapsed_ms           = detail::ms_since(start);
      return rep;
    }
    auto fp = froidure_pin(asg, rep.target + 1, opts.progress);
    rep.generated = fp.size();
    if (!rep.surjective()) {
      rep.verdict    = Verdict::size_mismatch;
      rep.elapsed_ms = detail::ms_since(start);
      return rep;
    }
    if (opts.soundness_only) {
      rep.verdict    = Verdict::inconclusive;
      rep.elapsed_ms = detail::ms_since(start);
      return rep;
    }
    auto budget = opts.max_nodes != 0 ? opts.max_nodes : DEFAULT_MAX_NODES;
    budget      = std::max(budget, rep.limit);
    auto r      = detail::enumerate_with_fallback(
        p, rep.limit, budget, opts.progress, rep.attempts);
    if (r.finite()) {
      rep.presented = r.size;
      rep.verdict   = r.size == rep.target ? Verdict::verified
                                           : Verdict::size_mismatch;
      if (opts.cross_check) {
        auto cc_start      = std::chrono::steady_clock::now();
        rep.cross_check    = detail::enumerate_other_way(
            p, rep.limit, budget, opts.progress);
        rep.cross_check_ms = detail::ms_since(cc_start);
      }
    } else {
      rep.verdict = Verdict::inconclusive;
    }
    rep.elapsed_ms = detail::ms_since(start);
    return rep;
  }

  inline VerificationReport verify_defines(BoundPresentation const& bp,
                                           MonoidSpec const&        spec,
                                           VerifyOptions const&     opts = {}) {
    return verify_defines(bp.presentation, bp.assignment, spec, opts);
  }

  ////////////////////////////////////////////////////////////////////////
  // Irredundancy
  ////////////////////////////////////////////////////////////////////////

  enum class Redundancy { irredundant, redundant, unknown };

  inline constexpr std::string_view redundancy_name(Redundancy r) {
    switch (r) {
      case Redundancy::irredundant: return "IRREDUNDANT";
      case Redundancy::redundant: return "REDUNDANT";
      case Redundancy::unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
  }

  //! How an irredundancy verdict was reached.
  enum class Certificate {
    //! The smaller presentation defines a finite monoid of another size.
    finite_size,
    //! The smaller presentation defines a monoid of the target's size.
    equal_size,
    //! The enumeration exceeded the node budget; see IrredundancyOptions.
    //! This is the accepted policy, not a proof.
    overflow_policy,
    none
  };

  inline constexpr std::string_view certificate_name(Certificate c) {
    switch (c) {
      case Certificate::finite_size: return "finite-size";
      case Certificate::equal_size: return "equal-size";
      case Certificate::overflow_policy: return "overflow-policy";
      case Certificate::none: return "none";
    }
    return "none";
  }

  //! Least node budget of an irredundancy probe.
  inline constexpr std::size_t IRREDUNDANCY_MIN_NODES = 1'000'000;

  struct IrredundancyOptions {
    //! Node budget for the presentation without the relation. Zero means
    //! the largest of IRREDUNDANCY_MIN_NODES, 4 times the target, and 4
    //! times the nodes needed to enumerate the whole presentation, but at
    //! most DEFAULT_MAX_NODES. An overflow below either of the last two
    //! is inconclusive.
    std::size_t      max_nodes = 0;
    ProgressCallback progress;
  };

  struct IrredundancyReport {
    std::string                        label;
    Redundancy                         verdict     = Redundancy::unknown;
    Certificate                        certificate = Certificate::none;
    std::uint64_t                      target      = 0;
    //! Most nodes live while enumerating the whole presentation, and how.
    std::size_t                        reference_nodes = 0;
    std::string                        reference_backend;
    std::size_t                        budget = 0;
    std::optional<std::size_t>         size;
    std::vector<PresentedMonoidResult> attempts;
    double                             elapsed_ms = 0;
  };

  //! Whether removing the relation labelled \p label from \p p changes the
  //! presented monoid.
  //!
  //! The whole presentation is enumerated first; unless it defines a monoid
  //! of the order of \p spec the answer is unknown. The smaller
  //! presentation presents a monoid mapping onto that one, so it can only be
  //! larger. A finite size other than the target proves irredundancy and an
  //! equal size proves redundancy. Overflowing the budget, which is at
  //! least 4 times what the whole presentation needed, counts as
  //! irredundant by policy.
  inline IrredundancyReport
  irredundancy_check(Presentation const&         p,
                     MonoidSpec const&           spec,
                     std::string_view            label,
                     IrredundancyOptions const& opts = {}) {
    auto               start = std::chrono::steady_clock::now();
    IrredundancyReport rep;
    auto               index = p.relation_index(label);
    rep.label                = relation_name(p, index);
    rep.target               = order_of(spec);
    auto const limit         = detail::checked_mul(4, rep.target);

    std::vector<PresentedMonoidResult> reference;
    auto full = detail::enumerate_with_fallback(
        p, limit, DEFAULT_MAX_NODES, opts.progress, reference);
    if (!full.finite() || full.size != rep.target) {
      rep.attempts   = std::move(reference);
      rep.elapsed_ms = detail::ms_since(start);
      return rep;
    }
    rep.reference_nodes   = full.stats.max_active;
    rep.reference_backend = full.backend;
    rep.budget            = opts.max_nodes;
    if (rep.budget == 0) {
      rep.budget = std::min(
          DEFAULT_MAX_NODES,
          std::max({IRREDUNDANCY_MIN_NODES,
                    limit,
                    detail::checked_mul(4, rep.reference_nodes)}));
    }

    auto              q = p.without_relation(index);
    ToddCoxeterOptions o;
    o.progress  = opts.progress;
    o.max_nodes = rep.budget;
    bool blocks = reference.size() == 1;
    if (!blocks) {
      o.unit_block_limit = 0;
    }
    // Any finite answer decides the question, so the size is not limited
    // beyond the node budget.
    auto r = enumerate_presentation(q, rep.budget, o);
    if (blocks) {
      r.backend += "-blocks";
    }
    rep.attempts.push_back(r);
    if (!r.finite() && blocks) {
      o.unit_block_limit = 0;
      r                  = enumerate_presentation(q, rep.budget, o);
      rep.attempts.push_back(r);
    }
    if (r.finite()) {
      rep.size = r.size;
      if (r.size == rep.target) {
        rep.verdict     = Redundancy::redundant;
        rep.certificate = Certificate::equal_size;
      } else {
        rep.verdict     = Redundancy::irredundant;
        rep.certificate = Certificate::finite_size;
      }
    } else if (rep.budget >= limit
               && rep.budget >= detail::checked_mul(4, rep.reference_nodes)) {
      rep.verdict     = Redundancy::irredundant;
      rep.certificate = Certificate::overflow_policy;
    }
    rep.elapsed_ms = detail::ms_since(start);
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // Counting relations
  ////////////////////////////////////////////////////////////////////////

  //! Number of relations not labelled as symmetric group relations.
  inline std::size_t non_sn_relation_count(Presentation const& p) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < p.relations.size(); ++i) {
      auto const& l = p.relations[i].label;
      if (l.empty()) {
        throw std::invalid_argument("relation " + relation_name(p, i)
                                    + " has no label");
      }
      count += !is_sn_label(l);
    }
    return count;
  }

  //! Number of non-symmetric-group relations of each rank, the rank of a
  //! relation being that of the value of its left side.
  inline std::map<std::size_t, std::size_t> rank_profile(Presentation const& p,
                                                         Assignment const& asg) {
    (void) non_sn_relation_count(p);
    std::map<std::size_t, std::size_t> out;
    for (auto const& r : p.relations) {
      if (!is_sn_label(r.label)) {
        ++out[evaluate(r.lhs, asg).rank()];
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Leading permutations
  ////////////////////////////////////////////////////////////////////////

  //! Length of the longest prefix of \p w whose value is a permutation.
  inline std::size_t leading_permutation_length(word_type const&  w,
                                                Assignment const& asg) {
    std::size_t i = 0;
    while (i < w.size() && asg[w[i]].is_permutation()) {
      ++i;
    }
    return i;
  }

  //! The value of the longest prefix of \p w that is a permutation.
  inline PartialTransf leading_permutation(word_type const&  w,
                                           Assignment const& asg) {
    auto k = leading_permutation_length(w, asg);
    return evaluate(word_type(w.begin(), w.begin() + k), asg);
  }

  //! The letter after the leading permutation, if any.
  inline std::optional<letter_type>
  leading_nonpermutation(word_type const& w, Assignment const& asg) {
    auto k = leading_permutation_length(w, asg);
    if (k == w.size()) {
      return std::nullopt;
    }
    return w[k];
  }

  //! The property separating two factorisations in a lower bound witness.
  enum class Separation {
    //! Leading permutations in different left cosets of Stab(1).
    stab1_coset,
    //! Leading permutations in different left cosets of Stab({1, 2}).
    stab12_coset,
    //! Different leading non-permutations.
    leading_letter
  };

  inline constexpr std::string_view separation_name(Separation s) {
    switch (s) {
      case Separation::stab1_coset: return "Stab(1) cosets";
      case Separation::stab12_coset: return "Stab({1,2}) cosets";
      case Separation::leading_letter: return "leading non-permutations";
    }
    return "";
  }

  //! Two factorisations of one element of rank n - 2 that no relation of
  //! rank n or n - 1 can connect, so some relation of rank n - 2 with the
  //! same kernel type is needed.
  struct WitnessCheck {
    std::string   id;
    std::string   w1;
    std::string   w2;
    PartialTransf expected;
    KernelType    expected_kernel;
    Separation    separation = Separation::stab1_coset;

    bool equal_values = false;
    bool rank_ok      = false;
    bool kernel_ok    = false;
    bool separated    = false;

    [[nodiscard]] bool pass() const noexcept {
      return equal_values && rank_ok && kernel_ok && separated;
    }
  };

  namespace detail {
    // A word given as tokens: "zeta", "eta", or a permutation in cycle
    // notation.
    inline word_type witness_word(BoundPresentation const&        bp,
                                  SnPresentation const&           sp,
                                  std::vector<std::string> const& tokens) {
      auto const n = bp.assignment.degree();
      word_type  out;
      for (auto const& t : tokens) {
        if (t == "zeta" || t == "eta") {
          out.push_back(bp.presentation.letter(t));
        } else {
          auto w = word_for_permutation(sp, from_cycles(n, t));
          out.insert(out.end(), w.begin(), w.end());
        }
      }
      return out;
    }

    inline std::string join_tokens(std::vector<std::string> const& tokens) {
      std::string out;
      for (auto const& t : tokens) {
        if (!out.empty()) {
          out += ' ';
        }
        out += t == "zeta" ? "ζ" : t == "eta" ? "η" : t;
      }
      return out;
    }

    // Images 1..n with the first few replaced.
    inline PartialTransf images_with_prefix(std::size_t                     n,
                                            std::vector<std::size_t> const& prefix) {
      std::vector<std::size_t> im(n);
      for (std::size_t i = 0; i < n; ++i) {
        im[i] = i < prefix.size() ? prefix[i] : i + 1;
      }
      return PartialTransf::from_images(std::span<std::size_t const>(im));
    }
  }  // namespace detail

  //! The witnesses showing that presentations for I_n, T_n, and PT_n over
  //! any presentation for S_n need at least 1, 2, and 4 relations of rank
  //! n - 2. Words are written over \p sp.
  inline std::vector<WitnessCheck>
  lower_bound_witnesses(MonoidFamily family, SnPresentation const& sp) {
    auto const n = sp.assignment.degree();
    if (n < 4) {
      throw std::invalid_argument(
          "lower_bound_witnesses: the degree must be at least 4");
    }
    if (family == MonoidFamily::sn) {
      throw std::invalid_argument(
          "lower_bound_witnesses: no witnesses for symmetric groups");
    }
    auto bp = detail::composite(sp, Family::custom, true, true, {});
    using tokens = std::vector<std::string>;
    auto const U = UNDEF;

    struct Case {
      std::string                                      id;
      tokens                                           w1, w2;
      std::vector<std::size_t>                         prefix;
      std::vector<std::pair<std::size_t, std::size_t>> kernel;
      Separation                                       sep;
    };
    std::vector<Case> cases;
    auto kernel_3 = std::vector<std::pair<std::size_t, std::size_t>>{
        {3, 1}, {1, n - 3}};
    auto kernel_22 = std::vector<std::pair<std::size_t, std::size_t>>{
        {2, 2}, {1, n - 4}};
    auto kernel_1 = std::vector<std::pair<std::size_t, std::size_t>>{
        {1, n - 2}};
    auto kernel_2 = std::vector<std::pair<std::size_t, std::size_t>>{
        {2, 1}, {1, n - 3}};
    if (family == MonoidFamily::in) {
      cases.push_back({"IN kernel 1^(n-2)",
                       {"eta", "(1,2)", "eta"},
                       {"(1,2)", "eta", "(1,2)", "eta"},
                       {U, U},
                       kernel_1,
                       Separation::stab1_coset});
    } else if (family == MonoidFamily::tn) {
      cases.push_back({"TN kernel 3^1 1^(n-3)",
                       {"zeta", "(2,3)", "zeta"},
                       {"(2,3)", "zeta", "(2,3)", "zeta"},
                       {1, 1, 1},
                       kernel_3,
                       Separation::stab12_coset});
      cases.push_back({"TN kernel 2^2 1^(n-4)",
                       {"(1,3)(2,4)", "zeta", "(1,3)(2,4)", "zeta"},
                       {"zeta", "(1,3)(2,4)", "zeta", "(1,3)(2,4)"},
                       {1, 1, 3, 3},
                       kernel_22,
                       Separation::stab12_coset});
    } else {
      cases.push_back({"PTN kernel 1^(n-2)",
                       {"eta", "(1,2)", "eta", "(1,2)"},
                       {"(1,2)", "eta", "(1,2)", "eta"},
                       {U, U},
                       kernel_1,
                       Separation::stab1_coset});
      cases.push_back({"PTN kernel 3^1 1^(n-3)",
                       {"zeta", "(2,3)", "zeta", "(2,3)"},
                       {"(2,3)", "zeta", "(2,3)", "zeta"},
                       {1, 1, 1},
                       kernel_3,
                       Separation::stab12_coset});
      cases.push_back({"PTN kernel 2^2 1^(n-4)",
                       {"(1,3)(2,4)", "zeta", "(1,3)(2,4)", "zeta"},
                       {"zeta", "(1,3)(2,4)", "zeta", "(1,3)(2,4)"},
                       {1, 1, 3, 3},
                       kernel_22,
                       Separation::stab12_coset});
      cases.push_back({"PTN kernel 2^1 1^(n-3)",
                       {"zeta", "(1,3)", "eta", "(1,3)"},
                       {"(1,3)", "eta", "(1,3)", "zeta"},
                       {1, 1, U},
                       kernel_2,
                       Separation::leading_letter});
    }

    std::vector<WitnessCheck> out;
    for (auto const& c : cases) {
      WitnessCheck wc;
      wc.id              = c.id;
      wc.w1              = detail::join_tokens(c.w1);
      wc.w2              = detail::join_tokens(c.w2);
      wc.expected        = detail::images_with_prefix(n, c.prefix);
      wc.expected_kernel = make_kernel_type(c.kernel);
      wc.separation      = c.sep;
      auto u             = detail::witness_word(bp, sp, c.w1);
      auto v             = detail::witness_word(bp, sp, c.w2);
      auto fu            = evaluate(u, bp.assignment);
      auto fv            = evaluate(v, bp.assignment);
      wc.equal_values    = fu == fv && fu == wc.expected;
      wc.rank_ok   = fu.rank() == n - 2 && fv.rank() == n - 2;
      wc.kernel_ok = kernel_type(fu) == wc.expected_kernel
                     && kernel_type(fv) == wc.expected_kernel;
      auto lu = leading_nonpermutation(u, bp.assignment);
      auto lv = leading_nonpermutation(v, bp.assignment);
      if (c.sep == Separation::leading_letter) {
        wc.separated = lu && lv && *lu != *lv;
      } else {
        auto stab = c.sep == Separation::stab1_coset ? Stabilizer::point_1
                                                     : Stabilizer::set_12;
        wc.separated = lu && lv && *lu == *lv
                       && !same_left_coset(stab,
                                           leading_permutation(u, bp.assignment),
                                           leading_permutation(v, bp.assignment));
      }
      out.push_back(std::move(wc));
    }
    return out;
  }

  //! Result of comparing all words up to some length that have rank n - 1.
  struct CosetInvarianceReport {
    std::size_t words      = 0;
    std::size_t rank_words = 0;
    std::size_t classes    = 0;
    std::size_t violations = 0;

    [[nodiscard]] bool pass() const noexcept {
      return violations == 0;
    }
  };

  //! For every word of length at most \p max_length over \p sp and the
  //! letters of \p family (eta for IN, zeta for TN, both for PTN) whose
  //! value has rank n - 1, check that words with equal values have the same
  //! leading non-permutation and leading permutations in the same left coset
  //! of Stab(1) (after eta) or Stab({1, 2}) (after zeta).
  inline CosetInvarianceReport coset_invariance(MonoidFamily          family,
                                                SnPresentation const& sp,
                                                std::size_t max_length) {
    auto const n = sp.assignment.degree();
    if (family == MonoidFamily::sn) {
      throw std::invalid_argument("coset_invariance: no rank n - 1 words in S_n");
    }
    auto bp = detail::composite(sp,
                                Family::custom,
                                family != MonoidFamily::in,
                                family != MonoidFamily::tn,
                                {});
    auto const& asg = bp.assignment;
    auto const  k   = static_cast<letter_type>(bp.presentation.alphabet.size());
    struct Seen {
      letter_type   lead;
      PartialTransf perm;
    };
    std::map<PartialTransf, Seen> seen;
    CosetInvarianceReport         rep;
    // depth-first over words, carrying the value and the leading data
    struct Frame {
      word_type     w;
      PartialTransf value;
    };
    std::vector<Frame> stack{{{}, PartialTransf::identity(n)}};
    while (!stack.empty()) {
      auto fr = std::move(stack.back());
      stack.pop_back();
      ++rep.words;
      if (fr.value.rank() == n - 1) {
        ++rep.rank_words;
        auto lead = *leading_nonpermutation(fr.w, asg);
        auto perm = leading_permutation(fr.w, asg);
        auto it   = seen.find(fr.value);
        if (it == seen.end()) {
          seen.emplace(fr.value, Seen{lead, perm});
        } else {
          auto stab = asg[lead] == eta_of_degree(n) ? Stabilizer::point_1
                                                    : Stabilizer::set_12;
          if (it->second.lead != lead
              || !same_left_coset(stab, it->second.perm, perm)) {
            ++rep.violations;
          }
        }
      }
      if (fr.w.size() < max_length && fr.value.rank() >= n - 1) {
        for (letter_type a = k; a-- > 0;) {
          auto w = fr.w;
          w.push_back(a);
          stack.push_back({std::move(w), fr.value * asg[a]});
        }
      }
    }
    rep.classes = seen.size();
    return rep;
  }

}  // namespace minpres

#endif  // MINPRES_VERIFICATION_HPP_
