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

#include <map>     // for map
#include <string>  // for string
#include <vector>  // for vector

#include "catch2/catch_amalgamated.hpp"

#include "minpres/builders.hpp"
#include "minpres/cycles.hpp"
#include "minpres/lemmas.hpp"
#include "minpres/sn.hpp"
#include "minpres/verification.hpp"

namespace minpres {

  namespace {
    PartialTransf product(std::initializer_list<PartialTransf> fs) {
      auto it  = fs.begin();
      auto out = *it;
      for (++it; it != fs.end(); ++it) {
        out = out * *it;
      }
      return out;
    }

    // b a b^-1 a b^-1 a^-1 b a^-1
    PartialTransf tau(PartialTransf const& a, PartialTransf const& b) {
      auto ai = inverse(a), bi = inverse(b);
      return product({b, a, bi, a, bi, ai, b, ai});
    }
  }  // namespace

  TEST_CASE("orders of the monoids", "[verification]") {
    REQUIRE(order_of({MonoidFamily::tn, 4}) == 256);
    REQUIRE(order_of({MonoidFamily::in, 4}) == 209);
    REQUIRE(order_of({MonoidFamily::ptn, 5}) == 7776);
    REQUIRE(order_of({MonoidFamily::sn, 6}) == 720);
    REQUIRE(order_of({MonoidFamily::in, 1}) == 2);
    REQUIRE(order_of({MonoidFamily::tn, 15}) == 437893890380859375ULL);
    REQUIRE_THROWS_AS(order_of({MonoidFamily::tn, 16}), std::overflow_error);
    REQUIRE_THROWS_AS(order_of({MonoidFamily::ptn, 0}),
                      std::invalid_argument);
  }

  TEST_CASE("relation soundness", "[verification]") {
    REQUIRE(check_relations(in_3rel(moore(5))).empty());
    REQUIRE(check_relations(tn_4rel(moore(7))).empty());
    auto bp = in_3rel(moore(5));
    auto& r = bp.presentation.relations[bp.presentation.relation_index("I2")];
    auto  e = bp.presentation.letter("eta");
    r.rhs   = concat({{e}, word_for_permutation(moore(5), cycle(5, {1, 2}))});
    REQUIRE(check_relations(bp) == std::vector<std::string>{"I2"});
    auto rep = verify_defines(bp, {MonoidFamily::in, 5});
    REQUIRE(rep.verdict == Verdict::soundness_fail);
  }

  TEST_CASE("verifying presentations", "[verification]") {
    auto rep = verify_defines(in_3rel(moore(4)), {MonoidFamily::in, 4});
    REQUIRE(rep.verdict == Verdict::verified);
    REQUIRE(rep.presented == 209);
    REQUIRE(rep.target == 209);
    REQUIRE(rep.surjective());

    rep = verify_defines(tn_4rel(moore(5)), {MonoidFamily::tn, 5});
    REQUIRE(rep.verdict == Verdict::verified);
    REQUIRE(rep.presented == 3125);

    rep = verify_defines(small_presentation(MonoidFamily::ptn, 3),
                         {MonoidFamily::ptn, 3});
    REQUIRE(rep.verdict == Verdict::verified);
    REQUIRE(rep.presented == 64);

    VerifyOptions opts;
    opts.cross_check = true;
    rep = verify_defines(ptn_9rel(carmichael(4)), {MonoidFamily::ptn, 4}, opts);
    REQUIRE(rep.verdict == Verdict::verified);
    REQUIRE(rep.cross_check);
    REQUIRE(rep.cross_check_agrees());
  }

  TEST_CASE("a missing relation is a size mismatch", "[verification]") {
    auto bp = in_3rel(moore(4));
    bp.presentation
        = bp.presentation.without_relation(bp.presentation.relation_index("I7"));
    VerifyOptions opts;
    opts.max_nodes = 200'000;
    auto rep = verify_defines(bp, {MonoidFamily::in, 4}, opts);
    REQUIRE(rep.verdict != Verdict::verified);
  }

  TEST_CASE("generators outside the target", "[verification]") {
    auto rep = verify_defines(tn_aizenstat(moore(4)), {MonoidFamily::in, 4});
    REQUIRE(rep.verdict == Verdict::soundness_fail);
    REQUIRE(rep.outside_target == std::vector<std::string>{"zeta"});
  }

  TEST_CASE("irredundancy", "[verification]") {
    auto bp = in_3rel(moore(4));
    for (auto label : {"I2", "I6", "I7"}) {
      auto rep = irredundancy_check(bp.presentation, {MonoidFamily::in, 4},
                                    label);
      INFO(label);
      REQUIRE(rep.verdict == Redundancy::irredundant);
    }
    auto const& i2 = bp.presentation.relations[bp.presentation.relation_index(
        "I2")];
    bp.presentation.add_relation(i2.lhs, i2.rhs, "X1");
    auto rep
        = irredundancy_check(bp.presentation, {MonoidFamily::in, 4}, "X1");
    REQUIRE(rep.verdict == Redundancy::redundant);
    REQUIRE(rep.size == 209);
    REQUIRE_THROWS_AS(
        irredundancy_check(bp.presentation, {MonoidFamily::in, 4}, "I9"),
        std::invalid_argument);
  }

  TEST_CASE("a proper quotient is a finite certificate", "[verification]") {
    auto bp  = ptn_9rel(moore(4));
    auto rep = irredundancy_check(bp.presentation, {MonoidFamily::ptn, 4}, "T7");
    REQUIRE(rep.verdict == Redundancy::irredundant);
    REQUIRE(rep.certificate == Certificate::finite_size);
    REQUIRE(rep.size);
    REQUIRE(*rep.size > 625);
  }

  TEST_CASE("relation counts and ranks", "[verification]") {
    for (std::size_t n : {5, 7, 8}) {
      auto in3 = in_3rel(moore(n));
      REQUIRE(non_sn_relation_count(in3.presentation) == 3);
      REQUIRE(rank_profile(in3.presentation, in3.assignment)
              == std::map<std::size_t, std::size_t>{{n - 2, 1}, {n - 1, 2}});
    }
    for (std::size_t n : {5, 7, 8}) {
      auto tn4 = tn_4rel(carmichael(n));
      REQUIRE(non_sn_relation_count(tn4.presentation) == 4);
      REQUIRE(rank_profile(tn4.presentation, tn4.assignment)
              == std::map<std::size_t, std::size_t>{{n - 2, 2}, {n - 1, 2}});
    }
    for (std::size_t n : {7, 8}) {
      auto pt8 = ptn_8rel(carmichael(n));
      REQUIRE(non_sn_relation_count(pt8.presentation) == 8);
      auto profile = rank_profile(pt8.presentation, pt8.assignment);
      REQUIRE(profile
              == std::map<std::size_t, std::size_t>{{n - 2, 4}, {n - 1, 4}});
    }
    auto aiz = tn_aizenstat(moore(6));
    std::size_t total = 0;
    for (auto [rank, count] : rank_profile(aiz.presentation, aiz.assignment)) {
      total += count;
    }
    REQUIRE(total == non_sn_relation_count(aiz.presentation));
    REQUIRE(non_sn_relation_count(moore(5).presentation) == 0);
    Presentation unlabelled;
    unlabelled.add_letter("a");
    unlabelled.add_relation({0, 0}, {0});
    REQUIRE_THROWS_AS(non_sn_relation_count(unlabelled),
                      std::invalid_argument);
  }

  TEST_CASE("leading permutations", "[verification]") {
    auto sp = moore(5);
    auto bp = tn_aizenstat(sp);
    auto z  = bp.presentation.letter("zeta");
    auto t  = word_for_permutation(sp, cycle(5, {2, 3}));
    REQUIRE(leading_permutation(concat({{z}, t}), bp.assignment)
            == PartialTransf::identity(5));
    auto w = concat({t, {z}, t, {z}});
    REQUIRE(leading_permutation(w, bp.assignment) == cycle(5, {2, 3}));
    REQUIRE(leading_nonpermutation(w, bp.assignment) == z);
    REQUIRE_FALSE(leading_nonpermutation(t, bp.assignment));
  }

  TEST_CASE("lower bound witnesses", "[verification]") {
    for (std::size_t n : {4, 5, 6}) {
      auto sp = moore(n);
      REQUIRE(lower_bound_witnesses(MonoidFamily::in, sp).size() == 1);
      REQUIRE(lower_bound_witnesses(MonoidFamily::tn, sp).size() == 2);
      REQUIRE(lower_bound_witnesses(MonoidFamily::ptn, sp).size() == 4);
      for (auto f : {MonoidFamily::in, MonoidFamily::tn, MonoidFamily::ptn}) {
        for (auto const& w : lower_bound_witnesses(f, sp)) {
          INFO(w.id << " n = " << n);
          REQUIRE(w.pass());
        }
      }
    }
    auto in4 = lower_bound_witnesses(MonoidFamily::in, moore(4));
    REQUIRE(in4[0].expected
            == PartialTransf::from_images({UNDEF, UNDEF, 3, 4}));
    auto tn5 = lower_bound_witnesses(MonoidFamily::tn, moore(5));
    REQUIRE(tn5[1].expected == PartialTransf::from_images({1, 1, 3, 3, 5}));
    REQUIRE(tn5[1].expected_kernel.to_string() == "2^2 1^1");
    auto pt4 = lower_bound_witnesses(MonoidFamily::ptn, carmichael(4));
    REQUIRE(pt4[3].separation == Separation::leading_letter);
    REQUIRE(pt4[3].w1 == "ζ (1,3) η (1,3)");
    REQUIRE(pt4[3].w2 == "(1,3) η (1,3) ζ");
    REQUIRE(pt4[3].pass());
    REQUIRE_THROWS_AS(lower_bound_witnesses(MonoidFamily::sn, moore(4)),
                      std::invalid_argument);
  }

  TEST_CASE("coset invariance of leading permutations", "[verification]") {
    for (auto f : {MonoidFamily::in, MonoidFamily::tn, MonoidFamily::ptn}) {
      auto rep = coset_invariance(f, moore(4), 6);
      INFO(monoid_family_name(f));
      REQUIRE(rep.rank_words > 0);
      REQUIRE(rep.violations == 0);
      REQUIRE(rep.pass());
    }
  }

  TEST_CASE("alternating group lemmas", "[verification][lemmas]") {
    auto a5 = alt_group_lemma_check(AltLemma::cycles_12i, 4);
    REQUIRE(a5.size == 12);
    REQUIRE(a5.pass());
    auto l33 = alt_group_lemma_check(AltLemma::tau_tn_even, 8);
    REQUIRE(l33.size == 360);
    REQUIRE(l33.pass());
    auto l36 = alt_group_lemma_check(AltLemma::rho_ptn_odd, 7);
    REQUIRE(l36.size == 360);
    REQUIRE(l36.points == std::vector<std::size_t>{2, 3, 4, 5, 6, 7});
    REQUIRE(l36.pass());
    for (auto l : ALL_ALT_LEMMAS) {
      for (auto n : alt_lemma_range(l).smallest(2)) {
        INFO(alt_lemma_name(l) << " n = " << n);
        REQUIRE(alt_group_lemma_check(l, n).pass());
      }
    }
    REQUIRE_THROWS_AS(alt_group_lemma_check(AltLemma::tau_ptn_odd, 8),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(alt_group_lemma_check(AltLemma::tau_tn_even, 6),
                      std::invalid_argument);
  }

  TEST_CASE("conjugation identities", "[verification][lemmas]") {
    // computed here from the parameters directly
    auto t10 = tn_4rel_params(10);
    REQUIRE(tau(t10.alpha, t10.beta) == from_cycles(10, "(3,7,10)(4,5,9)"));
    auto p9 = ptn_8rel_params(9);
    REQUIRE(tau(p9.alpha, p9.beta) == from_cycles(9, "(4,6,9)"));
    REQUIRE(tau(p9.gamma, p9.delta) == from_cycles(9, "(2,3,8)(4,6,9)"));

    for (auto const& group : identity_groups()) {
      for (auto n : identity_range(group).smallest(3)) {
        for (auto const& c : intermediate_identity_check(group, n)) {
          INFO(group << " n = " << n << ": " << c.statement);
          REQUIRE(c.stated == c.computed);
        }
      }
    }
  }

}  // namespace minpres
