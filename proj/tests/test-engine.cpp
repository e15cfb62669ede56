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

#include <random>  // for mt19937_64
#include <set>     // for set
#include <vector>  // for vector

#include "catch2/catch_amalgamated.hpp"

#include "minpres/builders.hpp"
#include "minpres/cycles.hpp"
#include "minpres/derivation.hpp"
#include "minpres/froidure_pin.hpp"
#include "minpres/sn.hpp"
#include "minpres/todd_coxeter.hpp"

namespace minpres {

  namespace {
    // Closure under all products until nothing new appears.
    std::size_t closure_oracle(std::vector<PartialTransf> const& gens,
                               std::size_t                       n) {
      std::set<PartialTransf> s{PartialTransf::identity(n)};
      s.insert(gens.begin(), gens.end());
      bool grown = true;
      while (grown) {
        grown = false;
        std::vector<PartialTransf> cur(s.begin(), s.end());
        for (auto const& x : cur) {
          for (auto const& y : cur) {
            grown |= s.insert(x * y).second;
          }
        }
      }
      return s.size();
    }

    PartialTransf random_pt(std::mt19937_64& rng, std::size_t n) {
      std::vector<std::size_t> im(n);
      for (auto& x : im) {
        auto y = rng() % (n + 1);
        x      = y == n ? UNDEF : y + 1;
      }
      return PartialTransf::from_images(std::span<std::size_t const>(im));
    }

    std::size_t binomial(std::size_t n, std::size_t k) {
      std::size_t r = 1;
      for (std::size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
      }
      return r;
    }

    std::size_t factorial(std::size_t n) {
      return n <= 1 ? 1 : n * factorial(n - 1);
    }

    std::size_t count_partial_injections(std::size_t n) {
      std::size_t total = 0;
      for (std::size_t k = 0; k <= n; ++k) {
        total += binomial(n, k) * binomial(n, k) * factorial(k);
      }
      return total;
    }
  }  // namespace

  TEST_CASE("evaluate is a homomorphism", "[engine]") {
    auto sp = moore(4);
    REQUIRE(evaluate({}, sp.assignment) == PartialTransf::identity(4));
    REQUIRE(evaluate({1, 0}, sp.assignment) == cycle(4, {2, 3, 4}));
    Assignment eta({PartialTransf::from_images({UNDEF, 2, 3, 4})});
    REQUIRE(evaluate({0, 0}, eta) == eta[0]);
    REQUIRE_THROWS_AS(evaluate({2}, sp.assignment), std::invalid_argument);
    REQUIRE_THROWS_AS(Assignment({PartialTransf::identity(3),
                                  PartialTransf::identity(4)}),
                      std::invalid_argument);
    std::mt19937_64 rng(5);
    for (std::size_t i = 0; i < 500; ++i) {
      word_type u, v;
      for (std::size_t j = rng() % 12; j > 0; --j) {
        u.push_back(rng() % 2);
      }
      for (std::size_t j = rng() % 12; j > 0; --j) {
        v.push_back(rng() % 2);
      }
      REQUIRE(evaluate(concat({u, v}), sp.assignment)
              == evaluate(u, sp.assignment) * evaluate(v, sp.assignment));
    }
  }

  TEST_CASE("Froidure-Pin sizes", "[engine]") {
    Assignment t3({cycle(3, {1, 2}),
                   cycle(3, {1, 2, 3}),
                   PartialTransf::from_images({1, 1, 3})});
    REQUIRE(froidure_pin(t3, 1000).size() == 27);
    Assignment i4({cycle(4, {1, 2}),
                   cycle(4, {1, 2, 3, 4}),
                   PartialTransf::from_images({UNDEF, 2, 3, 4})});
    auto m = froidure_pin(i4, 1000);
    REQUIRE(m.complete());
    REQUIRE(m.size() == count_partial_injections(4));
    REQUIRE(m.size() == 209);
    REQUIRE(froidure_pin(Assignment({PartialTransf::identity(5)}), 10).size()
            == 1);
    REQUIRE(m.element(0) == PartialTransf::identity(4));

    auto part = froidure_pin(i4, 50);
    REQUIRE_FALSE(part.complete());
    REQUIRE(part.limit() == 50);
  }

  TEST_CASE("Froidure-Pin words and Cayley graph", "[engine]") {
    Assignment pt4({cycle(4, {1, 2}),
                    cycle(4, {1, 2, 3, 4}),
                    PartialTransf::from_images({1, 1, 3, 4}),
                    PartialTransf::from_images({UNDEF, 2, 3, 4})});
    auto m = froidure_pin(pt4, 10'000);
    REQUIRE(m.size() == 625);
    for (std::size_t i = 0; i < m.size(); ++i) {
      auto w = m.word(i);
      REQUIRE(evaluate(w, pt4) == m.element(i));
      REQUIRE(m.index_of(m.element(i)) == i);
      for (letter_type a = 0; a < 4; ++a) {
        REQUIRE(m.element(m.right(i, a)) == m.element(i) * pt4[a]);
        REQUIRE(m.element(m.left(i, a)) == pt4[a] * m.element(i));
      }
      if (i > 0) {
        REQUIRE(!shortlex_less(m.word(i), m.word(i - 1)));
      }
    }
  }

  TEST_CASE("Froidure-Pin agrees with naive closure", "[engine][property]") {
    std::mt19937_64 rng(11);
    for (std::size_t trial = 0; trial < 200; ++trial) {
      auto                       n = 1 + rng() % 4;
      std::vector<PartialTransf> gens;
      for (std::size_t j = 1 + rng() % 3; j > 0; --j) {
        gens.push_back(random_pt(rng, n));
      }
      auto m = froidure_pin(Assignment(gens), 1'000'000);
      REQUIRE(m.size() == closure_oracle(gens, n));
    }
  }

  TEST_CASE("group closure", "[engine]") {
    REQUIRE(generate_group({cycle(5, {1, 2, 3}),
                            cycle(5, {1, 2, 4}),
                            cycle(5, {1, 2, 5})},
                           1000)
                .size()
            == 60);
    REQUIRE(generate_group({cycle(4, {1, 2})}, 10).size() == 2);
    std::vector<PartialTransf> gens;
    for (std::size_t i = 2; i + 2 <= 6; ++i) {
      gens.push_back(cycle(6, {1, i, i + 2}));
    }
    REQUIRE(generate_group(gens, 1000).size() == 360);
    REQUIRE_THROWS_AS(generate_group({PartialTransf::from_images({1, 1})}, 10),
                      std::invalid_argument);
  }

  TEST_CASE("presented monoid sizes", "[engine]") {
    Presentation p;
    p.add_letter("a");
    p.add_relation({0, 0}, {0});
    REQUIRE(enumerate_presentation(p, 10).size == 2);
    REQUIRE(enumerate_presentation(moore(4).presentation, 100).size == 24);
    REQUIRE(enumerate_presentation(carmichael(4).presentation, 100).size
            == 24);
    REQUIRE(enumerate_presentation(moore(5).presentation, 1000).size == 120);
    REQUIRE(enumerate_presentation(moore_reduced(5).presentation, 1000).size
            == 120);
    auto aiz = tn_aizenstat(moore(4));
    auto res = enumerate_presentation(aiz.presentation, 1024);
    REQUIRE(res.finite());
    REQUIRE(res.size == 256);
    REQUIRE(res.size == froidure_pin(aiz.assignment, 1024).size());
  }

  TEST_CASE("overflow is an outcome", "[engine]") {
    Presentation free;
    free.add_letter("a");
    auto res = enumerate_presentation(free, 100);
    REQUIRE(res.outcome == Outcome::overflow);
    REQUIRE(res.limit == 100);
    REQUIRE(outcome_name(res.outcome) == "overflow");
    ToddCoxeterOptions opts;
    opts.max_nodes        = 1000;
    opts.unit_block_limit = 0;
    auto capped    = enumerate_presentation(
        tn_aizenstat(moore(5)).presentation, 1000, opts);
    REQUIRE(capped.outcome == Outcome::overflow);
  }

  TEST_CASE("strategies agree", "[engine]") {
    std::vector<BoundPresentation> cases{in_3rel(moore(4)),
                                         in_5rel(carmichael(4)),
                                         tn_aizenstat(moore(4)),
                                         ptn_east(moore(4)),
                                         ptn_9rel(moore(4)),
                                         small_presentation(MonoidFamily::tn, 3),
                                         small_presentation(MonoidFamily::ptn, 3)};
    for (auto const& bp : cases) {
      auto expected = froidure_pin(bp.assignment, 100'000).size();
      for (auto strategy : {Strategy::hlt, Strategy::felsch}) {
        for (bool reverse : {false, true}) {
          for (std::size_t block : {std::size_t(0), std::size_t(50'000)}) {
            ToddCoxeterOptions opts;
            opts.strategy         = strategy;
            opts.reverse          = reverse;
            opts.unit_block_limit = block;
            auto res = enumerate_presentation(bp.presentation, 100'000, opts);
            INFO(family_name(bp.presentation.family)
                 << " " << res.backend << " block " << block);
            REQUIRE(res.finite());
            REQUIRE(res.size == expected);
          }
        }
      }
    }
  }

  TEST_CASE("elementary sequences", "[engine]") {
    SECTION("trivial") {
      auto bp = in_3rel(moore(4));
      auto d  = find_elementary_sequence(bp.presentation, {0, 1}, {0, 1}, 4, 20);
      REQUIRE(d);
      REQUIRE(d->empty());
    }
    SECTION("single step") {
      Presentation p;
      p.add_letter("a");
      p.add_letter("b");
      p.add_relation({0, 1}, {1, 0}, "X1");
      auto d = find_elementary_sequence(p, {0, 0, 1}, {1, 0, 0}, 4, 10);
      REQUIRE(d);
      REQUIRE(d->size() == 2);
      REQUIRE(check_derivation(p, {0, 0, 1}, {1, 0, 0}, *d));
      REQUIRE_FALSE(find_elementary_sequence(p, {0}, {1}, 4, 10));
      REQUIRE(apply_relation({0, 0, 1}, 1, p.relations[0], true)
              == word_type{0, 1, 0});
      REQUIRE_THROWS_AS(apply_relation({0, 0, 1}, 0, p.relations[0], true),
                        std::logic_error);
      auto bad = *d;
      bad.back().result = {0};
      REQUIRE_FALSE(check_derivation(p, {0, 0, 1}, {1, 0, 0}, bad));
    }
    SECTION("zeta (1,n) zeta (1,n) = zeta in Aizenstat's presentation") {
      std::size_t const n  = 7;
      auto              sp = moore(n);
      auto              bp = tn_aizenstat(sp);
      auto              z  = bp.presentation.letter("zeta");
      auto t = word_for_permutation(sp, cycle(n, {1, n}));
      auto u = concat({{z}, t, {z}, t});
      auto d = find_elementary_sequence(bp.presentation, u, {z}, 4, 80);
      REQUIRE(d);
      REQUIRE(check_derivation(bp.presentation, u, {z}, *d));
      auto value = evaluate(u, bp.assignment);
      for (auto const& s : *d) {
        auto x = evaluate(s.result, bp.assignment);
        // every intermediate word lies in the ideal generated by the ends
        REQUIRE(x == value);
        REQUIRE(x.rank() >= value.rank());
      }
    }
    SECTION("eta eta = eta in the three relation presentation") {
      auto bp = in_3rel(moore(4));
      auto e  = bp.presentation.letter("eta");
      auto d  = find_elementary_sequence(bp.presentation, {e, e}, {e}, 6, 60);
      REQUIRE(d);
      REQUIRE(check_derivation(bp.presentation, {e, e}, {e}, *d));
      for (auto const& s : *d) {
        REQUIRE(evaluate(s.result, bp.assignment).rank() == 3);
      }
    }
  }

}  // namespace minpres
