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

#include <algorithm>  // for next_permutation
#include <map>        // for map
#include <numeric>    // for iota
#include <random>     // for mt19937_64
#include <vector>     // for vector

#include "catch2/catch_amalgamated.hpp"

#include "minpres/builders.hpp"
#include "minpres/change_alphabet.hpp"
#include "minpres/cycles.hpp"
#include "minpres/froidure_pin.hpp"
#include "minpres/io.hpp"
#include "minpres/sn.hpp"
#include "minpres/todd_coxeter.hpp"
#include "minpres/verification.hpp"

namespace minpres {

  namespace {
    std::vector<PartialTransf> all_permutations(std::size_t n) {
      std::vector<std::size_t> im(n);
      std::iota(im.begin(), im.end(), 1);
      std::vector<PartialTransf> out;
      do {
        out.push_back(
            PartialTransf::from_images(std::span<std::size_t const>(im)));
      } while (std::next_permutation(im.begin(), im.end()));
      return out;
    }

    // Shortlex-least words by brute force: all words of each length in
    // lexicographic order.
    std::map<PartialTransf, word_type> shortlex_oracle(SnPresentation const& sp,
                                                       std::size_t max_len) {
      std::map<PartialTransf, word_type> out;
      auto const                         k = sp.assignment.size();
      for (std::size_t len = 0; len <= max_len; ++len) {
        word_type w(len, 0);
        while (true) {
          auto f = evaluate(w, sp.assignment);
          out.try_emplace(f, w);
          std::size_t i = len;
          while (i > 0 && w[i - 1] == k - 1) {
            w[--i] = 0;
          }
          if (i == 0) {
            break;
          }
          ++w[i - 1];
        }
      }
      return out;
    }

    std::vector<SnPresentation> sn_presentations(std::size_t n) {
      std::vector<SnPresentation> out;
      if (n <= 3) {
        out.push_back(small_sn(n));
      } else {
        out.push_back(moore(n));
        out.push_back(carmichael(n));
        if (n >= 5) {
          out.push_back(moore_reduced(n));
        }
      }
      return out;
    }
  }  // namespace

  TEST_CASE("words for every permutation", "[property]") {
    for (std::size_t n = 2; n <= 6; ++n) {
      auto perms = all_permutations(n);
      for (auto const& sp : sn_presentations(n)) {
        auto words = words_for_permutations(sp, perms);
        REQUIRE(words.size() == perms.size());
        for (std::size_t i = 0; i < perms.size(); ++i) {
          REQUIRE(evaluate(words[i], sp.assignment) == perms[i]);
        }
      }
    }
  }

  TEST_CASE("words for permutations are shortlex least", "[property]") {
    for (auto const& sp : {moore(4), carmichael(4), small_sn(3)}) {
      auto oracle = shortlex_oracle(sp, 9);
      auto perms  = all_permutations(sp.assignment.degree());
      auto words  = words_for_permutations(sp, perms);
      for (std::size_t i = 0; i < perms.size(); ++i) {
        REQUIRE(oracle.contains(perms[i]));
        REQUIRE(words[i] == oracle.at(perms[i]));
      }
    }
  }

  TEST_CASE("every builder is sound over every symmetric group presentation",
            "[property]") {
    for (std::size_t n = 4; n <= 9; ++n) {
      for (auto const& sp : sn_presentations(n)) {
        INFO("n = " << n << " " << family_name(sp.presentation.family));
        REQUIRE(check_relations(in_5rel(sp)).empty());
        REQUIRE(check_relations(in_3rel(sp)).empty());
        REQUIRE(check_relations(tn_aizenstat(sp)).empty());
        REQUIRE(check_relations(ptn_east(sp)).empty());
        REQUIRE(check_relations(ptn_9rel(sp)).empty());
        if (n >= 5) {
          REQUIRE(check_relations(tn_5rel(sp)).empty());
        }
        if (n >= 5 && n != 6) {
          REQUIRE(check_relations(tn_4rel(sp)).empty());
        }
        if (n >= 7) {
          REQUIRE(check_relations(ptn_8rel(sp)).empty());
        }
      }
    }
  }

  TEST_CASE("orders agree with enumeration of generators", "[property]") {
    for (std::size_t n = 1; n <= 5; ++n) {
      std::vector<PartialTransf> s;
      if (n >= 2) {
        s.push_back(cycle(n, {1, 2}));
        s.push_back(interval_cycle(n, 1, n));
      } else {
        s.push_back(PartialTransf::identity(1));
      }
      auto with = [&](std::vector<PartialTransf> extra) {
        auto g = s;
        g.insert(g.end(), extra.begin(), extra.end());
        return froidure_pin(Assignment(g), 100'000).size();
      };
      REQUIRE(with({}) == order_of({MonoidFamily::sn, n}));
      REQUIRE(with({eta_of_degree(n)}) == order_of({MonoidFamily::in, n}));
      if (n >= 2) {
        REQUIRE(with({zeta_of_degree(n)}) == order_of({MonoidFamily::tn, n}));
        REQUIRE(with({zeta_of_degree(n), eta_of_degree(n)})
                == order_of({MonoidFamily::ptn, n}));
      }
    }
  }

  TEST_CASE("enumeration backends agree on random finite presentations",
            "[property]") {
    std::mt19937_64 rng(20260601);
    auto            random_word = [&](std::size_t k, std::size_t max) {
      word_type w;
      for (std::size_t i = 1 + rng() % max; i > 0; --i) {
        w.push_back(static_cast<letter_type>(rng() % k));
      }
      return w;
    };
    std::size_t compared = 0;
    for (std::size_t trial = 0; trial < 60; ++trial) {
      Presentation p;
      std::size_t  k = 2 + rng() % 2;
      for (std::size_t a = 0; a < k; ++a) {
        p.add_letter(std::string(1, char('a' + a)));
        // a^m = a^r with r < m keeps every cyclic submonoid finite
        std::size_t m = 2 + rng() % 3;
        p.add_relation(power({letter_type(a)}, m),
                       power({letter_type(a)}, rng() % m));
      }
      for (std::size_t j = rng() % 4; j > 0; --j) {
        p.add_relation(random_word(k, 4), random_word(k, 4));
      }
      std::vector<std::optional<std::size_t>> sizes;
      for (auto strategy : {Strategy::hlt, Strategy::felsch}) {
        for (bool reverse : {false, true}) {
          ToddCoxeterOptions opts;
          opts.strategy = strategy;
          opts.reverse  = reverse;
          auto res      = enumerate_presentation(p, 5000, opts);
          sizes.push_back(res.finite() ? std::optional(res.size)
                                       : std::nullopt);
        }
      }
      if (sizes[0]) {
        ++compared;
        for (auto const& s : sizes) {
          REQUIRE(s == sizes[0]);
        }
      }
    }
    REQUIRE(compared >= 20);
  }

  TEST_CASE("text and JSON formats round trip", "[property]") {
    std::mt19937_64 rng(3);
    for (std::size_t trial = 0; trial < 200; ++trial) {
      Presentation p;
      std::size_t  k = 1 + rng() % 4;
      for (std::size_t a = 0; a < k; ++a) {
        p.add_letter("x_" + std::to_string(a));
      }
      for (std::size_t j = rng() % 5; j > 0; --j) {
        word_type u, v;
        for (std::size_t i = rng() % 6; i > 0; --i) {
          u.push_back(letter_type(rng() % k));
        }
        for (std::size_t i = rng() % 6; i > 0; --i) {
          v.push_back(letter_type(rng() % k));
        }
        p.add_relation(u, v, "X" + std::to_string(j));
      }
      p.degree = rng() % 9;
      REQUIRE(parse_text(to_text(p)) == p);
      REQUIRE(parse_json(to_json(p).dump()) == p);
    }
  }

  TEST_CASE("changing generators preserves the presented monoid",
            "[property]") {
    SECTION("cyclic group") {
      Presentation p;
      p.add_letter("a");
      p.add_relation(power({0}, 6), {});
      auto       a = cycle(5, {1, 2, 3}) * cycle(5, {4, 5});
      Assignment asg_a({a});
      Assignment asg_b({a * a, a * a * a});
      auto       q = change_alphabet(p, asg_a, {"b", "c"}, asg_b);
      REQUIRE(enumerate_presentation(p, 100).size
              == enumerate_presentation(q, 100).size);
    }
    SECTION("Moore to Carmichael") {
      for (std::size_t n : {4, 5}) {
        auto m = moore(n), c = carmichael(n);
        auto q = change_alphabet(m.presentation, m.assignment,
                                 c.presentation.alphabet, c.assignment);
        REQUIRE(enumerate_presentation(q, 1000).size
                == enumerate_presentation(m.presentation, 1000).size);
      }
    }
    SECTION("inverse monoid over Carmichael generators") {
      auto m = in_3rel(moore(4));
      auto c = carmichael(4);
      auto images = c.assignment.images();
      images.push_back(eta_of_degree(4));
      auto alphabet = c.presentation.alphabet;
      alphabet.push_back("eta");
      auto q = change_alphabet(m.presentation, m.assignment, alphabet,
                               Assignment(images));
      REQUIRE(enumerate_presentation(q, 10'000).size == 209);
    }
  }

  TEST_CASE("kernel types describe the domain", "[property]") {
    std::mt19937_64 rng(41);
    for (std::size_t trial = 0; trial < 5000; ++trial) {
      auto                     n = 1 + rng() % 8;
      std::vector<std::size_t> im(n);
      for (auto& x : im) {
        auto y = rng() % (n + 1);
        x      = y == n ? UNDEF : y + 1;
      }
      auto f  = PartialTransf::from_images(std::span<std::size_t const>(im));
      auto kt = kernel_type(f);
      REQUIRE(kt.total() == f.domain().size());
      std::size_t classes = 0;
      for (auto const& [size, count] : kt.parts) {
        classes += count;
      }
      REQUIRE(classes == f.rank());
    }
  }

}  // namespace minpres
