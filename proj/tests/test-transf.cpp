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

#include <algorithm>  // for find, shuffle
#include <numeric>    // for iota
#include <random>     // for mt19937_64
#include <vector>     // for vector

#include "catch2/catch_amalgamated.hpp"

#include "minpres/cycles.hpp"
#include "minpres/transf.hpp"

namespace minpres {

  namespace {
    PartialTransf pt(std::initializer_list<std::size_t> il) {
      return PartialTransf::from_images(il);
    }

    // (x)f for every x, computed directly from the image lists.
    PartialTransf compose_oracle(PartialTransf const& f,
                                 PartialTransf const& g) {
      std::vector<std::size_t> im;
      for (std::size_t x = 1; x <= f.degree(); ++x) {
        auto y = f[x];
        im.push_back(y == UNDEF ? UNDEF : g[y]);
      }
      return PartialTransf::from_images(std::span<std::size_t const>(im));
    }

    PartialTransf random_pt(std::mt19937_64& rng, std::size_t n) {
      std::vector<std::size_t> im(n);
      for (auto& x : im) {
        auto y = rng() % (n + 1);
        x      = y == n ? UNDEF : y + 1;
      }
      return PartialTransf::from_images(std::span<std::size_t const>(im));
    }

    PartialTransf random_perm(std::mt19937_64& rng, std::size_t n) {
      std::vector<std::size_t> im(n);
      std::iota(im.begin(), im.end(), 1);
      std::shuffle(im.begin(), im.end(), rng);
      return PartialTransf::from_images(std::span<std::size_t const>(im));
    }
  }  // namespace

  TEST_CASE("compose is the right action", "[transf]") {
    auto eta   = pt({UNDEF, 2, 3, 4});
    auto sigma = pt({2, 1, 3, 4});
    REQUIRE(compose(PartialTransf::identity(4), eta) == eta);
    REQUIRE(compose(eta, sigma) == pt({UNDEF, 1, 3, 4}));
    auto zeta = pt({1, 1, 3, 4});
    REQUIRE(compose(zeta, zeta) == zeta);
    REQUIRE_THROWS_AS(compose(zeta, PartialTransf::identity(5)),
                      std::invalid_argument);
  }

  TEST_CASE("rank, domain, image", "[transf]") {
    REQUIRE(PartialTransf::identity(5).rank() == 5);
    auto eta = pt({UNDEF, 2, 3, 4});
    REQUIRE(eta.rank() == 3);
    REQUIRE(eta.domain() == std::vector<std::size_t>{2, 3, 4});
    REQUIRE(pt({1, 1, 1, 4}).rank() == 2);
    REQUIRE(pt({1, 1, 1, 4}).image() == std::vector<std::size_t>{1, 4});
  }

  TEST_CASE("predicates", "[transf]") {
    REQUIRE(pt({1, 1, 3}).is_transformation());
    REQUIRE_FALSE(pt({1, 1, 3}).is_partial_perm());
    REQUIRE(pt({UNDEF, 1, 3}).is_partial_perm());
    REQUIRE_FALSE(pt({UNDEF, 1, 3}).is_transformation());
    REQUIRE(pt({2, 3, 1}).is_permutation());
  }

  TEST_CASE("kernel types", "[transf]") {
    REQUIRE(kernel_type(pt({1, 1, 1, 4})) == make_kernel_type({{3, 1}, {1, 1}}));
    REQUIRE(kernel_type(pt({1, 1, 1, 4})).to_string() == "3^1 1^1");
    REQUIRE(kernel_type(pt({1, 1, 3, 3, 5}))
            == make_kernel_type({{2, 2}, {1, 1}}));
    REQUIRE(kernel_type(PartialTransf::identity(3)).to_string() == "1^3");
    // only the domain is partitioned
    REQUIRE(kernel_type(pt({UNDEF, 2, 2, 4})).to_string() == "2^1 1^1");
  }

  TEST_CASE("cycle notation", "[transf]") {
    REQUIRE(from_cycles(4, "(2,3)") == pt({1, 3, 2, 4}));
    auto b = from_cycles(8, "(3,7,6,4,5)");
    REQUIRE(b == pt({1, 2, 7, 5, 3, 4, 6, 8}));
    REQUIRE(to_cycles(pt({2, 1, 3, 4})).to_string() == "(1,2)");
    REQUIRE(to_cycles(PartialTransf::identity(3)).to_string() == "()");
    REQUIRE(from_cycles(12, " ( 1 , 12 )( 10,11 ) ")
            == from_cycles(12, "(1,12)(10,11)"));
    REQUIRE_THROWS_AS(from_cycles(4, "(1,2,1)"), std::invalid_argument);
    REQUIRE_THROWS_AS(from_cycles(4, "(1,2)(2,3)"), std::invalid_argument);
    REQUIRE_THROWS_AS(from_cycles(4, "(1,5)"), std::invalid_argument);
    REQUIRE_THROWS_AS(from_cycles(6, "(2,3,…,6)"), std::invalid_argument);
    REQUIRE_THROWS_AS(from_cycles(6, "(2,3,...,6)"), std::invalid_argument);
  }

  TEST_CASE("image list text", "[transf]") {
    auto f = pt({UNDEF, 2, 2, 4});
    REQUIRE(to_string(f) == "[-,2,2,4]");
    REQUIRE(parse_images("[-,2,2,4]") == f);
    REQUIRE(parse_images("[U,2,2,4]") == f);
  }

  TEST_CASE("permutation operations", "[transf]") {
    REQUIRE(parity(cycle(3, {1, 2, 3})) == Parity::even);
    REQUIRE(parity(cycle(4, {1, 2})) == Parity::odd);
    auto g = interval_cycle(5, 3, 5);
    REQUIRE(conjugate(cycle(5, {3, 4}), g) == cycle(5, {4, 5}));
    REQUIRE(commutator(cycle(7, {1, 2, 4}), cycle(7, {1, 5, 7}))
            == cycle(7, {1, 2, 5}));
    REQUIRE(support(from_cycles(6, "(2,5)(3,4,6)"))
            == std::vector<std::size_t>{2, 3, 4, 5, 6});
    REQUIRE_THROWS_AS(inverse(pt({1, 1, 3})), std::invalid_argument);
    REQUIRE_THROWS_AS(parity(pt({UNDEF, 2, 3})), std::invalid_argument);
  }

  TEST_CASE("stabilisers and cosets", "[transf]") {
    REQUIRE(in_stab1(cycle(4, {2, 3})));
    REQUIRE(in_stab12(cycle(4, {1, 2})));
    REQUIRE_FALSE(in_stab1(cycle(4, {1, 2})));
    REQUIRE_FALSE(same_left_coset(
        Stabilizer::set_12, PartialTransf::identity(4), cycle(4, {2, 3})));
    REQUIRE(same_left_coset(
        Stabilizer::point_1, cycle(4, {1, 2}), cycle(4, {1, 2}) * cycle(4, {3, 4})));
  }

  TEST_CASE("degree cap", "[transf]") {
    REQUIRE_NOTHROW(PartialTransf::identity(MAX_DEGREE));
    REQUIRE_THROWS_AS(PartialTransf::identity(MAX_DEGREE + 1),
                      std::invalid_argument);
  }

  TEST_CASE("composition properties", "[transf][property]") {
    std::mt19937_64 rng(17);
    for (std::size_t i = 0; i < 10'000; ++i) {
      auto n = 1 + rng() % 8;
      auto f = random_pt(rng, n), g = random_pt(rng, n), h = random_pt(rng, n);
      REQUIRE((f * g) * h == f * (g * h));
      auto fg = f * g;
      REQUIRE(fg == compose_oracle(f, g));
      // dom(fg) in dom(f), im(fg) in im(g)
      auto df = f.domain(), ig = g.image();
      for (auto x : fg.domain()) {
        REQUIRE(std::find(df.begin(), df.end(), x) != df.end());
      }
      for (auto y : fg.image()) {
        REQUIRE(std::find(ig.begin(), ig.end(), y) != ig.end());
      }
      // kernel pairs of f survive in fg
      for (std::size_t x = 1; x <= n; ++x) {
        for (std::size_t y = 1; y <= n; ++y) {
          if (fg.is_defined(x) && fg.is_defined(y) && f[x] == f[y]) {
            REQUIRE(fg[x] == fg[y]);
          }
        }
      }
      REQUIRE(fg.rank() <= std::min(f.rank(), g.rank()));
    }
  }

  TEST_CASE("permutation properties", "[transf][property]") {
    std::mt19937_64 rng(23);
    for (std::size_t i = 0; i < 2'000; ++i) {
      auto n = 1 + rng() % 8;
      auto p = random_perm(rng, n), q = random_perm(rng, n);
      auto f = random_pt(rng, n);
      REQUIRE(p * inverse(p) == PartialTransf::identity(n));
      bool odd_pq = parity(p * q) == Parity::odd;
      REQUIRE(odd_pq
              == ((parity(p) == Parity::odd) != (parity(q) == Parity::odd)));
      REQUIRE(parity(inverse(p)) == parity(p));
      REQUIRE(kernel_type(conjugate(f, p)) == kernel_type(f));
      REQUIRE(from_cycles(n, to_cycles(p)) == p);
      REQUIRE(from_cycles(n, to_cycles(p).to_string()) == p);
    }
  }

  TEST_CASE("idempotents fix their images", "[transf][property]") {
    std::mt19937_64 rng(29);
    std::size_t     found = 0;
    for (std::size_t i = 0; i < 20'000; ++i) {
      auto n = 1 + rng() % 5;
      auto e = random_pt(rng, n);
      if (is_idempotent(e)) {
        ++found;
        for (auto y : e.image()) {
          REQUIRE(e[y] == y);
        }
      }
    }
    REQUIRE(found > 100);
  }

}  // namespace minpres
