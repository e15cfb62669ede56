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

#include <string>  // for string
#include <vector>  // for vector

#include "catch2/catch_amalgamated.hpp"

#include "minpres/builders.hpp"
#include "minpres/change_alphabet.hpp"
#include "minpres/cycles.hpp"
#include "minpres/froidure_pin.hpp"
#include "minpres/io.hpp"
#include "minpres/presentation.hpp"
#include "minpres/sn.hpp"
#include "minpres/verification.hpp"

namespace minpres {

  namespace {
    Relation const& relation(Presentation const& p, std::string_view label) {
      return p.relations.at(p.relation_index(label));
    }

    bool has_relation(Presentation const& p, word_type const& lhs,
                      word_type const& rhs) {
      for (auto const& r : p.relations) {
        if (r.lhs == lhs && r.rhs == rhs) {
          return true;
        }
      }
      return false;
    }

    std::size_t non_sn(Presentation const& p) {
      std::size_t k = 0;
      for (auto const& r : p.relations) {
        k += !is_sn_label(r.label);
      }
      return k;
    }

    std::vector<std::string> non_sn_labels(Presentation const& p) {
      std::vector<std::string> out;
      for (auto const& r : p.relations) {
        if (!is_sn_label(r.label)) {
          out.push_back(r.label);
        }
      }
      return out;
    }
  }  // namespace

  TEST_CASE("words", "[presentations]") {
    REQUIRE(concat({{0, 1}, {}, {2}}) == word_type{0, 1, 2});
    REQUIRE(power({0, 1}, 3) == word_type{0, 1, 0, 1, 0, 1});
    REQUIRE(power({0}, 0).empty());
    REQUIRE(shortlex_less({1}, {0, 0}));
    REQUIRE(shortlex_less({0, 1}, {1, 0}));
    REQUIRE_FALSE(shortlex_less({0}, {0}));
  }

  TEST_CASE("presentation bookkeeping", "[presentations]") {
    Presentation p;
    p.add_letter("a");
    p.add_letter("b");
    REQUIRE_THROWS_AS(p.add_letter("a"), std::invalid_argument);
    p.add_relation({0, 0}, {}, "R1");
    p.add_relation({0, 1}, {1, 0}, "X1");
    REQUIRE(p.relation_index("X1") == 1);
    REQUIRE_THROWS_AS(p.relation_index("X2"), std::invalid_argument);
    REQUIRE(p.without_relation(0).relations.size() == 1);
    REQUIRE(p.word_to_string({}) == "ε");
    REQUIRE(p.word_to_string({0, 1}) == "a b");
    REQUIRE(presentation_length(p) == 2 + 2 + 4);
    REQUIRE(non_sn_length(p) == 4);
    REQUIRE_NOTHROW(p.validate());
    p.add_relation({2}, {}, "X2");
    REQUIRE_THROWS_AS(p.validate(), std::invalid_argument);
    REQUIRE(canonical_label("Palpha") == "Pα");
    REQUIRE(is_sn_label("R12"));
    REQUIRE_FALSE(is_sn_label("T7"));
    REQUIRE(family_from_name(family_name(Family::tn_4rel)) == Family::tn_4rel);
  }

  TEST_CASE("Moore's presentation", "[presentations]") {
    auto sp = moore(4);
    REQUIRE(sp.presentation.relations.size() == 5);
    REQUIRE(sp.assignment[0] == PartialTransf::from_images({2, 1, 3, 4}));
    REQUIRE(sp.assignment[1] == PartialTransf::from_images({2, 3, 4, 1}));
    for (std::size_t n = 4; n <= 9; ++n) {
      REQUIRE(moore(n).presentation.relations.size() == n + 1);
      REQUIRE(check_relations(moore(n)).empty());
    }
    REQUIRE_THROWS_AS(moore(3), std::invalid_argument);
  }

  TEST_CASE("Carmichael's presentation", "[presentations]") {
    auto sp = carmichael(4);
    REQUIRE(sp.presentation.alphabet
            == std::vector<std::string>{"a_2", "a_3", "a_4"});
    // (a_4 a_2)^3 = e
    REQUIRE(has_relation(sp.presentation, power({2, 0}, 3), {}));
    for (std::size_t n = 4; n <= 8; ++n) {
      auto const& p = carmichael(n).presentation;
      REQUIRE(p.alphabet.size() == n - 1);
      // squares, the cyclic braids, and the commuting-type relations
      REQUIRE(p.relations.size() == 2 * (n - 1) + (n - 1) * (n - 3));
      REQUIRE(check_relations(carmichael(n)).empty());
    }
    REQUIRE_THROWS_AS(carmichael(3), std::invalid_argument);
  }

  TEST_CASE("reduced Moore presentation", "[presentations]") {
    auto sp = moore_reduced(6);
    REQUIRE(sp.presentation.alphabet
            == std::vector<std::string>{"a", "b", "c_2", "c_3", "c_4"});
    // c_2 = b^2
    REQUIRE(has_relation(sp.presentation, {2}, {1, 1}));
    for (std::size_t n = 5; n <= 9; ++n) {
      REQUIRE(check_relations(moore_reduced(n)).empty());
      REQUIRE(moore_reduced(n).presentation.relations.size() == 2 * n - 2);
    }
    REQUIRE_THROWS_AS(moore_reduced(4), std::invalid_argument);
  }

  TEST_CASE("small symmetric groups", "[presentations]") {
    REQUIRE(small_sn(1).presentation.relations.empty());
    REQUIRE(small_sn(2).presentation.relations.size() == 1);
    REQUIRE(check_relations(small_sn(3)).empty());
    REQUIRE_THROWS_AS(small_sn(4), std::invalid_argument);
  }

  TEST_CASE("shortlex words for permutations", "[presentations]") {
    for (std::size_t n = 4; n <= 8; ++n) {
      auto sp = moore(n);
      REQUIRE(word_for_permutation(sp, interval_cycle(n, 2, n)).size() == 2);
      REQUIRE(word_for_permutation(sp, cycle(n, {1, 2})) == word_type{0});
    }
    REQUIRE(word_for_permutation(moore(4), cycle(4, {2, 3})).size() == 5);
    REQUIRE(word_for_permutation(moore(5), PartialTransf::identity(5))
                .empty());
  }

  TEST_CASE("symmetric inverse monoid builders", "[presentations]") {
    auto sp = moore(4);
    auto bp = in_5rel(sp);
    auto const& p = bp.presentation;
    REQUIRE(p.alphabet.back() == "eta");
    REQUIRE(non_sn_labels(p)
            == std::vector<std::string>{"I1", "I2", "I3", "I4", "I5"});
    letter_type eta = p.letter("eta");
    REQUIRE(relation(p, "I1").lhs == word_type{eta, eta});
    REQUIRE(relation(p, "I1").rhs == word_type{eta});
    auto t = word_for_permutation(sp, cycle(4, {1, 2}));
    REQUIRE(relation(p, "I4").lhs == concat({{eta}, t, {eta}, t}));
    REQUIRE(relation(p, "I4").rhs == concat({{eta}, t, {eta}}));
    REQUIRE(bp.assignment[eta].domain()
            == std::vector<std::size_t>{2, 3, 4});

    for (std::size_t n = 4; n <= 7; ++n) {
      auto b3 = in_3rel(moore(n));
      REQUIRE(non_sn_labels(b3.presentation)
              == std::vector<std::string>{"I2", "I6", "I7"});
      REQUIRE(check_relations(b3).empty());
      REQUIRE(evaluate(relation(b3.presentation, "I6").lhs, b3.assignment)
                  .rank()
              == n - 1);
      REQUIRE(evaluate(relation(b3.presentation, "I7").lhs, b3.assignment)
                  .rank()
              == n - 2);
    }
    REQUIRE_NOTHROW(in_3rel(small_sn(3)));
    REQUIRE_THROWS_AS(in_3rel(small_sn(2)), std::invalid_argument);
  }

  TEST_CASE("full transformation monoid builders", "[presentations]") {
    auto sp = moore(5);
    auto ai = tn_aizenstat(sp);
    REQUIRE(non_sn(ai.presentation) == 7);
    letter_type zeta = ai.presentation.letter("zeta");
    REQUIRE(ai.assignment[zeta]
            == PartialTransf::from_images({1, 1, 3, 4, 5}));
    auto t12 = word_for_permutation(sp, cycle(5, {1, 2}));
    REQUIRE(relation(ai.presentation, "T2").lhs
            == concat({t12, {zeta}}));
    REQUIRE(relation(ai.presentation, "T2").rhs == word_type{zeta});

    auto p7 = tn_4rel_params(7);
    REQUIRE(p7.alpha == cycle(7, {3, 4}));
    REQUIRE(p7.beta == cycle(7, {3, 4, 5, 6, 7}));
    auto p8 = tn_4rel_params(8);
    REQUIRE(p8.alpha == interval_cycle(8, 3, 8));
    REQUIRE(p8.beta == cycle(8, {3, 7, 6, 4, 5}));
    REQUIRE_THROWS_AS(tn_4rel(moore(6)), std::invalid_argument);
    REQUIRE_THROWS_AS(tn_4rel(moore(4)), std::invalid_argument);
    for (std::size_t n : {5, 7, 8, 9}) {
      auto b = tn_4rel(carmichael(n));
      REQUIRE(non_sn_labels(b.presentation)
              == std::vector<std::string>{"T7", "T8", "Tα", "Tβ"});
      REQUIRE(check_relations(b).empty());
    }

    auto t5 = tn_5rel(moore(6));
    REQUIRE(non_sn_labels(t5.presentation)
            == std::vector<std::string>{"T1", "T3", "T7", "T8", "T9"});
    REQUIRE(check_relations(t5).empty());
    // T9: (3,...,n)(1,2) zeta = zeta (3,...,n)
    auto const& t9 = relation(t5.presentation, "T9");
    auto&       a6 = t5.assignment;
    REQUIRE(evaluate(t9.lhs, a6)
            == interval_cycle(6, 3, 6) * cycle(6, {1, 2}) * zeta_of_degree(6));
  }

  TEST_CASE("partial transformation monoid builders", "[presentations]") {
    auto sp   = moore(4);
    auto east = ptn_east(sp);
    auto const& p = east.presentation;
    REQUIRE(p.contains_letter("zeta"));
    REQUIRE(p.contains_letter("eta"));
    REQUIRE(non_sn(p) == 12);
    // P3: zeta eta = eta (1,2) eta
    auto t12 = word_for_permutation(sp, cycle(4, {1, 2}));
    auto z = p.letter("zeta"), e = p.letter("eta");
    REQUIRE(relation(p, "P3").lhs == word_type{z, e});
    REQUIRE(relation(p, "P3").rhs == concat({{e}, t12, {e}}));
    REQUIRE(check_relations(east).empty());

    auto p7 = ptn_8rel_params(7);
    REQUIRE(p7.delta == from_cycles(7, "(2,3)(4,6)"));
    REQUIRE(p7.beta == cycle(7, {4, 6}));
    auto p8 = ptn_8rel_params(8);
    REQUIRE(p8.gamma == cycle(8, {2, 3, 5, 4}));
    REQUIRE(p8.alpha == cycle(8, {3, 5, 4}));
    REQUIRE_THROWS_AS(ptn_8rel(carmichael(6)), std::invalid_argument);
    for (std::size_t n = 7; n <= 10; ++n) {
      auto b = ptn_8rel(carmichael(n));
      REQUIRE(non_sn_labels(b.presentation)
              == std::vector<std::string>{
                  "T7", "T8", "P5", "P6", "Pα", "Pβ", "Pγ", "Pδ"});
      REQUIRE(check_relations(b).empty());
    }

    auto nine = ptn_9rel(moore(5));
    REQUIRE(non_sn(nine.presentation) == 9);
    REQUIRE(check_relations(nine).empty());
    // P7: (2,3) eta (2,3) = eta (1,2) zeta (1,2)
    auto const& p7r = relation(nine.presentation, "P7");
    auto        t23 = cycle(5, {2, 3}), u12 = cycle(5, {1, 2});
    REQUIRE(evaluate(p7r.lhs, nine.assignment)
            == t23 * eta_of_degree(5) * t23);
    REQUIRE(evaluate(p7r.rhs, nine.assignment)
            == eta_of_degree(5) * u12 * zeta_of_degree(5) * u12);
  }

  TEST_CASE("builders accept any symmetric group presentation",
            "[presentations]") {
    for (auto kind :
         {SnKind::moore, SnKind::carmichael, SnKind::moore_reduced}) {
      auto sp = make_sn(kind, 5);
      for (auto const& bp : {in_5rel(sp),
                             in_3rel(sp),
                             tn_aizenstat(sp),
                             tn_4rel(sp),
                             tn_5rel(sp),
                             ptn_east(sp),
                             ptn_9rel(sp)}) {
        REQUIRE_NOTHROW(bp.presentation.validate());
        REQUIRE(check_relations(bp).empty());
        // the S_n relations come first and are unchanged
        for (std::size_t i = 0; i < sp.presentation.relations.size(); ++i) {
          REQUIRE(bp.presentation.relations[i]
                  == sp.presentation.relations[i]);
        }
      }
    }
  }

  TEST_CASE("builders are deterministic", "[presentations]") {
    REQUIRE(ptn_east(moore(6)) == ptn_east(moore(6)));
    REQUIRE(tn_4rel(carmichael(9)) == tn_4rel(carmichael(9)));
  }

  TEST_CASE("small presentations", "[presentations]") {
    auto in2 = small_presentation(MonoidFamily::in, 2);
    REQUIRE(in2.presentation.alphabet
            == std::vector<std::string>{"x", "eta"});
    REQUIRE(in2.presentation.relations.size() == 3);
    REQUIRE(has_relation(in2.presentation, {0, 0}, {}));
    REQUIRE(has_relation(in2.presentation, {1, 1}, {1}));
    REQUIRE(has_relation(in2.presentation, {0, 1, 0, 1, 0, 1, 0}, {1, 0, 1}));

    REQUIRE(non_sn(small_presentation(MonoidFamily::tn, 6).presentation)
            == 4);
    REQUIRE(non_sn(small_presentation(MonoidFamily::ptn, 2).presentation)
            == 4);
    REQUIRE(small_presentation(MonoidFamily::tn, 1)
                .presentation.alphabet.empty());
    auto pt1 = small_presentation(MonoidFamily::ptn, 1);
    REQUIRE(pt1.presentation.alphabet == std::vector<std::string>{"x"});
    REQUIRE(has_relation(pt1.presentation, {0, 0}, {0}));

    for (auto [f, n] : std::vector<std::pair<MonoidFamily, std::size_t>>{
             {MonoidFamily::in, 1},  {MonoidFamily::in, 2},
             {MonoidFamily::in, 3},  {MonoidFamily::tn, 1},
             {MonoidFamily::tn, 2},  {MonoidFamily::tn, 3},
             {MonoidFamily::tn, 4},  {MonoidFamily::tn, 6},
             {MonoidFamily::ptn, 1}, {MonoidFamily::ptn, 2},
             {MonoidFamily::ptn, 3}, {MonoidFamily::ptn, 4},
             {MonoidFamily::ptn, 5}, {MonoidFamily::ptn, 6}}) {
      auto bp = small_presentation(f, n);
      REQUIRE(check_relations(bp).empty());
    }
    REQUIRE_THROWS_AS(small_presentation(MonoidFamily::tn, 5),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(small_presentation(MonoidFamily::in, 4),
                      std::invalid_argument);
    REQUIRE_NOTHROW(small_presentation(MonoidFamily::ptn, 5, moore(5)));
  }

  TEST_CASE("text and JSON round trips", "[presentations][io]") {
    for (auto const& bp :
         {in_3rel(moore(4)), ptn_east(carmichael(5)),
          small_presentation(MonoidFamily::tn, 1),
          small_presentation(MonoidFamily::in, 2)}) {
      auto const& p = bp.presentation;
      REQUIRE(parse_text(to_text(p)) == p);
      REQUIRE(parse_json(to_json(p).dump()) == p);
      REQUIRE(to_text(parse_text(to_text(p))) == to_text(p));
    }
    auto p = parse_text("# comment\nx y = y x\nx x = ε\n");
    REQUIRE(p.alphabet == std::vector<std::string>{"x", "y"});
    REQUIRE(p.relations.size() == 2);
    REQUIRE(p.relations[1].rhs.empty());
    REQUIRE_THROWS(parse_text("x y y\n"));
    REQUIRE_THROWS(parse_text("@alphabet x\nx z = x\n"));
  }

  TEST_CASE("changing the generating set", "[presentations]") {
    SECTION("cyclic group of order six") {
      Presentation p;
      p.add_letter("a");
      p.add_relation(power({0}, 6), {}, "C1");
      Assignment asg_a({cycle(5, {1, 2, 3}) * cycle(5, {4, 5})});
      auto       a  = asg_a[0];
      Assignment asg_b({a * a, a * a * a});
      auto       q  = change_alphabet(p, asg_a, {"b", "c"}, asg_b);
      REQUIRE(q.alphabet == std::vector<std::string>{"b", "c"});
      REQUIRE(q.relations.size() == 3);
      REQUIRE(q.relations[0].lhs == power({0, 0, 1}, 6));
      REQUIRE(q.relations[0].rhs.empty());
      REQUIRE(q.relations[1].label == "B1");
      REQUIRE(q.relations[1].lhs == power({0, 0, 1}, 2));
      REQUIRE(q.relations[1].rhs == word_type{0});
      REQUIRE(q.relations[2].label == "B2");
      REQUIRE(q.relations[2].lhs == power({0, 0, 1}, 3));
      REQUIRE(q.relations[2].rhs == word_type{1});
      BoundPresentation bq{q, asg_b};
      REQUIRE(check_relations(bq).empty());
    }
    SECTION("Moore to Carmichael generators") {
      auto m  = moore(4);
      auto c  = carmichael(4);
      auto q  = change_alphabet(m.presentation, m.assignment,
                               c.presentation.alphabet, c.assignment);
      BoundPresentation bq{q, c.assignment};
      REQUIRE(check_relations(bq).empty());
      REQUIRE(q.relations.size()
              >= m.presentation.relations.size());
    }
    SECTION("a presentation over a different generating set keeps its "
            "non-S_n relation count") {
      auto m  = in_5rel(moore(5));
      auto c  = carmichael(5);
      auto images = c.assignment.images();
      images.push_back(eta_of_degree(5));
      auto alphabet = c.presentation.alphabet;
      alphabet.push_back("eta");
      Assignment asg(images);
      auto q = change_alphabet(m.presentation, m.assignment, alphabet, asg);
      BoundPresentation bq{q, asg};
      REQUIRE(check_relations(bq).empty());
      std::size_t rewritten = 0;
      for (auto const& r : q.relations) {
        rewritten += r.label.starts_with("I");
      }
      REQUIRE(rewritten == 5);
    }
    SECTION("identity change") {
      auto m = moore(4);
      auto q = change_alphabet(m.presentation, m.assignment,
                               m.presentation.alphabet, m.assignment);
      REQUIRE(q.relations.size() == m.presentation.relations.size());
    }
    SECTION("different monoids are rejected") {
      auto m = moore(4);
      Assignment other({cycle(4, {1, 2}), cycle(4, {3, 4})});
      REQUIRE_THROWS(change_alphabet(m.presentation, m.assignment,
                                     {"x", "y"}, other));
    }
  }

}  // namespace minpres
