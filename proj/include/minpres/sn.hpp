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

// Presentations for the symmetric group, and shortlex words for permutations
// over the generators of such a presentation.

#ifndef MINPRES_SN_HPP_
#define MINPRES_SN_HPP_

#include <algorithm>      // for reverse
#include <cstddef>        // for size_t
#include <cstdint>        // for uint64_t
#include <limits>         // for numeric_limits
#include <stdexcept>      // for invalid_argument, runtime_error
#include <string>         // for string, to_string
#include <unordered_map>  // for unordered_map
#include <vector>         // for vector

#include "cycles.hpp"
#include "presentation.hpp"
#include "transf.hpp"

namespace minpres {

  namespace detail {
    inline void add_sn_relation(Presentation& p, word_type lhs, word_type rhs) {
      p.add_relation(std::move(lhs),
                     std::move(rhs),
                     "R" + std::to_string(p.relations.size() + 1));
    }

    inline void require_degree(std::size_t n, std::size_t min, char const* who) {
      if (n < min) {
        throw std::invalid_argument(std::string(who) + " requires n >= "
                                    + std::to_string(min) + ", found "
                                    + std::to_string(n));
      }
      check_degree(n);
    }
  }  // namespace detail

  //! Moore's presentation: a = (1,2), b = (1,2,...,n), with the n + 1
  //! relators a^2, b^n, (ba)^(n-1), (ab^(n-1)ab)^3 and (ab^(n-j)ab^j)^2 for
  //! 2 <= j <= n-2, each stored as w = e.
  inline SnPresentation moore(std::size_t n) {
    detail::require_degree(n, 4, "moore");
    SnPresentation sp;
    auto&          p = sp.presentation;
    p.family         = Family::sn_moore;
    p.degree         = n;
    word_type a{p.add_letter("a")};
    word_type b{p.add_letter("b")};
    detail::add_sn_relation(p, power(a, 2), {});
    detail::add_sn_relation(p, power(b, n), {});
    detail::add_sn_relation(p, power(concat({b, a}), n - 1), {});
    detail::add_sn_relation(
        p, power(concat({a, power(b, n - 1), a, b}), 3), {});
    for (std::size_t j = 2; j + 1 < n; ++j) {
      detail::add_sn_relation(
          p, power(concat({a, power(b, n - j), a, power(b, j)}), 2), {});
    }
    sp.assignment = Assignment(
        {from_cycles(n, "(1,2)"), interval_cycle(n, 1, n)});
    return sp;
  }

  //! Carmichael's presentation with a_i = (1,i) for 2 <= i <= n, and the
  //! convention a_(n+1) = a_2.
  inline SnPresentation carmichael(std::size_t n) {
    detail::require_degree(n, 4, "carmichael");
    SnPresentation sp;
    auto&          p = sp.presentation;
    p.family         = Family::sn_carmichael;
    p.degree         = n;
    std::vector<PartialTransf> images;
    for (std::size_t i = 2; i <= n; ++i) {
      p.add_letter("a_" + std::to_string(i));
      images.push_back(cycle(n, {1, i}));
    }
    // a_i is letter i - 2; next(i) implements a_(n+1) = a_2
    auto letter = [](std::size_t i) {
      return word_type{static_cast<letter_type>(i - 2)};
    };
    auto next = [n](std::size_t i) { return i == n ? 2 : i + 1; };
    for (std::size_t i = 2; i <= n; ++i) {
      detail::add_sn_relation(p, power(letter(i), 2), {});
    }
    for (std::size_t i = 2; i <= n; ++i) {
      detail::add_sn_relation(
          p, power(concat({letter(i), letter(next(i))}), 3), {});
    }
    for (std::size_t i = 2; i <= n; ++i) {
      for (std::size_t j = 2; j <= n; ++j) {
        if (j == i || j == next(i)) {
          continue;
        }
        auto ai = letter(i);
        detail::add_sn_relation(
            p, power(concat({ai, letter(next(i)), ai, letter(j)}), 2), {});
      }
    }
    sp.assignment = Assignment(std::move(images));
    return sp;
  }

  //! The modification of Moore's presentation with O(n) relations, over
  //! a = (1,2), b = (1,...,n) and c_j = b^j for 2 <= j <= n-2.
  inline SnPresentation moore_reduced(std::size_t n) {
    detail::require_degree(n, 5, "moore_reduced");
    SnPresentation sp;
    auto&          p = sp.presentation;
    p.family         = Family::sn_moore_reduced;
    p.degree         = n;
    word_type a{p.add_letter("a")};
    word_type b{p.add_letter("b")};
    auto      bn = interval_cycle(n, 1, n);
    std::vector<PartialTransf> images{from_cycles(n, "(1,2)"), bn};
    auto                       bj = bn;
    for (std::size_t j = 2; j + 1 < n; ++j) {
      p.add_letter("c_" + std::to_string(j));
      bj = bj * bn;
      images.push_back(bj);
    }
    auto c = [](std::size_t j) {
      return word_type{static_cast<letter_type>(j)};
    };
    detail::add_sn_relation(p, power(a, 2), {});
    detail::add_sn_relation(p, power(b, n), {});
    detail::add_sn_relation(p, power(concat({b, a}), n - 1), {});
    detail::add_sn_relation(
        p, power(concat({a, power(b, n - 1), a, b}), 3), {});
    detail::add_sn_relation(p, c(2), power(b, 2));
    for (std::size_t j = 2; j + 2 < n; ++j) {
      detail::add_sn_relation(p, c(j + 1), concat({c(j), b}));
    }
    for (std::size_t j = 2; j + 1 < n; ++j) {
      detail::add_sn_relation(
          p, power(concat({a, c(n - j), a, c(j)}), 2), {});
    }
    sp.assignment = Assignment(std::move(images));
    return sp;
  }

  //! Presentations for S_1, S_2 and S_3 over the transpositions a_i = (1,i):
  //! S_1 is empty, S_2 is <a_2 | a_2^2 = 1>, and S_3 adds a_3^2 = 1 and
  //! a_2 a_3 a_2 = a_3 a_2 a_3.
  inline SnPresentation small_sn(std::size_t n) {
    if (n < 1 || n > 3) {
      throw std::invalid_argument("small_sn requires 1 <= n <= 3, found "
                                  + std::to_string(n));
    }
    SnPresentation sp;
    auto&          p = sp.presentation;
    p.family         = Family::sn_small;
    p.degree         = n;
    std::vector<PartialTransf> images;
    for (std::size_t i = 2; i <= n; ++i) {
      p.add_letter("a_" + std::to_string(i));
      images.push_back(cycle(n, {1, i}));
    }
    if (n >= 2) {
      detail::add_sn_relation(p, {0, 0}, {});
    }
    if (n == 3) {
      detail::add_sn_relation(p, {1, 1}, {});
      detail::add_sn_relation(p, {0, 1, 0}, {1, 0, 1});
    }
    sp.assignment = Assignment(n, std::move(images));
    return sp;
  }

  enum class SnKind { moore, carmichael, moore_reduced };

  inline constexpr std::string_view sn_kind_name(SnKind k) {
    switch (k) {
      case SnKind::moore: return "moore";
      case SnKind::carmichael: return "carmichael";
      case SnKind::moore_reduced: return "moore-reduced";
    }
    return "moore";
  }

  inline SnKind sn_kind_from_name(std::string_view s) {
    for (auto k : {SnKind::moore, SnKind::carmichael, SnKind::moore_reduced}) {
      if (sn_kind_name(k) == s) {
        return k;
      }
    }
    throw std::invalid_argument("unknown symmetric group presentation \""
                                + std::string(s) + "\"");
  }

  inline SnPresentation make_sn(SnKind k, std::size_t n) {
    switch (k) {
      case SnKind::moore: return moore(n);
      case SnKind::carmichael: return carmichael(n);
      case SnKind::moore_reduced: return moore_reduced(n);
    }
    return moore(n);
  }

  //! Default number of permutations a word search may visit.
  inline constexpr std::size_t DEFAULT_PERM_SEARCH_BUDGET = 40'000'000;

  //! Shortlex-least words over the letters of \p sp for each permutation in
  //! \p targets.
  //!
  //! Breadth-first search over the Cayley graph of S_n, expanding letters in
  //! alphabet order, so the first word to reach a permutation is its
  //! shortlex-least representative. The search stops when every target has
  //! been reached. Throws std::runtime_error if more than \p budget
  //! permutations are visited first.
  inline std::vector<word_type>
  words_for_permutations(SnPresentation const&             sp,
                         std::vector<PartialTransf> const& targets,
                         std::size_t budget = DEFAULT_PERM_SEARCH_BUDGET) {
    auto const n = sp.assignment.degree();
    if (n > 16) {
      throw std::invalid_argument(
          "word search supports degree at most 16, found "
          + std::to_string(n));
    }
    for (auto const& t : targets) {
      if (t.degree() != n || !t.is_permutation()) {
        throw std::invalid_argument("target " + to_string(t)
                                    + " is not a permutation of degree "
                                    + std::to_string(n));
      }
    }
    auto const& gens = sp.assignment.images();
    for (auto const& g : gens) {
      if (!g.is_permutation()) {
        throw std::invalid_argument("generator " + to_string(g)
                                    + " is not a permutation");
      }
    }

    // Permutations are packed 4 bits per point.
    auto pack = [n](auto const& img) {
      std::uint64_t k = 0;
      for (std::size_t i = 0; i < n; ++i) {
        k |= static_cast<std::uint64_t>(img[i]) << (4 * i);
      }
      return k;
    };

    std::vector<std::size_t>                    found(targets.size(),
                                   std::numeric_limits<std::size_t>::max());
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> wanted;
    std::size_t                                 remaining = 0;
    for (std::size_t i = 0; i < targets.size(); ++i) {
      auto& v = wanted[pack(targets[i].raw())];
      if (v.empty()) {
        ++remaining;
      }
      v.push_back(i);
    }

    std::vector<std::uint64_t>                   nodes;
    std::vector<std::uint32_t>                   parent;
    std::vector<letter_type>                     last;
    std::unordered_map<std::uint64_t, std::uint32_t> seen;

    auto visit = [&](std::uint64_t key, std::uint32_t par, letter_type x) {
      if (!seen.emplace(key, static_cast<std::uint32_t>(nodes.size()))
               .second) {
        return;
      }
      if (nodes.size() >= budget) {
        throw std::runtime_error(
            "permutation word search exceeded its budget of "
            + std::to_string(budget));
      }
      auto it = wanted.find(key);
      if (it != wanted.end()) {
        for (auto i : it->second) {
          found[i] = nodes.size();
        }
        --remaining;
      }
      nodes.push_back(key);
      parent.push_back(par);
      last.push_back(x);
    };

    visit(pack(PartialTransf::identity(n).raw()), 0, 0);
    std::vector<detail::point_type> cur(n), nxt(n);
    for (std::size_t pos = 0; remaining > 0 && pos < nodes.size(); ++pos) {
      auto key = nodes[pos];
      for (std::size_t i = 0; i < n; ++i) {
        cur[i] = static_cast<detail::point_type>((key >> (4 * i)) & 0xF);
      }
      for (letter_type x = 0; x < gens.size() && remaining > 0; ++x) {
        auto g = gens[x].raw();
        for (std::size_t i = 0; i < n; ++i) {
          nxt[i] = g[cur[i]];
        }
        visit(pack(nxt), static_cast<std::uint32_t>(pos), x);
      }
    }
    if (remaining > 0) {
      throw std::runtime_error(
          "the generators do not generate every target permutation");
    }

    std::vector<word_type> out;
    out.reserve(targets.size());
    for (auto idx : found) {
      word_type w;
      while (idx != 0) {
        w.push_back(last[idx]);
        idx = parent[idx];
      }
      std::reverse(w.begin(), w.end());
      out.push_back(std::move(w));
    }
    return out;
  }

  //! The shortlex-least word over the letters of \p sp representing \p p.
  inline word_type word_for_permutation(SnPresentation const& sp,
                                        PartialTransf const&  p) {
    return words_for_permutations(sp, {p}).front();
  }

}  // namespace minpres

#endif  // MINPRES_SN_HPP_
