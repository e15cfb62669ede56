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

// Rewriting a presentation over a new generating set of the same monoid.

#ifndef MINPRES_CHANGE_ALPHABET_HPP_
#define MINPRES_CHANGE_ALPHABET_HPP_

#include <cstddef>    // for std::size_t
#include <stdexcept>  // for std::invalid_argument
#include <string>     // for std::string
#include <vector>     // for std::vector

#include "froidure_pin.hpp"
#include "presentation.hpp"

namespace minpres {

  namespace detail {
    // Shortlex least words over the generators of \p m for each of \p fs.
    inline std::vector<word_type>
    words_in(EnumeratedMonoid const&           m,
             std::vector<PartialTransf> const& fs,
             char const*                       what) {
      std::vector<word_type> out;
      for (auto const& f : fs) {
        auto i = m.index_of(f);
        if (!i) {
          throw std::invalid_argument(
              std::string("the assignments do not generate the same monoid: ")
              + what);
        }
        out.push_back(m.word(*i));
      }
      return out;
    }

    inline word_type substitute(word_type const&              w,
                                std::vector<word_type> const& images) {
      word_type out;
      for (auto a : w) {
        out.insert(out.end(), images[a].begin(), images[a].end());
      }
      return out;
    }
  }  // namespace detail

  //! A presentation over \p B for the monoid that \p p presents over its own
  //! alphabet via \p asg_a, where \p asg_b assigns the letters of \p B.
  //!
  //! Each letter of either alphabet is written as the shortlex least word in
  //! the other. The result holds the images of the relations of \p p
  //! together with b' = b for every letter b, where b' is the image of the
  //! word for b. Relations whose sides coincide are dropped. Labels of
  //! rewritten relations are kept; the added relations are labelled "B1",
  //! "B2", ... in the order of \p B.
  inline Presentation change_alphabet(Presentation const&             p,
                                      Assignment const&               asg_a,
                                      std::vector<std::string> const& b,
                                      Assignment const&               asg_b,
                                      std::size_t limit = DEFAULT_FP_LIMIT) {
    p.validate();
    if (asg_a.size() != p.alphabet.size() || asg_b.size() != b.size()) {
      throw std::invalid_argument("every letter must be assigned");
    }
    if (asg_a.degree() != asg_b.degree()) {
      throw std::invalid_argument("assignments of different degrees");
    }
    auto ma = froidure_pin(asg_a, limit);
    auto mb = froidure_pin(asg_b, limit);
    if (!ma.complete() || !mb.complete()) {
      throw std::invalid_argument("the generated monoid exceeds the limit");
    }
    // a -> word over B, b -> word over A
    auto a_to_b = detail::words_in(mb, asg_a.images(), "A not in <B>");
    auto b_to_a = detail::words_in(ma, asg_b.images(), "B not in <A>");

    Presentation out;
    for (auto const& name : b) {
      out.add_letter(name);
    }
    out.family = Family::custom;
    out.degree = p.degree;
    for (auto const& r : p.relations) {
      auto lhs = detail::substitute(r.lhs, a_to_b);
      auto rhs = detail::substitute(r.rhs, a_to_b);
      if (lhs != rhs) {
        out.add_relation(std::move(lhs), std::move(rhs), r.label);
      }
    }
    for (letter_type x = 0; x < b.size(); ++x) {
      auto lhs = detail::substitute(b_to_a[x], a_to_b);
      if (lhs != word_type{x}) {
        out.add_relation(
            std::move(lhs), word_type{x}, "B" + std::to_string(x + 1));
      }
    }
    return out;
  }

}  // namespace minpres

#endif  // MINPRES_CHANGE_ALPHABET_HPP_
