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

// Words, relations, presentations, and assignments of letters to partial
// transformations.

#ifndef MINPRES_PRESENTATION_HPP_
#define MINPRES_PRESENTATION_HPP_

#include <algorithm>    // for find, all_of
#include <cctype>       // for toupper
#include <cstddef>      // for size_t
#include <cstdint>      // for uint32_t
#include <stdexcept>    // for invalid_argument
#include <string>       // for string
#include <string_view>  // for string_view
#include <unordered_set>  // for unordered_set
#include <utility>      // for move
#include <vector>       // for vector

#include "transf.hpp"

namespace minpres {

  using letter_type = std::uint32_t;
  using word_type   = std::vector<letter_type>;

  //! Concatenate words.
  inline word_type concat(std::initializer_list<word_type> parts) {
    word_type out;
    for (auto const& p : parts) {
      out.insert(out.end(), p.begin(), p.end());
    }
    return out;
  }

  inline word_type power(word_type const& w, std::size_t k) {
    word_type out;
    out.reserve(w.size() * k);
    for (std::size_t i = 0; i < k; ++i) {
      out.insert(out.end(), w.begin(), w.end());
    }
    return out;
  }

  //! Shortlex order: shorter first, then lexicographic on letter indices.
  inline bool shortlex_less(word_type const& u, word_type const& v) {
    if (u.size() != v.size()) {
      return u.size() < v.size();
    }
    return u < v;
  }

  struct Relation {
    word_type   lhs;
    word_type   rhs;
    std::string label;

    friend bool operator==(Relation const&, Relation const&) = default;
  };

  enum class Family {
    sn_moore,
    sn_carmichael,
    sn_moore_reduced,
    sn_small,
    in_5rel,
    in_3rel,
    tn_aizenstat,
    tn_4rel,
    tn_5rel,
    ptn_east,
    ptn_8rel,
    ptn_9rel,
    small_in,
    small_tn,
    small_ptn,
    custom
  };

  inline constexpr std::string_view family_name(Family f) {
    switch (f) {
      case Family::sn_moore: return "SN_MOORE";
      case Family::sn_carmichael: return "SN_CARMICHAEL";
      case Family::sn_moore_reduced: return "SN_MOORE_REDUCED";
      case Family::sn_small: return "SN_SMALL";
      case Family::in_5rel: return "IN_5REL";
      case Family::in_3rel: return "IN_3REL";
      case Family::tn_aizenstat: return "TN_AIZENSTAT";
      case Family::tn_4rel: return "TN_4REL";
      case Family::tn_5rel: return "TN_5REL";
      case Family::ptn_east: return "PTN_EAST";
      case Family::ptn_8rel: return "PTN_8REL";
      case Family::ptn_9rel: return "PTN_9REL";
      case Family::small_in: return "SMALL_IN";
      case Family::small_tn: return "SMALL_TN";
      case Family::small_ptn: return "SMALL_PTN";
      case Family::custom: return "CUSTOM";
    }
    return "CUSTOM";
  }

  inline Family family_from_name(std::string_view s) {
    for (auto f : {Family::sn_moore,
                   Family::sn_carmichael,
                   Family::sn_moore_reduced,
                   Family::sn_small,
                   Family::in_5rel,
                   Family::in_3rel,
                   Family::tn_aizenstat,
                   Family::tn_4rel,
                   Family::tn_5rel,
                   Family::ptn_east,
                   Family::ptn_8rel,
                   Family::ptn_9rel,
                   Family::small_in,
                   Family::small_tn,
                   Family::small_ptn,
                   Family::custom}) {
      if (family_name(f) == s) {
        return f;
      }
    }
    throw std::invalid_argument("unknown presentation family \""
                                + std::string(s) + "\"");
  }

  //! Relations of the symmetric-group part are labelled R1, R2, ...
  inline bool is_sn_label(std::string_view label) {
    return label.size() >= 2 && label[0] == 'R'
           && std::all_of(label.begin() + 1, label.end(), [](char c) {
                return c >= '0' && c <= '9';
              });
  }

  //! Replace ASCII spellings (alpha, beta, gamma, delta) by Greek letters so
  //! that "Talpha" and "Tα" name the same relation.
  inline std::string canonical_label(std::string_view label) {
    std::string out(label);
    for (auto [ascii, greek] : {std::pair{"alpha", "α"},
                                std::pair{"beta", "β"},
                                std::pair{"gamma", "γ"},
                                std::pair{"delta", "δ"}}) {
      auto pos = out.find(ascii);
      if (pos != std::string::npos) {
        out.replace(pos, std::string_view(ascii).size(), greek);
      }
    }
    return out;
  }

  //! A finite monoid presentation <A | R>.
  class Presentation {
   public:
    std::vector<std::string> alphabet;
    std::vector<Relation>    relations;
    Family                   family = Family::custom;
    std::size_t              degree = 0;

    letter_type add_letter(std::string name) {
      if (std::find(alphabet.begin(), alphabet.end(), name)
          != alphabet.end()) {
        throw std::invalid_argument("duplicate letter \"" + name + "\"");
      }
      alphabet.push_back(std::move(name));
      return static_cast<letter_type>(alphabet.size() - 1);
    }

    [[nodiscard]] bool contains_letter(std::string_view name) const {
      return std::find(alphabet.begin(), alphabet.end(), name)
             != alphabet.end();
    }

    [[nodiscard]] letter_type letter(std::string_view name) const {
      auto it = std::find(alphabet.begin(), alphabet.end(), name);
      if (it == alphabet.end()) {
        throw std::invalid_argument("unknown letter \"" + std::string(name)
                                    + "\"");
      }
      return static_cast<letter_type>(it - alphabet.begin());
    }

    void add_relation(word_type lhs, word_type rhs, std::string label = "") {
      relations.push_back({std::move(lhs), std::move(rhs), std::move(label)});
    }

    //! Index of the relation labelled \p label; throws if absent.
    [[nodiscard]] std::size_t relation_index(std::string_view label) const {
      auto want = canonical_label(label);
      for (std::size_t i = 0; i < relations.size(); ++i) {
        if (relations[i].label == want) {
          return i;
        }
      }
      throw std::invalid_argument("no relation labelled \""
                                  + std::string(label) + "\"");
    }

    //! A copy with the relation at \p index removed.
    [[nodiscard]] Presentation without_relation(std::size_t index) const {
      Presentation out = *this;
      out.relations.erase(out.relations.begin()
                          + static_cast<std::ptrdiff_t>(index));
      return out;
    }

    //! Letter names must be unique and every relation must use only letters
    //! of the alphabet.
    void validate() const {
      std::unordered_set<std::string> seen;
      for (auto const& a : alphabet) {
        if (a.empty()) {
          throw std::invalid_argument("empty letter name");
        }
        if (!seen.insert(a).second) {
          throw std::invalid_argument("duplicate letter \"" + a + "\"");
        }
      }
      for (auto const& r : relations) {
        for (auto const* w : {&r.lhs, &r.rhs}) {
          for (auto x : *w) {
            if (x >= alphabet.size()) {
              throw std::invalid_argument("relation " + r.label
                                          + " uses a letter outside the "
                                            "alphabet");
            }
          }
        }
      }
    }

    [[nodiscard]] std::string word_to_string(word_type const& w) const {
      if (w.empty()) {
        return "ε";
      }
      std::string out;
      for (auto x : w) {
        if (!out.empty()) {
          out += ' ';
        }
        out += alphabet.at(x);
      }
      return out;
    }

    friend bool operator==(Presentation const&, Presentation const&)
        = default;
  };

  //! Number of generators plus the total length of all relation words.
  inline std::size_t presentation_length(Presentation const& p) {
    std::size_t len = p.alphabet.size();
    for (auto const& r : p.relations) {
      len += r.lhs.size() + r.rhs.size();
    }
    return len;
  }

  //! Total length of the relation words not labelled as symmetric-group
  //! relations.
  inline std::size_t non_sn_length(Presentation const& p) {
    std::size_t len = 0;
    for (auto const& r : p.relations) {
      if (!is_sn_label(r.label)) {
        len += r.lhs.size() + r.rhs.size();
      }
    }
    return len;
  }

  //! The images of the letters of an alphabet, all of one degree.
  class Assignment {
   public:
    Assignment() = default;

    explicit Assignment(std::vector<PartialTransf> images)
        : _images(std::move(images)) {
      if (!_images.empty()) {
        _degree = _images.front().degree();
        for (auto const& f : _images) {
          if (f.degree() != _degree) {
            throw std::invalid_argument(
                "all images in an assignment must have the same degree");
          }
        }
      }
    }

    Assignment(std::size_t degree, std::vector<PartialTransf> images)
        : Assignment(std::move(images)) {
      if (_images.empty()) {
        _degree = degree;
      } else if (_degree != degree) {
        throw std::invalid_argument("assignment degree mismatch");
      }
    }

    [[nodiscard]] std::size_t degree() const noexcept {
      return _degree;
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return _images.size();
    }

    [[nodiscard]] PartialTransf const& operator[](letter_type a) const {
      if (a >= _images.size()) {
        throw std::invalid_argument("letter " + std::to_string(a)
                                    + " has no assigned image");
      }
      return _images[a];
    }

    [[nodiscard]] std::vector<PartialTransf> const& images() const noexcept {
      return _images;
    }

    void push_back(PartialTransf f) {
      if (_images.empty() && _degree == 0) {
        _degree = f.degree();
      } else if (f.degree() != _degree) {
        throw std::invalid_argument("assignment degree mismatch");
      }
      _images.push_back(std::move(f));
    }

    friend bool operator==(Assignment const&, Assignment const&) = default;

   private:
    std::size_t                _degree = 0;
    std::vector<PartialTransf> _images;
  };

  //! The element represented by \p w; the empty word gives the identity.
  inline PartialTransf evaluate(word_type const& w, Assignment const& asg) {
    auto const                      n = asg.degree();
    std::vector<detail::point_type> cur(n);
    for (std::size_t i = 0; i < n; ++i) {
      cur[i] = static_cast<detail::point_type>(i);
    }
    for (auto a : w) {
      auto g = asg[a].raw();
      for (auto& x : cur) {
        if (x != detail::UNDEF_PT) {
          x = g[x];
        }
      }
    }
    return PartialTransf::from_raw(cur);
  }

  //! The monoids whose presentations are built and verified here.
  enum class MonoidFamily { sn, in, tn, ptn };

  inline constexpr std::string_view monoid_family_name(MonoidFamily f) {
    switch (f) {
      case MonoidFamily::sn: return "SN";
      case MonoidFamily::in: return "IN";
      case MonoidFamily::tn: return "TN";
      case MonoidFamily::ptn: return "PTN";
    }
    return "SN";
  }

  //! Accepts "SN", "IN", "TN", "PTN" in either case; "pt" is accepted for
  //! "PTN".
  inline MonoidFamily monoid_family_from_name(std::string_view s) {
    std::string u;
    for (char c : s) {
      u += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    if (u == "SN") {
      return MonoidFamily::sn;
    } else if (u == "IN") {
      return MonoidFamily::in;
    } else if (u == "TN") {
      return MonoidFamily::tn;
    } else if (u == "PTN" || u == "PT") {
      return MonoidFamily::ptn;
    }
    throw std::invalid_argument("unknown monoid family \"" + std::string(s)
                                + "\"");
  }

  //! A presentation together with the images of its letters.
  struct BoundPresentation {
    Presentation presentation;
    Assignment   assignment;

    friend bool operator==(BoundPresentation const&, BoundPresentation const&)
        = default;
  };

  //! A presentation for a symmetric group S_n with its letters assigned to
  //! permutations of degree n.
  using SnPresentation = BoundPresentation;

}  // namespace minpres

#endif  // MINPRES_PRESENTATION_HPP_
