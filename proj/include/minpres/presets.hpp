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

// Named presentations: a builder together with the monoid it presents.

#ifndef MINPRES_PRESETS_HPP_
#define MINPRES_PRESETS_HPP_

#include <array>        // for std::array
#include <cctype>       // for std::isspace
#include <cstddef>      // for std::size_t
#include <optional>     // for std::optional
#include <stdexcept>    // for std::invalid_argument
#include <string>       // for std::string
#include <string_view>  // for std::string_view

#include "builders.hpp"
#include "cycles.hpp"
#include "io.hpp"
#include "presentation.hpp"
#include "sn.hpp"
#include "verification.hpp"

namespace minpres {

  enum class Preset { in3, in5, tn_aizenstat, tn4, tn5, pt_east, pt8, pt9, small };

  inline constexpr std::array<Preset, 9> ALL_PRESETS = {Preset::in3,
                                                        Preset::in5,
                                                        Preset::tn_aizenstat,
                                                        Preset::tn4,
                                                        Preset::tn5,
                                                        Preset::pt_east,
                                                        Preset::pt8,
                                                        Preset::pt9,
                                                        Preset::small};

  inline constexpr std::string_view preset_name(Preset p) {
    switch (p) {
      case Preset::in3: return "in3";
      case Preset::in5: return "in5";
      case Preset::tn_aizenstat: return "tn-aizenstat";
      case Preset::tn4: return "tn4";
      case Preset::tn5: return "tn5";
      case Preset::pt_east: return "pt-east";
      case Preset::pt8: return "pt8";
      case Preset::pt9: return "pt9";
      case Preset::small: return "small";
    }
    return "small";
  }

  //! The family presented by \p p, or nothing for the small presentations,
  //! which exist for each family.
  inline std::optional<MonoidFamily> preset_family(Preset p) {
    switch (p) {
      case Preset::in3:
      case Preset::in5: return MonoidFamily::in;
      case Preset::tn_aizenstat:
      case Preset::tn4:
      case Preset::tn5: return MonoidFamily::tn;
      case Preset::pt_east:
      case Preset::pt8:
      case Preset::pt9: return MonoidFamily::ptn;
      case Preset::small: return std::nullopt;
    }
    return std::nullopt;
  }

  //! Accepts a preset name, or with \p family a relation count such as
  //! "3rel" or "4rel", or "aizenstat" or "east".
  inline Preset preset_from_name(std::string_view                   name,
                                 std::optional<MonoidFamily> const& family
                                 = std::nullopt) {
    for (auto p : ALL_PRESETS) {
      if (preset_name(p) == name) {
        if (family && preset_family(p) && *family != *preset_family(p)) {
          throw std::invalid_argument(
              "preset \"" + std::string(name) + "\" does not present "
              + std::string(monoid_family_name(*family)));
        }
        return p;
      }
    }
    if (family) {
      struct Alias {
        MonoidFamily     family;
        std::string_view name;
        Preset           preset;
      };
      static constexpr std::array<Alias, 10> aliases = {
          {{MonoidFamily::in, "3rel", Preset::in3},
           {MonoidFamily::in, "5rel", Preset::in5},
           {MonoidFamily::tn, "aizenstat", Preset::tn_aizenstat},
           {MonoidFamily::tn, "7rel", Preset::tn_aizenstat},
           {MonoidFamily::tn, "4rel", Preset::tn4},
           {MonoidFamily::tn, "5rel", Preset::tn5},
           {MonoidFamily::ptn, "east", Preset::pt_east},
           {MonoidFamily::ptn, "12rel", Preset::pt_east},
           {MonoidFamily::ptn, "8rel", Preset::pt8},
           {MonoidFamily::ptn, "9rel", Preset::pt9}}};
      for (auto const& a : aliases) {
        if (a.family == *family && a.name == name) {
          return a.preset;
        }
      }
    }
    throw std::invalid_argument("unknown preset \"" + std::string(name)
                                + "\"");
  }

  //! The symmetric group presentation of kind \p kind, or small_sn(n) for
  //! n <= 3 where the others are not defined.
  inline SnPresentation sn_presentation(SnKind kind, std::size_t n) {
    if (n <= 3) {
      return small_sn(n);
    }
    return make_sn(kind, n);
  }

  struct PresetInstance {
    BoundPresentation bound;
    MonoidSpec        target;
  };

  //! Build the presentation \p p of degree \p n over the symmetric group
  //! presentation \p kind. Throws std::invalid_argument outside the range of
  //! the builder.
  inline PresetInstance build_preset(Preset                      p,
                                     std::size_t                 n,
                                     SnKind                      kind,
                                     std::optional<MonoidFamily> family
                                     = std::nullopt) {
    if (n == 0 || n > MAX_DEGREE) {
      throw std::invalid_argument("degree out of range");
    }
    if (p == Preset::small) {
      if (!family) {
        throw std::invalid_argument("the small preset needs a family");
      }
      std::optional<SnPresentation> sp;
      if (*family == MonoidFamily::ptn && n >= 4) {
        sp = make_sn(kind, n);
      }
      return {small_presentation(*family, n, sp), {*family, n}};
    }
    auto f = *preset_family(p);
    if (family && *family != f) {
      throw std::invalid_argument("preset " + std::string(preset_name(p))
                                  + " does not present "
                                  + std::string(monoid_family_name(*family)));
    }
    auto sp = sn_presentation(kind, n);
    switch (p) {
      case Preset::in3: return {in_3rel(sp), {f, n}};
      case Preset::in5: return {in_5rel(sp), {f, n}};
      case Preset::tn_aizenstat: return {tn_aizenstat(sp), {f, n}};
      case Preset::tn4: return {tn_4rel(sp), {f, n}};
      case Preset::tn5: return {tn_5rel(sp), {f, n}};
      case Preset::pt_east: return {ptn_east(sp), {f, n}};
      case Preset::pt8: return {ptn_8rel(sp), {f, n}};
      case Preset::pt9: return {ptn_9rel(sp), {f, n}};
      case Preset::small: break;
    }
    throw std::invalid_argument("unknown preset");
  }

  //! Parse a word over the letters of \p bp. Tokens are separated by
  //! spaces; a token is a letter name, "z" or "ζ" for zeta, "e" or "η" for
  //! eta, "ε" for the empty word, or a permutation in cycle notation such as
  //! "(1,2)(3,4)", which is replaced by its shortlex least word over the
  //! leading letters of \p bp whose values are permutations.
  inline word_type parse_word(BoundPresentation const& bp,
                              std::string_view         text) {
    auto const& p = bp.presentation;
    auto const  n = bp.assignment.degree();
    word_type   out;
    std::size_t i = 0;
    auto        letter = [&p](std::string const& name) {
      if (p.contains_letter(name)) {
        return p.letter(name);
      }
      if ((name == "z" || name == "ζ") && p.contains_letter("zeta")) {
        return p.letter("zeta");
      }
      if ((name == "e" || name == "η") && p.contains_letter("eta")) {
        return p.letter("eta");
      }
      throw std::invalid_argument("unknown letter \"" + name + "\"");
    };
    while (i < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
      } else if (text[i] == '(') {
        auto j = i;
        // consecutive cycles, possibly with spaces inside
        while (j < text.size() && text[j] == '(') {
          auto close = text.find(')', j);
          if (close == std::string_view::npos) {
            throw std::invalid_argument("unbalanced parenthesis");
          }
          j = close + 1;
        }
        SnPresentation sp;
        for (letter_type a = 0; a < p.alphabet.size(); ++a) {
          if (!bp.assignment[a].is_permutation()) {
            break;
          }
          sp.presentation.add_letter(p.alphabet[a]);
          sp.assignment.push_back(bp.assignment[a]);
        }
        if (sp.assignment.size() == 0) {
          sp.assignment = Assignment(n, {});
        }
        auto w = word_for_permutation(sp, from_cycles(n, text.substr(i, j - i)));
        out.insert(out.end(), w.begin(), w.end());
        i = j;
      } else {
        auto j = i;
        while (j < text.size()
               && !std::isspace(static_cast<unsigned char>(text[j]))
               && text[j] != '(') {
          ++j;
        }
        std::string tok(text.substr(i, j - i));
        if (tok != EMPTY_WORD) {
          out.push_back(letter(tok));
        }
        i = j;
      }
    }
    return out;
  }

}  // namespace minpres

#endif  // MINPRES_PRESETS_HPP_
