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

// Reading and writing presentations as plain text and as JSON.
//
// The text format has one relation per line, "lhs = rhs", with letters
// separated by spaces and "ε" (or nothing) for the empty word. A relation may
// carry a label written as a first token ending in ':'. Lines starting with
// '@' set the alphabet, family, and degree; '#' starts a comment.

#ifndef MINPRES_IO_HPP_
#define MINPRES_IO_HPP_

#include <algorithm>    // for std::find
#include <cstddef>      // for std::size_t
#include <sstream>      // for std::istringstream, std::ostringstream
#include <stdexcept>    // for std::invalid_argument
#include <string>       // for std::string
#include <string_view>  // for std::string_view
#include <vector>       // for std::vector

#include <json.hpp>

#include "presentation.hpp"

namespace minpres {

  inline constexpr std::string_view EMPTY_WORD = "ε";

  namespace detail {
    inline std::vector<std::string> split_ws(std::string_view s) {
      std::istringstream       in{std::string(s)};
      std::vector<std::string> out;
      std::string              tok;
      while (in >> tok) {
        out.push_back(tok);
      }
      return out;
    }

    inline void check_letter_name(std::string const& a) {
      if (a.empty() || a == "=" || a == EMPTY_WORD || a.front() == '#'
          || a.front() == '@' || a.back() == ':'
          || a.find_first_of(" \t\r\n") != std::string::npos) {
        throw std::invalid_argument("letter name \"" + a
                                    + "\" cannot be written in text format");
      }
    }

    inline word_type parse_side(Presentation&                   p,
                                std::vector<std::string> const& toks,
                                bool                            fixed,
                                std::size_t                     line) {
      word_type w;
      for (auto const& t : toks) {
        if (t == EMPTY_WORD) {
          if (toks.size() != 1) {
            throw std::invalid_argument("line " + std::to_string(line)
                                        + ": ε inside a nonempty word");
          }
          continue;
        }
        if (!p.contains_letter(t)) {
          if (fixed) {
            throw std::invalid_argument("line " + std::to_string(line)
                                        + ": unknown letter \"" + t + "\"");
          }
          check_letter_name(t);
          p.add_letter(t);
        }
        w.push_back(p.letter(t));
      }
      return w;
    }
  }  // namespace detail

  //! The text form of \p p; parse_text(to_text(p)) == p.
  inline std::string to_text(Presentation const& p) {
    p.validate();
    std::ostringstream out;
    out << "@alphabet";
    for (auto const& a : p.alphabet) {
      detail::check_letter_name(a);
      out << ' ' << a;
    }
    out << "\n@family " << family_name(p.family) << "\n@degree " << p.degree
        << '\n';
    for (auto const& r : p.relations) {
      if (!r.label.empty()) {
        if (r.label.find_first_of(" \t\r\n:") != std::string::npos) {
          throw std::invalid_argument("label \"" + r.label
                                      + "\" cannot be written in text format");
        }
        out << r.label << ": ";
      }
      out << p.word_to_string(r.lhs) << " = " << p.word_to_string(r.rhs)
          << '\n';
    }
    return out.str();
  }

  //! Parse the text format. Without an @alphabet line the alphabet consists
  //! of the letters in order of first occurrence.
  inline Presentation parse_text(std::string_view text) {
    Presentation       p;
    bool               fixed = false;
    std::istringstream in{std::string(text)};
    std::string        line;
    std::size_t        lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      auto toks = detail::split_ws(line.substr(0, line.find('#')));
      if (toks.empty()) {
        continue;
      }
      auto const& head = toks.front();
      if (head.front() == '@') {
        std::vector<std::string> args(toks.begin() + 1, toks.end());
        if (head == "@alphabet") {
          if (fixed || !p.alphabet.empty()) {
            throw std::invalid_argument(
                "line " + std::to_string(lineno)
                + ": @alphabet must come before every relation");
          }
          for (auto const& a : args) {
            detail::check_letter_name(a);
            p.add_letter(a);
          }
          fixed = true;
        } else if (head == "@family" && args.size() == 1) {
          p.family = family_from_name(args[0]);
        } else if (head == "@degree" && args.size() == 1) {
          p.degree = std::stoul(args[0]);
        } else {
          throw std::invalid_argument("line " + std::to_string(lineno)
                                      + ": bad directive \"" + head + "\"");
        }
        continue;
      }
      std::string label;
      auto        first = toks.begin();
      if (head.size() > 1 && head.back() == ':') {
        label = head.substr(0, head.size() - 1);
        ++first;
      }
      auto eq = std::find(first, toks.end(), "=");
      if (eq == toks.end() || std::find(eq + 1, toks.end(), "=") != toks.end()) {
        throw std::invalid_argument("line " + std::to_string(lineno)
                                    + ": expected exactly one '='");
      }
      auto lhs = detail::parse_side(
          p, std::vector<std::string>(first, eq), fixed, lineno);
      auto rhs = detail::parse_side(
          p, std::vector<std::string>(eq + 1, toks.end()), fixed, lineno);
      p.add_relation(std::move(lhs), std::move(rhs), std::move(label));
    }
    return p;
  }

  //! JSON object {alphabet, relations: [{label, lhs, rhs}], family, degree}
  //! with words as arrays of letter names.
  inline nlohmann::ordered_json to_json(Presentation const& p) {
    p.validate();
    auto word = [&p](word_type const& w) {
      auto out = nlohmann::ordered_json::array();
      for (auto x : w) {
        out.push_back(p.alphabet[x]);
      }
      return out;
    };
    nlohmann::ordered_json out;
    out["alphabet"]  = p.alphabet;
    out["relations"] = nlohmann::ordered_json::array();
    for (auto const& r : p.relations) {
      out["relations"].push_back(
          {{"label", r.label}, {"lhs", word(r.lhs)}, {"rhs", word(r.rhs)}});
    }
    out["family"] = family_name(p.family);
    out["degree"] = p.degree;
    return out;
  }

  template <typename Json>
  Presentation presentation_from_json(Json const& j) {
    try {
      Presentation p;
      for (auto const& a : j.at("alphabet")) {
        p.add_letter(a.template get<std::string>());
      }
      for (auto const& r : j.at("relations")) {
        auto side = [&p](Json const& w) {
          word_type out;
          for (auto const& a : w) {
            out.push_back(p.letter(a.template get<std::string>()));
          }
          return out;
        };
        p.add_relation(side(r.at("lhs")),
                       side(r.at("rhs")),
                       r.value("label", std::string()));
      }
      p.family = family_from_name(j.value("family", std::string("CUSTOM")));
      p.degree = j.value("degree", std::size_t(0));
      return p;
    } catch (nlohmann::json::exception const& e) {
      throw std::invalid_argument(std::string("malformed presentation JSON: ")
                                  + e.what());
    }
  }

  inline Presentation parse_json(std::string_view text) {
    nlohmann::ordered_json j;
    try {
      j = nlohmann::ordered_json::parse(text);
    } catch (nlohmann::json::parse_error const& e) {
      throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
    return presentation_from_json(j);
  }

}  // namespace minpres

#endif  // MINPRES_IO_HPP_
