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

// Disjoint cycle notation and the bracketed text rendering of elements.

#ifndef MINPRES_CYCLES_HPP_
#define MINPRES_CYCLES_HPP_

#include <cctype>     // for isdigit, isspace
#include <cstddef>    // for size_t
#include <stdexcept>  // for invalid_argument
#include <string>     // for string
#include <string_view>  // for string_view
#include <vector>     // for vector

#include "transf.hpp"

namespace minpres {

  //! Disjoint cycles of a permutation of degree n, 1-based.
  struct CycleNotation {
    std::size_t                           degree = 0;
    std::vector<std::vector<std::size_t>> cycles;

    //! "(1,2)(3,4,5)", or "()" for the identity.
    [[nodiscard]] std::string to_string() const {
      if (cycles.empty()) {
        return "()";
      }
      std::string out;
      for (auto const& c : cycles) {
        out += '(';
        for (std::size_t i = 0; i < c.size(); ++i) {
          if (i != 0) {
            out += ',';
          }
          out += std::to_string(c[i]);
        }
        out += ')';
      }
      return out;
    }

    friend bool operator==(CycleNotation const&, CycleNotation const&)
        = default;
  };

  inline PartialTransf from_cycles(std::size_t n, CycleNotation const& c) {
    detail::check_degree(n);
    std::vector<std::size_t> img(n);
    for (std::size_t i = 0; i < n; ++i) {
      img[i] = i + 1;
    }
    std::vector<bool> used(n + 1, false);
    for (auto const& cyc : c.cycles) {
      if (cyc.size() < 2) {
        throw std::invalid_argument("cycles must contain at least 2 points");
      }
      for (auto x : cyc) {
        if (x == 0 || x > n) {
          throw std::invalid_argument("point " + std::to_string(x)
                                      + " is not in [1, " + std::to_string(n)
                                      + "]");
        }
        if (used[x]) {
          throw std::invalid_argument("point " + std::to_string(x)
                                      + " is repeated in cycle notation");
        }
        used[x] = true;
      }
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        img[cyc[i] - 1] = cyc[(i + 1) % cyc.size()];
      }
    }
    return PartialTransf::from_images(std::span<std::size_t const>(img));
  }

  //! Parse e.g. "(2, 3)(4,6)"; whitespace is ignored, "()" is the identity.
  inline CycleNotation parse_cycles(std::size_t n, std::string_view s) {
    CycleNotation out{n, {}};
    std::size_t   i    = 0;
    auto          skip = [&] {
      while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) {
        ++i;
      }
    };
    auto fail = [&](std::string const& msg) {
      throw std::invalid_argument("bad cycle notation \"" + std::string(s)
                                  + "\": " + msg);
    };
    skip();
    if (i == s.size()) {
      fail("empty string");
    }
    while (i < s.size()) {
      if (s[i] != '(') {
        fail("expected '('");
      }
      ++i;
      std::vector<std::size_t> cyc;
      skip();
      if (i < s.size() && s[i] == ')') {
        ++i;
        skip();
        continue;
      }
      while (true) {
        skip();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) {
          fail("expected a point");
        }
        std::size_t x = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
          x = 10 * x + static_cast<std::size_t>(s[i] - '0');
          if (x > MAX_DEGREE) {
            fail("point too large");
          }
          ++i;
        }
        cyc.push_back(x);
        skip();
        if (i < s.size() && s[i] == ',') {
          ++i;
          continue;
        }
        if (i < s.size() && s[i] == ')') {
          ++i;
          break;
        }
        fail("expected ',' or ')'");
      }
      out.cycles.push_back(std::move(cyc));
      skip();
    }
    // validates ranges and disjointness
    static_cast<void>(from_cycles(n, out));
    return out;
  }

  inline PartialTransf from_cycles(std::size_t n, std::string_view s) {
    return from_cycles(n, parse_cycles(n, s));
  }

  //! Cycles listed by smallest point, each starting at its smallest point.
  inline CycleNotation to_cycles(PartialTransf const& p) {
    detail::require_permutation(p, "to_cycles");
    CycleNotation     out{p.degree(), {}};
    std::vector<bool> seen(p.degree(), false);
    auto              r = p.raw();
    for (std::size_t i = 0; i < p.degree(); ++i) {
      if (seen[i] || r[i] == i) {
        continue;
      }
      std::vector<std::size_t> cyc;
      for (std::size_t j = i; !seen[j]; j = r[j]) {
        seen[j] = true;
        cyc.push_back(j + 1);
      }
      out.cycles.push_back(std::move(cyc));
    }
    return out;
  }

  //! The cycle (p_1, ..., p_k) of degree \p n.
  inline PartialTransf cycle(std::size_t n, std::vector<std::size_t> points) {
    if (points.size() < 2) {
      return PartialTransf::identity(n);
    }
    return from_cycles(n, CycleNotation{n, {std::move(points)}});
  }

  //! The cycle (first, first + 1, ..., last).
  inline PartialTransf interval_cycle(std::size_t n,
                                      std::size_t first,
                                      std::size_t last) {
    std::vector<std::size_t> pts;
    for (std::size_t x = first; x <= last; ++x) {
      pts.push_back(x);
    }
    return cycle(n, std::move(pts));
  }

  //! Bracketed image list, "-" marking points outside the domain.
  inline std::string to_string(PartialTransf const& f) {
    std::string out = "[";
    for (std::size_t i = 1; i <= f.degree(); ++i) {
      if (i != 1) {
        out += ',';
      }
      auto y = f[i];
      out += y == UNDEF ? std::string("-") : std::to_string(y);
    }
    return out + "]";
  }

  //! Parse the output of to_string; "-" or "U" mark undefined points.
  inline PartialTransf parse_images(std::string_view s) {
    std::vector<std::size_t> img;
    std::size_t              i = 0;
    auto                     fail
        = [&] { throw std::invalid_argument("bad image list: " + std::string(s)); };
    auto skip = [&] {
      while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) {
        ++i;
      }
    };
    skip();
    if (i >= s.size() || s[i] != '[') {
      fail();
    }
    ++i;
    skip();
    if (i < s.size() && s[i] == ']') {
      return PartialTransf::identity(0);
    }
    while (true) {
      skip();
      if (i < s.size() && (s[i] == '-' || s[i] == 'U')) {
        img.push_back(UNDEF);
        ++i;
      } else if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        std::size_t x = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
          x = 10 * x + static_cast<std::size_t>(s[i++] - '0');
          if (x > MAX_DEGREE) {
            fail();
          }
        }
        img.push_back(x);
      } else {
        fail();
      }
      skip();
      if (i < s.size() && s[i] == ',') {
        ++i;
      } else if (i < s.size() && s[i] == ']') {
        break;
      } else {
        fail();
      }
    }
    return PartialTransf::from_images(std::span<std::size_t const>(img));
  }

}  // namespace minpres

#endif  // MINPRES_CYCLES_HPP_
