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

// Partial transformations of {1, ..., n}, composed left to right: the image of
// x under fg is ((x)f)g. Points are 1-based at every interface.

#ifndef MINPRES_TRANSF_HPP_
#define MINPRES_TRANSF_HPP_

#include <algorithm>         // for sort, find
#include <cstddef>           // for size_t
#include <cstdint>           // for uint8_t
#include <functional>        // for hash
#include <initializer_list>  // for initializer_list
#include <limits>            // for numeric_limits
#include <numeric>           // for iota
#include <span>              // for span
#include <stdexcept>         // for invalid_argument
#include <string>            // for string
#include <string_view>       // for string_view
#include <utility>           // for pair
#include <vector>            // for vector

namespace minpres {

  //! Largest degree accepted anywhere in the library.
  inline constexpr std::size_t MAX_DEGREE = 64;

  //! Marker for "no image" at the public (1-based) interface.
  inline constexpr std::size_t UNDEF = std::numeric_limits<std::size_t>::max();

  namespace detail {
    using point_type                     = std::uint8_t;
    inline constexpr point_type UNDEF_PT = 0xFF;

    inline void check_degree(std::size_t n) {
      if (n > MAX_DEGREE) {
        throw std::invalid_argument("degree " + std::to_string(n)
                                    + " exceeds the maximum degree "
                                    + std::to_string(MAX_DEGREE));
      }
    }
  }  // namespace detail

  //! A partial transformation of {1, ..., n}.
  //!
  //! Values are immutable once built by the factory functions below; the
  //! predicates (transformation, partial permutation, permutation) are
  //! computed from the image table and never stored.
  class PartialTransf {
   public:
    PartialTransf() = default;

    //! The identity of degree \p n.
    static PartialTransf identity(std::size_t n) {
      detail::check_degree(n);
      PartialTransf f;
      f._images.resize(n);
      std::iota(f._images.begin(), f._images.end(), detail::point_type(0));
      return f;
    }

    //! Construct from 1-based images; use UNDEF for points outside the
    //! domain.
    static PartialTransf from_images(std::span<std::size_t const> images) {
      detail::check_degree(images.size());
      PartialTransf f;
      f._images.reserve(images.size());
      for (auto x : images) {
        if (x == UNDEF) {
          f._images.push_back(detail::UNDEF_PT);
        } else if (x == 0 || x > images.size()) {
          throw std::invalid_argument("image " + std::to_string(x)
                                      + " out of range [1, "
                                      + std::to_string(images.size()) + "]");
        } else {
          f._images.push_back(static_cast<detail::point_type>(x - 1));
        }
      }
      return f;
    }

    static PartialTransf from_images(std::initializer_list<std::size_t> il) {
      std::vector<std::size_t> v(il);
      return from_images(std::span<std::size_t const>(v));
    }

    //! Construct from 0-based internal images (UNDEF_PT for undefined).
    static PartialTransf from_raw(std::span<detail::point_type const> raw) {
      detail::check_degree(raw.size());
      PartialTransf f;
      f._images.assign(raw.begin(), raw.end());
      for (auto x : f._images) {
        if (x != detail::UNDEF_PT && x >= raw.size()) {
          throw std::invalid_argument("raw image out of range");
        }
      }
      return f;
    }

    [[nodiscard]] std::size_t degree() const noexcept {
      return _images.size();
    }

    //! The image of the 1-based point \p x, or UNDEF.
    [[nodiscard]] std::size_t operator[](std::size_t x) const {
      if (x == 0 || x > degree()) {
        throw std::invalid_argument("point " + std::to_string(x)
                                    + " out of range");
      }
      auto y = _images[x - 1];
      return y == detail::UNDEF_PT ? UNDEF : std::size_t(y) + 1;
    }

    [[nodiscard]] bool is_defined(std::size_t x) const {
      return (*this)[x] != UNDEF;
    }

    [[nodiscard]] std::span<detail::point_type const> raw() const noexcept {
      return _images;
    }

    [[nodiscard]] bool is_transformation() const noexcept {
      return std::find(_images.begin(), _images.end(), detail::UNDEF_PT)
             == _images.end();
    }

    [[nodiscard]] bool is_partial_perm() const {
      std::vector<bool> seen(degree(), false);
      for (auto y : _images) {
        if (y != detail::UNDEF_PT) {
          if (seen[y]) {
            return false;
          }
          seen[y] = true;
        }
      }
      return true;
    }

    [[nodiscard]] bool is_permutation() const {
      return is_transformation() && is_partial_perm();
    }

    //! 1-based sorted domain.
    [[nodiscard]] std::vector<std::size_t> domain() const {
      std::vector<std::size_t> out;
      for (std::size_t i = 0; i < degree(); ++i) {
        if (_images[i] != detail::UNDEF_PT) {
          out.push_back(i + 1);
        }
      }
      return out;
    }

    //! 1-based sorted image.
    [[nodiscard]] std::vector<std::size_t> image() const {
      std::vector<bool> seen(degree(), false);
      for (auto y : _images) {
        if (y != detail::UNDEF_PT) {
          seen[y] = true;
        }
      }
      std::vector<std::size_t> out;
      for (std::size_t i = 0; i < degree(); ++i) {
        if (seen[i]) {
          out.push_back(i + 1);
        }
      }
      return out;
    }

    [[nodiscard]] std::size_t rank() const {
      return image().size();
    }

    friend bool operator==(PartialTransf const&, PartialTransf const&)
        = default;
    friend auto operator<=>(PartialTransf const&, PartialTransf const&)
        = default;

   private:
    std::vector<detail::point_type> _images;
  };

  //! The product fg: first f, then g.
  inline PartialTransf compose(PartialTransf const& f, PartialTransf const& g) {
    if (f.degree() != g.degree()) {
      throw std::invalid_argument("cannot compose partial transformations of "
                                  "degrees "
                                  + std::to_string(f.degree()) + " and "
                                  + std::to_string(g.degree()));
    }
    std::vector<detail::point_type> out(f.degree());
    auto                            fr = f.raw();
    auto                            gr = g.raw();
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = fr[i] == detail::UNDEF_PT ? detail::UNDEF_PT : gr[fr[i]];
    }
    return PartialTransf::from_raw(out);
  }

  inline PartialTransf operator*(PartialTransf const& f,
                                 PartialTransf const& g) {
    return compose(f, g);
  }

  inline bool is_idempotent(PartialTransf const& f) {
    return compose(f, f) == f;
  }

  ////////////////////////////////////////////////////////////////////////
  // Kernel type
  ////////////////////////////////////////////////////////////////////////

  //! Multiset of kernel class sizes, stored as (class size, multiplicity)
  //! pairs sorted by decreasing class size. Only points of the domain are
  //! counted.
  struct KernelType {
    std::vector<std::pair<std::size_t, std::size_t>> parts;

    [[nodiscard]] std::size_t total() const noexcept {
      std::size_t s = 0;
      for (auto const& [a, b] : parts) {
        s += a * b;
      }
      return s;
    }

    //! e.g. "3^1 1^1"
    [[nodiscard]] std::string to_string() const {
      std::string out;
      for (auto const& [a, b] : parts) {
        if (!out.empty()) {
          out += ' ';
        }
        out += std::to_string(a) + '^' + std::to_string(b);
      }
      return out;
    }

    friend bool operator==(KernelType const&, KernelType const&) = default;
  };

  inline KernelType kernel_type(PartialTransf const& f) {
    std::vector<std::size_t> class_size(f.degree(), 0);
    for (auto y : f.raw()) {
      if (y != detail::UNDEF_PT) {
        ++class_size[y];
      }
    }
    std::vector<std::size_t> sizes;
    for (auto s : class_size) {
      if (s != 0) {
        sizes.push_back(s);
      }
    }
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    KernelType kt;
    for (auto s : sizes) {
      if (!kt.parts.empty() && kt.parts.back().first == s) {
        ++kt.parts.back().second;
      } else {
        kt.parts.emplace_back(s, 1);
      }
    }
    return kt;
  }

  //! The kernel type a_1^{b_1} ... given as (a_i, b_i) pairs, normalised.
  inline KernelType
  make_kernel_type(std::vector<std::pair<std::size_t, std::size_t>> parts) {
    std::erase_if(parts, [](auto const& p) { return p.second == 0; });
    std::sort(parts.begin(), parts.end(), std::greater<>());
    KernelType kt;
    for (auto const& [a, b] : parts) {
      if (!kt.parts.empty() && kt.parts.back().first == a) {
        kt.parts.back().second += b;
      } else {
        kt.parts.emplace_back(a, b);
      }
    }
    return kt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Permutations
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline void require_permutation(PartialTransf const& p,
                                    std::string_view  what) {
      if (!p.is_permutation()) {
        throw std::invalid_argument(std::string(what)
                                    + ": argument is not a permutation");
      }
    }
  }  // namespace detail

  inline PartialTransf inverse(PartialTransf const& p) {
    detail::require_permutation(p, "inverse");
    std::vector<detail::point_type> out(p.degree());
    auto                            r = p.raw();
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[r[i]] = static_cast<detail::point_type>(i);
    }
    return PartialTransf::from_raw(out);
  }

  //! f^g = g^-1 f g.
  inline PartialTransf conjugate(PartialTransf const& f,
                                 PartialTransf const& g) {
    detail::require_permutation(g, "conjugate");
    return compose(compose(inverse(g), f), g);
  }

  //! [f, g] = g^-1 f^-1 g f.
  inline PartialTransf commutator(PartialTransf const& f,
                                  PartialTransf const& g) {
    detail::require_permutation(f, "commutator");
    detail::require_permutation(g, "commutator");
    return compose(compose(compose(inverse(g), inverse(f)), g), f);
  }

  enum class Parity { even, odd };

  inline Parity parity(PartialTransf const& p) {
    detail::require_permutation(p, "parity");
    std::vector<bool> seen(p.degree(), false);
    std::size_t       transpositions = 0;
    auto              r              = p.raw();
    for (std::size_t i = 0; i < p.degree(); ++i) {
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = r[j]) {
        seen[j] = true;
        ++len;
      }
      if (len > 0) {
        transpositions += len - 1;
      }
    }
    return transpositions % 2 == 0 ? Parity::even : Parity::odd;
  }

  //! 1-based points moved by \p p.
  inline std::vector<std::size_t> support(PartialTransf const& p) {
    detail::require_permutation(p, "support");
    std::vector<std::size_t> out;
    auto                     r = p.raw();
    for (std::size_t i = 0; i < p.degree(); ++i) {
      if (r[i] != i) {
        out.push_back(i + 1);
      }
    }
    return out;
  }

  enum class Stabilizer { point_1, set_12 };

  inline bool in_stab1(PartialTransf const& p) {
    detail::require_permutation(p, "in_stab1");
    return p.degree() >= 1 && p.raw()[0] == 0;
  }

  //! Setwise stabiliser of {1, 2}.
  inline bool in_stab12(PartialTransf const& p) {
    detail::require_permutation(p, "in_stab12");
    if (p.degree() < 2) {
      return true;
    }
    auto r = p.raw();
    return r[0] <= 1 && r[1] <= 1;
  }

  inline bool in_stabilizer(Stabilizer s, PartialTransf const& p) {
    return s == Stabilizer::point_1 ? in_stab1(p) : in_stab12(p);
  }

  //! True iff p^-1 q belongs to the stabiliser \p s.
  inline bool same_left_coset(Stabilizer           s,
                              PartialTransf const& p,
                              PartialTransf const& q) {
    detail::require_permutation(p, "same_left_coset");
    detail::require_permutation(q, "same_left_coset");
    return in_stabilizer(s, compose(inverse(p), q));
  }

}  // namespace minpres

template <>
struct std::hash<minpres::PartialTransf> {
  std::size_t operator()(minpres::PartialTransf const& f) const noexcept {
    std::size_t h = f.degree();
    for (auto x : f.raw()) {
      h = h * 0x100000001b3ULL ^ x;
    }
    return h;
  }
};

#endif  // MINPRES_TRANSF_HPP_
