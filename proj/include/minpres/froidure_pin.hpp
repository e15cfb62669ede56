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

// Froidure-Pin enumeration of the monoid generated by partial
// transformations.

#ifndef MINPRES_FROIDURE_PIN_HPP_
#define MINPRES_FROIDURE_PIN_HPP_

#include <chrono>     // for steady_clock
#include <cstddef>    // for size_t
#include <cstdint>    // for uint32_t, uint64_t
#include <cstring>    // for memcmp
#include <functional>  // for function
#include <optional>   // for optional
#include <stdexcept>  // for invalid_argument
#include <string>     // for string
#include <utility>    // for pair
#include <vector>     // for vector

#include "cycles.hpp"
#include "presentation.hpp"
#include "transf.hpp"

namespace minpres {

  inline constexpr std::uint32_t UNDEFINED_INDEX = 0xFFFFFFFF;

  //! Statistics reported while an enumeration runs.
  struct ProgressEvent {
    std::string   phase;
    std::size_t   count   = 0;
    std::size_t   active  = 0;
    double        seconds = 0;
  };

  using ProgressCallback = std::function<void(ProgressEvent const&)>;

  namespace detail {
    // FNV-1a over the image bytes
    inline std::uint64_t hash_bytes(point_type const* p, std::size_t n) {
      std::uint64_t h = 14695981039346656037ULL;
      for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 1099511628211ULL;
      }
      return h ^ (h >> 29);
    }
  }  // namespace detail

  //! The monoid generated by an assignment, with shortlex-least words and
  //! the right and left Cayley graphs.
  //!
  //! Index 0 is the identity. Elements are numbered in shortlex order of
  //! their least words; the left Cayley graph is computed on first use.
  class EnumeratedMonoid {
   public:
    [[nodiscard]] std::size_t degree() const noexcept {
      return _degree;
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return _parent.size();
    }

    [[nodiscard]] std::size_t number_of_generators() const noexcept {
      return _gens.size();
    }

    //! False if the enumeration stopped at its limit.
    [[nodiscard]] bool complete() const noexcept {
      return _complete;
    }

    [[nodiscard]] std::size_t limit() const noexcept {
      return _limit;
    }

    [[nodiscard]] PartialTransf element(std::size_t i) const {
      check(i);
      return PartialTransf::from_raw(std::span<detail::point_type const>(
          _images.data() + i * _degree, _degree));
    }

    [[nodiscard]] std::span<detail::point_type const>
    raw_element(std::size_t i) const {
      return {_images.data() + i * _degree, _degree};
    }

    //! The shortlex-least word representing element \p i.
    [[nodiscard]] word_type word(std::size_t i) const {
      check(i);
      word_type w;
      while (i != 0) {
        w.push_back(_last[i]);
        i = _parent[i];
      }
      return {w.rbegin(), w.rend()};
    }

    [[nodiscard]] std::size_t word_length(std::size_t i) const {
      check(i);
      return _length[i];
    }

    //! Index of element(i) * generator(a).
    [[nodiscard]] std::uint32_t right(std::size_t i, letter_type a) const {
      check(i);
      return _right[i * _gens.size() + a];
    }

    //! Index of generator(a) * element(i).
    [[nodiscard]] std::uint32_t left(std::size_t i, letter_type a) const {
      check(i);
      if (!_complete) {
        throw std::logic_error("left Cayley graph needs a complete monoid");
      }
      if (_left.empty()) {
        auto const k = _gens.size();
        _left.assign(size() * k, UNDEFINED_INDEX);
        for (letter_type b = 0; b < k; ++b) {
          _left[b] = _right[b];
        }
        for (std::size_t j = 1; j < size(); ++j) {
          auto p = _parent[j];
          auto x = _last[j];
          for (letter_type b = 0; b < k; ++b) {
            _left[j * k + b] = _right[_left[p * k + b] * k + x];
          }
        }
      }
      return _left[i * _gens.size() + a];
    }

    //! Index of \p f, if it belongs to the enumerated part.
    [[nodiscard]] std::optional<std::size_t>
    index_of(PartialTransf const& f) const {
      if (f.degree() != _degree) {
        return std::nullopt;
      }
      auto r = find(f.raw().data());
      if (r == UNDEFINED_INDEX) {
        return std::nullopt;
      }
      return r;
    }

    [[nodiscard]] bool contains(PartialTransf const& f) const {
      return index_of(f).has_value();
    }

    //! For each element i > 0, the pair (parent, letter) with
    //! word(i) = word(parent) letter.
    [[nodiscard]] std::vector<std::pair<std::uint32_t, letter_type>>
    spanning_tree() const {
      std::vector<std::pair<std::uint32_t, letter_type>> out;
      out.reserve(size());
      for (std::size_t i = 1; i < size(); ++i) {
        out.emplace_back(_parent[i], _last[i]);
      }
      return out;
    }

    //! All elements, in index order.
    [[nodiscard]] std::vector<PartialTransf> elements() const {
      std::vector<PartialTransf> out;
      out.reserve(size());
      for (std::size_t i = 0; i < size(); ++i) {
        out.push_back(element(i));
      }
      return out;
    }

   private:
    friend EnumeratedMonoid froidure_pin(Assignment const&,
                                         std::size_t,
                                         ProgressCallback const&);

    void check(std::size_t i) const {
      if (i >= size()) {
        throw std::out_of_range("element index " + std::to_string(i)
                                + " out of range");
      }
    }

    std::uint32_t find(detail::point_type const* p) const {
      auto mask = _slots.size() - 1;
      for (auto h = detail::hash_bytes(p, _degree) & mask;;
           h = (h + 1) & mask) {
        auto s = _slots[h];
        if (s == UNDEFINED_INDEX) {
          return UNDEFINED_INDEX;
        }
        if (std::memcmp(_images.data() + std::size_t(s) * _degree,
                        p,
                        _degree)
            == 0) {
          return s;
        }
      }
    }

    void insert_slot(std::uint32_t idx) {
      auto mask = _slots.size() - 1;
      auto h    = detail::hash_bytes(_images.data() + std::size_t(idx) * _degree,
                                  _degree)
               & mask;
      while (_slots[h] != UNDEFINED_INDEX) {
        h = (h + 1) & mask;
      }
      _slots[h] = idx;
    }

    void grow_slots() {
      std::vector<std::uint32_t> fresh(_slots.size() * 2, UNDEFINED_INDEX);
      _slots.swap(fresh);
      for (std::uint32_t i = 0; i < size(); ++i) {
        insert_slot(i);
      }
    }

    std::size_t                        _degree   = 0;
    bool                               _complete = false;
    std::size_t                        _limit    = 0;
    std::vector<PartialTransf>         _gens;
    std::vector<detail::point_type>    _images;
    std::vector<std::uint32_t>         _parent;
    std::vector<letter_type>           _last;
    std::vector<std::uint32_t>         _length;
    std::vector<std::uint32_t>         _right;
    mutable std::vector<std::uint32_t> _left;
    std::vector<std::uint32_t>         _slots;
  };

  //! Default element cap for Froidure-Pin.
  inline constexpr std::size_t DEFAULT_FP_LIMIT = 50'000'000;

  //! Enumerate the monoid generated by the images of \p gens.
  //!
  //! Elements are found breadth first, multiplying on the right by the
  //! generators in order, so each element's stored word is shortlex least.
  //! If more than \p limit elements exist the result is incomplete and
  //! complete() is false.
  inline EnumeratedMonoid froidure_pin(Assignment const&       gens,
                                       std::size_t             limit,
                                       ProgressCallback const& progress
                                       = nullptr) {
    if (limit < 1) {
      throw std::invalid_argument("froidure_pin limit must be positive");
    }
    if (limit >= UNDEFINED_INDEX) {
      throw std::invalid_argument("froidure_pin limit too large");
    }
    auto const       n = gens.degree();
    auto const       k = gens.size();
    EnumeratedMonoid m;
    m._degree = n;
    m._limit  = limit;
    m._gens   = gens.images();
    m._slots.assign(1024, UNDEFINED_INDEX);

    auto start = std::chrono::steady_clock::now();
    auto add   = [&](detail::point_type const* img,
                   std::uint32_t             parent,
                   letter_type               x,
                   std::uint32_t             len) -> std::uint32_t {
      auto idx = static_cast<std::uint32_t>(m._parent.size());
      m._images.insert(m._images.end(), img, img + n);
      m._parent.push_back(parent);
      m._last.push_back(x);
      m._length.push_back(len);
      m._right.resize(m._right.size() + k, UNDEFINED_INDEX);
      if (2 * (m.size() + 1) > m._slots.size()) {
        m.grow_slots();
      } else {
        m.insert_slot(idx);
      }
      return idx;
    };

    std::vector<detail::point_type> buf(n);
    for (std::size_t i = 0; i < n; ++i) {
      buf[i] = static_cast<detail::point_type>(i);
    }
    add(buf.data(), 0, 0, 0);

    std::vector<detail::point_type const*> graw;
    for (auto const& g : m._gens) {
      graw.push_back(g.raw().data());
    }

    bool overflow = false;
    for (std::size_t i = 0; i < m.size() && !overflow; ++i) {
      for (letter_type a = 0; a < k; ++a) {
        auto const* x = m._images.data() + i * n;
        auto const* g = graw[a];
        for (std::size_t p = 0; p < n; ++p) {
          buf[p] = x[p] == detail::UNDEF_PT ? detail::UNDEF_PT : g[x[p]];
        }
        auto j = m.find(buf.data());
        if (j == UNDEFINED_INDEX) {
          if (m.size() >= limit) {
            overflow = true;
            break;
          }
          j = add(buf.data(),
                  static_cast<std::uint32_t>(i),
                  a,
                  m._length[i] + 1);
        }
        m._right[i * k + a] = j;
      }
      if (progress && (i & 0xFFFFF) == 0 && i != 0) {
        progress({"froidure-pin",
                  m.size(),
                  m.size() - i,
                  std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count()});
      }
    }
    m._complete = !overflow;
    return m;
  }

  //! The group generated by the permutations \p gens.
  inline EnumeratedMonoid generate_group(std::vector<PartialTransf> const& gens,
                                         std::size_t limit) {
    if (gens.empty()) {
      throw std::invalid_argument("generate_group needs a generator");
    }
    for (auto const& g : gens) {
      if (!g.is_permutation()) {
        throw std::invalid_argument("generate_group: " + to_string(g)
                                    + " is not a permutation");
      }
    }
    return froidure_pin(Assignment(gens), limit);
  }

}  // namespace minpres

#endif  // MINPRES_FROIDURE_PIN_HPP_
