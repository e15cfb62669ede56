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

// Search for elementary sequences between two words of a presentation.
//
// The letters occurring in the relations labelled as symmetric group
// relations generate the group of units. A word is viewed as an alternation
// p_0 x_1 p_1 ... x_k p_k of units and other letters, and a bidirectional
// breadth-first search runs over these alternations using only the other
// relations; the units absorb every rearrangement inside the group. Each
// step is then replayed letter by letter: rewriting inside the group uses,
// for every edge of the Cayley graph of the group, a derivation built once
// from the group relations by a cheapest-first closure.

#ifndef MINPRES_DERIVATION_HPP_
#define MINPRES_DERIVATION_HPP_

#include <algorithm>      // for reverse, equal, find
#include <cstddef>        // for size_t
#include <cstdint>        // for uint32_t, uint64_t
#include <deque>          // for deque
#include <functional>     // for greater
#include <optional>       // for optional
#include <queue>          // for priority_queue
#include <stdexcept>      // for invalid_argument, logic_error
#include <string>         // for string
#include <unordered_map>  // for unordered_map
#include <utility>        // for pair
#include <vector>         // for vector

#include "presentation.hpp"
#include "todd_coxeter.hpp"

namespace minpres {

  //! One single-factor replacement: the occurrence of one side of relation
  //! \c relation starting at \c position is replaced by the other side.
  struct DerivationStep {
    std::size_t position = 0;
    std::size_t relation = 0;
    //! True if the left-hand side was replaced by the right-hand side.
    bool      forward = true;
    word_type result;
  };

  //! Replace the factor at \p pos of \p w by the other side of \p r; throws
  //! if the factor is not there.
  inline word_type apply_relation(word_type const& w,
                                  std::size_t      pos,
                                  Relation const&  r,
                                  bool             forward) {
    auto const& from = forward ? r.lhs : r.rhs;
    auto const& to   = forward ? r.rhs : r.lhs;
    if (pos + from.size() > w.size()
        || !std::equal(from.begin(), from.end(), w.begin() + pos)) {
      throw std::logic_error("relation side does not occur at position "
                             + std::to_string(pos));
    }
    word_type out(w.begin(), w.begin() + pos);
    out.insert(out.end(), to.begin(), to.end());
    out.insert(out.end(), w.begin() + pos + from.size(), w.end());
    return out;
  }

  //! True if replaying \p steps from \p u ends at \p v with every step a
  //! valid replacement.
  inline bool check_derivation(Presentation const&                p,
                               word_type const&                   u,
                               word_type const&                   v,
                               std::vector<DerivationStep> const& steps) {
    word_type w = u;
    for (auto const& s : steps) {
      if (s.relation >= p.relations.size()) {
        return false;
      }
      try {
        w = apply_relation(w, s.position, p.relations[s.relation], s.forward);
      } catch (std::logic_error const&) {
        return false;
      }
      if (w != s.result) {
        return false;
      }
    }
    return w == v;
  }

  namespace detail {

    struct RawStep {
      std::size_t pos;
      std::size_t rel;
      bool        forward;
    };

    // The group presented by the symmetric group relations of a
    // presentation, with a derivation for every edge of its Cayley graph.
    class UnitGroup {
     public:
      UnitGroup(Presentation const& p, std::size_t limit) : _p(p) {
        _local.assign(p.alphabet.size(), UNDEFINED_INDEX);
        Presentation q;
        for (std::size_t i = 0; i < p.relations.size(); ++i) {
          auto const& r = p.relations[i];
          if (!is_sn_label(r.label)) {
            continue;
          }
          _rels.push_back(i);
          for (auto const* w : {&r.lhs, &r.rhs}) {
            for (auto a : *w) {
              if (_local[a] == UNDEFINED_INDEX) {
                _local[a] = static_cast<letter_type>(_letters.size());
                _letters.push_back(a);
                q.alphabet.push_back(p.alphabet[a]);
              }
            }
          }
        }
        std::sort(_letters.begin(), _letters.end());
        for (std::size_t i = 0; i < _letters.size(); ++i) {
          _local[_letters[i]] = static_cast<letter_type>(i);
          q.alphabet[i]       = p.alphabet[_letters[i]];
        }
        _k = _letters.size();
        if (_k == 0) {
          _size = 1;
          _words.emplace_back();
          _inv_tab.clear();
          return;
        }
        auto local = [&](word_type w) {
          for (auto& a : w) {
            a = _local[a];
          }
          return w;
        };
        for (auto i : _rels) {
          q.add_relation(local(p.relations[i].lhs), local(p.relations[i].rhs));
        }
        ToddCoxeterOptions o;
        o.unit_block_limit = 0;
        ToddCoxeter tc(q, o);
        if (!tc.run(limit)) {
          throw std::invalid_argument(
              "the group of units has more than " + std::to_string(limit)
              + " elements");
        }
        // renumber in shortlex order of the least words
        std::size_t                m = tc.size();
        std::vector<std::uint32_t> order(m, UNDEFINED_INDEX);
        std::vector<std::uint32_t> queue{0};
        order[0] = 0;
        for (std::size_t i = 0; i < queue.size(); ++i) {
          for (letter_type a = 0; a < _k; ++a) {
            auto t = tc.table(queue[i], a);
            if (order[t] == UNDEFINED_INDEX) {
              order[t] = static_cast<std::uint32_t>(queue.size());
              queue.push_back(t);
            }
          }
        }
        _size = m;
        _tab.assign(m * _k, 0);
        _inv_tab.assign(m * _k, UNDEFINED_INDEX);
        for (std::size_t c = 0; c < m; ++c) {
          for (letter_type a = 0; a < _k; ++a) {
            auto x = order[c], y = order[tc.table(c, a)];
            _tab[x * _k + a] = y;
            if (_inv_tab[y * _k + a] != UNDEFINED_INDEX) {
              throw std::invalid_argument(
                  "the symmetric group relations do not define a group");
            }
            _inv_tab[y * _k + a] = x;
          }
        }
        _parent.assign(m, {UNDEFINED_INDEX, 0});
        _words.assign(m, word_type());
        for (std::size_t i = 0; i < m; ++i) {
          for (letter_type a = 0; a < _k; ++a) {
            auto t = _tab[i * _k + a];
            if (t != 0 && _parent[t].first == UNDEFINED_INDEX
                && t > i) {
              _parent[t] = {static_cast<std::uint32_t>(i), a};
              _words[t]  = _words[i];
              _words[t].push_back(_letters[a]);
            }
          }
        }
        close();
      }

      [[nodiscard]] bool is_unit_letter(letter_type a) const {
        return _local.at(a) != UNDEFINED_INDEX;
      }

      [[nodiscard]] std::size_t size() const noexcept {
        return _size;
      }

      [[nodiscard]] std::uint32_t mul_letter(std::uint32_t x,
                                             letter_type   a) const {
        return _tab[std::size_t(x) * _k + _local[a]];
      }

      [[nodiscard]] std::uint32_t eval(word_type const& w,
                                       std::uint32_t    x = 0) const {
        for (auto a : w) {
          x = mul_letter(x, a);
        }
        return x;
      }

      [[nodiscard]] std::uint32_t mul(std::uint32_t x, std::uint32_t y) const {
        return eval(_words[y], x);
      }

      [[nodiscard]] std::uint32_t inverse(std::uint32_t x) const {
        auto const& w = _words[x];
        std::uint32_t y = 0;
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
          y = _inv_tab[std::size_t(y) * _k + _local[*it]];
        }
        return y;
      }

      //! The shortlex least word for \p x.
      [[nodiscard]] word_type const& word(std::uint32_t x) const {
        return _words[x];
      }

      //! Steps rewriting word(x) w into word(x w), at offset 0.
      void walk(std::uint32_t         x,
                word_type const&      w,
                std::vector<RawStep>& out) {
        for (std::size_t i = 0; i < w.size(); ++i) {
          edge(x, _local[w[i]], 0, out);
          x = mul_letter(x, w[i]);
        }
      }

     private:
      struct Instance {
        std::uint32_t rel;  // index into _rels
        std::uint32_t side;
        std::uint32_t j;
        std::uint32_t v;
      };

      struct Block {
        std::uint32_t rel;
        std::uint32_t side;
        std::uint32_t j;
        std::size_t   base;
      };

      Relation const& rel(std::uint32_t r) const {
        return _p.relations[_rels[r]];
      }

      word_type const& side(std::uint32_t r, std::uint32_t s) const {
        return s == 0 ? rel(r).lhs : rel(r).rhs;
      }

      word_type const& other(std::uint32_t r, std::uint32_t s) const {
        return s == 0 ? rel(r).rhs : rel(r).lhs;
      }

      std::uint32_t back(std::uint32_t x, word_type const& w,
                         std::size_t len) const {
        for (std::size_t i = len; i-- > 0;) {
          x = _inv_tab[std::size_t(x) * _k + _local[w[i]]];
        }
        return x;
      }

      // Cheapest-first closure: a node is an edge (x, a) of the Cayley graph
      // or the inverse fact of a letter. An edge (u, g) follows from a
      // relation L = R read from v with L = l1 g l2 and v l1 = u when every
      // other edge on both sides is known and the inverse facts of l2 are
      // known: w(u) g <= w(v) l1 g => w(v) l1 g l2 l2' => w(v) R l2'
      // => w(t) l2' <= w(ug) l2 l2' => w(ug).
      void close() {
        std::size_t const E = _size * _k;
        _how.assign(E + _k, UNDEFINED);
        std::vector<double> cost(E + _k, 0);
        std::vector<char>   fin(E + _k, 0);
        using entry = std::pair<double, std::pair<std::uint32_t, std::size_t>>;
        std::priority_queue<entry, std::vector<entry>, std::greater<>> pq;

        // blocks of instances, one instance per vertex
        std::size_t total = 0;
        for (std::uint32_t r = 0; r < _rels.size(); ++r) {
          for (std::uint32_t s = 0; s < 2; ++s) {
            for (std::uint32_t j = 0; j < side(r, s).size(); ++j) {
              _blocks.push_back({r, s, j, total});
              total += _size;
            }
          }
        }
        std::vector<std::uint16_t> count(total, 0);
        constexpr std::uint16_t    DEAD = 0xFFFF;
        for (auto const& b : _blocks) {
          auto const& L = side(b.rel, b.side);
          auto const& R = other(b.rel, b.side);
          for (std::uint32_t v = 0; v < _size; ++v) {
            std::uint32_t x = v;
            std::size_t   concl = 0;
            std::vector<std::size_t> prem;
            for (std::size_t i = 0; i < L.size(); ++i) {
              auto e = std::size_t(x) * _k + _local[L[i]];
              if (i == b.j) {
                concl = e;
              } else {
                prem.push_back(e);
              }
              x = mul_letter(x, L[i]);
            }
            x = v;
            for (auto a : R) {
              prem.push_back(std::size_t(x) * _k + _local[a]);
              x = mul_letter(x, a);
            }
            bool dead = std::find(prem.begin(), prem.end(), concl)
                        != prem.end();
            count[b.base + v]
                = dead ? DEAD
                       : static_cast<std::uint16_t>(prem.size() + L.size()
                                                    - b.j - 1);
          }
        }

        // inverse facts: a relation h^m = e gives h' = h^(m-1) directly,
        // otherwise h' is the least word for the inverse of h and the fact
        // is h h' => w(h) h' => e along known edges
        _inv.assign(_k, {});
        std::vector<std::vector<std::size_t>> inv_prem(_k);
        std::vector<std::size_t>              inv_count(_k, 0);
        std::vector<std::vector<std::uint32_t>> inv_uses(E);
        for (letter_type h = 0; h < _k; ++h) {
          auto& f = _inv[h];
          for (std::uint32_t r = 0; r < _rels.size() && !f.direct; ++r) {
            for (std::uint32_t s = 0; s < 2; ++s) {
              auto const& L = side(r, s);
              if (other(r, s).empty() && !L.empty()
                  && std::all_of(L.begin(), L.end(), [&](letter_type a) {
                       return a == _letters[h];
                     })) {
                f.direct   = true;
                f.rel      = _rels[r];
                f.forward  = s == 0;
                f.inverse  = word_type(L.size() - 1, _letters[h]);
                break;
              }
            }
          }
          if (f.direct) {
            pq.push({1.0, {static_cast<std::uint32_t>(E + h), 0}});
            continue;
          }
          auto x     = _tab[h];
          f.inverse  = _words[inverse(x)];
          inv_prem[h].push_back(h);  // edge (0, h)
          for (auto a : f.inverse) {
            inv_prem[h].push_back(std::size_t(x) * _k + _local[a]);
            x = mul_letter(x, a);
          }
          inv_count[h] = inv_prem[h].size();
          for (auto e : inv_prem[h]) {
            if (inv_uses[e].empty() || inv_uses[e].back() != h) {
              inv_uses[e].push_back(h);
            }
          }
        }

        for (std::uint32_t y = 1; y < _size; ++y) {
          auto [x, a] = _parent[y];
          pq.push({0.0, {x * static_cast<std::uint32_t>(_k) + a, TREE}});
        }

        auto instance_cost = [&](Block const& b, std::uint32_t v) {
          auto const& L = side(b.rel, b.side);
          auto const& R = other(b.rel, b.side);
          double      c = 1;
          std::uint32_t x = v;
          for (std::size_t i = 0; i < L.size(); ++i) {
            if (i != b.j) {
              c += cost[std::size_t(x) * _k + _local[L[i]]];
            }
            if (i > b.j) {
              c += 2 * cost[E + _local[L[i]]];
            }
            x = mul_letter(x, L[i]);
          }
          x = v;
          for (auto a : R) {
            c += cost[std::size_t(x) * _k + _local[a]];
            x = mul_letter(x, a);
          }
          return c;
        };
        auto conclusion = [&](Block const& b, std::uint32_t v) {
          auto const& L = side(b.rel, b.side);
          auto        u = v;
          for (std::size_t i = 0; i < b.j; ++i) {
            u = mul_letter(u, L[i]);
          }
          return static_cast<std::uint32_t>(std::size_t(u) * _k
                                            + _local[L[b.j]]);
        };
        auto decrement = [&](std::size_t bi, std::uint32_t v) {
          auto& c = count[_blocks[bi].base + v];
          if (c == DEAD || c == 0) {
            return;
          }
          if (--c == 0) {
            auto e = conclusion(_blocks[bi], v);
            if (!fin[e]) {
              pq.push({instance_cost(_blocks[bi], v),
                       {e, _blocks[bi].base + v}});
            }
          }
        };

        std::size_t done = 0;
        while (!pq.empty()) {
          auto [c, what] = pq.top();
          pq.pop();
          auto [node, how] = what;
          if (fin[node]) {
            continue;
          }
          fin[node]  = 1;
          cost[node] = c;
          _how[node] = how;
          ++done;
          if (node >= E) {
            letter_type h = node - E;
            for (std::size_t bi = 0; bi < _blocks.size(); ++bi) {
              auto const& L = side(_blocks[bi].rel, _blocks[bi].side);
              for (std::size_t pos = _blocks[bi].j + 1; pos < L.size();
                   ++pos) {
                if (_local[L[pos]] == h) {
                  for (std::uint32_t v = 0; v < _size; ++v) {
                    decrement(bi, v);
                  }
                }
              }
            }
            continue;
          }
          std::uint32_t x = node / _k;
          letter_type   a = node % _k;
          for (auto h : inv_uses[node]) {
            for (auto e : inv_prem[h]) {
              if (e == node && --inv_count[h] == 0 && !fin[E + h]) {
                double t = 0;
                for (auto p : inv_prem[h]) {
                  t += cost[p];
                }
                pq.push({t, {static_cast<std::uint32_t>(E + h), 0}});
              }
            }
          }
          for (std::size_t bi = 0; bi < _blocks.size(); ++bi) {
            auto const& b = _blocks[bi];
            auto const& L = side(b.rel, b.side);
            auto const& R = other(b.rel, b.side);
            for (std::size_t pos = 0; pos < L.size(); ++pos) {
              if (pos != b.j && _local[L[pos]] == a) {
                decrement(bi, back(x, L, pos));
              }
            }
            for (std::size_t pos = 0; pos < R.size(); ++pos) {
              if (_local[R[pos]] == a) {
                decrement(bi, back(x, R, pos));
              }
            }
          }
        }
        if (done != E + _k) {
          throw std::invalid_argument(
              "could not derive every edge of the Cayley graph of the group "
              "of units from its relations");
        }
        _memo.assign(E, {});
        _memo_set.assign(E, 0);
      }

      // Steps rewriting word(x) a into word(x a), where a is local,
      // appended to out with every position shifted by off.
      void edge(std::uint32_t         x,
                letter_type           a,
                std::size_t           off,
                std::vector<RawStep>& out) {
        auto e = std::size_t(x) * _k + a;
        if (_how[e] == TREE) {
          return;
        }
        if (!_memo_set[e]) {
          memoize(e);
        }
        for (auto s : _memo[e]) {
          s.pos += off;
          out.push_back(s);
        }
      }

      // Expand e after every edge its derivation uses, without recursion.
      void memoize(std::size_t e) {
        std::vector<std::size_t> stack{e};
        std::vector<std::size_t> d;
        while (!stack.empty()) {
          auto f = stack.back();
          if (_memo_set[f]) {
            stack.pop_back();
            continue;
          }
          d.clear();
          deps(f, d);
          bool ready = true;
          for (auto x : d) {
            if (_how[x] != TREE && !_memo_set[x]) {
              stack.push_back(x);
              ready = false;
            }
          }
          if (!ready) {
            continue;
          }
          stack.pop_back();
          _memo[f]     = expand(f);
          _memo_set[f] = 1;
          _expanded += _memo[f].size();
          if (_expanded > MAX_EXPANDED) {
            throw std::length_error("derivation too long");
          }
        }
      }

      Block const& block_of(std::size_t e) const {
        return *std::find_if(
            _blocks.rbegin(), _blocks.rend(),
            [&](Block const& blk) { return blk.base <= _how[e]; });
      }

      void deps_walk(std::uint32_t              x,
                     word_type const&           w,
                     std::vector<std::size_t>& out) const {
        for (auto a : w) {
          out.push_back(std::size_t(x) * _k + _local[a]);
          x = mul_letter(x, a);
        }
      }

      // The edges used by the derivation of edge e.
      void deps(std::size_t e, std::vector<std::size_t>& out) const {
        auto const&   b = block_of(e);
        std::uint32_t v = _how[e] - b.base;
        auto const&   L = side(b.rel, b.side);
        word_type     l1(L.begin(), L.begin() + b.j);
        word_type     l2(L.begin() + b.j + 1, L.end());
        deps_walk(v, l1, out);
        deps_walk(v, other(b.rel, b.side), out);
        deps_walk(mul_letter(eval(l1, v), L[b.j]), l2, out);
        for (auto a : l2) {
          auto h = _local[a];
          if (!_inv[h].direct) {
            out.push_back(h);
            deps_walk(_tab[h], _inv[h].inverse, out);
          }
        }
      }

      static void append_reversed(std::vector<RawStep> const& in,
                                  std::size_t                 off,
                                  std::vector<RawStep>&       out) {
        for (auto it = in.rbegin(); it != in.rend(); ++it) {
          out.push_back({it->pos + off, it->rel, !it->forward});
        }
      }

      void walk_at(std::uint32_t         x,
                   word_type const&      w,
                   std::size_t           off,
                   std::vector<RawStep>& out) {
        for (auto c : w) {
          edge(x, _local[c], off, out);
          x = mul_letter(x, c);
        }
      }

      // h h' => e at offset off
      void inverse_fact(letter_type h, std::size_t off,
                        std::vector<RawStep>& out) {
        auto const& f = _inv[h];
        if (f.direct) {
          out.push_back({off, f.rel, f.forward});
          return;
        }
        edge(0, h, off, out);
        walk_at(_tab[h], f.inverse, off, out);
      }

      std::vector<RawStep> expand(std::size_t e) {
        auto const&   b = block_of(e);
        std::uint32_t v = _how[e] - b.base;
        auto const&   L = side(b.rel, b.side);
        auto const&   R = other(b.rel, b.side);
        word_type     l1(L.begin(), L.begin() + b.j);
        word_type     l2(L.begin() + b.j + 1, L.end());
        std::uint32_t u  = eval(l1, v);
        std::uint32_t ug = mul_letter(u, L[b.j]);
        std::size_t   wv = _words[v].size();

        std::vector<RawStep> out, tmp;
        // w(u) g <= w(v) l1 g
        walk_at(v, l1, 0, tmp);
        append_reversed(tmp, 0, out);
        // insert h h' for the letters of l2, innermost last
        for (std::size_t q = 0; q < l2.size(); ++q) {
          tmp.clear();
          inverse_fact(_local[l2[q]], 0, tmp);
          append_reversed(tmp, wv + b.j + 1 + q, out);
        }
        out.push_back({wv, _rels[b.rel], b.side == 0});
        // w(v) R => w(t)
        walk_at(v, R, 0, out);
        // w(t) l2' <= w(ug) l2 l2'
        tmp.clear();
        walk_at(ug, l2, 0, tmp);
        append_reversed(tmp, 0, out);
        // delete h h' innermost first
        std::size_t wug = _words[ug].size();
        for (std::size_t q = l2.size(); q-- > 0;) {
          inverse_fact(_local[l2[q]], wug + q, out);
        }
        return out;
      }

      struct InverseFact {
        bool        direct  = false;
        std::size_t rel     = 0;
        bool        forward = true;
        word_type   inverse;
      };

      static constexpr std::size_t TREE
          = static_cast<std::size_t>(-2);
      static constexpr std::size_t UNDEFINED
          = static_cast<std::size_t>(-1);
      static constexpr std::size_t MAX_EXPANDED = 50'000'000;

      Presentation const&                               _p;
      std::vector<std::size_t>                          _rels;
      std::vector<letter_type>                          _local;
      std::vector<letter_type>                          _letters;
      std::size_t                                       _k    = 0;
      std::size_t                                       _size = 0;
      std::vector<std::uint32_t>                        _tab;
      std::vector<std::uint32_t>                        _inv_tab;
      std::vector<std::pair<std::uint32_t, letter_type>> _parent;
      std::vector<word_type>                            _words;
      std::vector<Block>                                _blocks;
      std::vector<std::size_t>                          _how;
      std::vector<InverseFact>                          _inv;
      std::vector<std::vector<RawStep>>                 _memo;
      std::vector<char>                                 _memo_set;
      std::size_t                                       _expanded = 0;
    };

    // p_0 x_1 p_1 ... x_k p_k stored as [p_0, x_1, p_1, ..., x_k, p_k].
    using abstract_word = std::vector<std::uint32_t>;

    struct AbstractHash {
      std::size_t operator()(abstract_word const& w) const noexcept {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (auto x : w) {
          h = (h ^ x) * 0x100000001b3ULL;
        }
        return static_cast<std::size_t>(h);
      }
    };

    struct AbstractSide {
      std::vector<word_type>     segments;  // unit words between letters
      std::vector<std::uint32_t> units;     // their values
      word_type                  letters;
    };

    struct AbstractMove {
      std::size_t rel;
      bool        forward;
      std::size_t index;  // position of the first matched letter
    };

    class AbstractSearch {
     public:
      AbstractSearch(Presentation const& p, UnitGroup const& g)
          : _p(p), _g(g) {
        for (std::size_t i = 0; i < p.relations.size(); ++i) {
          auto const& r = p.relations[i];
          if (is_sn_label(r.label)) {
            continue;
          }
          auto l = split(r.lhs);
          auto s = split(r.rhs);
          // a side without other letters could be inserted anywhere
          if (l.letters.empty() || s.letters.empty()) {
            continue;
          }
          _sides.push_back({i, true, std::move(l), std::move(s)});
          _sides.push_back(
              {i, false, _sides.back().to, _sides.back().from});
        }
      }

      AbstractSide split(word_type const& w) const {
        AbstractSide out;
        out.segments.emplace_back();
        for (auto a : w) {
          if (_g.is_unit_letter(a)) {
            out.segments.back().push_back(a);
          } else {
            out.letters.push_back(a);
            out.segments.emplace_back();
          }
        }
        for (auto const& s : out.segments) {
          out.units.push_back(_g.eval(s));
        }
        return out;
      }

      abstract_word abstract(word_type const& w) const {
        auto          s = split(w);
        abstract_word out{s.units[0]};
        for (std::size_t i = 0; i < s.letters.size(); ++i) {
          out.push_back(s.letters[i]);
          out.push_back(s.units[i + 1]);
        }
        return out;
      }

      word_type concrete(abstract_word const& a) const {
        word_type out;
        for (std::size_t i = 0; i < a.size(); ++i) {
          if (i % 2 == 0) {
            auto const& w = _g.word(a[i]);
            out.insert(out.end(), w.begin(), w.end());
          } else {
            out.push_back(a[i]);
          }
        }
        return out;
      }

      std::size_t length(abstract_word const& a) const {
        std::size_t len = a.size() / 2;
        for (std::size_t i = 0; i < a.size(); i += 2) {
          len += _g.word(a[i]).size();
        }
        return len;
      }

      template <typename F>
      void neighbours(abstract_word const& a, F&& f) const {
        std::size_t k = a.size() / 2;
        for (std::size_t si = 0; si < _sides.size(); ++si) {
          auto const& sd = _sides[si];
          auto const& L  = sd.from;
          auto const& R  = sd.to;
          std::size_t m  = L.letters.size();
          for (std::size_t i = 0; i + m <= k; ++i) {
            bool ok = true;
            for (std::size_t t = 0; t < m && ok; ++t) {
              ok = a[2 * (i + t) + 1] == L.letters[t]
                   && (t == 0 || a[2 * (i + t)] == L.units[t]);
            }
            if (!ok) {
              continue;
            }
            auto pre  = _g.mul(a[2 * i], _g.inverse(L.units[0]));
            auto post = _g.mul(_g.inverse(L.units[m]), a[2 * (i + m)]);
            abstract_word b(a.begin(), a.begin() + 2 * i);
            std::size_t   mr = R.letters.size();
            b.push_back(_g.mul(pre, R.units[0]));
            for (std::size_t t = 0; t < mr; ++t) {
              b.push_back(R.letters[t]);
              b.push_back(R.units[t + 1]);
            }
            b.back() = _g.mul(b.back(), post);
            b.insert(b.end(), a.begin() + 2 * (i + m) + 1, a.end());
            f(std::move(b), AbstractMove{sd.rel, sd.forward, i});
          }
        }
      }

      struct SideRef {
        std::size_t  rel;
        bool         forward;
        AbstractSide from;
        AbstractSide to;
      };

      SideRef const& side(std::size_t rel, bool forward) const {
        for (auto const& s : _sides) {
          if (s.rel == rel && s.forward == forward) {
            return s;
          }
        }
        throw std::logic_error("no such relation side");
      }

     private:
      Presentation const&  _p;
      UnitGroup const&     _g;
      std::vector<SideRef> _sides;
    };

    // Applies raw steps to a word, recording each result.
    class Replayer {
     public:
      Replayer(Presentation const& p, word_type w)
          : _p(p), _w(std::move(w)) {}

      void apply(std::vector<RawStep> const& steps) {
        for (auto const& s : steps) {
          _w = apply_relation(_w, s.pos, _p.relations[s.rel], s.forward);
          _out.push_back({s.pos, s.rel, s.forward, _w});
          if (_out.size() > MAX_STEPS) {
            throw std::length_error("derivation too long");
          }
        }
      }

      word_type const& word() const noexcept {
        return _w;
      }

      std::vector<DerivationStep>& steps() noexcept {
        return _out;
      }

     private:
      static constexpr std::size_t MAX_STEPS = 20'000'000;
      Presentation const&          _p;
      word_type                    _w;
      std::vector<DerivationStep>  _out;
    };

    inline std::vector<RawStep> shifted(std::vector<RawStep> steps,
                                        std::size_t          off) {
      for (auto& s : steps) {
        s.pos += off;
      }
      return steps;
    }

    inline std::vector<RawStep> reversed(std::vector<RawStep> const& steps,
                                         std::size_t off = 0) {
      std::vector<RawStep> out;
      for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        out.push_back({it->pos + off, it->rel, !it->forward});
      }
      return out;
    }

    // Steps rewriting w into its abstract normal form: every maximal unit
    // segment becomes the least word of its value.
    inline std::vector<RawStep> normalize(UnitGroup&       g,
                                          word_type const& w) {
      std::vector<RawStep> out;
      std::size_t          off = 0;
      std::size_t          i   = 0;
      while (i <= w.size()) {
        std::size_t j = i;
        while (j < w.size() && g.is_unit_letter(w[j])) {
          ++j;
        }
        word_type            seg(w.begin() + i, w.begin() + j);
        std::vector<RawStep> s;
        g.walk(0, seg, s);
        auto sh = shifted(std::move(s), off);
        out.insert(out.end(), sh.begin(), sh.end());
        off += g.word(g.eval(seg)).size() + 1;
        i = j + 1;
      }
      return out;
    }

  }  // namespace detail

  //! Default bound on the group of units used by find_elementary_sequence.
  inline constexpr std::size_t DEFAULT_UNIT_GROUP_LIMIT = 400'000;

  //! Search for an elementary sequence from \p u to \p v.
  //!
  //! At most \p max_steps applications of relations not labelled as
  //! symmetric group relations are considered, and every intermediate word,
  //! with its unit segments written as least words, has length at most
  //! \p max_word_len. Rewriting inside the group of units is unbounded.
  //! Returns nothing if no sequence is found within these bounds, which
  //! proves nothing. Otherwise every step of the result replaces one factor
  //! using one relation of \p p.
  inline std::optional<std::vector<DerivationStep>>
  find_elementary_sequence(Presentation const& p,
                           word_type const&    u,
                           word_type const&    v,
                           std::size_t         max_steps,
                           std::size_t         max_word_len,
                           std::size_t unit_limit = DEFAULT_UNIT_GROUP_LIMIT) {
    p.validate();
    for (auto const* w : {&u, &v}) {
      for (auto a : *w) {
        if (a >= p.alphabet.size()) {
          throw std::invalid_argument("word uses a letter outside the "
                                      "alphabet");
        }
      }
    }
    if (u == v) {
      return std::vector<DerivationStep>{};
    }
    detail::UnitGroup      g(p, unit_limit);
    detail::AbstractSearch search(p, g);
    auto                   au = search.abstract(u);
    auto                   av = search.abstract(v);

    using detail::abstract_word;
    struct Visit {
      abstract_word        parent;
      detail::AbstractMove move;  // parent -> this
      std::size_t          depth;
    };
    std::unordered_map<abstract_word, Visit, detail::AbstractHash> seen[2];
    std::vector<abstract_word>                                     front[2];
    seen[0].emplace(au, Visit{{}, {}, 0});
    seen[1].emplace(av, Visit{{}, {}, 0});
    front[0].push_back(au);
    front[1].push_back(av);
    std::optional<abstract_word> meet;
    if (au == av) {
      meet = au;
    }
    std::size_t depth[2] = {0, 0};
    while (!meet && depth[0] + depth[1] < max_steps && !front[0].empty()
           && !front[1].empty()) {
      int side = front[0].size() <= front[1].size() ? 0 : 1;
      std::vector<abstract_word> next;
      for (auto const& a : front[side]) {
        search.neighbours(a, [&](abstract_word&& b, detail::AbstractMove m) {
          if (meet || search.length(b) > max_word_len
              || seen[side].count(b)) {
            return;
          }
          seen[side].emplace(b, Visit{a, m, depth[side] + 1});
          if (seen[1 - side].count(b)) {
            meet = b;
          }
          next.push_back(std::move(b));
        });
        if (meet) {
          break;
        }
      }
      front[side].swap(next);
      ++depth[side];
    }
    if (!meet) {
      return std::nullopt;
    }

    // the abstract path from au to av
    std::vector<abstract_word>        path;
    std::vector<detail::AbstractMove> moves;
    for (auto a = *meet; a != au;) {
      auto const& vis = seen[0].at(a);
      path.push_back(a);
      moves.push_back(vis.move);
      a = vis.parent;
    }
    path.push_back(au);
    std::reverse(path.begin(), path.end());
    std::reverse(moves.begin(), moves.end());
    for (auto a = *meet; a != av;) {
      auto const& vis = seen[1].at(a);
      auto        m   = vis.move;
      m.forward       = !m.forward;
      moves.push_back(m);
      path.push_back(vis.parent);
      a = vis.parent;
    }

    detail::Replayer rep(p, u);
    rep.apply(detail::normalize(g, u));
    for (std::size_t s = 0; s < moves.size(); ++s) {
      auto const& a  = path[s];
      auto const& m  = moves[s];
      auto const& sd = search.side(m.rel, m.forward);
      auto const& L  = sd.from;
      auto const& R  = sd.to;
      std::size_t ml = L.letters.size();
      std::size_t mr = R.letters.size();
      auto        i  = m.index;
      std::size_t off = 0;
      for (std::size_t t = 0; t < i; ++t) {
        off += g.word(a[2 * t]).size() + 1;
      }
      auto pre  = g.mul(a[2 * i], g.inverse(L.units[0]));
      auto post = g.mul(g.inverse(L.units[ml]), a[2 * (i + ml)]);

      // write each unit segment of the occurrence as in the relation
      std::vector<detail::RawStep> steps, tmp;
      std::size_t                  pos = off;
      g.walk(pre, L.segments[0], tmp);
      auto r = detail::reversed(tmp, pos);
      steps.insert(steps.end(), r.begin(), r.end());
      std::size_t rel_pos = pos + g.word(pre).size();
      pos = rel_pos + L.segments[0].size() + 1;
      for (std::size_t t = 1; t < ml; ++t) {
        tmp.clear();
        g.walk(0, L.segments[t], tmp);
        r = detail::reversed(tmp, pos);
        steps.insert(steps.end(), r.begin(), r.end());
        pos += L.segments[t].size() + 1;
      }
      tmp.clear();
      word_type last = L.segments[ml];
      auto const& wp = g.word(post);
      last.insert(last.end(), wp.begin(), wp.end());
      g.walk(0, last, tmp);
      r = detail::reversed(tmp, pos);
      steps.insert(steps.end(), r.begin(), r.end());
      rep.apply(steps);

      // the relation itself
      rep.apply({{rel_pos, m.rel, m.forward}});

      // back to least words
      steps.clear();
      tmp.clear();
      if (mr == 0) {
        word_type seg = R.segments[0];
        seg.insert(seg.end(), wp.begin(), wp.end());
        g.walk(pre, seg, tmp);
        rep.apply(detail::shifted(tmp, off));
      } else {
        g.walk(pre, R.segments[0], tmp);
        rep.apply(detail::shifted(tmp, off));
        pos = off + g.word(g.mul(pre, R.units[0])).size() + 1;
        for (std::size_t t = 1; t < mr; ++t) {
          tmp.clear();
          g.walk(0, R.segments[t], tmp);
          rep.apply(detail::shifted(tmp, pos));
          pos += g.word(R.units[t]).size() + 1;
        }
        tmp.clear();
        word_type seg = R.segments[mr];
        seg.insert(seg.end(), wp.begin(), wp.end());
        g.walk(0, seg, tmp);
        rep.apply(detail::shifted(tmp, pos));
      }
      if (rep.word() != search.concrete(path[s + 1])) {
        throw std::logic_error("derivation replay diverged");
      }
    }
    rep.apply(detail::reversed(detail::normalize(g, v)));
    if (rep.word() != v) {
      throw std::logic_error("derivation replay diverged");
    }
    return std::move(rep.steps());
  }

}  // namespace minpres

#endif  // MINPRES_DERIVATION_HPP_
