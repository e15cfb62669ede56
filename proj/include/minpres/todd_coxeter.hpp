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

// Todd-Coxeter enumeration of the right congruence on the free monoid
// generated by the relations of a presentation.

#ifndef MINPRES_TODD_COXETER_HPP_
#define MINPRES_TODD_COXETER_HPP_

#include <algorithm>  // for reverse, max, min
#include <chrono>     // for steady_clock
#include <cstddef>    // for size_t
#include <cstdint>    // for uint32_t
#include <numeric>    // for iota
#include <stdexcept>  // for invalid_argument, logic_error
#include <string>     // for string
#include <utility>    // for pair
#include <vector>     // for vector

#include "froidure_pin.hpp"
#include "presentation.hpp"

namespace minpres {

  enum class Outcome { finite, overflow };

  inline constexpr std::string_view outcome_name(Outcome o) {
    return o == Outcome::finite ? "finite" : "overflow";
  }

  struct EnumerationStats {
    std::size_t nodes_defined = 0;
    std::size_t max_active    = 0;
    std::size_t coincidences  = 0;
    std::size_t lookaheads    = 0;
    double      seconds       = 0;
  };

  //! Result of enumerating a presented monoid. A finite outcome is exact;
  //! an overflow says only that the limit was exceeded during the run and
  //! makes no claim about the size of the monoid.
  struct PresentedMonoidResult {
    Outcome          outcome = Outcome::overflow;
    std::size_t      size    = 0;
    std::size_t      limit   = 0;
    std::string      backend;
    EnumerationStats stats;

    [[nodiscard]] bool finite() const noexcept {
      return outcome == Outcome::finite;
    }
  };

  enum class Strategy { hlt, felsch };

  inline constexpr std::string_view strategy_name(Strategy s) {
    return s == Strategy::hlt ? "hlt" : "felsch";
  }

  struct ToddCoxeterOptions {
    //! Used by enumerate_presentation to choose the enumeration class.
    Strategy strategy = Strategy::hlt;
    //! Enumerate the left congruence, by reversing every relation.
    bool reverse = false;
    //! Number of active nodes that first triggers a lookahead.
    std::size_t lookahead = std::size_t(1) << 21;
    //! Check the completed table against every relation.
    bool verify = true;
    //! If the relations labelled as symmetric group relations define a
    //! monoid with at most this many elements, every new class is created
    //! together with a copy of that monoid's Cayley graph, and those
    //! relations are not traced. Zero disables this.
    std::size_t unit_block_limit = 50'000;
    //! Most nodes that may be active during a run. Runs that complete can
    //! pass through far more nodes than the final answer, so this is kept
    //! apart from the limit on the size of the answer. Zero means the same
    //! as that limit.
    std::size_t max_nodes = 0;
    ProgressCallback progress;
  };

  namespace detail {
    inline std::size_t node_budget(std::size_t                limit,
                                   ToddCoxeterOptions const& opts) {
      if (limit < 1) {
        throw std::invalid_argument("enumeration limit must be positive");
      }
      auto budget = std::max(limit, opts.max_nodes);
      if (budget >= UNDEFINED_INDEX / 2) {
        throw std::invalid_argument("Todd-Coxeter node budget too large");
      }
      return budget;
    }
  }  // namespace detail

  //! Hasse-Lee-Todd style enumeration with lookahead.
  //!
  //! Nodes stand for classes of words; node 0 is the empty word. Each node
  //! in turn has every relation traced from it, defining new nodes as needed,
  //! and the final letter of each relation is used to deduce an edge or to
  //! identify two nodes. Identified nodes are merged lazily through a
  //! union-find forest and rows are rewritten during compaction.
  class ToddCoxeter {
   public:
    ToddCoxeter(Presentation const& p, ToddCoxeterOptions opts = {})
        : _k(p.alphabet.size()), _opts(std::move(opts)) {
      p.validate();
      for (auto const& r : p.relations) {
        if (r.lhs == r.rhs) {
          continue;
        }
        auto u = r.lhs;
        auto v = r.rhs;
        if (_opts.reverse) {
          std::reverse(u.begin(), u.end());
          std::reverse(v.begin(), v.end());
        }
        _rels.emplace_back(std::move(u), std::move(v));
        _skip.push_back(false);
      }
      if (_opts.unit_block_limit > 0) {
        make_block(p);
      }
      new_class();
    }

    //! Define the path for \p w from node 0, so that a bounded run can show
    //! that two such words are equal.
    void define_path(word_type const& w) {
      std::uint32_t c = 0;
      for_each_letter(w, [&](letter_type a) { c = follow(c, a); });
    }

    //! True if \p u and \p v are known to be equal in the presented monoid:
    //! both paths exist and end at the same node. Valid at any time.
    [[nodiscard]] bool known_equal(word_type const& u, word_type const& v) {
      process_coincidences();
      auto end = [&](word_type const& w) {
        std::uint32_t c = 0;
        for_each_letter(w, [&](letter_type a) {
          if (c != UNDEFINED_INDEX) {
            c = target(c, a);
          }
        });
        return c;
      };
      auto x = end(u);
      return x != UNDEFINED_INDEX && x == end(v);
    }

    //! Number of nodes in each copy of the unit group Cayley graph, or 0.
    [[nodiscard]] std::size_t block_size() const noexcept {
      return _block_m;
    }

    //! Run until the table is complete, or until more nodes than the node
    //! budget remain active after a lookahead. Returns true if the table is
    //! complete with at most \p limit classes.
    bool run(std::size_t limit) {
      auto budget = detail::node_budget(limit, _opts);
      _start          = std::chrono::steady_clock::now();
      std::size_t nla = std::min(_opts.lookahead, budget);
      while (_current < _fwd.size()) {
        auto c = static_cast<std::uint32_t>(_current);
        if (_fwd[c] == c) {
          for (std::size_t r = 0; r < _rels.size(); ++r) {
            if (_skip[r]) {
              continue;
            }
            scan(c, _rels[r].first, _rels[r].second, true);
            process_coincidences();
            if (_fwd[c] != c) {
              break;
            }
          }
          if (_fwd[c] == c) {
            for (letter_type a = 0; a < _k; ++a) {
              follow(c, a);
            }
          }
        }
        ++_current;
        if (_active > nla) {
          lookahead();
          if (_active > budget) {
            _stats.seconds = elapsed();
            return false;
          }
          nla = std::min(std::max(nla, 2 * _active), budget);
        }
        if (_fwd.size() - _active > std::max<std::size_t>(_active, 1 << 16)) {
          compact();
        }
        if (_opts.progress && (_current & 0x3FFFF) == 0) {
          _opts.progress({"todd-coxeter", _current, _active, elapsed()});
        }
      }
      compact();
      _done          = true;
      _stats.seconds = elapsed();
      if (_opts.verify) {
        verify();
      }
      return _active <= limit;
    }

    //! Number of classes; valid after run() returns true.
    [[nodiscard]] std::size_t size() const {
      if (!_done) {
        throw std::logic_error("enumeration is not complete");
      }
      return _active;
    }

    [[nodiscard]] std::size_t active() const noexcept {
      return _active;
    }

    [[nodiscard]] EnumerationStats const& stats() const noexcept {
      return _stats;
    }

    //! The class of the product of class \p c with letter \p a; valid after
    //! completion.
    [[nodiscard]] std::uint32_t table(std::uint32_t c, letter_type a) const {
      if (!_done) {
        throw std::logic_error("enumeration is not complete");
      }
      return _tab.at(std::size_t(c) * _k + a);
    }

    //! The class reached from node 0 by \p w; valid after completion.
    [[nodiscard]] std::uint32_t class_of(word_type const& w) const {
      if (!_done) {
        throw std::logic_error("enumeration is not complete");
      }
      std::uint32_t c = 0;
      auto          step = [&](letter_type a) {
        if (a >= _k) {
          throw std::invalid_argument("letter out of range");
        }
        c = _tab[std::size_t(c) * _k + a];
      };
      if (_opts.reverse) {
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
          step(*it);
        }
      } else {
        for (auto a : w) {
          step(a);
        }
      }
      return c;
    }

   private:
    using rel_type = std::pair<word_type, word_type>;

    template <typename F>
    void for_each_letter(word_type const& w, F&& f) const {
      if (_opts.reverse) {
        std::for_each(w.rbegin(), w.rend(), f);
      } else {
        std::for_each(w.begin(), w.end(), f);
      }
    }

    double elapsed() const {
      return std::chrono::duration<double>(std::chrono::steady_clock::now()
                                           - _start)
          .count();
    }

    std::uint32_t new_node() {
      auto c = static_cast<std::uint32_t>(_fwd.size());
      _fwd.push_back(c);
      _tab.resize(_tab.size() + _k, UNDEFINED_INDEX);
      ++_active;
      ++_stats.nodes_defined;
      _stats.max_active = std::max(_stats.max_active, _active);
      return c;
    }

    // A new node, with a copy of the unit group attached when enabled.
    std::uint32_t new_class() {
      if (_block_m == 0) {
        return new_node();
      }
      auto base = static_cast<std::uint32_t>(_fwd.size());
      _fwd.resize(base + _block_m);
      std::iota(_fwd.begin() + base, _fwd.end(), base);
      _tab.resize(_tab.size() + _block_m * _k);
      auto* t = _tab.data() + std::size_t(base) * _k;
      for (std::size_t i = 0; i < _block_m * _k; ++i) {
        auto b = _block[i];
        t[i]   = b == UNDEFINED_INDEX ? b : base + b;
      }
      _active += _block_m;
      _stats.nodes_defined += _block_m;
      _stats.max_active = std::max(_stats.max_active, _active);
      return base;
    }

    // Enumerate the submonoid presented by the symmetric group relations.
    void make_block(Presentation const& p) {
      std::vector<letter_type> sub(_k, UNDEFINED_INDEX);
      Presentation             q;
      for (auto const& r : p.relations) {
        if (!is_sn_label(r.label)) {
          continue;
        }
        for (auto const* w : {&r.lhs, &r.rhs}) {
          for (auto a : *w) {
            if (sub[a] == UNDEFINED_INDEX) {
              sub[a] = static_cast<letter_type>(q.alphabet.size());
              q.alphabet.push_back(p.alphabet[a]);
            }
          }
        }
      }
      if (q.alphabet.empty()) {
        return;
      }
      auto rename = [&](word_type w) {
        for (auto& a : w) {
          a = sub[a];
        }
        return w;
      };
      for (auto const& r : p.relations) {
        if (is_sn_label(r.label)) {
          q.add_relation(rename(r.lhs), rename(r.rhs), r.label);
        }
      }
      ToddCoxeterOptions o;
      o.unit_block_limit = 0;
      ToddCoxeter tc(q, o);
      if (!tc.run(4 * _opts.unit_block_limit)
          || tc.size() > _opts.unit_block_limit) {
        return;
      }
      _block_m = tc.size();
      _block.assign(_block_m * _k, UNDEFINED_INDEX);
      for (letter_type a = 0; a < _k; ++a) {
        if (sub[a] == UNDEFINED_INDEX) {
          continue;
        }
        for (std::size_t c = 0; c < _block_m; ++c) {
          _block[c * _k + a] = tc._tab[c * q.alphabet.size() + sub[a]];
        }
      }
      // relations over the block letters hold in every copy
      for (std::size_t r = 0; r < _rels.size(); ++r) {
        auto in_block = [&](word_type const& w) {
          return std::all_of(w.begin(), w.end(), [&](letter_type a) {
            return sub[a] != UNDEFINED_INDEX;
          });
        };
        _skip[r] = in_block(_rels[r].first) && in_block(_rels[r].second);
      }
    }

    std::uint32_t find(std::uint32_t c) {
      while (_fwd[c] != c) {
        _fwd[c] = _fwd[_fwd[c]];
        c       = _fwd[c];
      }
      return c;
    }

    std::uint32_t target(std::uint32_t c, letter_type a) {
      auto& t = _tab[std::size_t(c) * _k + a];
      if (t == UNDEFINED_INDEX) {
        return t;
      }
      auto r = find(t);
      t      = r;
      return r;
    }

    std::uint32_t follow(std::uint32_t c, letter_type a) {
      auto t = target(c, a);
      if (t == UNDEFINED_INDEX) {
        t                             = new_class();
        _tab[std::size_t(c) * _k + a] = t;
      }
      return t;
    }

    // Trace all but the last letter of w from c.
    std::uint32_t trace_prefix(std::uint32_t c, word_type const& w, bool def) {
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        c = def ? follow(c, w[i]) : target(c, w[i]);
        if (c == UNDEFINED_INDEX) {
          return c;
        }
      }
      return c;
    }

    void coincide(std::uint32_t x, std::uint32_t y) {
      if (x != y) {
        _queue.emplace_back(x, y);
      }
    }

    // Make c.u = c.v hold, defining nodes if def is true.
    void scan(std::uint32_t    c,
              word_type const& u,
              word_type const& v,
              bool             def) {
      if (u.empty() || v.empty()) {
        auto const& w = u.empty() ? v : u;
        auto        x = trace_prefix(c, w, def);
        if (x == UNDEFINED_INDEX) {
          return;
        }
        auto t = target(x, w.back());
        if (t == UNDEFINED_INDEX) {
          _tab[std::size_t(x) * _k + w.back()] = c;
        } else {
          coincide(t, find(c));
        }
        return;
      }
      auto x = trace_prefix(c, u, def);
      if (x == UNDEFINED_INDEX) {
        return;
      }
      auto y = trace_prefix(c, v, def);
      if (y == UNDEFINED_INDEX) {
        return;
      }
      // y may have been defined after x was found, and x may since have died
      x       = find(x);
      auto xt = target(x, u.back());
      auto yt = target(y, v.back());
      if (xt == UNDEFINED_INDEX && yt == UNDEFINED_INDEX) {
        if (!def) {
          return;
        }
        auto d                               = new_class();
        _tab[std::size_t(x) * _k + u.back()] = d;
        if (_tab[std::size_t(y) * _k + v.back()] == UNDEFINED_INDEX) {
          _tab[std::size_t(y) * _k + v.back()] = d;
        }
      } else if (xt == UNDEFINED_INDEX) {
        _tab[std::size_t(x) * _k + u.back()] = yt;
      } else if (yt == UNDEFINED_INDEX) {
        _tab[std::size_t(y) * _k + v.back()] = xt;
      } else {
        coincide(xt, yt);
      }
    }

    void process_coincidences() {
      while (!_queue.empty()) {
        auto [x, y] = _queue.back();
        _queue.pop_back();
        x = find(x);
        y = find(y);
        if (x == y) {
          continue;
        }
        if (x > y) {
          std::swap(x, y);
        }
        _fwd[y] = x;
        --_active;
        ++_stats.coincidences;
        for (letter_type a = 0; a < _k; ++a) {
          auto ty = _tab[std::size_t(y) * _k + a];
          if (ty == UNDEFINED_INDEX) {
            continue;
          }
          auto& tx = _tab[std::size_t(x) * _k + a];
          if (tx == UNDEFINED_INDEX) {
            tx = ty;
          } else {
            coincide(tx, ty);
          }
        }
      }
    }

    // Scan every active node against every relation without defining.
    void lookahead() {
      ++_stats.lookaheads;
      auto before = _active + 1;
      while (_active < before) {
        before = _active;
        for (std::uint32_t c = 0; c < _fwd.size(); ++c) {
          if (_fwd[c] != c) {
            continue;
          }
          for (std::size_t r = 0; r < _rels.size(); ++r) {
            if (_skip[r]) {
              continue;
            }
            scan(c, _rels[r].first, _rels[r].second, false);
            process_coincidences();
            if (_fwd[c] != c) {
              break;
            }
          }
        }
        if (_opts.progress) {
          _opts.progress({"lookahead", _current, _active, elapsed()});
        }
        // repeat only while it pays
        if (before - _active < before / 16) {
          break;
        }
      }
      compact();
    }

    void lookahead_pass() {
      for (std::uint32_t c = 0; c < _fwd.size(); ++c) {
        if (_fwd[c] != c) {
          continue;
        }
        for (auto const& [u, v] : _rels) {
          scan(c, u, v, false);
          process_coincidences();
          if (_fwd[c] != c) {
            break;
          }
        }
      }
    }

    // Renumber the active nodes consecutively, preserving their order.
    void compact() {
      std::vector<std::uint32_t> renum(_fwd.size(), UNDEFINED_INDEX);
      std::uint32_t              next = 0;
      std::size_t                cur  = _current;
      bool                       set  = false;
      for (std::uint32_t c = 0; c < _fwd.size(); ++c) {
        if (!set && c >= _current) {
          cur = next;
          set = true;
        }
        if (_fwd[c] == c) {
          renum[c] = next++;
        }
      }
      if (!set) {
        cur = next;
      }
      std::vector<std::uint32_t> tab(std::size_t(next) * _k);
      for (std::uint32_t c = 0; c < _fwd.size(); ++c) {
        if (_fwd[c] != c) {
          continue;
        }
        for (letter_type a = 0; a < _k; ++a) {
          auto t = _tab[std::size_t(c) * _k + a];
          tab[std::size_t(renum[c]) * _k + a]
              = t == UNDEFINED_INDEX ? t : renum[find(t)];
        }
      }
      _tab.swap(tab);
      _fwd.resize(next);
      for (std::uint32_t c = 0; c < next; ++c) {
        _fwd[c] = c;
      }
      _fwd.shrink_to_fit();
      _current = cur;
    }

    void verify() const {
      auto walk = [&](std::uint32_t c, word_type const& w) {
        for (auto a : w) {
          c = _tab[std::size_t(c) * _k + a];
          if (c == UNDEFINED_INDEX) {
            throw std::logic_error("Todd-Coxeter table is incomplete");
          }
        }
        return c;
      };
      for (std::uint32_t c = 0; c < _fwd.size(); ++c) {
        for (auto const& [u, v] : _rels) {
          if (walk(c, u) != walk(c, v)) {
            throw std::logic_error(
                "Todd-Coxeter table does not satisfy a relation");
          }
        }
      }
    }

    std::size_t                                       _k;
    ToddCoxeterOptions                                _opts;
    std::vector<rel_type>                             _rels;
    std::vector<bool>                                 _skip;
    std::vector<std::uint32_t>                        _block;
    std::size_t                                       _block_m = 0;
    std::vector<std::uint32_t>                        _tab;
    std::vector<std::uint32_t>                        _fwd;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> _queue;
    std::size_t                                       _active  = 0;
    std::size_t                                       _current = 0;
    bool                                              _done    = false;
    EnumerationStats                                  _stats;
    std::chrono::steady_clock::time_point             _start;
  };

  //! Felsch style enumeration.
  //!
  //! A new node is defined only when every consequence of the previous
  //! definitions has been found: each new or changed edge is traced back
  //! through every relation passing through it, using preimage lists.
  //! Coincident nodes are merged eagerly, so edges always point to active
  //! nodes.
  class Felsch {
   public:
    Felsch(Presentation const& p, ToddCoxeterOptions opts = {})
        : _k(p.alphabet.size()), _opts(std::move(opts)), _occ(_k) {
      p.validate();
      for (auto const& r : p.relations) {
        if (r.lhs == r.rhs) {
          continue;
        }
        auto u = r.lhs;
        auto v = r.rhs;
        if (_opts.reverse) {
          std::reverse(u.begin(), u.end());
          std::reverse(v.begin(), v.end());
        }
        _rels.emplace_back(std::move(u), std::move(v));
      }
      for (std::uint32_t r = 0; r < _rels.size(); ++r) {
        for (std::uint32_t side = 0; side < 2; ++side) {
          auto const& w = side == 0 ? _rels[r].first : _rels[r].second;
          for (std::uint32_t i = 0; i < w.size(); ++i) {
            _occ[w[i]].push_back({r, side, i});
          }
        }
        if (_rels[r].first.size() <= 1 && _rels[r].second.size() <= 1) {
          _short.push_back(r);
        }
      }
      new_node();
    }

    //! See ToddCoxeter::run.
    bool run(std::size_t limit) {
      auto budget = detail::node_budget(limit, _opts);
      _start      = std::chrono::steady_clock::now();
      process();
      for (std::uint32_t c = 0; c < _fwd.size(); ++c) {
        for (letter_type a = 0; a < _k && _fwd[c] == c; ++a) {
          if (_tab[std::size_t(c) * _k + a] == UNDEFINED_INDEX) {
            define(c, a);
            if (_active > budget) {
              return overflow();
            }
          }
        }
        if (_opts.progress && (c & 0x3FFFF) == 0) {
          _opts.progress({"felsch", c, _active, elapsed()});
        }
      }
      compact();
      _done          = true;
      _stats.seconds = elapsed();
      if (_opts.verify) {
        verify();
      }
      return _active <= limit;
    }

    [[nodiscard]] std::size_t size() const {
      if (!_done) {
        throw std::logic_error("enumeration is not complete");
      }
      return _active;
    }

    [[nodiscard]] EnumerationStats const& stats() const noexcept {
      return _stats;
    }

    [[nodiscard]] std::uint32_t class_of(word_type const& w) const {
      if (!_done) {
        throw std::logic_error("enumeration is not complete");
      }
      std::uint32_t c    = 0;
      auto          step = [&](letter_type a) {
        if (a >= _k) {
          throw std::invalid_argument("letter out of range");
        }
        c = _tab[std::size_t(c) * _k + a];
      };
      if (_opts.reverse) {
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
          step(*it);
        }
      } else {
        for (auto a : w) {
          step(a);
        }
      }
      return c;
    }

   private:
    struct Occurrence {
      std::uint32_t rel;
      std::uint32_t side;
      std::uint32_t pos;
    };

    bool overflow() {
      _stats.seconds = elapsed();
      return false;
    }

    double elapsed() const {
      return std::chrono::duration<double>(std::chrono::steady_clock::now()
                                           - _start)
          .count();
    }

    bool alive(std::uint32_t c) const {
      return _fwd[c] == c;
    }

    std::uint32_t find(std::uint32_t c) {
      while (_fwd[c] != c) {
        _fwd[c] = _fwd[_fwd[c]];
        c       = _fwd[c];
      }
      return c;
    }

    std::uint32_t new_node() {
      auto c = static_cast<std::uint32_t>(_fwd.size());
      _fwd.push_back(c);
      _tab.resize(_tab.size() + _k, UNDEFINED_INDEX);
      _head.resize(_head.size() + _k, UNDEFINED_INDEX);
      _next.resize(_next.size() + _k, UNDEFINED_INDEX);
      ++_active;
      ++_stats.nodes_defined;
      _stats.max_active = std::max(_stats.max_active, _active);
      return c;
    }

    void set_edge(std::uint32_t c, letter_type a, std::uint32_t d) {
      auto ca   = std::size_t(c) * _k + a;
      auto da   = std::size_t(d) * _k + a;
      _tab[ca]  = d;
      _next[ca] = _head[da];
      _head[da] = c;
      _deductions.emplace_back(c, a);
    }

    std::uint32_t define(std::uint32_t c, letter_type a) {
      auto d = new_node();
      set_edge(c, a, d);
      for (auto r : _short) {
        scan(d, r);
      }
      process();
      return find(d);
    }

    std::uint32_t trace(std::uint32_t c, word_type const& w, std::size_t len) {
      for (std::size_t i = 0; i < len && c != UNDEFINED_INDEX; ++i) {
        c = _tab[std::size_t(c) * _k + w[i]];
      }
      return c;
    }

    // Deduce from c.u = c.v where possible.
    void scan(std::uint32_t c, std::uint32_t r) {
      auto const& u = _rels[r].first;
      auto const& v = _rels[r].second;
      if (u.empty() || v.empty()) {
        auto const& w = u.empty() ? v : u;
        auto        x = trace(c, w, w.size() - 1);
        if (x == UNDEFINED_INDEX) {
          return;
        }
        auto t = _tab[std::size_t(x) * _k + w.back()];
        if (t == UNDEFINED_INDEX) {
          set_edge(x, w.back(), c);
        } else if (t != c) {
          _coincidences.emplace_back(t, c);
        }
        return;
      }
      auto x = trace(c, u, u.size() - 1);
      if (x == UNDEFINED_INDEX) {
        return;
      }
      auto y = trace(c, v, v.size() - 1);
      if (y == UNDEFINED_INDEX) {
        return;
      }
      auto xt = _tab[std::size_t(x) * _k + u.back()];
      auto yt = _tab[std::size_t(y) * _k + v.back()];
      if (xt == UNDEFINED_INDEX && yt == UNDEFINED_INDEX) {
        return;
      } else if (xt == UNDEFINED_INDEX) {
        set_edge(x, u.back(), yt);
      } else if (yt == UNDEFINED_INDEX) {
        set_edge(y, v.back(), xt);
      } else if (xt != yt) {
        _coincidences.emplace_back(xt, yt);
      }
    }

    // Scan every relation through the edge from c labelled a.
    void deduce(std::uint32_t c, letter_type a) {
      for (auto const& o : _occ[a]) {
        auto const& w = o.side == 0 ? _rels[o.rel].first : _rels[o.rel].second;
        _stack.clear();
        _stack.emplace_back(c, o.pos);
        while (!_stack.empty()) {
          auto [e, pos] = _stack.back();
          _stack.pop_back();
          if (pos == 0) {
            if (alive(e)) {
              scan(e, o.rel);
            }
            continue;
          }
          auto b = w[pos - 1];
          for (auto p = _head[std::size_t(e) * _k + b]; p != UNDEFINED_INDEX;
               p      = _next[std::size_t(p) * _k + b]) {
            if (alive(p) && _tab[std::size_t(p) * _k + b] == e) {
              _stack.emplace_back(p, pos - 1);
            }
          }
        }
      }
    }

    void merge(std::uint32_t x, std::uint32_t y) {
      x = find(x);
      y = find(y);
      if (x == y) {
        return;
      }
      if (x > y) {
        std::swap(x, y);
      }
      _fwd[y] = x;
      --_active;
      ++_stats.coincidences;
      for (letter_type a = 0; a < _k; ++a) {
        _incoming.clear();
        for (auto p = _head[std::size_t(y) * _k + a]; p != UNDEFINED_INDEX;
             p      = _next[std::size_t(p) * _k + a]) {
          if (alive(p) && _tab[std::size_t(p) * _k + a] == y) {
            _incoming.push_back(p);
          }
        }
        _head[std::size_t(y) * _k + a] = UNDEFINED_INDEX;
        for (auto p : _incoming) {
          set_edge(p, a, x);
        }
      }
      for (letter_type a = 0; a < _k; ++a) {
        auto t = _tab[std::size_t(y) * _k + a];
        if (t == UNDEFINED_INDEX) {
          continue;
        }
        t      = find(t);
        auto s = _tab[std::size_t(x) * _k + a];
        if (s == UNDEFINED_INDEX) {
          set_edge(x, a, t);
        } else if (find(s) != t) {
          _coincidences.emplace_back(s, t);
        }
      }
    }

    void process() {
      while (!_coincidences.empty() || !_deductions.empty()) {
        while (!_coincidences.empty()) {
          auto [x, y] = _coincidences.back();
          _coincidences.pop_back();
          merge(x, y);
        }
        if (!_deductions.empty()) {
          auto [c, a] = _deductions.back();
          _deductions.pop_back();
          if (alive(c)) {
            deduce(c, a);
          }
        }
      }
    }

    void compact() {
      std::vector<std::uint32_t> renum(_fwd.size(), UNDEFINED_INDEX);
      std::uint32_t              next = 0;
      for (std::uint32_t c = 0; c < _fwd.size(); ++c) {
        if (alive(c)) {
          renum[c] = next++;
        }
      }
      std::vector<std::uint32_t> tab(std::size_t(next) * _k);
      for (std::uint32_t c = 0; c < _fwd.size(); ++c) {
        if (!alive(c)) {
          continue;
        }
        for (letter_type a = 0; a < _k; ++a) {
          auto t = _tab[std::size_t(c) * _k + a];
          tab[std::size_t(renum[c]) * _k + a]
              = t == UNDEFINED_INDEX ? t : renum[find(t)];
        }
      }
      _tab.swap(tab);
      _fwd.resize(next);
      for (std::uint32_t c = 0; c < next; ++c) {
        _fwd[c] = c;
      }
      std::vector<std::uint32_t>().swap(_head);
      std::vector<std::uint32_t>().swap(_next);
    }

    void verify() const {
      auto walk = [&](std::uint32_t c, word_type const& w) {
        for (auto a : w) {
          c = _tab[std::size_t(c) * _k + a];
          if (c == UNDEFINED_INDEX) {
            throw std::logic_error("Todd-Coxeter table is incomplete");
          }
        }
        return c;
      };
      for (std::uint32_t c = 0; c < _fwd.size(); ++c) {
        for (auto const& [u, v] : _rels) {
          if (walk(c, u) != walk(c, v)) {
            throw std::logic_error(
                "Todd-Coxeter table does not satisfy a relation");
          }
        }
      }
    }

    std::size_t                                          _k;
    ToddCoxeterOptions                                   _opts;
    std::vector<std::pair<word_type, word_type>>         _rels;
    std::vector<std::vector<Occurrence>>                 _occ;
    std::vector<std::uint32_t>                           _short;
    std::vector<std::uint32_t>                           _tab;
    std::vector<std::uint32_t>                           _head;
    std::vector<std::uint32_t>                           _next;
    std::vector<std::uint32_t>                           _fwd;
    std::vector<std::pair<std::uint32_t, letter_type>>   _deductions;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> _coincidences;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> _stack;
    std::vector<std::uint32_t>                           _incoming;
    std::size_t                                          _active = 0;
    bool                                                 _done   = false;
    EnumerationStats                                     _stats;
    std::chrono::steady_clock::time_point                _start;
  };

  //! Size of the monoid defined by \p p, if at most \p limit, by
  //! Todd-Coxeter enumeration of the right congruence, or of the left one if
  //! opts.reverse is set.
  inline PresentedMonoidResult
  enumerate_presentation(Presentation const& p,
                         std::size_t         limit,
                         ToddCoxeterOptions  opts = {}) {
    if (limit < 1) {
      throw std::invalid_argument("enumeration limit must be positive");
    }
    PresentedMonoidResult res;
    res.limit   = limit;
    res.backend = std::string(strategy_name(opts.strategy))
                  + (opts.reverse ? "-left" : "-right");
    auto go     = [&](auto& tc) {
      if (tc.run(limit)) {
        res.outcome = Outcome::finite;
        res.size    = tc.size();
      }
      res.stats = tc.stats();
    };
    if (opts.strategy == Strategy::hlt) {
      ToddCoxeter tc(p, std::move(opts));
      go(tc);
    } else {
      Felsch tc(p, std::move(opts));
      go(tc);
    }
    return res;
  }

}  // namespace minpres

#endif  // MINPRES_TODD_COXETER_HPP_
