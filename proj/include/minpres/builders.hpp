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

// Presentations for I_n, T_n and PT_n built on top of any presentation for the
// symmetric group. Permutations inside relations are replaced by their
// shortlex-least words over the symmetric group generators.

#ifndef MINPRES_BUILDERS_HPP_
#define MINPRES_BUILDERS_HPP_

#include <cstddef>      // for size_t
#include <map>          // for map
#include <optional>     // for optional
#include <stdexcept>    // for invalid_argument
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for pair, swap
#include <vector>       // for vector

#include "cycles.hpp"
#include "presentation.hpp"
#include "sn.hpp"
#include "transf.hpp"

namespace minpres {

  //! The idempotent of rank n - 1 with 1 outside its domain: [-,2,...,n].
  inline PartialTransf eta_of_degree(std::size_t n) {
    std::vector<std::size_t> img(n);
    img[0] = UNDEF;
    for (std::size_t i = 1; i < n; ++i) {
      img[i] = i + 1;
    }
    return PartialTransf::from_images(std::span<std::size_t const>(img));
  }

  //! The idempotent of rank n - 1 mapping 2 to 1: [1,1,3,...,n].
  inline PartialTransf zeta_of_degree(std::size_t n) {
    if (n < 2) {
      throw std::invalid_argument("zeta requires degree at least 2");
    }
    std::vector<std::size_t> img(n);
    for (std::size_t i = 0; i < n; ++i) {
      img[i] = i + 1;
    }
    img[1] = 1;
    return PartialTransf::from_images(std::span<std::size_t const>(img));
  }

  //! The permutations alpha, beta of the four-relation presentation for T_n.
  struct TnParams {
    PartialTransf alpha;
    PartialTransf beta;
  };

  //! n odd: alpha = (3,4), beta = (3,...,n); n even: alpha = (3,...,n),
  //! beta = (3,7,6,4,5). The even case needs n >= 8 since beta moves 7.
  inline TnParams tn_4rel_params(std::size_t n) {
    if (n < 5) {
      throw std::invalid_argument("tn_4rel requires n >= 5");
    }
    if (n % 2 == 1) {
      return {cycle(n, {3, 4}), interval_cycle(n, 3, n)};
    }
    if (n < 8) {
      throw std::invalid_argument(
          "tn_4rel is undefined for n = " + std::to_string(n)
          + ": for even n, beta = (3,7,6,4,5) requires n >= 8");
    }
    return {interval_cycle(n, 3, n), cycle(n, {3, 7, 6, 4, 5})};
  }

  //! The permutations alpha, beta, gamma, delta of the eight-relation
  //! presentation for PT_n.
  struct PtnParams {
    PartialTransf alpha;
    PartialTransf beta;
    PartialTransf gamma;
    PartialTransf delta;
  };

  inline PtnParams ptn_8rel_params(std::size_t n) {
    if (n < 7) {
      throw std::invalid_argument("ptn_8rel requires n >= 7");
    }
    if (n % 2 == 1) {
      return {interval_cycle(n, 3, n),
              cycle(n, {4, 6}),
              interval_cycle(n, 2, n),
              from_cycles(n, "(2,3)(4,6)")};
    }
    return {cycle(n, {3, 5, 4}),
            interval_cycle(n, 3, n),
            cycle(n, {2, 3, 5, 4}),
            interval_cycle(n, 2, n)};
  }

  namespace detail {

    // Builds named relations. Relations are built twice: the first pass
    // records which permutations are needed, a single word search finds all
    // of them, and the second pass assembles the words.
    class RelationMaker {
     public:
      RelationMaker(SnPresentation const& sp,
                    std::optional<letter_type> zeta,
                    std::optional<letter_type> eta)
          : _sp(sp), _n(sp.assignment.degree()), _zeta(zeta), _eta(eta) {}

      std::vector<Relation> make(std::vector<std::string> const& labels) {
        _recording = true;
        for (auto const& l : labels) {
          (void) relation(l);
        }
        auto words = words_for_permutations(_sp, _requests);
        for (std::size_t i = 0; i < _requests.size(); ++i) {
          _words.emplace(_requests[i], std::move(words[i]));
        }
        _recording = false;
        std::vector<Relation> out;
        for (auto const& l : labels) {
          out.push_back(relation(l));
        }
        return out;
      }

     private:
      word_type w(PartialTransf const& p) {
        if (_recording) {
          _requests.push_back(p);
          return {};
        }
        return _words.at(p);
      }

      word_type w(std::string_view cycles) {
        return w(from_cycles(_n, cycles));
      }

      word_type iv(std::size_t first, std::size_t last) {
        return w(interval_cycle(_n, first, last));
      }

      word_type Z() const {
        if (!_zeta) {
          throw std::invalid_argument("relation needs the letter zeta");
        }
        return {*_zeta};
      }

      word_type E() const {
        if (!_eta) {
          throw std::invalid_argument("relation needs the letter eta");
        }
        return {*_eta};
      }

      // conjugate x^p = p^-1 x p as a word
      word_type conj(word_type const& x, PartialTransf const& p) {
        return concat({w(inverse(p)), x, w(p)});
      }

      Relation relation(std::string const& label) {
        auto const n = _n;
        auto       rel = [&](word_type lhs, word_type rhs) {
          return Relation{std::move(lhs), std::move(rhs), label};
        };
        if (label == "I1") {
          return rel(concat({E(), E()}), E());
        } else if (label == "I2") {
          auto s = w("(2,3)");
          return rel(concat({s, E()}), concat({E(), s}));
        } else if (label == "I3") {
          auto c = iv(2, n);
          return rel(concat({c, E()}), concat({E(), c}));
        } else if (label == "I4") {
          auto t = w("(1,2)");
          return rel(concat({E(), t, E(), t}), concat({E(), t, E()}));
        } else if (label == "I5") {
          auto t = w("(1,2)");
          return rel(concat({t, E(), t, E()}), concat({E(), t, E()}));
        } else if (label == "I6") {
          auto c = iv(2, n);
          return rel(concat({c, E()}), concat({E(), E(), c}));
        } else if (label == "I7") {
          auto t = w("(1,2)");
          return rel(concat({t, E(), t, E(), t, E(), t}),
                     concat({E(), t, E()}));
        } else if (label == "T1") {
          auto t = w("(1,3)");
          return rel(concat({Z(), t, Z(), t}), Z());
        } else if (label == "T2") {
          return rel(concat({w("(1,2)"), Z()}), Z());
        } else if (label == "T3") {
          auto t = w("(3,4)");
          return rel(concat({t, Z()}), concat({Z(), t}));
        } else if (label == "T4") {
          auto c = iv(3, n);
          return rel(concat({c, Z()}), concat({Z(), c}));
        } else if (label == "T5") {
          auto t = w("(2,3)");
          return rel(concat({Z(), t, Z(), t}), concat({Z(), t, Z()}));
        } else if (label == "T6") {
          auto t = w("(2,3)");
          return rel(concat({t, Z(), t, Z()}), concat({Z(), t, Z()}));
        } else if (label == "T7") {
          auto s = w(from_cycles(
              n, CycleNotation{n, {{1, n}, {2, 3}}}));
          return rel(concat({s, Z(), s, Z()}), concat({Z(), s, Z(), s}));
        } else if (label == "T8") {
          auto t = w("(2,3)");
          return rel(concat({t, Z(), t, Z(), t, Z(), t}),
                     concat({Z(), t, Z()}));
        } else if (label == "T9") {
          auto c = iv(3, n);
          auto s = w(interval_cycle(n, 3, n) * cycle(n, {1, 2}));
          return rel(concat({s, Z()}), concat({Z(), c}));
        } else if (label == "Tα") {
          auto t = w("(1,3)");
          return rel(conj(Z(), tn_4rel_params(n).alpha),
                     concat({Z(), t, Z(), t}));
        } else if (label == "Tβ") {
          auto t = w("(1,3)");
          return rel(conj(Z(), tn_4rel_params(n).beta),
                     concat({w("(1,2)"), Z(), t, Z(), t}));
        } else if (label == "P1") {
          auto t = w("(1,2)");
          return rel(concat({Z(), t, E(), t}), Z());
        } else if (label == "P2") {
          auto t = w("(1,2)");
          return rel(concat({E(), t, Z(), t}), E());
        } else if (label == "P3") {
          return rel(concat({Z(), E()}), concat({E(), w("(1,2)"), E()}));
        } else if (label == "P4") {
          auto c = w("(1,2,3)");
          return rel(concat({w("(1,3)"), Z(), c, Z()}), concat({Z(), c, Z()}));
        } else if (label == "P5") {
          auto t = w("(1,3)");
          return rel(concat({t, E(), t, Z()}), concat({Z(), t, E(), t}));
        } else if (label == "P6") {
          auto t = w("(1,2)");
          return rel(concat({t, E(), t, E(), t}), concat({Z(), E()}));
        } else if (label == "P7" || label == "Y1") {
          auto t = w("(1,2)");
          auto s = w("(2,3)");
          return rel(concat({s, E(), s}), concat({E(), t, Z(), t}));
        } else if (label == "Y2") {
          auto t = w("(1,2)");
          auto s = w("(3,4)");
          return rel(concat({s, Z(), s}), concat({Z(), t, E(), t}));
        } else if (label == "Pα") {
          auto t = w("(1,2)");
          return rel(conj(Z(), ptn_8rel_params(n).alpha),
                     concat({t, Z(), t, E(), t}));
        } else if (label == "Pβ") {
          auto t = w("(1,2)");
          return rel(conj(Z(), ptn_8rel_params(n).beta),
                     concat({Z(), t, E(), t}));
        } else if (label == "Pγ") {
          auto t = w("(1,2)");
          return rel(conj(E(), ptn_8rel_params(n).gamma),
                     concat({E(), t, Z(), t}));
        } else if (label == "Pδ") {
          auto t = w("(1,2)");
          return rel(conj(E(), ptn_8rel_params(n).delta),
                     concat({E(), t, Z(), t}));
        }
        throw std::invalid_argument("unknown relation label \"" + label
                                    + "\"");
      }

      SnPresentation const&            _sp;
      std::size_t                      _n;
      std::optional<letter_type>       _zeta;
      std::optional<letter_type>       _eta;
      bool                             _recording = false;
      std::vector<PartialTransf>       _requests;
      std::map<PartialTransf, word_type> _words;
    };

    // The presentation <A, zeta?, eta? | R, labels>.
    inline BoundPresentation composite(SnPresentation const&           sp,
                                       Family                          family,
                                       bool                            zeta,
                                       bool                            eta,
                                       std::vector<std::string> const& labels) {
      auto const        n = sp.assignment.degree();
      BoundPresentation out{sp.presentation, sp.assignment};
      out.presentation.family = family;
      out.presentation.degree = n;
      std::optional<letter_type> z, e;
      if (zeta) {
        z = out.presentation.add_letter("zeta");
        out.assignment.push_back(zeta_of_degree(n));
      }
      if (eta) {
        e = out.presentation.add_letter("eta");
        out.assignment.push_back(eta_of_degree(n));
      }
      RelationMaker maker(sp, z, e);
      for (auto& r : maker.make(labels)) {
        out.presentation.relations.push_back(std::move(r));
      }
      return out;
    }

    inline void require_sn(SnPresentation const& sp,
                           std::size_t           min,
                           char const*           who) {
      require_degree(sp.assignment.degree(), min, who);
      if (sp.presentation.alphabet.size() != sp.assignment.size()) {
        throw std::invalid_argument(
            std::string(who)
            + ": the symmetric group presentation has an incomplete "
              "assignment");
      }
    }

  }  // namespace detail

  //! I_n with the five relations I1 to I5.
  inline BoundPresentation in_5rel(SnPresentation const& sp) {
    detail::require_sn(sp, 4, "in_5rel");
    return detail::composite(
        sp, Family::in_5rel, false, true, {"I1", "I2", "I3", "I4", "I5"});
  }

  //! I_n with the three relations I2, I6, I7.
  inline BoundPresentation in_3rel(SnPresentation const& sp) {
    detail::require_sn(sp, 3, "in_3rel");
    return detail::composite(
        sp, Family::in_3rel, false, true, {"I2", "I6", "I7"});
  }

  //! T_n with Aizenstat's seven relations T1 to T7.
  inline BoundPresentation tn_aizenstat(SnPresentation const& sp) {
    detail::require_sn(sp, 4, "tn_aizenstat");
    return detail::composite(sp,
                             Family::tn_aizenstat,
                             true,
                             false,
                             {"T1", "T2", "T3", "T4", "T5", "T6", "T7"});
  }

  //! T_n with the four relations T7, T8, Tα, Tβ. Throws for n = 6, where
  //! beta = (3,7,6,4,5) is not a permutation of degree 6.
  inline BoundPresentation tn_4rel(SnPresentation const& sp) {
    detail::require_sn(sp, 5, "tn_4rel");
    (void) tn_4rel_params(sp.assignment.degree());
    return detail::composite(
        sp, Family::tn_4rel, true, false, {"T7", "T8", "Tα", "Tβ"});
  }

  //! T_n with the five relations T1, T3, T7, T8, T9.
  inline BoundPresentation tn_5rel(SnPresentation const& sp) {
    detail::require_sn(sp, 5, "tn_5rel");
    return detail::composite(
        sp, Family::tn_5rel, true, false, {"T1", "T3", "T7", "T8", "T9"});
  }

  //! PT_n with East's twelve relations.
  inline BoundPresentation ptn_east(SnPresentation const& sp) {
    detail::require_sn(sp, 4, "ptn_east");
    return detail::composite(sp,
                             Family::ptn_east,
                             true,
                             true,
                             {"I2",
                              "I3",
                              "I4",
                              "T2",
                              "T3",
                              "T4",
                              "T7",
                              "P1",
                              "P2",
                              "P3",
                              "P4",
                              "P5"});
  }

  //! PT_n with the eight relations T7, T8, P5, P6, Pα, Pβ, Pγ, Pδ.
  inline BoundPresentation ptn_8rel(SnPresentation const& sp) {
    detail::require_sn(sp, 7, "ptn_8rel");
    return detail::composite(
        sp,
        Family::ptn_8rel,
        true,
        true,
        {"T7", "T8", "P5", "P6", "Pα", "Pβ", "Pγ", "Pδ"});
  }

  //! PT_n with the nine relations I3, T3, T7, T8, T9, P1, P5, P6, P7.
  inline BoundPresentation ptn_9rel(SnPresentation const& sp) {
    detail::require_sn(sp, 4, "ptn_9rel");
    return detail::composite(
        sp,
        Family::ptn_9rel,
        true,
        true,
        {"I3", "T3", "T7", "T8", "T9", "P1", "P5", "P6", "P7"});
  }

  namespace detail {

    inline BoundPresentation idempotent_presentation(Family family) {
      BoundPresentation out;
      out.presentation.family = family;
      out.presentation.degree = 1;
      out.presentation.add_letter("x");
      out.presentation.add_relation({0, 0}, {0}, "I1");
      out.assignment = Assignment(1, {eta_of_degree(1)});
      return out;
    }

    // Append zeta (if requested) and eta (if requested) to small_sn(n).
    inline BoundPresentation small_base(std::size_t n,
                                        Family      family,
                                        bool        zeta,
                                        bool        eta) {
      auto sp = small_sn(n);
      return composite(sp, family, zeta, eta, {});
    }

  }  // namespace detail

  //! Presentations for I_1 to I_3, T_1 to T_4, T_6, and PT_1 to PT_6.
  //!
  //! The presentations for T_4 and T_6 are over Carmichael's generators. For
  //! PT_4 to PT_6 the symmetric group presentation is \p sp when given, and
  //! Carmichael's otherwise.
  inline BoundPresentation
  small_presentation(MonoidFamily                         family,
                     std::size_t                          n,
                     std::optional<SnPresentation> const& sp = std::nullopt) {
    auto unsupported = [&] {
      return std::invalid_argument(
          "no small presentation for " + std::string(monoid_family_name(family))
          + " with n = " + std::to_string(n));
    };
    if (family == MonoidFamily::in) {
      if (n == 1) {
        return detail::idempotent_presentation(Family::small_in);
      } else if (n == 2) {
        auto  out = detail::small_base(2, Family::small_in, false, true);
        auto& p   = out.presentation;
        p.alphabet[0] = "x";
        p.add_relation({1, 1}, {1}, "I1");
        p.add_relation(
            concat({power({0, 1}, 3), {0}}), {1, 0, 1}, "X1");
        return out;
      } else if (n == 3) {
        auto out = in_3rel(small_sn(3));
        out.presentation.family = Family::small_in;
        return out;
      }
      throw unsupported();
    } else if (family == MonoidFamily::tn) {
      if (n == 1) {
        BoundPresentation out;
        out.presentation.family = Family::small_tn;
        out.presentation.degree = 1;
        out.assignment          = Assignment(1, {});
        return out;
      } else if (n == 2) {
        auto  out = detail::small_base(2, Family::small_tn, true, false);
        auto& p   = out.presentation;
        p.add_relation({0, 1}, {1}, "T2");
        p.add_relation({1, 1}, {1}, "X1");
        return out;
      } else if (n == 3) {
        // a_2 = 0, a_3 = 1, zeta = 2
        auto  out = detail::small_base(3, Family::small_tn, true, false);
        auto& p   = out.presentation;
        p.add_relation({0, 2}, {2}, "T2");
        p.add_relation({2, 1, 2, 1}, {2}, "T1");
        p.add_relation(concat({power({0, 1, 0, 2}, 3), {0, 1, 0}}),
                       {2, 0, 1, 0, 2},
                       "X1");
        return out;
      } else if (n == 4) {
        // a_2 = 0, a_3 = 1, a_4 = 2, zeta = 3
        auto out = detail::composite(
            carmichael(4), Family::small_tn, true, false, {});
        auto& p = out.presentation;
        p.add_relation({0, 3}, {3, 3, 1, 3, 1}, "X1");
        p.add_relation(
            power({2, 0, 1, 0, 3}, 2), power({3, 2, 0, 1, 0}, 2), "X2");
        p.add_relation({1, 2, 1, 3, 1, 2, 1}, {3, 1, 3, 1}, "X3");
        p.add_relation(concat({power({0, 1, 0, 3}, 3), {0, 1, 0}}),
                       {3, 0, 1, 0, 3},
                       "X4");
        return out;
      } else if (n == 6) {
        // a_i = i - 2, zeta = 5
        auto out = detail::composite(
            carmichael(6), Family::small_tn, true, false, {});
        auto& p = out.presentation;
        p.add_relation(
            power({5, 4, 0, 1, 0}, 2), power({4, 0, 1, 0, 5}, 2), "X1");
        p.add_relation(concat({power({0, 1, 0, 5}, 3), {0, 1, 0}}),
                       {5, 0, 1, 0, 5},
                       "X2");
        p.add_relation({1, 2, 1, 5, 1, 2, 1}, {5, 1, 5, 1}, "X3");
        p.add_relation(
            {1, 4, 3, 2, 1, 5, 1, 2, 3, 4, 1}, {0, 5}, "X4");
        return out;
      }
      throw unsupported();
    } else if (family == MonoidFamily::ptn) {
      if (n == 1) {
        return detail::idempotent_presentation(Family::small_ptn);
      } else if (n == 2) {
        // a_2 = 0, zeta = 1, eta = 2
        auto  out = detail::small_base(2, Family::small_ptn, true, true);
        auto& p   = out.presentation;
        p.add_relation({0, 1}, {1}, "T2");
        p.add_relation({1, 0, 2, 0}, {1}, "P1");
        p.add_relation({2, 0, 1, 0}, {2}, "P2");
        p.add_relation({0, 2, 0, 2, 0}, {1, 2}, "P6");
        return out;
      } else if (n == 3) {
        return detail::composite(small_sn(3),
                                 Family::small_ptn,
                                 true,
                                 true,
                                 {"I2", "T2", "T8", "P1", "P2", "P5", "P6"});
      } else if (n >= 4 && n <= 6) {
        auto base = sp ? *sp : carmichael(n);
        if (base.assignment.degree() != n) {
          throw std::invalid_argument(
              "symmetric group presentation has the wrong degree");
        }
        auto out = detail::composite(
            base,
            Family::small_ptn,
            true,
            true,
            {"I3", "T7", "T8", "T9", "P5", "P6", "Y1", "Y2"});
        // These four are stated with their sides exchanged.
        for (auto& r : out.presentation.relations) {
          if (r.label == "I3" || r.label == "T7" || r.label == "P5"
              || r.label == "P6") {
            std::swap(r.lhs, r.rhs);
          }
        }
        return out;
      }
      throw unsupported();
    }
    throw unsupported();
  }

}  // namespace minpres

#endif  // MINPRES_BUILDERS_HPP_
