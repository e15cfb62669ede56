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

// Generating sets for alternating groups used in the proofs that the
// presentations for T_n and PT_n are correct, and the explicit permutation
// identities behind them.

#ifndef MINPRES_LEMMAS_HPP_
#define MINPRES_LEMMAS_HPP_

#include <algorithm>    // for std::all_of, std::find
#include <array>        // for std::array
#include <cstddef>      // for std::size_t
#include <stdexcept>    // for std::invalid_argument
#include <string>       // for std::string
#include <string_view>  // for std::string_view
#include <vector>       // for std::vector

#include "builders.hpp"
#include "cycles.hpp"
#include "froidure_pin.hpp"
#include "transf.hpp"

namespace minpres {

  //! The generating sets of alternating groups that are checked.
  enum class AltLemma {
    //! (1, 2, i) for 3 <= i <= n generate A_n, n >= 3.
    cycles_12i,
    //! (1, i, i + 2) for 2 <= i <= n - 2 generate A_n, n >= 5.
    cycles_1ii2,
    //! The T_n parameters for even n >= 8: (βα^-1)^2, τ and τ^(αβ^-1)
    //! generate A_{3..n}.
    tau_tn_even,
    //! As tau_tn_even with the PT_n parameters α, β for odd n >= 7.
    tau_ptn_odd,
    //! As tau_tn_even with the PT_n parameters α, β for even n >= 8.
    tau_ptn_even,
    //! The PT_n parameters γ, δ for odd n >= 7: (δγ^-1)^2, ρ and
    //! ρ^(γδ^-1) generate A_{2..n}.
    rho_ptn_odd,
    //! As rho_ptn_odd for even n >= 8.
    rho_ptn_even
  };

  inline constexpr std::array<AltLemma, 7> ALL_ALT_LEMMAS
      = {AltLemma::cycles_12i,
         AltLemma::cycles_1ii2,
         AltLemma::tau_tn_even,
         AltLemma::tau_ptn_odd,
         AltLemma::tau_ptn_even,
         AltLemma::rho_ptn_odd,
         AltLemma::rho_ptn_even};

  inline constexpr std::string_view alt_lemma_name(AltLemma l) {
    switch (l) {
      case AltLemma::cycles_12i: return "alt-12i";
      case AltLemma::cycles_1ii2: return "alt-1ii2";
      case AltLemma::tau_tn_even: return "tau-tn-even";
      case AltLemma::tau_ptn_odd: return "tau-ptn-odd";
      case AltLemma::tau_ptn_even: return "tau-ptn-even";
      case AltLemma::rho_ptn_odd: return "rho-ptn-odd";
      case AltLemma::rho_ptn_even: return "rho-ptn-even";
    }
    return "";
  }

  inline AltLemma alt_lemma_from_name(std::string_view s) {
    for (auto l : ALL_ALT_LEMMAS) {
      if (alt_lemma_name(l) == s) {
        return l;
      }
    }
    throw std::invalid_argument("unknown lemma \"" + std::string(s) + "\"");
  }

  //! Smallest degree, and required parity (0 even, 1 odd, 2 any).
  struct DegreeRange {
    std::size_t min;
    int         parity;

    [[nodiscard]] bool admits(std::size_t n) const noexcept {
      return n >= min && (parity == 2 || int(n % 2) == parity);
    }

    [[nodiscard]] std::string to_string() const {
      std::string p = parity == 0 ? "even " : parity == 1 ? "odd " : "";
      return p + "n >= " + std::to_string(min);
    }

    //! The \p k smallest admissible degrees.
    [[nodiscard]] std::vector<std::size_t> smallest(std::size_t k) const {
      std::vector<std::size_t> out;
      for (auto n = min; out.size() < k; ++n) {
        if (admits(n)) {
          out.push_back(n);
        }
      }
      return out;
    }
  };

  inline DegreeRange alt_lemma_range(AltLemma l) {
    switch (l) {
      case AltLemma::cycles_12i: return {3, 2};
      case AltLemma::cycles_1ii2: return {5, 2};
      case AltLemma::tau_tn_even: return {8, 0};
      case AltLemma::tau_ptn_odd: return {7, 1};
      case AltLemma::tau_ptn_even: return {8, 0};
      case AltLemma::rho_ptn_odd: return {7, 1};
      case AltLemma::rho_ptn_even: return {8, 0};
    }
    return {0, 2};
  }

  namespace detail {
    inline PartialTransf pow(PartialTransf const& f, std::size_t k) {
      auto r = PartialTransf::identity(f.degree());
      for (std::size_t i = 0; i < k; ++i) {
        r = r * f;
      }
      return r;
    }

    // x y x^-1 y x^-1 y^-1 x y^-1
    inline PartialTransf tau_word(PartialTransf const& x,
                                  PartialTransf const& y) {
      auto xi = inverse(x), yi = inverse(y);
      return x * y * xi * y * xi * yi * x * yi;
    }

    inline void require_range(AltLemma l, std::size_t n) {
      if (n > MAX_DEGREE || !alt_lemma_range(l).admits(n)) {
        throw std::invalid_argument(std::string(alt_lemma_name(l))
                                    + " requires "
                                    + alt_lemma_range(l).to_string()
                                    + ", got n = " + std::to_string(n));
      }
    }

    // The pair (x, y) such that the generators are (xy^-1)^2, τ, τ^(yx^-1)
    // with τ = tau_word(x, y).
    inline std::pair<PartialTransf, PartialTransf> tau_pair(AltLemma    l,
                                                            std::size_t n) {
      switch (l) {
        case AltLemma::tau_tn_even: {
          auto p = tn_4rel_params(n);
          return {p.beta, p.alpha};
        }
        case AltLemma::tau_ptn_odd:
        case AltLemma::tau_ptn_even: {
          auto p = ptn_8rel_params(n);
          return {p.beta, p.alpha};
        }
        case AltLemma::rho_ptn_odd:
        case AltLemma::rho_ptn_even: {
          auto p = ptn_8rel_params(n);
          return {p.delta, p.gamma};
        }
        default: break;
      }
      throw std::invalid_argument("tau_pair: not a conjugation lemma");
    }
  }  // namespace detail

  //! The generators of the lemma \p l in degree \p n.
  inline std::vector<PartialTransf> alt_lemma_generators(AltLemma    l,
                                                         std::size_t n) {
    detail::require_range(l, n);
    std::vector<PartialTransf> gens;
    if (l == AltLemma::cycles_12i) {
      for (std::size_t i = 3; i <= n; ++i) {
        gens.push_back(cycle(n, {1, 2, i}));
      }
    } else if (l == AltLemma::cycles_1ii2) {
      for (std::size_t i = 2; i + 2 <= n; ++i) {
        gens.push_back(cycle(n, {1, i, i + 2}));
      }
    } else {
      auto [x, y] = detail::tau_pair(l, n);
      auto t      = detail::tau_word(x, y);
      gens.push_back(detail::pow(x * inverse(y), 2));
      gens.push_back(t);
      gens.push_back(conjugate(t, y * inverse(x)));
    }
    return gens;
  }

  //! The points on which the lemma's alternating group acts.
  inline std::vector<std::size_t> alt_lemma_points(AltLemma l, std::size_t n) {
    detail::require_range(l, n);
    std::size_t first = 1;
    if (l == AltLemma::rho_ptn_odd || l == AltLemma::rho_ptn_even) {
      first = 2;
    } else if (l != AltLemma::cycles_12i && l != AltLemma::cycles_1ii2) {
      first = 3;
    }
    std::vector<std::size_t> pts;
    for (auto x = first; x <= n; ++x) {
      pts.push_back(x);
    }
    return pts;
  }

  struct AltGroupReport {
    AltLemma                 lemma = AltLemma::cycles_12i;
    std::size_t              degree = 0;
    std::vector<std::string> generators;
    std::vector<std::size_t> points;
    std::size_t              size     = 0;
    std::size_t              expected = 0;
    bool                     all_even   = false;
    bool                     supported  = false;
    bool                     transitive = false;

    [[nodiscard]] bool pass() const noexcept {
      return size == expected && all_even && supported && transitive;
    }
  };

  //! Check that the lemma's generators generate the alternating group on
  //! its points: they are even, move only those points, act transitively on
  //! them, and generate a group of order m!/2 where m is the number of
  //! points. An even group of that order on m points is the alternating
  //! group.
  inline AltGroupReport alt_group_lemma_check(AltLemma l, std::size_t n) {
    AltGroupReport rep;
    rep.lemma  = l;
    rep.degree = n;
    auto gens  = alt_lemma_generators(l, n);
    rep.points = alt_lemma_points(l, n);
    for (auto const& g : gens) {
      rep.generators.push_back(to_cycles(g).to_string());
    }
    rep.all_even = std::all_of(gens.begin(), gens.end(), [](auto const& g) {
      return parity(g) == Parity::even;
    });
    auto in_points = [&](std::size_t x) {
      return std::find(rep.points.begin(), rep.points.end(), x)
             != rep.points.end();
    };
    rep.supported = std::all_of(gens.begin(), gens.end(), [&](auto const& g) {
      auto s = support(g);
      return std::all_of(s.begin(), s.end(), in_points);
    });
    std::vector<bool>        reached(n + 1, false);
    std::vector<std::size_t> queue{rep.points.front()};
    reached[rep.points.front()] = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (auto const& g : gens) {
        auto y = g[queue[i]];
        if (!reached[y]) {
          reached[y] = true;
          queue.push_back(y);
        }
      }
    }
    rep.transitive = queue.size() == rep.points.size();
    std::size_t expected = 1;
    for (std::size_t i = 3; i <= rep.points.size(); ++i) {
      expected *= i;
    }
    rep.expected = expected;
    auto g       = generate_group(gens, expected + 1);
    rep.size     = g.size();
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // Identities
  ////////////////////////////////////////////////////////////////////////

  //! A computed permutation compared with a stated cycle decomposition.
  struct IdentityCheck {
    std::string statement;
    std::string stated;
    std::string computed;

    [[nodiscard]] bool pass() const noexcept {
      return stated == computed;
    }
  };

  //! The groups of identities that are checked: one per conjugation lemma,
  //! plus those used in the correctness proofs for T_n and PT_n.
  inline std::vector<std::string> identity_groups() {
    return {"alt-1ii2",
            "tau-tn-even",
            "tau-ptn-odd",
            "tau-ptn-even",
            "rho-ptn-odd",
            "rho-ptn-even",
            "tn-odd-proof",
            "ptn-proof"};
  }

  inline DegreeRange identity_range(std::string_view group) {
    if (group == "tau-tn-even") {
      return {10, 0};
    } else if (group == "rho-ptn-odd") {
      return {9, 1};
    } else if (group == "tn-odd-proof") {
      return {5, 1};
    } else if (group == "ptn-proof") {
      return {7, 2};
    }
    return alt_lemma_range(alt_lemma_from_name(group));
  }

  namespace detail {
    // a, a + step, ..., up to and including b
    inline std::vector<std::size_t> run(std::size_t a, std::size_t b, int step) {
      std::vector<std::size_t> out;
      if (step > 0) {
        for (auto x = a; x <= b; x += std::size_t(step)) {
          out.push_back(x);
        }
      } else {
        for (auto x = long(a); x >= long(b); x += step) {
          out.push_back(std::size_t(x));
        }
      }
      return out;
    }

    inline std::vector<std::size_t>
    cat(std::initializer_list<std::vector<std::size_t>> parts) {
      std::vector<std::size_t> out;
      for (auto const& p : parts) {
        out.insert(out.end(), p.begin(), p.end());
      }
      return out;
    }

    // The product, left to right, of the given cycles.
    inline PartialTransf
    cycles_product(std::size_t                                   n,
                   std::vector<std::vector<std::size_t>> const& cycles) {
      auto r = PartialTransf::identity(n);
      for (auto const& c : cycles) {
        r = r * cycle(n, c);
      }
      return r;
    }

    class IdentityList {
     public:
      explicit IdentityList(std::size_t n) : _n(n) {}

      void add(std::string                                  statement,
               PartialTransf const&                         computed,
               std::vector<std::vector<std::size_t>> const& stated) {
        _out.push_back({std::move(statement),
                        to_cycles(cycles_product(_n, stated)).to_string(),
                        to_cycles(computed).to_string()});
      }

      std::vector<IdentityCheck> take() {
        return std::move(_out);
      }

     private:
      std::size_t                _n;
      std::vector<IdentityCheck> _out;
    };
  }  // namespace detail

  //! The explicit permutation identities of the group \p group in degree
  //! \p n, each with the stated and the computed decomposition.
  inline std::vector<IdentityCheck>
  intermediate_identity_check(std::string_view group, std::size_t n) {
    using detail::cat;
    using detail::pow;
    using detail::run;
    auto range = identity_range(group);
    if (n > MAX_DEGREE || !range.admits(n)) {
      throw std::invalid_argument(std::string(group) + " requires "
                                  + range.to_string() + ", got n = "
                                  + std::to_string(n));
    }
    detail::IdentityList out(n);
    auto                 C = [n](std::vector<std::size_t> pts) {
      return cycle(n, std::move(pts));
    };
    if (group == "alt-1ii2") {
      for (std::size_t i = 2; 2 * i <= n; ++i) {
        auto p = PartialTransf::identity(n);
        for (std::size_t k = 1; k < i; ++k) {
          p = p * C({1, 2 * k, 2 * k + 2});
        }
        out.add("prod_{k<" + std::to_string(i) + "} (1,2k,2k+2)",
                p,
                {{1, 2, 2 * i}});
      }
      for (std::size_t i = 1; 2 * i + 3 <= n; ++i) {
        out.add("[(1,2,4),(1," + std::to_string(2 * i + 1) + ","
                    + std::to_string(2 * i + 3) + ")]",
                commutator(C({1, 2, 4}), C({1, 2 * i + 1, 2 * i + 3})),
                {{1, 2, 2 * i + 1}});
        out.add("[(1,2,4),(1," + std::to_string(2 * i + 3) + ","
                    + std::to_string(2 * i + 1) + ")]",
                commutator(C({1, 2, 4}), C({1, 2 * i + 3, 2 * i + 1})),
                {{1, 2, 2 * i + 3}});
      }
    } else if (group == "tau-tn-even") {
      auto [b, a] = detail::tau_pair(AltLemma::tau_tn_even, n);
      auto ba     = b * inverse(a);
      auto tau    = detail::tau_word(b, a);
      out.add("βα^-1", ba, {{3, 6}, cat({{5}, run(n, 7, -1)})});
      out.add("(βα^-1)^2",
              pow(ba, 2),
              {cat({{5}, run(n - 1, 7, -2), run(n, 8, -2)})});
      out.add("τ", tau, {{3, 7, n}, {4, 5, n - 1}});
      out.add("(βα^-1)^(n-5)", pow(ba, n - 5), {{3, 6}});
      auto x = tau * conjugate(inverse(tau), pow(ba, n - 5));
      out.add("τ (τ^-1)^((βα^-1)^(n-5))", x, {{3, 6, n}});
      out.add("(3,7,n)(6,n,7)",
              detail::cycles_product(n, {{3, 7, n}, {6, n, 7}}),
              {{3, 6, n}});
    } else if (group == "tau-ptn-odd") {
      auto [b, a] = detail::tau_pair(AltLemma::tau_ptn_odd, n);
      auto ba     = b * inverse(a);
      out.add("βα^-1", ba, {cat({{3}, run(n, 6, -1)}), {4, 5}});
      out.add("(βα^-1)^2",
              pow(ba, 2),
              {cat({{3}, run(n - 1, 6, -2), run(n, 7, -2)})});
      out.add("τ", detail::tau_word(b, a), {{4, 6, n}});
    } else if (group == "tau-ptn-even") {
      auto [b, a] = detail::tau_pair(AltLemma::tau_ptn_even, n);
      auto ba     = b * inverse(a);
      auto tau    = detail::tau_word(b, a);
      auto tc     = conjugate(tau, inverse(ba));
      out.add("βα^-1", ba, {cat({{3, 5}, run(6, n, 1), {4}})});
      out.add("(βα^-1)^2",
              pow(ba, 2),
              {cat({{3}, run(6, n, 2)}), cat({{4, 5}, run(7, n - 1, 2)})});
      out.add("τ", tau, {{3, n, 4, 6, 5}});
      out.add("τ^(αβ^-1)", tc, {{3, 4, n - 1, n, 5}});
      out.add("(τ^(αβ^-1))^3 τ^2 τ^(αβ^-1) τ",
              pow(tc, 3) * pow(tau, 2) * tc * tau,
              {{3, 5, 4}});
      out.add("τ(βα^-1)^2",
              tau * pow(ba, 2),
              {cat({{4}, run(8, n, 2), {5, 6, 7}, run(9, n - 1, 2)})});
      out.add("(3,5,4)^((βα^-1)^2 τ)",
              conjugate(C({3, 5, 4}), pow(ba, 2) * tau),
              {{3, 5, 7}});
    } else if (group == "rho-ptn-odd") {
      auto [d, g] = detail::tau_pair(AltLemma::rho_ptn_odd, n);
      auto dg     = d * inverse(g);
      auto rho    = detail::tau_word(d, g);
      auto rc     = conjugate(rho, inverse(dg));
      out.add("δγ^-1", dg, {cat({{3}, run(n, 6, -1)}), {4, 5}});
      out.add("(δγ^-1)^2",
              pow(dg, 2),
              {cat({{3}, run(n - 1, 6, -2), run(n, 7, -2)})});
      out.add("ρ", rho, {{2, 3, n - 1}, {4, 6, n}});
      out.add("ρ^(γδ^-1)", rc, {{2, 6, n}, {3, 5, 7}});
      auto x = inverse(conjugate(rho, pow(dg, n - 5)));
      out.add("(ρ^((δγ^-1)^(n-5)))^-1", x, {{2, n, 6}, {3, 7, 4}});
      out.add("(ρ^((δγ^-1)^(n-5)))^-1 ρ^(γδ^-1)", x * rc, {{4, 5, 7}});
      out.add("(3,7,4)(3,5,7)",
              detail::cycles_product(n, {{3, 7, 4}, {3, 5, 7}}),
              {{4, 5, 7}});
    } else if (group == "rho-ptn-even") {
      auto [d, g] = detail::tau_pair(AltLemma::rho_ptn_even, n);
      auto dg     = d * inverse(g);
      auto rho    = detail::tau_word(d, g);
      auto rc     = conjugate(rho, inverse(dg));
      out.add("δγ^-1", dg, {cat({{3, 5}, run(6, n, 1), {4}})});
      out.add("(δγ^-1)^2",
              pow(dg, 2),
              {cat({{3}, run(6, n, 2)}), cat({{4, 5}, run(7, n - 1, 2)})});
      out.add("ρ", rho, {{2, 4, 6, 5}, {3, n}});
      out.add("ρ^(γδ^-1)", rc, {{2, n, 5, 3}, {4, n - 1}});
      auto r2 = conjugate(pow(rho, 2), inverse(dg));
      out.add("(ρ^2)^(γδ^-1)", r2, {{2, 5}, {3, n}});
      out.add("(ρ^2)^(γδ^-1) ρ", r2 * rho, {{4, 6, 5}});
      out.add("(2,5)(2,4,6,5)",
              detail::cycles_product(n, {{2, 5}, {2, 4, 6, 5}}),
              {{4, 6, 5}});
      out.add("(4,6,5)^(ρ^-1)",
              conjugate(C({4, 6, 5}), inverse(rho)),
              {{2, 4, 6}});
      out.add("(δγ^-1)^2 (ρ^(γδ^-1))^2 ρ",
              pow(dg, 2) * pow(rc, 2) * rho,
              {cat({{3, 5}, run(7, n - 1, 2), {6}, run(8, n, 2)})});
    } else if (group == "tn-odd-proof") {
      auto beta = tn_4rel_params(n).beta;
      out.add("β(3,4) = (3,n)β", beta * C({3, 4}), {{3, n}, run(3, n, 1)});
      out.add("(3,n)(1,n) = (1,3)(3,n)",
              C({3, n}) * C({1, n}),
              {{1, 3}, {3, n}});
    } else if (group == "ptn-proof") {
      auto p = ptn_8rel_params(n);
      std::vector<std::vector<std::size_t>> stated;
      if (n % 2 == 0) {
        stated = {cat({{3, 4}, run(n, 5, -1)})};
      } else {
        stated = {cat({{3}, run(6, n, 1)}), {4, 5}};
      }
      out.add("αβ^-1", p.alpha * inverse(p.beta), stated);
      out.add("γδ^-1", p.gamma * inverse(p.delta), stated);
    } else {
      throw std::invalid_argument("unknown identity group \""
                                  + std::string(group) + "\"");
    }
    return out.take();
  }

}  // namespace minpres

#endif  // MINPRES_LEMMAS_HPP_
