// The family G_{m,n}: generators s, t_1..t_m, u_1..u_n with the cyclic
// relations [s, t_1, ..., t_m], [s, u_1, ..., u_n] and the commutations
// t_i u_j = u_j t_i.
//
// Letter numbering: s = 0, t_i = i, u_j = m + j.

#ifndef POSMON_GMN_HPP_
#define POSMON_GMN_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "presentation.hpp"
#include "rewrite.hpp"

namespace posmon {

  // Letters of one free factor: the t's (family 1) or the u's (family 2).
  enum class Family { t, u };

  struct GmnContext {
    std::size_t  m = 0;
    std::size_t  n = 0;
    Presentation presentation;
    word_type    delta1;  // s·t_1⋯t_m
    word_type    delta2;  // s·u_1⋯u_n
    word_type    delta;   // s·t_1⋯t_m·u_1⋯u_n

    letter_type s() const noexcept {
      return 0;
    }
    // 1-based indices.
    letter_type t(std::size_t i) const;
    letter_type u(std::size_t j) const;
    letter_type letter(Family f, std::size_t i) const {
      return f == Family::t ? t(i) : u(i);
    }
    std::size_t size(Family f) const noexcept {
      return f == Family::t ? m : n;
    }
    word_type const& delta_of(Family f) const noexcept {
      return f == Family::t ? delta1 : delta2;
    }
    // The family of letter x, or nullopt for s.
    std::optional<Family> family_of(letter_type x) const;
    // 1-based index of x within its family.
    std::size_t index_of(letter_type x) const;
  };

  // Throws Error if m or n is 0. The presentation is flagged as proven
  // cancellative.
  GmnContext build_gmn(std::size_t m, std::size_t n);

  // x_a x_{a+1} ⋯ x_b within one family, 1 ≤ a ≤ b ≤ size.
  struct ConsecutiveWord {
    Family      family = Family::t;
    std::size_t start  = 1;
    std::size_t end    = 1;

    std::size_t length() const noexcept {
      return end - start + 1;
    }
    bool operator==(ConsecutiveWord const&) const = default;
  };

  word_type to_word(GmnContext const& ctx, ConsecutiveWord const& c);

  // The family of a one-family word; throws Error for a word containing s or
  // letters of both families. nullopt for the empty word.
  std::optional<Family> single_family(GmnContext const& ctx, word_type const& w);

  // The longest literal suffix of w whose indices increase by one at each
  // step. nullopt only for the empty word.
  std::optional<ConsecutiveWord> maximal_run_suffix(GmnContext const& ctx,
                                                    word_type const&  w);

  // The literal prefix left after removing maximal_run_suffix(w).
  word_type run_remainder(GmnContext const& ctx, word_type const& w);

  // The word q with Δ_family ≐ q·c: x_{b+1}⋯x_k · s · x_1⋯x_{a−1} for
  // c = x_a⋯x_b.
  word_type delta_quotient(GmnContext const& ctx, ConsecutiveWord const& c);

  // q with Δ_family ≐ q·s, namely x_1⋯x_k.
  word_type delta_quotient_of_s(GmnContext const& ctx, Family f);

  // True iff w (one family) does not literally end with x_1⋯x_k.
  bool is_reduced_modulo_full_run(GmnContext const& ctx,
                                  Family            f,
                                  word_type const&  w);

  // The anti-automorphism W ↦ τ(rev(W)), where τ fixes s and sends t_i to
  // t_{m+1−i} and u_j to u_{n+1−j}.
  word_type mirror(GmnContext const& ctx, word_type const& w);

  // The six statements of the left-cancellation lemma used for G_{m,n}, for
  // positive words X, Y of length r and Y' of length h ≤ r:
  //   letter_cancel  v·X ≐ v·Y ⟹ X ≐ Y
  //   t_u_swap       t_i·X ≐ u_j·Y ⟹ X ≐ u_j·Z, Y ≐ t_i·Z
  //   s_t            s·X ≐ w(t)·Y' ⟹ X ≐ Δ_{1,s}·R(w)·Z, Y' ≐ Δ_{1,C(w)}·Z
  //   s_u            the same with the u family
  //   t_t            t_i·X ≐ w(t)·Y', t_i ∤ w ⟹ for some w(u) not ending
  //                  in u_1⋯u_n: X ≐ w(u)·Δ_{1,t_i}·R(w)·Z,
  //                  Y' ≐ w(u)·Δ_{1,C(w)}·Z
  //   u_u            the same with the families exchanged
  // where C is maximal_run_suffix and R is run_remainder.
  enum class LemmaCase { letter_cancel, t_u_swap, s_t, s_u, t_t, u_u };

  // Roman numeral names "i" .. "vi", in the order above.
  std::optional<LemmaCase> lemma_case_from_name(std::string_view name);
  std::string_view         lemma_case_name(LemmaCase c);

  struct LemmaViolation {
    word_type   lhs;  // e.g. t_i·X
    word_type   rhs;  // e.g. u_j·Y
    std::string detail;
  };

  struct LemmaCheck {
    std::size_t                 instances = 0;
    std::vector<LemmaViolation> violations;
  };

  // Enumerates every instance of the hypothesis with |lhs| ≤ bound (classes
  // of X and Y, plus the literal w for the cases with a one-family prefix)
  // and searches for the asserted witness.
  LemmaCheck check_lemma_case(GmnContext const& ctx,
                              LemmaCase         which,
                              std::size_t       bound,
                              std::size_t       cap = default_cap);

}  // namespace posmon

#endif  // POSMON_GMN_HPP_
