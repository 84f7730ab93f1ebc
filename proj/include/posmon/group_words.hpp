// Words in the group with the same presentation, decided through the monoid.
//
// With Δ fundamental and N = ord(σ_Δ), the element Λ = Δ^N is central. Since
// Δ ≐ g·Δ_g, in the group g⁻¹·Λ = Δ_g·Δ^{N−1}, so every signed word w with k
// inverse letters has a positive word P with Λ^k·w = P. Two signed words are
// then compared by lifting both with a common exponent and deciding the
// monoid word problem. The answer is sound when the monoid embeds in its
// group, which holds for cancellative monoids with a fundamental element.

#ifndef POSMON_GROUP_WORDS_HPP_
#define POSMON_GROUP_WORDS_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "garside.hpp"
#include "rewrite.hpp"
#include "word_space.hpp"

namespace posmon {

  struct SignedLetter {
    letter_type letter  = 0;
    bool        inverse = false;

    bool operator==(SignedLetter const&) const = default;
  };

  using signed_word = std::vector<SignedLetter>;

  signed_word to_signed(word_type const& w);
  signed_word inverse(signed_word const& w);
  signed_word concat(signed_word const& u, signed_word const& v);

  // Same token rules as parse_word, with a trailing '~' marking an inverse:
  // "t1~.s", or "ab~c" when all generator names are single characters.
  signed_word parse_signed_word(std::string_view text, Alphabet const& alphabet);
  std::string format_signed_word(signed_word const& w, Alphabet const& alphabet);

  // Cancels adjacent g·g⁻¹ and g⁻¹·g until none remain.
  signed_word free_reduce(signed_word const& w);

  struct LiftResult {
    std::size_t k = 0;  // number of Δ-divisor chunks the inverse letters form
    word_type   positive;
  };

  // Λ^k·w = positive in the group, for a certificate of wp's presentation.
  // Each run of inverse letters g₁⁻¹…g_r⁻¹ is the inverse of W = g_r…g₁; W is
  // cut greedily into left divisors W_i of Δ, and W_i⁻¹ becomes
  // (Δ/W_i)·Δ^(order-1)·Λ⁻¹.
  LiftResult positive_lift(signed_word const&            w,
                           FundamentalCertificate const& cert,
                           WordProblem&                  wp);

  // Λ = Δ^order.
  word_type lambda(FundamentalCertificate const& cert);

  enum class InjectivityBasis {
    proven,     // the presentation carries the proven-cancellative flag
    empirical,  // no cancellation failure up to empirical_bound
    assumed     // caller override
  };

  std::string_view basis_name(InjectivityBasis b);

  struct GroupEqualOptions {
    bool        assume_injective = false;
    std::size_t empirical_bound  = 5;
  };

  struct GroupEquality {
    bool             equal = false;
    InjectivityBasis basis = InjectivityBasis::proven;
    std::size_t      k     = 0;  // common exponent of Λ
    word_type        lhs;        // Λ^k·w1, positive
    word_type        rhs;        // Λ^k·w2, positive
  };

  // Throws InjectivityNotEstablished unless the presentation is proven
  // cancellative, has no cancellation failure up to the empirical bound, or
  // the override is set.
  InjectivityBasis injectivity_basis(Presentation const&      p,
                                     GroupEqualOptions const& options,
                                     std::size_t              cap = default_cap);

  GroupEquality group_equal(WordProblem&                  wp,
                            FundamentalCertificate const& cert,
                            signed_word const&            w1,
                            signed_word const&            w2,
                            GroupEqualOptions const&      options = {});

  // Canonical forms of all classes of length ≤ bound that commute with every
  // generator, in shortlex order (ε first). The space must cover bound + 1.
  std::vector<word_type> center_scan(WordSpace const& space, std::size_t bound);
  std::vector<word_type> center_scan(Presentation const& p,
                                     std::size_t         bound,
                                     std::size_t         cap = default_cap);

}  // namespace posmon

#endif  // POSMON_GROUP_WORDS_HPP_
