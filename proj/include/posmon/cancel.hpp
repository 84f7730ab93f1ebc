// Bounded search for failures of cancellativity, targeted claim checks and
// single completion steps.
//
// A left failure is a letter g and words x ≢ y with g·x ≐ g·y; a right
// failure has x·g ≐ y·g. Single-letter contexts suffice: if a·x·b ≐ a·y·b
// with x ≢ y, peeling one letter at a time from a and b reaches a first step
// where equality survives with the letter but not without it.

#ifndef POSMON_CANCEL_HPP_
#define POSMON_CANCEL_HPP_

#include <cstddef>
#include <string_view>
#include <vector>

#include "rewrite.hpp"
#include "word_space.hpp"

namespace posmon {

  enum class Side { left, right };

  std::string_view side_name(Side s);

  struct CancellationFailure {
    Side      side = Side::left;
    word_type context;  // the cancelled letter, canonical
    word_type x;        // canonical, x < y
    word_type y;

    bool operator==(CancellationFailure const&) const = default;
  };

  // Deterministic report order: side, |x|, x, y, context.
  bool operator<(CancellationFailure const& a, CancellationFailure const& b);

  // All failures with |g·x| ≤ max_len, from the partition of all words of
  // length ≤ max_len: each class of g·x words is grouped by its first (last)
  // letter, and distinct suffix (prefix) classes within a group are failures.
  // The space must cover max_len.
  std::vector<CancellationFailure> search_failures(WordSpace const& space,
                                                   std::size_t      max_len);
  std::vector<CancellationFailure>
  search_failures(Presentation const& p,
                  std::size_t         max_len,
                  std::size_t         cap    = default_cap,
                  Kernel              kernel = Kernel::parallel);

  namespace reference {
    // The literal scan: for every pair of distinct classes x, y of equal
    // length ≤ max_len − 1 and every letter g, test g·x ≐ g·y and x·g ≐ y·g
    // with the word-problem solver. Serial; used to cross-check the kernel.
    std::vector<CancellationFailure> search_failures(WordProblem& wp,
                                                     std::size_t  max_len);
  }  // namespace reference

  struct ClaimCheck {
    bool holds           = false;
    bool cancelled_holds = false;
  };

  // holds = (lhs ≐ rhs), cancelled_holds = (cancelled_lhs ≐ cancelled_rhs).
  ClaimCheck verify_claim(WordProblem&     wp,
                          word_type const& lhs,
                          word_type const& rhs,
                          word_type const& cancelled_lhs,
                          word_type const& cancelled_rhs);

  // p with the relation u = v appended. Throws Error if |u| ≠ |v|.
  Presentation add_relation(Presentation const& p,
                            word_type const&    u,
                            word_type const&    v);

}  // namespace posmon

#endif  // POSMON_CANCEL_HPP_
