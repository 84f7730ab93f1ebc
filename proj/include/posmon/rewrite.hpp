// Equivalence classes of positive words and the monoid word problem.
//
// Two words are equivalent when one is reached from the other by a sequence
// of single substitutions of one side of a defining relation by the other.
// For homogeneous presentations every class is a finite set of words of one
// length, so the word problem is decided by enumerating the class.

#ifndef POSMON_REWRITE_HPP_
#define POSMON_REWRITE_HPP_

#include <cstddef>
#include <memory>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "presentation.hpp"
#include "word.hpp"

namespace posmon {

  namespace detail {
    class Rules;
  }

  inline constexpr std::size_t default_cap = 1'000'000;

  struct EquivClass {
    // Sorted lexicographically; members.front() == canonical unless
    // truncated.
    std::vector<word_type> members;
    word_type              canonical;
    word_type              seed;
    bool                   truncated = false;

    bool contains(word_type const& w) const;
    std::size_t size() const noexcept {
      return members.size();
    }
  };

  // All words obtained from w by one substitution, in either direction, at
  // any position. Sorted, without duplicates.
  std::vector<word_type> neighbors(word_type const& w, Presentation const& p);

  // Breadth-first closure of {w}. Stops with truncated = true when the class
  // would exceed cap members. Throws NonHomogeneous.
  EquivClass equivalence_class(word_type const&    w,
                               Presentation const& p,
                               std::size_t         cap = default_cap);

  // Memoizing word-problem solver bound to one presentation. Lookups and
  // inserts are safe from several threads.
  class WordProblem {
   public:
    explicit WordProblem(Presentation p, std::size_t cap = default_cap);

    Presentation const& presentation() const noexcept {
      return presentation_;
    }
    std::size_t cap() const noexcept {
      return cap_;
    }

    // The full class of w. Throws CapExceeded if it exceeds the cap.
    std::shared_ptr<EquivClass const> class_of(word_type const& w);

    // True iff u ≐ v. Throws CapExceeded when undecided.
    bool      equal(word_type const& u, word_type const& v);
    word_type canonical(word_type const& w);

    std::size_t cached_classes() const;

   private:
    // Quick negative answer from lengths or letter multisets.
    bool obviously_different(word_type const& u, word_type const& v) const;

    Presentation                        presentation_;
    std::shared_ptr<detail::Rules const> rules_;
    std::size_t                         cap_;
    mutable std::shared_mutex    mutex_;
    std::unordered_map<word_type, std::shared_ptr<EquivClass const>, WordHash>
        cache_;
  };

  bool      equal(word_type const&    u,
                  word_type const&    v,
                  Presentation const& p,
                  std::size_t         cap = default_cap);
  word_type canonical(word_type const&    w,
                      Presentation const& p,
                      std::size_t         cap = default_cap);

}  // namespace posmon

#endif  // POSMON_REWRITE_HPP_
