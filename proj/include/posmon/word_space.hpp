// Exhaustive bounded enumeration: every word of length ≤ L, partitioned into
// equivalence classes.
//
// A word of length n over an alphabet of size σ is identified with its index
// in [0, σ^n), reading letters as base-σ digits with the first letter most
// significant. Index order is lexicographic order, so the least index in a
// class is its canonical representative; that index is the class label.
//
// Two partition kernels compute the labels: a serial breadth-first reference
// and an OpenMP min-label propagation. They must agree exactly.

#ifndef POSMON_WORD_SPACE_HPP_
#define POSMON_WORD_SPACE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "presentation.hpp"
#include "rewrite.hpp"
#include "word.hpp"

namespace posmon {

  using index_type = std::uint32_t;

  namespace kernels {
    // label[i] = least index equivalent to word i, for all words of length n.
    std::vector<index_type> partition_serial(Presentation const& p,
                                             std::size_t         n);
    std::vector<index_type> partition_parallel(Presentation const& p,
                                               std::size_t         n);
  }  // namespace kernels

  enum class Kernel { serial, parallel };

  class WordSpace {
   public:
    // Throws NonHomogeneous, or CapExceeded when the total number of words of
    // length ≤ max_len exceeds cap.
    WordSpace(Presentation const& p,
              std::size_t         max_len,
              std::size_t         cap    = default_cap,
              Kernel              kernel = Kernel::parallel);

    Presentation const& presentation() const noexcept {
      return presentation_;
    }
    std::size_t max_length() const noexcept {
      return levels_.size() - 1;
    }
    std::size_t alphabet_size() const noexcept {
      return sigma_;
    }

    // σ^k
    std::uint64_t power(std::size_t k) const {
      return powers_.at(k);
    }
    std::uint64_t count(std::size_t n) const {
      return power(n);
    }

    index_type index_of(word_type const& w) const;
    word_type  word_at(std::size_t n, index_type index) const;

    index_type label(std::size_t n, index_type index) const {
      return levels_.at(n).label[index];
    }
    index_type label(word_type const& w) const {
      return label(w.size(), index_of(w));
    }

    // Canonical indices of the classes of length n, ascending.
    std::span<index_type const> classes(std::size_t n) const {
      return levels_.at(n).classes;
    }
    // Indices of the members of the class labelled `canonical`, ascending.
    std::span<index_type const> members(std::size_t n,
                                        index_type  canonical) const;

    // Labels (at length n − |prefix|) of the suffixes of the members of the
    // class `canonical` (at length n) that literally start with prefix.
    // Sorted, unique. Empty iff prefix does not left-divide the class.
    std::vector<index_type> left_quotients(std::size_t      n,
                                           index_type       canonical,
                                           word_type const& prefix) const;
    // Mirror: members that literally end with suffix, labels of the prefixes.
    std::vector<index_type> right_quotients(std::size_t      n,
                                            index_type       canonical,
                                            word_type const& suffix) const;

    // Labels at length k of the length-k prefixes (suffixes) of all members.
    std::vector<index_type> prefix_labels(std::size_t n,
                                          index_type  canonical,
                                          std::size_t k) const;
    std::vector<index_type> suffix_labels(std::size_t n,
                                          index_type  canonical,
                                          std::size_t k) const;

   private:
    struct Level {
      std::vector<index_type> label;
      std::vector<index_type> classes;
      std::vector<index_type> ordinal;  // valid at canonical indices only
      std::vector<index_type> start;    // classes.size() + 1 offsets
      std::vector<index_type> order;    // indices grouped by class
    };

    Presentation               presentation_;
    std::size_t                sigma_;
    std::vector<std::uint64_t> powers_;
    std::vector<Level>         levels_;
  };

}  // namespace posmon

#endif  // POSMON_WORD_SPACE_HPP_
