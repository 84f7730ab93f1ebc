// Positive words over a finite alphabet.
//
// A letter is an index into the alphabet of a presentation, ordered by the
// declaration order of the generators. All orderings of words in this library
// (canonical representatives, sorted outputs) are lexicographic in that
// order.

#ifndef POSMON_WORD_HPP_
#define POSMON_WORD_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace posmon {

  using letter_type = std::uint8_t;
  using word_type   = std::vector<letter_type>;

  inline constexpr std::size_t max_alphabet_size = 255;

  struct WordHash {
    std::size_t operator()(word_type const& w) const noexcept {
      // FNV-1a
      std::size_t h = 1469598103934665603ULL;
      for (auto x : w) {
        h ^= x;
        h *= 1099511628211ULL;
      }
      return h ^ w.size();
    }
  };

  // u·v
  word_type concat(word_type const& u, word_type const& v);
  word_type concat(std::initializer_list<std::reference_wrapper<word_type const>>);

  // w^k
  word_type power(word_type const& w, std::size_t k);

  bool has_prefix(std::span<letter_type const> w, std::span<letter_type const> p);
  bool has_suffix(std::span<letter_type const> w, std::span<letter_type const> p);

  // Number of occurrences of each letter, indexed by letter.
  std::vector<std::uint32_t> letter_counts(word_type const& w,
                                           std::size_t      alphabet_size);

  bool same_letter_multiset(word_type const& u, word_type const& v);

  word_type reversed(word_type w);

}  // namespace posmon

#endif  // POSMON_WORD_HPP_
