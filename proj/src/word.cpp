#include "posmon/word.hpp"

#include <algorithm>

namespace posmon {

  word_type concat(word_type const& u, word_type const& v) {
    word_type result;
    result.reserve(u.size() + v.size());
    result.insert(result.end(), u.begin(), u.end());
    result.insert(result.end(), v.begin(), v.end());
    return result;
  }

  word_type
  concat(std::initializer_list<std::reference_wrapper<word_type const>> parts) {
    std::size_t n = 0;
    for (auto const& p : parts) {
      n += p.get().size();
    }
    word_type result;
    result.reserve(n);
    for (auto const& p : parts) {
      result.insert(result.end(), p.get().begin(), p.get().end());
    }
    return result;
  }

  word_type power(word_type const& w, std::size_t k) {
    word_type result;
    result.reserve(w.size() * k);
    for (std::size_t i = 0; i < k; ++i) {
      result.insert(result.end(), w.begin(), w.end());
    }
    return result;
  }

  bool has_prefix(std::span<letter_type const> w,
                  std::span<letter_type const> p) {
    return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
  }

  bool has_suffix(std::span<letter_type const> w,
                  std::span<letter_type const> p) {
    return p.size() <= w.size()
           && std::equal(p.begin(), p.end(), w.end() - p.size());
  }

  std::vector<std::uint32_t> letter_counts(word_type const& w,
                                           std::size_t      alphabet_size) {
    std::vector<std::uint32_t> counts(alphabet_size, 0);
    for (auto x : w) {
      if (x >= counts.size()) {
        counts.resize(x + 1, 0);
      }
      ++counts[x];
    }
    return counts;
  }

  bool same_letter_multiset(word_type const& u, word_type const& v) {
    if (u.size() != v.size()) {
      return false;
    }
    word_type a(u), b(v);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

  word_type reversed(word_type w) {
    std::reverse(w.begin(), w.end());
    return w;
  }

}  // namespace posmon
