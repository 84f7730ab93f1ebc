#include <doctest.h>

#include "posmon/word.hpp"

using posmon::word_type;

TEST_CASE("concat and power") {
  word_type const u{0, 1}, v{2};
  CHECK(posmon::concat(u, v) == word_type{0, 1, 2});
  CHECK(posmon::concat({u, v, u}) == word_type{0, 1, 2, 0, 1});
  CHECK(posmon::concat(word_type{}, word_type{}).empty());
  CHECK(posmon::power(u, 0).empty());
  CHECK(posmon::power(u, 3) == word_type{0, 1, 0, 1, 0, 1});
}

TEST_CASE("prefix and suffix tests are literal") {
  word_type const w{0, 1, 2};
  CHECK(posmon::has_prefix(w, word_type{}));
  CHECK(posmon::has_prefix(w, word_type{0, 1}));
  CHECK_FALSE(posmon::has_prefix(w, word_type{1}));
  CHECK(posmon::has_suffix(w, word_type{1, 2}));
  CHECK_FALSE(posmon::has_suffix(w, word_type{0, 1, 2, 3}));
}

TEST_CASE("letter multisets") {
  CHECK(posmon::letter_counts({0, 2, 2}, 3) == std::vector<std::uint32_t>{1, 0, 2});
  CHECK(posmon::same_letter_multiset({0, 1, 1}, {1, 0, 1}));
  CHECK_FALSE(posmon::same_letter_multiset({0, 1}, {1, 1}));
  CHECK_FALSE(posmon::same_letter_multiset({0}, {0, 0}));
}

TEST_CASE("reversal and hashing") {
  CHECK(posmon::reversed({0, 1, 2}) == word_type{2, 1, 0});
  posmon::WordHash h;
  CHECK(h({0, 1}) != h({1, 0}));
  CHECK(h({}) != h({0}));
}
