#include <doctest.h>

#include <algorithm>

#include "posmon/cancel.hpp"
#include "posmon/gmn.hpp"

using posmon::CancellationFailure;
using posmon::Side;
using posmon::word_type;

namespace {
  bool contains(std::vector<CancellationFailure> const& fs, CancellationFailure const& f) {
    return std::find(fs.begin(), fs.end(), f) != fs.end();
  }

  std::string claim_word(std::string const& head, char c, std::size_t k, std::string const& tail) {
    return head + std::string(k, c) + tail;
  }
}  // namespace

TEST_CASE("the left c failure of M6 appears at length 5") {
  auto p  = posmon::fixture(posmon::Fixture::M6);
  auto W  = [&](std::string const& s) { return posmon::parse_word(s, p.alphabet()); };
  auto fs = posmon::search_failures(p, 5);
  CHECK(contains(fs, {Side::left, W("c"), W("deaf"), W("eafd")}));
  CHECK(fs.size() == 8);
  CHECK(posmon::search_failures(p, 4).empty());
}

TEST_CASE("G_{m,n} has no failures at desk scale") {
  CHECK(posmon::search_failures(posmon::build_gmn(2, 2).presentation, 5).empty());
  CHECK(posmon::search_failures(posmon::build_gmn(3, 2).presentation, 5).empty());
  CHECK(posmon::search_failures(posmon::build_gmn(1, 3).presentation, 5).empty());
}

TEST_CASE("free monoids have no failures") {
  auto p = posmon::parse_presentation("generators: a b\n");
  CHECK(posmon::search_failures(p, 7).empty());
  posmon::WordProblem wp(p);
  CHECK(posmon::reference::search_failures(wp, 5).empty());
  auto empty = posmon::parse_presentation("generators:\n");
  CHECK(posmon::search_failures(empty, 3).empty());
}

TEST_CASE("kernel agrees with the literal pair scan") {
  std::vector<posmon::Presentation> ps{
      posmon::fixture(posmon::Fixture::M6),
      posmon::fixture(posmon::Fixture::M6p),
      posmon::fixture(posmon::Fixture::M6p_completed),
      posmon::build_gmn(2, 2).presentation,
      posmon::parse_presentation("generators: a b c\nrelation: ab = ac\nrelation: ba = ca\n"),
      posmon::parse_presentation("generators: a b\nrelation: aba = bab\n")};
  for (auto const& p : ps) {
    posmon::WordProblem wp(p);
    auto ref = posmon::reference::search_failures(wp, 5);
    CHECK(posmon::search_failures(p, 5, posmon::default_cap, posmon::Kernel::parallel) == ref);
    CHECK(posmon::search_failures(p, 5, posmon::default_cap, posmon::Kernel::serial) == ref);
  }
}

TEST_CASE("failures re-verify and are monotone in the bound") {
  auto p = posmon::parse_presentation("generators: a b c\nrelation: ab = ac\nrelation: ba = ca\n");
  posmon::WordProblem wp(p);
  auto small = posmon::search_failures(p, 3);
  auto large = posmon::search_failures(p, 5);
  CHECK_FALSE(small.empty());
  for (auto const& f : small) {
    CHECK(contains(large, f));
  }
  for (auto const& f : large) {
    CHECK_FALSE(wp.equal(f.x, f.y));
    if (f.side == Side::left) {
      CHECK(wp.equal(posmon::concat(f.context, f.x), posmon::concat(f.context, f.y)));
    } else {
      CHECK(wp.equal(posmon::concat(f.x, f.context), posmon::concat(f.y, f.context)));
    }
    CHECK(f.x < f.y);
    CHECK(f.x == wp.canonical(f.x));
  }
  CHECK(std::is_sorted(large.begin(), large.end()));
}

TEST_CASE("a two-sided failure implies a single-letter failure") {
  // c·X·g ≐ c·Y·g with X ≢ Y: either X·g ≢ Y·g and c fails on the left, or
  // g fails on the right
  auto p = posmon::fixture(posmon::Fixture::M6);
  posmon::WordProblem wp(p);
  auto W  = [&](std::string const& s) { return posmon::parse_word(s, p.alphabet()); };
  auto fs = posmon::search_failures(p, 6);
  auto failure = [&](Side side, word_type const& g, word_type x, word_type y) {
    x = wp.canonical(x);
    y = wp.canonical(y);
    if (y < x) {
      std::swap(x, y);
    }
    return CancellationFailure{side, g, x, y};
  };
  auto const x = W("deaf"), y = W("eafd"), c = W("c");
  for (posmon::letter_type g = 0; g < 6; ++g) {
    word_type const gw{g};
    REQUIRE(wp.equal(posmon::concat({c, x, gw}), posmon::concat({c, y, gw})));
    if (wp.equal(posmon::concat(x, gw), posmon::concat(y, gw))) {
      CHECK(contains(fs, failure(Side::right, gw, x, y)));
    } else {
      CHECK(contains(fs, failure(Side::left, c, posmon::concat(x, gw), posmon::concat(y, gw))));
    }
  }
}

TEST_CASE("targeted claims on M6") {
  auto p = posmon::fixture(posmon::Fixture::M6);
  posmon::WordProblem wp(p);
  auto W = [&](std::string const& s) { return posmon::parse_word(s, p.alphabet()); };
  for (std::size_t k = 1; k <= 3; ++k) {
    auto a = posmon::verify_claim(wp,
                                  W(claim_word("cde", 'a', k, "f")),
                                  W(claim_word("ce", 'a', k, "fd")),
                                  W(claim_word("de", 'a', k, "f")),
                                  W(claim_word("e", 'a', k, "fd")));
    CHECK(a.holds);
    CHECK_FALSE(a.cancelled_holds);
    auto b = posmon::verify_claim(wp,
                                  W(claim_word("bf", 'e', k, "ac")),
                                  W(claim_word("f", 'e', k, "abc")),
                                  W(claim_word("bf", 'e', k, "a")),
                                  W(claim_word("f", 'e', k, "ab")));
    CHECK(b.holds);
    CHECK_FALSE(b.cancelled_holds);
    auto c = posmon::verify_claim(wp,
                                  W(claim_word("ce", 'f', k, "ab")),
                                  W(claim_word("e", 'f', k, "acb")),
                                  W(claim_word("ce", 'f', k, "a")),
                                  W(claim_word("e", 'f', k, "ac")));
    CHECK(c.holds);
    CHECK_FALSE(c.cancelled_holds);
  }
}

TEST_CASE("targeted claims on the two A'_6 monoids") {
  auto p = posmon::fixture(posmon::Fixture::M6p);
  posmon::WordProblem wp(p);
  auto W = [&](std::string const& s) { return posmon::parse_word(s, p.alphabet()); };
  auto c = posmon::verify_claim(wp, W("dbcefa"), W("dbefac"), W("cefa"), W("efac"));
  CHECK(c.holds);
  CHECK_FALSE(c.cancelled_holds);

  auto q = posmon::fixture(posmon::Fixture::M6p_completed);
  posmon::WordProblem wq(q);
  for (std::size_t k = 1; k <= 2; ++k) {
    auto r = posmon::verify_claim(wq,
                                  W(claim_word("acd", 'e', k + 1, "abf")),
                                  W(claim_word("d", 'e', k, "aabcef")),
                                  W(claim_word("acd", 'e', k + 1, "ab")),
                                  W(claim_word("d", 'e', k, "aabce")));
    CHECK(r.holds);
    CHECK_FALSE(r.cancelled_holds);
  }
  auto trivial = posmon::verify_claim(wq, W("abc"), W("abc"), {}, {});
  CHECK(trivial.holds);
  CHECK(trivial.cancelled_holds);
}

TEST_CASE("adding relations") {
  auto p = posmon::fixture(posmon::Fixture::M6p);
  auto W = [&](std::string const& s) { return posmon::parse_word(s, p.alphabet()); };
  auto q = posmon::add_relation(p, W("cefa"), W("efac"));
  CHECK(q == posmon::fixture(posmon::Fixture::M6p_completed));
  CHECK(posmon::equal(W("cefa"), W("efac"), q));
  CHECK(posmon::add_relation(p, W("ab"), W("ab")) == p);
  CHECK_THROWS_AS(posmon::add_relation(p, W("ab"), W("abc")), posmon::Error);
}

TEST_CASE("one completion step at a time never closes the k-family") {
  // add the k-th cancelled equation; the (k+1)-th failure is still there
  auto q = posmon::fixture(posmon::Fixture::M6p_completed);
  auto W = [&](std::string const& s) { return posmon::parse_word(s, q.alphabet()); };
  for (std::size_t k = 1; k <= 2; ++k) {
    q = posmon::add_relation(q,
                             W(claim_word("acd", 'e', k + 1, "ab")),
                             W(claim_word("d", 'e', k, "aabce")));
    posmon::WordProblem wp(q);
    auto next = posmon::verify_claim(wp,
                                     W(claim_word("acd", 'e', k + 2, "abf")),
                                     W(claim_word("d", 'e', k + 1, "aabcef")),
                                     W(claim_word("acd", 'e', k + 2, "ab")),
                                     W(claim_word("d", 'e', k + 1, "aabce")));
    CHECK(next.holds);
    CHECK_FALSE(next.cancelled_holds);
  }
}
