#include <doctest.h>

#include <fstream>
#include <sstream>

#include "posmon/cancel.hpp"
#include "posmon/gmn.hpp"
#include "posmon/presentation.hpp"
#include "posmon/rewrite.hpp"

using posmon::parse_presentation;
using posmon::parse_word;
using posmon::Presentation;
using posmon::word_type;

namespace {
  bool has_pair(Presentation const& p, word_type const& u, word_type const& v) {
    for (auto const& r : p.relations()) {
      if (r.same_as({u, v})) {
        return true;
      }
    }
    return false;
  }

  std::string slurp(std::string const& path) {
    std::ifstream      in(path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }
}  // namespace

TEST_CASE("a two-letter cyclic relation is a commutation") {
  auto p = parse_presentation("generators: s t\ncyclic: s t\n");
  CHECK(p.alphabet().size() == 2);
  REQUIRE(p.relations().size() == 1);
  CHECK(has_pair(p, {0, 1}, {1, 0}));
}

TEST_CASE("the M6 text has 6 letters and 12 relation pairs") {
  auto p = parse_presentation(posmon::fixture_text(posmon::Fixture::M6));
  CHECK(p.alphabet().size() == 6);
  CHECK(p.relations().size() == 12);
  auto const& a = p.alphabet();
  CHECK(has_pair(p, parse_word("abf", a), parse_word("fab", a)));
  CHECK(has_pair(p, parse_word("eac", a), parse_word("ace", a)));
  CHECK(has_pair(p, parse_word("fc", a), parse_word("cf", a)));
}

TEST_CASE("non-homogeneous presentations parse and are flagged") {
  auto p = parse_presentation("generators: a\nrelation: a = aa\n");
  CHECK_FALSE(p.homogeneous());
  CHECK_FALSE(p.letter_balanced());
  CHECK_THROWS_AS(p.require_homogeneous(), posmon::NonHomogeneous);
  CHECK_THROWS_AS(posmon::equivalence_class({0}, p), posmon::NonHomogeneous);
}

TEST_CASE("expand_cyclic") {
  SUBCASE("three letters") {
    auto rel = posmon::expand_cyclic({0, 1, 2});
    REQUIRE(rel.size() == 2);
    CHECK(rel[0].same_as({{0, 1, 2}, {1, 2, 0}}));
    CHECK(rel[1].same_as({{0, 1, 2}, {2, 0, 1}}));
  }
  SUBCASE("two letters") {
    auto rel = posmon::expand_cyclic({0, 1});
    REQUIRE(rel.size() == 1);
    CHECK(rel[0].same_as({{0, 1}, {1, 0}}));
  }
  SUBCASE("four letters: every rotation in one class") {
    auto rel = posmon::expand_cyclic({0, 1, 2, 3});
    CHECK(rel.size() == 3);
    Presentation p(posmon::Alphabet({"a", "b", "c", "d"}), rel);
    auto cls = posmon::equivalence_class({0, 1, 2, 3}, p);
    for (word_type r : {word_type{1, 2, 3, 0}, word_type{2, 3, 0, 1}, word_type{3, 0, 1, 2}}) {
      CHECK(cls.contains(r));
    }
    CHECK(cls.size() == 4);
  }
  SUBCASE("repeated letters and size k - 1") {
    for (std::size_t k = 2; k <= 7; ++k) {
      word_type w(k, 0);
      w.back() = 1;
      CHECK(posmon::expand_cyclic(w).size() == k - 1);
    }
  }
  CHECK_THROWS_AS(posmon::expand_cyclic({0}), posmon::Error);
  CHECK_THROWS_AS(posmon::expand_cyclic({}), posmon::Error);
}

TEST_CASE("classification") {
  auto g = posmon::build_gmn(2, 2).presentation;
  CHECK(g.homogeneous());
  CHECK(g.letter_balanced());
  CHECK(g.flags().dummy_letters.empty());

  auto m6 = posmon::fixture(posmon::Fixture::M6);
  CHECK(m6.homogeneous());
  CHECK(m6.letter_balanced());
  CHECK(m6.flags().dummy_letters.empty());

  auto d = parse_presentation("generators: a b\nrelation: a = b\n");
  CHECK(d.homogeneous());
  CHECK_FALSE(d.letter_balanced());
  CHECK(d.flags().dummy_letters == std::vector<posmon::letter_type>{0, 1});

  auto h = parse_presentation("generators: a b\nrelation: ab = bb\n");
  CHECK(h.homogeneous());
  CHECK_FALSE(h.letter_balanced());
  CHECK(h.flags().dummy_letters.empty());

  auto n = parse_presentation("generators: a b c\nrelation: a = bc\n");
  CHECK_FALSE(n.homogeneous());
  CHECK(n.flags().dummy_letters == std::vector<posmon::letter_type>{0});
}

TEST_CASE("fixtures") {
  using posmon::Fixture;
  auto m6   = posmon::fixture(Fixture::M6);
  auto m6p  = posmon::fixture(Fixture::M6p);
  auto m6pc = posmon::fixture(Fixture::M6p_completed);
  CHECK(m6.relations().size() == 12);
  CHECK(m6p.relations().size() == 11);
  CHECK(m6pc.relations().size() == 12);
  auto const& a = m6p.alphabet();
  CHECK(has_pair(m6p, parse_word("abce", a), parse_word("eabc", a)));
  CHECK(has_pair(m6p, parse_word("cdea", a), parse_word("acde", a)));
  CHECK(has_pair(m6p, parse_word("dbc", a), parse_word("bcd", a)));
  CHECK(posmon::add_relation(m6p, parse_word("cefa", a), parse_word("efac", a))
        == m6pc);
  CHECK(posmon::fixture("M6p") == m6p);
  CHECK_THROWS_AS(posmon::fixture("M7"), posmon::Error);
  CHECK_FALSE(posmon::fixture_from_name("m6").has_value());
}

TEST_CASE("fixture files match the built-in fixtures") {
  using posmon::Fixture;
  for (auto f : {Fixture::M6, Fixture::M6p, Fixture::M6p_completed}) {
    auto path = std::string(POSMON_FIXTURE_DIR) + "/"
                + std::string(posmon::fixture_name(f));
    CHECK(parse_presentation(slurp(path)) == posmon::fixture(f));
  }
  auto g22 = parse_presentation(slurp(std::string(POSMON_FIXTURE_DIR) + "/G22"));
  CHECK(g22 == posmon::build_gmn(2, 2).presentation);
}

TEST_CASE("round trip through the file format") {
  std::vector<Presentation> ps{posmon::fixture(posmon::Fixture::M6),
                               posmon::fixture(posmon::Fixture::M6p),
                               posmon::fixture(posmon::Fixture::M6p_completed),
                               posmon::build_gmn(3, 2).presentation,
                               parse_presentation("generators: a\nrelation: a = aa\n"),
                               parse_presentation("generators: x\n")};
  for (auto const& p : ps) {
    auto once  = parse_presentation(posmon::to_text(p));
    auto twice = parse_presentation(posmon::to_text(once));
    CHECK(once == p);
    CHECK(posmon::to_text(twice) == posmon::to_text(once));
  }
}

TEST_CASE("relation storage") {
  auto p = parse_presentation("generators: a b\n"
                              "relation: ab = ba\n"
                              "relation: ba = ab\n"
                              "relation: aa = aa\n");
  CHECK(p.relations().size() == 1);

  auto chain = parse_presentation("generators: a b c\nrelation: abc = bca = cab\n");
  REQUIRE(chain.relations().size() == 2);
  CHECK(has_pair(chain, {0, 1, 2}, {2, 0, 1}));
}

TEST_CASE("parse errors carry positions") {
  auto error_of = [](std::string const& text) -> std::string {
    try {
      parse_presentation(text);
    } catch (posmon::ParseError const& e) {
      return std::to_string(e.line()) + ":" + e.what();
    }
    return "no error";
  };
  CHECK(error_of("generators: a b\nrelation: ab = bx\n").rfind("2:", 0) == 0);
  CHECK(error_of("generators: a b\nrelation: ab = \n").rfind("2:", 0) == 0);
  CHECK(error_of("relation: ab = ba\n") != "no error");
  CHECK(error_of("generators: a\ngenerators: b\n").rfind("2:", 0) == 0);
  CHECK(error_of("generators: a b\nfrobnicate: a\n").rfind("2:", 0) == 0);
  CHECK(error_of("# comment\n\ngenerators: a a\n") != "no error");
  CHECK(error_of("generators: a~\n") != "no error");
  CHECK(error_of("generators: a\ncyclic: a\n").rfind("2:", 0) == 0);
  CHECK(error_of("# only a comment\n") != "no error");
}

TEST_CASE("word syntax") {
  auto m6 = posmon::fixture(posmon::Fixture::M6);
  auto g  = posmon::build_gmn(2, 2).presentation;
  CHECK(parse_word("abf", m6.alphabet()) == word_type{0, 1, 5});
  CHECK(parse_word("a.b.f", m6.alphabet()) == word_type{0, 1, 5});
  CHECK(parse_word("", m6.alphabet()).empty());
  CHECK(parse_word("ε", g.alphabet()).empty());
  CHECK(parse_word("s.t1.t2", g.alphabet()) == word_type{0, 1, 2});
  CHECK(parse_word("u2", g.alphabet()) == word_type{4});
  CHECK_THROWS_AS(parse_word("st1", g.alphabet()), posmon::ParseError);
  CHECK_THROWS_AS(parse_word("abz", m6.alphabet()), posmon::ParseError);
  CHECK_THROWS_AS(parse_word("s..t1", g.alphabet()), posmon::ParseError);
  CHECK(posmon::format_word({0, 1, 2}, g.alphabet()) == "s.t1.t2");
  CHECK(posmon::format_word({0, 1, 5}, m6.alphabet()) == "abf");
  CHECK(posmon::format_word({}, m6.alphabet()) == "ε");
  CHECK(posmon::word_tokens({0, 3}, g.alphabet())
        == std::vector<std::string>{"s", "u1"});
}

TEST_CASE("alphabets") {
  CHECK_THROWS_AS(posmon::Alphabet({"a", "a"}), posmon::Error);
  CHECK_THROWS_AS(posmon::Alphabet({"a.b"}), posmon::Error);
  CHECK_THROWS_AS(posmon::Alphabet({""}), posmon::Error);
  std::vector<std::string> many;
  for (int i = 0; i < 256; ++i) {
    many.push_back("x" + std::to_string(i));
  }
  CHECK_THROWS_AS(static_cast<void>(posmon::Alphabet(many)), posmon::Error);
  many.pop_back();
  CHECK(posmon::Alphabet(std::move(many)).size() == 255);
  posmon::Alphabet a({"x", "yy"});
  CHECK_FALSE(a.single_char());
  CHECK(a.letter("yy") == 1);
  CHECK_FALSE(a.find("z").has_value());
}
