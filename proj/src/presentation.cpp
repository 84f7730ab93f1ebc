#include "posmon/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace posmon {

  ////////////////////////////////////////////////////////////////////////
  // Alphabet
  ////////////////////////////////////////////////////////////////////////

  Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() > max_alphabet_size) {
      throw Error("alphabet too large: " + std::to_string(names_.size())
                  + " generators (at most "
                  + std::to_string(max_alphabet_size) + ")");
    }
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!valid_name(names_[i])) {
        throw Error("invalid generator name \"" + names_[i] + "\"");
      }
      auto [it, inserted]
          = index_.emplace(names_[i], static_cast<letter_type>(i));
      if (!inserted) {
        throw Error("duplicate generator \"" + names_[i] + "\"");
      }
      single_char_ = single_char_ && names_[i].size() == 1;
    }
  }

  std::optional<letter_type> Alphabet::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  letter_type Alphabet::letter(std::string_view name) const {
    auto x = find(name);
    if (!x) {
      throw Error("unknown letter \"" + std::string(name) + "\"");
    }
    return *x;
  }

  bool Alphabet::valid_name(std::string_view name) {
    return !name.empty()
           && std::all_of(name.begin(), name.end(), [](unsigned char c) {
                return std::isalnum(c) || c == '_';
              });
  }

  ////////////////////////////////////////////////////////////////////////
  // Relation, Presentation
  ////////////////////////////////////////////////////////////////////////

  bool Relation::same_as(Relation const& other) const {
    return (lhs == other.lhs && rhs == other.rhs)
           || (lhs == other.rhs && rhs == other.lhs);
  }

  Presentation::Presentation(Alphabet alphabet, std::vector<Relation> relations)
      : alphabet_(std::move(alphabet)) {
    for (auto& r : relations) {
      if (r.lhs.empty() || r.rhs.empty()) {
        throw Error("relation with an empty side");
      }
      validate(r.lhs);
      validate(r.rhs);
      if (r.lhs == r.rhs) {
        continue;
      }
      bool dup = std::any_of(relations_.begin(),
                             relations_.end(),
                             [&r](Relation const& q) { return q.same_as(r); });
      if (!dup) {
        relations_.push_back(std::move(r));
      }
    }
    flags_ = classify(alphabet_, relations_);
  }

  Presentation Presentation::with_proven_cancellative(bool value) const {
    Presentation copy(*this);
    copy.proven_cancellative_ = value;
    return copy;
  }

  void Presentation::require_homogeneous() const {
    if (!flags_.homogeneous) {
      throw NonHomogeneous();
    }
  }

  void Presentation::validate(word_type const& w) const {
    for (auto x : w) {
      if (x >= alphabet_.size()) {
        throw Error("letter index " + std::to_string(x)
                    + " outside the alphabet");
      }
    }
  }

  std::vector<Relation> expand_cyclic(word_type const& letters) {
    std::size_t const k = letters.size();
    if (k < 2) {
      throw Error("a cyclic relation needs at least 2 letters");
    }
    std::vector<Relation> result;
    result.reserve(k - 1);
    for (std::size_t j = 1; j < k; ++j) {
      word_type rot(letters.begin() + j, letters.end());
      rot.insert(rot.end(), letters.begin(), letters.begin() + j);
      result.push_back({letters, std::move(rot)});
    }
    return result;
  }

  PresentationFlags classify(Alphabet const&              alphabet,
                             std::vector<Relation> const& relations) {
    PresentationFlags flags;
    std::vector<bool> dummy(alphabet.size(), false);
    auto mark = [&dummy](word_type const& single, word_type const& other) {
      if (single.size() == 1
          && std::find(other.begin(), other.end(), single[0]) == other.end()) {
        dummy[single[0]] = true;
      }
    };
    for (auto const& r : relations) {
      flags.homogeneous     = flags.homogeneous && r.lhs.size() == r.rhs.size();
      flags.letter_balanced = flags.letter_balanced
                              && same_letter_multiset(r.lhs, r.rhs);
      mark(r.lhs, r.rhs);
      mark(r.rhs, r.lhs);
    }
    for (std::size_t i = 0; i < dummy.size(); ++i) {
      if (dummy[i]) {
        flags.dummy_letters.push_back(static_cast<letter_type>(i));
      }
    }
    return flags;
  }

  ////////////////////////////////////////////////////////////////////////
  // Words
  ////////////////////////////////////////////////////////////////////////

  namespace {
    constexpr std::string_view epsilon_utf8 = "\xCE\xB5";  // ε

    word_type parse_word_at(std::string_view text,
                            Alphabet const&  alphabet,
                            std::size_t      line,
                            std::size_t      column) {
      word_type w;
      if (text.empty() || text == epsilon_utf8) {
        return w;
      }
      auto letter_at = [&](std::string_view tok, std::size_t offset) {
        if (!Alphabet::valid_name(tok)) {
          throw ParseError("malformed token \"" + std::string(tok) + "\"",
                           line,
                           line == 0 ? 0 : column + offset);
        }
        auto x = alphabet.find(tok);
        if (!x) {
          throw ParseError("unknown letter \"" + std::string(tok) + "\"",
                           line,
                           line == 0 ? 0 : column + offset);
        }
        return *x;
      };
      if (text.find('.') != std::string_view::npos) {
        std::size_t start = 0;
        while (true) {
          auto dot = text.find('.', start);
          auto tok = text.substr(start, dot == std::string_view::npos
                                            ? std::string_view::npos
                                            : dot - start);
          w.push_back(letter_at(tok, start));
          if (dot == std::string_view::npos) {
            break;
          }
          start = dot + 1;
        }
      } else if (alphabet.single_char()) {
        for (std::size_t i = 0; i < text.size(); ++i) {
          w.push_back(letter_at(text.substr(i, 1), i));
        }
      } else {
        w.push_back(letter_at(text, 0));
      }
      return w;
    }

    std::string_view trim(std::string_view s) {
      auto const ws = " \t\r\n";
      auto       b  = s.find_first_not_of(ws);
      if (b == std::string_view::npos) {
        return {};
      }
      auto e = s.find_last_not_of(ws);
      return s.substr(b, e - b + 1);
    }

    // Whitespace separated fields of s with their 0-based offsets into s.
    std::vector<std::pair<std::string_view, std::size_t>>
    fields(std::string_view s) {
      std::vector<std::pair<std::string_view, std::size_t>> out;
      std::size_t                                           i = 0;
      while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) {
          ++i;
        }
        std::size_t b = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') {
          ++i;
        }
        if (b < i) {
          out.emplace_back(s.substr(b, i - b), b);
        }
      }
      return out;
    }
  }  // namespace

  word_type parse_word(std::string_view text, Alphabet const& alphabet) {
    return parse_word_at(trim(text), alphabet, 0, 0);
  }

  std::vector<std::string> word_tokens(word_type const& w,
                                       Alphabet const&  alphabet) {
    std::vector<std::string> out;
    out.reserve(w.size());
    for (auto x : w) {
      out.push_back(alphabet.name(x));
    }
    return out;
  }

  std::string format_word(word_type const& w, Alphabet const& alphabet) {
    if (w.empty()) {
      return std::string(epsilon_utf8);
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0 && !alphabet.single_char()) {
        out += '.';
      }
      out += alphabet.name(w[i]);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // File format
  ////////////////////////////////////////////////////////////////////////

  Presentation parse_presentation(std::string_view text) {
    std::optional<Alphabet> alphabet;
    std::vector<Relation>   relations;

    std::size_t line_no = 0;
    std::size_t pos     = 0;
    while (pos <= text.size()) {
      auto nl = text.find('\n', pos);
      auto raw
          = text.substr(pos, nl == std::string_view::npos ? text.size() - pos
                                                          : nl - pos);
      pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
      ++line_no;

      auto line = trim(raw);
      if (line.empty() || line.front() == '#') {
        continue;
      }
      std::size_t const indent = raw.find(line.front()) + 1;
      auto              colon  = line.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError("expected \"<keyword>: ...\"", line_no, indent);
      }
      auto        key       = trim(line.substr(0, colon));
      auto        body      = line.substr(colon + 1);
      std::size_t body_col  = indent + colon + 1;

      if (key == "generators") {
        if (alphabet) {
          throw ParseError("generators declared twice", line_no, indent);
        }
        std::vector<std::string> names;
        for (auto [tok, off] : fields(body)) {
          if (!Alphabet::valid_name(tok)) {
            throw ParseError("invalid generator name \"" + std::string(tok)
                                 + "\"",
                             line_no,
                             body_col + off);
          }
          if (std::find(names.begin(), names.end(), tok) != names.end()) {
            throw ParseError("duplicate generator \"" + std::string(tok)
                                 + "\"",
                             line_no,
                             body_col + off);
          }
          names.emplace_back(tok);
        }
        try {
          alphabet.emplace(std::move(names));
        } catch (Error const& e) {
          throw ParseError(e.what(), line_no, indent);
        }
        continue;
      }
      if (!alphabet) {
        throw ParseError("the generators line must come first", line_no, indent);
      }
      if (key == "cyclic") {
        word_type letters;
        for (auto [tok, off] : fields(body)) {
          auto w = parse_word_at(tok, *alphabet, line_no, body_col + off);
          if (w.size() != 1) {
            throw ParseError("cyclic relations list single letters",
                             line_no,
                             body_col + off);
          }
          letters.push_back(w[0]);
        }
        if (letters.size() < 2) {
          throw ParseError("a cyclic relation needs at least 2 letters",
                           line_no,
                           indent);
        }
        auto expanded = expand_cyclic(letters);
        relations.insert(relations.end(), expanded.begin(), expanded.end());
      } else if (key == "relation") {
        std::vector<word_type> sides;
        std::size_t            start = 0;
        while (true) {
          auto eq    = body.find('=', start);
          auto chunk = body.substr(
              start, eq == std::string_view::npos ? std::string_view::npos
                                                  : eq - start);
          auto f = fields(chunk);
          if (f.size() != 1) {
            throw ParseError(f.empty() ? "empty relation side"
                                       : "a relation side must be one word",
                             line_no,
                             body_col + start + (f.empty() ? 0 : f[1].second));
          }
          auto [tok, off] = f[0];
          auto w = parse_word_at(tok, *alphabet, line_no, body_col + start + off);
          if (w.empty()) {
            throw ParseError(
                "empty relation side", line_no, body_col + start + off);
          }
          sides.push_back(std::move(w));
          if (eq == std::string_view::npos) {
            break;
          }
          start = eq + 1;
        }
        if (sides.size() < 2) {
          throw ParseError("a relation needs at least two sides",
                           line_no,
                           body_col);
        }
        for (std::size_t i = 1; i < sides.size(); ++i) {
          relations.push_back({sides[0], sides[i]});
        }
      } else {
        throw ParseError("unknown keyword \"" + std::string(key) + "\"",
                         line_no,
                         indent);
      }
    }
    if (!alphabet) {
      throw ParseError("missing generators line", line_no, 1);
    }
    return Presentation(std::move(*alphabet), std::move(relations));
  }

  std::string to_text(Presentation const& p) {
    std::ostringstream out;
    out << "generators:";
    for (auto const& name : p.alphabet().names()) {
      out << ' ' << name;
    }
    out << '\n';
    for (auto const& r : p.relations()) {
      out << "relation: " << format_word(r.lhs, p.alphabet()) << " = "
          << format_word(r.rhs, p.alphabet()) << '\n';
    }
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Fixtures
  ////////////////////////////////////////////////////////////////////////

  namespace {
    constexpr std::string_view m6_text = R"(# Line arrangement A_6: non-cancellative
generators: a b c d e f
relation: abf = bfa = fab
relation: ace = cea = eac
relation: def = efd = fde
relation: ad = da
relation: cd = dc
relation: bc = cb
relation: bd = db
relation: be = eb
relation: cf = fc
)";

    constexpr std::string_view m6p_text = R"(# Line arrangement A'_6: non-cancellative
generators: a b c d e f
relation: abf = bfa = fab
relation: bcd = cdb = dbc
relation: def = efd = fde
relation: ad = da
relation: cf = fc
relation: be = eb
relation: abce = eabc
relation: cdea = acde
)";

    constexpr std::string_view m6p_completed_text
        = R"(# A'_6 with the relation cefa = efac added: still non-cancellative
generators: a b c d e f
relation: abf = bfa = fab
relation: bcd = cdb = dbc
relation: def = efd = fde
relation: ad = da
relation: cf = fc
relation: be = eb
relation: abce = eabc
relation: cdea = acde
relation: cefa = efac
)";
  }  // namespace

  std::optional<Fixture> fixture_from_name(std::string_view name) {
    if (name == "M6") {
      return Fixture::M6;
    } else if (name == "M6p") {
      return Fixture::M6p;
    } else if (name == "M6p_completed") {
      return Fixture::M6p_completed;
    }
    return std::nullopt;
  }

  std::string_view fixture_name(Fixture name) {
    switch (name) {
      case Fixture::M6:
        return "M6";
      case Fixture::M6p:
        return "M6p";
      case Fixture::M6p_completed:
        return "M6p_completed";
    }
    return {};
  }

  std::string_view fixture_text(Fixture name) {
    switch (name) {
      case Fixture::M6:
        return m6_text;
      case Fixture::M6p:
        return m6p_text;
      case Fixture::M6p_completed:
        return m6p_completed_text;
    }
    return {};
  }

  Presentation fixture(Fixture name) {
    return parse_presentation(fixture_text(name));
  }

  Presentation fixture(std::string_view name) {
    auto f = fixture_from_name(name);
    if (!f) {
      throw Error("unknown fixture \"" + std::string(name) + "\"");
    }
    return fixture(*f);
  }

}  // namespace posmon
