// Positive presentations: alphabet, relations, classification flags, the
// line-oriented file format and the built-in example presentations.

#ifndef POSMON_PRESENTATION_HPP_
#define POSMON_PRESENTATION_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "word.hpp"

namespace posmon {

  // Generator names, in declaration order. Names are non-empty tokens over
  // [A-Za-z0-9_].
  class Alphabet {
   public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);

    std::size_t size() const noexcept {
      return names_.size();
    }
    std::string const& name(letter_type x) const {
      return names_.at(x);
    }
    std::vector<std::string> const& names() const noexcept {
      return names_;
    }
    std::optional<letter_type> find(std::string_view name) const;
    letter_type                letter(std::string_view name) const;

    // True when every generator name is one character, which enables the
    // bare-concatenation word syntax ("abf").
    bool single_char() const noexcept {
      return single_char_;
    }

    static bool valid_name(std::string_view name);

    bool operator==(Alphabet const& other) const {
      return names_ == other.names_;
    }

   private:
    std::vector<std::string>                     names_;
    std::unordered_map<std::string, letter_type> index_;
    bool                                         single_char_ = true;
  };

  struct Relation {
    word_type lhs;
    word_type rhs;

    // Unordered comparison: {lhs, rhs} as a set of two words.
    bool same_as(Relation const& other) const;
    bool operator==(Relation const&) const = default;
  };

  struct PresentationFlags {
    bool                     homogeneous     = true;
    bool                     letter_balanced = true;
    std::vector<letter_type> dummy_letters;

    bool operator==(PresentationFlags const&) const = default;
  };

  // Immutable after construction. Relations with identical sides are dropped,
  // duplicates (in either orientation) are kept once.
  class Presentation {
   public:
    Presentation() = default;
    Presentation(Alphabet alphabet, std::vector<Relation> relations);

    Alphabet const& alphabet() const noexcept {
      return alphabet_;
    }
    std::vector<Relation> const& relations() const noexcept {
      return relations_;
    }
    PresentationFlags const& flags() const noexcept {
      return flags_;
    }
    bool homogeneous() const noexcept {
      return flags_.homogeneous;
    }
    bool letter_balanced() const noexcept {
      return flags_.letter_balanced;
    }

    // Set for families whose cancellativity is established by proof (the
    // G_{m,n} family). Used by group equality to decide whether the
    // localization may be assumed injective.
    bool proven_cancellative() const noexcept {
      return proven_cancellative_;
    }
    Presentation with_proven_cancellative(bool value = true) const;

    // Throws NonHomogeneous unless homogeneous().
    void require_homogeneous() const;

    // Checks that every letter of w is in the alphabet.
    void validate(word_type const& w) const;

    bool operator==(Presentation const& other) const {
      return alphabet_ == other.alphabet_ && relations_ == other.relations_;
    }

   private:
    Alphabet              alphabet_;
    std::vector<Relation> relations_;
    PresentationFlags     flags_;
    bool                  proven_cancellative_ = false;
  };

  // The k−1 relations rot_0 = rot_j (1 ≤ j < k) equating all cyclic
  // rotations of x_1 x_2 ⋯ x_k. Throws Error if k < 2.
  std::vector<Relation> expand_cyclic(word_type const& letters);

  PresentationFlags classify(Alphabet const&              alphabet,
                             std::vector<Relation> const& relations);
  inline PresentationFlags classify(Presentation const& p) {
    return p.flags();
  }

  Presentation parse_presentation(std::string_view text);

  // Canonical text: the generators line followed by one `relation:` line per
  // stored pair. parse_presentation(to_text(p)) == p.
  std::string to_text(Presentation const& p);

  // Word syntax: dot-separated tokens ("s.t1.t2"), or bare concatenation
  // when all generator names are single characters ("abf"). The empty word
  // is written "" or "ε".
  word_type   parse_word(std::string_view text, Alphabet const& alphabet);
  std::string format_word(word_type const& w, Alphabet const& alphabet);
  std::vector<std::string> word_tokens(word_type const&, Alphabet const&);

  enum class Fixture { M6, M6p, M6p_completed };

  Presentation             fixture(Fixture name);
  Presentation             fixture(std::string_view name);
  std::optional<Fixture>   fixture_from_name(std::string_view name);
  std::string_view         fixture_name(Fixture name);
  std::string_view         fixture_text(Fixture name);

}  // namespace posmon

#endif  // POSMON_PRESENTATION_HPP_
