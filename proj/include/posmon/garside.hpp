// Atoms, fundamental elements and Garside elements.
//
// Δ is fundamental when there is a permutation σ of the atoms such that for
// every atom s, Δ ≐ s·Δ_s ≐ Δ_s·σ(s) for some Δ_s. Δ is a Garside element
// when its left and right divisor sets coincide and generate the monoid
// (finiteness is automatic for homogeneous presentations). The two notions
// agree on atomic cancellative monoids; cross_check_fundamental_garside
// tests that agreement on a given word.

#ifndef POSMON_GARSIDE_HPP_
#define POSMON_GARSIDE_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rewrite.hpp"

namespace posmon {

  // One representative letter per atom: letters equated by single-letter
  // relations form one atom, represented by the least such letter.
  // Throws NonHomogeneous.
  std::vector<letter_type> atoms(Presentation const& p);

  // atom_map(p)[x] is the representative of the atom containing letter x.
  std::vector<letter_type> atom_map(Presentation const& p);

  struct FundamentalCertificate {
    word_type delta;
    // Atom representatives, ascending.
    std::vector<letter_type> atoms;
    // letter → atom representative, for every letter of the alphabet.
    std::vector<letter_type>           atom_of;
    std::map<letter_type, letter_type> sigma;
    // Canonical Δ_s with Δ ≐ s·Δ_s ≐ Δ_s·σ(s).
    std::map<letter_type, word_type> quotients;
    // Order of σ in the symmetric group on the atoms.
    std::size_t order = 1;
    // Number of distinct valid bijections found (more than one only in the
    // non-cancellative case), counted up to bijection_count_limit.
    std::size_t bijection_count = 0;

    word_type const& quotient(letter_type x) const {
      return quotients.at(atom_of.at(x));
    }
  };

  inline constexpr std::size_t bijection_count_limit = 1'000'000;

  struct FundamentalVerdict {
    std::optional<FundamentalCertificate> certificate;
    // Set when a specific atom has no admissible quotient.
    std::optional<letter_type> failing_atom;
    std::string                reason;

    explicit operator bool() const noexcept {
      return certificate.has_value();
    }
  };

  // Throws CapExceeded if the class of delta is too large.
  FundamentalVerdict verify_fundamental(WordProblem& wp, word_type const& delta);
  FundamentalVerdict verify_fundamental(word_type const&    delta,
                                        Presentation const& p,
                                        std::size_t         cap = default_cap);

  struct GarsideReport {
    std::vector<word_type> left_divisors;   // canonical, shortlex order
    std::vector<word_type> right_divisors;  // canonical, shortlex order
    bool                   coincide   = false;
    bool                   generate   = false;
    bool                   is_garside = false;
  };

  GarsideReport verify_garside(WordProblem& wp, word_type const& delta);
  GarsideReport verify_garside(word_type const&    delta,
                               Presentation const& p,
                               std::size_t         cap = default_cap);

  struct FundamentalGarsideCheck {
    bool fundamental = false;
    bool garside     = false;
    // fundamental == garside; a mismatch on a cancellative presentation is a
    // defect.
    bool consistent = false;
  };

  FundamentalGarsideCheck cross_check_fundamental_garside(WordProblem&     wp,
                                                          word_type const& delta);

}  // namespace posmon

#endif  // POSMON_GARSIDE_HPP_
