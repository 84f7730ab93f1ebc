// Left/right divisibility and common right multiples.
//
// u |_l v iff v ≐ u·w for some w. Because the literal word u·w is equivalent
// to v whenever v ≐ u·w, scanning the class of v for members with literal
// prefix u is complete, and the suffixes give every quotient.

#ifndef POSMON_DIVISIBILITY_HPP_
#define POSMON_DIVISIBILITY_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "rewrite.hpp"
#include "word_space.hpp"

namespace posmon {

  struct DivisionResult {
    bool divides = false;
    // Canonical forms of all w with v ≐ u·w (resp. w·u), sorted.
    std::vector<word_type> quotients;
  };

  DivisionResult left_divides(WordProblem&     wp,
                              word_type const& u,
                              word_type const& v);
  DivisionResult right_divides(WordProblem&     wp,
                               word_type const& u,
                               word_type const& v);

  DivisionResult left_divides(word_type const&    u,
                              word_type const&    v,
                              Presentation const& p,
                              std::size_t         cap = default_cap);
  DivisionResult right_divides(word_type const&    u,
                               word_type const&    v,
                               Presentation const& p,
                               std::size_t         cap = default_cap);

  // Canonical forms of all elements of length ≤ bound left-divisible by every
  // element of J, in shortlex order. The space must cover the bound.
  std::vector<word_type> cm_r(WordSpace const&              space,
                              std::vector<word_type> const& J,
                              std::size_t                   bound);
  std::vector<word_type> cm_r(std::vector<word_type> const& J,
                              Presentation const&           p,
                              std::size_t                   bound,
                              std::size_t                   cap = default_cap);

  struct McmReport {
    std::size_t            bound = 0;
    std::vector<word_type> common_multiples;
    // Elements of common_multiples not properly left-divided by another.
    std::vector<word_type>   minimal;
    std::optional<word_type> lcm_up_to_bound;
  };

  McmReport mcm_r(WordSpace const&              space,
                  std::vector<word_type> const& J,
                  std::size_t                   bound);
  McmReport mcm_r(std::vector<word_type> const& J,
                  Presentation const&           p,
                  std::size_t                   bound,
                  std::size_t                   cap = default_cap);

}  // namespace posmon

#endif  // POSMON_DIVISIBILITY_HPP_
