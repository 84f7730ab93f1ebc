#include "posmon/divisibility.hpp"

#include <algorithm>

namespace posmon {

  namespace {

    bool multiset_contains(std::vector<std::uint32_t> const& big,
                           std::vector<std::uint32_t> const& small) {
      for (std::size_t i = 0; i < small.size(); ++i) {
        if (small[i] > (i < big.size() ? big[i] : 0)) {
          return false;
        }
      }
      return true;
    }

    template <bool Left>
    DivisionResult divides(WordProblem&     wp,
                           word_type const& u,
                           word_type const& v) {
      auto const& p = wp.presentation();
      p.validate(u);
      p.validate(v);
      DivisionResult result;
      if (u.size() > v.size()) {
        return result;
      }
      if (p.letter_balanced()) {
        auto const sigma = p.alphabet().size();
        if (!multiset_contains(letter_counts(v, sigma),
                               letter_counts(u, sigma))) {
          return result;
        }
      }
      auto const cls = wp.class_of(v);
      for (auto const& m : cls->members) {
        bool hit = Left ? has_prefix(m, u) : has_suffix(m, u);
        if (!hit) {
          continue;
        }
        word_type q = Left ? word_type(m.begin() + u.size(), m.end())
                           : word_type(m.begin(), m.end() - u.size());
        result.quotients.push_back(wp.canonical(q));
      }
      std::sort(result.quotients.begin(), result.quotients.end());
      result.quotients.erase(
          std::unique(result.quotients.begin(), result.quotients.end()),
          result.quotients.end());
      result.divides = !result.quotients.empty();
      return result;
    }

    bool shortlex_less(word_type const& a, word_type const& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    }

    // Per-length canonical indices of cm_r(J) up to bound.
    std::vector<std::vector<index_type>>
    common_multiple_labels(WordSpace const&              space,
                           std::vector<word_type> const& J,
                           std::size_t                   bound) {
      if (J.empty()) {
        throw Error("cm_r needs a non-empty set");
      }
      if (bound > space.max_length()) {
        throw Error("bound exceeds the enumerated word space");
      }
      for (auto const& j : J) {
        space.presentation().validate(j);
      }
      std::size_t longest = 0;
      for (auto const& j : J) {
        longest = std::max(longest, j.size());
      }
      std::vector<std::vector<index_type>> out(bound + 1);
      for (std::size_t n = longest; n <= bound; ++n) {
        auto const classes = space.classes(n);
        auto const count   = static_cast<std::int64_t>(classes.size());
        std::vector<char> keep(classes.size(), 0);
#pragma omp parallel for schedule(dynamic, 64)
        for (std::int64_t k = 0; k < count; ++k) {
          bool all = true;
          for (auto const& j : J) {
            if (space.left_quotients(n, classes[k], j).empty()) {
              all = false;
              break;
            }
          }
          keep[k] = all;
        }
        for (std::size_t k = 0; k < classes.size(); ++k) {
          if (keep[k]) {
            out[n].push_back(classes[k]);
          }
        }
      }
      return out;
    }

  }  // namespace

  DivisionResult left_divides(WordProblem&     wp,
                              word_type const& u,
                              word_type const& v) {
    return divides<true>(wp, u, v);
  }

  DivisionResult right_divides(WordProblem&     wp,
                               word_type const& u,
                               word_type const& v) {
    return divides<false>(wp, u, v);
  }

  DivisionResult left_divides(word_type const&    u,
                              word_type const&    v,
                              Presentation const& p,
                              std::size_t         cap) {
    WordProblem wp(p, cap);
    return left_divides(wp, u, v);
  }

  DivisionResult right_divides(word_type const&    u,
                               word_type const&    v,
                               Presentation const& p,
                               std::size_t         cap) {
    WordProblem wp(p, cap);
    return right_divides(wp, u, v);
  }

  std::vector<word_type> cm_r(WordSpace const&              space,
                              std::vector<word_type> const& J,
                              std::size_t                   bound) {
    auto const             labels = common_multiple_labels(space, J, bound);
    std::vector<word_type> out;
    for (std::size_t n = 0; n < labels.size(); ++n) {
      for (auto c : labels[n]) {
        out.push_back(space.word_at(n, c));
      }
    }
    return out;
  }

  std::vector<word_type> cm_r(std::vector<word_type> const& J,
                              Presentation const&           p,
                              std::size_t                   bound,
                              std::size_t                   cap) {
    WordSpace space(p, bound, cap);
    return cm_r(space, J, bound);
  }

  McmReport mcm_r(WordSpace const&              space,
                  std::vector<word_type> const& J,
                  std::size_t                   bound) {
    auto const labels = common_multiple_labels(space, J, bound);
    McmReport  report;
    report.bound = bound;

    // Is the class (n, c) properly left-divided by some common multiple of
    // length < n? Same-length divisors are equal in a homogeneous monoid.
    auto properly_divided = [&](std::size_t n, index_type c) {
      for (std::size_t k = 0; k < n; ++k) {
        if (labels[k].empty()) {
          continue;
        }
        auto const prefixes = space.prefix_labels(n, c, k);
        for (auto d : labels[k]) {
          if (std::binary_search(prefixes.begin(), prefixes.end(), d)) {
            return true;
          }
        }
      }
      return false;
    };

    std::vector<std::pair<std::size_t, index_type>> minimal;
    for (std::size_t n = 0; n < labels.size(); ++n) {
      for (auto c : labels[n]) {
        report.common_multiples.push_back(space.word_at(n, c));
        if (!properly_divided(n, c)) {
          minimal.emplace_back(n, c);
          report.minimal.push_back(space.word_at(n, c));
        }
      }
    }

    if (minimal.size() == 1) {
      auto const [mn, mc] = minimal.front();
      bool divides_all    = true;
      for (std::size_t n = mn; n < labels.size() && divides_all; ++n) {
        for (auto c : labels[n]) {
          auto const prefixes = space.prefix_labels(n, c, mn);
          if (!std::binary_search(prefixes.begin(), prefixes.end(), mc)) {
            divides_all = false;
            break;
          }
        }
      }
      if (divides_all) {
        report.lcm_up_to_bound = space.word_at(mn, mc);
      }
    }
    std::sort(report.minimal.begin(), report.minimal.end(), shortlex_less);
    return report;
  }

  McmReport mcm_r(std::vector<word_type> const& J,
                  Presentation const&           p,
                  std::size_t                   bound,
                  std::size_t                   cap) {
    WordSpace space(p, bound, cap);
    return mcm_r(space, J, bound);
  }

}  // namespace posmon
