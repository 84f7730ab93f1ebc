#ifndef POSMON_DETAIL_RULES_HPP_
#define POSMON_DETAIL_RULES_HPP_

#include <vector>

#include "posmon/presentation.hpp"

namespace posmon::detail {

  // Each relation as two directed rewriting rules, bucketed by the first
  // letter of the left-hand side.
  class Rules {
   public:
    struct Rule {
      word_type from;
      word_type to;
    };

    explicit Rules(Presentation const& p);

    std::vector<Rule> const& starting_with(letter_type x) const {
      return by_first_[x];
    }
    std::vector<Rule> const& all() const noexcept {
      return all_;
    }

    // Calls f(neighbor) for each single substitution applied to w. May
    // report the same neighbor more than once.
    template <typename F>
    void for_each_neighbor(word_type const& w, F&& f) const {
      word_type buf;
      for (std::size_t i = 0; i < w.size(); ++i) {
        for (auto const& r : by_first_[w[i]]) {
          if (i + r.from.size() > w.size()
              || !std::equal(r.from.begin(), r.from.end(), w.begin() + i)) {
            continue;
          }
          buf.clear();
          buf.insert(buf.end(), w.begin(), w.begin() + i);
          buf.insert(buf.end(), r.to.begin(), r.to.end());
          buf.insert(buf.end(), w.begin() + i + r.from.size(), w.end());
          f(buf);
        }
      }
    }

   private:
    std::vector<Rule>              all_;
    std::vector<std::vector<Rule>> by_first_;
  };

}  // namespace posmon::detail

#endif  // POSMON_DETAIL_RULES_HPP_
