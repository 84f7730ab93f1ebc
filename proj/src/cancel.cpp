#include "posmon/cancel.hpp"

#include <algorithm>
#include <tuple>

namespace posmon {

  std::string_view side_name(Side s) {
    return s == Side::left ? "left" : "right";
  }

  bool operator<(CancellationFailure const& a, CancellationFailure const& b) {
    return std::forward_as_tuple(a.side, a.x.size(), a.x, a.y, a.context)
           < std::forward_as_tuple(b.side, b.x.size(), b.x, b.y, b.context);
  }

  namespace {
    void sort_unique(std::vector<CancellationFailure>& v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    }
  }  // namespace

  std::vector<CancellationFailure> search_failures(WordSpace const& space,
                                                   std::size_t      max_len) {
    if (max_len > space.max_length()) {
      throw Error("bound exceeds the enumerated word space");
    }
    std::vector<CancellationFailure> out;
    for (std::size_t len = 2; len <= max_len; ++len) {
      std::size_t const   n       = len - 1;
      std::uint64_t const high    = space.power(n);
      std::uint64_t const sigma   = space.alphabet_size();
      auto const          classes = space.classes(len);
      auto const          count   = static_cast<std::int64_t>(classes.size());
      std::vector<std::vector<CancellationFailure>> found(classes.size());

#pragma omp parallel for schedule(dynamic, 16)
      for (std::int64_t k = 0; k < count; ++k) {
        // (side, context label, label of the remaining factor)
        std::vector<std::tuple<Side, index_type, index_type>> split;
        for (auto i : space.members(len, classes[k])) {
          split.emplace_back(Side::left,
                             space.label(1, static_cast<index_type>(i / high)),
                             space.label(n, static_cast<index_type>(i % high)));
          split.emplace_back(Side::right,
                             space.label(1, static_cast<index_type>(i % sigma)),
                             space.label(n, static_cast<index_type>(i / sigma)));
        }
        std::sort(split.begin(), split.end());
        split.erase(std::unique(split.begin(), split.end()), split.end());
        for (std::size_t a = 0; a < split.size(); ++a) {
          for (std::size_t b = a + 1; b < split.size(); ++b) {
            auto const& [sa, ga, xa] = split[a];
            auto const& [sb, gb, xb] = split[b];
            if (sa != sb || ga != gb) {
              break;
            }
            found[k].push_back({sa,
                                space.word_at(1, ga),
                                space.word_at(n, xa),
                                space.word_at(n, xb)});
          }
        }
      }
      for (auto& f : found) {
        out.insert(out.end(), f.begin(), f.end());
      }
    }
    sort_unique(out);
    return out;
  }

  std::vector<CancellationFailure> search_failures(Presentation const& p,
                                                   std::size_t         max_len,
                                                   std::size_t         cap,
                                                   Kernel              kernel) {
    WordSpace space(p, max_len, cap, kernel);
    return search_failures(space, max_len);
  }

  namespace reference {

    std::vector<CancellationFailure> search_failures(WordProblem& wp,
                                                     std::size_t  max_len) {
      auto const&       p     = wp.presentation();
      std::size_t const sigma = p.alphabet().size();
      std::vector<CancellationFailure> out;
      if (sigma == 0) {
        return out;
      }

      std::vector<word_type> letters;
      for (std::size_t g = 0; g < sigma; ++g) {
        auto c = wp.canonical(word_type{static_cast<letter_type>(g)});
        if (std::find(letters.begin(), letters.end(), c) == letters.end()) {
          letters.push_back(c);
        }
      }

      for (std::size_t n = 1; n + 1 <= max_len; ++n) {
        // canonical representatives of length n, by odometer over all words
        std::vector<word_type> reps;
        word_type              w(n, 0);
        while (true) {
          auto c = wp.canonical(w);
          if (c == w) {
            reps.push_back(w);
          }
          std::size_t i = n;
          while (i > 0 && w[i - 1] + 1u == sigma) {
            w[--i] = 0;
          }
          if (i == 0) {
            break;
          }
          ++w[i - 1];
        }
        for (std::size_t a = 0; a < reps.size(); ++a) {
          for (std::size_t b = a + 1; b < reps.size(); ++b) {
            auto const& x = reps[a];
            auto const& y = reps[b];
            if (p.letter_balanced() && !same_letter_multiset(x, y)) {
              continue;
            }
            for (auto const& g : letters) {
              if (wp.equal(concat(g, x), concat(g, y))) {
                out.push_back({Side::left, g, x, y});
              }
              if (wp.equal(concat(x, g), concat(y, g))) {
                out.push_back({Side::right, g, x, y});
              }
            }
          }
        }
      }
      sort_unique(out);
      return out;
    }

  }  // namespace reference

  ClaimCheck verify_claim(WordProblem&     wp,
                          word_type const& lhs,
                          word_type const& rhs,
                          word_type const& cancelled_lhs,
                          word_type const& cancelled_rhs) {
    return {wp.equal(lhs, rhs), wp.equal(cancelled_lhs, cancelled_rhs)};
  }

  Presentation add_relation(Presentation const& p,
                            word_type const&    u,
                            word_type const&    v) {
    if (u.size() != v.size()) {
      throw Error("add_relation: sides of different lengths ("
                  + std::to_string(u.size()) + " and "
                  + std::to_string(v.size()) + ")");
    }
    if (u == v) {
      return p;
    }
    auto relations = p.relations();
    relations.push_back({u, v});
    return Presentation(p.alphabet(), std::move(relations));
  }

}  // namespace posmon
