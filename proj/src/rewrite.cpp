#include "posmon/rewrite.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_set>

#include "posmon/detail/rules.hpp"

namespace posmon {

  namespace detail {
    Rules::Rules(Presentation const& p) : by_first_(p.alphabet().size()) {
      for (auto const& r : p.relations()) {
        all_.push_back({r.lhs, r.rhs});
        all_.push_back({r.rhs, r.lhs});
      }
      for (auto const& r : all_) {
        by_first_[r.from.front()].push_back(r);
      }
    }
  }  // namespace detail

  namespace {
    EquivClass closure(word_type const&     w,
                       detail::Rules const& rules,
                       std::size_t          cap) {
      EquivClass result;
      result.seed = w;
      std::unordered_set<word_type, WordHash> seen{w};
      std::vector<word_type>                  frontier{w};
      while (!frontier.empty() && !result.truncated) {
        std::vector<word_type> next;
        for (auto const& u : frontier) {
          rules.for_each_neighbor(u, [&](word_type const& v) {
            if (result.truncated || seen.count(v) != 0) {
              return;
            }
            if (seen.size() >= cap) {
              result.truncated = true;
              return;
            }
            seen.insert(v);
            next.push_back(v);
          });
          if (result.truncated) {
            break;
          }
        }
        frontier = std::move(next);
      }
      result.members.assign(seen.begin(), seen.end());
      std::sort(result.members.begin(), result.members.end());
      result.canonical = result.members.front();
      return result;
    }
  }  // namespace

  bool EquivClass::contains(word_type const& w) const {
    return std::binary_search(members.begin(), members.end(), w);
  }

  std::vector<word_type> neighbors(word_type const& w, Presentation const& p) {
    p.validate(w);
    detail::Rules          rules(p);
    std::vector<word_type> out;
    rules.for_each_neighbor(w, [&out](word_type const& v) { out.push_back(v); });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  EquivClass equivalence_class(word_type const&    w,
                               Presentation const& p,
                               std::size_t         cap) {
    p.require_homogeneous();
    p.validate(w);
    return closure(w, detail::Rules(p), cap);
  }

  ////////////////////////////////////////////////////////////////////////
  // WordProblem
  ////////////////////////////////////////////////////////////////////////

  WordProblem::WordProblem(Presentation p, std::size_t cap)
      : presentation_(std::move(p)), cap_(cap) {
    presentation_.require_homogeneous();
    rules_ = std::make_shared<detail::Rules const>(presentation_);
  }

  std::shared_ptr<EquivClass const> WordProblem::class_of(word_type const& w) {
    {
      std::shared_lock lock(mutex_);
      auto             it = cache_.find(w);
      if (it != cache_.end()) {
        return it->second;
      }
    }
    presentation_.validate(w);
    auto cls = std::make_shared<EquivClass const>(closure(w, *rules_, cap_));
    if (cls->truncated) {
      throw CapExceeded("equivalence class", cls->size(), cap_);
    }
    std::unique_lock lock(mutex_);
    auto             it = cache_.find(w);
    if (it != cache_.end()) {
      return it->second;
    }
    for (auto const& m : cls->members) {
      cache_.emplace(m, cls);
    }
    return cls;
  }

  bool WordProblem::obviously_different(word_type const& u,
                                        word_type const& v) const {
    if (u.size() != v.size()) {
      return true;
    }
    return presentation_.letter_balanced() && !same_letter_multiset(u, v);
  }

  bool WordProblem::equal(word_type const& u, word_type const& v) {
    presentation_.validate(u);
    presentation_.validate(v);
    if (u == v) {
      return true;
    }
    if (obviously_different(u, v)) {
      return false;
    }
    try {
      return class_of(u)->contains(v);
    } catch (CapExceeded const&) {
      // A partial closure that already reached v still decides the question.
      auto partial = closure(u, *rules_, cap_);
      if (partial.contains(v)) {
        return true;
      }
      throw;
    }
  }

  word_type WordProblem::canonical(word_type const& w) {
    return class_of(w)->canonical;
  }

  std::size_t WordProblem::cached_classes() const {
    std::shared_lock                        lock(mutex_);
    std::unordered_set<EquivClass const*> distinct;
    for (auto const& [w, c] : cache_) {
      distinct.insert(c.get());
    }
    return distinct.size();
  }

  bool equal(word_type const&    u,
             word_type const&    v,
             Presentation const& p,
             std::size_t         cap) {
    WordProblem wp(p, cap);
    return wp.equal(u, v);
  }

  word_type canonical(word_type const& w, Presentation const& p, std::size_t cap) {
    WordProblem wp(p, cap);
    return wp.canonical(w);
  }

}  // namespace posmon
