#include "posmon/word_space.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include <omp.h>

namespace posmon {

  namespace {

    // A directed rule evaluated on base-σ word indices.
    struct IndexRule {
      word_type     from;
      std::int64_t  delta;  // value(to) − value(from)
    };

    struct IndexRules {
      std::size_t                         sigma;
      std::size_t                         n;
      std::vector<std::uint64_t>          powers;
      std::vector<std::vector<IndexRule>> by_first;

      IndexRules(Presentation const& p, std::size_t len)
          : sigma(p.alphabet().size()), n(len), by_first(sigma) {
        powers.assign(n + 1, 1);
        for (std::size_t k = 1; k <= n; ++k) {
          powers[k] = powers[k - 1] * sigma;
        }
        auto value = [this](word_type const& w) {
          std::int64_t v = 0;
          for (auto x : w) {
            v = v * static_cast<std::int64_t>(sigma) + x;
          }
          return v;
        };
        for (auto const& r : p.relations()) {
          if (r.lhs.size() > n) {
            continue;
          }
          std::int64_t d = value(r.rhs) - value(r.lhs);
          by_first[r.lhs.front()].push_back({r.lhs, d});
          by_first[r.rhs.front()].push_back({r.rhs, -d});
        }
      }

      // f(j) for every single-substitution neighbour j of word index i.
      template <typename F>
      void for_each_neighbor(std::uint64_t i, F&& f) const {
        letter_type digits[64];
        std::uint64_t rest = i;
        for (std::size_t k = n; k-- > 0;) {
          digits[k] = static_cast<letter_type>(rest % sigma);
          rest /= sigma;
        }
        for (std::size_t pos = 0; pos < n; ++pos) {
          for (auto const& r : by_first[digits[pos]]) {
            std::size_t len = r.from.size();
            if (pos + len > n
                || !std::equal(r.from.begin(), r.from.end(), digits + pos)) {
              continue;
            }
            f(static_cast<std::uint64_t>(
                static_cast<std::int64_t>(i)
                + r.delta * static_cast<std::int64_t>(powers[n - pos - len])));
          }
        }
      }
    };

    std::uint64_t checked_count(Presentation const& p, std::size_t n) {
      p.require_homogeneous();
      if (n > 63) {
        throw CapExceeded("word space", 0, 0);
      }
      std::uint64_t total = 1;
      for (std::size_t k = 0; k < n; ++k) {
        total *= p.alphabet().size();
        if (total > std::numeric_limits<index_type>::max()) {
          throw CapExceeded("word space", total,
                            std::numeric_limits<index_type>::max());
        }
      }
      return total;
    }

  }  // namespace

  namespace kernels {

    std::vector<index_type> partition_serial(Presentation const& p,
                                             std::size_t         n) {
      std::uint64_t const     total = checked_count(p, n);
      IndexRules const        rules(p, n);
      index_type const        unset = std::numeric_limits<index_type>::max();
      std::vector<index_type> label(total, unset);
      std::vector<index_type> queue;
      for (std::uint64_t i = 0; i < total; ++i) {
        if (label[i] != unset) {
          continue;
        }
        auto const root = static_cast<index_type>(i);
        label[i]        = root;
        queue.assign(1, root);
        for (std::size_t head = 0; head < queue.size(); ++head) {
          rules.for_each_neighbor(queue[head], [&](std::uint64_t j) {
            if (label[j] == unset) {
              label[j] = root;
              queue.push_back(static_cast<index_type>(j));
            }
          });
        }
      }
      return label;
    }

    std::vector<index_type> partition_parallel(Presentation const& p,
                                               std::size_t         n) {
      std::uint64_t const     total = checked_count(p, n);
      IndexRules const        rules(p, n);
      std::vector<index_type> cur(total), next(total);
      std::iota(cur.begin(), cur.end(), index_type(0));
      auto const count = static_cast<std::int64_t>(total);
      bool       changed = true;
      while (changed) {
        changed = false;
#pragma omp parallel for schedule(static) reduction(|| : changed)
        for (std::int64_t i = 0; i < count; ++i) {
          index_type m = cur[i];
          rules.for_each_neighbor(static_cast<std::uint64_t>(i),
                                  [&](std::uint64_t j) {
                                    m = std::min(m, cur[j]);
                                  });
          m       = std::min(m, cur[m]);
          next[i] = m;
          changed = changed || (m != cur[i]);
        }
        std::swap(cur, next);
      }
      return cur;
    }

  }  // namespace kernels

  ////////////////////////////////////////////////////////////////////////
  // WordSpace
  ////////////////////////////////////////////////////////////////////////

  WordSpace::WordSpace(Presentation const& p,
                       std::size_t         max_len,
                       std::size_t         cap,
                       Kernel              kernel)
      : presentation_(p), sigma_(p.alphabet().size()) {
    p.require_homogeneous();
    powers_.assign(max_len + 1, 1);
    std::uint64_t total = 1;
    for (std::size_t k = 1; k <= max_len; ++k) {
      powers_[k] = powers_[k - 1] * sigma_;
      total += powers_[k];
      if (total > cap || powers_[k] > std::numeric_limits<index_type>::max()) {
        throw CapExceeded("word space of length " + std::to_string(max_len),
                          total,
                          cap);
      }
    }
    levels_.resize(max_len + 1);
    for (std::size_t n = 0; n <= max_len; ++n) {
      Level& lv = levels_[n];
      lv.label  = kernel == Kernel::serial ? kernels::partition_serial(p, n)
                                           : kernels::partition_parallel(p, n);
      std::size_t const size = lv.label.size();
      lv.ordinal.assign(size, 0);
      for (std::size_t i = 0; i < size; ++i) {
        if (lv.label[i] == i) {
          lv.ordinal[i] = static_cast<index_type>(lv.classes.size());
          lv.classes.push_back(static_cast<index_type>(i));
        }
      }
      lv.start.assign(lv.classes.size() + 1, 0);
      for (std::size_t i = 0; i < size; ++i) {
        ++lv.start[lv.ordinal[lv.label[i]] + 1];
      }
      std::partial_sum(lv.start.begin(), lv.start.end(), lv.start.begin());
      lv.order.resize(size);
      std::vector<index_type> fill(lv.start.begin(), lv.start.end() - 1);
      for (std::size_t i = 0; i < size; ++i) {
        lv.order[fill[lv.ordinal[lv.label[i]]]++] = static_cast<index_type>(i);
      }
    }
  }

  index_type WordSpace::index_of(word_type const& w) const {
    if (w.size() > max_length()) {
      throw Error("word longer than the enumerated bound");
    }
    std::uint64_t v = 0;
    for (auto x : w) {
      if (x >= sigma_) {
        throw Error("letter outside the alphabet");
      }
      v = v * sigma_ + x;
    }
    return static_cast<index_type>(v);
  }

  word_type WordSpace::word_at(std::size_t n, index_type index) const {
    word_type     w(n);
    std::uint64_t rest = index;
    for (std::size_t k = n; k-- > 0;) {
      w[k] = static_cast<letter_type>(rest % sigma_);
      rest /= sigma_;
    }
    return w;
  }

  std::span<index_type const> WordSpace::members(std::size_t n,
                                                 index_type  canonical) const {
    Level const& lv = levels_.at(n);
    if (lv.label.at(canonical) != canonical) {
      throw Error("not a canonical index");
    }
    auto k = lv.ordinal[canonical];
    return std::span<index_type const>(lv.order).subspan(
        lv.start[k], lv.start[k + 1] - lv.start[k]);
  }

  namespace {
    void sort_unique(std::vector<index_type>& v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    }
  }  // namespace

  std::vector<index_type> WordSpace::left_quotients(std::size_t      n,
                                                    index_type       canonical,
                                                    word_type const& prefix) const {
    std::vector<index_type> out;
    if (prefix.size() > n) {
      return out;
    }
    std::size_t const   rest = n - prefix.size();
    std::uint64_t const want = index_of(prefix);
    for (auto i : members(n, canonical)) {
      if (i / powers_[rest] == want) {
        out.push_back(label(rest, static_cast<index_type>(i % powers_[rest])));
      }
    }
    sort_unique(out);
    return out;
  }

  std::vector<index_type>
  WordSpace::right_quotients(std::size_t      n,
                             index_type       canonical,
                             word_type const& suffix) const {
    std::vector<index_type> out;
    if (suffix.size() > n) {
      return out;
    }
    std::size_t const   rest = n - suffix.size();
    std::uint64_t const want = index_of(suffix);
    std::uint64_t const mod  = powers_[suffix.size()];
    for (auto i : members(n, canonical)) {
      if (i % mod == want) {
        out.push_back(label(rest, static_cast<index_type>(i / mod)));
      }
    }
    sort_unique(out);
    return out;
  }

  std::vector<index_type> WordSpace::prefix_labels(std::size_t n,
                                                   index_type  canonical,
                                                   std::size_t k) const {
    std::vector<index_type> out;
    for (auto i : members(n, canonical)) {
      out.push_back(label(k, static_cast<index_type>(i / powers_[n - k])));
    }
    sort_unique(out);
    return out;
  }

  std::vector<index_type> WordSpace::suffix_labels(std::size_t n,
                                                   index_type  canonical,
                                                   std::size_t k) const {
    std::vector<index_type> out;
    for (auto i : members(n, canonical)) {
      out.push_back(label(k, static_cast<index_type>(i % powers_[k])));
    }
    sort_unique(out);
    return out;
  }

}  // namespace posmon
