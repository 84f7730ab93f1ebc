#include "posmon/gmn.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "posmon/word_space.hpp"

namespace posmon {

  letter_type GmnContext::t(std::size_t i) const {
    if (i < 1 || i > m) {
      throw Error("t index out of range");
    }
    return static_cast<letter_type>(i);
  }

  letter_type GmnContext::u(std::size_t j) const {
    if (j < 1 || j > n) {
      throw Error("u index out of range");
    }
    return static_cast<letter_type>(m + j);
  }

  std::optional<Family> GmnContext::family_of(letter_type x) const {
    if (x == 0) {
      return std::nullopt;
    }
    if (x > m + n) {
      throw Error("letter outside the G_{m,n} alphabet");
    }
    return x <= m ? Family::t : Family::u;
  }

  std::size_t GmnContext::index_of(letter_type x) const {
    auto f = family_of(x);
    if (!f) {
      throw Error("s has no family index");
    }
    return *f == Family::t ? x : x - m;
  }

  GmnContext build_gmn(std::size_t m, std::size_t n) {
    if (m < 1 || n < 1) {
      throw Error("G_{m,n} needs m, n ≥ 1");
    }
    if (1 + m + n > max_alphabet_size) {
      throw Error("G_{m,n} alphabet too large");
    }
    GmnContext ctx;
    ctx.m = m;
    ctx.n = n;

    std::vector<std::string> names{"s"};
    for (std::size_t i = 1; i <= m; ++i) {
      names.push_back("t" + std::to_string(i));
    }
    for (std::size_t j = 1; j <= n; ++j) {
      names.push_back("u" + std::to_string(j));
    }

    ctx.delta1 = {0};
    ctx.delta2 = {0};
    for (std::size_t i = 1; i <= m; ++i) {
      ctx.delta1.push_back(static_cast<letter_type>(i));
    }
    for (std::size_t j = 1; j <= n; ++j) {
      ctx.delta2.push_back(static_cast<letter_type>(m + j));
    }
    ctx.delta = ctx.delta1;
    ctx.delta.insert(ctx.delta.end(), ctx.delta2.begin() + 1, ctx.delta2.end());

    std::vector<Relation> relations = expand_cyclic(ctx.delta1);
    auto                  second    = expand_cyclic(ctx.delta2);
    relations.insert(relations.end(), second.begin(), second.end());
    for (std::size_t i = 1; i <= m; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        auto ti = static_cast<letter_type>(i);
        auto uj = static_cast<letter_type>(m + j);
        relations.push_back({{ti, uj}, {uj, ti}});
      }
    }
    ctx.presentation = Presentation(Alphabet(std::move(names)), std::move(relations))
                           .with_proven_cancellative();
    return ctx;
  }

  word_type to_word(GmnContext const& ctx, ConsecutiveWord const& c) {
    if (c.start < 1 || c.start > c.end || c.end > ctx.size(c.family)) {
      throw Error("not a consecutive word of the family");
    }
    word_type w;
    for (std::size_t i = c.start; i <= c.end; ++i) {
      w.push_back(ctx.letter(c.family, i));
    }
    return w;
  }

  std::optional<Family> single_family(GmnContext const& ctx, word_type const& w) {
    std::optional<Family> fam;
    for (auto x : w) {
      auto f = ctx.family_of(x);
      if (!f) {
        throw Error("expected a word in t's or u's only, found s");
      }
      if (fam && *fam != *f) {
        throw Error("expected a word in one family, found t's and u's");
      }
      fam = f;
    }
    return fam;
  }

  std::optional<ConsecutiveWord> maximal_run_suffix(GmnContext const& ctx,
                                                    word_type const&  w) {
    auto fam = single_family(ctx, w);
    if (!fam) {
      return std::nullopt;
    }
    ConsecutiveWord run{*fam, ctx.index_of(w.back()), ctx.index_of(w.back())};
    for (std::size_t k = w.size() - 1; k > 0; --k) {
      if (ctx.index_of(w[k - 1]) + 1 != ctx.index_of(w[k])) {
        break;
      }
      --run.start;
    }
    return run;
  }

  word_type run_remainder(GmnContext const& ctx, word_type const& w) {
    auto run = maximal_run_suffix(ctx, w);
    if (!run) {
      return {};
    }
    return word_type(w.begin(), w.end() - run->length());
  }

  word_type delta_quotient(GmnContext const& ctx, ConsecutiveWord const& c) {
    to_word(ctx, c);  // validates
    word_type q;
    for (std::size_t i = c.end + 1; i <= ctx.size(c.family); ++i) {
      q.push_back(ctx.letter(c.family, i));
    }
    q.push_back(ctx.s());
    for (std::size_t i = 1; i < c.start; ++i) {
      q.push_back(ctx.letter(c.family, i));
    }
    return q;
  }

  word_type delta_quotient_of_s(GmnContext const& ctx, Family f) {
    return to_word(ctx, {f, 1, ctx.size(f)});
  }

  bool is_reduced_modulo_full_run(GmnContext const& ctx,
                                  Family            f,
                                  word_type const&  w) {
    return !has_suffix(w, delta_quotient_of_s(ctx, f));
  }

  word_type mirror(GmnContext const& ctx, word_type const& w) {
    word_type out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      auto f = ctx.family_of(*it);
      if (!f) {
        out.push_back(ctx.s());
      } else {
        out.push_back(
            ctx.letter(*f, ctx.size(*f) + 1 - ctx.index_of(*it)));
      }
    }
    return out;
  }

  std::optional<LemmaCase> lemma_case_from_name(std::string_view name) {
    static constexpr std::pair<std::string_view, LemmaCase> table[]
        = {{"i", LemmaCase::letter_cancel},
           {"ii", LemmaCase::t_u_swap},
           {"iii", LemmaCase::s_t},
           {"iv", LemmaCase::s_u},
           {"v", LemmaCase::t_t},
           {"vi", LemmaCase::u_u}};
    for (auto const& [n, c] : table) {
      if (n == name) {
        return c;
      }
    }
    return std::nullopt;
  }

  std::string_view lemma_case_name(LemmaCase c) {
    switch (c) {
      case LemmaCase::letter_cancel:
        return "i";
      case LemmaCase::t_u_swap:
        return "ii";
      case LemmaCase::s_t:
        return "iii";
      case LemmaCase::s_u:
        return "iv";
      case LemmaCase::t_t:
        return "v";
      case LemmaCase::u_u:
        return "vi";
    }
    return {};
  }

  ////////////////////////////////////////////////////////////////////////
  // Lemma checks
  ////////////////////////////////////////////////////////////////////////

  namespace {

    bool intersects(std::vector<index_type> const& a,
                    std::vector<index_type> const& b) {
      auto i = a.begin();
      auto j = b.begin();
      while (i != a.end() && j != b.end()) {
        if (*i == *j) {
          return true;
        }
        *i < *j ? ++i : ++j;
      }
      return false;
    }

    Family other(Family f) {
      return f == Family::t ? Family::u : Family::t;
    }

    // All words over family f of length ≤ max_len not literally ending with
    // the full run, including ε.
    std::vector<word_type> reduced_words(GmnContext const& ctx,
                                         Family            f,
                                         std::size_t       max_len) {
      std::vector<word_type> out{word_type{}};
      std::vector<word_type> layer{word_type{}};
      for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<word_type> next;
        for (auto const& w : layer) {
          for (std::size_t i = 1; i <= ctx.size(f); ++i) {
            auto v = w;
            v.push_back(ctx.letter(f, i));
            next.push_back(v);
          }
        }
        layer = std::move(next);
        for (auto const& w : layer) {
          if (is_reduced_modulo_full_run(ctx, f, w)) {
            out.push_back(w);
          }
        }
      }
      return out;
    }

    class LemmaChecker {
     public:
      LemmaChecker(GmnContext const& ctx, std::size_t bound, std::size_t cap)
          : ctx_(ctx), space_(ctx.presentation, bound, cap) {}

      LemmaCheck run(LemmaCase which, std::size_t bound) {
        LemmaCheck result;
        for (std::size_t len = 1; len <= bound; ++len) {
          auto const classes = space_.classes(len);
          auto const count   = static_cast<std::int64_t>(classes.size());
          std::vector<LemmaCheck> partial(classes.size());
#pragma omp parallel for schedule(dynamic, 8)
          for (std::int64_t k = 0; k < count; ++k) {
            check_class(which, len, classes[k], partial[k]);
          }
          for (auto& p : partial) {
            result.instances += p.instances;
            result.violations.insert(result.violations.end(),
                                     std::make_move_iterator(p.violations.begin()),
                                     std::make_move_iterator(p.violations.end()));
          }
        }
        return result;
      }

     private:
      word_type word(std::size_t n, index_type c) const {
        return space_.word_at(n, c);
      }

      std::vector<index_type> quotients(std::size_t      n,
                                        index_type       c,
                                        word_type const& prefix) const {
        return space_.left_quotients(n, c, prefix);
      }

      // Distinct (w, label of Y) with w·Y a member of the class and w a
      // non-empty literal prefix in family f. When `excluded` is set, w must
      // not start with that letter.
      std::set<std::pair<word_type, index_type>>
      family_splits(std::size_t                len,
                    index_type                 c,
                    Family                     f,
                    std::optional<letter_type> excluded) const {
        std::set<std::pair<word_type, index_type>> out;
        for (auto i : space_.members(len, c)) {
          auto const w = word(len, i);
          if (excluded && w.front() == *excluded) {
            continue;
          }
          for (std::size_t l = 1; l <= len; ++l) {
            auto fam = ctx_.family_of(w[l - 1]);
            if (!fam || *fam != f) {
              break;
            }
            word_type  prefix(w.begin(), w.begin() + l);
            word_type  rest(w.begin() + l, w.end());
            out.emplace(std::move(prefix), space_.label(rest));
          }
        }
        return out;
      }

      void check_class(LemmaCase which,
                       std::size_t len,
                       index_type  c,
                       LemmaCheck& out) const {
        std::size_t const r = len - 1;
        switch (which) {
          case LemmaCase::letter_cancel:
            for (std::size_t v = 0; v < space_.alphabet_size(); ++v) {
              word_type const g{static_cast<letter_type>(v)};
              auto const      xs = quotients(len, c, g);
              out.instances += xs.size() * xs.size();
              for (std::size_t a = 0; a < xs.size(); ++a) {
                for (std::size_t b = a + 1; b < xs.size(); ++b) {
                  out.violations.push_back({concat(g, word(r, xs[a])),
                                            concat(g, word(r, xs[b])),
                                            "X and Y are not equivalent"});
                }
              }
            }
            break;
          case LemmaCase::t_u_swap:
            for (std::size_t i = 1; i <= ctx_.m; ++i) {
              for (std::size_t j = 1; j <= ctx_.n; ++j) {
                word_type const ti{ctx_.t(i)}, uj{ctx_.u(j)};
                auto const      xs = quotients(len, c, ti);
                auto const      ys = quotients(len, c, uj);
                for (auto x : xs) {
                  for (auto y : ys) {
                    ++out.instances;
                    if (!intersects(quotients(r, x, uj), quotients(r, y, ti))) {
                      out.violations.push_back(
                          {concat(ti, word(r, x)),
                           concat(uj, word(r, y)),
                           "no Z with X ≐ u_j·Z and Y ≐ t_i·Z"});
                    }
                  }
                }
              }
            }
            break;
          case LemmaCase::s_t:
          case LemmaCase::s_u: {
            Family const    f = which == LemmaCase::s_t ? Family::t : Family::u;
            word_type const s{ctx_.s()};
            auto const      xs     = quotients(len, c, s);
            auto const      splits = family_splits(len, c, f, std::nullopt);
            for (auto x : xs) {
              for (auto const& [w, y] : splits) {
                ++out.instances;
                auto const p1 = concat(delta_quotient_of_s(ctx_, f),
                                       run_remainder(ctx_, w));
                auto const p2
                    = delta_quotient(ctx_, *maximal_run_suffix(ctx_, w));
                std::size_t const h = len - w.size();
                if (!intersects(quotients(r, x, p1), quotients(h, y, p2))) {
                  out.violations.push_back(
                      {concat(s, word(r, x)),
                       concat(w, word(h, y)),
                       "no Z with X ≐ Δ_s·R(w)·Z and Y ≐ Δ_C(w)·Z"});
                }
              }
            }
            break;
          }
          case LemmaCase::t_t:
          case LemmaCase::u_u: {
            Family const f = which == LemmaCase::t_t ? Family::t : Family::u;
            for (std::size_t i = 1; i <= ctx_.size(f); ++i) {
              word_type const xi{ctx_.letter(f, i)};
              auto const      xs = quotients(len, c, xi);
              if (xs.empty()) {
                continue;
              }
              auto const splits = family_splits(len, c, f, xi.front());
              auto const dq     = delta_quotient(ctx_, {f, i, i});
              for (auto x : xs) {
                for (auto const& [w, y] : splits) {
                  ++out.instances;
                  auto const q1 = concat(dq, run_remainder(ctx_, w));
                  auto const q2
                      = delta_quotient(ctx_, *maximal_run_suffix(ctx_, w));
                  std::size_t const h     = len - w.size();
                  bool              found = false;
                  if (q1.size() <= r) {
                    for (auto const& v :
                         reduced_words(ctx_, other(f), r - q1.size())) {
                      if (intersects(quotients(r, x, concat(v, q1)),
                                     quotients(h, y, concat(v, q2)))) {
                        found = true;
                        break;
                      }
                    }
                  }
                  if (!found) {
                    out.violations.push_back(
                        {concat(xi, word(r, x)),
                         concat(w, word(h, y)),
                         "no reduced v and Z with X ≐ v·Δ_x·R(w)·Z and "
                         "Y ≐ v·Δ_C(w)·Z"});
                  }
                }
              }
            }
            break;
          }
        }
      }

      GmnContext const& ctx_;
      WordSpace         space_;
    };

  }  // namespace

  LemmaCheck check_lemma_case(GmnContext const& ctx,
                              LemmaCase         which,
                              std::size_t       bound,
                              std::size_t       cap) {
    LemmaChecker checker(ctx, bound, cap);
    return checker.run(which, bound);
  }

}  // namespace posmon
