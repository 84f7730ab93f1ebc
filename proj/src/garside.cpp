#include "posmon/garside.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace posmon {

  std::vector<letter_type> atom_map(Presentation const& p) {
    p.require_homogeneous();
    std::vector<letter_type> parent(p.alphabet().size());
    std::iota(parent.begin(), parent.end(), letter_type(0));
    auto find = [&parent](letter_type x) {
      while (parent[x] != x) {
        x = parent[x] = parent[parent[x]];
      }
      return x;
    };
    for (auto const& r : p.relations()) {
      if (r.lhs.size() == 1 && r.rhs.size() == 1) {
        auto a = find(r.lhs[0]), b = find(r.rhs[0]);
        if (a != b) {
          parent[std::max(a, b)] = std::min(a, b);
        }
      }
    }
    std::vector<letter_type> out(parent.size());
    for (std::size_t x = 0; x < out.size(); ++x) {
      out[x] = find(static_cast<letter_type>(x));
    }
    return out;
  }

  std::vector<letter_type> atoms(Presentation const& p) {
    auto                     map = atom_map(p);
    std::vector<letter_type> out;
    for (std::size_t x = 0; x < map.size(); ++x) {
      if (map[x] == x) {
        out.push_back(static_cast<letter_type>(x));
      }
    }
    return out;
  }

  namespace {

    bool shortlex_less(word_type const& a, word_type const& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    }

    void shortlex_sort_unique(std::vector<word_type>& v) {
      std::sort(v.begin(), v.end(), shortlex_less);
      v.erase(std::unique(v.begin(), v.end()), v.end());
    }

    // Counts perfect matchings atom → candidate, recording the first one.
    class BijectionSearch {
     public:
      BijectionSearch(std::vector<letter_type> const&              atoms,
                      std::map<letter_type, std::vector<letter_type>> cand)
          : atoms_(atoms), cand_(std::move(cand)) {}

      std::size_t run() {
        assign(0);
        return count_;
      }
      std::map<letter_type, letter_type> const& first() const {
        return first_;
      }

     private:
      void assign(std::size_t i) {
        if (count_ >= bijection_count_limit) {
          return;
        }
        if (i == atoms_.size()) {
          if (count_++ == 0) {
            first_ = current_;
          }
          return;
        }
        auto s = atoms_[i];
        for (auto x : cand_[s]) {
          if (used_.count(x) != 0) {
            continue;
          }
          used_.insert(x);
          current_[s] = x;
          assign(i + 1);
          current_.erase(s);
          used_.erase(x);
        }
      }

      std::vector<letter_type> const&                 atoms_;
      std::map<letter_type, std::vector<letter_type>> cand_;
      std::map<letter_type, letter_type>              current_;
      std::map<letter_type, letter_type>              first_;
      std::set<letter_type>                           used_;
      std::size_t                                     count_ = 0;
    };

    std::size_t permutation_order(std::map<letter_type, letter_type> const& sigma) {
      std::size_t           order = 1;
      std::set<letter_type> seen;
      for (auto const& [start, _] : sigma) {
        if (seen.count(start) != 0) {
          continue;
        }
        std::size_t len = 0;
        auto        x   = start;
        do {
          seen.insert(x);
          x = sigma.at(x);
          ++len;
        } while (x != start);
        order = std::lcm(order, len);
      }
      return order;
    }

  }  // namespace

  FundamentalVerdict verify_fundamental(WordProblem& wp, word_type const& delta) {
    auto const&        p = wp.presentation();
    FundamentalVerdict verdict;
    p.validate(delta);
    if (delta.empty()) {
      verdict.reason = "the empty word is never fundamental";
      return verdict;
    }
    auto const atom_of = atom_map(p);
    auto const atom_reps = atoms(p);

    // Left quotients Δ = s·q and right quotients Δ = q·x, by atom.
    std::map<letter_type, std::set<word_type>> left_q, right_q;
    auto const                                 cls = wp.class_of(delta);
    for (auto const& m : cls->members) {
      left_q[atom_of[m.front()]].insert(
          wp.canonical(word_type(m.begin() + 1, m.end())));
      right_q[atom_of[m.back()]].insert(
          wp.canonical(word_type(m.begin(), m.end() - 1)));
    }

    std::map<letter_type, std::vector<letter_type>> cand;
    for (auto s : atom_reps) {
      auto const& lq = left_q[s];
      if (lq.empty()) {
        verdict.failing_atom = s;
        verdict.reason = "atom " + p.alphabet().name(s)
                         + " does not left-divide the word";
        return verdict;
      }
      for (auto x : atom_reps) {
        auto const& rq = right_q[x];
        bool        meet = std::any_of(lq.begin(), lq.end(), [&rq](auto const& q) {
          return rq.count(q) != 0;
        });
        if (meet) {
          cand[s].push_back(x);
        }
      }
      if (cand[s].empty()) {
        verdict.failing_atom = s;
        verdict.reason       = "no letter x with Δ ≐ Δ_s·x for atom "
                         + p.alphabet().name(s);
        return verdict;
      }
    }

    BijectionSearch search(atom_reps, cand);
    std::size_t     found = search.run();
    if (found == 0) {
      verdict.reason = "the candidate images admit no bijection of the atoms";
      return verdict;
    }

    FundamentalCertificate cert;
    cert.delta           = delta;
    cert.atoms           = atom_reps;
    cert.atom_of         = atom_of;
    cert.sigma           = search.first();
    cert.bijection_count = found;
    cert.order           = permutation_order(cert.sigma);
    for (auto s : atom_reps) {
      auto const& rq = right_q[cert.sigma[s]];
      for (auto const& q : left_q[s]) {  // ascending, so the least shared one
        if (rq.count(q) != 0) {
          cert.quotients[s] = q;
          break;
        }
      }
    }
    verdict.certificate = std::move(cert);
    return verdict;
  }

  FundamentalVerdict verify_fundamental(word_type const&    delta,
                                        Presentation const& p,
                                        std::size_t         cap) {
    WordProblem wp(p, cap);
    return verify_fundamental(wp, delta);
  }

  GarsideReport verify_garside(WordProblem& wp, word_type const& delta) {
    auto const&   p = wp.presentation();
    GarsideReport report;
    p.validate(delta);
    auto const cls = wp.class_of(delta);
    for (auto const& m : cls->members) {
      for (std::size_t k = 0; k <= m.size(); ++k) {
        report.left_divisors.push_back(
            wp.canonical(word_type(m.begin(), m.begin() + k)));
        report.right_divisors.push_back(
            wp.canonical(word_type(m.end() - k, m.end())));
      }
    }
    shortlex_sort_unique(report.left_divisors);
    shortlex_sort_unique(report.right_divisors);
    report.coincide = report.left_divisors == report.right_divisors;

    report.generate = true;
    for (auto s : atoms(p)) {
      word_type atom{s};
      auto      in = [&atom](std::vector<word_type> const& v) {
        return std::binary_search(v.begin(), v.end(), atom, shortlex_less);
      };
      if (!in(report.left_divisors) && !in(report.right_divisors)) {
        report.generate = false;
        break;
      }
    }
    report.is_garside = report.coincide && report.generate;
    return report;
  }

  GarsideReport verify_garside(word_type const&    delta,
                               Presentation const& p,
                               std::size_t         cap) {
    WordProblem wp(p, cap);
    return verify_garside(wp, delta);
  }

  FundamentalGarsideCheck cross_check_fundamental_garside(WordProblem&     wp,
                                                          word_type const& delta) {
    FundamentalGarsideCheck check;
    check.fundamental = static_cast<bool>(verify_fundamental(wp, delta));
    check.garside     = verify_garside(wp, delta).is_garside;
    check.consistent  = check.fundamental == check.garside;
    return check;
  }

}  // namespace posmon
