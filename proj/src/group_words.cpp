#include "posmon/group_words.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "posmon/cancel.hpp"

namespace posmon {

  namespace {
    constexpr std::string_view epsilon_utf8 = "\xce\xb5";

    letter_type lookup(std::string_view tok, Alphabet const& alphabet) {
      if (!Alphabet::valid_name(tok)) {
        throw ParseError("malformed token \"" + std::string(tok) + "\"", 0, 0);
      }
      auto x = alphabet.find(tok);
      if (!x) {
        throw ParseError("unknown letter \"" + std::string(tok) + "\"", 0, 0);
      }
      return *x;
    }

    SignedLetter parse_token(std::string_view tok, Alphabet const& alphabet) {
      bool inv = !tok.empty() && tok.back() == '~';
      if (inv) {
        tok.remove_suffix(1);
      }
      return {lookup(tok, alphabet), inv};
    }
  }  // namespace

  signed_word to_signed(word_type const& w) {
    signed_word out;
    out.reserve(w.size());
    for (auto x : w) {
      out.push_back({x, false});
    }
    return out;
  }

  signed_word inverse(signed_word const& w) {
    signed_word out(w.rbegin(), w.rend());
    for (auto& e : out) {
      e.inverse = !e.inverse;
    }
    return out;
  }

  signed_word concat(signed_word const& u, signed_word const& v) {
    signed_word out(u);
    out.insert(out.end(), v.begin(), v.end());
    return out;
  }

  signed_word parse_signed_word(std::string_view text, Alphabet const& alphabet) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
      text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
      text.remove_suffix(1);
    }
    signed_word w;
    if (text.empty() || text == epsilon_utf8) {
      return w;
    }
    if (text.find('.') != std::string_view::npos) {
      std::size_t start = 0;
      while (true) {
        auto dot = text.find('.', start);
        auto len = dot == std::string_view::npos ? std::string_view::npos
                                                 : dot - start;
        w.push_back(parse_token(text.substr(start, len), alphabet));
        if (dot == std::string_view::npos) {
          break;
        }
        start = dot + 1;
      }
    } else if (alphabet.single_char()) {
      for (char c : text) {
        if (c == '~') {
          if (w.empty() || w.back().inverse) {
            throw ParseError("misplaced '~' in \"" + std::string(text) + "\"",
                             0,
                             0);
          }
          w.back().inverse = true;
        } else {
          w.push_back({lookup(std::string_view(&c, 1), alphabet), false});
        }
      }
    } else {
      w.push_back(parse_token(text, alphabet));
    }
    return w;
  }

  std::string format_signed_word(signed_word const& w, Alphabet const& alphabet) {
    if (w.empty()) {
      return std::string(epsilon_utf8);
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0 && !alphabet.single_char()) {
        out += '.';
      }
      out += alphabet.name(w[i].letter);
      if (w[i].inverse) {
        out += '~';
      }
    }
    return out;
  }

  signed_word free_reduce(signed_word const& w) {
    signed_word out;
    for (auto const& e : w) {
      if (!out.empty() && out.back().letter == e.letter
          && out.back().inverse != e.inverse) {
        out.pop_back();
      } else {
        out.push_back(e);
      }
    }
    return out;
  }

  word_type lambda(FundamentalCertificate const& cert) {
    return power(cert.delta, cert.order);
  }

  LiftResult positive_lift(signed_word const&            w,
                           FundamentalCertificate const& cert,
                           WordProblem&                  wp) {
    auto const& p = wp.presentation();
    // canonical left divisor of Δ -> a quotient completing it to Δ
    std::map<word_type, word_type> divisors;
    for (auto const& m : wp.class_of(cert.delta)->members) {
      for (std::size_t i = 1; i <= m.size(); ++i) {
        divisors.try_emplace(wp.canonical(word_type(m.begin(), m.begin() + i)),
                             word_type(m.begin() + i, m.end()));
      }
    }
    auto const tail = power(cert.delta, cert.order - 1);
    LiftResult result;
    auto emit = [&](word_type const& q) {
      ++result.k;
      result.positive.insert(result.positive.end(), q.begin(), q.end());
      result.positive.insert(result.positive.end(), tail.begin(), tail.end());
    };

    auto const reduced = free_reduce(w);
    for (std::size_t i = 0; i < reduced.size();) {
      if (reduced[i].letter >= p.alphabet().size()) {
        throw Error("letter outside the alphabet");
      }
      if (!reduced[i].inverse) {
        result.positive.push_back(reduced[i++].letter);
        continue;
      }
      std::size_t j = i;
      while (j < reduced.size() && reduced[j].inverse) {
        if (reduced[j].letter >= p.alphabet().size()) {
          throw Error("letter outside the alphabet");
        }
        ++j;
      }
      word_type big_w;
      for (std::size_t r = j; r-- > i;) {
        big_w.push_back(reduced[r].letter);
      }
      // chunks of W in order; their inverses are emitted last chunk first
      std::vector<word_type> quotients;
      for (std::size_t a = 0; a < big_w.size();) {
        std::size_t best = 1;
        word_type   quotient = cert.quotient(big_w[a]);
        for (std::size_t b = a + 2; b <= big_w.size(); ++b) {
          auto it = divisors.find(
              wp.canonical(word_type(big_w.begin() + a, big_w.begin() + b)));
          if (it == divisors.end()) {
            break;
          }
          best     = b - a;
          quotient = it->second;
        }
        quotients.push_back(std::move(quotient));
        a += best;
      }
      for (auto it = quotients.rbegin(); it != quotients.rend(); ++it) {
        emit(*it);
      }
      i = j;
    }
    return result;
  }

  std::string_view basis_name(InjectivityBasis b) {
    switch (b) {
      case InjectivityBasis::proven:
        return "proven";
      case InjectivityBasis::empirical:
        return "empirical";
      case InjectivityBasis::assumed:
        return "assumed";
    }
    return {};
  }

  InjectivityBasis injectivity_basis(Presentation const&      p,
                                     GroupEqualOptions const& options,
                                     std::size_t              cap) {
    if (p.proven_cancellative()) {
      return InjectivityBasis::proven;
    }
    if (options.assume_injective) {
      return InjectivityBasis::assumed;
    }
    if (search_failures(p, options.empirical_bound, cap).empty()) {
      return InjectivityBasis::empirical;
    }
    throw InjectivityNotEstablished();
  }

  GroupEquality group_equal(WordProblem&                  wp,
                            FundamentalCertificate const& cert,
                            signed_word const&            w1,
                            signed_word const&            w2,
                            GroupEqualOptions const&      options) {
    auto const& p = wp.presentation();
    GroupEquality result;
    result.basis = injectivity_basis(p, options, wp.cap());

    auto a   = positive_lift(w1, cert, wp);
    auto b   = positive_lift(w2, cert, wp);
    result.k = std::max(a.k, b.k);
    auto const big_lambda = lambda(cert);
    result.lhs = concat(power(big_lambda, result.k - a.k), a.positive);
    result.rhs = concat(power(big_lambda, result.k - b.k), b.positive);
    result.equal = wp.equal(result.lhs, result.rhs);
    return result;
  }

  std::vector<word_type> center_scan(WordSpace const& space, std::size_t bound) {
    if (bound + 1 > space.max_length()) {
      throw Error("center scan needs the word space to cover bound + 1");
    }
    auto const sigma = space.alphabet_size();
    std::vector<word_type> out;
    for (std::size_t n = 0; n <= bound; ++n) {
      auto const classes = space.classes(n);
      auto const count   = static_cast<std::int64_t>(classes.size());
      std::vector<char> central(classes.size(), 0);
      std::uint64_t const high = space.power(n);
#pragma omp parallel for schedule(static)
      for (std::int64_t k = 0; k < count; ++k) {
        std::uint64_t const c  = classes[k];
        bool                ok = true;
        for (std::uint64_t g = 0; g < sigma && ok; ++g) {
          ok = space.label(n + 1, static_cast<index_type>(c * sigma + g))
               == space.label(n + 1, static_cast<index_type>(g * high + c));
        }
        central[k] = ok;
      }
      for (std::size_t k = 0; k < classes.size(); ++k) {
        if (central[k]) {
          out.push_back(space.word_at(n, classes[k]));
        }
      }
    }
    return out;
  }

  std::vector<word_type> center_scan(Presentation const& p,
                                     std::size_t         bound,
                                     std::size_t         cap) {
    WordSpace space(p, bound + 1, cap);
    return center_scan(space, bound);
  }

}  // namespace posmon
