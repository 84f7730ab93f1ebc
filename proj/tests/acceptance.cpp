// Acceptance suite: one PASS/FAIL line per criterion, each against its time
// limit. Exits nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "posmon/cancel.hpp"
#include "posmon/cli.hpp"
#include "posmon/divisibility.hpp"
#include "posmon/garside.hpp"
#include "posmon/gmn.hpp"
#include "posmon/group_words.hpp"
#include "posmon/rewrite.hpp"

#include "properties.hpp"

using posmon::word_type;
using json = nlohmann::ordered_json;

namespace {

  // A criterion fills detail with a one-line explanation when it fails.
  struct Criterion {
    std::string                         name;
    double                              limit_s;
    std::function<bool(std::string&)> body;
  };

  json cli_json(std::vector<std::string> args, int& code) {
    args.insert(args.begin(), "--json");
    std::ostringstream out, err;
    code = posmon::cli::run(args, out, err);
    return json::parse(out.str());
  }

  std::string fixture_path(std::string const& name) {
    return std::string(POSMON_FIXTURE_DIR) + "/" + name;
  }

  bool expect(bool ok, std::string& detail, std::string const& what) {
    if (!ok && detail.empty()) {
      detail = what;
    }
    return ok;
  }

  bool equation_pair(posmon::Presentation const& p,
                     std::string const&          lhs,
                     std::string const&          rhs,
                     std::string const&          clhs,
                     std::string const&          crhs,
                     std::string&                detail) {
    posmon::WordProblem wp(p);
    auto const&         a = p.alphabet();
    auto c = posmon::verify_claim(wp,
                                  posmon::parse_word(lhs, a),
                                  posmon::parse_word(rhs, a),
                                  posmon::parse_word(clhs, a),
                                  posmon::parse_word(crhs, a));
    bool ok = expect(c.holds, detail, lhs + " = " + rhs + " does not hold");
    return expect(!c.cancelled_holds, detail, clhs + " = " + crhs + " holds") && ok;
  }

  bool m6_non_cancellative(std::string& detail) {
    int  code  = 0;
    auto claim = cli_json({"claim", "M6", "--k", "1"}, code);
    bool ok    = expect(code == 0, detail, "claim exited with " + std::to_string(code));
    bool found_claim = false;
    for (auto const& c : claim["result"]["claims"]) {
      if (c["lhs"] == json::array({"c", "d", "e", "a", "f"})
          && c["rhs"] == json::array({"c", "e", "a", "f", "d"})) {
        found_claim = c["holds"] == true && c["cancelled_holds"] == false
                      && c["cancelled_lhs"] == json::array({"d", "e", "a", "f"})
                      && c["cancelled_rhs"] == json::array({"e", "a", "f", "d"});
      }
    }
    ok = expect(found_claim, detail, "cdeaf = ceafd / deaf = eafd not reproduced") && ok;

    auto search = cli_json({"cancel-search", fixture_path("M6"), "--max-len", "5"}, code);
    ok = expect(code == 0, detail, "cancel-search exited with " + std::to_string(code)) && ok;
    bool found = false;
    for (auto const& f : search["result"]["failures"]) {
      found = found
              || (f["side"] == "left" && f["context"] == json::array({"c"})
                  && f["x"] == json::array({"d", "e", "a", "f"})
                  && f["y"] == json::array({"e", "a", "f", "d"}));
    }
    return expect(found, detail, "failure (left, c, deaf, eafd) not reported") && ok;
  }

  bool m6p_claims(std::string& detail) {
    return equation_pair(posmon::fixture(posmon::Fixture::M6p),
                         "dbcefa", "dbefac", "cefa", "efac", detail);
  }

  bool m6p_completed_claims(std::string& detail) {
    auto const p  = posmon::fixture(posmon::Fixture::M6p_completed);
    bool       ok = true;
    for (std::size_t k = 1; k <= 2; ++k) {
      std::string const e(k, 'e');
      ok = equation_pair(p,
                         "acd" + e + "eabf",
                         "d" + e + "aabcef",
                         "acd" + e + "eab",
                         "d" + e + "aabce",
                         detail)
           && ok;
    }
    return ok;
  }

  bool gmn_cancellative_to_5(std::string& detail) {
    bool ok = true;
    for (auto [m, n] : {std::pair{2, 2}, std::pair{3, 2}}) {
      int  code = 0;
      auto j    = cli_json({"gmn", "--m", std::to_string(m), "--n", std::to_string(n),
                            "--run", "cancel-search", "--max-len", "5"},
                           code);
      auto const tag = "G_{" + std::to_string(m) + "," + std::to_string(n) + "}";
      ok = expect(code == 0 && j["result"]["failures"].empty(),
                  detail,
                  tag + ": " + std::to_string(j["result"]["failures"].size())
                      + " failure(s)")
           && ok;
    }
    return ok;
  }

  bool fundamental_elements(std::string& detail) {
    auto ctx = posmon::build_gmn(2, 2);
    posmon::WordProblem wp(ctx.presentation);
    auto v  = posmon::verify_fundamental(wp, ctx.delta);
    bool ok = expect(static_cast<bool>(v), detail, "G_{2,2}: " + v.reason);
    if (v) {
      bool identity = true;
      for (auto [x, y] : v.certificate->sigma) {
        identity = identity && x == y;
      }
      ok = expect(identity && v.certificate->order == 1,
                  detail,
                  "G_{2,2}: sigma is not the identity of order 1")
           && ok;
    }
    auto m6 = posmon::fixture(posmon::Fixture::M6);
    auto w  = posmon::verify_fundamental(posmon::parse_word("abcdef", m6.alphabet()), m6);
    return expect(static_cast<bool>(w), detail, "M6: " + w.reason) && ok;
  }

  bool fundamental_garside_consistency(std::string& detail) {
    auto ctx = posmon::build_gmn(2, 2);
    posmon::WordProblem wp(ctx.presentation);
    std::vector<word_type> deltas{ctx.delta, {}};
    std::mt19937_64        rng(2024);
    for (int i = 0; i < 20; ++i) {
      deltas.push_back(props::random_word(rng, 5, 1, 5));
    }
    bool ok = true;
    for (auto const& d : deltas) {
      auto c = posmon::cross_check_fundamental_garside(wp, d);
      ok     = expect(c.consistent,
                  detail,
                  "inconsistent at " + posmon::format_word(d, ctx.presentation.alphabet()))
           && ok;
    }
    return ok;
  }

  bool mcm_without_lcm(std::string& detail) {
    auto ctx = posmon::build_gmn(2, 2);
    posmon::WordProblem wp(ctx.presentation);
    auto rep = posmon::mcm_r({{ctx.t(1)}, {ctx.t(2)}}, ctx.presentation, 4);
    std::vector<word_type> expected{
        wp.canonical(ctx.delta1),
        wp.canonical(posmon::concat(word_type{ctx.u(1)}, ctx.delta1)),
        wp.canonical(posmon::concat(word_type{ctx.u(2)}, ctx.delta1))};
    std::sort(expected.begin(), expected.end());
    auto minimal = rep.minimal;
    std::sort(minimal.begin(), minimal.end());
    bool ok = expect(minimal == expected, detail, "minimal multiples differ");
    ok      = expect(!rep.lcm_up_to_bound, detail, "an lcm was reported") && ok;

    // the predicted family w(u).delta1 with w(u) reduced, |w(u)| <= 1
    std::vector<word_type> predicted;
    for (word_type const& w :
         {word_type{}, word_type{ctx.u(1)}, word_type{ctx.u(2)}}) {
      if (posmon::is_reduced_modulo_full_run(ctx, posmon::Family::u, w)) {
        predicted.push_back(wp.canonical(posmon::concat(w, ctx.delta1)));
      }
    }
    std::sort(predicted.begin(), predicted.end());
    return expect(minimal == predicted, detail, "prediction differs") && ok;
  }

  bool group_equalities(std::string& detail) {
    auto ctx = posmon::build_gmn(2, 2);
    posmon::WordProblem wp(ctx.presentation);
    auto const&         a    = ctx.presentation.alphabet();
    auto const          cert = *posmon::verify_fundamental(wp, ctx.delta).certificate;
    auto eq = [&](std::string const& w) {
      return posmon::group_equal(wp, cert, posmon::parse_signed_word(w, a), {}).equal;
    };
    bool ok = expect(eq("t1.u1.t1~.u1~"), detail, "t1 and u1 do not commute");
    ok      = expect(!eq("t1.t2.t1~.t2~"), detail, "t1 and t2 commute") && ok;
    auto const d  = posmon::format_word(ctx.delta, a);
    std::string di;
    for (auto it = ctx.delta.rbegin(); it != ctx.delta.rend(); ++it) {
      di += (di.empty() ? "" : ".") + a.name(*it) + "~";
    }
    for (std::size_t g = 0; g < a.size(); ++g) {
      auto const& name = a.name(static_cast<posmon::letter_type>(g));
      ok = expect(eq(d + "." + name + "." + di + "." + name + "~"),
                  detail,
                  "delta does not commute with " + name)
           && ok;
    }
    return ok;
  }

  bool center_is_delta(std::string& detail) {
    auto ctx = posmon::build_gmn(2, 2);
    posmon::WordProblem wp(ctx.presentation);
    auto central = posmon::center_scan(ctx.presentation, 5);
    std::vector<word_type> non_empty;
    for (auto const& c : central) {
      if (!c.empty()) {
        non_empty.push_back(c);
      }
    }
    bool ok = expect(non_empty == std::vector<word_type>{wp.canonical(ctx.delta)},
                     detail,
                     std::to_string(non_empty.size()) + " non-empty central class(es)");
    for (auto const& c : non_empty) {
      ok = expect(posmon::left_divides(wp, ctx.delta, c).divides,
                  detail,
                  "a central element is not divisible by delta")
           && ok;
    }
    return ok;
  }

  bool lemma_cases(std::string& detail) {
    auto ctx = posmon::build_gmn(2, 2);
    bool ok  = true;
    for (auto c : {posmon::LemmaCase::letter_cancel, posmon::LemmaCase::t_u_swap}) {
      auto res = posmon::check_lemma_case(ctx, c, 4);
      auto tag = std::string(posmon::lemma_case_name(c));
      ok       = expect(res.instances > 0, detail, "case " + tag + ": no instances") && ok;
      ok       = expect(res.violations.empty(),
                  detail,
                  "case " + tag + ": " + std::to_string(res.violations.size())
                      + " violation(s)")
           && ok;
    }
    return ok;
  }

  bool invariant_suites(std::string& detail) {
    std::mt19937_64                   rng(11);
    std::vector<props::Outcome>       outcomes;
    std::vector<posmon::Presentation> fixtures{
        posmon::fixture(posmon::Fixture::M6),
        posmon::fixture(posmon::Fixture::M6p),
        posmon::fixture(posmon::Fixture::M6p_completed),
        posmon::build_gmn(2, 2).presentation};
    for (auto const& p : fixtures) {
      posmon::WordProblem wp(p);
      outcomes.push_back(props::multiset_conservation(wp, rng, 1000, 7));
      outcomes.push_back(props::equivalence_laws(wp, rng, 200, 6));
      outcomes.push_back(props::congruence(wp, rng, 200, 5));
      outcomes.push_back(props::divisibility_transitivity(wp, rng, 200, 5));
    }
    auto ctx = posmon::build_gmn(2, 2);
    posmon::WordProblem wp(ctx.presentation);
    outcomes.push_back(props::mirror_laws(ctx, wp, rng, 500, 7));
    auto cert = *posmon::verify_fundamental(wp, ctx.delta).certificate;
    outcomes.push_back(props::padding_invariance(wp, cert, rng, 300));

    bool ok = true;
    for (auto const& o : outcomes) {
      ok = expect(o.ok(),
                  detail,
                  o.name + ": " + std::to_string(o.failures) + " of "
                      + std::to_string(o.checked) + " failed, first: " + o.first_failure)
           && ok;
    }
    return ok;
  }

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {"M6 is not cancellative", 10, m6_non_cancellative},
      {"M6p claims", 10, m6p_claims},
      {"M6p_completed claims at k = 1, 2", 60, m6p_completed_claims},
      {"G_{2,2} and G_{3,2} cancellative up to length 5", 120, gmn_cancellative_to_5},
      {"fundamental elements of G_{2,2} and M6", 10, fundamental_elements},
      {"fundamental and Garside agree on G_{2,2}", 60, fundamental_garside_consistency},
      {"mcm of t1, t2 in G_{2,2} has no lcm", 60, mcm_without_lcm},
      {"group equalities in G_{2,2}", 30, group_equalities},
      {"central classes of G_{2,2} up to length 5", 120, center_is_delta},
      {"lemma cases i and ii on G_{2,2} at length 4", 120, lemma_cases},
      {"invariant suites", 120, invariant_suites}};

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto const& c      = criteria[i];
    std::string detail;
    bool        ok     = false;
    auto const  start  = std::chrono::steady_clock::now();
    try {
      ok = c.body(detail);
    } catch (std::exception const& e) {
      detail = std::string("exception: ") + e.what();
    }
    double const secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    if (ok && secs > c.limit_s) {
      ok     = false;
      detail = "over the time limit of " + std::to_string(c.limit_s) + " s";
    }
    failed += !ok;
    std::printf("%s [%zu] %s (%.2f s)%s%s\n",
                ok ? "PASS" : "FAIL",
                i + 1,
                c.name.c_str(),
                secs,
                ok ? "" : ": ",
                ok ? "" : detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
