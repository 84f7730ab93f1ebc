#include "posmon/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "posmon/cancel.hpp"
#include "posmon/divisibility.hpp"
#include "posmon/garside.hpp"
#include "posmon/gmn.hpp"
#include "posmon/group_words.hpp"
#include "posmon/report.hpp"
#include "posmon/rewrite.hpp"

namespace posmon::cli {

  namespace {

    class UsageError : public Error {
     public:
      using Error::Error;
    };

    std::string join(std::vector<std::string> const& args) {
      std::string out;
      for (auto const& a : args) {
        if (!out.empty()) {
          out += ' ';
        }
        out += a;
      }
      return out;
    }

    std::optional<std::pair<std::size_t, std::size_t>>
    parse_gmn_source(std::string const& source) {
      if (source.rfind("gmn:", 0) != 0) {
        return std::nullopt;
      }
      auto const body  = source.substr(4);
      auto const comma = body.find(',');
      try {
        if (comma == std::string::npos) {
          throw std::invalid_argument("missing comma");
        }
        std::size_t used = 0;
        auto        m    = std::stoul(body.substr(0, comma), &used);
        if (used != comma) {
          throw std::invalid_argument("trailing characters");
        }
        auto rest = body.substr(comma + 1);
        auto n    = std::stoul(rest, &used);
        if (used != rest.size()) {
          throw std::invalid_argument("trailing characters");
        }
        return std::make_pair(m, n);
      } catch (std::logic_error const&) {
        throw UsageError("malformed source \"" + source + "\", expected gmn:M,N");
      }
    }

    bool shortlex_less(word_type const& a, word_type const& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    }

    ////////////////////////////////////////////////////////////////////////
    // Invocation state
    ////////////////////////////////////////////////////////////////////////

    struct Invocation {
      Report             report;
      std::ostringstream text;
      std::size_t        cap = default_cap;

      Presentation const& load(std::string const& source) {
        presentation = load_presentation(source);
        report.presentation_sha = presentation_sha(presentation);
        report.bounds["cap"]    = cap;
        return presentation;
      }
      Alphabet const& alphabet() const {
        return presentation.alphabet();
      }
      word_type word(std::string const& text) const {
        return parse_word(text, alphabet());
      }
      std::string fmt(word_type const& w) const {
        return format_word(w, alphabet());
      }
      json tok(word_type const& w) const {
        return tokens(w, alphabet());
      }
      json tok(std::vector<word_type> const& ws) const {
        return tokens(ws, alphabet());
      }
      std::string fmt_list(std::vector<word_type> const& ws) const {
        std::string out = "{";
        for (std::size_t i = 0; i < ws.size(); ++i) {
          out += (i == 0 ? "" : ", ") + fmt(ws[i]);
        }
        return out + "}";
      }

      Presentation presentation;
    };

    ////////////////////////////////////////////////////////////////////////
    // Subcommands
    ////////////////////////////////////////////////////////////////////////

    void cmd_parse(Invocation& inv, std::string const& file) {
      auto const& p = inv.load(file);
      json        rel = json::array();
      for (auto const& r : p.relations()) {
        rel.push_back({inv.tok(r.lhs), inv.tok(r.rhs)});
      }
      json dummies = json::array();
      for (auto x : p.flags().dummy_letters) {
        dummies.push_back(p.alphabet().name(x));
      }
      inv.report.result = {{"generators", p.alphabet().names()},
                           {"relations", rel},
                           {"homogeneous", p.homogeneous()},
                           {"letter_balanced", p.letter_balanced()},
                           {"dummy_letters", dummies}};
      inv.text << to_text(p) << "# " << p.alphabet().size() << " generators, "
               << p.relations().size() << " relation pairs\n"
               << "# homogeneous: " << p.homogeneous()
               << ", letter-balanced: " << p.letter_balanced()
               << ", dummy letters: " << dummies.size() << "\n";
    }

    void cmd_class(Invocation& inv, std::string const& file, std::string const& w) {
      inv.load(file);
      WordProblem wp(inv.presentation, inv.cap);
      auto        cls = wp.class_of(inv.word(w));
      inv.report.result = {{"canonical", inv.tok(cls->canonical)},
                           {"size", cls->size()},
                           {"members", inv.tok(cls->members)}};
      inv.text << "canonical: " << inv.fmt(cls->canonical) << "\n"
               << "size: " << cls->size() << "\n";
      for (auto const& m : cls->members) {
        inv.text << "  " << inv.fmt(m) << "\n";
      }
    }

    void cmd_equal(Invocation&        inv,
                   std::string const& file,
                   std::string const& u,
                   std::string const& v) {
      inv.load(file);
      WordProblem wp(inv.presentation, inv.cap);
      bool        eq = wp.equal(inv.word(u), inv.word(v));
      inv.report.result = eq;
      inv.text << (eq ? "true" : "false") << "\n";
    }

    void cmd_divides(Invocation&        inv,
                     std::string const& side,
                     std::string const& file,
                     std::string const& u,
                     std::string const& v) {
      inv.load(file);
      WordProblem wp(inv.presentation, inv.cap);
      auto        res = side == "left" ? left_divides(wp, inv.word(u), inv.word(v))
                                       : right_divides(wp, inv.word(u), inv.word(v));
      inv.report.result = {{"side", side},
                           {"divides", res.divides},
                           {"quotients", inv.tok(res.quotients)}};
      inv.text << "divides: " << (res.divides ? "true" : "false") << "\n";
      for (auto const& q : res.quotients) {
        inv.text << "  quotient " << inv.fmt(q) << "\n";
      }
    }

    void cmd_mcm(Invocation&                     inv,
                 std::string const&              file,
                 std::size_t                     max_len,
                 std::vector<std::string> const& words) {
      inv.load(file);
      inv.report.bounds["max_len"] = max_len;
      std::vector<word_type> J;
      for (auto const& w : words) {
        J.push_back(inv.word(w));
      }
      auto rep = mcm_r(J, inv.presentation, max_len, inv.cap);
      inv.report.result
          = {{"common_multiples", inv.tok(rep.common_multiples)},
             {"minimal", inv.tok(rep.minimal)},
             {"lcm_up_to_bound",
              rep.lcm_up_to_bound ? inv.tok(*rep.lcm_up_to_bound) : json(nullptr)}};
      inv.text << "common multiples (length <= " << max_len
               << "): " << rep.common_multiples.size() << "\n"
               << "minimal: " << inv.fmt_list(rep.minimal) << "\n"
               << "lcm up to bound: "
               << (rep.lcm_up_to_bound ? inv.fmt(*rep.lcm_up_to_bound) : "none")
               << "\n";
    }

    json certificate_json(Invocation const& inv, FundamentalVerdict const& v) {
      json j = {{"fundamental", static_cast<bool>(v)}};
      if (!v) {
        j["reason"]       = v.reason;
        j["failing_atom"] = v.failing_atom ? json(inv.alphabet().name(*v.failing_atom))
                                           : json(nullptr);
        return j;
      }
      auto const& c     = *v.certificate;
      json        sigma = json::object(), quot = json::object();
      for (auto const& [s, x] : c.sigma) {
        sigma[inv.alphabet().name(s)] = inv.alphabet().name(x);
      }
      for (auto const& [s, q] : c.quotients) {
        quot[inv.alphabet().name(s)] = inv.tok(q);
      }
      j["sigma"]           = sigma;
      j["quotients"]       = quot;
      j["order"]           = c.order;
      j["bijection_count"] = c.bijection_count;
      return j;
    }

    void cmd_fundamental(Invocation&        inv,
                         std::string const& file,
                         std::string const& w) {
      inv.load(file);
      WordProblem wp(inv.presentation, inv.cap);
      auto        v = verify_fundamental(wp, inv.word(w));
      inv.report.result = certificate_json(inv, v);
      if (!v) {
        inv.text << "not fundamental: " << v.reason << "\n";
        return;
      }
      auto const& c = *v.certificate;
      inv.text << "fundamental: true\norder: " << c.order
               << "\nbijections: " << c.bijection_count << "\n";
      for (auto const& [s, x] : c.sigma) {
        inv.text << "  " << inv.alphabet().name(s) << " -> "
                 << inv.alphabet().name(x) << ", quotient "
                 << inv.fmt(c.quotients.at(s)) << "\n";
      }
    }

    void cmd_garside(Invocation& inv, std::string const& file, std::string const& w) {
      inv.load(file);
      WordProblem wp(inv.presentation, inv.cap);
      auto const  delta = inv.word(w);
      auto        rep   = verify_garside(wp, delta);
      auto        cross = cross_check_fundamental_garside(wp, delta);
      inv.report.result = {{"left_divisors", inv.tok(rep.left_divisors)},
                           {"right_divisors", inv.tok(rep.right_divisors)},
                           {"coincide", rep.coincide},
                           {"generate", rep.generate},
                           {"is_garside", rep.is_garside},
                           {"fundamental", cross.fundamental},
                           {"consistent", cross.consistent}};
      inv.text << "left divisors: " << rep.left_divisors.size()
               << "\nright divisors: " << rep.right_divisors.size()
               << "\ncoincide: " << rep.coincide << "\ngenerate: " << rep.generate
               << "\ngarside: " << rep.is_garside
               << "\nfundamental: " << cross.fundamental
               << "\nconsistent: " << cross.consistent << "\n";
    }

    void cmd_cancel_search(Invocation&        inv,
                           std::string const& file,
                           std::size_t        max_len,
                           std::string const& kernel) {
      inv.load(file);
      inv.report.bounds["max_len"] = max_len;
      std::vector<CancellationFailure> fs;
      if (kernel == "reference") {
        WordProblem wp(inv.presentation, inv.cap);
        fs = reference::search_failures(wp, max_len);
      } else {
        fs = search_failures(inv.presentation,
                             max_len,
                             inv.cap,
                             kernel == "serial" ? Kernel::serial : Kernel::parallel);
      }
      json list = json::array();
      for (auto const& f : fs) {
        list.push_back({{"side", side_name(f.side)},
                        {"context", inv.tok(f.context)},
                        {"x", inv.tok(f.x)},
                        {"y", inv.tok(f.y)}});
        inv.text << side_name(f.side) << " " << inv.fmt(f.context) << " "
                 << inv.fmt(f.x) << " " << inv.fmt(f.y) << "\n";
      }
      inv.report.result = {{"failures", list}};
      inv.text << fs.size() << " failure(s) up to length " << max_len << "\n";
    }

    ////////////////////////////////////////////////////////////////////////
    // claim
    ////////////////////////////////////////////////////////////////////////

    struct EquationFamily {
      std::string name;
      // the equation and the equation left after cancelling one letter
      std::vector<std::string> sides;
    };

    std::string rep(char c, std::size_t k) {
      return std::string(k, c);
    }

    std::vector<EquationFamily> m6_families(std::size_t k) {
      return {{"left c", {"cde" + rep('a', k) + "f", "ce" + rep('a', k) + "fd",
                          "de" + rep('a', k) + "f", "e" + rep('a', k) + "fd"}},
              {"right c", {"bf" + rep('e', k) + "ac", "f" + rep('e', k) + "abc",
                           "bf" + rep('e', k) + "a", "f" + rep('e', k) + "ab"}},
              {"right b", {"ce" + rep('f', k) + "ab", "e" + rep('f', k) + "acb",
                           "ce" + rep('f', k) + "a", "e" + rep('f', k) + "ac"}}};
    }

    std::vector<EquationFamily> m6p_families() {
      return {{"left db", {"dbcefa", "dbefac", "cefa", "efac"}}};
    }

    std::vector<EquationFamily> m6p_completed_families(std::size_t k) {
      return {{"right f",
               {"acd" + rep('e', k + 1) + "abf", "d" + rep('e', k) + "aabcef",
                "acd" + rep('e', k + 1) + "ab", "d" + rep('e', k) + "aabce"}},
              {"right b",
               {"cef" + rep('a', k + 1) + "cdb", "f" + rep('a', k) + "ccdeab",
                "cef" + rep('a', k + 1) + "cd", "f" + rep('a', k) + "ccdea"}},
              {"right d",
               {"eab" + rep('c', k + 1) + "efd", "b" + rep('c', k) + "eefacd",
                "eab" + rep('c', k + 1) + "ef", "b" + rep('c', k) + "eefac"}}};
    }

    json run_equation_claim(Invocation&                        inv,
                            std::string const&                 id,
                            std::vector<EquationFamily> const& families,
                            bool&                              all) {
      WordProblem wp(inv.presentation, inv.cap);
      json        out = json::array();
      for (auto const& f : families) {
        auto const& s = f.sides;
        auto        c = verify_claim(
            wp, inv.word(s[0]), inv.word(s[1]), inv.word(s[2]), inv.word(s[3]));
        bool ok = c.holds && !c.cancelled_holds;
        all     = all && ok;
        out.push_back({{"id", id},
                       {"family", f.name},
                       {"lhs", inv.tok(inv.word(s[0]))},
                       {"rhs", inv.tok(inv.word(s[1]))},
                       {"holds", c.holds},
                       {"cancelled_lhs", inv.tok(inv.word(s[2]))},
                       {"cancelled_rhs", inv.tok(inv.word(s[3]))},
                       {"cancelled_holds", c.cancelled_holds},
                       {"reproduced", ok}});
        inv.text << id << " [" << f.name << "]: " << s[0] << " = " << s[1]
                 << (c.holds ? " holds" : " fails") << "; " << s[2] << " = "
                 << s[3] << (c.cancelled_holds ? " holds" : " fails")
                 << (ok ? "  (reproduced)" : "  (NOT reproduced)") << "\n";
      }
      return out;
    }

    json run_mcm_claim(Invocation& inv, std::size_t bound, bool& all) {
      auto const ctx = build_gmn(2, 2);
      auto const rep = mcm_r({{ctx.t(1)}, {ctx.t(2)}}, ctx.presentation, bound, inv.cap);
      WordProblem            wp(ctx.presentation, inv.cap);
      std::vector<word_type> predicted;
      std::vector<word_type> layer{word_type{}};
      for (std::size_t len = 0; len + ctx.delta1.size() <= bound; ++len) {
        std::vector<word_type> next;
        for (auto const& w : layer) {
          if (is_reduced_modulo_full_run(ctx, Family::u, w)) {
            predicted.push_back(wp.canonical(concat(w, ctx.delta1)));
          }
          for (std::size_t j = 1; j <= ctx.n; ++j) {
            next.push_back(concat(w, word_type{ctx.u(j)}));
          }
        }
        layer = std::move(next);
      }
      std::sort(predicted.begin(), predicted.end(), shortlex_less);
      auto const divides
          = left_divides(wp, ctx.delta1, concat(word_type{ctx.u(1)}, ctx.delta1))
                .divides;
      bool ok = rep.minimal == predicted && !rep.lcm_up_to_bound && !divides;
      all     = all && ok;
      auto const& a = ctx.presentation.alphabet();
      inv.text << "prop53: mcm of {t1, t2} up to length " << bound << ": "
               << rep.minimal.size() << " minimal, predicted "
               << predicted.size() << ", lcm "
               << (rep.lcm_up_to_bound ? "present" : "absent")
               << ", delta1 divides u1.delta1 on the left: " << divides
               << (ok ? "  (reproduced)" : "  (NOT reproduced)") << "\n";
      return json::array({{{"id", "prop53"},
                           {"bound", bound},
                           {"minimal", tokens(rep.minimal, a)},
                           {"predicted", tokens(predicted, a)},
                           {"lcm_up_to_bound",
                            rep.lcm_up_to_bound ? tokens(*rep.lcm_up_to_bound, a)
                                                : json(nullptr)},
                           {"delta1_left_divides_u1_delta1", divides},
                           {"reproduced", ok}}});
    }

    json run_center_claim(Invocation& inv, std::size_t bound, bool& all) {
      auto const  ctx     = build_gmn(2, 2);
      auto const  central = center_scan(ctx.presentation, bound, inv.cap);
      WordProblem wp(ctx.presentation, inv.cap);
      std::vector<word_type> expected;
      for (std::size_t j = 0; j * ctx.delta.size() <= bound; ++j) {
        expected.push_back(wp.canonical(power(ctx.delta, j)));
      }
      std::sort(expected.begin(), expected.end(), shortlex_less);
      bool divisible = true;
      for (auto const& c : central) {
        if (!c.empty()) {
          divisible = divisible && left_divides(wp, ctx.delta, c).divides;
        }
      }
      bool ok = central == expected && divisible;
      all     = all && ok;
      auto const& a = ctx.presentation.alphabet();
      inv.text << "prop54: central classes up to length " << bound << ": "
               << central.size() << " (expected " << expected.size()
               << "), all non-empty ones divisible by delta: " << divisible
               << (ok ? "  (reproduced)" : "  (NOT reproduced)") << "\n";
      return json::array({{{"id", "prop54"},
                           {"bound", bound},
                           {"central", tokens(central, a)},
                           {"expected", tokens(expected, a)},
                           {"delta_divides_central", divisible},
                           {"reproduced", ok}}});
    }

    void cmd_claim(Invocation&                inv,
                   std::string const&         fixture_arg,
                   std::optional<std::string> id,
                   std::size_t                k,
                   std::optional<std::size_t> max_len) {
      std::vector<std::string> allowed;
      if (fixture_arg == "M6") {
        allowed = {"M6-k"};
      } else if (fixture_arg == "M6p") {
        allowed = {"M6p"};
      } else if (fixture_arg == "M6p_completed") {
        allowed = {"M6p-completed-k"};
      } else if (fixture_arg == "G22") {
        allowed = {"prop53", "prop54"};
      } else {
        throw UsageError("unknown fixture \"" + fixture_arg
                         + "\" (expected M6, M6p, M6p_completed or G22)");
      }
      if (id) {
        if (std::find(allowed.begin(), allowed.end(), *id) == allowed.end()) {
          throw UsageError("claim \"" + *id + "\" does not belong to fixture "
                           + fixture_arg);
        }
        allowed = {*id};
      }
      inv.load(fixture_arg);
      inv.report.bounds["k"] = k;
      bool all    = true;
      json claims = json::array();
      for (auto const& c : allowed) {
        json part;
        if (c == "M6-k") {
          part = run_equation_claim(inv, c, m6_families(k), all);
        } else if (c == "M6p") {
          part = run_equation_claim(inv, c, m6p_families(), all);
        } else if (c == "M6p-completed-k") {
          part = run_equation_claim(inv, c, m6p_completed_families(k), all);
        } else if (c == "prop53") {
          auto b = max_len.value_or(4);
          inv.report.bounds["max_len"] = b;
          part = run_mcm_claim(inv, b, all);
        } else {
          auto b = max_len.value_or(5);
          inv.report.bounds["max_len"] = b;
          part = run_center_claim(inv, b, all);
        }
        for (auto& x : part) {
          claims.push_back(std::move(x));
        }
      }
      inv.report.result = {{"claims", claims}, {"reproduced", all}};
      inv.text << (all ? "all claims reproduced" : "some claims NOT reproduced")
               << "\n";
    }

    ////////////////////////////////////////////////////////////////////////
    // gmn, group-equal, center-scan
    ////////////////////////////////////////////////////////////////////////

    void cmd_gmn(Invocation&                inv,
                 std::size_t                m,
                 std::size_t                n,
                 bool                       emit,
                 std::optional<std::string> lemma,
                 std::size_t                max_len) {
      auto ctx = build_gmn(m, n);
      inv.load("gmn:" + std::to_string(m) + "," + std::to_string(n));
      if (emit) {
        inv.report.result = to_text(ctx.presentation);
        inv.text << to_text(ctx.presentation);
        return;
      }
      if (lemma) {
        auto which = lemma_case_from_name(*lemma);
        if (!which) {
          throw UsageError("unknown lemma case \"" + *lemma
                           + "\" (expected i, ii, iii, iv, v or vi)");
        }
        inv.report.bounds["max_len"] = max_len;
        auto res  = check_lemma_case(ctx, *which, max_len, inv.cap);
        json viol = json::array();
        for (auto const& v : res.violations) {
          viol.push_back(
              {{"lhs", inv.tok(v.lhs)}, {"rhs", inv.tok(v.rhs)}, {"detail", v.detail}});
          inv.text << "violation: " << inv.fmt(v.lhs) << " = " << inv.fmt(v.rhs)
                   << ": " << v.detail << "\n";
        }
        inv.report.result = {{"case", *lemma},
                             {"instances", res.instances},
                             {"violations", viol}};
        inv.text << "case " << *lemma << ": " << res.instances
                 << " instance(s), " << res.violations.size()
                 << " violation(s) up to length " << max_len << "\n";
        return;
      }
      inv.report.result = {{"m", m},
                           {"n", n},
                           {"generators", ctx.presentation.alphabet().names()},
                           {"relation_pairs", ctx.presentation.relations().size()},
                           {"delta1", inv.tok(ctx.delta1)},
                           {"delta2", inv.tok(ctx.delta2)},
                           {"delta", inv.tok(ctx.delta)}};
      inv.text << "G_{" << m << "," << n << "}: "
               << ctx.presentation.alphabet().size() << " generators, "
               << ctx.presentation.relations().size() << " relation pairs\n"
               << "delta1: " << inv.fmt(ctx.delta1) << "\n"
               << "delta2: " << inv.fmt(ctx.delta2) << "\n"
               << "delta: " << inv.fmt(ctx.delta) << "\n";
    }

    void cmd_group_equal(Invocation&                inv,
                         std::string const&         file,
                         std::string const&         sw1,
                         std::string const&         sw2,
                         std::optional<std::string> delta_arg,
                         GroupEqualOptions const&   options) {
      inv.load(file);
      inv.report.bounds["empirical_bound"] = options.empirical_bound;
      auto const& p = inv.presentation;
      word_type   delta;
      if (delta_arg) {
        delta = inv.word(*delta_arg);
      } else {
        for (std::size_t x = 0; x < p.alphabet().size(); ++x) {
          delta.push_back(static_cast<letter_type>(x));
        }
      }
      auto const  w1 = parse_signed_word(sw1, p.alphabet());
      auto const  w2 = parse_signed_word(sw2, p.alphabet());
      WordProblem wp(p, inv.cap);
      auto        verdict = verify_fundamental(wp, delta);
      if (!verdict) {
        throw PreconditionViolated(inv.fmt(delta)
                                   + " is not a fundamental element: "
                                   + verdict.reason);
      }
      auto res = group_equal(wp, *verdict.certificate, w1, w2, options);
      inv.report.result = {{"equal", res.equal},
                           {"basis", basis_name(res.basis)},
                           {"delta", inv.tok(delta)},
                           {"order", verdict.certificate->order},
                           {"k", res.k},
                           {"lhs", inv.tok(res.lhs)},
                           {"rhs", inv.tok(res.rhs)}};
      inv.text << (res.equal ? "true" : "false") << "\n"
               << "injectivity: " << basis_name(res.basis) << "\n"
               << "lambda exponent: " << res.k << "\n";
    }

    void cmd_center_scan(Invocation& inv, std::string const& file, std::size_t max_len) {
      inv.load(file);
      inv.report.bounds["max_len"] = max_len;
      auto central = center_scan(inv.presentation, max_len, inv.cap);
      inv.report.result = {{"central", inv.tok(central)}};
      for (auto const& c : central) {
        inv.text << inv.fmt(c) << "\n";
      }
      inv.text << central.size() << " central class(es) up to length " << max_len
               << "\n";
    }

    ////////////////////////////////////////////////////////////////////////
    // Dispatch
    ////////////////////////////////////////////////////////////////////////

    int run_impl(std::vector<std::string> const& args,
                 std::string const&              echo,
                 std::ostream&                   out,
                 std::ostream&                   err);

    int finish(Invocation&   inv,
               bool          as_json,
               int           code,
               std::ostream& out,
               std::ostream& err) {
      if (as_json) {
        out << inv.report.to_json().dump(2) << "\n";
      } else if (code == exit_ok) {
        out << inv.text.str();
      } else {
        err << "posmon: " << inv.report.error.value_or("error") << "\n";
      }
      return code;
    }

    int run_impl(std::vector<std::string> const& all_args,
                 std::string const&              echo,
                 std::ostream&                   out,
                 std::ostream&                   err) {
      // Everything after gmn's --run is a separate command line.
      auto const               run_at = std::find(all_args.begin(), all_args.end(), "--run");
      std::vector<std::string> args(all_args.begin(), run_at);
      std::vector<std::string> inner;
      bool const               has_run = run_at != all_args.end();
      if (has_run) {
        inner.assign(run_at + 1, all_args.end());
      }

      CLI::App app{"Computations with positively presented monoids", "posmon"};
      app.require_subcommand(1);
      bool        as_json = false;
      std::size_t cap     = default_cap;
      app.add_flag("--json", as_json, "Structured JSON report on stdout");
      app.add_option("--cap", cap, "Cap on class sizes and enumerated words")
          ->check(CLI::PositiveNumber);

      std::string              file, w1, w2, side = "left", kernel = "parallel";
      std::vector<std::string> words;
      std::size_t              max_len = 0, k = 1, m = 0, n = 0;
      std::optional<std::string> id, lemma, delta;
      std::optional<std::size_t> opt_len;
      bool                       emit = false;
      GroupEqualOptions          ge;

      auto* parse = app.add_subcommand("parse", "Parse and classify a presentation");
      parse->add_option("file", file)->required();

      auto* cls = app.add_subcommand("class", "Equivalence class of a word");
      cls->add_option("file", file)->required();
      cls->add_option("word", w1)->required();

      auto* equal = app.add_subcommand("equal", "Decide u = v in the monoid");
      equal->add_option("file", file)->required();
      equal->add_option("u", w1)->required();
      equal->add_option("v", w2)->required();

      auto* divides = app.add_subcommand("divides", "Does u divide v");
      divides->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));
      divides->add_option("file", file)->required();
      divides->add_option("u", w1)->required();
      divides->add_option("v", w2)->required();

      auto* mcm = app.add_subcommand("mcm", "Minimal common right multiples");
      mcm->add_option("file", file)->required();
      mcm->add_option("--max-len", max_len)->required();
      mcm->add_option("words", words)->required();

      auto* fund = app.add_subcommand("fundamental", "Verify a fundamental element");
      fund->add_option("file", file)->required();
      fund->add_option("word", w1)->required();

      auto* gars = app.add_subcommand("garside", "Verify a Garside element");
      gars->add_option("file", file)->required();
      gars->add_option("word", w1)->required();

      auto* cancel = app.add_subcommand("cancel-search", "Search cancellation failures");
      cancel->add_option("file", file)->required();
      cancel->add_option("--max-len", max_len)->required();
      cancel->add_option("--kernel", kernel)
          ->check(CLI::IsMember({"parallel", "serial", "reference"}));

      auto* claim = app.add_subcommand("claim", "Reproduce a named claim");
      claim->add_option("fixture", file)->required();
      claim->add_option("--id", id);
      claim->add_option("--k", k)->check(CLI::PositiveNumber);
      claim->add_option("--max-len", opt_len);

      auto* gmn = app.add_subcommand("gmn", "The G_{m,n} family");
      gmn->add_option("--m", m)->required()->check(CLI::PositiveNumber);
      gmn->add_option("--n", n)->required()->check(CLI::PositiveNumber);
      auto* emit_flag = gmn->add_flag("--emit", emit, "Print the presentation file");
      gmn->add_option("--lemma", lemma, "Check a lemma case (i .. vi)")
          ->excludes(emit_flag);
      gmn->add_option("--max-len", max_len, "Bound for --lemma")
          ->default_val(4);

      auto* geq = app.add_subcommand("group-equal", "Decide equality of group words");
      geq->add_option("file", file)->required();
      geq->add_option("w1", w1)->required();
      geq->add_option("w2", w2)->required();
      geq->add_flag("--assume-injective", ge.assume_injective);
      geq->add_option("--delta", delta, "Fundamental element (default: all generators)");
      geq->add_option("--empirical-bound", ge.empirical_bound)->default_val(5);

      auto* center = app.add_subcommand("center-scan", "Central classes up to a length");
      center->add_option("file", file)->required();
      center->add_option("--max-len", max_len)->required();

      std::vector<char const*> argv{"posmon"};
      for (auto const& a : args) {
        argv.push_back(a.c_str());
      }
      try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (has_run && !app.got_subcommand(gmn)) {
          throw CLI::ValidationError("--run", "only valid after gmn");
        }
        if (has_run && (emit || lemma)) {
          throw CLI::ValidationError("--run", "excludes --emit and --lemma");
        }
        if (has_run && inner.empty()) {
          throw CLI::ValidationError("--run", "needs a subcommand");
        }
      } catch (CLI::ParseError const& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
      }

      if (has_run) {
        std::vector<std::string> sub;
        if (as_json) {
          sub.push_back("--json");
        }
        sub.push_back("--cap");
        sub.push_back(std::to_string(cap));
        sub.push_back(inner.front());
        sub.push_back("gmn:" + std::to_string(m) + "," + std::to_string(n));
        sub.insert(sub.end(), inner.begin() + 1, inner.end());
        return run_impl(sub, echo, out, err);
      }

      Invocation inv;
      inv.cap            = cap;
      inv.report.command = echo;
      inv.text << std::boolalpha;
      auto const start   = std::chrono::steady_clock::now();
      int        code    = exit_ok;
      try {
        if (app.got_subcommand(parse)) {
          cmd_parse(inv, file);
        } else if (app.got_subcommand(cls)) {
          cmd_class(inv, file, w1);
        } else if (app.got_subcommand(equal)) {
          cmd_equal(inv, file, w1, w2);
        } else if (app.got_subcommand(divides)) {
          cmd_divides(inv, side, file, w1, w2);
        } else if (app.got_subcommand(mcm)) {
          cmd_mcm(inv, file, max_len, words);
        } else if (app.got_subcommand(fund)) {
          cmd_fundamental(inv, file, w1);
        } else if (app.got_subcommand(gars)) {
          cmd_garside(inv, file, w1);
        } else if (app.got_subcommand(cancel)) {
          cmd_cancel_search(inv, file, max_len, kernel);
        } else if (app.got_subcommand(claim)) {
          cmd_claim(inv, file, id, k, opt_len);
        } else if (app.got_subcommand(gmn)) {
          cmd_gmn(inv, m, n, emit, lemma, max_len);
        } else if (app.got_subcommand(geq)) {
          cmd_group_equal(inv, file, w1, w2, delta, ge);
        } else if (app.got_subcommand(center)) {
          cmd_center_scan(inv, file, max_len);
        }
      } catch (CapExceeded const& e) {
        inv.report.truncated = true;
        inv.report.error     = e.what();
        code                 = exit_cap;
      } catch (PreconditionViolated const& e) {
        inv.report.error = e.what();
        code             = exit_precondition;
      } catch (NonHomogeneous const& e) {
        inv.report.error = e.what();
        code             = exit_precondition;
      } catch (Error const& e) {
        inv.report.error = e.what();
        code             = exit_usage;
      }
      inv.report.elapsed_ms = std::chrono::duration<double, std::milli>(
                                  std::chrono::steady_clock::now() - start)
                                  .count();
      return finish(inv, as_json, code, out, err);
    }

  }  // namespace

  Presentation load_presentation(std::string const& source) {
    if (auto mn = parse_gmn_source(source)) {
      return build_gmn(mn->first, mn->second).presentation;
    }
    namespace fs = std::filesystem;
    std::error_code ec;
    if (fs::is_regular_file(source, ec)) {
      std::ifstream in(source);
      if (!in) {
        throw UsageError("cannot read \"" + source + "\"");
      }
      std::stringstream buf;
      buf << in.rdbuf();
      return parse_presentation(buf.str());
    }
    auto const name = fs::path(source).filename().string();
    if (name == "G22") {
      return build_gmn(2, 2).presentation;
    }
    if (auto f = fixture_from_name(name)) {
      return fixture(*f);
    }
    throw UsageError("no presentation file or built-in fixture named \"" + source
                     + "\"");
  }

  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err) {
    return run_impl(args, join(args), out, err);
  }

}  // namespace posmon::cli
