#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <random>

#include "oracle.hpp"
#include "srw/constructions.hpp"
#include "srw/error.hpp"
#include "srw/satisfaction.hpp"

using namespace srw;

namespace {

  FiniteSemiring word_s(char const* w, bool commutative = false, bool monoid = false) {
    return word_semiring(parse_word(w, commutative), monoid).semiring;
  }

  FiniteSemiring ell_s(int n) {
    return word_semiring(generate_pattern("ell", {n})).semiring;
  }

  FiniteSemiring trivial() {
    return FiniteSemiring(Table(1), Table(1));
  }

  // ({0,1}, max, min): not flat.
  FiniteSemiring boolean_lattice() {
    return FiniteSemiring(Table::from_rows({{0, 1}, {1, 1}}), Table::from_rows({{0, 0}, {0, 1}}));
  }

  std::vector<FiniteSemiring> corpus() {
    return {trivial(),
            boolean_lattice(),
            word_s("a"),
            word_s("aa"),
            word_s("ab"),
            word_s("ab", true),
            word_s("abc", true),
            word_s("1", false, true),
            word_s("ab", false, true),
            flat_extension(group_cyclic(2)),
            flat_extension(group_cyclic(3))};
  }

  std::vector<Statement> statements() {
    std::vector<Statement> out;
    for (char const* s :
         {"x*y = y*x", "x*x*y = x*x", "x1*x2*x3 = y1*y2*y3", "x1*x2 = y1*y2", "x*x = x", "x y <= y x",
          "x y x = x y", "x + y = y x + x y", "x*y = x*z => y = z", "x + y = x => x*y = y*x",
          "x y = y x & x x = x => x y = x", "x y z + y z x = x y z + y z x + x x x", "x <= x y"}) {
      out.push_back(parse_statement(s));
    }
    return out;
  }

  std::size_t power(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= b;
    return r;
  }

  Statement order_statement(Word const& v, Word const& w) {
    return parse_statement(format_term(word_term(v)) + " <= " + format_term(word_term(w)));
  }

  // Shortlex-least v != w over the given letters with |v| <= max_len and
  // S |= v <= w, by listing every word and checking it with the plain
  // enumerator.
  std::optional<Word> naive_isoterm_witness(FiniteSemiring const& s, Word const& w, std::vector<Symbol> const& alpha,
                                            std::size_t max_len) {
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::vector<std::size_t> idx(len, 0);
      for (;;) {
        std::vector<Symbol> letters;
        for (auto i : idx) letters.push_back(alpha[i]);
        Word const v(letters);
        if (!(v == w) && !oracle::counterexample(s, order_statement(v, w))) return v;
        std::size_t k = len;
        while (k > 0 && idx[k - 1] + 1 == alpha.size()) idx[--k] = 0;
        if (k == 0) break;
        ++idx[k - 1];
      }
    }
    return std::nullopt;
  }

  std::vector<std::vector<Symbol>> words_up_to(std::vector<Symbol> const& alpha, std::size_t max_len) {
    std::vector<std::vector<Symbol>> out{{}};
    std::vector<std::vector<Symbol>> layer{{}};
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::vector<std::vector<Symbol>> next;
      for (auto const& u : layer)
        for (auto const& a : alpha) {
          auto e = u;
          e.push_back(a);
          next.push_back(e);
        }
      out.insert(out.end(), next.begin(), next.end());
      layer = std::move(next);
    }
    out.erase(out.begin());
    return out;
  }

  // Every substitution of nonempty words of length <= |w| for the letters of
  // v, and a factor test for each image.
  bool naive_v_free(Word const& w, Word const& v) {
    auto const                       vs    = v.alphabet();
    auto const                       pool  = words_up_to(w.alphabet(), w.size());
    std::vector<std::size_t>         pick(vs.size(), 0);
    for (;;) {
      std::vector<Symbol> image;
      for (auto const& letter : v.letters()) {
        auto const at = std::find(vs.begin(), vs.end(), letter) - vs.begin();
        auto const& u = pool[pick[at]];
        image.insert(image.end(), u.begin(), u.end());
      }
      if (image.size() <= w.size()
          && std::search(w.letters().begin(), w.letters().end(), image.begin(), image.end()) != w.letters().end()) {
        return false;
      }
      std::size_t k = vs.size();
      while (k > 0 && pick[k - 1] + 1 == pool.size()) pick[--k] = 0;
      if (k == 0) return true;
      ++pick[k - 1];
    }
  }

}  // namespace

TEST_CASE("verdicts and witnesses agree with plain enumeration") {
  for (auto const& s : corpus()) {
    for (auto const& st : statements()) {
      if (power(s.size(), variables(st).size()) > 300'000) continue;
      CAPTURE(s.size());
      CAPTURE(format_statement(st));
      Verdict const v     = satisfies(s, st);
      auto const    naive = oracle::counterexample(s, st);
      CHECK(v.holds == !naive.has_value());
      if (naive) {
        REQUIRE(v.witness);
        CHECK(*v.witness == *naive);
        CHECK_FALSE(holds_under(st, s, *v.witness));
      }
    }
  }
}

TEST_CASE("verdict, witness and node count do not depend on the number of jobs") {
  for (auto const& s : corpus()) {
    for (auto const& st : statements()) {
      EngineOptions one;
      Verdict const base = satisfies(s, st, one);
      for (unsigned jobs : {2u, 8u}) {
        EngineOptions o;
        o.jobs          = jobs;
        Verdict const v = satisfies(s, st, o);
        CHECK(v.holds == base.holds);
        CHECK(v.witness == base.witness);
        CHECK(v.nodes == base.nodes);
      }
    }
  }
}

TEST_CASE("identity examples") {
  CHECK(satisfies(word_s("ab", true), parse_statement("x*x*y = x*x")).holds);
  CHECK(satisfies(word_s("a", true), parse_statement("x1*x2 = y1*y2")).holds);

  auto const scabc = word_s("abc", true);
  Verdict const i3 = satisfies(scabc, parse_statement("x1*x2*x3 = y1*y2*y3"));
  CHECK_FALSE(i3.holds);
  REQUIRE(i3.witness);
  element const a = scabc.element_named("a"), b = scabc.element_named("b"), c = scabc.element_named("c");
  // x1,x2,x3 = a,b,c with every y = a falsifies (i3), but it is not the
  // least falsifier: x1 = 0 already sends the left side to 0.
  CHECK_FALSE(holds_under(parse_statement("x1*x2*x3 = y1*y2*y3"), scabc,
                          Assignment{{"x1", a}, {"x2", b}, {"x3", c}, {"y1", a}, {"y2", a}, {"y3", a}}));
  CHECK(*i3.witness == *oracle::counterexample(scabc, parse_statement("x1*x2*x3 = y1*y2*y3")));
  CHECK(i3.witness->at("x1") == *scabc.zero());

  CHECK(satisfies(scabc, parse_statement("x1 x2 x3 x4 = y1 y2 y3 y4")).holds);

  auto const fz2 = flat_extension(group_cyclic(2));
  Verdict const q = satisfies(fz2, parse_statement("x*y = x*z => y = z"));
  CHECK_FALSE(q.holds);
  REQUIRE(q.witness);
  auto const& w = *q.witness;
  CHECK(fz2.mul(w.at("x"), w.at("y")) == *fz2.zero());
  CHECK(fz2.mul(w.at("x"), w.at("z")) == *fz2.zero());
  CHECK(w.at("y") != w.at("z"));
}

TEST_CASE("the xyz + yzx law") {
  Statement const law = parse_statement("x y z + y z x = x y z + y z x + x x x");
  for (int n = 1; n <= 3; ++n) {
    CAPTURE(n);
    CHECK(satisfies(word_semiring(generate_pattern("p", {n})).semiring, law).holds);
  }
  auto const    scabc = word_s("abc", true);
  Verdict const v     = satisfies(scabc, law);
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness);
  CHECK(*v.witness
        == Assignment{{"x", scabc.element_named("a")}, {"y", scabc.element_named("b")}, {"z", scabc.element_named("c")}});
}

TEST_CASE("satisfies_all stops at the first failure") {
  auto const    s = word_s("ab", true);
  Verdict const v = satisfies_all(
      s, {parse_statement("x y = y x"), parse_statement("x x = x"), parse_statement("x1 x2 x3 = y1 y2 y3")});
  CHECK_FALSE(v.holds);
  CHECK(v.statements.size() == 2);
  CHECK(v.failed_statement == format_statement(parse_statement("x x = x")));
  CHECK(satisfies_all(s, {}).holds);
}

TEST_CASE("budget") {
  EngineOptions o;
  o.budget = 50;
  try {
    satisfies(word_s("abc", true), parse_statement("x1 x2 x3 x4 = y1 y2 y3 y4"), o);
    FAIL("no budget error");
  } catch (BudgetExceeded const& e) {
    CHECK(e.required() > 50);
  }
  ::setenv("SRW_BUDGET", "1234", 1);
  CHECK(EngineOptions::from_environment().budget == 1234);
  ::setenv("SRW_BUDGET", "lots", 1);
  CHECK_THROWS_AS(EngineOptions::from_environment(), PreconditionError);
  ::unsetenv("SRW_BUDGET");
  CHECK(EngineOptions::from_environment().budget == EngineOptions{}.budget);
}

TEST_CASE("in a flat semiring x <= t holds iff t is 0 or x equals t") {
  Statement const st = parse_statement("x <= y z");
  for (auto const& s : corpus()) {
    if (!s.is_flat()) continue;
    for (element x = 0; x < s.size(); ++x)
      for (element y = 0; y < s.size(); ++y)
        for (element z = 0; z < s.size(); ++z) {
          element const t = s.mul(y, z);
          CHECK(holds_under(st, s, Assignment{{"x", x}, {"y", y}, {"z", z}}) == (t == *s.zero() || x == t));
        }
  }
}

TEST_CASE("v-free laws on S(ell_n)") {
  for (int n = 3; n <= 6; ++n) {
    auto const s = ell_s(n);
    for (int m = 3; m <= 6; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      Verdict const v = check_free_laws(s, word_term(generate_pattern("ell", {m})));
      CHECK(v.holds == (n != m));
      if (!v.holds) {
        REQUIRE(v.witness);
        CHECK_FALSE(v.failed_statement.empty());
        CHECK_FALSE(holds_under(parse_statement(v.failed_statement), s, *v.witness));
      }
    }
  }
  CHECK(check_free_laws(word_s("ab", true), parse_term("x x")).holds);
  CHECK_THROWS_AS(check_free_laws(word_s("ab"), parse_term("x + y")), PreconditionError);
}

TEST_CASE("anticommutativity") {
  CHECK(check_anticommutative(ell_s(3)).holds);
  CHECK_FALSE(check_anticommutative(word_s("ab", true)).holds);
  CHECK(check_anticommutative(trivial()).holds);
}

TEST_CASE("v-free words") {
  auto const e3 = generate_pattern("ell", {3});
  CHECK(is_v_free_word(generate_pattern("ell", {4}), e3).is_free);
  auto const self = is_v_free_word(e3, e3);
  CHECK_FALSE(self.is_free);
  CHECK(self.position == 0);
  for (auto const& [letter, image] : self.substitution) CHECK(image == Word({letter}));
  CHECK(is_v_free_word(parse_word("abacdc"), parse_word("xx")).is_free);
  CHECK_FALSE(is_v_free_word(parse_word("abab"), parse_word("xx")).is_free);
}

TEST_CASE("v-free words agree with a substitution enumerator") {
  std::mt19937 rng(7);
  std::vector<Word> const patterns{parse_word("xx"), parse_word("xy"), parse_word("xyx"), parse_word("xxy"),
                                   parse_word("xyyx")};
  for (int k = 0; k < 120; ++k) {
    std::size_t const len = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    std::string       text;
    for (std::size_t i = 0; i < len; ++i) text += std::uniform_int_distribution<int>(0, 1)(rng) ? 'a' : 'b';
    Word const w = parse_word(text);
    for (auto const& v : patterns) {
      CAPTURE(text);
      CAPTURE(format_word(v));
      auto const got = is_v_free_word(w, v);
      CHECK(got.is_free == naive_v_free(w, v));
      if (!got.is_free) {
        std::vector<Symbol> image;
        for (auto const& letter : v.letters()) {
          auto const& u = got.substitution.at(letter).letters();
          REQUIRE_FALSE(u.empty());
          image.insert(image.end(), u.begin(), u.end());
        }
        REQUIRE(got.position + image.size() <= w.size());
        CHECK(std::equal(image.begin(), image.end(), w.letters().begin() + static_cast<long>(got.position)));
      }
    }
  }
}

TEST_CASE("isoterm examples") {
  auto const xy = is_isoterm_bounded(word_s("ab", true), parse_word("xy"), 2);
  CHECK_FALSE(xy.isoterm_up_to_bound);
  REQUIRE(xy.witness);
  CHECK(format_word(*xy.witness) == "yx");

  auto const xx = is_isoterm_bounded(word_s("a", true), parse_word("xx"), 2);
  CHECK_FALSE(xx.isoterm_up_to_bound);
  REQUIRE(xx.witness);
  CHECK(format_word(*xx.witness) == "x");
}

TEST_CASE("isoterm search agrees with a per-word check") {
  struct Case {
    FiniteSemiring s;
    char const*    w;
    unsigned       extra;
  };
  std::vector<Case> const cases{{word_s("ab", true), "xy", 2}, {word_s("a", true), "xx", 2},
                                {word_s("ab"), "xy", 2},       {word_s("aba"), "xyx", 2},
                                {word_s("ab", false, true), "xy", 1}, {word_s("abc", true), "xyz", 1},
                                {boolean_lattice(), "xy", 2},  {boolean_lattice(), "xyx", 1},
                                {flat_extension(group_cyclic(2)), "xy", 2}, {trivial(), "x", 1},
                                {word_s("a"), "xx", 1}};
  for (auto const& c : cases) {
    CAPTURE(c.w);
    CAPTURE(c.s.size());
    Word const  w = parse_word(c.w);
    auto const  v = is_isoterm_bounded(c.s, w, c.extra);
    auto const  a = w.alphabet();
    REQUIRE(v.alphabet.size() == a.size() + 1);
    CHECK(std::equal(a.begin(), a.end(), v.alphabet.begin()));
    CHECK(v.max_length == w.size() + c.extra);
    CHECK(v.method.rfind(c.s.is_flat() ? "flat" : "exhaustive", 0) == 0);
    auto const naive = naive_isoterm_witness(c.s, w, v.alphabet, w.size() + c.extra);
    CHECK(v.isoterm_up_to_bound == !naive.has_value());
    CHECK(v.witness == naive);
  }
}
