#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "srw/constructions.hpp"
#include "srw/error.hpp"
#include "srw/term.hpp"

using namespace srw;

namespace {

  Term v(char const* name) {
    return Term::variable(name);
  }

  // Fixed seed: the generated corpus is the same on every run.
  Term random_term(std::mt19937& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth > 0 ? 2 : 0);
    static char const* const           names[] = {"x", "y", "z", "x1", "y_2", "Ab"};
    int const                          kind    = pick(rng);
    if (kind == 0) {
      return Term::variable(names[std::uniform_int_distribution<int>(0, 5)(rng)]);
    }
    std::vector<Term> ops;
    int const         arity = std::uniform_int_distribution<int>(2, 3)(rng);
    for (int k = 0; k < arity; ++k) ops.push_back(random_term(rng, depth - 1));
    return kind == 1 ? Term::sum(ops) : Term::product(ops);
  }

  bool flattened(Term const& t) {
    for (auto const& c : t.children()) {
      if (c.kind() == t.kind() || !flattened(c)) return false;
    }
    return true;
  }

}  // namespace

TEST_CASE("grammar examples") {
  CHECK(parse_term("x*y + y*x") == Term::sum({Term::product({v("x"), v("y")}), Term::product({v("y"), v("x")})}));
  CHECK(parse_term("(x+y)*z") == Term::product({Term::sum({v("x"), v("y")}), v("z")}));
  CHECK(parse_term("x1 x2 x1 x3 x2 x3")
        == Term::product({v("x1"), v("x2"), v("x1"), v("x3"), v("x2"), v("x3")}));
  CHECK(parse_term("xyx") == v("xyx"));
  CHECK(parse_term("  x   *(y) ") == Term::product({v("x"), v("y")}));
}

TEST_CASE("nested operations are flattened") {
  CHECK(parse_term("x + (y + z)") == Term::sum({v("x"), v("y"), v("z")}));
  CHECK(parse_term("(x y) (z x)") == Term::product({v("x"), v("y"), v("z"), v("x")}));
  CHECK(Term::sum({v("x")}) == v("x"));
  CHECK_THROWS_AS(Term::product({}), PreconditionError);
}

TEST_CASE("syntax errors carry a position") {
  for (char const* bad : {"(x+y", "x+", "x + * y", "x $ y", ")", "", "x)"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_term(bad), SyntaxError);
  }
  try {
    parse_term("x + $");
    FAIL("no error");
  } catch (SyntaxError const& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("statements") {
  auto const id = parse_statement("x*y = y*x");
  CHECK(id.kind == Statement::Kind::identity);
  CHECK(id.conclusion.lhs == Term::product({v("x"), v("y")}));
  CHECK(parse_statement("x == y").kind == Statement::Kind::identity);

  auto const ord = parse_statement("u <= w");
  CHECK(ord.kind == Statement::Kind::order);
  CHECK(ord.conclusion.lhs == Term::sum({v("u"), v("w")}));
  CHECK(ord.conclusion.rhs == v("w"));
  REQUIRE(ord.order_bounds);
  CHECK(ord.order_bounds->lhs == v("u"));

  auto const q = parse_statement("x*y = x*z & y*x = z*x => y = z");
  CHECK(q.kind == Statement::Kind::quasi_identity);
  CHECK(q.premises.size() == 2);
  CHECK(q.conclusion.rhs == v("z"));

  CHECK_THROWS_AS(parse_statement("x*y = x*z & x*y != 0 => y = z"), SyntaxError);
  CHECK_THROWS_AS(parse_statement("x = y => y = x => x = x"), SyntaxError);
  CHECK_THROWS_AS(parse_statement("x + y"), SyntaxError);
}

TEST_CASE("variables are sorted and distinct") {
  CHECK(variables(parse_term("z x y x")) == std::vector<std::string>{"x", "y", "z"});
  CHECK(variables(parse_statement("a = b & c = a => d = a")) == std::vector<std::string>{"a", "b", "c", "d"});
}

TEST_CASE("format/parse round trip on a generated corpus") {
  std::mt19937 rng(20241017);
  for (int k = 0; k < 500; ++k) {
    Term const t = random_term(rng, 4);
    CAPTURE(format_term(t));
    CHECK(flattened(t));
    Term const back = parse_term(format_term(t));
    CHECK(back == t);
    CHECK(parse_term(format_term(back)) == back);
  }
  for (char const* s : {"x*y = y*x", "x y + x <= x y", "x1 x2 = x2 x1 & x1 = x1 x1 => x1 + x2 = x2"}) {
    auto const st = parse_statement(s);
    auto const re = parse_statement(format_statement(st));
    CHECK(re.kind == st.kind);
    CHECK(re.conclusion == st.conclusion);
    CHECK(re.premises == st.premises);
  }
}

TEST_CASE("evaluation in S_c(ab)") {
  auto const       s = word_semiring(parse_word("ab", true)).semiring;
  element const    a = s.element_named("a"), b = s.element_named("b");
  Assignment const asg{{"x", a}, {"y", b}};
  CHECK(s.label(eval_term(parse_term("x*y"), s, asg)) == "ab");
  CHECK(eval_term(parse_term("x*y + x"), s, asg) == *s.zero());
  CHECK(eval_term(parse_term("x + x"), s, asg) == a);
  CHECK_THROWS_AS(eval_term(parse_term("x*w"), s, asg), UnboundVariableError);
}

TEST_CASE("flattened evaluation equals the hand fold, and order statements normalise (exhaustive, order <= 4)") {
  std::vector<FiniteSemiring> corpus{word_semiring(parse_word("a")).semiring,
                                     word_semiring(parse_word("ab", true)).semiring,
                                     word_semiring({parse_word("1")}, false, true).semiring,
                                     word_semiring(parse_word("aa")).semiring};
  Term const flat_sum  = parse_term("x + (y + z)");
  Term const flat_prod = parse_term("x (y z)");
  Statement const ord  = parse_statement("x y <= z");
  for (auto const& s : corpus) {
    for (element x = 0; x < s.size(); ++x)
      for (element y = 0; y < s.size(); ++y)
        for (element z = 0; z < s.size(); ++z) {
          Assignment const asg{{"x", x}, {"y", y}, {"z", z}};
          CHECK(eval_term(flat_sum, s, asg) == s.add(s.add(x, y), z));
          CHECK(eval_term(flat_prod, s, asg) == s.mul(s.mul(x, y), z));
          CHECK(holds_under(ord, s, asg) == (s.add(s.mul(x, y), z) == z));
        }
  }
}
