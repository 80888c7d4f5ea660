#pragma once

// Semiring terms over the signature {+, *} and the statements built from
// them.
//
// Grammar:
//   sum  := prod ('+' prod)*
//   prod := atom (atom | '*' atom)*
//   atom := identifier | '(' sum ')'
//
// An identifier is [A-Za-z][A-Za-z0-9_]*, so "xyx" is a single variable;
// products of variables are written "x y x" or "x*y*x".
//
// Statements:
//   L = R  or  L == R                 identity
//   L <= R                            order, i.e. the identity L + R = R
//   P1 = Q1 & ... & Pk = Qk => L = R  quasi-identity

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "srw/algebra.hpp"

namespace srw {

  class Term {
   public:
    enum class Kind { variable, sum, product };

    // An empty placeholder; not a valid term until assigned.
    Term() = default;

    static Term variable(std::string name);
    // Both flatten nested nodes of the same kind; a single operand is returned
    // unchanged. Throws PreconditionError on an empty operand list.
    static Term sum(std::vector<Term> operands);
    static Term product(std::vector<Term> operands);

    Kind kind() const noexcept {
      return kind_;
    }
    bool is_variable() const noexcept {
      return kind_ == Kind::variable;
    }
    std::string const& name() const noexcept {
      return name_;
    }
    std::vector<Term> const& children() const noexcept {
      return children_;
    }

    // Whether the term is a variable or a product of variables.
    bool is_word() const;

    bool operator==(Term const&) const = default;

   private:
    Kind              kind_ = Kind::variable;
    std::string       name_;
    std::vector<Term> children_;
  };

  struct Equation {
    Term lhs;
    Term rhs;
    bool operator==(Equation const&) const = default;
  };

  struct Statement {
    enum class Kind { identity, order, quasi_identity };

    Kind                  kind = Kind::identity;
    std::vector<Equation> premises;
    // For an order statement lo <= hi this is already lo + hi = hi.
    Equation conclusion;
    // The original (lo, hi) pair of an order statement.
    std::optional<Equation> order_bounds;

    static Statement identity(Term lhs, Term rhs);
    static Statement order(Term lo, Term hi);
    static Statement quasi_identity(std::vector<Equation> premises,
                                    Equation              conclusion);
  };

  Term      parse_term(std::string_view text);
  Statement parse_statement(std::string_view text);

  std::string format_term(Term const& t);
  std::string format_equation(Equation const& e);
  std::string format_statement(Statement const& s);

  // Distinct variable names, sorted.
  std::vector<std::string> variables(Term const& t);
  std::vector<std::string> variables(Statement const& s);

  using Assignment = std::map<std::string, element>;

  // Sums and products are folded left to right. Throws UnboundVariableError.
  element eval_term(Term const& t, FiniteSemiring const& s, Assignment const& asg);

  // Whether the statement holds under one assignment.
  bool holds_under(Statement const& st, FiniteSemiring const& s, Assignment const& asg);

  std::string format_assignment(Assignment const& asg, FiniteSemiring const& s);

}  // namespace srw
